"""Evaluators for the explicit maps: the inner polynomial P, the slit-plane
Riemann map psi12, the Moebius ring map psi11, the model map Q and its
derivatives (via order-3 jets), the ellipse map, and the closed-form bound
families used by the estimates."""

from .backend import kern
from .interval import ComplexBox, point, box, DomainViolation
from .constants import ConstantsTable

CB = kern.CB
RI = kern.RI


# -- direct map evaluation ---------------------------------------------------

def eval_P(table: ConstantsTable, z: CB) -> CB:
    """Factored form (tight near the ring of roots)."""
    return table.qk.p(z)


def eval_P_expanded(table: ConstantsTable, z: CB) -> CB:
    # Horner over z^5 + c z^4 + (38/9) z^3 + c z^2 + z, c = 4 sqrt(5)/3
    c = table.sqrt5.mul_scalar(4.0 / 3.0)
    acc = z.add_ri(c)
    acc = acc.mul(z).add_scalar(38.0 / 9.0)
    acc = acc.mul(z).add_ri(c)
    acc = acc.mul(z).add_scalar(1.0)
    return acc.mul(z)


def eval_P_derivs(table: ConstantsTable, z: CB, order: int) -> CB:
    s5 = table.sqrt5
    if order == 1:
        acc = z.scale(point(5.0)).add_ri(s5.mul_scalar(16.0 / 3.0))
        acc = acc.mul(z).add_scalar(38.0 / 3.0)
        acc = acc.mul(z).add_ri(s5.mul_scalar(8.0 / 3.0))
        return acc.mul(z).add_scalar(1.0)
    if order == 2:
        acc = z.scale(point(20.0)).add_ri(s5.mul_scalar(16.0))
        acc = acc.mul(z).add_scalar(76.0 / 3.0)
        return acc.mul(z).add_ri(s5.mul_scalar(8.0 / 3.0))
    if order == 3:
        return z.scale(point(60.0)).add_ri(s5.mul_scalar(32.0)).mul(z).add_scalar(76.0 / 3.0)
    raise ValueError(f"order {order}")


def eval_psi11(table: ConstantsTable, z: CB) -> CB:
    return table.qk.psi11(z)


def eval_psi12(table: ConstantsTable, z: CB, side: int = 0) -> CB:
    return table.qk.psi12(z, side)


def eval_psi1(table: ConstantsTable, z: CB) -> CB:
    return table.qk.psi12(table.qk.psi11(z))


def eval_psi0_inv(table: ConstantsTable, z: CB) -> CB:
    """psi0^{-1}(w) = -tau / w (psi0 is the involution -tau/z)."""
    return box(table.tau).div(z).neg()


def eval_Q(table: ConstantsTable, z: CB, hull_on_cut: bool = True) -> CB:
    return table.qk.q(z, hull_on_cut)


def eval_Q_hat(table: ConstantsTable, z: CB) -> CB:
    """Conjugated map with the parabolic point at 0: -tau / Q(-tau/z)."""
    w = eval_psi0_inv(table, z)
    return eval_psi0_inv(table, eval_Q(table, w))


def psi12_d2(table: ConstantsTable, z: CB, side: int = 0) -> CB:
    s = table.sigma
    zns = z.cpow_ri(s.neg(), side)
    t = z.sqrc().recip().scale(s.add_scalar(1.0)).add_ri(s.neg().add_scalar(1.0))
    return table.mu.mul(zns).mul(t)


def psi12_d3(table: ConstantsTable, z: CB, side: int = 0) -> CB:
    s = table.sigma
    zns = z.cpow_ri(s.neg(), side)
    c1 = s.sqr().sub(s)                                    # (sigma^2 - sigma)/z
    c3 = s.sqr().add(s.mul_scalar(3.0)).add_scalar(2.0)    # -(2 + 3 sigma + sigma^2)/z^3
    zin = z.recip()
    t = zin.scale(c1).sub(zin.mul(zin).mul(zin).scale(c3))
    return table.mu.mul(zns).mul(t)


# -- order-3 jets -------------------------------------------------------------

class Jet:
    """Truncated Taylor expansion sum c_k (dz)^k with box coefficients."""

    __slots__ = ("c",)

    def __init__(self, coeffs, order: int | None = None):
        self.c = list(coeffs)
        n = (order + 1) if order is not None else max(len(self.c), 4)
        while len(self.c) < n:
            self.c.append(box(0.0))
        del self.c[n:]

    @property
    def order(self) -> int:
        return len(self.c) - 1

    @classmethod
    def variable(cls, z: CB, order: int = 3) -> "Jet":
        return cls([z, box(1.0)], order)

    def add(self, o: "Jet") -> "Jet":
        return Jet([a.add(b) for a, b in zip(self.c, o.c)])

    def add_const(self, k: CB) -> "Jet":
        return Jet([self.c[0].add(k)] + self.c[1:])

    def add_scalar(self, x: float) -> "Jet":
        return Jet([self.c[0].add_scalar(x)] + self.c[1:])

    def mul(self, o: "Jet") -> "Jet":
        a, b = self.c, o.c
        n = min(len(a), len(b))
        out = []
        for k in range(n):
            acc = None
            for i in range(k + 1):
                t = a[i].mul(b[k - i])
                acc = t if acc is None else acc.add(t)
            out.append(acc)
        return Jet(out, n - 1)

    def scale_cb(self, k: CB) -> "Jet":
        return Jet([ci.mul(k) for ci in self.c])

    def neg(self) -> "Jet":
        return Jet([ci.neg() for ci in self.c])

    def recip(self) -> "Jet":
        a = self.c
        r0 = box(1.0).div(a[0])
        out = [r0]
        for k in range(1, len(a)):
            acc = None
            for j in range(1, k + 1):
                t = a[j].mul(out[k - j])
                acc = t if acc is None else acc.add(t)
            out.append(acc.mul(r0).neg())
        return Jet(out, len(a) - 1)

    def compose_outer(self, f_taylor) -> "Jet":
        """Outer function given by Taylor coefficients at self.c[0]."""
        n = self.order
        delta = Jet([box(0.0)] + self.c[1:], n)
        acc = Jet([f_taylor[n]], n)
        for k in range(n - 1, -1, -1):
            acc = acc.mul(delta).add_const(f_taylor[k])
        return acc

    def derivative(self, order: int) -> CB:
        fact = 1.0
        for i in range(2, order + 1):
            fact *= i
        return self.c[order].scale(point(fact))


def q_jet(table: ConstantsTable, z: CB) -> Jet:
    """Jet of Q at a box off the branch locus (principal branch only)."""
    qk = table.qk
    zj = Jet.variable(z)
    num = zj.add_scalar(-1.0)
    den = zj.add_scalar(1.0)
    w1 = num.mul(den.recip()).scale_cb(qk.kio)
    b = w1.c[0]
    f = [qk.psi12(b, 0), qk.psi12_d1(b, 0),
         psi12_d2(table, b).scale(point(0.5)),
         psi12_d3(table, b).scale(point(1.0 / 6.0))]
    w2 = w1.compose_outer(f)
    c1 = table.sqrt5.mul_scalar(2.0 / 3.0)
    u = w2.mul(w2).add(w2.scale_cb(box(c1))).add_scalar(1.0)
    w3 = w2.mul(u).mul(u)
    return w3.recip().scale_cb(qk.tau_c).neg()


def eval_Q_derivs(table: ConstantsTable, z: CB, order: int) -> CB:
    if order == 1:
        return table.qk.q_d1(z)[1]
    return q_jet(table, z).derivative(order)


def psi12_taylor_at_ki(table: ConstantsTable, order: int = 4):
    """Taylor coefficients of the slit-plane map at kappa*i, from the
    recursion R_{k+1} = R_k' - sigma R_k / z for psi12^{(k)} = mu z^-s R_k."""
    s = table.sigma
    ki = ComplexBox(point(0.0), table.kappa)
    zns = ki.cpow_ri(s.neg(), 0)
    mz = table.mu.mul(zns)
    coeffs = [table.qk.psi12(ki, 0)]
    # R_k as polynomial in 1/z: dict power-of-(1/z) -> RI coefficient
    rk = {-1: point(1.0), 1: point(-1.0)}           # R_1 = z - 1/z
    fact = 1.0
    for k in range(1, order + 1):
        if k > 1:
            fact *= k
        zin = ki.recip()
        acc = None
        for p, coef in sorted(rk.items()):
            term = box(coef)
            if p > 0:
                for _ in range(p):
                    term = term.mul(zin)
            else:
                for _ in range(-p):
                    term = term.mul(ki)
            acc = term if acc is None else acc.add(term)
        coeffs.append(mz.mul(acc).scale(point(1.0 / fact)))
        nxt = {}
        for p, coef in rk.items():
            # d/dz z^-p = -p z^-(p+1); -sigma R/z shifts p by one
            if p != 0:
                nxt[p + 1] = nxt.get(p + 1, point(0.0)).add(coef.mul_scalar(-p))
            nxt[p + 1] = nxt.get(p + 1, point(0.0)).sub(coef.mul(s))
        rk = nxt
    return coeffs


def qhat_taylor(table: ConstantsTable, order: int = 4):
    """Taylor coefficients at 0 of the conjugated map -tau/Q(-tau/z)."""
    # psi-tilde(z) = kappa i (tau + z)/(tau - z) = kappa i (1 + 2 sum (z/tau)^k)
    ki = ComplexBox(point(0.0), table.kappa)
    inv_tau = point(1.0).div(table.tau)
    inner = [ki]
    c = point(2.0)
    for _ in range(order):
        c = c.mul(inv_tau)
        inner.append(ki.scale(c))
    g = Jet(inner, order)
    f = psi12_taylor_at_ki(table, order)
    w2 = g.compose_outer(f)
    c1 = table.sqrt5.mul_scalar(2.0 / 3.0)
    u = w2.mul(w2).add(w2.scale_cb(box(c1))).add_scalar(1.0)
    return w2.mul(u).mul(u)


def expansion_b2(table: ConstantsTable) -> RI:
    """Coefficient of 1/zeta^2 in the expansion of Q at infinity."""
    jet = qhat_taylor(table, 4)
    q2, q3, q4 = jet.c[2], jet.c[3], jet.c[4]
    val = q2.mul(q2).mul(q2).sub(q2.mul(q3).scale(point(2.0))).add(q4)
    t3 = table.tau.mul(table.tau).mul(table.tau)
    return val.scale(t3).re


# -- ellipse map --------------------------------------------------------------

def eval_zeta_w(table: ConstantsTable, w: CB) -> CB:
    return w.scale(table.e1).add_ri(table.e0).add(w.recip().scale(table.em1))


def zeta_d1(table: ConstantsTable, w: CB) -> CB:
    return w.sqrc().recip().scale(table.em1).neg().add_ri(table.e1)


def aE_r(table: ConstantsTable, r: RI) -> RI:
    return table.e1.mul(r).add(table.em1.div(r))


def bE_r(table: ConstantsTable, r: RI) -> RI:
    return table.e1.mul(r).sub(table.em1.div(r))


def zeta_inverse(table: ConstantsTable, z: CB) -> CB:
    """The branch of zeta^{-1} landing outside the unit disk."""
    t = z.add_ri(table.e0.neg())
    disc = t.sqrc().add_ri(table.e1.mul(table.em1).mul_scalar(-4.0))
    return t.add(disc.csqrt()).div(box(table.e1.mul_scalar(2.0)))


# -- closed-form bound families ----------------------------------------------

def bound_phi_family(table: ConstantsTable, r: RI):
    """phi1max(r) and logdphimax(r); requires r > a_E + |x_E| = 1.11."""
    denom = r.add_scalar(-0.053)
    t = table.a_e.div(denom)
    s = point(1.0).sub(t.sqr())
    if s.lo <= 0.0:
        raise DomainViolation(f"phi bounds need r > 1.11, got [{r.lo}, {r.hi}]")
    logd = s.log().neg()
    phi1 = table.a_e.mul(logd.sqrt())
    return {"phi1max": phi1, "logdphimax": logd}
