"""Rigorous derivation of the map constants and assembly of the shared table.

Everything downstream consumes the immutable ConstantsTable produced by
``assemble_constants()``; it carries verified enclosures for the derived
constants (sigma, mu, nu, kappa, tau, b0, b1, cp, cv, the ring critical
points) together with the literal geometry constants.
"""

from dataclasses import dataclass, field
from functools import lru_cache
import math

from .backend import kern
from .interval import (RealInterval, ComplexBox, PI, point, ri,
                       from_decimal_window)
from .roots import refine_root


def lit(x: float) -> RealInterval:
    """Enclosure of a printed decimal literal (1 ulp around the parsed float)."""
    return RealInterval(math.nextafter(x, -math.inf), math.nextafter(x, math.inf))


def _sqrt5() -> RealInterval:
    return point(5.0).sqrt()


@dataclass(frozen=True)
class ConstantsTable:
    # derived, validated enclosures
    sigma: RealInterval
    nu: RealInterval
    c_mu: RealInterval          # real factor of mu: mu = c_mu * e^{i sigma pi/2}
    mu: ComplexBox
    kappa: RealInterval
    tau: RealInterval
    b0: RealInterval
    b1: RealInterval
    cp: RealInterval
    cv: RealInterval
    c_q_plus: ComplexBox
    c_q_minus: ComplexBox
    u0: RealInterval
    u3: RealInterval
    cv_p: RealInterval          # critical value of the inner polynomial, -64/(225 sqrt 5)
    # handy verified scalars
    sqrt5: RealInterval
    cos_pi5: RealInterval
    sin_pi5: RealInterval
    # literal geometry constants
    x_e: RealInterval
    a_e: RealInterval
    b_e: RealInterval
    e1: RealInterval
    e0: RealInterval
    em1: RealInterval
    eta: RealInterval
    big_r: RealInterval
    rho: RealInterval
    r1: RealInterval
    big_r1: RealInterval
    c00: RealInterval
    c01max: RealInterval
    r4: RealInterval
    u1: RealInterval
    u2: RealInterval
    u4: RealInterval
    eps1: RealInterval
    eps2: RealInterval
    eps3: RealInterval
    eps4: RealInterval
    eps5: RealInterval
    eps6: RealInterval
    eps7: RealInterval
    a4: ComplexBox
    a5: ComplexBox
    a6: ComplexBox
    a7: ComplexBox
    c_plus: ComplexBox          # critical point -sqrt(5)/3 + 2i/3 of the polynomial
    qk: "kern.QKernel" = field(repr=False, compare=False, default=None)


class TableMismatch(AssertionError):
    pass


def solve_sigma_mu_nu():
    """sigma, nu and the polar pieces of mu, straight from their formulas."""
    sqrt5 = _sqrt5()
    sigma = point(3.0).add(sqrt5).mul_scalar(0.5).atan().mul(point(2.0).div(PI))
    nu = point(1.0).sub(sqrt5.mul_scalar(2.0 / 3.0))
    sig_pi = sigma.mul(PI)
    c_mu = (sigma.mul(sigma.add_scalar(-2.0)).mul_scalar(1.0 / 3.0)
            .mul(point(2.0).div(point(1.0).sub(sig_pi.cos())).sqrt()))
    half = sig_pi.mul_scalar(0.5)
    mu = ComplexBox(c_mu.mul(half.cos()), c_mu.mul(half.sin()))
    return sigma, nu, c_mu, mu


def solve_kappa(sigma, nu, c_mu) -> RealInterval:
    """Positive kappa with psi12(kappa*i) = 0.

    On the upper imaginary axis the defining equation collapses to the real
    scalar equation -y^2 + A y^sigma + B = 0 with A = nu(2-sigma)/c_mu and
    B = (2-sigma)/sigma (the exponent's phase cancels against mu's).
    """
    two_ms = point(2.0).sub(sigma)
    a = nu.mul(two_ms).div(c_mu)
    b = two_ms.div(sigma)

    def f(y):
        return b.add(a.mul(y.pow_ri(sigma))).sub(y.sqr())

    def df(y):
        return a.mul(sigma).mul(y.pow_ri(sigma.add_scalar(-1.0))).sub(y.mul_scalar(2.0))

    return refine_root(f, 2.0, 2.5, target_width=1e-13, df=df)


def _psi1_real(x, sigma, nu, c_mu, kappa):
    """psi1 on the real ray (1, inf), where it is real valued."""
    t = kappa.mul(x.add_scalar(-1.0)).div(x.add_scalar(1.0))
    inv_s = point(1.0).div(sigma)
    inv_2ms = point(1.0).div(point(2.0).sub(sigma))
    return c_mu.div(t.pow_ri(sigma)).mul(inv_s.sub(t.sqr().mul(inv_2ms))).add(nu)


def solve_cp(sigma, nu, c_mu, kappa) -> RealInterval:
    """The unique real critical point of Q beyond the ring, psi1(cp) = -1/sqrt(5)."""
    target = point(1.0).div(_sqrt5())

    def f(x):
        return _psi1_real(x, sigma, nu, c_mu, kappa).add(target)

    def df(x):
        t = kappa.mul(x.add_scalar(-1.0)).div(x.add_scalar(1.0))
        dpsi_dt = c_mu.neg().mul(point(1.0).add(t.sqr())).div(
            t.pow_ri(sigma.add_scalar(1.0)))
        dt_dx = kappa.mul_scalar(2.0).div(x.add_scalar(1.0).sqr())
        return dpsi_dt.mul(dt_dx)

    return refine_root(f, 3.5, 4.5, target_width=1e-12, df=df)


def compute_tau_b0_b1_cv(sigma, nu, c_mu, kappa):
    """tau (both printed forms, intersected), then b0, b1 and cv."""
    k2p1 = kappa.sqr().add_scalar(1.0)
    tau_a = k2p1.mul_scalar(-2.0).mul(c_mu).div(kappa.pow_ri(sigma))
    two_ms = point(2.0).sub(sigma)
    d = sigma.mul(k2p1).add_scalar(-2.0)
    tau_b = nu.mul(sigma).mul(two_ms).mul(k2p1).mul_scalar(2.0).div(d.neg())
    tau = tau_a.intersect(tau_b)

    sqrt5 = _sqrt5()
    s = sigma
    b0 = (sqrt5.mul(tau).mul_scalar(4.0 / 3.0)
          .add(nu.mul(s).mul(two_ms).mul_scalar(2.0)
               .mul(kappa.sqr().mul(s.add_scalar(-2.0)).add(s))
               .div(tau.mul(d))))
    inner = (sqrt5.mul(s).mul(tau).mul_scalar(8.0)
             .sub(s.sqr().mul_scalar(2.0)).add_scalar(-1.0)
             .add(kappa.sqr().mul(
                 sqrt5.mul(s.add_scalar(-2.0)).mul(tau).mul_scalar(8.0)
                 .sub(s.sqr().mul_scalar(2.0)).add(s.mul_scalar(8.0)).add_scalar(-9.0))))
    b1 = (b0.sqr()
          .sub(tau.sqr().mul_scalar(38.0 / 9.0))
          .sub(nu.mul(s).mul(two_ms).mul_scalar(2.0)
               .div(tau.mul(d).mul_scalar(3.0)).mul(inner)))
    cv = sqrt5.mul(tau).mul_scalar(225.0 / 64.0)
    return tau, b0, b1, cv


def ring_critical_points(kappa):
    """c_pm on the unit circle, from Moebius inversion: ((k^2-1) +- 2ki)/(k^2+1)."""
    k2p1 = kappa.sqr().add_scalar(1.0)
    re = kappa.sqr().add_scalar(-1.0).div(k2p1)
    im = kappa.mul_scalar(2.0).div(k2p1)
    return ComplexBox(re, im), ComplexBox(re, im.neg())


@lru_cache(maxsize=1)
def assemble_constants() -> ConstantsTable:
    sigma, nu, c_mu, mu = solve_sigma_mu_nu()
    kappa = solve_kappa(sigma, nu, c_mu)
    tau, b0, b1, cv = compute_tau_b0_b1_cv(sigma, nu, c_mu, kappa)
    cp = solve_cp(sigma, nu, c_mu, kappa)
    c_q_plus, c_q_minus = ring_critical_points(kappa)

    sqrt5 = _sqrt5()
    pi5 = PI.mul_scalar(0.2)
    cos_pi5 = pi5.cos()
    sin_pi5 = pi5.sin()
    u1 = lit(7.8)
    u0 = u1.div(cos_pi5)
    u3 = cv.mul(cos_pi5)
    cv_p = point(-64.0).div(sqrt5.mul_scalar(225.0))
    c_plus = ComplexBox(sqrt5.mul_scalar(-1.0 / 3.0), ri(2.0 / 3.0, 2.0 / 3.0))

    qk = kern.QKernel(sigma, nu, kappa, tau, mu, sqrt5.mul_scalar(2.0 / 3.0))

    table = ConstantsTable(
        sigma=sigma, nu=nu, c_mu=c_mu, mu=mu, kappa=kappa, tau=tau,
        b0=b0, b1=b1, cp=cp, cv=cv,
        c_q_plus=c_q_plus, c_q_minus=c_q_minus,
        u0=u0, u3=u3, cv_p=cv_p,
        sqrt5=sqrt5, cos_pi5=cos_pi5, sin_pi5=sin_pi5,
        x_e=lit(-0.053), a_e=lit(1.057), b_e=lit(1.029),
        e1=lit(1.043), e0=lit(-0.053), em1=lit(0.014),
        eta=lit(3.1), big_r=point(100.0), rho=lit(0.05),
        r1=lit(1.25), big_r1=point(82.0),
        c00=lit(0.053), c01max=lit(2.086), r4=lit(0.53),
        u1=u1, u2=lit(5.4), u4=lit(11.5),
        eps1=lit(0.0036), eps2=lit(0.1), eps3=lit(0.0056),
        eps4=lit(0.9), eps5=lit(0.5), eps6=lit(0.41), eps7=point(1.0),
        a4=ComplexBox(lit(-0.24), lit(0.64)),
        a5=ComplexBox(lit(0.88), lit(0.24)),
        a6=ComplexBox(lit(0.71), lit(0.89)),
        a7=ComplexBox(lit(-1.45), point(0.0)),
        c_plus=c_plus,
        qk=qk,
    )
    return table


# entries cross-checked against their printed 4-decimal windows
TABLE_WINDOWS = [
    ("sigma", "sigma", 0.7677),
    ("nu", "nu", -0.4907),
    ("mu.re", "mu", -0.1204),
    ("mu.im", "mu", -0.3153),
    ("kappa", "kappa", 2.2142),
    ("tau", "tau", 2.1647),
    ("b0", "b0", 7.3476),
    ("b1", "b1", 21.4270),
    ("cp", "cp", 4.0843),
    ("cv", "cv", 17.0178),
    ("cQ.re", "c_q_plus", 0.6611),
    ("cQ.im", "c_q_plus", 0.7502),
    ("u0", "u0", 9.6413),
    ("u3", "u3", 13.7677),
]

_LITERAL_ROWS = [
    ("x_E", "x_e"), ("a_E", "a_e"), ("b_E", "b_e"), ("e1", "e1"),
    ("e_-1", "em1"), ("eta", "eta"), ("R", "big_r"), ("rho", "rho"),
    ("r1", "r1"), ("R1", "big_r1"), ("c00", "c00"), ("c01_max", "c01max"),
    ("r4", "r4"), ("u1", "u1"), ("u2", "u2"), ("u4", "u4"),
    ("eps1", "eps1"), ("eps2", "eps2"), ("eps3", "eps3"), ("eps4", "eps4"),
    ("eps5", "eps5"), ("eps6", "eps6"), ("eps7", "eps7"),
]


def _component(table, name, attr):
    value = getattr(table, attr)
    if isinstance(value, ComplexBox):
        return value.im if name.endswith(".im") else value.re
    return value


def table_rows(table: ConstantsTable):
    """(name, enclosure, window-or-None, match) for every table entry."""
    rows = []
    for name, attr, win in TABLE_WINDOWS:
        enc = _component(table, name, attr)
        window = from_decimal_window(win, 4)
        rows.append((name, enc, window, window.encloses(enc)))
    for name, attr in _LITERAL_ROWS:
        enc = getattr(table, attr)
        rows.append((name, enc, None, True))
    for name, attr in [("a4", "a4"), ("a5", "a5"), ("a6", "a6"), ("a7", "a7")]:
        val = getattr(table, attr)
        rows.append((name + ".re", val.re, None, True))
        rows.append((name + ".im", val.im, None, True))
    return rows


def check_table(table: ConstantsTable) -> None:
    bad = [name for name, enc, win, ok in table_rows(table) if not ok]
    if bad:
        raise TableMismatch(f"table windows failed for: {', '.join(bad)}")
