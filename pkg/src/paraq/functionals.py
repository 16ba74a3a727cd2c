"""Real objectives over curves: a small expression language for the complex
core plus a real wrapper, with a mean-value (centered) refinement whenever
both the curve and the core are differentiable on the box.

Core evaluation propagates *branch pieces*: on boxes meeting the map's
branch locus the one-sided closures stay separate and only the wrapped real
intervals are hulled (a rectangle hull of the complex values would let
|.| or Re dip below both branches)."""

from .backend import kern
from .interval import RealInterval, ComplexBox, point, box
from .constants import ConstantsTable

CB = kern.CB
RI = kern.RI
KernelError = kern.KernelError


# -- complex-valued expression nodes -----------------------------------------

class Expr:
    def pieces(self, z: CB, tab: ConstantsTable):
        """Tuple of boxes whose union covers the value set over z."""
        raise NotImplementedError

    def deval(self, z: CB, tab: ConstantsTable):
        """Complex derivative d/dz on a single-branch box, or None."""
        return None

    def __sub__(self, other):
        return Sub(self, as_expr(other))

    def __add__(self, other):
        return Add(self, as_expr(other))

    def __mul__(self, other):
        return Mul(self, as_expr(other))

    def __truediv__(self, other):
        return Div(self, as_expr(other))

    def __neg__(self):
        return Neg(self)


def as_expr(v):
    if isinstance(v, Expr):
        return v
    if isinstance(v, CB):
        return Const(v)
    if isinstance(v, RI):
        return Const(ComplexBox(v, point(0.0)))
    return Const(box(complex(v).real, complex(v).imag))


def _combine(a_pieces, b_pieces, op):
    if len(a_pieces) == 1 and len(b_pieces) == 1:
        return (op(a_pieces[0], b_pieces[0]),)
    return tuple(op(a, b) for a in a_pieces for b in b_pieces)


class Z(Expr):
    def pieces(self, z, tab):
        return (z,)

    def deval(self, z, tab):
        return box(1.0)


class Const(Expr):
    def __init__(self, value: CB):
        self.value = value

    def pieces(self, z, tab):
        return (self.value,)

    def deval(self, z, tab):
        return box(0.0)


class Q(Expr):
    def pieces(self, z, tab):
        return tab.qk.q_pieces(z)

    def deval(self, z, tab):
        return tab.qk.q_d1(z, False)[1]


class QD1(Expr):
    def pieces(self, z, tab):
        return tuple(d for _, d in tab.qk.q_d1_pieces(z))

    def deval(self, z, tab):
        from .maps import q_jet
        return q_jet(tab, z).derivative(2)


class P(Expr):
    def pieces(self, z, tab):
        return (tab.qk.p(z),)

    def deval(self, z, tab):
        return tab.qk.p_d1(z)


class Neg(Expr):
    def __init__(self, a):
        self.a = a

    def pieces(self, z, tab):
        return tuple(p.neg() for p in self.a.pieces(z, tab))

    def deval(self, z, tab):
        d = self.a.deval(z, tab)
        return None if d is None else d.neg()


class Add(Expr):
    def __init__(self, a, b):
        self.a, self.b = a, b

    def pieces(self, z, tab):
        return _combine(self.a.pieces(z, tab), self.b.pieces(z, tab), CB.add)

    def deval(self, z, tab):
        da, db = self.a.deval(z, tab), self.b.deval(z, tab)
        return None if da is None or db is None else da.add(db)


class Sub(Expr):
    def __init__(self, a, b):
        self.a, self.b = a, b

    def pieces(self, z, tab):
        return _combine(self.a.pieces(z, tab), self.b.pieces(z, tab), CB.sub)

    def deval(self, z, tab):
        da, db = self.a.deval(z, tab), self.b.deval(z, tab)
        return None if da is None or db is None else da.sub(db)


class Mul(Expr):
    def __init__(self, a, b):
        self.a, self.b = a, b

    def pieces(self, z, tab):
        return _combine(self.a.pieces(z, tab), self.b.pieces(z, tab), CB.mul)

    def deval(self, z, tab):
        da, db = self.a.deval(z, tab), self.b.deval(z, tab)
        if da is None or db is None:
            return None
        av = self.a.pieces(z, tab)
        bv = self.b.pieces(z, tab)
        if len(av) != 1 or len(bv) != 1:
            return None
        return da.mul(bv[0]).add(av[0].mul(db))


class Div(Expr):
    def __init__(self, a, b):
        self.a, self.b = a, b

    def pieces(self, z, tab):
        return _combine(self.a.pieces(z, tab), self.b.pieces(z, tab), CB.div)

    def deval(self, z, tab):
        da, db = self.a.deval(z, tab), self.b.deval(z, tab)
        if da is None or db is None:
            return None
        av = self.a.pieces(z, tab)
        bv = self.b.pieces(z, tab)
        if len(av) != 1 or len(bv) != 1:
            return None
        b0 = bv[0]
        return da.mul(b0).sub(av[0].mul(db)).div(b0.mul(b0))


class Recip(Expr):
    def __init__(self, a):
        self.a = a

    def pieces(self, z, tab):
        return tuple(p.recip() for p in self.a.pieces(z, tab))

    def deval(self, z, tab):
        d = self.a.deval(z, tab)
        if d is None:
            return None
        av = self.a.pieces(z, tab)
        if len(av) != 1:
            return None
        v = av[0]
        return d.div(v.mul(v)).neg()


class Sqrt(Expr):
    """Principal square root; a piece meeting its own cut (or containing 0)
    falls back to the hull of both root closures."""

    def __init__(self, a):
        self.a = a

    def pieces(self, z, tab):
        return tuple(p.csqrt(True) for p in self.a.pieces(z, tab))

    def deval(self, z, tab):
        d = self.a.deval(z, tab)
        if d is None:
            return None
        av = self.a.pieces(z, tab)
        if len(av) != 1:
            return None
        v = av[0].csqrt(False)
        return d.div(v.scale(point(2.0)))


class Cube(Expr):
    def __init__(self, a):
        self.a = a

    def pieces(self, z, tab):
        return tuple(p.sqrc().mul(p) for p in self.a.pieces(z, tab))

    def deval(self, z, tab):
        d = self.a.deval(z, tab)
        if d is None:
            return None
        av = self.a.pieces(z, tab)
        if len(av) != 1:
            return None
        return av[0].sqrc().scale(point(3.0)).mul(d)


class LogC(Expr):
    """Principal complex log (used for |log Q'|)."""

    def __init__(self, a):
        self.a = a

    def pieces(self, z, tab):
        return tuple(p.clog(0) for p in self.a.pieces(z, tab))

    def deval(self, z, tab):
        d = self.a.deval(z, tab)
        if d is None:
            return None
        av = self.a.pieces(z, tab)
        if len(av) != 1:
            return None
        return d.div(av[0])


# -- real wrappers -------------------------------------------------------------

def _wrap(kind: str, w: CB, tab: ConstantsTable) -> RI:
    if kind == "abs":
        return w.abs()
    if kind == "re":
        return w.re
    if kind == "im":
        return w.im
    if kind == "absim":
        return w.im.abs()
    if kind == "arg":
        return w.arg(0)
    if kind == "absarg":
        return w.absarg()
    if kind == "pr+":
        # Re(w e^{-i pi/5}) = Re w cos(pi/5) + Im w sin(pi/5)
        return w.re.mul(tab.cos_pi5).add(w.im.mul(tab.sin_pi5))
    if kind == "pr-":
        return w.re.mul(tab.cos_pi5).sub(w.im.mul(tab.sin_pi5))
    raise ValueError(f"wrapper {kind}")


def _wrap_rate(kind: str, w: CB, wt: CB, tab: ConstantsTable):
    """Enclosure of d/dt wrap(w(t)) given boxes for w and its t-derivative,
    or None when the rate is not available on this box."""
    if kind == "re":
        return wt.re
    if kind == "im":
        return wt.im
    if kind == "pr+":
        return wt.re.mul(tab.cos_pi5).add(wt.im.mul(tab.sin_pi5))
    if kind == "pr-":
        return wt.re.mul(tab.cos_pi5).sub(wt.im.mul(tab.sin_pi5))
    if kind == "absim":
        if w.im_lo > 0.0:
            return wt.im
        if w.im_hi < 0.0:
            return wt.im.neg()
        return None
    prod = w.conj().mul(wt)
    if kind == "abs":
        m = w.abs()
        if m.lo <= 0.0:
            return None
        return prod.re.div(m)
    if kind in ("arg", "absarg"):
        m2 = w.abs().sqr()
        if m2.lo <= 0.0:
            return None
        rate = prod.im.div(m2)
        if kind == "arg":
            return rate
        try:
            th = w.arg(0)
        except KernelError:
            return None
        if th.lo > 0.0:
            return rate
        if th.hi < 0.0:
            return rate.neg()
        return None
    return None


class Functional:
    """wrap(core(z)) as a verified real interval over curve boxes."""

    def __init__(self, core: Expr, wrap: str):
        self.core = core
        self.wrap = wrap

    def _wrapped(self, ps, tab) -> RI:
        out = _wrap(self.wrap, ps[0], tab)
        for p in ps[1:]:
            out = out.hull(_wrap(self.wrap, p, tab))
        return out

    def value(self, z: CB, tab: ConstantsTable) -> RI:
        return self._wrapped(self.core.pieces(z, tab), tab)

    def bound_on(self, curve, tlo: float, thi: float, tab: ConstantsTable):
        """(bound over the sub-arc, guaranteed enclosure of the midpoint value).

        The midpoint enclosure feeds the incumbent.  The bound is the plain
        interval image, sharpened by two mean-value forms when the box stays
        on one analytic branch: one for the complex core and one for the
        wrapped real objective (the latter is what kills the phase-winding
        overestimate of rectangle arithmetic)."""
        tm = 0.5 * (tlo + thi)
        zm = curve.box(tm, tm)
        pm = self.core.pieces(zm, tab)
        sample = self._wrapped(pm, tab)
        if thi == tlo:
            return sample, sample

        zbox = curve.box(tlo, thi)
        ps = self.core.pieces(zbox, tab)
        bound = self._wrapped(ps, tab)
        if len(ps) == 1 and len(pm) == 1:
            dz = curve.dbox(tlo, thi)
            if dz is not None:
                try:
                    dw = self.core.deval(zbox, tab)
                except KernelError:
                    dw = None
                if dw is not None:
                    offs = RealInterval(tlo - tm, thi - tm)
                    wt = dw.mul(dz)
                    cent = pm[0].add(wt.scale(offs))
                    try:
                        w_sharp = ps[0].intersect(cent)
                    except KernelError:
                        w_sharp = ps[0]
                    try:
                        bound = _wrap(self.wrap, w_sharp, tab)
                    except KernelError:
                        bound = self._wrapped(ps, tab)
                    rate = _wrap_rate(self.wrap, ps[0], wt, tab)
                    if rate is not None:
                        real_cent = sample.add(rate.mul(offs))
                        try:
                            bound = bound.intersect(real_cent)
                        except KernelError:
                            pass
        return bound, sample


# convenience constructors used throughout the ledger
def f_abs_q():
    return Functional(Q(), "abs")


def f_re_q():
    return Functional(Q(), "re")


def f_im_q():
    return Functional(Q(), "im")


def f_absim_q():
    return Functional(Q(), "absim")


def f_re_qd1():
    return Functional(QD1(), "re")


def f_abs_log_qd1():
    return Functional(LogC(QD1()), "abs")


def f_re_sqrt_q():
    return Functional(Sqrt(Q()), "re")


def f_re_sqrt_neg_q():
    return Functional(Sqrt(Neg(Q())), "re")


def f_arg_q_minus(anchor) -> Functional:
    return Functional(Sub(Q(), as_expr(anchor)), "arg")


def f_absarg_q_minus(anchor) -> Functional:
    return Functional(Sub(Q(), as_expr(anchor)), "absarg")


def f_abs_q_minus(anchor) -> Functional:
    return Functional(Sub(Q(), as_expr(anchor)), "abs")


def f_abs_z_minus(anchor) -> Functional:
    return Functional(Sub(Z(), as_expr(anchor)), "abs")


def f_q2_tail(tab: ConstantsTable) -> Functional:
    """|Q(z) - z - b0 - b1/z| (the order-two remainder of the expansion)."""
    core = Sub(Sub(Sub(Q(), Z()), as_expr(tab.b0)),
               Mul(as_expr(tab.b1), Recip(Z())))
    return Functional(core, "abs")


def f_q_tail1(tab: ConstantsTable) -> Functional:
    """|Q(z) - z - b0| (used on large circles)."""
    return Functional(Sub(Sub(Q(), Z()), as_expr(tab.b0)), "abs")


def f_w0_remainder(tab: ConstantsTable, alpha3: CB, cp: CB) -> Functional:
    """|(Q - cv)/(alpha3 (z - cp)^3) - 1| near the triple critical point."""
    core = Sub(Div(Sub(Q(), as_expr(ComplexBox(tab.cv, point(0.0)))),
                   Mul(as_expr(alpha3), Cube(Sub(Z(), as_expr(cp))))),
               as_expr(1.0))
    return Functional(core, "abs")


# -- float sampling (test harness / diagnostics) ------------------------------

def float_core(expr, z: complex, fm) -> complex:
    import cmath
    if isinstance(expr, Z):
        return z
    if isinstance(expr, Const):
        return expr.value.mid()
    if isinstance(expr, Q):
        return fm.q(z)
    if isinstance(expr, QD1):
        return fm.q_d1(z)[1]
    if isinstance(expr, P):
        return fm.p(z)
    if isinstance(expr, Neg):
        return -float_core(expr.a, z, fm)
    if isinstance(expr, Add):
        return float_core(expr.a, z, fm) + float_core(expr.b, z, fm)
    if isinstance(expr, Sub):
        return float_core(expr.a, z, fm) - float_core(expr.b, z, fm)
    if isinstance(expr, Mul):
        return float_core(expr.a, z, fm) * float_core(expr.b, z, fm)
    if isinstance(expr, Div):
        return float_core(expr.a, z, fm) / float_core(expr.b, z, fm)
    if isinstance(expr, Recip):
        return 1.0 / float_core(expr.a, z, fm)
    if isinstance(expr, Sqrt):
        return cmath.sqrt(float_core(expr.a, z, fm))
    if isinstance(expr, Cube):
        return float_core(expr.a, z, fm) ** 3
    if isinstance(expr, LogC):
        return cmath.log(float_core(expr.a, z, fm))
    raise TypeError(type(expr))


def float_value(functional, z: complex, fm) -> float:
    import cmath
    import math
    w = float_core(functional.core, z, fm)
    kind = functional.wrap
    if kind == "abs":
        return abs(w)
    if kind == "re":
        return w.real
    if kind == "im":
        return w.imag
    if kind == "absim":
        return abs(w.imag)
    if kind == "arg":
        return cmath.phase(w)
    if kind == "absarg":
        return abs(cmath.phase(w))
    if kind == "pr+":
        return (w * cmath.exp(-1j * math.pi / 5.0)).real
    if kind == "pr-":
        return (w * cmath.exp(1j * math.pi / 5.0)).real
    raise ValueError(kind)
