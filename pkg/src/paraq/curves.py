"""Parameterized curve families.

Every curve maps a parameter sub-interval to a ComplexBox enclosing the
exact arc segment; curves that are smooth in the parameter also expose the
derivative box used by the centered (mean-value) form."""

from .backend import kern
from .interval import RealInterval, ComplexBox, point, cpoint, PI


def _cb_of(v) -> "CB":
    if isinstance(v, CB):
        return v
    return cpoint(v)
from .constants import ConstantsTable
from . import maps

CB = kern.CB
RI = kern.RI


class Curve:
    t0: float
    t1: float

    def box(self, lo: float, hi: float) -> CB:
        raise NotImplementedError

    def dbox(self, lo: float, hi: float):
        return None


class PointCurve(Curve):
    """Degenerate curve: a single (possibly interval) point."""

    def __init__(self, z: CB):
        self.z = z
        self.t0 = 0.0
        self.t1 = 0.0

    def box(self, lo, hi):
        return self.z


class CircleArc(Curve):
    """t in radians; center + radius * e^{it}."""

    def __init__(self, center: CB, radius, t0: float, t1: float):
        self.center = _cb_of(center)
        self.radius = radius if isinstance(radius, RI) else point(radius)
        self.t0 = t0
        self.t1 = t1

    def box(self, lo, hi):
        th = RealInterval(lo, hi)
        return self.center.add(
            ComplexBox(self.radius.mul(th.cos()), self.radius.mul(th.sin())))

    def dbox(self, lo, hi):
        th = RealInterval(lo, hi)
        return ComplexBox(self.radius.mul(th.sin()).neg(), self.radius.mul(th.cos()))


class Segment(Curve):
    """t in [0, 1]; z1 + t (z2 - z1)."""

    def __init__(self, z1: CB, z2: CB):
        self.z1 = _cb_of(z1)
        self.z2 = _cb_of(z2)
        self.t0 = 0.0
        self.t1 = 1.0

    def box(self, lo, hi):
        d = self.z2.sub(self.z1)
        t = RealInterval(lo, hi)
        return self.z1.add(d.scale(t))

    def dbox(self, lo, hi):
        return self.z2.sub(self.z1)


class RayTruncated(Curve):
    """base + t e^{i angle}, t in [t0, t1]; angle may be an interval."""

    def __init__(self, base: CB, angle, t0: float, t1: float):
        self.base = _cb_of(base)
        ang = angle if isinstance(angle, RI) else point(angle)
        self.dir = ComplexBox(ang.cos(), ang.sin())
        self.t0 = t0
        self.t1 = t1

    def box(self, lo, hi):
        return self.base.add(self.dir.scale(RealInterval(lo, hi)))

    def dbox(self, lo, hi):
        return self.dir


class ZetaImageArc(Curve):
    """theta (in units of pi) -> zeta(r e^{i pi theta}): the ellipse E_r."""

    def __init__(self, table: ConstantsTable, r, t0: float, t1: float):
        self.table = table
        self.r = r if isinstance(r, RI) else point(r)
        self.t0 = t0
        self.t1 = t1

    def _w(self, lo, hi):
        th = RealInterval(lo, hi).mul(PI)
        return ComplexBox(self.r.mul(th.cos()), self.r.mul(th.sin()))

    def box(self, lo, hi):
        return maps.eval_zeta_w(self.table, self._w(lo, hi))

    def dbox(self, lo, hi):
        w = self._w(lo, hi)
        iw = ComplexBox(w.im.neg(), w.re)           # i * w
        return maps.zeta_d1(self.table, w).mul(iw).scale(PI)


class ZetaImageRadial(Curve):
    """r -> zeta(r e^{i pi theta}) for fixed theta (in units of pi)."""

    def __init__(self, table: ConstantsTable, theta, r0: float, r1: float):
        self.table = table
        th = (theta if isinstance(theta, RI) else point(theta)).mul(PI)
        self.dir = ComplexBox(th.cos(), th.sin())
        self.t0 = r0
        self.t1 = r1

    def box(self, lo, hi):
        w = self.dir.scale(RealInterval(lo, hi))
        return maps.eval_zeta_w(self.table, w)

    def dbox(self, lo, hi):
        w = self.dir.scale(RealInterval(lo, hi))
        return maps.zeta_d1(self.table, w).mul(self.dir)


class EllipseGraph(Curve):
    """x -> x + s * b_E(r) sqrt(1 - ((x - x_E)/a_E(r))^2) i on the ellipse E_r.

    The radicand is clamped at 0 to absorb endpoint roundoff; no derivative
    (it degenerates at the horizontal extremes)."""

    def __init__(self, table: ConstantsTable, r, sign: int, x0: float, x1: float):
        self.table = table
        rr = r if isinstance(r, RI) else point(r)
        self.a = maps.aE_r(table, rr)
        self.b = maps.bE_r(table, rr)
        self.sign = sign
        self.t0 = x0
        self.t1 = x1

    def y(self, x: RI) -> RI:
        t = x.sub(self.table.x_e).div(self.a)
        rad = point(1.0).sub(t.sqr())
        y = self.b.mul(rad.sqrt_clamped())
        return y if self.sign > 0 else y.neg()

    def box(self, lo, hi):
        x = RealInterval(lo, hi)
        return ComplexBox(x, self.y(x))


class ExplicitGraph(Curve):
    """x -> x + i y(x) for a named formula; the ids cover the preimage-curve
    branches and the tangent line at the ring critical point."""

    FORMULAS = ("h_plus", "h_minus", "ell_plus")

    def __init__(self, table: ConstantsTable, formula: str, x0: float, x1: float):
        if formula not in self.FORMULAS:
            raise ValueError(f"unknown graph formula {formula!r}")
        self.table = table
        self.formula = formula
        self.t0 = x0
        self.t1 = x1

    def _y(self, x: RI) -> RI:
        from . import geometry
        if self.formula == "h_plus":
            return geometry.h_plus(x)
        if self.formula == "h_minus":
            return geometry.h_minus(x)
        return geometry.ell_plus(x, self.table)

    def box(self, lo, hi):
        x = RealInterval(lo, hi)
        return ComplexBox(x, self._y(x))


class SegmentToCorner(Curve):
    """t in [0,1] -> cp + c t (1 + tan(0.3 pi) i): the ray used by the
    W0 sector-entry estimate."""

    def __init__(self, table: ConstantsTable, half_width: float = 0.5):
        self.table = table
        tan3 = PI.mul_scalar(0.3).sin().div(PI.mul_scalar(0.3).cos())
        self.step = ComplexBox(point(half_width), point(half_width).mul(tan3))
        self.t0 = 0.0
        self.t1 = 1.0

    def box(self, lo, hi):
        t = RealInterval(lo, hi)
        return ComplexBox(self.table.cp, point(0.0)).add(self.step.scale(t))

    def dbox(self, lo, hi):
        return self.step


# -- float sampling (test harness / explorer overlays) -----------------------

def _mid(ri):
    return ri.mid if hasattr(ri, "mid") else float(ri)


def point_of(curve, t: float) -> complex:
    """Float midpoint parameterization of any curve (diagnostics only)."""
    import cmath
    import math
    if isinstance(curve, PointCurve):
        return curve.z.mid()
    if isinstance(curve, CircleArc):
        return curve.center.mid() + curve.radius.mid * cmath.exp(1j * t)
    if isinstance(curve, Segment):
        return curve.z1.mid() + t * (curve.z2.mid() - curve.z1.mid())
    if isinstance(curve, RayTruncated):
        return curve.base.mid() + t * curve.dir.mid()
    if isinstance(curve, ZetaImageArc):
        w = curve.r.mid * cmath.exp(1j * math.pi * t)
        tab = curve.table
        return tab.e1.mid * w + tab.e0.mid + tab.em1.mid / w
    if isinstance(curve, ZetaImageRadial):
        w = t * curve.dir.mid()
        tab = curve.table
        return tab.e1.mid * w + tab.e0.mid + tab.em1.mid / w
    if isinstance(curve, EllipseGraph):
        a, b = curve.a.mid, curve.b.mid
        rad = max(0.0, 1.0 - ((t - curve.table.x_e.mid) / a) ** 2)
        return complex(t, curve.sign * b * math.sqrt(rad))
    if isinstance(curve, SegmentToCorner):
        return curve.table.cp.mid + t * curve.step.mid()
    if isinstance(curve, ExplicitGraph):
        y = curve._y(RealInterval(t, t))
        return complex(t, y.mid)
    raise TypeError(type(curve))
