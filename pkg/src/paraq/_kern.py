"""Interval kernel: outward-rounded real intervals, complex boxes and the
fused evaluator for the model map Q.

Written in Cython "pure Python" mode: the module runs unchanged under the
plain interpreter and compiles to a C extension for speed.  Both flavours
use the same libm entry points, so results are bit-identical either way.

Soundness contract: every operation returns an interval/box containing the
exact mathematical image of its inputs.  Exact float arithmetic (+,-,*,/,
sqrt) is correctly rounded, so one `nextafter` step outward per endpoint
covers it; libm transcendentals are only faithfully rounded, so those get
two steps.
"""

import cython

if cython.compiled:
    from cython.cimports.libc.math import (  # type: ignore
        nextafter, exp, log, sqrt, sin, cos, atan, asin, acos, atan2, floor, pi,
    )
else:
    from math import nextafter, exp, log, sqrt, sin, cos, atan, asin, acos, atan2, floor, pi

COMPILED = cython.compiled

INF = float("inf")

# pi is not representable; the float `pi` sits just below the true value.
PI_LO = pi
PI_HI = nextafter(pi, INF)


class KernelError(ValueError):
    """Base class for every domain/branch failure raised by the kernel."""


class DomainViolation(KernelError):
    pass


class DivisionByIntervalContainingZero(KernelError):
    pass


class DivisionByBoxContainingZero(KernelError):
    pass


class BranchCutStraddle(KernelError):
    pass


class ArgBranchCutStraddle(BranchCutStraddle):
    pass


@cython.cfunc
@cython.inline
def _dn(x: cython.double) -> cython.double:
    return nextafter(x, -INF)


@cython.cfunc
@cython.inline
def _up(x: cython.double) -> cython.double:
    return nextafter(x, INF)


@cython.cfunc
@cython.inline
def _dn2(x: cython.double) -> cython.double:
    return nextafter(nextafter(x, -INF), -INF)


@cython.cfunc
@cython.inline
def _up2(x: cython.double) -> cython.double:
    return nextafter(nextafter(x, INF), INF)


# ---------------------------------------------------------------------------
# Real intervals
# ---------------------------------------------------------------------------

@cython.cclass
class RI:
    """Closed real interval [lo, hi] with outward-rounded arithmetic."""

    lo = cython.declare(cython.double, visibility="readonly")
    hi = cython.declare(cython.double, visibility="readonly")

    def __init__(self, lo, hi=None):
        l: cython.double = lo
        h: cython.double = l if hi is None else hi
        if not (l <= h):
            raise DomainViolation(f"invalid interval [{l}, {h}]")
        self.lo = l
        self.hi = h

    def __repr__(self):
        return f"RI({self.lo!r}, {self.hi!r})"

    @property
    def width(self):
        return self.hi - self.lo

    @property
    def mid(self) -> float:
        return 0.5 * (self.lo + self.hi)

    def contains(self, x) -> bool:
        return self.lo <= x <= self.hi

    def encloses(self, other: "RI") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def intersects(self, other: "RI") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    # -- arithmetic --------------------------------------------------------

    @cython.ccall
    def add(self, o: "RI") -> "RI":
        return _ri(_dn(self.lo + o.lo), _up(self.hi + o.hi))

    @cython.ccall
    def add_scalar(self, x: cython.double) -> "RI":
        return _ri(_dn(self.lo + x), _up(self.hi + x))

    @cython.ccall
    def sub(self, o: "RI") -> "RI":
        return _ri(_dn(self.lo - o.hi), _up(self.hi - o.lo))

    @cython.ccall
    def neg(self) -> "RI":
        return _ri(-self.hi, -self.lo)

    @cython.ccall
    def mul(self, o: "RI") -> "RI":
        p1: cython.double = self.lo * o.lo
        p2: cython.double = self.lo * o.hi
        p3: cython.double = self.hi * o.lo
        p4: cython.double = self.hi * o.hi
        lo: cython.double = min(min(p1, p2), min(p3, p4))
        hi: cython.double = max(max(p1, p2), max(p3, p4))
        return _ri(_dn(lo), _up(hi))

    @cython.ccall
    def mul_scalar(self, x: cython.double) -> "RI":
        a: cython.double = self.lo * x
        b: cython.double = self.hi * x
        if a <= b:
            return _ri(_dn(a), _up(b))
        return _ri(_dn(b), _up(a))

    @cython.ccall
    def div(self, o: "RI") -> "RI":
        if o.lo <= 0.0 <= o.hi:
            raise DivisionByIntervalContainingZero(f"0 in divisor [{o.lo}, {o.hi}]")
        q1: cython.double = self.lo / o.lo
        q2: cython.double = self.lo / o.hi
        q3: cython.double = self.hi / o.lo
        q4: cython.double = self.hi / o.hi
        lo: cython.double = min(min(q1, q2), min(q3, q4))
        hi: cython.double = max(max(q1, q2), max(q3, q4))
        return _ri(_dn(lo), _up(hi))

    @cython.ccall
    def sqr(self) -> "RI":
        a: cython.double
        b: cython.double
        if self.lo >= 0.0:
            a = self.lo * self.lo
            b = self.hi * self.hi
        elif self.hi <= 0.0:
            a = self.hi * self.hi
            b = self.lo * self.lo
        else:
            a = 0.0
            p: cython.double = self.lo * self.lo
            q: cython.double = self.hi * self.hi
            b = p if p > q else q
            return _ri(0.0, _up(b))
        return _ri(_dn(a), _up(b))

    @cython.ccall
    def sqrt(self) -> "RI":
        if self.lo < 0.0:
            raise DomainViolation(f"sqrt of [{self.lo}, {self.hi}]")
        return _ri(max(_dn(sqrt(self.lo)), 0.0), _up(sqrt(self.hi)))

    @cython.ccall
    def sqrt_clamped(self) -> "RI":
        """sqrt with the radicand floored at 0 (absorbs endpoint roundoff)."""
        if self.hi < 0.0:
            raise DomainViolation(f"sqrt_clamped of [{self.lo}, {self.hi}]")
        lo: cython.double = self.lo if self.lo > 0.0 else 0.0
        return _ri(max(_dn(sqrt(lo)), 0.0), _up(sqrt(self.hi)))

    @cython.ccall
    def exp(self) -> "RI":
        return _ri(max(_dn2(exp(self.lo)), 0.0), _up2(exp(self.hi)))

    @cython.ccall
    def log(self) -> "RI":
        if self.lo <= 0.0:
            raise DomainViolation(f"log of [{self.lo}, {self.hi}]")
        return _ri(_dn2(log(self.lo)), _up2(log(self.hi)))

    @cython.ccall
    def atan(self) -> "RI":
        return _ri(_dn2(atan(self.lo)), _up2(atan(self.hi)))

    @cython.ccall
    def asin(self) -> "RI":
        if self.lo < -1.0 or self.hi > 1.0:
            raise DomainViolation(f"asin of [{self.lo}, {self.hi}]")
        return _ri(max(_dn2(asin(self.lo)), -PI_HI), min(_up2(asin(self.hi)), PI_HI))

    @cython.ccall
    def acos(self) -> "RI":
        if self.lo < -1.0 or self.hi > 1.0:
            raise DomainViolation(f"acos of [{self.lo}, {self.hi}]")
        return _ri(max(_dn2(acos(self.hi)), 0.0), _up2(acos(self.lo)))

    @cython.ccall
    def sin(self) -> "RI":
        return _sin_enc(self.lo, self.hi)

    @cython.ccall
    def cos(self) -> "RI":
        return _cos_enc(self.lo, self.hi)

    @cython.ccall
    def abs(self) -> "RI":
        if self.lo >= 0.0:
            return _ri(self.lo, self.hi)
        if self.hi <= 0.0:
            return _ri(-self.hi, -self.lo)
        m: cython.double = -self.lo
        if self.hi > m:
            m = self.hi
        return _ri(0.0, m)

    @cython.ccall
    def pow_ri(self, s: "RI") -> "RI":
        """x**s for x > 0, via exp(s * log x)."""
        return self.log().mul(s).exp()

    @cython.ccall
    def intersect(self, o: "RI") -> "RI":
        lo: cython.double = self.lo if self.lo > o.lo else o.lo
        hi: cython.double = self.hi if self.hi < o.hi else o.hi
        if lo > hi:
            raise DomainViolation("empty intersection")
        return _ri(lo, hi)

    @cython.ccall
    def hull(self, o: "RI") -> "RI":
        return _ri(min(self.lo, o.lo), max(self.hi, o.hi))

    # -- operators (convenience layer; hot paths call methods directly) -----

    def _coerce(self, other):
        if isinstance(other, RI):
            return other
        if isinstance(other, (int, float)):
            return _ri(other, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else self.add(o)

    def __radd__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else o.add(self)

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else self.sub(o)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else o.sub(self)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else self.mul(o)

    def __rmul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else o.mul(self)

    def __truediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else self.div(o)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else o.div(self)

    def __neg__(self):
        return self.neg()


@cython.cfunc
@cython.inline
def _ri(lo: cython.double, hi: cython.double) -> RI:
    r: RI = RI.__new__(RI)
    r.lo = lo
    r.hi = hi
    return r


def ri(lo, hi=None) -> RI:
    """Public constructor (validates endpoint order)."""
    return RI(lo, hi)


@cython.cfunc
def _sin_enc(lo: cython.double, hi: cython.double) -> RI:
    if hi - lo >= 6.5:
        return _ri(-1.0, 1.0)
    slo: cython.double = sin(lo)
    shi: cython.double = sin(hi)
    mn: cython.double = _dn2(min(slo, shi))
    mx: cython.double = _up2(max(slo, shi))
    # critical points pi/2 + k*pi; even k -> +1, odd k -> -1
    k0: cython.long = cython.cast(cython.long, floor(lo / pi - 0.5)) - 1
    k1: cython.long = cython.cast(cython.long, floor(hi / pi - 0.5)) + 2
    k: cython.long
    for k in range(k0, k1 + 1):
        m: cython.double = k + 0.5
        a: cython.double = m * PI_LO
        b: cython.double = m * PI_HI
        cl: cython.double = _dn(min(a, b))
        ch: cython.double = _up(max(a, b))
        if ch >= lo and cl <= hi:
            if (k & 1) == 0:
                mx = 1.0
            else:
                mn = -1.0
    return _ri(max(mn, -1.0), min(mx, 1.0))


@cython.cfunc
def _cos_enc(lo: cython.double, hi: cython.double) -> RI:
    if hi - lo >= 6.5:
        return _ri(-1.0, 1.0)
    clo: cython.double = cos(lo)
    chi: cython.double = cos(hi)
    mn: cython.double = _dn2(min(clo, chi))
    mx: cython.double = _up2(max(clo, chi))
    # critical points k*pi; even k -> +1, odd k -> -1
    k0: cython.long = cython.cast(cython.long, floor(lo / pi)) - 1
    k1: cython.long = cython.cast(cython.long, floor(hi / pi)) + 2
    k: cython.long
    for k in range(k0, k1 + 1):
        m: cython.double = k
        a: cython.double = m * PI_LO
        b: cython.double = m * PI_HI
        cl: cython.double = _dn(min(a, b))
        ch: cython.double = _up(max(a, b))
        if k == 0:
            cl = 0.0
            ch = 0.0
        if ch >= lo and cl <= hi:
            if (k & 1) == 0:
                mx = 1.0
            else:
                mn = -1.0
    return _ri(max(mn, -1.0), min(mx, 1.0))


# ---------------------------------------------------------------------------
# Complex boxes (axis-aligned rectangles)
# ---------------------------------------------------------------------------

# branch side selectors for boxes touching the cut (-inf, 0]
SIDE_PRINCIPAL: cython.int = 0
SIDE_UPPER: cython.int = 1
SIDE_LOWER: cython.int = -1


@cython.cclass
class CB:
    """Axis-aligned rectangle {x + iy : x in [re_lo, re_hi], y in [im_lo, im_hi]}."""

    re_lo = cython.declare(cython.double, visibility="readonly")
    re_hi = cython.declare(cython.double, visibility="readonly")
    im_lo = cython.declare(cython.double, visibility="readonly")
    im_hi = cython.declare(cython.double, visibility="readonly")

    def __init__(self, re, im=0.0):
        if isinstance(re, RI):
            self.re_lo = re.lo
            self.re_hi = re.hi
        else:
            self.re_lo = re
            self.re_hi = re
        if isinstance(im, RI):
            self.im_lo = im.lo
            self.im_hi = im.hi
        else:
            self.im_lo = im
            self.im_hi = im
        if not (self.re_lo <= self.re_hi and self.im_lo <= self.im_hi):
            raise DomainViolation("invalid box")

    def __repr__(self):
        return f"CB([{self.re_lo!r},{self.re_hi!r}], [{self.im_lo!r},{self.im_hi!r}])"

    @property
    def re(self) -> RI:
        return _ri(self.re_lo, self.re_hi)

    @property
    def im(self) -> RI:
        return _ri(self.im_lo, self.im_hi)

    def mid(self) -> complex:
        return complex(0.5 * (self.re_lo + self.re_hi), 0.5 * (self.im_lo + self.im_hi))

    def contains(self, z) -> bool:
        z = complex(z)
        return self.re_lo <= z.real <= self.re_hi and self.im_lo <= z.imag <= self.im_hi

    def encloses(self, o: "CB") -> bool:
        return (self.re_lo <= o.re_lo and o.re_hi <= self.re_hi
                and self.im_lo <= o.im_lo and o.im_hi <= self.im_hi)

    @cython.ccall
    def contains_zero(self) -> cython.bint:
        return self.re_lo <= 0.0 <= self.re_hi and self.im_lo <= 0.0 <= self.im_hi

    @property
    def width(self) -> float:
        return max(self.re_hi - self.re_lo, self.im_hi - self.im_lo)

    # -- arithmetic --------------------------------------------------------

    @cython.ccall
    def add(self, o: "CB") -> "CB":
        return _cb(_dn(self.re_lo + o.re_lo), _up(self.re_hi + o.re_hi),
                   _dn(self.im_lo + o.im_lo), _up(self.im_hi + o.im_hi))

    @cython.ccall
    def sub(self, o: "CB") -> "CB":
        return _cb(_dn(self.re_lo - o.re_hi), _up(self.re_hi - o.re_lo),
                   _dn(self.im_lo - o.im_hi), _up(self.im_hi - o.im_lo))

    @cython.ccall
    def neg(self) -> "CB":
        return _cb(-self.re_hi, -self.re_lo, -self.im_hi, -self.im_lo)

    @cython.ccall
    def conj(self) -> "CB":
        return _cb(self.re_lo, self.re_hi, -self.im_hi, -self.im_lo)

    @cython.ccall
    def add_scalar(self, x: cython.double) -> "CB":
        return _cb(_dn(self.re_lo + x), _up(self.re_hi + x), self.im_lo, self.im_hi)

    @cython.ccall
    def add_ri(self, r: RI) -> "CB":
        return _cb(_dn(self.re_lo + r.lo), _up(self.re_hi + r.hi), self.im_lo, self.im_hi)

    @cython.ccall
    def scale(self, r: RI) -> "CB":
        a: RI = _mul_ep(self.re_lo, self.re_hi, r.lo, r.hi)
        b: RI = _mul_ep(self.im_lo, self.im_hi, r.lo, r.hi)
        return _cb(a.lo, a.hi, b.lo, b.hi)

    @cython.ccall
    def mul(self, o: "CB") -> "CB":
        ac: RI = _mul_ep(self.re_lo, self.re_hi, o.re_lo, o.re_hi)
        bd: RI = _mul_ep(self.im_lo, self.im_hi, o.im_lo, o.im_hi)
        ad: RI = _mul_ep(self.re_lo, self.re_hi, o.im_lo, o.im_hi)
        bc: RI = _mul_ep(self.im_lo, self.im_hi, o.re_lo, o.re_hi)
        return _cb(_dn(ac.lo - bd.hi), _up(ac.hi - bd.lo),
                   _dn(ad.lo + bc.lo), _up(ad.hi + bc.hi))

    @cython.ccall
    def sqrc(self) -> "CB":
        """Tighter z*z (uses x^2, y^2 instead of the generic product)."""
        x2: RI = _sqr_ep(self.re_lo, self.re_hi)
        y2: RI = _sqr_ep(self.im_lo, self.im_hi)
        xy: RI = _mul_ep(self.re_lo, self.re_hi, self.im_lo, self.im_hi)
        return _cb(_dn(x2.lo - y2.hi), _up(x2.hi - y2.lo),
                   _dn(xy.lo + xy.lo), _up(xy.hi + xy.hi))

    @cython.ccall
    def div(self, o: "CB") -> "CB":
        d2: RI = _sqr_ep(o.re_lo, o.re_hi).add(_sqr_ep(o.im_lo, o.im_hi))
        if d2.lo <= 0.0:
            raise DivisionByBoxContainingZero("0 in divisor box")
        ac: RI = _mul_ep(self.re_lo, self.re_hi, o.re_lo, o.re_hi)
        bd: RI = _mul_ep(self.im_lo, self.im_hi, o.im_lo, o.im_hi)
        bc: RI = _mul_ep(self.im_lo, self.im_hi, o.re_lo, o.re_hi)
        ad: RI = _mul_ep(self.re_lo, self.re_hi, o.im_lo, o.im_hi)
        nre: RI = ac.add(bd)
        nim: RI = _ri(_dn(bc.lo - ad.hi), _up(bc.hi - ad.lo))
        rre: RI = nre.div(d2)
        rim: RI = nim.div(d2)
        return _cb(rre.lo, rre.hi, rim.lo, rim.hi)

    @cython.ccall
    def recip(self) -> "CB":
        return _ONE_CB.div(self)

    # -- modulus / argument / branch functions ------------------------------

    @cython.ccall
    def abs(self) -> RI:
        dx: cython.double = 0.0
        if self.re_lo > 0.0:
            dx = self.re_lo
        elif self.re_hi < 0.0:
            dx = -self.re_hi
        dy: cython.double = 0.0
        if self.im_lo > 0.0:
            dy = self.im_lo
        elif self.im_hi < 0.0:
            dy = -self.im_hi
        mx: cython.double = max(-self.re_lo, self.re_hi)
        my: cython.double = max(-self.im_lo, self.im_hi)
        lo: cython.double = 0.0
        ssq: cython.double = _dn2(dx * dx + dy * dy)
        if ssq > 0.0:
            lo = max(_dn(sqrt(ssq)), 0.0)
        hi: cython.double = _up(sqrt(_up2(mx * mx + my * my)))
        return _ri(lo, hi)

    @cython.ccall
    def arg(self, side: cython.int = 0) -> RI:
        """Argument range over the box; principal branch cut along (-inf, 0].

        side=+1/-1 evaluates the upper/lower closure on the cut (used for
        two-sided hulls); side=0 raises ArgBranchCutStraddle when the box
        meets the cut other than from above.
        """
        if self.contains_zero():
            raise ArgBranchCutStraddle("box contains 0")
        if side == 0:
            if self.re_hi < 0.0:
                if self.im_lo == 0.0 and self.im_hi == 0.0:
                    return _ri(PI_LO, PI_HI)
                if self.im_lo < 0.0 <= self.im_hi:
                    raise ArgBranchCutStraddle("box straddles (-inf, 0]")
                if self.im_hi == 0.0:
                    # touching from below: the edge itself has argument +pi
                    raise ArgBranchCutStraddle("box touches (-inf, 0] from below")
        elif side == 1:
            if self.im_lo < 0.0:
                raise ArgBranchCutStraddle("upper-side arg needs im >= 0")
        else:
            if self.im_hi > 0.0:
                raise ArgBranchCutStraddle("lower-side arg needs im <= 0")
        a1: cython.double = _corner_arg(self.re_lo, self.im_lo, side)
        a2: cython.double = _corner_arg(self.re_lo, self.im_hi, side)
        a3: cython.double = _corner_arg(self.re_hi, self.im_lo, side)
        a4: cython.double = _corner_arg(self.re_hi, self.im_hi, side)
        lo: cython.double = min(min(a1, a2), min(a3, a4))
        hi: cython.double = max(max(a1, a2), max(a3, a4))
        return _ri(max(_dn2(lo), -PI_HI), min(_up2(hi), PI_HI))

    @cython.ccall
    def absarg(self) -> RI:
        """|arg| range; tolerates boxes straddling the cut (|arg| is continuous
        there), still rejects boxes containing 0."""
        if self.contains_zero():
            raise ArgBranchCutStraddle("box contains 0")
        if self.re_hi < 0.0 and (self.im_lo < 0.0 <= self.im_hi or self.im_hi == 0.0):
            a1: cython.double = abs(atan2(self.im_lo, self.re_lo))
            a2: cython.double = abs(atan2(self.im_lo, self.re_hi))
            a3: cython.double = abs(atan2(self.im_hi, self.re_lo))
            a4: cython.double = abs(atan2(self.im_hi, self.re_hi))
            lo: cython.double = min(min(a1, a2), min(a3, a4))
            return _ri(max(_dn2(lo), 0.0), PI_HI)
        r: RI = self.arg(0)
        return r.abs()

    @cython.ccall
    def clog(self, side: cython.int = 0) -> "CB":
        m: RI = self.abs()
        if m.lo <= 0.0:
            raise ArgBranchCutStraddle("log: box not separated from 0")
        th: RI = self.arg(side)
        lg: RI = m.log()
        return _cb(lg.lo, lg.hi, th.lo, th.hi)

    @cython.ccall
    def cexp(self) -> "CB":
        er: RI = _ri(self.re_lo, self.re_hi).exp()
        c: RI = _cos_enc(self.im_lo, self.im_hi)
        s: RI = _sin_enc(self.im_lo, self.im_hi)
        a: RI = er.mul(c)
        b: RI = er.mul(s)
        return _cb(a.lo, a.hi, b.lo, b.hi)

    @cython.ccall
    def csqrt(self, hull_on_cut: cython.bint = False) -> "CB":
        """Principal square root (Re >= 0).  With hull_on_cut, boxes meeting
        the cut (or containing 0) return the hull of both branch closures."""
        try:
            th: RI = self.arg(0)
        except BranchCutStraddle:
            if not hull_on_cut:
                raise
            m: RI = self.abs()
            s: cython.double = _up(sqrt(m.hi))
            return _cb(0.0, s, -s, s)
        h: RI = _ri(th.lo * 0.5, th.hi * 0.5)
        r: RI = self.abs().sqrt()
        c: RI = r.mul(h.cos())
        s2: RI = r.mul(h.sin())
        return _cb(max(c.lo, 0.0), c.hi, s2.lo, s2.hi)

    @cython.ccall
    def cpow_ri(self, s: RI, side: cython.int = 0) -> "CB":
        """z**s for real interval exponent s, principal branch (or one side)."""
        lg: CB = self.clog(side)
        return lg.scale(s).cexp()

    @cython.ccall
    def hull(self, o: "CB") -> "CB":
        return _cb(min(self.re_lo, o.re_lo), max(self.re_hi, o.re_hi),
                   min(self.im_lo, o.im_lo), max(self.im_hi, o.im_hi))

    @cython.ccall
    def intersect(self, o: "CB") -> "CB":
        rl: cython.double = max(self.re_lo, o.re_lo)
        rh: cython.double = min(self.re_hi, o.re_hi)
        il: cython.double = max(self.im_lo, o.im_lo)
        ih: cython.double = min(self.im_hi, o.im_hi)
        if rl > rh or il > ih:
            raise DomainViolation("empty box intersection")
        return _cb(rl, rh, il, ih)

    # -- operators ----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CB):
            return other
        if isinstance(other, RI):
            return _cb(other.lo, other.hi, 0.0, 0.0)
        if isinstance(other, complex):
            return _cb(other.real, other.real, other.imag, other.imag)
        if isinstance(other, (int, float)):
            return _cb(other, other, 0.0, 0.0)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else self.add(o)

    def __radd__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else o.add(self)

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else self.sub(o)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else o.sub(self)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else self.mul(o)

    def __rmul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else o.mul(self)

    def __truediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else self.div(o)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else o.div(self)

    def __neg__(self):
        return self.neg()


@cython.cfunc
@cython.inline
def _cb(rl: cython.double, rh: cython.double, il: cython.double, ih: cython.double) -> CB:
    z: CB = CB.__new__(CB)
    z.re_lo = rl
    z.re_hi = rh
    z.im_lo = il
    z.im_hi = ih
    return z


def cb(re, im=0.0) -> CB:
    return CB(re, im)


_ONE_CB = CB(1.0, 0.0)


@cython.cfunc
def _mul_ep(alo: cython.double, ahi: cython.double,
            blo: cython.double, bhi: cython.double) -> RI:
    p1: cython.double = alo * blo
    p2: cython.double = alo * bhi
    p3: cython.double = ahi * blo
    p4: cython.double = ahi * bhi
    lo: cython.double = min(min(p1, p2), min(p3, p4))
    hi: cython.double = max(max(p1, p2), max(p3, p4))
    return _ri(_dn(lo), _up(hi))


@cython.cfunc
def _sqr_ep(lo: cython.double, hi: cython.double) -> RI:
    if lo >= 0.0:
        return _ri(_dn(lo * lo), _up(hi * hi))
    if hi <= 0.0:
        return _ri(_dn(hi * hi), _up(lo * lo))
    p: cython.double = lo * lo
    q: cython.double = hi * hi
    return _ri(0.0, _up(max(p, q)))


@cython.cfunc
@cython.inline
def _corner_arg(x: cython.double, y: cython.double, side: cython.int) -> cython.double:
    if y == 0.0 and x < 0.0:
        return -pi if side == -1 else pi
    return atan2(y, x)


# ---------------------------------------------------------------------------
# Fused evaluator for the model map Q = -tau / P(psi12(psi11(.)))
# ---------------------------------------------------------------------------

@cython.cclass
class QKernel:
    """Holds validated enclosures of the map constants and evaluates the
    composition (and its first derivative) on complex boxes.

    Boxes whose Moebius image straddles the branch cut are evaluated on both
    sides and hulled, which matches the map's one-sided limits across the
    upper unit circle.
    """

    sigma = cython.declare(RI, visibility="readonly")
    nu = cython.declare(RI, visibility="readonly")
    kappa = cython.declare(RI, visibility="readonly")
    tau = cython.declare(RI, visibility="readonly")
    mu = cython.declare(CB, visibility="readonly")
    inv_s = cython.declare(RI, visibility="readonly")
    inv_2ms = cython.declare(RI, visibility="readonly")
    nsig = cython.declare(RI, visibility="readonly")
    # c1: quadratic coefficient 2*sqrt(5)/3 of the inner polynomial
    c1 = cython.declare(RI, visibility="readonly")
    kio = cython.declare(CB, visibility="readonly")      # kappa * i
    tau_c = cython.declare(CB, visibility="readonly")
    two_kio = cython.declare(CB, visibility="readonly")
    # ring roots of the inner quadratic: 1 + c1 z + z^2 = (z - rp)(z - rm)
    root_p = cython.declare(CB, visibility="readonly")
    root_m = cython.declare(CB, visibility="readonly")

    def __init__(self, sigma: RI, nu: RI, kappa: RI, tau: RI, mu: CB, c1: RI):
        self.sigma = sigma
        self.nu = nu
        self.kappa = kappa
        self.tau = tau
        self.mu = mu
        self.c1 = c1
        one: RI = _ri(1.0, 1.0)
        two: RI = _ri(2.0, 2.0)
        self.inv_s = one.div(sigma)
        self.inv_2ms = one.div(two.sub(sigma))
        self.nsig = sigma.neg()
        self.kio = _cb(0.0, 0.0, kappa.lo, kappa.hi)
        self.tau_c = _cb(tau.lo, tau.hi, 0.0, 0.0)
        self.two_kio = _cb(0.0, 0.0, _dn(2.0 * kappa.lo), _up(2.0 * kappa.hi))
        half_c1: RI = c1.mul_scalar(0.5)
        self.root_p = _cb(-half_c1.hi, -half_c1.lo, _dn(2.0 / 3.0), _up(2.0 / 3.0))
        self.root_m = _cb(-half_c1.hi, -half_c1.lo, -_up(2.0 / 3.0), -_dn(2.0 / 3.0))

    @cython.ccall
    def psi11(self, z: CB) -> CB:
        return self.kio.mul(z.add_scalar(-1.0).div(z.add_scalar(1.0)))

    @cython.ccall
    def psi11_d1(self, z: CB) -> CB:
        d: CB = z.add_scalar(1.0)
        return self.two_kio.div(d.mul(d))

    @cython.ccall
    def psi12(self, z: CB, side: cython.int = 0) -> CB:
        zns: CB = z.cpow_ri(self.nsig, side)
        t: CB = z.sqrc().scale(self.inv_2ms).add_ri(self.inv_s)
        return self.mu.mul(zns).mul(t).add_ri(self.nu)

    @cython.ccall
    def psi12_d1(self, z: CB, side: cython.int = 0) -> CB:
        zns: CB = z.cpow_ri(self.nsig, side)
        t: CB = z.sub(z.recip())
        return self.mu.mul(zns).mul(t)

    @cython.cfunc
    def _u(self, z: CB) -> CB:
        """1 + c1 z + z^2, intersected with the factored form through the
        ring roots (kills the cancellation blow-up near them)."""
        ua: CB = z.sqrc().add(z.scale(self.c1)).add_scalar(1.0)
        uf: CB = z.sub(self.root_p).mul(z.sub(self.root_m))
        return ua.intersect(uf)

    @cython.ccall
    def p(self, z: CB) -> CB:
        u: CB = self._u(z)
        return z.mul(u.mul(u))

    @cython.ccall
    def p_d1(self, z: CB) -> CB:
        u: CB = self._u(z)
        du: CB = z.add(z).add_ri(self.c1)
        zdu: CB = z.mul(du)
        return u.mul(u.add(zdu).add(zdu))

    @cython.ccall
    def q(self, z: CB, hull_on_cut: cython.bint = True) -> CB:
        w1: CB = self.psi11(z)
        try:
            return self._q_tail(w1, 0)
        except BranchCutStraddle:
            if not hull_on_cut:
                raise
            lo_b: CB
            hi_b: CB
            hi_b, lo_b = _split_at_cut(w1)
            return self._q_tail(hi_b, 1).hull(self._q_tail(lo_b, -1))

    @cython.ccall
    def q_pieces(self, z: CB):
        """Q on the box as one or two branch pieces.  On boxes meeting the
        branch locus the one-sided closures come back separately, so real
        wrappers (|.|, Re, arg, ...) can be hulled per piece; a rectangle
        hull of the two values would spuriously widen them."""
        w1: CB = self.psi11(z)
        try:
            return (self._q_tail(w1, 0),)
        except BranchCutStraddle:
            hi_b, lo_b = _split_at_cut(w1)
            return (self._q_tail(hi_b, 1), self._q_tail(lo_b, -1))

    @cython.ccall
    def q_d1_pieces(self, z: CB):
        """(Q, Q') pairs per branch piece, as in q_pieces."""
        w1: CB = self.psi11(z)
        d1: CB = self.psi11_d1(z)
        try:
            return (self._q_d1_tail(w1, d1, 0),)
        except BranchCutStraddle:
            hi_b, lo_b = _split_at_cut(w1)
            return (self._q_d1_tail(hi_b, d1, 1), self._q_d1_tail(lo_b, d1, -1))

    @cython.cfunc
    def _q_tail(self, w1: CB, side: cython.int) -> CB:
        w2: CB = self.psi12(w1, side)
        w3: CB = self.p(w2)
        return self.tau_c.div(w3).neg()

    @cython.ccall
    def q_d1(self, z: CB, hull_on_cut: cython.bint = True):
        """Returns (Q(z), Q'(z)) as a tuple of boxes."""
        w1: CB = self.psi11(z)
        d1: CB = self.psi11_d1(z)
        try:
            return self._q_d1_tail(w1, d1, 0)
        except BranchCutStraddle:
            if not hull_on_cut:
                raise
            hi_b, lo_b = _split_at_cut(w1)
            qa, da = self._q_d1_tail(hi_b, d1, 1)
            qb, db = self._q_d1_tail(lo_b, d1, -1)
            return qa.hull(qb), da.hull(db)

    @cython.cfunc
    def _q_d1_tail(self, w1: CB, d1: CB, side: cython.int):
        zns: CB = w1.cpow_ri(self.nsig, side)
        t: CB = w1.sqrc().scale(self.inv_2ms).add_ri(self.inv_s)
        mz: CB = self.mu.mul(zns)
        w2: CB = mz.mul(t).add_ri(self.nu)
        d2: CB = mz.mul(w1.sub(w1.recip()))
        w3: CB = self.p(w2)
        d3: CB = self.p_d1(w2).mul(d2).mul(d1)
        qv: CB = self.tau_c.div(w3).neg()
        qd: CB = qv.neg().mul(d3).div(w3)
        return qv, qd


@cython.cfunc
def _split_at_cut(w: CB):
    """Split a box that straddles the cut into its closed upper and lower
    halves.  Requires the box to be strictly left of 0."""
    if w.re_hi >= 0.0 or w.contains_zero():
        raise BranchCutStraddle("cannot hull a box meeting 0 or the right half plane")
    upper: CB = _cb(w.re_lo, w.re_hi, max(w.im_lo, 0.0), max(w.im_hi, 0.0))
    lower: CB = _cb(w.re_lo, w.re_hi, min(w.im_lo, 0.0), min(w.im_hi, 0.0))
    return upper, lower
