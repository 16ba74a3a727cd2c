"""Standalone geometric lemmas: circle intersections, hyperbolic disks in a
half plane, argument perturbation bounds, the Fatou-derivative window, and
the tangency data of the polynomial's preimage curves."""

from dataclasses import dataclass

from .interval import RealInterval, ComplexBox, point, box, PI, DomainViolation


class NoIntersection(ValueError):
    pass


class PointOutsideHalfplane(ValueError):
    pass


class RatioNotLessThanOne(ValueError):
    pass


class EndpointNotOnEllipse(ValueError):
    pass


def circle_circle_unit_intersection(a: ComplexBox, r: RealInterval):
    """Intersection angles of the unit circle with the circle |z - a| = r:
    the two points are a + r e^{i theta_k}; returns (theta_1, theta_2).

    Uses the closed forms cos t = (alpha A -+ |beta| s)/|a|^2,
    sin t = (beta^2 A +- alpha |beta| s)/(beta |a|^2), s = sqrt(|a|^2 - A^2),
    A = (1 - |a|^2 - r^2)/(2 r); for real centers cos t = A/a.
    """
    alpha, beta = a.re, a.im
    a2 = alpha.sqr().add(beta.sqr())
    cap = point(1.0).sub(a2).sub(r.sqr()).div(r.mul_scalar(2.0))
    disc = a2.sub(cap.sqr())
    if disc.hi <= 0.0:
        raise NoIntersection("circles verified disjoint or tangent")
    s = disc.sqrt()
    if beta.contains(0.0):
        if not (beta.lo == 0.0 and beta.hi == 0.0):
            raise DomainViolation("center imaginary part must be signed or zero")
        cos_t = cap.div(alpha)
        sin_t = s.div(alpha)
        return (_angle(cos_t, sin_t.neg()), _angle(cos_t, sin_t))
    ab = beta.abs()
    cos1 = alpha.mul(cap).sub(ab.mul(s)).div(a2)
    cos2 = alpha.mul(cap).add(ab.mul(s)).div(a2)
    den = beta.mul(a2)
    sin1 = beta.sqr().mul(cap).add(alpha.mul(ab).mul(s)).div(den)
    sin2 = beta.sqr().mul(cap).sub(alpha.mul(ab).mul(s)).div(den)
    return (_angle(cos1, sin1), _angle(cos2, sin2))


def _angle(cos_t: RealInterval, sin_t: RealInterval) -> RealInterval:
    return ComplexBox(cos_t, sin_t).arg(0)


def halfplane_hyperbolic_disk(theta: float, t: float, z0: complex, r: float):
    """Euclidean parameters of the hyperbolic disk of radius log((1+r)/(1-r))
    around z0 in the half plane Re(z e^{-i theta}) > t."""
    th = point(theta)
    z0b = box(complex(z0).real, complex(z0).imag)
    e = ComplexBox(th.cos(), th.sin())
    u = z0b.mul(e.conj()).re.sub(point(t))
    if not u.lo > 0.0:
        raise PointOutsideHalfplane(f"Re(z0 e^-it) = {u.mid} not above {t}")
    rr = point(r)
    den = point(1.0).sub(rr.sqr())
    center = z0b.add(e.scale(u.mul(rr.sqr()).mul_scalar(2.0).div(den)))
    radius = u.mul(rr).mul_scalar(2.0).div(den)
    return center, radius


def arg_perturbation_bound(a_abs: RealInterval, b_abs: RealInterval) -> RealInterval:
    """arcsin(|b|/|a|), a bound for |arg(a+b) - arg a| when |b| < |a|."""
    ratio = b_abs.div(a_abs)
    if not ratio.hi < 1.0:
        raise RatioNotLessThanOne(f"|b|/|a| up to {ratio.hi}")
    return ratio.asin()


def arg_perturbation_linear(x: RealInterval) -> RealInterval:
    """The linear majorant (pi/3) x of arcsin on [0, 1/2]."""
    if x.hi > 0.5 or x.lo < 0.0:
        raise DomainViolation("linear arcsin bound needs x in [0, 1/2]")
    return x.mul(PI).mul_scalar(1.0 / 3.0)


def fatou_derivative_window(abs_df_min: RealInterval, abs_df_max: RealInterval,
                            arg_df_min: RealInterval, arg_df_max: RealInterval,
                            log_df: RealInterval, r: float):
    """Windows for arg Phi' and |Phi'| from the general Fatou-coordinate
    estimate |log Phi' + log(f(z)-z) - (1/2) log f'| <= (1/2) log 1/(1-r^2)."""
    if not (0.0 <= r < 1.0):
        raise DomainViolation("hyperbolic radius must lie in [0, 1)")
    rr = point(r)
    om = point(1.0).sub(rr.sqr())
    half_log = om.log().mul_scalar(0.5)
    half_df = log_df.mul_scalar(0.5)
    arg_lo = arg_df_max.neg().sub(half_df).add(half_log)
    arg_hi = arg_df_min.neg().add(half_df).sub(half_log)
    sq = om.sqrt()
    abs_lo = sq.div(abs_df_max.mul(half_df.exp()))
    abs_hi = half_df.exp().div(abs_df_min.mul(sq))
    return (arg_lo, arg_hi), (abs_lo, abs_hi)


def ellipse_arc_in_disk(a: RealInterval, b: RealInterval, x_center: RealInterval,
                        z1: ComplexBox, z2: ComplexBox, center: ComplexBox,
                        radius: RealInterval) -> bool:
    """Certifies that the upper-ellipse subarc between z1 and z2 lies in the
    disk: both endpoints are verified on the upper half-ellipse and strictly
    inside; the subarc then follows from convexity of the upper arc against
    disks centered in the closed upper half plane."""
    if center.im_lo < 0.0:
        raise DomainViolation("criterion needs Im center >= 0")
    for z in (z1, z2):
        if z.im_lo < 0.0:
            raise EndpointNotOnEllipse("endpoint below the axis")
        res = (z.re.sub(x_center).div(a)).sqr().add(z.im.div(b).sqr()).add_scalar(-1.0)
        if not res.contains(0.0):
            raise EndpointNotOnEllipse(f"ellipse residual {res.lo}..{res.hi}")
    for z in (z1, z2):
        if not z.sub(center).abs().hi < radius.lo:
            return False
    return True


# -- tangency of the preimage curves at the ring critical point ---------------

@dataclass(frozen=True)
class TangencyData:
    slope: RealInterval                 # -(3 + sqrt 5)/2
    corner_x: RealInterval              # -sqrt(5)/3
    sign_certificate: RealInterval      # 4 (sqrt 5 - 9) < 0
    quotients: tuple                    # one-sided difference quotients
    derivative_window: RealInterval


def _h_branch(x: RealInterval, plus: bool) -> RealInterval:
    """The two upper solutions y = h_{pm}(x) of Im P(x+iy) = 0."""
    s5 = point(5.0).sqrt()
    q1 = (x.sqr().mul_scalar(45.0)
          .add(s5.mul(x).mul_scalar(24.0)).add_scalar(19.0))
    inner = (x.sqr().mul_scalar(45.0)
             .add(s5.mul(x).mul_scalar(18.0)).add_scalar(14.0))
    cross = x.mul_scalar(3.0).add(s5).abs().mul(inner.sqrt()).mul_scalar(2.0)
    rad = q1.add(cross) if plus else q1.sub(cross)
    return rad.sqrt_clamped().mul_scalar(1.0 / 3.0)


def h_plus(x: RealInterval) -> RealInterval:
    return _h_branch(x, True)


def h_minus(x: RealInterval) -> RealInterval:
    return _h_branch(x, False)


def ell_plus(x: RealInterval, table) -> RealInterval:
    """The tangent half line through the ring critical point."""
    slope = point(3.0).add(table.sqrt5).mul_scalar(-0.5)
    return point(2.0 / 3.0).add(slope.mul(x.add(table.sqrt5.mul_scalar(1.0 / 3.0))))


def theta1_on_line(x: RealInterval, table) -> RealInterval:
    """Sign witness -(3/2)(x + sqrt5/3)^3 (3(13 + 9 sqrt5) x + 9 + 17 sqrt5)
    for Im P < 0 along the tangent line left of the corner."""
    s5 = table.sqrt5
    cube = x.add(s5.mul_scalar(1.0 / 3.0))
    cube = cube.mul(cube).mul(cube)
    lin = s5.mul_scalar(9.0).add_scalar(39.0).mul(x).add(s5.mul_scalar(17.0)).add_scalar(9.0)
    return cube.mul(lin).mul_scalar(-1.5)


def tangency_data(table) -> TangencyData:
    """One-sided tangency of the preimage curve at the ring critical point:
    difference quotients of h_+ walking into the corner bracket the slope
    -(3+sqrt5)/2, and the line-side sign certificate 4(sqrt5 - 9) < 0."""
    s5 = table.sqrt5
    corner = s5.mul_scalar(-1.0 / 3.0)
    slope = point(3.0).add(s5).mul_scalar(-0.5)
    cert = s5.sub(point(9.0)).mul_scalar(4.0)
    h0 = point(2.0 / 3.0)
    quotients = []
    for k in range(4, 9):
        step = 10.0 ** (-k)
        xk = corner.add_scalar(-step)
        q = h_plus(xk).sub(h0).div(xk.sub(corner))
        quotients.append(q)
    lo = min(q.lo for q in quotients)
    hi = max(q.hi for q in quotients)
    spread = abs(quotients[-1].mid - quotients[-2].mid)
    window = RealInterval(min(lo, quotients[-1].lo - 10.0 * spread),
                          max(hi, quotients[-1].hi + 10.0 * spread))
    return TangencyData(slope=slope, corner_x=corner, sign_certificate=cert,
                        quotients=tuple(quotients), derivative_window=window)
