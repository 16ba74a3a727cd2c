"""The standalone geometric lemmas."""

import math

import pytest

from paraq import geometry as G
from paraq.interval import point, ri, box, ComplexBox, RealInterval, cpoint


def test_symmetric_unit_circles():
    th1, th2 = G.circle_circle_unit_intersection(cpoint(1.0), point(1.0))
    # intersections at 1/2 +- sqrt(3)/2 i, i.e. angles -+ 2 pi/3 around center 1
    vals = sorted([th1.mid, th2.mid])
    assert abs(vals[0] + 2 * math.pi / 3) < 1e-12
    assert abs(vals[1] - 2 * math.pi / 3) < 1e-12


def test_a4_intersection_values(table):
    th1, th2 = G.circle_circle_unit_intersection(table.a4.conj(), table.eps4)
    pair = sorted([(th1.cos().mid, th1.sin().mid), (th2.cos().mid, th2.sin().mid)])
    (c1, s1), (c2, s2) = pair
    assert abs(c1 - (-0.8331)) < 1e-4 and abs(s1 - 0.5530) < 1e-4
    assert abs(c2 - 0.9913) < 1e-4 and abs(s2 - (-0.1311)) < 1e-4


def test_intersection_points_on_unit_circle(table):
    for center, radius in [(table.a4.conj(), table.eps4),
                           (table.a5.conj(), table.eps5),
                           (table.a6.conj(), table.eps6)]:
        th1, th2 = G.circle_circle_unit_intersection(center, radius)
        for th in (th1, th2):
            p = center.add(ComplexBox(radius.mul(th.cos()), radius.mul(th.sin())))
            assert p.abs().contains(1.0)


def test_no_intersection():
    with pytest.raises(G.NoIntersection):
        G.circle_circle_unit_intersection(cpoint(5.0), point(1.0))


def test_hyperbolic_disk_example():
    center, radius = G.halfplane_hyperbolic_disk(0.0, 1.0, 2.0, 0.5)
    assert center.contains(8.0 / 3.0)
    assert radius.contains(4.0 / 3.0)


def test_hyperbolic_disk_degenerates():
    center, radius = G.halfplane_hyperbolic_disk(0.3, 1.0, 4.0 + 1.0j, 0.0)
    assert center.contains(4.0 + 1.0j)
    assert radius.hi < 1e-12


def test_hyperbolic_disk_outside():
    with pytest.raises(G.PointOutsideHalfplane):
        G.halfplane_hyperbolic_disk(0.0, 5.0, 2.0, 0.5)


def test_arcsin_bound():
    assert G.arg_perturbation_bound(point(1.0), point(0.0)).hi < 1e-15
    r = G.arg_perturbation_bound(point(2.0), point(1.0))
    assert r.contains(math.asin(0.5))
    lin = G.arg_perturbation_linear(point(0.5))
    assert lin.lo <= math.asin(0.5) <= lin.hi * (math.pi / 3) / (math.pi / 3)
    with pytest.raises(G.RatioNotLessThanOne):
        G.arg_perturbation_bound(point(1.0), point(1.0))


def test_rep_fatou_window(table):
    r = G.arg_perturbation_bound(table.b0.sub(table.c00), table.c01max)
    assert 0.2900 <= r.lo and r.hi < 0.2901
    assert r.hi < math.pi / 10


def test_fatou_derivative_window(table, ledger):
    cache = ledger.cache
    abs_min = cache.evaluate("AbsDFmin(11.5, pi/5)")
    abs_max = cache.evaluate("AbsDFmax(11.5, pi/5)")
    arg_min = cache.evaluate("ArgDFmin(11.5, pi/5)")
    arg_max = cache.evaluate("ArgDFmax(11.5, pi/5)")
    log_df = cache.evaluate("LogDFmax(11.5)")
    (arg_lo, arg_hi), (abs_lo, abs_hi) = G.fatou_derivative_window(
        abs_min, abs_max, arg_min, arg_max, log_df, table.r4.mid)
    assert 0.7619 <= arg_hi.lo and arg_hi.hi < 0.7620
    assert -0.6261 < arg_lo.lo and arg_lo.hi < -0.6260
    assert 0.0670 <= abs_lo.lo and abs_hi.hi < 0.2757
    assert arg_hi.hi < math.pi / 4 and arg_lo.lo > -math.pi / 5


def test_ellipse_arc_in_disk(table):
    from paraq import maps

    a = maps.aE_r(table, table.r1)
    b = maps.bE_r(table, table.r1)

    def on_upper(x):
        xi = point(x)
        t = xi.sub(table.x_e).div(a)
        y = b.mul(point(1.0).sub(t.sqr()).sqrt_clamped())
        return ComplexBox(xi, y)

    z1 = on_upper(-1.05)
    z2 = on_upper(0.47)
    ok = G.ellipse_arc_in_disk(a, b, table.x_e, z1, z2, table.a4, table.eps4)
    assert ok
    degenerate = G.ellipse_arc_in_disk(a, b, table.x_e, z2, z2, table.a4, table.eps4)
    assert degenerate
    with pytest.raises(G.EndpointNotOnEllipse):
        G.ellipse_arc_in_disk(a, b, table.x_e, ComplexBox(point(0.0), point(0.5)),
                              z2, table.a4, table.eps4)


def test_tangency_data(table):
    td = G.tangency_data(table)
    assert td.sign_certificate.hi < 0.0
    assert -27.06 < td.sign_certificate.mid < -27.05
    # the corner point sits on the curve at height 2/3
    assert G.h_plus(td.corner_x).contains(2.0 / 3.0)
    # monotone difference-quotient trend into the corner
    mids = [q.mid for q in td.quotients]
    diffs = [abs(m - td.slope.mid) for m in mids]
    assert all(d2 < d1 for d1, d2 in zip(diffs, diffs[1:]))
    assert td.derivative_window.encloses(td.slope)


def test_theta1_sign_on_line(table):
    v = G.theta1_on_line(point(-1.0), table)
    assert v.hi < 0.0
    v2 = G.theta1_on_line(point(-5.0), table)
    assert v2.hi < 0.0


def test_h_branches_order(table):
    x = point(-1.2)
    assert G.h_minus(x).hi <= G.h_plus(x).lo + 1e-12
