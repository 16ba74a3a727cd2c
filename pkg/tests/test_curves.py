"""Curve-box and functional soundness: float samples along each curve must
land inside the returned enclosures; shrinking parameter windows nest."""

import math
import random

from paraq import curves, functionals as F
from paraq.backend import kern
from paraq.curves import point_of
from paraq.explorer import FloatMaps
from paraq.functionals import float_value
from paraq.interval import point, PI, ComplexBox, RealInterval


def _curve_pool(table):
    two_pi = PI.mul_scalar(2.0).hi
    return [
        curves.CircleArc(1.0, table.eps1, 0.0, two_pi),
        curves.CircleArc(table.c_q_minus, table.eps3, 0.0, two_pi),
        curves.CircleArc(0.0, point(4.8), 0.0, two_pi),
        curves.Segment(complex(2.0, 1.0), complex(5.0, -3.0)),
        curves.RayTruncated(ComplexBox(table.cp, point(0.0)),
                            PI.mul_scalar(0.3), 0.1, 0.8),
        curves.ZetaImageArc(table, point(1.0), -0.9, -0.1),
        curves.ZetaImageArc(table, point(1.25), -0.4, 0.4),
        curves.ZetaImageRadial(table, -0.4, 1.4, 1.54),
        curves.EllipseGraph(table, point(1.25), 1, -1.0, 0.9),
        curves.SegmentToCorner(table),
    ]


def test_curve_box_soundness(table):
    rng = random.Random(41)
    pool = _curve_pool(table)
    checks = 0
    while checks < 1000:
        c = rng.choice(pool)
        a = rng.uniform(c.t0, c.t1)
        b = rng.uniform(a, c.t1)
        enc = c.box(a, b)
        for _ in range(10):
            t = rng.uniform(a, b)
            z = point_of(c, t)
            assert (enc.re_lo - 1e-12 <= z.real <= enc.re_hi + 1e-12
                    and enc.im_lo - 1e-12 <= z.imag <= enc.im_hi + 1e-12), (type(c), t)
        checks += 1


def test_curve_box_nesting(table):
    rng = random.Random(42)
    pool = _curve_pool(table)
    for _ in range(300):
        c = rng.choice(pool)
        a = rng.uniform(c.t0, c.t1)
        b = rng.uniform(a, c.t1)
        m1 = a + 0.25 * (b - a)
        m2 = a + 0.75 * (b - a)
        outer = c.box(a, b)
        inner = c.box(m1, m2)
        assert outer.re_lo <= inner.re_lo + 1e-14 and inner.re_hi <= outer.re_hi + 1e-14
        assert outer.im_lo <= inner.im_lo + 1e-14 and inner.im_hi <= outer.im_hi + 1e-14


def test_functional_soundness(table):
    rng = random.Random(43)
    fm = FloatMaps.from_table(table)
    pool = _curve_pool(table)
    funcs = [F.f_abs_q(), F.f_re_q(), F.f_im_q(), F.f_re_sqrt_neg_q(),
             F.f_q2_tail(table), F.f_abs_z_minus(table.a5.conj())]
    done = 0
    while done < 400:
        c = rng.choice(pool)
        f = rng.choice(funcs)
        a = rng.uniform(c.t0, c.t1)
        b = min(rng.uniform(a, c.t1), a + 0.2 * (c.t1 - c.t0))
        try:
            enc, _sample = f.bound_on(c, a, b, table)
        except kern.KernelError:
            continue
        for _ in range(10):
            t = rng.uniform(a, b)
            try:
                v = float_value(f, point_of(c, t), fm)
            except Exception:
                continue
            slack = 1e-9 * max(1.0, abs(v))
            assert enc.lo - slack <= v <= enc.hi + slack, (type(c), f.wrap, t)
        done += 1


def test_point_curve_and_examples(table):
    c = curves.CircleArc(0.0, point(1.0), 0.0, 0.0)
    assert c.box(0.0, 0.0).contains(1.0)
    z_top = curves.ZetaImageArc(table, point(1.0), 0.5, 0.5).box(0.5, 0.5)
    # top of the ellipse: e0 + (e1 - e_-1) i
    assert z_top.re.contains(-0.053)
    assert z_top.im.contains(1.043 - 0.014)


def test_ellipse_graph_residual(table):
    g = curves.EllipseGraph(table, point(1.0), -1, -1.05, -1.05)
    z = g.box(-1.05, -1.05)
    resid = (z.re.sub(table.x_e).div(table.a_e)).sqr().add(
        z.im.div(table.b_e).sqr()).add_scalar(-1.0)
    assert resid.contains(0.0)


def test_explicit_graph_formulas(table):
    import math
    import pytest

    corner = -math.sqrt(5.0) / 3.0
    g = curves.ExplicitGraph(table, "h_plus", corner - 1.0, corner)
    z = g.box(corner, corner)
    assert z.im.contains(2.0 / 3.0)        # the graph passes through the corner
    line = curves.ExplicitGraph(table, "ell_plus", corner - 1.0, corner)
    zl = line.box(corner, corner)
    assert zl.im.contains(2.0 / 3.0)
    # the tangent line sits strictly below the curve branch left of the corner
    x = corner - 0.5
    assert line.box(x, x).im_hi < g.box(x, x).im_lo
    hm = curves.ExplicitGraph(table, "h_minus", -1.4, -1.2)
    assert hm.box(-1.3, -1.3).im_hi < g.box(-1.3, -1.3).im_lo
    with pytest.raises(ValueError):
        curves.ExplicitGraph(table, "nope", 0.0, 1.0)
    assert abs(point_of(g, x).imag - g.box(x, x).im.mid) < 1e-12
