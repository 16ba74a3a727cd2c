"""Map evaluators: fixed values, the oracle composition identity, expansion
consistency, and derivative consistency."""

import math
import random

import mpmath as mp

from paraq import maps
from paraq.backend import kern
from paraq.interval import ComplexBox, RealInterval, point, box, cpoint
from oracle import oracle, in_cb, in_ri

mp.mp.dps = 50


def test_p_fixed_values(table):
    assert maps.eval_P(table, box(0.0)).contains(0.0)
    v = maps.eval_P(table, cpoint(-1.0 / math.sqrt(5.0)))
    assert in_cb(-64 / (225 * mp.sqrt(5)), v)
    assert maps.eval_P(table, table.c_plus).contains(0.0)


def test_p_factored_vs_expanded(table):
    rng = random.Random(3)
    for _ in range(200):
        z = cpoint(complex(rng.uniform(-3, 3), rng.uniform(-3, 3)))
        a = maps.eval_P(table, z)
        b = maps.eval_P_expanded(table, z)
        assert a.re.intersects(b.re) and a.im.intersects(b.im)


def test_p_derivatives_at_zero(table):
    assert maps.eval_P_derivs(table, box(0.0), 1).contains(1.0)
    d2 = maps.eval_P_derivs(table, box(0.0), 2)
    assert in_cb(8 * mp.sqrt(5) / 3, d2)
    d3 = maps.eval_P_derivs(table, box(0.0), 3)
    assert d3.contains(76.0 / 3.0)


def test_psi12_boundary_images(table):
    v = maps.eval_psi12(table, box(1.0))
    assert in_cb(mp.mpc(-mp.sqrt(5) / 3, -mp.mpf(2) / 3), v)
    ki = ComplexBox(point(0.0), table.kappa)
    assert maps.eval_psi12(table, ki).contains(0.0)
    v = maps.eval_psi12(table, cpoint(2j))
    assert v.im.contains(0.0)


def test_q_composition_identity_oracle(table):
    orc = oracle()
    rng = random.Random(11)
    tested = 0
    while tested < 1000:
        r = rng.uniform(1.05, 40.0)
        th = rng.uniform(-math.pi, math.pi)
        z = complex(r * math.cos(th), r * math.sin(th))
        if abs(abs(z) - 1.0) < 0.02 or min(abs(z - 1), abs(z + 1)) < 0.05:
            continue
        try:
            enc = table.qk.q(cpoint(z), False)
        except kern.KernelError:
            continue
        assert in_cb(orc.q(mp.mpc(z.real, z.imag)), enc), z
        tested += 1


def test_expansion_consistency_far_field(table):
    # |Q - z - b0 - b1/z| = |b2|/|z|^2 + O(|z|^-3) with b2 = 23.734...
    z = cpoint(1e3)
    tail = (table.qk.q(z, False).sub(z)
            .add_ri(table.b0.neg())
            .sub(box(table.b1).div(z)))
    assert tail.abs().hi <= 30.0 * (1e3) ** -2
    assert tail.abs().lo >= 15.0 * (1e3) ** -2


def test_symmetry_enclosures(table):
    rng = random.Random(12)
    for _ in range(100):
        z = cpoint(complex(rng.uniform(1.5, 20), rng.uniform(-10, 10)))
        try:
            a = table.qk.q(z, False)
            b = table.qk.q(z.conj(), False).conj()
        except kern.KernelError:
            continue
        assert a.re.intersects(b.re) and a.im.intersects(b.im)


def test_derivative_consistency_finite_differences(table):
    rng = random.Random(13)
    h = 1e-6
    done = 0
    while done < 100:
        r = rng.uniform(2.0, 20.0)
        th = rng.uniform(-math.pi, math.pi)
        z = complex(r * math.cos(th), r * math.sin(th))
        if min(abs(z - 1), abs(z + 1)) < 0.1:
            continue
        try:
            d = maps.eval_Q_derivs(table, cpoint(z), 1).mid()
            q1 = table.qk.q(cpoint(z + h), False).mid()
            q2 = table.qk.q(cpoint(z - h), False).mid()
        except kern.KernelError:
            continue
        fd = (q1 - q2) / (2 * h)
        assert abs(fd - d) <= 1e-4 * max(1.0, abs(d)), z
        done += 1


def test_q_jet_higher_orders_vs_oracle(table):
    orc = oracle()
    z = mp.mpc(6.0, 2.0)
    jet = maps.q_jet(table, cpoint(complex(6.0, 2.0)))
    h = mp.mpf(10) ** -12
    vals = [orc.q(z + k * h) for k in (-2, -1, 0, 1, 2)]
    d2 = (vals[3] - 2 * vals[2] + vals[1]) / h ** 2
    d3 = (vals[4] - 2 * vals[3] + 2 * vals[1] - vals[0]) / (2 * h ** 3)
    enc2 = jet.derivative(2)
    enc3 = jet.derivative(3)
    assert abs(complex(enc2.mid()) - complex(float(d2.real), float(d2.imag))) < 1e-6
    assert abs(complex(enc3.mid()) - complex(float(d3.real), float(d3.imag))) < 1e-4


def test_critical_point_derivatives_vanish(table):
    cp = ComplexBox(table.cp, point(0.0))
    jet = maps.q_jet(table, cp)
    assert jet.derivative(1).contains(0.0)
    assert jet.derivative(2).contains(0.0)
    d3 = jet.derivative(3)
    assert not d3.contains(0.0)
    assert d3.im.contains(0.0)


def test_qhat_jet_matches_printed_forms(table):
    jet = maps.qhat_taylor(table, 4)
    assert jet.c[0].contains(0.0)
    assert jet.c[1].contains(1.0)
    b0 = jet.c[2].scale(table.tau).re
    assert b0.intersects(table.b0)
    b1 = jet.c[2].mul(jet.c[2]).sub(jet.c[3]).scale(table.tau.sqr()).re
    assert b1.intersects(table.b1)


def test_expansion_b2(table):
    b2 = maps.expansion_b2(table)
    assert 23.70 < b2.lo < b2.hi < 23.76
    assert b2.width < 1e-6


def test_zeta_map(table):
    a1 = maps.aE_r(table, point(1.0))
    b1 = maps.bE_r(table, point(1.0))
    assert a1.contains(1.057) and b1.contains(1.029)
    z1 = maps.eval_zeta_w(table, box(1.0))
    assert z1.contains(1.004)
    # on the boundary of E: (x - xE)/aE = 1
    t = z1.re.sub(table.x_e).div(table.a_e)
    assert t.contains(1.0)


def test_zeta_ellipse_residual(table):
    w = ComplexBox(point(1.25).mul(point(math.pi / 3).cos()),
                   point(1.25).mul(point(math.pi / 3).sin()))
    z = maps.eval_zeta_w(table, w)
    a = maps.aE_r(table, point(1.25))
    b = maps.bE_r(table, point(1.25))
    resid = (z.re.sub(table.e0).div(a)).sqr().add(z.im.div(b).sqr()).add_scalar(-1.0)
    assert resid.contains(0.0)


def test_zeta_inverse_roundtrip(table):
    rng = random.Random(14)
    for _ in range(50):
        w = cpoint(complex(rng.uniform(1.1, 3.0), rng.uniform(-2, 2)))
        z = maps.eval_zeta_w(table, w)
        back = maps.zeta_inverse(table, z)
        assert back.re.intersects(w.re) and back.im.intersects(w.im)


def test_phi_bound_family(table):
    fam = maps.bound_phi_family(table, point(13.0))
    assert fam["phi1max"].hi < fam["phi1max"].lo + 1e-10
    f27 = maps.bound_phi_family(table, point(2.7))["phi1max"]
    f54 = maps.bound_phi_family(table, point(5.4))["phi1max"]
    assert f54.hi < f27.lo        # monotone decreasing in r
    import pytest

    from paraq.interval import DomainViolation
    with pytest.raises(DomainViolation):
        maps.bound_phi_family(table, point(1.05))
