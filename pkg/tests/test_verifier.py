"""The branch-and-bound engine: trivial optima, determinism, refinement
monotonicity, and the verdict logic."""

import math
import random

from paraq import curves, functionals as F
from paraq.interval import point, PI
from paraq.verifier import (Budget, CheckSpec, global_bound, run_check,
                            MIN, MAX, VERIFIED, REFUTED, INCONCLUSIVE)
from paraq.functionals import Functional, Z


def test_min_re_over_unit_circle(table):
    c = curves.CircleArc(0.0, point(1.0), 0.0, PI.mul_scalar(2.0).hi)
    res = global_bound(Functional(Z(), "re"), c, MIN, table, Budget())
    assert res.enclosure.lo <= -1.0 <= res.enclosure.hi
    assert res.enclosure.hi < -1.0 + 1e-6


def test_max_im_over_segment(table):
    c = curves.Segment(complex(0.0, -1.0), complex(0.0, 3.0))
    res = global_bound(Functional(Z(), "im"), c, MAX, table, Budget())
    assert res.enclosure.lo <= 3.0 <= res.enclosure.hi + 1e-12
    assert res.enclosure.lo > 3.0 - 4e-6       # relative 1e-6 budget at |3|


def test_determinism_bit_identical(table, ledger):
    spec = ledger.by_id("injective.min-re-qprime-4.8")
    r1 = global_bound(spec.functional, spec.curve, spec.objective, table, Budget())
    r2 = global_bound(spec.functional, spec.curve, spec.objective, table, Budget())
    assert (r1.enclosure.lo, r1.enclosure.hi) == (r2.enclosure.lo, r2.enclosure.hi)
    assert r1.subdivisions == r2.subdivisions
    assert r1.evals == r2.evals


def test_refinement_monotonicity_sampled(table, ledger):
    rng = random.Random(20260809)
    opt_specs = [s for s in ledger.specs if s.objective in (MIN, MAX)]
    # exclude the two most expensive circles to keep the suite quick; the
    # acceptance suite covers a 50-check sample
    cheap = [s for s in opt_specs if "cqm" not in s.id]
    sample = rng.sample(cheap, 8)
    for spec in sample:
        base = global_bound(spec.functional, spec.curve, spec.objective, table,
                            Budget())
        fine = global_bound(spec.functional, spec.curve, spec.objective, table,
                            Budget().scaled(depth_extra=2, width_factor=0.25))
        assert fine.enclosure.lo >= base.enclosure.lo - 1e-300, spec.id
        assert fine.enclosure.hi <= base.enclosure.hi + 1e-300, spec.id


def test_reversed_relation_refuted(table, ledger):
    cache = ledger.cache
    spec = ledger.by_id("injective.min-re-qprime-4.8")
    flipped = CheckSpec(id="x", group="x", paper_location="x",
                        objective=spec.objective, functional=spec.functional,
                        curve=spec.curve, relation="<", threshold="0")
    res = run_check(flipped, cache, table, Budget())
    assert res.status == REFUTED


def test_inconclusive_on_tiny_margin(table, ledger):
    cache = ledger.cache
    spec = ledger.by_id("injective.min-re-qprime-4.8")
    # threshold inside the enclosure -> cannot separate
    hug = CheckSpec(id="x2", group="x", paper_location="x",
                    objective=spec.objective, functional=spec.functional,
                    curve=spec.curve, relation=">", threshold="0.029254")
    res = run_check(hug, cache, table, Budget(max_depth=10))
    assert res.status in (INCONCLUSIVE, VERIFIED)


def test_value_check_flow(table, ledger):
    spec = ledger.by_id("prop-Phi.eta-geq")
    res = run_check(spec, ledger.cache, table, Budget())
    assert res.status == VERIFIED
    assert res.window_match == "MATCH"
    assert res.evals == 0


def test_point_curve_bound(table):
    from paraq.interval import ComplexBox

    c = curves.PointCurve(ComplexBox(table.cv, point(0.0)))
    res = global_bound(F.f_re_q(), c, MIN, table, Budget())
    assert res.enclosure.lo > 19.0
    assert res.subdivisions == 0


def test_budget_scaling():
    b = Budget(max_depth=48, target_width=1e-6, target_abs=1e-8, cap_abs=1e-7)
    s = b.scaled(depth_extra=48, width_factor=0.25)
    assert s.max_depth == 96
    assert s.target_width == 2.5e-7
    assert s.cap_abs == 2.5e-8
