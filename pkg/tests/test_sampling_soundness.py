"""Verifier invariant: a dense float sampling of every optimization check's
objective stays on the correct side of the returned enclosure."""

import pytest

from paraq.curves import point_of
from paraq.explorer import FloatMaps
from paraq.functionals import Functional, float_value
from paraq.verifier import Budget, global_bound, MIN, MAX

N_SAMPLES = 10_000


@pytest.mark.slow
def test_dense_sampling_inside_enclosures(ledger):
    fm = FloatMaps.from_table(ledger.table)
    failures = []
    for spec in ledger.specs:
        if spec.objective not in (MIN, MAX):
            continue
        if not isinstance(spec.functional, Functional):
            continue            # scalar objectives are sampled interval-wise
        res = global_bound(spec.functional, spec.curve, spec.objective,
                           ledger.table, Budget())
        lo, hi = res.enclosure.lo, res.enclosure.hi
        slack = 1e-9 * max(1.0, abs(lo), abs(hi))
        c = spec.curve
        best = None
        for i in range(N_SAMPLES + 1):
            t = c.t0 + (c.t1 - c.t0) * i / N_SAMPLES
            try:
                v = float_value(spec.functional, point_of(c, t), fm)
            except Exception:
                continue
            if spec.objective == MIN:
                if v < lo - slack:
                    failures.append((spec.id, t, v, lo))
                    break
                best = v if best is None else min(best, v)
            else:
                if v > hi + slack:
                    failures.append((spec.id, t, v, hi))
                    break
                best = v if best is None else max(best, v)
        if best is None:
            failures.append((spec.id, None, None, None))
            continue
        # the dense extreme must come close to the certified optimum
        span = 0.01 * max(1.0, abs(best))
        if spec.objective == MIN and best > hi + span:
            failures.append((spec.id, "grid-min", best, hi))
        if spec.objective == MAX and best < lo - span:
            failures.append((spec.id, "grid-max", best, lo))
    assert not failures, failures
