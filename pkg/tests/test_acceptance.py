"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Criterion 3/4 run the full ledger twice (sequentially and with a worker
pool) and require byte-identical reports; these are the slow tests of the
suite."""

import cmath
import json
import math
import random
import time

import mpmath as mp
import pytest

from paraq.verifier import Budget, run_check, global_bound, MIN, MAX
from oracle import oracle, in_ri

mp.mp.dps = 50


def _report(flag, name, detail=""):
    print(f"\n[{'PASS' if flag else 'FAIL'}] {name} {detail}")
    assert flag, f"{name}: {detail}"


# -- criterion 1: constants reproduction --------------------------------------

def test_criterion_1_constants():
    from paraq import constants

    constants.assemble_constants.cache_clear()
    t0 = time.perf_counter()
    table = constants.assemble_constants()
    dt = time.perf_counter() - t0
    windows = {
        "kappa": (table.kappa, 2.2142), "tau": (table.tau, 2.1647),
        "b0": (table.b0, 7.3476), "b1": (table.b1, 21.4270),
        "cp": (table.cp, 4.0843), "cv": (table.cv, 17.0178),
        "sigma": (table.sigma, 0.7677), "nu": (table.nu, -0.4907),
        "u0": (table.u0, 9.6413), "u3": (table.u3, 13.7677),
        "cQ.re": (table.c_q_plus.re, 0.6611),
        "cQ.im": (table.c_q_plus.im, 0.7502),
        "mu.re": (table.mu.re, -0.1204), "mu.im": (table.mu.im, -0.3153),
    }
    ok = dt < 1.0
    for name, (enc, w) in windows.items():
        step = 10.0 ** -4
        lo, hi = (w, w + step) if w >= 0 else (w - step, w)
        ok &= lo <= enc.lo and enc.hi <= hi
    _report(ok, "criterion 1: constants in Table-1 windows", f"({dt:.3f}s)")


# -- criterion 2: the second-derivative window --------------------------------

def test_criterion_2_f2_window(table):
    t0 = time.perf_counter()
    radius = table.c01max.mul_scalar(2.0).div(table.tau)
    center = table.b0.add_scalar(-0.053).mul_scalar(2.0).div(table.tau)
    dt = time.perf_counter() - t0
    ok = (1.9272 <= radius.lo and radius.hi < 1.9273
          and 6.7393 <= center.lo and center.hi < 6.7394
          and radius.hi + abs(center.hi - 6.74) < 1.93
          and dt < 1.0)
    _report(ok, "criterion 2: |f''(0) - 6.74| <= 1.93 windows",
            f"radius [{radius.lo:.6f},{radius.hi:.6f}]")


# -- criteria 3 + 4: full ledger, twice, byte-identical ------------------------

@pytest.fixture(scope="module")
def full_runs():
    from paraq.cli import _run_selection

    class Args:
        id = None
        group = None
        max_depth = 48
        target_width = 1e-6
        jobs = 1
        report = None

    t0 = time.perf_counter()
    led1, specs1, results1 = _run_selection(Args())
    t_seq = time.perf_counter() - t0

    Args.jobs = 2
    t0 = time.perf_counter()
    led2, specs2, results2 = _run_selection(Args())
    t_par = time.perf_counter() - t0
    return (led1, specs1, results1, t_seq), (led2, specs2, results2, t_par)


REPRESENTATIVE = {
    "D-E.min-abs-q-at-1": (7.9800e-8, 7.9801e-8),
    "injective.min-re-qprime-4.8": (0.0292, 0.0293),
    "W0.alpha3-remainder": (0.2885, 0.2886),
    "est-Phi.abs-upper": (0.2756, 0.2757),
    "D-E.printed-min-at-cqm": (3.3960e9, 3.3961e9),
}


def test_criterion_3_full_ledger(full_runs):
    (led, specs, results, t_seq), _ = full_runs
    n_ver = sum(r.status == "VERIFIED" for r in results)
    n_ref = sum(r.status == "REFUTED" for r in results)
    n_inc = sum(r.status == "INCONCLUSIVE" for r in results)
    misses = [r.id for r in results
              if "MISS" in (r.window_match, r.threshold_window_match)]
    by_id = {r.id: r for r in results}
    rep_ok = True
    for cid, (lo, hi) in REPRESENTATIVE.items():
        enc = by_id[cid].enclosure
        rep_ok &= lo <= enc.lo and enc.hi <= hi
    # the c_Q^- circle: claim verified, printed window certified on the min
    cqm_ok = (by_id["D-E.max-abs-q-at-cqm"].status == "VERIFIED"
              and by_id["D-E.printed-min-at-cqm"].window_match == "MATCH")
    ok = (n_ver == len(results) and n_ref == 0 and n_inc == 0
          and not misses and rep_ok and cqm_ok and t_seq < 600.0)
    _report(ok, "criterion 3: full ledger verified with window matches",
            f"({n_ver} verified, {n_ref} refuted, {n_inc} inconclusive, "
            f"misses={misses}, {t_seq:.0f}s sequential)")


def test_criterion_4_determinism(full_runs):
    from paraq.report import build_report

    (led1, specs1, results1, _), (led2, specs2, results2, t_par) = full_runs
    r1 = json.dumps(build_report(led1.table, specs1, results1), indent=1)
    r2 = json.dumps(build_report(led2.table, specs2, results2), indent=1)
    _report(r1 == r2, "criterion 4: byte-identical reports across worker counts",
            f"({len(r1)} bytes, parallel run {t_par:.0f}s)")


# -- criterion 5: soundness property suites ------------------------------------

def test_criterion_5_soundness(table, ledger):
    from paraq.interval import RealInterval

    rng = random.Random(424242)
    violations = 0
    checked = 0
    while checked < 10_000:
        a = rng.uniform(-10, 10)
        x = RealInterval(a, a + rng.uniform(0, 2))
        pt = mp.mpf(rng.uniform(x.lo, x.hi))
        for enc, exact in ((x.sin(), mp.sin(pt)), (x.cos(), mp.cos(pt)),
                           (x.atan(), mp.atan(pt)),
                           (x.mul(x), pt * pt)):
            if not in_ri(exact, enc):
                violations += 1
            checked += 1

    # q-composition inclusion against the oracle
    orc = oracle()
    done = 0
    while done < 300:
        z = complex(rng.uniform(-20, 20), rng.uniform(-20, 20))
        if abs(z) < 1.3 or min(abs(z - 1), abs(z + 1)) < 0.1:
            continue
        from paraq.interval import cpoint

        try:
            enc = table.qk.q(cpoint(z), False)
        except Exception:
            continue
        val = orc.q(mp.mpc(z.real, z.imag))
        if not (mp.mpf(enc.re_lo) <= val.real <= mp.mpf(enc.re_hi)
                and mp.mpf(enc.im_lo) <= val.imag <= mp.mpf(enc.im_hi)):
            violations += 1
        done += 1

    # refinement monotonicity on 50 randomly selected optimization checks
    opt = [s for s in ledger.specs if s.objective in (MIN, MAX)]
    sample = rng.sample(opt, min(50, len(opt)))
    mono_bad = []
    for spec in sample:
        base = global_bound(spec.functional, spec.curve, spec.objective,
                            ledger.table, Budget())
        fine = global_bound(spec.functional, spec.curve, spec.objective,
                            ledger.table, Budget().scaled(depth_extra=2,
                                                          width_factor=0.25))
        if not (fine.enclosure.lo >= base.enclosure.lo
                and fine.enclosure.hi <= base.enclosure.hi):
            mono_bad.append(spec.id)
    _report(violations == 0 and not mono_bad,
            "criterion 5: soundness suites (oracle inclusion + monotonicity)",
            f"({checked + done} inclusion samples, {len(sample)} monotone checks, "
            f"violations={violations}, mono_bad={mono_bad})")


# -- criterion 6: Abel equation (float grade) ----------------------------------

def test_criterion_6_abel(fatou_explorer):
    ex = fatou_explorer
    t0 = time.perf_counter()
    cv = ex.fm.cv
    ok = abs(ex.fatou_attr(cv) - 1.0) < 1e-12
    ok &= abs(ex.fatou_attr(ex.fm.q(cv)) - 2.0) < 1e-8

    rng = random.Random(606)
    residual_worst = 0.0
    pts = 0
    while pts < 100:
        z = complex(rng.uniform(11, 60), rng.uniform(-25, 25))
        if not ex.fm.in_sector(z):
            continue
        residual_worst = max(residual_worst, ex.abel_residual(z))
        pts += 1
    ok &= residual_worst < 1e-8

    cos5 = math.cos(math.pi / 5)
    u3 = ex.table.u3.mid
    sampled = 0
    while sampled < 50:
        z = complex(rng.uniform(10, 70), rng.uniform(-45, 45))
        side = 1 if z.imag >= 0 else -1
        pr = (z * cmath.exp(-1j * side * math.pi / 5)).real
        if pr < u3 + 0.5:
            continue
        d = ex.derivative(z)
        ok &= 0.067 < abs(d) < 0.276
        ph = cmath.phase(d)
        ok &= (-math.pi / 5 < ph < math.pi / 4 if side > 0
               else -math.pi / 4 < ph < math.pi / 5)
        sampled += 1
    dt = time.perf_counter() - t0
    _report(ok and dt < 30.0, "criterion 6: Abel equation float suite",
            f"(worst residual {residual_worst:.2e}, {dt:.1f}s)")


# -- criterion 7: rendering smoke ------------------------------------------------

def test_criterion_7_render():
    import numpy as np

    from paraq import render

    t0 = time.perf_counter()
    ok = True
    for fig in render.FIGURES:
        data = render.render_figure(fig, eta=3.1, resolution=512)
        ok &= data.startswith(b"P6\n512 512\n255\n")
        ok &= len(data) == 15 + 512 * 512 * 3
        if fig == "dom-q":
            rgb = np.frombuffer(data[15:], dtype=np.uint8).reshape(512, 512, 3)
            warm = rgb[..., 0].astype(int) > rgb[..., 2].astype(int)
            cool_mirror = rgb[::-1, :, 0].astype(int) < rgb[::-1, :, 2].astype(int)
            ok &= (warm == cool_mirror).mean() > 0.97
        if fig == "u-eta-p":
            rgb = np.frombuffer(data[15:], dtype=np.uint8).reshape(512, 512, 3)
            re0, re1, im0, im1 = render.VIEWPORTS["u-eta-p"]
            s5 = math.sqrt(5.0)

            def px(z):
                col = int(round((z.real - re0) / (re1 - re0) * 511))
                row = int(round((im1 - z.imag) / (im1 - im0) * 511))
                return row, col

            r, c = px(complex(-1 / s5, 0))
            ok &= tuple(rgb[r, c]) == (245, 170, 90)
            for cpt in (complex(-s5 / 3, 2 / 3), complex(-s5 / 3, -2 / 3)):
                r, c = px(cpt)
                ok &= tuple(rgb[r, c]) == (90, 40, 110)
    dt = time.perf_counter() - t0
    _report(ok, "criterion 7: figures render with structural checks",
            f"({dt:.1f}s for four 512^2 figures)")
