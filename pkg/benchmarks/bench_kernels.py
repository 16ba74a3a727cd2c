#!/usr/bin/env python3
"""Benchmark: compiled kernel vs the interpreted fallback.

Runs the hot primitives and a representative ledger optimization with both
backends and prints the speedup.  Usage: python benchmarks/bench_kernels.py
"""

import time

from paraq.backend import BACKEND, kern, load_pure_kernel
from paraq.constants import assemble_constants


def mirror_qkernel(mod, table):
    def ri(x):
        return mod.RI(x.lo, x.hi)

    def cb(z):
        return mod.CB(ri(z.re), ri(z.im))

    return mod.QKernel(ri(table.sigma), ri(table.nu), ri(table.kappa),
                       ri(table.tau), cb(table.mu),
                       ri(table.sqrt5.mul_scalar(2.0 / 3.0)))


def bench(label, fn, n):
    fn()  # warm up
    t0 = time.perf_counter()
    for _ in range(n):
        fn()
    dt = (time.perf_counter() - t0) / n
    print(f"  {label:28s} {dt * 1e6:10.2f} us/op")
    return dt


def kernel_suite(mod, qk, label):
    print(f"{label}:")
    a = mod.RI(1.25, 1.2500001)
    b = mod.RI(-0.7, -0.6999999)
    z = mod.CB(mod.RI(3.0, 3.000001), mod.RI(2.0, 2.000001))
    out = {}
    out["ri_mul"] = bench("interval multiply", lambda: a.mul(b), 200_000)
    out["ri_sin"] = bench("interval sine", lambda: a.sin(), 100_000)
    out["cb_mul"] = bench("box multiply", lambda: z.mul(z), 100_000)
    out["cb_abs_arg"] = bench("box abs+arg", lambda: (z.abs(), z.arg(0)), 50_000)
    out["q"] = bench("model map Q", lambda: qk.q(z, True), 20_000)
    out["q_d1"] = bench("Q with derivative", lambda: qk.q_d1(z, True), 10_000)
    return out


def ledger_check(table, budget_target=1e-6):
    from paraq import curves, functionals as F
    from paraq.interval import PI, point
    from paraq.verifier import Budget, global_bound, MIN

    circle = curves.CircleArc(1.0, table.eps1, 0.0, PI.mul_scalar(2.0).hi)
    t0 = time.perf_counter()
    res = global_bound(F.f_abs_q(), circle, MIN, table,
                       Budget(target_width=budget_target, cap_abs=2.5e-13))
    dt = time.perf_counter() - t0
    print(f"  ledger check D-E.min-abs-q-at-1: {dt:.2f}s "
          f"({res.subdivisions} subdivisions)")
    return dt


def main():
    table = assemble_constants()
    print(f"active backend: {BACKEND}\n")

    fast = kernel_suite(kern, table.qk, "compiled" if kern.COMPILED else "active")
    t_fast = ledger_check(table)

    pure = load_pure_kernel()
    if pure is kern:
        print("\n(no compiled kernel built; nothing to compare)")
        return
    qk_pure = mirror_qkernel(pure, table)
    print()
    slow = kernel_suite(pure, qk_pure, "interpreted")

    import os
    import subprocess
    import sys

    print("\nfull-check comparison (interpreted backend, subprocess):",
          flush=True)
    code = (
        "from paraq.constants import assemble_constants\n"
        "from paraq import curves, functionals as F\n"
        "from paraq.interval import PI\n"
        "from paraq.verifier import Budget, global_bound, MIN\n"
        "import time\n"
        "table = assemble_constants()\n"
        "circle = curves.CircleArc(1.0, table.eps1, 0.0, PI.mul_scalar(2.0).hi)\n"
        "t0 = time.perf_counter()\n"
        "res = global_bound(F.f_abs_q(), circle, MIN, table,\n"
        "                   Budget(target_width=1e-6, cap_abs=2.5e-13))\n"
        "print(f'  ledger check D-E.min-abs-q-at-1: "
        "{time.perf_counter()-t0:.2f}s ({res.subdivisions} subdivisions)')\n")
    subprocess.run([sys.executable, "-c", code],
                   env={**os.environ, "PARAQ_PURE": "1"}, check=True)
    print("\nspeedups (interpreted / compiled):")
    for key in fast:
        print(f"  {key:12s} {slow[key] / fast[key]:6.1f}x")


if __name__ == "__main__":
    main()
