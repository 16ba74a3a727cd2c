"""Command-line interface: derived constants, ledger verification with a
machine-readable report, figure rendering, and the Fatou-coordinate lab."""

import argparse
import json
import os
import sys
import time

from .constants import assemble_constants, table_rows

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 3


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="paraq",
        description="Validated numerics for the cubic parabolic model map: "
                    "rigorous constants, a certified inequality ledger, and "
                    "a floating-point Fatou explorer/renderer.")
    sub = parser.add_subparsers(dest="command")

    p_const = sub.add_parser("constants", help="derive and print the constants table")
    p_const.add_argument("--json", action="store_true", help="emit JSON")

    p_verify = sub.add_parser("verify", help="run ledger checks")
    p_verify.add_argument("--id", help="run a single check by id")
    p_verify.add_argument("--group", help="run one group of checks")
    p_verify.add_argument("--max-depth", type=int, default=48)
    p_verify.add_argument("--target-width", type=float, default=1e-6,
                          help="relative width target for enclosures")
    p_verify.add_argument("--jobs", type=int,
                          default=int(os.environ.get("PARAQ_JOBS", "1")))
    p_verify.add_argument("--report", help="write the JSON report here")

    p_render = sub.add_parser("render", help="render a figure to a P6 pixmap")
    p_render.add_argument("--figure", required=True,
                          choices=["ellipse", "dom-q", "u-eta-p", "chessboard"])
    p_render.add_argument("--eta", type=float, default=3.1)
    p_render.add_argument("--out", required=True)
    p_render.add_argument("--resolution", type=int, default=512)
    p_render.add_argument("--overlay", help="also write the ledger curves as SVG")

    p_fatou = sub.add_parser("fatou", help="Fatou-coordinate diagnostics")
    p_fatou.add_argument("--op", required=True, choices=["attr-coord", "abel-residual"])
    p_fatou.add_argument("--points", required=True,
                         help="JSON file: list of [re, im] pairs")

    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0

    if args.command == "constants":
        return cmd_constants(args)
    if args.command == "verify":
        return cmd_verify(args)
    if args.command == "render":
        return cmd_render(args)
    if args.command == "fatou":
        return cmd_fatou(args)
    parser.print_help()
    return EXIT_USAGE


def cmd_constants(args) -> int:
    t0 = time.perf_counter()
    table = assemble_constants()
    rows = table_rows(table)
    if args.json:
        from .report import constants_entries, table_digest

        print(json.dumps({"digest": table_digest(table),
                          "constants": constants_entries(table)}, indent=1))
    else:
        print(f"{'name':10s} {'lo':>24s} {'hi':>24s}  window        flag")
        for name, enc, window, ok in rows:
            win = (f"[{window.lo:.4f},{window.hi:.4f})" if window is not None
                   else "-")
            flag = "MATCH" if ok else "MISMATCH"
            if window is None:
                flag = "LITERAL"
            print(f"{name:10s} {enc.lo:24.17g} {enc.hi:24.17g}  {win:13s} {flag}")
        print(f"# assembled in {time.perf_counter() - t0:.3f}s")
    return EXIT_OK if all(ok for _, _, _, ok in rows) else EXIT_FAILED


def _run_selection(args):
    from .ledger import build_ledger
    from .verifier import Budget, run_check

    led = build_ledger()
    specs = led.specs
    if args.id:
        specs = [led.by_id(args.id)]
    elif args.group:
        specs = led.group(args.group)
        if not specs:
            raise KeyError(f"unknown group {args.group!r}")
    budget = Budget(max_depth=args.max_depth, target_width=args.target_width)

    if args.jobs > 1 and len(specs) > 1:
        results = _run_parallel(led, specs, budget, args.jobs)
    else:
        results = [run_check(s, led.cache, led.table, budget) for s in specs]
    return led, specs, results


def _run_parallel(led, specs, budget, jobs):
    import multiprocessing as mp

    ids = [s.id for s in specs]
    ctx = mp.get_context("fork")
    with ctx.Pool(jobs, initializer=_worker_init, initargs=(budget,)) as pool:
        payloads = pool.map(_worker_run, ids, chunksize=1)
    results = []
    for payload in payloads:
        results.append(payload["result"])
        led.cache.merge(payload["cache"])
    return results


_WORKER_STATE = {}


def _worker_init(budget):
    from .ledger import build_ledger

    _WORKER_STATE["ledger"] = build_ledger()
    _WORKER_STATE["budget"] = budget


def _worker_run(check_id):
    from .verifier import run_check

    led = _WORKER_STATE["ledger"]
    spec = led.by_id(check_id)
    result = run_check(spec, led.cache, led.table, _WORKER_STATE["budget"])
    return {"result": result, "cache": led.cache.snapshot()}


def cmd_verify(args) -> int:
    from .report import build_report, write_report

    t0 = time.perf_counter()
    try:
        led, specs, results = _run_selection(args)
    except KeyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    worst = EXIT_OK
    for r in results:
        marks = []
        if r.window_match != "N/A":
            marks.append(f"window {r.window_match}")
        if r.threshold_window_match != "N/A":
            marks.append(f"threshold-window {r.threshold_window_match}")
        line = (f"{r.id:36s} {r.status:12s} "
                f"[{r.enclosure.lo:.10g}, {r.enclosure.hi:.10g}] "
                f"{'; '.join(marks)}")
        print(line)
        if r.status == "REFUTED" or "MISS" in (r.window_match, r.threshold_window_match):
            worst = max(worst, EXIT_FAILED)
        elif r.status == "INCONCLUSIVE":
            worst = max(worst, EXIT_INCONCLUSIVE)
    n_ver = sum(r.status == "VERIFIED" for r in results)
    n_ref = sum(r.status == "REFUTED" for r in results)
    n_inc = sum(r.status == "INCONCLUSIVE" for r in results)
    print(f"# {n_ver} verified, {n_ref} refuted, {n_inc} inconclusive "
          f"({len(results)} checks, {time.perf_counter() - t0:.1f}s wall)")

    if args.report:
        report = build_report(led.table, specs, results)
        write_report(report, args.report)
        print(f"# report written to {args.report}")
    return worst


def cmd_render(args) -> int:
    from . import render

    t0 = time.perf_counter()
    try:
        data = render.render_figure(args.figure, eta=args.eta,
                                    resolution=args.resolution)
    except render.UnknownFigure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    with open(args.out, "wb") as fh:
        fh.write(data)
    print(f"# wrote {args.out} ({args.resolution}x{args.resolution}) "
          f"in {time.perf_counter() - t0:.1f}s")
    if args.overlay:
        svg = render.overlay_svg(args.figure, resolution=args.resolution)
        with open(args.overlay, "w") as fh:
            fh.write(svg)
        print(f"# wrote overlay {args.overlay}")
    return EXIT_OK


def cmd_fatou(args) -> int:
    from .explorer import FatouExplorer, NoConvergence, OutsideBasin

    try:
        with open(args.points) as fh:
            pts = [complex(p[0], p[1]) for p in json.load(fh)]
    except (OSError, ValueError, TypeError, IndexError) as exc:
        print(f"error reading points file: {exc}", file=sys.stderr)
        return EXIT_USAGE
    ex = FatouExplorer()
    if args.op == "attr-coord":
        out = []
        for z in pts:
            try:
                phi = ex.fatou_attr(z)
                out.append({"point": [z.real, z.imag],
                            "phi": [phi.real, phi.imag]})
            except (NoConvergence, OutsideBasin) as exc:
                out.append({"point": [z.real, z.imag],
                            "error": type(exc).__name__})
        print(json.dumps(out, indent=1))
    else:
        print(json.dumps(ex.abel_residual_suite(pts), indent=1))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
