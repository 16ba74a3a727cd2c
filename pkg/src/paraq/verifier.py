"""Guaranteed global bounds over curves (adaptive interval branch-and-bound)
and execution of individual ledger checks."""

import heapq
from dataclasses import dataclass, field
from typing import Optional

from .backend import kern
from .interval import RealInterval, from_decimal_window
from .constants import ConstantsTable

KernelError = kern.KernelError
INF = float("inf")

MIN = "MIN"
MAX = "MAX"

PARAM_FLOOR = 1e-14


@dataclass(frozen=True)
class Budget:
    max_depth: int = 48
    target_width: float = 1e-6       # relative
    target_abs: float = 0.0          # absolute floor (0 disables)
    max_boxes: int = 2_000_000
    cap_abs: float = 0.0             # absolute cap, e.g. to land in a window

    def scaled(self, depth_extra: int = 0, width_factor: float = 1.0) -> "Budget":
        return Budget(self.max_depth + depth_extra,
                      self.target_width * width_factor,
                      self.target_abs * width_factor,
                      self.max_boxes,
                      self.cap_abs * width_factor)


@dataclass
class BoundResult:
    enclosure: RealInterval
    subdivisions: int
    depth: int
    evals: int
    inconclusive: bool        # a signalling box could not be resolved


class _MaxView:
    """Present a MAX problem to the MIN engine by negation."""

    def __init__(self, functional, curve, tab):
        self.f = functional
        self.curve = curve
        self.tab = tab

    def bound(self, lo, hi):
        b, s = self.f.bound_on(self.curve, lo, hi, self.tab)
        return b.neg(), s.neg()


class _MinView:
    def __init__(self, functional, curve, tab):
        self.f = functional
        self.curve = curve
        self.tab = tab

    def bound(self, lo, hi):
        return self.f.bound_on(self.curve, lo, hi, self.tab)


def global_bound(functional, curve, objective: str, tab: ConstantsTable,
                 budget: Budget = Budget()) -> BoundResult:
    """Enclosure [lo, hi] with lo <= true optimum <= hi.

    Deterministic best-first bisection on the parameter interval: the plain
    interval image (tightened by the mean-value form) bounds each piece,
    midpoint samples bound the optimum from the feasible side, and pieces
    that cannot improve the incumbent are pruned.
    """
    view = _MinView(functional, curve, tab) if objective == MIN else _MaxView(functional, curve, tab)
    res = _minimize(view, curve.t0, curve.t1, budget)
    if objective == MAX:
        res.enclosure = res.enclosure.neg()
    return res


def _minimize(view, t0: float, t1: float, budget: Budget) -> BoundResult:
    evals = 0
    subdivisions = 0
    max_depth_seen = 0
    incumbent = INF
    dead_signal = False
    # heap entries: (lb, t_lo, t_hi, depth, has_value)
    heap = []

    def push(lo, hi, depth, parent_lb, parent_ub):
        nonlocal evals, incumbent, dead_signal
        evals += 1
        try:
            b, sample = view.bound(lo, hi)
        except KernelError:
            if hi - lo < PARAM_FLOOR:
                dead_signal = True
                return
            heapq.heappush(heap, (parent_lb, lo, hi, depth, False))
            return
        lb = max(b.lo, parent_lb)
        ub = min(b.hi, parent_ub)
        if sample.hi < incumbent:
            incumbent = sample.hi
        if ub < incumbent:
            incumbent = ub
        if lb > incumbent:
            return                     # cannot contain anything below the incumbent
        heapq.heappush(heap, (lb, lo, hi, depth, True))

    push(t0, t1, 0, -INF, INF)
    if t1 == t0:
        lb = heap[0][0] if heap else -INF
        return BoundResult(RealInterval(min(lb, incumbent), incumbent),
                           0, 0, evals, dead_signal or not heap)

    while heap:
        lb, lo, hi, depth, has_value = heap[0]
        if dead_signal:
            break
        gap = incumbent - lb
        target = max(budget.target_abs,
                     budget.target_width * max(1e-300, abs(incumbent)))
        if budget.cap_abs > 0.0:
            target = min(target, budget.cap_abs)
        if has_value and gap <= target:
            break
        if depth >= budget.max_depth or subdivisions >= budget.max_boxes:
            break
        heapq.heappop(heap)
        if lb > incumbent:
            continue
        subdivisions += 1
        if depth + 1 > max_depth_seen:
            max_depth_seen = depth + 1
        mid = 0.5 * (lo + hi)
        if not (lo < mid < hi):
            # parameter resolution exhausted; keep the piece as a floor
            heapq.heappush(heap, (lb, lo, hi, budget.max_depth, has_value))
            break
        parent_ub = INF
        push(lo, mid, depth + 1, lb, parent_ub)
        push(mid, hi, depth + 1, lb, parent_ub)

    lower = incumbent
    for lb, *_ in heap:
        if lb < lower:
            lower = lb
    inconclusive = dead_signal or lower == -INF
    return BoundResult(RealInterval(lower, incumbent), subdivisions,
                       max_depth_seen, evals, inconclusive)


# ---------------------------------------------------------------------------
# Check specifications and execution
# ---------------------------------------------------------------------------

VERIFIED = "VERIFIED"
REFUTED = "REFUTED"
INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class CheckSpec:
    id: str
    group: str
    paper_location: str
    objective: str                     # MIN | MAX | VALUE
    relation: Optional[str] = None     # "<" | ">" | None (window-only)
    threshold: Optional[str] = None    # quantity expression
    functional: object = field(default=None, compare=False)
    curve: object = field(default=None, compare=False)
    quantity: Optional[str] = None     # expression for VALUE checks
    window: Optional[tuple] = None            # (printed value, decimals)
    threshold_window: Optional[tuple] = None


@dataclass
class CheckResult:
    id: str
    group: str
    paper_location: str
    objective: str
    relation: Optional[str]
    status: str
    enclosure: RealInterval
    threshold_enclosure: Optional[RealInterval]
    window_match: str                  # MATCH | MISS | N/A
    threshold_window_match: str
    subdivisions: int
    depth: int
    evals: int
    wall_ms: float = 0.0               # console diagnostics only, never serialized


def window_interval(window) -> RealInterval:
    """Window of a printed value: (value, decimals, scale=1, style='digits').

    'digits' is the paper's stated convention (the digit string was cut, so
    |x| lies in (|v|, |v| + 10^-k)); a few lines were visibly rounded to
    nearest instead and carry style='nearest'."""
    value, decimals = window[0], window[1]
    scale = window[2] if len(window) > 2 else 1.0
    style = window[3] if len(window) > 3 else "digits"
    step = 10.0 ** (-decimals)
    if style == "nearest":
        win = RealInterval(value - 0.5 * step, value + 0.5 * step)
    else:
        win = from_decimal_window(value, decimals)
    return win.mul_scalar(scale)


def _window_state(window, enclosure) -> str:
    if window is None:
        return "N/A"
    return "MATCH" if window_interval(window).encloses(enclosure) else "MISS"


def _verdict(relation, enclosure, threshold) -> str:
    if relation is None or threshold is None:
        return VERIFIED
    if relation == "<":
        if enclosure.hi < threshold.lo:
            return VERIFIED
        if enclosure.lo > threshold.hi:
            return REFUTED
    else:
        if enclosure.lo > threshold.hi:
            return VERIFIED
        if enclosure.hi < threshold.lo:
            return REFUTED
    return INCONCLUSIVE


def window_target_abs(window) -> float:
    if window is None:
        return 0.0
    scale = window[2] if len(window) > 2 else 1.0
    return 0.125 * 10.0 ** (-window[1]) * scale


def run_check(spec: CheckSpec, cache, tab: ConstantsTable,
              budget: Budget = Budget()) -> CheckResult:
    """Evaluate one ledger line.  Escalates the budget once (double depth,
    quarter width) before reporting INCONCLUSIVE."""
    import time

    t_start = time.perf_counter()
    thr = cache.evaluate(spec.threshold) if spec.threshold else None

    if spec.objective == "VALUE":
        enc = cache.evaluate(spec.quantity)
        subdivisions = depth = evals = 0
        inconclusive = False
    else:
        eff = Budget(budget.max_depth, budget.target_width,
                     budget.target_abs, budget.max_boxes,
                     window_target_abs(spec.window))
        res = global_bound(spec.functional, spec.curve, spec.objective, tab, eff)
        if res.inconclusive or _verdict(spec.relation, res.enclosure, thr) == INCONCLUSIVE \
                or _window_state(spec.window, res.enclosure) == "MISS":
            res2 = global_bound(spec.functional, spec.curve, spec.objective, tab,
                                eff.scaled(depth_extra=eff.max_depth, width_factor=0.25))
            res2.subdivisions += res.subdivisions
            res2.evals += res.evals
            res = res2
        enc = res.enclosure
        subdivisions, depth, evals = res.subdivisions, res.depth, res.evals
        inconclusive = res.inconclusive

    status = _verdict(spec.relation, enc, thr)
    if inconclusive and status == VERIFIED:
        status = INCONCLUSIVE
    wmatch = _window_state(spec.window, enc)
    tmatch = _window_state(spec.threshold_window, thr) if thr is not None else "N/A"
    return CheckResult(
        id=spec.id, group=spec.group, paper_location=spec.paper_location,
        objective=spec.objective, relation=spec.relation, status=status,
        enclosure=enc, threshold_enclosure=thr,
        window_match=wmatch, threshold_window_match=tmatch,
        subdivisions=subdivisions, depth=depth, evals=evals,
        wall_ms=(time.perf_counter() - t_start) * 1e3,
    )
