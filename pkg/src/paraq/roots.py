"""Verified scalar root finding: sign-checked bisection with an optional
interval-Newton tail."""

from dataclasses import dataclass
from typing import Callable, Optional

from .interval import RealInterval, point, DomainViolation


class NoSignChange(ValueError):
    pass


IntervalFn = Callable[[RealInterval], RealInterval]


@dataclass(frozen=True)
class RootProblem:
    f: IntervalFn
    bracket: RealInterval
    method: str = "bisection"            # "bisection" | "interval-newton"
    target_width: float = 1e-12
    df: Optional[IntervalFn] = None      # required for interval-newton

    def solve(self) -> RealInterval:
        return refine_root(self.f, self.bracket.lo, self.bracket.hi,
                           self.target_width,
                           df=self.df if self.method == "interval-newton" else None)


def _sign(v: RealInterval) -> int:
    if v.hi < 0.0:
        return -1
    if v.lo > 0.0:
        return 1
    return 0


def refine_root(f: IntervalFn, lo: float, hi: float, target_width: float = 1e-12,
                df: Optional[IntervalFn] = None) -> RealInterval:
    """Enclose the root of f in [lo, hi].

    The bracket must show a verified sign change.  Bisection refines until
    the midpoint sign is no longer decidable (or the target is met); with a
    derivative an interval-Newton tail tightens quadratically.
    """
    sa = _sign(f(point(lo)))
    sb = _sign(f(point(hi)))
    if sa == 0 or sb == 0 or sa == sb:
        raise NoSignChange(f"no verified sign change on [{lo}, {hi}]")

    newton_floor = 1e-3 if df is not None else target_width
    while hi - lo > max(target_width, newton_floor):
        m = 0.5 * (lo + hi)
        if m <= lo or m >= hi:
            break
        sm = _sign(f(point(m)))
        if sm == 0:
            break
        if sm == sa:
            lo = m
        else:
            hi = m

    x = RealInterval(lo, hi)
    if df is not None:
        for _ in range(80):
            if x.width <= target_width:
                break
            m = x.mid
            fm = f(point(m))
            d = df(x)
            if d.lo <= 0.0 <= d.hi:
                break
            try:
                n = point(m).sub(fm.div(d))
                nx = x.intersect(n)
            except DomainViolation:
                break
            if nx.width >= x.width:
                break
            x = nx
    return x
