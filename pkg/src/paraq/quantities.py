"""Named derived quantities (certified via the optimizer) and a small
expression language for thresholds over the constants table.

Expressions support + - * / ^, parentheses, the usual elementary functions,
table constants by name, and memoized calls like Q2max(13) or
ArgDFmax(11.5, pi/5).  Every value is a verified RealInterval.
"""

import re
from typing import Dict

from .interval import RealInterval, point, PI
from .constants import ConstantsTable, lit
from . import curves, functionals, maps
from .verifier import Budget, global_bound, MIN, MAX


class CyclicDependency(RuntimeError):
    pass


class PrincipalLogUnavailable(RuntimeError):
    pass


# Absolute 5e-6 keeps every downstream printed window decided with >= 2x
# slack while the flat tails (Q2max at large radius) stay cheap.
QUANTITY_BUDGET = Budget(max_depth=48, target_width=1e-5, target_abs=5e-6)

_TOKEN = re.compile(r"\s*(?:(\d+\.\d*(?:[eE][-+]?\d+)?|\.\d+|\d+(?:[eE][-+]?\d+)?)"
                    r"|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def _tokenize(s: str):
    out = []
    for num, name, sym in _TOKEN.findall(s):
        if num:
            out.append(("num", num))
        elif name:
            out.append(("name", name))
        elif sym.strip():
            out.append(("sym", sym))
    out.append(("end", ""))
    return out


_FUNCS = {
    "exp": lambda v: v.exp(),
    "log": lambda v: v.log(),
    "sqrt": lambda v: v.sqrt(),
    "sin": lambda v: v.sin(),
    "cos": lambda v: v.cos(),
    "tan": lambda v: v.sin().div(v.cos()),
    "arcsin": lambda v: v.asin(),
    "arccos": lambda v: v.acos(),
    "arctan": lambda v: v.atan(),
    "abs": lambda v: v.abs(),
}

_NAMED_QUANTITIES = ("Q2max", "LogDQmax", "phi1max", "logdphimax", "betamax",
                     "ArgDFmax", "ArgDFmin", "AbsDFmax", "AbsDFmin", "LogDFmax")


class QuantityCache:
    """Memoized evaluator; identical names always yield identical enclosures."""

    def __init__(self, table: ConstantsTable, budget: Budget = QUANTITY_BUDGET):
        self.table = table
        self.budget = budget
        self._memo: Dict[str, RealInterval] = {}
        self._in_progress: set = set()
        self.consts = _constant_namespace(table)
        self.custom: Dict[str, object] = {}

    def register(self, name: str, fn) -> None:
        """Register a zero-argument quantity (callable taking this cache);
        resolved lazily and memoized like the built-in named quantities."""
        self.custom[name] = fn

    # -- public ----------------------------------------------------------

    def evaluate(self, expr: str) -> RealInterval:
        return _Parser(expr, self).parse()

    def merge(self, other_memo: Dict[str, tuple]) -> None:
        """Merge a worker's memo (name -> (lo, hi)); equal keys must agree."""
        for key, (lo, hi) in other_memo.items():
            if key in self._memo:
                mine = self._memo[key]
                if mine.lo != lo or mine.hi != hi:
                    raise AssertionError(f"cache divergence for {key}")
            else:
                self._memo[key] = RealInterval(lo, hi)

    def snapshot(self) -> Dict[str, tuple]:
        return {k: (v.lo, v.hi) for k, v in self._memo.items()}

    # -- named quantities --------------------------------------------------

    def named(self, name: str, args, key: str) -> RealInterval:
        if key in self._memo:
            return self._memo[key]
        if key in self._in_progress:
            raise CyclicDependency(key)
        self._in_progress.add(key)
        try:
            value = self._compute(name, args)
        finally:
            self._in_progress.discard(key)
        self._memo[key] = value
        return value

    def _compute(self, name: str, args) -> RealInterval:
        tab = self.table
        if name in self.custom:
            return self.custom[name](self)
        if name == "Q2max":
            (r,) = args
            # conjugation symmetry of the map: the upper half circle suffices
            half = curves.CircleArc(0.0, r, 0.0, PI.hi)
            res = global_bound(functionals.f_q2_tail(tab), half, MAX, tab, self.budget)
            return res.enclosure
        if name == "LogDQmax":
            (r,) = args
            half = curves.CircleArc(0.0, r, 0.0, PI.hi)
            pos = global_bound(functionals.f_re_qd1(), half, MIN, tab,
                               Budget(max_depth=40, target_width=1e-3))
            if not pos.enclosure.lo > 0.0:
                raise PrincipalLogUnavailable(f"Re Q' not verified positive on |z|={r.mid}")
            res = global_bound(functionals.f_abs_log_qd1(), half, MAX, tab, self.budget)
            return res.enclosure
        if name == "phi1max":
            (r,) = args
            return maps.bound_phi_family(tab, r)["phi1max"]
        if name == "logdphimax":
            (r,) = args
            return maps.bound_phi_family(tab, r)["logdphimax"]
        if name == "betamax":
            (r,) = args
            q2 = self.named("Q2max", (r,), _key("Q2max", (r,)))
            phi1 = maps.bound_phi_family(tab, r)["phi1max"]
            return (tab.c01max.add(tab.b1.div(r.mul_scalar(2.0)))
                    .add(q2).add(phi1))
        if name in ("ArgDFmax", "ArgDFmin", "AbsDFmax", "AbsDFmin"):
            r, th = args
            beta = self.named("betamax", (r,), _key("betamax", (r,)))
            bc = tab.b0.sub(tab.c00)
            h = tab.b1.div(r.mul_scalar(2.0))
            s2 = bc.sqr().add(h.sqr()).add(bc.mul(h).mul(th.cos()).mul_scalar(2.0))
            s = s2.sqrt()
            if name == "AbsDFmax":
                return s.add(beta)
            if name == "AbsDFmin":
                return s.sub(beta)
            base = h.mul(th.sin()).div(bc.add(h.mul(th.cos()))).atan().neg()
            corr = beta.div(s).asin()
            return base.add(corr) if name == "ArgDFmax" else base.sub(corr)
        if name == "LogDFmax":
            (r,) = args
            ldq = self.named("LogDQmax", (r,), _key("LogDQmax", (r,)))
            return ldq.add(maps.bound_phi_family(tab, r)["logdphimax"])
        raise NameError(f"unknown quantity {name}")


def _two_pi_hi() -> float:
    return PI.mul_scalar(2.0).hi


def _key(name, args) -> str:
    return f"{name}({','.join(f'{a.mid:.17g}' for a in args)})"


def _constant_namespace(tab: ConstantsTable):
    return {
        "pi": PI,
        "sqrt5": tab.sqrt5,
        "sigma": tab.sigma, "nu": tab.nu, "kappa": tab.kappa, "tau": tab.tau,
        "b0": tab.b0, "b1": tab.b1, "cp": tab.cp, "cv": tab.cv,
        "cvP": tab.cv_p, "c00": tab.c00, "c01max": tab.c01max,
        "eta": tab.eta, "rho": tab.rho, "R": tab.big_r, "R1": tab.big_r1,
        "r1": tab.r1, "r4": tab.r4,
        "u0": tab.u0, "u1": tab.u1, "u2": tab.u2, "u3": tab.u3, "u4": tab.u4,
        "u5": tab.u3.sub(tab.u1),
        "uprime": lit(5.3).div(tab.cos_pi5),
        "e1": tab.e1, "em1": tab.em1, "xE": tab.x_e, "aE": tab.a_e, "bE": tab.b_e,
        "eps1": tab.eps1, "eps2": tab.eps2, "eps3": tab.eps3, "eps4": tab.eps4,
        "eps5": tab.eps5, "eps6": tab.eps6, "eps7": tab.eps7,
        "cQre": tab.c_q_plus.re, "cQim": tab.c_q_plus.im,
    }


class _Parser:
    def __init__(self, text: str, cache: QuantityCache):
        self.text = text
        self.toks = _tokenize(text)
        self.pos = 0
        self.cache = cache

    def parse(self) -> RealInterval:
        v = self.expr()
        if self.toks[self.pos][0] != "end":
            raise SyntaxError(f"trailing input in {self.text!r}")
        return v

    def peek(self):
        return self.toks[self.pos]

    def take(self, kind=None, value=None):
        k, v = self.toks[self.pos]
        if (kind and k != kind) or (value and v != value):
            raise SyntaxError(f"expected {kind or ''}{value or ''} in {self.text!r}")
        self.pos += 1
        return v

    def expr(self):
        v = self.term()
        while self.peek() == ("sym", "+") or self.peek() == ("sym", "-"):
            op = self.take("sym")
            rhs = self.term()
            v = v.add(rhs) if op == "+" else v.sub(rhs)
        return v

    def term(self):
        v = self.unary()
        while self.peek() == ("sym", "*") or self.peek() == ("sym", "/"):
            op = self.take("sym")
            rhs = self.unary()
            v = v.mul(rhs) if op == "*" else v.div(rhs)
        return v

    def unary(self):
        if self.peek() == ("sym", "-"):
            self.take("sym")
            return self.unary().neg()
        return self.power()

    def power(self):
        v = self.atom()
        if self.peek() == ("sym", "^"):
            self.take("sym")
            n = int(self.take("num"))
            out = point(1.0)
            if n >= 1:
                out = v
                for _ in range(n - 1):
                    out = out.mul(v)
            if n == 2:
                out = v.sqr()
            return out
        return v

    def atom(self):
        kind, val = self.peek()
        if kind == "num":
            self.take()
            return lit(float(val))
        if kind == "sym" and val == "(":
            self.take()
            v = self.expr()
            self.take("sym", ")")
            return v
        if kind == "name":
            self.take()
            if self.peek() == ("sym", "("):
                args, span = self.call_args()
                if val in _FUNCS:
                    if len(args) != 1:
                        raise SyntaxError(f"{val} takes one argument")
                    return _FUNCS[val](args[0])
                if val in _NAMED_QUANTITIES:
                    return self.cache.named(val, tuple(args), _key(val, tuple(args)))
                raise NameError(f"unknown function {val!r} in {self.text!r}")
            if val in self.cache.consts:
                return self.cache.consts[val]
            if val in self.cache.custom:
                return self.cache.named(val, (), val)
            raise NameError(f"unknown name {val!r} in {self.text!r}")
        raise SyntaxError(f"unexpected token in {self.text!r}")

    def call_args(self):
        self.take("sym", "(")
        args = [self.expr()]
        while self.peek() == ("sym", ","):
            self.take()
            args.append(self.expr())
        self.take("sym", ")")
        return args, None
