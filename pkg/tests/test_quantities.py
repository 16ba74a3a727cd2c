"""Quantity expression language and the memoized cache."""

import math

import pytest

from paraq.quantities import QuantityCache, CyclicDependency
from paraq.interval import point


def test_arithmetic_and_names(ledger):
    c = ledger.cache
    v = c.evaluate("cv*exp(-2*pi*eta)")
    assert 5.9124e-8 <= v.lo and v.hi < 5.9125e-8
    v = c.evaluate("tan(2*pi/5)")
    assert v.contains(math.sqrt(5 + 2 * math.sqrt(5)))
    v = c.evaluate("sqrt(1+5.4^2)/0.067")
    assert 81.9673 <= v.lo and v.hi < 81.9674
    v = c.evaluate("-(2+3)*4 + 2^3")
    assert v.contains(-12.0)


def test_named_quantities_memoized(ledger):
    c = ledger.cache
    a = c.evaluate("Q2max(13)")
    b = c.evaluate("Q2max(13)")
    assert (a.lo, a.hi) == (b.lo, b.hi)
    assert "Q2max(13)" in c.snapshot()


def test_parse_errors(ledger):
    c = ledger.cache
    with pytest.raises(NameError):
        c.evaluate("nosuchname")
    with pytest.raises(NameError):
        c.evaluate("mystery(3)")
    with pytest.raises(SyntaxError):
        c.evaluate("1 + ")


def test_merge_detects_divergence(ledger, table):
    from paraq.quantities import QuantityCache

    a = QuantityCache(table)
    a.evaluate("phi1max(13)")
    snap = a.snapshot()
    b = QuantityCache(table)
    b.evaluate("phi1max(13)")
    b.merge(snap)            # identical values merge fine
    bad = {k: (lo + 1e-3, hi) for k, (lo, hi) in snap.items()}
    with pytest.raises(AssertionError):
        b.merge(bad)


def test_betamax_window(ledger):
    v = ledger.cache.evaluate("betamax(5.4)")
    assert 5.2667 <= v.lo and v.hi < 5.2668


def test_custom_registration(table):
    c = QuantityCache(table)
    c.register("the_answer", lambda cache: point(42.0))
    assert c.evaluate("the_answer/2").contains(21.0)


def test_cyclic_dependency(table):
    c = QuantityCache(table)
    c.register("loop_a", lambda cache: cache.named("loop_a", (), "loop_a"))
    with pytest.raises(CyclicDependency):
        c.evaluate("loop_a")
