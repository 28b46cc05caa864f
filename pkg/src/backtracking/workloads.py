"""Demo workloads and the representation cost benchmark.

All workloads are written against the shared representation protocol
(unit/empty/lift/append/bind/observe_all), so the same search runs over
step lists, the two-continuation encoding, and, where the base effect
commutes, the effects-first pair.  Results are instrumented by running
over a counter-wrapped base, and each workload has an independent
brute-force oracle used to freeze the expected counts.
"""

from __future__ import annotations

import sys
import time
from itertools import permutations

from . import effects as fx
from .commutative import CLT, EffList
from .steplist import StepList
from .twocont import Backtr

REPRS = {
    "steplist": StepList,
    "twocont": Backtr,
    "efflist": EffList,
    "clt": CLT,
}

#: representations whose laws require a commutative base
EFFECTS_FIRST = ("efflist", "clt")


def choose(cls, sig, values):
    """Ordered choice over lifted candidate values."""
    out = cls.empty(sig)
    for v in values:
        out = out.append(cls.lift(fx.unit(v, sig)))
    return out


# ---------------------------------------------------------------------------
# n-queens


def queens_brute(n: int):
    """Brute-force oracle: filter every permutation of columns."""
    out = []
    for perm in permutations(range(n)):
        if all(
            abs(perm[i] - perm[j]) != j - i
            for i in range(n)
            for j in range(i + 1, n)
        ):
            out.append(perm)
    return out


def queens(n: int, cls, sig):
    """Column choice row by row; attacked squares are pruned with empty."""

    def safe(placed, col):
        row = len(placed)
        return all(
            c != col and abs(c - col) != row - r for r, c in enumerate(placed)
        )

    def place(placed):
        if len(placed) == n:
            return cls.unit(placed, sig)
        out = cls.empty(sig)
        for col in range(n):
            if safe(placed, col):
                cand = cls.lift(fx.unit(col, sig)).bind(
                    lambda c, p=placed: place(p + (c,))
                )
            else:
                cand = cls.empty(sig)
            out = out.append(cand)
        return out

    return place(())


# ---------------------------------------------------------------------------
# Pythagorean triples


def pythag_brute(n: int):
    return [
        (a, b, c)
        for a in range(1, n + 1)
        for b in range(a, n + 1)
        for c in range(b, n + 1)
        if a * a + b * b == c * c
    ]


def pythag(n: int, cls, sig):
    ints = lambda lo: choose(cls, sig, range(lo, n + 1))
    return ints(1).bind(
        lambda a: ints(a).bind(
            lambda b, a=a: ints(b).bind(
                lambda c, a=a, b=b: cls.unit((a, b, c), sig)
                if a * a + b * b == c * c
                else cls.empty(sig)
            )
        )
    )


# ---------------------------------------------------------------------------
# Backtracking token parser (state base)


def parser_tokens(n: int):
    """A deterministic token stream: numbers with some bracketed groups."""
    out = []
    i = 0
    while len(out) < n:
        if i % 5 == 0:
            out.extend(["[", str(i + 1), str(i + 2), "]"])
        else:
            out.append(str(i))
        i += 1
    return out[:n]


def parser_sig(tokens):
    return fx.counter(fx.state(range(len(tokens) + 1)))


def parses(tokens, cls, sig):
    """All prefix parses of  item*  where item = NUM | '[' item* ']'."""

    def item_tok(pred):
        def after_get(i):
            if i < len(tokens) and pred(tokens[i]):
                return cls.lift(fx.put(i + 1, sig)).bind(
                    lambda _u, i=i: cls.unit(tokens[i], sig)
                )
            return cls.empty(sig)

        return cls.lift(fx.get(sig)).bind(after_get)

    number = item_tok(lambda t: t not in ("[", "]"))

    def item():
        group = item_tok(lambda t: t == "[").bind(
            lambda _l: many(item).bind(
                lambda inner: item_tok(lambda t: t == "]").bind(
                    lambda _r, inner=inner: cls.unit(("group", tuple(inner)), sig)
                )
            )
        )
        return number.append(group)

    def many(p):
        # longest parses first, then every shorter split
        return (
            p().bind(lambda x: many(p).bind(lambda xs, x=x: cls.unit((x,) + xs, sig)))
        ).append(cls.unit((), sig))

    return many(item)


def run_state(comp: fx.Computation, s0=0):
    """Run a counter-over-state computation from one initial state."""
    (value, binds), s1 = comp.payload(s0)
    return value, binds, s1


# ---------------------------------------------------------------------------
# Lazy list over the thunk base


def lazy_range(n: int):
    """0..n-1 with exactly one suspension guarding every step."""

    def layer(i):
        def step(i=i):
            if i >= n:
                return fx.unit(("done",), fx.THUNK)
            return fx.unit(("yield", i, layer(i + 1)), fx.THUNK)

        return StepList(fx.suspend(step))

    return layer(0)


def lazy_forces(n: int, k: int):
    """(values, forced suspensions) for take_n(k) of a lazy 0..n-1 list."""
    values, forces = lazy_range(n).take_n(k).observe()
    return values, forces


# ---------------------------------------------------------------------------
# Cost benchmark: left-nested choice of n singletons over a counted base


def bench_point(repr_name: str, n: int):
    """(results_count, base_bind_count, wall_ns) for one ladder point."""
    cls = REPRS[repr_name]
    sig = fx.counter(fx.IDENTITY)
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 60 * n + 10000))
    t0 = time.perf_counter_ns()
    acc = cls.unit(0, sig)
    for i in range(1, n):
        acc = acc.append(cls.unit(i, sig))
    count, values = acc.observe_all().observe()
    wall = time.perf_counter_ns() - t0
    return len(values), count, wall


def bench_ladder(repr_names, ladder):
    out = []
    for name in repr_names:
        for n in ladder:
            results, binds, wall = bench_point(name, n)
            out.append(
                {
                    "repr": name,
                    "workload": "bench",
                    "n": n,
                    "results_count": results,
                    "base_bind_count": binds,
                    "wall_ns": wall,
                }
            )
    return out
