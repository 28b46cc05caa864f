"""Seeded property-test harness: generators, observation equality, law suites.

Suites draw pseudo-random cases from a seeded generator, so a given config
always replays the identical case sequence.  Each case evaluates a fixed
set of equations under observation equality; failures are shrunk
structurally (drop the last element, clear a guard) before being reported.
Positive suites pass when no case fails; the one negative suite passes
exactly when its designated discrepancy shows up.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import effects as fx
from .commutative import CLT, EffList, associativity_counterexample
from .resumption import EffTree
from .steplist import DONE, StepList
from .twocont import Backtr


@dataclass(frozen=True)
class GenConfig:
    seed: int = 0
    cases: int = 1000
    max_depth: int = 6
    max_width: int = 8
    base: fx.Effect = fx.IDENTITY

    def __post_init__(self):
        if not (1 <= self.max_depth <= 6):
            raise ValueError("max_depth must be in 1..6")
        if not (1 <= self.max_width <= 8):
            raise ValueError("max_width must be in 1..8")
        if self.cases < 1:
            raise ValueError("cases must be positive")


def observation(x):
    """Canonical rendering of any representation's value."""
    if isinstance(x, (fx.Computation, StepList, EffTree, EffList, CLT, Backtr)):
        return x.observe()
    raise TypeError("no observation for %r" % type(x).__name__)


def eq_obs(x, y) -> bool:
    """Observation equality between two same-representation values."""
    if type(x) is not type(y):
        raise TypeError("cannot compare %s with %s" % (type(x).__name__, type(y).__name__))
    return observation(x) == observation(y)


@dataclass
class LawReport:
    """Outcome of one suite run.

    For positive suites, passed iff failures is empty.  For the negative
    suite, failures records the exhibited witness pair and passed is true
    exactly when the witness was found.
    """

    suite: str
    cases: int
    failures: list = field(default_factory=list)  # (case, lhs, rhs) strings
    passed: bool = True


# ---------------------------------------------------------------------------
# Generators.  Cases are descriptors that can be rebuilt, so failing inputs
# can be shrunk structurally (drop the last element, clear a guard).


def gen_value(rng):
    return rng.randrange(0, 7)


def _gen_guard(rng, sig, guard_prob=0.7):
    if rng.random() >= guard_prob:
        return None
    return fx.sample_computation(sig, rng)


def _guarded(dec, step, sig):
    if dec is None:
        return fx.unit(step, sig)
    return dec.fmap(lambda _v: step)


@dataclass(frozen=True)
class SLCase:
    sig: fx.Effect
    layers: tuple  # of (decoration computation or None, value)
    final: object  # decoration or None

    def build(self) -> StepList:
        t = StepList(_guarded(self.final, DONE, self.sig))
        for dec, v in reversed(self.layers):
            t = StepList(_guarded(dec, ("yield", v, t), self.sig))
        return t

    def shrinks(self):
        if self.layers:
            yield SLCase(self.sig, self.layers[:-1], self.final)
        if self.final is not None:
            yield SLCase(self.sig, self.layers, None)
        for i, (dec, v) in enumerate(self.layers):
            if dec is not None:
                cleared = self.layers[:i] + ((None, v),) + self.layers[i + 1 :]
                yield SLCase(self.sig, cleared, self.final)
                break

    def render(self):
        return repr(self.build().observe())


def _gen_width(rng, lo, hi):
    # biased small, with the full range still exercised regularly
    n = rng.randint(lo, hi)
    if rng.random() < 0.35:
        n = min(n, lo + 2)
    return n


def gen_steplist(rng, cfg: GenConfig, min_len: int = 0, guard_prob: float = 0.7) -> SLCase:
    n = _gen_width(rng, min_len, cfg.max_width)
    layers = tuple(
        (_gen_guard(rng, cfg.base, guard_prob), gen_value(rng)) for _ in range(n)
    )
    return SLCase(cfg.base, layers, _gen_guard(rng, cfg.base, guard_prob))


@dataclass(frozen=True)
class FnSL:
    """A pure function from values to step lists, built from fixed templates."""

    templates: tuple  # of StepList

    def __call__(self, a) -> StepList:
        t = self.templates[abs(a) % len(self.templates)]
        return t.map(lambda v, a=a: v + a)

    def render(self):
        return "<fn:%d templates>" % len(self.templates)


def gen_fn_steplist(rng, cfg: GenConfig) -> FnSL:
    # Shallow templates keep nested binds within the depth budget.
    shallow = GenConfig(seed=0, cases=1, max_depth=cfg.max_depth,
                        max_width=min(2, cfg.max_width), base=cfg.base)
    k = rng.randint(1, 2)
    return FnSL(tuple(gen_steplist(rng, shallow).build() for _ in range(k)))


@dataclass(frozen=True)
class FnComp:
    templates: tuple  # of Computation

    def __call__(self, a) -> fx.Computation:
        t = self.templates[abs(a) % len(self.templates)]
        return t.fmap(lambda v, a=a: v + a)

    def render(self):
        return "<fn:%d templates>" % len(self.templates)


def gen_fn_computation(rng, cfg: GenConfig) -> FnComp:
    k = rng.randint(1, 3)
    return FnComp(tuple(fx.sample_computation(cfg.base, rng) for _ in range(k)))


@dataclass(frozen=True)
class TreeCase:
    sig: fx.Effect
    shape: tuple  # ("leaf", dec, v) | ("branch", dec, TreeCase-shape, TreeCase-shape)

    def build(self) -> EffTree:
        def go(shape):
            if shape[0] == "leaf":
                return EffTree(_guarded(shape[1], ("leaf", shape[2]), self.sig))
            node = ("branch", go(shape[2]), go(shape[3]))
            return EffTree(_guarded(shape[1], node, self.sig))

        return go(self.shape)

    def shrinks(self):
        if self.shape[0] == "branch":
            yield TreeCase(self.sig, self.shape[2])
            yield TreeCase(self.sig, self.shape[3])
        if self.shape[1] is not None:
            yield TreeCase(self.sig, (self.shape[0], None) + self.shape[2:])

    def render(self):
        return repr(self.build().observe())


def gen_tree(rng, cfg: GenConfig, depth: int | None = None) -> TreeCase:
    if depth is None:
        depth = min(3, cfg.max_depth)

    def go(d):
        dec = _gen_guard(rng, cfg.base)
        if d <= 0 or rng.random() < 0.5:
            return ("leaf", dec, gen_value(rng))
        return ("branch", dec, go(d - 1), go(d - 1))

    return TreeCase(cfg.base, go(depth))


@dataclass(frozen=True)
class FnTree:
    templates: tuple  # of EffTree

    def __call__(self, a) -> EffTree:
        t = self.templates[abs(a) % len(self.templates)]
        return t.map(lambda v, a=a: v + a)

    def render(self):
        return "<fn:%d templates>" % len(self.templates)


def gen_fn_tree(rng, cfg: GenConfig) -> FnTree:
    k = rng.randint(1, 3)
    return FnTree(tuple(gen_tree(rng, cfg, depth=1).build() for _ in range(k)))


@dataclass(frozen=True)
class ELCase:
    sig: fx.Effect
    dec: object  # decoration computation or None
    values: tuple

    def build(self, shift: int = 0) -> EffList:
        values = self.values
        if self.dec is None:
            return EffList(fx.unit([v + shift for v in values], self.sig))
        # List contents depend on the effect's value, so state and
        # environment reads influence the results.
        return EffList(self.dec.fmap(lambda w, s=shift: [v + w + s for v in values]))

    def shrinks(self):
        if self.values:
            yield ELCase(self.sig, self.dec, self.values[:-1])
        if self.dec is not None:
            yield ELCase(self.sig, None, self.values)

    def render(self):
        return repr(self.build().observe())


def gen_efflist(rng, cfg: GenConfig) -> ELCase:
    n = _gen_width(rng, 0, cfg.max_width)
    return ELCase(cfg.base, _gen_guard(rng, cfg.base), tuple(gen_value(rng) for _ in range(n)))


@dataclass(frozen=True)
class FnEL:
    templates: tuple  # of ELCase

    def __call__(self, a) -> EffList:
        return self.templates[abs(a) % len(self.templates)].build(shift=a)

    def render(self):
        return "<fn:%d templates>" % len(self.templates)


def gen_fn_efflist(rng, cfg: GenConfig) -> FnEL:
    small = GenConfig(seed=0, cases=1, max_depth=cfg.max_depth,
                      max_width=min(3, cfg.max_width), base=cfg.base)
    k = rng.randint(1, 3)
    return FnEL(tuple(gen_efflist(rng, small) for _ in range(k)))


def _render_input(v):
    if hasattr(v, "render"):
        return v.render()
    return repr(v)


# ---------------------------------------------------------------------------
# Suites.  A factory draws one case: (inputs dict, prop).  prop(inputs)
# returns (label, lhs_observation, rhs_observation) triples.


def _sl(v):
    return v.build() if isinstance(v, SLCase) else v


def _suite_monad_steplist(rng, cfg):
    inputs = {
        "xs": gen_steplist(rng, cfg),
        "f": gen_fn_steplist(rng, cfg),
        "g": gen_fn_steplist(rng, cfg),
        "a": gen_value(rng),
    }

    def prop(inp):
        sig = cfg.base
        xs, f, g, a = _sl(inp["xs"]), inp["f"], inp["g"], inp["a"]
        return [
            ("left-unit", StepList.unit(a, sig).bind(f).observe(), f(a).observe()),
            ("right-unit", xs.bind(lambda v: StepList.unit(v, sig)).observe(), xs.observe()),
            ("assoc", xs.bind(f).bind(g).observe(), xs.bind(lambda v: f(v).bind(g)).observe()),
        ]

    return inputs, prop


def _suite_monadplus_steplist(rng, cfg):
    inputs = {
        "xs": gen_steplist(rng, cfg),
        "ys": gen_steplist(rng, cfg),
        "zs": gen_steplist(rng, cfg),
        "f": gen_fn_steplist(rng, cfg),
    }

    def prop(inp):
        sig = cfg.base
        xs, ys, zs, f = _sl(inp["xs"]), _sl(inp["ys"]), _sl(inp["zs"]), inp["f"]
        zero = StepList.empty(sig)
        return [
            ("left-identity", zero.append(xs).observe(), xs.observe()),
            ("right-identity", xs.append(zero).observe(), xs.observe()),
            ("assoc", xs.append(ys).append(zs).observe(), xs.append(ys.append(zs)).observe()),
            ("left-zero", zero.bind(f).observe(), zero.observe()),
            ("left-dist", xs.append(ys).bind(f).observe(), xs.bind(f).append(ys.bind(f)).observe()),
        ]

    return inputs, prop


def _suite_coherence_writer(rng, cfg):
    inputs = {
        "w": cfg.base.monoid.sample(rng),
        "k": gen_steplist(rng, cfg),
        "y": gen_steplist(rng, cfg),
    }

    def prop(inp):
        sig = cfg.base
        w, k, y = inp["w"], _sl(inp["k"]), _sl(inp["y"])
        op = StepList.lift(fx.tell(w, sig))
        lhs = op.bind(lambda _v: k).append(y)
        rhs = op.bind(lambda _v: k.append(y))
        return [("tell-coherence", lhs.observe(), rhs.observe())]

    return inputs, prop


def _suite_coherence_state(rng, cfg):
    inputs = {
        "s": rng.choice(cfg.base.domain),
        "k": gen_steplist(rng, cfg),
        "ks": gen_fn_steplist(rng, cfg),
        "y": gen_steplist(rng, cfg),
    }

    def prop(inp):
        sig = cfg.base
        s, k, ks, y = inp["s"], _sl(inp["k"]), inp["ks"], _sl(inp["y"])
        put_op = StepList.lift(fx.put(s, sig))
        get_op = StepList.lift(fx.get(sig))
        return [
            (
                "put-coherence",
                put_op.bind(lambda _v: k).append(y).observe(),
                put_op.bind(lambda _v: k.append(y)).observe(),
            ),
            (
                "get-coherence",
                get_op.bind(ks).append(y).observe(),
                get_op.bind(lambda v: ks(v).append(y)).observe(),
            ),
        ]

    return inputs, prop


def _suite_lift_morphism(rng, cfg):
    inputs = {
        "m": fx.sample_computation(cfg.base, rng),
        "kc": gen_fn_computation(rng, cfg),
        "a": gen_value(rng),
    }

    def prop(inp):
        sig = cfg.base
        m, kc, a = inp["m"], inp["kc"], inp["a"]
        return [
            ("unit", StepList.lift(fx.unit(a, sig)).observe(), StepList.unit(a, sig).observe()),
            (
                "bind",
                StepList.lift(m.bind(kc)).observe(),
                StepList.lift(m).bind(lambda v: StepList.lift(kc(v))).observe(),
            ),
        ]

    return inputs, prop


def _suite_flatten_morphism(rng, cfg):
    inputs = {
        "t": gen_tree(rng, cfg),
        "ft": gen_fn_tree(rng, cfg),
        "a": gen_value(rng),
    }

    def prop(inp):
        sig = cfg.base
        t, ft, a = inp["t"].build(), inp["ft"], inp["a"]
        return [
            ("unit", EffTree.unit(a, sig).flatten().observe(), StepList.unit(a, sig).observe()),
            (
                "bind",
                t.bind(ft).flatten().observe(),
                t.flatten().bind(lambda v: ft(v).flatten()).observe(),
            ),
        ]

    return inputs, prop


def _obs_b(k: Backtr):
    return k.observe_all().observe()


def _suite_monad_backtr(rng, cfg):
    inputs = {
        "xs": gen_steplist(rng, cfg),
        "ys": gen_steplist(rng, cfg),
        "f": gen_fn_steplist(rng, cfg),
        "g": gen_fn_steplist(rng, cfg),
        "a": gen_value(rng),
    }

    def prop(inp):
        sig = cfg.base
        x = Backtr.from_steplist(_sl(inp["xs"]))
        y = Backtr.from_steplist(_sl(inp["ys"]))
        f = lambda v: Backtr.from_steplist(inp["f"](v))
        g = lambda v: Backtr.from_steplist(inp["g"](v))
        a = inp["a"]
        zero = Backtr.empty(sig)
        return [
            ("left-unit", _obs_b(Backtr.unit(a, sig).bind(f)), _obs_b(f(a))),
            ("right-unit", _obs_b(x.bind(lambda v: Backtr.unit(v, sig))), _obs_b(x)),
            ("assoc", _obs_b(x.bind(f).bind(g)), _obs_b(x.bind(lambda v: f(v).bind(g)))),
            ("left-identity", _obs_b(zero.append(x)), _obs_b(x)),
            ("right-identity", _obs_b(x.append(zero)), _obs_b(x)),
            ("plus-assoc", _obs_b(x.append(y).append(x)), _obs_b(x.append(y.append(x)))),
            ("left-zero", _obs_b(zero.bind(f)), _obs_b(zero)),
            ("left-dist", _obs_b(x.append(y).bind(f)), _obs_b(x.bind(f).append(y.bind(f)))),
        ]

    return inputs, prop


def _suite_cayley_roundtrip(rng, cfg):
    inputs = {"xs": gen_steplist(rng, cfg)}

    def prop(inp):
        xs = _sl(inp["xs"])
        return [("roundtrip", Backtr.from_steplist(xs).to_steplist().observe(), xs.observe())]

    return inputs, prop


def _suite_cayley_hom(rng, cfg):
    inputs = {
        "xs": gen_steplist(rng, cfg),
        "ys": gen_steplist(rng, cfg),
        "m": fx.sample_computation(cfg.base, rng),
        "f": gen_fn_steplist(rng, cfg),
    }

    def prop(inp):
        sig = cfg.base
        xs, ys, m, f = _sl(inp["xs"]), _sl(inp["ys"]), inp["m"], inp["f"]
        rep = Backtr.from_steplist
        return [
            (
                "append",
                rep(xs.append(ys)).to_steplist().observe(),
                rep(xs).append(rep(ys)).to_steplist().observe(),
            ),
            (
                "empty",
                rep(StepList.empty(sig)).to_steplist().observe(),
                Backtr.empty(sig).to_steplist().observe(),
            ),
            (
                "lift",
                rep(StepList.lift(m)).to_steplist().observe(),
                Backtr.lift(m).to_steplist().observe(),
            ),
            (
                "bind",
                rep(xs.bind(f)).to_steplist().observe(),
                rep(xs).bind(lambda v: rep(f(v))).to_steplist().observe(),
            ),
        ]

    return inputs, prop


def _suite_monad_efflist(rng, cfg):
    inputs = {
        "e1": gen_efflist(rng, cfg),
        "e2": gen_efflist(rng, cfg),
        "e3": gen_efflist(rng, cfg),
        "f": gen_fn_efflist(rng, cfg),
        "g": gen_fn_efflist(rng, cfg),
        "a": gen_value(rng),
    }

    def prop(inp):
        sig = cfg.base
        e1, e2, e3 = inp["e1"].build(), inp["e2"].build(), inp["e3"].build()
        f, g, a = inp["f"], inp["g"], inp["a"]
        zero = EffList.empty(sig)
        return [
            ("left-unit", EffList.unit(a, sig).bind(f).observe(), f(a).observe()),
            ("right-unit", e1.bind(lambda v: EffList.unit(v, sig)).observe(), e1.observe()),
            ("assoc", e1.bind(f).bind(g).observe(), e1.bind(lambda v: f(v).bind(g)).observe()),
            ("left-identity", zero.append(e1).observe(), e1.observe()),
            ("right-identity", e1.append(zero).observe(), e1.observe()),
            ("plus-assoc", e1.append(e2).append(e3).observe(), e1.append(e2.append(e3)).observe()),
            ("left-zero", zero.bind(f).observe(), zero.observe()),
            ("left-dist", e1.append(e2).bind(f).observe(), e1.bind(f).append(e2.bind(f)).observe()),
        ]

    return inputs, prop


def _suite_clt_roundtrip(rng, cfg):
    inputs = {"e": gen_efflist(rng, cfg)}

    def prop(inp):
        e = inp["e"].build()
        return [("roundtrip", CLT.from_efflist(e).to_efflist().observe(), e.observe())]

    return inputs, prop


def _suite_clt_hom(rng, cfg):
    inputs = {
        "e1": gen_efflist(rng, cfg),
        "e2": gen_efflist(rng, cfg),
        "m": fx.sample_computation(cfg.base, rng),
        "f": gen_fn_efflist(rng, cfg),
        "a": gen_value(rng),
    }

    def prop(inp):
        sig = cfg.base
        e1, e2 = inp["e1"].build(), inp["e2"].build()
        m, f, a = inp["m"], inp["f"], inp["a"]
        to, out = CLT.from_efflist, lambda k: k.to_efflist().observe()
        kf = lambda v: to(f(v))
        return [
            ("append", out(to(e1.append(e2))), out(to(e1).append(to(e2)))),
            ("empty", out(to(EffList.empty(sig))), out(CLT.empty(sig))),
            ("unit", out(to(EffList.unit(a, sig))), out(CLT.unit(a, sig))),
            ("lift", out(to(EffList.lift(m))), out(CLT.lift(m))),
            ("bind", out(to(e1.bind(f))), out(to(e1).bind(kf))),
            ("monad-left-unit", out(CLT.unit(a, sig).bind(kf)), out(kf(a))),
            (
                "monad-assoc",
                out(to(e1).bind(kf).bind(lambda v: to(f(v)))),
                out(to(e1).bind(lambda v: kf(v).bind(lambda w: to(f(w))))),
            ),
        ]

    return inputs, prop


def _suite_efflist_negative(rng, cfg):
    inputs = {}

    def prop(_inp):
        lhs, rhs = associativity_counterexample(cfg.base)
        return [("assoc-counterexample", lhs, rhs)]

    return inputs, prop


_CORE = ("identity", "writer-str", "writer-nat", "state3", "reader3", "partial", "error")
_COMMUTATIVE = ("identity", "writer-nat", "reader3", "partial")

#: suite name -> (applicable base names, negative?, case factory)
CATALOG = {
    "monad-steplist": (_CORE, False, _suite_monad_steplist),
    "monadplus-steplist": (_CORE, False, _suite_monadplus_steplist),
    "coherence-writer": (("writer-str", "writer-nat"), False, _suite_coherence_writer),
    "coherence-state": (("state3",), False, _suite_coherence_state),
    "lift-morphism": (_CORE, False, _suite_lift_morphism),
    "flatten-morphism": (_CORE, False, _suite_flatten_morphism),
    "monad-backtr": (_CORE, False, _suite_monad_backtr),
    "cayley-roundtrip": (_CORE, False, _suite_cayley_roundtrip),
    "cayley-hom": (_CORE, False, _suite_cayley_hom),
    "monad-efflist-commutative": (_COMMUTATIVE, False, _suite_monad_efflist),
    "clt-roundtrip": (_CORE, False, _suite_clt_roundtrip),
    "clt-hom": (_COMMUTATIVE, False, _suite_clt_hom),
    "efflist-negative": (("writer-str", "state3"), True, _suite_efflist_negative),
}

SUITE_ORDER = tuple(CATALOG)
POSITIVE_SUITES = tuple(s for s, (_b, neg, _f) in CATALOG.items() if not neg)


class UnknownSuiteError(ValueError):
    pass


class InapplicableBaseError(ValueError):
    pass


def applicable_bases(suite: str):
    if suite not in CATALOG:
        raise UnknownSuiteError("unknown suite: %s" % suite)
    return CATALOG[suite][0]


def _shrink(inputs, prop):
    """Greedy structural reduction keeping the failure alive."""

    def fails(inp):
        return any(lhs != rhs for _label, lhs, rhs in prop(inp))

    for _round in range(200):
        for key, val in inputs.items():
            if not hasattr(val, "shrinks"):
                continue
            found = False
            for cand in val.shrinks():
                trial = dict(inputs)
                trial[key] = cand
                if fails(trial):
                    inputs = trial
                    found = True
                    break
            if found:
                break
        else:
            return inputs
    return inputs


def run_suite(suite: str, cfg: GenConfig, max_failures: int = 5) -> LawReport:
    """Run one suite over cfg.base; deterministic for a fixed (suite, cfg)."""
    if suite not in CATALOG:
        raise UnknownSuiteError("unknown suite: %s" % suite)
    bases, negative, factory = CATALOG[suite]
    if cfg.base.name not in bases:
        raise InapplicableBaseError(
            "suite %s is not applicable to base %s (applicable: %s)"
            % (suite, cfg.base.name, ", ".join(bases))
        )

    rng = random.Random(cfg.seed)
    failures = []
    ran = 0
    for _ in range(cfg.cases):
        inputs, prop = factory(rng, cfg)
        ran += 1
        bad = [(label, lhs, rhs) for label, lhs, rhs in prop(inputs) if lhs != rhs]
        if not bad:
            continue
        if negative:
            if not failures:
                label, lhs, rhs = bad[0]
                failures.append((label, repr(lhs), repr(rhs)))
            continue
        inputs = _shrink(inputs, prop)
        bad = [(label, lhs, rhs) for label, lhs, rhs in prop(inputs) if lhs != rhs]
        label, lhs, rhs = bad[0]
        case = "%s: %s" % (label, ", ".join("%s=%s" % (k, _render_input(v)) for k, v in inputs.items()))
        failures.append((case, repr(lhs), repr(rhs)))
        if len(failures) >= max_failures:
            break

    if negative:
        passed = bool(failures)
    else:
        passed = not failures
    return LawReport(suite=suite, cases=ran, failures=failures, passed=passed)


def run_all(cases: int = 1000, seed: int = 0, suites=SUITE_ORDER):
    """Every requested suite over each of its applicable bases, merged by suite."""
    reports = []
    for suite in suites:
        merged = None
        for base_name in applicable_bases(suite):
            cfg = GenConfig(seed=seed, cases=cases, base=fx.BASES[base_name])
            rep = run_suite(suite, cfg)
            if merged is None:
                merged = rep
            else:
                merged.cases += rep.cases
                merged.failures.extend(rep.failures)
                merged.passed = merged.passed and rep.passed
        reports.append(merged)
    return reports


def check_fold_algebra(collapse, combine, empty, sig, gen_b, cases: int = 200, seed: int = 0) -> bool:
    """Sampled check of the obligations StepList.fold places on its algebra.

    Verifies that collapse respects unit and iterated effects, that
    (combine, empty) is a monoid on sampled values, and that combining on
    the right distributes into the effect layer.
    """
    rng = random.Random(seed)
    for _ in range(cases):
        b1, b2, b3 = gen_b(rng), gen_b(rng), gen_b(rng)
        if collapse(fx.unit(b1, sig)) != b1:
            return False
        if combine(combine(b1, b2), b3) != combine(b1, combine(b2, b3)):
            return False
        if combine(b1, empty) != b1 or combine(empty, b1) != b1:
            return False
        m = fx.sample_computation(sig, rng, gen_b)
        mm = fx.sample_computation(sig, rng, lambda r: fx.sample_computation(sig, r, gen_b))
        if collapse(mm.fmap(collapse)) != collapse(mm.bind(lambda c: c)):
            return False
        if combine(collapse(m), b1) != collapse(m.fmap(lambda b, y=b1: combine(b, y))):
            return False
    return True
