"""Effects-first lists and their continuation form for commutative bases.

An EffList performs all of its effects up front and then returns a plain
list.  Reassociating binds reorders those effects, so the monad laws hold
only over bases where effect order is invisible; for the others,
associativity_counterexample produces the offending pair of observations.
CLT is the fold-style continuation encoding of the same structure: the
seed is a plain value and each element's success step may produce effects
of its own.  Converting CLT back to EffList is exact for every base,
commutative or not.
"""

from __future__ import annotations

import random

from . import effects as fx


class EffList:
    __slots__ = ("payload",)

    def __init__(self, payload: fx.Computation):
        self.payload = payload  # a base computation of a list

    @property
    def sig(self):
        return self.payload.sig

    @classmethod
    def unit(cls, a, sig) -> "EffList":
        return cls(fx.unit([a], sig))

    @classmethod
    def empty(cls, sig) -> "EffList":
        return cls(fx.unit([], sig))

    @classmethod
    def lift(cls, m: fx.Computation) -> "EffList":
        return cls(m.fmap(lambda a: [a]))

    def append(self, other: "EffList") -> "EffList":
        return EffList(self.payload.bind(lambda xs: other.payload.fmap(lambda ys: xs + ys)))

    def bind(self, f) -> "EffList":
        sig = self.sig

        def go(vs):
            if not vs:
                return fx.unit([], sig)
            return f(vs[0]).payload.bind(lambda xs: go(vs[1:]).fmap(lambda ys: xs + ys))

        return EffList(self.payload.bind(go))

    def map(self, g) -> "EffList":
        return EffList(self.payload.fmap(lambda vs: [g(v) for v in vs]))

    def observe_all(self) -> fx.Computation:
        return self.payload

    def observe(self):
        return self.payload.observe()

    def __repr__(self):
        return "EffList(%s, %r)" % (self.sig.name, self.observe())


class CLT:
    __slots__ = ("sig", "run")

    def __init__(self, sig, run):
        self.sig = sig
        self.run = run  # run(success, seed) -> Computation; success(a, x) -> Computation

    @classmethod
    def unit(cls, a, sig) -> "CLT":
        return cls(sig, lambda s, x: s(a, x))

    @classmethod
    def empty(cls, sig) -> "CLT":
        return cls(sig, lambda s, x: fx.unit(x, sig))

    @classmethod
    def lift(cls, m: fx.Computation) -> "CLT":
        return cls(m.sig, lambda s, x: m.bind(lambda a: s(a, x)))

    def append(self, other: "CLT") -> "CLT":
        # Fold the right part into the seed first, then fold self over it.
        def run(s, x):
            return other.run(s, x).bind(lambda y: self.run(s, y))

        return CLT(self.sig, run)

    def bind(self, f) -> "CLT":
        def run(s, x):
            return self.run(lambda a, y: f(a).run(s, y), x)

        return CLT(self.sig, run)

    def observe_all(self) -> fx.Computation:
        return self.to_efflist().payload

    def to_efflist(self) -> "EffList":
        """Retract: prepend values onto an empty seed."""
        sig = self.sig
        return EffList(self.run(lambda a, xs: fx.unit([a] + xs, sig), []))

    @classmethod
    def from_efflist(cls, e: EffList) -> "CLT":
        """Represent an effects-first list as a right-to-left effectful fold."""
        sig = e.sig

        def run(s, x):
            def go(vs):
                if not vs:
                    return fx.unit(x, sig)
                return go(vs[1:]).bind(lambda acc: s(vs[0], acc))

            return e.payload.bind(go)

        return cls(sig, run)

    def observe(self):
        return self.to_efflist().observe()

    def __repr__(self):
        return "CLT(%s, %r)" % (self.sig.name, self.observe())


def eq(x, y) -> bool:
    return x.observe() == y.observe()


def witness_effects(sig):
    """A canonical pair of unit-valued effects used by the counterexample."""
    base = sig
    if isinstance(base, fx._Writer):
        if base.monoid.name == "str":
            return fx.tell("x", base), fx.tell("y", base)
        one = base.monoid.sample(random.Random(0))
        return fx.tell(one, base), fx.tell(base.monoid.combine(one, one), base)
    if isinstance(base, fx._State):
        domain = base.domain
        k = len(domain)

        def double(s):
            return domain[(domain.index(s) * 2) % k]

        def succ(s):
            return domain[(domain.index(s) + 1) % k]

        return fx.modify(double, base), fx.modify(succ, base)
    if isinstance(base, fx._Reader):
        return fx.ask(base).fmap(lambda _r: ()), fx.ask(base).fmap(lambda _r: ())
    return fx.unit((), base), fx.unit((), base)


def associativity_counterexample(sig=fx.WRITER_STR):
    """Observe both associations of a fixed bind chain over EffList.

    Returns (nested_last, nested_inner): the observation of (p >>= f) >>= g
    and of p >>= (a -> f a >>= g), where p yields two unit elements and f, g
    lift the signature's two witness effects.  Over commutative bases the
    two observations agree; the string writer makes the logs read "xxyy"
    versus "xyxy", and the state witnesses end in different states.
    """
    cx, cy = witness_effects(sig)
    p = EffList(fx.unit([(), ()], sig))
    f = lambda _a: EffList.lift(cx)
    g = lambda _a: EffList.lift(cy)
    lhs = p.bind(f).bind(g)
    rhs = p.bind(lambda a: f(a).bind(g))
    return lhs.observe(), rhs.observe()
