"""Two-continuation backtracking: success takes a value and the failure rest.

A Backtr value runs, for any answer type, a success continuation
(value, rest-computation) -> computation and a failure computation.
Composition of alternatives is function composition, so appending is
constant-time; conversion back to a StepList is the retraction that makes
the step list and this encoding interchangeable.
"""

from __future__ import annotations

from . import effects as fx
from .steplist import DONE, StepList, _yield


class Backtr:
    __slots__ = ("sig", "run")

    def __init__(self, sig, run):
        self.sig = sig
        self.run = run  # run(success, failure) -> Computation

    @classmethod
    def unit(cls, a, sig) -> "Backtr":
        return cls(sig, lambda s, f: s(a, f))

    @classmethod
    def empty(cls, sig) -> "Backtr":
        return cls(sig, lambda s, f: f)

    @classmethod
    def lift(cls, m: fx.Computation) -> "Backtr":
        return cls(m.sig, lambda s, f: m.bind(lambda a: s(a, f)))

    def append(self, other: "Backtr") -> "Backtr":
        return Backtr(self.sig, lambda s, f: self.run(s, other.run(s, f)))

    def bind(self, f) -> "Backtr":
        def run(s, failure):
            return self.run(lambda a, rest: f(a).run(s, rest), failure)

        return Backtr(self.sig, run)

    def observe_all(self) -> fx.Computation:
        """Run at the list answer type: cons on success, nil on failure."""
        sig = self.sig

        def succ(a, rest):
            return rest.bind(lambda vs: fx.unit([a] + vs, sig))

        return self.run(succ, fx.unit([], sig))

    def to_steplist(self) -> StepList:
        """Retract to a step list; the step type is the answer type."""
        sig = self.sig

        def succ(a, rest):
            return fx.unit(_yield(a, StepList(rest)), sig)

        return StepList(self.run(succ, fx.unit(DONE, sig)))

    @classmethod
    def from_steplist(cls, xs: StepList) -> "Backtr":
        """Represent a step list as its action on continuations."""
        sig = xs.sig

        def run(s, failure):
            def go(t):
                def k(step):
                    if step[0] == "done":
                        return failure
                    _, a, tail = step
                    return s(a, go(tail))

                return t.head.bind(k)

            return go(xs)

        return cls(sig, run)

    def observe(self):
        return self.to_steplist().observe()

    def __repr__(self):
        return "Backtr(%s, %r)" % (self.sig.name, self.observe())


def eq(x: Backtr, y: Backtr) -> bool:
    return x.observe_all().observe() == y.observe_all().observe()
