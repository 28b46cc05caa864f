"""Step-guarded lists: backtracking where every element carries its own guard.

A StepList is a base computation of a step, and a step is either the end
marker or a value together with another StepList.  Consumers pay as they
go: taking k results runs the guards of the first k steps and nothing
after them.
"""

from __future__ import annotations

from . import effects as fx

DONE = ("done",)


def _yield(a, tail):
    return ("yield", a, tail)


class StepList:
    __slots__ = ("head", "_obs")

    def __init__(self, head: fx.Computation):
        self.head = head
        self._obs = None

    @property
    def sig(self):
        return self.head.sig

    @classmethod
    def unit(cls, a, sig) -> "StepList":
        return cls(fx.unit(_yield(a, cls.empty(sig)), sig))

    @classmethod
    def empty(cls, sig) -> "StepList":
        return cls(fx.unit(DONE, sig))

    @classmethod
    def lift(cls, m: fx.Computation) -> "StepList":
        """A singleton whose only guard is m itself."""
        sig = m.sig
        return cls(m.fmap(lambda a: _yield(a, cls.empty(sig))))

    def append(self, other: "StepList") -> "StepList":
        """Concatenation; self's effects run before other's."""
        sig = self.sig

        def k(step):
            if step[0] == "done":
                return other.head.payload
            _, a, t = step
            return sig.unit(_yield(a, t.append(other)))

        return StepList(fx.Computation(sig, sig.bind(self.head.payload, k)))

    def bind(self, f) -> "StepList":
        sig = self.sig

        def k(step):
            if step[0] == "done":
                return sig.unit(DONE)
            _, a, t = step
            return f(a).append(t.bind(f)).head.payload

        return StepList(fx.Computation(sig, sig.bind(self.head.payload, k)))

    def map(self, g) -> "StepList":
        """Rename element values; guards untouched."""

        def r(step):
            if step[0] == "done":
                return step
            _, a, t = step
            return _yield(g(a), t.map(g))

        return StepList(self.head.fmap(r))

    def observe_all(self) -> fx.Computation:
        """Sequence every guard in list order and collect the values."""
        sig = self.sig

        def k(step):
            if step[0] == "done":
                return sig.unit([])
            _, a, t = step
            return sig.fmap(t.observe_all().payload, lambda vs, a=a: [a] + vs)

        return fx.Computation(sig, sig.bind(self.head.payload, k))

    def take_first(self) -> fx.Computation:
        """Perform only the first element's guard; None when exhausted."""

        def r(step):
            return None if step[0] == "done" else step[1]

        return self.head.fmap(r)

    def take_n(self, n: int) -> fx.Computation:
        """Up to n values, forcing only the guards of elements 1..n."""
        sig = self.sig
        if n <= 0:
            return fx.unit([], sig)

        def k(step):
            if step[0] == "done":
                return sig.unit([])
            _, a, t = step
            return sig.fmap(t.take_n(n - 1).payload, lambda vs, a=a: [a] + vs)

        return fx.Computation(sig, sig.bind(self.head.payload, k))

    def fold(self, collapse, combine, empty, embed):
        """Interpret the list into an algebra.

        collapse eliminates one layer of base effect (a structure map
        Computation[B] -> B), combine and empty give B a monoid, and embed
        maps elements into B.  The result is lawful when collapse respects
        unit and bind and choice right-distributes over the effect
        operations under combine; see laws.check_fold_algebra for a
        sampled check of those obligations.
        """

        def r(step):
            if step[0] == "done":
                return empty
            _, a, t = step
            return combine(embed(a), t.fold(collapse, combine, empty, embed))

        return collapse(self.head.fmap(r))

    def observe(self):
        """Layer-precise rendering: the observation of every forcing prefix.

        Element i's rendering is the observation of take_n(i); the tuple
        grows until forcing one more layer changes nothing.  Two lists get
        the same rendering iff every streaming consumer sees the same
        values and the same per-layer effects, so guard placement is
        distinguished: ("a" then 1 then "") differs from ("" then 1 then
        "a") already at the first prefix.
        """
        if self._obs is not None:
            return self._obs
        out = [self.take_n(0).observe()]
        i = 1
        while True:
            cur = self.take_n(i).observe()
            if cur == out[-1]:
                self._obs = tuple(out)
                return self._obs
            out.append(cur)
            if i > 100000:
                raise RuntimeError("observation did not stabilize; list not finite?")
            i += 1

    def __repr__(self):
        return "StepList(%s, %r)" % (self.sig.name, self.observe())


def eq(xs: StepList, ys: StepList) -> bool:
    return xs.observe() == ys.observe()
