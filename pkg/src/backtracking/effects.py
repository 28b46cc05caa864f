"""Closed family of base effects with finitely observable computations.

Every computation in this library runs over one of the signatures below
(identity, partial, error, state, writer, reader, thunk, counter, freebin).
Each signature supplies unit/bind/fmap plus a canonical `observe` that
renders a computation as plain comparable data; comparing these renderings
is how the whole library decides equality.  State and reader need a finite
domain of states/environments declared up front so the rendering can run
them everywhere.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable


class Effect:
    """A base effect signature: monadic structure plus canonical observation."""

    name = "?"
    commutative = False

    def unit(self, v):
        raise NotImplementedError

    def bind(self, p, k):
        """Sequence k over every produced value; k maps a value to a payload."""
        raise NotImplementedError

    def fmap(self, p, f):
        """Map over produced values without touching effects."""
        raise NotImplementedError

    def observe(self, p):
        """Canonical comparable rendering of a payload."""
        raise NotImplementedError

    def values_view(self, p):
        """Produced values only, effect decoration dropped."""
        raise NotImplementedError

    def sample(self, rng, gen_value):
        """A random payload with values drawn from gen_value(rng)."""
        raise NotImplementedError

    def __repr__(self):
        return self.name


class Computation:
    """An effectful value over one base signature."""

    __slots__ = ("sig", "payload")

    def __init__(self, sig, payload):
        self.sig = sig
        self.payload = payload

    def bind(self, k: Callable[[object], "Computation"]) -> "Computation":
        return Computation(self.sig, self.sig.bind(self.payload, lambda v: k(v).payload))

    def fmap(self, f) -> "Computation":
        return Computation(self.sig, self.sig.fmap(self.payload, f))

    def observe(self):
        return self.sig.observe(self.payload)

    def __repr__(self):
        return "Computation(%s, %r)" % (self.sig.name, self.observe())


def unit(v, sig: Effect) -> Computation:
    return Computation(sig, sig.unit(v))


def bind(m: Computation, k) -> Computation:
    return m.bind(k)


def fmap(m: Computation, f) -> Computation:
    return m.fmap(f)


def observe(m: Computation):
    return m.observe()


def eq_obs(m: Computation, n: Computation) -> bool:
    return m.observe() == n.observe()


def strength(m: Computation, b) -> Computation:
    """Pair every produced value with b on the right; effects unchanged."""
    return m.fmap(lambda a: (a, b))


def left_strength(a, m: Computation) -> Computation:
    """Pair a on the left with every produced value; effects unchanged."""
    return m.fmap(lambda b: (a, b))


# ---------------------------------------------------------------------------
# Signatures


class _Identity(Effect):
    name = "identity"
    commutative = True

    def unit(self, v):
        return v

    def bind(self, p, k):
        return k(p)

    def fmap(self, p, f):
        return f(p)

    def observe(self, p):
        return p

    def values_view(self, p):
        return p

    def sample(self, rng, gen_value):
        return gen_value(rng)


NOTHING = ("nothing",)


class _Partial(Effect):
    name = "partial"
    commutative = True

    def unit(self, v):
        return ("just", v)

    def bind(self, p, k):
        return k(p[1]) if p[0] == "just" else p

    def fmap(self, p, f):
        return ("just", f(p[1])) if p[0] == "just" else p

    def observe(self, p):
        return p

    def values_view(self, p):
        return p

    def sample(self, rng, gen_value):
        if rng.random() < 0.25:
            return NOTHING
        return ("just", gen_value(rng))


class _Error(Effect):
    name = "error"
    commutative = False  # distinct errors do not commute

    def unit(self, v):
        return ("ok", v)

    def bind(self, p, k):
        return k(p[1]) if p[0] == "ok" else p

    def fmap(self, p, f):
        return ("ok", f(p[1])) if p[0] == "ok" else p

    def observe(self, p):
        return p

    def values_view(self, p):
        return p

    def sample(self, rng, gen_value):
        if rng.random() < 0.25:
            return ("err", rng.randrange(3))
        return ("ok", gen_value(rng))


@dataclass(frozen=True)
class LogMonoid:
    """A monoid of writer logs; combine must be associative with empty as unit."""

    name: str
    empty: object
    combine: Callable
    commutative: bool
    sample: Callable  # rng -> log value


# Log samples are nonempty so a later element's guard always extends the log.
STRINGS = LogMonoid(
    name="str",
    empty="",
    combine=lambda a, b: a + b,
    commutative=False,
    sample=lambda rng: rng.choice("abcdefgh") * rng.randint(1, 2),
)

NAT_SUM = LogMonoid(
    name="nat",
    empty=0,
    combine=lambda a, b: a + b,
    commutative=True,
    sample=lambda rng: rng.randrange(1, 5),
)


class _Writer(Effect):
    def __init__(self, monoid: LogMonoid):
        self.monoid = monoid
        self.name = "writer-" + monoid.name
        self.commutative = monoid.commutative

    def unit(self, v):
        return (self.monoid.empty, v)

    def bind(self, p, k):
        w, v = p
        w2, v2 = k(v)
        return (self.monoid.combine(w, w2), v2)

    def fmap(self, p, f):
        return (p[0], f(p[1]))

    def observe(self, p):
        return p

    def values_view(self, p):
        return p[1]

    def sample(self, rng, gen_value):
        return (self.monoid.sample(rng), gen_value(rng))


class _State(Effect):
    commutative = False

    def __init__(self, domain):
        self.domain = tuple(domain)
        if not self.domain:
            raise ValueError("state domain must be nonempty")
        self.name = "state%d" % len(self.domain)

    def unit(self, v):
        return lambda s: (v, s)

    def bind(self, p, k):
        def run(s):
            v, s1 = p(s)
            return k(v)(s1)

        return run

    def fmap(self, p, f):
        def run(s):
            v, s1 = p(s)
            return (f(v), s1)

        return run

    def observe(self, p):
        return tuple((s, p(s)) for s in self.domain)

    def values_view(self, p):
        return tuple((s, p(s)[0]) for s in self.domain)

    def sample(self, rng, gen_value):
        table = {s: (gen_value(rng), rng.choice(self.domain)) for s in self.domain}
        return lambda s: table[s]


class _Reader(Effect):
    commutative = True

    def __init__(self, domain):
        self.domain = tuple(domain)
        if not self.domain:
            raise ValueError("reader domain must be nonempty")
        self.name = "reader%d" % len(self.domain)

    def unit(self, v):
        return lambda r: v

    def bind(self, p, k):
        return lambda r: k(p(r))(r)

    def fmap(self, p, f):
        return lambda r: f(p(r))

    def observe(self, p):
        return tuple((r, p(r)) for r in self.domain)

    def values_view(self, p):
        return self.observe(p)

    def sample(self, rng, gen_value):
        table = {r: gen_value(rng) for r in self.domain}
        return lambda r: table[r]


class _Thunk(Effect):
    """Suspended computations; observation forces and reports the force count."""

    name = "thunk"
    commutative = True

    def unit(self, v):
        return ("now", v)

    def bind(self, p, k):
        if p[0] == "now":
            return k(p[1])
        return ("later", lambda: self.bind(p[1](), k))

    def fmap(self, p, f):
        if p[0] == "now":
            return ("now", f(p[1]))
        return ("later", lambda: self.fmap(p[1](), f))

    def force(self, p):
        n = 0
        while p[0] == "later":
            p = p[1]()
            n += 1
        return p[1], n

    def observe(self, p):
        return self.force(p)

    def values_view(self, p):
        return self.force(p)[0]

    def sample(self, rng, gen_value):
        p = ("now", gen_value(rng))
        for _ in range(rng.randrange(3)):
            p = ("later", (lambda q: lambda: q)(p))
        return p


class _Counter(Effect):
    """Instruments an inner signature with a per-run count of binds.

    The count rides with the produced value (one increment per bind), so a
    computation's observed count is exactly the number of instrumented binds
    whose results flowed into what was observed.  Counts carried by a value
    are lost if the inner effect short-circuits past it.
    """

    def __init__(self, inner: Effect):
        self.inner = inner
        self.name = "counter-" + inner.name
        self.commutative = inner.commutative

    def unit(self, v):
        return self.inner.unit((v, 0))

    def bind(self, p, k):
        inner = self.inner

        def step(pair):
            v, n = pair
            return inner.fmap(k(v), lambda q: (q[0], n + q[1] + 1))

        return inner.bind(p, step)

    def fmap(self, p, f):
        return self.inner.fmap(p, lambda q: (f(q[0]), q[1]))

    def observe(self, p):
        counts = self.inner.values_view(self.inner.fmap(p, lambda q: q[1]))
        vals = self.inner.observe(self.inner.fmap(p, lambda q: q[0]))
        return (counts, vals)

    def values_view(self, p):
        return self.inner.values_view(self.inner.fmap(p, lambda q: q[0]))

    def sample(self, rng, gen_value):
        return self.inner.sample(rng, lambda r: (gen_value(r), 0))

    def promote(self, m: Computation) -> Computation:
        """Embed an inner computation with a zero count."""
        if m.sig is not self.inner:
            raise ValueError("computation is not over the wrapped signature")
        return Computation(self, self.inner.fmap(m.payload, lambda v: (v, 0)))


class _FreeBin(Effect):
    """Finite binary trees over values: the free single-binary-op effect."""

    name = "freebin"
    commutative = False

    def unit(self, v):
        return ("leaf", v)

    def bind(self, p, k):
        if p[0] == "leaf":
            return k(p[1])
        return ("branch", self.bind(p[1], k), self.bind(p[2], k))

    def fmap(self, p, f):
        if p[0] == "leaf":
            return ("leaf", f(p[1]))
        return ("branch", self.fmap(p[1], f), self.fmap(p[2], f))

    def observe(self, p):
        return p

    def values_view(self, p):
        return p

    def sample(self, rng, gen_value):
        def go(depth):
            if depth <= 0 or rng.random() < 0.6:
                return ("leaf", gen_value(rng))
            return ("branch", go(depth - 1), go(depth - 1))

        return go(2)


IDENTITY = _Identity()
PARTIAL = _Partial()
ERROR = _Error()
WRITER_STR = _Writer(STRINGS)
WRITER_NAT = _Writer(NAT_SUM)
THUNK = _Thunk()
FREEBIN = _FreeBin()


def state(domain) -> _State:
    return _State(domain)


def reader(domain) -> _Reader:
    return _Reader(domain)


def writer(monoid: LogMonoid) -> _Writer:
    return _Writer(monoid)


def counter(inner: Effect) -> _Counter:
    return _Counter(inner)


STATE3 = state((0, 1, 2))
READER3 = reader((0, 1, 2))

#: Named signatures addressable from the CLI and the law harness.
BASES = {
    sig.name: sig
    for sig in (
        IDENTITY,
        PARTIAL,
        ERROR,
        WRITER_STR,
        WRITER_NAT,
        STATE3,
        READER3,
        THUNK,
        FREEBIN,
        counter(IDENTITY),
    )
}


# ---------------------------------------------------------------------------
# Effect constructors


def _base_of(sig):
    return sig.inner if isinstance(sig, _Counter) else sig


def _promoted(sig, m):
    return sig.promote(m) if isinstance(sig, _Counter) else m


def tell(w, sig) -> Computation:
    """Append w to the log of a writer (or counter-wrapped writer) signature."""
    base = _base_of(sig)
    if not isinstance(base, _Writer):
        raise TypeError("tell requires a writer signature")
    return _promoted(sig, Computation(base, (w, ())))


def put(s, sig) -> Computation:
    base = _base_of(sig)
    if not isinstance(base, _State):
        raise TypeError("put requires a state signature")
    if s not in base.domain:
        raise ValueError("state %r outside the declared domain" % (s,))
    return _promoted(sig, Computation(base, lambda _ignored: ((), s)))


def get(sig) -> Computation:
    base = _base_of(sig)
    if not isinstance(base, _State):
        raise TypeError("get requires a state signature")
    return _promoted(sig, Computation(base, lambda s: (s, s)))


def modify(f, sig) -> Computation:
    base = _base_of(sig)
    if not isinstance(base, _State):
        raise TypeError("modify requires a state signature")
    return _promoted(sig, Computation(base, lambda s: ((), f(s))))


def ask(sig) -> Computation:
    base = _base_of(sig)
    if not isinstance(base, _Reader):
        raise TypeError("ask requires a reader signature")
    return _promoted(sig, Computation(base, lambda r: r))


def throw(e, sig) -> Computation:
    base = _base_of(sig)
    if not isinstance(base, _Error):
        raise TypeError("throw requires the error signature")
    return _promoted(sig, Computation(base, ("err", e)))


def nothing(sig) -> Computation:
    base = _base_of(sig)
    if not isinstance(base, _Partial):
        raise TypeError("nothing requires the partial signature")
    return _promoted(sig, Computation(base, NOTHING))


def suspend(fn, sig=THUNK) -> Computation:
    """Delay fn() behind one suspension; forcing it costs one tick."""
    base = _base_of(sig)
    if not isinstance(base, _Thunk):
        raise TypeError("suspend requires the thunk signature")
    return _promoted(sig, Computation(base, ("later", lambda: fn().payload)))


def free_branch(m: Computation, n: Computation) -> Computation:
    """Join two freebin computations under a fresh branch node."""
    if not isinstance(m.sig, _FreeBin):
        raise TypeError("free_branch requires the freebin signature")
    return Computation(m.sig, ("branch", m.payload, n.payload))


# ---------------------------------------------------------------------------
# Commutativity checking


def _small_int(rng):
    return rng.randrange(-3, 7)


def sample_computation(sig: Effect, rng: random.Random, gen_value=_small_int) -> Computation:
    return Computation(sig, sig.sample(rng, gen_value))


def check_commutativity(sig: Effect, samples: int = 500, seed: int = 0) -> bool:
    """Sampled check that the two orders of combining effects agree.

    Compares bind(m, a -> fmap(n, b -> (a,b))) against
    bind(n, b -> fmap(m, a -> (a,b))) under observation equality.
    """
    rng = random.Random(seed)
    for _ in range(samples):
        m = sample_computation(sig, rng)
        n = sample_computation(sig, rng)
        lhs = m.bind(lambda a: n.fmap(lambda b: (a, b)))
        rhs = n.bind(lambda b: m.fmap(lambda a: (a, b)))
        if lhs.observe() != rhs.observe():
            return False
    return True
