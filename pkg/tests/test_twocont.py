from backtracking import effects as fx
from backtracking import laws
from backtracking.steplist import StepList
from backtracking.steplist import eq as sl_eq
from backtracking.twocont import Backtr, eq

from conftest import wlist

W = fx.WRITER_STR


def test_unit_feeds_the_success_continuation():
    k = Backtr.unit(5, fx.IDENTITY)
    out = k.run(lambda a, rest: rest.fmap(lambda vs: [a] + vs), fx.unit([], fx.IDENTITY))
    assert out.observe() == [5]


def test_unit_converts_to_singleton():
    assert sl_eq(Backtr.unit(5, W).to_steplist(), StepList.unit(5, W))
    assert Backtr.unit(5, W).observe_all().observe() == ("", [5])


def test_empty_runs_the_failure_computation():
    assert sl_eq(Backtr.empty(W).to_steplist(), StepList.empty(W))
    assert Backtr.empty(W).observe_all().observe() == ("", [])


def test_append_is_nested_failure():
    x = Backtr.from_steplist(wlist("a", 1, ""))
    y = Backtr.from_steplist(wlist("c", 2, ""))
    assert sl_eq(x.append(y).to_steplist(), wlist("a", 1, "c", 2, ""))


def test_append_right_identity():
    x = Backtr.from_steplist(wlist("a", 1, "b"))
    assert eq(x.append(Backtr.empty(W)), x)


def test_bind_matches_steplist_bind(rng):
    cfg = laws.GenConfig(seed=21, cases=1, base=W)
    for _ in range(200):
        xs = laws.gen_steplist(rng, cfg).build()
        g = laws.gen_fn_steplist(rng, cfg)
        lhs = Backtr.from_steplist(xs).bind(lambda a: Backtr.from_steplist(g(a)))
        rhs = xs.bind(g)
        assert sl_eq(lhs.to_steplist(), rhs)


def test_bind_left_unit_and_left_zero():
    f = lambda v: Backtr.from_steplist(wlist("f", v * 2, ""))
    assert eq(Backtr.unit(3, W).bind(f), f(3))
    assert eq(Backtr.empty(W).bind(f), Backtr.empty(W))


def test_lift_binds_the_base_computation():
    m = fx.Computation(W, ("a", 5))
    assert sl_eq(Backtr.lift(m).to_steplist(), wlist("a", 5, ""))
    assert eq(Backtr.lift(fx.unit(9, W)), Backtr.unit(9, W))


def test_lift_is_a_monad_morphism(rng):
    for _ in range(200):
        m = fx.sample_computation(W, rng)
        k = lambda v: fx.Computation(W, ("k", v + 1))
        lhs = Backtr.lift(m.bind(k))
        rhs = Backtr.lift(m).bind(lambda v: Backtr.lift(k(v)))
        assert eq(lhs, rhs)


def test_roundtrip_is_the_identity(rng):
    for base in (fx.IDENTITY, fx.WRITER_STR, fx.STATE3, fx.PARTIAL):
        cfg = laws.GenConfig(seed=22, cases=1, base=base)
        for _ in range(150):
            xs = laws.gen_steplist(rng, cfg).build()
            assert sl_eq(Backtr.from_steplist(xs).to_steplist(), xs)


def test_representation_is_a_homomorphism(rng):
    cfg = laws.GenConfig(seed=23, cases=1, base=W)
    rep = Backtr.from_steplist
    for _ in range(150):
        xs = laws.gen_steplist(rng, cfg).build()
        ys = laws.gen_steplist(rng, cfg).build()
        assert sl_eq(rep(xs.append(ys)).to_steplist(), rep(xs).append(rep(ys)).to_steplist())
    assert sl_eq(rep(StepList.empty(W)).to_steplist(), Backtr.empty(W).to_steplist())


def test_observe_all_equals_steplist_observe_all(rng):
    cfg = laws.GenConfig(seed=24, cases=1, base=W)
    for _ in range(150):
        xs = laws.gen_steplist(rng, cfg).build()
        k = Backtr.from_steplist(xs)
        assert k.observe_all().observe() == xs.observe_all().observe()
        assert k.observe_all().observe() == k.to_steplist().observe_all().observe()


def test_observe_all_examples():
    assert Backtr.from_steplist(wlist("a", 1, "b")).observe_all().observe() == ("ab", [1])
    assert Backtr.empty(W).observe_all().observe() == ("", [])
    two = Backtr.unit(1, fx.IDENTITY).append(Backtr.unit(2, fx.IDENTITY))
    assert two.observe_all().observe() == [1, 2]
    assert two.to_steplist().observe_all().observe() == [1, 2]


def _left_nested_counts(cls, n):
    sig = fx.counter(fx.IDENTITY)
    acc = cls.unit(0, sig)
    for i in range(1, n):
        acc = acc.append(cls.unit(i, sig))
    count, values = acc.observe_all().observe()
    assert values == list(range(n))
    return count


def test_left_nested_append_cost_separation():
    # two-continuation: one instrumented bind per element
    b1 = _left_nested_counts(Backtr, 60)
    b2 = _left_nested_counts(Backtr, 120)
    assert b1 == 60 and b2 == 120
    # step lists: rebuilding the left list each time is quadratic
    s1 = _left_nested_counts(StepList, 60)
    s2 = _left_nested_counts(StepList, 120)
    assert 3.4 <= s2 / s1 <= 4.6
    assert s1 > 60 * 10
