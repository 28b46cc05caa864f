import operator
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from backtracking import effects as fx
from backtracking import laws
from backtracking.resumption import eval_tree
from backtracking.steplist import StepList, eq

from conftest import denote_writer, wlist

W = fx.WRITER_STR


def test_unit_is_a_pure_singleton():
    xs = StepList.unit(7, W)
    assert denote_writer(xs) == ("", [7])
    assert xs.observe_all().observe() == ("", [7])
    assert StepList.unit(7, fx.IDENTITY).observe_all().observe() == [7]


def test_empty_is_a_pure_done_layer():
    assert denote_writer(StepList.empty(W)) == ("", [])
    assert StepList.empty(W).observe_all().observe() == ("", [])


def test_empty_is_left_identity_for_append():
    xs = wlist("a", 1, "b")
    assert eq(StepList.empty(W).append(xs), xs)


def test_append_merges_adjacent_guards():
    xs, ys = wlist("a", 1, "b"), wlist("c", 2, "d")
    out = xs.append(ys)
    # oracle: reference denotation of both sides
    assert denote_writer(out) == ("abcd", [1, 2])
    assert out.observe() == wlist("a", 1, "bc", 2, "d").observe()


def test_append_right_identity():
    xs = wlist("a", 1, "b")
    assert eq(xs.append(StepList.empty(W)), xs)


def test_append_is_list_append_over_identity():
    xs = StepList.unit(1, fx.IDENTITY)
    ys = StepList.unit(2, fx.IDENTITY).append(StepList.unit(3, fx.IDENTITY))
    assert xs.append(ys).observe_all().observe() == [1, 2, 3]


def test_bind_substitutes_and_sequences():
    xs = wlist("a", 1, "b", 2, "c")
    f = lambda n: wlist("", n, "", n + 10, "")
    out = xs.bind(f)
    assert denote_writer(out) == ("abc", [1, 11, 2, 12])
    assert out.observe() == wlist("a", 1, "", 11, "b", 2, "", 12, "c").observe()


def test_bind_left_unit():
    f = lambda n: wlist("x", n * 2, "y")
    assert eq(StepList.unit(3, W).bind(f), f(3))


def test_bind_on_empty_is_empty():
    f = lambda n: wlist("x", n, "y")
    out = StepList.empty(W).bind(f)
    assert out.observe_all().observe() == ("", [])
    assert eq(out, StepList.empty(W))


def test_lift_guards_a_single_element():
    m = fx.Computation(W, ("a", 5))
    out = StepList.lift(m)
    assert denote_writer(out) == ("a", [5])
    assert out.observe() == wlist("a", 5, "").observe()


def test_lift_of_unit_is_unit():
    assert eq(StepList.lift(fx.unit(5, W)), StepList.unit(5, W))


def test_lift_is_a_monad_morphism_on_samples(rng):
    for _ in range(200):
        m = fx.sample_computation(W, rng)
        k = lambda v: fx.Computation(W, ("k", v + 1))
        lhs = StepList.lift(m.bind(k))
        rhs = StepList.lift(m).bind(lambda v: StepList.lift(k(v)))
        assert eq(lhs, rhs)


def test_observe_all_examples():
    assert wlist("a", 1, "b", 2, "c").observe_all().observe() == ("abc", [1, 2])
    two = StepList.unit(1, fx.IDENTITY).append(StepList.unit(2, fx.IDENTITY))
    assert two.observe_all().observe() == [1, 2]
    assert StepList.empty(W).observe_all().observe() == ("", [])


def test_observe_all_of_append_matches_base_level_append(rng):
    cfg = laws.GenConfig(seed=5, cases=1, base=W)
    for _ in range(200):
        xs = laws.gen_steplist(rng, cfg).build()
        ys = laws.gen_steplist(rng, cfg).build()
        direct = xs.append(ys).observe_all()
        oracle = xs.observe_all().bind(
            lambda v1: ys.observe_all().fmap(lambda v2, v1=v1: v1 + v2)
        )
        assert fx.eq_obs(direct, oracle)


def test_take_first_performs_only_the_first_guard():
    assert wlist("a", 1, "b", 2, "c").take_first().observe() == ("a", 1)
    assert wlist("z").take_first().observe() == ("z", None)
    assert StepList.unit(4, W).take_first().observe() == ("", 4)


def test_take_n_prefix_semantics():
    xs = wlist("a", 1, "b", 2, "c")
    assert xs.take_n(1).observe() == ("a", [1])
    assert xs.take_n(0).observe() == ("", [])
    assert wlist("a", 1, "b").take_n(5).observe() == ("ab", [1])


def test_take_n_log_is_prefix_of_full_log(rng):
    cfg = laws.GenConfig(seed=6, cases=1, base=W)
    for _ in range(300):
        xs = laws.gen_steplist(rng, cfg, min_len=2).build()
        full_log, _ = xs.observe_all().observe()
        for n in range(4):
            log, _ = xs.take_n(n).observe()
            assert full_log.startswith(log)


def test_layerwise_observation_distinguishes_guard_placement():
    assert eq(wlist("a", 1, "b"), wlist("a", 1, "b"))
    assert not eq(wlist("a", 1, ""), wlist("", 1, "a"))


def test_fold_interprets_choice_into_an_algebra():
    # free binary-operation base: effect nodes add, the monoid multiplies
    fb = fx.FREEBIN
    alg = lambda comp: eval_tree(comp.payload, operator.add)
    two_or_three = StepList(
        fx.free_branch(StepList.unit(2, fb).head, StepList.unit(3, fb).head)
    )
    assert two_or_three.fold(alg, operator.mul, 1, lambda x: x) == 5
    extended = two_or_three.append(StepList.unit(4, fb))
    assert extended.fold(alg, operator.mul, 1, lambda x: x) == 20
    assert (2 + 3) * 4 == 2 * 4 + 3 * 4 == 20


def test_fold_with_list_algebra_is_observe_all_over_identity(rng):
    cfg = laws.GenConfig(seed=7, cases=1, base=fx.IDENTITY)
    for _ in range(100):
        xs = laws.gen_steplist(rng, cfg).build()
        folded = xs.fold(lambda c: c.payload, operator.add, [], lambda a: [a])
        assert folded == xs.observe_all().observe()


def test_fold_algebra_checker_accepts_the_example_algebra():
    alg = lambda comp: eval_tree(comp.payload, operator.add)
    ok = laws.check_fold_algebra(
        alg, operator.mul, 1, fx.FREEBIN, lambda rng: rng.randrange(0, 5)
    )
    assert ok


def test_fold_algebra_checker_rejects_non_distributive_monoid():
    # addition does not right-distribute over addition
    alg = lambda comp: eval_tree(comp.payload, operator.add)
    ok = laws.check_fold_algebra(
        alg, operator.add, 0, fx.FREEBIN, lambda rng: rng.randrange(1, 5)
    )
    assert not ok


@settings(max_examples=150, derandomize=True)
@given(st.lists(st.integers(-5, 5), max_size=6), st.integers(-3, 3))
def test_monad_laws_over_identity_base(values, a):
    sig = fx.IDENTITY
    xs = StepList.empty(sig)
    for v in values:
        xs = xs.append(StepList.unit(v, sig))
    f = lambda n: StepList.unit(n, sig).append(StepList.unit(n + 1, sig))
    assert eq(StepList.unit(a, sig).bind(f), f(a))
    assert eq(xs.bind(lambda v: StepList.unit(v, sig)), xs)
    g = lambda n: StepList.unit(n * 2, sig)
    assert eq(xs.bind(f).bind(g), xs.bind(lambda v: f(v).bind(g)))


def test_left_distributivity_example():
    xs, ys = wlist("a", 1, "b"), wlist("c", 2, "d")
    f = lambda n: wlist("f", n * 10, "g")
    assert eq(xs.append(ys).bind(f), xs.bind(f).append(ys.bind(f)))


def test_map_renames_values_only():
    xs = wlist("a", 1, "b", 2, "c")
    assert denote_writer(xs.map(lambda v: v * 10)) == ("abc", [10, 20])
