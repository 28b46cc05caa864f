import operator
import random

from backtracking import effects as fx
from backtracking import laws
from backtracking.resumption import EffTree, branch, branch_guarded, eval_tree, tree_map
from backtracking.steplist import StepList, eq

from conftest import denote_writer

W = fx.WRITER_STR


def test_unit_is_a_pure_leaf():
    assert EffTree.unit(3, fx.IDENTITY).observe() == ("leaf", 3)
    assert EffTree.unit(3, W).observe() == ("", ("leaf", 3))


def test_unit_flattens_to_singleton():
    assert eq(EffTree.unit(3, W).flatten(), StepList.unit(3, W))


def test_bind_substitutes_leaves():
    t = EffTree.unit(1, fx.IDENTITY).bind(
        lambda n: branch(EffTree.unit(n, fx.IDENTITY), EffTree.unit(n + 1, fx.IDENTITY))
    )
    assert t.observe() == ("branch", ("leaf", 1), ("leaf", 2))


def test_bind_left_unit():
    f = lambda n: branch(EffTree.unit(n, W), EffTree.unit(n * 2, W))
    lhs = EffTree.unit(5, W).bind(f)
    assert eq(lhs.flatten(), f(5).flatten())


def test_bind_sequences_guards_along_paths():
    t = EffTree(fx.Computation(W, ("a", ("leaf", 1))))
    out = t.bind(lambda n: EffTree(fx.Computation(W, ("b", ("leaf", n + 1)))))
    assert denote_writer(out.flatten()) == ("ab", [2])


def test_branch_guarded_pure_guard():
    t = branch_guarded(fx.unit((), fx.IDENTITY),
                       EffTree.unit(1, fx.IDENTITY), EffTree.unit(2, fx.IDENTITY))
    assert t.observe() == ("branch", ("leaf", 1), ("leaf", 2))
    both = StepList.unit(1, fx.IDENTITY).append(StepList.unit(2, fx.IDENTITY))
    assert eq(t.flatten(), both)


def test_branch_guarded_runs_guard_first():
    t = branch_guarded(fx.tell("g", W), EffTree.unit(1, W), EffTree.unit(2, W))
    assert denote_writer(t.flatten()) == ("g", [1, 2])


def test_flatten_is_left_to_right():
    sig = fx.IDENTITY
    t = branch(EffTree.unit(1, sig), branch(EffTree.unit(2, sig), EffTree.unit(3, sig)))
    assert t.flatten().observe_all().observe() == [1, 2, 3]


def test_flatten_is_a_monad_morphism(rng):
    cfg = laws.GenConfig(seed=3, cases=1, base=W)
    for _ in range(200):
        t = laws.gen_tree(rng, cfg).build()
        ft = laws.gen_fn_tree(rng, cfg)
        lhs = t.bind(ft).flatten()
        rhs = t.flatten().bind(lambda v: ft(v).flatten())
        assert eq(lhs, rhs)


def test_tree_monad_laws_post_flatten(rng):
    cfg = laws.GenConfig(seed=4, cases=1, base=W)
    for _ in range(200):
        t = laws.gen_tree(rng, cfg).build()
        f = laws.gen_fn_tree(rng, cfg)
        g = laws.gen_fn_tree(rng, cfg)
        a = rng.randrange(5)
        assert eq(EffTree.unit(a, W).bind(f).flatten(), f(a).flatten())
        assert eq(t.bind(lambda v: EffTree.unit(v, W)).flatten(), t.flatten())
        assert eq(
            t.bind(f).bind(g).flatten(),
            t.bind(lambda v: f(v).bind(g)).flatten(),
        )


def test_eval_tree_examples():
    assert eval_tree(("branch", ("leaf", 2), ("leaf", 3)), operator.add) == 5
    assert eval_tree(("leaf", 7), operator.add) == 7
    nested = ("branch", ("branch", ("leaf", 1), ("leaf", 2)), ("leaf", 3))
    assert eval_tree(nested, operator.add) == 6


def test_eval_tree_right_distributivity():
    # multiplying the result distributes into the leaves
    rng = random.Random(9)
    for _ in range(200):
        t = fx.FREEBIN.sample(rng, lambda r: r.randrange(6))
        y = rng.randrange(1, 5)
        assert eval_tree(t, operator.add) * y == eval_tree(
            tree_map(t, lambda x: x * y), operator.add
        )
