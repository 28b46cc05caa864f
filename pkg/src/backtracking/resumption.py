"""Effect-guarded binary trees and their flattening into step lists.

Trees are strictly binary with no empty case; the empty alternative lives
only in StepList.  Flattening maps leaves to singletons and branches to
ordered concatenation, preserving node guards left to right.
"""

from __future__ import annotations

from . import effects as fx
from .steplist import StepList


class EffTree:
    __slots__ = ("node",)

    def __init__(self, node: fx.Computation):
        self.node = node  # value is ("leaf", a) or ("branch", EffTree, EffTree)

    @property
    def sig(self):
        return self.node.sig

    @classmethod
    def unit(cls, a, sig) -> "EffTree":
        return cls(fx.unit(("leaf", a), sig))

    def bind(self, f) -> "EffTree":
        sig = self.sig

        def k(node):
            if node[0] == "leaf":
                return f(node[1]).node
            _, l, r = node
            return fx.unit(("branch", l.bind(f), r.bind(f)), sig)

        return EffTree(self.node.bind(k))

    def map(self, g) -> "EffTree":
        def r(node):
            if node[0] == "leaf":
                return ("leaf", g(node[1]))
            _, l, rt = node
            return ("branch", l.map(g), rt.map(g))

        return EffTree(self.node.fmap(r))

    def flatten(self) -> StepList:
        """Left-to-right list of leaves, node guards kept in order."""
        sig = self.sig

        def k(node):
            if node[0] == "leaf":
                return StepList.unit(node[1], sig).head
            _, l, r = node
            return l.flatten().append(r.flatten()).head

        return StepList(self.node.bind(k))

    def observe(self):
        def r(node):
            if node[0] == "leaf":
                return node
            _, l, rt = node
            return ("branch", l.observe(), rt.observe())

        return self.node.fmap(r).observe()

    def __repr__(self):
        return "EffTree(%s, %r)" % (self.sig.name, self.observe())


def branch_guarded(guard: fx.Computation, left: EffTree, right: EffTree) -> EffTree:
    """A node that performs guard and then branches."""
    return EffTree(guard.fmap(lambda _ignored: ("branch", left, right)))


def branch(left: EffTree, right: EffTree) -> EffTree:
    return branch_guarded(fx.unit((), left.sig), left, right)


def eval_tree(tree, op):
    """Fold a raw freebin tree: leaves are values, branches apply op."""
    if tree[0] == "leaf":
        return tree[1]
    return op(eval_tree(tree[1], op), eval_tree(tree[2], op))


def tree_map(tree, f):
    """Map over the leaves of a raw freebin tree."""
    if tree[0] == "leaf":
        return ("leaf", f(tree[1]))
    return ("branch", tree_map(tree[1], f), tree_map(tree[2], f))
