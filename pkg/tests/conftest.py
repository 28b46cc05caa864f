"""Shared builders and independent oracles for the test suite."""

import pytest

from backtracking import effects as fx
from backtracking.steplist import StepList


def wlist(*layout, sig=fx.WRITER_STR):
    """Build a writer step list from alternating guard logs and values.

    wlist("a", 1, "b", 2, "c") is the list whose first guard logs "a" and
    yields 1, second logs "b" and yields 2, and whose final layer logs "c".
    Built directly from base payloads, independently of append/bind.
    """
    assert len(layout) % 2 == 1

    def build(i):
        if i == len(layout) - 1:
            head = fx.Computation(sig, (layout[i], ("done",)))
            return StepList(head)
        tail = build(i + 2)
        head = fx.Computation(sig, (layout[i], ("yield", layout[i + 1], tail)))
        return StepList(head)

    return build(0)


def denote_writer(xs):
    """Reference semantics for writer step lists: walk raw payloads.

    Returns (log, values) without going through observe_all or bind, so it
    can serve as an oracle for both.
    """
    log = xs.sig.monoid.empty
    vals = []
    comp = xs.head
    while True:
        w, step = comp.payload
        log = xs.sig.monoid.combine(log, w)
        if step[0] == "done":
            return log, vals
        vals.append(step[1])
        comp = step[2].head


@pytest.fixture
def rng():
    import random

    return random.Random(20260809)
