"""Backtracking effects over a closed family of observable base effects.

Three interchangeable representations of backtracking computations:

* ``StepList``: lists whose every element is guarded by base effects, so
  streaming consumers perform only the effects of the prefix they force.
* ``Backtr``: the success/failure two-continuation encoding, isomorphic to
  ``StepList`` with constant-time choice.
* ``EffList`` / ``CLT``: the effects-first pair, lawful exactly for
  commutative bases.

The ``laws`` module turns the relationships between these (conversion
round trips, homomorphisms, MonadPlus and coherence laws, and the
non-commutative counterexample) into seeded property suites; ``cli``
exposes them along with demos and a cost benchmark.
"""

from . import commutative, effects, laws, resumption, steplist, twocont, workloads
from .commutative import CLT, EffList, associativity_counterexample
from .effects import Computation, LogMonoid
from .resumption import EffTree
from .steplist import StepList
from .twocont import Backtr

__all__ = [
    "Backtr",
    "CLT",
    "Computation",
    "EffList",
    "EffTree",
    "LogMonoid",
    "StepList",
    "associativity_counterexample",
    "commutative",
    "effects",
    "laws",
    "resumption",
    "steplist",
    "twocont",
    "workloads",
]
