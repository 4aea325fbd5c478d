"""gptkit: generalized probabilistic theories at desk scale.

State spaces, effects and measurements, distinguishability and capacity,
minimal/maximal tensor products, the (2,2,2) Bell scenario, the Sorkin
interference hierarchy, and the Bloch-ball qubit, all backed by a small
deterministic LP solver.
"""

from . import bell, bloch, composites, distinguish, interference, lp, spaces
from .bell import (ProbTable222, chsh, classical_membership,
                   deterministic_tables, expectation, is_nonsignalling,
                   maximize_chsh_quantum, pr_box, quantum_table,
                   singlet_setup, table_from_composite_state)
from .composites import (effect_cone_generators, enumerate_vertices,
                         max_tensor, min_tensor, product_state, reduced_state)
from .distinguish import capacity, perfectly_distinguishable
from .spaces import (Effect, LinearMap, Measurement, StateSpace,
                     are_equivalent, contains_state, is_effect, is_pure,
                     is_reversible_transformation, is_transformation,
                     make_ball, make_classical, make_gbit, make_polytopic,
                     make_quantum)

__version__ = "0.1.0"
