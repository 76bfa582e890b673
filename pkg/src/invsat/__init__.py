"""SAT toolkit built on a ternary matrix view of CNF.

Covers the exact path-set semantics, the inverse-intersection search, a
brute-force oracle, a reproducible instance generator and DIMACS tooling.
"""

from .model import (Assignment, Cell, Column, Problem, Tautology, column_from_literals,
                    complete, flip_column, free_count, path_count)
from .pathsem import (CapacityError, PathSet, answers_of, assignment_at, leaf_index,
                      merge_adjacent, paths_of, reverse_flip, union)
from .solver import (SolveResult, SolverConfig, SolveStats, inverse_cover, overlap, sat_cover,
                     solve, verify_model)

__version__ = "0.1.0"
