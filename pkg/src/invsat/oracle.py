"""Brute-force reference semantics.

Reads each column as a plain CNF clause and checks it against every total
assignment.  Nothing here goes through path sets, so agreement with
:mod:`invsat.pathsem` is a genuine cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .model import Assignment, Cell, Problem

DEFAULT_MAX_VARS = 24
_BLOCK = 1 << 14


class OracleCapacityError(ValueError):
    pass


@dataclass(frozen=True)
class ModelSet:
    var_count: int
    models: tuple[Assignment, ...]

    def __len__(self):
        return len(self.models)

    def __iter__(self):
        return iter(self.models)


def evaluate(problem: Problem, a: Sequence[bool]) -> bool:
    """True iff every clause has a literal made true by ``a``."""
    if len(a) != problem.var_count:
        raise ValueError(f"assignment has {len(a)} values, expected {problem.var_count}")
    for col in problem.columns:
        for value, cell in zip(a, col.cells):
            if (cell is Cell.T and value) or (cell is Cell.F and not value):
                break
        else:
            return False
    return True


def _blocks(var_count: int) -> Iterator[np.ndarray]:
    # rows in tree order: the first variable is the slowest digit, TRUE first
    total = 1 << var_count
    shifts = np.arange(var_count - 1, -1, -1, dtype=np.int64)
    for start in range(0, total, _BLOCK):
        idx = np.arange(start, min(start + _BLOCK, total), dtype=np.int64)
        yield ((idx[:, None] >> shifts) & 1) == 0


def _clause_literals(problem: Problem) -> list[list[tuple[int, bool]]]:
    out = []
    for col in problem.columns:
        out.append([(i, cell is Cell.T) for i, cell in enumerate(col.cells) if cell is not Cell.U])
    return out


def _satisfied_rows(table: np.ndarray, clauses) -> np.ndarray:
    ok = np.ones(table.shape[0], dtype=bool)
    for lits in clauses:
        sat = np.zeros(table.shape[0], dtype=bool)
        for var, positive in lits:
            sat |= table[:, var] if positive else ~table[:, var]
        ok &= sat
        if not ok.any():
            break
    return ok


def _check(problem: Problem, max_vars: int) -> None:
    if problem.var_count > max_vars:
        raise OracleCapacityError(
            f"brute force over {problem.var_count} variables exceeds the limit of {max_vars}")


def enumerate_models(problem: Problem, max_vars: int = DEFAULT_MAX_VARS) -> ModelSet:
    _check(problem, max_vars)
    clauses = _clause_literals(problem)
    models = []
    for table in _blocks(problem.var_count):
        ok = _satisfied_rows(table, clauses)
        models.extend(tuple(bool(x) for x in row) for row in table[ok])
    return ModelSet(problem.var_count, tuple(models))


def truth_vector(problem: Problem, max_vars: int = DEFAULT_MAX_VARS) -> np.ndarray:
    """Satisfaction of every assignment, in tree order, as a bool array."""
    _check(problem, max_vars)
    clauses = _clause_literals(problem)
    return np.concatenate([_satisfied_rows(t, clauses) for t in _blocks(problem.var_count)])


def count_models(problem: Problem, max_vars: int = DEFAULT_MAX_VARS) -> int:
    _check(problem, max_vars)
    clauses = _clause_literals(problem)
    return sum(int(_satisfied_rows(t, clauses).sum()) for t in _blocks(problem.var_count))


def decide(problem: Problem, max_vars: int = DEFAULT_MAX_VARS) -> bool:
    _check(problem, max_vars)
    clauses = _clause_literals(problem)
    return any(_satisfied_rows(t, clauses).any() for t in _blocks(problem.var_count))
