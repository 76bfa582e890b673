"""Exact path-set semantics over the variable decision tree.

Every total assignment over ``V`` variables is a leaf of a binary tree whose
levels follow matrix row order, ``T`` branch first.  Leaf ``p`` (0-based) is
read from the ``V``-digit binary expansion of ``p``, most significant digit
first: variable ``x_i`` is TRUE iff digit ``i`` is 0.  Position 0 is therefore
all-TRUE and position ``2**V - 1`` is all-FALSE.

A :class:`PathSet` is the ``2**V``-entry membership vector over those leaves.
This is the deliberately exponential reference semantics; everything here is
capped at ``max_vars`` variables.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .model import Assignment, Column, Problem

DEFAULT_MAX_VARS = 24


class CapacityError(ValueError):
    pass


def _check_capacity(var_count: int, max_vars: int) -> None:
    if var_count > max_vars:
        raise CapacityError(
            f"path sets over {var_count} variables exceed the limit of {max_vars} "
            f"(2**{var_count} leaves)")


class PathSet:
    __slots__ = ("var_count", "bits")

    def __init__(self, var_count: int, bits: np.ndarray):
        bits = np.asarray(bits, dtype=bool).reshape(-1)
        if bits.size != 1 << var_count:
            raise ValueError(f"expected {1 << var_count} bits, got {bits.size}")
        bits.flags.writeable = False
        self.var_count = var_count
        self.bits = bits

    @classmethod
    def empty(cls, var_count: int) -> PathSet:
        return cls(var_count, np.zeros(1 << var_count, dtype=bool))

    @classmethod
    def full(cls, var_count: int) -> PathSet:
        return cls(var_count, np.ones(1 << var_count, dtype=bool))

    @classmethod
    def from_string(cls, text: str) -> PathSet:
        digits = [ch for ch in text if ch in "01"]
        n = len(digits)
        if n == 0 or n & (n - 1):
            raise ValueError(f"bit string length {n} is not a power of two")
        return cls(n.bit_length() - 1, np.array([d == "1" for d in digits]))

    def popcount(self) -> int:
        return int(self.bits.sum())

    def positions(self) -> list[int]:
        return np.flatnonzero(self.bits).tolist()

    def __contains__(self, position: int) -> bool:
        return bool(self.bits[position])

    def _same_shape(self, other: PathSet) -> None:
        if not isinstance(other, PathSet):
            raise TypeError(f"expected PathSet, got {type(other).__name__}")
        if other.var_count != self.var_count:
            raise ValueError(
                f"var_count mismatch: {self.var_count} vs {other.var_count}")

    def __or__(self, other: PathSet) -> PathSet:
        self._same_shape(other)
        return PathSet(self.var_count, self.bits | other.bits)

    def __and__(self, other: PathSet) -> PathSet:
        self._same_shape(other)
        return PathSet(self.var_count, self.bits & other.bits)

    def __invert__(self) -> PathSet:
        return PathSet(self.var_count, ~self.bits)

    def reversed(self) -> PathSet:
        return PathSet(self.var_count, self.bits[::-1])

    def __eq__(self, other) -> bool:
        if not isinstance(other, PathSet):
            return NotImplemented
        return self.var_count == other.var_count and bool(np.array_equal(self.bits, other.bits))

    def __hash__(self):
        return hash((self.var_count, self.bits.tobytes()))

    def __str__(self) -> str:
        s = "".join("1" if b else "0" for b in self.bits)
        return " ".join(s[i:i + 4] for i in range(0, len(s), 4))

    def __repr__(self) -> str:
        return f"PathSet({self.var_count}, {str(self)!r})"


def leaf_index(a: Sequence[bool]) -> int:
    p = 0
    for value in a:
        p = (p << 1) | (0 if value else 1)
    return p


def assignment_at(position: int, var_count: int) -> Assignment:
    if not 0 <= position < 1 << var_count:
        raise ValueError(f"position {position} out of range for {var_count} variables")
    return tuple(not (position >> (var_count - 1 - i)) & 1 for i in range(var_count))


def paths_of(col: Column, max_vars: int = DEFAULT_MAX_VARS) -> PathSet:
    """Leaves whose assignment matches every non-U cell of ``col``."""
    v = col.var_count
    _check_capacity(v, max_vars)
    # one axis per variable, C order, so axis 0 is the most significant digit
    grid = np.zeros((2,) * v, dtype=bool)
    index = []
    for i in range(v):
        bit = 1 << i
        if col.true_mask & bit:
            index.append(0)
        elif col.false_mask & bit:
            index.append(1)
        else:
            index.append(slice(None))
    grid[tuple(index)] = True
    return PathSet(v, grid)


def union(sets: Iterable[PathSet], var_count: int | None = None) -> PathSet:
    """Bitwise OR of ``sets``; the empty union needs ``var_count``."""
    sets = list(sets)
    if not sets:
        if var_count is None:
            raise ValueError("var_count is required for an empty union")
        return PathSet.empty(var_count)
    v = sets[0].var_count if var_count is None else var_count
    acc = np.zeros(1 << v, dtype=bool)
    for s in sets:
        if s.var_count != v:
            raise ValueError(f"var_count mismatch: {v} vs {s.var_count}")
        acc |= s.bits
    return PathSet(v, acc)


def intersection(sets: Iterable[PathSet], var_count: int | None = None) -> PathSet:
    sets = list(sets)
    if not sets:
        if var_count is None:
            raise ValueError("var_count is required for an empty intersection")
        return PathSet.full(var_count)
    v = sets[0].var_count if var_count is None else var_count
    acc = np.ones(1 << v, dtype=bool)
    for s in sets:
        if s.var_count != v:
            raise ValueError(f"var_count mismatch: {v} vs {s.var_count}")
        acc &= s.bits
    return PathSet(v, acc)


def reverse_flip(s: PathSet) -> PathSet:
    """Reverse the leaf order and complement every bit."""
    return PathSet(s.var_count, ~s.bits[::-1])


def membership(problem: Problem, max_vars: int = DEFAULT_MAX_VARS) -> PathSet:
    """Union of every clause's path set (``R_S``)."""
    _check_capacity(problem.var_count, max_vars)
    return union((paths_of(c, max_vars) for c in problem.columns), problem.var_count)


def answer_set(problem: Problem, max_vars: int = DEFAULT_MAX_VARS) -> PathSet:
    """``reverse_flip`` of the membership set (``R_A``)."""
    return reverse_flip(membership(problem, max_vars))


def answers_of(problem: Problem, max_vars: int = DEFAULT_MAX_VARS) -> list[Assignment]:
    ra = answer_set(problem, max_vars)
    return [assignment_at(p, problem.var_count) for p in ra.positions()]


def merge_adjacent(c1: Column, c2: Column) -> Column | None:
    """Merge two columns that differ only by one contradictory cell.

    Identical columns merge to themselves.  Anything else returns ``None``.
    """
    if c1.var_count != c2.var_count:
        raise ValueError(f"length mismatch: {c1.var_count} vs {c2.var_count}")
    if c1 == c2:
        return c1
    if c1.assigned_mask != c2.assigned_mask:
        return None
    diff = c1.true_mask ^ c2.true_mask
    if diff.bit_count() != 1:
        return None
    return Column(c1.var_count, c1.true_mask & ~diff, c1.false_mask & ~diff)
