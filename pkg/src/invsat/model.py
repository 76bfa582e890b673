"""Ternary matrix model of a CNF problem.

A problem over ``V`` variables is a ``V x C`` matrix whose columns are
clauses.  Every cell is ``T`` (positive literal), ``F`` (negated literal) or
``U`` (variable absent).  The same ternary vector doubles as a *cube*, a
partial assignment that fixes the ``T``/``F`` cells and leaves ``U`` free.

Columns are stored as two disjoint bitmasks so the solver's hot loop can work
on plain integers.  Bit ``i`` of a mask stands for variable ``i + 1``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

Assignment = tuple[bool, ...]


class Cell(enum.Enum):
    T = "T"
    F = "F"
    U = "U"

    def __str__(self) -> str:
        return self.value


class Tautology(ValueError):
    """A literal list mentions both polarities of one variable."""

    def __init__(self, var: int):
        super().__init__(f"variable {var} occurs with both polarities")
        self.var = var


@dataclass(frozen=True, slots=True)
class Column:
    var_count: int
    true_mask: int = 0
    false_mask: int = 0

    def __post_init__(self):
        if self.var_count < 1:
            raise ValueError(f"var_count must be >= 1, got {self.var_count}")
        full = (1 << self.var_count) - 1
        if self.true_mask & ~full or self.false_mask & ~full:
            raise ValueError("mask has bits beyond var_count")
        if self.true_mask & self.false_mask:
            raise ValueError("a cell cannot be both T and F")

    @classmethod
    def from_cells(cls, cells: Iterable[Cell | str]) -> Column:
        t = f = 0
        n = 0
        for i, cell in enumerate(cells):
            cell = Cell(str(cell).upper())
            if cell is Cell.T:
                t |= 1 << i
            elif cell is Cell.F:
                f |= 1 << i
            n += 1
        return cls(n, t, f)

    @classmethod
    def parse(cls, text: str) -> Column:
        """Build a column from text such as ``"FUTT"`` or ``"[F,U,T,T]"``."""
        return cls.from_cells(ch for ch in text if ch.upper() in "TFU")

    @classmethod
    def all_free(cls, var_count: int) -> Column:
        return cls(var_count)

    @property
    def cells(self) -> tuple[Cell, ...]:
        return tuple(self[i] for i in range(self.var_count))

    @property
    def assigned_mask(self) -> int:
        return self.true_mask | self.false_mask

    def literals(self) -> list[int]:
        """DIMACS-style signed literals in variable order."""
        out = []
        for i in range(self.var_count):
            bit = 1 << i
            if self.true_mask & bit:
                out.append(i + 1)
            elif self.false_mask & bit:
                out.append(-(i + 1))
        return out

    def __len__(self) -> int:
        return self.var_count

    def __getitem__(self, i: int) -> Cell:
        if not 0 <= i < self.var_count:
            raise IndexError(i)
        bit = 1 << i
        if self.true_mask & bit:
            return Cell.T
        if self.false_mask & bit:
            return Cell.F
        return Cell.U

    def __str__(self) -> str:
        return "".join(c.value for c in self.cells)

    def __repr__(self) -> str:
        return f"Column({str(self)!r})"


@dataclass(frozen=True)
class Problem:
    var_count: int
    columns: tuple[Column, ...] = ()

    def __post_init__(self):
        if self.var_count < 1:
            raise ValueError(f"var_count must be >= 1, got {self.var_count}")
        object.__setattr__(self, "columns", tuple(self.columns))
        for j, col in enumerate(self.columns):
            if col.var_count != self.var_count:
                raise ValueError(
                    f"column {j} has {col.var_count} cells, expected {self.var_count}")

    @classmethod
    def from_strings(cls, *columns: str) -> Problem:
        cols = [Column.parse(c) for c in columns]
        if not cols:
            raise ValueError("need at least one column to infer var_count")
        return cls(cols[0].var_count, tuple(cols))

    @property
    def clause_count(self) -> int:
        return len(self.columns)

    @property
    def input_size(self) -> int:
        return self.var_count * self.clause_count

    def __len__(self) -> int:
        return len(self.columns)

    def __iter__(self):
        return iter(self.columns)


def column_from_literals(literals: Iterable[tuple[int, bool]], var_count: int) -> Column:
    """Build a column from ``(var_index, positive)`` pairs, 1-based.

    Repeated literals collapse.  Both polarities of one variable raise
    :class:`Tautology`.
    """
    t = f = 0
    for var, positive in literals:
        if not 1 <= var <= var_count:
            raise ValueError(f"variable {var} out of range 1..{var_count}")
        bit = 1 << (var - 1)
        if positive:
            if f & bit:
                raise Tautology(var)
            t |= bit
        else:
            if t & bit:
                raise Tautology(var)
            f |= bit
    return Column(var_count, t, f)


def flip_column(col: Column) -> Column:
    return Column(col.var_count, col.false_mask, col.true_mask)


def free_count(col: Column) -> int:
    return col.var_count - col.assigned_mask.bit_count()


def path_count(col: Column) -> int:
    return 1 << free_count(col)


def complete(cube: Column, fill: bool = True) -> Assignment:
    """Total assignment inside ``cube``; free variables take ``fill``."""
    out = []
    for i in range(cube.var_count):
        bit = 1 << i
        if cube.true_mask & bit:
            out.append(True)
        elif cube.false_mask & bit:
            out.append(False)
        else:
            out.append(fill)
    return tuple(out)


def assignment_from_string(text: str) -> Assignment:
    """``"TTTF"`` -> ``(True, True, True, False)``."""
    out = []
    for ch in text:
        if ch in "Tt1":
            out.append(True)
        elif ch in "Ff0":
            out.append(False)
        elif not ch.isspace() and ch not in ",()[]":
            raise ValueError(f"bad assignment character {ch!r}")
    return tuple(out)


def assignment_to_string(a: Sequence[bool]) -> str:
    return "".join("T" if v else "F" for v in a)
