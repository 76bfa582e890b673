"""Reproducible random k-SAT instances.

The generator is pinned so corpora can be regenerated bit-for-bit in any
language:

* PRNG: SplitMix64 seeded with ``seed mod 2**64``.
* ``below(n)``: draw ``r`` until ``r >= (2**64 - n) % n``, return ``r % n``.
* ``coin()``: top bit of one draw (1 -> TRUE / positive literal).
* One clause: partial Fisher-Yates over ``[1..V]`` (a fresh list per clause)
  picks ``k`` variables, swapping slot ``i`` with ``i + below(V - i)``;
  then one ``coin()`` per picked variable, in pick order, gives polarities.
* Planted: ``V`` coins draw the hidden assignment first (variable 1 first);
  clauses are then drawn as above and redrawn whole while the hidden
  assignment falsifies them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import Assignment, Column, Problem

_MASK64 = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        if n <= 0:
            raise ValueError("n must be positive")
        threshold = ((1 << 64) - n) % n
        while True:
            r = self.next()
            if r >= threshold:
                return r % n

    def coin(self) -> bool:
        return bool(self.next() >> 63)


@dataclass(frozen=True)
class GenSpec:
    var_count: int
    clause_count: int
    width: int
    seed: int = 0
    planted: bool = False

    def __post_init__(self):
        if self.var_count < 1:
            raise ValueError("var_count must be >= 1")
        if self.clause_count < 0:
            raise ValueError("clause_count must be >= 0")
        if not 1 <= self.width <= self.var_count:
            raise ValueError(f"width {self.width} must lie in 1..{self.var_count}")


def _draw_clause(rng: SplitMix64, var_count: int, width: int) -> Column:
    pool = list(range(1, var_count + 1))
    for i in range(width):
        j = i + rng.below(var_count - i)
        pool[i], pool[j] = pool[j], pool[i]
    t = f = 0
    for var in pool[:width]:
        if rng.coin():
            t |= 1 << (var - 1)
        else:
            f |= 1 << (var - 1)
    return Column(var_count, t, f)


def random_ksat(spec: GenSpec) -> Problem:
    if spec.planted:
        raise ValueError("spec is planted; use planted_ksat")
    rng = SplitMix64(spec.seed)
    cols = [_draw_clause(rng, spec.var_count, spec.width) for _ in range(spec.clause_count)]
    return Problem(spec.var_count, tuple(cols))


def planted_ksat(spec: GenSpec) -> tuple[Problem, Assignment]:
    if not spec.planted:
        raise ValueError("spec is not planted; use random_ksat")
    rng = SplitMix64(spec.seed)
    hidden = tuple(rng.coin() for _ in range(spec.var_count))
    true_bits = sum(1 << i for i, v in enumerate(hidden) if v)
    false_bits = ((1 << spec.var_count) - 1) & ~true_bits
    cols = []
    while len(cols) < spec.clause_count:
        col = _draw_clause(rng, spec.var_count, spec.width)
        if col.true_mask & true_bits or col.false_mask & false_bits:
            cols.append(col)
    return Problem(spec.var_count, tuple(cols)), hidden


def generate(spec: GenSpec) -> tuple[Problem, Assignment | None]:
    if spec.planted:
        return planted_ksat(spec)
    return random_ksat(spec), None
