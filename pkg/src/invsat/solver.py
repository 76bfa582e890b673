"""Inverse-intersection search.

Each clause is turned into its *sat cover*: pairwise-disjoint cubes whose
union is exactly the set of assignments satisfying that clause.  A model of
the whole problem is a point lying in one cube of every cover, so the search
keeps a FIFO queue of candidate cubes and narrows each one cover at a time:

* no cube of the current cover overlaps the candidate -> the candidate dies;
* the first overlap replaces the candidate in place;
* every further overlap is queued as a fragment that resumes after this cover.

A candidate that survives every cover is completed to a total assignment.
Covers are disjoint, so the overlaps of one candidate with one cover are
disjoint too and no model is ever dropped.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import asdict, dataclass, field
from typing import Callable, Sequence

from .model import Assignment, Column, Problem, complete, flip_column
from .oracle import evaluate


class SeedMode(str, enum.Enum):
    ALL = "all"
    FIRST = "first"


class ResumeMode(str, enum.Enum):
    RESUME = "resume"
    RESTART = "restart"


class InvariantViolation(AssertionError):
    pass


@dataclass(frozen=True)
class SolverConfig:
    seed_mode: SeedMode = SeedMode.ALL
    resume_mode: ResumeMode = ResumeMode.RESUME
    dedup: bool = True
    fill: bool = True

    def __post_init__(self):
        object.__setattr__(self, "seed_mode", SeedMode(self.seed_mode))
        object.__setattr__(self, "resume_mode", ResumeMode(self.resume_mode))

    def as_dict(self) -> dict:
        return {
            "seed_mode": self.seed_mode.value,
            "resume_mode": self.resume_mode.value,
            "dedup": self.dedup,
            "fill": self.fill,
        }


@dataclass
class SolveStats:
    candidates_enqueued: int = 0
    candidates_dequeued: int = 0
    overlap_calls: int = 0
    fragments_spawned: int = 0
    dedup_hits: int = 0
    max_queue_len: int = 0
    dead_candidates: int = 0
    max_depth: int = 0

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass
class SolveResult:
    sat: bool
    model: Assignment | None = None
    cube: Column | None = None
    stats: SolveStats = field(default_factory=SolveStats)

    @property
    def decision(self) -> str:
        return "sat" if self.sat else "unsat"


# Called as observer(kind, parent_cube, child_cube, child_depth) where kind
# is "replace" or "fragment".
Observer = Callable[[str, Column, Column, int], None]


def overlap(c1: Column, c2: Column) -> Column | None:
    """Intersection of two cubes, or ``None`` when they contradict."""
    if c1.var_count != c2.var_count:
        raise ValueError(f"length mismatch: {c1.var_count} vs {c2.var_count}")
    if c1.true_mask & c2.false_mask or c1.false_mask & c2.true_mask:
        return None
    return Column(c1.var_count, c1.true_mask | c2.true_mask, c1.false_mask | c2.false_mask)


def inverse_cover(col: Column) -> list[Column]:
    """Disjoint cubes covering every leaf outside ``paths_of(col)``.

    Walking the literals in row order, cube ``j`` keeps the literals before
    position ``j`` and flips the one at ``j``.
    """
    out = []
    t = f = 0
    for i in range(col.var_count):
        bit = 1 << i
        if col.true_mask & bit:
            out.append(Column(col.var_count, t, f | bit))
            t |= bit
        elif col.false_mask & bit:
            out.append(Column(col.var_count, t | bit, f))
            f |= bit
    return out


def sat_cover(col: Column) -> list[Column]:
    """Disjoint cubes covering exactly the assignments that satisfy ``col``."""
    return [flip_column(c) for c in inverse_cover(col)]


def verify_model(problem: Problem, a: Sequence[bool]) -> bool:
    if len(a) != problem.var_count:
        raise ValueError(f"assignment has {len(a)} values, expected {problem.var_count}")
    true_bits = 0
    for i, value in enumerate(a):
        if value:
            true_bits |= 1 << i
    false_bits = ((1 << problem.var_count) - 1) & ~true_bits
    return all(col.true_mask & true_bits or col.false_mask & false_bits
               for col in problem.columns)


def solve(problem: Problem, config: SolverConfig | None = None,
          observer: Observer | None = None) -> SolveResult:
    cfg = config or SolverConfig()
    v = problem.var_count
    stats = SolveStats()

    if not problem.columns:
        cube = Column.all_free(v)
        return SolveResult(True, complete(cube, cfg.fill), cube, stats)

    covers = [[(c.true_mask, c.false_mask) for c in sat_cover(col)] for col in problem.columns]
    if any(not cover for cover in covers):
        return SolveResult(False, stats=stats)

    n_covers = len(covers)
    restart = cfg.resume_mode is ResumeMode.RESTART
    # queue entries are candidates: (true_mask, false_mask, resume_at, depth)
    queue: deque[tuple[int, int, int, int]] = deque()
    seen: set[tuple[int, int]] = set()

    enqueued = dequeued = overlap_calls = fragments = dedup_hits = dead = 0
    max_queue = max_depth = 0

    seed_covers = covers if cfg.seed_mode is SeedMode.ALL else covers[:1]
    for j, cover in enumerate(seed_covers):
        # a seed already lies inside its own cover; only cover 0 may be skipped,
        # because later seeds have not been checked against earlier covers
        start = 1 if j == 0 and not restart else 0
        for t, f in cover:
            if cfg.dedup:
                if (t, f) in seen:
                    dedup_hits += 1
                    continue
                seen.add((t, f))
            queue.append((t, f, start, 0))
            enqueued += 1
    max_queue = len(queue)

    found: tuple[int, int] | None = None
    while queue:
        t, f, start, depth = queue.popleft()
        dequeued += 1
        alive = True
        for j in range(start, n_covers):
            first: tuple[int, int] | None = None
            for ct, cf in covers[j]:
                overlap_calls += 1
                if t & cf or f & ct:
                    continue
                nt, nf = t | ct, f | cf
                if first is None:
                    first = (nt, nf)
                    continue
                # second and later overlaps in the same cover become fragments
                fragments += 1
                child_depth = depth + 1
                if child_depth > max_depth:
                    max_depth = child_depth
                if observer is not None:
                    observer("fragment", Column(v, t, f), Column(v, nt, nf), child_depth)
                if cfg.dedup:
                    if (nt, nf) in seen:
                        dedup_hits += 1
                        continue
                    seen.add((nt, nf))
                queue.append((nt, nf, 0 if restart else j + 1, child_depth))
                enqueued += 1
                if len(queue) > max_queue:
                    max_queue = len(queue)
            if first is None:
                alive = False
                dead += 1
                break
            if observer is not None:
                observer("replace", Column(v, t, f), Column(v, *first), depth)
            t, f = first
        if alive:
            found = (t, f)
            break

    stats.candidates_enqueued = enqueued
    stats.candidates_dequeued = dequeued
    stats.overlap_calls = overlap_calls
    stats.fragments_spawned = fragments
    stats.dedup_hits = dedup_hits
    stats.max_queue_len = max_queue
    stats.dead_candidates = dead
    stats.max_depth = max_depth

    if found is None:
        return SolveResult(False, stats=stats)

    cube = Column(v, *found)
    model = complete(cube, cfg.fill)
    if not evaluate(problem, model):
        raise InvariantViolation(f"surviving cube {cube} completes to a non-model")
    return SolveResult(True, model, cube, stats)
