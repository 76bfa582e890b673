"""DIMACS CNF reading/writing and text renderings.

Parsing rules:

* ``c`` lines are comments; a line starting with ``%`` ends the input
  (SATLIB style).
* Exactly one ``p cnf V C`` header, before any clause.
* Clauses are whitespace-separated literals ending with ``0``; they may span
  lines.  A bare ``0`` is the empty clause (an all-U column).
* Repeated literals collapse.  A clause with both ``x`` and ``-x`` is always
  satisfied and cannot be stored in one ternary column, so it is dropped and
  counted.
* A clause count that disagrees with the header is only a warning.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .model import Column, Problem, Tautology, column_from_literals
from .pathsem import DEFAULT_MAX_VARS, CapacityError, PathSet

# columns are bitmasks of V bits; keeps hostile headers from allocating gigabytes
MAX_HEADER_VARS = 1 << 20


class DimacsError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass
class ParseReport:
    problem: Problem
    dropped_tautologies: int = 0
    collapsed_duplicate_literals: int = 0
    warnings: list[str] = field(default_factory=list)


def _decode(text: str | bytes) -> str:
    if isinstance(text, bytes):
        try:
            return text.decode("utf-8")
        except UnicodeDecodeError as e:
            raise DimacsError(f"input is not valid UTF-8 ({e.reason} at byte {e.start})") from None
    return text


def _parse_int(token: str, lineno: int) -> int:
    # int() also accepts "1_000", "+3" and non-ASCII digits; DIMACS does not
    body = token[1:] if token[:1] == "-" else token
    if not body or not body.isascii() or not body.isdigit():
        raise DimacsError(f"expected an integer, got {token!r}", lineno)
    if len(body) > 20:
        raise DimacsError(f"integer {token[:24]}... is too large", lineno)
    return int(token)


def parse_dimacs(text: str | bytes) -> ParseReport:
    text = _decode(text)
    var_count: int | None = None
    declared = 0
    header_line = 0
    columns: list[Column] = []
    dropped = collapsed = 0
    warnings: list[str] = []
    pending: list[int] = []
    pending_line = 0

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            break
        if line.startswith("p"):
            if var_count is not None:
                raise DimacsError("duplicate problem header", lineno)
            parts = line.split()
            if len(parts) != 4 or parts[0] != "p" or parts[1] != "cnf":
                raise DimacsError(f"malformed header {line!r}, expected 'p cnf V C'", lineno)
            var_count = _parse_int(parts[2], lineno)
            declared = _parse_int(parts[3], lineno)
            if not 1 <= var_count <= MAX_HEADER_VARS:
                raise DimacsError(
                    f"variable count must lie in 1..{MAX_HEADER_VARS}, got {var_count}", lineno)
            if declared < 0:
                raise DimacsError(f"clause count must be >= 0, got {declared}", lineno)
            header_line = lineno
            continue
        if var_count is None:
            raise DimacsError("clause data before 'p cnf' header", lineno)
        for token in line.split():
            lit = _parse_int(token, lineno)
            if lit == 0:
                lits = [(abs(x), x > 0) for x in pending]
                unique = set(lits)
                collapsed += len(lits) - len(unique)
                try:
                    columns.append(column_from_literals(sorted(unique), var_count))
                except Tautology as t:
                    dropped += 1
                    warnings.append(
                        f"line {pending_line or lineno}: dropped tautological clause "
                        f"(variable {t.var} in both polarities)")
                pending = []
                pending_line = 0
                continue
            if abs(lit) > var_count:
                raise DimacsError(f"literal {lit} exceeds declared variable count {var_count}", lineno)
            if not pending:
                pending_line = lineno
            pending.append(lit)

    if var_count is None:
        raise DimacsError("missing 'p cnf V C' header")
    if pending:
        raise DimacsError("final clause is not terminated by 0", pending_line)
    read = len(columns) + dropped
    if read != declared:
        warnings.append(f"line {header_line}: header declares {declared} clauses, found {read}")
    return ParseReport(Problem(var_count, tuple(columns)), dropped, collapsed, warnings)


def write_dimacs(problem: Problem) -> str:
    lines = [f"p cnf {problem.var_count} {problem.clause_count}"]
    for col in problem.columns:
        lines.append(" ".join(str(x) for x in col.literals() + [0]))
    return "\n".join(lines) + "\n"


def format_matrix(problem: Problem) -> str:
    """Rows are variables, columns are clauses."""
    rows = []
    for i in range(problem.var_count):
        cells = " ".join(col[i].value for col in problem.columns)
        rows.append(f"[ {cells} ]" if cells else "[ ]")
    return "\n".join(rows)


def format_pathset(s: PathSet, max_vars: int = DEFAULT_MAX_VARS) -> str:
    if s.var_count > max_vars:
        raise CapacityError(f"path set over {s.var_count} variables exceeds the limit of {max_vars}")
    return str(s)


def format_cube(col: Column) -> str:
    return "[" + ",".join(c.value for c in col.cells) + "]"


def model_literals(model: Sequence[bool]) -> list[int]:
    return [i + 1 if v else -(i + 1) for i, v in enumerate(model)]


def parse_model(text: str | bytes, var_count: int) -> tuple[bool, ...]:
    """Read a model as SAT-competition ``v`` lines or bare signed literals.

    ``s`` and ``c`` lines are ignored; a ``0`` ends the model.  Every variable
    must be given exactly once.
    """
    text = _decode(text)
    values: dict[int, bool] = {}
    done = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line[0] in "cs":
            continue
        if line[0] == "v":
            line = line[1:]
        for token in line.split():
            lit = _parse_int(token, lineno)
            if lit == 0:
                done = True
                break
            var = abs(lit)
            if var > var_count:
                raise DimacsError(f"model literal {lit} exceeds variable count {var_count}", lineno)
            if var in values and values[var] != (lit > 0):
                raise DimacsError(f"variable {var} assigned both ways", lineno)
            values[var] = lit > 0
        if done:
            break
    missing = [v for v in range(1, var_count + 1) if v not in values]
    if missing:
        raise DimacsError(f"model leaves {len(missing)} variable(s) unassigned, first is {missing[0]}")
    return tuple(values[v] for v in range(1, var_count + 1))


STATS_FIELDS = (
    "decision", "var_count", "clause_count", "model", "cube",
    "candidates_enqueued", "candidates_dequeued", "overlap_calls", "fragments_spawned",
    "dedup_hits", "max_queue_len", "dead_candidates", "max_depth",
    "seed_mode", "resume_mode", "dedup", "fill", "wall_time_s",
)


def stats_record(stats, result, config, timings: Mapping[str, float] | None = None,
                 problem: Problem | None = None) -> dict:
    """Flat dict behind :func:`stats_to_json`; ``model``/``cube`` only when SAT."""
    rec: dict = {"decision": result.decision}
    if problem is not None:
        rec["var_count"] = problem.var_count
        rec["clause_count"] = problem.clause_count
    if result.sat:
        rec["model"] = model_literals(result.model)
        rec["cube"] = str(result.cube)
    rec.update(stats.as_dict())
    rec.update(config.as_dict())
    for name, seconds in (timings or {}).items():
        rec[name if name.endswith("_s") else f"{name}_s"] = seconds
    return rec


def stats_to_json(stats, result, config, timings: Mapping[str, float] | None = None,
                  problem: Problem | None = None) -> str:
    return json.dumps(stats_record(stats, result, config, timings, problem), sort_keys=False)
