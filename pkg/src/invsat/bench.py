"""Parameter sweeps over generated instances, one CSV row per instance."""

from __future__ import annotations

import csv
import io
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import oracle
from .gen import GenSpec, generate
from .solver import SolveStats, SolverConfig, solve, verify_model

STAT_COLUMNS = list(SolveStats().as_dict())
CSV_COLUMNS = [
    "instance", "var_count", "clause_count", "width", "ratio", "seed", "planted",
    "decision", "oracle_decision", "agree", "model_ok",
    *STAT_COLUMNS,
    "seed_mode", "resume_mode", "dedup", "fill", "wall_time_s",
]


@dataclass(frozen=True)
class Sweep:
    vars: tuple[int, ...] = tuple(range(4, 13))
    widths: tuple[int, ...] = (3,)
    ratios: tuple[float, ...] = (4.26,)


def parse_range(text: str, kind=int) -> tuple:
    """``"4:12"``, ``"4:12:2"``, ``"3"`` or ``"1,2,4"``; bounds are inclusive."""
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        bits = part.split(":")
        if len(bits) == 1:
            out.append(kind(bits[0]))
            continue
        if len(bits) not in (2, 3):
            raise ValueError(f"bad range {part!r}")
        lo, hi = kind(bits[0]), kind(bits[1])
        step = kind(bits[2]) if len(bits) == 3 else kind(1)
        if step <= 0:
            raise ValueError(f"range step must be positive in {part!r}")
        n = int(round((hi - lo) / step))
        if n < 0:
            raise ValueError(f"empty range {part!r}")
        out.extend(kind(round(lo + i * step, 10)) if kind is float else lo + i * step
                   for i in range(n + 1))
    if not out:
        raise ValueError(f"empty range {text!r}")
    return tuple(out)


def parse_sweep(items: Iterable[str]) -> Sweep:
    fields = {}
    for item in items:
        key, sep, value = item.partition("=")
        key = key.strip()
        if not sep:
            raise ValueError(f"sweep item {item!r} must look like KEY=RANGE")
        if key in ("vars", "v"):
            fields["vars"] = parse_range(value, int)
        elif key in ("width", "k"):
            fields["widths"] = parse_range(value, int)
        elif key == "ratio":
            fields["ratios"] = parse_range(value, float)
        else:
            raise ValueError(f"unknown sweep key {key!r} (use vars, width, ratio)")
    return Sweep(**fields)


def specs(sweep: Sweep, per_point: int = 1, base_seed: int = 0,
          planted: bool = False) -> list[tuple[GenSpec, float]]:
    """Instances in sweep order; instance ``i`` gets seed ``base_seed + i``.

    Clause count is ``floor(ratio * V + 0.5)`` (half rounds up, unlike ``round``).
    """
    out = []
    for v in sweep.vars:
        for k in sweep.widths:
            if k > v:
                continue
            for ratio in sweep.ratios:
                c = max(0, math.floor(ratio * v + 0.5))
                for _ in range(per_point):
                    seed = base_seed + len(out)
                    out.append((GenSpec(v, c, k, seed, planted), ratio))
    return out


def run_instance(args: tuple[int, GenSpec, float, SolverConfig, int]) -> dict:
    index, spec, ratio, config, oracle_max_vars = args
    problem, _ = generate(spec)
    start = time.perf_counter()
    result = solve(problem, config)
    elapsed = time.perf_counter() - start
    row = {
        "instance": index,
        "var_count": spec.var_count,
        "clause_count": spec.clause_count,
        "width": spec.width,
        "ratio": ratio,
        "seed": spec.seed,
        "planted": int(spec.planted),
        "decision": result.decision,
        "oracle_decision": "",
        "agree": "",
        "model_ok": "" if not result.sat else int(verify_model(problem, result.model)),
    }
    if spec.var_count <= oracle_max_vars:
        expected = oracle.decide(problem)
        row["oracle_decision"] = "sat" if expected else "unsat"
        row["agree"] = int(expected == result.sat)
    row.update(result.stats.as_dict())
    row.update(config.as_dict())
    row["wall_time_s"] = round(elapsed, 6)
    return row


def run(instances: Sequence[tuple[GenSpec, float]], config: SolverConfig,
        oracle_max_vars: int = 12, jobs: int = 1) -> list[dict]:
    work = [(i, spec, ratio, config, oracle_max_vars) for i, (spec, ratio) in enumerate(instances)]
    if jobs <= 1:
        return [run_instance(w) for w in work]
    # map() yields in submission order, so rows stay in sweep order
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(run_instance, work, chunksize=4))


def to_csv(rows: Iterable[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()


def agreement(rows: Sequence[dict]) -> tuple[int, int]:
    """(agreeing, checked) over rows that ran the oracle."""
    checked = [r for r in rows if r["agree"] != ""]
    return sum(r["agree"] for r in checked), len(checked)
