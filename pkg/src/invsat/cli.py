"""Command-line entry point.

Exit codes: 10 SAT, 20 UNSAT (``solve``, ``oracle``); 0 for the other
subcommands on success; 1 for usage, parse, capacity and I/O errors;
2 from ``verify`` when the model falsifies the formula.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from . import bench, oracle
from .cnfio import (DimacsError, format_cube, format_matrix, format_pathset, model_literals,
                    parse_dimacs, parse_model, stats_to_json, write_dimacs)
from .gen import GenSpec, generate
from .model import Problem, assignment_to_string
from .pathsem import (DEFAULT_MAX_VARS, CapacityError, answer_set, assignment_at, membership,
                      paths_of)
from .solver import SolverConfig, inverse_cover, sat_cover, solve

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_FALSIFIED = 2
EXIT_SAT = 10
EXIT_UNSAT = 20


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _bool(text: str) -> bool:
    low = text.lower()
    if low in ("true", "t", "1"):
        return True
    if low in ("false", "f", "0"):
        return False
    raise argparse.ArgumentTypeError(f"expected true or false, got {text!r}")


def _read_problem(path: str, quiet: bool = False) -> Problem:
    data = sys.stdin.buffer.read() if path == "-" else Path(path).read_bytes()
    report = parse_dimacs(data)
    if not quiet:
        for w in report.warnings:
            print(f"c warning: {w}", file=sys.stderr)
    return report.problem


def _config(args) -> SolverConfig:
    return SolverConfig(seed_mode=args.seed_mode, resume_mode=args.resume_mode,
                        dedup=not args.no_dedup, fill=args.fill)


def _v_line(model) -> str:
    return "v " + " ".join(str(x) for x in model_literals(model)) + " 0"


def cmd_solve(args) -> int:
    problem = _read_problem(args.cnf, args.json)
    config = _config(args)
    start = time.perf_counter()
    result = solve(problem, config)
    elapsed = time.perf_counter() - start
    record = stats_to_json(result.stats, result, config, {"wall_time": round(elapsed, 6)}, problem)
    if args.json:
        print(record)
    else:
        print("s SATISFIABLE" if result.sat else "s UNSATISFIABLE")
        if result.sat:
            print(_v_line(result.model))
        print(f"c stats {record}")
    return EXIT_SAT if result.sat else EXIT_UNSAT


def cmd_oracle(args) -> int:
    problem = _read_problem(args.cnf)
    limit = args.max_pathsem_vars
    if args.models:
        models = oracle.enumerate_models(problem, limit).models
        sat, count = bool(models), len(models)
    elif args.count:
        count = oracle.count_models(problem, limit)
        sat = count > 0
    else:
        sat, count = oracle.decide(problem, limit), None
    print("s SATISFIABLE" if sat else "s UNSATISFIABLE")
    if count is not None:
        print(f"c models {count}")
    if args.models:
        for m in models:
            print(_v_line(m))
    return EXIT_SAT if sat else EXIT_UNSAT


def cmd_verify(args) -> int:
    problem = _read_problem(args.cnf)
    model = parse_model(Path(args.model).read_bytes(), problem.var_count)
    if oracle.evaluate(problem, model):
        print("s VERIFIED")
        return EXIT_OK
    print("s FALSIFIED")
    return EXIT_FALSIFIED


def cmd_gen(args) -> int:
    spec = GenSpec(args.vars, args.clauses, args.width, args.seed, args.planted)
    problem, hidden = generate(spec)
    header = (f"c invsat gen vars={spec.var_count} clauses={spec.clause_count} "
              f"width={spec.width} seed={spec.seed} planted={str(spec.planted).lower()}\n")
    if hidden is not None:
        header += "c hidden " + " ".join(str(x) for x in model_literals(hidden)) + " 0\n"
    text = header + write_dimacs(problem)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_bench(args) -> int:
    sweep = bench.parse_sweep(args.sweep)
    instances = bench.specs(sweep, args.per_point, args.seed, args.planted)
    rows = bench.run(instances, _config(args), args.oracle_max_vars, args.jobs)
    text = bench.to_csv(rows)
    if args.csv:
        Path(args.csv).write_text(text)
    else:
        sys.stdout.write(text)
    agree, checked = bench.agreement(rows)
    pct = 100.0 * agree / checked if checked else 100.0
    print(f"c instances {len(rows)} oracle-checked {checked} agreement {pct:.1f}%",
          file=sys.stderr)
    bad_models = sum(1 for r in rows if r["model_ok"] == 0)
    if agree != checked or bad_models:
        print(f"error: {checked - agree} disagreement(s), {bad_models} bad model(s)",
              file=sys.stderr)
        return EXIT_ERROR
    return EXIT_OK


def explain(problem: Problem, max_vars: int = DEFAULT_MAX_VARS) -> str:
    """Matrix, membership strings, answer set and covers for a small problem."""
    if problem.var_count > max_vars:
        raise CapacityError(
            f"explain needs path sets over {problem.var_count} variables; limit is {max_vars}")
    lines = [f"V = {problem.var_count}  C = {problem.clause_count}  N = {problem.input_size}",
             "R_M ="]
    lines.append(format_matrix(problem))
    for j, col in enumerate(problem.columns, start=1):
        lines.append(f"C_{j} = {format_pathset(paths_of(col, max_vars), max_vars)}")
    lines.append(f"R_S = {format_pathset(membership(problem, max_vars), max_vars)}")
    ra = answer_set(problem, max_vars)
    lines.append(f"R_A = {format_pathset(ra, max_vars)}")
    positions = ra.positions()
    lines.append(f"answers = {len(positions)}")
    for p in positions:
        a = assignment_at(p, problem.var_count)
        lines.append(f"  position {p} (leaf {p + 1}): {assignment_to_string(a)}")
    for j, col in enumerate(problem.columns, start=1):
        lines.append(f"I_{j} = " + (" ".join(format_cube(c) for c in inverse_cover(col)) or "{}"))
        lines.append(f"S_{j} = " + (" ".join(format_cube(c) for c in sat_cover(col)) or "{}"))
    return "\n".join(lines) + "\n"


def cmd_explain(args) -> int:
    problem = _read_problem(args.cnf)
    sys.stdout.write(explain(problem, args.max_pathsem_vars))
    return EXIT_OK


def _solver_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed-mode", choices=["all", "first"], default="all",
                   help="queue covers of all clauses, or only of the first (default: all)")
    p.add_argument("--resume-mode", choices=["resume", "restart"], default="resume",
                   help="fragments resume after the splitting clause, or restart at clause 1")
    p.add_argument("--no-dedup", action="store_true", help="disable duplicate-cube suppression")
    p.add_argument("--fill", type=_bool, default=True, metavar="true|false",
                   help="value given to variables left free in the surviving cube")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="invsat", description="Inverse-intersection SAT toolkit.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="solve a DIMACS CNF file")
    p.add_argument("cnf", help="DIMACS file, or - for stdin")
    _solver_flags(p)
    p.add_argument("--json", action="store_true", help="print only the JSON stats record")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("oracle", help="brute-force decision, model count or model list")
    p.add_argument("cnf")
    p.add_argument("--count", action="store_true", help="count all models")
    p.add_argument("--models", action="store_true", help="list every model")
    p.add_argument("--max-pathsem-vars", type=int, default=DEFAULT_MAX_VARS, metavar="N")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="check a model file against a CNF")
    p.add_argument("cnf")
    p.add_argument("model", help="'v' lines or signed literals, 0-terminated")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="emit a random k-SAT instance as DIMACS")
    p.add_argument("--vars", type=int, required=True)
    p.add_argument("--clauses", type=int, required=True)
    p.add_argument("--width", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--planted", action="store_true", help="guarantee a hidden model")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="sweep generated instances, emit CSV")
    p.add_argument("--sweep", action="append", default=[], metavar="KEY=RANGE",
                   help="vars=4:12, width=3, ratio=3:6:0.5 (repeatable)")
    p.add_argument("--per-point", type=int, default=5, help="instances per sweep point")
    p.add_argument("--seed", type=int, default=0, help="base seed; instance i uses seed+i")
    p.add_argument("--planted", action="store_true")
    p.add_argument("--oracle-max-vars", type=int, default=12)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--csv", metavar="PATH")
    _solver_flags(p)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("explain", help="print the path-set view of a small problem")
    p.add_argument("cnf")
    p.add_argument("--max-pathsem-vars", type=int, default=DEFAULT_MAX_VARS, metavar="N")
    p.set_defaults(func=cmd_explain)
    return ap


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR
    except (DimacsError, CapacityError, oracle.OracleCapacityError, OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
