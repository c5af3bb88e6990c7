"""Command-line front end.

    fdtemden solve PROBLEM [--order K] [--tmax T] [--points N] [--out DIR]
                           [--format csv|json ...]

The problem file is YAML (JSON also parses)::

    beta: "3/4"          # exact fraction p/q, 1/2 < beta <= 1
    A: 1.0               # u(0)
    f:                   # f(t) = sum c * t^r
      - {c: 1.0, r: "0/1"}
    g: [0, 1]            # g(u) coefficients, lowest degree first
    # optional run settings, overridden by command-line flags
    K: 64
    t_max: 1.0
    grid_points: 101
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from dataclasses import dataclass, replace
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

import yaml

from .fdt_algebra import Monomial, evaluate
from .oracle import geometric_points, residual
from .order_arith import index_of, parse_order
from .solver import ProblemSpec, SeriesSolution, choose_grid, solve

log = logging.getLogger("fdtemden")

FORMATS = ("csv", "json")


class ProblemFileError(ValueError):
    """Problem file could not be turned into a valid run configuration."""


@dataclass(frozen=True)
class RunConfig:
    problem: ProblemSpec
    K: int = 64
    t_max: float = 1.0
    grid_points: int = 101
    output_dir: Path = Path("fdt_output")
    formats: tuple = ("csv",)

    def __post_init__(self):
        shift = 2 * index_of(self.problem.beta, choose_grid(self.problem))
        if self.K < shift:
            raise ProblemFileError(f"K: must be >= {shift} (= 2 beta/alpha), got {self.K}")
        if not self.t_max > 0:
            raise ProblemFileError(f"t_max: must be positive, got {self.t_max}")
        if self.grid_points < 2:
            raise ProblemFileError(f"grid_points: need at least 2, got {self.grid_points}")
        bad = set(self.formats) - set(FORMATS)
        if bad or not self.formats:
            raise ProblemFileError(f"formats: expected a subset of {FORMATS}, got {self.formats}")


def _fraction_field(data: dict, key: str, default=None):
    raw = data.get(key, default)
    if raw is None:
        raise ProblemFileError(f"{key}: missing")
    if isinstance(raw, bool) or not isinstance(raw, (str, int)):
        raise ProblemFileError(f"{key}: expected a fraction string 'p/q', got {raw!r}")
    try:
        return parse_order(str(raw))
    except ValueError as exc:
        raise ProblemFileError(f"{key}: {exc}") from None


def _number(value, name: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ProblemFileError(f"{name}: expected a number, got {value!r}")
    return float(value)


def problem_from_dict(data: dict) -> ProblemSpec:
    if not isinstance(data, dict):
        raise ProblemFileError("problem file must contain a mapping at top level")
    beta = _fraction_field(data, "beta")
    if not (Fraction(1, 2) < beta.value <= 1):
        raise ProblemFileError(f"beta: beta out of range, {beta} not in (1/2, 1]")
    A = _number(data.get("A"), "A")

    f_raw = data.get("f")
    if not isinstance(f_raw, list) or not f_raw:
        raise ProblemFileError("f: expected a nonempty list of {c, r} records")
    monomials = []
    for i, rec in enumerate(f_raw):
        if not isinstance(rec, dict) or "c" not in rec:
            raise ProblemFileError(f"f[{i}]: expected a record with keys c and r")
        monomials.append(
            Monomial(_number(rec["c"], f"f[{i}].c"), _fraction_field(rec, "r", "0/1"))
        )

    g_raw = data.get("g")
    if not isinstance(g_raw, list) or not g_raw:
        raise ProblemFileError("g: expected a nonempty coefficient list")
    g = [_number(c, f"g[{i}]") for i, c in enumerate(g_raw)]
    return ProblemSpec(beta, A, tuple(monomials), tuple(g))


def parse_problem_file(path) -> RunConfig:
    path = Path(path)
    try:
        data = yaml.safe_load(path.read_text())
    except yaml.YAMLError as exc:
        raise ProblemFileError(f"{path}: not valid YAML/JSON: {exc}") from None
    problem = problem_from_dict(data)
    kwargs = {}
    if "K" in data:
        kwargs["K"] = int(_number(data["K"], "K"))
    if "t_max" in data:
        kwargs["t_max"] = _number(data["t_max"], "t_max")
    if "grid_points" in data:
        kwargs["grid_points"] = int(_number(data["grid_points"], "grid_points"))
    return RunConfig(problem, **kwargs)


# -- report tables -----------------------------------------------------------


def _num(x: float) -> str:
    # repr is the shortest string that round-trips the double
    return repr(float(x))


def metadata(sol: SeriesSolution) -> dict:
    p = sol.problem
    return {
        "alpha": str(sol.alpha),
        "beta": str(p.beta),
        "A": p.A,
        "K": sol.truncation_index,
        "f": [{"c": m.coefficient, "r": str(m.exponent)} for m in p.f_monomials],
        "g": list(p.g_poly),
    }


def read_metadata(path) -> dict:
    """Metadata block of a JSON output, with alpha/beta as exact orders."""
    meta = json.loads(Path(path).read_text())["metadata"]
    meta["alpha"] = parse_order(meta["alpha"])
    meta["beta"] = parse_order(meta["beta"])
    return meta


def build_tables(config: RunConfig) -> tuple:
    sol = solve(config.problem, config.K)
    coeffs = [
        (k, str(sol.coeffs.exponent(k)), c) for k, c in enumerate(sol.coeffs.coeffs)
    ]
    n = config.grid_points
    ts = [config.t_max * i / (n - 1) for i in range(n)]
    solution = [(t, evaluate(sol.coeffs, t)) for t in ts]
    rep = residual(sol, geometric_points(config.t_max))
    residuals = list(zip(rep.sample_points, rep.residuals))
    t_half = config.t_max / 2
    convergence = []
    prev = None
    for K in (config.K // 4, config.K // 2, config.K):
        u = evaluate(sol.coeffs.truncate(K), t_half)
        convergence.append((K, t_half, u, None if prev is None else u - prev))
        prev = u
    tables = {
        "coefficients": (("k", "alpha_k", "U"), coeffs),
        "solution": (("t", "u"), solution),
        "residual": (("t", "R"), residuals),
        "convergence": (("K", "t", "u", "diff"), convergence),
    }
    return sol, tables


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, float):
        return _num(v)
    return str(v)


def _write_csv(path: Path, header, rows):
    with path.open("w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow([_cell(v) for v in row])


def _write_json(path: Path, meta: dict, header, rows):
    doc = {"metadata": meta, "columns": list(header), "rows": [list(r) for r in rows]}
    path.write_text(json.dumps(doc, indent=1) + "\n")


def run(config: RunConfig) -> int:
    """Solve and write all reports into ``config.output_dir``; returns exit status."""
    written: list = []
    try:
        sol, tables = build_tables(config)
        meta = metadata(sol)
        out = Path(config.output_dir)
        out.mkdir(parents=True, exist_ok=True)
        meta_path = out / "metadata.json"
        written.append(meta_path)
        meta_path.write_text(json.dumps(meta, indent=1) + "\n")
        for name, (header, rows) in tables.items():
            for fmt in config.formats:
                path = out / f"{name}.{fmt}"
                written.append(path)
                if fmt == "csv":
                    _write_csv(path, header, rows)
                else:
                    _write_json(path, meta, header, rows)
    except (ValueError, OverflowError, OSError) as exc:
        for path in written:
            try:
                path.unlink()
            except FileNotFoundError:
                pass
        print(f"error: {exc}", file=sys.stderr)
        return 1
    log.info("wrote %d files to %s", len(written), config.output_dir)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fdtemden",
        description="Fractional power series solutions of fractional Emden-Fowler problems",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)
    sp = sub.add_parser("solve", help="solve a problem file and write reports")
    sp.add_argument("problem", type=Path)
    sp.add_argument("--order", type=int, dest="K", help="truncation index K (default 64)")
    sp.add_argument("--tmax", type=float, dest="t_max", help="right end of output grid (default 1)")
    sp.add_argument("--points", type=int, dest="grid_points", help="number of grid points (default 101)")
    sp.add_argument("--out", type=Path, dest="output_dir", default=Path("fdt_output"))
    sp.add_argument("--format", action="append", choices=FORMATS, dest="formats",
                    help="output format; repeat for both (default csv)")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        config = parse_problem_file(args.problem)
        overrides = {
            k: getattr(args, k) for k in ("K", "t_max", "grid_points") if getattr(args, k) is not None
        }
        overrides["output_dir"] = args.output_dir
        if args.formats:
            overrides["formats"] = tuple(dict.fromkeys(args.formats))
        config = replace(config, **overrides)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
