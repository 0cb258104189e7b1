"""Command-line front end: nodes, verification suites, Lebesgue and convergence studies.

The data commands (points, verify, lebesgue, interp) emit JSON or CSV only;
the report command additionally renders PNG figures next to the delimited
output. Exit codes: 0 success, 1 verification failure, 2 usage or
configuration error. Identical configuration (including --seed) produces
byte-identical output files: floats are written with 17 significant digits
and nothing time- or locale-dependent enters the payloads.

The environment variable LEJA_LAB_THREADS caps sweep parallelism; unset or
1 keeps every sweep sequential.
"""

from __future__ import annotations

import argparse
import cmath
import csv
import io
import math
import os
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Sequence

import numpy as np

from lejalab import __version__
from lejalab.flip2d import FlipContext, decompose
from lejalab.leja1d import (
    DyadicAngle,
    NodeSequence1D,
    SampledBoundary,
    disk_leja_point,
    disk_leja_section,
    verify_leja_section,
)
from lejalab.lebesgue import (
    EllipseMap,
    LebesgueReport,
    jackson_study,
    lebesgue_1d,
    lebesgue_2d,
    lebesgue_2d_mapped,
    mapped_nodes,
)
from lejalab.numeration import block_size, index_to_multi
from lejalab.vdm import (
    counterexample_section,
    random_unimodular,
    verify_multidim_leja,
)
from lejalab.flip2d import oracle_agreement


class UsageError(Exception):
    """Invalid configuration detected after argument parsing."""


# ---------------------------------------------------------------------------
# serialization helpers

def _fmt_float(x: float) -> str:
    if math.isnan(x):
        return "null"
    return format(float(x), ".17g")


def dump_json(obj, indent: int = 0) -> str:
    """Deterministic JSON with floats at 17 significant digits."""
    pad = "  " * indent
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _fmt_float(float(obj))
    if isinstance(obj, str):
        return '"' + obj.replace("\\", "\\\\").replace('"', '\\"') + '"'
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        inner = ",\n".join(
            f'{pad}  {dump_json(str(key))}: {dump_json(value, indent + 1)}'
            for key, value in obj.items())
        return "{\n" + inner + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        inner = ",\n".join(f"{pad}  {dump_json(item, indent + 1)}" for item in obj)
        return "[\n" + inner + "\n" + pad + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, (float, np.floating)):
        return "" if math.isnan(value) else format(float(value), ".17g")
    return str(value)


def dump_csv(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_csv_cell(cell) for cell in row])
    return buffer.getvalue()


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(out, "w", newline="") as handle:
            handle.write(text)


def _complex_payload(value: complex, angle: DyadicAngle | None) -> dict:
    payload = {"re": float(value.real), "im": float(value.imag)}
    if angle is not None:
        payload["angle_num"] = angle.numerator
        payload["angle_level"] = angle.level
    return payload


# ---------------------------------------------------------------------------
# configuration parsing

def _parse_compacts(spec: str | None, dim: int) -> list[str]:
    if spec is None:
        return ["disk"] * dim
    tokens = [token.strip() for token in spec.split(",")]
    if len(tokens) == 1 and dim > 1:
        tokens = tokens * dim
    if len(tokens) != dim:
        raise UsageError(f"--compact lists {len(tokens)} axes but --dim is {dim}")
    for token in tokens:
        if token == "disk":
            continue
        match = re.fullmatch(r"ellipse:([0-9.]+)", token)
        if not match or not float(match.group(1)) > 1.0:
            raise UsageError(f"unknown compact {token!r} (use disk or ellipse:R with R > 1)")
    return tokens


def _axis_sequence(token: str, angles: Sequence[DyadicAngle]) -> NodeSequence1D:
    if token == "disk":
        points = tuple(complex(a) for a in angles)
        return NodeSequence1D(points, angles=tuple(angles))
    radius = float(token.split(":", 1)[1])
    return mapped_nodes(EllipseMap(radius), angles)


def builtin_function(spec: str) -> tuple[str, Callable]:
    """Resolve a study function: poly:z{a}w{b}, exp, or pole:R (R > 2)."""
    if spec == "exp":
        return "exp", lambda z, w: np.exp(z + w)
    match = re.fullmatch(r"poly:z(\d*)w(\d*)", spec)
    if match:
        a = int(match.group(1)) if match.group(1) else 1
        b = int(match.group(2)) if match.group(2) else 1
        return f"poly:z{a}w{b}", lambda z, w: z**a * w**b
    match = re.fullmatch(r"pole:(\d+(?:\.\d+)?)", spec)
    if match:
        radius = float(match.group(1))
        if not radius > 2.0:
            raise UsageError(f"pole:{radius:g} has a singularity on the bidisc (need R > 2)")
        return f"pole:{radius:g}", lambda z, w: 1.0 / (radius - z - w)
    raise UsageError(f"unknown function spec {spec!r} (use poly:zAwB, exp, or pole:R)")


def _worker_count() -> int:
    raw = os.environ.get("LEJA_LAB_THREADS")
    if raw is None:
        return 1
    try:
        count = int(raw)
    except ValueError as exc:
        raise UsageError(f"LEJA_LAB_THREADS must be an integer, got {raw!r}") from exc
    return max(count, 1)


def _map_ordered(fn: Callable, items: Sequence) -> list:
    workers = _worker_count()
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


# ---------------------------------------------------------------------------
# points

def cmd_points(args) -> int:
    if args.count < 1:
        raise UsageError(f"--count must be >= 1, got {args.count}")
    dim = args.dim
    compacts = _parse_compacts(args.compact, dim)
    multis = [index_to_multi(dim, n) for n in range(1, args.count + 1)]
    needed = [max(k[j] for k in multis) + 1 for j in range(dim)]
    axis_angles = [[disk_leja_point(i) for i in range(needed[j])] for j in range(dim)]
    axes = [_axis_sequence(compacts[j], axis_angles[j]) for j in range(dim)]

    nodes = []
    for n, k in enumerate(multis, start=1):
        coords = []
        for j in range(dim):
            coords.append(_complex_payload(axes[j].points[k[j]], axis_angles[j][k[j]]))
        nodes.append({"n": n, "k": list(k), "coords": coords})

    if args.format == "json":
        payload = {
            "command": "points",
            "dim": dim,
            "count": args.count,
            "compacts": compacts,
            "nodes": nodes,
        }
        _emit(dump_json(payload), args.out)
    else:
        header = ["n"] + [f"k{j + 1}" for j in range(dim)]
        for j in range(dim):
            header += [f"x{j + 1}_re", f"x{j + 1}_im",
                       f"x{j + 1}_angle_num", f"x{j + 1}_angle_level"]
        rows = []
        for node in nodes:
            row = [node["n"], *node["k"]]
            for coord in node["coords"]:
                row += [coord["re"], coord["im"], coord["angle_num"], coord["angle_level"]]
            rows.append(row)
        _emit(dump_csv(header, rows), args.out)
    return 0


def _nodes_from_file(path: str, grid_size: int) -> NodeSequence1D:
    """Rebuild a 1-D node sequence from a points output file.

    The compact becomes a sampled boundary (a torus grid of the requested
    size), so re-verification runs on exactly the same candidate set as the
    unit-disk original. Exact angle metadata, when present, reconstructs
    the nodes bit for bit.
    """
    raw: list[tuple[float, float, DyadicAngle | None]] = []
    if path.endswith(".json"):
        import json as _json

        with open(path) as handle:
            payload = _json.load(handle)
        if payload.get("dim") != 1:
            raise UsageError("--nodes-file expects a dim-1 points file")
        for node in payload["nodes"]:
            coord = node["coords"][0]
            angle = None
            if "angle_num" in coord:
                angle = DyadicAngle(coord["angle_num"], coord["angle_level"])
            raw.append((coord["re"], coord["im"], angle))
    else:
        with open(path, newline="") as handle:
            for record in csv.DictReader(handle):
                angle = None
                if record.get("x1_angle_num", "") != "":
                    angle = DyadicAngle(int(record["x1_angle_num"]),
                                        int(record["x1_angle_level"]))
                raw.append((float(record["x1_re"]), float(record["x1_im"]), angle))
    points: list[complex] = []
    angles: list[DyadicAngle] | None = []
    for re_part, im_part, angle in raw:
        written = complex(re_part, im_part)
        # Angle metadata reconstructs the node bit for bit, but only when it
        # actually parametrizes the written point (not for mapped axes).
        if angle is not None and abs(complex(angle) - written) <= 1e-9:
            points.append(complex(angle))
            if angles is not None:
                angles.append(angle)
        else:
            points.append(written)
            angles = None
    compact = SampledBoundary(tuple(np.exp(2j * np.pi * np.arange(grid_size) / grid_size)))
    return NodeSequence1D(tuple(points), compact,
                          tuple(angles) if angles is not None else None)


# ---------------------------------------------------------------------------
# verify

def _inject(section: NodeSequence1D, index: int) -> NodeSequence1D:
    """Rotate one node by exp(0.1i): stays on the circle, breaks maximality."""
    if not 0 <= index < len(section):
        raise UsageError(f"--inject-bad-node {index} is outside the section")
    points = list(section.points)
    points[index] *= cmath.exp(0.1j)
    return NodeSequence1D(tuple(points), section.compact)


def _suite_disk_leja(args) -> list[tuple[str, bool, str]]:
    count = args.count or 32
    grid = args.grid or 2**14
    checks = []
    if args.nodes_file:
        section = _nodes_from_file(args.nodes_file, grid)
        name = f"disk-leja section from {os.path.basename(args.nodes_file)} (N={len(section)})"
    else:
        section = disk_leja_section(count)
        name = f"disk-leja section (N={count})"
    if args.inject_bad_node is not None:
        section = _inject(section, args.inject_bad_node)
        name += f" with node {args.inject_bad_node} perturbed"
    outcome = verify_leja_section(section, grid, args.tol)
    detail = ("all prefixes maximal" if outcome.ok
              else f"first failure at k={outcome.first_failing_k}")
    checks.append((name, outcome.ok, detail))
    if args.inject_bad_node is None and not args.nodes_file:
        negative = [
            ("(1, -1, e^{i pi/4})", NodeSequence1D((1, -1, cmath.rect(1, math.pi / 4)))),
            ("(-1, i)", NodeSequence1D((-1, 1j))),
        ]
        for label, bad in negative:
            result = verify_leja_section(bad, grid, args.tol)
            checks.append((f"non-Leja {label} rejected", not result.ok,
                           f"first failure at k={result.first_failing_k}"))
    return checks


def _suite_multidim(args) -> list[tuple[str, bool, str]]:
    count = args.count or 15
    grid = args.grid or 4096
    d = decompose(count).d
    base = disk_leja_section(d + 1)
    components = [base, base]
    name = f"intertwined disk-leja (s=2, N={count})"
    if args.inject_bad_node is not None:
        components = [_inject(base, args.inject_bad_node), base]
        name += f" with component-1 node {args.inject_bad_node} perturbed"
    outcome = verify_multidim_leja(components, count, grid, args.tol)
    detail = ("all prefixes maximal" if outcome.ok
              else f"first failure at n={outcome.first_failing_n}")
    return [(name, outcome.ok, detail)]


def _suite_counterexample(args) -> list[tuple[str, bool, str]]:
    grid = args.grid or 1024
    _, outcome = counterexample_section(grid)
    return [
        ("counterexample is a 3-Leja section for the bidisc",
         outcome.is_leja_section,
         f"sups {outcome.step1_sup:.6g}/{outcome.step2_sup:.6g} attained "
         f"{outcome.step1_at_node:.6g}/{outcome.step2_at_node:.6g}"),
        ("counterexample cannot be intertwining",
         outcome.non_intertwining,
         "positions 1 and 2 would need equal first coordinates"),
    ]


def _suite_flip_oracle(args) -> list[tuple[str, bool, str]]:
    max_n = args.count or 12
    rng = np.random.default_rng(args.seed)
    radius = np.sqrt(rng.uniform(0.0, 1.0, 20))
    zs = radius * np.exp(1j * rng.uniform(0.0, 2.0 * np.pi, 20))
    radius = np.sqrt(rng.uniform(0.0, 1.0, 20))
    ws = radius * np.exp(1j * rng.uniform(0.0, 2.0 * np.pi, 20))

    def run(n: int) -> tuple[float, float]:
        ctx = FlipContext.from_disk_leja(n)
        rel_a, abs_a = oracle_agreement(ctx, zs, ws)
        d = ctx.d
        gap = 2.0 * np.pi / (4 * (d + 1))
        family = FlipContext(tuple(random_unimodular(d + 1, rng, gap)),
                             tuple(random_unimodular(d + 1, rng, gap)), n)
        rel_b, abs_b = oracle_agreement(family, zs, ws)
        return max(rel_a, rel_b), max(abs_a, abs_b)

    results = [run(n) for n in range(1, max_n + 1)]
    worst_rel = max(r for r, _ in results)
    worst_abs = max(a for _, a in results)
    passed = worst_rel < 1e-8 and worst_abs < 1e-9
    return [(f"closed forms match determinant ratios (N<={max_n})", passed,
             f"worst relative {worst_rel:.3e}, worst small-value absolute {worst_abs:.3e}")]


def cmd_verify(args) -> int:
    suites = {
        "disk-leja": _suite_disk_leja,
        "multidim": _suite_multidim,
        "counterexample": _suite_counterexample,
        "flip-oracle": _suite_flip_oracle,
    }
    if args.suite == "all":
        selected = list(suites.values())
    elif args.suite in suites:
        selected = [suites[args.suite]]
    else:
        raise UsageError(f"unknown suite {args.suite!r} (choose from "
                         f"{', '.join([*suites, 'all'])})")
    checks: list[tuple[str, bool, str]] = []
    for suite in selected:
        checks.extend(suite(args))
    for name, passed, detail in checks:
        print(f"{'PASS' if passed else 'FAIL'}  {name}: {detail}")
    failed = [name for name, passed, _ in checks if not passed]
    if args.out:
        payload = {
            "command": "verify",
            "suite": args.suite,
            "passed": not failed,
            "checks": [
                {"name": name, "passed": passed, "detail": detail}
                for name, passed, detail in checks
            ],
        }
        _emit(dump_json(payload), args.out)
    if failed:
        print(f"verification failed: {failed[0]}", file=sys.stderr)
        return 1
    return 0


# ---------------------------------------------------------------------------
# lebesgue

_LEBESGUE_HEADER = ["N", "d", "m", "grid", "lambda", "lambda/N^1.5",
                    "argmax_z_angle", "argmax_w_angle"]


def _lebesgue_row(report: LebesgueReport) -> list:
    angles = list(report.argmax_angles) + [None]
    return [report.N, report.d, report.m, report.grid_per_axis, report.lam,
            report.lam / report.N**1.5, angles[0], angles[1]]


def _report_payload(report: LebesgueReport) -> dict:
    return {
        "N": report.N,
        "d": report.d,
        "m": report.m,
        "grid": report.grid_per_axis,
        "lambda": report.lam,
        "lambda_over_n15": report.lam / report.N**1.5,
        "argmax_angles": list(report.argmax_angles),
        "argmax_point": [
            {"re": point.real, "im": point.imag} for point in report.argmax_point
        ],
        "per_node_sup": [
            {"p": p, "q": q, "sup": sup} for p, q, sup in report.per_node_sup
        ],
    }


def _single_lebesgue(args, N: int) -> LebesgueReport:
    compacts = _parse_compacts(args.compact, args.dim)
    if args.dim == 1:
        grid = args.grid or 2**14
        if compacts[0] != "disk":
            raise UsageError("dim-1 Lebesgue reports support disk sections only")
        return lebesgue_1d(disk_leja_section(N), grid)
    grid = args.grid or 512
    if all(token == "disk" for token in compacts):
        return lebesgue_2d(FlipContext.from_disk_leja(N), grid)
    if all(token.startswith("ellipse:") for token in compacts):
        r1 = float(compacts[0].split(":", 1)[1])
        r2 = float(compacts[1].split(":", 1)[1])
        return lebesgue_2d_mapped(r1, r2, N, grid)
    raise UsageError("mixed disk/ellipse axes are not supported for Lebesgue reports")


def cmd_lebesgue(args) -> int:
    if (args.count is None) == (args.sweep_degree is None):
        raise UsageError("give exactly one of --count or --sweep-degree")
    if args.count is not None:
        if args.count < 1:
            raise UsageError(f"--count must be >= 1, got {args.count}")
        reports = [_single_lebesgue(args, args.count)]
    else:
        if args.sweep_degree < 1:
            raise UsageError(f"--sweep-degree must be >= 1, got {args.sweep_degree}")
        if args.dim != 2:
            raise UsageError("--sweep-degree is a dim-2 study")
        degrees = list(range(1, args.sweep_degree + 1))
        reports = _map_ordered(
            lambda d: _single_lebesgue(args, block_size(2, d)), degrees)
    if args.format == "json":
        payload = {"command": "lebesgue", "dim": args.dim,
                   "reports": [_report_payload(r) for r in reports]}
        _emit(dump_json(payload), args.out)
    else:
        _emit(dump_csv(_LEBESGUE_HEADER, [_lebesgue_row(r) for r in reports]), args.out)
    return 0


# ---------------------------------------------------------------------------
# interp

_INTERP_HEADER = ["d", "N", "sup_error", "slope"]


def cmd_interp(args) -> int:
    name, f = builtin_function(args.function)
    if args.d_max < 1 or args.d_max > 20:
        raise UsageError(f"--d-max must be in 1..20, got {args.d_max}")
    grid = args.grid or 256
    rows = jackson_study(f, args.d_max, grid)
    if args.format == "json":
        payload = {
            "command": "interp",
            "function": name,
            "grid": grid,
            "rows": [
                {"d": r.d, "N": r.N, "sup_error": r.sup_error, "slope": r.fitted_rate}
                for r in rows
            ],
        }
        _emit(dump_json(payload), args.out)
    else:
        table = [[r.d, r.N, r.sup_error, r.fitted_rate] for r in rows]
        _emit(dump_csv(_INTERP_HEADER, table), args.out)
    return 0


# ---------------------------------------------------------------------------
# report (delimited output + figures)

def cmd_report(args) -> int:
    from lejalab import report as figures

    os.makedirs(args.out_dir, exist_ok=True)

    def path(name: str) -> str:
        return os.path.join(args.out_dir, name)

    if args.kind == "growth":
        degrees = list(range(1, (args.d_max or 12) + 1))
        grid = args.grid or 256
        reports = _map_ordered(
            lambda d: lebesgue_2d(FlipContext.from_disk_leja(block_size(2, d)), grid),
            degrees)
        _emit(dump_csv(_LEBESGUE_HEADER, [_lebesgue_row(r) for r in reports]),
              path("growth.csv"))
        figures.growth_figure(reports, path("growth.png"))
        print(f"wrote {path('growth.csv')} and {path('growth.png')}")
    elif args.kind == "convergence":
        name, f = builtin_function(args.function or "exp")
        rows = jackson_study(f, args.d_max or 12, args.grid or 128)
        table = [[r.d, r.N, r.sup_error, r.fitted_rate] for r in rows]
        _emit(dump_csv(_INTERP_HEADER, table), path("convergence.csv"))
        figures.convergence_figure(rows, path("convergence.png"), label=name)
        print(f"wrote {path('convergence.csv')} and {path('convergence.png')}")
    elif args.kind == "nodes":
        count = args.count or 16
        if count < 1:
            raise UsageError(f"--count must be >= 1, got {count}")
        dim = args.dim
        compacts = _parse_compacts(args.compact, dim)
        multis = [index_to_multi(dim, n) for n in range(1, count + 1)]
        needed = [max(k[j] for k in multis) + 1 for j in range(dim)]
        axes = [
            _axis_sequence(compacts[j], [disk_leja_point(i) for i in range(needed[j])])
            for j in range(dim)
        ]
        header = ["n"] + [f"k{j + 1}" for j in range(dim)] + \
            [coord for j in range(dim) for coord in (f"x{j + 1}_re", f"x{j + 1}_im")]
        rows = []
        for n, k in enumerate(multis, start=1):
            row: list = [n, *k]
            for j in range(dim):
                point = axes[j].points[k[j]]
                row += [point.real, point.imag]
            rows.append(row)
        _emit(dump_csv(header, rows), path("nodes.csv"))
        figures.nodes_figure([axis.as_array() for axis in axes], path("nodes.png"))
        print(f"wrote {path('nodes.csv')} and {path('nodes.png')}")
    else:
        raise UsageError(f"unknown report kind {args.kind!r}")
    return 0


# ---------------------------------------------------------------------------
# parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lejalab",
        description="Intertwining Leja nodes, explicit bidimensional Lagrange "
                    "bases, and Lebesgue-constant studies.")
    parser.add_argument("--version", action="version", version=f"lejalab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--out", default=None, help="write output to this path")
        p.add_argument("--grid", type=int, default=None, help="grid resolution")
        p.add_argument("--tol", type=float, default=1e-6, help="verification tolerance")
        p.add_argument("--seed", type=int, default=20240809, help="random seed")

    p_points = sub.add_parser("points", help="emit intertwined node listings")
    p_points.add_argument("--dim", type=int, required=True)
    p_points.add_argument("--count", type=int, required=True)
    p_points.add_argument("--compact", default=None,
                          help="per-axis compacts: disk|ellipse:R[,...]")
    common(p_points)
    p_points.set_defaults(func=cmd_points)

    p_verify = sub.add_parser("verify", help="run verification suites")
    p_verify.add_argument("--suite", required=True,
                          choices=("disk-leja", "multidim", "counterexample",
                                   "flip-oracle", "all"))
    p_verify.add_argument("--count", type=int, default=None)
    p_verify.add_argument("--inject-bad-node", type=int, default=None,
                          help="perturb this node before verifying")
    p_verify.add_argument("--nodes-file", default=None,
                          help="re-verify a dim-1 points output file")
    common(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_leb = sub.add_parser("lebesgue", help="Lebesgue constant reports")
    p_leb.add_argument("--dim", type=int, choices=(1, 2), required=True)
    p_leb.add_argument("--count", type=int, default=None)
    p_leb.add_argument("--sweep-degree", type=int, default=None,
                       help="report every degree d = 1..D (dim 2)")
    p_leb.add_argument("--compact", default=None)
    common(p_leb)
    p_leb.set_defaults(func=cmd_lebesgue)

    p_interp = sub.add_parser("interp", help="interpolation convergence studies")
    p_interp.add_argument("--function", required=True,
                          help="poly:zAwB | exp | pole:R")
    p_interp.add_argument("--d-max", type=int, required=True)
    common(p_interp)
    p_interp.set_defaults(func=cmd_interp)

    p_report = sub.add_parser(
        "report", help="delimited study output plus rendered figures")
    p_report.add_argument("kind", choices=("growth", "convergence", "nodes"))
    p_report.add_argument("--out-dir", default=".")
    p_report.add_argument("--d-max", type=int, default=None)
    p_report.add_argument("--function", default=None)
    p_report.add_argument("--dim", type=int, default=2)
    p_report.add_argument("--count", type=int, default=None)
    p_report.add_argument("--compact", default=None)
    common(p_report)
    p_report.set_defaults(func=cmd_report)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
