"""Lebesgue functions and constants, growth studies, and mapped compacts.

All sups are sampled on distinguished boundaries: the integrands are
polynomial moduli, so by the maximum principle the polydisc sup lives on
the torus product (and the ellipse-product sup on the product of boundary
images). The two-variable sweeps exploit that every closed-form basis
polynomial is a short sum of separable terms A_t(z) * B_t(w): on a product
grid the value matrix is a single small matrix product, which keeps
degree sweeps at 512 x 512 resolution cheap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from lejalab.flip2d import FlipContext, decompose, flip_eval_oracle, flip_terms
from lejalab.leja1d import DyadicAngle, Ellipse, NodeSequence1D, SampledBoundary, disk_leja_point
from lejalab.numeration import block_size

# Per-node sup bound for disk-Leja sections: 2 * (d - p - q + 1) * this scale.
FLIP_UNIFORM_BOUND_SCALE = math.pi**2 * math.exp(6.0 * math.pi)


@dataclass(frozen=True)
class LebesgueReport:
    """Grid estimate of a Lebesgue constant.

    ``lam`` is the grid sup of the sum of basis-polynomial moduli (a lower
    bound for the true constant, and always >= 1 since the basis sums to 1
    on the node set). ``argmax_angles`` are the boundary parameters of the
    lexicographically first maximizing grid cell; ``per_node_sup`` lists
    (p, q, grid sup |l_(p,q)|) per node.
    """

    N: int
    d: int
    m: int
    grid_per_axis: int
    lam: float
    argmax_angles: tuple[float, ...]
    argmax_point: tuple[complex, ...]
    per_node_sup: tuple[tuple[int, int, float], ...]


def lebesgue_1d(nodes: NodeSequence1D, grid_size: int = 2**14) -> LebesgueReport:
    """Grid sup over the boundary of the 1-D Lebesgue function.

    Uses the product form of the univariate basis polynomials. The report
    reuses the two-variable field layout with d = N - 1 and m = 0.
    """
    if grid_size < 256:
        raise ValueError(f"grid_size must be >= 256, got {grid_size}")
    pts = nodes.as_array()
    n = len(pts)
    grid = nodes.compact.boundary_grid(grid_size)
    diffs = grid[:, None] - pts[None, :]
    # prefix[:, k] = prod_{j<k}, suffix[:, k] = prod_{j>k}
    prefix = np.ones((grid.size, n), dtype=complex)
    suffix = np.ones((grid.size, n), dtype=complex)
    for k in range(1, n):
        prefix[:, k] = prefix[:, k - 1] * diffs[:, k - 1]
        suffix[:, n - 1 - k] = suffix[:, n - k] * diffs[:, n - k]
    total = np.zeros(grid.size)
    per_node = []
    for k in range(n):
        denom = np.prod(pts[k] - np.delete(pts, k)) if n > 1 else 1.0
        values = np.abs(prefix[:, k] * suffix[:, k] / denom)
        per_node.append((k, 0, float(values.max())))
        total += values
    idx = int(np.argmax(total))
    if isinstance(nodes.compact, SampledBoundary):
        angle = float("nan")  # a raw sampling has no canonical parameter
    else:
        angle = 2.0 * math.pi * idx / grid_size
    return LebesgueReport(
        N=n, d=n - 1, m=0, grid_per_axis=grid_size,
        lam=float(total[idx]),
        argmax_angles=(angle,),
        argmax_point=(complex(grid[idx]),),
        per_node_sup=tuple(per_node),
    )


def _skip_prefix_table(nodes: Sequence[complex], own: int, t_max: int,
                       x: np.ndarray) -> np.ndarray:
    """Rows r = t+1 of prod_{i=0..t, i != own} (x - nodes[i])/(nodes[own] - nodes[i]).

    Row 0 is the empty product; same factor order as the scalar evaluation.
    """
    out = np.empty((t_max + 2, x.size), dtype=complex)
    out[0] = 1.0
    for i in range(t_max + 1):
        if i == own:
            out[i + 1] = out[i]
        else:
            out[i + 1] = out[i] * ((x - nodes[i]) / (nodes[own] - nodes[i]))
    return out


class SeparableGrid:
    """Basis-polynomial value matrices on a product grid via separable terms.

    One prefix-product table per node index is cached and shared across all
    nodes; each value matrix is then a (len(z), T) @ (T, len(w)) product
    over the T separable terms of the node's closed form.
    """

    def __init__(self, ctx: FlipContext, z_vals: np.ndarray, w_vals: np.ndarray):
        self.ctx = ctx
        self.z_vals = np.asarray(z_vals, dtype=complex)
        self.w_vals = np.asarray(w_vals, dtype=complex)
        self._ztables: dict[int, np.ndarray] = {}
        self._wtables: dict[int, np.ndarray] = {}

    def _ztable(self, p: int) -> np.ndarray:
        if p not in self._ztables:
            self._ztables[p] = _skip_prefix_table(self.ctx.etas, p, self.ctx.d, self.z_vals)
        return self._ztables[p]

    def _wtable(self, q: int) -> np.ndarray:
        if q not in self._wtables:
            self._wtables[q] = _skip_prefix_table(self.ctx.thetas, q, self.ctx.d, self.w_vals)
        return self._wtables[q]

    def node_matrix(self, p: int, q: int) -> np.ndarray:
        """Values of l_(p,q) on the product grid, shape (len(z), len(w))."""
        dec = self.ctx.decomposition
        terms = flip_terms(p, q, dec.d, dec.m)
        ztab, wtab = self._ztable(p), self._wtable(q)
        a = np.empty((len(terms), self.z_vals.size), dtype=complex)
        b = np.empty((len(terms), self.w_vals.size), dtype=complex)
        for row, (sign, t_z, t_w) in enumerate(terms):
            a[row] = sign * ztab[t_z + 1]
            b[row] = wtab[t_w + 1]
        return a.T @ b


def _torus(grid_per_axis: int) -> np.ndarray:
    return np.exp(2j * np.pi * np.arange(grid_per_axis) / grid_per_axis)


def _report_from_grids(ctx: FlipContext, z_vals: np.ndarray, w_vals: np.ndarray,
                       angles: np.ndarray, grid_per_axis: int) -> LebesgueReport:
    grids = SeparableGrid(ctx, z_vals, w_vals)
    total = np.zeros((z_vals.size, w_vals.size))
    per_node = []
    for p, q in ctx.node_indices:
        magnitudes = np.abs(grids.node_matrix(p, q))
        per_node.append((p, q, float(magnitudes.max())))
        total += magnitudes
    flat = int(np.argmax(total))  # first maximum in C order: lexicographic cell
    iz, iw = divmod(flat, w_vals.size)
    return LebesgueReport(
        N=ctx.N, d=ctx.d, m=ctx.m, grid_per_axis=grid_per_axis,
        lam=float(total[iz, iw]),
        argmax_angles=(float(angles[iz]), float(angles[iw])),
        argmax_point=(complex(z_vals[iz]), complex(w_vals[iw])),
        per_node_sup=tuple(per_node),
    )


def lebesgue_2d(ctx: FlipContext, grid_per_axis: int = 512) -> LebesgueReport:
    """Grid sup over the torus product of the two-variable Lebesgue function."""
    if grid_per_axis < 64:
        raise ValueError(f"grid_per_axis must be >= 64, got {grid_per_axis}")
    grid = _torus(grid_per_axis)
    angles = 2.0 * np.pi * np.arange(grid_per_axis) / grid_per_axis
    return _report_from_grids(ctx, grid, grid, angles, grid_per_axis)


def flip_sup_report(ctx: FlipContext, grid_per_axis: int = 512) -> tuple[tuple[int, int, float], ...]:
    """Grid sup of every basis polynomial of the section on the torus product."""
    grid = _torus(grid_per_axis)
    grids = SeparableGrid(ctx, grid, grid)
    return tuple(
        (p, q, float(np.abs(grids.node_matrix(p, q)).max())) for p, q in ctx.node_indices)


def flip_uniform_bound(d: int, p: int, q: int) -> float:
    """Proven per-node sup bound 2 (d - p - q + 1) pi^2 exp(6 pi) for disk-Leja nodes."""
    return 2.0 * (d - p - q + 1) * FLIP_UNIFORM_BOUND_SCALE


def lagrange_sum_oracle(ctx: FlipContext, z: complex, w: complex) -> float:
    """Lebesgue-function value at (z, w) via determinant ratios only.

    An independent cross-check for the closed-form grid sweeps; costs one
    determinant per node, so keep N moderate.
    """
    return sum(abs(flip_eval_oracle(ctx, p, q, z, w)) for p, q in ctx.node_indices)


@dataclass(frozen=True)
class EllipseMap:
    """The boundary map u -> (R u + 1/(R u)) / 2 of an ellipse with R > 1."""

    R: float

    def __post_init__(self) -> None:
        if not self.R > 1.0:
            raise ValueError(f"ellipse map needs R > 1, got {self.R} (degenerate boundary)")

    def __call__(self, u):
        ru = self.R * u
        return (ru + 1.0 / ru) / 2.0


def mapped_nodes(emap: EllipseMap, angles: Sequence[DyadicAngle]) -> NodeSequence1D:
    """Images of unit-circle nodes at the given exact angles under the ellipse map.

    The map is injective on the circle for R > 1, so distinct angles give
    distinct ellipse points; the exact angles are kept as the boundary
    parameters of the images.
    """
    points = tuple(emap(complex(a)) for a in angles)
    return NodeSequence1D(points, Ellipse(emap.R), tuple(angles))


def _mapped_context(R1: float, R2: float, N: int) -> tuple[FlipContext, EllipseMap, EllipseMap]:
    d = decompose(N).d
    angles = [disk_leja_point(k) for k in range(d + 1)]
    map1, map2 = EllipseMap(R1), EllipseMap(R2)
    etas = mapped_nodes(map1, angles).points
    thetas = mapped_nodes(map2, angles).points
    return FlipContext(etas, thetas, N), map1, map2


def lebesgue_2d_mapped(R1: float, R2: float, N: int,
                       grid_per_axis: int = 512) -> LebesgueReport:
    """Lebesgue report on a product of ellipses with mapped disk-Leja nodes.

    The closed forms hold verbatim with the mapped nodes substituted; the
    grid is the image of the torus product under the two boundary maps.
    """
    if grid_per_axis < 64:
        raise ValueError(f"grid_per_axis must be >= 64, got {grid_per_axis}")
    ctx, map1, map2 = _mapped_context(R1, R2, N)
    circle = _torus(grid_per_axis)
    angles = 2.0 * np.pi * np.arange(grid_per_axis) / grid_per_axis
    return _report_from_grids(ctx, map1(circle), map2(circle), angles, grid_per_axis)


def interpolant_grid(ctx: FlipContext, samples: Sequence[complex],
                     z_vals: np.ndarray, w_vals: np.ndarray) -> np.ndarray:
    """Interpolation polynomial of the sampled values on a product grid."""
    if len(samples) != ctx.N:
        raise ValueError(f"expected {ctx.N} samples, got {len(samples)}")
    grids = SeparableGrid(ctx, z_vals, w_vals)
    total = np.zeros((np.asarray(z_vals).size, np.asarray(w_vals).size), dtype=complex)
    for value, (p, q) in zip(samples, ctx.node_indices):
        total += value * grids.node_matrix(p, q)
    return total


@dataclass(frozen=True)
class ConvergenceRow:
    """One degree of a convergence study: sup error and trailing decay rate."""

    d: int
    N: int
    sup_error: float
    fitted_rate: float


def jackson_study(f: Callable, d_max: int, grid_per_axis: int = 256) -> list[ConvergenceRow]:
    """Interpolation error decay of f on growing intertwined disk-Leja sections.

    For d = 1..d_max samples f on the N_d-point section, forms the
    interpolant, and records the torus-product grid sup of |f - L[f]|.
    ``fitted_rate`` is the least-squares slope of log error against log N
    over the trailing window of up to three degrees (NaN for the first).
    """
    if d_max < 1:
        raise ValueError(f"d_max must be >= 1, got {d_max}")
    if d_max > 20:
        raise ValueError(f"d_max must be <= 20, got {d_max}")
    grid = _torus(grid_per_axis)
    zg, wg = grid[:, None], grid[None, :]
    f_grid = np.asarray(f(zg, wg)) * np.ones((grid.size, grid.size))
    rows: list[ConvergenceRow] = []
    errors: list[float] = []
    for d in range(1, d_max + 1):
        N = block_size(2, d)
        ctx = FlipContext.from_disk_leja(N)
        samples = [f(z, w) for z, w in ctx.node_points]
        approx = interpolant_grid(ctx, samples, grid, grid)
        err = float(np.abs(approx - f_grid).max())
        errors.append(err)
        if d == 1:
            rate = float("nan")
        else:
            window = min(3, d)
            ns = [block_size(2, dd) for dd in range(d - window + 1, d + 1)]
            logs = [math.log(max(e, 1e-300)) for e in errors[-window:]]
            rate = float(np.polyfit(np.log(ns), logs, 1)[0])
        rows.append(ConvergenceRow(d=d, N=N, sup_error=err, fitted_rate=rate))
    return rows
