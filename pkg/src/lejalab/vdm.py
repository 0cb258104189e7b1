"""Intertwining sequences and generalized Vandermonde determinants.

An intertwining sequence assembles s one-dimensional node sequences into
points of C^s through the graded-lex numeration: point n takes coordinate j
from entry k_j(n) of sequence j. The generalized Vandermonde determinant of
N such points is det[e_i(H_j)] over the first N graded-lex monomials e_i.

Appending one point multiplies the determinant by an explicit polynomial
that factors into univariate linear terms, one group per coordinate axis;
that factorization drives an overflow-safe telescoped determinant, the
Schiffer-Siciak two-variable product formula, and a multidimensional Leja
verifier whose sup over a product compact splits into per-axis 1-D sweeps.

Determinant values travel as log-magnitude plus phase: across interesting N
they span far more than the double-precision exponent range.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from lejalab.leja1d import NodeSequence1D, SampledBoundary, UnitDisk
from lejalab.numeration import index_to_multi

_LOG_EXPOSE_LIMIT = 300.0  # |log-magnitude| beyond this has no double representation


def _wrap_phase(phi: float) -> float:
    """Reduce to (-pi, pi]."""
    out = math.remainder(phi, 2.0 * math.pi)
    if out <= -math.pi:
        out += 2.0 * math.pi
    return out


@dataclass(frozen=True)
class LogComplex:
    """A nonzero complex number as exp(log_magnitude + i*phase), or exact zero."""

    log_magnitude: float
    phase: float
    is_zero: bool = False

    @classmethod
    def one(cls) -> "LogComplex":
        return cls(0.0, 0.0)

    @classmethod
    def zero(cls) -> "LogComplex":
        return cls(-math.inf, 0.0, is_zero=True)

    @classmethod
    def from_complex(cls, z: complex) -> "LogComplex":
        z = complex(z)
        if z == 0:
            return cls.zero()
        return cls(math.log(abs(z)), _wrap_phase(cmath.phase(z)))

    def __mul__(self, other: "LogComplex") -> "LogComplex":
        if self.is_zero or other.is_zero:
            return LogComplex.zero()
        return LogComplex(self.log_magnitude + other.log_magnitude,
                          _wrap_phase(self.phase + other.phase))

    def __truediv__(self, other: "LogComplex") -> "LogComplex":
        if other.is_zero:
            raise ZeroDivisionError("division by an exact-zero LogComplex")
        if self.is_zero:
            return LogComplex.zero()
        return LogComplex(self.log_magnitude - other.log_magnitude,
                          _wrap_phase(self.phase - other.phase))

    def to_complex(self) -> complex:
        """The raw complex value; only exposed within double range."""
        if self.is_zero:
            return 0j
        if abs(self.log_magnitude) >= _LOG_EXPOSE_LIMIT:
            raise OverflowError(
                f"log-magnitude {self.log_magnitude:.3g} is outside the exposable range")
        return cmath.rect(math.exp(self.log_magnitude), self.phase)


def random_unimodular(count: int, rng: np.random.Generator,
                      min_separation: float = 0.0) -> np.ndarray:
    """Pairwise-distinct random points on the unit circle.

    Redraws the whole family (deterministically, from the given generator)
    until consecutive sorted angles are at least ``min_separation`` apart,
    which keeps downstream Vandermonde ratios well conditioned.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    for _ in range(1000):
        angles = rng.uniform(0.0, 2.0 * np.pi, size=count)
        if count == 1:
            return np.exp(1j * angles)
        gaps = np.diff(np.sort(angles))
        wrap = 2.0 * np.pi - (np.sort(angles)[-1] - np.sort(angles)[0])
        if min(gaps.min(initial=np.inf), wrap) > max(min_separation, 1e-12):
            return np.exp(1j * angles)
    raise RuntimeError("could not draw a family with the requested separation")


def intertwine(components: Sequence[NodeSequence1D], N: int) -> np.ndarray:
    """First N points of the intertwining sequence, as an (N, s) complex array.

    Component j must provide max_n k_j(n) + 1 points for n <= N; a shorter
    component raises with the required length.
    """
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    s = len(components)
    multis = [index_to_multi(s, n) for n in range(1, N + 1)]
    for j, comp in enumerate(components):
        need = max(k[j] for k in multis) + 1
        if len(comp) < need:
            raise ValueError(
                f"component {j + 1} has {len(comp)} points but needs {need} for N={N}")
    arrays = [comp.as_array() for comp in components]
    points = np.empty((N, s), dtype=complex)
    for row, k in enumerate(multis):
        for j in range(s):
            points[row, j] = arrays[j][k[j]]
    return points


def _monomial_matrix(points: np.ndarray) -> np.ndarray:
    """Matrix [e_i(H_j)] of the first N graded-lex monomials at N points."""
    pts = np.asarray(points, dtype=complex)
    if pts.ndim == 1:
        pts = pts[:, None]
    n, s = pts.shape
    exponents = np.array([index_to_multi(s, i) for i in range(1, n + 1)])
    return np.prod(pts[None, :, :] ** exponents[:, None, :], axis=2)


def vdm_direct(points: np.ndarray) -> LogComplex:
    """Generalized Vandermonde determinant det[e_i(H_j)] of N points of C^s.

    Computed by row-pivoted LU; a matrix singular to working precision
    comes back as the exact-zero value.
    """
    matrix = _monomial_matrix(points)
    sign, logabs = np.linalg.slogdet(matrix)
    if sign == 0 or not np.isfinite(logabs):
        return LogComplex.zero()
    return LogComplex(float(logabs), _wrap_phase(cmath.phase(complex(sign))))


def lagrange_basis_ratio(points: np.ndarray, n: int, z: Sequence[complex]) -> complex:
    """Value at z of the n-th fundamental Lagrange polynomial on the points.

    Determinant ratio: replace point n (1-based) with z in the monomial
    matrix and divide by the unmodified determinant. Works in any dimension;
    for s >= 3 no closed form is available and this is the only evaluation
    path, so keep N moderate for conditioning.
    """
    pts = np.asarray(points, dtype=complex)
    if pts.ndim == 1:
        pts = pts[:, None]
    if not 1 <= n <= pts.shape[0]:
        raise ValueError(f"node index must be in 1..{pts.shape[0]}, got {n}")
    denominator = vdm_direct(pts)
    if denominator.is_zero:
        raise ValueError("point set is not unisolvent (determinant vanishes)")
    replaced = pts.copy()
    replaced[n - 1] = np.asarray(z, dtype=complex)
    numerator = vdm_direct(replaced)
    if numerator.is_zero:
        return 0j
    return (numerator / denominator).to_complex()


@dataclass(frozen=True)
class FactorPolynomial:
    """A product of univariate linear factors prod (z_axis - root) in C^s.

    ``factors`` lists (axis, root) pairs with 0-based axes; the empty list
    is the constant polynomial 1.
    """

    dimension: int
    factors: tuple[tuple[int, complex], ...]

    def __call__(self, point: Sequence[complex]) -> complex:
        out = 1.0 + 0.0j
        for axis, root in self.factors:
            out *= point[axis] - root
        return out

    def log_abs(self, point: Sequence[complex]) -> float:
        total = 0.0
        for axis, root in self.factors:
            value = abs(point[axis] - root)
            if value == 0.0:
                return -math.inf
            total += math.log(value)
        return total

    def log_abs_boundary_max(self, grids: Sequence[np.ndarray]) -> float:
        """log of max |P| over the product of per-axis boundary grids.

        The product structure splits the maximization into one independent
        1-D sweep per axis; axes without factors contribute 1.
        """
        total = 0.0
        for axis in range(self.dimension):
            roots = [root for ax, root in self.factors if ax == axis]
            if not roots:
                continue
            grid = np.asarray(grids[axis])
            prod = np.ones(grid.shape, dtype=float)
            for root in roots:
                prod *= np.abs(grid - root)
            total += math.log(prod.max())
        return total


def factor_polynomial(components: Sequence[NodeSequence1D], N: int) -> FactorPolynomial:
    """The polynomial P_N with vdm(H_1..H_N, z) = P_N(z) * vdm(H_1..H_N).

    With k(N) the N-th multi-index: when k(N) = (d, 0, ..., 0) (a full
    degree block), P_N(z) = prod_{i=0}^{d} (z_s - eta^(s)_i); otherwise,
    with m the position of the last nonzero of k(N),

        P_N(z) = prod_{j<m-1} prod_{i<k_j} (z_j - eta^(j)_i)
                 * prod_{i<=k_{m-1}} (z_{m-1} - eta^(m-1)_i)
                 * prod_{i<=k_m-2} (z_s - eta^(s)_i).
    """
    s = len(components)
    k = index_to_multi(s, N)
    arrays = [comp.as_array() for comp in components]

    def roots(axis: int, stop: int) -> list[tuple[int, complex]]:
        # factors (z_axis - eta^(axis)_i) for i = 0..stop
        if stop < 0:
            return []
        if len(arrays[axis]) <= stop:
            raise ValueError(
                f"component {axis + 1} has {len(arrays[axis])} points but needs "
                f"{stop + 1} for the factor polynomial at N={N}")
        return [(axis, complex(arrays[axis][i])) for i in range(stop + 1)]

    m = 0
    for i in range(s - 1, -1, -1):
        if k[i] != 0:
            m = i + 1
            break
    if m <= 1:
        # full degree block: k(N) = (d, 0, ..., 0)
        d = k[0]
        factors = roots(s - 1, d)
    else:
        factors = []
        for j in range(m - 2):
            factors.extend(roots(j, k[j] - 1))
        factors.extend(roots(m - 2, k[m - 2]))
        factors.extend(roots(s - 1, k[m - 1] - 2))
    return FactorPolynomial(s, tuple(factors))


def vdm_telescoped(components: Sequence[NodeSequence1D], N: int) -> LogComplex:
    """Determinant of the first N intertwined points via the running factorization.

    Telescopes vdm(H_1..H_{n+1}) = P_n(H_{n+1}) * vdm(H_1..H_n) from the
    single-point determinant 1; each factor is accumulated in log form.
    """
    points = intertwine(components, N)
    acc = LogComplex.one()
    for n in range(1, N):
        poly = factor_polynomial(components, n)
        acc = acc * LogComplex.from_complex(poly(points[n]))
    return acc


def _vdm_1d(values: Sequence[complex]) -> LogComplex:
    """Classical 1-D Vandermonde product prod_{i<j} (x_j - x_i)."""
    acc = LogComplex.one()
    for j in range(1, len(values)):
        for i in range(j):
            acc = acc * LogComplex.from_complex(values[j] - values[i])
    return acc


def schiffer_siciak(etas: Sequence[complex], thetas: Sequence[complex], d: int) -> LogComplex:
    """Two-variable Vandermonde of a full degree-d block as 1-D products.

    The Schiffer-Siciak identity: the determinant of the first N_d
    intertwined points equals prod_{j=1}^{d} vdm(eta_0..eta_j) *
    vdm(theta_0..theta_j); for d = 0 the empty product is exactly 1.
    """
    if d < 0:
        raise ValueError(f"degree must be >= 0, got {d}")
    for name, seq in (("etas", etas), ("thetas", thetas)):
        if len(seq) < d + 1:
            raise ValueError(f"{name} needs at least {d + 1} entries, got {len(seq)}")
        pts = np.asarray(seq[: d + 1], dtype=complex)
        dist = np.abs(pts[:, None] - pts[None, :])
        np.fill_diagonal(dist, np.inf)
        if d >= 1 and dist.min() <= 1e-12:
            raise ValueError(f"{name} entries are not pairwise distinct")
    acc = LogComplex.one()
    for j in range(1, d + 1):
        acc = acc * _vdm_1d(etas[: j + 1]) * _vdm_1d(thetas[: j + 1])
    return acc


@dataclass(frozen=True)
class MultidimCheck:
    """Outcome of a multidimensional Leja-section verification.

    ``log_ratios[n-1]`` is log|P_n(H_{n+1})| - log(grid max |P_n|) for
    n = 1..N-1; acceptance needs every ratio >= log(1 - tol) and H_1 on the
    distinguished boundary.
    """

    ok: bool
    first_failing_n: int | None
    start_on_boundary: bool
    log_ratios: tuple[float, ...]


def verify_multidim_leja(
    components: Sequence[NodeSequence1D],
    N: int,
    grid_size: int = 4096,
    tol: float = 1e-6,
) -> MultidimCheck:
    """Check the determinant-maximality of the intertwined section prefix by prefix.

    For each n < N the condition |vdm(H_1..H_n, H_{n+1})| >= (1 - tol) *
    sup over the product boundary of |vdm(H_1..H_n, z)| reduces, through the
    appended-point factorization, to per-axis 1-D grid maximizations of
    |P_n|. Component compacts must expose a genuine boundary grid (unit
    disk or sampled boundary).
    """
    if grid_size < 64:
        raise ValueError(f"grid_size must be >= 64, got {grid_size}")
    for j, comp in enumerate(components):
        if not isinstance(comp.compact, (UnitDisk, SampledBoundary)):
            raise ValueError(
                f"component {j + 1} compact {type(comp.compact).__name__} is not "
                "supported here (unit disk or sampled boundary only)")
    points = intertwine(components, N)
    grids = [comp.compact.boundary_grid(grid_size) for comp in components]
    start_on_boundary = all(
        comp.compact.on_boundary(comp.points[0]) for comp in components)
    log_tol = math.log1p(-tol)
    log_ratios = []
    failing = []
    for n in range(1, N):
        poly = factor_polynomial(components, n)
        at_node = poly.log_abs(points[n])
        grid_max = poly.log_abs_boundary_max(grids)
        log_ratios.append(at_node - grid_max)
        if at_node - grid_max < log_tol:
            failing.append(n)
    if not start_on_boundary:
        first_failing = 0
    elif failing:
        first_failing = failing[0]
    else:
        first_failing = None
    return MultidimCheck(first_failing is None, first_failing,
                         start_on_boundary, tuple(log_ratios))


@dataclass(frozen=True)
class CounterexampleCheck:
    """Verification record for the non-intertwining bidisc 3-section.

    The three points (1,1), (-1,-1), (exp(i pi/4), -exp(i pi/4)) form a
    Leja section of the closed unit bidisc, yet no pair of 1-D sequences
    intertwines to them: positions 1 and 2 would pin the first coordinate
    of both points to the same value.
    """

    is_leja_section: bool
    non_intertwining: bool
    step1_sup: float
    step1_at_node: float
    step2_sup: float
    step2_at_node: float
    closed_form_residual: float


_CTREX_POINTS = (
    (1.0 + 0.0j, 1.0 + 0.0j),
    (-1.0 + 0.0j, -1.0 + 0.0j),
    (cmath.rect(1.0, math.pi / 4), -cmath.rect(1.0, math.pi / 4)),
)


def counterexample_section(
    grid_size: int = 1024, tol: float = 1e-9
) -> tuple[np.ndarray, CounterexampleCheck]:
    """The bidisc Leja 3-section that no intertwining sequence produces.

    Verifies on a torus-product grid that each prefix determinant is
    boundary-maximal: appending to (H_1) multiplies the determinant by
    w - 1, and appending to (H_1, H_2) by 2(w - z); both closed forms are
    cross-checked against the general determinant on random probes.
    """
    points = np.array(_CTREX_POINTS, dtype=complex)
    circle = np.exp(2j * np.pi * np.arange(grid_size) / grid_size)

    # Closed forms of the two appended-point determinants.
    rng = np.random.default_rng(2718)
    residual = 0.0
    for _ in range(20):
        z, w = rng.uniform(-1, 1, 2) + 1j * rng.uniform(-1, 1, 2)
        probe2 = vdm_direct(np.array([points[0], (z, w)])).to_complex()
        residual = max(residual, abs(probe2 - (w - 1.0)))
        probe3 = vdm_direct(np.array([points[0], points[1], (z, w)])).to_complex()
        residual = max(residual, abs(probe3 - 2.0 * (w - z)))

    step1_sup = float(np.abs(circle - 1.0).max())
    step1_at = abs(vdm_direct(points[:2]).to_complex())
    step2_sup = float(2.0 * np.abs(circle[:, None] - circle[None, :]).max())
    step2_at = abs(vdm_direct(points).to_complex())
    on_boundary = abs(abs(points[0, 0]) - 1.0) <= 1e-12 and abs(abs(points[0, 1]) - 1.0) <= 1e-12
    is_leja = (
        on_boundary
        and step1_at >= step1_sup * (1.0 - tol)
        and step2_at >= step2_sup * (1.0 - tol)
    )
    # Intertwining would force H_1 and H_2 to share their first coordinate.
    non_intertwining = points[0, 0] != points[1, 0]
    return points, CounterexampleCheck(
        is_leja_section=bool(is_leja),
        non_intertwining=bool(non_intertwining),
        step1_sup=step1_sup,
        step1_at_node=float(step1_at),
        step2_sup=step2_sup,
        step2_at_node=float(step2_at),
        closed_form_residual=float(residual),
    )
