"""Explicit bidimensional fundamental Lagrange interpolation polynomials.

For N nodes taken from two pairwise-distinct sequences (eta_p, theta_q) by
the graded-lex numeration, the interpolation space is spanned by all
monomials of total degree < d plus w^d, z w^(d-1), ..., z^m w^(d-m), where
N splits uniquely as d and m = N - N_{d-1} - 1. Each basis polynomial
(value 1 at its node, 0 at the others) has a closed form that depends only
on which of seven index regions (p, q) falls in; every closed form is a
short signed sum of separable products of the univariate ratios
(z - eta_i)/(eta_p - eta_i) and (w - theta_j)/(theta_q - theta_j).

The determinant-ratio definition (replace node n by (z, w) in the
generalized Vandermonde matrix and divide by the unmodified determinant)
is kept alongside as an independent reference path.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property, lru_cache
from typing import Sequence

import numpy as np

from lejalab.leja1d import disk_leja_section
from lejalab.numeration import block_size, index_to_multi, multi_to_index
from lejalab.vdm import LogComplex, vdm_direct


@dataclass(frozen=True)
class IndexDecomposition:
    """The unique (d, m) with N_{d-1} < N <= N_d and m = N - N_{d-1} - 1."""

    N: int
    d: int
    m: int


def decompose(N: int) -> IndexDecomposition:
    """Split a node count into its degree d and diagonal offset m."""
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    d = 0
    below = 0  # N_{d-1} with N_{-1} = 0
    while True:
        size = block_size(2, d)
        if N <= size:
            break
        below = size
        d += 1
    return IndexDecomposition(N=N, d=d, m=N - below - 1)


class FlipCase(Enum):
    """The seven index regions of the closed-form basis polynomials.

    The top diagonal p+q = d and the sub-diagonal part with p >= m+1 share
    one formula and one tag.
    """

    TOP_DIAG = "top-diag"
    SUB_DIAG_AT_M = "sub-diag-at-m"
    SUB_DIAG_LOW = "sub-diag-low"
    INTERIOR_LOW_P_LOW_Q = "interior-low-p-low-q"
    INTERIOR_LOW_P_HIGH_Q = "interior-low-p-high-q"
    INTERIOR_AT_M = "interior-at-m"
    INTERIOR_HIGH_P = "interior-high-p"


def _check_membership(p: int, q: int, d: int, m: int) -> None:
    if p < 0 or q < 0:
        raise ValueError(f"node indices must be >= 0, got ({p}, {q})")
    if not 0 <= m <= d:
        raise ValueError(f"need 0 <= m <= d, got m={m}, d={d}")
    if p + q > d or (p + q == d and p > m):
        raise ValueError(f"node ({p}, {q}) is outside the section for d={d}, m={m}")


def classify(p: int, q: int, d: int, m: int) -> FlipCase:
    """The unique formula case applying to node (eta_p, theta_q)."""
    _check_membership(p, q, d, m)
    if p + q == d or (p + q == d - 1 and p >= m + 1):
        return FlipCase.TOP_DIAG
    if p + q == d - 1:
        return FlipCase.SUB_DIAG_AT_M if p == m else FlipCase.SUB_DIAG_LOW
    if p <= m - 1:
        if q <= d - m - 1:
            return FlipCase.INTERIOR_LOW_P_LOW_Q
        return FlipCase.INTERIOR_LOW_P_HIGH_Q
    return FlipCase.INTERIOR_AT_M if p == m else FlipCase.INTERIOR_HIGH_P


@lru_cache(maxsize=None)
def flip_terms(p: int, q: int, d: int, m: int) -> tuple[tuple[int, int, int], ...]:
    """Separable expansion of the closed form at node (p, q).

    Each term (sign, t_z, t_w) stands for

        sign * prod_{i=0..t_z, i != p} (z - eta_i)/(eta_p - eta_i)
             * prod_{j=0..t_w, j != q} (w - theta_j)/(theta_q - theta_j),

    with t = -1 meaning the empty product. Terms are listed in the written
    order of the formulas; sums whose range is empty contribute nothing.
    """
    case = classify(p, q, d, m)
    if case is FlipCase.TOP_DIAG:
        return ((1, p - 1, q - 1),)
    if case is FlipCase.SUB_DIAG_AT_M:
        # p = m, q = d - m - 1
        return ((1, p - 1, d - m),)
    if case is FlipCase.SUB_DIAG_LOW:
        return ((1, p + 1, q - 1), (-1, p - 1, q - 1), (1, p - 1, q + 1))
    terms: list[tuple[int, int, int]] = []
    if case is FlipCase.INTERIOR_LOW_P_LOW_Q:
        terms = [(1, p - 1, d - p), (-1, p - 1, d - p - 1), (1, p + 1, d - p - 1)]
        for r in range(1, m - p):
            terms += [(1, p + r + 1, d - p - r - 1), (-1, p + r, d - p - r - 1)]
        for r in range(m - p, d - p - q - 1):
            terms += [(1, p + r + 1, d - p - r - 2), (-1, p + r, d - p - r - 2)]
    elif case is FlipCase.INTERIOR_LOW_P_HIGH_Q:
        terms = [(1, p - 1, d - p), (-1, p - 1, d - p - 1), (1, p + 1, d - p - 1)]
        for r in range(1, d - p - q):
            terms += [(1, p + r + 1, d - p - r - 1), (-1, p + r, d - p - r - 1)]
    elif case is FlipCase.INTERIOR_AT_M:
        # p = m
        terms = [(1, p - 1, d - p), (-1, p - 1, d - p - 2), (1, p + 1, d - p - 2)]
        for r in range(1, d - p - q - 1):
            terms += [(1, p + r + 1, d - p - r - 2), (-1, p + r, d - p - r - 2)]
    else:  # INTERIOR_HIGH_P
        terms = [(1, p - 1, d - p - 1), (-1, p - 1, d - p - 2), (1, p + 1, d - p - 2)]
        for r in range(1, d - p - q - 1):
            terms += [(1, p + r + 1, d - p - r - 2), (-1, p + r, d - p - r - 2)]
    return tuple(terms)


@dataclass(frozen=True)
class FlipContext:
    """Immutable evaluation context: the two node lists and the section size.

    Node lists must hold at least d+1 pairwise-distinct entries each; after
    construction every evaluation is read-only and thread-safe.
    """

    etas: tuple[complex, ...]
    thetas: tuple[complex, ...]
    N: int

    def __post_init__(self) -> None:
        dec = decompose(self.N)
        object.__setattr__(self, "etas", tuple(complex(v) for v in self.etas))
        object.__setattr__(self, "thetas", tuple(complex(v) for v in self.thetas))
        for name, seq in (("etas", self.etas), ("thetas", self.thetas)):
            if len(seq) < dec.d + 1:
                raise ValueError(
                    f"{name} has {len(seq)} nodes but N={self.N} (d={dec.d}) needs {dec.d + 1}")
            pts = np.asarray(seq)
            dist = np.abs(pts[:, None] - pts[None, :])
            np.fill_diagonal(dist, np.inf)
            if len(seq) > 1 and dist.min() <= 1e-12:
                raise ValueError(f"{name} nodes are not pairwise distinct")

    @classmethod
    def from_disk_leja(cls, N: int) -> "FlipContext":
        d = decompose(N).d
        section = disk_leja_section(d + 1)
        return cls(section.points, section.points, N)

    @cached_property
    def decomposition(self) -> IndexDecomposition:
        return decompose(self.N)

    @property
    def d(self) -> int:
        return self.decomposition.d

    @property
    def m(self) -> int:
        return self.decomposition.m

    @cached_property
    def node_indices(self) -> tuple[tuple[int, int], ...]:
        """(p, q) for nodes n = 1..N in enumeration order."""
        return tuple(index_to_multi(2, n) for n in range(1, self.N + 1))

    @cached_property
    def node_points(self) -> np.ndarray:
        """The section Omega_N as an (N, 2) complex array."""
        return np.array([(self.etas[p], self.thetas[q]) for p, q in self.node_indices])

    @cached_property
    def _log_vdm(self) -> LogComplex:
        value = vdm_direct(self.node_points)
        if value.is_zero:
            raise ValueError("section determinant vanished; nodes are not unisolvent")
        return value


def _skip_prefix(nodes: Sequence[complex], own: int, t: int, x):
    """prod_{i=0..t, i != own} (x - nodes[i]) / (nodes[own] - nodes[i]).

    Factors multiply left to right in index order; t = -1 gives 1. Works
    elementwise for array x.
    """
    out = 1.0 + 0.0j
    for i in range(t + 1):
        if i == own:
            continue
        out = out * ((x - nodes[i]) / (nodes[own] - nodes[i]))
    return out


def flip_eval(ctx: FlipContext, p: int, q: int, z, w):
    """Closed-form basis polynomial for node (eta_p, theta_q) at (z, w).

    Takes value 1 at its own node and 0 at every other node of the section;
    accepts scalars or broadcastable arrays for z and w.
    """
    dec = ctx.decomposition
    terms = flip_terms(p, q, dec.d, dec.m)
    total = 0.0 + 0.0j
    for sign, t_z, t_w in terms:
        total = total + sign * (
            _skip_prefix(ctx.etas, p, t_z, z) * _skip_prefix(ctx.thetas, q, t_w, w))
    shape = np.broadcast_shapes(np.shape(z), np.shape(w))
    if shape and np.shape(total) != shape:
        # constant closed forms (all products empty) must still follow the inputs
        total = total * np.ones(shape, dtype=complex)
    return total


def flip_values(ctx: FlipContext, z, w) -> np.ndarray:
    """All N basis polynomials at (z, w), ordered as the section."""
    return np.array([flip_eval(ctx, p, q, z, w) for p, q in ctx.node_indices])


def flip_eval_oracle(ctx: FlipContext, p: int, q: int, z: complex, w: complex) -> complex:
    """Reference value by generalized Vandermonde determinant ratio.

    Replaces node (eta_p, theta_q) by (z, w) in the monomial matrix and
    divides by the section determinant. Independent of the closed forms;
    intended for moderate N where the determinants stay well conditioned.
    """
    _check_membership(p, q, ctx.d, ctx.m)
    n = multi_to_index((p, q))
    points = ctx.node_points.copy()
    points[n - 1] = (z, w)
    numerator = vdm_direct(points)
    if numerator.is_zero:
        return 0j
    return (numerator / ctx._log_vdm).to_complex()


def lagrange_interpolate(ctx: FlipContext, samples: Sequence[complex], z, w):
    """Interpolation polynomial sum_n f(H_n) * l_n at (z, w).

    ``samples`` holds the N function values in section order; any member of
    the interpolation space is reproduced exactly.
    """
    if len(samples) != ctx.N:
        raise ValueError(f"expected {ctx.N} samples, got {len(samples)}")
    total = 0.0 + 0.0j
    for value, (p, q) in zip(samples, ctx.node_indices):
        total = total + value * flip_eval(ctx, p, q, z, w)
    return total


def oracle_agreement(
    ctx: FlipContext,
    zs: Sequence[complex],
    ws: Sequence[complex],
    small: float = 1e-3,
) -> tuple[float, float]:
    """Worst disagreement between the closed forms and the determinant ratio.

    Returns (max relative error where |oracle| >= small, max absolute error
    where |oracle| < small) over every node and every probe point.
    """
    max_rel = 0.0
    max_abs_small = 0.0
    for p, q in ctx.node_indices:
        for z, w in zip(zs, ws):
            reference = flip_eval_oracle(ctx, p, q, z, w)
            value = flip_eval(ctx, p, q, z, w)
            err = abs(value - reference)
            if abs(reference) >= small:
                max_rel = max(max_rel, err / abs(reference))
            else:
                max_abs_small = max(max_abs_small, err)
    return max_rel, max_abs_small
