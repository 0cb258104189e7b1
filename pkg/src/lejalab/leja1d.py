"""One-dimensional Leja sequences on the disk and on sampled compact boundaries.

The unit-disk sequence starting at 1 is explicit: point k sits at the angle
pi * (bit reversal of k across the binary point), so every angle is an exact
dyadic multiple of pi. All set logic (distinctness, rotation) runs on those
exact angles; complex realizations are taken in double precision only at the
evaluation boundary. Greedy extension and section verification work on any
compact described by a boundary sampling.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Sequence, Union

import numpy as np


@dataclass(frozen=True)
class DyadicAngle:
    """Exact angle pi * numerator / 2**level, reduced modulo 2*pi.

    Canonical form keeps 0 <= numerator < 2**(level+1) with numerator odd,
    except the zero angle which is stored as (0, 0). Equality and hashing on
    the canonical pair are therefore exact angle equality.
    """

    numerator: int
    level: int = 0

    def __post_init__(self) -> None:
        if self.level < 0:
            raise ValueError(f"level must be >= 0, got {self.level}")
        p, lev = self.numerator % (1 << (self.level + 1)), self.level
        while lev > 0 and p % 2 == 0:
            p //= 2
            lev -= 1
        if p == 0:
            lev = 0
        object.__setattr__(self, "numerator", p)
        object.__setattr__(self, "level", lev)

    @property
    def radians(self) -> float:
        return math.pi * self.numerator / (1 << self.level)

    def __add__(self, other: "DyadicAngle") -> "DyadicAngle":
        lev = max(self.level, other.level)
        p = (self.numerator << (lev - self.level)) + (other.numerator << (lev - other.level))
        return DyadicAngle(p, lev)

    def __complex__(self) -> complex:
        # Cardinal directions are exact; rounding them would leak tiny
        # imaginary dust into otherwise-real node coordinates.
        if self.level == 0:
            return complex(1.0, 0.0) if self.numerator == 0 else complex(-1.0, 0.0)
        if self.level == 1:
            return complex(0.0, 1.0) if self.numerator == 1 else complex(0.0, -1.0)
        return cmath.rect(1.0, self.radians)


@dataclass(frozen=True)
class UnitDisk:
    """The closed unit disk; boundary parametrized by angle."""

    def boundary_grid(self, n: int) -> np.ndarray:
        return np.exp(2j * np.pi * np.arange(n) / n)

    def on_boundary(self, z: complex, tol: float = 1e-9) -> bool:
        return abs(abs(z) - 1.0) <= tol

    def contains(self, z: complex, tol: float = 1e-9) -> bool:
        return abs(z) <= 1.0 + tol


@dataclass(frozen=True)
class Ellipse:
    """Image of the unit circle under u -> (R*u + 1/(R*u)) / 2 with R > 1.

    Semi-axes are (R + 1/R)/2 and (R - 1/R)/2; R = 1 would collapse the
    boundary to a segment and is rejected.
    """

    radius: float

    def __post_init__(self) -> None:
        if not self.radius > 1.0:
            raise ValueError(f"ellipse parameter must be > 1, got {self.radius}")

    def map_point(self, u):
        ru = self.radius * u
        return (ru + 1.0 / ru) / 2.0

    def boundary_grid(self, n: int) -> np.ndarray:
        return self.map_point(np.exp(2j * np.pi * np.arange(n) / n))

    def _implicit(self, z: complex) -> float:
        a = (self.radius + 1.0 / self.radius) / 2.0
        b = (self.radius - 1.0 / self.radius) / 2.0
        return (z.real / a) ** 2 + (z.imag / b) ** 2

    def on_boundary(self, z: complex, tol: float = 1e-9) -> bool:
        return abs(self._implicit(z) - 1.0) <= tol

    def contains(self, z: complex, tol: float = 1e-9) -> bool:
        return self._implicit(z) <= 1.0 + tol


@dataclass(frozen=True)
class SampledBoundary:
    """A compact known only through a finite sampling of its boundary."""

    samples: tuple[complex, ...]

    def __post_init__(self) -> None:
        if len(self.samples) < 2:
            raise ValueError("sampled boundary needs at least 2 samples")
        pts = np.asarray(self.samples)
        dist = np.abs(pts[:, None] - pts[None, :])
        np.fill_diagonal(dist, np.inf)
        if dist.min() <= 1e-12:
            raise ValueError("boundary samples are not pairwise distinct")

    def boundary_grid(self, n: int) -> np.ndarray:
        # The sampling is the grid; the requested resolution does not apply.
        return np.asarray(self.samples)

    def on_boundary(self, z: complex, tol: float = 1e-9) -> bool:
        return bool(np.min(np.abs(np.asarray(self.samples) - z)) <= tol)

    def contains(self, z: complex, tol: float = 1e-9) -> bool:
        # Interior membership is undecidable from a boundary sampling alone;
        # accept and let boundary-based checks do the rejecting.
        return True


CompactDescriptor = Union[UnitDisk, Ellipse, SampledBoundary]


@dataclass(frozen=True)
class NodeSequence1D:
    """Ordered pairwise-distinct nodes on (or inside) a compact set.

    When ``angles`` is given it carries the exact boundary parameters of the
    points (dyadic angles of the pre-image circle), and distinctness is
    checked exactly on the angles; otherwise points must be separated by
    more than 1e-12.
    """

    points: tuple[complex, ...]
    compact: CompactDescriptor = field(default_factory=UnitDisk)
    angles: tuple[DyadicAngle, ...] | None = None

    def __post_init__(self) -> None:
        if len(self.points) < 1:
            raise ValueError("node sequence must contain at least one point")
        object.__setattr__(self, "points", tuple(complex(p) for p in self.points))
        if self.angles is not None:
            if len(self.angles) != len(self.points):
                raise ValueError("angles and points lengths differ")
            if len(set(self.angles)) != len(self.angles):
                raise ValueError("nodes are not pairwise distinct (exact angles collide)")
        else:
            pts = np.asarray(self.points)
            dist = np.abs(pts[:, None] - pts[None, :])
            np.fill_diagonal(dist, np.inf)
            if dist.min() <= 1e-12:
                raise ValueError("nodes are not pairwise distinct (within 1e-12)")
        for p in self.points:
            if not self.compact.contains(p, tol=1e-9):
                raise ValueError(f"node {p} lies outside the compact {self.compact}")

    def __len__(self) -> int:
        return len(self.points)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.points, dtype=complex)

    def extended(self, point: complex, angle: DyadicAngle | None = None) -> "NodeSequence1D":
        angles = None
        if self.angles is not None and angle is not None:
            angles = self.angles + (angle,)
        return NodeSequence1D(self.points + (complex(point),), self.compact, angles)

    def prefix(self, n: int) -> "NodeSequence1D":
        angles = self.angles[:n] if self.angles is not None else None
        return NodeSequence1D(self.points[:n], self.compact, angles)


def disk_leja_point(k: int) -> DyadicAngle:
    """Exact angle of the k-th point of the unit-disk Leja sequence started at 1.

    Writing k = sum_l j_l 2^l in binary, the angle is pi * sum_l j_l 2^(-l):
    the bits of k reflected across the binary point. Point 0 is 1 itself.
    """
    if k < 0:
        raise ValueError(f"point index must be >= 0, got {k}")
    if k == 0:
        return DyadicAngle(0, 0)
    top = k.bit_length() - 1
    p = 0
    for l in range(top + 1):
        if (k >> l) & 1:
            p += 1 << (top - l)
    return DyadicAngle(p, top)


def disk_leja_section(N: int, rotation: DyadicAngle | None = None) -> NodeSequence1D:
    """First N points of the explicit disk Leja sequence, optionally rotated.

    The rotation multiplies every point by exp(i * rotation); angles stay
    exact dyadic multiples of pi.
    """
    if N < 1:
        raise ValueError(f"section length must be >= 1, got {N}")
    angles = [disk_leja_point(k) for k in range(N)]
    if rotation is not None:
        angles = [a + rotation for a in angles]
    points = tuple(complex(a) for a in angles)
    return NodeSequence1D(points, UnitDisk(), tuple(angles))


def greedy_extend(nodes: NodeSequence1D, candidates: Sequence[complex]) -> complex:
    """Candidate maximizing the product of distances to the existing nodes.

    Ties break to the lowest candidate index. Raises if every candidate
    coincides with an existing node (all products vanish).
    """
    cand = np.asarray(candidates, dtype=complex)
    if cand.size == 0:
        raise ValueError("no candidates given")
    products = np.abs(cand[:, None] - nodes.as_array()[None, :]).prod(axis=1)
    best = int(np.argmax(products))
    if products[best] == 0.0:
        raise ValueError("every candidate coincides with an existing node")
    return complex(cand[best])


@dataclass(frozen=True)
class SectionCheck:
    """Outcome of a Leja-section verification.

    ``ratios[k-1]`` is (product at node k) / (grid max of the product) for
    k = 1..N-1; the section is accepted when every ratio is >= 1 - tol and
    the starting node lies on the boundary.
    """

    ok: bool
    first_failing_k: int | None
    start_on_boundary: bool
    ratios: tuple[float, ...]


def verify_leja_section(
    nodes: NodeSequence1D, grid_size: int = 2**14, tol: float = 1e-6
) -> SectionCheck:
    """Check the greedy maximality of every prefix of a node sequence.

    For each k >= 1 the product prod_{i<k} |z - eta_i| is maximized over the
    compact's boundary grid and compared with its value at eta_k; the grid
    maximum underestimates the true sup, so tol absorbs both grid and
    rounding error. Also checks that eta_0 lies on the boundary.
    """
    if grid_size < 64:
        raise ValueError(f"grid_size must be >= 64, got {grid_size}")
    if not tol > 0:
        raise ValueError(f"tol must be > 0, got {tol}")
    pts = nodes.as_array()
    n = len(pts)
    start_on_boundary = nodes.compact.on_boundary(pts[0])
    if n == 1:
        first_failing = None if start_on_boundary else 0
        return SectionCheck(start_on_boundary, first_failing, start_on_boundary, ())
    grid = nodes.compact.boundary_grid(grid_size)
    # prefix[:, k-1] = prod_{i<k} |z - eta_i| on the grid
    prefix = np.cumprod(np.abs(grid[:, None] - pts[None, :-1]), axis=1)
    grid_max = prefix.max(axis=0)
    ratios = []
    failing = []
    for k in range(1, n):
        at_node = float(np.prod(np.abs(pts[k] - pts[:k])))
        ratios.append(at_node / grid_max[k - 1])
        if at_node < grid_max[k - 1] * (1.0 - tol):
            failing.append(k)
    if not start_on_boundary:
        first_failing = 0  # the starting node itself is off the boundary
    elif failing:
        first_failing = failing[0]
    else:
        first_failing = None
    ok = first_failing is None
    return SectionCheck(ok, first_failing, start_on_boundary, tuple(ratios))
