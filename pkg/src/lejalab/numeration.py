"""Graded-lexicographic enumeration of multi-indices in N^s.

Multi-indices are plain tuples of non-negative integer exponents. The
enumeration is 1-based: index 1 is (0, ..., 0). Indices are ordered first
by total degree, then lexicographically ascending within a degree block,
so the block of degree d runs from (0, ..., 0, d) up to (d, 0, ..., 0).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

MultiIndex = tuple[int, ...]

# block_size results are used as array indices downstream; anything past
# 64 bits is reported instead of silently growing.
_INT64_MAX = 2**63 - 1


@dataclass(frozen=True)
class DegreeBlock:
    """The contiguous index range occupied by one total degree."""

    s: int
    d: int
    start_index: int
    end_index: int

    @property
    def size(self) -> int:
        return self.end_index - self.start_index + 1


def _check_dimension(s: int) -> None:
    if s < 1:
        raise ValueError(f"dimension must be >= 1, got {s}")


def _check_multi(k: Sequence[int]) -> None:
    _check_dimension(len(k))
    if any(c < 0 for c in k):
        raise ValueError(f"multi-index has a negative component: {tuple(k)}")


def block_size(s: int, d: int) -> int:
    """Count of multi-indices k in N^s with total degree |k| <= d.

    Equals binom(s + d, s); monotone increasing in d.
    """
    _check_dimension(s)
    if d < 0:
        raise ValueError(f"degree must be >= 0, got {d}")
    n = comb(s + d, s)
    if n > _INT64_MAX:
        raise OverflowError(f"block_size({s}, {d}) = {n} exceeds 64-bit range")
    return n


def _degree_count(s: int, d: int) -> int:
    """Count of multi-indices in N^s with total degree exactly d."""
    return comb(d + s - 1, s - 1)


def degree_block(s: int, d: int) -> DegreeBlock:
    """Index range [start, end] of the degree-d block; end = block_size(s, d)."""
    end = block_size(s, d)
    start = block_size(s, d - 1) + 1 if d > 0 else 1
    return DegreeBlock(s=s, d=d, start_index=start, end_index=end)


def graded_lex_key(k: Sequence[int]):
    """Sort key realizing the graded-lexicographic order."""
    return (sum(k), tuple(k))


def compare(k: Sequence[int], l: Sequence[int]) -> int:
    """Three-way graded-lex comparison: -1 if k < l, 0 if equal, +1 if k > l."""
    _check_multi(k)
    _check_multi(l)
    if len(k) != len(l):
        raise ValueError(f"dimension mismatch: {len(k)} vs {len(l)}")
    a, b = graded_lex_key(k), graded_lex_key(l)
    return -1 if a < b else (0 if a == b else 1)


def index_to_multi(s: int, n: int) -> MultiIndex:
    """The n-th multi-index of N^s in graded-lex order (1-based)."""
    _check_dimension(s)
    if n < 1:
        raise ValueError(f"index must be >= 1, got {n}")
    d = 0
    below = 0  # block_size(s, d - 1)
    while True:
        size = block_size(s, d)
        if n <= size:
            break
        below = size
        d += 1
    rank = n - below - 1  # 0-based position within the degree-d block
    components = []
    rem_degree, rem_dims = d, s
    while rem_dims > 1:
        c = 0
        while True:
            count = _degree_count(rem_dims - 1, rem_degree - c)
            if rank < count:
                break
            rank -= count
            c += 1
        components.append(c)
        rem_degree -= c
        rem_dims -= 1
    components.append(rem_degree)
    return tuple(components)


def multi_to_index(k: Sequence[int]) -> int:
    """Position of k in the graded-lex enumeration (1-based); inverse of index_to_multi."""
    _check_multi(k)
    s = len(k)
    d = sum(k)
    base = block_size(s, d - 1) if d > 0 else 0
    rank = 0
    rem_degree = d
    for j in range(s - 1):
        for c in range(k[j]):
            rank += _degree_count(s - j - 1, rem_degree - c)
        rem_degree -= k[j]
    return base + rank + 1


def successor(k: Sequence[int]) -> MultiIndex:
    """The multi-index immediately after k in graded-lex order.

    Closed form: (d, 0, ..., 0) steps to (0, ..., 0, d+1); otherwise, with m
    the position (1-based) of the last nonzero component, the step is
    (k_1, ..., k_{m-2}, k_{m-1}+1, 0, ..., 0, k_m - 1).
    """
    _check_multi(k)
    s = len(k)
    m = 0
    for i in range(s - 1, -1, -1):
        if k[i] != 0:
            m = i + 1
            break
    if m <= 1:
        # (d, 0, ..., 0), including the all-zero index and every s = 1 index.
        return (0,) * (s - 1) + (k[0] + 1,)
    out = list(k)
    last = out[m - 1]
    out[m - 1] = 0
    out[m - 2] += 1
    out[-1] += last - 1
    return tuple(out)
