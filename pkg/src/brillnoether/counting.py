"""Exact counts of standard fillings.

Three independent routes are provided: the hook-length product for straight
shapes, the determinantal formula for skew shapes (exact rationals, cast to
int with an integrality check), and an exhaustive profile-DP count that
backtracks over linear extensions of the box poset.  Counts are memoized per
normalized shape; the caches are the thread-safe functools ones, and every
function here is pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .errors import InternalNonIntegral, TooLarge
from .shapes import (
    Partition,
    SkewShape,
    as_partition,
    augment_left,
    augment_right,
    hook_lengths,
)

DEFAULT_ENUMERATION_CAP = 12


def resolve_cap(cap: int | None) -> int:
    return DEFAULT_ENUMERATION_CAP if cap is None else int(cap)


def require_within_cap(n: int, cap: int | None, what: str) -> None:
    limit = resolve_cap(cap)
    if n > limit:
        raise TooLarge(f"{what} has size {n}, above the enumeration cap {limit}")


@dataclass(frozen=True)
class CountVector:
    """f for a shape together with the counts after adding one boundary box.

    ``f_right[i-1]`` counts fillings of the shape with a box appended to the
    right of row i, ``f_left[i-1]`` with a box prepended on the left; both are
    0 where the augmented diagram is not a skew shape.
    """

    f_sigma: int
    f_right: tuple[int, ...]
    f_left: tuple[int, ...]


def count_syt_hook(partition: "Partition | list[int] | tuple[int, ...]") -> int:
    """Number of standard fillings of a straight shape, n! over hook products."""
    lam = as_partition(partition)
    if not lam.parts:
        return 1
    product = 1
    for h in hook_lengths(lam).values():
        product *= h
    n_fact = factorial(lam.size)
    if n_fact % product:
        raise InternalNonIntegral(
            f"hook product {product} does not divide {lam.size}!"
        )
    return n_fact // product


def _det_fraction(matrix: list[list[Fraction]]) -> Fraction:
    """Determinant by fraction-exact Gaussian elimination with row pivoting."""
    m = [row[:] for row in matrix]
    size = len(m)
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, size):
            if m[r][col] == 0:
                continue
            factor = m[r][col] * inv
            for c in range(col, size):
                m[r][c] -= factor * m[col][c]
    return det


@lru_cache(maxsize=None)
def _aitken_count(rows: tuple[tuple[int, int], ...]) -> int:
    k = len(rows)
    lam = [e + 1 for _, e in rows]
    mu = [s for s, _ in rows]
    n = sum(e - s + 1 for s, e in rows)
    matrix = []
    for i in range(1, k + 1):
        row = []
        for j in range(1, k + 1):
            arg = lam[i - 1] - i - mu[j - 1] + j
            row.append(Fraction(1, factorial(arg)) if arg >= 0 else Fraction(0))
        matrix.append(row)
    value = factorial(n) * _det_fraction(matrix)
    if value.denominator != 1:
        raise InternalNonIntegral(f"count for rows {rows} came out as {value}")
    return int(value)


def count_skew_aitken(sigma: SkewShape) -> int:
    """Number of standard fillings of a skew shape, via the k x k determinant
    of reciprocal factorials (entries with negative argument read as 0)."""
    return _aitken_count(sigma.rows)


@lru_cache(maxsize=None)
def _count_fillings(rows: tuple[tuple[int, int], ...]) -> int:
    """Count linear extensions by backtracking over row-fill profiles."""
    k = len(rows)
    lengths = [e - s + 1 for s, e in rows]
    full = tuple(lengths)

    @lru_cache(maxsize=None)
    def rec(profile: tuple[int, ...]) -> int:
        if profile == full:
            return 1
        total = 0
        for i in range(k):
            if profile[i] == lengths[i]:
                continue
            col = rows[i][0] + profile[i]
            if i > 0 and rows[i - 1][0] <= col <= rows[i - 1][1]:
                # the box above exists, so it must already be filled
                if rows[i - 1][0] + profile[i - 1] <= col:
                    continue
            nxt = list(profile)
            nxt[i] += 1
            total += rec(tuple(nxt))
        return total

    try:
        return rec((0,) * k)
    finally:
        rec.cache_clear()


def count_brute(sigma: SkewShape, cap: int | None = None) -> int:
    """Exhaustive count of standard fillings; raises TooLarge above the cap."""
    require_within_cap(sigma.size, cap, "shape")
    return _count_fillings(sigma.rows)


@lru_cache(maxsize=None)
def _boundary_counts(rows: tuple[tuple[int, int], ...], origin: int) -> CountVector:
    sigma = SkewShape(rows, origin)
    f_right = []
    f_left = []
    for i in range(1, sigma.k + 1):
        right = augment_right(sigma, i)
        f_right.append(0 if right is None else count_skew_aitken(right))
        left = augment_left(sigma, i)
        f_left.append(0 if left is None else count_skew_aitken(left))
    return CountVector(count_skew_aitken(sigma), tuple(f_right), tuple(f_left))


def boundary_counts(sigma: SkewShape) -> CountVector:
    """f for the shape and for each one-box boundary augmentation."""
    return _boundary_counts(sigma.rows, sigma.origin)


def check_strange_identity(sigma: SkewShape) -> bool:
    """Whether the left-augmented counts sum to the right-augmented counts."""
    counts = boundary_counts(sigma)
    return sum(counts.f_left) == sum(counts.f_right)
