"""Partitions, skew shapes, and shapes attached to Brill-Noether data.

A skew shape is stored as one column interval per row, translation-normalized
so the leftmost start column is 0.  The ``origin`` field remembers which
normalized column plays the role of column 0 in the two-point ramification
coordinate system (the top-left corner of the central rectangle); plain
``lambda \\ mu`` shapes mark the start of their top row instead, which makes
the top row's left offset zero in that system.

Rows are indexed 0 (top) to k-1 (bottom) internally.  Operations whose
classical statements are 1-based (hook lengths, the row index of
``augment_right``/``augment_left``) say so explicitly and convert.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import ContainmentViolation, DegenerateShape, EmptyRow, RowOutOfRange

PartitionLike = "Partition | Sequence[int]"


@dataclass(frozen=True)
class Partition:
    """A nonincreasing tuple of positive integers; () is the empty partition."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts!r}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be nonincreasing: {parts!r}")

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def part(self, i: int) -> int:
        """0-based part, with the usual convention that missing parts are 0."""
        return self.parts[i] if 0 <= i < len(self.parts) else 0

    def conjugate(self) -> "Partition":
        """Transpose the diagram: column lengths become row lengths."""
        if not self.parts:
            return Partition()
        cols = [0] * self.parts[0]
        for p in self.parts:
            for j in range(p):
                cols[j] += 1
        return Partition(tuple(cols))


def as_partition(value: "Partition | Sequence[int]") -> Partition:
    if isinstance(value, Partition):
        return value
    return Partition(tuple(value))


@dataclass(frozen=True)
class SkewShape:
    """A skew diagram as inclusive column intervals, one per row (top first).

    Invariants: every row is nonempty (start <= end), starts and ends are
    nonincreasing from top to bottom, and min(start) == 0.
    """

    rows: tuple[tuple[int, int], ...]
    origin: int = 0

    def __post_init__(self) -> None:
        rows = tuple((int(s), int(e)) for s, e in self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows:
            raise DegenerateShape("a skew shape needs at least one row")
        for s, e in rows:
            if s > e:
                raise EmptyRow(f"row interval ({s}, {e}) is empty")
        starts = [s for s, _ in rows]
        ends = [e for _, e in rows]
        if any(a < b for a, b in zip(starts, starts[1:])):
            raise DegenerateShape(f"row starts must be nonincreasing: {starts}")
        if any(a < b for a, b in zip(ends, ends[1:])):
            raise DegenerateShape(f"row ends must be nonincreasing: {ends}")
        if min(starts) != 0:
            raise DegenerateShape("shape must be normalized with min start 0")

    @classmethod
    def from_raw_rows(
        cls, rows: Iterable[tuple[int, int]], origin: int = 0
    ) -> "SkewShape":
        """Normalize arbitrary integer intervals by a global column shift."""
        rows = tuple(rows)
        if not rows:
            raise DegenerateShape("a skew shape needs at least one row")
        shift = -min(s for s, _ in rows)
        return cls(tuple((s + shift, e + shift) for s, e in rows), origin + shift)

    @property
    def k(self) -> int:
        """Number of rows."""
        return len(self.rows)

    @property
    def size(self) -> int:
        """Number of boxes."""
        return sum(e - s + 1 for s, e in self.rows)

    @property
    def outer(self) -> Partition:
        """The outer partition (row ends + 1)."""
        return Partition(tuple(e + 1 for _, e in self.rows))

    @property
    def inner(self) -> Partition:
        """The inner partition (row starts, trailing zeros dropped)."""
        starts = [s for s, _ in self.rows]
        while starts and starts[-1] == 0:
            starts.pop()
        return Partition(tuple(starts))

    def row_start(self, i: int) -> int:
        return self.rows[i][0]

    def row_end(self, i: int) -> int:
        return self.rows[i][1]

    def row_length(self, i: int) -> int:
        s, e = self.rows[i]
        return e - s + 1

    def contains(self, row: int, col: int) -> bool:
        if not 0 <= row < self.k:
            return False
        s, e = self.rows[row]
        return s <= col <= e

    def boxes(self) -> Iterator[tuple[int, int]]:
        """All boxes in reading order (top to bottom, left to right)."""
        for i, (s, e) in enumerate(self.rows):
            for j in range(s, e + 1):
                yield (i, j)

    def to_paper(self, col: int) -> int:
        """Normalized column -> ramification-coordinate column."""
        return col - self.origin

    def from_paper(self, x: int) -> int:
        return x + self.origin

    def is_rectangle(self) -> bool:
        return len(set(self.rows)) == 1

    def block_runs(self) -> tuple[tuple[tuple[int, int], int], ...]:
        """Maximal runs of identical row intervals, as (interval, multiplicity)."""
        runs: list[tuple[tuple[int, int], int]] = []
        for row in self.rows:
            if runs and runs[-1][0] == row:
                runs[-1] = (row, runs[-1][1] + 1)
            else:
                runs.append((row, 1))
        return tuple(runs)

    def with_origin(self, origin: int) -> "SkewShape":
        return SkewShape(self.rows, origin)

    def __str__(self) -> str:
        inner = self.inner.parts
        return f"{self.outer.parts}\\{inner}" if inner else f"{self.outer.parts}"


@dataclass(frozen=True)
class BrillNoetherData:
    """Genus, rank, degree and the two ramification tuples.

    ``alpha`` must be nondecreasing and ``beta`` nonincreasing, both with
    r + 1 nonnegative entries; the convention g - d + r >= 0 is enforced.
    """

    g: int
    r: int
    d: int
    alpha: tuple[int, ...]
    beta: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", tuple(int(a) for a in self.alpha))
        object.__setattr__(self, "beta", tuple(int(b) for b in self.beta))
        if self.g < 0 or self.r < 0 or self.d < 0:
            raise ValueError("g, r, d must be nonnegative")
        if self.g - self.d + self.r < 0:
            raise ValueError("g - d + r must be nonnegative")
        for name, tup in (("alpha", self.alpha), ("beta", self.beta)):
            if len(tup) != self.r + 1:
                raise ValueError(f"{name} must have r + 1 = {self.r + 1} entries")
            if any(x < 0 for x in tup):
                raise ValueError(f"{name} entries must be nonnegative")
        if any(a > b for a, b in zip(self.alpha, self.alpha[1:])):
            raise ValueError("alpha must be nondecreasing")
        if any(a < b for a, b in zip(self.beta, self.beta[1:])):
            raise ValueError("beta must be nonincreasing")

    @property
    def rho(self) -> int:
        """Adjusted Brill-Noether number g - (r+1)(g-d+r) - |alpha| - |beta|."""
        w = self.g - self.d + self.r
        return self.g - (self.r + 1) * w - sum(self.alpha) - sum(self.beta)

    @property
    def rectangle_width(self) -> int:
        return self.g - self.d + self.r

    def __str__(self) -> str:
        return (
            f"(g={self.g}, r={self.r}, d={self.d}, "
            f"alpha={self.alpha}, beta={self.beta})"
        )


def skew_shape(
    outer: "Partition | Sequence[int]", inner: "Partition | Sequence[int]" = ()
) -> SkewShape:
    """The shape obtained by removing ``inner`` from ``outer``.

    Rows of length zero are rejected: every row of ``outer`` must keep at
    least one box.  The result is translation-normalized; its origin marks
    the start of the top row.
    """
    lam = as_partition(outer)
    mu = as_partition(inner)
    if len(mu) > len(lam):
        raise ContainmentViolation(f"{mu.parts} is not contained in {lam.parts}")
    rows = []
    for i, lam_i in enumerate(lam.parts):
        mu_i = mu.part(i)
        if mu_i > lam_i:
            raise ContainmentViolation(f"{mu.parts} is not contained in {lam.parts}")
        if mu_i == lam_i:
            raise EmptyRow(f"row {i + 1} of {lam.parts}\\{mu.parts} has no boxes")
        rows.append((mu_i, lam_i - 1))
    if not rows:
        raise DegenerateShape("the empty shape is not supported")
    shape = SkewShape.from_raw_rows(rows)
    return shape.with_origin(shape.row_start(0))


def shape_from_bn_data(data: BrillNoetherData) -> SkewShape:
    """The skew shape for (g, r, d, alpha, beta).

    Row i (0-based) spans columns -alpha_i .. (g-d+r-1) + beta_i of the
    coordinate system whose column 0 is the left edge of the central
    (r+1) x (g-d+r) rectangle; the stored origin remembers that column.
    """
    w = data.rectangle_width
    rows = []
    for i in range(data.r + 1):
        start = -data.alpha[i]
        end = w - 1 + data.beta[i]
        if start > end:
            raise EmptyRow(
                f"row {i} of the shape for {data} is empty; "
                "need g-d+r >= 1 or alpha_i + beta_i >= 1"
            )
        rows.append((start, end))
    try:
        return SkewShape.from_raw_rows(rows, origin=0)
    except DegenerateShape as exc:  # unreachable for validated data
        raise DegenerateShape(f"incompatible alpha/beta for {data}: {exc}") from exc


def hook_lengths(partition: "Partition | Sequence[int]") -> dict[tuple[int, int], int]:
    """Hook lengths of a straight shape, keyed by 1-based (row, column).

    h(i, j) is one more than the number of boxes below plus the number of
    boxes to the right of box (i, j).
    """
    lam = as_partition(partition)
    if not lam.parts:
        raise ValueError("hook lengths need a nonempty partition")
    conj = lam.conjugate()
    return {
        (i, j): lam.part(i - 1) + conj.part(j - 1) - i - j + 1
        for i in range(1, len(lam) + 1)
        for j in range(1, lam.part(i - 1) + 1)
    }


def augment_right(sigma: SkewShape, i: int) -> SkewShape | None:
    """Add a box on the right of row i (1-based), or None if not a skew shape.

    The top row is always extendable; any other row only when it ends
    strictly left of the row above it.
    """
    if not 1 <= i <= sigma.k:
        raise RowOutOfRange(f"row {i} outside 1..{sigma.k}")
    idx = i - 1
    if idx > 0 and sigma.row_end(idx) >= sigma.row_end(idx - 1):
        return None
    rows = list(sigma.rows)
    s, e = rows[idx]
    rows[idx] = (s, e + 1)
    return SkewShape(tuple(rows), sigma.origin)


def augment_left(sigma: SkewShape, i: int) -> SkewShape | None:
    """Add a box on the left of row i (1-based), or None if not a skew shape.

    The bottom row is always extendable (the result is re-normalized); any
    other row only when it starts strictly right of the row below it.
    """
    if not 1 <= i <= sigma.k:
        raise RowOutOfRange(f"row {i} outside 1..{sigma.k}")
    idx = i - 1
    if idx < sigma.k - 1 and sigma.row_start(idx) <= sigma.row_start(idx + 1):
        return None
    rows = list(sigma.rows)
    s, e = rows[idx]
    rows[idx] = (s - 1, e)
    return SkewShape.from_raw_rows(rows, sigma.origin)


def is_connected(sigma: SkewShape) -> bool:
    """Whether consecutive rows touch in at least one column boundary.

    A shared corner point counts: row i may begin at most one column to the
    right of where row i+1 ends.
    """
    return all(
        sigma.row_start(i) <= sigma.row_end(i + 1) + 1 for i in range(sigma.k - 1)
    )
