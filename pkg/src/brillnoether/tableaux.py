"""Standard and almost-standard fillings, compression, and staircase paths.

A filling stores one entry per box, row by row.  Almost-standard fillings use
n of the labels 1..n+1 (one label missing); the pair (standard filling,
missing label) and the almost-standard filling determine each other through
``compress``/``decompress``.

A staircase path runs from the lower-left corner of the shape to its
upper-right corner using right- and up-steps; the path for (T, m) separates
the entries below m (northwest) from the rest.  A change of direction only
counts as a turn when both steps border a common box of the shape.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .counting import require_within_cap
from .errors import DisconnectedShape
from .shapes import SkewShape, is_connected


@dataclass(frozen=True)
class Tableau:
    """A strictly increasing filling of a skew shape.

    ``kind`` is derived: "standard" when the labels are exactly 1..n,
    otherwise "almost-standard" (labels drawn injectively from 1..n+1).
    """

    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        shape = self.shape
        if len(rows) != shape.k:
            raise ValueError("row count does not match the shape")
        for i, row in enumerate(rows):
            if len(row) != shape.row_length(i):
                raise ValueError(f"row {i} does not match the shape")
            if any(a >= b for a, b in zip(row, row[1:])):
                raise ValueError(f"row {i} is not strictly increasing")
        for i in range(shape.k - 1):
            for col in range(
                max(shape.row_start(i), shape.row_start(i + 1)),
                min(shape.row_end(i), shape.row_end(i + 1)) + 1,
            ):
                if self.entry(i, col) >= self.entry(i + 1, col):
                    raise ValueError(f"column {col} is not strictly increasing")
        n = shape.size
        labels = sorted(v for row in rows for v in row)
        if len(set(labels)) != n:
            raise ValueError("entries must be distinct")
        if labels != list(range(1, n + 1)):
            if any(v < 1 or v > n + 1 for v in labels):
                raise ValueError(f"labels must come from 1..{n + 1}")

    @property
    def size(self) -> int:
        return self.shape.size

    @property
    def kind(self) -> str:
        n = self.size
        return "standard" if self.label_set() == set(range(1, n + 1)) else "almost-standard"

    def label_set(self) -> set[int]:
        return {v for row in self.rows for v in row}

    @property
    def missing_label(self) -> int:
        """The label of 1..n+1 not used (n+1 for a standard filling)."""
        n = self.size
        return (n + 1) * (n + 2) // 2 - sum(v for row in self.rows for v in row)

    def entry(self, row: int, col: int) -> int:
        return self.rows[row][col - self.shape.row_start(row)]

    @property
    def entries(self) -> dict[tuple[int, int], int]:
        return {
            (i, self.shape.row_start(i) + j): v
            for i, row in enumerate(self.rows)
            for j, v in enumerate(row)
        }

    def replace(self, row: int, col: int, value: int) -> "Tableau":
        rows = [list(r) for r in self.rows]
        rows[row][col - self.shape.row_start(row)] = value
        return Tableau(self.shape, tuple(tuple(r) for r in rows))

    def short_string(self) -> str:
        parts = []
        for i, row in enumerate(self.rows):
            pad = "." * self.shape.row_start(i)
            parts.append(pad + ",".join(str(v) for v in row))
        return "/".join(parts)


@dataclass(frozen=True)
class TurnRecord:
    """A turn of a staircase path: the box it lies in and its handedness.

    A left turn is a (right, up) pair of steps, a right turn an (up, right)
    pair, in both cases bordering ``box``.
    """

    box: tuple[int, int]
    direction: str  # "left" | "right"


@dataclass(frozen=True)
class StaircasePath:
    """A monotone lattice path with its cached turn records.

    ``start`` is the lattice point (row line, column line) at the lower-left
    corner of the shape; "U" decreases the row line, "R" increases the column
    line.
    """

    start: tuple[int, int]
    steps: tuple[str, ...]
    turns: tuple[TurnRecord, ...]

    @property
    def turn_count(self) -> int:
        return len(self.turns)


def _iter_fillings(
    shape: SkewShape, labels: Sequence[int]
) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All strictly increasing fillings by the given labels, via backtracking.

    Labels are placed in increasing order; each next label may extend any row
    whose next column has its upper neighbour (if any) already filled.
    """
    k = shape.k
    lengths = [shape.row_length(i) for i in range(k)]
    ordered = sorted(labels)
    rows: list[list[int]] = [[] for _ in range(k)]
    profile = [0] * k

    def placeable(i: int) -> bool:
        if profile[i] == lengths[i]:
            return False
        col = shape.row_start(i) + profile[i]
        if i > 0 and shape.contains(i - 1, col):
            return shape.row_start(i - 1) + profile[i - 1] > col
        return True

    def backtrack(idx: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if idx == len(ordered):
            yield tuple(tuple(row) for row in rows)
            return
        for i in range(k):
            if placeable(i):
                rows[i].append(ordered[idx])
                profile[i] += 1
                yield from backtrack(idx + 1)
                profile[i] -= 1
                rows[i].pop()

    yield from backtrack(0)


def enumerate_standard(sigma: SkewShape, cap: int | None = None) -> list[Tableau]:
    """All standard fillings, ordered lexicographically by reading word."""
    require_within_cap(sigma.size, cap, "shape")
    fillings = sorted(_iter_fillings(sigma, range(1, sigma.size + 1)))
    return [Tableau(sigma, rows) for rows in fillings]


def enumerate_almost_standard(
    sigma: SkewShape, cap: int | None = None
) -> list[Tableau]:
    """All almost-standard fillings, ordered lexicographically by reading word."""
    require_within_cap(sigma.size, cap, "shape")
    n = sigma.size
    fillings = []
    for missing in range(1, n + 2):
        labels = [v for v in range(1, n + 2) if v != missing]
        fillings.extend(_iter_fillings(sigma, labels))
    fillings.sort()
    return [Tableau(sigma, rows) for rows in fillings]


def compress(tableau: Tableau) -> tuple[Tableau, int]:
    """Close the gap left by the missing label.

    Returns the standard filling obtained by decrementing every entry above
    the missing label m, together with m itself.
    """
    m = tableau.missing_label
    rows = tuple(
        tuple(v - 1 if v > m else v for v in row) for row in tableau.rows
    )
    return Tableau(tableau.shape, rows), m


def decompress(tableau: Tableau, m: int) -> Tableau:
    """Inverse of ``compress``: reopen the gap at label m.

    Entries >= m are incremented, so the result is the almost-standard
    filling missing m.  With m = n + 1 the filling is unchanged.
    """
    n = tableau.size
    if tableau.kind != "standard":
        raise ValueError("decompress needs a standard filling")
    if not 1 <= m <= n + 1:
        raise ValueError(f"missing label {m} outside 1..{n + 1}")
    rows = tuple(
        tuple(v + 1 if v >= m else v for v in row) for row in tableau.rows
    )
    return Tableau(tableau.shape, rows)


def _division_columns(tableau: Tableau, m: int) -> list[int]:
    """Per row, the column line separating entries < m from entries >= m."""
    shape = tableau.shape
    return [
        shape.row_start(i) + sum(1 for v in row if v < m)
        for i, row in enumerate(tableau.rows)
    ]


def _turn_events(
    shape: SkewShape, division: Sequence[int]
) -> list[tuple[int, int, str]]:
    """Turns of the path with the given per-row division columns.

    Row i crosses upward at column line division[i].  A right turn shows up
    in row i exactly when the box (i, division[i]) exists and the path really
    steps right after the up-step; symmetrically for left turns.
    """
    k = shape.k
    events = []
    for i in range(k):
        x = division[i]
        if x <= shape.row_end(i) and (i == 0 or division[i - 1] > x):
            events.append((i, x, "right"))
        if x > shape.row_start(i) and (i == k - 1 or division[i + 1] < x):
            events.append((i, x - 1, "left"))
    return events


def staircase_path(tableau: Tableau, m: int) -> StaircasePath:
    """The staircase path dividing entries < m from entries >= m.

    The filling must be standard and the shape connected; m may be any label
    in 1..n+1.  Turn records are computed from the step sequence with the
    bordering-box rule.
    """
    shape = tableau.shape
    if not is_connected(shape):
        raise DisconnectedShape(f"shape {shape} is not connected")
    if tableau.kind != "standard":
        raise ValueError("staircase paths are defined for standard fillings")
    n = shape.size
    if not 1 <= m <= n + 1:
        raise ValueError(f"m = {m} outside 1..{n + 1}")
    division = _division_columns(tableau, m)
    k = shape.k
    start = (k, shape.row_start(k - 1))
    steps: list[str] = []
    x = start[1]
    for i in range(k - 1, -1, -1):
        steps.extend("R" * (division[i] - x))
        steps.append("U")
        x = division[i]
    steps.extend("R" * (shape.row_end(0) + 1 - x))

    turns = []
    y, x = start
    prev = None
    for step in steps:
        if step == "R":
            x += 1
        else:
            y -= 1
        if prev == "R" and step == "U" and shape.contains(y, x - 1):
            turns.append(TurnRecord((y, x - 1), "left"))
        elif prev == "U" and step == "R" and shape.contains(y, x - 1):
            turns.append(TurnRecord((y, x - 1), "right"))
        prev = step
    return StaircasePath(start, tuple(steps), tuple(turns))
