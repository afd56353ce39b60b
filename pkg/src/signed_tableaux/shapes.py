"""
Shifted (k,n)-diagram geometry with border labeling.

A shape is determined by its set R of positive row labels.  The column
labels are the complement of R in 1..n, and every column c carries a
negative row -c whose topmost box (-c, c) is the diagonal.

Box existence is pure label arithmetic:
  (j, c)  with j > 0 exists iff j in R, c a column label, c > j
  (-i, c) exists iff i and c are column labels and c >= i

Rows are drawn top to bottom as -c_max, ..., -c_min followed by the
positive labels in increasing order; columns left to right by
decreasing label.  Labels of rows or columns without boxes still exist
(they carry statistics and are walk endpoints).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, NamedTuple


class Box(NamedTuple):
    row: int
    col: int


@dataclass(frozen=True)
class ShiftedShape:
    n: int
    positive_rows: frozenset[int]
    columns: tuple[int, ...] = field(init=False, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("rank must be at least 1")
        bad = [r for r in self.positive_rows if not 1 <= r <= self.n]
        if bad:
            raise ValueError(f"row labels {bad} out of range for rank {self.n}")
        cols = tuple(
            c for c in range(self.n, 0, -1) if c not in self.positive_rows
        )
        object.__setattr__(self, "columns", cols)

    @property
    def k(self) -> int:
        return len(self.positive_rows)

    def rows_top_to_bottom(self) -> tuple[int, ...]:
        return tuple(-c for c in self.columns) + tuple(sorted(self.positive_rows))

    def columns_left_to_right(self) -> tuple[int, ...]:
        return self.columns

    def has_box(self, row: int, col: int) -> bool:
        if col not in set(self.columns):
            return False
        if row > 0:
            return row in self.positive_rows and col > row
        return -row in set(self.columns) and col >= -row

    def row_boxes(self, row: int) -> tuple[Box, ...]:
        if row not in self.rows_top_to_bottom():
            raise ValueError(f"unknown row label {row}")
        return tuple(Box(row, c) for c in self.columns if self.has_box(row, c))

    def col_boxes(self, col: int) -> tuple[Box, ...]:
        if col not in self.columns:
            raise ValueError(f"unknown column label {col}")
        return tuple(
            Box(r, col) for r in self.rows_top_to_bottom() if self.has_box(r, col)
        )

    def boxes(self) -> Iterator[Box]:
        """All boxes in reading order, top row to bottom, left to right."""
        for row in self.rows_top_to_bottom():
            yield from self.row_boxes(row)

    def box_count(self) -> int:
        return sum(1 for _ in self.boxes())

    def diagonal_boxes(self) -> tuple[Box, ...]:
        return tuple(Box(-c, c) for c in self.columns)

    def is_diagonal(self, box: Box) -> bool:
        return box.row < 0 and box.col == -box.row

    def extended_cells(self) -> frozenset[Box]:
        """The 2-cells of the extended representation: positions (j, c)
        with a column label c below a positive row label j."""
        return frozenset(
            Box(j, c) for j in self.positive_rows for c in self.columns if c < j
        )


def shape_from_rows(n: int, rows) -> ShiftedShape:
    return ShiftedShape(n, frozenset(rows))


def identity_shape(n: int) -> ShiftedShape:
    return ShiftedShape(n, frozenset(range(1, n + 1)))
