"""
0/1 fillings of shifted shapes: permutation tableaux and bare tableaux.

Both kinds share two rules: every column with boxes holds at least one
1, and a 0 diagonal forces its whole row to 0.  They differ on the
hinge rule for a box with a 1 above it and a 1 to its left: the
permutation kind forces such a box to 1, the bare kind to 0.

The JSON interchange document is::

    {"n": int, "kind": "permutation" | "bare",
     "positive_rows": [int, ...], "ones": [[row, col], ...]}

Boxes not listed in "ones" are 0; the reader validates both the box
addresses and the tableau rules.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator, Literal

from .shapes import Box, ShiftedShape, shape_from_rows

Kind = Literal["permutation", "bare"]

KINDS = ("permutation", "bare")

#: Largest rank accepted by enumerate_tableaux.
TABLEAU_ENUM_BOUND = 6


@dataclass(frozen=True)
class TableauB:
    shape: ShiftedShape
    kind: str
    ones: frozenset[Box]

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown tableau kind {self.kind!r}")
        boxes = set(self.shape.boxes())
        stray = [b for b in self.ones if b not in boxes]
        if stray:
            raise ValueError(f"filled boxes {sorted(stray)} are not in the shape")

    @property
    def n(self) -> int:
        return self.shape.n

    def fill(self, box: Box) -> int:
        """0/1 value of an existing box; absent boxes are not addressable."""
        if not self.shape.has_box(*box):
            raise KeyError(f"box {tuple(box)} is not in the shape")
        return 1 if Box(*box) in self.ones else 0

    def row_is_zero(self, row: int) -> bool:
        return not any(b in self.ones for b in self.shape.row_boxes(row))


def validate(tableau: TableauB) -> list[str]:
    """Return the list of rule violations; empty means valid."""
    shape = tableau.shape
    ones = tableau.ones
    violations = []

    for col in shape.columns_left_to_right():
        boxes = shape.col_boxes(col)
        if boxes and not any(b in ones for b in boxes):
            violations.append(f"column {col} has boxes but no 1")

    one_seen_in_col: dict[int, bool] = {}
    for row in shape.rows_top_to_bottom():
        one_left = False
        for box in shape.row_boxes(row):
            if one_left and one_seen_in_col.get(box.col, False):
                filled = box in ones
                if tableau.kind == "permutation" and not filled:
                    violations.append(f"box {tuple(box)} breaks the 1-hinge rule")
                if tableau.kind == "bare" and filled:
                    violations.append(f"box {tuple(box)} breaks the 0-hinge rule")
            if box in ones:
                one_left = True
                one_seen_in_col[box.col] = True

    for diag in shape.diagonal_boxes():
        if diag not in ones:
            row_ones = [b for b in shape.row_boxes(diag.row) if b in ones]
            if row_ones:
                violations.append(
                    f"row {diag.row} has a 0 diagonal but 1s at "
                    f"{[tuple(b) for b in row_ones]}"
                )
    return violations


def is_valid(tableau: TableauB) -> bool:
    return not validate(tableau)


def empty_tableau(n: int, kind: str = "permutation") -> TableauB:
    return TableauB(shape_from_rows(n, range(1, n + 1)), kind, frozenset())


def enumerate_tableaux(
    n: int, kind: str, bound: int = TABLEAU_ENUM_BOUND
) -> Iterator[TableauB]:
    """
    Every valid tableau of the given kind and length exactly once:
    shapes are visited by row-label set, boxes filled in reading order
    with 0 tried before 1, pruning on the hinge rule at assignment, the
    diagonal rule when a diagonal is placed, and the column rule when a
    column bottoms out.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown tableau kind {kind!r}")
    if n > bound:
        raise ValueError(f"rank {n} exceeds enumeration bound {bound}")
    if n < 1:
        raise ValueError("rank must be at least 1")

    for mask in range(2**n):
        rows = frozenset(i + 1 for i in range(n) if mask >> i & 1)
        yield from _fillings(shape_from_rows(n, rows), kind)


def _fillings(shape: ShiftedShape, kind: str) -> Iterator[TableauB]:
    boxes = list(shape.boxes())
    if not boxes:
        yield TableauB(shape, kind, frozenset())
        return

    col_bottom = {c: shape.col_boxes(c)[-1] for c in shape.columns_left_to_right()}
    row_order = shape.rows_top_to_bottom()
    row_index = {r: i for i, r in enumerate(row_order)}
    col_cells = {c: shape.col_boxes(c) for c in shape.columns_left_to_right()}

    ones: set[Box] = set()

    def hinge(box: Box) -> bool:
        one_left = any(
            Box(box.row, c) in ones for c in shape.columns if c > box.col
        )
        if not one_left:
            return False
        return any(
            b in ones
            for b in col_cells[box.col]
            if row_index[b.row] < row_index[box.row]
        )

    def rec(idx: int) -> Iterator[TableauB]:
        if idx == len(boxes):
            yield TableauB(shape, kind, frozenset(ones))
            return
        box = boxes[idx]
        hinged = hinge(box)
        for value in (0, 1):
            if hinged and value != (1 if kind == "permutation" else 0):
                continue
            if value == 0 and shape.is_diagonal(box):
                if any(b in ones for b in shape.row_boxes(box.row) if b != box):
                    continue
            if value == 0 and box == col_bottom[box.col]:
                if not any(b in ones for b in col_cells[box.col]):
                    continue
            if value == 1:
                ones.add(box)
            yield from rec(idx + 1)
            if value == 1:
                ones.discard(box)

    yield from rec(0)


@dataclass(frozen=True)
class FillingStats:
    one: int
    two: int
    so: int
    dess: int
    row: int
    zerorow: int
    col: int
    diag: int


def filling_stats(tableau: TableauB) -> FillingStats:
    shape = tableau.shape
    ones = tableau.ones
    row_order = shape.rows_top_to_bottom()
    row_index = {r: i for i, r in enumerate(row_order)}

    topmost: dict[int, Box] = {}
    for col in shape.columns_left_to_right():
        col_ones = [b for b in shape.col_boxes(col) if b in ones]
        if col_ones:
            topmost[col] = min(col_ones, key=lambda b: row_index[b.row])

    leftmost: dict[int, Box] = {}
    for row in row_order:
        row_ones = [b for b in shape.row_boxes(row) if b in ones]
        if row_ones:
            leftmost[row] = max(row_ones, key=lambda b: b.col)

    dess = sum(
        1
        for b in ones
        if topmost.get(b.col) == b and leftmost.get(b.row) == b
    )
    positive = sorted(shape.positive_rows)
    return FillingStats(
        one=len(ones),
        two=len(shape.extended_cells()),
        so=len(ones) - len(topmost),
        dess=dess,
        row=len(positive),
        zerorow=sum(1 for r in positive if tableau.row_is_zero(r)),
        col=len(shape.columns),
        diag=sum(1 for b in shape.diagonal_boxes() if b in ones),
    )


def to_doc(tableau: TableauB) -> dict:
    return {
        "n": tableau.n,
        "kind": tableau.kind,
        "positive_rows": sorted(tableau.shape.positive_rows),
        "ones": sorted([b.row, b.col] for b in tableau.ones),
    }


def from_doc(doc: dict) -> TableauB:
    """Build and fully validate a tableau from its JSON document."""
    try:
        n = int(doc["n"])
        kind = doc["kind"]
        rows = [int(r) for r in doc["positive_rows"]]
        ones = [(int(r), int(c)) for r, c in doc["ones"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed tableau document: {exc}") from exc
    shape = shape_from_rows(n, rows)
    for r, c in ones:
        if not shape.has_box(r, c):
            raise ValueError(f"box [{r},{c}] is not in the shape")
    tableau = TableauB(shape, kind, frozenset(Box(r, c) for r, c in ones))
    violations = validate(tableau)
    if violations:
        raise ValueError("invalid tableau: " + "; ".join(violations))
    return tableau


def to_json(tableau: TableauB) -> str:
    return json.dumps(to_doc(tableau))


def from_json(text: str) -> TableauB:
    return from_doc(json.loads(text))
