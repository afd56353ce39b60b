"""
Zigzag walks on tableaux, the tableau-to-permutation maps for both
kinds, typed-zero classification, and both inverse constructions.

A walk enters at the left edge of a row (heading east) or the top of a
column (heading south), flips direction at every 1 it meets, and ends
when it leaves the diagram through the right edge of a row or the
bottom edge of a column; the end label is that row or column label.

The permutation image of a tableau is read off per value i:
  - i a row label: image(i) = end of the walk from row i,
  - -i a row label with 0 diagonal: image(i) = end of the walk from
    column i,
  - -i a row label with 1 diagonal: image(-i) = end of the walk from
    row -i, so image(i) is its negation.
"""
from __future__ import annotations

from dataclasses import dataclass

from .perms import SignedPermutation, path_cycles, wex_set
from .shapes import Box, shape_from_rows
from .tableaux import TABLEAU_ENUM_BOUND, TableauB, enumerate_tableaux, validate

EAST = "east"
SOUTH = "south"


@dataclass(frozen=True)
class ZigzagTrace:
    start: int
    steps: tuple[tuple[Box, str], ...]
    end: int


def zigzag_path(tableau: TableauB, start: int) -> ZigzagTrace:
    """Simulate the walk from a row label (any sign) or column label."""
    shape = tableau.shape
    rows = shape.rows_top_to_bottom()
    cols = shape.columns_left_to_right()
    if start in rows:
        boxes = shape.row_boxes(start)
        direction = EAST
    elif start in cols:
        boxes = shape.col_boxes(start)
        direction = SOUTH
    else:
        raise ValueError(f"unknown row or column label {start}")

    steps: list[tuple[Box, str]] = []
    pos = 0
    line = list(boxes)
    while pos < len(line):
        box = line[pos]
        steps.append((box, direction))
        if box in tableau.ones:
            direction = SOUTH if direction == EAST else EAST
            cross = shape.row_boxes(box.row) if direction == EAST else shape.col_boxes(box.col)
            line = list(cross)
            pos = cross.index(box) + 1
        else:
            pos += 1

    if not steps:
        return ZigzagTrace(start, (), start)
    # the exit direction is the direction of travel after the last box,
    # which differs from the entry direction when that box holds a 1
    last_box = steps[-1][0]
    end = last_box.row if direction == EAST else last_box.col
    return ZigzagTrace(start, tuple(steps), end)


def format_trace(trace: ZigzagTrace) -> str:
    lines = [f"({box.row},{box.col}) {direction}" for box, direction in trace.steps]
    lines.append(f"end={trace.end}")
    return "\n".join(lines)


def _image(tableau: TableauB) -> SignedPermutation:
    shape = tableau.shape
    window = []
    for i in range(1, shape.n + 1):
        if i in shape.positive_rows:
            window.append(zigzag_path(tableau, i).end)
        elif Box(-i, i) not in tableau.ones:
            window.append(zigzag_path(tableau, i).end)
        else:
            window.append(-zigzag_path(tableau, -i).end)
    return SignedPermutation(tuple(window))


def zeta(tableau: TableauB) -> SignedPermutation:
    if tableau.kind != "permutation":
        raise ValueError("zeta expects a permutation-kind tableau")
    return _image(tableau)


def zeta_bare(tableau: TableauB) -> SignedPermutation:
    if tableau.kind != "bare":
        raise ValueError("zeta_bare expects a bare-kind tableau")
    return _image(tableau)


# --- typed zeros -----------------------------------------------------------

EE = "EE"
NN = "NN"
EN = "EN"
NONTYPED = "nontyped"


@dataclass(frozen=True)
class ZeroTypeMap:
    types: dict[Box, str]

    @property
    def zero_ee(self) -> int:
        return sum(1 for t in self.types.values() if t == EE)

    @property
    def zero_nn(self) -> int:
        return sum(1 for t in self.types.values() if t == NN)

    @property
    def zero_en(self) -> int:
        return sum(1 for t in self.types.values() if t == EN)

    @property
    def nontyped(self) -> int:
        return sum(1 for t in self.types.values() if t == NONTYPED)

    @property
    def zero(self) -> int:
        return self.zero_ee + self.zero_nn + self.zero_en

    def counts(self) -> dict[str, int]:
        return {
            "zero_EE": self.zero_ee,
            "zero_NN": self.zero_nn,
            "zero_EN": self.zero_en,
            "nontyped": self.nontyped,
        }


def _origin_east(tableau: TableauB, box: Box) -> tuple[str, int]:
    """Start of the walk passing eastward through the box, by backward
    tracing: the nearest 1 to the left is where it turned off a column."""
    row_cells = tableau.shape.row_boxes(box.row)
    left = [b for b in row_cells if b.col > box.col and b in tableau.ones]
    if not left:
        return ("row", box.row)
    turn = min(left, key=lambda b: b.col)
    return _origin_south(tableau, turn)


def _origin_south(tableau: TableauB, box: Box) -> tuple[str, int]:
    col_cells = tableau.shape.col_boxes(box.col)
    idx = col_cells.index(box)
    above = [b for b in col_cells[:idx] if b in tableau.ones]
    if not above:
        return ("col", box.col)
    turn = above[-1]
    return _origin_east(tableau, turn)


def classify_zeros(tableau: TableauB) -> ZeroTypeMap:
    """
    Type every 0-box by the origins of the two walks through it.  Both
    origins from rows: EE; both from columns: NN; mixed: EN unless the
    box lies in an all-zero negative row, which leaves it non-typed.

    Also asserts that no pair of walks crosses at two different 0s.
    """
    types: dict[Box, str] = {}
    seen_pairs: set[frozenset] = set()
    for box in tableau.shape.boxes():
        if box in tableau.ones:
            continue
        horizontal = _origin_east(tableau, box)
        vertical = _origin_south(tableau, box)
        pair = frozenset((horizontal, vertical))
        if pair in seen_pairs:
            raise AssertionError(
                f"walks {sorted(pair)} cross at two zeros (second at {tuple(box)})"
            )
        seen_pairs.add(pair)
        if horizontal[0] == "row" and vertical[0] == "row":
            types[box] = EE
        elif horizontal[0] == "col" and vertical[0] == "col":
            types[box] = NN
        elif box.row < 0 and tableau.row_is_zero(box.row):
            types[box] = NONTYPED
        else:
            types[box] = EN
    return ZeroTypeMap(types)


# --- inverses --------------------------------------------------------------

_INVERSE_INDEX: dict[int, dict[tuple[int, ...], TableauB]] = {}


def _inverse_index(n: int) -> dict[tuple[int, ...], TableauB]:
    index = _INVERSE_INDEX.get(n)
    if index is None:
        index = {
            zeta(t).window: t for t in enumerate_tableaux(n, "permutation")
        }
        _INVERSE_INDEX[n] = index
    return index


def zeta_inverse(
    sigma: SignedPermutation, bound: int = TABLEAU_ENUM_BOUND
) -> TableauB:
    """The unique permutation tableau mapping to sigma, via a cached
    per-rank enumeration index (a deliberate desk-scale realization)."""
    if sigma.n > bound:
        raise ValueError(f"rank {sigma.n} exceeds enumeration bound {bound}")
    return _inverse_index(sigma.n)[sigma.window]


def zeta_bare_inverse(sigma: SignedPermutation) -> TableauB:
    """
    Direct construction of the bare tableau of sigma: the shape has
    positive labeling set wex(sigma); each path cycle is split repeatedly
    at its (min, max) entries, every split contributing the box
    (min, max) to the 1-set.
    """
    shape = shape_from_rows(sigma.n, wex_set(sigma))
    ones: set[Box] = set()
    for pc in path_cycles(sigma):
        pending = [tuple(pc.entries)]
        while pending:
            entries = pending.pop()
            if len(entries) <= 1:
                continue
            lo, hi = min(entries), max(entries)
            if entries.count(lo) != 1 or entries.count(hi) != 1:
                raise AssertionError(f"min/max not unique in {entries}")
            i = entries.index(lo)
            j = entries.index(hi)
            box = Box(lo, hi)
            if not shape.has_box(*box):
                raise RuntimeError(
                    f"cycle split produced box {tuple(box)} outside the shape "
                    f"for {sigma}"
                )
            ones.add(box)
            if i < j:
                pending.append(entries[i + 1 : j + 1])
                pending.append(entries[: i + 1] + entries[j + 1 :])
            else:
                pending.append(entries[: j + 1] + entries[i + 1 :])
                pending.append(entries[j + 1 : i + 1])
    tableau = TableauB(shape, "bare", frozenset(ones))
    violations = validate(tableau)
    if violations:
        raise RuntimeError(
            f"constructed filling for {sigma} is invalid: {'; '.join(violations)}"
        )
    return tableau


def pt_bt_convert(tableau: TableauB, bound: int = TABLEAU_ENUM_BOUND) -> TableauB:
    """Convert between the two kinds through the permutation they share."""
    if tableau.kind == "permutation":
        return zeta_bare_inverse(zeta(tableau))
    return zeta_inverse(zeta_bare(tableau), bound=bound)
