"""
Weak order covering relations, at the group level and as tableau surgery.

A cover multiplies on the right by a generator s_i that raises the
length by one: s_0 applies when the first window entry is positive,
s_i (i >= 1) when entries i and i+1 are in increasing order.

On the tableau side each cover is one of nine local surgeries, keyed by
the window values at i and i+1:
  WB1    i = 0: the first row gains its diagonal, filled 1
  WB2    value at i drops, value at i+1 does not: one corner box is
         added and the two labels trade places
  WB3    i is a fixed point: its zero row is traded for a zero column
  WB4-*  both values exceed their positions: the walks from rows i and
         i+1 either meet at a 1 (turned to 0) or miss, in which case a
         two-row rectangle is rewritten
  WB5-*  both values drop, both positive: same dichotomy on the walks
         from columns i and i+1
  WB6-1  value at i negative, value at i+1 negative: walks from rows
         -i and -(i+1), same dichotomy
  WB6-2  value at i negative, value at i+1 positive: rectangle rewrite
         with a virtual 1 just above the diagonal of row -i

After any surgery a normalization pass repairs an emptied column c by
trading column c and row -c for the zero row c; it is a no-op when no
column emptied.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .perms import SignedPermutation, compose, generator, inversion_count
from .shapes import Box, ShiftedShape, shape_from_rows
from .tableaux import TableauB, validate
from .zigzag import zeta, zeta_inverse, zigzag_path

#: Largest rank for full weak-order construction.
POSET_BOUND = 5

CASE_TAGS = (
    "WB1",
    "WB2",
    "WB3",
    "WB4-1",
    "WB4-2",
    "WB5-1",
    "WB5-2",
    "WB6-1",
    "WB6-2",
)


@dataclass(frozen=True)
class CoverMove:
    gen: int
    case: str
    fixup: bool

    def __post_init__(self):
        if self.case not in CASE_TAGS:
            raise ValueError(f"unknown cover case {self.case!r}")


def raises_length(sigma: SignedPermutation, i: int) -> bool:
    if not 0 <= i <= sigma.n - 1:
        raise ValueError(f"generator index {i} out of range for rank {sigma.n}")
    if i == 0:
        return sigma(1) > 0
    return sigma(i) < sigma(i + 1)


def weak_covers(sigma: SignedPermutation) -> list[tuple[int, SignedPermutation]]:
    """All (i, sigma * s_i) with the length going up by exactly one."""
    return [
        (i, compose(sigma, generator(sigma.n, i)))
        for i in range(sigma.n)
        if raises_length(sigma, i)
    ]


def classify_cover(tableau: TableauB, i: int) -> CoverMove:
    """Name the surgery case for the length-raising generator s_i."""
    if tableau.kind != "permutation":
        raise ValueError("cover surgery works on permutation-kind tableaux")
    sigma = zeta(tableau)
    if not raises_length(sigma, i):
        raise ValueError(f"s_{i} does not raise the length of {sigma}")
    fixup = i >= 1 and sigma(i + 1) == i
    if i == 0:
        return CoverMove(0, "WB1", False)
    a, b = sigma(i), sigma(i + 1)
    if b >= i + 1:
        if a < i:
            case = "WB2"
        elif a == i:
            case = "WB3"
        else:
            # i and i+1 are row labels here
            case = "WB4-1" if _first_meet(tableau, i, i + 1) else "WB4-2"
    elif a > 0:
        # i and i+1 are column labels here
        case = "WB5-1" if _first_meet(tableau, i, i + 1) else "WB5-2"
    elif b < 0:
        case = "WB6-1"
    else:
        case = "WB6-2"
    return CoverMove(i, case, fixup)


def _first_meet(tableau: TableauB, label_a: int, label_b: int) -> Box | None:
    """First box common to the two walks; None when they never meet."""
    trace_a = zigzag_path(tableau, label_a)
    trace_b = zigzag_path(tableau, label_b)
    boxes_b = {box for box, _ in trace_b.steps}
    for box, _ in trace_a.steps:
        if box in boxes_b:
            return box
    return None


def apply_cover(tableau: TableauB, i: int) -> TableauB:
    """Perform the classified surgery; the result is validated and must
    map to sigma * s_i, anything else being an internal error."""
    move = classify_cover(tableau, i)
    sigma = zeta(tableau)
    shape = tableau.shape
    rows = set(shape.positive_rows)
    ones = set(tableau.ones)

    if move.case == "WB1":
        rows.discard(1)
        ones = _rekey(ones, {1: -1}, {})
        ones.add(Box(-1, 1))
    elif move.case == "WB2":
        rows.discard(i + 1)
        rows.add(i)
        ones = _rekey(ones, {i + 1: i, -i: -(i + 1)}, {i: i + 1})
        ones.add(Box(i, i + 1))
    elif move.case == "WB3":
        rows.discard(i + 1)
        ones = _rekey(ones, {i + 1: i}, {})
        ones.add(Box(i, i + 1))
    elif move.case in ("WB4-1", "WB5-1", "WB6-1"):
        pair = {
            "WB4-1": (i, i + 1),
            "WB5-1": (i, i + 1),
            "WB6-1": (-i, -(i + 1)),
        }[move.case]
        met = _first_meet(tableau, *pair)
        if met is None:
            if move.case != "WB6-1":
                raise RuntimeError(f"classified {move.case} but walks never meet")
            _rows_rectangle(shape, ones, -(i + 1), -i, virtual_col=None)
        else:
            if met not in ones:
                raise RuntimeError(f"walks first meet at a 0 at {tuple(met)}")
            ones.discard(met)
    elif move.case == "WB4-2":
        _rows_rectangle(shape, ones, i, i + 1, virtual_col=None)
    elif move.case == "WB5-2":
        _cols_rectangle(shape, ones, i + 1, i, virtual_top=False)
    elif move.case == "WB6-2":
        _apply_wb62(tableau, i, ones)

    new_shape = shape_from_rows(shape.n, rows)
    fixed = _repair_empty_column(new_shape, ones, i)
    if fixed is not None:
        new_shape, ones = fixed
    if (fixed is not None) != move.fixup:
        raise RuntimeError(f"fixup prediction {move.fixup} wrong for {sigma}, s_{i}")

    result = TableauB(new_shape, "permutation", frozenset(ones))
    violations = validate(result)
    if violations:
        raise RuntimeError(
            f"surgery {move.case} on {sigma} broke the tableau: "
            + "; ".join(violations)
        )
    expected = compose(sigma, generator(sigma.n, i))
    if zeta(result) != expected:
        raise RuntimeError(
            f"surgery {move.case} on {sigma} mapped to {zeta(result)}, "
            f"wanted {expected}"
        )
    return result


def _rekey(
    ones: set[Box], row_map: dict[int, int], col_map: dict[int, int]
) -> set[Box]:
    return {
        Box(row_map.get(b.row, b.row), col_map.get(b.col, b.col)) for b in ones
    }


def _rows_rectangle(
    shape: ShiftedShape,
    ones: set[Box],
    top: int,
    bottom: int,
    virtual_col: int | None,
) -> None:
    """Rewrite the two-row rectangle between the leftmost 1s: the top row
    takes the bottom row's cells and the bottom row is zeroed.  The open
    right edge is the top row's leftmost 1, or the virtual position just
    right of the bottom row's diagonal when the top row is all zero."""

    def leftmost(row: int) -> int | None:
        cols = [b.col for b in shape.row_boxes(row) if b in ones]
        return max(cols) if cols else None

    c_left = leftmost(bottom)
    c_right = virtual_col if virtual_col is not None else leftmost(top)
    if c_left is None or c_right is None:
        raise RuntimeError(f"rectangle rows {top},{bottom} lack a leftmost 1")
    if c_left < c_right:
        raise RuntimeError(
            f"rectangle between rows {top},{bottom} is inverted "
            f"({c_left} < {c_right})"
        )
    for c in shape.columns_left_to_right():
        if not c_right <= c <= c_left:
            continue
        below = Box(bottom, c) in ones
        if shape.has_box(top, c):
            if below:
                ones.add(Box(top, c))
            else:
                ones.discard(Box(top, c))
        ones.discard(Box(bottom, c))


def _cols_rectangle(
    shape: ShiftedShape, ones: set[Box], left: int, right: int, virtual_top: bool
) -> None:
    """Transpose of the row rule: the left column takes the right
    column's cells between the two topmost 1s, the right column zeroes.

    With virtual_top the right column carries an imaginary extra 1 just
    above its top cell; it lands in the left column's diagonal, and the
    right column's diagonal row receives nothing (a 0 diagonal forbids
    1s in its row), so its content simply vanishes.
    """
    order = shape.rows_top_to_bottom()
    index = {r: k for k, r in enumerate(order)}

    def topmost(col: int) -> int | None:
        rows_with_one = [b.row for b in shape.col_boxes(col) if b in ones]
        return min(rows_with_one, key=index.__getitem__) if rows_with_one else None

    r_top = -left if virtual_top else topmost(right)
    r_bottom = topmost(left)
    if r_top is None or r_bottom is None:
        raise RuntimeError(f"rectangle columns {left},{right} lack a topmost 1")
    if index[r_top] > index[r_bottom]:
        raise RuntimeError(f"rectangle between columns {left},{right} is inverted")
    for r in order:
        if not index[r_top] <= index[r] <= index[r_bottom]:
            continue
        if virtual_top and r == r_top:
            ones.add(Box(r, left))
            continue
        if virtual_top and r == -right:
            ones.discard(Box(r, right))
            continue
        keep = Box(r, right) in ones
        if shape.has_box(r, left):
            if keep:
                ones.add(Box(r, left))
            else:
                ones.discard(Box(r, left))
        ones.discard(Box(r, right))


def _apply_wb62(tableau: TableauB, i: int, ones: set[Box]) -> None:
    """Rectangle rewrite with an imaginary 1 just above the diagonal of
    row -i.

    When row -i holds 1s left of its diagonal the two-row rule applies
    with the virtual corner.  The image of position i+1 turns negative,
    so the diagonal of row -(i+1) must come out lit; whenever the row
    rewrite leaves it dark (including the case where the diagonal was
    row -i's only 1, where there is no row rectangle at all) the
    transposed rectangle between columns i+1 and i finishes the job,
    with the imaginary 1 sitting on top of column i."""
    shape = tableau.shape
    row_ones = [b for b in shape.row_boxes(-i) if b in tableau.ones]
    if len(row_ones) > 1:
        _rows_rectangle(shape, ones, -(i + 1), -i, virtual_col=i)
    if Box(-(i + 1), i + 1) not in ones:
        _cols_rectangle(shape, ones, i + 1, i, virtual_top=True)


def _repair_empty_column(
    shape: ShiftedShape, ones: set[Box], i: int
) -> tuple[ShiftedShape, set[Box]] | None:
    """Trade an emptied column c and its zero row -c for the zero row c."""
    empty = [
        c
        for c in shape.columns_left_to_right()
        if shape.col_boxes(c) and not any(b.col == c for b in ones)
    ]
    if not empty:
        return None
    if empty != [i]:
        raise RuntimeError(f"unexpected empty columns {empty} (generator {i})")
    c = empty[0]
    if any(b.row == -c for b in ones):
        raise RuntimeError(f"row {-c} is not zero while column {c} is empty")
    return shape_from_rows(shape.n, set(shape.positive_rows) | {c}), ones


# --- poset ------------------------------------------------------------------


@dataclass(frozen=True)
class PosetEdge:
    source: str
    target: str
    gen: int
    case: str


@dataclass(frozen=True)
class HassePoset:
    n: int
    nodes: tuple[tuple[str, int], ...]
    edges: tuple[PosetEdge, ...]


def build_weak_order(n: int, bound: int = POSET_BOUND) -> HassePoset:
    """Full Hasse diagram of the weak order with classified edges."""
    from .perms import enumerate_group

    if n > bound:
        raise ValueError(f"rank {n} exceeds poset bound {bound}")
    nodes = []
    edges = []
    for sigma in enumerate_group(n):
        nodes.append((str(sigma), inversion_count(sigma)))
        t = zeta_inverse(sigma)
        for i, target in weak_covers(sigma):
            move = classify_cover(t, i)
            edges.append(PosetEdge(str(sigma), str(target), i, move.case))
    return HassePoset(n, tuple(nodes), tuple(edges))


def export_poset(poset: HassePoset, fmt: str) -> str:
    if fmt == "json":
        doc = {
            "n": poset.n,
            "nodes": [{"window": w, "length": l} for w, l in poset.nodes],
            "edges": [
                {"from": e.source, "to": e.target, "gen": e.gen, "case": e.case}
                for e in poset.edges
            ],
        }
        return json.dumps(doc, indent=2)
    if fmt == "dot":
        lines = ["digraph weak_order {", "  rankdir=BT;"]
        for window, length in poset.nodes:
            lines.append(f'  "{window}" [label="{window}\\nl={length}"];')
        for e in poset.edges:
            lines.append(f'  "{e.source}" -> "{e.target}" [label="{e.case}"];')
        lines.append("}")
        return "\n".join(lines)
    raise ValueError(f"unknown poset format {fmt!r}")


def parse_poset_json(text: str) -> HassePoset:
    doc = json.loads(text)
    nodes = tuple((node["window"], int(node["length"])) for node in doc["nodes"])
    edges = tuple(
        PosetEdge(e["from"], e["to"], int(e["gen"]), e["case"])
        for e in doc["edges"]
    )
    return HassePoset(int(doc["n"]), nodes, edges)
