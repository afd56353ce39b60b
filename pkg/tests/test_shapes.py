import itertools

import pytest

from signed_tableaux.shapes import Box, ShiftedShape, identity_shape, shape_from_rows


def all_shapes(n):
    for size in range(n + 1):
        for rows in itertools.combinations(range(1, n + 1), size):
            yield shape_from_rows(n, rows)


class TestLabeling:
    def test_border_labels_rank9(self):
        shape = shape_from_rows(9, {2, 4, 6, 9})
        assert shape.columns_left_to_right() == (8, 7, 5, 3, 1)
        assert shape.rows_top_to_bottom() == (-8, -7, -5, -3, -1, 2, 4, 6, 9)
        assert len(shape.row_boxes(-8)) == 1
        assert len(shape.row_boxes(-1)) == 5
        assert shape.row_boxes(9) == ()
        # row 2 reaches columns 8,7,5,3 but not column 1
        assert shape.row_boxes(2) == (
            Box(2, 8),
            Box(2, 7),
            Box(2, 5),
            Box(2, 3),
        )
        # column 1 carries only its diagonal
        assert shape.col_boxes(1) == (Box(-1, 1),)

    def test_identity_shape(self):
        shape = shape_from_rows(3, {1, 2, 3})
        assert shape.columns_left_to_right() == ()
        assert list(shape.boxes()) == []

    def test_rank5_single_row(self):
        shape = shape_from_rows(5, {3})
        assert shape.columns_left_to_right() == (5, 4, 2, 1)
        assert shape.row_boxes(3) == (Box(3, 5), Box(3, 4))
        assert shape.row_boxes(-1) == (
            Box(-1, 5),
            Box(-1, 4),
            Box(-1, 2),
            Box(-1, 1),
        )
        # existence-predicate scan: 2 + 1 + 2 + 3 + 4 boxes
        assert shape.box_count() == 12

    def test_label_out_of_range(self):
        with pytest.raises(ValueError, match="out of range"):
            shape_from_rows(3, {4})

    def test_unknown_labels(self):
        shape = shape_from_rows(3, {2})
        with pytest.raises(ValueError, match="unknown row"):
            shape.row_boxes(1)
        with pytest.raises(ValueError, match="unknown column"):
            shape.col_boxes(2)


class TestExtendedCells:
    def test_two_cells_rank9(self):
        shape = shape_from_rows(9, {2, 4, 7, 9})
        cells = shape.extended_cells()
        assert sum(1 for b in cells if b.row == 9) == 5
        assert sum(1 for b in cells if b.row == 7) == 4

    def test_identity_empty(self):
        assert identity_shape(4).extended_cells() == frozenset()

    def test_rank5_single_row(self):
        shape = shape_from_rows(5, {3})
        assert shape.extended_cells() == {Box(3, 2), Box(3, 1)}
        # complement count inside the staircase region
        m = len(shape.columns)
        assert shape.box_count() + len(shape.extended_cells()) == m * (
            2 * 5 - m + 1
        ) // 2


class TestInvariants:
    def test_staircase_count_all_shapes(self):
        for n in range(1, 7):
            for shape in all_shapes(n):
                m = len(shape.columns)
                total = shape.box_count() + len(shape.extended_cells())
                assert total == m * (2 * n - m + 1) // 2

    def test_shapes_distinct(self):
        for n in range(1, 7):
            seen = {tuple(sorted(s.positive_rows)) for s in all_shapes(n)}
            assert len(seen) == 2**n

    def test_row_label_below_column_label(self):
        for shape in all_shapes(5):
            for box in shape.boxes():
                assert box.row < box.col

    def test_reading_order_matches_existence_scan(self):
        for shape in all_shapes(4):
            via_scan = [
                Box(r, c)
                for r in shape.rows_top_to_bottom()
                for c in shape.columns_left_to_right()
                if shape.has_box(r, c)
            ]
            assert list(shape.boxes()) == via_scan
