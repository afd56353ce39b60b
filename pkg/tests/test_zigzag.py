import pytest

from signed_tableaux.perms import (
    alignment_sets,
    basic_stats,
    crossing_count,
    enumerate_group,
    identity,
    parse_cycles,
    parse_window,
    path_cycles,
)
from signed_tableaux.tableaux import (
    empty_tableau,
    enumerate_tableaux,
    filling_stats,
)
from signed_tableaux.zigzag import (
    classify_zeros,
    format_trace,
    pt_bt_convert,
    zeta,
    zeta_bare,
    zeta_bare_inverse,
    zeta_inverse,
    zigzag_path,
)
from test_tableaux import BT8, PT5, PT8, tableau
from signed_tableaux.shapes import Box


class TestWalks:
    def test_walk_from_row3_ends_at_column5(self):
        trace = zigzag_path(PT5, 3)
        assert trace.end == 5
        assert trace.steps[0] == (Box(3, 5), "east")

    def test_zero_positive_row_is_fixed_point(self):
        t = tableau(3, {2, 3}, "permutation", [(-1, 1)])
        assert zigzag_path(t, 2).end == 2
        assert zigzag_path(t, 3).end == 3

    def test_single_box_walk_turns_at_diagonal(self):
        t = tableau(1, set(), "permutation", [(-1, 1)])
        trace = zigzag_path(t, -1)
        # the 1 in the diagonal flips the walk south, so it leaves
        # through the bottom of column 1
        assert trace.steps == ((Box(-1, 1), "east"),)
        assert trace.end == 1

    def test_boxless_row_trivial_trace(self):
        t = tableau(
            9,
            {2, 4, 6, 9},
            "permutation",
            [(-1, 1), (-3, 3), (-5, 5), (-7, 7), (-8, 8)],
        )
        trace = zigzag_path(t, 9)
        assert trace.steps == ()
        assert trace.end == 9

    def test_unknown_label(self):
        with pytest.raises(ValueError, match="unknown"):
            zigzag_path(PT5, 7)
        with pytest.raises(ValueError, match="unknown"):
            zigzag_path(PT5, 0)

    def test_trace_dump_format(self):
        dump = format_trace(zigzag_path(PT5, 3))
        assert dump.splitlines() == ["(3,5) east", "end=5"]

    def test_direction_flips_exactly_at_ones(self):
        for t in enumerate_tableaux(3, "permutation"):
            labels = list(t.shape.rows_top_to_bottom()) + list(
                t.shape.columns_left_to_right()
            )
            for label in labels:
                steps = zigzag_path(t, label).steps
                for (b1, d1), (b2, d2) in zip(steps, steps[1:]):
                    assert (d1 != d2) == (b1 in t.ones)


class TestZeta:
    def test_rank5_example(self):
        assert zeta(PT5) == parse_window("-2,-4,5,3,1", 5)

    def test_empty_is_identity(self):
        for n in (1, 3, 5):
            assert zeta(empty_tableau(n)) == identity(n)

    def test_rank1_negation(self):
        t = tableau(1, set(), "permutation", [(-1, 1)])
        assert zeta(t) == parse_window("-1", 1)

    def test_length8_pair_shares_its_permutation(self):
        # the two length-8 fixtures are a corresponding pair
        sigma = parse_window("2,7,-5,6,-4,1,8,-3", 8)
        assert zeta(PT8) == sigma
        assert zeta_bare(BT8) == sigma

    def test_kind_check(self):
        with pytest.raises(ValueError, match="permutation-kind"):
            zeta(BT8)
        with pytest.raises(ValueError, match="bare-kind"):
            zeta_bare(PT8)

    def test_bijective_at_small_ranks(self):
        import math

        for n in range(1, 5):
            images = {zeta(t).window for t in enumerate_tableaux(n, "permutation")}
            assert len(images) == 2**n * math.factorial(n)


class TestZetaBare:
    def test_cycle_example(self):
        t = tableau(4, {1}, "bare", [(-3, 4), (1, 4), (-3, 3), (-2, 3), (-2, 2)])
        assert zeta_bare(t) == parse_cycles("(2,-3,-1,4)", 4)

    def test_empty_is_identity(self):
        assert zeta_bare(empty_tableau(3, "bare")) == identity(3)

    def test_bijective_rank3(self):
        images = {zeta_bare(t).window for t in enumerate_tableaux(3, "bare")}
        assert len(images) == 48


# length-9 fixture with zero rows -8, -5, -3 and boxless row 9
T9 = tableau(
    9,
    {2, 4, 7, 9},
    "permutation",
    [
        (-6, 8), (-6, 6),
        (-1, 8), (-1, 6), (-1, 5), (-1, 3), (-1, 1),
        (2, 6), (2, 5), (2, 3),
        (4, 8), (4, 6), (4, 5),
    ],
)


class TestZeroTypes:
    def test_rank5_counts(self):
        zt = classify_zeros(PT5)
        assert zt.zero_ee == 1
        assert zt.zero_nn == 1
        assert zt.zero_en == 1
        assert zt.types[Box(-1, 5)] == "EE"
        assert zt.types[Box(-2, 4)] == "NN"
        assert zt.types[Box(-1, 4)] == "EN"
        # the three zeros of the all-zero rows -5 and -4 are non-typed
        assert zt.nontyped == 3

    def test_rank9_typed_zeros_inside_zero_rows(self):
        zt = classify_zeros(T9)
        # an EE zero may sit inside an all-zero negative row: the walk
        # entering from row -6 passes these boxes vertically
        assert zt.types[Box(-5, 8)] == "EE"
        assert zt.types[Box(-3, 8)] == "EE"
        # non-typed zeros per zero row count the zero rows above it
        for row, expected in ((-8, 1), (-5, 2), (-3, 3)):
            nontyped = sum(
                1 for b in T9.shape.row_boxes(row) if zt.types[b] == "nontyped"
            )
            assert nontyped == expected

    def test_nontyped_counts_follow_zero_rows_above(self):
        for t in enumerate_tableaux(4, "permutation"):
            zt = classify_zeros(t)
            zero_rows_above = 0
            for col in t.shape.columns_left_to_right():
                row = -col
                if t.row_is_zero(row):
                    zero_rows_above += 1
                    nontyped_here = sum(
                        1
                        for b in t.shape.row_boxes(row)
                        if zt.types.get(b) == "nontyped"
                    )
                    assert nontyped_here == zero_rows_above

    def test_nontyped_only_in_zero_negative_rows(self):
        for t in enumerate_tableaux(4, "permutation"):
            zt = classify_zeros(t)
            for box, typ in zt.types.items():
                if typ == "nontyped":
                    assert box.row < 0 and t.row_is_zero(box.row)

    def test_empty_tableau(self):
        zt = classify_zeros(empty_tableau(3))
        assert zt.types == {}
        assert zt.zero == 0


class TestStatisticsDictionary:
    def test_row_wex_so_crs_diag_neg(self):
        for t in enumerate_tableaux(4, "permutation"):
            sigma = zeta(t)
            fs = filling_stats(t)
            st = basic_stats(sigma)
            assert st.wex == fs.row
            assert crossing_count(sigma) == fs.so
            assert st.neg == fs.diag
            drop_rows = {-r for r in t.shape.rows_top_to_bottom() if r < 0}
            assert drop_rows == {i for i in range(1, t.n + 1) if sigma(i) < i}

    def test_alignments_match_zero_types(self):
        for t in enumerate_tableaux(4, "permutation"):
            sigma = zeta(t)
            nest, en, ne = alignment_sets(sigma)
            fs = filling_stats(t)
            zt = classify_zeros(t)
            assert len(nest) == zt.zero_ee + zt.zero_nn
            assert len(en) == zt.zero_en
            assert len(ne) == fs.two

    def test_staircase_cell_count_identity(self):
        for t in enumerate_tableaux(4, "permutation"):
            fs = filling_stats(t)
            zt = classify_zeros(t)
            m = fs.col
            assert zt.zero + zt.nontyped + fs.one + fs.two == m * (2 * t.n - m + 1) // 2
            gap = fs.col - fs.diag
            assert zt.nontyped == gap * (gap + 1) // 2


class TestZetaInverse:
    def test_rank5_example(self):
        assert zeta_inverse(parse_window("-2,-4,5,3,1", 5)) == PT5

    def test_identity(self):
        assert zeta_inverse(identity(4)) == empty_tableau(4)

    def test_roundtrip_rank4(self):
        for sigma in enumerate_group(4):
            assert zeta(zeta_inverse(sigma)) == sigma

    def test_shape_follows_weak_excedances(self):
        for sigma in enumerate_group(3):
            t = zeta_inverse(sigma)
            assert t.shape.positive_rows == {
                i for i in range(1, 4) if sigma(i) >= i
            }
            diag_ones = {c for c in t.shape.columns_left_to_right() if Box(-c, c) in t.ones}
            assert diag_ones == {i for i in range(1, 4) if sigma(i) < 0}

    def test_bound(self):
        with pytest.raises(ValueError, match="bound"):
            zeta_inverse(identity(7))


class TestZetaBareInverse:
    def test_split_construction_ones(self):
        t = zeta_bare_inverse(parse_cycles("(2,-3,-1,4)", 4))
        assert t.ones == {Box(-3, 4), Box(1, 4), Box(-3, 3), Box(-2, 3), Box(-2, 2)}
        assert sorted(t.shape.positive_rows) == [1]

    def test_identity(self):
        assert zeta_bare_inverse(identity(3)) == empty_tableau(3, "bare")

    def test_roundtrip_rank4(self):
        for sigma in enumerate_group(4):
            assert zeta_bare(zeta_bare_inverse(sigma)) == sigma

    def test_cycles_statistic(self):
        for t in enumerate_tableaux(4, "bare"):
            fs = filling_stats(t)
            assert basic_stats(zeta_bare(t)).cyc == fs.dess + fs.zerorow

    def test_component_roots_at_min_max(self):
        # the root of each component sits at (min, max) of its path cycle
        for sigma in enumerate_group(3):
            t = zeta_bare_inverse(sigma)
            for pc in path_cycles(sigma):
                if len(pc.entries) > 1:
                    assert Box(min(pc.entries), max(pc.entries)) in t.ones


class TestConvert:
    def test_empty_both_ways(self):
        assert pt_bt_convert(empty_tableau(3)) == empty_tableau(3, "bare")
        assert pt_bt_convert(empty_tableau(3, "bare")) == empty_tableau(3)

    def test_length8_pair(self):
        # the direct splitting construction works beyond the index bound
        assert pt_bt_convert(PT8) == BT8
        # the reverse direction needs the rank-8 index, which is refused
        with pytest.raises(ValueError, match="bound"):
            pt_bt_convert(BT8)

    def test_shape_preserved_rank3(self):
        for t in enumerate_tableaux(3, "permutation"):
            assert pt_bt_convert(t).shape == t.shape

    def test_roundtrip_rank3(self):
        for t in enumerate_tableaux(3, "permutation"):
            assert pt_bt_convert(pt_bt_convert(t)) == t
        for t in enumerate_tableaux(3, "bare"):
            assert pt_bt_convert(pt_bt_convert(t)) == t
