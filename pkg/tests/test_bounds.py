"""Exact communication bounds: matrices, protocol search, partitions."""

import numpy as np
import pytest

from promisecc.bits import BitString, Margin, PromiseLabel, hamming_weight, weight_band
from promisecc.bounds import (
    CommMatrix,
    Rectangle,
    SearchTooWideError,
    UNDEFINED,
    check_rectangle_bound,
    cross_pair_refutation,
    exact_deterministic_cc,
    find_cross_refutation,
    fooling_pairs,
    greedy_fooling_set,
    min_monochromatic_partition,
    problem_matrix,
    verify_partition,
)


class TestCommMatrix:
    def test_entry_and_shape(self):
        m = problem_matrix("eq", 1)
        assert m.shape == (2, 2)
        assert m.entry(0, 0) == 1
        assert m.entry(0, 1) == 0

    def test_entry_rejects_label_indices(self):
        m = problem_matrix("eq", 1)
        with pytest.raises(TypeError):
            m.entry(BitString("0"), BitString("0"))

    def test_rejects_bad_entries(self):
        with pytest.raises(ValueError):
            CommMatrix(
                rows=(BitString("0"), BitString("1")),
                cols=(BitString("0"), BitString("1")),
                entries=np.array([[2, 0], [0, 1]], dtype=np.int8),
            )

    def test_rejects_label_shape_mismatch(self):
        with pytest.raises(ValueError):
            CommMatrix(
                rows=(BitString("0"),),
                cols=(BitString("0"), BitString("1")),
                entries=np.zeros((2, 2), dtype=np.int8),
            )

    def test_defined_cells(self):
        m = problem_matrix("promise_eq", 2)
        ones = m.defined_cells(1)
        zeros = m.defined_cells(0)
        undef = m.defined_cells(UNDEFINED)
        assert len(ones) == 4  # the diagonal
        assert len(zeros) == 8  # distance-one pairs
        assert len(undef) == 4  # distance-two pairs

    def test_submatrix(self):
        m = problem_matrix("eq", 2)
        sub = m.submatrix([0, 1], [0, 1])
        assert sub.shape == (2, 2)
        assert sub.rows == (BitString("00"), BitString("01"))
        assert sub.entry(0, 0) == 1
        assert sub.entry(0, 1) == 0

    def test_csv_roundtrip_with_undefined(self):
        m = problem_matrix("promise_eq", 2)
        restored = CommMatrix.from_csv(m.to_csv())
        assert restored.rows == m.rows
        assert restored.cols == m.cols
        assert np.array_equal(restored.entries, m.entries)

    def test_csv_symbols(self):
        text = problem_matrix("promise_eq", 2).to_csv()
        body = text.strip().splitlines()[1:]
        symbols = set("".join(line.split(",", 1)[1] for line in body).replace(",", ""))
        assert symbols == {"0", "1", "U"}


class TestProblemMatrix:
    def test_eq_is_identity_pattern(self):
        m = problem_matrix("eq", 2)
        assert np.array_equal(m.entries, np.eye(4, dtype=np.int8))

    def test_disj_n1(self):
        m = problem_matrix("disj", 1)
        assert m.entries.tolist() == [[1, 1], [1, 0]]

    def test_promise_disj_undefined_only_outside_band(self):
        margin = Margin.from_text("1/4", 4)
        m = problem_matrix("promise_disj", 4, margin)
        undef = m.defined_cells(UNDEFINED)
        # only (1111, 1111) has intersection above the band
        assert undef == [(15, 15)]

    def test_promise_disj_requires_margin(self):
        with pytest.raises(ValueError):
            problem_matrix("promise_disj", 4)

    def test_margin_length_must_match(self):
        with pytest.raises(ValueError):
            problem_matrix("promise_disj", 4, Margin.from_text("1/4", 8))

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            problem_matrix("parity", 2)

    def test_size_cap(self):
        with pytest.raises(ValueError):
            problem_matrix("eq", 11)


class TestFoolingSet:
    def test_equality_mixed_clique(self):
        # the four diagonal ones conflict pairwise, and cells of opposite
        # value conflict with everything, so the greedy beats the plain
        # diagonal fooling set
        m = problem_matrix("eq", 2)
        found = greedy_fooling_set(m)
        assert len(found) == 6
        assert {(0, 0), (1, 1), (2, 2), (3, 3)} <= set(found)

    def test_promise_disj_band_beats_square_root(self):
        margin = Margin.from_text("1/4", 4)
        m = problem_matrix("promise_disj", 4, margin)
        found = greedy_fooling_set(m)
        assert len(found) >= 2**4

    def test_fooling_pairs_all_yes(self):
        margin = Margin.from_text("1/4", 4)
        pairs = fooling_pairs(margin)
        assert len(pairs) == len(weight_band(margin))
        assert all(y == ~x for x, y in pairs)

    def test_cross_refutation_witness(self):
        margin = Margin.from_text("1/4", 4)
        witness = find_cross_refutation(margin)
        assert witness is not None
        x, z = witness
        assert cross_pair_refutation(x, z, margin) is PromiseLabel.NO


class TestExactCc:
    @pytest.mark.parametrize(
        "kind,n,expected",
        [("eq", 1, 2), ("eq", 2, 3), ("disj", 1, 2), ("disj", 2, 3), ("disj", 3, 4)],
    )
    def test_total_problems(self, kind, n, expected):
        assert exact_deterministic_cc(problem_matrix(kind, n)) == expected

    def test_promise_disj_n4(self):
        margin = Margin.from_text("1/4", 4)
        m = problem_matrix("promise_disj", 4, margin)
        assert exact_deterministic_cc(m) == 5

    def test_promise_eq_n2(self):
        # the distance-two don't-cares let two bits suffice
        assert exact_deterministic_cc(problem_matrix("promise_eq", 2)) == 2

    def test_constant_matrix_is_free(self):
        m = CommMatrix(
            rows=(BitString("0"), BitString("1")),
            cols=(BitString("0"), BitString("1")),
            entries=np.ones((2, 2), dtype=np.int8),
        )
        assert exact_deterministic_cc(m) == 0

    def test_size_limit(self):
        m = problem_matrix("eq", 4)
        with pytest.raises(ValueError):
            exact_deterministic_cc(m, size_limit=8)

    def test_too_wide_promise_search_refuses(self):
        m = problem_matrix("promise_eq", 6)
        with pytest.raises(SearchTooWideError):
            exact_deterministic_cc(m)


class TestPartition:
    @pytest.mark.parametrize(
        "kind,n,value,expected",
        [
            ("eq", 1, 1, 2),
            ("eq", 1, 0, 2),
            ("eq", 2, 1, 4),
            ("eq", 2, 0, 4),
            ("disj", 2, 0, 3),
            ("disj", 3, 0, 7),
            ("disj", 3, 1, 8),
        ],
    )
    def test_known_counts(self, kind, n, value, expected):
        m = problem_matrix(kind, n)
        result = min_monochromatic_partition(m, value)
        assert result.count == expected
        assert verify_partition(m, value, result.rectangles)

    def test_all_ones_needs_one_rectangle(self):
        m = CommMatrix(
            rows=(BitString("0"), BitString("1")),
            cols=(BitString("0"), BitString("1")),
            entries=np.ones((2, 2), dtype=np.int8),
        )
        result = min_monochromatic_partition(m, 1)
        assert result.count == 1

    def test_no_cells_of_value(self):
        m = CommMatrix(
            rows=(BitString("0"),),
            cols=(BitString("0"),),
            entries=np.ones((1, 1), dtype=np.int8),
        )
        assert min_monochromatic_partition(m, 0).count == 0

    def test_band_complement_square(self):
        """Rows from the band against complement columns force one
        rectangle per fooling pair."""
        margin = Margin.from_text("1/4", 4)
        band = weight_band(margin)
        m = problem_matrix("promise_disj", 4, margin)
        rows = [m.rows.index(x) for x in band]
        cols = [m.cols.index(~x) for x in band]
        sub = m.submatrix(rows, cols)
        result = min_monochromatic_partition(sub, 1)
        assert result.count == len(band)
        assert verify_partition(sub, 1, result.rectangles)

    def test_cap_on_cells(self):
        m = problem_matrix("eq", 4)
        with pytest.raises(ValueError):
            min_monochromatic_partition(m, 0)  # 240 zero cells

    def test_rejects_bad_value(self):
        with pytest.raises(ValueError):
            min_monochromatic_partition(problem_matrix("eq", 1), 2)

    def test_rectangles_absorb_undefined_cells(self):
        m = problem_matrix("promise_eq", 4)
        result = min_monochromatic_partition(m, 1)
        assert verify_partition(m, 1, result.rectangles)
        # distance {1,3,4} neighbours merge through don't-cares
        assert result.count < 16


class TestVerifyPartition:
    def test_rejects_overlap(self):
        m = problem_matrix("eq", 1)
        rect = Rectangle(row_indices=(0,), col_indices=(0,))
        assert not verify_partition(m, 1, (rect, rect))

    def test_rejects_wrong_value(self):
        m = problem_matrix("eq", 1)
        rect = Rectangle(row_indices=(0,), col_indices=(1,))  # a zero cell
        assert not verify_partition(m, 1, (rect,))

    def test_rejects_incomplete_cover(self):
        m = problem_matrix("eq", 1)
        rect = Rectangle(row_indices=(0,), col_indices=(0,))
        assert not verify_partition(m, 1, (rect,))

    def test_accepts_hand_cover(self):
        m = problem_matrix("eq", 1)
        rects = (
            Rectangle(row_indices=(0,), col_indices=(0,)),
            Rectangle(row_indices=(1,), col_indices=(1,)),
        )
        assert verify_partition(m, 1, rects)


class TestRectangle:
    def test_sorts_indices(self):
        r = Rectangle(row_indices=(2, 0), col_indices=(1,))
        assert r.row_indices == (0, 2)

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            Rectangle(row_indices=(), col_indices=(0,))

    def test_cells(self):
        r = Rectangle(row_indices=(0, 1), col_indices=(2,))
        assert r.cells() == [(0, 2), (1, 2)]


class TestRectangleBound:
    def test_eq2_report(self):
        report = check_rectangle_bound(problem_matrix("eq", 2))
        assert report.to_record() == {"D": 3, "C0": 4, "C1": 4, "bound_ok": True}

    def test_disj2_report(self):
        report = check_rectangle_bound(problem_matrix("disj", 2))
        assert report.to_record() == {"D": 3, "C0": 3, "C1": 4, "bound_ok": True}

    def test_oversized_partitions_reported_as_none(self):
        margin = Margin.from_text("1/4", 4)
        report = check_rectangle_bound(problem_matrix("promise_disj", 4, margin))
        assert report.depth == 5
        assert report.zero_partition is None
        assert report.one_partition is None
        assert report.holds is True

    def test_all_unknown_when_search_too_wide(self):
        report = check_rectangle_bound(problem_matrix("promise_eq", 6))
        assert report.to_record() == {"D": None, "C0": None, "C1": None, "bound_ok": None}

    def test_json_is_sorted(self):
        report = check_rectangle_bound(problem_matrix("eq", 1))
        assert report.to_json() == '{"C0": 2, "C1": 2, "D": 2, "bound_ok": true}'
