"""Wedge model of so(n, C): realization, matrices, spectrum extraction."""

from fractions import Fraction

import pytest

from canonical_lie import (
    InvalidSpectrum,
    NotSkew,
    RatMatrix,
    Spectrum,
    TooSmall,
    grading_of,
    matrix_of,
    normal_form,
    realize,
    spectrum_from_matrix,
    wedge_basis,
)
from helpers import grade_dims_by_counting, spec

SAMPLED = [
    spec(3, ("0", 3)),
    spec(3, ("0", 1), ("1", 1)),
    spec(4, ("1/2", 2)),
    spec(4, ("1/2", 1), ("3/2", 1)),
    spec(5, ("0", 3), ("1", 1)),
    spec(5, ("0", 1), ("1", 1), ("2", 1)),
    spec(6, ("1/2", 2), ("3/2", 1)),
    spec(6, ("0", 2), ("1/2", 1), ("1", 1)),  # mixed parity, still a valid algebra
]


class TestSpectrum:
    def test_validation(self):
        with pytest.raises(InvalidSpectrum):
            spec(2, ("0", 2))
        with pytest.raises(InvalidSpectrum):
            spec(4, ("1/2", 1))  # accounts for 2 of 4 dimensions
        with pytest.raises(InvalidSpectrum):
            spec(4, ("-1/2", 2))
        with pytest.raises(InvalidSpectrum):
            Spectrum(4, ((Fraction(1, 2), 1), (Fraction(1, 2), 1)))

    def test_entries_sorted_ascending(self):
        s = Spectrum(5, ((Fraction(1), 1), (Fraction(0), 3)))
        assert s.magnitudes == (Fraction(0), Fraction(1))

    def test_json_round_trip(self):
        s = spec(4, ("1/2", 1), ("3/2", 1))
        assert Spectrum.from_json(s.to_json()) == s

    def test_json_schema_errors(self):
        with pytest.raises(InvalidSpectrum):
            Spectrum.from_json({"n": 4})
        with pytest.raises(InvalidSpectrum):
            Spectrum.from_json({"n": 4, "entries": [{"lambda": 0.5, "mult": 2}]})
        with pytest.raises(InvalidSpectrum):
            Spectrum.from_json({"n": 4, "entries": [{"lambda": "1/2"}]})


class TestWedgeBasis:
    @pytest.mark.parametrize("s", SAMPLED, ids=str)
    def test_pair_count_and_order(self, s):
        wb = wedge_basis(s)
        assert len(wb.pairs) == s.n * (s.n - 1) // 2
        assert list(wb.pairs) == sorted(wb.pairs)
        for idx, (a, b) in enumerate(wb.pairs):
            assert wb.pair_index(a, b) == idx

    @pytest.mark.parametrize("s", SAMPLED, ids=str)
    def test_labels_descending_and_gram_pairing(self, s):
        wb = wedge_basis(s)
        lams = [lam for lam, _ in wb.eigen_labels]
        assert lams == sorted(lams, reverse=True)
        for a in range(s.n):
            for b in range(s.n):
                lam_a, p = wb.eigen_labels[a]
                lam_b, q = wb.eigen_labels[b]
                expected = 1 if (lam_a + lam_b == 0 and p == q) else 0
                assert wb.gram[a, b] == expected


class TestRealize:
    def test_trivial_so3(self):
        t = realize(spec(3, ("0", 3)))
        assert t.dim == 3
        assert set(t.grade) == {Fraction(0)}
        # cross-product-like: each bracket of distinct generators is the third
        assert sum(1 for v in t.bracket_row(0, 1) if v != 0) == 1

    def test_so4_grading(self):
        dims = grading_of(realize(spec(4, ("1/2", 2)))).dims()
        assert dims == {Fraction(-1): 1, Fraction(0): 4, Fraction(1): 1}

    def test_so3_integer_grading(self):
        dims = grading_of(realize(spec(3, ("0", 1), ("1", 1)))).dims()
        assert dims == {Fraction(-1): 1, Fraction(0): 1, Fraction(1): 1}

    @pytest.mark.parametrize("s", SAMPLED, ids=str)
    def test_grading_dims_match_pair_counting(self, s):
        assert grading_of(realize(s)).dims() == grade_dims_by_counting(s)

    @pytest.mark.parametrize("s", SAMPLED, ids=str)
    def test_total_dimension(self, s):
        dims = grading_of(realize(s)).dims()
        assert sum(dims.values()) == s.n * (s.n - 1) // 2

    @pytest.mark.parametrize("s", SAMPLED, ids=str)
    def test_grade_one_counting_identity(self, s):
        # dim g_1 = sum over -max < lam <= 1/2 of m_lam * m_{1-lam},
        # with the wedge-square adjustment binom(m, 2) at lam = 1/2
        mult = {}
        for lam, m in s.entries:
            mult[lam] = m
            if lam != 0:
                mult[-lam] = m
        total = 0
        for lam, m in mult.items():
            if lam > Fraction(1, 2):
                continue
            other = 1 - lam
            if lam == other:
                total += m * (m - 1) // 2
            elif other in mult:
                total += m * mult[other]
        assert grading_of(realize(s)).dim_at(1) == total


class TestMatrixOf:
    @pytest.mark.parametrize("s", SAMPLED, ids=str)
    def test_skew_for_gram(self, s):
        wb = wedge_basis(s)
        g = wb.gram
        for idx in range(wb.dim):
            x = matrix_of(s, idx)
            assert x.transpose() @ g + g @ x == RatMatrix.zeros(s.n, s.n)

    def test_annihilates_orthogonal_vectors(self):
        s = spec(3, ("0", 3))
        x = matrix_of(s, 0)  # wedge of directions 0 and 1
        e2 = RatMatrix([[0], [0], [1]])
        assert x @ e2 == RatMatrix.zeros(3, 1)

    @pytest.mark.parametrize("s", SAMPLED, ids=str)
    def test_ad_diagonal_scales_by_grade(self, s):
        wb = wedge_basis(s)
        diag = RatMatrix(
            [
                [wb.eigen_labels[i][0] if i == j else 0 for j in range(s.n)]
                for i in range(s.n)
            ]
        )
        t = realize(s)
        for idx in range(wb.dim):
            x = matrix_of(s, idx)
            assert diag @ x - x @ diag == x.scaled(t.grade[idx])

    @pytest.mark.parametrize("s", [spec(3, ("0", 1), ("1", 1)), spec(4, ("1/2", 2))], ids=str)
    def test_commutators_match_structure_constants(self, s):
        t = realize(s)
        mats = [matrix_of(s, i) for i in range(t.dim)]
        for i in range(t.dim):
            for j in range(t.dim):
                comm = mats[i] @ mats[j] - mats[j] @ mats[i]
                expected = RatMatrix.zeros(s.n, s.n)
                for k, c in enumerate(t.bracket_row(i, j)):
                    if c != 0:
                        expected = expected + mats[k].scaled(c)
                assert comm == expected

    def test_index_out_of_range(self):
        with pytest.raises(IndexError):
            matrix_of(spec(3, ("0", 3)), 3)


class TestSpectrumFromMatrix:
    def test_zero_matrix(self):
        assert spectrum_from_matrix(RatMatrix.zeros(3, 3)) == spec(3, ("0", 3))

    def test_single_rotation_block(self):
        m = RatMatrix([[0, -1, 0], [1, 0, 0], [0, 0, 0]])
        assert spectrum_from_matrix(m) == spec(3, ("0", 1), ("1", 1))

    def test_pythagorean_conjugation_invariance(self):
        # rotate the (1, 2) coordinate plane so the conjugate actually moves
        m = RatMatrix([[0, -1, 0], [1, 0, 0], [0, 0, 0]])
        g = RatMatrix(
            [[1, 0, 0], [0, Fraction(3, 5), Fraction(-4, 5)], [0, Fraction(4, 5), Fraction(3, 5)]]
        )
        assert g @ g.transpose() == RatMatrix.identity(3)
        conjugated = g @ m @ g.transpose()
        assert conjugated != m
        assert spectrum_from_matrix(conjugated) == spec(3, ("0", 1), ("1", 1))

    def test_non_half_integral_returns_none(self):
        m = RatMatrix([[0, Fraction(-1, 3), 0], [Fraction(1, 3), 0, 0], [0, 0, 0]])
        assert spectrum_from_matrix(m) is None

    def test_irrational_magnitudes_return_none(self):
        # eigenvalues 0, +/- i*sqrt(3): every half-integral kernel probe misses
        m = RatMatrix([[0, 1, 1], [-1, 0, 1], [-1, -1, 0]])
        assert spectrum_from_matrix(m) is None

    def test_not_skew(self):
        with pytest.raises(NotSkew):
            spectrum_from_matrix(RatMatrix.identity(3))
        with pytest.raises(NotSkew):
            spectrum_from_matrix(RatMatrix.zeros(2, 3))

    def test_too_small(self):
        with pytest.raises(TooSmall):
            spectrum_from_matrix(RatMatrix.zeros(2, 2))

    def test_large_magnitude_not_missed(self):
        # bound must not truncate below the top magnitude
        s = spec(3, ("0", 1), ("3/2", 1))
        assert spectrum_from_matrix(normal_form(s)) == s


class TestNormalForm:
    def test_zero_spectrum(self):
        assert normal_form(spec(4, ("0", 4))) == RatMatrix.zeros(4, 4)

    def test_block_layout(self):
        m = normal_form(spec(3, ("0", 1), ("1", 1)))
        assert m == RatMatrix([[0, -1, 0], [1, 0, 0], [0, 0, 0]])

    @pytest.mark.parametrize("s", SAMPLED, ids=str)
    def test_round_trip(self, s):
        assert spectrum_from_matrix(normal_form(s)) == s
