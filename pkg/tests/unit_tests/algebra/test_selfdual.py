import pytest

from semimod.algebra.pathmatrix import PathMatrix, lean_to_matrix, matrix_equiv
from semimod.algebra.selfdual import (
    CensusReport,
    FormKind,
    ParityDirection,
    census,
    classify_form,
    expected_census,
    is_selfdual,
    is_selfdual_matrix,
    observed_census,
    parity_bijection,
    parity_invariant_check,
    selfdual_matrices,
    selfdual_total,
)
from semimod.algebra.semigroup import NumericalSemigroup
from semimod.algebra.semimodule import LeanSet
from semimod.constants import CENSUS_COLUMNS
from semimod.exceptions import ParityMismatchError

CENSUS = {
    (5, 7): {1: 1, 3: 6, 5: 3},
    (4, 7): {1: 1, 2: 3, 3: 3, 4: 3},
    (3, 4): {1: 1, 2: 1, 3: 1},
    (3, 5): {1: 1, 3: 2},
    (2, 3): {1: 1, 2: 1},
}


@pytest.fixture
def palindrome():
    return PathMatrix((1, 3, 1), (1, 1, 5))


class TestSelfdual:
    def test_palindrome_class(self, gamma57, palindrome):
        lean = LeanSet.from_gaps(gamma57, [18, 2])
        assert lean.gens == (0, 18, 2)
        assert lean_to_matrix(lean) == palindrome
        assert is_selfdual(lean)
        assert is_selfdual_matrix(palindrome)

    def test_example_is_not_selfdual(self, example_lean):
        assert not is_selfdual(example_lean)
        assert not is_selfdual_matrix(lean_to_matrix(example_lean))

    def test_gamma_is_selfdual(self, gamma57):
        assert is_selfdual(LeanSet.from_gaps(gamma57, []))

    def test_consecutive_gaps_are_not_selfdual(self, example_dual_lean):
        # its dual is {0, 6, 8, 9}
        assert not is_selfdual(example_dual_lean)


class TestClassifyForm:
    def test_odd_palindrome(self, palindrome):
        form = classify_form(palindrome)
        assert form.kind is FormKind.ODD_PALINDROME
        assert form.rotation == 0
        assert form.pivot == 1
        assert form.block == 1

    def test_odd_palindrome_in_rotation(self, palindrome):
        form = classify_form(palindrome.rotate(1))
        assert form.kind is FormKind.ODD_PALINDROME
        assert form.rotation == 2

    def test_not_selfdual(self, example_lean):
        form = classify_form(lean_to_matrix(example_lean))
        assert form.kind is FormKind.NOT_SELFDUAL
        assert form.rotation is None

    def test_single_column(self):
        assert classify_form(PathMatrix((5,), (7,))).kind is FormKind.ODD_PALINDROME

    def test_even_even_blocks(self):
        m = PathMatrix((2, 2), (3, 4))
        assert is_selfdual_matrix(m)
        form = classify_form(m)
        assert form.kind is FormKind.EVEN_EVEN_BLOCKS
        assert (form.pivot, form.rotation, form.block) == (0, 0, 1)

    def test_odd_odd_blocks(self):
        m = PathMatrix((2, 1), (2, 2))
        assert is_selfdual_matrix(m)
        form = classify_form(m)
        assert form.kind is FormKind.ODD_ODD_BLOCKS
        assert (form.pivot, form.rotation, form.block) == (1, 0, 1)


class TestCensus:
    @pytest.mark.parametrize("pair, expected", list(CENSUS.items()))
    def test_observed(self, pair, expected):
        assert observed_census(NumericalSemigroup(*pair)) == expected

    @pytest.mark.parametrize("pair, expected", list(CENSUS.items()))
    def test_expected(self, pair, expected):
        assert expected_census(NumericalSemigroup(*pair)) == expected

    @pytest.mark.parametrize("pair", list(CENSUS))
    def test_total(self, pair):
        gamma = NumericalSemigroup(*pair)
        assert selfdual_total(gamma) == sum(CENSUS[pair].values())

    def test_result(self, gamma57):
        result = census(gamma57)
        assert result.matches
        assert result.total_observed == result.total_expected == 10
        assert result.generator_counts == [1, 3, 5]
        assert result.mismatches() == []
        assert result.rows() == [[5, 7, 1, 1, 1], [5, 7, 3, 6, 6], [5, 7, 5, 3, 3]]

    def test_mismatch_rows(self, gamma57):
        result = census(gamma57)
        result.expected = {1: 1, 3: 5, 5: 3}
        assert not result.matches
        assert result.mismatches() == [[5, 7, 3, 6, 5]]

    def test_report(self, gamma57):
        report = CensusReport([census(gamma57), census(NumericalSemigroup(2, 3))])
        assert report.matches
        df = report.to_dataframe()
        assert list(df.columns) == CENSUS_COLUMNS
        assert len(df) == 5


class TestParity:
    def test_odd_generator_counts(self, gamma57):
        assert parity_invariant_check(gamma57)
        assert parity_invariant_check(NumericalSemigroup(3, 5))

    def test_invariant_needs_odd_pair(self):
        with pytest.raises(ParityMismatchError):
            parity_invariant_check(NumericalSemigroup(3, 4))

    def test_alpha_up(self):
        assert parity_bijection(PathMatrix((4,), (7,)), "alpha_up") == PathMatrix(
            (5,), (7,)
        )

    def test_beta_up(self):
        image = parity_bijection(PathMatrix((3,), (4,)), ParityDirection.BETA_UP)
        assert image == PathMatrix((3,), (5,))

    def test_alpha_down_and_back(self, palindrome):
        image = parity_bijection(palindrome, ParityDirection.ALPHA_DOWN)
        assert image.semigroup == NumericalSemigroup(4, 7)
        assert is_selfdual_matrix(image)
        back = parity_bijection(image, ParityDirection.ALPHA_UP)
        assert matrix_equiv(back, palindrome)

    def test_alpha_down_inverts_alpha_up_on_every_class(self):
        matrices = list(selfdual_matrices(NumericalSemigroup(4, 7)))
        assert len(matrices) == 10

        for m in matrices:
            image = parity_bijection(m, ParityDirection.ALPHA_UP)
            assert image.semigroup == NumericalSemigroup(5, 7)
            assert parity_bijection(image, ParityDirection.ALPHA_DOWN) == m, str(m)

    def test_wrong_parity(self, palindrome):
        with pytest.raises(ParityMismatchError):
            parity_bijection(palindrome, "alpha_up")
        with pytest.raises(ParityMismatchError):
            parity_bijection(PathMatrix((4,), (7,)), "alpha_down")

    def test_unknown_direction(self, palindrome):
        with pytest.raises(ValueError):
            parity_bijection(palindrome, "sideways")
