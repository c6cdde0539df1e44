import pytest
from hypothesis import given
from hypothesis import strategies as st

from semimod.algebra.semigroup import (
    GapCoord,
    NumericalSemigroup,
    conductor,
    contains,
    decode,
    frobenius,
    gap_coords,
    gap_difference_is_gap,
    gaps,
    genus,
    lgap_less,
)
from semimod.exceptions import InvalidSemigroupError, SemimodInputError


def _brute_force_members(gamma, bound):
    return {
        r * gamma.alpha + s * gamma.beta
        for r in range(bound // gamma.alpha + 1)
        for s in range(bound // gamma.beta + 1)
        if r * gamma.alpha + s * gamma.beta < bound
    }


class TestNumericalSemigroup:
    def test_valid(self):
        gamma = NumericalSemigroup(5, 7)
        assert gamma.product == 35
        assert str(gamma) == "<5,7>"

    @pytest.mark.parametrize(
        "alpha,beta",
        [(4, 6), (1, 5), (7, 5), (5, 5), (0, 3)],
    )
    def test_invalid(self, alpha, beta):
        with pytest.raises(InvalidSemigroupError):
            NumericalSemigroup(alpha, beta)

    def test_invalid_is_input_error(self):
        with pytest.raises(SemimodInputError, match="not coprime"):
            NumericalSemigroup(4, 6)

    def test_overflow(self):
        with pytest.raises(InvalidSemigroupError, match="overflows"):
            NumericalSemigroup(2**40 + 1, 2**40 + 3)


class TestInvariants:
    def test_frobenius_and_conductor(self, gamma57):
        assert frobenius(gamma57) == 23
        assert conductor(gamma57) == 24

    def test_genus(self, gamma57):
        assert genus(gamma57) == 12
        assert genus(NumericalSemigroup(2, 3)) == 1


class TestGaps:
    def test_gaps_5_7(self, gamma57):
        assert gaps(gamma57) == [1, 2, 3, 4, 6, 8, 9, 11, 13, 16, 18, 23]

    def test_gaps_2_3(self):
        assert gaps(NumericalSemigroup(2, 3)) == [1]

    def test_gap_coords(self, gamma57):
        assert gap_coords(gamma57, 9) == GapCoord(1, 3)
        assert gap_coords(gamma57, 6) == GapCoord(3, 2)
        assert gap_coords(gamma57, 8) == GapCoord(4, 1)
        assert gap_coords(gamma57, 23) == GapCoord(1, 1)

    def test_gap_coords_of_member(self, gamma57):
        assert gap_coords(gamma57, 12) is None
        assert gap_coords(gamma57, 0) is None

    def test_gap_coords_of_negative(self, gamma57):
        coord = gap_coords(gamma57, -1)
        assert 1 <= coord.b <= gamma57.alpha
        assert decode(gamma57, coord) == -1

    def test_decode_roundtrip(self, gamma57):
        for gap in gaps(gamma57):
            assert decode(gamma57, gap_coords(gamma57, gap)) == gap

    def test_coords_are_positive(self):
        with pytest.raises(ValueError):
            GapCoord(0, 1)

    @given(
        st.sampled_from([(2, 3), (3, 4), (3, 5), (4, 7), (5, 7), (5, 8), (7, 9)]),
        st.integers(min_value=-20, max_value=80),
    )
    def test_contains_matches_brute_force(self, pair, ell):
        gamma = NumericalSemigroup(*pair)
        members = _brute_force_members(gamma, 100)
        assert contains(gamma, ell) == (ell in members)


class TestLOrder:
    def test_lgap_less(self):
        assert lgap_less(GapCoord(4, 1), GapCoord(3, 2)) is True
        assert lgap_less(GapCoord(1, 3), GapCoord(3, 2)) is False
        assert lgap_less(GapCoord(5, 1), GapCoord(4, 1)) is None

    def test_gap_difference_is_gap(self, gamma57):
        # 9 - 8 = 1 is a gap, 8 - 3 = 5 is not
        assert gap_difference_is_gap(gamma57, 9, 8)
        assert not gap_difference_is_gap(gamma57, 8, 3)

    def test_gap_difference_matches_contains(self, gamma57):
        gap_list = gaps(gamma57)
        for first in gap_list:
            for second in gap_list:
                if first != second:
                    assert gap_difference_is_gap(gamma57, first, second) == (
                        not contains(gamma57, abs(first - second))
                    )

    def test_gap_difference_needs_gaps(self, gamma57):
        with pytest.raises(ValueError):
            gap_difference_is_gap(gamma57, 5, 8)
