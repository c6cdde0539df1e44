import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from semimod.algebra.pathmatrix import enumerate_classes
from semimod.algebra.semigroup import GapCoord, NumericalSemigroup, contains
from semimod.algebra.semimodule import (
    LeanSet,
    SemimoduleClass,
    ShiftedSemimodule,
    as_shifted,
    conductor,
    from_window,
    generate,
    hom,
    intersection_window,
    is_isomorphic,
    member,
    minimal_generators_from_window,
    normalize,
    union,
)
from semimod.exceptions import NonCanonicalLeanSetError, SemimodInputError


class TestLeanSet:
    def test_from_gaps_sorts_in_l_order(self, gamma57):
        lean = LeanSet.from_gaps(gamma57, [9, 6, 8])
        assert lean.gens == (0, 8, 6, 9)
        assert lean.coords == (GapCoord(4, 1), GapCoord(3, 2), GapCoord(1, 3))
        assert lean.a_values == (4, 3, 1)
        assert lean.b_values == (1, 2, 3)
        assert lean.n == 3
        assert len(lean) == 4
        assert str(lean) == "{0,8,6,9}"

    def test_from_gaps_rejects_members(self, gamma57):
        with pytest.raises(NonCanonicalLeanSetError, match="not a gap"):
            LeanSet.from_gaps(gamma57, [5])

    def test_incomparable_gaps(self, gamma57):
        # 3 = (5,1) and 8 = (4,1) share b
        with pytest.raises(NonCanonicalLeanSetError):
            LeanSet.from_gaps(gamma57, [3, 8])

    def test_direct_construction_checks_order(self, gamma57):
        with pytest.raises(NonCanonicalLeanSetError):
            LeanSet(gamma57, (0, 9, 8), (GapCoord(1, 3), GapCoord(4, 1)))

    def test_needs_zero(self, gamma57):
        with pytest.raises(NonCanonicalLeanSetError):
            LeanSet(gamma57, (8,), ())

    def test_as_set(self, example_lean):
        assert example_lean.as_set() == frozenset({0, 6, 8, 9})


class TestNormalize:
    def test_already_lean(self, gamma57, example_lean):
        assert normalize(gamma57, [0, 9, 6, 8]) == (example_lean, 0)

    def test_shift(self, gamma57, example_lean):
        assert normalize(gamma57, [10, 19, 16, 18]) == (example_lean, 10)

    def test_drops_redundant_generators(self, gamma57, example_lean):
        # 14 = 9 + 5 and 13 = 6 + 7
        assert normalize(gamma57, [0, 9, 6, 8, 14, 13]) == (example_lean, 0)

    def test_drops_incomparable_generator(self, gamma57):
        lean, shift = normalize(gamma57, [0, 3, 8])
        assert lean.gens == (0, 3)
        assert shift == 0

    def test_empty(self, gamma57):
        with pytest.raises(SemimodInputError):
            normalize(gamma57, [])

    def test_generate(self, gamma57, example_lean):
        delta = generate(gamma57, [3, 12, 9, 11])
        assert delta == ShiftedSemimodule(SemimoduleClass(example_lean), 3)
        assert delta.generators == (3, 11, 9, 12)
        assert delta.minimum == 3


class TestMembership:
    def test_member(self, example_lean):
        assert member(example_lean, 0)
        assert member(example_lean, 8)
        assert member(example_lean, 13)
        assert not member(example_lean, 1)
        assert not member(example_lean, -5)

    @given(st.integers(min_value=-10, max_value=60), st.integers(-20, 20))
    def test_member_of_shift(self, x, d):
        gamma = NumericalSemigroup(5, 7)
        delta = as_shifted(LeanSet.from_gaps(gamma, [9, 6, 8])).shifted(d)
        expected = any(contains(gamma, x - d - gen) for gen in (0, 8, 6, 9))
        assert delta.member(x) == expected

    def test_conductor(self, gamma57, example_lean):
        assert conductor(LeanSet.from_gaps(gamma57, [])) == 24
        delta = as_shifted(example_lean)
        c = conductor(delta)
        assert all(delta.member(x) for x in range(c, c + 40))
        assert not delta.member(c - 1)

    def test_window(self, example_lean):
        assert as_shifted(example_lean).window(0, 10) == frozenset({0, 5, 6, 7, 8, 9})

    def test_as_shifted_rejects_other_types(self):
        with pytest.raises(TypeError):
            as_shifted([0, 1])


class TestOperations:
    def test_from_window(self, gamma57, example_lean):
        delta = as_shifted(example_lean)
        rebuilt = from_window(gamma57, delta.window(-5, 40), 40)
        assert rebuilt == delta

    def test_union(self, gamma57):
        delta = union(LeanSet.from_gaps(gamma57, [8]), generate(gamma57, [6, 9]))
        assert delta.lean == LeanSet.from_gaps(gamma57, [9, 6, 8])

    def test_intersection_window(self, gamma57, example_lean):
        gamma_itself = LeanSet.from_gaps(gamma57, [])
        assert intersection_window(example_lean, gamma_itself, 0, 15) == frozenset(
            {0, 5, 7, 10, 12, 14}
        )

    def test_is_isomorphic(self, gamma57, example_lean):
        assert is_isomorphic(example_lean, generate(gamma57, [4, 13, 10, 12]))
        assert not is_isomorphic(example_lean, LeanSet.from_gaps(gamma57, [9]))

    def test_minimal_generators_from_window(self, gamma57, example_lean):
        delta = generate(gamma57, [4, 13, 10, 12])
        assert sorted(minimal_generators_from_window(delta, -10, 60)) == sorted(
            delta.generators
        )


GAMMA45_CLASSES = list(enumerate_classes(NumericalSemigroup(4, 5)))


class TestHom:
    def test_hom_of_gamma_is_gamma(self, gamma57):
        gamma_lean = LeanSet.from_gaps(gamma57, [])
        assert hom(gamma_lean, gamma_lean) == as_shifted(gamma_lean)

    def test_hom_into_gamma(self, gamma57, example_lean, example_dual_lean):
        result = hom(example_lean, LeanSet.from_gaps(gamma57, []))
        assert result == ShiftedSemimodule(SemimoduleClass(example_dual_lean), 19)
        assert sorted(result.generators) == [19, 20, 21, 22]

    def test_endomorphisms(self, example_lean):
        delta = as_shifted(example_lean)
        endo = hom(example_lean, example_lean)

        expected = frozenset(
            c
            for c in range(-40, 60)
            if all(delta.member(c + gen) for gen in delta.generators)
        )
        assert endo.window(-40, 60) == expected
        assert endo.member(0)

    def test_result_is_closed_under_gamma(self, gamma57, example_lean):
        result = hom(example_lean, generate(gamma57, [3, 4]))
        for c in result.window(-30, 60):
            assert result.member(c + gamma57.alpha)
            assert result.member(c + gamma57.beta)

    @settings(max_examples=40, deadline=None)
    @given(
        st.sampled_from(GAMMA45_CLASSES),
        st.sampled_from(GAMMA45_CLASSES),
        st.integers(-10, 10),
        st.integers(-10, 10),
    )
    def test_shift_law(self, source, target, d, d2):
        shifted = hom(as_shifted(source).shifted(d), as_shifted(target).shifted(d2))
        assert shifted == hom(source, target).shifted(d2 - d)

    def test_hom_needs_same_semigroup(self, gamma57):
        other = LeanSet.from_gaps(NumericalSemigroup(3, 5), [])
        with pytest.raises(SemimodInputError):
            hom(LeanSet.from_gaps(gamma57, []), other)
