import pytest

from semimod.algebra.duality import dual
from semimod.algebra.pathmatrix import enumerate_classes
from semimod.algebra.resolution import (
    Bivector,
    bivector_syzygies,
    hat_duality_check,
    hat_semimodule,
    kernel_relations_balance,
    resolution_degrees,
    second_syzygy_exponents,
)
from semimod.algebra.semigroup import NumericalSemigroup
from semimod.algebra.semimodule import LeanSet
from semimod.exceptions import DegenerateLeanSetError, SemimodInputError


class TestBivectors:
    def test_example(self, example_lean):
        assert bivector_syzygies(example_lean) == [
            Bivector(0, 1, 15, 7, 15),
            Bivector(1, 2, 5, 7, 13),
            Bivector(2, 3, 10, 7, 16),
            Bivector(0, 3, 14, 5, 14),
        ]

    def test_homogeneous_with_exponents_in_gamma(self, example_lean):
        for f in bivector_syzygies(example_lean):
            assert f.is_homogeneous(example_lean)
            assert f.exponents_in(example_lean)

    def test_degenerate(self, gamma57):
        with pytest.raises(DegenerateLeanSetError):
            bivector_syzygies(LeanSet.from_gaps(gamma57, []))


class TestResolutionDegrees:
    def test_example(self, example_lean):
        res = resolution_degrees(example_lean, 4)
        assert res.steps == (
            (0, 8, 6, 9),
            (15, 13, 16, 14),
            (20, 28, 26, 29),
            (35, 33, 36, 34),
        )
        assert res.shift == 20
        assert res.betti_numbers == [4, 4, 4, 4]
        assert res.is_periodic()

    def test_single_step(self, example_lean):
        assert resolution_degrees(example_lean, 1).steps == ((0, 8, 6, 9),)

    def test_free_module(self, gamma57):
        res = resolution_degrees(LeanSet.from_gaps(gamma57, []), 5)
        assert res.steps == ((0,),)
        assert res.shift == 0
        assert res.is_periodic()

    @pytest.mark.parametrize("num_steps", [0, -3])
    def test_rejects_non_positive_steps(self, example_lean, num_steps):
        with pytest.raises(SemimodInputError):
            resolution_degrees(example_lean, num_steps)

    def test_first_syzygy_matches_dual(self, example_lean):
        res = resolution_degrees(example_lean, 2)
        product = example_lean.gamma.product
        assert sorted(product - j for j in res.steps[1]) == sorted(
            dual(example_lean).raw_generators
        )


class TestSecondSyzygies:
    def test_exponents(self, example_lean):
        assert second_syzygy_exponents(example_lean) == [0, 2, -1, 1]

    def test_hat_semimodule_is_dual_class(self, example_lean, example_dual_lean):
        hat = hat_semimodule(example_lean)
        assert hat.lean == example_dual_lean
        assert hat.shift == -1

    def test_balance(self, example_lean):
        assert kernel_relations_balance(example_lean)

    def test_hat_duality(self, example_lean):
        assert hat_duality_check(example_lean)

    @pytest.mark.parametrize("pair", [(3, 4), (3, 5), (4, 5)])
    def test_every_class(self, pair):
        for lean in enumerate_classes(NumericalSemigroup(*pair)):
            if lean.n > 0:
                assert kernel_relations_balance(lean)
                assert hat_duality_check(lean)
                assert resolution_degrees(lean, 6).is_periodic()
