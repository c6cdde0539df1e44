"""
Selfdual classes: detection, palindromic matrix forms, the census against
the closed counting formulas, and the parity maps between <alpha, beta> and
<alpha + 1, beta> (resp. <alpha, beta + 1>).

Selfduality is always decided by comparing a class with its dual; the form
classification is diagnostic and drives the parity maps.
"""

from dataclasses import dataclass, field
from enum import Enum
from math import comb
from typing import Dict, Iterator, List, Optional, Sequence

import pandas as pd

from semimod.constants import CENSUS_COLUMNS
from semimod.exceptions import (
    ParityMismatchError,
    UnrecognizedSelfdualFormError,
)

from .duality import dual
from .pathmatrix import PathMatrix, canonical_matrix, enumerate_matrices, matrix_equiv
from .semigroup import NumericalSemigroup
from .semimodule import LeanSet
from .syzygy import dual_matrix


class FormKind(str, Enum):
    ODD_PALINDROME = "OddPalindrome"
    EVEN_EVEN_BLOCKS = "EvenEvenBlocks"
    ODD_ODD_BLOCKS = "OddOddBlocks"
    NOT_SELFDUAL = "NotSelfdual"


class ParityDirection(str, Enum):
    ALPHA_UP = "alpha_up"
    ALPHA_DOWN = "alpha_down"
    BETA_UP = "beta_up"
    BETA_DOWN = "beta_down"


@dataclass(frozen=True)
class SelfdualForm:
    """
    Palindromic form matched by `matrix.rotate(rotation)`.

    `pivot` is the central column of the form: y_l for the odd palindrome and
    the odd-odd blocks, x_{l-1} for the even-even blocks. `block` is l.
    """

    kind: FormKind
    pivot: Optional[int] = None
    rotation: Optional[int] = None
    block: Optional[int] = None


def _palindrome(values: Sequence[int]) -> bool:
    return tuple(values) == tuple(reversed(values))


def _is_odd_palindrome(m: PathMatrix) -> bool:
    return m.columns % 2 == 1 and _palindrome(m.top) and _palindrome(m.bottom[:-1])


def _is_even_even_blocks(m: PathMatrix) -> bool:
    return m.columns % 2 == 0 and _palindrome(m.top) and _palindrome(m.bottom[:-1])


def _is_odd_odd_blocks(m: PathMatrix) -> bool:
    return m.columns % 2 == 0 and _palindrome(m.top[1:]) and _palindrome(m.bottom)


def is_selfdual(lean: LeanSet) -> bool:
    return dual(lean).lean == lean


def is_selfdual_matrix(m: PathMatrix) -> bool:
    return matrix_equiv(m, dual_matrix(m))


def _find_rotation(m: PathMatrix, matches) -> Optional[int]:
    for k in range(m.columns):
        if matches(m.rotate(k)):
            return k
    return None


def classify_form(m: PathMatrix) -> SelfdualForm:
    """
    Search the rotations of `m` for the odd palindrome form (odd column
    count), then the even-even and the odd-odd block forms (even count).
    """
    n = m.columns
    half = n // 2
    if n % 2 == 1:
        k = _find_rotation(m, _is_odd_palindrome)
        if k is not None:
            return SelfdualForm(FormKind.ODD_PALINDROME, half, k, half)
        return SelfdualForm(FormKind.NOT_SELFDUAL)

    k = _find_rotation(m, _is_even_even_blocks)
    if k is not None:
        return SelfdualForm(FormKind.EVEN_EVEN_BLOCKS, half - 1, k, half)
    k = _find_rotation(m, _is_odd_odd_blocks)
    if k is not None:
        return SelfdualForm(FormKind.ODD_ODD_BLOCKS, half, k, half)
    return SelfdualForm(FormKind.NOT_SELFDUAL)


def selfdual_total(gamma: NumericalSemigroup) -> int:
    """C(floor(alpha/2) + floor(beta/2), floor(alpha/2))."""
    half_alpha, half_beta = gamma.alpha // 2, gamma.beta // 2
    return comb(half_alpha + half_beta, half_alpha)


def expected_census(gamma: NumericalSemigroup) -> Dict[int, int]:
    """Number of selfdual classes per generator count, from the closed formulas."""
    alpha, beta = gamma.alpha, gamma.beta
    half_alpha, half_beta = alpha // 2, beta // 2
    counts: Dict[int, int] = {}

    if alpha % 2 == 1 and beta % 2 == 1:
        for ell in range(half_alpha + 1):
            counts[2 * ell + 1] = comb(half_alpha, ell) * comb(half_beta, ell)
    elif alpha % 2 == 0:
        for ell in range(half_alpha):
            counts[2 * ell + 1] = comb(half_alpha - 1, ell) * comb(half_beta, ell)
        for ell in range(1, half_alpha + 1):
            counts[2 * ell] = comb(half_alpha - 1, ell - 1) * comb(half_beta, ell)
    else:
        for ell in range(half_alpha + 1):
            counts[2 * ell + 1] = comb(half_alpha, ell) * comb(half_beta - 1, ell)
        for ell in range(1, half_alpha + 1):
            counts[2 * ell] = comb(half_alpha, ell) * comb(half_beta - 1, ell - 1)

    return {count: number for count, number in sorted(counts.items()) if number}


def selfdual_matrices(gamma: NumericalSemigroup) -> Iterator[PathMatrix]:
    for m in enumerate_matrices(gamma):
        if is_selfdual_matrix(m):
            yield m


@dataclass
class CensusResult:
    """Observed and expected selfdual counts of one semigroup."""

    gamma: NumericalSemigroup
    observed: Dict[int, int] = field(default_factory=dict)
    expected: Dict[int, int] = field(default_factory=dict)

    @property
    def total_observed(self) -> int:
        return sum(self.observed.values())

    @property
    def total_expected(self) -> int:
        return selfdual_total(self.gamma)

    @property
    def generator_counts(self) -> List[int]:
        return sorted(set(self.observed) | set(self.expected))

    @property
    def matches(self) -> bool:
        return (
            self.observed == self.expected
            and self.total_observed == self.total_expected
        )

    def rows(self) -> List[list]:
        return [
            [
                self.gamma.alpha,
                self.gamma.beta,
                count,
                self.observed.get(count, 0),
                self.expected.get(count, 0),
            ]
            for count in self.generator_counts
        ]

    def mismatches(self) -> List[list]:
        return [row for row in self.rows() if row[3] != row[4]]

    def to_dataframe(self) -> pd.DataFrame:
        return pd.DataFrame(self.rows(), columns=CENSUS_COLUMNS)


@dataclass
class CensusReport:
    """Census results of several semigroups, ordered by (alpha, beta)."""

    results: List[CensusResult] = field(default_factory=list)

    @property
    def matches(self) -> bool:
        return all(result.matches for result in self.results)

    def mismatches(self) -> List[list]:
        return [row for result in self.results for row in result.mismatches()]

    def to_dataframe(self) -> pd.DataFrame:
        return pd.DataFrame(
            [row for result in self.results for row in result.rows()],
            columns=CENSUS_COLUMNS,
        )


def observed_census(gamma: NumericalSemigroup) -> Dict[int, int]:
    """Number of selfdual classes per generator count, by enumeration."""
    observed: Dict[int, int] = {}
    for m in selfdual_matrices(gamma):
        observed[m.columns] = observed.get(m.columns, 0) + 1
    return dict(sorted(observed.items()))


def census(gamma: NumericalSemigroup) -> CensusResult:
    """Count the selfdual classes of `gamma` by generator count."""
    return CensusResult(gamma, observed_census(gamma), expected_census(gamma))


def parity_invariant_check(gamma: NumericalSemigroup) -> bool:
    """For alpha and beta odd, every selfdual class has an odd generator count."""
    if gamma.alpha % 2 == 0 or gamma.beta % 2 == 0:
        raise ParityMismatchError(
            f"The odd generator count law needs alpha and beta odd, got {gamma}"
        )
    return all(m.columns % 2 == 1 for m in selfdual_matrices(gamma))


def _rotation_or_raise(m: PathMatrix, matches, form: str) -> PathMatrix:
    k = _find_rotation(m, matches)
    if k is None:
        raise UnrecognizedSelfdualFormError(f"{m} has no rotation in {form} form")
    return m.rotate(k)


def _alpha_up(m: PathMatrix) -> PathMatrix:
    if m.columns % 2 == 1:
        r = _rotation_or_raise(m, _is_odd_palindrome, "odd palindrome")
        centre = r.columns // 2
        top = r.top[:centre] + (r.top[centre] + 1,) + r.top[centre + 1 :]
        return PathMatrix(top, r.bottom)

    half = m.columns // 2
    r = _rotation_or_raise(
        m,
        lambda rotated: _is_even_even_blocks(rotated)
        and rotated.bottom[half - 1] % 2 == 0,
        "even-even block",
    )
    split = r.bottom[half - 1] // 2
    top = r.top[:half] + (1,) + r.top[half:]
    bottom = r.bottom[: half - 1] + (split, split) + r.bottom[half:]
    return PathMatrix(top, bottom)


def _alpha_down(m: PathMatrix) -> PathMatrix:
    r = _rotation_or_raise(m, _is_odd_palindrome, "odd palindrome")
    centre = r.columns // 2
    if r.top[centre] > 1:
        top = r.top[:centre] + (r.top[centre] - 1,) + r.top[centre + 1 :]
        return PathMatrix(top, r.bottom)
    if centre == 0:
        raise UnrecognizedSelfdualFormError(f"{m} has no preimage under alpha_up")

    top = r.top[:centre] + r.top[centre + 1 :]
    bottom = (
        r.bottom[: centre - 1] + (2 * r.bottom[centre - 1],) + r.bottom[centre + 1 :]
    )
    return PathMatrix(top, bottom)


def _beta_up(m: PathMatrix) -> PathMatrix:
    if m.columns % 2 == 1:
        r = _rotation_or_raise(m, _is_odd_palindrome, "odd palindrome")
        return PathMatrix(r.top, r.bottom[:-1] + (r.bottom[-1] + 1,))

    r = _rotation_or_raise(
        m,
        lambda rotated: _is_odd_odd_blocks(rotated) and rotated.top[0] % 2 == 0,
        "odd-odd block",
    )
    split = r.top[0] // 2
    return PathMatrix((split,) + r.top[1:] + (split,), r.bottom + (1,))


def _beta_down(m: PathMatrix) -> PathMatrix:
    r = _rotation_or_raise(m, _is_odd_palindrome, "odd palindrome")
    if r.bottom[-1] > 1:
        return PathMatrix(r.top, r.bottom[:-1] + (r.bottom[-1] - 1,))
    if r.columns == 1:
        raise UnrecognizedSelfdualFormError(f"{m} has no preimage under beta_up")
    return PathMatrix((2 * r.top[0],) + r.top[1:-1], r.bottom[:-1])


_PARITY_MAPS = {
    ParityDirection.ALPHA_UP: _alpha_up,
    ParityDirection.ALPHA_DOWN: _alpha_down,
    ParityDirection.BETA_UP: _beta_up,
    ParityDirection.BETA_DOWN: _beta_down,
}


def _check_parity(gamma: NumericalSemigroup, direction: ParityDirection):
    alpha_even, beta_even = gamma.alpha % 2 == 0, gamma.beta % 2 == 0
    if direction is ParityDirection.ALPHA_UP and not alpha_even:
        raise ParityMismatchError(f"alpha_up needs alpha even, got {gamma}")
    if direction is ParityDirection.BETA_UP and not beta_even:
        raise ParityMismatchError(f"beta_up needs beta even, got {gamma}")
    if direction in (ParityDirection.ALPHA_DOWN, ParityDirection.BETA_DOWN) and (
        alpha_even or beta_even
    ):
        raise ParityMismatchError(
            f"{direction.value} needs alpha and beta odd, got {gamma}"
        )


def parity_bijection(m: PathMatrix, direction) -> PathMatrix:
    """
    Map the matrix of a selfdual class to the matrix of a selfdual class of
    the semigroup with alpha (or beta) moved by one.

    Returns:
        The canonical matrix of the image class.

    Raises:
        ParityMismatchError: when the semigroup has the wrong parity.
        UnrecognizedSelfdualFormError: when `m` is in no usable form.
    """
    direction = ParityDirection(direction)
    _check_parity(m.semigroup, direction)
    return canonical_matrix(_PARITY_MAPS[direction](m))
