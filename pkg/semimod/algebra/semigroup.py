"""
Arithmetic of a two-generated numerical semigroup <alpha, beta>.

Membership and gap coordinates use the characterisation of non-elements
ell = alpha*beta - a*alpha - b*beta with a, b >= 1, so no element table is
ever allocated.
"""

from dataclasses import dataclass
from math import gcd
from typing import List, Optional

from semimod.constants import MAX_SEMIGROUP_PRODUCT
from semimod.exceptions import InvalidSemigroupError


@dataclass(frozen=True)
class NumericalSemigroup:
    """The semigroup generated by two coprime integers 2 <= alpha < beta."""

    alpha: int
    beta: int

    def __post_init__(self):
        alpha, beta = self.alpha, self.beta
        if not isinstance(alpha, int) or not isinstance(beta, int):
            raise InvalidSemigroupError(alpha, beta, "generators must be integers")
        if alpha < 2:
            raise InvalidSemigroupError(alpha, beta, "alpha must be at least 2")
        if alpha >= beta:
            raise InvalidSemigroupError(alpha, beta, "alpha must be smaller than beta")
        if gcd(alpha, beta) != 1:
            raise InvalidSemigroupError(alpha, beta, "generators are not coprime")
        if alpha * beta > MAX_SEMIGROUP_PRODUCT:
            raise InvalidSemigroupError(
                alpha, beta, "alpha * beta overflows the machine word"
            )

    @property
    def product(self) -> int:
        return self.alpha * self.beta

    def __str__(self) -> str:
        return f"<{self.alpha},{self.beta}>"


@dataclass(frozen=True, order=True)
class GapCoord:
    """Coordinates (a, b) of the non-element alpha*beta - a*alpha - b*beta."""

    a: int
    b: int

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise ValueError(
                f"Gap coordinates must be positive, got ({self.a},{self.b})"
            )

    def as_tuple(self):
        return (self.a, self.b)


def frobenius(gamma: NumericalSemigroup) -> int:
    """Largest gap, alpha*beta - alpha - beta."""
    return gamma.product - gamma.alpha - gamma.beta


def conductor(gamma: NumericalSemigroup) -> int:
    """Smallest c such that every integer >= c lies in the semigroup."""
    return frobenius(gamma) + 1


def genus(gamma: NumericalSemigroup) -> int:
    """Number of gaps."""
    return (gamma.alpha - 1) * (gamma.beta - 1) // 2


def decode(gamma: NumericalSemigroup, coord: GapCoord) -> int:
    return gamma.product - coord.a * gamma.alpha - coord.b * gamma.beta


def gap_coords(gamma: NumericalSemigroup, ell: int) -> Optional[GapCoord]:
    """
    Return the coordinates (a, b) with ell = alpha*beta - a*alpha - b*beta,
    or None when ell belongs to the semigroup.

    For a gap, 1 <= a <= beta - 1 and 1 <= b <= alpha - 1. Negative integers
    are never elements; their representation is the one with 1 <= b <= alpha.
    """
    alpha, beta = gamma.alpha, gamma.beta
    for b in range(1, alpha + 1):
        rest = gamma.product - ell - b * beta
        if rest > 0 and rest % alpha == 0:
            return GapCoord(rest // alpha, b)
    return None


def contains(gamma: NumericalSemigroup, ell: int) -> bool:
    """
    Membership test: ell is in <alpha, beta> iff ell >= 0 and there is no
    b in 1..alpha-1 making alpha*beta - ell - b*beta a positive multiple of alpha.
    """
    if ell < 0:
        return False
    alpha, beta = gamma.alpha, gamma.beta
    for b in range(1, alpha):
        rest = gamma.product - ell - b * beta
        if rest <= 0:
            break
        if rest % alpha == 0:
            return False
    return True


def gaps(gamma: NumericalSemigroup) -> List[int]:
    """All positive integers outside the semigroup, ascending."""
    return [ell for ell in range(1, conductor(gamma)) if not contains(gamma, ell)]


def lgap_less(g1: GapCoord, g2: GapCoord) -> Optional[bool]:
    """
    Compare two gaps in the partial order <_L.

    Returns:
        True if g1 <_L g2, False if g2 <_L g1, None if incomparable.
    """
    if g1.a > g2.a and g1.b < g2.b:
        return True
    if g2.a > g1.a and g2.b < g1.b:
        return False
    return None


def gap_difference_is_gap(gamma: NumericalSemigroup, ell1: int, ell2: int) -> bool:
    """
    Decide whether the positive difference of two gaps is a gap, using that
    it is one exactly when their coordinates are strictly comparable.
    """
    c1, c2 = gap_coords(gamma, ell1), gap_coords(gamma, ell2)
    if c1 is None or c2 is None:
        raise ValueError(f"{ell1} and {ell2} must both be gaps of {gamma}")
    return lgap_less(c1, c2) is not None
