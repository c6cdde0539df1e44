"""
Semimodules over <alpha, beta> stored through their minimal generators.

A class of isomorphic semimodules is represented by its lean set: the
minimal generators of the member with minimum 0, ordered increasingly with
respect to <_L. A concrete semimodule is such a class plus a shift.
"""

from dataclasses import dataclass
from typing import Iterable, List, Tuple, Union

from semimod.exceptions import NonCanonicalLeanSetError, SemimodInputError

from .semigroup import (
    GapCoord,
    NumericalSemigroup,
    conductor as semigroup_conductor,
    contains,
    decode,
    gap_coords,
)


@dataclass(frozen=True)
class LeanSet:
    """
    Canonical minimal generating set {0, i_1, ..., i_n}.

    `coords[k - 1]` holds the gap coordinates of `gens[k]`; the coordinates
    are strictly decreasing in a and strictly increasing in b.
    """

    gamma: NumericalSemigroup
    gens: Tuple[int, ...]
    coords: Tuple[GapCoord, ...]

    def __post_init__(self):
        if not self.gens or self.gens[0] != 0:
            raise NonCanonicalLeanSetError(
                f"A lean set starts with 0, got {list(self.gens)}"
            )
        if len(self.coords) != len(self.gens) - 1:
            raise NonCanonicalLeanSetError(
                "Every nonzero generator needs exactly one gap coordinate"
            )
        for gen, coord in zip(self.gens[1:], self.coords):
            if gen < 1 or decode(self.gamma, coord) != gen:
                raise NonCanonicalLeanSetError(
                    f"{gen} is not the gap with coordinates {coord.as_tuple()} "
                    f"of {self.gamma}"
                )
        for left, right in zip(self.coords, self.coords[1:]):
            if not (left.a > right.a and left.b < right.b):
                raise NonCanonicalLeanSetError(
                    f"Generators {list(self.gens)} are not increasing in <_L"
                )

    @classmethod
    def from_gaps(cls, gamma: NumericalSemigroup, gaps: Iterable[int]) -> "LeanSet":
        """
        Build the lean set {0} + gaps, sorting the gaps increasingly in <_L.

        Raises:
            NonCanonicalLeanSetError: when an entry is not a gap or two
                entries are incomparable.
        """
        pairs = []
        for gap in set(gaps):
            coord = gap_coords(gamma, gap) if gap > 0 else None
            if coord is None:
                raise NonCanonicalLeanSetError(f"{gap} is not a gap of {gamma}")
            pairs.append((gap, coord))
        pairs.sort(key=lambda pair: -pair[1].a)
        return cls(
            gamma,
            (0,) + tuple(gap for gap, _ in pairs),
            tuple(coord for _, coord in pairs),
        )

    @property
    def n(self) -> int:
        """Number of nonzero generators."""
        return len(self.gens) - 1

    @property
    def a_values(self) -> Tuple[int, ...]:
        return tuple(coord.a for coord in self.coords)

    @property
    def b_values(self) -> Tuple[int, ...]:
        return tuple(coord.b for coord in self.coords)

    def as_set(self) -> frozenset:
        return frozenset(self.gens)

    def __len__(self) -> int:
        return len(self.gens)

    def __str__(self) -> str:
        return "{" + ",".join(str(gen) for gen in self.gens) + "}"


@dataclass(frozen=True)
class SemimoduleClass:
    """Isomorphism class of semimodules, given by its lean set."""

    lean: LeanSet

    @property
    def gamma(self) -> NumericalSemigroup:
        return self.lean.gamma

    @property
    def generators(self) -> Tuple[int, ...]:
        return self.lean.gens

    def member(self, x: int) -> bool:
        return any(contains(self.gamma, x - gen) for gen in self.lean.gens)


@dataclass(frozen=True)
class ShiftedSemimodule:
    """The concrete semimodule `semimodule_class + shift`."""

    semimodule_class: SemimoduleClass
    shift: int = 0

    @property
    def gamma(self) -> NumericalSemigroup:
        return self.semimodule_class.gamma

    @property
    def lean(self) -> LeanSet:
        return self.semimodule_class.lean

    @property
    def generators(self) -> Tuple[int, ...]:
        return tuple(gen + self.shift for gen in self.semimodule_class.generators)

    @property
    def minimum(self) -> int:
        return self.shift

    def member(self, x: int) -> bool:
        return self.semimodule_class.member(x - self.shift)

    def shifted(self, d: int) -> "ShiftedSemimodule":
        return ShiftedSemimodule(self.semimodule_class, self.shift + d)

    def window(self, lo: int, hi: int) -> frozenset:
        """Members x with lo <= x < hi."""
        return frozenset(x for x in range(lo, hi) if self.member(x))


SemimoduleLike = Union[LeanSet, SemimoduleClass, ShiftedSemimodule]


def as_shifted(delta: SemimoduleLike) -> ShiftedSemimodule:
    if isinstance(delta, ShiftedSemimodule):
        return delta
    if isinstance(delta, SemimoduleClass):
        return ShiftedSemimodule(delta)
    if isinstance(delta, LeanSet):
        return ShiftedSemimodule(SemimoduleClass(delta))
    raise TypeError(f"Expected a semimodule, got {type(delta).__name__}")


def normalize(
    gamma: NumericalSemigroup, generators: Iterable[int]
) -> Tuple[LeanSet, int]:
    """
    Minimal generators of the semimodule generated by `generators`.

    Returns:
        (lean set of the semimodule shifted to minimum 0, the shift).
    """
    values = sorted(set(generators))
    if not values:
        raise SemimodInputError("A semimodule needs at least one generator")

    shift = values[0]
    relative = [value - shift for value in values]
    kept = [
        x
        for x in relative
        if not any(y != x and contains(gamma, x - y) for y in relative)
    ]
    return LeanSet.from_gaps(gamma, kept[1:]), shift


def generate(gamma: NumericalSemigroup, generators: Iterable[int]) -> ShiftedSemimodule:
    """The semimodule generated by `generators`, as class plus shift."""
    lean, shift = normalize(gamma, generators)
    return ShiftedSemimodule(SemimoduleClass(lean), shift)


def from_window(
    gamma: NumericalSemigroup, members: Iterable[int], ceiling: int
) -> ShiftedSemimodule:
    """
    The semimodule whose members below `ceiling` are `members` and which
    contains every integer >= ceiling.
    """
    return generate(gamma, list(members) + list(range(ceiling, ceiling + gamma.alpha)))


def member(delta: SemimoduleLike, x: int) -> bool:
    return as_shifted(delta).member(x)


def conductor(delta: SemimoduleLike) -> int:
    """Smallest c such that every integer >= c lies in delta."""
    delta = as_shifted(delta)
    x = delta.minimum + semigroup_conductor(delta.gamma) - 1
    while x >= delta.minimum:
        if not delta.member(x):
            return x + 1
        x -= 1
    return delta.minimum


def hom(delta: SemimoduleLike, delta2: SemimoduleLike) -> ShiftedSemimodule:
    """
    Hom(delta, delta2) = {c : c + delta is contained in delta2}.

    Candidates below min(delta2) - max generator of delta are impossible and
    every c from conductor(delta2) - min(delta) on is included, so only the
    window between the two is scanned.
    """
    delta, delta2 = as_shifted(delta), as_shifted(delta2)
    if delta.gamma != delta2.gamma:
        raise SemimodInputError("Hom needs two semimodules over the same semigroup")

    lo = delta2.minimum - max(delta.generators)
    hi = conductor(delta2) - delta.minimum
    members = [
        c
        for c in range(lo, hi)
        if all(delta2.member(c + gen) for gen in delta.generators)
    ]
    return from_window(delta.gamma, members, hi)


def union(delta1: SemimoduleLike, delta2: SemimoduleLike) -> ShiftedSemimodule:
    delta1, delta2 = as_shifted(delta1), as_shifted(delta2)
    return generate(delta1.gamma, delta1.generators + delta2.generators)


def intersection_window(
    delta1: SemimoduleLike, delta2: SemimoduleLike, lo: int, hi: int
) -> frozenset:
    return as_shifted(delta1).window(lo, hi) & as_shifted(delta2).window(lo, hi)


def is_isomorphic(d1: SemimoduleLike, d2: SemimoduleLike) -> bool:
    """Semimodules are isomorphic iff they are shifts of each other."""
    return as_shifted(d1).lean == as_shifted(d2).lean


def minimal_generators_from_window(
    delta: SemimoduleLike, lo: int, hi: int
) -> List[int]:
    """
    Members x of the window whose predecessors x - alpha and x - beta are
    both outside delta; used to cross-check `normalize`.
    """
    delta = as_shifted(delta)
    alpha, beta = delta.gamma.alpha, delta.gamma.beta
    return [
        x
        for x in range(lo, hi)
        if delta.member(x)
        and not delta.member(x - alpha)
        and not delta.member(x - beta)
    ]
