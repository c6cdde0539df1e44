"""
The syzygy Syz(delta): elements of delta with more than one presentation
i + gamma, i.e. the union of the pairwise intersections (Gamma + i) n (Gamma + i').

On matrices Syz shifts the top row cyclically to the left by one column
and dualizing reverses the columns, so together they generate a dihedral
group acting on the classes with a fixed number of generators.
"""

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Tuple

from semimod.exceptions import DegenerateLeanSetError, InvalidGeneratorCountError

from .duality import dual
from .pathmatrix import (
    PathMatrix,
    enumerate_matrices,
    lean_to_matrix,
    matrix_equiv,
    matrix_to_lean,
)
from .semigroup import NumericalSemigroup, conductor, contains
from .semimodule import (
    LeanSet,
    SemimoduleLike,
    ShiftedSemimodule,
    as_shifted,
    from_window,
    generate,
)


@dataclass(frozen=True)
class FundamentalCouple:
    """A lean set I together with the degrees J of its syzygy generators."""

    lean: LeanSet
    J: Tuple[int, ...]

    def __post_init__(self):
        if len(self.J) != len(self.lean):
            raise ValueError(
                f"A fundamental couple needs |J| = |I|, got {len(self.J)} and "
                f"{len(self.lean)}"
            )

    def complement(self) -> Tuple[int, ...]:
        """alpha*beta - j for every j in J, positionally."""
        return tuple(self.lean.gamma.product - j for j in self.J)


def syzygy_generators(lean: LeanSet) -> FundamentalCouple:
    """
    J = [(beta - a_1) alpha] + [alpha*beta - a_{k+1} alpha - b_k beta
    for k = 1..n-1] + [(alpha - b_n) beta].
    """
    if lean.n == 0:
        raise DegenerateLeanSetError("syzygy_generators")

    gamma = lean.gamma
    alpha, beta = gamma.alpha, gamma.beta
    a, b = lean.a_values, lean.b_values
    J = (
        [(beta - a[0]) * alpha]
        + [gamma.product - a[k + 1] * alpha - b[k] * beta for k in range(lean.n - 1)]
        + [(alpha - b[-1]) * beta]
    )
    return FundamentalCouple(lean, tuple(J))


def syzygy(lean: LeanSet) -> ShiftedSemimodule:
    """The semimodule generated by J."""
    return generate(lean.gamma, syzygy_generators(lean).J)


def syzygy_oracle(delta: SemimoduleLike) -> ShiftedSemimodule:
    """
    Scan the union of pairwise intersections (Gamma + i) n (Gamma + i') on
    [min, max + conductor); every larger integer lies in all translates.
    """
    delta = as_shifted(delta)
    gens = delta.generators
    if len(gens) < 2:
        raise DegenerateLeanSetError("syzygy_oracle")

    gamma = delta.gamma
    hi = max(gens) + conductor(gamma)
    members = [
        x
        for x in range(min(gens), hi)
        if any(
            contains(gamma, x - i) and contains(gamma, x - j)
            for i, j in combinations(gens, 2)
        )
    ]
    return from_window(gamma, members, hi)


def syzygy_matrix(m: PathMatrix) -> PathMatrix:
    """Top row shifted cyclically left by one, bottom row unchanged."""
    return PathMatrix(m.top[1:] + m.top[:1], m.bottom)


def syzygy_matrix_inverse(m: PathMatrix) -> PathMatrix:
    return PathMatrix(m.top[-1:] + m.top[:-1], m.bottom)


def dual_matrix(m: PathMatrix) -> PathMatrix:
    """top = (y_n, ..., y_0), bottom = (x_{n-1}, ..., x_0, x_n)."""
    return PathMatrix(
        tuple(reversed(m.top)), tuple(reversed(m.bottom[:-1])) + m.bottom[-1:]
    )


def syzygy_power(m: PathMatrix, k: int) -> PathMatrix:
    """Syz^k on matrices; negative k applies the inverse."""
    step = syzygy_matrix if k >= 0 else syzygy_matrix_inverse
    for _ in range(abs(k) % m.columns):
        m = step(m)
    return m


def syzygy_class(lean: LeanSet) -> LeanSet:
    """Class of Syz(delta) through the matrix rule; the class of Gamma is fixed."""
    lean_out, _ = matrix_to_lean(syzygy_matrix(lean_to_matrix(lean)))
    return lean_out


def _matrix_period(m: PathMatrix) -> int:
    current = m
    for k in range(1, m.columns + 1):
        current = syzygy_matrix(current)
        if matrix_equiv(current, m):
            return k
    return m.columns


def syzygy_period(lean: LeanSet) -> int:
    """Least k >= 1 with Syz^k(delta) isomorphic to delta."""
    return _matrix_period(lean_to_matrix(lean))


@dataclass
class DihedralClassResult:
    lean: LeanSet
    syzygy_order: bool
    dual_involution: bool
    dual_conjugation: bool
    period: int

    @property
    def passed(self) -> bool:
        return self.syzygy_order and self.dual_involution and self.dual_conjugation


@dataclass
class DihedralReport:
    """Relations of the dihedral action, checked on every class with m generators."""

    gamma: NumericalSemigroup
    generator_count: int
    results: List[DihedralClassResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results)

    @property
    def failures(self) -> List[DihedralClassResult]:
        return [result for result in self.results if not result.passed]

    def period_histogram(self) -> Dict[int, int]:
        histogram: Dict[int, int] = {}
        for result in self.results:
            histogram[result.period] = histogram.get(result.period, 0) + 1
        return dict(sorted(histogram.items()))


def _check_class(m: PathMatrix) -> DihedralClassResult:
    columns = m.columns
    lean, _ = matrix_to_lean(m)
    syz_dual = dual_matrix(syzygy_matrix(dual_matrix(m)))

    period = _matrix_period(m)
    return DihedralClassResult(
        lean=lean,
        syzygy_order=matrix_equiv(syzygy_power(m, columns), m)
        and columns % period == 0,
        dual_involution=matrix_equiv(dual_matrix(dual_matrix(m)), m),
        dual_conjugation=matrix_equiv(syz_dual, syzygy_matrix_inverse(m)),
        period=period,
    )


def dihedral_check(gamma: NumericalSemigroup, generator_count: int) -> DihedralReport:
    """
    For every class with `generator_count` generators check Syz^m = id,
    dual o dual = id and dual o Syz o dual = Syz^-1, all up to isomorphism.
    """
    if generator_count < 3:
        raise InvalidGeneratorCountError(
            f"The dihedral relations need at least 3 generators, got {generator_count}"
        )

    report = DihedralReport(gamma, generator_count)
    for m in enumerate_matrices(gamma):
        if m.columns == generator_count:
            report.results.append(_check_class(m))
    return report


@dataclass(frozen=True)
class OrbitEntry:
    word: str
    lean: LeanSet


def dihedral_orbit(lean: LeanSet) -> List[OrbitEntry]:
    """
    Syz^k(delta) and Syz^k(delta*) for k = 0..|I|-1, as 2|I| entries in
    that order. Entries repeat when the orbit is smaller than the group.
    """
    m = lean_to_matrix(lean)
    dual_m = dual_matrix(m)
    rotations = []
    words = []
    for k in range(m.columns):
        rotations.append(syzygy_power(m, k))
        words.append("id" if k == 0 else f"syz^{k}")
    for k in range(m.columns):
        rotations.append(syzygy_power(dual_m, k))
        words.append("dual" if k == 0 else f"syz^{k}.dual")
    return [
        OrbitEntry(word, matrix_to_lean(matrix)[0])
        for word, matrix in zip(words, rotations)
    ]


def syzygy_dual_correspondence(lean: LeanSet) -> bool:
    """{alpha*beta - j : j in J} equals the generators of the dual formula."""
    return sorted(syzygy_generators(lean).complement()) == sorted(
        dual(lean).raw_generators
    )
