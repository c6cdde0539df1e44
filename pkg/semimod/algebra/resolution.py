"""
Degree data of the minimal graded free resolution of M_I = sum R t^i over
R = F[t^alpha, t^beta].

The first syzygy module is generated by n + 1 bivectors f_0, ..., f_n whose
degrees are the set J. The relations among them form a module isomorphic to
M_I shifted by a_1 alpha, so the resolution is periodic of period 2 up to
that shift. Only degrees are computed; no field arithmetic is involved.
"""

from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, List, Tuple

from semimod.exceptions import DegenerateLeanSetError, SemimodInputError

from .duality import dual_oracle
from .semigroup import contains
from .semimodule import LeanSet, ShiftedSemimodule, as_shifted, generate


@dataclass(frozen=True)
class Bivector:
    """
    Syzygy t^exp_a e_{pos_a} - t^exp_b e_{pos_b}, homogeneous of `degree`.
    """

    pos_a: int
    pos_b: int
    exp_a: int
    exp_b: int
    degree: int

    def is_homogeneous(self, lean: LeanSet) -> bool:
        return (
            lean.gens[self.pos_a] + self.exp_a == self.degree
            and lean.gens[self.pos_b] + self.exp_b == self.degree
        )

    def exponents_in(self, lean: LeanSet) -> bool:
        return contains(lean.gamma, self.exp_a) and contains(lean.gamma, self.exp_b)


@dataclass(frozen=True)
class ResolutionDegrees:
    """Generator degrees of F_0, F_1, ...; steps[s + 2] = steps[s] + shift."""

    lean: LeanSet
    steps: Tuple[Tuple[int, ...], ...]

    @property
    def shift(self) -> int:
        """a_1 alpha, or 0 for the free module."""
        if self.lean.n == 0:
            return 0
        return self.lean.a_values[0] * self.lean.gamma.alpha

    @property
    def betti_numbers(self) -> List[int]:
        return [len(step) for step in self.steps]

    def is_periodic(self) -> bool:
        return all(
            tuple(degree + self.shift for degree in self.steps[s]) == self.steps[s + 2]
            for s in range(len(self.steps) - 2)
        )


def _require_generators(lean: LeanSet, operation: str):
    if lean.n == 0:
        raise DegenerateLeanSetError(operation)


def bivector_syzygies(lean: LeanSet) -> List[Bivector]:
    """
    f_0 on positions (0, 1), f_k on (k, k + 1) for k = 1..n-1 and f_n on
    (0, n). deg f_k is the k-th entry of J.
    """
    _require_generators(lean, "bivector_syzygies")

    alpha, beta = lean.gamma.alpha, lean.gamma.beta
    a, b, gens, n = lean.a_values, lean.b_values, lean.gens, lean.n
    first_degree = (beta - a[0]) * alpha
    bivectors = [Bivector(0, 1, first_degree, b[0] * beta, first_degree)]
    for k in range(1, n):
        exp_a = (a[k - 1] - a[k]) * alpha
        bivectors.append(
            Bivector(k, k + 1, exp_a, (b[k] - b[k - 1]) * beta, gens[k] + exp_a)
        )
    bivectors.append(
        Bivector(0, n, (alpha - b[-1]) * beta, a[-1] * alpha, (alpha - b[-1]) * beta)
    )
    return bivectors


def resolution_degrees(lean: LeanSet, num_steps: int) -> ResolutionDegrees:
    """
    steps[0] = I, steps[1] = J and steps[s] = steps[s - 2] + a_1 alpha.

    The class of Gamma is free, so its resolution is the single step (0,)
    whatever `num_steps` asks for.
    """
    if num_steps < 1:
        raise SemimodInputError(f"num_steps must be positive, got {num_steps}")
    if lean.n == 0:
        return ResolutionDegrees(lean, ((0,),))

    steps = [tuple(lean.gens), tuple(f.degree for f in bivector_syzygies(lean))]
    shift = lean.a_values[0] * lean.gamma.alpha
    while len(steps) < num_steps:
        steps.append(tuple(degree + shift for degree in steps[-2]))
    return ResolutionDegrees(lean, tuple(steps[:num_steps]))


def second_syzygy_exponents(lean: LeanSet) -> List[int]:
    """
    Exponents h with g_k = g_0 t^{h_k} for every g in the kernel of the map
    sending (g_0, ..., g_n) to sum g_k f_k: h_0 = 0,
    h_k = b_k beta - (a_1 - a_{k+1}) alpha for k = 1..n-1, h_n = b_n beta - a_1 alpha.
    """
    _require_generators(lean, "second_syzygy_exponents")

    alpha, beta = lean.gamma.alpha, lean.gamma.beta
    a, b = lean.a_values, lean.b_values
    return (
        [0]
        + [b[k - 1] * beta - (a[0] - a[k]) * alpha for k in range(1, lean.n)]
        + [b[-1] * beta - a[0] * alpha]
    )


def kernel_relations_balance(lean: LeanSet) -> bool:
    """
    Every position of F_0 is hit by exactly two bivectors, and with g_k
    weighted by t^{h_k} the two contributions cancel in equal degree.
    """
    weights = second_syzygy_exponents(lean)
    hits: Dict[int, List[int]] = defaultdict(list)
    for k, f in enumerate(bivector_syzygies(lean)):
        hits[f.pos_a].append(weights[k] + f.exp_a)
        hits[f.pos_b].append(weights[k] + f.exp_b)

    return sorted(hits) == list(range(len(lean))) and all(
        len(degrees) == 2 and degrees[0] == degrees[1] for degrees in hits.values()
    )


def hat_semimodule(lean: LeanSet) -> ShiftedSemimodule:
    """The semimodule generated by the exponents h of `second_syzygy_exponents`."""
    return generate(lean.gamma, second_syzygy_exponents(lean))


def hat_duality_check(lean: LeanSet) -> bool:
    """
    The dual of `hat_semimodule(lean)` is delta + a_1 alpha, compared on the
    window [-alpha*beta, 2 alpha*beta + a_1 alpha).
    """
    _require_generators(lean, "hat_duality_check")

    shift = lean.a_values[0] * lean.gamma.alpha
    hat_dual = dual_oracle(hat_semimodule(lean))
    expected = as_shifted(lean).shifted(shift)
    product = lean.gamma.product
    lo, hi = -product, 2 * product + shift
    return hat_dual.window(lo, hi) == expected.window(lo, hi)
