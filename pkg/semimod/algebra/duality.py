"""
The dual of a semimodule, Hom(delta, Gamma) = {c : c + delta in Gamma}.

`dual` uses the closed formula in terms of the gap coordinates of the lean
set; `dual_oracle` intersects the translates Gamma - i by brute force and
serves as independent ground truth.
"""

from dataclasses import dataclass
from typing import List, Tuple

from semimod.exceptions import NonCanonicalLeanSetError

from .semigroup import contains
from .semimodule import (
    LeanSet,
    SemimoduleClass,
    SemimoduleLike,
    ShiftedSemimodule,
    as_shifted,
    from_window,
    normalize,
    union,
)


@dataclass(frozen=True)
class DualResult:
    """
    Generators of the dual as given by the closed formula, together with the
    normalized class and shift of the semimodule they generate.
    """

    raw_generators: Tuple[int, ...]
    semimodule_class: SemimoduleClass
    shift: int

    @property
    def lean(self) -> LeanSet:
        return self.semimodule_class.lean

    def as_shifted(self) -> ShiftedSemimodule:
        return ShiftedSemimodule(self.semimodule_class, self.shift)


def _require_lean(lean) -> LeanSet:
    if not isinstance(lean, LeanSet):
        raise NonCanonicalLeanSetError(
            f"Expected a canonical LeanSet, got {type(lean).__name__}; "
            "use normalize() first"
        )
    return lean


def dual_generators(lean: LeanSet) -> List[int]:
    """
    [a_1 alpha] + [a_{k+1} alpha + b_k beta for k = 1..n-1] + [b_n beta],
    or [0] for the lean set {0}.
    """
    lean = _require_lean(lean)
    if lean.n == 0:
        return [0]

    alpha, beta = lean.gamma.alpha, lean.gamma.beta
    a, b = lean.a_values, lean.b_values
    return (
        [a[0] * alpha]
        + [a[k + 1] * alpha + b[k] * beta for k in range(lean.n - 1)]
        + [b[-1] * beta]
    )


def dual(lean: LeanSet) -> DualResult:
    raw = dual_generators(lean)
    dual_lean, shift = normalize(lean.gamma, raw)
    return DualResult(tuple(raw), SemimoduleClass(dual_lean), shift)


def dual_of(delta: SemimoduleLike) -> ShiftedSemimodule:
    """Dual of a concrete semimodule, using (delta + d)* = delta* - d."""
    delta = as_shifted(delta)
    return dual(delta.lean).as_shifted().shifted(-delta.shift)


def dual_oracle(delta: SemimoduleLike) -> ShiftedSemimodule:
    """
    Intersection of the translates Gamma - g over the generators g, scanned
    on [-max g, alpha*beta - min g); above the window every c qualifies.
    """
    delta = as_shifted(delta)
    gamma = delta.gamma
    gens = delta.generators
    lo, hi = -max(gens), gamma.product - min(gens)
    members = [c for c in range(lo, hi) if all(contains(gamma, c + g) for g in gens)]
    return from_window(gamma, members, hi)


def hat_generators(lean: LeanSet) -> List[int]:
    """
    {0} followed by the generators of dual(lean) - a_1 alpha, reordered as
    alpha*beta - (a_1 - a_{n-k+2}) alpha - (alpha - b_{n-k+1}) beta, k = 1..n,
    with a_{n+1} = 0.
    """
    lean = _require_lean(lean)
    if lean.n == 0:
        return [0]

    gamma, n = lean.gamma, lean.n
    alpha, beta = gamma.alpha, gamma.beta
    a = lean.a_values + (0,)
    b = lean.b_values
    # a[k - 1] and b[k - 1] hold a_k and b_k
    return [0] + [
        gamma.product - (a[0] - a[n - k + 1]) * alpha - (alpha - b[n - k]) * beta
        for k in range(1, n + 1)
    ]


def dual_dual_check(lean: LeanSet) -> bool:
    """
    Check that dualizing twice returns the class of `lean`, and that the
    intermediate class is the one generated by `hat_generators(lean)`.
    """
    first = dual(lean)
    hat_lean, _ = normalize(lean.gamma, hat_generators(lean))
    if hat_lean != first.lean:
        return False
    return dual(first.lean).lean == lean


def _default_window(delta: ShiftedSemimodule, *others: ShiftedSemimodule):
    product = delta.gamma.product
    shifts = [delta.shift] + [other.shift for other in others]
    return min(shifts) - product, max(shifts) + 2 * product


def dual_shift_check(delta: SemimoduleLike, d: int) -> bool:
    """(delta + d)* = delta* - d, compared on a bounded window."""
    delta = as_shifted(delta)
    left = dual_oracle(delta.shifted(d))
    right = dual_oracle(delta).shifted(-d)
    lo, hi = _default_window(delta, delta.shifted(d))
    return left.window(lo, hi) == right.window(lo, hi)


def dual_union_check(delta1: SemimoduleLike, delta2: SemimoduleLike) -> bool:
    """(delta1 U delta2)* = delta1* n delta2*, compared on a bounded window."""
    delta1, delta2 = as_shifted(delta1), as_shifted(delta2)
    lo, hi = _default_window(delta1, delta2)
    left = dual_oracle(union(delta1, delta2)).window(lo, hi)
    right = dual_oracle(delta1).window(lo, hi) & dual_oracle(delta2).window(lo, hi)
    return left == right
