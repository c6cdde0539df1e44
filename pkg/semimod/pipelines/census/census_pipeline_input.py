from dataclasses import dataclass, field
from math import gcd
from typing import List

from semimod.algebra.semigroup import NumericalSemigroup


@dataclass
class CensusPipelineInput:
    """
    Contain all the semigroups a census run has to cover
    """

    semigroups: List[NumericalSemigroup] = field(default_factory=list)

    @classmethod
    def up_to_sum(cls, max_sum: int) -> "CensusPipelineInput":
        """
        Every coprime pair 2 <= alpha < beta with alpha + beta <= max_sum,
        ordered by (alpha, beta).
        """
        return cls(
            [
                NumericalSemigroup(alpha, beta)
                for alpha in range(2, max_sum)
                for beta in range(alpha + 1, max_sum - alpha + 1)
                if gcd(alpha, beta) == 1
            ]
        )

    @classmethod
    def up_to_beta(cls, max_beta: int) -> "CensusPipelineInput":
        """Every coprime pair 2 <= alpha < beta <= max_beta."""
        return cls(
            [
                NumericalSemigroup(alpha, beta)
                for alpha in range(2, max_beta)
                for beta in range(alpha + 1, max_beta + 1)
                if gcd(alpha, beta) == 1
            ]
        )
