"""Group specifications and evaluation-path selectors."""

from dataclasses import dataclass
from enum import Enum
from math import prod
from typing import Tuple

from ..exceptions import DomainError, U63_MAX, WidthError


class EvaluationPath(Enum):
    """Independent ways of evaluating the rank-2 counts."""

    DIVISOR_SUM = "divisor_sum"
    EULER_PRODUCT = "euler_product"
    GCD_SUM = "gcd_sum"


@dataclass(frozen=True)
class GroupSpec:
    """Z_{n1} x ... x Z_{nr} with 1 <= r <= 3."""

    invariants: Tuple[int, ...]

    def __post_init__(self):
        if not 1 <= len(self.invariants) <= 3:
            raise DomainError(
                f"group rank must be 1, 2 or 3, got {len(self.invariants)}",
                module="counts",
            )
        if any(n < 1 for n in self.invariants):
            raise DomainError(
                f"group invariants must be positive, got {self.invariants}",
                module="counts",
            )
        if self.order > U63_MAX:
            raise WidthError(f"group order {self.order} exceeds 63 bits", module="counts")

    @property
    def order(self) -> int:
        return prod(self.invariants)

    @property
    def rank(self) -> int:
        return len(self.invariants)
