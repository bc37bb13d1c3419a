"""
ρ-difference bookkeeping and the obstruction check.

After infection, ρ(M, φ) - ρ(N, φ') = Σ ε_i ρ_ℤ(J_i), where ε_i is 1 when φ
sends the axis η_i off the identity. For k copies of the knot the sum over
all copies must exceed k·C to contradict |ρ(M, φ_j)| < C.
"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence, Tuple
import logging

from apps.infection_planner.services.infection_plan import InfectionPlan
from utils.exceptions import PlanError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RhoLedger:
    epsilons: Tuple[int, ...]
    rho_values: Tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.epsilons) != len(self.rho_values):
            raise PlanError(
                f"{len(self.epsilons)} epsilons for {len(self.rho_values)} ρ values"
            )
        if any(e not in (0, 1) for e in self.epsilons):
            raise PlanError(f"Epsilons must be 0 or 1, got {list(self.epsilons)}")

    @classmethod
    def of(cls, epsilons: Sequence[int], rho_values: Sequence) -> 'RhoLedger':
        return cls(tuple(int(e) for e in epsilons), tuple(Fraction(r) for r in rho_values))


def rho_difference(ledger: RhoLedger) -> Fraction:
    """Σ ε_i ρ_i."""
    return sum((e * r for e, r in zip(ledger.epsilons, ledger.rho_values)), Fraction(0))


class ObstructionVerdict(str, Enum):
    CONTRADICTION = 'CONTRADICTION'
    INSUFFICIENT = 'INSUFFICIENT'


@dataclass(frozen=True)
class ObstructionResult:
    verdict: ObstructionVerdict
    total: Fraction
    bound: Fraction
    failing_copy: Optional[int] = None

    def __str__(self):
        text = f"verdict={self.verdict.value} total={self.total} bound={self.bound}"
        if self.failing_copy is not None:
            text += f" failing_copy={self.failing_copy}"
        return text


def obstruction_check(plan: InfectionPlan, epsilons: Sequence[Sequence[int]],
                      strict_per_knot: bool = False) -> ObstructionResult:
    """
    Decide whether the plan's ρ budget forces the contradiction for k copies.

    epsilons[j][i] is 1 when the j-th copy's axis i maps nontrivially.
    CONTRADICTION needs an ε = 1 in every copy and |Σ_j Σ_i ε_ji·ρ(J_i)| > k·C,
    where ρ(J_i) = plan.total_rho. With `strict_per_knot` each copy must on
    its own exceed C. failing_copy is 1-based.

    Raises:
        PlanError: If no copies are given or a copy has the wrong length
    """
    if not epsilons:
        raise PlanError("Need at least one copy")
    rho_values = [plan.total_rho] * plan.m
    contributions = []
    for j, row in enumerate(epsilons, start=1):
        if len(row) != plan.m:
            raise PlanError(f"Copy {j} has {len(row)} epsilons; the plan has m = {plan.m} axes")
        contributions.append(rho_difference(RhoLedger.of(row, rho_values)))

    k = len(epsilons)
    total = sum(contributions, Fraction(0))
    bound = k * plan.C
    failing = None
    for j, (row, contribution) in enumerate(zip(epsilons, contributions), start=1):
        if not any(row) or (strict_per_knot and abs(contribution) <= plan.C):
            failing = j
            break

    if failing is None and abs(total) > bound:
        verdict = ObstructionVerdict.CONTRADICTION
    else:
        verdict = ObstructionVerdict.INSUFFICIENT
    logger.info(
        f"Obstruction check over {k} copies: {verdict.value}",
        extra={'copies': k, 'total': str(total), 'bound': str(bound), 'failing_copy': failing}
    )
    return ObstructionResult(verdict, total, bound, failing)
