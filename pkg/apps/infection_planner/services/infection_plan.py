"""
Infection budgets against a user-supplied Cheeger-Gromov bound C.

Every axis of level n is infected by #^N J. The planner reports the least
even N with N·|ρ_ℤ(J)| > C and the coarser choice "least even N > C";
both keep the Arf invariant of the infection at zero.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Tuple
import logging
import math

from django.conf import settings

from apps.free_words.services import Word
from apps.knot_invariants.services import LEFT_TREFOIL, arf, lambda_J, rho_z
from apps.pair_sets.services import axes
from utils.exceptions import PlanError
from utils.validators import RationalValidator

logger = logging.getLogger(__name__)

INFECTION_J = 'J'
INFECTION_LEFT_TREFOIL = 'left-trefoil'
INFECTIONS = (INFECTION_J, INFECTION_LEFT_TREFOIL)


@dataclass(frozen=True)
class Infection:
    name: str
    rho_per_copy: Fraction
    arf_per_copy: int


def load_infection(name: str) -> Infection:
    """
    ρ_ℤ and Arf invariant of one copy of the infection knot.

    J is known only through its intersection form λ_J; it bounds a spin
    4-manifold, so its Arf invariant is 0.

    Raises:
        PlanError: On an unknown name
    """
    if name == INFECTION_J:
        return Infection(name, rho_z(lambda_J()), 0)
    if name == INFECTION_LEFT_TREFOIL:
        return Infection(name, rho_z(LEFT_TREFOIL), arf(LEFT_TREFOIL))
    raise PlanError(f"Unknown infection {name!r}; choose one of {', '.join(INFECTIONS)}")


def minimal_copies(C: Fraction, rho: Fraction) -> int:
    """Least even N >= 2 with N·|rho| > C."""
    if rho == 0:
        raise PlanError("An infection with ρ_ℤ = 0 can never exceed the bound")
    return 2 * (math.floor(C / (2 * abs(rho))) + 1)


def coarse_copies(C: Fraction) -> int:
    """Least even integer strictly greater than C."""
    return 2 * (math.floor(C / 2) + 1)


@dataclass(frozen=True)
class InfectionPlan:
    """
    Numeric data of one infection: axes of level n, the copy count N of the
    infection knot per axis and the resulting ρ budget.
    """

    n: int
    axes: Tuple[Word, ...]
    C: Fraction
    infection: str
    rho_per_copy: Fraction
    N_minimal: int
    N_paper: int
    arf_per_copy: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise PlanError(f"Plans need n >= 1, got {self.n}")
        if self.C <= 0:
            raise PlanError(f"Bound must be positive, got {self.C}")
        rho = abs(self.rho_per_copy)
        for label, N in (('N_minimal', self.N_minimal), ('N_paper', self.N_paper)):
            if N < 2 or N % 2:
                raise PlanError(f"{label} = {N} must be a positive even integer")
        if not (self.N_minimal * rho > self.C >= (self.N_minimal - 2) * rho):
            raise PlanError(f"N_minimal = {self.N_minimal} is not the least even budget for C = {self.C}")
        if not (self.N_paper > self.C >= self.N_paper - 2):
            raise PlanError(f"N_paper = {self.N_paper} is not the least even integer above C = {self.C}")

    @property
    def m(self) -> int:
        return len(self.axes)

    @property
    def rank(self) -> int:
        return self.axes[0].rank if self.axes else settings.CONCORDIA_DEFAULT_RANK

    @property
    def total_rho(self) -> Fraction:
        """ρ_ℤ(#^N J) = N·ρ_ℤ(J)."""
        return self.N_minimal * self.rho_per_copy

    @property
    def arf_total(self) -> int:
        return (self.N_minimal * self.arf_per_copy) % 2


class InfectionPlanner:
    """
    Builds plans for one infection knot.

    Usage:
        planner = InfectionPlanner(infection='J')
        plan = planner.plan(1, Fraction(100))
        plan.N_minimal  # 76
    """

    def __init__(self, infection: str = INFECTION_J, rank: Optional[int] = None):
        self.rank = rank or settings.CONCORDIA_DEFAULT_RANK
        self.infection = load_infection(infection)
        if not isinstance(self.infection.rho_per_copy, Fraction):
            raise PlanError(f"ρ_ℤ of {infection} is not exact: {self.infection.rho_per_copy}")

    def plan(self, n: int, C, axis_words: Optional[List[Word]] = None) -> InfectionPlan:
        """
        Raises:
            PlanError: If C is not a positive rational or n < 1
            ResourceCapExceeded: From generating the axes
        """
        C = RationalValidator.parse_positive(C)
        if n < 1:
            raise PlanError(f"Plans need n >= 1, got {n}")
        if axis_words is None:
            axis_words = axes(n, self.rank)
        rho = self.infection.rho_per_copy
        plan = InfectionPlan(
            n=n,
            axes=tuple(axis_words),
            C=C,
            infection=self.infection.name,
            rho_per_copy=rho,
            N_minimal=minimal_copies(C, rho),
            N_paper=coarse_copies(C),
            arf_per_copy=self.infection.arf_per_copy,
        )
        logger.info(
            f"Plan for n={n}, C={C}: N={plan.N_minimal}",
            extra={
                'n': n,
                'bound': str(C),
                'm': plan.m,
                'N_minimal': plan.N_minimal,
                'N_paper': plan.N_paper,
                'infection': plan.infection
            }
        )
        return plan

    def plan_batch(self, n: int, bounds: Iterable) -> List[InfectionPlan]:
        """Plans for several bounds sharing one axes computation."""
        axis_words = axes(n, self.rank) if n >= 1 else None
        return [self.plan(n, C, axis_words) for C in bounds]


def plan(n: int, C, rank: Optional[int] = None, infection: str = INFECTION_J) -> InfectionPlan:
    return InfectionPlanner(infection, rank).plan(n, C)


def plan_batch(n: int, bounds: Iterable, rank: Optional[int] = None,
               infection: str = INFECTION_J) -> List[InfectionPlan]:
    return InfectionPlanner(infection, rank).plan_batch(n, bounds)
