"""
Infection planner services.
"""
from .infection_plan import (
    INFECTION_J,
    INFECTION_LEFT_TREFOIL,
    INFECTIONS,
    Infection,
    InfectionPlan,
    InfectionPlanner,
    load_infection,
    minimal_copies,
    coarse_copies,
    plan,
    plan_batch,
)
from .obstruction import (
    ObstructionResult,
    ObstructionVerdict,
    RhoLedger,
    obstruction_check,
    rho_difference,
)

__all__ = [
    'INFECTION_J',
    'INFECTION_LEFT_TREFOIL',
    'INFECTIONS',
    'Infection',
    'InfectionPlan',
    'InfectionPlanner',
    'load_infection',
    'minimal_copies',
    'coarse_copies',
    'plan',
    'plan_batch',
    'ObstructionResult',
    'ObstructionVerdict',
    'RhoLedger',
    'obstruction_check',
    'rho_difference',
]
