"""
Special pair services.

Condition 1 for solution maps, the level-by-level special-pair induction
with its certificate, and the surface relation coordinate.
"""
from .solution_map import (
    IDENTITY_REORDERING,
    REORDERINGS,
    Reordering,
    SolutionMap,
    check_condition1,
    relabelled,
    require_condition1,
)
from .relation import SurfaceRelation, check_relation_coordinate, relation_coordinate
from .multipliers import CaseMultipliers, case_multipliers, conjugation_multiplier
from .certificate import (
    BaseRecord,
    FinalRecord,
    LevelRecord,
    RelationRecord,
    SpecialPairCertificate,
)
from .selector import (
    Verdict,
    base_pair,
    good_pair_check,
    level_one_determinant,
    replay_cases,
    select_special_pair,
)
from .verification import check_consistency, verify_certificate

__all__ = [
    'IDENTITY_REORDERING',
    'REORDERINGS',
    'Reordering',
    'SolutionMap',
    'check_condition1',
    'relabelled',
    'require_condition1',
    'SurfaceRelation',
    'check_relation_coordinate',
    'relation_coordinate',
    'CaseMultipliers',
    'case_multipliers',
    'conjugation_multiplier',
    'BaseRecord',
    'FinalRecord',
    'LevelRecord',
    'RelationRecord',
    'SpecialPairCertificate',
    'Verdict',
    'base_pair',
    'good_pair_check',
    'level_one_determinant',
    'replay_cases',
    'select_special_pair',
    'check_consistency',
    'verify_certificate',
]
