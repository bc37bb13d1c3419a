"""
Special-pair selection.

Starting from ([x1,x2],[x1,x3]) for the reordered map, each level decides
whether the images of y and z die in G/G^(k+1) and moves to the successor
pair the case dictates (x = x1):

    case 1  both survive    ([y,y^x], [z,z^x])   evidence p, q
    case 2  y dies          ([y,z],   [z,z^x])   evidence a, q; b vanishes
    case 3  z dies          ([y,y^x], [y,z])     evidence p, b; a vanishes
    case 4  both die        Case4Error

Evidence elements are projected to Z[G/G^(k+1)] and must be nonzero; the
vanishing coefficient must project to zero.
"""
from enum import Enum
from typing import List, Optional, Tuple
import logging

from apps.free_words.services import commutator, generator
from apps.fox_calculus.services import GroupRingElement, derived_member, fox_derivative
from apps.pair_sets.services import (
    CASE_BOTH_NONTRIVIAL,
    CASE_Y_TRIVIAL,
    CASE_Z_TRIVIAL,
    WordPair,
    successor_for_case,
)
from apps.special_pairs.services.certificate import (
    BaseRecord,
    FinalRecord,
    LevelRecord,
    RelationRecord,
    SpecialPairCertificate,
)
from apps.special_pairs.services.multipliers import case_multipliers
from apps.special_pairs.services.relation import SurfaceRelation, relation_coordinate
from apps.special_pairs.services.solution_map import (
    SOURCE_RANK,
    SolutionMap,
    relabelled,
    require_condition1,
)
from utils.exceptions import Case4Error, CertificateError
from utils.validators import LevelValidator

logger = logging.getLogger(__name__)


class Verdict(str, Enum):
    GOOD = 'GOOD'
    FAIL_PROPERTY1 = 'FAIL_PROPERTY1'
    FAIL_PROPERTY2 = 'FAIL_PROPERTY2'
    CERTIFIED_BY_INDUCTION = 'CERTIFIED_BY_INDUCTION'
    UNDECIDED = 'UNDECIDED'


def _push(element: GroupRingElement, r: SolutionMap, level: int) -> GroupRingElement:
    return element.map_words(r.apply, level, r.target_rank)


def _d4_zero(pair: WordPair) -> bool:
    return fox_derivative(4, pair.y).is_zero and fox_derivative(4, pair.z).is_zero


def classify_case(y_trivial: bool, z_trivial: bool, k: int) -> int:
    """
    Raises:
        Case4Error: If both images are trivial
    """
    if y_trivial and z_trivial:
        raise Case4Error(k)
    if y_trivial:
        return CASE_Y_TRIVIAL
    if z_trivial:
        return CASE_Z_TRIVIAL
    return CASE_BOTH_NONTRIVIAL


def level_step(r: SolutionMap, k: int, pair: WordPair) -> LevelRecord:
    """
    One induction step at level k for a map that is already reordered.

    Raises:
        Case4Error: If rπ_{k+1}(y) and rπ_{k+1}(z) are both trivial
        CertificateError: If an evidence element vanishes
    """
    y_trivial = derived_member(r.apply(pair.y), k + 1)
    z_trivial = derived_member(r.apply(pair.z), k + 1)
    case = classify_case(y_trivial, z_trivial, k)
    x = generator(1, pair.rank)
    m = case_multipliers(pair.y, pair.z, x)
    if case == CASE_BOTH_NONTRIVIAL:
        evidence, vanishing = (m.p, m.q), ()
    elif case == CASE_Y_TRIVIAL:
        evidence, vanishing = (m.a, m.q), (m.b,)
    else:
        evidence, vanishing = (m.p, m.b), (m.a,)
    evidence = tuple(_push(e, r, k + 1) for e in evidence)
    vanishing = tuple(_push(v, r, k + 1) for v in vanishing)
    if any(e.is_zero for e in evidence):
        raise CertificateError(f"Level {k}: a case {case} multiplier vanishes in Z[G/G^({k + 1})]")
    if not all(v.is_zero for v in vanishing):
        raise CertificateError(f"Level {k}: the case {case} coefficient does not vanish")
    logger.info(
        f"Level {k}: case {case}",
        extra={'level': k, 'case': case, 'y_trivial': y_trivial, 'z_trivial': z_trivial}
    )
    return LevelRecord(
        k=k,
        pair=pair,
        y_trivial=y_trivial,
        z_trivial=z_trivial,
        case=case,
        successor=successor_for_case(pair, case, x),
        evidence=evidence,
        vanishing=vanishing,
    )


def base_pair() -> WordPair:
    """([x1,x2], [x1,x3]) in the surface group."""
    x = [generator(i, SOURCE_RANK) for i in (1, 2, 3)]
    return WordPair(commutator(x[0], x[1]), commutator(x[0], x[2]))


def base_record(r: SolutionMap) -> BaseRecord:
    pair = base_pair()
    evidence = (
        _push(fox_derivative(2, pair.y), r, 1),
        _push(fox_derivative(3, pair.z), r, 1),
    )
    if any(e.is_zero for e in evidence):
        raise CertificateError("Base pair derivatives vanish in Z[G/G^(1)]")
    return BaseRecord(pair=pair, d4_zero=_d4_zero(pair), evidence=evidence)


def select_special_pair(r: SolutionMap, n: int) -> SpecialPairCertificate:
    """
    Run the induction up to level n and return its certificate.

    Raises:
        SolutionMapError: If r fails condition 1
        Case4Error: If both images die at some level
        ResourceCapExceeded: If n exceeds CONCORDIA_MAX_DEPTH or a term cap trips
    """
    if n < 1:
        raise ValueError(f"Level n must be at least 1, got {n}")
    LevelValidator.validate_depth(n)
    reordering = require_condition1(r)
    working = r.reordered(reordering)

    base = base_record(working)
    levels: List[LevelRecord] = []
    pair = base.pair
    for k in range(1, n):
        record = level_step(working, k, pair)
        levels.append(record)
        pair = record.successor

    relation = SurfaceRelation.standard(reordering)
    coordinate = relation_coordinate(working, n, relation)
    logger.info(
        f"Selected special pair at level {n}",
        extra={'level': n, 'reordering': reordering.label, 'cases': [l.case for l in levels]}
    )
    return SpecialPairCertificate(
        n=n,
        solution_map=r,
        reordering=reordering,
        base=base,
        levels=tuple(levels),
        final=FinalRecord(k=n, pair=pair, d4_zero=_d4_zero(pair)),
        relation=RelationRecord(relation, coordinate, not coordinate.is_zero),
    )


def level_one_determinant(r: SolutionMap, pair: WordPair) -> GroupRingElement:
    """rπ_1(∂_2y ∂_3z - ∂_3y ∂_2z) in the commutative ring Z[G/G^(1)]."""
    d2y, d3y = (_push(fox_derivative(i, pair.y), r, 1) for i in (2, 3))
    d2z, d3z = (_push(fox_derivative(i, pair.z), r, 1) for i in (2, 3))
    return d2y * d3z - d3y * d2z


def _certificate_lists(certificate: SpecialPairCertificate, r: SolutionMap, k: int,
                       pair: WordPair) -> bool:
    from apps.special_pairs.services.verification import verify_certificate

    verify_certificate(certificate)
    if r not in (certificate.solution_map, certificate.working_map):
        return False
    return certificate.pair_at(k) == pair


def good_pair_check(r: SolutionMap, k: int, pair: WordPair,
                    certificate: Optional[SpecialPairCertificate] = None) -> Verdict:
    """
    Check the two properties of a good pair at level k.

    Property 1 (∂_4y = ∂_4z = 0 in ZF) is exact at every level. Property 2
    is decided exactly at k = 1 by the 2x2 determinant of r under its
    condition-1 reordering; for k >= 2 only a verified certificate listing
    the pair at level k settles it.

    Raises:
        CertificateError: If a supplied certificate fails verification
    """
    if k < 1:
        raise ValueError(f"Level k must be at least 1, got {k}")
    LevelValidator.validate_depth(k)
    if not _d4_zero(pair):
        return Verdict.FAIL_PROPERTY1
    if k == 1:
        if level_one_determinant(relabelled(r), pair).is_zero:
            return Verdict.FAIL_PROPERTY2
        return Verdict.GOOD
    if certificate is not None and _certificate_lists(certificate, r, k, pair):
        return Verdict.CERTIFIED_BY_INDUCTION
    return Verdict.UNDECIDED


def replay_cases(certificate: SpecialPairCertificate) -> Tuple[int, ...]:
    """Re-decide the triviality verdicts and return the implied case per level."""
    working = certificate.working_map
    cases = []
    for record in certificate.levels:
        y_trivial = derived_member(working.apply(record.pair.y), record.k + 1)
        z_trivial = derived_member(working.apply(record.pair.z), record.k + 1)
        cases.append(classify_case(y_trivial, z_trivial, record.k))
    return tuple(cases)
