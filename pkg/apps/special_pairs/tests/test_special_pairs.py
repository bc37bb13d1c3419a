"""
Tests for condition 1, the surface relation coordinate, the case multipliers
and the special-pair induction.
"""
import pytest
from random import Random

from apps.free_words.serializers import parse_word, parse_word_list
from apps.free_words.services import commutator, conjugate, generator, random_word
from apps.fox_calculus.serializers import parse_ring
from apps.fox_calculus.services import GroupRingElement, derived_member, fox_derivative
from apps.pair_sets.services import (
    CASE_BOTH_NONTRIVIAL,
    CASE_Y_TRIVIAL,
    CASE_Z_TRIVIAL,
    WordPair,
    successor_for_case,
)
from apps.special_pairs.services import (
    IDENTITY_REORDERING,
    Reordering,
    SolutionMap,
    SurfaceRelation,
    Verdict,
    base_pair,
    case_multipliers,
    check_condition1,
    check_relation_coordinate,
    good_pair_check,
    relation_coordinate,
    replay_cases,
    select_special_pair,
)
from apps.special_pairs.services.selector import level_step
from utils.exceptions import Case4Error, SolutionMapError


def solution_map(images, target_rank=2):
    return SolutionMap.from_images(parse_word_list(images, target_rank), target_rank)


# x1 -> a, x2 -> e, x3 -> b, x4 -> e
CASE_TWO_MAP = 'x1, e, x2, e'
# x1 -> a, x2 -> b, x3 -> b, x4 -> a
CASE_ONE_MAP = 'x1, x2, x2, x1'
# x1 -> a, x2 -> b, x3 -> a, x4 -> e
CASE_THREE_MAP = 'x1, x2, x1, e'
# x1 -> a, x2 -> e, x3 -> a, x4 -> b
CASE_FOUR_MAP = 'x1, e, x1, x2'


def random_condition1_maps(count, seed):
    rng = Random(seed)
    maps = []
    while len(maps) < count:
        r = SolutionMap.from_images([random_word(2, 3, rng) for _ in range(4)], 2)
        if check_condition1(r)[0]:
            maps.append(r)
    return maps


class TestCheckCondition1:
    """Rank-2 image with x1 and x3 nontrivial after reordering."""

    def test_diagonal_image(self):
        assert check_condition1(solution_map(CASE_TWO_MAP)) == (True, IDENTITY_REORDERING)

    def test_trivial_map(self):
        assert check_condition1(solution_map('e, e, e, e')) == (False, None)

    def test_reordering_required(self):
        ok, reordering = check_condition1(solution_map('e, x1, e, x2'))
        assert ok
        assert reordering == Reordering(swap12=True, swap34=True)
        assert reordering.label == 'swap12,swap34'

    def test_single_swap_preferred_in_order(self):
        ok, reordering = check_condition1(solution_map('x1, x2, e, x2'))
        assert ok
        assert reordering == Reordering(swap34=True)

    def test_rank_four_image_fails(self):
        assert check_condition1(solution_map('x1, x2, x3, x4', 4)) == (False, None)

    def test_rank_one_image_fails(self):
        assert check_condition1(solution_map('x1, x1, x1 x1, e')) == (False, None)

    def test_reordered_images(self):
        r = solution_map('e, x1, e, x2').reordered(Reordering(True, True))
        assert r.images == tuple(parse_word_list('x1, e, x2, e', 2))

    def test_image_rank_checked(self):
        with pytest.raises(SolutionMapError):
            SolutionMap.from_images(parse_word_list('x1, e, x2', 2), 2)

    def test_reordering_labels(self):
        for label in ('identity', 'swap12', 'swap34', 'swap12,swap34'):
            assert Reordering.from_label(label).label == label
        with pytest.raises(SolutionMapError):
            Reordering.from_label('swap13')


class TestRelationCoordinate:
    """rπ_n ∂_4(T) for the surface relation."""

    def test_standard_relation_at_level_one(self):
        r = solution_map(CASE_TWO_MAP)
        assert check_relation_coordinate(r, 1, SurfaceRelation())
        coordinate = relation_coordinate(r, 1, SurfaceRelation())
        assert coordinate == parse_ring('x2^-1 + -1', rank=2, level=1)

    def test_flipped_relation_at_level_one(self):
        r = solution_map(CASE_TWO_MAP)
        relation = SurfaceRelation(g_swapped=True, tail_swapped=True)
        assert str(relation) == 'x2 x1 x2^-1 x1^-1 x4 x3 x4^-1 x3^-1'
        assert check_relation_coordinate(r, 1, relation)
        assert relation_coordinate(r, 1, relation) == parse_ring('1 + -1*x2^-1', rank=2, level=1)

    def test_relation_lies_in_first_derived_subgroup(self):
        for g in (False, True):
            for t in (False, True):
                assert derived_member(SurfaceRelation(g, t).word(), 1)

    def test_condition1_failure(self):
        with pytest.raises(SolutionMapError):
            check_relation_coordinate(solution_map('x1, x2, e, e'), 1, SurfaceRelation())

    def test_x3_image_found_after_swap(self):
        """x3 -> e is repaired by swapping x3 and x4 before the check."""
        r = solution_map('x1, e, e, x2')
        assert check_condition1(r) == (True, Reordering(swap34=True))
        relation = SurfaceRelation.standard(Reordering(swap34=True))
        assert check_relation_coordinate(r, 1, relation)
        assert check_relation_coordinate(r, 1, SurfaceRelation())

    def test_standard_relation_follows_reordering(self):
        relation = SurfaceRelation.standard(Reordering(swap12=True))
        assert relation.variant == '[x2,x1][x3,x4]'


class TestCaseMultipliers:
    """Exact ZF identities behind the three successor cases."""

    def setup_method(self):
        self.rng = Random(2024)
        self.x = generator(1)

    def test_conjugation_identity(self):
        """d[y, y^x] = (dy) p for d = ∂_2, ∂_3."""
        for _ in range(200):
            y = random_word(4, 6, self.rng)
            p = case_multipliers(y, y, self.x).p
            for d in (2, 3):
                assert fox_derivative(d, commutator(y, conjugate(y, self.x))) == fox_derivative(d, y) * p

    def test_q_matches_z(self):
        for _ in range(200):
            y, z = random_word(4, 6, self.rng), random_word(4, 6, self.rng)
            q = case_multipliers(y, z, self.x).q
            for d in (2, 3):
                assert fox_derivative(d, commutator(z, conjugate(z, self.x))) == fox_derivative(d, z) * q

    def test_commutator_expansion(self):
        """d[y, z] = (dy) a + (dz) b."""
        for _ in range(200):
            y, z = random_word(4, 6, self.rng), random_word(4, 6, self.rng)
            m = case_multipliers(y, z, self.x)
            for d in (1, 2, 3, 4):
                expected = fox_derivative(d, y) * m.a + fox_derivative(d, z) * m.b
                assert fox_derivative(d, commutator(y, z)) == expected

    def test_printed_form_of_p(self):
        y = parse_word('[x1,x2]')
        p = case_multipliers(y, y, self.x).p
        yx = conjugate(y, self.x)
        expected = parse_ring('1') + GroupRingElement.from_word(self.x * ~y) \
            - GroupRingElement.from_word(~yx * commutator(yx, y)) \
            - GroupRingElement.from_word(self.x * commutator(yx, y))
        assert p == expected


class TestSelectSpecialPair:
    """Worked maps for each case of the induction."""

    def test_case_two_example(self):
        cert = select_special_pair(solution_map(CASE_TWO_MAP), 2)
        assert cert.reordering == IDENTITY_REORDERING
        (record,) = cert.levels
        assert (record.y_trivial, record.z_trivial) == (True, False)
        assert record.case == CASE_Y_TRIVIAL
        y, z = base_pair().components()
        expected = WordPair(commutator(y, z), commutator(z, conjugate(z, generator(1))))
        assert record.successor == expected
        assert cert.final_pair == expected
        assert all(v.is_zero for v in record.vanishing)
        assert not any(e.is_zero for e in record.evidence)
        assert cert.relation.nonzero

    def test_case_one_example(self):
        cert = select_special_pair(solution_map(CASE_ONE_MAP), 2)
        assert cert.levels[0].case == CASE_BOTH_NONTRIVIAL
        assert cert.levels[0].vanishing == ()

    def test_case_three_example(self):
        cert = select_special_pair(solution_map(CASE_THREE_MAP), 2)
        record = cert.levels[0]
        assert record.case == CASE_Z_TRIVIAL
        assert record.successor == successor_for_case(record.pair, CASE_Z_TRIVIAL, generator(1))

    def test_case_four_raises(self):
        with pytest.raises(Case4Error) as excinfo:
            select_special_pair(solution_map(CASE_FOUR_MAP), 2)
        assert excinfo.value.k == 1

    def test_distinct_generator_map(self):
        """Four independent images break condition 1, yet both commutators survive at level 2."""
        r = solution_map('x1, x2, x3, x4', 4)
        with pytest.raises(SolutionMapError):
            select_special_pair(r, 2)
        assert level_step(r, 1, base_pair()).case == CASE_BOTH_NONTRIVIAL

    def test_trivial_map_fails_condition1(self):
        with pytest.raises(SolutionMapError):
            select_special_pair(solution_map('e, e, e, e'), 2)

    def test_level_one_has_no_steps(self):
        cert = select_special_pair(solution_map(CASE_TWO_MAP), 1)
        assert cert.levels == ()
        assert cert.final_pair == base_pair()

    def test_reordered_map_is_used(self):
        cert = select_special_pair(solution_map('e, x1, e, x2'), 2)
        assert cert.working_map.images == tuple(parse_word_list(CASE_TWO_MAP, 2))
        assert cert.levels[0].case == CASE_Y_TRIVIAL
        assert cert.relation.relation.variant == '[x2,x1][x4,x3]'

    def test_cases_replay(self):
        cert = select_special_pair(solution_map(CASE_ONE_MAP), 2)
        assert replay_cases(cert) == tuple(record.case for record in cert.levels)

    def test_level_progression(self):
        cert = select_special_pair(solution_map(CASE_TWO_MAP), 2)
        for k in (1, 2):
            pair = cert.pair_at(k)
            assert derived_member(pair.y, k) and derived_member(pair.z, k)

    def test_n_must_be_positive(self):
        with pytest.raises(ValueError):
            select_special_pair(solution_map(CASE_TWO_MAP), 0)

    @pytest.mark.slow
    def test_case_two_map_at_level_three(self):
        cert = select_special_pair(solution_map(CASE_TWO_MAP), 3)
        assert [record.case for record in cert.levels] == [CASE_Y_TRIVIAL, CASE_Y_TRIVIAL]
        assert derived_member(cert.final_pair.y, 3)


class TestGoodPairCheck:
    """Verdicts for the two properties of a good pair."""

    def setup_method(self):
        self.r = solution_map(CASE_TWO_MAP)

    def test_base_pair_is_good(self):
        assert good_pair_check(self.r, 1, base_pair()) == Verdict.GOOD

    def test_generators_fail_independence(self):
        pair = WordPair(generator(1), generator(2))
        assert good_pair_check(self.r, 1, pair) == Verdict.FAIL_PROPERTY2

    def test_x4_fails_property1(self):
        pair = WordPair(parse_word('x4 x1'), generator(2))
        assert good_pair_check(self.r, 1, pair) == Verdict.FAIL_PROPERTY1
        assert good_pair_check(self.r, 3, pair) == Verdict.FAIL_PROPERTY1

    def test_higher_level_without_certificate(self):
        cert = select_special_pair(self.r, 2)
        assert good_pair_check(self.r, 2, cert.final_pair) == Verdict.UNDECIDED

    def test_higher_level_with_certificate(self):
        cert = select_special_pair(self.r, 2)
        verdict = good_pair_check(self.r, 2, cert.final_pair, certificate=cert)
        assert verdict == Verdict.CERTIFIED_BY_INDUCTION

    def test_certificate_for_other_pair(self):
        cert = select_special_pair(self.r, 2)
        other = successor_for_case(base_pair(), CASE_BOTH_NONTRIVIAL, generator(1))
        assert good_pair_check(self.r, 2, other, certificate=cert) == Verdict.UNDECIDED

    def test_base_pair_good_for_random_maps(self):
        for r in random_condition1_maps(50, seed=77):
            ok, reordering = check_condition1(r)
            assert good_pair_check(r.reordered(reordering), 1, base_pair()) == Verdict.GOOD

    def test_map_needing_swap(self):
        r = solution_map('x1, e, e, x2')
        working = r.reordered(Reordering(swap34=True))
        assert good_pair_check(r, 1, base_pair()) == Verdict.GOOD
        assert good_pair_check(working, 1, base_pair()) == Verdict.GOOD

    def test_base_pair_good_for_unreordered_maps(self):
        for r in random_condition1_maps(50, seed=78):
            assert good_pair_check(r, 1, base_pair()) == Verdict.GOOD
