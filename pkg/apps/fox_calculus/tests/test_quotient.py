"""
Tests for the word problem in F/F^(k) and for membership in F^(k).
"""
import pytest
from random import Random

import sympy as sp

from apps.free_words.serializers import parse_word
from apps.free_words.services import commutator, generator, identity, random_word, reduce
from apps.fox_calculus.serializers import parse_ring
from apps.fox_calculus.services import (
    INFINITY,
    GroupRingElement,
    QuotientElement,
    QuotientLevel,
    WordClassRegistry,
    derived_member,
    elements_equal,
    fox_derivative,
    ring_is_zero,
)
from apps.fox_calculus.services.free_differential import raw_fox_terms
from apps.fox_calculus.services.quotient import canonical_fox_forms, canonical_terms
from utils.exceptions import ResourceCapExceeded


A = sp.symbols('a1 a2')
T = sp.symbols('t1 t2')
LETTER_MATRICES = {}
for _g in range(2):
    LETTER_MATRICES[_g + 1] = sp.Matrix([[A[_g], T[_g]], [0, 1]])
    LETTER_MATRICES[-(_g + 1)] = LETTER_MATRICES[_g + 1].inv()


def reduced_words_with_images(rank, max_length):
    """
    Every reduced letter tuple of length at most max_length, paired with its
    image under x_i -> [[a_i, t_i], [0, 1]].

    The representation is faithful on F/F^(2): the image is the identity
    matrix exactly when the word lies in F^(2), and its diagonal is 1 exactly
    when the word lies in F^(1).
    """
    letters = [i for g in range(1, rank + 1) for i in (g, -g)]
    layer = [((), sp.eye(2))]
    words = list(layer)
    for _ in range(max_length):
        layer = [
            (w + (l,), (m * LETTER_MATRICES[l]).applyfunc(sp.expand))
            for w, m in layer
            for l in letters
            if not w or w[-1] != -l
        ]
        words.extend(layer)
    return words


class TestDerivedMemberExamples:
    """Worked membership examples."""

    def test_commutator_in_first_not_second(self):
        w = parse_word('[x1,x2]')
        assert derived_member(w, 1)
        assert not derived_member(w, 2)

    def test_double_commutator(self):
        assert derived_member(parse_word('[[x1,x2],[x1,x3]]'), 2)

    def test_generator_not_in_first(self):
        assert not derived_member(generator(1), 1)

    def test_level_zero_is_everything(self):
        assert derived_member(generator(3), 0)

    def test_identity_in_every_level(self):
        for k in range(5):
            assert derived_member(identity(), k)


class TestDerivedSeriesProperties:
    """Monotonicity and closure on seeded random words."""

    def test_monotonicity(self):
        rng = Random(99)
        for _ in range(300):
            u = commutator(random_word(3, 4, rng), random_word(3, 4, rng))
            w = commutator(u, commutator(random_word(3, 3, rng), random_word(3, 3, rng)))
            for k in range(3):
                if derived_member(w, k + 1):
                    assert derived_member(w, k)

    def test_closure_level_one(self):
        rng = Random(4)
        for _ in range(100):
            u = commutator(random_word(4, 4, rng), random_word(4, 4, rng))
            v = commutator(random_word(4, 4, rng), random_word(4, 4, rng))
            assert derived_member(u, 1) and derived_member(v, 1)
            assert derived_member(commutator(u, v), 2)

    def test_closure_level_two(self):
        rng = Random(5)
        for _ in range(10):
            u = commutator(
                commutator(random_word(3, 2, rng), random_word(3, 2, rng)),
                commutator(random_word(3, 2, rng), random_word(3, 2, rng)),
            )
            v = commutator(
                commutator(random_word(3, 2, rng), random_word(3, 2, rng)),
                commutator(random_word(3, 2, rng), random_word(3, 2, rng)),
            )
            assert derived_member(u, 2) and derived_member(v, 2)
            assert derived_member(commutator(u, v), 3)

    def test_conjugate_of_commutator_stays_in_level(self):
        """F^(k) is normal."""
        w = parse_word('[[x1,x2],[x3,x4]]')
        assert derived_member(parse_word('[[x1,x2],[x3,x4]]^(x1 x3^-1)'), 2)
        assert derived_member(w, 2)


@pytest.mark.slow
class TestMagnusOracle:
    """derived_member against products of 2x2 matrices over Z[a1, a2]."""

    @pytest.fixture(scope="class")
    def words(self):
        return reduced_words_with_images(2, 8)

    def test_exhaustive_rank_two_length_eight(self, words):
        disagreements = []
        for letters, image in words:
            w = reduce(letters, rank=2)
            in_first = image[0, 0] == 1
            in_second = image == sp.eye(2)
            if derived_member(w, 1) != in_first or derived_member(w, 2) != in_second:
                disagreements.append(letters)
        assert disagreements == []

    def test_word_count(self, words):
        assert len(words) == 13121

    def test_commutator_image(self):
        image = LETTER_MATRICES[1] * LETTER_MATRICES[2] * LETTER_MATRICES[-1] * LETTER_MATRICES[-2]
        image = image.applyfunc(sp.simplify)
        assert image[0, 0] == 1
        assert image != sp.eye(2)


class TestQuotientElement:
    """Semantic equality in F/F^(k)."""

    def test_commutator_trivial_at_level_one(self):
        assert QuotientElement(parse_word('[x1,x2]'), 1) == QuotientElement(identity(), 1)
        assert QuotientElement(parse_word('[x1,x2]'), 1).is_identity

    def test_commutator_nontrivial_at_level_two(self):
        assert not QuotientElement(parse_word('[x1,x2]'), 2).is_identity

    def test_abelian_at_level_one(self):
        assert elements_equal(parse_word('x1 x2'), parse_word('x2 x1'), 1)
        assert not elements_equal(parse_word('x1 x2'), parse_word('x2 x1'), INFINITY)

    def test_equality_matches_membership_of_quotient(self):
        """a = b in F/F^(k) iff a b^-1 in F^(k)."""
        rng = Random(12)
        for _ in range(200):
            a = random_word(2, 6, rng)
            b = commutator(random_word(2, 3, rng), random_word(2, 3, rng)) * a
            for k in (1, 2):
                assert elements_equal(a, b, k) == derived_member(b * ~a, k)

    def test_product_and_inverse(self):
        x = QuotientElement(parse_word('x1'), 2)
        assert (x * x.inverse()).is_identity

    def test_negative_level_rejected(self):
        with pytest.raises(ValueError):
            QuotientLevel(-1)


class TestRingIsZero:
    """Zero testing after semantic merging."""

    def test_cancellation(self):
        assert ring_is_zero(parse_ring('x1 + -1*x1'))

    def test_commutator_dies_at_level_one(self):
        assert ring_is_zero(parse_ring('[x1,x2] + -1', level=1))

    def test_derivative_nonzero_at_level_two(self):
        assert not ring_is_zero(fox_derivative(2, parse_word('[x1,x2]'), 2))

    def test_zero_element(self):
        assert ring_is_zero(GroupRingElement.zero(4, 3))


class TestResourceCaps:
    """Exceeding a cap is an error, never a wrong answer."""

    def test_depth_cap(self, settings):
        settings.CONCORDIA_MAX_DEPTH = 2
        with pytest.raises(ResourceCapExceeded) as excinfo:
            derived_member(parse_word('[x1,x2]'), 3)
        assert excinfo.value.cap == 'depth'
        assert excinfo.value.limit == 2

    def test_term_cap(self, settings):
        settings.CONCORDIA_MAX_TERMS = 3
        with pytest.raises(ResourceCapExceeded):
            fox_derivative(1, parse_word('x1 x2 x1 x2 x1'))

    def test_product_term_cap(self, settings):
        a = parse_ring('x1 + x2 + x3')
        settings.CONCORDIA_MAX_TERMS = 5
        with pytest.raises(ResourceCapExceeded):
            a * a


class TestCanonicalFoxForms:
    """The exponent-vector shortcut at level 1 agrees with explicit term merging."""

    def test_level_one_shortcut(self):
        rng = Random(31)
        for _ in range(300):
            w = random_word(4, 20, rng)
            expected = tuple(canonical_terms(raw_fox_terms(i, w.letters), 4, 1) for i in range(1, 5))
            assert canonical_fox_forms(w.letters, 4, 1) == expected


class TestWordClassRegistry:

    def test_ids_are_stable(self):
        first = WordClassRegistry.intern(9, 2, ('stable', 1))
        assert WordClassRegistry.intern(9, 2, ('stable', 1)) == first
        assert WordClassRegistry.intern(9, 2, ('stable', 2)) != first

    def test_tables_are_per_rank_and_level(self):
        a = WordClassRegistry.intern(9, 3, ('shared',))
        b = WordClassRegistry.intern(8, 3, ('shared',))
        assert a == WordClassRegistry.intern(9, 3, ('shared',))
        assert b == WordClassRegistry.intern(8, 3, ('shared',))
