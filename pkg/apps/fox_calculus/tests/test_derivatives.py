"""
Tests for the right-multiplied Fox derivative.

Printed closed forms are matched term by term; the product, inverse and
commutator rules and the fundamental identity are checked on seeded random
words in rank 4.
"""
import pytest
from random import Random

from apps.free_words.serializers import parse_word
from apps.free_words.services import (
    commutator,
    generator,
    identity,
    invert,
    multiply,
    random_word,
)
from apps.fox_calculus.serializers import format_ring, parse_ring
from apps.fox_calculus.services import (
    INFINITY,
    GroupRingElement,
    fox_derivative,
    fox_vector,
    left_fox_derivative,
)
from utils.exceptions import InvalidWordError


def ring(w, level=INFINITY):
    return GroupRingElement.from_word(w, level)


class TestPrintedFormulas:
    """Closed forms quoted for the surface relation and the base pair."""

    def test_generator(self):
        """∂_1(x1) = 1 and ∂_2(x1) = 0."""
        assert fox_derivative(1, generator(1)) == GroupRingElement.one(4)
        assert fox_derivative(2, generator(1)).is_zero

    def test_derivative_of_commutator(self):
        """∂_2([x1,x2]) = x1^-1 - [x2,x1]."""
        result = fox_derivative(2, parse_word('[x1,x2]'))
        assert result == parse_ring('x1^-1 + -1*[x2,x1]')
        assert result.terms == [(1, parse_word('x1^-1')), (-1, parse_word('[x2,x1]'))]

    def test_canonical_text(self):
        result = fox_derivative(2, parse_word('[x1,x2]'))
        assert format_ring(result) == '1*x1^-1 + -1*x2 x1 x2^-1 x1^-1'

    def test_surface_relation_coordinate(self):
        """∂_4(g[x3,x4]) = (x3^-1 - [x4,x3]) g^-1 with g = [x1,x2]."""
        g = parse_word('[x1,x2]')
        result = fox_derivative(4, parse_word('[x1,x2][x3,x4]'))
        expected = parse_ring('x3^-1 + -1*[x4,x3]') * ring(invert(g))
        assert result == expected

    def test_flipped_surface_relation_coordinate(self):
        """∂_4(g[x4,x3]) = (1 - x4 x3^-1 x4^-1) g^-1."""
        g = parse_word('[x2,x1]')
        result = fox_derivative(4, parse_word('[x2,x1][x4,x3]'))
        expected = parse_ring('1 + -1*x4 x3^-1 x4^-1') * ring(invert(g))
        assert result == expected

    def test_identity_has_zero_derivatives(self):
        for i in range(1, 5):
            assert fox_derivative(i, identity()).is_zero

    def test_index_checked(self):
        with pytest.raises(InvalidWordError):
            fox_derivative(5, generator(1))


class TestFoxRules:
    """Product, inverse and commutator rules on 1000 random pairs."""

    def setup_method(self):
        self.rng = Random(1729)
        self.pairs = [
            (random_word(4, 12, self.rng), random_word(4, 12, self.rng))
            for _ in range(1000)
        ]

    def test_product_rule(self):
        """∂_i(gh) = ∂_i g + (∂_i h) g^-1."""
        for g, h in self.pairs:
            i = self.rng.randint(1, 4)
            left = fox_derivative(i, multiply(g, h))
            right = fox_derivative(i, g) + fox_derivative(i, h) * ring(invert(g))
            assert left == right

    def test_inverse_rule(self):
        """∂_i(g^-1) = -(∂_i g) g."""
        for g, _ in self.pairs:
            i = self.rng.randint(1, 4)
            assert fox_derivative(i, invert(g)) == -(fox_derivative(i, g) * ring(g))

    def test_commutator_rule(self):
        """∂[g,h] = ∂g + (∂h)g^-1 - (∂g)gh^-1g^-1 - (∂h)hgh^-1g^-1."""
        for g, h in self.pairs:
            i = self.rng.randint(1, 4)
            dg, dh = fox_derivative(i, g), fox_derivative(i, h)
            g_inv, h_inv = invert(g), invert(h)
            expected = (
                dg
                + dh * ring(g_inv)
                - dg * ring(multiply(multiply(g, h_inv), g_inv))
                - dh * ring(multiply(multiply(h, g), multiply(h_inv, g_inv)))
            )
            assert fox_derivative(i, commutator(g, h)) == expected

    def test_fundamental_identity(self):
        """Σ involute(∂_i w)(x_i - 1) = w - 1."""
        one = GroupRingElement.one(4)
        for w, _ in self.pairs:
            total = GroupRingElement.zero(4)
            for i in range(1, 5):
                total = total + fox_derivative(i, w).involute() * (ring(generator(i)) - one)
            assert total == ring(w) - one


class TestLeftDerivative:
    """The standard convention is reachable only through the involution."""

    def test_left_product_rule(self):
        """D_i(gh) = D_i g + g D_i h."""
        rng = Random(8)
        for _ in range(200):
            g, h = random_word(4, 10, rng), random_word(4, 10, rng)
            i = rng.randint(1, 4)
            expected = left_fox_derivative(i, g) + ring(g) * left_fox_derivative(i, h)
            assert left_fox_derivative(i, multiply(g, h)) == expected

    def test_left_derivative_of_inverse_generator(self):
        """D_1(x1^-1) = -x1^-1."""
        assert left_fox_derivative(1, invert(generator(1))) == -ring(invert(generator(1)))


class TestProjectedDerivatives:
    """Derivatives with terms projected into F/F^(k)."""

    def test_level_one_is_abelian(self):
        """At level 1, ∂_2([x1,x2]) becomes x1^-1 - 1, still nonzero."""
        result = fox_derivative(2, parse_word('[x1,x2]'), 1)
        assert not result.is_zero
        assert result == parse_ring('x1^-1 + -1', level=1)

    def test_level_zero_is_augmentation(self):
        """Z[F/F^(0)] = Z, so the derivative collapses to its augmentation."""
        w = parse_word('x1 x2 x1^-1 x1^-1')
        assert fox_derivative(1, w, 0).augmentation() == -1
        assert len(fox_derivative(1, w, 0)) == 1

    def test_projection_commutes_with_derivative(self):
        rng = Random(21)
        for _ in range(100):
            w = random_word(4, 12, rng)
            i = rng.randint(1, 4)
            assert fox_derivative(i, w).project(1) == fox_derivative(i, w, 1)


class TestFoxVector:
    """Tests for the coordinate vector (∂_1 w, ..., ∂_r w)."""

    def test_identity_is_zero_vector(self):
        vector = fox_vector(identity())
        assert vector.is_zero
        assert len(vector) == 4

    def test_coordinates_match_derivatives(self):
        w = parse_word('[x1,x2][x3,x4]')
        vector = fox_vector(w, 2)
        for i in range(1, 5):
            assert vector.coordinate(i) == fox_derivative(i, w, 2)
        assert vector.level.k == 2
        assert vector.rank == 4
