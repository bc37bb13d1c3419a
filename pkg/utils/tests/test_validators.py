"""
Tests for the shared validators.
"""
import pytest
from fractions import Fraction

from utils.validators import (
    IndexValidator,
    LevelValidator,
    OmegaValidator,
    RationalValidator,
)
from utils.exceptions import (
    InvalidFormError,
    InvalidWordError,
    PlanError,
    RankMismatchError,
    ResourceCapExceeded,
)


class TestIndexValidator:

    def test_valid_rank(self):
        assert IndexValidator.validate_rank(4) is True

    @pytest.mark.parametrize('rank', [0, -1, 100, '4'])
    def test_invalid_rank(self, rank):
        with pytest.raises(InvalidWordError):
            IndexValidator.validate_rank(rank)

    def test_index_bounds(self):
        assert IndexValidator.validate_index(4, 4) is True
        with pytest.raises(InvalidWordError):
            IndexValidator.validate_index(5, 4)
        with pytest.raises(InvalidWordError):
            IndexValidator.validate_index(0, 4)

    def test_same_rank(self):
        assert IndexValidator.validate_same_rank(2, 2, 2) is True
        with pytest.raises(RankMismatchError):
            IndexValidator.validate_same_rank(2, 4)


class TestLevelValidator:

    def test_within_cap(self):
        assert LevelValidator.validate_depth(4) is True

    def test_negative_level(self):
        with pytest.raises(ValueError):
            LevelValidator.validate_depth(-1)

    def test_depth_cap_from_settings(self, settings):
        settings.CONCORDIA_MAX_DEPTH = 2
        with pytest.raises(ResourceCapExceeded) as excinfo:
            LevelValidator.validate_depth(3)
        assert excinfo.value.requested == 3
        assert 'CONCORDIA_MAX_DEPTH' in str(excinfo.value)

    def test_term_cap(self, settings):
        settings.CONCORDIA_MAX_TERMS = 10
        assert LevelValidator.validate_terms(10) is True
        with pytest.raises(ResourceCapExceeded) as excinfo:
            LevelValidator.validate_terms(11)
        assert excinfo.value.cap == 'terms'


class TestOmegaValidator:

    def test_unit_points(self):
        assert OmegaValidator.validate_unit(-1) is True
        assert OmegaValidator.validate_unit(complex(0.6, 0.8)) is True

    def test_off_circle(self):
        with pytest.raises(InvalidFormError):
            OmegaValidator.validate_unit(0.5 + 0.5j)


class TestRationalValidator:

    @pytest.mark.parametrize('value,expected', [
        (100, Fraction(100)),
        ('7/2', Fraction(7, 2)),
        (' 3 ', Fraction(3)),
        (Fraction(1, 3), Fraction(1, 3)),
        ('2.5', Fraction(5, 2)),
    ])
    def test_parse(self, value, expected):
        assert RationalValidator.parse_positive(value) == expected

    @pytest.mark.parametrize('value', [0, '-1', 'abc', '1/0'])
    def test_rejects(self, value):
        with pytest.raises(PlanError):
            RationalValidator.parse_positive(value)
