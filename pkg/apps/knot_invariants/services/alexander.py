"""
Alexander polynomial and Arf invariant of a Seifert matrix.
"""
import logging

import sympy as sp

from apps.knot_invariants.services.forms import SeifertMatrix
from apps.knot_invariants.services.laurent import T, LaurentPoly

logger = logging.getLogger(__name__)


def alexander_poly(V: SeifertMatrix) -> LaurentPoly:
    """det(V - t V^T), lowest exponent 0 and positive leading coefficient."""
    if not V.size:
        return LaurentPoly.constant(1)
    matrix = V.as_sympy() - T * V.as_sympy().T
    return LaurentPoly.from_sympy(sp.expand(matrix.det(method='berkowitz'))).normalized()


def arf(V: SeifertMatrix) -> int:
    """0 iff Δ(-1) ≡ ±1 mod 8."""
    value = abs(int(alexander_poly(V).evaluate(-1)))
    result = 0 if value % 8 in (1, 7) else 1
    logger.debug(f"Arf invariant {result}", extra={'delta_at_minus_one': value, 'genus': V.genus})
    return result
