"""
Levine-Tristram signatures and the infinite-cyclic rho invariant.

The determinant of a Hermitian Laurent form is symmetric, so it is a
polynomial g in c = (t + t^-1)/2 (t^k + t^-k = 2 T_k(c)). Unit-circle
points where the signature can jump are t = e^{iθ} with cos θ a real
root of g in [-1, 1]; roots are isolated exactly and counted against a
Sturm sequence. Arc values come from numpy eigenvalues at arc midpoints
with an mpmath fallback when an eigenvalue is near zero.

When every jump has cos θ in {0, ±1/2, ±1} the angles are rational
multiples of π and the integral is an exact Fraction; otherwise it is a
float with an error bound.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple, Union
import cmath
import logging
import math

import mpmath
import numpy as np
import sympy as sp
from django.conf import settings

from apps.knot_invariants.services.forms import FormLike, HermitianLaurentMatrix, as_form
from apps.knot_invariants.services.laurent import LaurentPoly
from utils.exceptions import InvalidFormError
from utils.validators import OmegaValidator

logger = logging.getLogger(__name__)

C = sp.Symbol('c')

# cos θ -> θ/π on [0, π] for the cosines whose angle is a rational multiple of π.
RATIONAL_ANGLES = {
    sp.Integer(1): Fraction(0),
    sp.Rational(1, 2): Fraction(1, 3),
    sp.Integer(0): Fraction(1, 2),
    sp.Rational(-1, 2): Fraction(2, 3),
    sp.Integer(-1): Fraction(1),
}

Rho = Union[Fraction, float]


def chebyshev_form(p: LaurentPoly) -> sp.Poly:
    """
    g with p(t) = g((t + t^-1)/2), over ZZ in the symbol c.

    Raises:
        InvalidFormError: If p is not palindromic with an even span
    """
    if not p.is_symmetric:
        span = p.min_degree + p.max_degree
        if not p.is_palindromic or span % 2:
            raise InvalidFormError(f"{p} is not palindromic")
        p = p.shift(-span // 2)
    expr = sp.Integer(p[0])
    for k in range(1, p.max_degree + 1):
        if p[k]:
            expr += p[k] * 2 * sp.chebyshevt(k, C)
    return sp.Poly(sp.expand(expr), C, domain=sp.ZZ)


def sturm_root_count(g: sp.Poly, a, b) -> int:
    """Distinct real roots of g in (a, b], by sign variations of a Sturm sequence."""
    g = sp.Poly(g, C).sqf_part()
    if g.degree() < 1:
        return 0
    sequence = sp.sturm(g)

    def variations(x) -> int:
        signs = [sp.sign(q.eval(x)) for q in sequence]
        signs = [s for s in signs if s != 0]
        return sum(1 for u, v in zip(signs, signs[1:]) if u != v)

    return variations(sp.Rational(a)) - variations(sp.Rational(b))


def _circle_roots(g: sp.Poly) -> List:
    """Distinct real roots of g in [-1, 1], ascending, checked against a Sturm count."""
    if g.is_zero:
        raise InvalidFormError("Degenerate form: the determinant vanishes identically")
    squarefree = g.sqf_part()
    if squarefree.degree() < 1:
        return []
    roots = [r for r in squarefree.real_roots() if -1 <= r <= 1]
    expected = sturm_root_count(squarefree, -1, 1) + (1 if squarefree.eval(-1) == 0 else 0)
    if len(roots) != expected:
        raise InvalidFormError(
            f"Root isolation found {len(roots)} roots in [-1, 1], Sturm count says {expected}"
        )
    return sorted(roots)


@dataclass(frozen=True)
class JumpSet:
    """Jump angles in (0, 2π); `fractions` holds θ/π when all are rational multiples of π."""

    angles: Tuple[float, ...]
    fractions: Optional[Tuple[Fraction, ...]]

    @property
    def exact(self) -> bool:
        return self.fractions is not None


def jump_angles(form: FormLike, dps: Optional[int] = None) -> JumpSet:
    """
    Angles θ ∈ (0, 2π) where the signature of the form may change.

    Raises:
        InvalidFormError: If the determinant vanishes identically or root isolation fails
    """
    dps = dps or settings.CONCORDIA_MPMATH_DPS
    g = chebyshev_form(as_form(form).determinant())
    roots = [r for r in _circle_roots(g) if r != 1]

    if all(r in RATIONAL_ANGLES for r in roots):
        half = sorted(RATIONAL_ANGLES[r] for r in roots)
        fractions = sorted(set(half + [2 - q for q in half]))
        return JumpSet(tuple(float(q) * math.pi for q in fractions), tuple(fractions))

    with mpmath.workdps(dps):
        half = sorted(mpmath.acos(mpmath.mpf(str(sp.N(r, dps)))) for r in roots)
        angles = sorted(set(half + [2 * mpmath.pi - a for a in half]))
        return JumpSet(tuple(float(a) for a in angles), None)


@dataclass(frozen=True)
class SignatureProfile:
    """
    Piecewise-constant signature function on the circle.

    arc_values[i] is the signature on the open arc between consecutive jump
    angles, starting from θ = 0.
    """

    jump_angles: Tuple[float, ...]
    arc_values: Tuple[int, ...]
    integral: Rho
    error_bound: float
    exact: bool

    @property
    def arcs(self) -> List[Tuple[float, float]]:
        bounds = (0.0,) + self.jump_angles + (2 * math.pi,)
        return list(zip(bounds, bounds[1:]))

    def value_at(self, theta: float) -> int:
        """Signature on the arc containing theta, for theta off the jump set."""
        theta = theta % (2 * math.pi)
        for (start, end), value in zip(self.arcs, self.arc_values):
            if start < theta < end:
                return value
        raise InvalidFormError(f"θ = {theta} is a jump angle")


@dataclass(frozen=True)
class SignatureSamples:
    thetas: np.ndarray
    omegas: np.ndarray
    signatures: np.ndarray

    @property
    def riemann_integral(self) -> float:
        """Normalised integral of the signature over the circle."""
        return float(np.mean(self.signatures))

    def rows(self) -> List[Tuple[float, float, float, int]]:
        return [
            (float(theta), float(omega.real), float(omega.imag), int(sigma))
            for theta, omega, sigma in zip(self.thetas, self.omegas, self.signatures)
        ]


class SignatureCalculator:
    """
    Signatures of Hermitian Laurent forms on the unit circle.

    Eigenvalues with magnitude below `tolerance` are recomputed with mpmath
    at `dps` digits; what remains below 10^(-dps/2) counts as zero.
    """

    def __init__(self, tolerance: Optional[float] = None, dps: Optional[int] = None):
        self.tolerance = tolerance if tolerance is not None else settings.CONCORDIA_SIGNATURE_TOLERANCE
        self.dps = dps or settings.CONCORDIA_MPMATH_DPS

    def _precise_signature(self, form: HermitianLaurentMatrix, omega) -> int:
        with mpmath.workdps(self.dps):
            w = mpmath.mpc(omega)
            matrix = mpmath.matrix(form.size, form.size)
            for i, row in enumerate(form.entries):
                for j, entry in enumerate(row):
                    matrix[i, j] = mpmath.fsum(c * w ** e for e, c in entry.items())
            eigenvalues = mpmath.eighe(matrix, eigvals_only=True)
            zero = mpmath.mpf(10) ** (-self.dps // 2)
            values = [eigenvalues[i] for i in range(form.size)]
            return sum(1 if v > zero else -1 if v < -zero else 0 for v in values)

    def signature(self, form: FormLike, omega: complex) -> int:
        """
        Signature of the form evaluated at omega.

        Raises:
            InvalidFormError: If |omega| != 1
        """
        OmegaValidator.validate_unit(omega)
        form = as_form(form)
        if not form.size:
            return 0
        eigenvalues = np.linalg.eigvalsh(form.evaluate(omega))
        if np.min(np.abs(eigenvalues)) < self.tolerance:
            logger.debug(
                "Near-zero eigenvalue; switching to mpmath",
                extra={'omega': str(omega), 'dps': self.dps}
            )
            return self._precise_signature(form, omega)
        return int(np.sum(eigenvalues > 0) - np.sum(eigenvalues < 0))

    def profile(self, form: FormLike, exact: bool = True) -> SignatureProfile:
        """
        Jump angles, arc values and the normalised integral.

        `exact=False` forces the floating-point integral even when the jump
        angles are rational multiples of π.
        """
        form = as_form(form)
        jumps = jump_angles(form, self.dps)
        bounds = (0.0,) + jumps.angles + (2 * math.pi,)
        values = tuple(
            self.signature(form, cmath.exp(1j * (start + end) / 2))
            for start, end in zip(bounds, bounds[1:])
        )

        if exact and jumps.exact:
            cuts = (Fraction(0),) + jumps.fractions + (Fraction(2),)
            integral = sum(
                ((end - start) / 2 * value for (start, end), value in zip(zip(cuts, cuts[1:]), values)),
                Fraction(0),
            )
            error_bound = 0.0
        else:
            integral = float(sum(
                (end - start) / (2 * math.pi) * value
                for (start, end), value in zip(zip(bounds, bounds[1:]), values)
            ))
            # Each jump angle is a float rounded from a dps-digit value.
            error_bound = 2 * len(jumps.angles) * max(map(abs, values)) * np.finfo(float).eps

        logger.info(
            f"Signature profile with {len(jumps.angles)} jumps",
            extra={'jumps': len(jumps.angles), 'exact': jumps.exact and exact, 'size': form.size}
        )
        return SignatureProfile(
            jump_angles=jumps.angles,
            arc_values=values,
            integral=integral,
            error_bound=float(error_bound),
            exact=bool(exact and jumps.exact),
        )

    def sample(self, form: FormLike, samples: int) -> SignatureSamples:
        """Signatures at the midpoints θ_j = 2π (j + 1/2) / samples."""
        if samples < 1:
            raise ValueError(f"Need at least one sample, got {samples}")
        form = as_form(form)
        thetas = 2 * np.pi * (np.arange(samples) + 0.5) / samples
        omegas = np.exp(1j * thetas)
        if not form.size:
            return SignatureSamples(thetas, omegas, np.zeros(samples, dtype=np.int64))
        eigenvalues = np.linalg.eigvalsh(form.evaluate_many(omegas))
        near_zero = np.abs(eigenvalues) < self.tolerance
        if near_zero.any():
            logger.warning(
                f"{int(near_zero.any(axis=1).sum())} samples sit on a jump",
                extra={'samples': samples}
            )
        signatures = (
            np.sum(eigenvalues > self.tolerance, axis=1)
            - np.sum(eigenvalues < -self.tolerance, axis=1)
        )
        return SignatureSamples(thetas, omegas, signatures.astype(np.int64))


def lt_signature(form: FormLike, omega: complex) -> int:
    return SignatureCalculator().signature(form, omega)


def signature_profile(form: FormLike, exact: bool = True) -> SignatureProfile:
    return SignatureCalculator().profile(form, exact)


def sample_signatures(form: FormLike, samples: int) -> SignatureSamples:
    return SignatureCalculator().sample(form, samples)


def rho_z(form: FormLike, exact: bool = True) -> Rho:
    """
    Normalised integral of the signature over the circle minus the signature at ω = 1.
    """
    calculator = SignatureCalculator()
    profile = calculator.profile(form, exact)
    at_one = calculator.signature(form, 1)
    return profile.integral - at_one
