"""
Seifert matrices and Hermitian Laurent intersection forms.
"""
from dataclasses import dataclass
from typing import Sequence, Tuple, Union
import logging

import numpy as np
import sympy as sp
from scipy.linalg import block_diag

from apps.knot_invariants.services.laurent import T, LaurentPoly
from utils.exceptions import InvalidFormError, InvalidSeifertMatrixError

logger = logging.getLogger(__name__)

IntRows = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class SeifertMatrix:
    """
    A 2g x 2g integer matrix V with V - V^T unimodular.
    """

    entries: IntRows

    def __post_init__(self):
        size = len(self.entries)
        if any(len(row) != size for row in self.entries):
            raise InvalidSeifertMatrixError("Seifert matrix must be square")
        if size % 2:
            raise InvalidSeifertMatrixError(f"Seifert matrix must have even size, got {size}")
        if size:
            skew = self.as_sympy() - self.as_sympy().T
            determinant = skew.det()
            if abs(determinant) != 1:
                raise InvalidSeifertMatrixError(
                    f"det(V - V^T) = {determinant}; a Seifert matrix needs ±1"
                )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> 'SeifertMatrix':
        return cls(tuple(tuple(int(v) for v in row) for row in rows))

    @classmethod
    def empty(cls) -> 'SeifertMatrix':
        """The unknot."""
        return cls(())

    @property
    def size(self) -> int:
        return len(self.entries)

    @property
    def genus(self) -> int:
        return self.size // 2

    def as_array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64).reshape(self.size, self.size)

    def as_sympy(self) -> sp.Matrix:
        return sp.Matrix(self.size, self.size, [v for row in self.entries for v in row])

    def transpose(self) -> 'SeifertMatrix':
        return SeifertMatrix.from_rows(self.as_array().T.tolist())


LEFT_TREFOIL = SeifertMatrix(((1, -1), (0, 1)))
FIGURE_EIGHT = SeifertMatrix(((1, 1), (0, -1)))


def connected_sum(a: SeifertMatrix, b: SeifertMatrix) -> SeifertMatrix:
    """Block sum; a Seifert matrix of the connected sum."""
    if not a.size:
        return b
    if not b.size:
        return a
    return SeifertMatrix.from_rows(block_diag(a.as_array(), b.as_array()).tolist())


@dataclass(frozen=True)
class HermitianLaurentMatrix:
    """
    Square matrix over Z[t, t^-1] with entry(i, j)(t) = entry(j, i)(t^-1).
    """

    entries: Tuple[Tuple[LaurentPoly, ...], ...]

    def __post_init__(self):
        size = len(self.entries)
        if any(len(row) != size for row in self.entries):
            raise InvalidFormError("Hermitian form must be square")
        for i in range(size):
            for j in range(i, size):
                if self.entries[i][j] != self.entries[j][i].conjugate():
                    raise InvalidFormError(f"Entry ({i + 1},{j + 1}) breaks the Hermitian symmetry")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Union[LaurentPoly, int]]]) -> 'HermitianLaurentMatrix':
        return cls(tuple(
            tuple(v if isinstance(v, LaurentPoly) else LaurentPoly.constant(v) for v in row)
            for row in rows
        ))

    @classmethod
    def from_seifert(cls, V: SeifertMatrix) -> 'HermitianLaurentMatrix':
        """(1 - t) V + (1 - t^-1) V^T."""
        one_minus_t = 1 - LaurentPoly.t()
        one_minus_t_inv = one_minus_t.conjugate()
        return cls(tuple(
            tuple(
                one_minus_t * V.entries[i][j] + one_minus_t_inv * V.entries[j][i]
                for j in range(V.size)
            )
            for i in range(V.size)
        ))

    @property
    def size(self) -> int:
        return len(self.entries)

    def evaluate(self, omega: complex) -> np.ndarray:
        """The Hermitian complex matrix at t = omega."""
        return np.array(
            [[entry.evaluate(complex(omega)) for entry in row] for row in self.entries],
            dtype=np.complex128,
        ).reshape(self.size, self.size)

    def evaluate_many(self, omegas: np.ndarray) -> np.ndarray:
        """Stack of evaluations, shape (len(omegas), size, size)."""
        omegas = np.asarray(omegas, dtype=np.complex128)
        stack = np.zeros((len(omegas), self.size, self.size), dtype=np.complex128)
        for i, row in enumerate(self.entries):
            for j, entry in enumerate(row):
                for e, c in entry.items():
                    stack[:, i, j] += c * omegas ** e
        return stack

    def as_sympy(self) -> sp.Matrix:
        return sp.Matrix(self.size, self.size, [e.to_sympy() for row in self.entries for e in row])

    def determinant(self) -> LaurentPoly:
        if not self.size:
            return LaurentPoly.constant(1)
        return LaurentPoly.from_sympy(sp.expand(self.as_sympy().det(method='berkowitz')), T)

    def block_sum(self, other: 'HermitianLaurentMatrix') -> 'HermitianLaurentMatrix':
        zero = LaurentPoly()
        rows = [tuple(row) + (zero,) * other.size for row in self.entries]
        rows += [(zero,) * self.size + tuple(row) for row in other.entries]
        return HermitianLaurentMatrix(tuple(rows))

    def __str__(self):
        return '[' + '; '.join(', '.join(str(e) for e in row) for row in self.entries) + ']'


FormLike = Union[HermitianLaurentMatrix, SeifertMatrix]


def as_form(form: FormLike) -> HermitianLaurentMatrix:
    if isinstance(form, SeifertMatrix):
        return HermitianLaurentMatrix.from_seifert(form)
    return form


def block_sum(*forms: FormLike) -> HermitianLaurentMatrix:
    result = HermitianLaurentMatrix(())
    for form in forms:
        result = result.block_sum(as_form(form))
    return result


def _two_by_two(diagonal: LaurentPoly) -> HermitianLaurentMatrix:
    return HermitianLaurentMatrix.from_rows([[diagonal, 1], [1, diagonal]])


def lambda_J() -> HermitianLaurentMatrix:
    """[[2 - t - t^-1, 1], [1, 2 - t - t^-1]]."""
    t = LaurentPoly.t()
    return _two_by_two(2 - t - t.conjugate())


def lambda_J_flipped() -> HermitianLaurentMatrix:
    """lambda_J with both diagonal entries negated."""
    t = LaurentPoly.t()
    return _two_by_two(t + t.conjugate() - 2)
