"""Seifert-matrix models of odd-dimensional knots."""

import logging
from dataclasses import dataclass
from typing import Dict, Optional, Sequence, Tuple

from sympy import Matrix, zeros

from ..algebra.laurent import LaurentPolynomial
from ..algebra.polymatrix import PolyMatrix, quotient_order
from ..exceptions import InvalidKnotError, SignMismatchError

logger = logging.getLogger(__name__)

IntMatrix = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class SeifertKnot:
    """Integer Seifert matrix with its hermitian sign.

    ``sign`` is (-1)^(m+1) for a knot in S^(2m+1): +1 for classical knots.
    """

    matrix: IntMatrix
    sign: int = 1
    name: Optional[str] = None

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.matrix)
        if any(len(row) != len(rows) for row in rows):
            raise InvalidKnotError(f"Seifert matrix of {self.label} is not square")
        if self.sign not in (1, -1):
            raise InvalidKnotError(f"sign must be +1 or -1, got {self.sign}")
        object.__setattr__(self, "matrix", rows)

    @classmethod
    def from_rows(
        cls, rows: Sequence[Sequence[int]], sign: int = 1, name: Optional[str] = None
    ) -> "SeifertKnot":
        """Build a knot from nested integer lists."""
        return cls(tuple(tuple(r) for r in rows), sign, name)

    @property
    def size(self) -> int:
        return len(self.matrix)

    @property
    def label(self) -> str:
        return self.name or f"<{len(self.matrix)}x{len(self.matrix)} Seifert matrix>"

    def to_sympy(self) -> Matrix:
        """The Seifert matrix as a sympy Matrix."""
        if not self.matrix:
            return zeros(0, 0)
        return Matrix(self.matrix)

    def to_json(self) -> Dict:
        return {
            "name": self.name,
            "epsilon": self.sign,
            "matrix": [list(row) for row in self.matrix],
        }


def intersection_form(k: SeifertKnot) -> Matrix:
    """a - eps * a^T."""
    a = k.to_sympy()
    return a - k.sign * a.T


def validate(k: SeifertKnot) -> bool:
    """True iff det(a - eps * a^T) = +-1."""
    return abs(intersection_form(k).det()) == 1


def _require_valid(k: SeifertKnot) -> None:
    if not validate(k):
        det = intersection_form(k).det()
        raise InvalidKnotError(
            f"{k.label}: det(A - eps*A^T) = {det}, expected +-1"
        )


def mirror_inverse(k: SeifertKnot) -> SeifertKnot:
    """Seifert model -a^T of the reversed mirror image."""
    _require_valid(k)
    negated = tuple(tuple(-k.matrix[j][i] for j in range(k.size)) for i in range(k.size))
    name = f"-{k.name}" if k.name else None
    return SeifertKnot(negated, k.sign, name)


def connected_sum(k1: SeifertKnot, k2: SeifertKnot) -> SeifertKnot:
    """Block-diagonal Seifert model of k1 # k2."""
    if k1.sign != k2.sign:
        raise SignMismatchError(
            f"cannot add {k1.label} (sign {k1.sign}) and {k2.label} (sign {k2.sign})"
        )
    _require_valid(k1)
    _require_valid(k2)
    n1, n2 = k1.size, k2.size
    rows = [list(row) + [0] * n2 for row in k1.matrix]
    rows += [[0] * n1 + list(row) for row in k2.matrix]
    name = f"{k1.name}#{k2.name}" if k1.name and k2.name else None
    return SeifertKnot.from_rows(rows, k1.sign, name)


def presentation_matrix(k: SeifertKnot) -> PolyMatrix:
    """Presentation t*a - eps*a^T of the Alexander module; columns are relations."""
    _require_valid(k)
    n = k.size
    entries = [
        [
            LaurentPolynomial({1: k.matrix[i][j], 0: -k.sign * k.matrix[j][i]})
            for j in range(n)
        ]
        for i in range(n)
    ]
    return PolyMatrix(entries, shape=(n, n))


def alexander_polynomial(k: SeifertKnot) -> LaurentPolynomial:
    """Normalized det(t*a - eps*a^T)."""
    delta = quotient_order(presentation_matrix(k))
    logger.debug(f"Alexander polynomial of {k.label}: {delta}")
    return delta
