"""Exact linear algebra over Q[t^+-1]: Hermite forms, kernels and submodules."""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import Matrix
from sympy.polys.matrices import DomainMatrix

from ..exceptions import (
    AmbientMismatchError,
    DegeneratePresentationError,
    DimensionMismatchError,
)
from .laurent import (
    ONE,
    ZERO,
    LaurentLike,
    LaurentPolynomial,
    RationalFunction,
    as_laurent,
    divides,
    exact_quotient,
    laurent_divmod,
    laurent_gcdex,
    normalize_alexander,
)

logger = logging.getLogger(__name__)

Vector = Tuple[LaurentPolynomial, ...]


class PolyMatrix:
    """Dense matrix with LaurentPolynomial entries.

    Shapes with a zero dimension are legal; ``shape`` must then be given
    explicitly because it cannot be read off the entries.
    """

    __slots__ = ("_rows", "_cols", "_entries")

    def __init__(
        self,
        entries: Sequence[Sequence[LaurentLike]] = (),
        shape: Optional[Tuple[int, int]] = None,
    ):
        rows = tuple(tuple(as_laurent(x) for x in row) for row in entries)
        if shape is None:
            shape = (len(rows), len(rows[0]) if rows else 0)
        n_rows, n_cols = shape
        if n_cols == 0 and not rows:
            rows = tuple(() for _ in range(n_rows))
        if len(rows) != n_rows or any(len(row) != n_cols for row in rows):
            raise DimensionMismatchError(
                f"entries do not match declared shape {n_rows}x{n_cols}"
            )
        self._rows = n_rows
        self._cols = n_cols
        self._entries = rows

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[LaurentLike]], rows: int) -> "PolyMatrix":
        """Build a rows-by-len(columns) matrix from column vectors."""
        for column in columns:
            if len(column) != rows:
                raise DimensionMismatchError(
                    f"column of length {len(column)} in a matrix with {rows} rows"
                )
        entries = [[columns[j][i] for j in range(len(columns))] for i in range(rows)]
        return cls(entries, shape=(rows, len(columns)))

    @classmethod
    def from_integers(cls, entries: Sequence[Sequence[int]]) -> "PolyMatrix":
        """Lift an integer matrix to constant entries."""
        n = len(entries)
        return cls(entries, shape=(n, len(entries[0]) if n else 0))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "PolyMatrix":
        """The rows-by-cols zero matrix."""
        return cls([[ZERO] * cols for _ in range(rows)], shape=(rows, cols))

    @classmethod
    def scalar(cls, n: int, value: LaurentLike) -> "PolyMatrix":
        """value times the n-by-n identity."""
        value = as_laurent(value)
        return cls(
            [[value if i == j else ZERO for j in range(n)] for i in range(n)],
            shape=(n, n),
        )

    @classmethod
    def identity(cls, n: int) -> "PolyMatrix":
        return cls.scalar(n, ONE)

    @classmethod
    def from_json(cls, data: Dict) -> "PolyMatrix":
        """Inverse of ``to_json``."""
        rows, cols = data["shape"]
        entries = [[LaurentPolynomial.from_json(x) for x in row] for row in data["entries"]]
        return cls(entries, shape=(rows, cols))

    @property
    def rows(self) -> int:
        return self._rows

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def shape(self) -> Tuple[int, int]:
        return self._rows, self._cols

    @property
    def is_square(self) -> bool:
        return self._rows == self._cols

    @property
    def is_zero(self) -> bool:
        return all(x.is_zero for row in self._entries for x in row)

    def __getitem__(self, index: Tuple[int, int]) -> LaurentPolynomial:
        i, j = index
        return self._entries[i][j]

    def column(self, j: int) -> Vector:
        """Column j as a tuple."""
        return tuple(row[j] for row in self._entries)

    def columns(self) -> List[Vector]:
        return [self.column(j) for j in range(self._cols)]

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix.from_columns(list(self._entries), self._cols)

    def involute(self) -> "PolyMatrix":
        """Apply t -> t^-1 entrywise."""
        return PolyMatrix(
            [[x.involute() for x in row] for row in self._entries], shape=self.shape
        )

    def scaled(self, value: LaurentLike) -> "PolyMatrix":
        """Multiply every entry by ``value``."""
        value = as_laurent(value)
        return PolyMatrix(
            [[value * x for x in row] for row in self._entries], shape=self.shape
        )

    def _check_same_shape(self, other: "PolyMatrix") -> None:
        if self.shape != other.shape:
            raise DimensionMismatchError(f"shapes {self.shape} and {other.shape} differ")

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        self._check_same_shape(other)
        return PolyMatrix(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self._entries, other._entries)],
            shape=self.shape,
        )

    def __neg__(self) -> "PolyMatrix":
        return self.scaled(-1)

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        return self + (-other)

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self._cols != other._rows:
            raise DimensionMismatchError(
                f"cannot multiply {self.shape} by {other.shape}"
            )
        other_columns = other.columns()
        entries = []
        for row in self._entries:
            out = []
            for column in other_columns:
                total = ZERO
                for a, b in zip(row, column):
                    if not a.is_zero and not b.is_zero:
                        total = total + a * b
                out.append(total)
            entries.append(out)
        return PolyMatrix(entries, shape=(self._rows, other._cols))

    def apply(self, vector: Sequence[LaurentLike]) -> Vector:
        """Matrix times column vector."""
        if len(vector) != self._cols:
            raise DimensionMismatchError(
                f"vector of length {len(vector)} for a matrix with {self._cols} columns"
            )
        column = PolyMatrix.from_columns([list(vector)], self._cols)
        return (self @ column).column(0)

    def _cleared(self) -> Tuple[Matrix, List[int]]:
        """Multiply each column by a power of t so every entry lies in Q[t]."""
        shifts = []
        exprs = [[None] * self._cols for _ in range(self._rows)]
        for j in range(self._cols):
            column = self.column(j)
            low = min((x.min_exponent for x in column if not x.is_zero), default=0)
            shifts.append(low)
            for i, x in enumerate(column):
                exprs[i][j] = x.shifted(-low).to_expr()
        return Matrix(self._rows, self._cols, lambda i, j: exprs[i][j]), shifts

    def determinant(self) -> LaurentPolynomial:
        """Exact determinant; 1 for the 0x0 matrix."""
        if not self.is_square:
            raise DimensionMismatchError(f"determinant of non-square {self.shape} matrix")
        if self._rows == 0:
            return ONE
        cleared, shifts = self._cleared()
        dm = DomainMatrix.from_Matrix(cleared)
        det = dm.domain.to_sympy(dm.det())
        return LaurentPolynomial.from_expr(det).shifted(sum(shifts))

    def inverse(self) -> List[List[RationalFunction]]:
        """Inverse over Q(t) as a nested list of RationalFunction entries."""
        if not self.is_square:
            raise DimensionMismatchError(f"inverse of non-square {self.shape} matrix")
        if self._rows == 0:
            return []
        if self.determinant().is_zero:
            raise DegeneratePresentationError("matrix is singular over Q(t)")
        cleared, shifts = self._cleared()
        inverse = DomainMatrix.from_Matrix(cleared).to_field().inv().to_Matrix()
        return [
            [
                RationalFunction.from_expr(inverse[i, j])
                * LaurentPolynomial.monomial(-shifts[i])
                for j in range(self._cols)
            ]
            for i in range(self._rows)
        ]

    def to_json(self) -> Dict:
        return {
            "shape": [self._rows, self._cols],
            "entries": [[x.to_json() for x in row] for row in self._entries],
        }

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.shape == other.shape and self._entries == other._entries

    def __hash__(self) -> int:
        return hash((self.shape, self._entries))

    def __repr__(self) -> str:
        return f"PolyMatrix({self._rows}x{self._cols})"

    def __str__(self) -> str:
        if self._rows == 0 or self._cols == 0:
            return f"[] ({self._rows}x{self._cols})"
        return "\n".join(
            "[" + ", ".join(str(x) for x in row) + "]" for row in self._entries
        )


def block_diagonal(*blocks: PolyMatrix) -> PolyMatrix:
    """Block-diagonal matrix with the given blocks in order."""
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    entries = [[ZERO] * cols for _ in range(rows)]
    r0 = c0 = 0
    for block in blocks:
        for i in range(block.rows):
            for j in range(block.cols):
                entries[r0 + i][c0 + j] = block[i, j]
        r0 += block.rows
        c0 += block.cols
    return PolyMatrix(entries, shape=(rows, cols))


def hstack(*blocks: PolyMatrix) -> PolyMatrix:
    """Matrices with equal row counts, placed side by side."""
    if not blocks:
        raise DimensionMismatchError("hstack of no matrices")
    rows = blocks[0].rows
    columns: List[Vector] = []
    for block in blocks:
        if block.rows != rows:
            raise DimensionMismatchError(f"cannot stack {block.rows} rows onto {rows}")
        columns.extend(block.columns())
    return PolyMatrix.from_columns(columns, rows)


def _combine(a: LaurentPolynomial, x: List[LaurentPolynomial], b: LaurentPolynomial, y: List[LaurentPolynomial]) -> List[LaurentPolynomial]:
    return [a * p + b * q for p, q in zip(x, y)]


def _column_echelon(columns: List[List[LaurentPolynomial]], pivot_rows: int) -> Tuple[List[List[LaurentPolynomial]], List[int]]:
    """Unimodular column reduction on the first ``pivot_rows`` coordinates.

    Returns the transformed columns (pivot columns first, in order of their
    pivot rows) and the pivot row of each pivot column. Rows past
    ``pivot_rows`` ride along untouched by pivot selection.
    """
    cols = [list(c) for c in columns]
    pivots: List[int] = []
    for i in range(pivot_rows):
        p = len(pivots)
        live = [j for j in range(p, len(cols)) if not cols[j][i].is_zero]
        if not live:
            continue
        cols[p], cols[live[0]] = cols[live[0]], cols[p]
        for j in live[1:]:
            a, b = cols[p][i], cols[j][i]
            s, u, g = laurent_gcdex(a, b)
            a_g, b_g = exact_quotient(a, g), exact_quotient(b, g)
            cols[p], cols[j] = (
                _combine(s, cols[p], u, cols[j]),
                _combine(a_g, cols[j], -b_g, cols[p]),
            )
        pivot = cols[p][i]
        unit = LaurentPolynomial.monomial(
            -pivot.shift, 1 / pivot.coefficient(pivot.max_exponent)
        )
        cols[p] = [unit * x for x in cols[p]]
        pivots.append(i)
    return cols, pivots


def _reduce_off_pivot(cols: List[List[LaurentPolynomial]], pivots: List[int]) -> None:
    for k, row in enumerate(pivots):
        pivot = cols[k][row]
        for left in range(k):
            quotient, _ = laurent_divmod(cols[left][row], pivot)
            if not quotient.is_zero:
                cols[left] = _combine(ONE, cols[left], -quotient, cols[k])


def hermite_form(m: PolyMatrix) -> PolyMatrix:
    """Canonical column Hermite form over Q[t^+-1].

    Pivots are monic polynomials with nonzero constant term, entries to the
    left of a pivot are reduced below the pivot degree and zero columns are
    dropped, so equal column spans give identical matrices.
    """
    cols, pivots = _column_echelon([list(c) for c in m.columns()], m.rows)
    cols = cols[: len(pivots)]
    _reduce_off_pivot(cols, pivots)
    return PolyMatrix.from_columns(cols, m.rows)


def kernel_basis(m: PolyMatrix) -> PolyMatrix:
    """Generators of {z : m z = 0} over Q[t^+-1], as columns."""
    n = m.cols
    augmented = [
        list(column) + [ONE if i == j else ZERO for i in range(n)]
        for j, column in enumerate(m.columns())
    ]
    cols, pivots = _column_echelon(augmented, m.rows)
    kernel = [c[m.rows:] for c in cols[len(pivots):]]
    return PolyMatrix.from_columns(kernel, n)


def _pivot_rows(canonical: PolyMatrix) -> List[int]:
    rows = []
    for j in range(canonical.cols):
        column = canonical.column(j)
        rows.append(next(i for i, x in enumerate(column) if not x.is_zero))
    return rows


class Submodule:
    """Submodule of a module presented by a square matrix.

    Stored by its preimage in the free cover: the span of the supplied
    generators together with every presentation column, kept in canonical
    column Hermite form.
    """

    def __init__(self, presentation: PolyMatrix, spanning: PolyMatrix):
        """Initialize submodule.

        Args:
            presentation: square relation matrix of the ambient module
            spanning: columns generating the submodule, before adjoining relations
        """
        if spanning.rows != presentation.rows:
            raise DimensionMismatchError(
                f"generators have {spanning.rows} rows, ambient rank is {presentation.rows}"
            )
        self.presentation = presentation
        self.spanning = spanning
        self.generators = hermite_form(hstack(spanning, presentation))
        self._pivots = _pivot_rows(self.generators)

    @classmethod
    def span(cls, presentation: PolyMatrix, vectors: Sequence[Sequence[LaurentLike]]) -> "Submodule":
        """Submodule generated by ``vectors``."""
        return cls(presentation, PolyMatrix.from_columns(list(vectors), presentation.rows))

    @classmethod
    def zero(cls, presentation: PolyMatrix) -> "Submodule":
        """The zero submodule."""
        return cls(presentation, PolyMatrix.zeros(presentation.rows, 0))

    @classmethod
    def full(cls, presentation: PolyMatrix) -> "Submodule":
        """The whole ambient module."""
        return cls(presentation, PolyMatrix.identity(presentation.rows))

    @property
    def ambient_rank(self) -> int:
        return self.presentation.rows

    def contains(self, vector: Sequence[LaurentLike]) -> bool:
        """Membership test; see ``submodule_membership``."""
        return submodule_membership(self, vector)

    def image(self, matrix: PolyMatrix) -> "Submodule":
        """Image under the endomorphism of the free cover given by ``matrix``."""
        return Submodule(self.presentation, matrix @ self.spanning)

    def scaled(self, n: int) -> "Submodule":
        """Same submodule, generators multiplied by t^n."""
        return Submodule(self.presentation, self.spanning.scaled(LaurentPolynomial.monomial(n)))

    def order(self) -> LaurentPolynomial:
        """Order of the ambient module modulo this submodule."""
        return quotient_order(self.generators)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Submodule):
            return NotImplemented
        return self.presentation == other.presentation and self.generators == other.generators

    def __hash__(self) -> int:
        return hash((self.presentation, self.generators))

    def __repr__(self) -> str:
        return f"Submodule(rank={self.ambient_rank}, spanning={self.spanning.cols})"


def submodule_membership(s: Submodule, v: Sequence[LaurentLike]) -> bool:
    """True iff v lies in the Q[t^+-1]-span of ``s.generators``."""
    if len(v) != s.ambient_rank:
        raise DimensionMismatchError(
            f"vector of length {len(v)} in ambient rank {s.ambient_rank}"
        )
    residual = [as_laurent(x) for x in v]
    for k, row in enumerate(s._pivots):
        entry = residual[row]
        if entry.is_zero:
            continue
        pivot = s.generators[row, k]
        if not divides(pivot, entry):
            return False
        quotient = exact_quotient(entry, pivot)
        residual = _combine(ONE, residual, -quotient, list(s.generators.column(k)))
    return all(x.is_zero for x in residual)


def submodule_eq(a: Submodule, b: Submodule) -> bool:
    """Equality of submodules of the same ambient module, via canonical forms.

    Raises:
        AmbientMismatchError: if the presentations differ
    """
    if a.presentation != b.presentation:
        raise AmbientMismatchError("submodules live in different ambient modules")
    return a.generators == b.generators


def kernel_mod_delta(
    c: PolyMatrix, delta: LaurentPolynomial, presentation: Optional[PolyMatrix] = None
) -> Submodule:
    """Submodule of {x : x^T c = 0 mod delta, entrywise}.

    Computed as the projection onto the first g coordinates of the syzygies
    of [c^T | -delta*I]. The ambient presentation defaults to delta*I.
    """
    if delta.is_zero:
        raise DegeneratePresentationError("kernel modulo a zero polynomial")
    g, m = c.shape
    if presentation is None:
        presentation = PolyMatrix.scalar(g, delta)
    system = hstack(c.transpose(), PolyMatrix.scalar(m, -delta))
    syzygies = kernel_basis(system)
    projected = [column[:g] for column in syzygies.columns()]
    logger.debug(f"kernel mod delta: {len(projected)} syzygies in rank {g}")
    return Submodule(presentation, PolyMatrix.from_columns(projected, g))


def quotient_order(presentation: PolyMatrix) -> LaurentPolynomial:
    """Order of the torsion module presented by a square matrix."""
    if not presentation.is_square:
        raise DimensionMismatchError(
            f"order of a non-square {presentation.shape} presentation"
        )
    return normalize_alexander(presentation.determinant())
