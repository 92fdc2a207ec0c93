"""Blanchfield pairings of Seifert-presented knot modules and metabolizer checks."""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple, Union

from sympy import Matrix, eye

from ..algebra.laurent import (
    ONE,
    ZERO,
    LaurentLike,
    LaurentPolynomial,
    RationalFunction,
    TorsionClass,
    as_laurent,
    associated,
    normalize_alexander,
    torsion_reduce,
)
from ..algebra.polymatrix import (
    PolyMatrix,
    Submodule,
    Vector,
    block_diagonal,
    kernel_mod_delta,
    submodule_eq,
)
from ..exceptions import ConventionError, DimensionMismatchError, SignMismatchError
from ..knots.seifert import (
    SeifertKnot,
    alexander_polynomial,
    connected_sum,
    mirror_inverse,
    presentation_matrix,
)

logger = logging.getLogger(__name__)

PairingMatrix = Tuple[Tuple[TorsionClass, ...], ...]


@dataclass(frozen=True)
class BlanchfieldForm:
    """Presented module with its pairing matrix of classes in Q(t)/Z[t^+-1].

    The pairing of basis vectors e_i, e_j is ``pairing[i][j]``; the module is
    the cokernel of ``presentation`` (columns are relations).
    """

    presentation: PolyMatrix
    pairing: PairingMatrix
    sign: int
    delta: LaurentPolynomial
    name: str = ""

    @property
    def rank(self) -> int:
        return self.presentation.rows

    @cached_property
    def scaled_pairing(self) -> PolyMatrix:
        """delta times the pairing representatives; a polynomial matrix."""
        entries = []
        for row in self.pairing:
            out = []
            for value in row:
                scaled = value.representative * self.delta
                if not scaled.is_laurent:
                    raise ConventionError(
                        f"pairing entry {value} of {self.name} has a denominator "
                        f"not dividing {self.delta}"
                    )
                out.append(scaled.numerator)
            entries.append(out)
        return PolyMatrix(entries, shape=(self.rank, self.rank))

    def basis_vector(self, i: int) -> Vector:
        """Standard generator e_i of the module."""
        return tuple(ONE if j == i else ZERO for j in range(self.rank))

    def with_pairing(self, pairing: PairingMatrix) -> "BlanchfieldForm":
        """Same module with a replaced pairing matrix; used for regression fixtures."""
        return BlanchfieldForm(self.presentation, pairing, self.sign, self.delta, self.name)

    def to_json(self) -> Dict:
        return {"name": self.name, "delta": self.delta.to_json()}


@dataclass(frozen=True)
class MetabolizerCandidate:
    """A submodule proposed as a metabolizer, tagged with where it came from."""

    submodule: Submodule
    provenance: str

    @classmethod
    def from_vectors(
        cls, form: BlanchfieldForm, vectors: Sequence[Sequence[LaurentLike]], provenance: str
    ) -> "MetabolizerCandidate":
        """Candidate spanned by ``vectors`` on the module of ``form``."""
        return cls(Submodule.span(form.presentation, vectors), provenance)

    @property
    def generators(self) -> List[Vector]:
        """Generating vectors as supplied, before the relations are adjoined."""
        return self.submodule.spanning.columns()

    def to_json(self) -> Dict:
        return {
            "provenance": self.provenance,
            "generators": [_vector_json(v) for v in self.generators],
        }


def _vector_json(v: Sequence[LaurentPolynomial]) -> List[Dict[str, str]]:
    return [x.to_json() for x in v]


@dataclass(frozen=True)
class Metabolizer:
    verdict: str = field(default="Metabolizer", init=False)

    @property
    def is_metabolizer(self) -> bool:
        return True

    def to_dict(self) -> Dict:
        return {"verdict": self.verdict}


@dataclass(frozen=True)
class NotIsotropic:
    """Two generators whose pairing is a nonzero class."""

    left: Vector
    right: Vector
    value: TorsionClass
    verdict: str = field(default="NotIsotropic", init=False)

    @property
    def is_metabolizer(self) -> bool:
        return False

    def to_dict(self) -> Dict:
        return {
            "verdict": self.verdict,
            "witness": {
                "left": _vector_json(self.left),
                "right": _vector_json(self.right),
                "value": self.value.to_json(),
            },
        }


@dataclass(frozen=True)
class IsotropicNotMaximal:
    """An element of the orthogonal complement outside the candidate."""

    element: Vector
    verdict: str = field(default="IsotropicNotMaximal", init=False)

    @property
    def is_metabolizer(self) -> bool:
        return False

    def to_dict(self) -> Dict:
        return {"verdict": self.verdict, "witness": {"element": _vector_json(self.element)}}


Verdict = Union[Metabolizer, NotIsotropic, IsotropicNotMaximal]


def _check_length(form: BlanchfieldForm, v: Sequence) -> None:
    if len(v) != form.rank:
        raise DimensionMismatchError(f"vector of length {len(v)} for a form of rank {form.rank}")


def pair_elements(
    form: BlanchfieldForm, x: Sequence[LaurentLike], y: Sequence[LaurentLike]
) -> TorsionClass:
    """lambda(x, y) = x^T B conj(y), reduced to its canonical class."""
    _check_length(form, x)
    _check_length(form, y)
    if form.rank == 0:
        return TorsionClass.zero()
    conj_y = [as_laurent(v).involute() for v in y]
    image = form.scaled_pairing.apply(conj_y)
    total = ZERO
    for a, b in zip(x, image):
        total = total + as_laurent(a) * b
    return torsion_reduce(RationalFunction(total, form.delta))


def hermitian_check(form: BlanchfieldForm) -> bool:
    """True iff pairing[i][j] = eps * conj(pairing[j][i]) for every basis pair."""
    for i in range(form.rank):
        for j in range(i, form.rank):
            mirrored = form.pairing[j][i].conjugate()
            if form.sign == -1:
                mirrored = -mirrored
            if form.pairing[i][j] != mirrored:
                logger.debug(f"{form.name}: entry ({i}, {j}) breaks hermitian symmetry")
                return False
    return True


def relations_check(form: BlanchfieldForm) -> bool:
    """True iff every relation column pairs to zero with every basis vector, both sides."""
    for relation in form.presentation.columns():
        for i in range(form.rank):
            e_i = form.basis_vector(i)
            if not pair_elements(form, relation, e_i).is_zero:
                return False
            if not pair_elements(form, e_i, relation).is_zero:
                return False
    return True


def build_form(k: SeifertKnot) -> BlanchfieldForm:
    """Blanchfield form with pairing matrix (t - 1) * (t*a - eps*a^T)^(-T)."""
    presentation = presentation_matrix(k)
    delta = alexander_polynomial(k)
    inverse = presentation.inverse()
    t_minus_one = LaurentPolynomial({1: 1, 0: -1})
    pairing = tuple(
        tuple(torsion_reduce(inverse[j][i] * t_minus_one) for j in range(k.size))
        for i in range(k.size)
    )
    form = BlanchfieldForm(presentation, pairing, k.sign, delta, k.label)
    if not hermitian_check(form):
        raise ConventionError(f"pairing of {k.label} is not {k.sign}-hermitian")
    if not relations_check(form):
        raise ConventionError(f"pairing of {k.label} does not vanish on relations")
    logger.debug(f"Built Blanchfield form of {k.label}, delta = {delta}")
    return form


def direct_sum_neg(f: BlanchfieldForm, g: BlanchfieldForm) -> BlanchfieldForm:
    """The form f (+) -g on the direct sum of the two modules."""
    if f.sign != g.sign:
        raise SignMismatchError(f"cannot sum forms of signs {f.sign} and {g.sign}")
    zero = TorsionClass.zero()
    rows: List[Tuple[TorsionClass, ...]] = []
    for row in f.pairing:
        rows.append(tuple(row) + (zero,) * g.rank)
    for row in g.pairing:
        rows.append((zero,) * f.rank + tuple(-value for value in row))
    return BlanchfieldForm(
        block_diagonal(f.presentation, g.presentation),
        tuple(rows),
        f.sign,
        normalize_alexander(f.delta * g.delta),
        f"{f.name}(+)-{g.name}",
    )


def orthogonal_complement(form: BlanchfieldForm, p: MetabolizerCandidate) -> Submodule:
    """P-perp over Q[t^+-1], containing the relations of the form."""
    if p.submodule.presentation != form.presentation:
        raise DimensionMismatchError("candidate does not live on this form")
    spanning = p.submodule.spanning
    if form.rank == 0 or spanning.cols == 0:
        return Submodule.full(form.presentation)
    conditions = form.scaled_pairing @ spanning.involute()
    return kernel_mod_delta(conditions, form.delta, form.presentation)


def nonsingularity_check(form: BlanchfieldForm) -> bool:
    """True iff the complement of the whole module is zero."""
    full = MetabolizerCandidate(Submodule.full(form.presentation), "full")
    return submodule_eq(orthogonal_complement(form, full), Submodule.zero(form.presentation))


def verify_metabolizer(form: BlanchfieldForm, p: MetabolizerCandidate) -> Verdict:
    """Decide whether P = P-perp, with a witness on failure.

    Isotropy is checked exactly in Q(t)/Z[t^+-1]; maximality is the
    equality of P and its complement over Q[t^+-1].
    """
    if p.submodule.presentation != form.presentation:
        raise DimensionMismatchError("candidate does not live on this form")
    generators = p.generators
    for i, x in enumerate(generators):
        for y in generators[i:]:
            value = pair_elements(form, x, y)
            if not value.is_zero:
                logger.debug(f"{p.provenance} on {form.name}: not isotropic, value {value}")
                return NotIsotropic(x, y, value)

    complement = orthogonal_complement(form, p)
    if submodule_eq(p.submodule, complement):
        logger.debug(f"{p.provenance} on {form.name}: metabolizer")
        return Metabolizer()
    for column in complement.generators.columns():
        if not p.submodule.contains(column):
            logger.debug(f"{p.provenance} on {form.name}: isotropic, not maximal")
            return IsotropicNotMaximal(column)
    raise ConventionError(
        f"{p.provenance}: isotropic submodule strictly contains its complement"
    )


def metabolizer_order_check(form: BlanchfieldForm, p: MetabolizerCandidate) -> bool:
    """o * conj(o) equals delta up to units, with o the order of H/P."""
    order = p.submodule.order()
    return associated(order * order.involute(), form.delta)


def check_isometry(source: BlanchfieldForm, target: BlanchfieldForm, matrix: PolyMatrix) -> bool:
    """True iff ``matrix`` induces an onto map preserving relations and pairings.

    ``matrix`` maps the free cover of ``source`` to that of ``target``;
    surjectivity is checked over Q[t^+-1].
    """
    if matrix.shape != (target.rank, source.rank):
        raise DimensionMismatchError(
            f"map of shape {matrix.shape} between ranks {source.rank} and {target.rank}"
        )
    if source.sign != target.sign:
        return False
    relations = Submodule.zero(target.presentation)
    for relation in source.presentation.columns():
        if not relations.contains(matrix.apply(relation)):
            return False
    if not submodule_eq(Submodule(target.presentation, matrix), Submodule.full(target.presentation)):
        return False
    images = matrix.columns()
    for i in range(source.rank):
        for j in range(source.rank):
            if pair_elements(target, images[i], images[j]) != source.pairing[i][j]:
                return False
    return True


def transport_candidate(
    p: MetabolizerCandidate, matrix: PolyMatrix, target: BlanchfieldForm
) -> MetabolizerCandidate:
    """Push a candidate forward along a map of free covers."""
    spanning = matrix @ p.submodule.spanning
    return MetabolizerCandidate(
        Submodule(target.presentation, spanning), f"{p.provenance}->{target.name}"
    )


def connected_sum_isometry(k: SeifertKnot, congruence: Sequence[Sequence[int]]) -> PolyMatrix:
    """Isometry from f (+) -f onto the form of k # mirror_inverse(k).

    ``congruence`` is an integer matrix R with R^T a R = a^T and R^2 = +-1;
    the isometry is diag(1, R^T).
    """
    r = Matrix(congruence) if k.size else Matrix.zeros(0, 0)
    a = k.to_sympy()
    if r.shape != a.shape:
        raise DimensionMismatchError(f"congruence of shape {r.shape} for a {k.size}x{k.size} matrix")
    if r.T * a * r != a.T:
        raise ValueError(f"R^T A R != A^T for {k.label}")
    identity = eye(k.size)
    if r * r != identity and r * r != -identity:
        raise ValueError(f"R^2 is not +-1 for {k.label}")
    return block_diagonal(
        PolyMatrix.identity(k.size), PolyMatrix.from_integers(r.T.tolist())
    )


def connected_sum_form(k: SeifertKnot) -> BlanchfieldForm:
    """Form of k # mirror_inverse(k) built from its own Seifert model."""
    return build_form(connected_sum(k, mirror_inverse(k)))


def verification_report(
    form: BlanchfieldForm, p: MetabolizerCandidate, verdict: Optional[Verdict] = None
) -> Dict:
    """JSON record of one verification."""
    verdict = verdict or verify_metabolizer(form, p)
    record = {"form": form.to_json(), "candidate": p.to_json()}
    record.update(verdict.to_dict())
    return record
