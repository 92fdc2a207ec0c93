"""Twist-spin metabolizer families on the doubled form f (+) -f."""

import enum
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from ..algebra.laurent import ZERO, LaurentPolynomial
from ..algebra.polymatrix import PolyMatrix, block_diagonal, submodule_eq
from ..exceptions import MissingEpsilonError, ParityError, UsageError
from ..knots.seifert import SeifertKnot
from ..pairing.blanchfield import (
    BlanchfieldForm,
    MetabolizerCandidate,
    build_form,
    check_isometry,
    direct_sum_neg,
)

logger = logging.getLogger(__name__)


class StatementTag(enum.Enum):
    INFORMAL = "Informal"
    EVEN_K = "EvenK"
    ODD_K = "OddK"


@dataclass(frozen=True)
class TwistSpinScenario:
    """Knot, twist parameter k and, for odd k, the sign choice eps."""

    knot: SeifertKnot
    k: int
    eps: Optional[int] = None

    def __post_init__(self):
        if self.eps not in (None, 1, -1):
            raise UsageError(f"eps must be +1 or -1, got {self.eps}")

    @property
    def is_even(self) -> bool:
        return self.k % 2 == 0

    def require_consistent(self) -> None:
        """eps must be given exactly when k is odd."""
        if not self.is_even and self.eps is None:
            raise MissingEpsilonError(f"k = {self.k} is odd: choose eps = +1 or -1")
        if self.is_even and self.eps is not None:
            raise UsageError(f"eps only applies to odd k, got k = {self.k}")


@dataclass(frozen=True)
class MetabolizerPair:
    """The candidates coming from the two slice disks B_- and B_+."""

    minus: MetabolizerCandidate
    plus: MetabolizerCandidate
    form: BlanchfieldForm
    statement_tag: StatementTag

    def candidates(self):
        """Minus candidate, then plus."""
        return [self.minus, self.plus]


@lru_cache(maxsize=64)
def doubled_form(knot: SeifertKnot) -> BlanchfieldForm:
    """f (+) -f for the Blanchfield form f of ``knot``."""
    form = build_form(knot)
    return direct_sum_neg(form, form)


def graph_candidate(form: BlanchfieldForm, a: int, b: int, provenance: str) -> MetabolizerCandidate:
    """Span of (t^a e_i, -t^b e_i) over the basis of one summand of ``form``."""
    g = form.rank // 2
    left = LaurentPolynomial.monomial(a)
    right = LaurentPolynomial.monomial(b, -1)
    vectors = []
    for i in range(g):
        v = [ZERO] * form.rank
        v[i] = left
        v[g + i] = right
        vectors.append(v)
    return MetabolizerCandidate.from_vectors(form, vectors, provenance)


def informal_metabolizers(s: TwistSpinScenario) -> MetabolizerPair:
    """{v (+) -t^k v} from B_- and {v (+) -v} from B_+."""
    form = doubled_form(s.knot)
    return MetabolizerPair(
        minus=graph_candidate(form, 0, s.k, f"informal-minus(k={s.k})"),
        plus=graph_candidate(form, 0, 0, f"informal-plus(k={s.k})"),
        form=form,
        statement_tag=StatementTag.INFORMAL,
    )


def even_metabolizers(s: TwistSpinScenario) -> MetabolizerPair:
    """{v (+) -t^(k/2) v} and {t^(k/2) v (+) -v} for even k."""
    if not s.is_even:
        raise ParityError(f"even-k metabolizers need even k, got {s.k}")
    form = doubled_form(s.knot)
    half = s.k // 2
    return MetabolizerPair(
        minus=graph_candidate(form, 0, half, f"even-minus(k={s.k})"),
        plus=graph_candidate(form, half, 0, f"even-plus(k={s.k})"),
        form=form,
        statement_tag=StatementTag.EVEN_K,
    )


def odd_metabolizers(s: TwistSpinScenario, eps: Optional[int] = None) -> MetabolizerPair:
    """{v (+) -t^((k+eps)/2) v} and {t^((k-eps)/2) v (+) -v}.

    ``eps`` overrides the scenario's choice.
    """
    if s.is_even:
        raise ParityError(f"odd-k metabolizers need odd k, got {s.k}")
    eps = s.eps if eps is None else eps
    if eps is None:
        raise MissingEpsilonError(f"k = {s.k} is odd: choose eps = +1 or -1")
    if eps not in (1, -1):
        raise UsageError(f"eps must be +1 or -1, got {eps}")
    form = doubled_form(s.knot)
    return MetabolizerPair(
        minus=graph_candidate(form, 0, (s.k + eps) // 2, f"odd-minus(k={s.k},eps={eps:+d})"),
        plus=graph_candidate(form, (s.k - eps) // 2, 0, f"odd-plus(k={s.k},eps={eps:+d})"),
        form=form,
        statement_tag=StatementTag.ODD_K,
    )


def scale_metabolizer(p: MetabolizerCandidate, n: int) -> MetabolizerCandidate:
    """t^n * P; same submodule, different generators."""
    if n == 0:
        return p
    return MetabolizerCandidate(p.submodule.scaled(n), f"{p.provenance}*t^{n}")


def second_summand_twist(form: BlanchfieldForm, n: int) -> PolyMatrix:
    """(a, b) -> (a, t^n b) on the doubled module."""
    g = form.rank // 2
    return block_diagonal(
        PolyMatrix.identity(g), PolyMatrix.scalar(g, LaurentPolynomial.monomial(n))
    )


def consistency_check(s: TwistSpinScenario) -> bool:
    """(a, b) -> (a, t^(-k/2) b) is an isometry carrying the informal pair onto the even pair."""
    if not s.is_even:
        raise ParityError(f"consistency check needs even k, got {s.k}")
    informal = informal_metabolizers(s)
    even = even_metabolizers(s)
    theta = second_summand_twist(informal.form, -(s.k // 2))
    if not check_isometry(informal.form, informal.form, theta):
        logger.warning(f"k={s.k}: theta is not an isometry of {informal.form.name}")
        return False
    minus_ok = submodule_eq(informal.minus.submodule.image(theta), even.minus.submodule)
    plus_ok = submodule_eq(informal.plus.submodule.image(theta), even.plus.submodule)
    return minus_ok and plus_ok


def epsilon_relation_check(knot: SeifertKnot, k: int) -> bool:
    """For odd k, (a, b) -> (a, t*b) carries the eps = -1 pair onto the eps = +1 pair."""
    if k % 2 == 0:
        raise ParityError(f"eps relation needs odd k, got {k}")
    scenario = TwistSpinScenario(knot, k)
    negative = odd_metabolizers(scenario, -1)
    positive = odd_metabolizers(scenario, 1)
    phi = second_summand_twist(negative.form, 1)
    if not check_isometry(negative.form, negative.form, phi):
        return False
    return submodule_eq(
        negative.minus.submodule.image(phi), positive.minus.submodule
    ) and submodule_eq(negative.plus.submodule.image(phi), positive.plus.submodule)


def monodromy_shift(pair: MetabolizerPair) -> Optional[int]:
    """Exponent n such that plus and minus differ by b -> t^n b in the second summand.

    Returns None when the two candidates are not related that way, or when
    there are no generators to compare.
    """
    form = pair.form
    g = form.rank // 2
    if g == 0:
        return None
    minus = pair.minus.generators
    plus = pair.plus.generators
    shifts = set()
    for m_vec, p_vec in zip(minus, plus):
        if m_vec[:g] != p_vec[:g]:
            return None
        for x, y in zip(m_vec[g:], p_vec[g:]):
            if x.is_zero and y.is_zero:
                continue
            if x.is_zero or y.is_zero:
                return None
            if x.width != 0 or y.width != 0 or x.coeffs[x.shift] != y.coeffs[y.shift]:
                return None
            shifts.add(x.shift - y.shift)
    return shifts.pop() if len(shifts) == 1 else None
