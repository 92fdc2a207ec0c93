"""Homology of cyclic branched covers from a Seifert model."""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Dict, Iterable, List, Tuple

import pandas as pd
from sympy import ZZ, Matrix, Poly, eye, kronecker_product, zeros
from sympy.matrices.normalforms import invariant_factors

from ..algebra.laurent import T
from ..exceptions import ConventionError, InvalidKnotError, ZeroTwistError
from ..knots.seifert import SeifertKnot, alexander_polynomial, validate

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BranchedCoverSummary:
    """Structure of H_1 of the |k|-fold branched cover.

    ``order`` is 0 when the group is infinite; ``free_rank`` then counts
    the Z summands and ``invariant_factors`` the torsion.
    """

    k: int
    order: int
    invariant_factors: Tuple[int, ...]
    free_rank: int = 0

    def __post_init__(self):
        factors = self.invariant_factors
        for a, b in zip(factors, factors[1:]):
            if b % a:
                raise ConventionError(f"invariant factors {factors} do not form a divisor chain")
        product = 1
        for f in factors:
            product *= f
        if self.order > 0 and (product != self.order or self.free_rank):
            raise ConventionError(f"factors {factors} do not multiply to order {self.order}")

    def to_dict(self, knot: str = "") -> Dict:
        """Row for the summary table."""
        return {
            "knot": knot,
            "k": self.k,
            "order": self.order,
            "invariant_factors": list(self.invariant_factors),
            "free_rank": self.free_rank,
        }


def _check_twist(knot: SeifertKnot, k: int) -> int:
    if k == 0:
        raise ZeroTwistError("branched covers need k != 0")
    if not validate(knot):
        raise InvalidKnotError(f"{knot.label} is not a valid Seifert model")
    return abs(k)


def cyclic_shift(n: int) -> Matrix:
    """Permutation matrix C with C[i][j] = 1 iff i = j + 1 mod n."""
    return Matrix(n, n, lambda i, j: 1 if i == (j + 1) % n else 0)


def branched_presentation(knot: SeifertKnot, k: int) -> Matrix:
    """Integer presentation C (x) a - 1 (x) eps*a^T of H/(t^|k| - 1)H."""
    n = _check_twist(knot, k)
    if knot.size == 0:
        return zeros(0, 0)
    a = knot.to_sympy()
    return Matrix(kronecker_product(cyclic_shift(n), a) - kronecker_product(eye(n), knot.sign * a.T))


def branched_order(knot: SeifertKnot, k: int) -> int:
    """|Res(delta, t^|k| - 1)|; 0 encodes an infinite group."""
    n = _check_twist(knot, k)
    delta = alexander_polynomial(knot)
    cyclotomic = Poly(T ** n - 1, T, domain=delta.poly.domain)
    return int(abs(delta.poly.resultant(cyclotomic)))


def branched_summary(knot: SeifertKnot, k: int) -> BranchedCoverSummary:
    """Invariant factors of the branched presentation, cross-checked with the resultant."""
    presentation = branched_presentation(knot, k)
    expected = branched_order(knot, k)
    if presentation.rows == 0:
        factors: List[int] = []
    else:
        factors = [abs(int(f)) for f in invariant_factors(presentation, domain=ZZ)]
    nonzero = [f for f in factors if f != 0]
    free_rank = presentation.rows - len(nonzero)
    torsion = tuple(f for f in nonzero if f != 1)
    order = 0
    if free_rank == 0:
        order = 1
        for f in torsion:
            order *= f
    if order != expected:
        raise ConventionError(
            f"{knot.label}, k={k}: Smith form order {order} != resultant {expected}"
        )
    return BranchedCoverSummary(k, order, torsion, free_rank)


def fiber_check(knot: SeifertKnot, k: int) -> bool:
    """True iff the |k|-fold branched cover is a homology sphere."""
    return branched_order(knot, k) == 1


def _summary_row(args: Tuple[SeifertKnot, int]) -> Dict:
    knot, k = args
    return branched_summary(knot, k).to_dict(knot.label)


def branched_table(knot: SeifertKnot, ks: Iterable[int], workers: int = 1) -> pd.DataFrame:
    """One row per nonzero k, in increasing k; k = 0 is skipped.

    Args:
        knot: Seifert model
        ks: Twist parameters of the sweep
        workers: Process count; 1 runs serially

    Returns:
        DataFrame with columns knot, k, order, invariant_factors, free_rank
    """
    sweep = []
    for k in sorted(set(ks)):
        if k == 0:
            logger.warning(f"Skipping k=0 for {knot.label}: branched covers need k != 0")
            continue
        sweep.append((knot, k))

    if workers > 1 and len(sweep) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_summary_row, sweep))
    else:
        rows = [_summary_row(args) for args in sweep]
    logger.info(f"Computed {len(rows)} branched covers of {knot.label}")
    return pd.DataFrame(rows, columns=["knot", "k", "order", "invariant_factors", "free_rank"])
