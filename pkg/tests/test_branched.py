"""Unit tests for cyclic branched cover homology."""

import pytest

from src.covers.branched import (
    BranchedCoverSummary,
    branched_order,
    branched_presentation,
    branched_summary,
    branched_table,
    cyclic_shift,
    fiber_check,
)
from src.exceptions import ConventionError, ZeroTwistError
from src.knots.catalog import KnotCatalog
from src.knots.seifert import SeifertKnot, connected_sum, mirror_inverse


@pytest.fixture
def catalog():
    return KnotCatalog.load()


@pytest.fixture
def trefoil(catalog):
    return catalog.knot("trefoil")


class TestBranchedOrder:
    @pytest.mark.parametrize("k, order", [(1, 1), (2, 3), (3, 4), (4, 3), (6, 0)])
    def test_trefoil(self, trefoil, k, order):
        assert branched_order(trefoil, k) == order

    @pytest.mark.parametrize(
        "name, order",
        [("figure-eight", 5), ("three-twist", 7), ("stevedore", 9), ("cinquefoil", 5), ("unknot", 1)],
    )
    def test_double_covers(self, catalog, name, order):
        assert branched_order(catalog.knot(name), 2) == order

    def test_negative_k(self, trefoil):
        for k in range(1, 6):
            assert branched_order(trefoil, -k) == branched_order(trefoil, k)

    def test_mirror_invariance(self, catalog):
        for name in ("trefoil", "figure-eight", "three-twist"):
            knot = catalog.knot(name)
            for k in (2, 3, 5):
                assert branched_order(mirror_inverse(knot), k) == branched_order(knot, k)

    def test_multiplicative(self, catalog, trefoil):
        total = connected_sum(trefoil, catalog.knot("figure-eight"))
        assert branched_order(total, 2) == 15

    def test_zero_twist(self, trefoil):
        with pytest.raises(ZeroTwistError) as excinfo:
            branched_order(trefoil, 0)
        assert excinfo.value.exit_code == 5

    def test_trivial_at_unit_twist(self, catalog):
        for knot in (entry.seifert for entry in catalog.entries()):
            assert branched_order(knot, 1) == 1
            assert branched_order(knot, -1) == 1

    def test_determinant_matches_resultant(self, catalog):
        for knot in (entry.seifert for entry in catalog.entries()):
            for k in range(1, 7):
                det = branched_presentation(knot, k).det()
                assert abs(det) == branched_order(knot, k)


class TestBranchedSummary:
    def test_trefoil_double_cover(self, trefoil):
        summary = branched_summary(trefoil, 2)
        assert summary.order == 3
        assert summary.invariant_factors == (3,)
        assert summary.free_rank == 0

    def test_trefoil_triple_cover(self, trefoil):
        assert branched_summary(trefoil, 3).invariant_factors == (2, 2)

    def test_infinite_group(self, trefoil):
        summary = branched_summary(trefoil, 6)
        assert summary.order == 0
        assert summary.free_rank == 2

    def test_cyclic_for_stevedore(self, catalog):
        assert branched_summary(catalog.knot("stevedore"), 2).invariant_factors == (9,)

    def test_figure_eight(self, catalog):
        assert branched_summary(catalog.knot("figure-eight"), 2).invariant_factors == (5,)

    def test_unknot(self, catalog):
        summary = branched_summary(catalog.knot("unknot"), 4)
        assert summary.order == 1
        assert summary.invariant_factors == ()

    def test_presentation_shape(self, trefoil):
        assert branched_presentation(trefoil, 3).shape == (6, 6)
        assert branched_presentation(trefoil, -3).shape == (6, 6)

    def test_cyclic_shift(self):
        assert cyclic_shift(3).tolist() == [[0, 0, 1], [1, 0, 0], [0, 1, 0]]

    def test_divisor_chain_enforced(self):
        with pytest.raises(ConventionError):
            BranchedCoverSummary(2, 6, (2, 3))

    def test_to_dict(self, trefoil):
        assert branched_summary(trefoil, 3).to_dict("trefoil") == {
            "knot": "trefoil",
            "k": 3,
            "order": 4,
            "invariant_factors": [2, 2],
            "free_rank": 0,
        }


class TestFiberCheck:
    def test_trefoil(self, trefoil):
        assert fiber_check(trefoil, 1)
        assert fiber_check(trefoil, 5)
        assert not fiber_check(trefoil, 2)

    def test_unknot(self, catalog):
        assert fiber_check(catalog.knot("unknot"), 7)

    def test_sign_minus_one(self):
        knot = SeifertKnot.from_rows([[1, 3], [0, 2]], sign=-1)
        assert fiber_check(knot, 1)


class TestBranchedTable:
    def test_skips_zero(self, trefoil):
        table = branched_table(trefoil, [2, 0, -1, 1])
        assert list(table.columns) == ["knot", "k", "order", "invariant_factors", "free_rank"]
        assert list(table["k"]) == [-1, 1, 2]
        assert list(table["order"]) == [1, 1, 3]
        assert set(table["knot"]) == {"trefoil"}

    def test_only_zero(self, trefoil):
        assert len(branched_table(trefoil, [0])) == 0

    def test_workers_agree(self, trefoil):
        serial = branched_table(trefoil, range(1, 5), workers=1)
        parallel = branched_table(trefoil, range(1, 5), workers=2)
        assert serial.to_dict("records") == parallel.to_dict("records")
