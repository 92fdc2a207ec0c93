"""Unit tests for the knot catalog loader."""

import tempfile
from pathlib import Path

import pytest

from src.algebra.laurent import LaurentPolynomial
from src.exceptions import CatalogFormatError, CatalogValidationError, UnknownKnotError
from src.knots.catalog import CatalogLoader, KnotCatalog, catalog_frame

SAMPLE_CATALOG = Path(__file__).parent.parent / "sample_data" / "torus_knots.json"


@pytest.fixture
def builtin():
    return KnotCatalog.load()


@pytest.fixture
def loader():
    return CatalogLoader()


@pytest.fixture
def bad_entry_text():
    """Second entry, on line 3, has det(A - A^T) = 0."""
    return """[
  {"name": "trefoil", "epsilon": 1, "matrix": [[-1, 1], [0, -1]]},
  {"name": "bad", "epsilon": 1, "matrix": [[1, 0], [0, 1]]}
]
"""


class TestBuiltinCatalog:
    def test_entries(self, builtin):
        assert len(builtin) == 6
        assert builtin.names() == [
            "unknot",
            "trefoil",
            "figure-eight",
            "cinquefoil",
            "three-twist",
            "stevedore",
        ]
        assert "trefoil" in builtin

    def test_expected_alexander_recorded(self, builtin):
        entry = builtin.get("figure-eight")
        assert entry.expected_alexander == LaurentPolynomial({0: 1, 1: -3, 2: 1})
        assert entry.line == 5

    def test_knot_lookup(self, builtin):
        assert builtin.knot("trefoil").matrix == ((-1, 1), (0, -1))
        assert builtin.knot("unknot").size == 0

    def test_unknown_knot(self, builtin):
        with pytest.raises(UnknownKnotError) as excinfo:
            builtin.get("granny")
        assert "granny" in str(excinfo.value)
        assert excinfo.value.exit_code == 4

    def test_frame(self, builtin):
        frame = catalog_frame(builtin.entries())
        assert list(frame.columns) == ["name", "size", "epsilon", "alexander"]
        assert len(frame) == 6
        row = frame[frame["name"] == "trefoil"].iloc[0]
        assert row["alexander"] == "1 - t + t^2"
        assert row["size"] == 2


class TestCatalogLoader:
    def test_empty_file(self, loader):
        with pytest.raises(CatalogFormatError) as excinfo:
            loader.loads("   \n")
        assert excinfo.value.line == 1
        assert excinfo.value.exit_code == 2

    def test_malformed_json_line(self, loader):
        text = '[\n  {"name": "a",\n   "matrix": [[1,}\n]\n'
        with pytest.raises(CatalogFormatError) as excinfo:
            loader.loads(text)
        assert excinfo.value.line == 3

    def test_not_an_array(self, loader):
        with pytest.raises(CatalogFormatError):
            loader.loads('{"name": "trefoil"}')

    def test_non_integer_matrix(self, loader):
        with pytest.raises(CatalogFormatError):
            loader.loads('[{"name": "x", "matrix": [[1.5]]}]')

    @pytest.mark.parametrize("epsilon", ["1.0", "-1.0", "true", "\"1\"", "2"])
    def test_epsilon_must_be_plus_or_minus_one(self, loader, epsilon):
        text = f'[{{"name": "trefoil", "epsilon": {epsilon}, "matrix": [[-1, 1], [0, -1]]}}]'
        with pytest.raises(CatalogFormatError) as excinfo:
            loader.loads(text)
        assert excinfo.value.exit_code == 2

    def test_missing_name(self, loader):
        with pytest.raises(CatalogFormatError):
            loader.loads('[{"matrix": []}]')

    def test_non_unimodular_entry(self, loader, bad_entry_text):
        with pytest.raises(CatalogValidationError) as excinfo:
            loader.loads(bad_entry_text)
        assert excinfo.value.line == 3
        assert excinfo.value.name == "bad"
        assert excinfo.value.exit_code == 3

    def test_alexander_mismatch(self, loader):
        text = '[{"name": "trefoil", "matrix": [[-1, 1], [0, -1]], "alexander": {"0": "1", "1": "-3", "2": "1"}}]'
        with pytest.raises(CatalogValidationError) as excinfo:
            loader.loads(text)
        assert "trefoil" in str(excinfo.value)

    def test_duplicate_names(self, loader):
        text = """[
  {"name": "trefoil", "matrix": [[-1, 1], [0, -1]]},
  {"name": "trefoil", "matrix": [[1, 0], [-1, 1]]}
]"""
        with pytest.raises(CatalogValidationError) as excinfo:
            loader.loads(text)
        assert excinfo.value.line == 3

    def test_epsilon_defaults_to_one(self, loader):
        entries = loader.loads('[{"name": "trefoil", "matrix": [[-1, 1], [0, -1]]}]')
        assert entries[0].seifert.sign == 1

    def test_load_from_file(self, bad_entry_text):
        with tempfile.TemporaryDirectory() as tmpdir:
            path = Path(tmpdir) / "catalog.json"
            path.write_text(bad_entry_text.replace("[[1, 0], [0, 1]]", "[[1, 1], [0, -1]]"))
            catalog = KnotCatalog.load(path)
        assert catalog.names() == ["trefoil", "bad"]

    def test_missing_file(self):
        with tempfile.TemporaryDirectory() as tmpdir:
            with pytest.raises(CatalogFormatError):
                KnotCatalog.load(Path(tmpdir) / "missing.json")

    def test_sample_catalog(self):
        catalog = KnotCatalog.load(SAMPLE_CATALOG)
        assert catalog.names() == ["T(2,7)", "skew-stevedore"]
        assert catalog.knot("skew-stevedore").sign == -1
        assert catalog.knot("T(2,7)").size == 6
