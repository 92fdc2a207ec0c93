"""Load and validate knot catalogs."""

import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Tuple

import pandas as pd

from ..algebra.laurent import LaurentPolynomial
from ..exceptions import (
    CatalogFormatError,
    CatalogValidationError,
    UnknownKnotError,
)
from .seifert import SeifertKnot, alexander_polynomial, intersection_form, validate

logger = logging.getLogger(__name__)

BUILTIN_CATALOG = Path(__file__).parent / "data" / "catalog.json"


@dataclass(frozen=True)
class KnotCatalogEntry:
    """A named Seifert model, optionally with its expected Alexander polynomial."""

    name: str
    seifert: SeifertKnot
    expected_alexander: Optional[LaurentPolynomial] = None
    line: Optional[int] = None


def _line_of(text: str, offset: int) -> int:
    return text.count("\n", 0, offset) + 1


def _element_offsets(text: str) -> List[int]:
    """Character offset of each element of a top-level JSON array."""
    decoder = json.JSONDecoder()
    offsets = []
    idx = text.index("[") + 1
    while True:
        while text[idx].isspace():
            idx += 1
        if text[idx] == "]":
            return offsets
        offsets.append(idx)
        _, idx = decoder.raw_decode(text, idx)
        while text[idx].isspace():
            idx += 1
        if text[idx] == ",":
            idx += 1


class CatalogLoader:
    """Parse JSON knot catalogs into validated entries."""

    def __init__(self, source: str = "<catalog>"):
        """Initialize loader.

        Args:
            source: Label used in log messages
        """
        self.source = source

    def load(self, path: Path) -> List[KnotCatalogEntry]:
        """Read and validate a catalog file.

        Args:
            path: Catalog JSON file

        Returns:
            Entries in file order
        """
        self.source = str(path)
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as e:
            raise CatalogFormatError(f"cannot read {path}: {e}")
        return self.loads(text)

    def loads(self, text: str) -> List[KnotCatalogEntry]:
        """Parse catalog JSON text into validated entries.

        Args:
            text: JSON array of catalog entries

        Returns:
            Entries in file order

        Raises:
            CatalogFormatError: malformed JSON or entry shape, with the line number
            CatalogValidationError: an entry whose matrix is not a Seifert matrix
        """
        if not text.strip():
            raise CatalogFormatError("catalog is empty", line=1)
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise CatalogFormatError(e.msg, line=e.lineno)
        if not isinstance(data, list):
            raise CatalogFormatError("catalog must be a JSON array of entries", line=1)

        lines = [_line_of(text, offset) for offset in _element_offsets(text)]
        entries: List[KnotCatalogEntry] = []
        seen: Dict[str, int] = {}
        for raw, line in zip(data, lines):
            entry = self._parse_entry(raw, line)
            if entry.name in seen:
                raise CatalogValidationError(
                    entry.name, f"duplicate of the entry on line {seen[entry.name]}", line
                )
            seen[entry.name] = line
            entries.append(entry)
        logger.info(f"Loaded {len(entries)} knots from {self.source}")
        return entries

    def _parse_entry(self, raw, line: int) -> KnotCatalogEntry:
        if not isinstance(raw, dict):
            raise CatalogFormatError("entry must be an object", line=line)
        name = raw.get("name")
        if not isinstance(name, str) or not name:
            raise CatalogFormatError("entry needs a non-empty string 'name'", line=line)
        epsilon = raw.get("epsilon", 1)
        if not isinstance(epsilon, int) or isinstance(epsilon, bool) or epsilon not in (1, -1):
            raise CatalogFormatError(f"'{name}': epsilon must be 1 or -1", line=line)
        matrix = raw.get("matrix")
        if not isinstance(matrix, list) or not all(
            isinstance(row, list)
            and len(row) == len(matrix)
            and all(isinstance(x, int) and not isinstance(x, bool) for x in row)
            for row in matrix
        ):
            raise CatalogFormatError(
                f"'{name}': matrix must be a square array of integers", line=line
            )

        knot = SeifertKnot.from_rows(matrix, epsilon, name)
        if not validate(knot):
            det = intersection_form(knot).det()
            logger.error(f"Rejected {name} from {self.source}: det(A - eps*A^T) = {det}")
            raise CatalogValidationError(
                name, f"det(A - eps*A^T) = {det}, expected +-1", line
            )

        expected = None
        if "alexander" in raw:
            try:
                expected = LaurentPolynomial.from_json(raw["alexander"])
            except (AttributeError, TypeError, ValueError, ZeroDivisionError):
                raise CatalogFormatError(
                    f"'{name}': alexander must map exponents to rational strings",
                    line=line,
                )
            computed = alexander_polynomial(knot)
            if computed != expected:
                raise CatalogValidationError(
                    name, f"expected Alexander polynomial {expected}, computed {computed}", line
                )
        return KnotCatalogEntry(name, knot, expected, line)


class KnotCatalog:
    """Name-indexed collection of catalog entries."""

    def __init__(self, entries: Iterable[KnotCatalogEntry]):
        self._entries = {entry.name: entry for entry in entries}

    @classmethod
    def load(cls, path: Optional[Path] = None) -> "KnotCatalog":
        """Load a catalog file, or the built-in catalog when ``path`` is None."""
        loader = CatalogLoader()
        return cls(loader.load(path or BUILTIN_CATALOG))

    def names(self) -> List[str]:
        """Knot names in catalog order."""
        return list(self._entries)

    def entries(self) -> List[KnotCatalogEntry]:
        """Entries in catalog order."""
        return list(self._entries.values())

    def get(self, name: str) -> KnotCatalogEntry:
        """Look up an entry by name, raising UnknownKnotError if absent."""
        try:
            return self._entries[name]
        except KeyError:
            raise UnknownKnotError(
                f"unknown knot '{name}'; known: {', '.join(self._entries)}"
            )

    def knot(self, name: str) -> SeifertKnot:
        """Seifert model of the named knot."""
        return self.get(name).seifert

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, name: str) -> bool:
        return name in self._entries


def catalog_frame(entries: Iterable[KnotCatalogEntry]) -> pd.DataFrame:
    """Listing with one row per entry: name, size, epsilon, alexander."""
    rows: List[Tuple[str, int, int, str]] = []
    for entry in entries:
        delta = alexander_polynomial(entry.seifert)
        rows.append((entry.name, entry.seifert.size, entry.seifert.sign, str(delta)))
    return pd.DataFrame(rows, columns=["name", "size", "epsilon", "alexander"])
