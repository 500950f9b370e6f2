"""Embedded braid-word catalog for the invariant tables.

The data file is TSV with columns

    name  strands  word  expected_x2a  kind  provenance

`expected_x2a` is the expected value of the x = 2a invariant in canonical
Q[a]/(a^2-1) text ("0", "16", "3*a") or "unknown".  `kind` is knot, link or
composite.  `provenance` records where the braid word comes from and which
screens identified it (component count, determinant, the documentation-only
x = a value as "xa=.."); it is free-form `key=value` pairs separated by
semicolons.

Row validation is a data-integrity screen, not an assertion of the table:
words must parse, knots must close to one component, and knot determinants
must be odd.
"""

from __future__ import annotations

import importlib.resources
from dataclasses import dataclass
from pathlib import Path

from .braids import BraidWord, component_count, parse_braid
from .qa import QA, parse_qa
from .skein import alexander_det

COLUMNS = ("name", "strands", "word", "expected_x2a", "kind", "provenance")


@dataclass(frozen=True)
class KnotRecord:
    name: str
    strands: int
    word: str
    expected_x2a: QA | None
    kind: str
    provenance: str

    def braid(self) -> BraidWord:
        return parse_braid(self.word, self.strands)

    @property
    def strict(self) -> bool:
        """Strictly asserted rows: knots and composites with known values."""
        return self.kind in ("knot", "composite") and self.expected_x2a is not None \
            and "optional" not in self.provenance

    def provenance_field(self, key: str) -> str | None:
        for chunk in self.provenance.split(";"):
            k, _, v = chunk.partition("=")
            if k.strip() == key:
                return v.strip()
        return None


class DataError(ValueError):
    pass


def parse_records(text: str) -> list[KnotRecord]:
    records = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.rstrip("\n")
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split("\t")
        if parts == list(COLUMNS):
            continue
        if len(parts) != len(COLUMNS):
            raise DataError(f"line {lineno}: expected {len(COLUMNS)} columns, got {len(parts)}")
        name, strands, word, expected, kind, provenance = parts
        if kind not in ("knot", "link", "composite"):
            raise DataError(f"line {lineno}: bad kind {kind!r}")
        expected_qa = None if expected.strip() == "unknown" else parse_qa(expected)
        records.append(KnotRecord(
            name=name.strip(),
            strands=int(strands),
            word=word.strip(),
            expected_x2a=expected_qa,
            kind=kind,
            provenance=provenance.strip(),
        ))
    return records


def load_records(path: str | Path | None = None) -> list[KnotRecord]:
    if path is not None:
        text = Path(path).read_text()
    else:
        text = (importlib.resources.files("cubictrace") / "data" / "knots.tsv").read_text()
    return parse_records(text)


@dataclass
class RecordValidation:
    record: KnotRecord
    parses: bool
    component_ok: bool
    det: int | None
    det_odd_ok: bool

    @property
    def ok(self) -> bool:
        return self.parses and self.component_ok and self.det_odd_ok


def validate_record(record: KnotRecord) -> RecordValidation:
    try:
        braid = record.braid()
    except Exception:
        return RecordValidation(record, False, False, None, False)
    ncomp = component_count(braid)
    if record.kind == "knot" or record.kind == "composite":
        comp_ok = ncomp == 1
    else:
        comp_ok = ncomp >= 2
    det = alexander_det(braid)
    det_odd = det % 2 == 1 if record.kind in ("knot", "composite") else True
    return RecordValidation(record, True, comp_ok, det, det_odd)
