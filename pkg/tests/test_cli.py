"""CLI surface and catalog data integrity."""

import subprocess
import sys

import pytest

from cubictrace.cli import main
from cubictrace.knotdata import load_records, parse_records, validate_record
from cubictrace.skein import alexander_det


def run_cli(args, capsys):
    code = main(args)
    out = capsys.readouterr().out.strip()
    return code, out


class TestInvariantCommand:
    def test_t0_trefoil(self, capsys):
        code, out = run_cli(["invariant", "--which", "t0x2a", "--strands", "2",
                             "--braid", "1 1 1"], capsys)
        assert code == 0 and out == "0"

    def test_parity_hopf(self, capsys):
        code, out = run_cli(["invariant", "--which", "parity", "--strands", "2",
                             "--braid", "1 1"], capsys)
        assert code == 0 and out == "1"

    def test_kauffman_unknot_chain(self, capsys):
        code, out = run_cli(["invariant", "--which", "kauffman+", "--strands", "3",
                             "--braid", "1 2"], capsys)
        assert code == 0 and out == "1"

    def test_t0_figure_eight(self, capsys):
        code, out = run_cli(["invariant", "--which", "t0x2a", "--strands", "3",
                             "--braid", "1 -2 1 -2"], capsys)
        assert code == 0 and out == "16"

    def test_kauffman_at_point(self, capsys):
        code, out = run_cli(["kauffman", "--braid", "1 1 1", "--strands", "2",
                             "--variant", "+", "--at", "x2a"], capsys)
        assert code == 0 and out == "9"

    def test_base_flag_is_irrelevant(self, capsys):
        _, out0 = run_cli(["invariant", "--which", "t0x2a", "--strands", "3",
                           "--braid", "1 -2 1 -2", "--base", "0"], capsys)
        _, out5 = run_cli(["invariant", "--which", "t0x2a", "--strands", "3",
                           "--braid", "1 -2 1 -2", "--base", "5"], capsys)
        assert out0 == out5 == "16"


class TestVerifyCommand:
    def test_braid_suite_passes(self, capsys):
        code, out = run_cli(["verify", "--suite", "braid", "--seed", "3"], capsys)
        assert code == 0
        assert "pass" in out

    def test_determinism(self, capsys):
        _, out1 = run_cli(["verify", "--suite", "braid", "--seed", "3"], capsys)
        _, out2 = run_cli(["verify", "--suite", "braid", "--seed", "3"], capsys)
        assert out1 == out2


class TestData:
    def test_records_load_and_validate(self):
        records = load_records()
        assert len(records) >= 90
        names = {r.name for r in records}
        assert len(names) == len(records)
        for record in records:
            validation = validate_record(record)
            assert validation.ok, (record.name, validation)

    def test_knot_rows_cover_the_table(self):
        records = {r.name for r in load_records()}
        for c, count in ((3, 1), (4, 1), (5, 2), (6, 3), (7, 7), (8, 21), (9, 49)):
            for k in range(1, count + 1):
                assert f"{c}_{k}" in records, f"{c}_{k} missing"

    def test_determinants_recorded_accurately(self):
        for record in load_records():
            det_field = record.provenance_field("det")
            if det_field is not None:
                assert alexander_det(record.braid()) == int(det_field), record.name

    def test_tsv_is_bit_exact_grammar(self):
        from importlib.resources import files

        text = (files("cubictrace") / "data" / "knots.tsv").read_text()
        header, *rows = [l for l in text.splitlines() if l.strip()]
        assert header.split("\t") == ["name", "strands", "word", "expected_x2a",
                                      "kind", "provenance"]
        reparsed = parse_records(text)
        assert len(reparsed) == len(rows)
