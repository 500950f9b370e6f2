"""The orchestrated verification suites all pass under their default seeds."""

import pytest

from cubictrace.report import SuiteReport
from cubictrace.verify import (
    suite_braid,
    suite_coxeter,
    suite_h3,
    suite_hecke,
    suite_skein,
    suite_tl,
    table_report,
)


def _assert_green(rep: SuiteReport):
    failing = [c for c in rep.checks if not c.ok]
    assert not failing, "\n" + "\n".join(f"{c.check_id}: {c.detail}" for c in failing)


def test_h3_suite():
    _assert_green(suite_h3())


def test_braid_suite():
    _assert_green(suite_braid())


def test_skein_suite():
    _assert_green(suite_skein())


def test_hecke_suite():
    _assert_green(suite_hecke())


def test_coxeter_suite():
    _assert_green(suite_coxeter())


def test_tl_suite():
    _assert_green(suite_tl())


def test_table_runner_strict_rows():
    rep = table_report()
    _assert_green(rep)
    assert sum(1 for c in rep.checks if c.check_id.startswith("table/")) >= 90


def test_reports_render_deterministically():
    a = suite_braid().render()
    b = suite_braid().render()
    assert a == b
    assert "suite braid" in a
