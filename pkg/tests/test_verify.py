"""The named checks not already exercised by the acceptance module."""

import pytest

from modlat import verify


@pytest.fixture(scope="module")
def quick_cfg():
    # smaller sample count keeps the full-registry smoke affordable
    return verify.Config(samples=24)


@pytest.mark.parametrize("name", [
    "terms", "atomic", "phi", "inclusions", "recursion",
    "mult-add", "x0cap", "repio", "preproj", "perfectness", "uv", "hasse",
])
def test_named_check_passes(name, quick_cfg):
    report = verify.REGISTRY[name](quick_cfg)
    assert report.passed, str(report)


@pytest.mark.parametrize("name", ["conj2", "conj3", "conj4"])
def test_conjecture_sweeps_report_no_counterexample(name, quick_cfg):
    report = verify.REGISTRY[name](quick_cfg)
    assert report.passed
    assert report.counts["counterexamples"] == 0
    assert "empirical" in report.name


def test_reports_are_reproducible(quick_cfg):
    for name in ("terms", "gp", "repio"):
        r1 = verify.REGISTRY[name](quick_cfg)
        r2 = verify.REGISTRY[name](quick_cfg)
        assert str(r1) == str(r2)


def test_registry_and_docs_align():
    assert list(verify.REGISTRY) == list(verify.CHECK_DOC)
