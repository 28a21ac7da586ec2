"""
Tests for the acceptance runner
"""

import pytest
from hfr import reproduce
from hfr.errors import InvariantViolation
from hfr.reproduce import CheckResult, format_report, results_document, run_checks


class TestRunner:
    """Tests for run_checks and the report."""

    def test_genus_one_checks(self):
        """The genus-one and thick-torus checks pass."""
        results = run_checks([1, 2, 9])
        assert [r.number for r in results] == [1, 2, 9]
        assert all(r.passed for r in results), format_report(results)

    def test_worked_differential(self):
        """The genus-two worked example passes."""
        (result,) = run_checks([4])
        assert result.passed, result.details

    def test_structure_relations(self):
        """AZ and AZ-bar satisfy the relation on every listed circle."""
        (result,) = run_checks([3])
        assert result.passed, result.details
        assert len(result.details) == 2 * len(reproduce.RELATION_PMCS)

    @pytest.mark.slow
    def test_genus_four_pairing(self):
        """CFAR boxed with the identity DD bimodule gives the small model at genus four."""
        result = reproduce.check_6_cfar_pairing(reproduce.EXTENDED_PAIRING_PMCS)
        assert result.passed, result.details

    def test_thick_torus_report_is_readable(self):
        """Coefficients print as torus names."""
        (result,) = run_checks([9])
        assert "delta(y): ['ρ₁₂ ⊗ y'] (expected ['ρ₁₂ ⊗ y'])" in result.details
        assert not any("StrandsDiagram" in line for line in result.details)

    def test_ledger(self):
        """Per-summand contributions match."""
        (result,) = run_checks([7])
        assert result.passed, result.details

    def test_small_property_suite(self):
        """The property suite passes on a few random structures."""
        (result,) = run_checks([10], n_random=15)
        assert result.passed, result.details
        assert "simplify failures over 15 random structures: 0 (expected 0)" in result.details

    def test_unknown_check(self):
        """Check numbers are validated."""
        with pytest.raises(KeyError):
            run_checks([11])

    def test_library_error_fails_check(self, monkeypatch):
        """A library error marks the check as failed instead of escaping."""
        def broken():
            raise InvariantViolation("boom")
        monkeypatch.setitem(reproduce.CHECKS, 9, broken)
        (result,) = run_checks([9])
        assert not result.passed
        assert result.details == ["error: InvariantViolation: boom"]


class TestReport:
    """Tests for report formatting."""

    def test_format(self):
        """Banners, one line per check and a summary."""
        results = [CheckResult(1, "first", True, ["a: 1 (expected 1)"], 0.5),
                   CheckResult(2, "second", False, [], 1.5)]
        text = format_report(results)
        lines = text.splitlines()
        assert lines[0] == "=" * 70
        assert "[PASS]  1. first" in lines
        assert "[FAIL]  2. second" in lines
        assert lines[-2] == "1/2 checks passed"
        assert "0.5" not in text

    def test_deterministic(self):
        """Timings do not leak into the report."""
        a = format_report(run_checks([1]))
        b = format_report(run_checks([1]))
        assert a == b

    def test_document(self):
        """JSON-ready summary keyed by check."""
        doc = results_document([CheckResult(3, "third", True, ["x"], 0.12345)])
        assert doc == {"check_3": {"title": "third", "passed": True, "details": ["x"], "seconds": 0.123}}


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
