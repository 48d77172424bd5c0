import pytest

from hilbert_caratheodory.experiments import DEFAULT_COUNTS, SUITES, SuiteOptions, format_summary, run_suite, suites
from hilbert_caratheodory.utils.error_handling import PreconditionError

SMALL = {
    "thm3": (5, SuiteOptions(points=3)),
    "thm4": (3, SuiteOptions(n=4, points=3)),
    "thm1": (2, SuiteOptions(n=2, box=6)),
    "icp": (3, SuiteOptions(box=4)),
    "lemma3": (20, SuiteOptions()),
    "lemma2": (5, SuiteOptions(box=3)),
    "algebra": (20, SuiteOptions()),
    "hilbert": (3, SuiteOptions()),
}


class TestSuites:
    """Run every acceptance suite on a few seeded instances."""

    @pytest.mark.parametrize("kind", sorted(SMALL))
    def test_small_run(self, kind):
        count, options = SMALL[kind]
        summary = run_suite(kind, seed=1, count=count, options=options)
        assert summary.count == count
        assert len(summary.records) == count
        assert summary.passed, format_summary(summary)

    def test_every_suite_has_a_default(self):
        assert set(SUITES) == set(DEFAULT_COUNTS) == set(SMALL)

    def test_deterministic(self):
        options = SuiteOptions(points=3)
        first = format_summary(run_suite("thm3", seed=11, count=4, options=options))
        second = format_summary(run_suite("thm3", seed=11, count=4, options=options, threads=2))
        assert first == second

    def test_seeds_differ(self):
        first = format_summary(run_suite("algebra", seed=1, count=5))
        second = format_summary(run_suite("algebra", seed=2, count=5))
        assert first != second

    def test_summary_format(self):
        summary = run_suite("lemma3", seed=5, count=2)
        lines = format_summary(summary).splitlines()
        assert lines[0].startswith("0 pass ")
        assert lines[-1] == "summary kind=lemma3 seed=5 count=2 failures=0"

    def test_unknown_kind(self):
        with pytest.raises(PreconditionError):
            run_suite("thm9", seed=1, count=1)

    def test_thm1_default_box(self):
        summary = run_suite("thm1", seed=2, count=1, options=SuiteOptions(n=2))
        assert summary.passed, format_summary(summary)
        assert " box=20 " in summary.records[0].detail

    def test_thm1_without_small_cone_fails(self, monkeypatch):
        monkeypatch.setattr(suites, "hilbert_basis", lambda C: tuple(range(7)))
        summary = run_suite("thm1", seed=1, count=2, options=SuiteOptions(n=2))
        assert summary.failures == 2
        assert summary.records[0].detail.startswith("fail no cone")

    def test_hilbert_region_oracle(self):
        summary = run_suite("hilbert", seed=3, count=2, options=SuiteOptions(n=3, delta_max=3))
        assert summary.passed, format_summary(summary)
        assert all("region_points=" in r.detail for r in summary.records)


@pytest.mark.full
class TestFullSuites:
    """Acceptance suites at their default sizes; run with ``-m full``."""

    @pytest.mark.parametrize("kind", sorted(DEFAULT_COUNTS))
    def test_default_run(self, kind):
        summary = run_suite(kind, seed=1)
        assert summary.count == DEFAULT_COUNTS[kind]
        assert summary.passed, format_summary(summary)
