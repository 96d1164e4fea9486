import pytest

from latticelab import verify
from latticelab.generators import FIGURE_IDS


def test_family_sizes_are_exact():
    for e in verify.family_entries(200):
        assert verify.build(e).n == e.size


def test_max_size_filters_families():
    assert all(e.size <= 30 for e in verify.family_entries(30))


def test_random_entries_are_seeded():
    assert verify.random_entries(6, 3) == verify.random_entries(6, 3)


def test_random_entries_are_semidistrim():
    from latticelab import is_semidistrim

    assert all(is_semidistrim(verify.build(e)) for e in verify.random_entries(8, 1))


def test_products_respect_size_bound():
    pool = verify.family_entries(10)
    for e in verify.product_entries(pool, 5, 0, max_size=40):
        assert verify.build(e).n == e.size <= 40


def test_small_corpus_passes():
    entries = verify.family_entries(30) + verify.random_entries(4, 0)
    report = verify.verify_theorems(entries, jobs=1)
    assert report.ok, report.summary()
    assert report.counts()["passed"] > 0


def test_skips_carry_reasons():
    report = verify.verify_theorems([verify.Entry("fig7", "figure", ("fig7",))], jobs=1)
    skipped = [r for r in report.results if r.passed is None]
    assert skipped and all(r.reason == "not semidistrim" for r in skipped)


def test_size_limited_check_is_skipped():
    e = verify.Entry("weak(A5)", "weak", ("A", 5), 720)
    results = verify.run_checks(e, [c for c in verify.CHECKS if c.name == "interval_closure"])
    assert results[0].passed is None and results[0].reason.startswith("size 720")


def test_failing_check_reports_witness():
    bad = verify.Check("always", lambda L: "boom", needs_semidistrim=False)
    (result,) = verify.run_checks(verify.Entry("chain(2)", "chain", (2,)), [bad])
    assert result.passed is False and result.witness == "boom"


def test_crash_counts_as_failure():
    def crash(L):
        raise RuntimeError("x")

    (result,) = verify.run_checks(verify.Entry("chain(2)", "chain", (2,)), [verify.Check("c", crash, False)])
    assert result.passed is False and "RuntimeError" in result.witness


def test_report_dict():
    report = verify.verify_theorems([verify.Entry("chain(3)", "chain", (3,))], jobs=1)
    d = report.to_dict()
    assert set(d) == {"seed", "ok", "counts", "results"}
    assert d["ok"] is True


def test_table_rows_cover_every_family():
    prefixes = {r.id.rsplit(" ", 1)[0] for r in verify.TABLE_ROWS}
    assert prefixes == {"weak", "tamari", "cambrian linear", "cambrian bipartite", "root ideals"}


def test_small_table_rows():
    rows = [r for r in verify.TABLE_ROWS if (r.size or 0) <= 20 and r.id != "cambrian linear B3"]
    report = verify.verify_tables(rows, jobs=1)
    assert report.ok, report.summary()


def test_table_size_cap_skips():
    report = verify.verify_tables(verify.TABLE_ROWS, max_size=5, jobs=1)
    assert any(r.passed is None for r in report.results)


@pytest.mark.parametrize("fid", FIGURE_IDS)
def test_figures_build(fid):
    assert verify.build(verify.Entry(fid, "figure", (fid,))).n >= 1
