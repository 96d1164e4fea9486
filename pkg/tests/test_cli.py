import json

import pytest
from click.testing import CliRunner
from hypothesis import given, settings, strategies as st

from latticelab import io
from latticelab.cli import main
from latticelab.dot import galois_dot, hasse_dot
from latticelab.generators import FIGURE_IDS, chain, figure_lattice, random_lattice


@pytest.fixture
def run():
    runner = CliRunner()

    def invoke(*args, input=None):
        return runner.invoke(main, list(args), input=input, catch_exceptions=False)

    return invoke


class TestDocuments:
    @pytest.mark.parametrize("fid", FIGURE_IDS)
    def test_round_trip_keeps_indexing(self, fid):
        L = figure_lattice(fid)
        M = io.loads(io.dumps(L, fid))
        assert M.n == L.n and M.covers == L.covers
        assert [M.name(x) for x in range(M.n)] == [L.name(x) for x in range(L.n)]

    @settings(max_examples=30, deadline=None)
    @given(st.integers(0, 2**32 - 1))
    def test_round_trip_random(self, seed):
        L = random_lattice(12, seed)
        assert io.loads(io.dumps(L)).covers == L.covers

    def test_keys_in_order(self):
        doc = json.loads(io.dumps(chain(2), "c"))
        assert list(doc) == ["name", "size", "covers", "element_names"]

    @pytest.mark.parametrize(
        "text",
        [
            "not json",
            "[]",
            '{"size": 0, "covers": []}',
            '{"size": 2, "covers": [[0, 2]]}',
            '{"size": 2, "covers": [], "extra": 1}',
            '{"size": 2, "covers": [[0, 1]], "element_names": ["a"]}',
        ],
    )
    def test_malformed(self, text):
        with pytest.raises(io.DocumentError):
            io.LatticeDocument.from_json(text)


class TestDot:
    def test_chain3_hasse_labels(self):
        text = hasse_dot(chain(3))
        assert '0 -> 1 [label="1"];' in text and '1 -> 2 [label="2"];' in text
        assert text.count("->") == 2

    def test_fig4_galois(self):
        text = galois_dot(figure_lattice("fig4"))
        assert text.count("[label=") == 5
        assert text.count("->") == 9

    def test_unlabelled_when_not_overlapping(self):
        text = hasse_dot(figure_lattice("fig2"))
        assert "->" in text and "label=" not in text.split("rankdir=BT;")[1].split("->", 1)[1].split("\n")[0]


class TestGen:
    @pytest.mark.parametrize(
        "args,size",
        [
            (["weak-order", "--type", "A", "--rank", "2"], 6),
            (["figure", "--id", "fig2"], 5),
            (["tamari", "--n", "3"], 14),
            (["cambrian", "--type", "B", "--rank", "3", "--preset", "bipartite"], 20),
            (["root-ideals", "--type", "A", "--rank", "3"], 14),
            (["boolean", "--n", "3"], 8),
        ],
    )
    def test_sizes(self, run, args, size):
        res = run("gen", *args)
        assert res.exit_code == 0
        assert json.loads(res.output)["size"] == size

    def test_writes_file(self, run, tmp_path):
        out = tmp_path / "hex.json"
        assert run("gen", "weak-order", "--rank", "2", "-o", str(out)).exit_code == 0
        assert io.load(out).n == 6

    def test_random_uses_seed(self, run):
        a = run("--seed", "5", "gen", "random").output
        b = run("--seed", "5", "gen", "random").output
        assert a == b

    def test_bad_family(self, run):
        assert CliRunner().invoke(main, ["gen", "nope"]).exit_code == 2

    def test_missing_parameter(self, run):
        assert CliRunner().invoke(main, ["gen", "chain"]).exit_code == 2

    def test_over_cap(self, run):
        assert CliRunner().invoke(main, ["--cap", "10", "gen", "boolean", "--n", "5"]).exit_code == 2


class TestClassify:
    def test_fig1_right(self, run):
        report = json.loads(run("--json", "classify", "fig1_right").output)
        assert report["semidistrim"] and not report["trim"] and not report["semidistributive"]

    def test_fig4(self, run):
        report = json.loads(run("--json", "classify", "fig4").output)
        assert report["compatibly_dismantlable"] and not report["semidistrim"]

    def test_fig5(self, run):
        report = json.loads(run("--json", "classify", "fig5").output)
        assert report["overlapping"] and not report["compatibly_dismantlable"]

    def test_stdin(self, run):
        res = run("classify", "-", input=io.dumps(chain(3)))
        assert "semidistrim: True" in res.output

    def test_not_a_lattice(self, run, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text('{"size": 3, "covers": [[0, 1], [0, 2]]}')
        res = CliRunner().invoke(main, ["classify", str(bad)])
        assert res.exit_code == 3
        assert "witness" in res.output

    def test_cycle(self, run, tmp_path):
        bad = tmp_path / "cycle.json"
        bad.write_text('{"size": 2, "covers": [[0, 1], [1, 0]]}')
        assert CliRunner().invoke(main, ["classify", str(bad)]).exit_code == 3

    def test_unknown_source(self):
        assert CliRunner().invoke(main, ["classify", "no-such-thing"]).exit_code == 2


class TestDynamics:
    def test_weak_a4_polynomial(self, run, tmp_path):
        doc = tmp_path / "a4.json"
        run("gen", "weak-order", "--rank", "4", "-o", str(doc))
        assert run("dynamics", "pop-polynomial", str(doc)).output.strip() == "q^4 + 22q^3 + 26q^2"
        payload = json.loads(run("--json", "dynamics", "pop-polynomial", str(doc)).output)
        assert payload["coefficients"] == [[2, 26], [3, 22], [4, 1]]

    def test_chain5_orbits(self, run):
        payload = json.loads(run("--json", "dynamics", "row-orbits", "-", input=io.dumps(chain(5))).output)
        assert payload["lengths"] == [5]

    def test_boolean2_popping_pairs(self, run):
        res = run("gen", "boolean", "--n", "2")
        payload = json.loads(run("--json", "dynamics", "popping-pairs", "-", input=res.output).output)
        assert payload["count"] == 1

    def test_not_semidistrim(self):
        assert CliRunner().invoke(main, ["dynamics", "row-orbits", "fig4"]).exit_code == 4

    def test_pop_runs_on_any_lattice(self, run):
        assert run("dynamics", "pop", "fig7").exit_code == 0

    def test_shards(self, run):
        rows = json.loads(run("--json", "dynamics", "shards", "fig1_left").output)
        assert len(rows) == 6


class TestExport:
    def test_fig4_galois(self, run):
        text = run("export", "fig4", "--format", "dot-galois").output
        assert text.count("->") == 9

    def test_fig2_galois_fails(self):
        assert CliRunner().invoke(main, ["export", "fig2", "--format", "dot-galois"]).exit_code == 5

    @pytest.mark.parametrize("fid", ["fig1_right", "fig6", "fig12"])
    def test_byte_deterministic(self, run, fid):
        assert run("export", fid).stdout_bytes == run("export", fid).stdout_bytes


class TestVerify:
    def test_fig7_pop_check_skipped(self, run):
        res = CliRunner().invoke(main, ["verify", "theorems", "--lattice", "fig7", "--verbose", "--jobs", "1"])
        assert res.exit_code == 0
        assert "skip pop_image_counts fig7 (not semidistrim)" in res.output

    def test_figures_pass(self):
        res = CliRunner().invoke(
            main, ["verify", "theorems", "--jobs", "1", *sum((["--lattice", f] for f in FIGURE_IDS), [])]
        )
        assert res.exit_code == 0, res.output

    def test_json_report(self):
        res = CliRunner().invoke(main, ["--json", "verify", "theorems", "--lattice", "fig1_left", "--jobs", "1"])
        payload = json.loads(res.output)
        assert payload["theorems"]["counts"]["failed"] == 0
