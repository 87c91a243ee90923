import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from gonlab.cli import main

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def runner():
    return CliRunner()


def invoke(runner, *args, **kwargs):
    result = runner.invoke(main, list(args), **kwargs)
    return result


def write_graph(tmp_path, family, runner, **options):
    args = ["generate", "--family", family]
    for key, value in options.items():
        args += [f"--{key}", str(value)]
    result = invoke(runner, *args)
    assert result.exit_code == 0, result.output
    path = tmp_path / f"{family}.json"
    path.write_text(result.output)
    return path


class TestGenerate:
    def test_dodecahedron(self, runner):
        result = invoke(runner, "generate", "--family", "dodecahedron")
        assert result.exit_code == 0
        payload = json.loads(result.output)
        assert payload["vertices"] == 20
        assert len(payload["edges"]) == 30

    def test_parametrised_families(self, runner):
        for args, vertices in [
            (["--family", "complete", "--size", "5"], 5),
            (["--family", "cycle", "--size", "6"], 6),
            (["--family", "hypercube", "--size", "4"], 16),
            (["--family", "complete-multipartite", "--parts", "2,3,4"], 9),
        ]:
            result = invoke(runner, "generate", *args)
            assert result.exit_code == 0, result.output
            assert json.loads(result.output)["vertices"] == vertices

    def test_unknown_family_fails_cleanly(self, runner):
        result = invoke(runner, "generate", "--family", "mystery")
        assert result.exit_code == 1
        assert "error" in json.loads(result.output)

    def test_missing_option_is_usage_error(self, runner):
        result = invoke(runner, "generate")
        assert result.exit_code == 2


class TestGonalityCommand:
    def test_octahedron(self, runner, tmp_path):
        graph = write_graph(tmp_path, "octahedron", runner)
        result = invoke(runner, "gonality", str(graph))
        assert result.exit_code == 0
        payload = json.loads(result.output)
        assert payload["gonality"] == 4
        assert sum(payload["winning_divisor"]["chips"]) == 4

    def test_higher_rank_flag(self, runner, tmp_path):
        graph = write_graph(tmp_path, "cycle", runner, size=3)
        result = invoke(runner, "gonality", str(graph), "--rank", "2")
        assert result.exit_code == 0
        assert json.loads(result.output) == {"rank": 2, "gonality": 3}

    def test_raw_algorithm_flag(self, runner, tmp_path):
        graph = write_graph(tmp_path, "cycle", runner, size=4)
        result = invoke(runner, "gonality", str(graph), "--raw-algorithm")
        assert result.exit_code == 0
        assert json.loads(result.output)["gonality"] == 2

    def test_budget_exhaustion_reports_bracket(self, runner, tmp_path):
        graph = write_graph(tmp_path, "dodecahedron", runner)
        result = invoke(runner, "gonality", str(graph), "--budget-nodes", "10")
        assert result.exit_code == 1
        payload = json.loads(result.output)
        assert payload["error"] == "budget exhausted"
        lo, hi = payload["bracket"]
        assert lo <= 6 <= hi

    def test_malformed_json_input(self, runner, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        result = invoke(runner, "gonality", str(bad))
        assert result.exit_code == 1
        assert "error" in json.loads(result.output)


class TestEngineCommands:
    def test_dhar_burn_sets(self, runner, tmp_path):
        graph = write_graph(tmp_path, "path", runner, size=3)
        divisor = tmp_path / "d.json"
        divisor.write_text(json.dumps({"chips": [-1, 1, 0]}))
        result = invoke(runner, "dhar", str(graph), str(divisor), "--q", "0")
        assert result.exit_code == 0
        payload = json.loads(result.output)
        assert payload["burned"] == [0]
        assert payload["unburned"] == [1, 2]
        assert payload["suggested_fire_set"] == [1, 2]

    def test_reduce_reports_steps(self, runner, tmp_path):
        graph = write_graph(tmp_path, "complete", runner, size=4)
        divisor = tmp_path / "d.json"
        divisor.write_text(json.dumps({"chips": [3, 0, 0, 0]}))
        result = invoke(runner, "reduce", str(graph), str(divisor), "--q", "3")
        assert result.exit_code == 0
        payload = json.loads(result.output)
        assert payload["chips"] == [0, 1, 1, 1]
        assert payload["steps"]
        assert payload["pretty"] == "{v1: 1, v2: 1, v3: 1}"

    def test_winnable_verdicts(self, runner, tmp_path):
        graph = write_graph(tmp_path, "cycle", runner, size=3)
        divisor = tmp_path / "d.json"
        divisor.write_text(json.dumps({"chips": [0, 2, -1]}))
        result = invoke(runner, "winnable", str(graph), str(divisor))
        assert result.exit_code == 0
        assert json.loads(result.output)["winnable"] is True
        divisor.write_text(json.dumps({"chips": [-1, 0, 0]}))
        result = invoke(runner, "winnable", str(graph), str(divisor))
        assert json.loads(result.output)["winnable"] is False

    def test_rank_with_witness(self, runner, tmp_path):
        graph = write_graph(tmp_path, "complete", runner, size=4)
        divisor = tmp_path / "d.json"
        divisor.write_text(json.dumps({"chips": [3, 0, 0, 0]}))
        result = invoke(runner, "rank", str(graph), str(divisor))
        assert result.exit_code == 0
        payload = json.loads(result.output)
        assert payload["rank"] == 1
        assert sum(payload["witness"]["chips"]) == 2

    def test_divisor_length_mismatch(self, runner, tmp_path):
        graph = write_graph(tmp_path, "cycle", runner, size=3)
        divisor = tmp_path / "d.json"
        divisor.write_text(json.dumps({"chips": [1, 2]}))
        result = invoke(runner, "rank", str(graph), str(divisor))
        assert result.exit_code == 1


class TestCertify:
    def test_cube_scramble(self, runner, tmp_path):
        graph = write_graph(tmp_path, "cube", runner)
        result = invoke(
            runner, "certify", str(graph),
            str(FIXTURES / "cube_vertical_scramble.json"),
        )
        assert result.exit_code == 0
        payload = json.loads(result.output)
        assert payload["hitting_number"] == 4
        assert payload["egg_cut_number"] == 4
        assert payload["order"] == 4
        assert payload["bound"]["kind"] == "lower"

    def test_octahedron_bramble(self, runner, tmp_path):
        graph = write_graph(tmp_path, "octahedron", runner)
        result = invoke(
            runner, "certify", str(graph), str(FIXTURES / "octahedron_bramble.json")
        )
        payload = json.loads(result.output)
        assert payload["order"] == 5
        assert payload["bound"]["value"] == 4

    def test_icosahedron_treecuts(self, runner, tmp_path):
        graph = write_graph(tmp_path, "icosahedron", runner)
        for fixture, width in [
            ("icosahedron_treecut_pair_rest.json", 10),
            ("icosahedron_treecut_two_pairs.json", 8),
        ]:
            result = invoke(runner, "certify", str(graph), str(FIXTURES / fixture))
            assert result.exit_code == 0, result.output
            assert json.loads(result.output)["width"] == width

    def test_invalid_certificate(self, runner, tmp_path):
        graph = write_graph(tmp_path, "cycle", runner, size=4)
        cert = tmp_path / "cert.json"
        cert.write_text(json.dumps({"type": "scramble", "eggs": [[0, 2]]}))
        result = invoke(runner, "certify", str(graph), str(cert))
        assert result.exit_code == 1


class TestParkingCommand:
    def test_four_vertex_lists(self, runner):
        result = invoke(runner, "parking", "--n", "4")
        assert result.exit_code == 0
        payload = json.loads(result.output)
        assert len(payload["unwinnable"]) == 16
        assert len(payload["parking_functions"]) == 16
        assert payload["bijection"] is True
        assert payload["coordinate_bound_verified"] is None
        assert payload["unwinnable"][0] == [0, 0, 0]

    def test_verified_bound(self, runner):
        result = invoke(runner, "parking", "--n", "3", "--verify-bound")
        payload = json.loads(result.output)
        assert payload["coordinate_bound_verified"] is True

    def test_out_of_budget(self, runner):
        result = invoke(runner, "parking", "--n", "12")
        assert result.exit_code == 1


class TestStdin:
    def test_graph_from_stdin(self, runner):
        graph = json.dumps({"vertices": 2, "edges": [[0, 1]]})
        result = invoke(runner, "gonality", "-", input=graph)
        assert result.exit_code == 0
        assert json.loads(result.output)["gonality"] == 1
