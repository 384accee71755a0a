import json

import numpy as np
import pytest
from click.testing import CliRunner

from frontend.cli import cli
from main import init_backend


@pytest.fixture(scope="module")
def services():
    return init_backend()


@pytest.fixture
def run(services):
    runner = CliRunner()

    def invoke(*args):
        return runner.invoke(cli, [str(a) for a in args], obj=services)

    return invoke


@pytest.fixture
def generated(run, tmp_path):
    """Записать граф-образец в файл и вернуть путь"""

    def make(name, *options):
        path = tmp_path / f"{name}.json"
        result = run("generate", name, *options, "--out", path)
        assert result.exit_code == 0, result.output
        return path

    return make


def test_generate_then_poles(run, generated, tmp_path):
    graph = generated("tetrahedron")
    out = tmp_path / "poles.json"

    result = run("poles", "--graph", graph, "--out", out)
    assert result.exit_code == 0, result.output

    payload = json.loads(out.read_text(encoding="utf-8"))
    assert payload["degree_bound"] == 12
    assert len(payload["poles"]) == 3
    zetas = sorted(abs(complex(*pole["zeta"])) for pole in payload["poles"])
    np.testing.assert_allclose(zetas, [0.5, 1 / np.sqrt(2), 1 / np.sqrt(2)], atol=1e-9)


def test_spectrum_of_dirichlet_interval(run, generated, tmp_path):
    graph = generated("interval_compact")
    out = tmp_path / "spectrum.json"

    result = run("spectrum", "--graph", graph, "--p-min", 0, "--p-max", 31.5, "--out", out)
    assert result.exit_code == 0, result.output

    momenta = json.loads(out.read_text(encoding="utf-8"))["momenta"]
    np.testing.assert_allclose(momenta, np.pi * np.arange(1, 11), atol=1e-9)


def test_triangle_and_star_are_equivalent(run, generated, tmp_path):
    triangle = generated("triangle", "--lengths", "0.7,1.1,1.3")
    star = generated("star_loops", "--lengths", "0.7,1.1,1.3")
    out = tmp_path / "equiv.json"

    result = run(
        "equiv", "--graph", triangle, "--graph-b", star, "--p-list", "0.3,0.7,1.1", "--out", out
    )
    assert result.exit_code == 0, result.output
    assert json.loads(out.read_text(encoding="utf-8"))["max_deviation"] < 1e-8


def test_stot_csv(run, generated, tmp_path):
    graph = generated("star", "--n", 3)
    out = tmp_path / "stot.csv"

    result = run(
        "stot", "--graph", graph, "--p-min", 0.5, "--p-max", 1.5, "--steps", 2,
        "--format", "csv", "--out", out,
    )
    assert result.exit_code == 0, result.output

    lines = out.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "p_re,p_im,row,col,re,im,abs2,near_pole"
    assert len(lines) == 1 + 2 * 9
    first = lines[1].split(",")
    assert float(first[4]) == pytest.approx(-1 / 3)


def test_verify_fabry_perot(run, generated, tmp_path):
    graph = generated("fabry_perot", "--r", 0.6)
    out = tmp_path / "verify.json"

    result = run("verify", "--graph", graph, "--p-min", 0.1, "--p-max", 6.0, "--steps", 25,
                 "--out", out)
    assert result.exit_code == 0, result.output

    payload = json.loads(out.read_text(encoding="utf-8"))
    assert payload["max_defect"] < 1e-10
    assert all(point["unitarity"] is not None for point in payload["points"])


def test_output_is_reproducible(run, generated, tmp_path):
    graph = generated("tadpole")
    texts = []
    for k in range(2):
        out = tmp_path / f"stot_{k}.json"
        result = run("stot", "--graph", graph, "--p-min", 0.1, "--p-max", 3.0, "--steps", 7,
                     "--workers", 2, "--out", out)
        assert result.exit_code == 0, result.output
        texts.append(out.read_bytes())
    assert texts[0] == texts[1]


def test_bad_json_exits_with_parse_code(run, tmp_path):
    graph = tmp_path / "broken.json"
    graph.write_text('{"vertices": 2,', encoding="utf-8")

    result = run("stot", "--graph", graph, "--p-list", "1.0")
    assert result.exit_code == 1


def test_disconnected_graph_exits_with_validation_code(run, tmp_path):
    graph = tmp_path / "split.json"
    graph.write_text(json.dumps({"vertices": 2, "external_edges": [{"vertex": 1}]}), encoding="utf-8")

    result = run("stot", "--graph", graph, "--p-list", "1.0")
    assert result.exit_code == 2


def test_empty_grid_exits_with_validation_code(run, generated):
    graph = generated("line2")
    assert run("stot", "--graph", graph, "--p-min", 0, "--p-max", 1, "--steps", 0).exit_code == 2
    assert run("stot", "--graph", graph, "--p-min", 1, "--p-max", 0, "--steps", 5).exit_code == 2
    assert run("stot", "--graph", graph, "--p-list", "a,b").exit_code == 2


def test_generate_rejects_bad_options(run):
    assert run("generate", "pentagon").exit_code == 2
    assert run("generate", "triangle", "--lengths", "1,2").exit_code == 2


def test_poles_numerical_and_validation_codes(run, generated):
    star = generated("star")
    assert run("poles", "--graph", star).exit_code == 2
    assert run("poles", "--graph", star, "--unit", 1.0).exit_code == 3


def test_spectrum_requires_compact_graph(run, generated):
    graph = generated("tadpole")
    assert run("spectrum", "--graph", graph, "--p-min", 0, "--p-max", 3).exit_code == 2


def test_malformed_local_matrices_are_reported(run, tmp_path):
    ragged = {
        "vertices": 2,
        "internal_edges": [{"u": 1, "v": 2, "length": 1.0}],
        "external_edges": [{"vertex": 1}, {"vertex": 2}],
        "locals": [
            {"vertex": 1, "matrix": [[[0, 0], [1, 0]], [[1, 0]]]},
            {"vertex": 2, "family": "kirchhoff"},
        ],
    }
    graph = tmp_path / "ragged.json"
    graph.write_text(json.dumps(ragged), encoding="utf-8")
    result = run("stot", "--graph", graph, "--p-list", "1.0")
    assert result.exit_code == 1
    assert not isinstance(result.exception, ValueError)

    endless = dict(ragged, locals=[], internal_edges=[{"u": 1, "v": 2, "length": float("inf")}])
    graph.write_text(json.dumps(endless), encoding="utf-8")
    assert run("stot", "--graph", graph, "--p-list", "1.0").exit_code == 2


def test_poles_payload_names_representative_momentum(run, generated, tmp_path):
    graph = generated("tadpole")
    out = tmp_path / "poles.json"
    assert run("poles", "--graph", graph, "--out", out).exit_code == 0

    (pole,) = json.loads(out.read_text(encoding="utf-8"))["poles"]
    assert set(pole) == {"zeta", "p_representative", "multiplicity", "coupled"}
    assert complex(*pole["zeta"]) == pytest.approx(1 / 3, abs=1e-10)
    assert np.exp(-1j * complex(*pole["p_representative"])) == pytest.approx(1 / 3, abs=1e-10)
