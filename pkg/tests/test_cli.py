"""Tests for the command-line surface and its exit codes."""

import json
from fractions import Fraction

import pytest

from app.main import EXIT_FAILED, EXIT_OK, EXIT_TRUNCATION, EXIT_USAGE, run
from app.models.power_series import NCSeries
from app.tools.codec import dumps, loads, write_value
from app.tools.freeprob import multiply_free_tuples, semicircular, unit_distribution
from app.tools.series import boxstar


@pytest.fixture
def files(tmp_path, make_series, make_distribution):
    paths = {}

    def _write(name, value, tracial=None):
        path = tmp_path / f"{name}.json"
        write_value(value, path, tracial)
        paths[name] = str(path)
        return str(path)

    _write("f", make_series(2, 4))
    _write("g", make_series(2, 4))
    _write("a", make_distribution(2, 4, tracial=True), tracial=True)
    _write("b", make_distribution(2, 4, tracial=True), tracial=True)
    _write("a2", make_distribution(2, 2, tracial=True))
    _write("sc", semicircular(1, 3))
    return paths


# nc


def test_kreweras(capsys):
    assert run(["nc", "kreweras", "--k", "8", "--pi", "1,4,8|2,3|5,6|7"]) == EXIT_OK
    assert capsys.readouterr().out == "1,3|2|4,6,7|5|8\n"


def test_enumerate(capsys):
    assert run(["nc", "enumerate", "--k", "4"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 14
    assert lines[0] == "1,2,3,4" and lines[-1] == "1|2|3|4"


def test_relative_ncp_and_twice(capsys):
    assert run(["nc", "relative", "--k", "4", "--pi", "1|2|3|4", "--rho", "1,2|3,4"]) == EXIT_OK
    assert run(["nc", "ncp", "--k", "4"]) == EXIT_OK
    assert run(["nc", "twice", "--k", "2", "--rho", "1,2"]) == EXIT_OK
    assert capsys.readouterr().out.splitlines() == ["1,2|3,4", "1,2|3,4", "1,4|2,3", "1,3|2|4"]


@pytest.mark.parametrize(
    "argv",
    [
        ["nc", "kreweras", "--k", "4", "--pi", "1,3|2,4"],
        ["nc", "kreweras", "--k", "3", "--pi", "1,x|2"],
        ["nc", "kreweras", "--k", "4", "--pi", "1,2|3"],
        ["nc", "relative", "--k", "3", "--pi", "1,2|3", "--rho", "1|2,3"],
        ["nc", "enumerate", "--k", "0"],
        ["nc", "ncp", "--k", "3"],
        ["nc", "unknown"],
        [],
    ],
)
def test_usage_errors(argv, capsys):
    assert run(argv) == EXIT_USAGE


# series


def test_series_star(files, capsys):
    assert run(["series", "star", "--lhs", files["f"], "--rhs", files["g"]]) == EXIT_OK
    out = capsys.readouterr().out
    f, g = loads(open(files["f"]).read()), loads(open(files["g"]).read())
    assert out == dumps(boxstar(f, g))
    assert run(["series", "star", "--lhs", files["f"], "--rhs", files["g"]]) == EXIT_OK
    assert capsys.readouterr().out == out


def test_series_invert_to_file(files, tmp_path, make_series):
    path = tmp_path / "h.json"
    write_value(make_series(1, 4, invertible=True), path)
    out = tmp_path / "inverse.json"
    assert run(["series", "invert", "--in", str(path), "--out", str(out)]) == EXIT_OK
    inverse = loads(out.read_text())
    assert boxstar(loads(path.read_text()), inverse).coeffs == {(1,): 1}


def test_series_invert_failure(tmp_path):
    path = tmp_path / "h.json"
    write_value(NCSeries(n=1, max_degree=2, coeffs={"1,1": 1}), path)
    assert run(["series", "invert", "--in", str(path)]) == EXIT_USAGE


def test_max_degree_caps_inputs(files, capsys):
    assert run(["--max-degree", "2", "series", "star", "--lhs", files["f"], "--rhs", files["g"]]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["max_degree"] == 2


def test_missing_file():
    assert run(["series", "invert", "--in", "/nonexistent/series.json"]) == EXIT_USAGE


# dist


def test_dist_r_and_m(files, tmp_path, capsys):
    r_path = tmp_path / "r.json"
    assert run(["dist", "r", "--in", files["sc"], "--out", str(r_path)]) == EXIT_OK
    assert loads(r_path.read_text()).coeffs == {(1, 1): 1}
    assert run(["dist", "m", "--in", str(r_path)]) == EXIT_OK
    assert loads(capsys.readouterr().out) == semicircular(1, 3)


def test_dist_freemul_formulas(files, capsys):
    outputs = []
    for formula in ("rr", "rm", "mr"):
        assert run(["dist", "freemul", "--a", files["a"], "--b", files["b"], "--formula", formula]) == EXIT_OK
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1] == outputs[2]
    mu_a, mu_b = loads(open(files["a"]).read()), loads(open(files["b"]).read())
    assert loads(outputs[0]) == multiply_free_tuples(mu_a, mu_b)


def test_dist_freeadd_and_transforms(files, capsys):
    assert run(["dist", "freeadd", "--a", files["sc"], "--b", files["sc"]]) == EXIT_OK
    assert loads(capsys.readouterr().out) == semicircular(2, 3)
    assert run(["dist", "compress", "--in", files["sc"], "--alpha", "1/2"]) == EXIT_OK
    assert loads(capsys.readouterr().out) == semicircular("1/2", 3)
    assert run(["dist", "semigroup", "--in", files["sc"], "--t", "3"]) == EXIT_OK
    assert loads(capsys.readouterr().out) == semicircular(3, 3)
    assert run(["dist", "conjugate-sc", "--in", files["sc"], "--s", "1/2"]) == EXIT_OK
    assert loads(capsys.readouterr().out).coeffs == {(1, 1): Fraction(1, 4)}


def test_dist_compress_rejects_zero(files):
    assert run(["dist", "compress", "--in", files["sc"], "--alpha", "0"]) == EXIT_USAGE
    assert run(["dist", "compress", "--in", files["sc"], "--alpha", "0.5"]) == EXIT_USAGE


def test_freeprod_oracle(files, capsys):
    assert run(["dist", "freeprod-oracle", "--a", files["a"], "--b", files["b"], "--degree", "2"]) == EXIT_OK
    assert loads(capsys.readouterr().out).n == 4
    assert run(["dist", "freeprod-oracle", "--a", files["a2"], "--b", files["b"], "--degree", "3"]) == EXIT_TRUNCATION
    assert run(["dist", "freeprod-oracle", "--a", files["a"], "--b", files["b"], "--degree", "9"]) == EXIT_USAGE


# verify


def test_verify_products(files, capsys):
    assert run(["verify", "thm14", "--a", files["a"], "--b", files["b"], "--degree", "3"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 3
    assert all(line.startswith("PASS ") for line in lines)


def test_verify_json_report(files, capsys):
    argv = ["verify", "thm14", "--a", files["a"], "--b", files["b"], "--degree", "2", "--json"]
    assert run(argv) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["target"] == "thm14" and report["degree"] == 2
    assert report["passed"] is True
    assert len(report["identities"]) == 3


def test_verify_caps_loaded_inputs(files, capsys):
    argv = ["--max-degree", "3", "verify", "thm14", "--a", files["a"], "--b", files["b"], "--degree", "2", "--json"]
    assert run(argv) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert [identity["checked"] for identity in report["identities"]] == [6, 6, 6]


def test_verify_degree_limits(files):
    assert run(["verify", "thm14", "--a", files["a"], "--b", files["b"], "--degree", "9"]) == EXIT_USAGE
    assert run(["verify", "thm14", "--a", files["a2"], "--b", files["a2"], "--degree", "3"]) == EXIT_TRUNCATION
    assert run(["verify", "nothing", "--degree", "2"]) == EXIT_USAGE


def test_verify_reports_failure(files, capsys, monkeypatch):
    monkeypatch.setattr(
        "app.graphs.identities.componentwise_product_moments",
        lambda mu_a, mu_b, d: unit_distribution(mu_a.n, d),
    )
    assert run(["verify", "thm14", "--a", files["sc"], "--b", files["sc"], "--degree", "2"]) == EXIT_FAILED
    first = capsys.readouterr().out.splitlines()[0]
    assert first.startswith("FAIL ")
    assert "first mismatch at 1: lhs=0 rhs=1" in first


def test_verify_generated_inputs_are_seeded(capsys):
    assert run(["verify", "app111", "--degree", "3", "--seed", "7"]) == EXIT_OK
    first = capsys.readouterr().out
    assert run(["verify", "app111", "--degree", "3", "--seed", "7"]) == EXIT_OK
    assert capsys.readouterr().out == first
