import json

import pytest

from nulla_cli import EXIT_INPUT, EXIT_NEGATIVE, EXIT_OK, EXIT_REFUSED, RunConfig, main


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_encode_triangle(capsys, samples):
    code, out, err = run(capsys, "encode", "--graph", samples / "k3.el", "--problem", "indset", "--m", 2)
    assert code == EXIT_OK
    assert len(json.loads(out)["polys"]) == 7
    assert "7 equations" in err


def test_encode_v2_odd_order(capsys, samples):
    code, _, err = run(capsys, "encode", "--graph", samples / "k3.el", "--problem", "matching-v2")
    assert code == EXIT_INPUT
    assert "even vertex count" in err


def test_encode_hom(capsys, samples):
    code, out, _ = run(capsys, "encode", "--graph", samples / "k3.el", "--problem", "hom",
                       "--target-graph", samples / "k2.el", "--m", 3)
    assert code == EXIT_OK
    assert len(json.loads(out)["variables"]) == 8


def test_solve_verify_round_trip(capsys, samples, tmp_path):
    system = tmp_path / "system.json"
    cert = tmp_path / "cert.json"
    bench = tmp_path / "bench.csv"
    assert run(capsys, "encode", "--graph", samples / "k3.el", "--problem", "indset", "--m", 2, "-o", system)[0] == EXIT_OK
    code, _, err = run(capsys, "solve", "--system", system, "-o", cert, "--benchmark", bench)
    assert code == EXIT_OK
    assert "degree 1" in err
    assert json.loads(cert.read_text())["degree"] == 1
    assert bench.read_text().splitlines()[0] == "degree,rows,cols,status,millis"
    assert run(capsys, "verify", "--system", system, "--certificate", cert)[0] == EXIT_OK

    data = json.loads(cert.read_text())
    data["betas"][-1].append({"coeff": "5", "mono": {}})
    cert.write_text(json.dumps(data))
    code, out, _ = run(capsys, "verify", "--system", system, "--certificate", cert)
    assert code == EXIT_NEGATIVE
    assert "residual" in out


def test_hash_mismatch_warns(capsys, samples, tmp_path):
    cert = tmp_path / "cert.json"
    other = tmp_path / "other.json"
    run(capsys, "solve", "--graph", samples / "k3.el", "--problem", "indset", "--m", 2, "-o", cert)
    run(capsys, "encode", "--graph", samples / "k3.el", "--problem", "indset", "--m", 3, "-o", other)
    code, _, err = run(capsys, "verify", "--system", other, "--certificate", cert)
    assert "different system" in err
    assert code == EXIT_NEGATIVE


def test_solve_feasible_reports_no_certificate(capsys, samples):
    code, out, err = run(capsys, "solve", "--graph", samples / "k2.el", "--problem", "indset", "--m", 1,
                         "--degree-bound", 2)
    assert code == EXIT_NEGATIVE
    assert out == ""
    assert "no certificate up to bound 2" in err


def test_solve_column_cap(capsys, samples):
    code, _, err = run(capsys, "solve", "--graph", samples / "k3.el", "--problem", "indset", "--m", 2,
                       "--max-columns", 10)
    assert code == EXIT_REFUSED
    assert "refused" in err


def test_enumerate_matchings(capsys, samples):
    code, out, _ = run(capsys, "enumerate", "--graph", samples / "k3.el", "--problem", "matching")
    assert code == EXIT_OK
    assert len([line for line in out.splitlines() if line.startswith("{")]) == 4
    assert "subset-closed: yes" in out


def test_enumerate_regular_reports_witness(capsys, samples):
    _, out, _ = run(capsys, "enumerate", "--graph", samples / "k3.el", "--problem", "regular")
    assert "subset-closed: no" in out
    assert "witness: {x1_2, x1_3, x2_3} present" in out


def test_enumerate_cagefree_path(capsys, samples):
    _, out, _ = run(capsys, "enumerate", "--graph", samples / "p3.el", "--problem", "cagefree")
    assert out.splitlines()[0] == "{}"
    assert "count: 1" in out


def test_enumerate_guard(capsys, samples):
    code, _, _ = run(capsys, "enumerate", "--graph", samples / "k5.el", "--problem", "indset", "--max-vertices", 3)
    assert code == EXIT_REFUSED


def test_analyze_triangle(capsys, samples):
    code, out, _ = run(capsys, "analyze", "--graph", samples / "k3.el", "--problem", "indset", "--m", 2)
    assert code == EXIT_OK
    assert "PASS degree match" in out


def test_analyze_path_matching(capsys, samples):
    code, out, _ = run(capsys, "analyze", "--graph", samples / "p3.el", "--problem", "matching-v1")
    assert code == EXIT_OK
    assert "bipartite fast path: yes" in out


def test_input_errors(capsys, samples, tmp_path):
    bad = tmp_path / "bad.el"
    bad.write_text("3 2\n1 2\n")
    assert run(capsys, "encode", "--graph", bad, "--problem", "indset", "--m", 1)[0] == EXIT_INPUT
    assert run(capsys, "encode", "--graph", samples / "k3.el", "--problem", "indset")[0] == EXIT_INPUT
    assert run(capsys, "encode", "--graph", tmp_path / "missing.el", "--problem", "indset", "--m", 1)[0] == EXIT_INPUT
    assert run(capsys, "encode", "--graph", samples / "k3.el", "--problem", "bogus")[0] == EXIT_INPUT
    assert run(capsys, "encode", "--graph", samples / "k3.el", "--problem", "indset", "--m", -1)[0] == EXIT_INPUT


def test_run_config_requires_files():
    with pytest.raises(ValueError):
        RunConfig(command="verify", system="s.json")


def test_quiet_suppresses_status(capsys, samples):
    _, _, err = run(capsys, "encode", "--graph", samples / "k3.el", "--problem", "indset", "--m", 2, "--quiet")
    assert err == ""


def test_enumerate_missing_parameters(capsys, samples):
    for problem in ("kcolor", "kregular", "hom"):
        code, _, err = run(capsys, "enumerate", "--graph", samples / "k3.el", "--problem", problem)
        assert code == EXIT_INPUT
        assert "needs" in err


def test_verify_missing_certificate(capsys, samples, tmp_path):
    system = tmp_path / "system.json"
    run(capsys, "encode", "--graph", samples / "k3.el", "--problem", "indset", "--m", 2, "-o", system)
    code, _, _ = run(capsys, "verify", "--system", system, "--certificate", tmp_path / "missing.json")
    assert code == EXIT_INPUT


def test_solve_edgecolor_default_bound_covers_auxiliary_degree(capsys, samples):
    code, _, err = run(capsys, "solve", "--graph", samples / "k3.el", "--problem", "edgecolor", "--m", 3,
                       "--max-columns", 10)
    assert "bound 5" in err
    assert code == EXIT_REFUSED
