import json
import math

import jsonschema
import pytest

from capillary_plates import barriers, cli

PI = math.pi
G2 = "0.7853981633974483"

JSON_RUNS = {
    "critical": ["--gamma2", G2],
    "barrier": ["--kind", "IV0", "--B", "0.5", "--gamma2", G2, "--samples", "16"],
    "profile": ["--gamma1", "2.0", "--gamma2", "0.5", "--B", "0.3", "--samples", "16"],
    "sweep": ["--gamma1", "2.0", "--gamma2", "0.5", "--B-max", "0.3", "--B-min", "0.01", "--steps", "8"],
    "classify": ["--gamma1", "2.0", "--gamma2", "0.5", "--B", "0.3"],
    "map": ["--gamma2", G2, "--steps", "6"],
    "estimate": ["--gamma1", "1.0471975511965976", "--gamma2", "0.5235987755982988", "--B", "0.001"],
    "force": ["--gamma1", "2.0", "--gamma2", "0.5", "--B", "0.3"],
}


def _run(capsys, *argv):
    code = cli.run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_critical_example(capsys):
    code, out, _ = _run(capsys, "critical", "--gamma2", G2)
    assert code == 0
    d = json.loads(out)
    B0, B00 = barriers.critical_separations(PI / 4)
    assert (d["B0"], d["B00"]) == (B0, B00)
    assert d["thresholds"] == {"wide_above": B0, "narrow_at_or_below": B00}
    assert d["discrepancy_factor"] == pytest.approx(0.5, rel=1e-14)


def test_force_example(capsys):
    code, out, _ = _run(capsys, "force", "--psi0", "1.0471975511965976")
    assert code == 0
    assert float(out) == pytest.approx(-1.0, abs=1e-15)


def test_figure_5b_minima(capsys, tmp_path):
    code, out, _ = _run(capsys, "figure", "--id", "5b", "--gamma2", "0.5235987755982988", "--out", str(tmp_path))
    assert code == 0
    manifest = json.loads((tmp_path / "manifest.json").read_text())
    jsonschema.validate(manifest, cli.schema("figure"))
    sweeps = [f["name"] for f in manifest["files"] if f["name"].startswith("sweep_")]
    assert len(sweeps) == 5
    assert out.split() == [str(tmp_path / f["name"]) for f in manifest["files"]]
    for name in sweeps:
        lines = (tmp_path / name).read_text().splitlines()
        rows = [tuple(map(float, ln.split(","))) for ln in lines[1:] if not ln.startswith("#")]
        F = [f for _, f in rows]
        k = F.index(min(F))
        assert 0 < k < len(F) - 1
        tail = lines[-1]
        assert tail.startswith("# B_star=")
        F_star = float(tail.split("F_star=")[1].split()[0])
        assert F_star == pytest.approx(-1.0, abs=1e-6)


@pytest.mark.parametrize("command", sorted(JSON_RUNS))
def test_json_output_validates(capsys, command):
    code, out, _ = _run(capsys, command, *JSON_RUNS[command], "--json")
    assert code == 0
    jsonschema.validate(json.loads(out), cli.schema(command))


def test_estimate_symmetric_json_validates(capsys):
    code, out, _ = _run(capsys, "estimate", "--gamma1", str(PI - PI / 6), "--gamma2", str(PI / 6), "--B", "0.5",
                        "--json")
    assert code == 0
    d = json.loads(out)
    jsonschema.validate(d, cli.schema("estimate"))
    assert "symmetric_height_bound" in d


def test_force_psi0_json_validates(capsys):
    code, out, _ = _run(capsys, "force", "--psi0", "0.5", "--json")
    assert code == 0
    jsonschema.validate(json.loads(out), cli.schema("force"))


def test_json_has_no_nonfinite_tokens():
    text = cli._dump({"bound": math.inf, "rows": [1.0, math.nan], "x": 2.5})
    assert json.loads(text) == {"bound": None, "rows": [1.0, None], "x": 2.5}


@pytest.mark.parametrize("command", ["barrier", "profile", "sweep", "classify", "estimate", "force"])
def test_repeated_runs_are_byte_identical(capsys, command):
    first = _run(capsys, command, *JSON_RUNS[command])
    second = _run(capsys, command, *JSON_RUNS[command])
    assert first[0] == 0 and first == second


def test_csv_uses_17_significant_digits(capsys):
    _, out, _ = _run(capsys, "profile", *JSON_RUNS["profile"])
    rows = [ln for ln in out.splitlines() if not ln.startswith("#")]
    assert rows[0] == "xi,U,psi"
    xi, U, psi = rows[1].split(",")
    assert xi == "-1"
    assert float(U) == float(f"{float(U):.17g}")


def test_degrees_flag(capsys):
    rad = _run(capsys, "classify", "--gamma1", str(math.radians(120)), "--gamma2", str(math.radians(30)),
               "--B", "0.1", "--json")
    deg = _run(capsys, "classify", "--gamma1", "120", "--gamma2", "30", "--B", "0.1", "--json", "--degrees")
    a, b = json.loads(rad[1]), json.loads(deg[1])
    assert a["region"] == b["region"]
    assert a["force"] == pytest.approx(b["force"], abs=1e-12)


def test_out_writes_file(capsys, tmp_path):
    target = tmp_path / "crit.json"
    code, out, _ = _run(capsys, "critical", "--gamma2", G2, "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["B0"] == barriers.critical_separations(PI / 4)[0]


@pytest.mark.parametrize("argv, needle", [
    (["critical", "--gamma2", "2.0"], "gamma2"),
    (["classify", "--gamma1", "1.0", "--gamma2", "0.5"], "--B"),
    (["profile", "--gamma1", "1.0", "--gamma2", "0.5", "--B", "-1"], "B"),
    (["force", "--gamma2", "0.5", "--B", "0.3"], "--gamma1"),
])
def test_domain_errors_exit_2(capsys, argv, needle):
    code, out, err = _run(capsys, *argv)
    assert code == 2 and out == ""
    assert err.startswith("error:") and needle in err


@pytest.mark.parametrize("argv", [["bogus"], ["critical", "--nope", "1"], [], ["barrier", "--kind", "VI"]])
def test_usage_errors_exit_64(capsys, argv):
    code, _, err = _run(capsys, *argv)
    assert code == 64
    assert "usage:" in err


@pytest.mark.parametrize("fig", ["4", "6", "9"])
def test_small_figure_presets(capsys, tmp_path, fig):
    code, out, _ = _run(capsys, "figure", "--id", fig, "--steps", "4", "--out", str(tmp_path), "--json")
    assert code == 0
    manifest = json.loads(out)
    jsonschema.validate(manifest, cli.schema("figure"))
    assert manifest == json.loads((tmp_path / "manifest.json").read_text())
    for f in manifest["files"]:
        assert (tmp_path / f["name"]).read_text()
