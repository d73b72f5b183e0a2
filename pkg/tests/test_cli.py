import json

from radonsmooth.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_exact_report(capsys):
    code, out, _ = run(capsys, "analyze", "--expr", "t1^2 t2 + t1 t2^3")
    assert code == 0
    rep = json.loads(out)
    text = json.dumps(rep)
    assert '"5/3"' in text and '"3/5"' in text


def test_analyze_rejects_zero_polynomial(capsys):
    code, _, err = run(capsys, "analyze", "--expr", "0", "--dim", "2")
    assert code == 2
    assert "identically zero" in err


def test_analyze_reads_file(tmp_path, capsys):
    f = tmp_path / "surface.txt"
    f.write_text("t^3\n")
    code, out, _ = run(capsys, "analyze", str(f))
    assert code == 0
    assert json.loads(out)["newton"]["distance"] == {"value": "3/1", "provenance": "exact"}


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "--expr", "t1 t2", "--p", "2", "--q", "2", "--s", "1/4")
    assert code == 0 and out.startswith("Bounded")
    code, out, _ = run(capsys, "classify", "--expr", "t^3", "--p", "3/2", "--q", "3", "--s", "9/10")
    assert out.startswith("Unbounded") and "plane-P-sharpness" in out
    code, out, _ = run(capsys, "classify", "--expr", "t1^2 - 2 t1 t2 + t2^2", "--h", "1/7:1/5",
                       "--g", "1/7:1/5", "--p", "2", "--q", "2", "--s", "1/100")
    assert code == 0 and "interval" in out


def test_region_J(capsys):
    code, out, _ = run(capsys, "region", "--family", "J", "--h", "1/6", "--n", "2")
    assert code == 0
    verts = json.loads(out)["regions"][0]["vertices"]
    assert verts == [["0/1", "0/1"], ["5/14", "3/14"], ["11/14", "9/14"], ["1/1", "1/1"]]


def test_region_hypothesis_violation(capsys):
    code, _, err = run(capsys, "region", "--family", "Z", "--g", "1/2", "--order", "2", "--n", "2")
    assert code == 3 and err


def test_plot_is_deterministic(tmp_path, capsys):
    regions = tmp_path / "regions.json"
    code, out, _ = run(capsys, "region", "--family", "all", "--h", "1/6", "--g", "1/4", "--n", "2",
                       "--order", "0")
    assert code == 0
    regions.write_text(out)
    svgs = []
    for name in ("a.svg", "b.svg"):
        target = tmp_path / name
        assert run(capsys, "plot", str(regions), "--slice", "z=1/12", "-o", str(target))[0] == 0
        svgs.append(target.read_bytes())
    assert svgs[0] == svgs[1] and svgs[0].startswith(b"<?xml")
    assert run(capsys, "plot", str(regions), "--slice", "z=5")[0] == 2


def test_sublevel_csv_and_summary(capsys):
    code, out, err = run(capsys, "sublevel", "--expr", "t^2", "--radii", "1", "--k-min", "6",
                         "--k-max", "14", "--samples", "65536")
    assert code == 0
    assert out.splitlines()[0] == "k,epsilon,measure,stderr,samples,seed"
    summary = json.loads(err)
    assert abs(summary["estimate"] - 0.5) < 0.03


def test_decay_csv_and_summary(capsys):
    code, out, err = run(capsys, "decay", "--expr", "t^2", "--j-max", "11")
    assert code == 0
    assert out.splitlines()[0] == "j,xi_norm,magnitude,used"
    assert abs(json.loads(err)["exponent"] - 0.5) < 0.02
