import csv
import json
import pathlib

import pytest

from multireg.cli import main
from multireg.regions import Region
from multireg.verify import INTRO_EN_PAIRS

PROBLEMS = pathlib.Path(__file__).resolve().parent.parent / "problems"


def run_json(capsys, argv):
    code = main(argv + ["--json"])
    out = capsys.readouterr().out
    report = json.loads(out)
    assert report["exit_code"] == code
    return code, report


def test_bound_human(capsys):
    code = main(["bound", str(PROBLEMS / "intro_curve.json")])
    out = capsys.readouterr().out
    assert code == 0
    assert "regularity bound    [4, 4]" in out
    assert "magnitude at most 4" in out


def test_bound_json(capsys):
    code, report = run_json(capsys, ["bound", str(PROBLEMS / "intro_curve.json")])
    assert code == 0
    assert report["bound"] == [4, 4]
    assert report["sections"] == 4
    assert report["source_ranks"] == [5, 5]
    assert not report["excluded_p1xp1"]
    code, report = run_json(capsys, ["bound", str(PROBLEMS / "standard_curve.json")])
    assert (code, report["bound"]) == (0, [7, 9])


def test_bound_excluded_case(capsys):
    code, report = run_json(capsys, ["bound", str(PROBLEMS / "square_curve.json")])
    assert code == 3
    assert report["bound"] == [2, 3]
    assert report["excluded_p1xp1"]
    code, report = run_json(
        capsys, ["bound", str(PROBLEMS / "square_curve.json"), "--advisory"]
    )
    assert code == 0
    assert report["excluded_p1xp1"]


def test_bound_advisory_file_option(capsys, tmp_path):
    path = tmp_path / "curve.json"
    path.write_text(
        json.dumps(
            {
                "ambient": [1, 1],
                "curve": {"d": [3, 2]},
                "options": {"advisory": True},
            }
        )
    )
    code, report = run_json(capsys, ["bound", str(path)])
    assert code == 0
    assert report["advisory"]


def test_en_shape(capsys):
    code, report = run_json(capsys, ["en-shape", str(PROBLEMS / "intro_curve.json")])
    assert code == 0
    term2 = {tuple(m): rank for m, rank in report["terms"][2]}
    assert term2 == INTRO_EN_PAIRS[2]
    assert len(report["terms"]) == 7
    code, classical = run_json(
        capsys,
        ["en-shape", str(PROBLEMS / "intro_curve.json"), "--classical-en"],
    )
    term1 = {tuple(m): rank for m, rank in classical["terms"][1]}
    assert term1[(5, 0)] == 4


def test_ltg(capsys):
    code, report = run_json(
        capsys, ["ltg", str(PROBLEMS / "two_points_complex_a.json")]
    )
    assert code == 0
    assert report["ok"]
    assert report["offender"] is None


def test_ltg_failure(capsys, tmp_path):
    path = tmp_path / "fast.json"
    path.write_text(
        json.dumps(
            {
                "ambient": [1, 1],
                "complex": {"terms": [[[[0, 0], 1]], [[[2, 0], 1]]]},
            }
        )
    )
    code, report = run_json(capsys, ["ltg", str(path)])
    assert code == 4
    assert not report["ok"]
    assert report["offender"] == [1, [2, 0]]
    code = main(["lineartoreg", str(path)])
    capsys.readouterr()
    assert code == 4


def test_lineartoreg(capsys):
    code, report = run_json(
        capsys, ["lineartoreg", str(PROBLEMS / "two_points_complex_a.json")]
    )
    assert code == 0
    assert report["region"] == {"corners": [[2, 1]]}
    assert "exact away from" in report["note"]
    code, report = run_json(
        capsys, ["lineartoreg", str(PROBLEMS / "two_points_complex_b.json")]
    )
    assert report["region"] == {"corners": [[1, 2]]}


def test_msgen(capsys):
    code, report = run_json(
        capsys, ["msgen", str(PROBLEMS / "two_points_complex_a.json")]
    )
    assert code == 0
    assert report["region"] == {"corners": [[2, 1]]}
    assert len(report["term_regions"]) == 2


def test_msgen_region_overrides(capsys, tmp_path):
    path = tmp_path / "override.json"
    path.write_text(
        json.dumps(
            {
                "ambient": [1, 1],
                "complex": {"terms": [[[[2, 0], 1], [[1, 1], 2]], [[[2, 1], 2]]]},
                "options": {"regions": [{"everything": True}, None]},
            }
        )
    )
    code, report = run_json(capsys, ["msgen", str(path)])
    assert code == 0
    assert report["term_regions"][0] == {"everything": True}
    assert report["region"] == {"corners": [[1, 1], [2, 0]]}


def test_reg_sum(capsys):
    code, report = run_json(capsys, ["reg-sum", str(PROBLEMS / "sum_example.json")])
    assert code == 0
    assert report["region"] == {"corners": [[1, 3]]}


def test_scan_hypersurface(capsys):
    code, report = run_json(capsys, ["scan", str(PROBLEMS / "hypersurface.json")])
    assert code == 0
    assert report["region"] == {"corners": [[3, 2]]}
    assert report["member_count"] == 12
    assert report["characteristic"] == 32003
    assert Region.from_json(2, report["region"]).corners == ((3, 2),)


def test_scan_two_points(capsys):
    code, report = run_json(capsys, ["scan", str(PROBLEMS / "two_points.json")])
    assert code == 0
    assert report["region"] == {"corners": [[1, 1]]}


def test_scan_ascii_panel(capsys):
    code = main(["scan", str(PROBLEMS / "two_points.json")])
    out = capsys.readouterr().out
    assert code == 0
    assert "1 | . C # # #" in out


def test_scan_window_flag_overrides_file(capsys):
    code, report = run_json(
        capsys,
        ["scan", str(PROBLEMS / "two_points.json"), "--window", "1..4,1..4"],
    )
    assert code == 5
    assert report["uncertified_corners"] == [[1, 1]]
    assert any("boundary" in w for w in report["warnings"])


def test_scan_prime_flag(capsys):
    code, report = run_json(
        capsys,
        ["scan", str(PROBLEMS / "hypersurface.json"), "--prime", "31991"],
    )
    assert code == 0
    assert report["characteristic"] == 31991
    assert report["region"] == {"corners": [[3, 2]]}


def test_scan_missing_window(capsys, tmp_path):
    path = tmp_path / "nowindow.json"
    path.write_text(
        json.dumps({"ambient": [1, 1], "presentation": {"targets": [[1, 1]]}})
    )
    code = main(["scan", str(path)])
    err = capsys.readouterr().err
    assert code == 2
    assert "window" in err


def test_scan_bad_flags(capsys):
    code = main(["scan", str(PROBLEMS / "two_points.json"), "--window", "0..4"])
    assert code == 2
    capsys.readouterr()
    code = main(["scan", str(PROBLEMS / "two_points.json"), "--prime", "32004"])
    assert code == 2
    capsys.readouterr()


def test_scan_svg(capsys, tmp_path):
    svg = tmp_path / "out" / "scan.svg"
    svg.parent.mkdir()
    code, report = run_json(
        capsys,
        ["scan", str(PROBLEMS / "standard_curve_presentation.json"), "--svg", str(svg)],
    )
    assert code == 0
    assert report["svg"] == str(svg)
    assert svg.exists()
    text = svg.read_text()
    for cx, cy in ((2, 5), (3, 3), (4, 2)):
        assert f'id="corner_{cx}_{cy}"' in text
    with open(report["corners_csv"], newline="") as fh:
        rows = list(csv.reader(fh))
    assert rows == [["m1", "m2"], ["2", "5"], ["3", "3"], ["4", "2"]]


def test_scan_svg_needs_two_factors(capsys, tmp_path):
    prob = tmp_path / "three.json"
    prob.write_text(
        json.dumps(
            {
                "ambient": [1, 1, 1],
                "presentation": {"targets": [[1, 1, 1]]},
                "options": {"window": [[0, 2], [0, 2], [0, 2]]},
            }
        )
    )
    code = main(["scan", str(prob), "--svg", str(tmp_path / "three.svg")])
    err = capsys.readouterr().err
    assert code == 2
    assert "two factors" in err


def test_verify_single_group(capsys):
    code, report = run_json(capsys, ["verify", "--only", "regions"])
    assert code == 0
    assert report["ok"]
    assert all(check["ok"] for check in report["checks"])


def test_verify_full_run_has_one_expected_failure(capsys):
    code, report = run_json(capsys, ["verify"])
    assert code == 1
    failing = [
        (check["group"], check["name"])
        for check in report["checks"]
        if not check["ok"]
    ]
    assert failing == [("scan", "two points scan (figure)")]
    assert len(report["checks"]) == 28


def test_verify_other_prime(capsys):
    code, report = run_json(capsys, ["verify", "--only", "scan", "--prime", "31991"])
    assert code == 1
    byname = {check["name"]: check["ok"] for check in report["checks"]}
    assert not byname["two points scan (figure)"]
    assert byname["standard curve scan"]
    assert byname["hypersurface scan"]


def test_verify_unknown_group(capsys):
    code = main(["verify", "--only", "bogus"])
    err = capsys.readouterr().err
    assert code == 2
    assert "unknown check group" in err


def test_validation_errors(capsys, tmp_path):
    code = main(["bound", str(tmp_path / "missing.json")])
    assert code == 2
    capsys.readouterr()
    bad = tmp_path / "bad.json"
    bad.write_text("{broken")
    code = main(["scan", str(bad)])
    assert code == 2
    capsys.readouterr()
    code = main(["ltg", str(PROBLEMS / "intro_curve.json")])
    err = capsys.readouterr().err
    assert code == 2
    assert "complex" in err
