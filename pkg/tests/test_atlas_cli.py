import json
import math

import numpy as np
import pytest

from entwit import SimplexParams, operator_to_dict, region_witnesses
from entwit.atlas import (
    LABEL_BOUND,
    LABEL_INVALID,
    LABEL_NPT_I,
    LABEL_NPT_II,
    LABEL_UNRESOLVED,
    classify_b,
    classify_point,
    lambda_scan,
    positivity_vertices,
    separability_note,
    slice_sweep,
)
from entwit.cli import main
from entwit.families import horodecki_to_simplex, simplex_state
from entwit.reproduce import run_battery


def test_classify_point_region_one():
    sample = classify_point(SimplexParams(0.5, 0.0, 0.0))
    assert sample.label == LABEL_NPT_I
    assert sample.valid
    assert sample.measure == pytest.approx(math.sqrt(2) / 6)
    assert sample.witness_values["region_I"] == pytest.approx(-math.sqrt(2) / 6)


def test_classify_point_region_two_and_invalid():
    assert classify_point(SimplexParams(0.0, 0.8, 0.0)).label == LABEL_NPT_II
    assert classify_point(SimplexParams(-0.5, 0.0, 0.0)).label == LABEL_INVALID


def test_classify_b_bound_entangled_window():
    sample = classify_b(3.5)
    assert sample.label == LABEL_BOUND
    assert sample.min_pt_eigenvalue > -1e-10
    assert sample.witness_values["line"] < 0


def test_classify_b_separable_window_note():
    sample = classify_b(2.5)
    assert sample.label == LABEL_UNRESOLVED
    note = separability_note(sample, b=2.5)
    assert note is not None and "separable" in note
    # no separability claim where nothing is known
    far = classify_b(1.2)
    assert separability_note(far, b=1.2) is None


def test_classify_point_line_lambda_override():
    params = horodecki_to_simplex(3.5)
    gamma = params.gamma
    default = classify_point(params)
    assert default.label == LABEL_BOUND
    # below the certification threshold the override witness does not count
    overridden = classify_point(params, line_lambda=0.5)
    assert "line" in overridden.witness_values
    assert overridden.label == LABEL_UNRESOLVED
    assert abs(gamma) > 1 / 7


def test_positivity_vertices_gamma0():
    vertices = positivity_vertices(0.0)
    assert vertices[0] == pytest.approx((-1 / 6, -1 / 3))
    assert vertices[1] == pytest.approx((0.0, 1.0))
    assert vertices[2] == pytest.approx((1.0, 0.0))
    for alpha, beta in vertices:
        state = simplex_state(SimplexParams(alpha, beta, 0.0))
        assert state.min_eigenvalue == pytest.approx(0, abs=1e-12)


def test_slice_gamma0_labels():
    report = slice_sweep(0.0, 25)
    assert len(report.rows) == 625
    for row in report.rows:
        if not row.valid:
            assert row.label == LABEL_INVALID
            continue
        npt = row.min_pt_eigenvalue < -1e-10
        w1 = row.witness_values["region_I"]
        w2 = row.witness_values["region_II"]
        if npt:
            # witness sign rule reproduces the region tag on this slice
            assert row.label == (LABEL_NPT_I if w1 < -1e-10 else LABEL_NPT_II)
            assert (w1 < -1e-10) or (w2 < -1e-10)
        else:
            assert row.label == LABEL_UNRESOLVED  # never bound-entangled here
            assert row.measure is None


def test_slice_gamma0_region_one_border():
    # the region-I witness changes sign across alpha = 1/4 + beta/8
    report = slice_sweep(0.0, 40)
    for row in report.rows:
        if not row.valid:
            continue
        margin = row.params.alpha - 0.25 - row.params.beta / 8
        w1 = row.witness_values["region_I"]
        if abs(margin) > 1e-9:
            assert (w1 < 0) == (margin > 0)


def test_slice_bound_entangled_gamma_minus_three_sevenths():
    sample = classify_point(SimplexParams(2 / 21, -8 / 21, -3 / 7))
    assert sample.label == LABEL_BOUND
    report = slice_sweep(-3 / 7, 21)
    labels = {row.label for row in report.rows}
    assert LABEL_BOUND in labels


def test_slice_rows_rederivable_from_columns():
    report = slice_sweep(-0.35, 15)
    for row in report.rows:
        values = row.witness_values
        if not row.valid:
            assert row.label == LABEL_INVALID
        elif row.min_pt_eigenvalue < -1e-10:
            expected = (LABEL_NPT_I if values["region_I"] <= values["region_II"]
                        else LABEL_NPT_II)
            assert row.label == expected
        else:
            detected = any(v < -1e-10 for v in values.values())
            assert row.label == (LABEL_BOUND if detected else LABEL_UNRESOLVED)


def test_slice_csv_deterministic():
    first = slice_sweep(-0.3, 12).to_csv()
    second = slice_sweep(-0.3, 12).to_csv()
    assert first == second
    header = first.splitlines()[0]
    assert header.startswith("alpha,beta,gamma,valid,min_pt_eig,label")


def test_lambda_scan_minimum_and_flip():
    report = lambda_scan(0.2, 3 / 7, 1000)
    assert report.min_lambda == pytest.approx(0.875, abs=1e-5)
    assert report.argmin_gamma == pytest.approx(math.sqrt(5) / 7, abs=1e-3)
    flips = [row.gamma for row in report.rows if row.detects]
    assert flips[0] == pytest.approx(1 / math.sqrt(21), abs=5e-4)
    csv_text = report.to_csv()
    assert csv_text.splitlines()[-1].startswith("# summary:")


def test_lambda_scan_spot_value():
    report = lambda_scan(0.25, 0.25, 2)
    profile = report.rows[0]
    assert profile.lambda_min == pytest.approx(
        max(8 / (7 * 1.1875), 2 * math.sqrt(1 + 147 / 16) / (7 * 1.1875)))
    assert profile.lambda_min == pytest.approx(0.9624, abs=1e-4)


def test_cli_classify_exit_codes_and_text(capsys):
    assert main(["classify", "--b", "3.5"]) == 0
    out = capsys.readouterr().out
    assert "PPT-detected-bound-entangled" in out
    assert main(["classify", "--alpha", "0.5", "--beta", "0"]) == 0
    out = capsys.readouterr().out
    assert "NPT-I" in out and "0.235702260395516" in out
    assert main(["classify", "--b", "2.5"]) == 0
    out = capsys.readouterr().out
    assert "PPT-unresolved" in out and "note:" in out


def test_cli_usage_errors(capsys):
    assert main(["classify"]) == 1                      # no state given
    assert main(["classify", "--b", "7"]) == 1          # out of range
    assert main(["classify", "--b", "1", "--alpha", "0.2"]) == 1
    assert main(["no-such-command"]) == 1
    capsys.readouterr()


def test_cli_classify_json_deterministic(capsys):
    assert main(["classify", "--b", "3.5", "--format", "json"]) == 0
    first = capsys.readouterr().out
    assert main(["classify", "--b", "3.5", "--format", "json"]) == 0
    second = capsys.readouterr().out
    assert first == second
    doc = json.loads(first)
    assert doc["sample"]["label"] == LABEL_BOUND


def test_cli_slice_csv(tmp_path, capsys):
    out_file = tmp_path / "slice.csv"
    assert main(["slice", "--gamma", "0", "--grid", "8",
                 "--out", str(out_file)]) == 0
    capsys.readouterr()
    lines = out_file.read_text().splitlines()
    assert len(lines) == 65
    assert lines[0].split(",")[:3] == ["alpha", "beta", "gamma"]


def test_cli_classify_csv_row(capsys):
    assert main(["classify", "--alpha", "0.5", "--beta", "0",
                 "--format", "csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith("alpha,beta,gamma,valid")
    cells = lines[1].split(",")
    assert cells[:3] == ["0.5", "0", "0"] and cells[5] == "NPT-I"


def test_cli_slice_json(capsys):
    assert main(["slice", "--gamma", "-0.35", "--grid", "5",
                 "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["grid"]["grid_n"] == 5
    assert len(doc["rows"]) == 25
    assert {"params", "valid", "label"} <= set(doc["rows"][0])


def test_cli_lambda_scan_stdout(capsys):
    assert main(["lambda-scan", "--gamma-range", "0.3", "0.32",
                 "--steps", "3"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "gamma,lambda_1,lambda_2,lambda_min,detects"
    assert len(out.splitlines()) == 5


def test_cli_witness_check_certified(tmp_path, capsys):
    witness_one, _ = region_witnesses()
    path = tmp_path / "witness.json"
    path.write_text(json.dumps(operator_to_dict(witness_one.op)))
    assert main(["witness-check", str(path)]) == 0
    out = capsys.readouterr().out
    assert "certified: yes" in out


def test_cli_witness_check_uncertified_probe(tmp_path, capsys):
    rng = np.random.default_rng(3)
    raw = rng.standard_normal((9, 9)) + 1j * rng.standard_normal((9, 9))
    herm = raw + raw.conj().T
    from entwit import BipartiteOperator

    path = tmp_path / "random.json"
    path.write_text(json.dumps(operator_to_dict(
        BipartiteOperator(3, 3, herm))))
    assert main(["witness-check", str(path), "--samples", "500"]) == 0
    out = capsys.readouterr().out
    assert "in certifiable form: no" in out
    assert "sampled separable minimum" in out
    assert "one-sided" in out


def test_cli_witness_check_bad_file(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    assert main(["witness-check", str(path)]) == 1
    capsys.readouterr()


def test_cli_nearest_ppt(capsys):
    assert main(["nearest-ppt", "--alpha", "0.5", "--beta", "0"]) == 0
    out = capsys.readouterr().out
    assert "converged: yes" in out
    assert "0.2357" in out
    # iteration cap exhausted -> numeric-failure exit code
    assert main(["nearest-ppt", "--alpha", "0.5", "--beta", "0",
                 "--steps", "1"]) == 2
    capsys.readouterr()


def test_cli_nearest_ppt_invalid_state(capsys):
    assert main(["nearest-ppt", "--alpha", "-0.5", "--beta", "0"]) == 1
    capsys.readouterr()


def test_cli_reproduce_small_battery(capsys):
    code = main(["reproduce", "--samples", "800", "--seed", "11"])
    out = capsys.readouterr().out
    assert code == 0
    assert "checks passed" in out
    assert "FAIL" not in out


def test_battery_results_structure():
    results = run_battery(samples=300, seed=5)
    names = [r.name for r in results]
    assert "total_minimum_closed_form" in names
    assert "nearest_ppt_gamma0" in names
    assert all(r.passed for r in results)
