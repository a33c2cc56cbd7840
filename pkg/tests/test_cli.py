import json
import os
import subprocess
import sys

from chowseries.cli import main
from chowseries.serialize import dumps, series_to_dict
from chowseries import GradedSeries, divisor_chow_series


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_series_divisor_table(capsys):
    code, out, err = run_cli(
        capsys, "series", "--preset", "divisor-chow", "--n", "2", "--max-d", "2"
    )
    assert code == 0 and err == ""
    lines = out.strip().splitlines()
    assert lines[1] == "d=0: {0:1}"
    assert lines[2] == "d=1: {0:1,2:1,4:1}"
    assert lines[3] == "d=2: {0:1,2:1,4:1,6:1,8:1,10:1}"


def test_series_euler_values(capsys):
    code, out, _ = run_cli(
        capsys, "series", "--preset", "euler-chow", "--n", "1", "--max-d", "3"
    )
    assert code == 0
    assert [line.split(": ")[1] for line in out.strip().splitlines()[1:]] == [
        "{0:1}", "{0:2}", "{0:3}", "{0:4}"
    ]


def test_series_zero_cycles_matches_divisor(capsys):
    code, out_zero, _ = run_cli(
        capsys, "series", "--preset", "zero-cycles", "--betti", "1,1", "--max-d", "2"
    )
    assert code == 0
    _, out_div, _ = run_cli(
        capsys, "series", "--preset", "divisor-chow", "--n", "1", "--max-d", "2"
    )
    assert out_zero.splitlines()[1:] == out_div.splitlines()[1:]


def test_series_max_s_capping(capsys):
    code, out, _ = run_cli(
        capsys, "series", "--preset", "divisor-chow", "--n", "2", "--max-d", "3",
        "--max-s", "4",
    )
    assert code == 0
    assert "...(+" in out and "capped at 4" in out
    # JSON stays complete regardless of the display cap
    code, out_json, _ = run_cli(
        capsys, "series", "--preset", "divisor-chow", "--n", "2", "--max-d", "3",
        "--max-s", "4", "--format", "json",
    )
    data = json.loads(out_json)
    assert max(exp for entry in data["entries"] for exp, _ in entry["coeff"]) == 18


def test_certify_divisor_n2_json(capsys):
    code, out, err = run_cli(
        capsys, "certify", "--preset", "divisor-chow", "--n", "2", "--max-d", "8",
        "--format", "json",
    )
    assert code == 0 and err == ""
    verdict = json.loads(out)
    assert verdict["verdict"] == "certified-non-rational"
    assert verdict["support_points"][:5] == [0, 2, 6, 12, 20]
    assert verdict["gaps"][:4] == [1, 3, 5, 7]
    assert verdict["gaps_inclusive"][:4] == [2, 4, 6, 8]
    assert verdict["evidence"]["kind"] == "symbolic-unbounded"


def test_certify_divisor_n1_witness(capsys):
    code, out, _ = run_cli(
        capsys, "certify", "--preset", "divisor-chow", "--n", "1", "--max-d", "12",
        "--format", "json",
    )
    assert code == 0
    verdict = json.loads(out)
    assert verdict["verdict"] == "rational-witnessed"
    f = verdict["witness"]["f"]
    assert f["entries"] == [
        {"lambda": [0], "coeff": [[0, "1"]]},
        {"lambda": [1], "coeff": [[0, "-1"], [2, "-1"]]},
        {"lambda": [2], "coeff": [[2, "1"]]},
    ]
    assert verdict["witness"]["g"]["entries"] == [{"lambda": [0], "coeff": [[0, "1"]]}]
    assert verdict["witness"]["checked_truncation"] == [12]


def test_certify_text_has_no_output_on_stderr(capsys):
    code, out, err = run_cli(
        capsys, "certify", "--preset", "divisor-chow", "--n", "3", "--max-d", "6"
    )
    assert code == 0
    assert err == ""
    assert "certified-non-rational" in out


def test_certify_truncation_too_small(capsys):
    code, out, _ = run_cli(
        capsys, "certify", "--preset", "euler-chow", "--n", "1", "--max-d", "0",
        "--format", "json",
    )
    assert code == 3
    assert json.loads(out)["truncation_limited"] is True


def test_json_roundtrip_through_input(tmp_path, capsys):
    code, series_json, _ = run_cli(
        capsys, "series", "--preset", "divisor-chow", "--n", "2", "--max-d", "8",
        "--format", "json",
    )
    assert code == 0
    path = tmp_path / "series.json"
    path.write_text(series_json)

    _, table_preset, _ = run_cli(
        capsys, "series", "--preset", "divisor-chow", "--n", "2", "--max-d", "8"
    )
    _, table_input, _ = run_cli(capsys, "series", "--input", str(path))
    assert table_preset == table_input

    _, verdict_preset, _ = run_cli(
        capsys, "certify", "--preset", "divisor-chow", "--n", "2", "--max-d", "8",
        "--format", "json",
    )
    _, verdict_input, _ = run_cli(capsys, "certify", "--input", str(path), "--format", "json")
    assert verdict_preset == verdict_input

    _, series_json_again, _ = run_cli(capsys, "series", "--input", str(path), "--format", "json")
    assert series_json_again == series_json


def test_json_output_deterministic(capsys):
    outputs = set()
    for _ in range(2):
        _, out, _ = run_cli(
            capsys, "certify", "--preset", "divisor-chow", "--n", "2", "--max-d", "10",
            "--format", "json",
        )
        outputs.add(out)
    assert len(outputs) == 1


def test_unknown_preset_exits_2(capsys):
    code, out, err = run_cli(capsys, "series", "--preset", "mystery", "--max-d", "3")
    assert code == 2
    assert "verdict" not in out


def test_missing_source_exits_2(capsys):
    code, _, err = run_cli(capsys, "series", "--max-d", "3")
    assert code == 2
    assert "error" in err.lower()


def test_malformed_input_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run_cli(capsys, "certify", "--input", str(bad))
    assert code == 2 and "malformed" in err.lower()

    incomplete = tmp_path / "incomplete.json"
    incomplete.write_text(json.dumps({"rank": 1}))
    code, _, err = run_cli(capsys, "certify", "--input", str(incomplete))
    assert code == 2


def test_recurrence_euler(capsys):
    code, out, _ = run_cli(
        capsys, "recurrence", "--preset", "euler-chow", "--n", "2", "--max-d", "24"
    )
    assert code == 0
    assert "order 3 recurrence" in out
    assert "verified by convolution: True" in out


def test_recurrence_constant_slice(capsys):
    code, out, _ = run_cli(
        capsys, "recurrence", "--preset", "zero-cycles", "--betti", "1", "--max-d", "10",
        "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["recurrence"] == ["1"]
    assert payload["verified"] is True


def test_recurrence_none_found_for_sparse_squares(tmp_path, capsys):
    squares = GradedSeries(1, (36,), {(d * d,): 1 for d in range(7)})
    path = tmp_path / "squares.json"
    path.write_text(dumps(series_to_dict(squares)))
    code, out, _ = run_cli(
        capsys, "recurrence", "--input", str(path), "--max-order", "6",
        "--slice", "eval:-1",
    )
    assert code == 0
    assert "no recurrence of order <= 6 found" in out


def test_recurrence_empty_slice_exits_2(capsys):
    code, _, err = run_cli(
        capsys, "recurrence", "--preset", "euler-chow", "--n", "2", "--max-d", "10",
        "--slice", "row:5",
    )
    assert code == 2
    assert "empty" in err


def test_recurrence_row_slice(capsys):
    code, out, _ = run_cli(
        capsys, "recurrence", "--preset", "divisor-chow", "--n", "1", "--max-d", "12",
        "--slice", "row:4", "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    # row of s^4 is t^2 + t^3 + ...: the two leading zeros force order 3,
    # the denominator prunes to 1 - t and the numerator carries t^2
    assert payload["recurrence"] == ["1", "0", "0"]
    assert payload["verified"] is True
    assert payload["g"]["entries"] == [{"lambda": [2], "coeff": [[0, "1"]]}]


def test_selftest_smoke(capsys):
    code, out, _ = run_cli(capsys, "selftest", "--seed", "3")
    assert code == 0
    assert "15/15 checks passed" in out


def test_module_entrypoint_subprocess():
    env = dict(os.environ)
    src = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "src")
    env["PYTHONPATH"] = src + os.pathsep + env.get("PYTHONPATH", "")
    result = subprocess.run(
        [sys.executable, "-m", "chowseries", "series", "--preset", "divisor-chow",
         "--n", "1", "--max-d", "2", "--format", "json"],
        capture_output=True, text=True, env=env,
    )
    assert result.returncode == 0
    data = json.loads(result.stdout)
    assert data["rank"] == 1 and data["truncation"] == [2]
