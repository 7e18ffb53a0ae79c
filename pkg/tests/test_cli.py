import csv
import io
import json

import pytest

from ehrenfest.cli import run


def call(capsys, *argv):
    status = run(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def read_csv(text):
    lines = [line for line in text.splitlines() if not line.startswith("#")]
    return list(csv.DictReader(io.StringIO("\n".join(lines))))


def test_table_csv(capsys):
    status, out, _ = call(capsys, "table", "-r", "2", "-n", "1")
    assert status == 0
    assert "# ordering: compositions in lexicographically decreasing order" in out
    rows = read_csv(out)
    assert [row["k"] for row in rows] == ["1 0", "0 1"]
    assert float(rows[1]["0 1_re"]) == -1


def test_fk_csv(capsys):
    status, out, _ = call(capsys, "fk", "--shuffle", "cyclic-left", "-r", "4", "-n", "2")
    rows = {row["k"]: row for row in read_csv(out)}
    assert status == 0
    assert float(rows["0 2 0 0"]["f_im"]) == pytest.approx(-1)
    assert "# shuffle: cyclic-left" in out


def test_evolve_json(capsys):
    status, out, _ = call(capsys, "evolve", "-r", "3", "-n", "1", "--n-steps", "2", "--format", "json")
    data = json.loads(out)
    assert status == 0
    masses = {row["type"]: row["mass_per_state"] for row in data["rows"]}
    assert masses == pytest.approx({"1 0 0": 0.5, "0 1 0": 0.25, "0 0 1": 0.25})


def test_tvd_columns_and_parity_column(capsys):
    _, out, _ = call(capsys, "tvd", "-r", "3", "-n", "4", "--n-max", "5")
    rows = read_csv(out)
    assert list(rows[0]) == ["N", "tv_exact", "tv_bound", "tv_squared", "bound_squared"]
    assert len(rows) == 6
    _, out, _ = call(capsys, "tvd", "-r", "2", "-n", "4", "--n-max", "5")
    assert "tv_parity_limit" in read_csv(out)[0]


def test_cutoff(capsys):
    status, out, _ = call(capsys, "cutoff", "-r", "3", "-n", "20", "-c", "0")
    row = read_csv(out)[0]
    assert status == 0
    assert float(row["steps"]) == pytest.approx(146.48, abs=0.005)
    assert float(row["guarantee"]) == 0.25
    assert row["holds"] == "true"


def test_verify_pass(capsys):
    status, out, _ = call(capsys, "verify", "--shuffle", "cyclic-left", "-r", "3", "-n", "3", "--n-steps", "15")
    report = json.loads(out)
    assert status == 0
    assert report["status"] == "pass" and report["max_error"] <= 1e-10


def test_verify_failure_status(capsys):
    status, out, _ = call(capsys, "verify", "-r", "3", "-n", "3", "--n-steps", "3", "--tolerance", "-1")
    assert status == 1
    assert json.loads(out)["status"] == "fail"


def test_simulate(capsys):
    status, out, _ = call(capsys, "simulate", "-r", "3", "-n", "3", "--n-steps", "10", "--trials", "20000", "--seed", "5")
    report = json.loads(out)
    assert status == 0
    assert report["meta"]["rng"] == "numpy.random.PCG64"
    assert sum(report["counts_per_type"].values()) == 20000


def test_output_is_reproducible(capsys, tmp_path):
    for argv in (
        ["tvd", "-r", "3", "-n", "6", "--n-max", "40"],
        ["simulate", "-r", "3", "-n", "3", "--n-steps", "4", "--trials", "50000", "--seed", "9"],
        ["table", "-r", "3", "-n", "3", "--format", "json"],
    ):
        a, b = tmp_path / "a", tmp_path / "b"
        assert run(argv + ["--out", str(a)]) == 0
        assert run(argv + ["--out", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()


@pytest.mark.parametrize(
    "argv, status, message",
    [
        (["tvd", "-r", "3", "-n", "4", "--n-min", "5", "--n-max", "2"], 2, "invalid step range"),
        (["fk", "-r", "1", "-n", "4"], 2, "need r >= 2"),
        (["verify", "-r", "4", "-n", "8"], 3, "resource limit"),
    ],
)
def test_errors_have_distinct_status(capsys, argv, status, message):
    code, _, err = call(capsys, *argv)
    assert code == status
    assert message in err


def test_unknown_subcommand_and_shuffle(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["bogus"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        run(["fk", "-r", "3", "-n", "2", "--shuffle", "lazy"])
    assert exc.value.code == 2


def test_state_cap_env_override(capsys, monkeypatch):
    monkeypatch.setenv("EHRENFEST_MAX_STATES", "8")
    code, _, err = call(capsys, "verify", "-r", "3", "-n", "2", "--n-steps", "2")
    assert code == 3 and "cap of 8" in err
