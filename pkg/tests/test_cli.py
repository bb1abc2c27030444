import pytest

from eulerseries.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_plain(capsys):
    code, out, _ = run(capsys, "compute", "gamma", "--terms", "1000")
    assert code == 0
    fields = dict(line.split(": ", 1) for line in out.strip().splitlines())
    assert fields["constant"] == "gamma"
    assert fields["method"] == "addison"
    assert fields["value"].startswith("0.57721")
    assert float(fields["deviation"]) <= float(fields["estimated_tail"])


def test_compute_csv_checkpoints(capsys):
    code, out, _ = run(capsys, "compute", "gamma", "--terms", "1000", "--csv", "--checkpoints", "10,100,1000")
    lines = out.strip().splitlines()
    assert code == 0
    assert lines[0] == "terms,partial,est_tail,ref_error"
    assert [l.split(",")[0] for l in lines[1:]] == ["10", "100", "1000"]


def test_compute_aliases_and_extras(capsys):
    code, out, _ = run(capsys, "compute", "somos", "--t", "2", "--terms", "2000", "--method", "vacca")
    assert code == 0 and "value: 0.50" in out
    code, _, _ = run(capsys, "compute", "log_b", "--b", "5", "--terms", "500", "--base", "3")
    assert code == 0
    code, _, _ = run(capsys, "compute", "glaisher", "--folded", "--terms", "500")
    assert code == 0


def test_bench_rows(capsys):
    code, out, _ = run(capsys, "bench", "gamma", "--methods", "vacca,addison", "--checkpoints", "100,1000")
    lines = out.strip().splitlines()
    assert code == 0
    assert lines[0] == "method,terms,abs_error,est_tail,seconds"
    assert len(lines) == 5


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "kernels")
    assert code == 0 and out.startswith("kernels: PASS")
    code, out, _ = run(capsys, "verify")
    assert code == 0 and out.count("PASS") == 4


@pytest.mark.parametrize("argv", [
    ["compute", "gamma", "--terms", "0"],
    ["compute", "nonexistent"],
    ["compute", "somos"],
    ["compute", "gamma", "--prec", "3"],
    ["compute", "gamma", "--base", "1"],
    ["verify", "--suite", "nope"],
    ["compute", "glaisher", "--method", "vacca"],
])
def test_usage_errors_exit_2(capsys, argv):
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    assert code == 2


def test_out_file_matches_stdout(capsys, tmp_path):
    target = tmp_path / "out.txt"
    code, out, _ = run(capsys, "compute", "gamma", "--terms", "300", "--out", str(target))
    assert code == 0
    assert target.read_text() == out


def test_precision_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("EULERSERIES_PRECISION", "30")
    _, out, _ = run(capsys, "compute", "gamma", "--terms", "300")
    value = dict(l.split(": ", 1) for l in out.strip().splitlines())["value"]
    assert len(value.split(".")[1]) == 30
    _, out, _ = run(capsys, "compute", "gamma", "--terms", "300", "--prec", "12")
    value = dict(l.split(": ", 1) for l in out.strip().splitlines())["value"]
    assert len(value.split(".")[1]) == 12


def test_output_is_deterministic(capsys):
    _, a, _ = run(capsys, "compute", "log4_over_pi", "--terms", "5000", "--csv")
    _, b, _ = run(capsys, "compute", "log4_over_pi", "--terms", "5000", "--csv", "--workers", "2")
    assert a == b


def test_list(capsys):
    code, out, _ = run(capsys, "list")
    assert code == 0 and "gamma" in out and "somos_t" in out
