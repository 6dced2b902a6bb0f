"""Command line interface: formats, determinism, exit codes, files."""

import csv
import io
import json

from qdiv import cli
from qdiv.errors import InvariantViolationError


def run(argv, capsys):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_qbinom_table_output(capsys):
    code, out, err = run(
        ["--n", "3", "--ell", "3", "--root", "odd", "qbinom", "5", "2"], capsys
    )
    assert code == 0
    assert err == ""
    lines = out.splitlines()
    assert lines[0] == "command: qbinom (qdiv-report/1)"
    assert lines[1] == "params: ell=3 root=odd"
    assert lines[2].split() == [
        "top", "bottom", "value", "by_product", "by_block_factors", "agree"
    ]
    assert lines[4].split() == ["5", "2", "1", "1", "1", "true"]


def test_table_notes_are_printed_as_key_value_lines(capsys):
    _, out, _ = run(["dims", "--n", "2", "--ell", "3", "--m", "1"], capsys)
    assert out.rstrip().splitlines()[-1] == "note: top_degree=4"


def test_options_work_before_or_after_the_subcommand(capsys):
    code1, out1, _ = run(["--ell", "3", "qbinom", "5", "2"], capsys)
    code2, out2, _ = run(["qbinom", "5", "2", "--ell", "3"], capsys)
    assert code1 == code2 == 0
    assert out1 == out2


def test_json_format_round_trips(capsys):
    argv = ["loewy", "--n", "3", "--ell", "3", "--m", "2", "--s", "7",
            "--format", "json"]
    code, out, _ = run(argv, capsys)
    assert code == 0
    report = json.loads(out)
    assert report["schema"] == "qdiv-report/1"
    assert report["command"] == "loewy"
    redumped = json.dumps(report, indent=2, sort_keys=True) + "\n"
    assert out == redumped
    col = report["columns"].index("layer_dim")
    assert [row[col] for row in report["rows"]] == [18, 9]


def test_csv_format_uses_crlf_and_parses(capsys):
    argv = ["dims", "--n", "2", "--ell", "3", "--m", "1", "--format", "csv"]
    code, out, _ = run(argv, capsys)
    assert code == 0
    assert "\r\n" in out
    parsed = list(csv.reader(io.StringIO(out)))
    header, *rows = [r for r in parsed if r]
    assert header[0] == "s"
    assert len(rows) == 5


def test_repeated_runs_are_byte_identical(capsys):
    argv = ["socle", "--n", "3", "--ell", "3", "--m", "2", "--s", "7"]
    outputs = {run(argv, capsys)[1] for _ in range(3)}
    assert len(outputs) == 1


def test_thread_count_does_not_change_output(capsys, monkeypatch):
    argv = ["cohomology", "--n", "2", "--ell", "3", "--m", "1"]
    _, base, _ = run(argv, capsys)
    monkeypatch.setenv("QDIV_THREADS", "4")
    _, threaded, _ = run(argv, capsys)
    assert threaded == base


def test_bad_thread_count_is_a_usage_error(capsys, monkeypatch):
    # only commands that fan out consult the thread setting
    monkeypatch.setenv("QDIV_THREADS", "zero")
    code, _, err = run(["dims", "--n", "2", "--m", "1"], capsys)
    assert code == 2
    assert err.startswith("error:")
    monkeypatch.setenv("QDIV_THREADS", "0")
    code, _, _ = run(["dims", "--n", "2", "--m", "1"], capsys)
    assert code == 2


def test_domain_errors_exit_2(capsys):
    code, _, err = run(["loewy", "--n", "3", "--m", "2", "--s", "99"], capsys)
    assert code == 2
    assert err.startswith("error:")
    code, _, _ = run(["dims", "--n", "0"], capsys)
    assert code == 2
    # the energy bound table needs at least two energy blocks
    code, _, _ = run(["edeg", "--m", "1"], capsys)
    assert code == 2


def test_invariant_violations_exit_3(capsys, monkeypatch):
    def broken(config, args):
        raise InvariantViolationError("synthetic failure")

    monkeypatch.setitem(cli._COMMANDS, "dims", broken)
    code, _, err = run(["dims"], capsys)
    assert code == 3
    assert err.startswith("invariant violation:")


def test_out_writes_the_report_to_a_file(tmp_path, capsys):
    target = tmp_path / "report.csv"
    argv = ["dims", "--n", "2", "--ell", "3", "--m", "1",
            "--format", "csv", "--out", str(target)]
    code, out, _ = run(argv, capsys)
    assert code == 0
    assert out == ""
    data = target.read_bytes()
    assert b"\r\n" in data


def test_figure_renders_a_png(tmp_path, capsys):
    target = tmp_path / "loewy.png"
    argv = ["loewy", "--n", "3", "--ell", "3", "--m", "2", "--s", "7",
            "--figure", str(target)]
    code, _, _ = run(argv, capsys)
    assert code == 0
    assert target.exists()
    assert target.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_every_command_emits_all_three_formats(capsys):
    samples = {
        "qbinom": ["qbinom", "5", "2"],
        "dims": ["dims", "--n", "2", "--m", "1"],
        "edeg": ["edeg", "--n", "3", "--m", "2"],
        "socle": ["socle", "--n", "3", "--m", "2", "--s", "7"],
        "loewy": ["loewy", "--n", "3", "--m", "2", "--s", "7"],
        "rigidity": ["rigidity", "--n", "3", "--m", "2", "--s", "7"],
        "identity": ["identity", "--n", "3", "--m", "2"],
        "cohomology": ["cohomology", "--n", "2", "--m", "1"],
        "exactness": ["exactness", "4", "--n", "2"],
    }
    for name, argv in samples.items():
        for fmt in ("table", "csv", "json"):
            code, out, err = run(argv + ["--format", fmt], capsys)
            assert code == 0, (name, fmt, err)
            assert out


def test_cohomology_action_mode(capsys):
    _, out, _ = run(["cohomology", "--n", "2", "--m", "1", "--action"], capsys)
    lines = out.splitlines()
    assert lines[2].split() == ["s", "representative", "k_eigenvalues"]
    body = [l for l in lines[4:] if l.strip() and not l.startswith("note:")]
    assert len(body) == 4
    assert "note: raising_lowering_trivial=true" in lines


def test_json_reports_share_the_schema_envelope(capsys):
    for argv in (["qbinom", "3", "1"], ["edeg", "--n", "3", "--m", "2"]):
        _, out, _ = run(argv + ["--format", "json"], capsys)
        report = json.loads(out)
        assert set(report) == {
            "schema", "command", "params", "columns", "rows", "notes"
        }
        for row in report["rows"]:
            assert len(row) == len(report["columns"])
