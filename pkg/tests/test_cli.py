import csv
import io
import json

from conres.cli import OutputDocument, main


def _run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# --------------------------------------------------------------------------
# exit codes
# --------------------------------------------------------------------------


def test_usage_errors_exit_one(capsys):
    assert _run(capsys, "table", "--n", "99")[0] == 1
    assert _run(capsys, "table", "--n", "1")[0] == 1
    assert _run(capsys, "link", "--n", "2")[0] == 1
    assert _run(capsys, "gamma", "--parts", "2,3", "--n", "5")[0] == 1
    assert _run(capsys, "gamma", "--parts", "4,2", "--n", "5")[0] == 1
    assert _run(capsys, "stab", "--p", "-1")[0] == 1
    assert _run(capsys, "stab", "--p", "-1", "--q", "3", "--parts", "2")[0] == 1
    assert _run(capsys, "nonsense")[0] == 1
    assert _run(capsys, "table")[0] == 1


def test_successful_commands_exit_zero(capsys):
    for argv in (
        ("table", "--n", "4"),
        ("link", "--n", "4"),
        ("gamma", "--parts", "2,2", "--n", "4", "--character", "sign"),
        ("verify", "--n", "3"),
        ("order", "--seq", "0,1,4,9,16"),
        ("stab", "--p", "-1", "--q", "3"),
        ("stab", "--parts", "2", "--degree", "2"),
    ):
        code, out, _ = _run(capsys, *argv)
        assert code == 0, argv
        assert out


def test_verify_failure_exits_two(monkeypatch, capsys):
    from conres.resolution import CheckResult, VerificationReport

    fake = VerificationReport(4, (CheckResult("miller", "n=4", False, "forced"),))
    monkeypatch.setattr("conres.cli.verify", lambda *args, **kwargs: fake)
    code, out, err = _run(capsys, "verify", "--n", "4")
    assert code == 2
    assert "FAIL" in out
    assert "consistency" in err


# --------------------------------------------------------------------------
# document round trips and cross-format equality
# --------------------------------------------------------------------------


def test_json_round_trip(capsys):
    code, out, _ = _run(capsys, "table", "--n", "4", "--format", "json")
    assert code == 0
    doc = OutputDocument.from_json(out)
    assert doc.to_json() == out
    assert doc.payload["n"] == 4
    cell_keys = {tuple(sorted(c)) for c in doc.payload["cells"]}
    assert cell_keys == {("blocks", "p", "q", "rank")}


def test_polynomials_serialize_ascending(capsys):
    _, out, _ = _run(capsys, "link", "--n", "5", "--format", "json")
    pairs = OutputDocument.from_json(out).payload["polynomial"]
    exponents = [e for e, _ in pairs]
    assert exponents == sorted(exponents)
    assert pairs[0] == [4, 1]


def test_csv_and_json_encode_the_same_cells(capsys):
    _, json_out, _ = _run(capsys, "table", "--n", "5", "--format", "json")
    _, csv_out, _ = _run(capsys, "table", "--n", "5", "--format", "csv")
    cells = {}
    for cell in OutputDocument.from_json(json_out).payload["cells"]:
        cells[(cell["p"], cell["q"])] = dict(cell["blocks"])
    rebuilt: dict[tuple[int, int], dict[str, int]] = {}
    rows = list(csv.DictReader(io.StringIO(csv_out)))
    for row in rows:
        key = (int(row["p"]), int(row["q"]))
        rebuilt.setdefault(key, {})[row["block"]] = int(row["rank"])
    assert rebuilt == cells


def test_output_is_deterministic(capsys):
    first = _run(capsys, "table", "--n", "5", "--format", "json")
    second = _run(capsys, "table", "--n", "5", "--format", "json")
    assert first == second
    first = _run(capsys, "verify", "--n", "4", "--format", "md")
    second = _run(capsys, "verify", "--n", "4", "--format", "md")
    assert first == second


# --------------------------------------------------------------------------
# payload contents
# --------------------------------------------------------------------------


def test_table_n2_single_cell(capsys):
    _, out, _ = _run(capsys, "table", "--n", "2", "--format", "json", "--total-degree")
    cells = OutputDocument.from_json(out).payload["cells"]
    assert cells == [{"p": 1, "q": 1, "rank": 1, "blocks": {"2": 1}}]


def test_table_cohomological_view(capsys):
    _, out, _ = _run(capsys, "table", "--n", "3", "--format", "json", "--view", "cohom")
    cells = OutputDocument.from_json(out).payload["cells"]
    for cell in cells:
        assert cell["p"] <= 0
        assert cell["p"] + cell["q"] >= 0


def test_link_markdown(capsys):
    _, out, _ = _run(capsys, "link", "--n", "4")
    assert out.strip() == "t^3 + t^5 + 2*t^7 + t^9 + t^11"


def test_gamma_markdown(capsys):
    _, out, _ = _run(capsys, "gamma", "--parts", "2,2", "--n", "4", "--character", "sign")
    assert out.strip() == "q + q^2 + q^3"


def test_order_value(capsys):
    _, out, _ = _run(capsys, "order", "--seq", "0,1,4,9,16", "--format", "json")
    assert OutputDocument.from_json(out).payload["order"] == 2


def test_stab_cell_payload(capsys):
    _, out, _ = _run(capsys, "stab", "--p", "-1", "--q", "3", "--format", "json")
    payload = OutputDocument.from_json(out).payload
    assert payload["bound_n"] == 2
    assert payload["ranks"] == [1, 1, 1]
    assert payload["stable_rank"] == 1


def test_markdown_table_shows_block_split(capsys):
    _, out, _ = _run(capsys, "table", "--n", "4")
    assert "p=2 blocks: (3), (2,2)" in out
    # the q = 5 row of the middle column holds ranks 2 (from (3)) and 1 (from (2,2))
    assert any("2+1" in line for line in out.splitlines())
