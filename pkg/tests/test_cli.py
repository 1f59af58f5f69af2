import csv

import pytest

from mertens_matrices.harness.cli import main


def test_tables(capsys):
    assert main(["tables", "--n", "16"]) == 0
    assert capsys.readouterr().out.startswith("n = 16\ns = 7\n")


def test_tables_too_large(capsys):
    assert main(["tables", "--n", "100000"]) == 2
    assert "error" in capsys.readouterr().err


@pytest.mark.parametrize("kind", ["T", "U", "M", "Utilde", "Mtilde"])
def test_matrix_csv(kind, tmp_path):
    out = tmp_path / "m.csv"
    assert main(["matrix", "--n", "16", "--kind", kind, "--out", str(out)]) == 0
    rows = list(csv.reader(out.open()))
    assert len(rows) == 7 and all(len(r) == 7 for r in rows)


def test_matrix_values(capsys):
    assert main(["matrix", "--n", "2", "--kind", "M"]) == 0
    assert capsys.readouterr().out == "0,1\n1,0\n"
    assert main(["matrix", "--n", "16", "--kind", "Mtilde", "--format", "text"]) == 0
    assert "Mtilde (n=16)" in capsys.readouterr().out


def test_verify(capsys):
    assert main(["verify", "--n-max", "50"]) == 0
    assert "all checks passed" in capsys.readouterr().out


def test_verify_failure_exit(monkeypatch, capsys):
    from mertens_matrices.harness import verify

    monkeypatch.setitem(verify._CHECK_FUNCS, "cardinality", lambda qs, mt: "bad")
    assert main(["verify", "--n-max", "3"]) == 1


def test_sweep_and_plot(tmp_path, capsys):
    data = tmp_path / "s.csv"
    assert main(["sweep", "--from", "100", "--to", "400", "--step", "100", "--workers", "1", "--out", str(data)]) == 0
    assert len(data.read_text().splitlines()) == 5
    svg = tmp_path / "p.svg"
    assert main(["plot", "--in", str(data), "--columns", "norm_M,norm_T", "--normalize-at", "200", "--out", str(svg)]) == 0
    assert svg.read_text().startswith("<svg")
    assert main(["plot", "--in", str(data), "--columns", "bogus", "--out", str(svg)]) == 2
    assert main(["plot", "--in", str(tmp_path / "missing.csv"), "--columns", "n", "--out", str(svg)]) == 2


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["matrix", "--n", "4", "--kind", "Q"])
    assert exc.value.code == 2
    assert main(["sweep", "--from", "10", "--to", "5", "--out", "x.csv"]) == 2
    assert main(["matrix", "--n", "0", "--kind", "T"]) == 2
