import math

import pytest

from mertens_matrices.errors import DomainError
from mertens_matrices.harness.sweep import CSV_HEADER, SweepConfig, read_csv, run_sweep, sweep


def test_n16_row(tmp_path):
    (rec,) = sweep(SweepConfig(16, 16, 1, out=tmp_path / "s.csv"))
    assert rec.n == 16 and rec.s == 7 and rec.mertens_n == -1
    assert rec.converged and not rec.problems()
    assert rec.ratio_M_sqrt == pytest.approx(rec.norm_M / 4)
    assert rec.ratio_mertens_sqrt == -0.25
    assert rec.ratio_M_Mtilde == pytest.approx(rec.norm_M / rec.norm_Mtilde)


def test_row_count_and_order():
    records = run_sweep(SweepConfig(100, 1000, 100), workers=1)
    assert [r.n for r in records] == list(range(100, 1001, 100))
    assert all(r.converged for r in records)


def test_csv_round_trip(tmp_path):
    out = tmp_path / "s.csv"
    records = sweep(SweepConfig(100, 300, 100, out=out), workers=1)
    lines = out.read_text().splitlines()
    assert lines[0] == ",".join(CSV_HEADER)
    assert lines[0].startswith("n,s,mertens_n,norm_M,norm_Mtilde,norm_T,")
    rows = read_csv(out)
    assert [int(r["n"]) for r in rows] == [100, 200, 300]
    assert all(r["converged"] == "true" for r in rows)
    for rec, row in zip(records, rows):
        assert math.isclose(float(row["norm_M"]), rec.norm_M, rel_tol=1e-11)


def test_deterministic_across_workers():
    cfg = SweepConfig(500, 2500, 500)
    assert run_sweep(cfg, workers=1) == run_sweep(cfg, workers=1) == run_sweep(cfg, workers=2)


def test_bad_config():
    with pytest.raises(DomainError):
        SweepConfig(10, 5, 1)
    with pytest.raises(DomainError):
        SweepConfig(0, 5, 1)
    with pytest.raises(DomainError):
        SweepConfig(1, 5, 0)


def test_ordering_warning(caplog):
    # at n = 1000, ||T|| slightly exceeds ||M||; the warning only applies from 5000 on
    (rec,) = sweep(SweepConfig(1000, 1000, 1))
    assert not rec.ordering_holds()
    assert "ordering" not in caplog.text
