from sostar.isogeny import (table_row, verify_sostar2, verify_sostar4,
                            verify_sostar6, verify_tables)
from sostar.report import VerificationReport, dumps


def test_sostar2_passes():
    report = verify_sostar2()
    assert report.passed
    assert any("rotation by theta" in d for d, _ in report.witnesses)


def test_sostar4_passes():
    report = verify_sostar4()
    assert report.passed
    descriptions = [d for d, _ in report.witnesses]
    assert any("U_1 U_5" in d for d in descriptions)
    assert any("R_1 R_5" in d for d in descriptions)
    assert any("commutant" in d for d in descriptions)


def test_sostar6_passes():
    report = verify_sostar6()
    assert report.passed
    descriptions = [d for d, _ in report.witnesses]
    assert any("15^3" in d for d in descriptions)
    assert any("i I_4" in d for d in descriptions)
    assert any("-I_6" in d for d in descriptions)


def test_tables_passes():
    report = verify_tables()
    assert report.passed
    # 4 so* + 9 sp* + 3 sl rows, three checks each, plus the compact counts
    assert len(report.witnesses) == 16 * 3 + 4


def test_table_row_formulas():
    row = table_row("so_star", 4)
    assert row["dim"] == 28 and row["rank"] == 4
    assert (row["n_minus"], row["n_plus"]) == (16, 12)
    assert row["index"] == -4
    row = table_row("sp_star", 2, 2, 0)
    assert (row["n_minus"], row["n_plus"]) == (10, 0)
    row = table_row("sl_H", 1)
    assert row["dim"] == 3 and (row["n_minus"], row["n_plus"]) == (3, 0)
    assert row["index"] == -3  # matches -(2n+1)


def test_reports_are_deterministic():
    a = dumps(verify_sostar4().to_json_dict(), indent=2)
    b = dumps(verify_sostar4().to_json_dict(), indent=2)
    assert a == b


def test_failed_checks_populate_witnesses():
    report = VerificationReport(claim_id="demo")
    report.check("ok part", True, None)
    report.check("broken part", False, {"residual": 1.5})
    assert not report.passed
    failed = [(d, v) for d, v in report.witnesses if d.startswith("FAILED")]
    assert failed == [("FAILED: broken part", {"residual": 1.5})]
    doc = report.to_json_dict()
    assert doc["passed"] is False
    assert doc["witnesses"][1]["value"] == {"residual": 1.5}
