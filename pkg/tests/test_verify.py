import json
from fractions import Fraction

import pytest

from slopelab import cli
from slopelab.errors import HypothesisViolation, NotAKnot
from slopelab.knots import parse_knot_spec
from slopelab.verify import (
    SCHEMA,
    iter_strict_pretzels,
    predicted_min_degree,
    scan,
    verify,
)

WORKED_SPEC = "m:-46/327,35/151,5/31,16/35,1/5"


def test_verify_big_pretzel_report():
    r = verify("p:-7,5,7,3,5")
    assert r.passed and r.reasons == ()
    assert (r.family, r.forced, r.selected) == ("pretzel", False, "SStar")
    assert r.verdict == "Incompressible"
    assert (r.crossings, r.writhe) == (27, -13)
    assert r.slope == r.degree.js == Fraction(72, 7)
    assert r.euler == r.degree.jx == Fraction(-122, 7)
    assert r.tw_surface == Fraction(114, 7)
    assert r.tw_reference == 6
    assert [(c.color, c.measured_min_degree, c.predicted_min_degree) for c in r.oracle] == [
        (2, -14, -14),
        (3, -44, -44),
    ]
    assert all(c.match for c in r.oracle)
    assert r.fitted_constants == ((2, Fraction(54, 7)), (3, Fraction(26, 7)))
    assert r.constant_consistent is False


def test_verify_worked_montesinos_report():
    r = verify(WORKED_SPEC)
    assert r.passed
    assert r.family == "montesinos"
    assert (r.crossings, r.writhe) == (61, -43)
    assert r.slope == Fraction(100, 7)
    assert r.euler == Fraction(-374, 7)
    assert r.verdict == "Incompressible"
    # Large diagrams keep the direct evaluation to the first color.
    assert [c.color for c in r.oracle] == [2]
    assert r.oracle[0].measured_min_degree == 10
    assert r.oracle[0].match
    assert r.constant_consistent is None
    assert r.degree.corrections is not None


def test_verify_strict_refusal_and_force():
    with pytest.raises(HypothesisViolation):
        verify("p:-2,3,7")
    r = verify("p:-2,3,7", force=True)
    assert r.forced
    assert not r.passed
    assert not r.degree.strict_ok
    assert (r.degree.js, r.degree.jx) == (0, -2)
    assert r.slope == 0 and r.euler == -2
    assert r.verdict == "Inconclusive"
    assert [(c.color, c.measured_min_degree, c.predicted_min_degree) for c in r.oracle] == [
        (2, -54, -58),
        (3, -144, -156),
    ]
    assert len(r.reasons) == 2
    assert all("differs from predicted" in reason for reason in r.reasons)


def test_verify_refuses_links():
    with pytest.raises(NotAKnot):
        verify("p:-2,3,4")


def test_predicted_min_degree_anchors():
    anchors = [
        ("p:-3,3,3", 2, -2),
        ("p:-3,3,3", 3, -12),
        ("p:-5,3,3", 2, -10),
        ("p:-5,3,3", 3, -36),
        ("p:-3,3,3,3,3", 3, -4),
        ("p:-7,5,7,3,5", 2, -14),
        (WORKED_SPEC, 2, 10),
        ("m:-1/3,2/7,1/4", 2, -2),
        ("m:-1/3,2/7,1/4", 3, -16),
    ]
    for spec, color, expected in anchors:
        assert predicted_min_degree(parse_knot_spec(spec), color) == expected


def test_oracle_color_policy():
    assert [c.color for c in verify("p:-3,3,3", oracle_colors=3).oracle] == [2, 3]
    assert [c.color for c in verify("p:-3,3,3", oracle_colors=[3]).oracle] == [3]
    assert [c.color for c in verify("p:-3,3,3", oracle_colors=[1, 2]).oracle] == [2]


def test_report_json_round_trip():
    r = verify("p:-7,5,7,3,5")
    text = r.to_json()
    assert text == verify("p:-7,5,7,3,5").to_json()
    data = json.loads(text)
    assert data["schema"] == SCHEMA
    assert data["pass"] is True
    assert data["knot"] == "p:-7,5,7,3,5"
    assert data["degree"]["js"] == "72/7"
    assert data["degree"]["corrections"] is None
    assert data["surface"]["M"] == 14
    assert data["surface"]["K"] == [12, 3, 2, 6, 3]
    assert data["surface"]["tw"] == "114/7"
    assert data["surface"]["boundary_slope"] == "72/7"
    first_path = data["surface"]["edgepaths"][0]
    assert first_path["vertices"][0] == "-1/7"
    assert first_path["final_fraction"] == [12, 14]
    assert data["oracle"]["fitted_constants"] == {"2": "54/7", "3": "26/7"}
    assert data["oracle"]["checks"]["2"]["predicted_min_degree"] == -14


def test_report_json_montesinos_corrections():
    data = json.loads(verify(WORKED_SPEC).to_json())
    corr = data["degree"]["corrections"]
    assert corr["writhe_knot"] == -43
    assert corr["writhe_pretzel"] == -13
    assert corr["q0_prime"] == -9
    assert data["surface"]["reference_slope"] == "4"


def test_scan_box_all_pass():
    reports = scan("pretzel", q0_min=-5, qi_max=5)
    assert [r.knot for r in reports] == [
        "p:-5,3,3",
        "p:-5,3,5",
        "p:-5,5,5",
        "p:-3,3,3",
        "p:-3,3,5",
        "p:-3,5,5",
    ]
    assert all(r.passed for r in reports)


def test_scan_exceptional_kinds():
    assert scan("exceptional", q0_min=-9, qi_max=9, tangle_counts=(2, 3)) == [
        (-3, 4, 7),
        (-3, 5, 5),
        (-2, 3, 5, 5),
        (-2, 3, 7),
    ]
    assert scan("exceptional") == [(-3, 4, 7), (-3, 5, 5), (-2, 3, 7)]
    with pytest.raises(ValueError):
        scan("boundary")


def test_iter_strict_pretzels_validation():
    with pytest.raises(ValueError):
        list(iter_strict_pretzels(-3, 5, tangle_counts=(3,)))
    vectors = list(iter_strict_pretzels(-5, 5))
    assert vectors == [
        (-5, 3, 3),
        (-5, 3, 5),
        (-5, 5, 5),
        (-3, 3, 3),
        (-3, 3, 5),
        (-3, 5, 5),
    ]


def test_cli_verify_pass(capsys):
    assert cli.main(["verify", "p:-3,3,3"]) == 0
    out = capsys.readouterr().out
    assert "PASS" in out
    assert "js = 2" in out
    assert "oracle color 2" in out


def test_cli_verify_fail(capsys):
    assert cli.main(["verify", "p:-2,3,7", "--force"]) == 1
    out = capsys.readouterr().out
    assert "FAIL" in out
    assert "MISMATCH" in out
    assert "[outside strict hypotheses]" in out


def test_cli_error_exits(capsys):
    assert cli.main(["verify", "p:-2,3,7"]) == 2
    assert cli.main(["verify", "x:1,2"]) == 2
    assert cli.main(["verify", "p:-2,3,4"]) == 2
    assert cli.main(["jones", "p:1,1,1", "--n", "9"]) == 2
    err = capsys.readouterr().err
    assert err.count("error:") == 4


def test_cli_verify_json_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    assert cli.main(["verify", "p:-3,3,3", "--json", str(target)]) == 0
    capsys.readouterr()
    data = json.loads(target.read_text())
    assert data["schema"] == SCHEMA
    assert data["pass"] is True


def test_cli_scan(tmp_path, capsys):
    target = tmp_path / "scan.json"
    rc = cli.main(
        ["scan", "--q0-min", "-3", "--qi-max", "5", "--json", str(target)]
    )
    assert rc == 0
    out = capsys.readouterr().out
    assert "3 knots checked, 0 failures" in out
    assert len(json.loads(target.read_text())) == 3


def test_cli_scan_exceptional(capsys):
    assert cli.main(["scan", "--exceptional"]) == 0
    out = capsys.readouterr().out
    assert "4 degenerate twist vectors" in out
    assert "exceptional: -2,3,7" in out


def test_cli_qip(capsys):
    assert cli.main(["qip", "--a", "1,2", "--b", "0,0", "--t", "3"]) == 0
    out = capsys.readouterr().out
    assert "minimizer (2, 1)" in out
    assert "value 6" in out
    # Negative linear terms need the equals form so argparse keeps them
    # out of the flag namespace.
    assert cli.main(["qip", "--a", "2,4", "--b=-4,-8", "--t", "3"]) == 0
    out = capsys.readouterr().out
    assert "minimizer (2, 1)" in out
    assert "value -4" in out


def test_cli_qip_json_stdout(capsys):
    assert (
        cli.main(["qip", "--a", "1,2", "--b", "0,0", "--t", "3", "--json", "-"])
        == 0
    )
    out = capsys.readouterr().out
    # With --json - the payload owns stdout: the whole stream must parse.
    payload = json.loads(out)
    assert payload == {
        "certificate_checked": True,
        "minimizer": [2, 1],
        "period": 3,
        "value": 6,
    }


def test_cli_jones(capsys):
    assert cli.main(["jones", "p:1,1,1", "--n", "2"]) == 0
    out = capsys.readouterr().out
    assert "color 2: degrees [2, 18]" in out
    assert "v^18 - v^10 - v^6 - v^2" in out
    assert "18 1" in out
