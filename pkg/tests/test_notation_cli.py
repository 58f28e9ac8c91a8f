from __future__ import annotations

import json
import subprocess
import sys

import pytest

from feecsphere.chart import phi_pullback
from feecsphere.cli import run_command
from feecsphere.forms import Form
from feecsphere.notation import (
    CoordinateError,
    ParseError,
    format_form,
    form_from_json,
    form_to_json,
    parse_expression,
    parse_form,
)


def test_parse_examples():
    a = parse_form("y*dy", 2)
    assert a == Form.monomial((0, 1, 0), (1,))
    b = parse_form("x*dy - y*dx", 2)
    assert phi_pullback(b) == parse_form("2*u^2*v*dv - 2*u*v^2*du", 2)


def test_parse_records_coordinates():
    assert parse_expression("x*dy", 2).coords == "x"
    assert parse_expression("u^2", 2).coords == "u"
    assert parse_expression("3/4", 2).coords is None


def test_power_and_wedge():
    assert parse_form("x^2*dx^dy", 2) == parse_form("x*x*dx*dy", 2)
    assert parse_form("dy^dx", 2) == -parse_form("dx^dy", 2)
    assert parse_form("(x + y)^2", 2) == parse_form("x^2 + 2*x*y + y^2", 2)


def test_indexed_names():
    assert parse_form("x1*dx3", 3).degree == 1
    with pytest.raises(CoordinateError):
        parse_form("x*dy", 3)
    with pytest.raises(CoordinateError):
        parse_form("x5", 2)


def test_parse_errors_have_positions():
    with pytest.raises(ParseError) as exc:
        parse_form("x*", 2)
    assert exc.value.position == 2
    with pytest.raises(ParseError):
        parse_form("dx^2", 2)
    with pytest.raises(ParseError):
        parse_form("x + dx", 2)
    with pytest.raises(ParseError):
        parse_form("x $ y", 2)
    with pytest.raises(CoordinateError):
        parse_form("u*dx", 2)


def test_format_examples():
    assert format_form(Form.zero(3, 2)) == "0"
    assert format_form(parse_form("x*y*dz", 2)) == "x*y*dz"
    assert format_form(Form.differential(2, 0, 1).scale(-1), "u") == "-du1^du2"
    assert format_form(parse_form("1/2*x^2*dy", 2)) == "1/2*x^2*dy"


def test_json_round_trip():
    f = parse_form("-2/3*x*y^2*dz + 5*dx", 2)
    data = form_to_json(f)
    assert form_from_json(data, 3, 1) == f
    assert json.dumps(data, sort_keys=True) == json.dumps(form_to_json(parse_form("5*dx - 2/3*x*y^2*dz", 2)), sort_keys=True)


def test_cli_dual_examples():
    code, out, _ = run_command(["dual", "--n", "2", "--form", "y*dy", "--flavor", "P"])
    assert code == 0 and out.strip() == "x*y^2*dz - y^2*z*dx"
    code, out, _ = run_command(["dual", "--n", "2", "--form", "x*dy - y*dx", "--flavor", "Pminus"])
    assert code == 0 and out.strip() == "x*y*dz"


def test_cli_inverse_round_trip():
    code, out, _ = run_command(["dual", "--n", "2", "--form", "x*y^2*dz - y^2*z*dx", "--inverse", "--flavor", "P"])
    assert code == 0 and out.strip() == "y*dy"


def test_cli_usage_errors():
    assert run_command(["dual", "--n", "2", "--form", "u*dx"])[0] == 2
    assert run_command(["dual", "--n", "2", "--form", "x*"])[0] == 2
    assert run_command(["basis", "--n", "2", "--r", "1", "--k", "7"])[0] == 2
    assert run_command(["gram", "--n", "0", "--r", "1", "--k", "0"])[0] == 2
    assert run_command(["nonsense"])[0] == 2
    assert run_command([])[0] == 2
    assert run_command(["dual", "--n", "2", "--form", "x*dz", "--inverse"])[0] == 2


def test_cli_basis_and_gram():
    code, out, _ = run_command(["basis", "--n", "2", "--r", "1", "--k", "0"])
    assert code == 0 and "dimension 3" in out
    code, out, _ = run_command(["gram", "--n", "2", "--r", "1", "--k", "1", "--flavor", "Pminus"])
    assert code == 0 and "positive definite: yes" in out


def test_cli_json_is_stable():
    argv = ["--json", "dual", "--n", "2", "--form", "y*dy"]
    first = run_command(argv)[1]
    second = run_command(argv)[1]
    assert first == second
    doc = json.loads(first)
    assert doc["schema_version"] == "1"
    assert form_from_json(doc["result"], 3, 1) == parse_form("x*y^2*dz - y^2*z*dx", 2)


def test_cli_json_verify_is_stable():
    argv = ["verify", "--n", "1", "--suite", "pmker", "--json"]
    assert run_command(argv)[1] == run_command(argv)[1]


def test_cli_dims():
    code, out, _ = run_command(["dims", "--n", "1", "--rmax", "2"])
    assert code == 0 and "DISCREPANCY" not in out


def test_cli_verify_all_n2():
    code, out, _ = run_command(["verify", "--suite", "all", "--n", "2", "--rmax", "3"])
    assert code == 0, out


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "feecsphere", "dual", "--n", "2", "--form", "y*dy"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "x*y^2*dz - y^2*z*dx"
