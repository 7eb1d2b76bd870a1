"""Expression language and command-line behavior."""

import json
from fractions import Fraction
from random import Random

import pytest

from derivcalc.exactnum import MultiPoly, RatFunc
from derivcalc.deriv import Derivation, DiffOp
from derivcalc.cli import (
    ExprSyntaxError,
    main,
    parse_derivation,
    parse_diffop,
    parse_expr,
    parse_word,
)
from derivcalc.sampling import random_derivation, random_diffop, random_ratfunc


# ---------------------------------------------------------------------------
# parse_expr
# ---------------------------------------------------------------------------


def test_parse_polynomial_with_rational():
    got = parse_expr("t1^2 + 1/2", 1)
    t = MultiPoly.variable(1, 0)
    assert got == RatFunc.from_poly(t * t + MultiPoly.const(1, Fraction(1, 2)))


def test_parse_quotient_two_variables():
    got = parse_expr("(t1+t2)/(t1-t2)", 2)
    t1, t2 = MultiPoly.variable(2, 0), MultiPoly.variable(2, 1)
    assert got == RatFunc(t1 + t2, t1 - t2)


def test_parse_unknown_variable():
    with pytest.raises(ExprSyntaxError) as err:
        parse_expr("t3", 2)
    assert "unknown variable" in str(err.value)
    assert err.value.pos == 0


def test_parse_syntax_error_carries_offset():
    with pytest.raises(ExprSyntaxError) as err:
        parse_expr("t1 + ", 1)
    assert err.value.pos == 5


def test_parse_division_by_zero_expression():
    with pytest.raises(ExprSyntaxError):
        parse_expr("1/(t1-t1)", 1)


def test_rational_literal_binds_tighter_than_power():
    # the grammar reads "3/2" as one rational atom, so 3/2^2 = (3/2)^2
    assert parse_expr("3/2^2", 1) == RatFunc.const(1, Fraction(9, 4))
    # with a non-literal denominator, '/' is ordinary division
    t = RatFunc.variable(1, 0)
    assert parse_expr("3/t1^2", 1) == 3 / t**2


def test_parse_unary_minus_and_precedence():
    t = RatFunc.variable(1, 0)
    assert parse_expr("-t1^2", 1) == -(t**2)
    assert parse_expr("2*t1 + 3*t1^2 - 1", 1) == 2 * t + 3 * t**2 - 1


def test_parse_rejects_trailing_input():
    with pytest.raises(ExprSyntaxError):
        parse_expr("t1 t1", 1)


# ---------------------------------------------------------------------------
# operator, derivation, word literals
# ---------------------------------------------------------------------------


def test_parse_operator_literal():
    t = RatFunc.variable(1, 0)
    got = parse_diffop("d[1] + t1 * d[2]", 1)
    assert got == DiffOp.partial(1, 0) + DiffOp(1, {(2,): t})


def test_parse_operator_identity_term_and_zero():
    c = RatFunc.variable(1, 0) + 1
    assert parse_diffop("(t1 + 1)", 1) == DiffOp.identity(1, c)
    assert parse_diffop("0", 1).is_zero
    assert parse_diffop("d[0]", 1) == DiffOp.identity(1, 1)


def test_parse_operator_wrong_index_count():
    with pytest.raises(ExprSyntaxError):
        parse_diffop("d[1]", 2)


def test_parse_operator_coefficient_after_d_rejected():
    with pytest.raises(ExprSyntaxError):
        parse_diffop("d[1] * t1", 1)


def test_parse_derivation_literal():
    got = parse_derivation("t1 -> 1; t2 -> t1", 2)
    assert got == Derivation([RatFunc.one(2), RatFunc.variable(2, 0)])
    # missing images default to zero
    got = parse_derivation("t2 -> t2", 2)
    assert got.images[0].is_zero


def test_parse_word_composition():
    w = parse_word("(t1->1,t2->0) o (t1->t1,t2->1)", 2)
    assert len(w.words) == 1
    coef, word = w.words[0]
    assert coef == 1 and len(word) == 2
    assert word[0] == Derivation([RatFunc.one(2), RatFunc.zero(2)])


# ---------------------------------------------------------------------------
# print-then-parse round trips
# ---------------------------------------------------------------------------


def test_ratfunc_print_parse_round_trip():
    rng = Random(103)
    for _ in range(40):
        k = rng.choice((1, 2))
        f = random_ratfunc(rng, k)
        assert parse_expr(str(f), k) == f


def test_diffop_print_parse_round_trip():
    rng = Random(107)
    for _ in range(25):
        k = rng.choice((1, 2))
        E = random_diffop(rng, k, rng.randint(0, 3), in_o0=False, exact_degree=False)
        assert parse_diffop(str(E), k) == E


def test_derivation_print_parse_round_trip():
    rng = Random(109)
    for _ in range(25):
        k = rng.choice((1, 2))
        d = random_derivation(rng, k)
        assert parse_derivation(str(d), k) == d


# ---------------------------------------------------------------------------
# CLI dispatch
# ---------------------------------------------------------------------------


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cli_order(capsys):
    code, out, _ = run_cli(capsys, "order", "--k", "1", "--op", "d[2]")
    assert code == 0
    assert out.strip() == "order: 2"


def test_cli_order_zero_map(capsys):
    code, out, _ = run_cli(capsys, "order", "--k", "1", "--op", "0")
    assert code == 0
    assert out.strip() == "order: 0 (zero map)"


def test_cli_order_identity_component_fails(capsys):
    code, out, _ = run_cli(capsys, "order", "--k", "1", "--op", "3")
    assert code == 1


def test_cli_apply(capsys):
    code, out, _ = run_cli(
        capsys, "apply", "--k", "1", "--op", "d[1] + t1 * d[2]", "--expr", "t1^3"
    )
    assert code == 0
    assert out.strip() == "result: 9*t1^2"


def test_cli_normalize(capsys):
    code, out, _ = run_cli(
        capsys, "normalize", "--k", "1", "--word", "(t1->1) o (t1->t1)"
    )
    assert code == 0
    assert "operator: d[1] + (t1) * d[2]" in out


def test_cli_compose(capsys):
    code, out, _ = run_cli(
        capsys, "compose", "--k", "1", "--op1", "t1 * d[1]", "--op2", "d[1]"
    )
    assert code == 0
    assert "operator: (t1) * d[2]" in out
    assert "degree: 2" in out


def test_cli_defect(capsys):
    code, out, _ = run_cli(
        capsys, "defect", "--k", "1", "--op", "d[2]", "--x", "t1", "--y", "t1"
    )
    assert code == 0
    assert out.strip() == "defect: 2"


def test_cli_apply_derivation_literal(capsys):
    code, out, _ = run_cli(
        capsys,
        "apply", "--k", "2", "--deriv", "t1 -> t2; t2 -> 1", "--expr", "t1*t2",
    )
    assert code == 0
    assert out.strip() == "result: t2^2 + t1"


def test_cli_apply_word(capsys):
    code, out, _ = run_cli(
        capsys,
        "apply", "--k", "1", "--word", "(t1->1) o (t1->t1)", "--expr", "t1^2",
    )
    # (d o t d)(t^2) = d(2t^2) = 4t, and the normal form gives the same
    assert code == 0
    assert out.strip() == "result: 4*t1"


def test_cli_gpdeg_with_default_seeded_samples(capsys):
    code, out, _ = run_cli(capsys, "gpdeg", "--k", "1", "--op", "d[1]", "--n", "1")
    assert code == 0
    assert "pass: true" in out


def test_cli_demo_theorem2_with_explicit_word(capsys):
    code, out, _ = run_cli(
        capsys,
        "demo", "theorem2", "--k", "2",
        "--derivations", "(t1->1,t2->0) o (t1->t1,t2->1)",
    )
    assert code == 0
    assert "degree: 2" in out
    assert "vanish: true" in out


def test_cli_grid_from_file(capsys, tmp_path):
    path = tmp_path / "grid.json"
    path.write_text(
        json.dumps({"k": 1, "n": 2, "values": {"0": "0", "1": "0", "2": "2"}})
    )
    code, out, _ = run_cli(capsys, "reconstruct", "--grid", f"@{path}")
    assert code == 0
    assert "operator: d[2]" in out


def test_cli_bad_json_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "fit", "--k", "1", "--n", "1", "--table", "{oops")
    assert code == 2


def test_cli_incomplete_grid_is_usage_error(capsys):
    grid = json.dumps({"k": 1, "n": 2, "values": {"0": "0"}})
    code, _, err = run_cli(capsys, "reconstruct", "--grid", grid)
    assert code == 2


def test_cli_fit_infeasible_exit_code(capsys):
    code, out, _ = run_cli(
        capsys,
        "fit", "--k", "1", "--n", "0", "--require-o0", "--table", '{"t1":"1"}',
    )
    assert code == 1
    assert "infeasible" in out


def test_cli_fit_feasible(capsys):
    code, out, _ = run_cli(
        capsys,
        "fit", "--k", "1", "--n", "1", "--require-o0",
        "--table", '{"t1":"1","t1+1":"1"}',
    )
    assert code == 0
    assert "operator: d[1]" in out


def test_cli_reconstruct(capsys):
    grid = json.dumps({"k": 1, "n": 2, "values": {"0": "0", "1": "0", "2": "2"}})
    code, out, _ = run_cli(capsys, "reconstruct", "--grid", grid)
    assert code == 0
    assert "operator: d[2]" in out


def test_cli_reconstruct_overflow(capsys):
    # values of d1 o d2 on the {0,1}^2 grid under bound n=1
    grid = json.dumps(
        {"k": 2, "n": 1, "values": {"0,0": "0", "1,0": "0", "0,1": "0", "1,1": "t1*t2"}}
    )
    code, out, _ = run_cli(capsys, "reconstruct", "--grid", grid)
    assert code == 1
    assert "degree overflow" in out


def test_cli_gpdeg_pass_and_fail(capsys):
    code, out, _ = run_cli(
        capsys,
        "gpdeg", "--k", "1", "--op", "d[1]", "--n", "1",
        "--increment", "t1+1", "--point", "t1",
    )
    assert code == 0
    code, out, _ = run_cli(
        capsys,
        "gpdeg", "--k", "1", "--op", "d[1]", "--n", "0",
        "--increment", "t1+1", "--point", "t1",
    )
    assert code == 1
    assert "witness" in out


def test_cli_recurrence(capsys):
    code, out, _ = run_cli(
        capsys,
        "recurrence", "--coeffs", '["-1","-1","1"]',
        "--seq", '["1","1","2","3","5","8"]',
    )
    assert code == 0
    code, out, _ = run_cli(
        capsys,
        "recurrence", "--coeffs", '["-1","-1","1"]',
        "--seq", '["1","1","2","3","6"]',
    )
    assert code == 1
    assert "index: 4" in out


def test_cli_demo_char2(capsys):
    code, out, _ = run_cli(capsys, "demo", "char2")
    assert code == 0
    assert "D(x) = 0" in out
    assert "D(x^2) = 1" in out
    assert "first order: true" in out


def test_cli_demo_theorem2_deterministic_given_seed(capsys):
    code1, out1, _ = run_cli(capsys, "--seed", "5", "demo", "theorem2", "--k", "2", "--n", "2")
    code2, out2, _ = run_cli(capsys, "--seed", "5", "demo", "theorem2", "--k", "2", "--n", "2")
    assert code1 == code2 == 0
    assert out1 == out2


def test_cli_env_seed_overrides_flag(capsys, monkeypatch):
    monkeypatch.setenv("DERIVCALC_SEED", "5")
    _, out1, _ = run_cli(capsys, "--seed", "11", "demo", "theorem2", "--k", "2", "--n", "2")
    monkeypatch.delenv("DERIVCALC_SEED")
    _, out2, _ = run_cli(capsys, "--seed", "5", "demo", "theorem2", "--k", "2", "--n", "2")
    assert out1 == out2


def test_cli_parse_error_exit_code(capsys):
    code, _, err = run_cli(capsys, "apply", "--k", "1", "--op", "d[2", "--expr", "t1")
    assert code == 2
    assert "parse error" in err


def test_cli_usage_error_exit_code(capsys):
    assert main(["order", "--k", "1", "--bogus"]) == 2


def test_cli_json_and_human_agree(capsys):
    code, out, _ = run_cli(capsys, "--json", "order", "--k", "1", "--op", "d[2]")
    assert code == 0
    payload = json.loads(out)
    code, out, _ = run_cli(capsys, "order", "--k", "1", "--op", "d[2]")
    assert f"order: {payload['order']}" == out.strip()

    code, out, _ = run_cli(capsys, "--json", "expoly", "--k", "1", "--op", "d[2]")
    payload = json.loads(out)
    code, human, _ = run_cli(capsys, "expoly", "--k", "1", "--op", "d[2]")
    assert f"exponent polynomial: {payload['exponent_polynomial']}" in human
    assert f"degree: {payload['degree']}" in human

    code, out, _ = run_cli(
        capsys, "--json",
        "fit", "--k", "1", "--n", "0", "--require-o0", "--table", '{"t1":"1"}',
    )
    assert code == 1
    payload = json.loads(out)
    assert payload["infeasible"] is True and payload["row"] == 0
