"""Command-line front end and the expression language.

Grammar of field expressions (whitespace insignificant)::

    expr     := term (('+'|'-') term)*
    term     := factor (('*'|'/') factor)*
    factor   := atom ['^' nonneg-int]
    atom     := rational | 't' index | '(' expr ')' | '-' factor
    rational := int ['/' positive-int]

Operator literals are sums of terms ``coefficient * d[j1,...,jk]`` where the
coefficient is an expression (omitted coefficient means 1, a term without a
``d[...]`` is a multiple of the identity).  Derivation literals assign an
image to each generator, ``t1 -> expr; t2 -> expr`` (missing generators map
to 0); words compose derivation literals with ``o``, as in
``(t1 -> 1) o (t1 -> t1)``.

Exit codes: 0 success, 1 mathematical infeasibility or a failed check
(witness printed), 2 usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from random import Random

from .exactnum import GF2Poly, PoleError, RatFunc
from .deriv import Derivation, DiffOp, OpWord, compose, normalize
from .genpoly import exponent_polynomial, expoly_degree, gp_degree_check, over_identity
from .leibniz import MapTable, NotInO0Error, defect, nested_defect, order_exact
from .reconstruct import (
    DegreeOverflowError,
    GridValues,
    RecurrenceSpec,
    check_recurrence,
    fit_operator,
    reconstruct_operator,
)
from .fixtures import char2_compose_check, char2_order_check, product_ring_demo, theorem2_demo
from .sampling import DEFAULT_SEED, random_derivation, random_sparse_ratfunc


class ExprSyntaxError(ValueError):
    """Parse failure, carrying the byte offset of the offending token."""

    def __init__(self, message: str, pos: int):
        self.pos = pos
        super().__init__(f"{message} (at offset {pos})")


# ---------------------------------------------------------------------------
# Tokenizer
# ---------------------------------------------------------------------------

_SINGLE = {
    "+": "PLUS",
    "-": "MINUS",
    "*": "STAR",
    "/": "SLASH",
    "^": "CARET",
    "(": "LPAREN",
    ")": "RPAREN",
    "[": "LBRACK",
    "]": "RBRACK",
    ",": "COMMA",
    ";": "SEMI",
}


class _Token:
    __slots__ = ("kind", "pos", "value")

    def __init__(self, kind: str, pos: int, value=None):
        self.kind = kind
        self.pos = pos
        self.value = value

    def __repr__(self):
        return f"_Token({self.kind}, {self.pos}, {self.value})"


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch == "-" and i + 1 < n and text[i + 1] == ">":
            tokens.append(_Token("ARROW", i))
            i += 2
            continue
        if ch in _SINGLE:
            tokens.append(_Token(_SINGLE[ch], i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("INT", i, int(text[i:j])))
            i = j
            continue
        if ch == "t" and i + 1 < n and text[i + 1].isdigit():
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("VAR", i, int(text[i + 1 : j])))
            i = j
            continue
        if ch == "d":
            tokens.append(_Token("DOP", i))
            i += 1
            continue
        if ch == "o":
            tokens.append(_Token("COMPOSE", i))
            i += 1
            continue
        raise ExprSyntaxError(f"unexpected character {ch!r}", i)
    tokens.append(_Token("END", n))
    return tokens


class _Parser:
    def __init__(self, text: str, k: int):
        if k < 1:
            raise ValueError("k must be at least 1")
        self.text = text
        self.k = k
        self.tokens = _tokenize(text)
        self.i = 0

    # -- token plumbing ------------------------------------------------------

    def peek(self, ahead: int = 0) -> _Token:
        j = min(self.i + ahead, len(self.tokens) - 1)
        return self.tokens[j]

    def take(self, kind: str) -> _Token:
        tok = self.tokens[self.i]
        if tok.kind != kind:
            raise ExprSyntaxError(f"expected {kind}, found {tok.kind}", tok.pos)
        self.i += 1
        return tok

    def accept(self, kind: str) -> _Token | None:
        if self.tokens[self.i].kind == kind:
            tok = self.tokens[self.i]
            self.i += 1
            return tok
        return None

    def expect_end(self):
        tok = self.peek()
        if tok.kind != "END":
            raise ExprSyntaxError(f"trailing input ({tok.kind})", tok.pos)

    # -- expression grammar ----------------------------------------------------

    def expr(self) -> RatFunc:
        value = self.term()
        while True:
            if self.accept("PLUS"):
                value = value + self.term()
            elif self.accept("MINUS"):
                value = value - self.term()
            else:
                return value

    def term(self) -> RatFunc:
        value = self.factor()
        while True:
            if self.accept("STAR"):
                value = value * self.factor()
            elif self.peek().kind == "SLASH":
                pos = self.take("SLASH").pos
                divisor = self.factor()
                if divisor.is_zero:
                    raise ExprSyntaxError("division by the zero expression", pos)
                value = value / divisor
            else:
                return value

    def factor(self) -> RatFunc:
        value = self.atom()
        if self.accept("CARET"):
            tok = self.take("INT")
            value = value**tok.value
        return value

    def atom(self) -> RatFunc:
        tok = self.peek()
        if tok.kind == "INT":
            self.take("INT")
            # greedy rational literal: int '/' positive-int
            if self.peek().kind == "SLASH" and self.peek(1).kind == "INT":
                slash = self.take("SLASH")
                den = self.take("INT")
                if den.value == 0:
                    raise ExprSyntaxError("zero denominator in rational", den.pos)
                return RatFunc.const(self.k, Fraction(tok.value, den.value))
            return RatFunc.const(self.k, tok.value)
        if tok.kind == "VAR":
            self.take("VAR")
            if not 1 <= tok.value <= self.k:
                raise ExprSyntaxError(f"unknown variable t{tok.value}", tok.pos)
            return RatFunc.variable(self.k, tok.value - 1)
        if tok.kind == "LPAREN":
            self.take("LPAREN")
            value = self.expr()
            self.take("RPAREN")
            return value
        if tok.kind == "MINUS":
            self.take("MINUS")
            return -self.factor()
        raise ExprSyntaxError(f"expected an expression, found {tok.kind}", tok.pos)

    # -- operator literals -------------------------------------------------------

    def d_atom(self) -> tuple:
        self.take("DOP")
        self.take("LBRACK")
        indices = [self.take("INT").value]
        while self.accept("COMMA"):
            indices.append(self.take("INT").value)
        closing = self.take("RBRACK")
        if len(indices) != self.k:
            raise ExprSyntaxError(
                f"d[...] needs {self.k} indices, got {len(indices)}", closing.pos
            )
        return tuple(indices)

    def opterm(self) -> tuple[RatFunc, tuple | None]:
        sign = 1
        while self.accept("MINUS"):
            sign = -sign
        if self.peek().kind == "DOP":
            return RatFunc.const(self.k, sign), self.d_atom()
        coef = self.factor() * sign
        while True:
            if self.accept("STAR"):
                if self.peek().kind == "DOP":
                    alpha = self.d_atom()
                    nxt = self.peek()
                    if nxt.kind in ("STAR", "SLASH", "CARET"):
                        raise ExprSyntaxError(
                            "coefficient factors must precede d[...]", nxt.pos
                        )
                    return coef, alpha
                coef = coef * self.factor()
            elif self.peek().kind == "SLASH":
                pos = self.take("SLASH").pos
                divisor = self.factor()
                if divisor.is_zero:
                    raise ExprSyntaxError("division by the zero expression", pos)
                coef = coef / divisor
            else:
                return coef, None

    def diffop(self) -> DiffOp:
        coeffs: dict[tuple, RatFunc] = {}

        def add(alpha, c):
            if alpha in coeffs:
                c = coeffs[alpha] + c
            if c.is_zero:
                coeffs.pop(alpha, None)
            else:
                coeffs[alpha] = c

        coef, alpha = self.opterm()
        add(alpha if alpha is not None else (0,) * self.k, coef)
        while True:
            if self.accept("PLUS"):
                coef, alpha = self.opterm()
                add(alpha if alpha is not None else (0,) * self.k, coef)
            elif self.peek().kind == "MINUS":
                self.take("MINUS")
                coef, alpha = self.opterm()
                add(alpha if alpha is not None else (0,) * self.k, -coef)
            else:
                return DiffOp(self.k, coeffs)

    # -- derivations and words ------------------------------------------------------

    def derivation_body(self) -> Derivation:
        images = [RatFunc.zero(self.k) for _ in range(self.k)]
        assigned = set()
        while True:
            tok = self.take("VAR")
            if not 1 <= tok.value <= self.k:
                raise ExprSyntaxError(f"unknown variable t{tok.value}", tok.pos)
            if tok.value in assigned:
                raise ExprSyntaxError(f"duplicate image for t{tok.value}", tok.pos)
            assigned.add(tok.value)
            self.take("ARROW")
            images[tok.value - 1] = self.expr()
            if not (self.accept("SEMI") or self.accept("COMMA")):
                return Derivation(images)

    def derivation_literal(self) -> Derivation:
        if self.accept("LPAREN"):
            d = self.derivation_body()
            self.take("RPAREN")
            return d
        return self.derivation_body()

    def word(self) -> OpWord:
        factors = [self.derivation_literal()]
        while self.accept("COMPOSE"):
            factors.append(self.derivation_literal())
        return OpWord.composition(factors)


def parse_expr(text: str, k: int) -> RatFunc:
    """Parse a field expression over Q(t1..tk) into canonical form."""
    p = _Parser(text, k)
    value = p.expr()
    p.expect_end()
    return value


def parse_diffop(text: str, k: int) -> DiffOp:
    """Parse an operator literal (sum of ``coef * d[j1,...,jk]`` terms)."""
    p = _Parser(text, k)
    value = p.diffop()
    p.expect_end()
    return value


def parse_derivation(text: str, k: int) -> Derivation:
    """Parse a derivation literal ``t1 -> expr; ...``."""
    p = _Parser(text, k)
    value = p.derivation_literal()
    p.expect_end()
    return value


def parse_word(text: str, k: int) -> OpWord:
    """Parse a composition word of derivation literals joined by ``o``."""
    p = _Parser(text, k)
    value = p.word()
    p.expect_end()
    return value


# ---------------------------------------------------------------------------
# JSON payloads
# ---------------------------------------------------------------------------


def _load_json_arg(raw: str):
    if raw.startswith("@"):
        with open(raw[1:], "r", encoding="utf-8") as fh:
            raw = fh.read()
    try:
        return json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ExprSyntaxError(f"invalid JSON: {exc.msg}", exc.pos)


def parse_table_json(raw: str, k: int) -> MapTable:
    """MapTable JSON: an object mapping expression strings to expression
    strings."""
    data = _load_json_arg(raw)
    if not isinstance(data, dict):
        raise ExprSyntaxError("table JSON must be an object", 0)
    pairs = []
    for key, val in data.items():
        pairs.append((parse_expr(key, k), parse_expr(str(val), k)))
    return MapTable.from_pairs(pairs, k)


def parse_grid_json(raw: str) -> GridValues:
    """GridValues JSON: {"k": int, "n": int, "values": {"i1,...,ik": expr}}."""
    data = _load_json_arg(raw)
    if not isinstance(data, dict) or not {"k", "n", "values"} <= set(data):
        raise ExprSyntaxError('grid JSON needs "k", "n" and "values"', 0)
    k, n = int(data["k"]), int(data["n"])
    values = {}
    for key, val in data["values"].items():
        try:
            idx = tuple(int(part) for part in key.split(","))
        except ValueError:
            raise ExprSyntaxError(f"bad grid index {key!r}", 0)
        values[idx] = parse_expr(str(val), k)
    return GridValues(k, n, values)


def parse_exprs_json(raw: str, k: int) -> list[RatFunc]:
    data = _load_json_arg(raw)
    if not isinstance(data, list):
        raise ExprSyntaxError("expected a JSON array of expression strings", 0)
    return [parse_expr(str(item), k) for item in data]


# ---------------------------------------------------------------------------
# Command implementations
# ---------------------------------------------------------------------------


class MathFailure(Exception):
    """A well-posed computation with a negative mathematical outcome."""

    def __init__(self, payload: dict, lines: list[str]):
        self.payload = payload
        self.lines = lines
        super().__init__(lines[0] if lines else "failed")


def _operator_from_args(args) -> DiffOp:
    if getattr(args, "op", None) is not None:
        return parse_diffop(args.op, args.k)
    if getattr(args, "word", None) is not None:
        return normalize(parse_word(args.word, args.k))
    raise ExprSyntaxError("supply --op or --word", 0)


def _cmd_apply(args, seed):
    k = args.k
    f = parse_expr(args.expr, k)
    if args.deriv is not None:
        result = parse_derivation(args.deriv, k)(f)
    else:
        result = _operator_from_args(args)(f)
    return {"result": str(result)}, [f"result: {result}"]


def _cmd_normalize(args, seed):
    op = normalize(parse_word(args.word, args.k))
    return {"operator": str(op), "degree": op.degree}, [
        f"operator: {op}",
        f"degree: {op.degree}",
    ]


def _cmd_compose(args, seed):
    e1 = parse_diffop(args.op1, args.k)
    e2 = parse_diffop(args.op2, args.k)
    out = compose(e1, e2)
    return {"operator": str(out), "degree": out.degree}, [
        f"operator: {out}",
        f"degree: {out.degree}",
    ]


def _cmd_order(args, seed):
    op = _operator_from_args(args)
    n = order_exact(op)
    payload = {"order": n, "zero_map": op.is_zero}
    line = f"order: {n} (zero map)" if op.is_zero else f"order: {n}"
    return payload, [line]


def _cmd_defect(args, seed):
    k = args.k
    op = _operator_from_args(args)
    x = parse_expr(args.x, k)
    ys = [parse_expr(y, k) for y in args.y]
    value = nested_defect(op, x, ys) if len(ys) > 1 else defect(op, x, ys[0])
    return {"defect": str(value), "nesting": len(ys)}, [f"defect: {value}"]


def _cmd_gpdeg(args, seed):
    k = args.k
    op = _operator_from_args(args)
    f = over_identity(op)
    rng = Random(seed)
    if args.increment:
        increments = [parse_expr(text, k) for text in args.increment]
    else:
        increments = [random_sparse_ratfunc(rng, k, max_degree=2) for _ in range(args.n + 1)]
    if args.point:
        points = [parse_expr(text, k) for text in args.point]
    else:
        points = [random_sparse_ratfunc(rng, k, max_degree=2) for _ in range(2)]
    res = gp_degree_check(f, args.n, increments, points)
    payload = {"pass": res.ok, "reason": res.reason}
    lines = [f"pass: {str(res.ok).lower()}", f"reason: {res.reason}"]
    if not res.ok:
        gs, x = res.witness
        payload["witness"] = {
            "increments": [str(g) for g in gs],
            "point": str(x),
            "value": str(res.value),
        }
        lines.append(f"witness increments: {'; '.join(str(g) for g in gs)}")
        lines.append(f"witness point: {x}")
        lines.append(f"witness value: {res.value}")
        raise MathFailure(payload, lines)
    return payload, lines


def _cmd_expoly(args, seed):
    op = _operator_from_args(args)
    p = exponent_polynomial(op)
    return {"exponent_polynomial": str(p), "degree": expoly_degree(p)}, [
        f"exponent polynomial: {p}",
        f"degree: {expoly_degree(p)}",
    ]


def _cmd_reconstruct(args, seed):
    grid = parse_grid_json(args.grid)
    try:
        op = reconstruct_operator(grid)
    except DegreeOverflowError as exc:
        payload = {
            "degree_overflow": True,
            "offending": [",".join(map(str, j)) for j in exc.offending],
        }
        raise MathFailure(
            payload,
            ["degree overflow: data inconsistent with the bound",
             f"offending indices: {payload['offending']}"],
        )
    return {"operator": str(op), "degree": op.degree}, [
        f"operator: {op}",
        f"degree: {op.degree}",
    ]


def _cmd_fit(args, seed):
    table = parse_table_json(args.table, args.k)
    res = fit_operator(table, args.n, require_o0=args.require_o0)
    if not res.ok:
        payload = {"infeasible": True, "row": res.inconsistent_row}
        raise MathFailure(
            payload,
            ["infeasible", f"inconsistent row: {res.inconsistent_row}"],
        )
    payload = {
        "operator": str(res.operator),
        "solution_dim": res.solution_dim,
    }
    return payload, [
        f"operator: {res.operator}",
        f"solution dimension: {res.solution_dim}",
    ]


def _cmd_recurrence(args, seed):
    k = args.k
    coeffs = parse_exprs_json(args.coeffs, k)
    seq = parse_exprs_json(args.seq, k)
    res = check_recurrence(RecurrenceSpec(tuple(coeffs), tuple(seq)))
    payload = {"pass": res.ok, "first_failure": res.first_failure}
    lines = [f"pass: {str(res.ok).lower()}"]
    if not res.ok:
        lines.append(f"first failure at index: {res.first_failure}")
        raise MathFailure(payload, lines)
    return payload, lines


def _cmd_demo(args, seed):
    if args.which == "char2":
        rep = char2_order_check()
        comp = char2_compose_check(GF2Poly.one())
        wx, wy, wb = rep.derivation_witness
        payload = {
            "d_of_x": str(rep.d_of_x),
            "d_of_x2": str(rep.d_of_x2),
            "additive": rep.additive_ok,
            "defects2_vanish": rep.defects2_vanish,
            "derivation_witness": {"x": str(wx), "y": str(wy), "defect": str(wb)},
            "compose_collapse": comp.ok,
        }
        lines = [
            f"D(x) = {rep.d_of_x}",
            f"D(x^2) = {rep.d_of_x2}",
            f"additive: {str(rep.additive_ok).lower()}",
            f"2-fold defects vanish (degree <= {rep.max_degree}): "
            f"{str(rep.defects2_vanish).lower()}",
            f"not a derivation, witness: B({wx}, {wy}) = {wb}",
            "composition of two derivations stays first order: "
            f"{str(comp.ok).lower()}",
        ]
        if not (rep.ok and comp.ok):
            raise MathFailure(payload, lines)
        return payload, lines
    if args.which == "product-ring":
        rep = product_ring_demo()
        payload = {
            "leibniz": rep.leibniz_ok,
            "composite_zero": rep.composite_zero_ok,
            "d1_witness": str(rep.d1_nonzero_witness),
            "d2_witness": str(rep.d2_nonzero_witness),
        }
        lines = [
            f"component derivations satisfy the product rule: "
            f"{str(rep.leibniz_ok).lower()}",
            f"d1 o d2 = 0 on monomial pairs up to exponent {rep.max_exponent}: "
            f"{str(rep.composite_zero_ok).lower()}",
            f"d1 is nonzero: d1(x, 0) = {rep.d1_nonzero_witness}",
            f"d2 is nonzero: d2(0, x) = {rep.d2_nonzero_witness}",
        ]
        if not rep.ok:
            raise MathFailure(payload, lines)
        return payload, lines
    # theorem2
    if args.derivations is not None:
        word = parse_word(args.derivations, args.k)
        derivations = list(word.words[0][1])
    else:
        rng = Random(seed)
        derivations = [random_derivation(rng, args.k) for _ in range(args.n)]
    rep = theorem2_demo(derivations, seed=seed)
    payload = {
        "n": rep.n,
        "degree": rep.degree,
        "expoly_degree": rep.expoly_degree,
        "vanish_ok": rep.vanish_ok,
        "witness_found": rep.witness is not None,
        "witness_tuples_tried": rep.witness_tuples_tried,
        "operator": str(rep.operator),
    }
    lines = [
        f"n: {rep.n}",
        f"operator: {rep.operator}",
        f"degree: {rep.degree}",
        f"exponent polynomial degree: {rep.expoly_degree}",
        f"{rep.n}-fold nested defects vanish: {str(rep.vanish_ok).lower()}",
        f"({rep.n - 1})-fold nonvanishing witness found: "
        f"{str(rep.witness is not None).lower()} "
        f"({rep.witness_tuples_tried} tuples tried)",
    ]
    if not rep.ok:
        raise MathFailure(payload, lines)
    return payload, lines


# ---------------------------------------------------------------------------
# Argument parsing and dispatch
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="derivcalc",
        description="Exact calculus of derivations and differential operators "
        "over Q(t1..tk).",
    )
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument(
        "--seed",
        type=int,
        default=DEFAULT_SEED,
        help="seed for sampled checks (DERIVCALC_SEED overrides)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_k(p):
        p.add_argument("--k", type=int, required=True, help="number of variables")
        return p

    def with_op(p):
        p.add_argument("--op", help="operator literal")
        p.add_argument("--word", help="composition word of derivation literals")
        return p

    p = with_op(with_k(sub.add_parser("apply", help="apply an operator or derivation")))
    p.add_argument("--deriv", help="derivation literal")
    p.add_argument("--expr", required=True)
    p.set_defaults(fn=_cmd_apply)

    p = with_k(sub.add_parser("normalize", help="canonical form of a word"))
    p.add_argument("--word", required=True)
    p.set_defaults(fn=_cmd_normalize)

    p = with_k(sub.add_parser("compose", help="compose two operators"))
    p.add_argument("--op1", required=True)
    p.add_argument("--op2", required=True)
    p.set_defaults(fn=_cmd_compose)

    p = with_op(with_k(sub.add_parser("order", help="exact order of an operator")))
    p.set_defaults(fn=_cmd_order)

    p = with_op(with_k(sub.add_parser("defect", help="(nested) product-rule defect")))
    p.add_argument("--x", required=True)
    p.add_argument("--y", action="append", required=True, help="repeat to nest")
    p.set_defaults(fn=_cmd_defect)

    p = with_op(with_k(sub.add_parser("gpdeg", help="sampled degree check for E/j")))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--increment", action="append", help="expression; repeatable")
    p.add_argument("--point", action="append", help="expression; repeatable")
    p.set_defaults(fn=_cmd_gpdeg)

    p = with_op(with_k(sub.add_parser("expoly", help="exponent polynomial of an operator")))
    p.set_defaults(fn=_cmd_expoly)

    p = sub.add_parser("reconstruct", help="rebuild an operator from grid values")
    p.add_argument("--grid", required=True, help="JSON or @file")
    p.set_defaults(fn=_cmd_reconstruct)

    p = with_k(sub.add_parser("fit", help="fit an operator to a finite table"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--require-o0", action="store_true", dest="require_o0")
    p.add_argument("--table", required=True, help="JSON or @file")
    p.set_defaults(fn=_cmd_fit)

    p = sub.add_parser("recurrence", help="check a linear recurrence")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--coeffs", required=True, help="JSON array, c0 first")
    p.add_argument("--seq", required=True, help="JSON array")
    p.set_defaults(fn=_cmd_recurrence)

    p = sub.add_parser("demo", help="run a packaged demonstration")
    p.add_argument("which", choices=["char2", "product-ring", "theorem2"])
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--n", type=int, default=2, help="composition length (theorem2)")
    p.add_argument("--derivations", help="word literal (theorem2)")
    p.set_defaults(fn=_cmd_demo)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    seed = args.seed
    env_seed = os.environ.get("DERIVCALC_SEED")
    if env_seed is not None:
        try:
            seed = int(env_seed)
        except ValueError:
            print("DERIVCALC_SEED must be an integer", file=sys.stderr)
            return 2
    try:
        payload, lines = args.fn(args, seed)
    except MathFailure as exc:
        if args.json:
            print(json.dumps(exc.payload, indent=2))
        else:
            for line in exc.lines:
                print(line)
        return 1
    except (NotInO0Error, PoleError) as exc:
        if args.json:
            print(json.dumps({"error": str(exc)}))
        else:
            print(f"error: {exc}")
        return 1
    except ExprSyntaxError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ZeroDivisionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        for line in lines:
            print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
