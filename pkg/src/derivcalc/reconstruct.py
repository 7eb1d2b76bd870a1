"""Rebuilding operators from their values on the monomial grid, fitting
operators to finite tables, and checking linear recurrences.

Reconstruction: given D(t^i) for all i in {0..n}^k, the ratios
p(i) = D(t^i)/t^i interpolate exactly in the falling-factorial basis via
multivariate Newton forward differences,

    c_j = (delta_1^{j1} ... delta_k^{jk} p)(0) / (j1! ... jk!),

and the candidate operator is E = sum_j c_j * t^j * d^j.  When the grid data
really comes from an operator of degree at most n (and an additive map on
the whole field agrees with the grid), E reproduces it in canonical form.
Coefficients c_j with |j| > n act as a built-in consistency check: the cube
grid determines them, and any nonzero one proves the data is inconsistent
with degree <= n.

Fitting: a degree-bounded operator agreeing with a finite table is a linear
system over the fraction field in the unknown coefficients; Gaussian
elimination with fewest-terms pivoting either solves it (free variables are
set to zero) or names an inconsistent row.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Mapping

from .exactnum import MultiPoly, Monomial, RatFunc, grlex_key
from .deriv import DiffOp, _materialize_partial
from .leibniz import MapTable


class DegreeOverflowError(ValueError):
    """Grid data inconsistent with the declared degree bound."""

    def __init__(self, offending: list[Monomial]):
        self.offending = offending
        super().__init__(
            "grid data inconsistent with the degree bound; nonzero "
            f"falling-factorial coefficients at {offending}"
        )


class IncompleteGridError(ValueError):
    """The value grid is missing entries."""


@dataclass(frozen=True)
class GridValues:
    """Operator values D(t^i) on the full cube grid i in {0..n}^k."""

    k: int
    n: int
    values: Mapping[Monomial, RatFunc]

    def __post_init__(self):
        expected = set(product(range(self.n + 1), repeat=self.k))
        got = set(self.values)
        if got != expected:
            missing = sorted(expected - got)[:4]
            extra = sorted(got - expected)[:4]
            raise IncompleteGridError(
                f"grid must cover {{0..{self.n}}}^{self.k}; "
                f"missing {missing}, unexpected {extra}"
            )
        for v in self.values.values():
            if v.k != self.k:
                raise ValueError("grid value over wrong variable count")

    @classmethod
    def tabulate(cls, E: DiffOp, n: int) -> "GridValues":
        """Evaluate an operator on every grid monomial."""
        k = E.k
        vals = {}
        for i in product(range(n + 1), repeat=k):
            mono = RatFunc.from_poly(MultiPoly.monomial(k, i))
            vals[i] = E(mono)
        return cls(k, n, vals)


@dataclass(frozen=True)
class RecurrenceSpec:
    """Constant-coefficient linear recurrence c_N a_m + ... + c_0 a_{m-N} = 0
    to be checked against an explicit sequence prefix."""

    coefficients: tuple
    sequence: tuple

    def __post_init__(self):
        if not self.coefficients:
            raise ValueError("need at least one coefficient")
        top = self.coefficients[-1]
        if not top:
            raise ValueError("leading coefficient c_N must be nonzero")
        if len(self.sequence) < len(self.coefficients):
            raise ValueError("sequence shorter than the recurrence window")


@dataclass(frozen=True)
class RecurrenceResult:
    ok: bool
    first_failure: int | None = None

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class FitResult:
    """Outcome of fitting an operator to a table.

    `operator` is one solution (free variables zeroed) or None when the
    system is inconsistent; `inconsistent_row` indexes the offending table
    entry in that case.  `solution_dim` is the dimension of the solution
    space (number of free coefficients)."""

    operator: DiffOp | None
    inconsistent_row: int | None = None
    solution_dim: int = 0

    @property
    def ok(self) -> bool:
        return self.operator is not None

    def __bool__(self):
        return self.ok


def newton_coeffs(
    p_values: Mapping[Monomial, RatFunc],
) -> dict[Monomial, RatFunc]:
    """Falling-factorial coefficients of the function tabulated on a cube
    grid {0..n}^k, via forward differences at the origin:

        c_j = (sum over m <= j of (-1)^{|j - m|} binom(j, m) p(m)) / j!

    The expansion sum_j c_j * i^(falling j) re-evaluates to p on every grid
    node (exact interpolation).
    """
    if not p_values:
        raise IncompleteGridError("empty grid")
    some = next(iter(p_values))
    k = len(some)
    n = max(max(idx) for idx in p_values) if p_values else 0
    expected = set(product(range(n + 1), repeat=k))
    if set(p_values) != expected:
        raise IncompleteGridError(f"grid must be the full cube {{0..{n}}}^{k}")
    out: dict[Monomial, RatFunc] = {}
    for j in product(range(n + 1), repeat=k):
        acc = None
        for m in product(*(range(e + 1) for e in j)):
            w = 1
            for je, me in zip(j, m):
                w *= math.comb(je, me)
                if (je - me) & 1:
                    w = -w
            term = p_values[m] * w
            acc = term if acc is None else acc + term
        fact = 1
        for je in j:
            fact *= math.factorial(je)
        c = acc * Fraction(1, fact)
        if not c.is_zero:
            out[j] = c
    return out


def reconstruct_operator(grid: GridValues) -> DiffOp:
    """Operator with the given values on the monomial grid.

    Divides out the monomials, interpolates the exponent function in the
    falling-factorial basis, and reads off E = sum_j c_j t^j d^j.  Raises
    DegreeOverflowError when any coefficient with |j| > n is nonzero, since
    no operator of degree <= n can produce such data.
    """
    k, n = grid.k, grid.n
    p_values = {}
    for i, v in grid.values.items():
        t_pow = MultiPoly.monomial(k, i)
        p_values[i] = v / RatFunc.from_poly(t_pow)
    coeffs = newton_coeffs(p_values)
    overflow = sorted((j for j in coeffs if sum(j) > n), key=grlex_key)
    if overflow:
        raise DegreeOverflowError(overflow)
    op_coeffs = {}
    for j, c in coeffs.items():
        op_coeffs[j] = c * RatFunc.from_poly(MultiPoly.monomial(k, j))
    return DiffOp(k, op_coeffs)


def _term_count(v: RatFunc) -> int:
    return len(v.num.terms) + len(v.den.terms)


def fit_operator(table: MapTable, n: int, require_o0: bool = True) -> FitResult:
    """Find a degree <= n operator agreeing with the table, or report that
    none exists.

    Unknowns are the coefficients c_a for |a| <= n (the identity index is
    excluded when require_o0 is set); each table pair (x, y) contributes the
    linear equation sum_a c_a d^a(x) = y over the fraction field.  Gaussian
    elimination picks the structurally smallest pivot (fewest terms) to
    limit expression swell.  Free coefficients are set to zero.
    """
    if n < 0:
        raise ValueError("degree bound must be nonnegative")
    k = table.k
    indices = [
        alpha
        for alpha in product(range(n + 1), repeat=k)
        if sum(alpha) <= n and not (require_o0 and sum(alpha) == 0)
    ]
    indices.sort(key=grlex_key)
    ncols = len(indices)
    rows: list[tuple[list[RatFunc], RatFunc, int]] = []
    for rowidx, (x, y) in enumerate(table):
        # evaluate all d^a(x) in one shared derivative chain
        cache = {(0,) * k: x}
        coeffs_row = [_materialize_partial(cache, alpha) for alpha in indices]
        rows.append((coeffs_row, y, rowidx))
    solution = [RatFunc.zero(k) for _ in range(ncols)]
    pivots: list[tuple[int, list[RatFunc], RatFunc]] = []  # (col, row, rhs)
    remaining = rows
    for col in range(ncols):
        candidates = [r for r in remaining if not r[0][col].is_zero]
        if not candidates:
            continue
        pivot = min(candidates, key=lambda r: _term_count(r[0][col]))
        remaining = [r for r in remaining if r is not pivot]
        prow, prhs, _ = pivot
        inv = prow[col].reciprocal()
        prow = [c * inv for c in prow]
        prhs = prhs * inv
        new_remaining = []
        for crow, crhs, cidx in remaining:
            factor = crow[col]
            if not factor.is_zero:
                crow = [a - factor * b for a, b in zip(crow, prow)]
                crhs = crhs - factor * prhs
            new_remaining.append((crow, crhs, cidx))
        remaining = new_remaining
        pivots.append((col, prow, prhs))
    for crow, crhs, cidx in remaining:
        if not crhs.is_zero:
            return FitResult(None, inconsistent_row=cidx)
    # back-substitute, free variables already zero
    for col, prow, prhs in reversed(pivots):
        val = prhs
        for c2 in range(col + 1, ncols):
            if not prow[c2].is_zero:
                val = val - prow[c2] * solution[c2]
        solution[col] = val
    op = DiffOp(k, {alpha: v for alpha, v in zip(indices, solution)})
    return FitResult(op, solution_dim=ncols - len(pivots))


def check_recurrence(spec: RecurrenceSpec) -> RecurrenceResult:
    """Verify c_N a_m + c_{N-1} a_{m-1} + ... + c_0 a_{m-N} = 0 for every m
    from N through the end of the sequence; reports the first failing m."""
    cs = spec.coefficients
    seq = spec.sequence
    N = len(cs) - 1
    for m in range(N, len(seq)):
        acc = None
        for j, c in enumerate(cs):
            term = c * seq[m - N + j]
            acc = term if acc is None else acc + term
        if acc:
            return RecurrenceResult(False, first_failure=m)
    return RecurrenceResult(True)
