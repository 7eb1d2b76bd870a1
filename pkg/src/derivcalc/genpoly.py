"""Difference calculus on the multiplicative semigroup of nonzero field
elements, and exponent polynomials of canonical operators.

The difference of a map f along a nonzero increment g is
delta_g f(x) = f(g*x) - f(x).  A map killed by every (n+1)-fold iterated
difference (but not by every n-fold one) behaves like a polynomial of
degree n on the semigroup.

For a canonical operator E the restriction of E(x)/x to monomials
t1^i1...tk^ik is literally a polynomial in the integer exponents with
coefficients in the field:

    E(t^i)/t^i = sum_a c_a * i^(falling a) * t^(-a),

where i^(falling m) = i(i-1)...(i-m+1).  ``exponent_polynomial`` expands
this into the monomial basis of the exponent variables; its total degree
recovers the operator degree exactly.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Callable, Mapping, Sequence

from .exactnum import (
    DimensionMismatchError,
    Monomial,
    MultiPoly,
    RatFunc,
    grlex_key,
)
from .deriv import DiffOp

# A map defined on nonzero field elements, e.g. x -> E(x)/x for an operator.
SemigroupMap = Callable[[RatFunc], RatFunc]


class ExpPoly:
    """Polynomial in the integer exponent variables i1..ik with coefficients
    in Q(t1..tk)."""

    __slots__ = ("k", "terms", "_hash")

    def __init__(self, k: int, terms: Mapping[Monomial, RatFunc] | None = None):
        clean: dict[Monomial, RatFunc] = {}
        if terms:
            for beta, c in terms.items():
                beta = tuple(beta)
                if len(beta) != k or any(e < 0 for e in beta):
                    raise ValueError(f"bad exponent index {beta} for k={k}")
                if isinstance(c, (int, Fraction)):
                    c = RatFunc.const(k, c)
                elif isinstance(c, MultiPoly):
                    c = RatFunc.from_poly(c)
                if c.k != k:
                    raise DimensionMismatchError(
                        f"coefficient over k={c.k}, expected {k}"
                    )
                if not c.is_zero:
                    clean[beta] = c
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("ExpPoly is immutable")

    @classmethod
    def _raw(cls, k: int, terms: dict) -> "ExpPoly":
        self = object.__new__(cls)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "_hash", None)
        return self

    @classmethod
    def zero(cls, k: int) -> "ExpPoly":
        return cls._raw(k, {})

    @classmethod
    def const(cls, k: int, c) -> "ExpPoly":
        return cls(k, {(0,) * k: c})

    @classmethod
    def linear(cls, coeffs: Sequence[RatFunc]) -> "ExpPoly":
        """sum_j coeffs[j] * i_j."""
        k = len(coeffs)
        terms = {}
        for j, c in enumerate(coeffs):
            beta = tuple(1 if m == j else 0 for m in range(k))
            terms[beta] = c
        return cls(k, terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(b) for b in self.terms)

    def __add__(self, other):
        if not isinstance(other, ExpPoly):
            return NotImplemented
        if self.k != other.k:
            raise DimensionMismatchError(f"mixed counts: {self.k} vs {other.k}")
        out = dict(self.terms)
        for beta, c in other.terms.items():
            s = out.get(beta)
            s = c if s is None else s + c
            if s.is_zero:
                out.pop(beta, None)
            else:
                out[beta] = s
        return ExpPoly._raw(self.k, out)

    def __neg__(self):
        return ExpPoly._raw(self.k, {b: -c for b, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, ExpPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, RatFunc)):
            return self.scale(other)
        if not isinstance(other, ExpPoly):
            return NotImplemented
        if self.k != other.k:
            raise DimensionMismatchError(f"mixed counts: {self.k} vs {other.k}")
        out: dict[Monomial, RatFunc] = {}
        for ba, ca in self.terms.items():
            for bb, cb in other.terms.items():
                beta = tuple(x + y for x, y in zip(ba, bb))
                c = ca * cb
                s = out.get(beta)
                s = c if s is None else s + c
                if s.is_zero:
                    out.pop(beta, None)
                else:
                    out[beta] = s
        return ExpPoly._raw(self.k, out)

    __rmul__ = __mul__

    def scale(self, c) -> "ExpPoly":
        if isinstance(c, (int, Fraction)):
            c = RatFunc.const(self.k, c)
        if c.is_zero:
            return ExpPoly.zero(self.k)
        return ExpPoly._raw(self.k, {b: co * c for b, co in self.terms.items()})

    def map_coeffs(self, fn: Callable[[RatFunc], RatFunc]) -> "ExpPoly":
        out = {}
        for beta, c in self.terms.items():
            v = fn(c)
            if not v.is_zero:
                out[beta] = v
        return ExpPoly._raw(self.k, out)

    def __call__(self, exponents: Sequence[int]) -> RatFunc:
        """Exact value at an integer exponent vector."""
        if len(exponents) != self.k:
            raise DimensionMismatchError(
                f"point has {len(exponents)} entries, expected {self.k}"
            )
        total = RatFunc.zero(self.k)
        for beta, c in self.terms.items():
            w = 1
            for b, i in zip(beta, exponents):
                if b:
                    w *= i**b
            if w:
                total = total + c * w
        return total

    def __eq__(self, other):
        if not isinstance(other, ExpPoly):
            return NotImplemented
        return self.k == other.k and self.terms == other.terms

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.k, frozenset(self.terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for beta, c in sorted(self.terms.items(), key=lambda kv: grlex_key(kv[0])):
            body = "*".join(
                f"i{j + 1}^{e}" if e > 1 else f"i{j + 1}"
                for j, e in enumerate(beta)
                if e
            )
            if not body:
                parts.append(f"({c})")
            elif c == 1:
                parts.append(body)
            else:
                parts.append(f"({c})*{body}")
        return " + ".join(parts)

    def __repr__(self):
        return f"ExpPoly(k={self.k}, {str(self)!r})"


# ---------------------------------------------------------------------------
# Difference operators
# ---------------------------------------------------------------------------


def delta(g: RatFunc, f: SemigroupMap, x: RatFunc) -> RatFunc:
    """Multiplicative difference: f(g*x) - f(x).  g and x must be nonzero."""
    if g.is_zero:
        raise ValueError("increment must be nonzero")
    if x.is_zero:
        raise ValueError("point must be a nonzero field element")
    return f(g * x) - f(x)


def _iterated_delta(f, gs: Sequence[RatFunc], x: RatFunc, memo: dict) -> RatFunc:
    """delta_{g1} ... delta_{gm} f(x), memoized on (suffix, point) pairs."""
    if not gs:
        got = memo.get(x)
        if got is None:
            got = f(x)
            memo[x] = got
        return got
    key = (gs, x)
    got = memo.get(key)
    if got is None:
        rest = gs[1:]
        got = _iterated_delta(f, rest, gs[0] * x, memo) - _iterated_delta(
            f, rest, x, memo
        )
        memo[key] = got
    return got


def gp_degree_check(
    f: SemigroupMap,
    n: int,
    increments: Sequence[RatFunc],
    points: Sequence[RatFunc],
) -> "CheckResult":
    """Test whether f behaves like a polynomial of degree <= n on the sampled
    data: every (n+1)-fold iterated difference over the given increments must
    vanish at every given point.

    Difference operators commute, so increment tuples are enumerated without
    regard to order (the commutation law itself is covered by tests).  n = -1
    asks for the zero map.  Failure reports the witness (increments-tuple,
    point, value); passing is evidence on the data only.
    """
    from .leibniz import CheckResult  # shared result shape

    if n < -1:
        raise ValueError("degree bound must be at least -1")
    if not increments and n >= 0:
        raise ValueError("need at least one increment")
    if not points:
        raise ValueError("need at least one point")
    for g in increments:
        if g.is_zero:
            raise ValueError("increments must be nonzero")
    for x in points:
        if x.is_zero:
            raise ValueError("points must be nonzero")
    memo: dict = {}
    for picks in combinations_with_replacement(range(len(increments)), n + 1):
        gs = tuple(increments[i] for i in picks)
        for x in points:
            v = _iterated_delta(f, gs, x, memo)
            if not v.is_zero:
                return CheckResult(
                    False, f"{n + 1}-fold difference nonzero", (gs, x), v
                )
    return CheckResult(True, f"all {n + 1}-fold differences vanish on given data")


# ---------------------------------------------------------------------------
# Exponent polynomials
# ---------------------------------------------------------------------------


def falling_factorial_coeffs(m: int) -> list[Fraction]:
    """Coefficients of x(x-1)...(x-m+1) in the monomial basis, low to high."""
    coeffs = [Fraction(1)]
    for j in range(m):
        # multiply by (x - j)
        shifted = [Fraction(0)] + coeffs
        coeffs = [s - j * c for s, c in zip(shifted, coeffs + [Fraction(0)])]
    return coeffs


def _falling_factorial_exppoly(k: int, var: int, m: int) -> ExpPoly:
    coeffs = falling_factorial_coeffs(m)
    terms = {}
    for e, c in enumerate(coeffs):
        if c:
            beta = tuple(e if j == var else 0 for j in range(k))
            terms[beta] = RatFunc.const(k, c)
    return ExpPoly(k, terms)


def over_identity(E: DiffOp) -> SemigroupMap:
    """The semigroup map x -> E(x)/x induced by an operator."""

    def f(x: RatFunc) -> RatFunc:
        if x.is_zero:
            raise ZeroDivisionError("map is defined on nonzero elements only")
        return E(x) / x

    return f


def exponent_polynomial(E: DiffOp) -> ExpPoly:
    """The polynomial p with p(i1..ik) = E(t1^i1...tk^ik) / t1^i1...tk^ik.

    Each canonical term c_a d^a contributes c_a * t^(-a) times a product of
    falling factorials in the exponent variables, which is then expanded in
    the monomial basis.
    """
    k = E.k
    total = ExpPoly.zero(k)
    for alpha, c in E.coeffs.items():
        t_pow = MultiPoly.monomial(k, alpha)
        coef = c * RatFunc(MultiPoly.const(k, 1), t_pow)
        term = ExpPoly.const(k, coef)
        for var, m in enumerate(alpha):
            if m:
                term = term * _falling_factorial_exppoly(k, var, m)
        total = total + term
    return total


def expoly_degree(p: ExpPoly) -> int:
    """Total degree in the exponent variables; -1 for the zero polynomial.

    For p = exponent_polynomial(E) this equals the degree of E: distinct
    top-order multi-indices of E feed distinct leading exponent monomials,
    so no cancellation can occur at the top."""
    return p.total_degree


def degree_bump(p: ExpPoly, a: Sequence[RatFunc]) -> int:
    """Degree of p times the additive map i -> sum_j i_j * a_j.

    Multiplying a nonzero polynomial map by a nonzero additive one raises
    the degree by exactly one in characteristic zero; callers assert
    degree_bump(p, a) == expoly_degree(p) + 1 for nonzero p."""
    a = list(a)
    if len(a) != p.k:
        raise DimensionMismatchError(f"expected {p.k} additive values, got {len(a)}")
    if all(v.is_zero for v in a):
        raise ValueError("the additive map must be nonzero")
    return (p * ExpPoly.linear(a)).total_degree
