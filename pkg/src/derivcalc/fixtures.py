"""Executable counterexamples and demos at desk scale.

Three stories, all checked exhaustively or with seeded samples:

* Over F2[x] the map sending x^i to binom(i,2) x^(i-2) is additive and has
  every 2-fold product-rule defect zero, yet it is not a derivation - and
  composing any two derivations on F2[x] collapses back to first order.
  Characteristic matters.
* On the product ring Q[x] x Q[x], two nonzero derivations can compose to
  the zero map.  Zero divisors matter.
* Over Q(t1..tk), composing n nonzero derivations always has exact order n:
  canonical degree n, exponent-polynomial degree n, vanishing n-fold nested
  defects, and a nonvanishing (n-1)-fold witness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product
from random import Random
from typing import Callable, Sequence

from .exactnum import GF2Poly, MultiPoly, RatFunc
from .deriv import Derivation, DiffOp, OpWord, normalize
from .genpoly import exponent_polynomial, expoly_degree
from .leibniz import defect, nested_defect
from .sampling import DEFAULT_SEED, random_defect_tuple


# ---------------------------------------------------------------------------
# Characteristic 2
# ---------------------------------------------------------------------------


def char2_D(p: GF2Poly) -> GF2Poly:
    """Map x^i -> binom(i, 2) x^(i-2) over F2, extended additively."""
    out = GF2Poly.zero()
    for i in range(2, p.bits.bit_length()):
        if p.coeff(i) and math.comb(i, 2) & 1:
            out = out + GF2Poly.monomial(i - 2)
    return out


def _gf2_derivation(image: GF2Poly) -> Callable[[GF2Poly], GF2Poly]:
    """The derivation on F2[x] with d(x) = image: d(p) = p' * image."""

    def d(p: GF2Poly) -> GF2Poly:
        return p.formal_derivative() * image

    return d


@dataclass(frozen=True)
class Char2OrderReport:
    max_degree: int
    additive_ok: bool
    defects2_vanish: bool
    d_of_x: GF2Poly
    d_of_x2: GF2Poly
    derivation_witness: tuple | None  # (x, y, B(x, y)) with nonzero defect

    @property
    def is_derivation_on_tested(self) -> bool:
        return self.derivation_witness is None

    @property
    def ok(self) -> bool:
        return self.additive_ok and self.defects2_vanish


def char2_order_check(
    max_degree: int = 4, D: Callable[[GF2Poly], GF2Poly] | None = None
) -> Char2OrderReport:
    """Exhaustive check over all F2[x] inputs of degree <= max_degree:
    additivity of D, vanishing of all 2-fold nested defects, and a search
    for a product-rule failure witnessing that D is not a derivation."""
    if D is None:
        D = char2_D
    elems = list(GF2Poly.all_up_to_degree(max_degree))
    additive_ok = all(D(x + y) == D(x) + D(y) for x in elems for y in elems)
    defects2 = True
    for x, y1, y2 in product(elems, repeat=3):
        if not nested_defect(D, x, (y1, y2)).is_zero:
            defects2 = False
            break
    witness = None
    for x, y in product(elems, repeat=2):
        b = defect(D, x, y)
        if not b.is_zero:
            witness = (x, y, b)
            break
    return Char2OrderReport(
        max_degree=max_degree,
        additive_ok=additive_ok,
        defects2_vanish=defects2,
        d_of_x=D(GF2Poly.x()),
        d_of_x2=D(GF2Poly.x() ** 2),
        derivation_witness=witness,
    )


@dataclass(frozen=True)
class Char2ComposeReport:
    a: GF2Poly
    d1_image: GF2Poly
    d2_image: GF2Poly
    max_power: int
    powers_ok: bool
    first_power_failure: int | None
    collapse_ok: bool

    @property
    def ok(self) -> bool:
        return self.powers_ok and self.collapse_ok


def char2_compose_check(
    a: GF2Poly,
    d1_image: GF2Poly | None = None,
    d2_image: GF2Poly | None = None,
    max_power: int = 8,
) -> Char2ComposeReport:
    """Verify that composing two derivations on F2[x] stays first order.

    The derivations are determined by their values on x; when omitted they
    default to d2(x) = x and d1(x) = a, which realizes d1(d2(x)) = a.  The
    check confirms (d1 o d2)(x^m) = m x^(m-1) a for m = 0..max_power, and
    that the composite agrees with p -> a * p' on every polynomial of degree
    <= max_power (so the composite is again a derivation: second order
    collapses to first).
    """
    if d1_image is None and d2_image is None:
        d2_image = GF2Poly.x()
        d1_image = a
    elif d1_image is None or d2_image is None:
        raise ValueError("supply both generator images or neither")
    expected_a = d2_image.formal_derivative() * d1_image
    if expected_a != a:
        raise ValueError(
            f"inconsistent data: d1(d2(x)) = {expected_a}, but a = {a}"
        )
    d1 = _gf2_derivation(d1_image)
    d2 = _gf2_derivation(d2_image)
    powers_ok = True
    first_fail = None
    for m in range(max_power + 1):
        xm = GF2Poly.monomial(m) if m else GF2Poly.one()
        lhs = d1(d2(xm))
        rhs = (GF2Poly.monomial(m - 1) * a) if (m & 1) else GF2Poly.zero()
        if lhs != rhs:
            powers_ok = False
            first_fail = m
            break
    collapse_ok = all(
        d1(d2(p)) == p.formal_derivative() * a
        for p in GF2Poly.all_up_to_degree(max_power)
    )
    return Char2ComposeReport(
        a=a,
        d1_image=d1_image,
        d2_image=d2_image,
        max_power=max_power,
        powers_ok=powers_ok,
        first_power_failure=first_fail,
        collapse_ok=collapse_ok,
    )


# ---------------------------------------------------------------------------
# Product ring
# ---------------------------------------------------------------------------


class PairPoly:
    """Element of Q[x] x Q[x] with componentwise operations."""

    __slots__ = ("first", "second")

    def __init__(self, first: MultiPoly, second: MultiPoly):
        if first.k != 1 or second.k != 1:
            raise ValueError("components must be univariate")
        object.__setattr__(self, "first", first)
        object.__setattr__(self, "second", second)

    def __setattr__(self, name, value):
        raise AttributeError("PairPoly is immutable")

    @classmethod
    def unit(cls) -> "PairPoly":
        one = MultiPoly.const(1, 1)
        return cls(one, one)

    @classmethod
    def monomials(cls, i: int, j: int) -> "PairPoly":
        return cls(MultiPoly.monomial(1, (i,)), MultiPoly.monomial(1, (j,)))

    @property
    def is_zero(self) -> bool:
        return self.first.is_zero and self.second.is_zero

    def __add__(self, other):
        return PairPoly(self.first + other.first, self.second + other.second)

    def __mul__(self, other):
        return PairPoly(self.first * other.first, self.second * other.second)

    def __eq__(self, other):
        if not isinstance(other, PairPoly):
            return NotImplemented
        return self.first == other.first and self.second == other.second

    def __hash__(self):
        return hash((self.first, self.second))

    def __str__(self):
        return f"({self.first}, {self.second})"

    def __repr__(self):
        return f"PairPoly{str(self)}"


def pair_d1(p: PairPoly) -> PairPoly:
    return PairPoly(p.first.partial(0), MultiPoly.zero(1))


def pair_d2(p: PairPoly) -> PairPoly:
    return PairPoly(MultiPoly.zero(1), p.second.partial(0))


@dataclass(frozen=True)
class ProductRingReport:
    leibniz_ok: bool
    composite_zero_ok: bool
    d1_nonzero_witness: PairPoly
    d2_nonzero_witness: PairPoly
    max_exponent: int

    @property
    def ok(self) -> bool:
        return (
            self.leibniz_ok
            and self.composite_zero_ok
            and not self.d1_nonzero_witness.is_zero
            and not self.d2_nonzero_witness.is_zero
        )


def product_ring_demo(max_exponent: int = 6) -> ProductRingReport:
    """Two nonzero derivations on Q[x] x Q[x] whose composition is zero.

    Verifies the sum and product rules for both component derivations on a
    fixed sample set, then checks d1(d2(.)) = 0 on all monomial pairs
    (x^i, x^j) with i, j <= max_exponent.
    """
    x = MultiPoly.variable(1, 0)
    one = MultiPoly.const(1, 1)
    samples = [
        PairPoly(one, one),
        PairPoly(x, x**3),
        PairPoly(x**2 + 1, x),
        PairPoly(x**2, x**3),
        PairPoly(x + 1, MultiPoly.zero(1)),
        PairPoly(MultiPoly.zero(1), x**2 - x),
    ]
    leibniz_ok = True
    for d in (pair_d1, pair_d2):
        for u in samples:
            for v in samples:
                sum_rule = d(u + v) == d(u) + d(v)
                product_rule = d(u * v) == d(u) * v + d(v) * u
                if not (sum_rule and product_rule):
                    leibniz_ok = False
    composite_zero = all(
        pair_d1(pair_d2(PairPoly.monomials(i, j))).is_zero
        for i in range(max_exponent + 1)
        for j in range(max_exponent + 1)
    )
    return ProductRingReport(
        leibniz_ok=leibniz_ok,
        composite_zero_ok=composite_zero,
        d1_nonzero_witness=pair_d1(PairPoly(x, MultiPoly.zero(1))),
        d2_nonzero_witness=pair_d2(PairPoly(MultiPoly.zero(1), x)),
        max_exponent=max_exponent,
    )


# ---------------------------------------------------------------------------
# Exact-order composition over Q(t1..tk)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Theorem2Report:
    n: int
    degree: int
    expoly_degree: int
    vanish_ok: bool
    witness: tuple | None
    witness_value: RatFunc | None
    witness_tuples_tried: int
    operator: DiffOp

    @property
    def ok(self) -> bool:
        return (
            self.degree == self.n
            and self.expoly_degree == self.n
            and self.vanish_ok
            and self.witness is not None
        )


def theorem2_demo(
    derivations: Sequence[Derivation],
    seed: int = DEFAULT_SEED,
    vanish_tuples: int = 5,
    witness_budget: int = 50,
) -> Theorem2Report:
    """Composition of n nonzero derivations has exact order n.

    Normalizes the composition, reports its canonical degree and the degree
    of its exponent polynomial (both must be n), checks that n-fold nested
    defects vanish on seeded random tuples, and searches for a tuple where
    some (n-1)-fold nested defect does not vanish (for n = 1 this is a
    point where the map itself is nonzero).
    """
    if not derivations:
        raise ValueError("need at least one derivation")
    for d in derivations:
        if d.is_zero:
            raise ValueError("all derivations must be nonzero")
    n = len(derivations)
    k = derivations[0].k
    E = normalize(OpWord.composition(derivations))
    p = exponent_polynomial(E)
    rng = Random(seed)
    vanish_ok = True
    for _ in range(vanish_tuples):
        tup = random_defect_tuple(rng, k, n + 1)
        if not nested_defect(E, tup[0], tup[1:]).is_zero:
            vanish_ok = False
            break
    witness = None
    witness_value = None
    tried = 0
    for _ in range(witness_budget):
        tried += 1
        if n == 1:
            tup = random_defect_tuple(rng, k, 1)
            value = E(tup[0])
        else:
            tup = random_defect_tuple(rng, k, n)
            value = nested_defect(E, tup[0], tup[1:])
        if not value.is_zero:
            witness = tup
            witness_value = value
            break
    return Theorem2Report(
        n=n,
        degree=E.degree,
        expoly_degree=expoly_degree(p),
        vanish_ok=vanish_ok,
        witness=witness,
        witness_value=witness_value,
        witness_tuples_tried=tried,
        operator=E,
    )
