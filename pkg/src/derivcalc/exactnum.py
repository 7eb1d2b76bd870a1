"""Exact arithmetic: Q, sparse multivariate polynomials over Q, and the
rational function field Q(t1, ..., tk).

Representation choices:

* Rationals are ``fractions.Fraction`` (always reduced, denominator >= 1).
* A monomial is a tuple of k nonnegative integer exponents.
* ``MultiPoly`` maps monomials to nonzero exact rational coefficients; the
  zero polynomial has an empty term map.  Integral coefficients are stored
  as plain int (hash- and equality-compatible with Fraction, and much
  faster), everything else as Fraction.  The monomial order used everywhere
  (printing, leading terms, denominator normalization) is graded
  lexicographic: compare total degree first, then the exponent tuple.
* ``RatFunc`` is a quotient num/den of two MultiPoly values kept in canonical
  form: gcd(num, den) = 1 and den monic (graded-lex leading coefficient 1).
  Equality of canonical forms is structural equality.
* ``GF2Poly`` is a univariate polynomial over the two-element field, stored
  as an integer bit mask (bit i = coefficient of x^i).

All values are immutable; all operations return fresh values.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

BigRational = Fraction

Monomial = tuple  # tuple[int, ...], one exponent per variable


class DimensionMismatchError(ValueError):
    """Operands live over different numbers of variables."""


class PoleError(ZeroDivisionError):
    """The denominator vanishes at the evaluation point."""


def grlex_key(mono: Monomial):
    """Sort key realizing the graded-lexicographic order."""
    return (sum(mono), mono)


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def _mono_divides(a: Monomial, b: Monomial) -> bool:
    """True when a | b componentwise."""
    return all(x <= y for x, y in zip(a, b))


def _mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


# Coefficients are stored as plain int whenever they are integral and as
# Fraction otherwise; the two interoperate exactly (ints satisfy the
# Rational protocol and hash consistently with Fraction), and integer
# arithmetic avoids Fraction's per-operation gcd normalization.


def _as_coeff(value):
    if type(value) is int:
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, int):
        return int(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def _coeff_div(a, b):
    """Exact coefficient quotient a/b as int or Fraction."""
    if type(a) is int and type(b) is int:
        q, r = divmod(a, b)
        return q if not r else Fraction(a, b)
    return _as_coeff(Fraction(a) / Fraction(b))


class MultiPoly:
    """Sparse polynomial in k variables with rational coefficients."""

    __slots__ = ("k", "terms", "_hash")

    def __init__(self, k: int, terms: Mapping[Monomial, Fraction] | None = None):
        if k < 0:
            raise ValueError("variable count must be nonnegative")
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for mono, coef in terms.items():
                mono = tuple(mono)
                if len(mono) != k or any(e < 0 for e in mono):
                    raise ValueError(f"bad monomial {mono} for k={k}")
                coef = _as_coeff(coef)
                if coef:
                    clean[mono] = coef
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _raw(cls, k: int, terms: dict) -> "MultiPoly":
        """Internal constructor; `terms` must already be canonical and owned."""
        self = object.__new__(cls)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "_hash", None)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, k: int) -> "MultiPoly":
        return cls._raw(k, {})

    @classmethod
    def const(cls, k: int, value) -> "MultiPoly":
        c = _as_coeff(value)
        return cls._raw(k, {(0,) * k: c} if c else {})

    @classmethod
    def variable(cls, k: int, index: int) -> "MultiPoly":
        if not 0 <= index < k:
            raise ValueError(f"variable index {index} out of range for k={k}")
        mono = tuple(1 if i == index else 0 for i in range(k))
        return cls._raw(k, {mono: 1})

    @classmethod
    def monomial(cls, k: int, exponents: Sequence[int], coef=1) -> "MultiPoly":
        return cls(k, {tuple(exponents): _as_coeff(coef)})

    # -- queries -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and (0,) * self.k in self.terms)

    @property
    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def constant_value(self) -> Fraction:
        if not self.is_constant:
            raise ValueError("not a constant polynomial")
        return Fraction(self.terms.get((0,) * self.k, 0))

    @property
    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def degree_in(self, var: int) -> int:
        """Degree in one variable; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(m[var] for m in self.terms)

    def leading_term(self) -> tuple[Monomial, Fraction]:
        """(monomial, coefficient) that is largest in graded-lex order."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        mono = max(self.terms, key=grlex_key)
        return mono, self.terms[mono]

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in descending graded-lex order."""
        return sorted(self.terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=True)

    # -- ring operations ---------------------------------------------------

    def _check_k(self, other: "MultiPoly"):
        if self.k != other.k:
            raise DimensionMismatchError(
                f"mixed variable counts: {self.k} vs {other.k}"
            )

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.k, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check_k(other)
        out = dict(self.terms)
        for mono, coef in other.terms.items():
            s = out.get(mono, 0) + coef
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        return MultiPoly._raw(self.k, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.k, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.k, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check_k(other)
        if not self.terms or not other.terms:
            return MultiPoly.zero(self.k)
        # iterate over the smaller operand outside
        a, b = (self.terms, other.terms)
        if len(a) > len(b):
            a, b = b, a
        out: dict[Monomial, Fraction] = {}
        for ma, ca in a.items():
            for mb, cb in b.items():
                mono = _mono_mul(ma, mb)
                s = out.get(mono, 0) + ca * cb
                if s:
                    out[mono] = s
                else:
                    del out[mono]
        return MultiPoly._raw(self.k, out)

    __rmul__ = __mul__

    def scale(self, c) -> "MultiPoly":
        c = _as_coeff(c)
        if not c:
            return MultiPoly.zero(self.k)
        if type(c) is int:
            return MultiPoly._raw(self.k, {m: coef * c for m, coef in self.terms.items()})
        return MultiPoly._raw(
            self.k, {m: _as_coeff(coef * c) for m, coef in self.terms.items()}
        )

    def mul_monomial(self, mono: Monomial, coef=1) -> "MultiPoly":
        c = _as_coeff(coef)
        if not c or not self.terms:
            return MultiPoly.zero(self.k)
        mono = tuple(mono)
        return MultiPoly._raw(
            self.k, {_mono_mul(m, mono): cc * c for m, cc in self.terms.items()}
        )

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial power must be a nonnegative integer")
        result = MultiPoly.const(self.k, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- calculus and evaluation --------------------------------------------

    def partial(self, var: int) -> "MultiPoly":
        """Partial derivative with respect to variable `var`."""
        out: dict[Monomial, Fraction] = {}
        for mono, coef in self.terms.items():
            e = mono[var]
            if e:
                m = list(mono)
                m[var] = e - 1
                key = tuple(m)
                s = out.get(key, 0) + coef * e
                if s:
                    out[key] = s
                else:
                    del out[key]
        return MultiPoly._raw(self.k, out)

    def __call__(self, point: Sequence) -> Fraction:
        if len(point) != self.k:
            raise DimensionMismatchError(
                f"point has {len(point)} entries, expected {self.k}"
            )
        vals = [_as_fraction(v) for v in point]
        total = Fraction(0)
        for mono, coef in self.terms.items():
            term = coef
            for e, v in zip(mono, vals):
                if e:
                    term *= v**e
            total += term
        return Fraction(total)

    # -- division ----------------------------------------------------------

    def exact_div(self, divisor: "MultiPoly") -> "MultiPoly":
        """Exact polynomial division; raises ValueError when not divisible."""
        self._check_k(divisor)
        if divisor.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero:
            return self
        if divisor.is_constant:
            return self.scale(1 / divisor.constant_value())
        if divisor.is_monomial:
            dm, dc = next(iter(divisor.terms.items()))
            out = {}
            for mono, coef in self.terms.items():
                if not _mono_divides(dm, mono):
                    raise ValueError("not exactly divisible")
                out[_mono_div(mono, dm)] = _coeff_div(coef, dc)
            return MultiPoly._raw(self.k, out)
        dm, dc = divisor.leading_term()
        rem = dict(self.terms)
        quot: dict[Monomial, Fraction] = {}
        while rem:
            mono = max(rem, key=grlex_key)
            if not _mono_divides(dm, mono):
                raise ValueError("not exactly divisible")
            qm = _mono_div(mono, dm)
            qc = _coeff_div(rem[mono], dc)
            quot[qm] = qc
            for m, c in divisor.terms.items():
                key = _mono_mul(m, qm)
                s = rem.get(key, 0) - c * qc
                if s:
                    rem[key] = s
                else:
                    rem.pop(key, None)
        return MultiPoly._raw(self.k, quot)

    def divides(self, other: "MultiPoly") -> bool:
        try:
            other.exact_div(self)
            return True
        except (ValueError, ZeroDivisionError):
            return False

    # -- content and primitive part ------------------------------------------

    def rational_content(self) -> Fraction:
        """Signed rational c with self = c * (integer-primitive, positive-lead
        polynomial); 0 for the zero polynomial."""
        if not self.terms:
            return Fraction(0)
        num_gcd = 0
        den_lcm = 1
        for coef in self.terms.values():
            num_gcd = math.gcd(num_gcd, abs(coef.numerator))
            den_lcm = den_lcm * coef.denominator // math.gcd(den_lcm, coef.denominator)
        content = Fraction(num_gcd, den_lcm)
        _, lead = self.leading_term()
        return content if lead > 0 else -content

    def primitive(self) -> "MultiPoly":
        """Integer-primitive associate with positive leading coefficient."""
        if not self.terms:
            return self
        return self.scale(1 / self.rational_content())

    # -- comparison, hashing, printing ---------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_constant and self.constant_value() == other
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.k == other.k and self.terms == other.terms

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.k, frozenset(self.terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        chunks: list[str] = []
        for mono, coef in self.sorted_terms():
            body = "*".join(
                f"t{i + 1}^{e}" if e > 1 else f"t{i + 1}"
                for i, e in enumerate(mono)
                if e
            )
            mag = abs(coef)
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            if not chunks:
                chunks.append(text if coef > 0 else f"-{text}")
            else:
                chunks.append(f"+ {text}" if coef > 0 else f"- {text}")
        return " ".join(chunks)

    def __repr__(self):
        return f"MultiPoly(k={self.k}, {str(self)!r})"


# ---------------------------------------------------------------------------
# Polynomial gcd over Q[t1..tk]
# ---------------------------------------------------------------------------
#
# Strategy: recursive content/primitive-part reduction on the lowest variable
# present, with the primitive parts handled by a subresultant polynomial
# remainder sequence.  Monomial and single-variable inputs take fast paths.


def _vars_present(p: MultiPoly) -> set[int]:
    out: set[int] = set()
    for mono in p.terms:
        for i, e in enumerate(mono):
            if e:
                out.add(i)
    return out


def _coeffs_wrt(p: MultiPoly, v: int) -> dict[int, MultiPoly]:
    """View p as univariate in variable v: exponent -> coefficient polynomial
    (with the v-exponent zeroed in the coefficient's monomials)."""
    slices: dict[int, dict[Monomial, Fraction]] = {}
    for mono, coef in p.terms.items():
        e = mono[v]
        m = list(mono)
        m[v] = 0
        slices.setdefault(e, {})[tuple(m)] = coef
    return {e: MultiPoly._raw(p.k, t) for e, t in slices.items()}


def _lead_wrt(p: MultiPoly, v: int) -> MultiPoly:
    d = p.degree_in(v)
    coeffs = _coeffs_wrt(p, v)
    return coeffs[d]


def _shift_var(p: MultiPoly, v: int, e: int) -> MultiPoly:
    """Multiply by the monomial v^e."""
    mono = [0] * p.k
    mono[v] = e
    return p.mul_monomial(tuple(mono))


def _prem(a: MultiPoly, b: MultiPoly, v: int) -> MultiPoly:
    """Pseudo-remainder of a by b with respect to variable v:
    lead(b)^(deg a - deg b + 1) * a modulo b."""
    db = b.degree_in(v)
    lcb = _lead_wrt(b, v)
    r = a
    n = a.degree_in(v) - db + 1
    while not r.is_zero and r.degree_in(v) >= db:
        lcr = _lead_wrt(r, v)
        r = r * lcb - _shift_var(lcr, v, r.degree_in(v) - db) * b
        n -= 1
    if n > 0:
        r = r * lcb**n
    return r


def _content_wrt(p: MultiPoly, v: int) -> MultiPoly:
    g = MultiPoly.zero(p.k)
    for coef in _coeffs_wrt(p, v).values():
        g = poly_gcd(g, coef)
        if g.is_constant and not g.is_zero:
            break
    return g


def _gcd_univariate(a: MultiPoly, b: MultiPoly, v: int) -> MultiPoly:
    """Monic Euclid for inputs involving only variable v."""

    def dense(p: MultiPoly) -> list[Fraction]:
        out = [Fraction(0)] * (p.degree_in(v) + 1)
        for mono, coef in p.terms.items():
            out[mono[v]] = Fraction(coef)
        return out

    fa, fb = dense(a), dense(b)
    while fb:
        lead = fb[-1]
        fb = [c / lead for c in fb]
        # remainder of fa by monic fb
        fa = fa[:]
        while len(fa) >= len(fb):
            factor = fa[-1]
            if factor:
                off = len(fa) - len(fb)
                for i, c in enumerate(fb):
                    fa[off + i] -= factor * c
            fa.pop()
        while fa and not fa[-1]:
            fa.pop()
        fa, fb = fb, fa
    mono = [0] * a.k
    terms = {}
    for e, c in enumerate(fa):
        if c:
            mono[v] = e
            terms[tuple(mono)] = c
    return MultiPoly._raw(a.k, terms).primitive()


def _poly_height(p: MultiPoly) -> int:
    h = 0
    for c in p.terms.values():
        a = abs(c if type(c) is int else c.numerator)
        if a > h:
            h = a
    return h


def _eval_var(p: MultiPoly, v: int, xi: int) -> MultiPoly:
    """Substitute the integer xi for variable v."""
    powers = [1] * (p.degree_in(v) + 1)
    for e in range(1, len(powers)):
        powers[e] = powers[e - 1] * xi
    out: dict[Monomial, Fraction] = {}
    for mono, c in p.terms.items():
        e = mono[v]
        if e:
            m = list(mono)
            m[v] = 0
            key = tuple(m)
            c = c * powers[e]
        else:
            key = mono
        s = out.get(key, 0) + c
        if s:
            out[key] = s
        else:
            out.pop(key, None)
    return MultiPoly._raw(p.k, out)


def _interpolate_var(g: MultiPoly, v: int, xi: int) -> MultiPoly:
    """Invert _eval_var: read balanced base-xi digits off the coefficients."""
    terms: dict[Monomial, Fraction] = {}
    half = xi // 2
    e = 0
    current = {m: c for m, c in g.terms.items()}
    while current:
        nxt = {}
        for mono, c in current.items():
            digit = c % xi
            if digit > half:
                digit -= xi
            if digit:
                m = list(mono)
                m[v] = e
                terms[tuple(m)] = digit
            rest = (c - digit) // xi
            if rest:
                nxt[mono] = rest
        current = nxt
        e += 1
    return MultiPoly._raw(g.k, terms)


def _int_content(p: MultiPoly) -> int:
    g = 0
    for c in p.terms.values():
        g = math.gcd(g, abs(c if type(c) is int else c.numerator))
    return g


def _heugcd(a: MultiPoly, b: MultiPoly) -> MultiPoly | None:
    """Heuristic gcd by evaluation at a large integer, balanced-digit
    reconstruction, and verification by exact division.

    Inputs must be nonzero with integer coefficients; the result includes
    the integer content gcd.  Returns None when six attempts fail (callers
    fall back to the remainder-sequence route)."""
    ca, cb = _int_content(a), _int_content(b)
    c = math.gcd(ca, cb)
    if ca != 1:
        a = a.scale(Fraction(1, ca))
    if cb != 1:
        b = b.scale(Fraction(1, cb))
    used = _vars_present(a) | _vars_present(b)
    if not used:
        return MultiPoly.const(a.k, c)
    v = min(used)
    xi = 2 * min(_poly_height(a), _poly_height(b)) + 2
    for _ in range(6):
        ga = _eval_var(a, v, xi)
        gb = _eval_var(b, v, xi)
        if not (ga.is_zero or gb.is_zero):
            h = _heugcd(ga, gb)
            if h is not None:
                cand = _interpolate_var(h, v, xi).primitive()
                if not cand.is_zero and cand.divides(a) and cand.divides(b):
                    return cand if c == 1 else cand.scale(c)
        xi = xi * 73794 // 27011 + 5
    return None


def _subresultant_gcd(a: MultiPoly, b: MultiPoly, v: int) -> MultiPoly:
    """Gcd of two polynomials that are primitive with respect to v, via the
    subresultant remainder sequence in v.  Result is primitive in v."""
    if a.degree_in(v) < b.degree_in(v):
        a, b = b, a
    one = MultiPoly.const(a.k, 1)
    g = h = one
    while True:
        delta = a.degree_in(v) - b.degree_in(v)
        r = _prem(a, b, v)
        if r.is_zero:
            break
        if r.degree_in(v) == 0:
            # nonzero constant in v: primitive inputs share no v-dependent factor
            return one
        a, b = b, r.exact_div(g * h**delta)
        g = _lead_wrt(a, v)
        if delta == 1:
            h = g
        elif delta > 1:
            h = (g**delta).exact_div(h ** (delta - 1))
    return b.exact_div(_content_wrt(b, v))


def poly_gcd(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """Greatest common divisor in Q[t1..tk], normalized to be
    integer-primitive with positive graded-lex leading coefficient.

    gcd(0, b) is the normalized b; gcd of two nonzero constants is 1.
    """
    if a.k != b.k:
        raise DimensionMismatchError(f"mixed variable counts: {a.k} vs {b.k}")
    if a.is_zero:
        return b.primitive()
    if b.is_zero:
        return a.primitive()
    if a.is_constant or b.is_constant:
        return MultiPoly.const(a.k, 1)
    if a.terms == b.terms:
        return a.primitive()
    if a.is_monomial or b.is_monomial:
        mono, other = (a, b) if a.is_monomial else (b, a)
        shared = next(iter(mono.terms))
        for m in other.terms:
            shared = tuple(min(x, y) for x, y in zip(shared, m))
        return MultiPoly.monomial(a.k, shared)
    # drop rational content up front: the result is primitive either way and
    # everything downstream then runs on integer coefficients
    a = a.primitive()
    b = b.primitive()
    heur = _heugcd(a, b)
    if heur is not None:
        return heur
    return _prs_gcd(a, b)


def _prs_gcd(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """Remainder-sequence gcd route: content/primitive-part recursion on the
    lowest variable present, subresultant sequence on the primitive parts.
    Inputs must be nonzero, non-constant, non-monomial."""
    used = _vars_present(a) | _vars_present(b)
    if len(used) == 1:
        return _gcd_univariate(a, b, used.pop())
    v = min(used)
    da, db = a.degree_in(v), b.degree_in(v)
    if db == 0:
        return poly_gcd(_content_wrt(a, v), b)
    if da == 0:
        return poly_gcd(a, _content_wrt(b, v))
    ca, cb = _content_wrt(a, v), _content_wrt(b, v)
    pa, pb = a.exact_div(ca), b.exact_div(cb)
    cg = poly_gcd(ca, cb)
    pg = _subresultant_gcd(pa, pb, v)
    return (cg * pg).primitive()


# ---------------------------------------------------------------------------
# Rational functions
# ---------------------------------------------------------------------------


class RatFunc:
    """Element of Q(t1..tk) in canonical form: reduced fraction with monic
    denominator.  Structural equality of canonical forms is field equality."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: MultiPoly, den: MultiPoly | None = None):
        if den is None:
            den = MultiPoly.const(num.k, 1)
        if num.k != den.k:
            raise DimensionMismatchError(f"mixed variable counts: {num.k} vs {den.k}")
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if num.is_zero:
            num = MultiPoly.zero(num.k)
            den = MultiPoly.const(num.k, 1)
        elif den.is_constant:
            num = num.scale(1 / den.constant_value())
            den = MultiPoly.const(num.k, 1)
        else:
            g = poly_gcd(num, den)
            if not (g.is_constant and g.constant_value() == 1):
                num = num.exact_div(g)
                den = den.exact_div(g)
            if den.is_constant:
                num = num.scale(1 / den.constant_value())
                den = MultiPoly.const(num.k, 1)
            else:
                _, lead = den.leading_term()
                if lead != 1:
                    inv = Fraction(1) / lead
                    num = num.scale(inv)
                    den = den.scale(inv)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    @classmethod
    def _raw(cls, num: MultiPoly, den: MultiPoly) -> "RatFunc":
        """Internal constructor for pairs already in canonical form."""
        self = object.__new__(cls)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "_hash", None)
        return self

    # -- constructors -----------------------------------------------------

    @classmethod
    def const(cls, k: int, value) -> "RatFunc":
        return cls._raw(MultiPoly.const(k, value), MultiPoly.const(k, 1))

    @classmethod
    def zero(cls, k: int) -> "RatFunc":
        return cls._raw(MultiPoly.zero(k), MultiPoly.const(k, 1))

    @classmethod
    def one(cls, k: int) -> "RatFunc":
        return cls.const(k, 1)

    @classmethod
    def variable(cls, k: int, index: int) -> "RatFunc":
        return cls._raw(MultiPoly.variable(k, index), MultiPoly.const(k, 1))

    @classmethod
    def from_poly(cls, p: MultiPoly) -> "RatFunc":
        return cls._raw(p, MultiPoly.const(p.k, 1))

    # -- queries -----------------------------------------------------------

    @property
    def k(self) -> int:
        return self.num.k

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.den.is_constant

    @property
    def is_constant(self) -> bool:
        return self.num.is_constant and self.den.is_constant

    def constant_value(self) -> Fraction:
        if not self.is_constant:
            raise ValueError("not a constant")
        return self.num.constant_value()

    # -- field operations ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return RatFunc.const(self.k, other)
        if isinstance(other, MultiPoly):
            return RatFunc.from_poly(other)
        if isinstance(other, RatFunc):
            if other.k != self.k:
                raise DimensionMismatchError(
                    f"mixed variable counts: {self.k} vs {other.k}"
                )
            return other
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.den.terms == other.den.terms:
            s = self.num + other.num
            if self.den.is_constant:
                return RatFunc._raw(s, self.den)
            return RatFunc(s, self.den)
        if self.den.is_constant:
            # gcd(n1*d2 + n2, d2) = gcd(n2, d2) = 1, so the sum is canonical
            return RatFunc._raw(self.num * other.den + other.num, other.den)
        if other.den.is_constant:
            return RatFunc._raw(other.num * self.den + self.num, self.den)
        # reduce via the denominator gcd: with g = gcd(d1, d2) and
        # t = n1*(d2/g) + n2*(d1/g), the only factors left to cancel out of
        # t / (d1*(d2/g)) divide g, so one small gcd finishes the job
        g = poly_gcd(self.den, other.den)
        if g.is_constant:
            num = self.num * other.den + other.num * self.den
            if num.is_zero:
                return RatFunc.zero(self.k)
            return RatFunc._raw(num, self.den * other.den)
        d2r = other.den.exact_div(g)
        t = self.num * d2r + other.num * self.den.exact_div(g)
        if t.is_zero:
            return RatFunc.zero(self.k)
        g2 = poly_gcd(t, g)
        if g2.is_constant:
            num = t
            den = self.den * d2r
        else:
            num = t.exact_div(g2)
            den = self.den.exact_div(g2) * d2r
        _, lead = den.leading_term()
        if lead != 1:
            inv = Fraction(1) / lead
            num = num.scale(inv)
            den = den.scale(inv)
        return RatFunc._raw(num, den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return RatFunc.zero(self.k)
            return RatFunc._raw(self.num.scale(other), self.den)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return RatFunc.zero(self.k)
        if self.den.is_constant and other.den.is_constant:
            return RatFunc._raw(self.num * other.num, self.den)
        # cross-cancel before multiplying to keep the gcd calls small
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        n1 = self.num if g1 == 1 else self.num.exact_div(g1)
        d2 = other.den if g1 == 1 else other.den.exact_div(g1)
        n2 = other.num if g2 == 1 else other.num.exact_div(g2)
        d1 = self.den if g2 == 1 else self.den.exact_div(g2)
        num = n1 * n2
        den = d1 * d2
        if den.is_constant:
            return RatFunc._raw(num.scale(1 / den.constant_value()), MultiPoly.const(self.k, 1))
        _, lead = den.leading_term()
        if lead != 1:
            inv = Fraction(1) / lead
            num = num.scale(inv)
            den = den.scale(inv)
        return RatFunc._raw(num, den)

    __rmul__ = __mul__

    def reciprocal(self) -> "RatFunc":
        if self.is_zero:
            raise ZeroDivisionError("reciprocal of zero")
        num, den = self.den, self.num
        _, lead = den.leading_term()
        if lead != 1:
            inv = Fraction(1) / lead
            num = num.scale(inv)
            den = den.scale(inv)
        return RatFunc._raw(num, den)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.reciprocal()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise ValueError("power must be an integer")
        if n < 0:
            return self.reciprocal() ** (-n)
        if n == 0:
            return RatFunc.one(self.k)
        # num and den stay coprime under powers, den stays monic
        return RatFunc._raw(self.num**n, self.den**n)

    # -- calculus and evaluation --------------------------------------------

    def partial(self, var: int) -> "RatFunc":
        """Partial derivative (quotient rule in canonical form).

        Uses (n/d)' = (n'(d/g) - n(d'/g)) / (d * d/g) with g = gcd(d, d'),
        which keeps denominator growth linear under iterated derivatives
        instead of squaring it before the gcd pass."""
        if self.den.is_constant:
            return RatFunc._raw(self.num.partial(var), self.den)
        dnum = self.num.partial(var)
        dden = self.den.partial(var)
        if dden.is_zero:
            return RatFunc(dnum, self.den)
        g = poly_gcd(self.den, dden)
        if g.is_constant:
            num = dnum * self.den - self.num * dden
            return RatFunc(num, self.den * self.den)
        dg = self.den.exact_div(g)
        num = dnum * dg - self.num * dden.exact_div(g)
        return RatFunc(num, self.den * dg)

    def __call__(self, point: Sequence) -> Fraction:
        dv = self.den(point)
        if not dv:
            raise PoleError(f"denominator vanishes at {tuple(point)}")
        return self.num(point) / dv

    # -- comparison, hashing, printing ---------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.den.is_constant and self.num == other
        if isinstance(other, MultiPoly):
            return self.den.is_constant and self.num == other
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.num, self.den))
            object.__setattr__(self, "_hash", h)
        return h

    def __bool__(self):
        return not self.is_zero

    def __str__(self):
        if self.den.is_constant:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RatFunc(k={self.k}, {str(self)!r})"


# ---------------------------------------------------------------------------
# Module-level operation surface
# ---------------------------------------------------------------------------


def ratfunc_normalize(num: MultiPoly, den: MultiPoly) -> RatFunc:
    """Canonical representative of num/den in Q(t1..tk).

    Removes the polynomial gcd and makes the denominator monic under the
    graded-lex order; idempotent.  Raises ZeroDivisionError for a zero
    denominator.
    """
    return RatFunc(num, den)


def evaluate(f: RatFunc, point: Sequence) -> Fraction:
    """Exact value of f at a rational point; raises PoleError when the
    (canonical) denominator vanishes there."""
    return f(point)


# ---------------------------------------------------------------------------
# GF(2)[x]
# ---------------------------------------------------------------------------


class GF2Poly:
    """Univariate polynomial over the field with two elements.

    Stored as an int bit mask: bit i is the coefficient of x^i.  The zero
    polynomial has degree -1.
    """

    __slots__ = ("bits",)

    def __init__(self, bits: int = 0):
        if bits < 0:
            raise ValueError("bit mask must be nonnegative")
        object.__setattr__(self, "bits", bits)

    def __setattr__(self, name, value):
        raise AttributeError("GF2Poly is immutable")

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int]) -> "GF2Poly":
        bits = 0
        for i, c in enumerate(coeffs):
            if c & 1:
                bits |= 1 << i
        return cls(bits)

    @classmethod
    def monomial(cls, degree: int) -> "GF2Poly":
        return cls(1 << degree)

    @classmethod
    def zero(cls) -> "GF2Poly":
        return cls(0)

    @classmethod
    def one(cls) -> "GF2Poly":
        return cls(1)

    @classmethod
    def x(cls) -> "GF2Poly":
        return cls(2)

    @classmethod
    def all_up_to_degree(cls, d: int) -> Iterator["GF2Poly"]:
        """Every polynomial of degree at most d (including zero)."""
        for bits in range(1 << (d + 1)):
            yield cls(bits)

    @property
    def degree(self) -> int:
        return self.bits.bit_length() - 1

    @property
    def is_zero(self) -> bool:
        return self.bits == 0

    @property
    def coefficients(self) -> tuple[int, ...]:
        """Coefficients lowest degree first, with no trailing zero."""
        if not self.bits:
            return ()
        return tuple((self.bits >> i) & 1 for i in range(self.bits.bit_length()))

    def coeff(self, i: int) -> int:
        return (self.bits >> i) & 1

    def __add__(self, other):
        if not isinstance(other, GF2Poly):
            return NotImplemented
        return GF2Poly(self.bits ^ other.bits)

    __sub__ = __add__  # characteristic 2

    def __mul__(self, other):
        if not isinstance(other, GF2Poly):
            return NotImplemented
        a, b = self.bits, other.bits
        out = 0
        while a:
            low = a & -a
            out ^= b << (low.bit_length() - 1)
            a ^= low
        return GF2Poly(out)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = GF2Poly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def formal_derivative(self) -> "GF2Poly":
        """Termwise derivative: x^i -> (i mod 2) x^(i-1)."""
        out = 0
        bits = self.bits >> 1
        i = 0
        while bits:
            if bits & 1 and i % 2 == 0:
                out |= 1 << i
            bits >>= 1
            i += 1
        return GF2Poly(out)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.bits == other and other in (0, 1)
        if not isinstance(other, GF2Poly):
            return NotImplemented
        return self.bits == other.bits

    def __hash__(self):
        return hash(("GF2Poly", self.bits))

    def __bool__(self):
        return self.bits != 0

    def __str__(self):
        if not self.bits:
            return "0"
        parts = []
        for i in range(self.bits.bit_length() - 1, -1, -1):
            if (self.bits >> i) & 1:
                parts.append("1" if i == 0 else ("x" if i == 1 else f"x^{i}"))
        return " + ".join(parts)

    def __repr__(self):
        return f"GF2Poly({str(self)!r})"
