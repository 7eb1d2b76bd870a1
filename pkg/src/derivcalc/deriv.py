"""Derivations on Q(t1..tk) and their canonical differential-operator forms.

A derivation is determined by the images of the generators: d = sum_i g_i
d/dt_i with g_i = d(t_i).  Formal compositions of derivations (operator
words) are normalized to the canonical shape

    sum over multi-indices a of  c_a * d^a,     c_a in Q(t1..tk),

by repeatedly commuting a partial derivative past a coefficient:
d_i (c . ) = (d_i c) + c d_i.  The degree of a canonical operator is the
largest |a| carrying a nonzero coefficient; the zero operator has degree -1.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .exactnum import DimensionMismatchError, MultiPoly, Monomial, RatFunc, grlex_key


def _check_same_k(a, b):
    if a.k != b.k:
        raise DimensionMismatchError(f"mixed variable counts: {a.k} vs {b.k}")


def _as_ratfunc(k: int, value) -> RatFunc:
    if isinstance(value, RatFunc):
        if value.k != k:
            raise DimensionMismatchError(f"mixed variable counts: {k} vs {value.k}")
        return value
    if isinstance(value, MultiPoly):
        if value.k != k:
            raise DimensionMismatchError(f"mixed variable counts: {k} vs {value.k}")
        return RatFunc.from_poly(value)
    return RatFunc.const(k, value)


class Derivation:
    """Derivation on Q(t1..tk), given extensionally by generator images."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[RatFunc | MultiPoly | int]):
        images = tuple(images)
        if not images:
            raise ValueError("a derivation needs at least one generator image")
        k = len(images)
        object.__setattr__(self, "images", tuple(_as_ratfunc(k, g) for g in images))

    def __setattr__(self, name, value):
        raise AttributeError("Derivation is immutable")

    @classmethod
    def coordinate(cls, k: int, index: int) -> "Derivation":
        """The coordinate derivation d/dt_index."""
        return cls(
            [RatFunc.one(k) if i == index else RatFunc.zero(k) for i in range(k)]
        )

    @classmethod
    def zero(cls, k: int) -> "Derivation":
        return cls([RatFunc.zero(k)] * k)

    @property
    def k(self) -> int:
        return len(self.images)

    @property
    def is_zero(self) -> bool:
        return all(g.is_zero for g in self.images)

    def __call__(self, f: RatFunc) -> RatFunc:
        return apply_derivation(self, f)

    def as_diffop(self) -> "DiffOp":
        """The same map written as a first-order canonical operator."""
        k = self.k
        coeffs = {}
        for i, g in enumerate(self.images):
            if not g.is_zero:
                alpha = tuple(1 if j == i else 0 for j in range(k))
                coeffs[alpha] = g
        return DiffOp(k, coeffs)

    def __eq__(self, other):
        if not isinstance(other, Derivation):
            return NotImplemented
        return self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __str__(self):
        return "; ".join(f"t{i + 1} -> {g}" for i, g in enumerate(self.images))

    def __repr__(self):
        return f"Derivation({str(self)!r})"


class DiffOp:
    """Canonical differential operator: finite sum of c_a * d^a."""

    __slots__ = ("k", "coeffs", "_hash")

    def __init__(self, k: int, coeffs: Mapping[Monomial, RatFunc] | None = None):
        clean: dict[Monomial, RatFunc] = {}
        if coeffs:
            for alpha, c in coeffs.items():
                alpha = tuple(alpha)
                if len(alpha) != k or any(e < 0 for e in alpha):
                    raise ValueError(f"bad multi-index {alpha} for k={k}")
                c = _as_ratfunc(k, c)
                if not c.is_zero:
                    clean[alpha] = c
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "coeffs", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("DiffOp is immutable")

    @classmethod
    def _raw(cls, k: int, coeffs: dict) -> "DiffOp":
        self = object.__new__(cls)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "_hash", None)
        return self

    @classmethod
    def zero(cls, k: int) -> "DiffOp":
        return cls._raw(k, {})

    @classmethod
    def identity(cls, k: int, coef=1) -> "DiffOp":
        c = _as_ratfunc(k, coef)
        return cls._raw(k, {(0,) * k: c} if not c.is_zero else {})

    @classmethod
    def partial(cls, k: int, index: int) -> "DiffOp":
        """The operator d/dt_index."""
        alpha = tuple(1 if i == index else 0 for i in range(k))
        return cls._raw(k, {alpha: RatFunc.one(k)})

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        if not self.coeffs:
            return -1
        return max(sum(a) for a in self.coeffs)

    @property
    def in_o0(self) -> bool:
        """True when the identity component is absent, i.e. the operator
        annihilates constants."""
        return (0,) * self.k not in self.coeffs

    def sorted_coeffs(self) -> list[tuple[Monomial, RatFunc]]:
        return sorted(self.coeffs.items(), key=lambda kv: grlex_key(kv[0]))

    # -- linear structure ----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, DiffOp):
            return NotImplemented
        _check_same_k(self, other)
        out = dict(self.coeffs)
        for alpha, c in other.coeffs.items():
            s = out.get(alpha)
            s = c if s is None else s + c
            if s.is_zero:
                out.pop(alpha, None)
            else:
                out[alpha] = s
        return DiffOp._raw(self.k, out)

    def __neg__(self):
        return DiffOp._raw(self.k, {a: -c for a, c in self.coeffs.items()})

    def __sub__(self, other):
        if not isinstance(other, DiffOp):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "DiffOp":
        c = _as_ratfunc(self.k, c)
        if c.is_zero:
            return DiffOp.zero(self.k)
        return DiffOp._raw(self.k, {a: co * c for a, co in self.coeffs.items()})

    # -- action and composition ----------------------------------------------

    def __call__(self, f: RatFunc) -> RatFunc:
        return apply_diffop(self, f)

    def compose(self, other: "DiffOp") -> "DiffOp":
        return compose(self, other)

    def __eq__(self, other):
        if not isinstance(other, DiffOp):
            return NotImplemented
        return self.k == other.k and self.coeffs == other.coeffs

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.k, frozenset(self.coeffs.items())))
            object.__setattr__(self, "_hash", h)
        return h

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for alpha, c in self.sorted_coeffs():
            if sum(alpha) == 0:
                parts.append(f"({c})")
            elif c == 1:
                parts.append(f"d[{','.join(map(str, alpha))}]")
            else:
                parts.append(f"({c}) * d[{','.join(map(str, alpha))}]")
        return " + ".join(parts)

    def __repr__(self):
        return f"DiffOp(k={self.k}, {str(self)!r})"


class OpWord:
    """Formal sum of scaled composition words of derivations.

    A term (c, (d1, ..., dm)) denotes the map x -> c * d1(d2(... dm(x))).
    The empty word is the identity map, so (c, ()) denotes x -> c*x.
    """

    __slots__ = ("k", "words")

    def __init__(self, k: int, words: Iterable[tuple] = ()):
        terms = []
        for coef, word in words:
            coef = _as_ratfunc(k, coef)
            word = tuple(word)
            for d in word:
                if not isinstance(d, Derivation):
                    raise TypeError("word entries must be Derivation values")
                if d.k != k:
                    raise DimensionMismatchError(
                        f"mixed variable counts: {k} vs {d.k}"
                    )
            if not coef.is_zero:
                terms.append((coef, word))
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "words", tuple(terms))

    def __setattr__(self, name, value):
        raise AttributeError("OpWord is immutable")

    @classmethod
    def composition(cls, derivations: Sequence[Derivation], coef=1) -> "OpWord":
        if not derivations:
            raise ValueError("composition needs at least one derivation")
        k = derivations[0].k
        return cls(k, [(coef, tuple(derivations))])

    def __add__(self, other):
        if not isinstance(other, OpWord):
            return NotImplemented
        _check_same_k(self, other)
        return OpWord(self.k, list(self.words) + list(other.words))

    def apply(self, f: RatFunc) -> RatFunc:
        """Apply directly, word by word, without normalizing first."""
        total = RatFunc.zero(self.k)
        for coef, word in self.words:
            g = f
            for d in reversed(word):
                g = apply_derivation(d, g)
            total = total + coef * g
        return total

    __call__ = apply

    def __str__(self):
        if not self.words:
            return "0"
        parts = []
        for coef, word in self.words:
            body = " o ".join(f"({d})" for d in word) if word else "(identity)"
            parts.append(body if coef == 1 else f"({coef}) * {body}")
        return " + ".join(parts)


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------


def apply_derivation(d: Derivation, f: RatFunc) -> RatFunc:
    """d(f) = sum_i d(t_i) * df/dt_i; additive and Leibniz by construction."""
    _check_same_k(d, f)
    total = RatFunc.zero(f.k)
    for i, g in enumerate(d.images):
        if not g.is_zero:
            total = total + g * f.partial(i)
    return total


def _materialize_partial(cache: dict, alpha: Monomial) -> RatFunc:
    """Iterated partial derivative of cache[(0,..,0)], memoized per call."""
    got = cache.get(alpha)
    if got is not None:
        return got
    i = next(j for j, e in enumerate(alpha) if e)
    prev = list(alpha)
    prev[i] -= 1
    base = _materialize_partial(cache, tuple(prev))
    value = base.partial(i)
    cache[alpha] = value
    return value


def apply_diffop(E: DiffOp, f: RatFunc) -> RatFunc:
    """sum_a c_a * d^a f, computed termwise with shared derivative chains."""
    _check_same_k(E, f)
    if not E.coeffs:
        return RatFunc.zero(f.k)
    cache: dict[Monomial, RatFunc] = {(0,) * E.k: f}
    total = RatFunc.zero(f.k)
    for alpha, c in E.coeffs.items():
        total = total + c * _materialize_partial(cache, alpha)
    return total


def _compose_partial(index: int, E: DiffOp) -> DiffOp:
    """d_index composed with E: commute the derivative past each coefficient,
    d_i (c d^b) = (d_i c) d^b + c d^(b + e_i)."""
    out: dict[Monomial, RatFunc] = {}

    def accumulate(alpha, c):
        s = out.get(alpha)
        s = c if s is None else s + c
        if s.is_zero:
            out.pop(alpha, None)
        else:
            out[alpha] = s

    for beta, c in E.coeffs.items():
        dc = c.partial(index)
        if not dc.is_zero:
            accumulate(beta, dc)
        up = list(beta)
        up[index] += 1
        accumulate(tuple(up), c)
    return DiffOp._raw(E.k, out)


def compose(E1: DiffOp, E2: DiffOp) -> DiffOp:
    """Canonical form of the composed map E1 after E2.

    Over Q(t1..tk) the degree of a composition of nonzero operators is the
    sum of the degrees (top-order parts multiply in an integral domain).
    """
    _check_same_k(E1, E2)
    result = DiffOp.zero(E1.k)
    for alpha, c in E1.coeffs.items():
        acc = E2
        for i, e in enumerate(alpha):
            for _ in range(e):
                acc = _compose_partial(i, acc)
        result = result + acc.scale(c)
    return result


def normalize(w: OpWord) -> DiffOp:
    """Canonical operator equal to the word as a map on Q(t1..tk)."""
    result = DiffOp.zero(w.k)
    for coef, word in w.words:
        acc = DiffOp.identity(w.k)
        for d in reversed(word):
            acc = compose(d.as_diffop(), acc)
        result = result + acc.scale(coef)
    return result


def degree(E: DiffOp) -> int:
    """Largest |a| with a nonzero coefficient; -1 for the zero operator."""
    return E.degree
