"""Product-rule defect calculus for additive maps on Q(t1..tk).

For a map D the defect B(x, y) = D(xy) - D(x)y - D(y)x measures the failure
of the product rule; D is a derivation exactly when B vanishes.  Nesting the
defect construction repeatedly drives down the "order" of a map: a canonical
operator of degree n that kills constants has every n-fold nested defect
identically zero, and the converse classification makes order computable
from the canonical form alone (see ``order_exact``).

Black-box maps can only be checked on finite data; ``order_upper_check``
therefore reports sound evidence ("consistent with order <= n on the given
samples"), not a proof.  Exact decisions are reserved for canonical
operators.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Sequence

from .exactnum import RatFunc
from .deriv import DiffOp

# Anything that maps field elements to field elements: a DiffOp, a
# Derivation, or a plain python callable.
PointMap = Callable[[RatFunc], RatFunc]


class NotInO0Error(ValueError):
    """The operator has an identity component, so it does not kill 1."""


@dataclass(frozen=True)
class MapTable:
    """Finite partial map on the field: pairs (element, value)."""

    entries: tuple[tuple[RatFunc, RatFunc], ...]
    k: int

    def __post_init__(self):
        seen = set()
        for x, y in self.entries:
            if x.k != self.k or y.k != self.k:
                raise ValueError("table entry over wrong variable count")
            if x in seen:
                raise ValueError(f"duplicate table element {x}")
            seen.add(x)

    @classmethod
    def from_pairs(cls, pairs, k: int) -> "MapTable":
        return cls(tuple((x, y) for x, y in pairs), k)

    @classmethod
    def tabulate(cls, D: PointMap, elements: Sequence[RatFunc], k: int) -> "MapTable":
        return cls(tuple((x, D(x)) for x in elements), k)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)


@dataclass(frozen=True)
class CheckResult:
    """Outcome of a sampled check; `witness` names the violating data."""

    ok: bool
    reason: str = ""
    witness: tuple | None = None
    value: RatFunc | None = None

    def __bool__(self):
        return self.ok


class _Memo:
    """Memoize a point map on exact arguments (safe: maps are pure)."""

    __slots__ = ("fn", "table")

    def __init__(self, fn: PointMap):
        self.fn = fn
        self.table: dict[RatFunc, RatFunc] = {}

    def __call__(self, x: RatFunc) -> RatFunc:
        got = self.table.get(x)
        if got is None:
            got = self.fn(x)
            self.table[x] = got
        return got


def defect(D: PointMap, x: RatFunc, y: RatFunc) -> RatFunc:
    """B(x, y) = D(xy) - D(x)y - D(y)x."""
    return D(x * y) - D(x) * y - D(y) * x


def nested_defect(D: PointMap, x: RatFunc, ys: Sequence[RatFunc]) -> RatFunc:
    """Iterated defect (((D_{y1})_{y2})...)_{ym}(x), where
    D_y(x) = D(xy) - y D(x) - x D(y).

    With m = 1 this is defect(D, x, y1).  A map of order at most n has every
    n-fold nesting identically zero.
    """
    if not ys:
        raise ValueError("need at least one nesting element")
    memo = D if isinstance(D, _Memo) else _Memo(D)

    def rec(z: RatFunc, depth: int) -> RatFunc:
        if depth == 0:
            return memo(z)
        y = ys[depth - 1]
        return rec(z * y, depth - 1) - y * rec(z, depth - 1) - z * rec(y, depth - 1)

    return rec(x, len(ys))


def order_upper_check(
    D: PointMap, n: int, samples: Sequence[RatFunc]
) -> CheckResult:
    """Consistency of "order of D is at most n" with the given samples.

    Checks additivity on all sample pairs, D(1) = 0, and vanishing of every
    n-fold nested defect built from sample tuples (for n = 0 this degenerates
    to D vanishing on the samples).  Passing is evidence on the given data,
    not a proof, for black-box maps.
    """
    if n < 0:
        raise ValueError("order bound must be nonnegative")
    if not samples:
        raise ValueError("need at least one sample")
    k = samples[0].k
    memo = _Memo(D)
    for x, y in product(samples, repeat=2):
        lhs = memo(x + y)
        rhs = memo(x) + memo(y)
        if lhs != rhs:
            return CheckResult(False, "not additive", (x, y), lhs - rhs)
    one = RatFunc.one(k)
    at_one = memo(one)
    if not at_one.is_zero:
        return CheckResult(False, "does not annihilate 1", (one,), at_one)
    if n == 0:
        for x in samples:
            v = memo(x)
            if not v.is_zero:
                return CheckResult(False, "nonzero value at order 0", (x,), v)
        return CheckResult(True, "consistent with order <= 0 on given data")
    for tup in product(samples, repeat=n + 1):
        v = nested_defect(memo, tup[0], tup[1:])
        if not v.is_zero:
            return CheckResult(False, f"{n}-fold nested defect nonzero", tup, v)
    return CheckResult(True, f"consistent with order <= {n} on given data")


def order_exact(E: DiffOp) -> int:
    """Exact derivation order of a canonical operator that kills constants.

    Equals the operator degree; the zero operator is the (unique) map of
    order 0.  Raises NotInO0Error when an identity component is present,
    since then E(1) != 0 and E is not a derivation of any order.
    """
    if not E.in_o0:
        raise NotInO0Error("operator has an identity component, E(1) != 0")
    d = E.degree
    return 0 if d < 0 else d
