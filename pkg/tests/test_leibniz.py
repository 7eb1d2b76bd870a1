"""Defect calculus: B(x, y), nested defects, order checks."""

from random import Random

import pytest

from derivcalc.exactnum import RatFunc
from derivcalc.deriv import DiffOp, OpWord, normalize
from derivcalc.leibniz import (
    MapTable,
    NotInO0Error,
    defect,
    nested_defect,
    order_exact,
    order_upper_check,
)
from derivcalc.sampling import (
    random_defect_tuple,
    random_derivation,
    random_diffop,
    random_ratfunc,
)

t = RatFunc.variable(1, 0)
D2 = DiffOp(1, {(2,): 1})  # second derivative


def test_defect_of_second_derivative():
    # (xy)'' - x''y - y''x = 2x'y', so B(t, t) = 2
    assert defect(D2, t, t) == 2


def test_derivations_have_zero_defect():
    rng = Random(17)
    for _ in range(10):
        dd = random_derivation(rng, 2)
        x = random_ratfunc(rng, 2)
        y = random_ratfunc(rng, 2)
        assert defect(dd, x, y).is_zero


def test_defect_at_one_vanishes_when_map_kills_one():
    # B(1, y) = -D(1) * y
    rng = Random(23)
    for _ in range(5):
        E = random_diffop(rng, 1, 2, in_o0=True)
        y = random_ratfunc(rng, 1)
        assert defect(E, RatFunc.one(1), y).is_zero


def test_nested_defect_examples():
    # two-fold defect of a second-order map vanishes
    assert nested_defect(D2, t, (t, t)).is_zero
    # one-fold defect of any derivation vanishes
    rng = Random(29)
    dd = random_derivation(rng, 1)
    x, y = random_ratfunc(rng, 1), random_ratfunc(rng, 1)
    assert nested_defect(dd, x, (y,)).is_zero
    # one-fold defect of the second derivative does not: order > 1 witness
    assert nested_defect(D2, t, (t,)) == 2


def test_nested_defect_requires_nesting_elements():
    with pytest.raises(ValueError):
        nested_defect(D2, t, ())


def test_defect_symmetry_and_biadditivity():
    rng = Random(37)
    for _ in range(8):
        E = random_diffop(rng, 2, rng.randint(1, 3), in_o0=True)
        x, x2, y = (random_ratfunc(rng, 2) for _ in range(3))
        assert defect(E, x, y) == defect(E, y, x)
        assert defect(E, x + x2, y) == defect(E, x, y) + defect(E, x2, y)


# ---------------------------------------------------------------------------
# order_upper_check
# ---------------------------------------------------------------------------


def samples1():
    return [RatFunc.one(1), t, t**2, t + 1]


def test_order_check_passes_at_true_order():
    res = order_upper_check(D2, 2, samples1())
    assert res.ok


def test_order_check_fails_below_true_order():
    res = order_upper_check(D2, 1, [t])
    assert not res.ok
    assert res.witness == (t, t)
    assert res.value == 2


def test_zero_map_has_order_zero():
    res = order_upper_check(DiffOp.zero(1), 0, samples1())
    assert res.ok


def test_order_check_rejects_non_additive_map():
    res = order_upper_check(lambda f: f * f, 1, [t, t + 1])
    assert not res.ok and res.reason == "not additive"


def test_order_check_rejects_map_not_killing_one():
    E = DiffOp.identity(1, 3) + D2
    res = order_upper_check(E, 2, samples1())
    assert not res.ok and "annihilate" in res.reason


def test_closedness_echo_on_restriction_tables():
    # the restriction of a degree-n operator to a finite set passes the
    # order-n check on that set
    rng = Random(41)
    for _ in range(5):
        n = rng.randint(1, 3)
        E = random_diffop(rng, 2, n, in_o0=True, den_style="one")
        elements = [random_ratfunc(rng, 2, den_style="one") for _ in range(3)]
        table = MapTable.tabulate(E, elements, 2)
        lookup = dict(table.entries)

        res = order_upper_check(E, n, [x for x, _ in table])
        assert res.ok
        # and the tabulated values really are E's values
        assert all(E(x) == y for x, y in lookup.items())


# ---------------------------------------------------------------------------
# order_exact
# ---------------------------------------------------------------------------


def test_order_exact_of_second_derivative():
    assert order_exact(D2) == 2
    # cross-check against the sampled route
    assert order_upper_check(D2, 2, samples1()).ok
    assert not order_upper_check(D2, 1, samples1()).ok


def test_order_exact_zero_map():
    assert order_exact(DiffOp.zero(1)) == 0


def test_order_exact_rejects_identity_component():
    with pytest.raises(NotInO0Error):
        order_exact(DiffOp.identity(1, 5))


def test_exact_order_of_compositions_small():
    rng = Random(43)
    for n in (1, 2, 3):
        ds = [random_derivation(rng, 2) for _ in range(n)]
        E = normalize(OpWord.composition(ds))
        assert order_exact(E) == n
        # n-fold defects vanish on random tuples
        for _ in range(3):
            tup = random_defect_tuple(rng, 2, n + 1)
            assert nested_defect(E, tup[0], tup[1:]).is_zero
        # an (n-1)-fold witness exists
        found = False
        for _ in range(50):
            if n == 1:
                x = random_defect_tuple(rng, 2, 1)[0]
                found = not E(x).is_zero
            else:
                tup = random_defect_tuple(rng, 2, n)
                found = not nested_defect(E, tup[0], tup[1:]).is_zero
            if found:
                break
        assert found


def test_general_operator_defect_laws():
    # any operator of exact degree n killing 1 has vanishing n-fold nested
    # defects, and some (n-1)-fold nesting refuses to vanish
    rng = Random(47)
    for n in (1, 2, 3):
        E = random_diffop(rng, 2, n, in_o0=True, exact_degree=True, den_style="monomial")
        for _ in range(3):
            tup = random_defect_tuple(rng, 2, n + 1)
            assert nested_defect(E, tup[0], tup[1:]).is_zero
        found = False
        for _ in range(50):
            if n == 1:
                found = not E(random_defect_tuple(rng, 2, 1)[0]).is_zero
            else:
                tup = random_defect_tuple(rng, 2, n)
                found = not nested_defect(E, tup[0], tup[1:]).is_zero
            if found:
                break
        assert found


def test_map_table_rejects_duplicates():
    with pytest.raises(ValueError):
        MapTable.from_pairs([(t, t), (t, t + 1)], 1)
