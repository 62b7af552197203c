import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import basic
from quasiline.coalg_core import Functional
from quasiline.cyclotomic import field
from quasiline.dqb import DqbMorphism, LinearMap
from quasiline.group_dqb import cyclic, cyclic_dqb, dicyclic_dqb, dicyclic_element
from quasiline.qyd import (QuasiYDDatum, QydMorphism, braiding, chi_from_table, chi_power_check,
                           datum_exponents, datum_for_cyclic, enumerate_data, group_datum_check,
                           identity_qyd_morphism, is_last_two_symmetric, omega_op, one_dim_module,
                           pullback_datum, trivial_module, verify_datum, verify_yd_module, yd_tensor)


@st.composite
def cyclic_tables(draw):
    n = draw(st.integers(2, 4))
    w = draw(st.integers(0, n - 1))
    D = cyclic_dqb(n, w)
    F = D.F
    vals = [F.zero] + F.roots_of_unity(n * n)
    g = draw(st.integers(0, n - 1))
    table = [F.one] + [vals[draw(st.integers(0, len(vals) - 1))] for _ in range(n - 1)]
    return D, g, table


@settings(max_examples=80, deadline=None)
@given(cyclic_tables())
def test_datum_iff_one_dim_module(t):
    D, g, table = t
    X = QuasiYDDatum(D, g, chi_from_table(D, table), check=False)
    assert verify_datum(X).ok == verify_datum(X, via_module=True).ok


@settings(max_examples=40, deadline=None)
@given(cyclic_tables())
def test_group_criteria_agree_with_datum_check(t):
    D, g, table = t
    G = cyclic(D.dim)
    X = QuasiYDDatum(D, g, chi_from_table(D, table), check=False)
    assert group_datum_check(D, G.table, g, X.chi).ok == verify_datum(X).ok


def test_datum_on_bosonization_both_routes():
    from quasiline.bosonization import chi_B_formula

    _, R, B = basic(2)
    X = QuasiYDDatum(B.B, B.index(0, 1), chi_B_formula(B, 2, 1), check=False)
    assert verify_datum(X).ok and verify_datum(X, via_module=True).ok
    bad = QuasiYDDatum(B.B, B.index(0, 1), chi_B_formula(B, 2, 0), check=False)
    assert not verify_datum(bad).ok and not verify_datum(bad, via_module=True).ok


@pytest.mark.parametrize("n", [2, 3, 4])
def test_enumerate_data(n):
    for w in range(n):
        data = enumerate_data(n, w)
        assert len(data) == n * n
        assert len({datum_exponents(X) for X in data}) == n * n
        assert all(verify_datum(X).ok for X in data)


def test_datum_for_cyclic_rejects_wrong_chi():
    F = field(9)
    with pytest.raises(ValueError):
        datum_for_cyclic(3, 1, 1, F.one)
    assert datum_for_cyclic(3, 1, 1, F.root(1)).q == F.root(1)


def test_tensor_of_modules_is_yd():
    X = datum_for_cyclic(3, 1, 1, field(9).root(1))
    Y = datum_for_cyclic(3, 1, 2, field(9).root(2))
    V = one_dim_module(X.D, X.g, X.chi)
    W = one_dim_module(Y.D, Y.g, Y.chi)
    VW = yd_tensor(V, W)
    assert verify_yd_module(VW).ok
    assert verify_yd_module(yd_tensor(VW, V)).ok


def test_braiding_conventions():
    X = datum_for_cyclic(2, 1, 1, field(4).root(1))
    V = one_dim_module(X.D, X.g, X.chi)
    k = trivial_module(X.D)
    assert braiding(k, V) == [{0: X.F.one}]
    assert braiding(V, k) == [{0: X.F.one}]
    assert braiding(V, V) == [{0: X.q}]


def test_omega_with_unit_ends_is_the_braiding():
    X = datum_for_cyclic(3, 1, 1, field(9).root(1))
    V = one_dim_module(X.D, X.g, X.chi)
    VV = yd_tensor(V, V)
    k = trivial_module(X.D)
    assert omega_op(k, V, VV, k) == braiding(V, VV)
    assert omega_op(k, VV, V, k) == braiding(VV, V)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_chi_power_formula(n):
    for w in range(n):
        D = cyclic_dqb(n, w)
        sym = is_last_two_symmetric(D)
        for X in enumerate_data(n, w):
            for t in range(1, 2 * n):
                val = X.chi(D.H.power_index(1, t))
                assert chi_power_check(X, 1, t) == val
                if sym:
                    assert chi_power_check(X, 1, t, "short") == val
                assert chi_power_check(X, X.g, t, "g") == X.chi(D.H.power_index(X.g, t))


def test_dicyclic_pullbacks():
    D, pi = dicyclic_dqb(3)
    X = next(Y for Y in enumerate_data(4, 1) if Y.g == 2)
    x2 = dicyclic_element(3, 0, 2)
    Y, rep = pullback_datum(pi, X, x2)
    assert rep.ok and Y is not None and verify_datum(Y).ok
    y = dicyclic_element(3, 1, 0)
    Z, rep = pullback_datum(pi, X, y)
    assert Z is None and not rep.ok


def test_qyd_morphisms():
    X = datum_for_cyclic(2, 1, 1, field(4).root(1))
    assert identity_qyd_morphism(X).verify().ok
    Y = datum_for_cyclic(2, 1, 1, field(4).root(3))
    f = QydMorphism(X, Y, DqbMorphism(X.D, Y.D, LinearMap.identity(X.H), "id"))
    rep = f.verify()
    assert not rep.ok
    assert any(c.name == "xi phi = chi" and c.counterexample == ("c",) for c in rep.failures())
