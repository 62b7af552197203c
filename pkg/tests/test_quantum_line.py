import pytest

from quasiline.cyclotomic import field, mult_order
from quasiline.dqb import DqbMorphism, LinearMap, check_morphism
from quasiline.qyd import QydMorphism, datum_for_cyclic, enumerate_data, identity_qyd_morphism
from quasiline.quantum_line import (antipode, beta_coeff, beta_identity, build_quantum_line, chi_n,
                                    chi_n_closed, chi_n_grouplike, chi_n_iterative, ching, kassel_sum,
                                    quotient_check, transport, truncated_tensor_algebra, verify_antipode,
                                    verify_tensor_algebra, verify_yd_bialgebra)


def all_data(max_n):
    for n in range(2, max_n + 1):
        for w in range(n):
            yield from enumerate_data(n, w)


@pytest.mark.parametrize("X", list(all_data(3)), ids=lambda X: X.name)
def test_every_small_quantum_line(X):
    R = build_quantum_line(X)
    assert R.dim == X.N == mult_order(X.q)
    assert verify_yd_bialgebra(R).ok
    assert verify_antipode(R).ok
    for k in range(R.N):
        assert kassel_sum(R, k) == (1 if k == 0 else 0)


def test_chi_n_forms_on_all_data():
    for X in all_data(4):
        for k in range(X.N + 2):
            a = chi_n_iterative(X, k)
            assert a == chi_n_closed(X, k)
            for h in X.H.grouplike_basis():
                assert a(h) == chi_n_grouplike(X, k, h)
            assert a(X.g) == ching(X, k)
            assert chi_n(X, k) == a


def test_trivial_q_collapses_to_the_unit():
    X = datum_for_cyclic(2, 0, 0, field(4).one)
    R = build_quantum_line(X)
    assert R.N == 1 and R.dim == 1 and verify_yd_bialgebra(R).ok


def test_p_squared_line():
    # q of order p^2 over (kC_p, omega_zeta): dimension p^2
    p = 3
    F = field(9)
    X = datum_for_cyclic(p, 1, 1, F.root(1))
    R = build_quantum_line(X)
    assert R.N == 9 and verify_yd_bialgebra(R).ok and verify_antipode(R).ok


def test_antipode_degree_two():
    X = datum_for_cyclic(2, 1, 1, field(4).root(1))
    S = antipode(build_quantum_line(X))
    assert S.columns[2] == {2: X.q}
    assert S.columns[1] == {1: -X.F.one}


def test_wrong_antipode_is_caught():
    X = datum_for_cyclic(2, 1, 1, field(4).root(1))
    R = build_quantum_line(X)
    S = LinearMap(R, R, [{k: X.F.one} for k in range(R.N)])
    assert not verify_antipode(R, S).ok


@pytest.mark.parametrize("X", [datum_for_cyclic(2, 1, 1, field(4).root(1)),
                               datum_for_cyclic(3, 2, 1, field(9).root(2)),
                               datum_for_cyclic(4, 1, 1, field(16).root(1))], ids=lambda X: X.name)
def test_beta_identity(X):
    for n in range(X.N + 3):
        for i in range(n + 1):
            assert beta_identity(X, i, n)
    assert beta_coeff(X, 0, 5) == 1


@pytest.mark.parametrize("X", [datum_for_cyclic(2, 1, 1, field(4).root(1)),
                               datum_for_cyclic(2, 1, 1, field(4).root(3)),
                               datum_for_cyclic(3, 1, 2, field(9).root(1) ** 5)], ids=lambda X: X.name)
def test_tensor_algebra_and_quotient(X):
    R = build_quantum_line(X)
    T = truncated_tensor_algebra(X, R.N + 3)
    assert verify_tensor_algebra(T).ok
    assert quotient_check(T, R).ok


def test_tensor_algebra_needs_degree_N():
    X = datum_for_cyclic(2, 1, 1, field(4).root(1))
    with pytest.raises(ValueError):
        truncated_tensor_algebra(X, 3)


def test_transport_identity_and_rejects_non_morphism():
    X = datum_for_cyclic(2, 1, 1, field(4).root(1))
    assert transport(identity_qyd_morphism(X)).ok
    Y = datum_for_cyclic(2, 1, 1, field(4).root(3))
    bogus = QydMorphism(X, Y, DqbMorphism(X.D, Y.D, LinearMap.identity(X.H), "id"))
    assert not transport(bogus, bosonizations=False).ok


def test_transport_along_projection():
    from quasiline.bosonization import phi_datum

    Y, base, phi = phi_datum(2)
    f = QydMorphism(Y, base, phi)
    assert f.verify().ok and check_morphism(phi).ok
    assert transport(f).ok
