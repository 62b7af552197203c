import pytest

from quasiline.dqb import check_morphism, verify_dqb
from quasiline.group_dqb import (coboundary_witness_check, cyclic, dicyclic, dicyclic_dqb, dicyclic_element,
                                 lem_go_count, omega_iverson_form, omega_q_form, omega_zeta, omegatrick_check,
                                 cyclic_dqb, quasi_hopf_antipode_check, residue)


@pytest.mark.parametrize("n", range(1, 7))
def test_three_forms_of_omega_agree(n):
    for i in range(n):
        om = omega_zeta(n, i)
        for a in range(n):
            for b in range(n):
                for d in range(n):
                    x = om(a, b, d)
                    assert x == omega_q_form(n, i, a, b, d) == omega_iverson_form(n, i, a, b, d)


def test_omega_zeta_is_zeta_valued():
    om = omega_zeta(3, 1)
    zeta = om.F.root(3)
    assert om(1, 1, 2) == zeta and om(2, 2, 2) == zeta ** 2 and om(1, 1, 1) == 1


def test_residue_convention():
    assert [residue(a, 3) for a in range(-3, 4)] == [0, 1, 2, 0, 1, 2, 0]


@pytest.mark.parametrize("p", [3, 5])
def test_dicyclic_group(p):
    G = dicyclic(p)
    assert G.order == 4 * p and G.check().ok
    x = dicyclic_element(p, 0, 1)
    y = dicyclic_element(p, 1, 0)
    assert G.power(x, 4) == G.identity and G.power(y, p) == G.identity
    assert G.mul(G.mul(x, y), G.inverse[x]) == G.inverse[y]
    # the center of Dic_p (p odd) is {1, x^2}
    assert sorted(G.center()) == sorted([G.identity, G.power(x, 2)])


def test_dicyclic_dqb_projection():
    D, pi = dicyclic_dqb(3)
    assert verify_dqb(D).ok and check_morphism(pi).ok


def test_witness_fails_for_wrong_gauge_index():
    # d^2 v_1 is not omega_{zeta^2} o phi^3
    from quasiline.dqb import coboundary
    from quasiline.group_dqb import pulled_back_cyclic, v_gauge

    D = pulled_back_cyclic(3, 2)
    assert coboundary(v_gauge(3, 1), D.H) != D.omega
    assert coboundary(v_gauge(3, 2), D.H) == D.omega
    assert coboundary_witness_check(3, 2).ok


@pytest.mark.parametrize("n", [2, 3, 4])
def test_antipode_beta(n):
    assert quasi_hopf_antipode_check(n, 0, "trivial").ok
    for i in range(1, n):
        assert not quasi_hopf_antipode_check(n, i, "trivial").ok
        assert quasi_hopf_antipode_check(n, i, "corrected").ok


def test_omegatrick_on_nontrivial_grouplike():
    # c^2 in kC_4 has its own power structure
    assert omegatrick_check(cyclic_dqb(4, 1), 2, 4).ok


@pytest.mark.parametrize("n", range(1, 7))
def test_lem_go(n):
    for a in range(3 * n * n):
        b, f = lem_go_count(n, a)
        assert b == f
