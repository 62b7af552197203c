import pytest

from conftest import basic
from quasiline.bosonization import (boson_datum_conditions, boson_iso_necessary_conditions, brute_force_boson_data,
                                    chi_B_formula, chi_j_value, classify_boson_data, count_classes,
                                    filtration_check, gauge_trivialize_A, piIdpi_check, pi_sigma_check,
                                    qydd_conditions, tensor_morphism, verify_bosonization)
from quasiline.cyclotomic import mult_order
from quasiline.dqb import check_morphism, identity_morphism, is_trivial_reassociator
from quasiline.qyd import QuasiYDDatum, verify_datum


@pytest.mark.parametrize("n", [2, 3])
def test_basic_bosonization_structure(n):
    X, R, B = basic(n)
    assert B.dim == n * R.N == n ** 3
    assert verify_bosonization(B).ok
    assert pi_sigma_check(B).ok and piIdpi_check(B).ok and filtration_check(B).ok
    assert not is_trivial_reassociator(B.B)[0]


def test_index_split_round_trip(basic2):
    _, R, B = basic2
    for i in range(B.dim):
        a, h = B.split(i)
        assert B.index(a, h) == i
    assert B.B.labels[B.index(1, 1)] == "x^[1]#c"


def test_x_is_skew_primitive(basic2):
    # Delta_B(x#1) = x#1 (x) 1#1 + 1#c (x) x#1 on the generator
    _, R, B = basic2
    x, one, c = B.index(1, 0), B.index(0, 0), B.index(0, 1)
    terms = sorted((j, k) for j, k, _ in B.B.H.delta[x])
    assert terms == sorted([(x, one), (c, x)])


def test_tensor_identity_morphism(basic2):
    _, R, B = basic2
    f = tensor_morphism(B, B, identity_morphism(B.Hd))
    assert check_morphism(f).ok


def test_classification_n2(basic2):
    X, R, B = basic2
    cl = classify_boson_data(B, 2)
    assert cl.report.ok
    assert [w for w, _ in cl.candidates] == [0, 1]
    assert [w for w, _ in cl.nontrivial()] == [1]


@pytest.mark.slow
def test_classification_n3_matches_brute_force(basic3):
    X, R, B = basic3
    cl = classify_boson_data(B, 3)
    assert cl.report.ok and cl.nontrivial() == []
    assert [(w, c.data) for w, c in brute_force_boson_data(B, 3)] == [(w, c.data) for w, c in cl.candidates]


def test_datum_conditions_for_each_candidate(basic2):
    X, R, B = basic2
    for w in range(2):
        chi = chi_B_formula(B, 2, w)
        rep = boson_datum_conditions(B, w, chi)
        ok = verify_datum(QuasiYDDatum(B.B, B.index(0, w), chi, check=False)).ok
        assert rep.ok == ok


def test_qydd_branch_outside_classification(basic2):
    X, R, B = basic2
    chi = chi_B_formula(B, 2, 1)
    assert qydd_conditions(B, 1, chi, X.g, X.chi).ok
    rep = qydd_conditions(B, 1, chi_B_formula(B, 2, 0), X.g, X.chi)
    assert [c.name for c in rep.failures()] == ["(ii) chi_B(1#g_H) chi_H(d) = 1"]
    # g_H = 1 puts every d in the branch d = g_H d
    rep = qydd_conditions(B, 1, chi, 0, X.chi)
    assert rep.ok and "outside" in rep.info["branch"]


def test_iterated_example(iterated2):
    ex = iterated2
    assert mult_order(ex.iota) == 4
    assert verify_datum(ex.datum_B).ok and verify_datum(ex.datum_B, via_module=True).ok
    assert ex.S.dim == 4 and ex.SB.dim == 32


@pytest.mark.parametrize("n", [2, 3])
def test_gauge_trivialization(n):
    rep = gauge_trivialize_A(n)
    assert rep.ok and rep.info["dim A"] == n ** 4


def test_iso_conditions_symmetric():
    p = 3
    data = [(i, z, j) for i in range(1, p) for z in range(1, p) for j in range(p)]
    for a in data:
        for b in data:
            assert boson_iso_necessary_conditions(p, a, b).ok == boson_iso_necessary_conditions(p, b, a).ok
        assert boson_iso_necessary_conditions(p, a, a).info["verdict"] == "possibly isomorphic"
    with pytest.raises(ValueError):
        boson_iso_necessary_conditions(4, (1, 1, 0), (1, 1, 0))


@pytest.mark.parametrize("p", [3, 5, 7])
def test_class_count_lower_bound(p):
    assert count_classes(p) == p * (p - 1)


def test_chi_j_value_order():
    for j in range(3):
        assert mult_order(chi_j_value(3, 1, 1, j)) == 9
