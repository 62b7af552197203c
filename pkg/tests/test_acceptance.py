"""The ten acceptance criteria, each with its time limit.  One PASS/FAIL line per criterion."""

import random
import time

import pytest

from conftest import ACCEPTANCE_LINES


def record(number: int, title: str, ok: bool, seconds: float, limit: float, detail: str = "") -> None:
    within = seconds < limit
    status = "PASS" if ok and within else "FAIL"
    line = f"{status} criterion {number}: {title} ({seconds:.2f}s, limit {limit:g}s)"
    if detail:
        line += f" - {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line
    assert within, line


def test_criterion_01_cocycle_family():
    from quasiline.group_dqb import cyclic_dqb
    from quasiline.dqb import verify_dqb

    t0 = time.perf_counter()
    bad = []
    for n in range(2, 7):
        for i in range(n):
            rep = verify_dqb(cyclic_dqb(n, i, check=False))
            if not rep.ok:
                bad.append((n, i))
    record(1, "omega_{zeta^i} is a normalized 3-cocycle on kC_n, n = 2..6, all i", not bad,
           time.perf_counter() - t0, 10, f"failures {bad}" if bad else "")


def test_criterion_02_coboundary_witness():
    from quasiline.group_dqb import coboundary_witness_check

    t0 = time.perf_counter()
    bad = [(n, i) for n in (2, 3) for i in range(n) if not coboundary_witness_check(n, i).ok]
    record(2, "d^2 v_i = omega_{zeta^i} o phi^3 on kC_{n^2}, n = 2, 3", not bad, time.perf_counter() - t0, 30)


def test_criterion_03_quantum_line_n2():
    from quasiline.cyclotomic import field
    from quasiline.qyd import datum_for_cyclic
    from quasiline.quantum_line import build_quantum_line, verify_antipode, verify_yd_bialgebra

    t0 = time.perf_counter()
    X = datum_for_cyclic(2, 1, 1, field(4).root(1))
    R = build_quantum_line(X)
    rep = verify_yd_bialgebra(R)
    anti = verify_antipode(R)
    families = {c.name for c in rep.checks}
    ok = X.N == 4 and R.dim == 4 and rep.ok and anti.ok and len(families) >= 5
    record(3, "R over ((kC_2, omega_zeta), c, q): N = 4, dim 4, YD bialgebra and antipode", ok,
           time.perf_counter() - t0, 5)


def test_criterion_04_bosonization_n2():
    from quasiline.bosonization import basic_bosonization, filtration_check, piIdpi_check
    from quasiline.dqb import verify_dqb

    t0 = time.perf_counter()
    _, _, B = basic_bosonization(2)
    rep = verify_dqb(B.B)
    ok = B.dim == 8 and rep.ok and piIdpi_check(B).ok and filtration_check(B).ok
    record(4, "B = R#kC_2 (dim 8): full dqb check, piIdpi, filtration", ok, time.perf_counter() - t0, 60)


def test_criterion_05_iterated_example():
    from quasiline.bosonization import build_iterated_example
    from quasiline.cyclotomic import mult_order

    t0 = time.perf_counter()
    ex = build_iterated_example(2, verify=True)
    ok = (ex.report.ok and mult_order(ex.iota) == 4 and ex.datum_B is not None and ex.SB.dim == 32)
    record(5, "iterated example n = 2: iota of order 4, datum on B, S#B of dim 32 verified", ok,
           time.perf_counter() - t0, 600)


def test_criterion_06_classification():
    from quasiline.bosonization import basic_bosonization, brute_force_boson_data, classify_boson_data

    t0 = time.perf_counter()
    _, R, B = basic_bosonization(2)
    cl = classify_boson_data(B, 2)
    bf = brute_force_boson_data(B, 2)
    q = B.B.F.root(1)
    nontriv = cl.nontrivial()
    formula_ok = len(nontriv) == 1 and nontriv[0][0] == 1 and all(
        nontriv[0][1](B.index(a, t)) == R.counit[a] * q ** (-t) for a in range(R.dim) for t in range(2))
    same = [(w, c.data) for w, c in bf] == [(w, c.data) for w, c in cl.candidates]
    record(6, "classify_boson_data(n = 2): w = 1 = m with chi_B = eps_R q^{-wt}, equals brute force",
           cl.report.ok and formula_ok and same, time.perf_counter() - t0, 300)


def test_criterion_07_enumeration():
    from quasiline.bosonization import count_classes
    from quasiline.cyclotomic import field, mult_order
    from quasiline.qyd import brute_force_data, datum_exponents, datum_for_cyclic, enumerate_data

    t0 = time.perf_counter()
    bad = []
    for n in range(2, 5):
        for w in range(n):
            data = enumerate_data(n, w)
            if len(data) != n * n or {datum_exponents(X) for X in data} != brute_force_data(n, w):
                bad.append((n, w))
    p = 3
    F = field(p * p)
    q = F.root(1)
    choices_ok = all(
        sum(1 for j in range(p) if mult_order(datum_for_cyclic(p, i, z, (q ** p) ** j * q ** (i * z)).q) == p * p) == p
        for i in range(1, p) for z in range(1, p))
    classes = count_classes(p, 1)
    record(7, "enumeration = brute force for n <= 4; p = 3 choices of j; p(p-1) = 6 classes",
           not bad and choices_ok and classes == 6, time.perf_counter() - t0, 600,
           f"classes = {classes}, mismatches {bad}")


def test_criterion_08_gauge_trivialization():
    from quasiline.bosonization import gauge_trivialize_A
    from quasiline.coalg_core import Functional
    from quasiline.dqb import GaugeTransformation, twist
    from quasiline.group_dqb import cyclic_dqb

    t0 = time.perf_counter()
    rep = gauge_trivialize_A(2)
    D = cyclic_dqb(4, 1)
    H = D.H
    F = D.F
    rng = random.Random(20261014)
    roots = F.roots_of_unity(F.conductor)
    trips = 0
    for _ in range(20):
        def val(a, b):
            if a == 0 or b == 0:
                return F.one
            return roots[rng.randrange(len(roots))] * F(rng.choice([1, 2, 3, -1, -2]))
        v = Functional.from_function(H, 2, val)
        g = GaugeTransformation(H, v, v.pointwise_inverse())
        back = twist(twist(D, g, check=False), g.inverse(), check=False)
        trips += back.omega == D.omega and back.H.mul == D.H.mul
    record(8, "omega_A^mu = eps on dim-16 A; 20 random twist round trips on kC_4",
           rep.ok and rep.info.get("dim A") == 16 and trips == 20, time.perf_counter() - t0, 600,
           f"{trips}/20 round trips")


def test_criterion_09_identity_suite():
    from quasiline.cyclotomic import field
    from quasiline.group_dqb import cyclic_dqb, lem_go_count, omegatrick_check
    from quasiline.qyd import datum_for_cyclic, enumerate_data
    from quasiline.quantum_line import build_quantum_line, chi_n_closed, chi_n_iterative, kassel_sum

    t0 = time.perf_counter()
    R = build_quantum_line(datum_for_cyclic(4, 1, 1, field(16).root(1)))
    kassel = R.N >= 13 and all(kassel_sum(R, k) == (R.F.one if k == 0 else R.F.zero) for k in range(13))
    go = all(a == b for n in range(1, 7) for a0 in range(n * n) for a, b in [lem_go_count(n, a0)])
    trick = all(omegatrick_check(cyclic_dqb(n, i), 1, n).ok for n in range(2, 6) for i in range(n))
    chis = True
    for n in range(2, 5):
        for w in range(n):
            for X in enumerate_data(n, w):
                N = X.N
                for k in range(N):
                    chis &= chi_n_iterative(X, k) == chi_n_closed(X, k)
    record(9, "Kassel sums (n <= 12), residue counting, omega power identity, chi_[n] both forms",
           kassel and go and trick and chis, time.perf_counter() - t0, 600,
           f"kassel={kassel} counting={go} omegatrick={trick} chi_n={chis}")


def test_criterion_10_negative_controls():
    from quasiline.controls import CONTROLS

    t0 = time.perf_counter()
    results = [(c.name, *c.evaluate()) for c in CONTROLS]
    missed = [r for r in results if not r[1]]
    record(10, f"{len(CONTROLS)} corrupted fixtures rejected at the documented axiom and tuple", not missed,
           time.perf_counter() - t0, 600, "; ".join(f"{n}: {d}" for n, _, d in missed))


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q"]))
