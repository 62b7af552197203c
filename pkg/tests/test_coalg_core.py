import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import basic
from quasiline.coalg_core import (Functional, LinearMap, StructuredCoalgebra, check_coalgebra, conv_inverse,
                                  convolve, iterated_delta)
from quasiline.cyclotomic import field
from quasiline.group_dqb import cyclic, group_coalgebra
from quasiline.linsolve import SingularSystem, solve_dense_bareiss, solve_sparse


def naive_convolve(f, g, H):
    """Direct Sweedler sum over every basis tuple, no sparsity tricks."""
    k = f.arity
    out = {}
    for x in itertools.product(range(H.dim), repeat=k):
        total = H.F.zero
        for combo in itertools.product(*(H.delta[i] for i in x)):
            c = H.F.one
            for t in combo:
                c = c * t[2]
            total = total + c * f(*(t[0] for t in combo)) * g(*(t[1] for t in combo))
        if total:
            out[x] = total
    return Functional(k, out, H.F)


def random_functional(H, k, rng, density=1.0):
    F = H.F
    roots = F.roots_of_unity(F.conductor)
    data = {}
    for x in itertools.product(range(H.dim), repeat=k):
        if rng.random() < density:
            data[x] = roots[rng.randrange(len(roots))] * rng.choice([1, 2, -3])
    return Functional(k, data, F)


def test_group_coalgebra_axioms():
    for n in range(1, 6):
        assert check_coalgebra(group_coalgebra(cyclic(n), n * n)).ok


def test_bosonized_coalgebra_axioms():
    _, R, B = basic(2)
    assert check_coalgebra(B.B.H).ok


def test_corrupted_counit_names_the_element():
    F = field(1)
    one = F.one
    H = StructuredCoalgebra(1, ["1", "c"], [[(0, 0, one)], [(1, 1, one)]], [one, F(2)],
                            {(0, 0): [(0, one)], (0, 1): [(1, one)], (1, 0): [(1, one)], (1, 1): [(0, one)]},
                            [(0, one)], check=False)
    rep = check_coalgebra(H)
    assert not rep.ok
    assert any("counit" in c.name and c.counterexample == ("c",) for c in rep.failures())


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10 ** 6), st.sampled_from([1, 2]))
def test_convolution_matches_naive_sum(seed, k):
    rng = random.Random(seed)
    _, R, B = basic(2)
    H = B.B.H
    f = random_functional(H, k, rng, 0.3)
    g = random_functional(H, k, rng, 0.3)
    assert convolve(f, g, H) == naive_convolve(f, g, H)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(2, 5))
def test_group_inverse_is_pointwise(seed, n):
    rng = random.Random(seed)
    H = group_coalgebra(cyclic(n), n)
    f = random_functional(H, 2, rng)
    g = conv_inverse(f, H)
    assert g == f.pointwise_inverse()


def test_inverse_on_non_cosemisimple_coalgebra():
    _, R, B = basic(2)
    H = B.B.H
    rng = random.Random(7)
    f = random_functional(H, 1, rng, 0.5)
    f.data[(H.unit_index(),)] = H.F.one
    for h in H.grouplike_basis():
        f.data[(h,)] = H.F.one
    g = conv_inverse(f, H)
    eps = Functional.eps(H, 1)
    assert naive_convolve(f, g, H) == eps
    assert naive_convolve(g, f, H) == eps


def test_iterated_delta_counts():
    _, R, B = basic(2)
    H = B.B.H
    x = B.index(1, 0)
    d3 = iterated_delta(H, x, 3)
    assert d3 and all(len(k) == 3 for k in d3)


def test_linear_map_compose_identity():
    H = group_coalgebra(cyclic(4), 4)
    inv = LinearMap(H, H, [{(-i) % 4: H.F.one} for i in range(4)])
    assert inv.compose(inv).is_identity()


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(1, 5))
def test_sparse_and_bareiss_solvers_agree(seed, n):
    rng = random.Random(seed)
    F = field(3)
    vals = [F.zero, F.one, F.root(1), F(-2), F.root(2) * 3]
    A = [[rng.choice(vals) for _ in range(n)] for _ in range(n)]
    x = [rng.choice(vals) for _ in range(n)]
    b = [sum((A[r][c] * x[c] for c in range(n)), F.zero) for r in range(n)]
    rows = [{c: A[r][c] for c in range(n) if A[r][c]} for r in range(n)]
    try:
        s = solve_sparse(rows, b, n, F)
    except SingularSystem:
        with pytest.raises(SingularSystem):
            solve_dense_bareiss(A, b, F)
        return
    assert s == x
    assert solve_dense_bareiss(A, b, F) == x
