import random

import pytest
from hypothesis import given, settings, strategies as st

from quasiline.coalg_core import Functional
from quasiline.dqb import (DualQuasiBialgebra, GaugeTransformation, check_morphism, coboundary,
                           is_trivial_reassociator, normalize_gauge, pullback_gauge, twist, verify_dqb)
from quasiline.group_dqb import (cyclic, cyclic_dqb, projection_phi, pulled_back_cyclic, trivial_group_dqb,
                                 v_gauge)
from quasiline.report import AxiomError


def random_gauge(H, rng, normalized=True):
    F = H.F
    roots = F.roots_of_unity(F.conductor)

    def val(a, b):
        if normalized and (a == H.unit_index() or b == H.unit_index()):
            return F.one
        return roots[rng.randrange(len(roots))] * F(rng.choice([1, 2, -1, 3]))

    return Functional.from_function(H, 2, val)


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(2, 4))
def test_twist_preserves_axioms(seed, n):
    D = cyclic_dqb(n, 1)
    Dv = twist(D, random_gauge(D.H, random.Random(seed)), check=False)
    assert verify_dqb(Dv).ok


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_twist_of_trivial_reassociator_is_coboundary(seed):
    D = trivial_group_dqb(cyclic(4), 4)
    v = random_gauge(D.H, random.Random(seed))
    assert twist(D, v, check=False).omega == coboundary(v, D.H)


@pytest.mark.parametrize("n", [2, 3])
def test_inverse_v_trivializes_pulled_back_cocycle(n):
    D = pulled_back_cyclic(n, 1)
    v = v_gauge(n, 1)
    g = GaugeTransformation(D.H, v).inverse()
    assert is_trivial_reassociator(twist(D, g))[0]


def test_twist_convention_matters_at_n3():
    # omega has order 3 here, so v and v^-1 give different twists
    D = pulled_back_cyclic(3, 1)
    g = GaugeTransformation(D.H, v_gauge(3, 1))
    assert not is_trivial_reassociator(twist(D, g))[0]


def test_unnormalized_gauge_is_rejected_then_normalized():
    D = cyclic_dqb(2, 1)
    v = random_gauge(D.H, random.Random(3), normalized=False)
    with pytest.raises(ValueError):
        twist(D, v)
    const = Functional.from_function(D.H, 2, lambda a, b: D.F(5))
    g = normalize_gauge(const, D)
    assert g.v(0, 0) == D.F.one and g.v(1, 1) == D.F.one


def test_projection_phi_and_gauge_pullback():
    f = projection_phi(2, 1)
    assert check_morphism(f).ok
    g = GaugeTransformation(f.target.H, random_gauge(f.target.H, random.Random(11)))
    _, rep = pullback_gauge(f, g)
    assert rep.ok


def test_non_cocycle_raises_on_construction():
    D = cyclic_dqb(2, 1)
    F = D.F
    om = Functional.from_function(D.H, 3, lambda a, b, c: F.root(1) if (a, b, c) == (1, 1, 1) else F.one)
    with pytest.raises(AxiomError):
        DualQuasiBialgebra(D.H, om, om.pointwise_inverse(), check=True)


def test_parallel_families_agree_with_serial():
    D = cyclic_dqb(3, 2)
    a = verify_dqb(D, jobs=1)
    b = verify_dqb(D, jobs=2)
    assert [(c.name, c.ok) for c in a.checks] == [(c.name, c.ok) for c in b.checks]
