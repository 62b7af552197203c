"""Corrupted structures that every verifier must reject, each with the check and tuple it should name."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .report import Report


@dataclass(frozen=True)
class Control:
    name: str
    check: str
    counterexample: tuple
    run: Callable[[], Report]

    def evaluate(self) -> tuple[bool, str]:
        """(caught as documented, description)."""
        rep = self.run()
        if rep.ok:
            return False, "verifier passed a corrupted structure"
        for c in rep.failures():
            if self.check in c.name and c.counterexample is not None and \
                    tuple(str(x) for x in c.counterexample) == self.counterexample:
                return True, c.line()
        got = "; ".join(c.line() for c in rep.failures()[:4])
        return False, f"expected {self.check!r} at {self.counterexample}, got {got}"


def _bad_delta() -> Report:
    from .coalg_core import StructuredCoalgebra, check_coalgebra
    from .cyclotomic import field

    F = field(2)
    one = F.one
    # Delta(c) = c (x) 1 instead of c (x) c
    H = StructuredCoalgebra(2, ["1", "c"], [[(0, 0, one)], [(1, 0, one)]], [one, one],
                            {(0, 0): [(0, one)], (0, 1): [(1, one)], (1, 0): [(1, one)], (1, 1): [(0, one)]},
                            [(0, one)], check=False)
    return check_coalgebra(H)


def _bad_omega() -> Report:
    from .coalg_core import Functional
    from .dqb import DualQuasiBialgebra, verify_dqb
    from .group_dqb import cyclic, group_coalgebra

    H = group_coalgebra(cyclic(2), 4)
    F = H.F
    # omega(c, c, c) = i is normalized but not a 3-cocycle
    om = Functional.from_function(H, 3, lambda a, b, d: F.root(1) if (a, b, d) == (1, 1, 1) else F.one)
    return verify_dqb(DualQuasiBialgebra(H, om, om.pointwise_inverse(), check=False, name="bad omega"))


def _bad_chi_kc3() -> Report:
    from .group_dqb import cyclic_dqb
    from .qyd import QuasiYDDatum, chi_from_table, verify_datum

    D = cyclic_dqb(3, 1)
    q = D.F.root(1)
    chi = chi_from_table(D, [D.F.one, q, -q * q])
    return verify_datum(QuasiYDDatum(D, 1, chi, check=False, name="chi(c c) corrupted"))


def _bad_chi_kc2() -> Report:
    from .group_dqb import cyclic_dqb
    from .qyd import QuasiYDDatum, chi_from_table, verify_datum

    D = cyclic_dqb(2, 1)
    q = D.F.root(1)
    # on kC_2, c c = 1, so forcing chi(c c) wrong breaks unitarity
    chi = chi_from_table(D, [-D.F.one, q])
    return verify_datum(QuasiYDDatum(D, 1, chi, check=False, name="chi(c c) corrupted"))


def _basic_line():
    from .cyclotomic import field
    from .qyd import datum_for_cyclic
    from .quantum_line import build_quantum_line

    return build_quantum_line(datum_for_cyclic(2, 1, 1, field(4).root(1)))


def _bad_beta() -> Report:
    from .quantum_line import QuantumLine, verify_yd_bialgebra

    R = _basic_line()
    beta = [row[:] for row in R.beta]
    beta[1][2] = beta[1][2] + 1
    return verify_yd_bialgebra(QuantumLine(R.datum, beta=beta))


def _bad_filtration() -> Report:
    from .bosonization import bosonize, filtration_check

    B = bosonize(_basic_line())
    delta = [list(t) for t in B.B.H.delta]
    one = B.B.F.one
    delta[B.index(0, 0)] = delta[B.index(0, 0)] + [(B.index(1, 0), B.index(0, 0), one)]
    return filtration_check(B, delta)


def _bad_iter1() -> Report:
    from .bosonization import bosonize, boson_datum_conditions, chi_B_formula
    from .coalg_core import Functional

    B = bosonize(_basic_line())
    chi = chi_B_formula(B, 2, 1)
    data = dict(chi.data)
    data[(B.index(1, 0),)] = B.B.F.one
    return boson_datum_conditions(B, 1, Functional(1, data, B.B.F))


CONTROLS = [
    Control("corrupted Delta on kC_2", "counit", ("c",), _bad_delta),
    Control("non-cocycle omega on kC_2", "3-cocycle", ("c", "c", "c", "c"), _bad_omega),
    Control("chi(c c) forced wrong on kC_3", "chi(hl)", ("c", "c"), _bad_chi_kc3),
    Control("chi(c c) forced wrong on kC_2", "chi unitary", ("1",), _bad_chi_kc2),
    Control("corrupted beta(1,2)", "Delta m = (m (x) m) Omega", ("x^[1]", "x^[1]"), _bad_beta),
    Control("Delta_B term in degree 0", "Delta_B(B_[n])", ("1#1",), _bad_filtration),
    Control("chi_B breaking iter1", "chi_B(r#h1) c h2", ("x^[1]#1",), _bad_iter1),
]
