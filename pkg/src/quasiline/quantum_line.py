"""The quantum line R((H, omega), g, chi), the truncated tensor algebra T(V) and their checks.

Bracketing in T^n(V) is left-nested, v^[n] = v (x) v^[n-1]; every re-bracketing
goes through the associativity constraint explicitly.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .coalg_core import Functional, LinearMap, convolve_many
from .cyclotomic import CycNum, q_binom
from .dqb import DqbMorphism, check_morphism
from .qyd import (QuasiYDDatum, QydMorphism, YDModule, _acc, assoc_constraint, omega_op, omega_tensor,
                  one_dim_module, trivial_module, verify_yd_module, yd_tensor)
from .report import Report
from .sweedler import Tensor


class YDBialgebra(YDModule):
    """A YD module with mul[(i, j)] = [(k, c)], unit {i: c}, delta[i] = [(j, k, c)] and counit[i]."""

    def __init__(self, D, labels, coact, act, mul, unit, delta, counit, name="R"):
        super().__init__(D, labels, coact, act, name)
        F = D.F
        self.mul = {k: [(j, F(c)) for j, c in v if c] for k, v in mul.items()}
        self.mul = {k: v for k, v in self.mul.items() if v}
        self.unit = {i: F(c) for i, c in unit.items() if c}
        self.delta = [[(j, k, F(c)) for j, k, c in terms if c] for terms in delta]
        self.counit = [F(c) for c in counit]

    def mul_vec(self, x: dict, y: dict) -> dict:
        out: dict = {}
        for i, a in x.items():
            for j, b in y.items():
                for k, c in self.mul.get((i, j), ()):
                    _acc(out, k, a * b * c)
        return out

    def verify(self) -> Report:
        return verify_yd_bialgebra(self)


def _flat_mul(R: YDBialgebra, p: int) -> dict:
    d = R.dim
    return {k: c for k, c in R.mul.get((p // d, p % d), ())}


def verify_yd_bialgebra(R: YDBialgebra, families: Sequence[str] = ("module", "morphisms", "associativity",
                                                                    "coassociativity", "compatibility")) -> Report:
    """(a) YD module; (b) m, Delta, eps, u are YD morphisms; (c) associativity and unit laws with the
    constraint; (d) coassociativity with the constraint and counit laws; (e) Delta m = (m (x) m) Omega (Delta (x) Delta)."""
    D = R.D
    H = D.H
    F = D.F
    om, omi = D.omega, D.omega_inv
    d = R.dim
    lab = R.labels
    rep = Report(f"YD bialgebra {R.name} (dim {d})")

    def module():
        sub = verify_yd_module(R)
        rep.extend(sub, "module: ")

    def morphisms():
        RR = yd_tensor(R, R)

        def m_morph():
            for h in range(H.dim):
                for p in range(d * d):
                    lhs: dict = {}
                    for q, c in RR.act_terms(h, p):
                        for k, cc in _flat_mul(R, q).items():
                            _acc(lhs, k, c * cc)
                    rhs = R.act_vec(h, _flat_mul(R, p))
                    if lhs != rhs:
                        return False, (H.labels[h], lab[p // d], lab[p % d]), "action"
            for p in range(d * d):
                lhs: dict = {}
                for k, c in _flat_mul(R, p).items():
                    for hh, j, cc in R.coact[k]:
                        _acc(lhs, (hh, j), c * cc)
                rhs: dict = {}
                for hh, q, c in RR.coact[p]:
                    for k, cc in _flat_mul(R, q).items():
                        _acc(rhs, (hh, k), c * cc)
                if lhs != rhs:
                    return False, (lab[p // d], lab[p % d]), "coaction"
            return True, None

        def delta_vec(i):
            out: dict = {}
            for j, k, c in R.delta[i]:
                _acc(out, j * d + k, c)
            return out

        def delta_morph():
            for h in range(H.dim):
                for r in range(d):
                    lhs: dict = {}
                    for j, c in R.act_terms(h, r):
                        for p, cc in delta_vec(j).items():
                            _acc(lhs, p, c * cc)
                    rhs = RR.act_vec(h, delta_vec(r))
                    if lhs != rhs:
                        return False, (H.labels[h], lab[r]), "action"
            for r in range(d):
                lhs: dict = {}
                for hh, j, c in R.coact[r]:
                    for p, cc in delta_vec(j).items():
                        _acc(lhs, (hh, p), c * cc)
                rhs: dict = {}
                for p, c in delta_vec(r).items():
                    for hh, q, cc in RR.coact[p]:
                        _acc(rhs, (hh, q), c * cc)
                if lhs != rhs:
                    return False, (lab[r],), "coaction"
            return True, None

        def eps_morph():
            for r in range(d):
                for h in range(H.dim):
                    lhs = F.zero
                    for j, c in R.act_terms(h, r):
                        lhs = lhs + c * R.counit[j]
                    if lhs != H.counit[h] * R.counit[r]:
                        return False, (H.labels[h], lab[r]), "action"
                co: dict = {}
                for hh, j, c in R.coact[r]:
                    if R.counit[j]:
                        _acc(co, hh, c * R.counit[j])
                want = {k: c * R.counit[r] for k, c in H.unit.items()} if R.counit[r] else {}
                if co != want:
                    return False, (lab[r],), "coaction"
            return True, None

        def unit_morph():
            for h in range(H.dim):
                lhs = R.act_vec(h, R.unit)
                want = {k: c * H.counit[h] for k, c in R.unit.items()} if H.counit[h] else {}
                if lhs != want:
                    return False, (H.labels[h],), "action"
            co: dict = {}
            for i, c in R.unit.items():
                for hh, j, cc in R.coact[i]:
                    _acc(co, (hh, j), c * cc)
            want = {(hh, i): a * b for hh, a in H.unit.items() for i, b in R.unit.items()}
            return co == want, ("1",), "coaction"

        rep.run("m_R is a YD morphism", m_morph)
        rep.run("Delta_R is a YD morphism", delta_morph)
        rep.run("eps_R is a YD morphism", eps_morph)
        rep.run("u_R is a YD morphism", unit_morph)

    def associativity():
        T = Tensor.inputs(F, [("r", d), ("s", d), ("t", d)])
        lhs = T.mul("r", "s", "r", R).mul("r", "t", "r", R)
        rhs = T.coact("r", "rm", "r", R).coact("s", "sm", "s", R).coact("t", "tm", "t", R)
        rhs = rhs.func(omi, ["rm", "sm", "tm"]).mul("s", "t", "s", R).mul("r", "s", "r", R)
        bad = lhs.first_mismatch(rhs, ["@r", "@s", "@t"])
        rep.run("m(m (x) R) = m(R (x) m) a", lambda: (bad is None, bad and tuple(lab[i] for i in bad)))

        def units():
            for r in range(d):
                e = {r: F.one}
                if R.mul_vec(R.unit, e) != e or R.mul_vec(e, R.unit) != e:
                    return False, (lab[r],)
            return True, None

        rep.run("1 r = r = r 1", units)

    def coassociativity():
        T = Tensor.inputs(F, [("r", d)])
        lhs = T.split("r", ["x", "y"], R).split("x", ["x1", "x2"], R)
        lhs = lhs.coact("x1", "am", "x1", R).coact("x2", "bm", "x2", R).coact("y", "cm", "y", R)
        lhs = lhs.func(omi, ["am", "bm", "cm"])
        rhs = T.split("r", ["x1", "y"], R).split("y", ["x2", "y2"], R).rename({"y2": "y"})
        bad = lhs.first_mismatch(rhs, ["@r"])
        rep.run("a (Delta (x) R) Delta = (R (x) Delta) Delta", lambda: (bad is None, bad and (lab[bad[0]],)))

        def counits():
            for r in range(d):
                left: dict = {}
                right: dict = {}
                for j, k, c in R.delta[r]:
                    if R.counit[j]:
                        _acc(left, k, c * R.counit[j])
                    if R.counit[k]:
                        _acc(right, j, c * R.counit[k])
                if left != {r: F.one} or right != {r: F.one}:
                    return False, (lab[r],)
            return True, None

        rep.run("counit laws", counits)

    def compatibility():
        T = Tensor.inputs(F, [("r", d), ("s", d)])
        lhs = T.mul("r", "s", "p", R).split("p", ["p1", "p2"], R)
        rhs = T.split("r", ["r1", "r2"], R).split("s", ["s1", "s2"], R)
        rhs = omega_tensor(rhs, ["r1", "r2", "s1", "s2"], [R, R, R, R])
        rhs = rhs.mul("r1", "s1", "p1", R).mul("r2", "s2", "p2", R)
        bad = lhs.first_mismatch(rhs, ["@r", "@s"])
        rep.run("Delta m = (m (x) m) Omega (Delta (x) Delta)",
                lambda: (bad is None, bad and tuple(lab[i] for i in bad)))

        def counit_mult():
            for r in range(d):
                for s in range(d):
                    v = F.zero
                    for k, c in R.mul.get((r, s), ()):
                        v = v + c * R.counit[k]
                    if v != R.counit[r] * R.counit[s]:
                        return False, (lab[r], lab[s])
            return True, None

        rep.run("eps m = eps (x) eps", counit_mult)
        rep.run("Delta(1) = 1 (x) 1, eps(1) = 1", lambda: (_unit_coalg(R), ("1",)))

    table = {"module": module, "morphisms": morphisms, "associativity": associativity,
             "coassociativity": coassociativity, "compatibility": compatibility}
    for f in families:
        table[f]()
    return rep


def _unit_coalg(R: YDBialgebra) -> bool:
    F = R.F
    got: dict = {}
    e = F.zero
    for i, c in R.unit.items():
        e = e + c * R.counit[i]
        for j, k, cc in R.delta[i]:
            _acc(got, (j, k), c * cc)
    want = {(i, j): a * b for i, a in R.unit.items() for j, b in R.unit.items()}
    return got == want and e.is_one()


# -- chi_[n] ------------------------------------------------------------------

def _slices(X: QuasiYDDatum, k: int):
    """omega(-, g, g^k), omega^-1(g, -, g^k) and omega(g, g^k, -) as functionals on H."""
    D = X.D
    H = D.H
    gv = {X.g: H.F.one}
    gk = H.power(X.g, k)
    return (D.omega.partial({1: gv, 2: gk}), D.omega_inv.partial({0: gv, 2: gk}),
            D.omega.partial({0: gv, 1: gk}))


def chi_n_iterative(X: QuasiYDDatum, n: int) -> Functional:
    """chi_[0] = eps, chi_[n] = omega(-,g,g^{n-1}) * chi * omega^-1(g,-,g^{n-1}) * chi_[n-1] * omega(g,g^{n-1},-)."""
    H = X.H
    cur = Functional.eps(H, 1)
    for k in range(n):
        a, b, c = _slices(X, k)
        cur = convolve_many([a, X.chi, b, cur, c], H)
    return cur


def chi_n_closed(X: QuasiYDDatum, n: int) -> Functional:
    """[prod_{i=0}^{n-1} omega(-,g,g^{n-1-i}) * chi * omega^-1(g,-,g^{n-1-i})] * [prod_{i=0}^{n-1} omega(g,g^i,-)]."""
    H = X.H
    if n == 0:
        return Functional.eps(H, 1)
    factors = []
    for i in range(n):
        a, b, _ = _slices(X, n - 1 - i)
        factors += [a, X.chi, b]
    for i in range(n):
        factors.append(_slices(X, i)[2])
    return convolve_many(factors, H)


def chi_n_grouplike(X: QuasiYDDatum, n: int, h: int) -> CycNum:
    """chi_[n](h) = chi(h)^n prod_i omega(h,g,g^i) omega^-1(g,h,g^i) omega(g,g^i,h) for grouplike h."""
    D = X.D
    H = D.H
    hv, gv = {h: H.F.one}, {X.g: H.F.one}
    val = X.chi(h) ** n
    for i in range(n):
        gi = H.power(X.g, i)
        val = val * D.omega.on_vectors(hv, gv, gi) * D.omega_inv.on_vectors(gv, hv, gi) * D.omega.on_vectors(gv, gi, hv)
    return val


def ching(X: QuasiYDDatum, n: int) -> CycNum:
    """chi_[n](g) = q^n prod_i omega(g, g^i, g)."""
    H = X.H
    gv = {X.g: H.F.one}
    val = X.q ** n
    for i in range(n):
        val = val * X.D.omega.on_vectors(gv, H.power(X.g, i), gv)
    return val


def chi_n(X: QuasiYDDatum, n: int) -> Functional:
    """chi_[n], computed both ways; grouplike values also checked against the cocommutative formula."""
    if n < 0:
        raise ValueError("n must be >= 0")
    it = chi_n_iterative(X, n)
    cl = chi_n_closed(X, n)
    if it != cl:
        raise AssertionError(f"iterative and closed chi_[{n}] differ")
    for h in X.H.grouplike_basis():
        if it(h) != chi_n_grouplike(X, n, h):
            raise AssertionError(f"chi_[{n}]({X.H.labels[h]}) differs from the grouplike formula")
    return it


# -- structure constants -------------------------------------------------------

def product_coeff(X: QuasiYDDatum, a: int, b: int) -> CycNum:
    """prod_{0<=i<=a-1} omega^-1(g, g^i, g^b)."""
    H = X.H
    gv = {X.g: H.F.one}
    gb = H.power(X.g, b)
    val = H.F.one
    for i in range(a):
        val = val * X.D.omega_inv.on_vectors(gv, H.power(X.g, i), gb)
    return val


def beta_coeff(X: QuasiYDDatum, i: int, n: int) -> CycNum:
    """beta(i, n) = [n choose i]_q prod_{0<=j<=i-1} omega(g, g^j, g^{n-i})."""
    H = X.H
    gv = {X.g: H.F.one}
    gni = H.power(X.g, n - i)
    val = q_binom(n, i, X.q)
    for j in range(i):
        val = val * X.D.omega.on_vectors(gv, H.power(X.g, j), gni)
    return val


class GradedLine(YDBialgebra):
    """Shared shape of R and the truncated T(V): basis in degrees 0..dim-1, all maps diagonal in degree."""

    def __init__(self, X: QuasiYDDatum, degrees: int, truncate: bool, name: str, prefix: str,
                 beta: Optional[list] = None, prod: Optional[list] = None, chis: Optional[list] = None):
        H = X.H
        F = X.F
        self.datum = X
        self.degrees = degrees
        gpow = [H.power_index(X.g, k) for k in range(degrees)]
        self.chis = chis if chis is not None else [chi_n(X, k) for k in range(degrees)]
        self.prod = prod if prod is not None else [[product_coeff(X, a, b) for b in range(degrees)]
                                                   for a in range(degrees)]
        self.beta = beta if beta is not None else [[beta_coeff(X, i, k) if i <= k else F.zero
                                                    for k in range(degrees)] for i in range(degrees)]
        labels = ["1" if k == 0 else f"{prefix}^[{k}]" for k in range(degrees)]
        coact = [[(gpow[k], k, 1)] for k in range(degrees)]
        act = {}
        for k in range(degrees):
            for (h,), c in self.chis[k].data.items():
                act[(h, k)] = [(k, c)]
        mul = {}
        for a in range(degrees):
            for b in range(degrees):
                if a + b < degrees:
                    mul[(a, b)] = [(a + b, self.prod[a][b])]
        delta = [[(i, k - i, self.beta[i][k]) for i in range(k + 1)] for k in range(degrees)]
        counit = [1] + [0] * (degrees - 1)
        super().__init__(X.D, labels, coact, act, mul, {0: 1}, delta, counit, name)
        self.truncate = truncate


class QuantumLine(GradedLine):
    """R((H, omega), g, chi) with basis x^[0..N-1]."""

    def __init__(self, X: QuasiYDDatum, **tables):
        N = X.N
        if N is None:
            raise ValueError(f"q = {X.q} is not a root of unity")
        self.N = N
        super().__init__(X, N, True, f"R({X.name})", "x", **tables)

    def antipode_scalars(self) -> list[CycNum]:
        q = self.datum.q
        return [(-1) ** k * q ** (k * (k - 1) // 2) for k in range(self.N)]

    def __repr__(self) -> str:
        return f"QuantumLine(N={self.N}, q={self.datum.q})"


def build_quantum_line(X: QuasiYDDatum, check: bool = False) -> QuantumLine:
    R = QuantumLine(X)
    if check:
        rep = verify_yd_bialgebra(R)
        if not rep.ok:
            from .report import AxiomError
            raise AxiomError(rep)
    return R


def antipode(R: QuantumLine) -> LinearMap:
    """S_R(x^[n]) = (-1)^n q^{n(n-1)/2} x^[n]."""
    s = R.antipode_scalars()
    return LinearMap(R, R, [{k: s[k]} for k in range(R.N)])


def verify_antipode(R: QuantumLine, S: Optional[LinearMap] = None) -> Report:
    """m(S (x) R) Delta = u eps = m(R (x) S) Delta, and S bijective."""
    S = S or antipode(R)
    F = R.F
    rep = Report(f"antipode of {R.name}")
    uw = {k: c for k, c in R.unit.items()}

    def side(left: bool):
        for r in range(R.dim):
            acc: dict = {}
            for j, k, c in R.delta[r]:
                x = S.columns[j] if left else {j: F.one}
                y = {k: F.one} if left else S.columns[k]
                for i, cc in R.mul_vec(x, y).items():
                    _acc(acc, i, c * cc)
            want = {i: c * R.counit[r] for i, c in uw.items()} if R.counit[r] else {}
            if acc != want:
                return False, (R.labels[r],)
        return True, None

    rep.run("S * id = u eps", lambda: side(True))
    rep.run("id * S = u eps", lambda: side(False))
    rep.run("S bijective", lambda: (all(len(c) == 1 and next(iter(c)) == i and next(iter(c.values()))
                                        for i, c in enumerate(S.columns)), None))
    return rep


def kassel_sum(R: QuantumLine, n: int) -> CycNum:
    """sum_i beta(i, n) S-scalar(i) prod-coefficient(i, n-i), the coefficient of x^[n] in m(S (x) R)Delta(x^[n])."""
    s = R.antipode_scalars()
    acc = R.F.zero
    for i in range(n + 1):
        acc = acc + R.beta[i][n] * s[i] * R.prod[i][n - i]
    return acc


def beta_identity(X: QuasiYDDatum, i: int, n: int) -> bool:
    """beta(i, n) prod_{j<i} omega^-1(g, g^j, g^{n-i}) = [n choose i]_q."""
    H = X.H
    gv = {X.g: H.F.one}
    val = beta_coeff(X, i, n)
    for j in range(i):
        val = val * X.D.omega_inv.on_vectors(gv, H.power(X.g, j), H.power(X.g, n - i))
    return val == q_binom(n, i, X.q)


# -- truncated tensor algebra -------------------------------------------------

class TruncatedTensorAlgebra(GradedLine):
    """T(V) for V = k_v, degrees 0..D-1, products landing in degree >= D dropped."""

    def __init__(self, X: QuasiYDDatum, max_degree: int, **tables):
        self.max_degree = max_degree
        super().__init__(X, max_degree, False, f"T({X.name})<{max_degree}", "v", **tables)


def truncated_tensor_algebra(X: QuasiYDDatum, D: int) -> TruncatedTensorAlgebra:
    if X.N is not None and D < X.N:
        raise ValueError(f"max degree {D} below N = {X.N}")
    return TruncatedTensorAlgebra(X, D)


def tensor_powers(X: QuasiYDDatum, D: int) -> list[YDModule]:
    """V^(x)k, k < D, built by iterated YD tensor products V (x) V^(x)(k-1) from the one-dimensional module."""
    V = one_dim_module(X.D, X.g, X.chi)
    out = [trivial_module(X.D)]
    for k in range(1, D):
        out.append(V if k == 1 else yd_tensor(V, out[-1]))
    return out


def tensor_algebra_oracle(X: QuasiYDDatum, D: int) -> dict:
    """Structure of T(V) derived from the category alone.

    chi_[k] is read off the action on V^(x)k, the product coefficient from
    m((v (x) v^[a-1]) (x) v^[b]) = v (x) m(v^[a-1] (x) v^[b]) after the constraint, and beta from
    Delta(v^[n]) = (m (x) m) Omega (Delta(v) (x) Delta(v^[n-1])) with Delta(v) = v (x) 1 + 1 (x) v.
    """
    F = X.F
    mods = tensor_powers(X, D)
    chis = [Functional(1, {(h,): terms[0][1] for (h, _), terms in M.act.items()}, F) for M in mods]
    V, one = mods[1], mods[0]

    def scalar(cols) -> CycNum:
        (col,) = cols
        if not col:
            return F.zero
        (_, c), = col.items()
        return c

    prod = [[F.one] * D for _ in range(D)]
    for a in range(1, D):
        for b in range(D):
            prod[a][b] = scalar(assoc_constraint(V, mods[a - 1], mods[b])) * prod[a - 1][b]
    beta = [[F.zero] * D for _ in range(D)]
    beta[0][0] = F.one
    for n in range(1, D):
        for i in range(n + 1):
            val = F.zero
            if i >= 1:
                # (v (x) 1) (x) (v^[i-1] (x) v^[n-i]) -> (v (x) v^[i-1]) (x) (1 (x) v^[n-i])
                w = scalar(omega_op(V, one, mods[i - 1], mods[n - i]))
                val = val + beta[i - 1][n - 1] * w * prod[1][i - 1] * prod[0][n - i]
            if i <= n - 1:
                # (1 (x) v) (x) (v^[i] (x) v^[n-1-i]) -> (1 (x) v^[i]) (x) (v (x) v^[n-1-i])
                w = scalar(omega_op(one, V, mods[i], mods[n - 1 - i]))
                val = val + beta[i][n - 1] * w * prod[0][i] * prod[1][n - 1 - i]
            beta[i][n] = val
    return {"chis": chis, "prod": prod, "beta": beta, "modules": mods}


def verify_tensor_algebra(T: TruncatedTensorAlgebra) -> Report:
    """Closed formulas for T(V) against the categorical construction, degree by degree."""
    X = T.datum
    D = T.max_degree
    orc = tensor_algebra_oracle(X, D)
    rep = Report(f"structure of {T.name}")
    H = X.H

    def coaction():
        for k in range(D):
            if [(h, j, c) for h, j, c in orc["modules"][k].coact[0]] != [(H.power_index(X.g, k), 0, X.F.one)]:
                return False, (T.labels[k],)
        return True, None

    def action():
        for k in range(D):
            if orc["chis"][k] != T.chis[k]:
                return False, (T.labels[k],)
        return True, None

    def product():
        for a in range(D):
            for b in range(D - a):
                if orc["prod"][a][b] != T.prod[a][b]:
                    return False, (T.labels[a], T.labels[b])
        return True, None

    def coproduct():
        for n in range(D):
            for i in range(n + 1):
                if orc["beta"][i][n] != T.beta[i][n]:
                    return False, (T.labels[i], T.labels[n])
        return True, None

    rep.run("rho(v^[n]) = g^n (x) v^[n]", coaction)
    rep.run("h > v^[n] = chi_[n](h) v^[n]", action)
    rep.run("v^[a] v^[b] = prod omega^-1(g, g^i, g^b) v^[a+b]", product)
    rep.run("Delta v^[n] = sum beta(i, n) v^[i] (x) v^[n-i]", coproduct)
    return rep


def quotient_check(T: TruncatedTensorAlgebra, R: QuantumLine) -> Report:
    """Delta_T(v^[n]) lies in T (x) I + I (x) T for N <= n < D, and R's tables are T's tables mod I."""
    N = R.N
    D = T.max_degree
    rep = Report(f"{R.name} as T/I, I spanned by v^[n], n >= {N}")

    def coideal():
        for n in range(N, D):
            for i in range(n + 1):
                if i < N and n - i < N and T.beta[i][n]:
                    return False, (T.labels[n],), f"mixed term at i = {i}"
        return True, None

    def ideal():
        # v^[n] for n >= N is (nonzero scalar) v^[n-N] v^[N], so I is the ideal generated by v^[N]
        X = T.datum
        for n in range(N, D):
            a = n - N
            lhs = T.prod[a][N]
            scale = X.F.one
            gv = {X.g: X.F.one}
            for i in range(a):
                scale = scale * X.D.omega.on_vectors(gv, X.H.power(X.g, i), X.H.power(X.g, N))
            if not lhs or (scale * lhs) != X.F.one:
                return False, (T.labels[n],)
        return True, None

    def tables():
        for a in range(N):
            if T.chis[a] != R.chis[a]:
                return False, ("chi", R.labels[a])
            for b in range(N):
                want = T.prod[a][b] if a + b < N else None
                got = R.prod[a][b] if a + b < N else None
                if want != got:
                    return False, (R.labels[a], R.labels[b])
            for i in range(a + 1):
                if T.beta[i][a] != R.beta[i][a]:
                    return False, (R.labels[i], R.labels[a])
        return True, None

    rep.run("Delta_T(I) in T (x) I + I (x) T", coideal)
    rep.run("v^[n] = prod omega(g,g^i,g^N) v^[n-N] v^[N]", ideal)
    rep.run("R tables = T tables mod I", tables)
    return rep


# -- morphisms ----------------------------------------------------------------

def transport(f: QydMorphism, R_source: Optional[QuantumLine] = None, R_target: Optional[QuantumLine] = None,
              bosonizations: bool = True) -> Report:
    """The basis map x^[n] -> y^[n] intertwines rho, action, unit, m, Delta, eps; f (x) phi is a dqb morphism."""
    RS = R_source or build_quantum_line(f.source)
    RT = R_target or build_quantum_line(f.target)
    if RS.N != RT.N:
        raise ValueError(f"N mismatch: {RS.N} vs {RT.N}")
    N = RS.N
    phi = f.phi.phi
    F = RS.F
    rep = Report(f"transport along {f.phi.name}")
    rep.extend(f.verify(), "datum morphism: ")

    def rho():
        for k in range(N):
            lhs = {(j, k): c for (h, _, c0) in RS.coact[k] for j, c in phi.columns[h].items()}
            rhs = {(h, k): c for h, _, c in RT.coact[k]}
            if lhs != rhs:
                return False, (RS.labels[k],)
        return True, None

    def action():
        for k in range(N):
            for h in range(f.source.H.dim):
                got = F.zero
                for j, c in phi.columns[h].items():
                    got = got + c * RT.chis[k](j)
                if got != RS.chis[k](h):
                    return False, (f.source.H.labels[h], RS.labels[k])
        return True, None

    rep.run("(phi (x) f) rho = rho f", rho)
    rep.run("f(h > x) = phi(h) > f(x)", action)
    rep.run("f(1) = 1", lambda: (RS.unit == RT.unit, None))
    rep.run("f m = m (f (x) f)", lambda: (RS.mul == RT.mul, None))
    rep.run("(f (x) f) Delta = Delta f", lambda: (RS.delta == RT.delta, None))
    rep.run("eps f = eps", lambda: (RS.counit == RT.counit, None))
    if bosonizations:
        from .bosonization import bosonize, tensor_morphism

        BS, BT = bosonize(RS, check=False), bosonize(RT, check=False)
        g = tensor_morphism(BS, BT, f.phi)
        rep.extend(check_morphism(g), "f (x) phi: ")
    return rep
