"""Group algebras as dual quasi-bialgebras: cyclic and dicyclic groups,
the cocycles omega_{zeta^i} on kC_n, the coboundary witnesses v_i on kC_{n^2},
and the projections between them.

Throughout q is a primitive n^2-th root of unity and zeta = q^n; the default
scalar field is Q(zeta_{n^2}).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .coalg_core import Functional, LinearMap, StructuredCoalgebra, compare_maps
from .cyclotomic import CycNum, field
from .dqb import DqbMorphism, DualQuasiBialgebra, check_morphism, coboundary
from .report import Report


@dataclass(frozen=True)
class FiniteGroup:
    labels: tuple
    table: tuple  # table[a][b] = index of a*b
    identity: int
    name: str = "G"

    @property
    def order(self) -> int:
        return len(self.labels)

    @property
    def inverse(self) -> tuple:
        inv = []
        for a in range(self.order):
            inv.append(next(b for b in range(self.order) if self.table[a][b] == self.identity))
        return tuple(inv)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def power(self, a: int, t: int) -> int:
        x = self.identity
        for _ in range(t):
            x = self.table[a][x]
        return x

    def center(self) -> list[int]:
        n = self.order
        return [a for a in range(n) if all(self.table[a][b] == self.table[b][a] for b in range(n))]

    def check(self) -> Report:
        rep = Report(f"group {self.name}")
        n = self.order
        T = self.table

        def assoc():
            for a, b, c in itertools.product(range(n), repeat=3):
                if T[T[a][b]][c] != T[a][T[b][c]]:
                    return False, (self.labels[a], self.labels[b], self.labels[c])
            return True, None

        def ident():
            for a in range(n):
                if T[self.identity][a] != a or T[a][self.identity] != a:
                    return False, (self.labels[a],)
            return True, None

        def inverses():
            inv = self.inverse
            for a in range(n):
                if T[inv[a]][a] != self.identity:
                    return False, (self.labels[a],)
            return True, None

        rep.run("associativity", assoc)
        rep.run("identity", ident)
        rep.run("inverses", inverses)
        return rep


def residue(a: int, n: int) -> int:
    """a' in {0, ..., n-1} congruent to a mod n."""
    return a % n


def cyclic(n: int, gen: str = "c") -> FiniteGroup:
    if n < 1:
        raise ValueError("cyclic group order must be positive")
    labels = tuple("1" if k == 0 else (gen if k == 1 else f"{gen}^{k}") for k in range(n))
    table = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    return FiniteGroup(labels, table, 0, f"C_{n}")


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


def dicyclic(p: int) -> FiniteGroup:
    """Dic_p = <x, y | x^4 = 1 = y^p, x y x^-1 = y^-1>, elements y^i x^j with index i + p*j."""
    if p < 3 or p % 2 == 0 or not _is_prime(p):
        raise ValueError("dicyclic(p) needs an odd prime p")

    def idx(i, j):
        return (i % p) + p * (j % 4)

    def lab(i, j):
        parts = []
        if i:
            parts.append("y" if i == 1 else f"y^{i}")
        if j:
            parts.append("x" if j == 1 else f"x^{j}")
        return "".join(parts) or "1"

    labels = [None] * (4 * p)
    table = [[0] * (4 * p) for _ in range(4 * p)]
    for i, j in itertools.product(range(p), range(4)):
        labels[idx(i, j)] = lab(i, j)
        for k, l in itertools.product(range(p), range(4)):
            # x^j y^k = y^{(-1)^j k} x^j
            sign = -1 if j % 2 else 1
            table[idx(i, j)][idx(k, l)] = idx(i + sign * k, j + l)
    return FiniteGroup(tuple(labels), tuple(tuple(r) for r in table), 0, f"Dic_{p}")


def dicyclic_element(p: int, i: int, j: int) -> int:
    return (i % p) + p * (j % 4)


def group_coalgebra(G: FiniteGroup, conductor: int) -> StructuredCoalgebra:
    return StructuredCoalgebra.group_algebra(conductor, G.labels, G.table, G.identity)


def omega_zeta(n: int, i: int, conductor: Optional[int] = None) -> Functional:
    """omega_{zeta^i}(c^a (x) c^b (x) c^d) = zeta^{i a [[b' + d' > n-1]]} on kC_n."""
    N = conductor or n * n
    if N % (n * n):
        raise ValueError("conductor must be a multiple of n^2")
    F = field(N)
    zeta = F.root(N // n)
    data = {}
    for a, b, d in itertools.product(range(n), repeat=3):
        e = i * a * (1 if residue(b, n) + residue(d, n) > n - 1 else 0)
        data[(a, b, d)] = zeta ** e
    return Functional(3, data, F)


def omega_q_form(n: int, i: int, a: int, b: int, d: int, conductor: Optional[int] = None) -> CycNum:
    """The alternative closed form q^{i a (b' + d' - (b+d)')}."""
    N = conductor or n * n
    F = field(N)
    q = F.root(N // (n * n))
    return q ** (i * a * (residue(b, n) + residue(d, n) - residue(b + d, n)))


def omega_iverson_form(n: int, i: int, a: int, b: int, d: int, conductor: Optional[int] = None) -> CycNum:
    N = conductor or n * n
    zeta = field(N).root(N // n)
    return zeta ** (i * a * (1 if residue(b, n) + residue(d, n) > n - 1 else 0))


def cyclic_dqb(n: int, i: int = 1, conductor: Optional[int] = None, check: bool = True) -> DualQuasiBialgebra:
    """(kC_n, omega_{zeta^i})."""
    N = conductor or n * n
    H = group_coalgebra(cyclic(n), N)
    om = omega_zeta(n, i, N)
    return DualQuasiBialgebra(H, om, om.pointwise_inverse(), check=check, name=f"(kC_{n}, w_zeta^{i})")


def trivial_group_dqb(G: FiniteGroup, conductor: int, check: bool = True) -> DualQuasiBialgebra:
    H = group_coalgebra(G, conductor)
    e = Functional.eps(H, 3)
    return DualQuasiBialgebra(H, e, e, check=check, name=f"k{G.name}")


def group_dqb(G: FiniteGroup, omega: Functional, conductor: Optional[int] = None, check: bool = True,
              name: Optional[str] = None) -> DualQuasiBialgebra:
    """(kG, omega) for a normalized 3-cocycle omega on G (verified)."""
    N = conductor or omega.F.conductor
    H = group_coalgebra(G, N)
    om = Functional(3, omega.data, H.F)
    inv = om.pointwise_inverse() if len(om) == G.order ** 3 else None
    return DualQuasiBialgebra(H, om, inv, check=check, name=name or f"(k{G.name}, w)")


def v_gauge(n: int, i: int, conductor: Optional[int] = None) -> Functional:
    """v_i(C^a (x) C^b) = q^{i a (b - b')} on kC_{n^2}."""
    N = conductor or n * n
    F = field(N)
    q = F.root(N // (n * n))
    data = {}
    for a, b in itertools.product(range(n * n), repeat=2):
        data[(a, b)] = q ** (i * a * (b - residue(b, n)))
    return Functional(2, data, F)


def phi_map(n: int, source: StructuredCoalgebra, target: StructuredCoalgebra) -> LinearMap:
    """kC_{n^2} -> kC_n, C^k -> c^{k mod n}."""
    return LinearMap(source, target, [{k % n: target.F.one} for k in range(n * n)])


def pulled_back_cyclic(n: int, i: int = 1, conductor: Optional[int] = None,
                       check: bool = True) -> DualQuasiBialgebra:
    """(kC_{n^2}, omega_{zeta^i} o phi^3)."""
    N = conductor or n * n
    G = cyclic(n * n, "C")
    H = group_coalgebra(G, N)
    target = group_coalgebra(cyclic(n), N)
    om = omega_zeta(n, i, N).pullback(phi_map(n, H, target))
    return DualQuasiBialgebra(H, om, om.pointwise_inverse(), check=check,
                              name=f"(kC_{n * n}, w_zeta^{i} phi)")


def projection_phi(n: int, i: int = 1, conductor: Optional[int] = None) -> DqbMorphism:
    """phi: (kC_{n^2}, omega o phi^3) -> (kC_n, omega_{zeta^i})."""
    src = pulled_back_cyclic(n, i, conductor)
    tgt = cyclic_dqb(n, i, conductor)
    return DqbMorphism(src, tgt, phi_map(n, src.H, tgt.H), "phi")


def coboundary_witness_check(n: int, i: int, conductor: Optional[int] = None) -> Report:
    """d^2 v_i = omega_{zeta^i} o phi^3 on all basis triples of kC_{n^2}."""
    N = conductor or n * n
    rep = Report(f"coboundary witness v_{i} on kC_{n * n}")
    G = cyclic(n * n, "C")
    H = group_coalgebra(G, N)
    target = group_coalgebra(cyclic(n), N)
    v = v_gauge(n, i, N)
    rep.run("v_i normalized", lambda: _normalized2(v, H))

    def eq():
        lhs = coboundary(v, H, v.pointwise_inverse())
        rhs = omega_zeta(n, i, N).pullback(phi_map(n, H, target))
        return compare_maps(lhs, rhs, H.labels)

    rep.run("d^2 v_i = omega o phi^3", eq)
    return rep


def _normalized2(v: Functional, H: StructuredCoalgebra):
    one = H.unit_index()
    for h in range(H.dim):
        if v(one, h) != H.counit[h] or v(h, one) != H.counit[h]:
            return False, (H.labels[h],)
    return True, None


def dicyclic_dqb(p: int, n: int = 4, i: int = 1, check: bool = True) -> tuple[DualQuasiBialgebra, DqbMorphism]:
    """(kDic_p, omega_G = omega_zeta o pi^3) and the projection pi(y^i x^j) = c^j onto kC_4."""
    if n != 4:
        raise ValueError("the dicyclic projection lands in kC_4")
    N = n * n
    G = dicyclic(p)
    H = group_coalgebra(G, N)
    tgt = cyclic_dqb(n, i, N)
    pi = LinearMap(H, tgt.H, [{(g // p) % 4: H.F.one} for g in range(G.order)])
    om = tgt.omega.pullback(pi)
    src = DualQuasiBialgebra(H, om, om.pointwise_inverse(), check=check, name=f"(kDic_{p}, w_G)")
    return src, DqbMorphism(src, tgt, pi, "pi")


def dicyclic_projection(p: int) -> DqbMorphism:
    return dicyclic_dqb(p)[1]


def quasi_hopf_antipode_check(n: int, i: int, beta: str = "trivial") -> Report:
    """S(c^j) = c^-j with alpha = eps against the dual quasi-Hopf antipode identities.

    beta="trivial" takes beta = eps as well.  That only works when i = 0, since
    omega_{zeta^i}(c^j, c^-j, c^j) = zeta^{ij}.  beta="corrected" takes
    beta(c^j) = zeta^{-ij}, which satisfies both identities for every i.
    """
    D = cyclic_dqb(n, i)
    H = D.H
    F = H.F
    om, omi = D.omega, D.omega_inv
    S = [(-j) % n for j in range(n)]
    alpha = list(H.counit)
    if beta == "trivial":
        bet = list(H.counit)
    elif beta == "corrected":
        zeta = F.root(F.conductor // n)
        bet = [zeta ** (-i * j) for j in range(n)]
    else:
        raise ValueError(f"unknown beta choice {beta!r}")
    rep = Report(f"dual quasi-Hopf antipode for (kC_{n}, w_zeta^{i}), beta={beta}")
    rep.info["beta"] = ", ".join(str(b) for b in bet)
    lab = H.labels
    one = {H.unit_index(): F.one}

    # every Sweedler leg of a grouplike c^j is c^j itself
    def first():
        for j in range(n):
            left = {k: c * alpha[j] for k, c in H.mul_vec({S[j]: F.one}, {j: F.one}).items()}
            right = {k: c * bet[j] for k, c in H.mul_vec({j: F.one}, {S[j]: F.one}).items()}
            if left != {k: c * alpha[j] for k, c in one.items()} or \
                    right != {k: c * bet[j] for k, c in one.items()}:
                return False, (lab[j],)
        return True, None

    def second():
        for j in range(n):
            a = om(j, S[j], j) * bet[j] * alpha[j]
            b = omi(S[j], j, S[j]) * alpha[j] * bet[j]
            if a != F.one:
                return False, (lab[j],), f"omega side = {a}"
            if b != F.one:
                return False, (lab[j],), f"omega^-1 side = {b}"
        return True, None

    def special():
        for j in range(n):
            if om(j, S[j], j) != F.one:
                return False, (lab[j], lab[S[j]], lab[j]), f"value {om(j, S[j], j)}"
        return True, None

    rep.run("S(h1) alpha(h2) h3 = alpha(h)1, h1 beta(h2) S(h3) = beta(h)1", first)
    rep.run("omega(h1 beta(h2), S(h3), alpha(h4) h5) = omega^-1(S(h1), alpha(h2) h3, beta(h4) S(h5)) = eps",
            second)
    if beta == "trivial":
        rep.run("omega(c^j, c^-j, c^j) = 1", special)
    return rep


def omegatrick_check(D: DualQuasiBialgebra, g: int, bound: int) -> Report:
    """omega^-1(g^a, g^b, g^c) equals the product formula, all 0 <= a, b, c <= bound."""
    H = D.H
    om, omi = D.omega, D.omega_inv
    pw = [H.power(g, t) for t in range(3 * bound + 2)]
    rep = Report("omega^-1 on powers of a grouplike")

    def run():
        for a, b, c in itertools.product(range(bound + 1), repeat=3):
            lhs = omi.on_vectors(pw[a], pw[b], pw[c])
            rhs = H.F.one
            gv = pw[1]
            for j in range(a):
                rhs = rhs * omi.on_vectors(gv, pw[j + b], pw[c]) * omi.on_vectors(gv, pw[j], pw[b]) \
                    * om.on_vectors(gv, pw[j], pw[b + c])
            if lhs != rhs:
                return False, (a, b, c)
        return True, None

    rep.run("power reassociation identity", run)
    return rep


def lem_go_count(n: int, a: int) -> tuple[int, int]:
    """(|{i < a : i' = n-1}| by brute force, (a - a')/n)."""
    brute = sum(1 for i in range(a) if residue(i, n) == n - 1)
    return brute, (a - residue(a, n)) // n
