"""Coalgebras with multiplication and unit, functionals on tensor powers, convolution.

A :class:`StructuredCoalgebra` stores its structure constants sparsely.
Functionals on H^{(x)k} are sparse dicts from index tuples to CycNum; an
:class:`HMap` is the H-valued analogue (values are sparse vectors).  Both are
convolved in Hom(H^{(x)k}, -) where H^{(x)k} carries the componentwise
coproduct.
"""

from __future__ import annotations

import itertools
from typing import Callable, Iterable, Optional, Sequence, Union

from .cyclotomic import CycNum, CyclotomicField, field
from .linsolve import SingularSystem, solve_dense_bareiss, solve_sparse
from .report import AxiomError, Report

Vec = dict  # basis index -> CycNum


def vec_add(acc: dict, v: dict, c: CycNum = None) -> None:
    """acc += c * v in place (zeros pruned)."""
    for k, x in v.items():
        y = x if c is None else c * x
        z = acc.get(k)
        if z is None:
            acc[k] = y
        else:
            s = z + y
            if s:
                acc[k] = s
            else:
                del acc[k]


def prune(d: dict) -> dict:
    return {k: v for k, v in d.items() if v}


def first_difference(a: dict, b: dict, zero=None):
    """First key (in sorted order) where two sparse dicts differ, or None."""
    keys = set(a) | set(b)
    bad = [k for k in keys if a.get(k, zero) != b.get(k, zero) and not _both_zero(a.get(k), b.get(k))]
    if not bad:
        return None
    return min(bad)


def _both_zero(x, y) -> bool:
    def z(v):
        if v is None:
            return True
        if isinstance(v, dict):
            return not any(v.values())
        return not v
    return z(x) and z(y)


class StructuredCoalgebra:
    """(H, Delta, eps, m, u) on a fixed basis e_0..e_{d-1}.

    delta[i] is a list of (j, k, c) meaning Delta(e_i) = sum c e_j (x) e_k;
    mul maps (i, j) to a list of (k, c); unit is a list of (k, c).
    """

    def __init__(self, conductor: int, labels: Sequence[str], delta, counit, mul, unit, check: bool = True):
        self.F: CyclotomicField = field(conductor)
        self.dim = len(labels)
        self.labels = list(labels)
        F = self.F
        self.delta: list[list[tuple]] = [
            [(j, k, F(c)) for j, k, c in _merge3(delta[i]) if c] for i in range(self.dim)
        ]
        self.counit: list[CycNum] = [F(c) for c in counit]
        self.mul: dict[tuple, list] = {}
        for key, terms in mul.items():
            t = [(k, F(c)) for k, c in _merge1(terms) if c]
            if t:
                self.mul[tuple(key)] = t
        self.unit: dict[int, CycNum] = prune({k: F(c) for k, c in _merge1(unit)})
        self._inv_delta = None
        self._inv_mul = None
        self._mul_vec = None
        if check:
            rep = check_coalgebra(self)
            if not rep.ok:
                raise AxiomError(rep)

    # -- constructors ----------------------------------------------------

    @classmethod
    def group_algebra(cls, conductor: int, labels: Sequence[str], table: Sequence[Sequence[int]], identity: int,
                      check: bool = True) -> "StructuredCoalgebra":
        n = len(labels)
        delta = [[(i, i, 1)] for i in range(n)]
        mul = {(i, j): [(table[i][j], 1)] for i in range(n) for j in range(n)}
        return cls(conductor, labels, delta, [1] * n, mul, [(identity, 1)], check=check)

    # -- derived data -----------------------------------------------------

    @property
    def field(self) -> CyclotomicField:
        return self.F

    @property
    def conductor(self) -> int:
        return self.F.conductor

    @property
    def inv_delta(self) -> dict:
        """(j, k) -> [(i, c)] with c the coefficient of e_j (x) e_k in Delta(e_i)."""
        if self._inv_delta is None:
            inv: dict = {}
            for i, terms in enumerate(self.delta):
                for j, k, c in terms:
                    inv.setdefault((j, k), []).append((i, c))
            self._inv_delta = inv
        return self._inv_delta

    @property
    def inv_mul(self) -> dict:
        """k -> [(i, j, c)] with c the coefficient of e_k in e_i e_j."""
        if self._inv_mul is None:
            inv: dict = {}
            for (i, j), terms in self.mul.items():
                for k, c in terms:
                    inv.setdefault(k, []).append((i, j, c))
            self._inv_mul = inv
        return self._inv_mul

    def mul_basis(self, i: int, j: int) -> list:
        return self.mul.get((i, j), [])

    def mul_vec(self, x: dict, y: dict) -> dict:
        out: dict = {}
        for i, a in x.items():
            for j, b in y.items():
                ab = a * b
                for k, c in self.mul.get((i, j), ()):
                    vec_add(out, {k: c}, ab)
        return out

    def unit_index(self) -> Optional[int]:
        """Index of 1_H when it is a basis element."""
        if len(self.unit) == 1:
            (k, c), = self.unit.items()
            if c.is_one():
                return k
        return None

    def basis_vec(self, i: int) -> dict:
        return {i: self.F.one}

    def eps_vec(self, x: dict) -> CycNum:
        acc = self.F.zero
        for i, c in x.items():
            if self.counit[i]:
                acc = acc + c * self.counit[i]
        return acc

    def is_grouplike(self, i: int) -> bool:
        return self.counit[i].is_one() and len(self.delta[i]) == 1 and self.delta[i][0][:2] == (i, i) \
            and self.delta[i][0][2].is_one()

    def grouplike_basis(self) -> list[int]:
        return [i for i in range(self.dim) if self.is_grouplike(i)]

    def power(self, g: int, t: int) -> dict:
        """g^t as a vector, left-nested: g^t = g * g^(t-1), g^0 = 1_H."""
        x = dict(self.unit)
        gv = {g: self.F.one}
        for _ in range(t):
            x = self.mul_vec(gv, x)
        return x

    def power_index(self, g: int, t: int) -> int:
        v = self.power(g, t)
        if len(v) != 1 or not next(iter(v.values())).is_one():
            raise ValueError(f"{self.labels[g]}^{t} is not a basis element")
        return next(iter(v))

    def label(self, i: int) -> str:
        return self.labels[i]

    def __repr__(self) -> str:
        return f"StructuredCoalgebra(dim={self.dim}, conductor={self.conductor})"


def _merge3(terms) -> list:
    acc: dict = {}
    for j, k, c in terms:
        acc[(j, k)] = acc[(j, k)] + c if (j, k) in acc else c
    return [(j, k, c) for (j, k), c in acc.items()]


def _merge1(terms) -> list:
    if isinstance(terms, dict):
        terms = terms.items()
    acc: dict = {}
    for k, c in terms:
        acc[k] = acc[k] + c if k in acc else c
    return list(acc.items())


class Functional:
    """A linear map H^{(x)arity} -> k stored by its nonzero values on basis tuples."""

    __slots__ = ("arity", "data", "F")

    def __init__(self, arity: int, data: dict, F: CyclotomicField):
        self.arity = arity
        self.F = F
        self.data = {tuple(k): F(v) for k, v in data.items() if v}

    @classmethod
    def from_function(cls, H: StructuredCoalgebra, arity: int, fn: Callable) -> "Functional":
        data = {}
        for key in itertools.product(range(H.dim), repeat=arity):
            v = fn(*key)
            if v:
                data[key] = v
        return cls(arity, data, H.F)

    @classmethod
    def eps(cls, H: StructuredCoalgebra, arity: int) -> "Functional":
        """The convolution unit eps^{(x)arity}."""
        supp = [(i, c) for i, c in enumerate(H.counit) if c]
        data = {}
        for combo in itertools.product(supp, repeat=arity):
            v = H.F.one
            for _, c in combo:
                v = v * c
            data[tuple(i for i, _ in combo)] = v
        return cls(arity, data, H.F)

    def __call__(self, *key) -> CycNum:
        return self.data.get(key, self.F.zero)

    def on_vectors(self, *vecs: dict) -> CycNum:
        """Multilinear extension to arbitrary (sparse vector) arguments."""
        acc = self.F.zero
        for combo in itertools.product(*[list(v.items()) for v in vecs]):
            key = tuple(i for i, _ in combo)
            val = self.data.get(key)
            if val is not None:
                for _, c in combo:
                    val = val * c
                acc = acc + val
        return acc

    def items(self):
        return self.data.items()

    def __len__(self) -> int:
        return len(self.data)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Functional):
            return NotImplemented
        return self.arity == other.arity and self.data == other.data

    def __repr__(self) -> str:
        return f"Functional(arity={self.arity}, support={len(self.data)})"

    def scale(self, a) -> "Functional":
        a = self.F(a)
        return Functional(self.arity, {k: v * a for k, v in self.data.items()}, self.F)

    def table(self, H: StructuredCoalgebra) -> dict:
        return {tuple(H.labels[i] for i in k): v for k, v in sorted(self.data.items())}

    def precompose_mul(self, H: StructuredCoalgebra, pos: int) -> "Functional":
        """f o (H^{pos} (x) m (x) H^{...}); arity grows by one."""
        inv = H.inv_mul
        out: dict = {}
        for key, val in self.data.items():
            for i, j, c in inv.get(key[pos], ()):
                nk = key[:pos] + (i, j) + key[pos + 1:]
                _acc(out, nk, val * c)
        return Functional(self.arity + 1, out, self.F)

    def tensor(self, other: "Functional") -> "Functional":
        out = {}
        for k1, v1 in self.data.items():
            for k2, v2 in other.data.items():
                out[k1 + k2] = v1 * v2
        return Functional(self.arity + other.arity, out, self.F)

    def pullback(self, phi: "LinearMap") -> "Functional":
        """f o phi^{(x)arity} for a linear map phi: L -> H."""
        inv = phi.inverse_index()
        out: dict = {}
        for key, val in self.data.items():
            lists = [inv.get(j, ()) for j in key]
            for combo in itertools.product(*lists):
                v = val
                for _, c in combo:
                    v = v * c
                _acc(out, tuple(i for i, _ in combo), v)
        return Functional(self.arity, out, phi.source.F)

    def partial(self, fixed: dict) -> "Functional":
        """Fix some slots to given vectors, leaving a functional of the remaining slots in order."""
        free = [s for s in range(self.arity) if s not in fixed]
        out: dict = {}
        for key, val in self.data.items():
            v = val
            for s, vec in fixed.items():
                c = vec.get(key[s])
                if c is None:
                    v = None
                    break
                v = v * c
            if v is None:
                continue
            _acc(out, tuple(key[s] for s in free), v)
        return Functional(len(free), out, self.F)

    def permute(self, order: Sequence[int]) -> "Functional":
        """new(y_0..y_{k-1}) = self(y_{order[0]}, y_{order[1]}, ...)."""
        out = {}
        for key, v in self.data.items():
            y = [None] * self.arity
            for dst, src in enumerate(order):
                y[src] = key[dst]
            out[tuple(y)] = v
        return Functional(self.arity, out, self.F)

    def pointwise_inverse(self) -> "Functional":
        return Functional(self.arity, {k: v.inv() for k, v in self.data.items()}, self.F)


def _acc(d: dict, key, val) -> None:
    old = d.get(key)
    if old is None:
        d[key] = val
    else:
        s = old + val
        if s:
            d[key] = s
        else:
            del d[key]


class HMap:
    """A linear map H^{(x)arity} -> H; data maps index tuples to sparse vectors."""

    __slots__ = ("arity", "data", "F")

    def __init__(self, arity: int, data: dict, F: CyclotomicField):
        self.arity = arity
        self.F = F
        self.data = {}
        for k, v in data.items():
            v = prune(v)
            if v:
                self.data[tuple(k)] = v

    @classmethod
    def iterated_mul(cls, H: StructuredCoalgebra, bracket: str) -> "HMap":
        """'left' = m(m (x) H), 'right' = m(H (x) m) on all basis triples."""
        data = {}
        for a, b, c in itertools.product(range(H.dim), repeat=3):
            ea, eb, ec = H.basis_vec(a), H.basis_vec(b), H.basis_vec(c)
            if bracket == "left":
                v = H.mul_vec(H.mul_vec(ea, eb), ec)
            else:
                v = H.mul_vec(ea, H.mul_vec(eb, ec))
            if v:
                data[(a, b, c)] = v
        return cls(3, data, H.F)

    @classmethod
    def multiplication(cls, H: StructuredCoalgebra) -> "HMap":
        return cls(2, {k: dict(t) for k, t in H.mul.items()}, H.F)

    @classmethod
    def unit_times(cls, H: StructuredCoalgebra, f: Functional) -> "HMap":
        """u o f: x -> f(x) 1_H."""
        return cls(f.arity, {k: {i: c * v for i, c in H.unit.items()} for k, v in f.data.items()}, H.F)

    def items(self):
        return self.data.items()

    def __len__(self) -> int:
        return len(self.data)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HMap):
            return NotImplemented
        return self.arity == other.arity and self.data == other.data

    def __repr__(self) -> str:
        return f"HMap(arity={self.arity}, support={len(self.data)})"


Conv = Union[Functional, HMap]


def _conv_cost(f: Conv, g: Conv, H: StructuredCoalgebra, k: int) -> tuple[int, int]:
    pair = len(f) * len(g)
    per = sum(len(t) for t in H.delta)
    forward = per ** k
    return pair, forward


def convolve(f: Conv, g: Conv, H: StructuredCoalgebra, arity: Optional[int] = None) -> Conv:
    """(f * g)(x) = f(x_1) g(x_2) in the convolution algebra of H^{(x)k}.

    Scalar-valued operands are Functionals; H-valued operands are HMaps, whose
    values are multiplied with m_H.  The result is exact on every basis tuple;
    tuples outside the returned support evaluate to zero.
    """
    k = f.arity
    if g.arity != k or (arity is not None and arity != k):
        raise ValueError(f"arity mismatch: {f.arity} vs {g.arity}")
    hv_f = isinstance(f, HMap)
    hv_g = isinstance(g, HMap)
    pair, forward = _conv_cost(f, g, H, k)
    out: dict = {}
    if pair <= forward:
        inv = H.inv_delta
        for y, fy in f.data.items():
            for z, gz in g.data.items():
                lists = []
                for s in range(k):
                    lst = inv.get((y[s], z[s]))
                    if lst is None:
                        break
                    lists.append(lst)
                else:
                    val = _times(fy, gz, hv_f, hv_g, H)
                    if not val:
                        continue
                    for combo in itertools.product(*lists):
                        c = None
                        for _, cc in combo:
                            c = cc if c is None else c * cc
                        x = tuple(i for i, _ in combo)
                        _acc_any(out, x, val, c, hv_f or hv_g)
    else:
        fd, gd = f.data, g.data
        for x in itertools.product(range(H.dim), repeat=k):
            terms = [H.delta[i] for i in x]
            for combo in itertools.product(*terms):
                y = tuple(t[0] for t in combo)
                fy = fd.get(y)
                if fy is None:
                    continue
                z = tuple(t[1] for t in combo)
                gz = gd.get(z)
                if gz is None:
                    continue
                c = None
                for t in combo:
                    c = t[2] if c is None else c * t[2]
                val = _times(fy, gz, hv_f, hv_g, H)
                if val:
                    _acc_any(out, x, val, c, hv_f or hv_g)
    if hv_f or hv_g:
        return HMap(k, out, H.F)
    return Functional(k, out, H.F)


def _times(a, b, va: bool, vb: bool, H: StructuredCoalgebra):
    if not va and not vb:
        return a * b
    if va and vb:
        return H.mul_vec(a, b)
    if va:
        return {i: c * b for i, c in a.items()}
    return {i: c * a for i, c in b.items()}


def _acc_any(out: dict, x, val, c, vector: bool) -> None:
    if not vector:
        _acc(out, x, val * c if c is not None else val)
        return
    acc = out.get(x)
    if acc is None:
        acc = out[x] = {}
    vec_add(acc, val, c)


def convolve_many(factors: Sequence[Conv], H: StructuredCoalgebra) -> Conv:
    acc = factors[0]
    for f in factors[1:]:
        acc = convolve(acc, f, H)
    return acc


def conv_inverse(f: Functional, H: StructuredCoalgebra, arity: Optional[int] = None, method: str = "sparse",
                 verify: bool = True) -> Functional:
    """The two-sided convolution inverse of f on H^{(x)k}.

    Solves f * g = eps^{(x)k} exactly for all d^k values of g, then checks
    g * f = eps^{(x)k} too.  Raises SingularSystem when f is not invertible.
    """
    k = f.arity if arity is None else arity
    if f.arity != k:
        raise ValueError("arity mismatch")
    d = H.dim
    F = H.F
    unknowns = d ** k
    # support projections of f per slot prune the coproduct expansion
    proj = [set() for _ in range(k)]
    for y in f.data:
        for s in range(k):
            proj[s].add(y[s])
    filtered = [[[t for t in H.delta[i] if t[0] in proj[s]] for i in range(d)] for s in range(k)]
    eps = Functional.eps(H, k)

    def index(t):
        r = 0
        for i in t:
            r = r * d + i
        return r

    rows, rhs = [], []
    for x in itertools.product(range(d), repeat=k):
        row: dict = {}
        for combo in itertools.product(*[filtered[s][x[s]] for s in range(k)]):
            fy = f.data.get(tuple(t[0] for t in combo))
            if fy is None:
                continue
            c = fy
            for t in combo:
                c = c * t[2]
            col = index(tuple(t[1] for t in combo))
            nv = row.get(col, F.zero) + c
            if nv:
                row[col] = nv
            else:
                row.pop(col, None)
        rows.append(row)
        rhs.append(eps(*x))
    if method == "dense":
        A = [[row.get(c, F.zero) for c in range(unknowns)] for row in rows]
        sol = solve_dense_bareiss(A, rhs, F)
    else:
        sol = solve_sparse(rows, rhs, unknowns, F)
    data = {}
    for x, v in zip(itertools.product(range(d), repeat=k), sol):
        if v:
            data[x] = v
    g = Functional(k, data, F)
    if verify:
        if convolve(f, g, H).data != eps.data or convolve(g, f, H).data != eps.data:
            raise SingularSystem("solution is not a two-sided convolution inverse")
    return g


class LinearMap:
    """A linear map source -> target given by sparse columns: col[i] is the image of e_i."""

    def __init__(self, source, target, columns: Sequence[dict]):
        self.source = source
        self.target = target
        self.columns = [prune({j: target.F(c) for j, c in col.items()}) for col in columns]
        self._inv = None

    @classmethod
    def from_function(cls, source, target, fn: Callable[[int], dict]) -> "LinearMap":
        return cls(source, target, [fn(i) for i in range(source.dim)])

    @classmethod
    def identity(cls, H) -> "LinearMap":
        return cls(H, H, [{i: H.F.one} for i in range(H.dim)])

    def inverse_index(self) -> dict:
        if self._inv is None:
            inv: dict = {}
            for i, col in enumerate(self.columns):
                for j, c in col.items():
                    inv.setdefault(j, []).append((i, c))
            self._inv = inv
        return self._inv

    def apply(self, x: dict) -> dict:
        out: dict = {}
        for i, c in x.items():
            vec_add(out, self.columns[i], c)
        return out

    def compose(self, other: "LinearMap") -> "LinearMap":
        """self o other."""
        return LinearMap(other.source, self.target, [self.apply(col) for col in other.columns])

    def matrix(self) -> list[list[CycNum]]:
        F = self.target.F
        return [[self.columns[i].get(j, F.zero) for i in range(self.source.dim)] for j in range(self.target.dim)]

    def is_identity(self) -> bool:
        return self.source.dim == self.target.dim and all(
            col == {i: self.target.F.one} for i, col in enumerate(self.columns))


def iterated_delta(H: StructuredCoalgebra, i: int, parts: int) -> dict:
    """Delta^{(parts)}(e_i), left-nested; returns {index tuple: coefficient}."""
    if parts < 1:
        raise ValueError("parts must be >= 1")
    cur = {(i,): H.F.one}
    for _ in range(parts - 1):
        nxt: dict = {}
        for key, c in cur.items():
            for j, k, cc in H.delta[key[0]]:
                _acc(nxt, (j, k) + key[1:], c * cc)
        cur = nxt
    return cur


def apply(f: Functional, x: dict) -> CycNum:
    """Evaluate f on a tensor element {index tuple: coefficient}."""
    acc = f.F.zero
    for key, c in x.items():
        v = f.data.get(tuple(key))
        if v is not None:
            acc = acc + v * c
    return acc


def check_coalgebra(H: StructuredCoalgebra, report: Optional[Report] = None) -> Report:
    """Coassociativity, counit laws, and that m and u are coalgebra maps."""
    rep = report if report is not None else Report("coalgebra with multiplication and unit")
    F = H.F
    lab = H.labels

    def coassoc():
        for i in range(H.dim):
            left: dict = {}
            right: dict = {}
            for j, k, c in H.delta[i]:
                for a, b, cc in H.delta[j]:
                    _acc(left, (a, b, k), c * cc)
                for a, b, cc in H.delta[k]:
                    _acc(right, (j, a, b), c * cc)
            if left != right:
                return False, (lab[i],), f"term {first_difference(left, right)}"
        return True, None

    def counit():
        for i in range(H.dim):
            l: dict = {}
            r: dict = {}
            for j, k, c in H.delta[i]:
                if H.counit[j]:
                    _acc(l, k, c * H.counit[j])
                if H.counit[k]:
                    _acc(r, j, c * H.counit[k])
            if l != {i: F.one} or r != {i: F.one}:
                return False, (lab[i],)
        return True, None

    def mul_coalg():
        for a in range(H.dim):
            for b in range(H.dim):
                mv = dict(H.mul.get((a, b), ()))
                left: dict = {}
                for k, c in mv.items():
                    for j1, j2, cc in H.delta[k]:
                        _acc(left, (j1, j2), c * cc)
                right: dict = {}
                for a1, a2, c1 in H.delta[a]:
                    for b1, b2, c2 in H.delta[b]:
                        c12 = c1 * c2
                        for k1, d1 in H.mul.get((a1, b1), ()):
                            for k2, d2 in H.mul.get((a2, b2), ()):
                                _acc(right, (k1, k2), c12 * d1 * d2)
                if left != right:
                    return False, (lab[a], lab[b]), "Delta m"
                em = H.eps_vec(mv)
                if em != H.counit[a] * H.counit[b]:
                    return False, (lab[a], lab[b]), "eps m"
        return True, None

    def unit_coalg():
        left: dict = {}
        for k, c in H.unit.items():
            for j1, j2, cc in H.delta[k]:
                _acc(left, (j1, j2), c * cc)
        right = {}
        for k1, c1 in H.unit.items():
            for k2, c2 in H.unit.items():
                right[(k1, k2)] = c1 * c2
        if prune(left) != prune(right):
            return False, ("1",), "Delta(1) != 1 (x) 1"
        if H.eps_vec(H.unit) != F.one:
            return False, ("1",), "eps(1) != 1"
        return True, None

    rep.run("coassociativity", coassoc)
    rep.run("counit", counit)
    rep.run("multiplication is a coalgebra map", mul_coalg)
    rep.run("unit is a coalgebra map", unit_coalg)
    return rep


def compare_maps(lhs: Conv, rhs: Conv, labels: Sequence[str]):
    """(ok, counterexample labels, detail) for two sparse maps on basis tuples."""
    if lhs.data == rhs.data:
        return True, None, ""
    key = first_difference(lhs.data, rhs.data)
    if key is None:
        return True, None, ""
    lv = lhs.data.get(key, 0)
    rv = rhs.data.get(key, 0)
    return False, tuple(labels[i] for i in key), f"lhs={_fmt(lv)} rhs={_fmt(rv)}"


def _fmt(v) -> str:
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}: {x}" for k, x in sorted(v.items())) + "}"
    return str(v)


__all__ = [
    "StructuredCoalgebra",
    "Functional",
    "HMap",
    "LinearMap",
    "TensorElement",
    "iterated_delta",
    "convolve",
    "convolve_many",
    "conv_inverse",
    "check_coalgebra",
    "apply",
    "compare_maps",
    "SingularSystem",
    "vec_add",
]

# an element of H^{(x)k}: {index tuple: nonzero coefficient}
TensorElement = dict
