"""Dual quasi-bialgebras: axioms, gauge transformations, twisting, morphisms."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Optional

from .coalg_core import (
    Functional,
    HMap,
    LinearMap,
    StructuredCoalgebra,
    check_coalgebra,
    compare_maps,
    conv_inverse,
    convolve,
    convolve_many,
)
from .report import AxiomError, Report

FAMILIES = ("coalgebra", "unitarity", "normalization", "omega inverse", "3-cocycle", "quasi-associativity")


class DualQuasiBialgebra:
    """(H, Delta, eps, m, u, omega).  Verified on construction unless check=False."""

    def __init__(self, H: StructuredCoalgebra, omega: Functional, omega_inv: Optional[Functional] = None,
                 check: bool = True, name: str = "H"):
        if omega.arity != 3:
            raise ValueError("reassociator must have arity 3")
        self.H = H
        self.omega = omega
        self.omega_inv = omega_inv if omega_inv is not None else conv_inverse(omega, H)
        self.name = name
        if check:
            rep = verify_dqb(self)
            if not rep.ok:
                raise AxiomError(rep)

    @property
    def dim(self) -> int:
        return self.H.dim

    @property
    def F(self):
        return self.H.F

    @property
    def labels(self):
        return self.H.labels

    def __repr__(self) -> str:
        return f"DualQuasiBialgebra({self.name}, dim={self.dim})"


def eps_tensor(H: StructuredCoalgebra, f: Functional, left: bool) -> Functional:
    """eps (x) f when left, else f (x) eps."""
    e = Functional.eps(H, 1)
    return e.tensor(f) if left else f.tensor(e)


def check_normalized(f: Functional, H: StructuredCoalgebra, positions=None):
    """f has the value eps...eps whenever one of the given slots is 1_H."""
    k = f.arity
    target = Functional.eps(H, k - 1)
    for pos in (range(k) if positions is None else positions):
        got = f.partial({pos: H.unit})
        ok, cex, detail = compare_maps(got, target, H.labels)
        if not ok:
            cex = cex[:pos] + ("1",) + cex[pos:]
            return False, cex, detail
    return True, None


def _family(D: DualQuasiBialgebra, name: str) -> tuple:
    H = D.H
    lab = H.labels
    om, omi = D.omega, D.omega_inv
    if name == "coalgebra":
        rep = check_coalgebra(H)
        bad = rep.failures()
        if bad:
            return False, bad[0].counterexample, bad[0].name
        return True, None
    if name == "unitarity":
        for h in range(H.dim):
            e = H.basis_vec(h)
            if H.mul_vec(H.unit, e) != e:
                return False, ("1", lab[h]), "m(1 (x) h) != h"
            if H.mul_vec(e, H.unit) != e:
                return False, (lab[h], "1"), "m(h (x) 1) != h"
        return True, None
    if name == "normalization":
        return check_normalized(om, H)
    if name == "omega inverse":
        eps3 = Functional.eps(H, 3)
        for lhs in (convolve(om, omi, H), convolve(omi, om, H)):
            res = compare_maps(lhs, eps3, lab)
            if not res[0]:
                return res
        return True, None
    if name == "3-cocycle":
        lhs = convolve_many([eps_tensor(H, om, True), om.precompose_mul(H, 1), eps_tensor(H, om, False)], H)
        rhs = convolve(om.precompose_mul(H, 2), om.precompose_mul(H, 0), H)
        return compare_maps(lhs, rhs, lab)
    if name == "quasi-associativity":
        uom = HMap.unit_times(H, om)
        lhs = convolve(HMap.iterated_mul(H, "right"), uom, H)
        rhs = convolve(uom, HMap.iterated_mul(H, "left"), H)
        return compare_maps(lhs, rhs, lab)
    raise KeyError(name)


def _family_job(args):
    D, name = args
    import time
    t0 = time.perf_counter()
    res = _family(D, name)
    return name, res, time.perf_counter() - t0


def resolve_jobs(jobs: Optional[int]) -> int:
    if jobs is None:
        env = os.environ.get("QUASILINE_JOBS")
        jobs = int(env) if env else 1
    return max(1, int(jobs))


def verify_dqb(D: DualQuasiBialgebra, jobs: Optional[int] = None, families=FAMILIES) -> Report:
    """Exhaustive exact check of every dual quasi-bialgebra axiom.

    Each family reports its first counterexample as basis labels.  With
    jobs > 1 the families run in a process pool.
    """
    rep = Report(f"dual quasi-bialgebra {D.name} (dim {D.dim})")
    jobs = resolve_jobs(jobs)
    if jobs > 1 and len(families) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(_family_job, [(D, f) for f in families]))
        for name, res, dt in results:
            rep.add(name, res[0], res[1] if len(res) > 1 else None, res[2] if len(res) > 2 else "", dt)
    else:
        for f in families:
            rep.run(f, lambda f=f: _family(D, f))
    return rep


class GaugeTransformation:
    """A normalized convolution-invertible v: H (x) H -> k."""

    def __init__(self, H: StructuredCoalgebra, v: Functional, v_inv: Optional[Functional] = None,
                 check: bool = True):
        self.H = H
        self.v = v
        self.v_inv = v_inv if v_inv is not None else conv_inverse(v, H)
        if check:
            rep = self.verify()
            if not rep.ok:
                raise AxiomError(rep)

    def verify(self) -> Report:
        rep = Report("gauge transformation")
        rep.run("normalized", lambda: check_normalized(self.v, self.H))
        eps2 = Functional.eps(self.H, 2)
        rep.run("v * v^-1 = eps", lambda: compare_maps(convolve(self.v, self.v_inv, self.H), eps2, self.H.labels))
        rep.run("v^-1 * v = eps", lambda: compare_maps(convolve(self.v_inv, self.v, self.H), eps2, self.H.labels))
        return rep

    def inverse(self) -> "GaugeTransformation":
        return GaugeTransformation(self.H, self.v_inv, self.v, check=False)


def coboundary(v: Functional, H: StructuredCoalgebra, v_inv: Optional[Functional] = None) -> Functional:
    """d^2 v = (eps (x) v) * v^-1(m (x) H) * v(H (x) m) * (v^-1 (x) eps)."""
    vi = v_inv if v_inv is not None else conv_inverse(v, H)
    return convolve_many([
        eps_tensor(H, v, True),
        vi.precompose_mul(H, 0),
        v.precompose_mul(H, 1),
        eps_tensor(H, vi, False),
    ], H)


def twisted_mul(H: StructuredCoalgebra, v: Functional, v_inv: Functional) -> HMap:
    """m^v = v * m * v^-1."""
    return convolve(convolve(v, HMap.multiplication(H), H), v_inv, H)


def twisted_omega(D: DualQuasiBialgebra, v: Functional, v_inv: Functional) -> tuple[Functional, Functional]:
    """omega^v and its inverse, both from closed convolution formulas."""
    H = D.H
    ov = convolve_many([
        eps_tensor(H, v, True),
        v.precompose_mul(H, 1),
        D.omega,
        v_inv.precompose_mul(H, 0),
        eps_tensor(H, v_inv, False),
    ], H)
    # inverse of a convolution product: reversed product of inverses
    ovi = convolve_many([
        eps_tensor(H, v, False),
        v.precompose_mul(H, 0),
        D.omega_inv,
        v_inv.precompose_mul(H, 1),
        eps_tensor(H, v_inv, True),
    ], H)
    return ov, ovi


def twist(D: DualQuasiBialgebra, gauge, check: bool = True) -> DualQuasiBialgebra:
    """The twisted dual quasi-bialgebra (H^v, omega^v).  Delta, eps and u are unchanged."""
    if isinstance(gauge, Functional):
        gauge = GaugeTransformation(D.H, gauge)
    g = gauge
    H = D.H
    if check:
        r = check_normalized(g.v, H)
        if not r[0]:
            raise ValueError(f"gauge is not normalized at {r[1]}")
    mv = twisted_mul(H, g.v, g.v_inv)
    Hv = StructuredCoalgebra(H.conductor, H.labels, [[t for t in ts] for ts in H.delta], H.counit,
                             {k: list(val.items()) for k, val in mv.data.items()}, list(H.unit.items()),
                             check=False)
    ov, ovi = twisted_omega(D, g.v, g.v_inv)
    return DualQuasiBialgebra(Hv, ov, ovi, check=check, name=D.name + "^v")


def normalize_gauge(v: Functional, D: DualQuasiBialgebra) -> GaugeTransformation:
    """a v with a = v(1 (x) 1)^-1, after checking that omega^v is normalized."""
    H = D.H
    vi = conv_inverse(v, H)
    ov, _ = twisted_omega(D, v, vi)
    r = check_normalized(ov, H)
    if not r[0]:
        raise ValueError(f"omega^v is not normalized at {r[1]}")
    a = v.on_vectors(H.unit, H.unit).inv()
    return GaugeTransformation(H, v.scale(a), vi.scale(a.inv()))


class DqbMorphism:
    def __init__(self, source: DualQuasiBialgebra, target: DualQuasiBialgebra, phi: LinearMap,
                 name: str = "phi"):
        self.source = source
        self.target = target
        self.phi = phi
        self.name = name

    @classmethod
    def from_function(cls, source, target, fn, name: str = "phi") -> "DqbMorphism":
        return cls(source, target, LinearMap.from_function(source.H, target.H, fn), name)

    def apply(self, x: dict) -> dict:
        return self.phi.apply(x)


def check_morphism(f: DqbMorphism) -> Report:
    """Coalgebra map, multiplicative, unital, and omega_target o phi^3 = omega_source."""
    L, H = f.source.H, f.target.H
    phi = f.phi
    rep = Report(f"morphism {f.name}: {f.source.name} -> {f.target.name}")

    def coalg():
        for i in range(L.dim):
            img = phi.columns[i]
            left: dict = {}
            for k, c in img.items():
                for a, b, cc in H.delta[k]:
                    _acc(left, (a, b), c * cc)
            right: dict = {}
            for a, b, c in L.delta[i]:
                for x, cx in phi.columns[a].items():
                    for y, cy in phi.columns[b].items():
                        _acc(right, (x, y), c * cx * cy)
            if left != right:
                return False, (L.labels[i],), "Delta phi != (phi (x) phi) Delta"
            if H.eps_vec(img) != L.counit[i]:
                return False, (L.labels[i],), "eps phi != eps"
        return True, None

    def mult():
        for a in range(L.dim):
            for b in range(L.dim):
                left = H.mul_vec(phi.columns[a], phi.columns[b])
                right = phi.apply(dict(L.mul.get((a, b), ())))
                if left != right:
                    return False, (L.labels[a], L.labels[b])
        return True, None

    def unital():
        return phi.apply(L.unit) == H.unit, ("1",)

    def omega():
        return compare_maps(f.target.omega.pullback(phi), f.source.omega, L.labels)

    rep.run("coalgebra map", coalg)
    rep.run("multiplicative", mult)
    rep.run("unital", lambda: (True, None) if unital()[0] else (False, ("1",)))
    rep.run("omega compatibility", omega)
    return rep


def _acc(d, key, val):
    old = d.get(key)
    if old is None:
        d[key] = val
    else:
        s = old + val
        if s:
            d[key] = s
        else:
            del d[key]


def pullback_gauge(f: DqbMorphism, gauge: GaugeTransformation) -> tuple[GaugeTransformation, Report]:
    """v o (phi (x) phi) on the source, plus the twisted-morphism identities checked exactly."""
    L = f.source.H
    v = gauge.v.pullback(f.phi)
    vi = gauge.v_inv.pullback(f.phi)
    g = GaugeTransformation(L, v, vi)
    rep = Report(f"pullback gauge along {f.name}")
    rep.extend(g.verify(), "pulled back: ")
    ovA, _ = twisted_omega(f.target, gauge.v, gauge.v_inv)
    ovH, _ = twisted_omega(f.source, g.v, g.v_inv)
    rep.run("omega_A^v o phi^3 = omega_H^(v phi^2)", lambda: compare_maps(ovA.pullback(f.phi), ovH, L.labels))

    def mult():
        mA = twisted_mul(f.target.H, gauge.v, gauge.v_inv)
        mH = twisted_mul(L, g.v, g.v_inv)
        for a in range(L.dim):
            for b in range(L.dim):
                left: dict = {}
                for x, cx in f.phi.columns[a].items():
                    for y, cy in f.phi.columns[b].items():
                        for k, c in mA.data.get((x, y), {}).items():
                            _acc(left, k, cx * cy * c)
                right = f.phi.apply(mH.data.get((a, b), {}))
                if left != right:
                    return False, (L.labels[a], L.labels[b])
        return True, None

    rep.run("m_A^v o phi^2 = phi m_H^(v phi^2)", mult)
    return g, rep


def identity_morphism(D: DualQuasiBialgebra) -> DqbMorphism:
    return DqbMorphism(D, D, LinearMap.identity(D.H), "id")


def is_trivial_reassociator(D: DualQuasiBialgebra):
    return compare_maps(D.omega, Functional.eps(D.H, 3), D.labels)
