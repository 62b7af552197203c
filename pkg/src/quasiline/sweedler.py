"""Sparse Sweedler-notation calculus with named tensor slots.

A :class:`Tensor` is a linear combination of pure tensors whose factors sit in
named slots.  Operations split a slot with a coproduct, coact, act, multiply,
or contract slots against a functional.  Formulas like

    omega^{-1}(h_1 (x) l_1 (x) v_{-1}) ... (h_3 > (l_2 > v_0)_0)_0

become short pipelines, and evaluating functionals as soon as their legs exist
prunes zero terms early.  Batched inputs carry untouched tag slots, so a whole
axiom is checked in one pass and a mismatch points back at its input tuple.
"""

from __future__ import annotations

import itertools
from typing import Callable, Iterable, Sequence

from .cyclotomic import CycNum


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


class Tensor:
    __slots__ = ("names", "data", "F")

    def __init__(self, names: Sequence[str], data: dict, F):
        self.names = tuple(names)
        self.data = data
        self.F = F
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate slot names {self.names}")

    # -- construction -----------------------------------------------------

    @classmethod
    def inputs(cls, F, spec: Sequence[tuple], tag: bool = True) -> "Tensor":
        """All basis tuples for slots spec = [(name, dim), ...].

        With tag=True each slot is duplicated into an untouched '@name' slot.
        """
        names = [n for n, _ in spec]
        ranges = [range(d) for _, d in spec]
        one = F.one
        data = {}
        for key in itertools.product(*ranges):
            data[key + key if tag else key] = one
        if tag:
            names = names + ["@" + n for n in names]
        return cls(names, data, F)

    @classmethod
    def pure(cls, F, slots: dict) -> "Tensor":
        """A single pure tensor {name: index}."""
        names = list(slots)
        return cls(names, {tuple(slots[n] for n in names): F.one}, F)

    def _pos(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"no slot {name!r} in {self.names}") from None

    def copy(self) -> "Tensor":
        return Tensor(self.names, dict(self.data), self.F)

    def __len__(self) -> int:
        return len(self.data)

    # -- structure operations -------------------------------------------

    def split(self, name: str, into: Sequence[str], C) -> "Tensor":
        """Replace slot `name` by the iterated coproduct of C in slots `into`."""
        if len(into) == 1:
            return self.rename({name: into[0]})
        t = self._split2(name, into[0], "~" + name, C)
        for k in range(1, len(into) - 1):
            t = t._split2("~" + name, into[k], "~~" + name, C).rename({"~~" + name: "~" + name})
        return t.rename({"~" + name: into[-1]})

    def _split2(self, name: str, a: str, b: str, C) -> "Tensor":
        p = self._pos(name)
        delta = C.delta
        out: dict = {}
        for key, c in self.data.items():
            head, tail = key[:p], key[p + 1:]
            for j, k, cc in delta[key[p]]:
                _acc(out, head + (j, k) + tail, c * cc)
        names = self.names[:p] + (a, b) + self.names[p + 1:]
        return Tensor(names, out, self.F)

    def coact(self, name: str, hname: str, vname: str, M) -> "Tensor":
        """v -> v_{-1} (x) v_0 using M.coact[i] = [(h, j, c)]."""
        p = self._pos(name)
        co = M.coact
        out: dict = {}
        for key, c in self.data.items():
            head, tail = key[:p], key[p + 1:]
            for h, j, cc in co[key[p]]:
                _acc(out, head + (h, j) + tail, c * cc)
        names = self.names[:p] + (hname, vname) + self.names[p + 1:]
        return Tensor(names, out, self.F)

    def act(self, hname: str, vname: str, M, out_name: str | None = None) -> "Tensor":
        """h (x) v -> h > v using M.act_terms(h, i) = [(j, c)]; the h slot is consumed."""
        ph, pv = self._pos(hname), self._pos(vname)
        act = M.act_terms
        out: dict = {}
        for key, c in self.data.items():
            for j, cc in act(key[ph], key[pv]):
                nk = list(key)
                nk[pv] = j
                del nk[ph]
                _acc(out, tuple(nk), c * cc)
        names = list(self.names)
        if out_name:
            names[pv] = out_name
        del names[ph]
        return Tensor(names, out, self.F)

    def mul(self, a: str, b: str, out_name: str, A) -> "Tensor":
        """Multiply slots a and b with A.mul; the product lands in a's position."""
        pa, pb = self._pos(a), self._pos(b)
        mul = A.mul
        out: dict = {}
        for key, c in self.data.items():
            for k, cc in mul.get((key[pa], key[pb]), ()):
                nk = list(key)
                nk[pa] = k
                del nk[pb]
                _acc(out, tuple(nk), c * cc)
        names = list(self.names)
        names[pa] = out_name
        del names[pb]
        return Tensor(names, out, self.F)

    def linear(self, name: str, columns: Sequence[dict], out_name: str | None = None) -> "Tensor":
        """Apply a linear map (columns[i] = image of e_i) to one slot."""
        p = self._pos(name)
        out: dict = {}
        for key, c in self.data.items():
            head, tail = key[:p], key[p + 1:]
            for j, cc in columns[key[p]].items():
                _acc(out, head + (j,) + tail, c * cc)
        names = list(self.names)
        if out_name:
            names[p] = out_name
        return Tensor(names, out, self.F)

    def func(self, f, names: Sequence[str], keep: bool = False) -> "Tensor":
        """Multiply by f(slots...) for a Functional f; the slots are consumed unless keep."""
        ps = [self._pos(n) for n in names]
        fd = f.data
        out: dict = {}
        for key, c in self.data.items():
            v = fd.get(tuple(key[p] for p in ps))
            if v is None:
                continue
            nk = key if keep else tuple(x for i, x in enumerate(key) if i not in ps)
            _acc(out, nk, c * v)
        rest = self.names if keep else tuple(n for i, n in enumerate(self.names) if i not in ps)
        return Tensor(rest, out, self.F)

    def scalar(self, fn: Callable[..., CycNum], names: Sequence[str], keep: bool = True) -> "Tensor":
        """Multiply by fn(indices of slots...), dropping zero terms."""
        ps = [self._pos(n) for n in names]
        out: dict = {}
        for key, c in self.data.items():
            v = fn(*(key[p] for p in ps))
            if not v:
                continue
            nk = key if keep else tuple(x for i, x in enumerate(key) if i not in ps)
            _acc(out, nk, c * v)
        rest = self.names if keep else tuple(n for i, n in enumerate(self.names) if i not in ps)
        return Tensor(rest, out, self.F)

    def counit(self, name: str, C) -> "Tensor":
        p = self._pos(name)
        eps = C.counit
        out: dict = {}
        for key, c in self.data.items():
            e = eps[key[p]]
            if e:
                _acc(out, key[:p] + key[p + 1:], c * e)
        return Tensor(self.names[:p] + self.names[p + 1:], out, self.F)

    def insert(self, name: str, vec: dict, at: int | None = None) -> "Tensor":
        """Tensor in a fixed vector as a new slot."""
        p = len(self.names) if at is None else at
        out: dict = {}
        for key, c in self.data.items():
            for i, cc in vec.items():
                _acc(out, key[:p] + (i,) + key[p:], c * cc)
        return Tensor(self.names[:p] + (name,) + self.names[p:], out, self.F)

    def rename(self, mapping: dict) -> "Tensor":
        return Tensor([mapping.get(n, n) for n in self.names], self.data, self.F)

    def reorder(self, names: Sequence[str]) -> "Tensor":
        if sorted(names) != sorted(self.names):
            raise ValueError(f"reorder {names} does not match {self.names}")
        ps = [self._pos(n) for n in names]
        out = {tuple(key[p] for p in ps): c for key, c in self.data.items()}
        return Tensor(names, out, self.F)

    def scale(self, a) -> "Tensor":
        a = self.F(a)
        return Tensor(self.names, {k: c * a for k, c in self.data.items() if c * a}, self.F)

    def __add__(self, other: "Tensor") -> "Tensor":
        other = other.reorder(self.names)
        out = dict(self.data)
        for k, c in other.data.items():
            _acc(out, k, c)
        return Tensor(self.names, out, self.F)

    def __sub__(self, other: "Tensor") -> "Tensor":
        return self + other.scale(-1)

    # -- comparison ----------------------------------------------------------

    def same_as(self, other: "Tensor") -> bool:
        return self.data == other.reorder(self.names).data

    def first_mismatch(self, other: "Tensor", tags: Sequence[str] | None = None):
        """None when equal; otherwise the offending key restricted to the tag slots."""
        o = other.reorder(self.names)
        if self.data == o.data:
            return None
        bad = [k for k in set(self.data) | set(o.data) if self.data.get(k) != o.data.get(k)]
        if tags is None:
            return min(bad)
        ps = [self._pos(t) for t in tags]
        return min(tuple(key[p] for p in ps) for key in bad)

    def group_by(self, tags: Sequence[str]) -> dict:
        """{tag tuple: {rest tuple: coeff}}."""
        ps = [self._pos(t) for t in tags]
        rest = [i for i in range(len(self.names)) if i not in ps]
        out: dict = {}
        for key, c in self.data.items():
            out.setdefault(tuple(key[p] for p in ps), {})[tuple(key[i] for i in rest)] = c
        return out


def tags_of(names: Iterable[str]) -> list[str]:
    return ["@" + n for n in names]
