from quasiline.coalg_core import Functional
from quasiline.cyclotomic import field
from quasiline.group_dqb import cyclic, group_coalgebra
from quasiline.sweedler import Tensor


def test_split_and_counit_round_trip():
    H = group_coalgebra(cyclic(3), 3)
    t = Tensor.inputs(H.F, [("h", 3)])
    s = t.split("h", ["a", "b", "c"], H).counit("b", H).counit("c", H).rename({"a": "h"})
    assert s.same_as(t)


def test_func_prunes_zero_terms():
    H = group_coalgebra(cyclic(2), 2)
    f = Functional(1, {(0,): H.F.one}, H.F)
    t = Tensor.inputs(H.F, [("h", 2)]).func(f, ["h"])
    assert len(t) == 1


def test_first_mismatch_reports_smallest_tag_tuple():
    F = field(1)
    a = Tensor(["x", "@x"], {(0, 1): F.one, (1, 0): F.one, (2, 2): F.one}, F)
    b = Tensor(["x", "@x"], {(0, 1): F.one, (1, 0): F(2), (2, 2): F(5)}, F)
    assert a.first_mismatch(b, ["@x"]) == (0,)
    assert a.first_mismatch(a.copy(), ["@x"]) is None


def test_mul_and_reorder():
    H = group_coalgebra(cyclic(4), 4)
    t = Tensor.inputs(H.F, [("a", 4), ("b", 4)], tag=False).mul("a", "b", "ab", H)
    assert all(c == 4 for c in [len(t.group_by(["ab"]))])
    assert t.reorder(["ab"]).names == ("ab",)
