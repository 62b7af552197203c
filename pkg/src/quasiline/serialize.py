"""JSON structure files.  Scalars are {"conductor": N, "coeffs": ["p/q", ...]}; no floats anywhere."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Optional, Union

from .coalg_core import Functional, StructuredCoalgebra
from .cyclotomic import CycNum, field
from .dqb import DualQuasiBialgebra, GaugeTransformation
from .qyd import QuasiYDDatum
from .report import Report

SCHEMA = "quasiline"
VERSION = 1


class SchemaError(ValueError):
    pass


def _num(x: CycNum) -> dict:
    return x.to_json()


def _parse_num(obj, F) -> CycNum:
    if isinstance(obj, (int, str)):
        return F(obj) if isinstance(obj, int) else F(_frac(obj))
    v = CycNum.from_json(obj)
    if v.conductor != F.conductor:
        raise SchemaError(f"scalar conductor {v.conductor} != {F.conductor}")
    return v


def _frac(s: str):
    from fractions import Fraction
    return Fraction(s)


def _header(kind: str) -> dict:
    return {"schema": SCHEMA, "version": VERSION, "kind": kind}


def _check_header(obj: dict, kind: Optional[str] = None) -> str:
    if not isinstance(obj, dict) or obj.get("schema") != SCHEMA:
        raise SchemaError("not a quasiline structure file")
    if obj.get("version") != VERSION:
        raise SchemaError(f"unsupported version {obj.get('version')}")
    if kind is not None and obj.get("kind") != kind:
        raise SchemaError(f"expected kind {kind!r}, got {obj.get('kind')!r}")
    return obj["kind"]


def coalgebra_to_json(H: StructuredCoalgebra) -> dict:
    return {
        "conductor": H.conductor,
        "labels": list(H.labels),
        "delta": [[[j, k, _num(c)] for j, k, c in terms] for terms in H.delta],
        "counit": [_num(c) for c in H.counit],
        "mul": [[i, j, [[k, _num(c)] for k, c in terms]] for (i, j), terms in sorted(H.mul.items())],
        "unit": [[k, _num(c)] for k, c in sorted(H.unit.items())],
    }


def coalgebra_from_json(obj: dict, check: bool = True) -> StructuredCoalgebra:
    try:
        N = int(obj["conductor"])
        F = field(N)
        delta = [[(int(j), int(k), _parse_num(c, F)) for j, k, c in terms] for terms in obj["delta"]]
        counit = [_parse_num(c, F) for c in obj["counit"]]
        mul = {(int(i), int(j)): [(int(k), _parse_num(c, F)) for k, c in terms] for i, j, terms in obj["mul"]}
        unit = [(int(k), _parse_num(c, F)) for k, c in obj["unit"]]
        return StructuredCoalgebra(N, obj["labels"], delta, counit, mul, unit, check=check)
    except (KeyError, TypeError, ValueError) as e:
        if isinstance(e, SchemaError):
            raise
        raise SchemaError(f"bad coalgebra table: {e}") from e


def functional_to_json(f: Functional) -> list:
    return [list(k) + [_num(v)] for k, v in sorted(f.data.items())]


def functional_from_json(rows: list, arity: int, F) -> Functional:
    try:
        return Functional(arity, {tuple(int(x) for x in r[:arity]): _parse_num(r[arity], F) for r in rows}, F)
    except (IndexError, TypeError, ValueError) as e:
        raise SchemaError(f"bad functional table: {e}") from e


def dqb_to_json(D: DualQuasiBialgebra) -> dict:
    out = _header("dqb")
    out["name"] = D.name
    out["coalgebra"] = coalgebra_to_json(D.H)
    out["omega"] = functional_to_json(D.omega)
    out["omega_inv"] = functional_to_json(D.omega_inv)
    return out


def dqb_from_json(obj: dict, check: bool = False) -> DualQuasiBialgebra:
    _check_header(obj, "dqb")
    H = coalgebra_from_json(obj["coalgebra"], check=False)
    om = functional_from_json(obj["omega"], 3, H.F)
    omi = functional_from_json(obj["omega_inv"], 3, H.F) if "omega_inv" in obj else None
    return DualQuasiBialgebra(H, om, omi, check=check, name=obj.get("name", "H"))


def gauge_to_json(g: GaugeTransformation) -> dict:
    out = _header("gauge")
    out["conductor"] = g.H.conductor
    out["dim"] = g.H.dim
    out["v"] = functional_to_json(g.v)
    out["v_inv"] = functional_to_json(g.v_inv)
    return out


def gauge_from_json(obj: dict, H: StructuredCoalgebra) -> GaugeTransformation:
    _check_header(obj, "gauge")
    if obj.get("dim") != H.dim:
        raise SchemaError(f"gauge is for dimension {obj.get('dim')}, structure has {H.dim}")
    v = functional_from_json(obj["v"], 2, H.F)
    vi = functional_from_json(obj["v_inv"], 2, H.F) if "v_inv" in obj else None
    return GaugeTransformation(H, v, vi, check=False)


def datum_to_json(X: QuasiYDDatum, H_ref: Optional[str] = None) -> dict:
    """With H_ref the structure is referenced by path, otherwise embedded."""
    out = _header("datum")
    out["name"] = X.name
    if H_ref:
        out["H"] = {"ref": H_ref}
    else:
        out["H"] = dqb_to_json(X.D)
    out["g"] = X.g
    out["chi"] = [_num(c) for c in X.chi_table()]
    return out


def datum_from_json(obj: dict, base: Optional[Path] = None, check: bool = False) -> QuasiYDDatum:
    _check_header(obj, "datum")
    Hobj = obj["H"]
    if "ref" in Hobj:
        p = Path(Hobj["ref"])
        if base is not None and not p.is_absolute():
            p = base / p
        Hobj = load_json(p)
    D = dqb_from_json(Hobj)
    try:
        chi = Functional(1, {(h,): _parse_num(v, D.F) for h, v in enumerate(obj["chi"])}, D.F)
        g = int(obj["g"])
    except (KeyError, TypeError, ValueError) as e:
        raise SchemaError(f"bad datum: {e}") from e
    if len(obj["chi"]) != D.dim or not 0 <= g < D.dim:
        raise SchemaError("datum does not match the structure dimension")
    return QuasiYDDatum(D, g, chi, check=check, name=obj.get("name", ""))


def qline_to_json(R) -> dict:
    out = _header("qline")
    out["datum"] = datum_to_json(R.datum)
    out["N"] = R.N
    out["prod"] = [[_num(c) for c in row] for row in R.prod]
    out["beta"] = [[_num(c) for c in row] for row in R.beta]
    out["chi_n"] = [functional_to_json(c) for c in R.chis]
    out["antipode"] = [_num(c) for c in R.antipode_scalars()]
    return out


def qline_from_json(obj: dict, base: Optional[Path] = None):
    """Rebuilds R from the stored tables (not recomputed), so corrupted tables stay corrupted."""
    from .quantum_line import QuantumLine

    _check_header(obj, "qline")
    X = datum_from_json(obj["datum"], base)
    F = X.F
    N = int(obj["N"])
    if X.N != N:
        raise SchemaError(f"stored N = {N} but the datum has N = {X.N}")
    prod = [[_parse_num(c, F) for c in row] for row in obj["prod"]]
    beta = [[_parse_num(c, F) for c in row] for row in obj["beta"]]
    chis = [functional_from_json(rows, 1, F) for rows in obj["chi_n"]]
    return QuantumLine(X, prod=prod, beta=beta, chis=chis)


def report_to_json(rep: Report, command: str = "", inputs: Optional[dict] = None, seconds: float = 0.0) -> dict:
    out = _header("report")
    out["command"] = command
    out["inputs"] = inputs or {}
    out["seconds"] = round(seconds, 6)
    out["report"] = rep.to_dict()
    return out


def dump(obj: Any) -> str:
    return json.dumps(obj, indent=1, sort_keys=False)


def save_json(obj: dict, path: Union[str, Path]) -> None:
    Path(path).write_text(dump(obj) + "\n")


def load_json(path: Union[str, Path]) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as e:
        raise SchemaError(f"cannot read {path}: {e}") from e


def load_any(path: Union[str, Path]):
    """(kind, object) for any supported structure file."""
    path = Path(path)
    obj = load_json(path)
    kind = _check_header(obj)
    base = path.parent
    if kind == "dqb":
        return kind, dqb_from_json(obj)
    if kind == "datum":
        return kind, datum_from_json(obj, base)
    if kind == "qline":
        return kind, qline_from_json(obj, base)
    if kind == "gauge":
        return kind, obj
    raise SchemaError(f"unknown kind {kind!r}")
