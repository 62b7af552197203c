"""quasiline command line.  Exit codes: 0 all checks pass, 1 a check failed, 2 bad input."""

from __future__ import annotations

import argparse
import os
import sys
import time
from pathlib import Path
from typing import Optional

from .report import AxiomError, Report
from .serialize import SchemaError

EXAMPLES = ("basic", "p-squared", "dicyclic", "phi", "Cn", "iterated-B")
DATA_DIR = Path(__file__).parent / "data"


class InputError(Exception):
    pass


def _emit(args, rep: Report, command: str, t0: float, structure: Optional[dict] = None) -> int:
    from .serialize import dump, report_to_json, save_json

    dt = time.perf_counter() - t0
    inputs = {k: v for k, v in vars(args).items() if k not in ("func",) and v is not None and not callable(v)}
    if args.json:
        print(dump(report_to_json(rep, command, inputs, dt)))
    else:
        print(rep)
        print(f"{'OK' if rep.ok else 'FAILED'} in {dt:.2f}s")
    if args.out:
        save_json(structure if structure is not None else report_to_json(rep, command, inputs, dt), args.out)
    return 0 if rep.ok else 1


def _need(args, *names):
    for n in names:
        if getattr(args, n, None) is None:
            raise InputError(f"--{n} is required")


# -- commands -----------------------------------------------------------------

def cmd_group_dqb(args) -> int:
    from .dqb import verify_dqb
    from .group_dqb import coboundary_witness_check, cyclic_dqb, quasi_hopf_antipode_check
    from .serialize import dqb_to_json

    t0 = time.perf_counter()
    _need(args, "n")
    i = args.i if args.i is not None else 1
    D = cyclic_dqb(args.n, i, check=False)
    rep = Report(f"group-dqb n = {args.n}, i = {i}")
    rep.extend(verify_dqb(D, args.jobs))
    if args.witness:
        rep.extend(coboundary_witness_check(args.n, i), "witness: ")
    if args.antipode:
        rep.extend(quasi_hopf_antipode_check(args.n, i, "corrected"), "antipode: ")
    return _emit(args, rep, "group-dqb", t0, dqb_to_json(D) if args.out else None)


def verify_loaded(kind: str, obj, jobs=None) -> Report:
    from .dqb import verify_dqb
    from .qyd import verify_datum
    from .quantum_line import verify_antipode, verify_yd_bialgebra

    if kind == "dqb":
        return verify_dqb(obj, jobs)
    if kind == "datum":
        rep = Report(f"datum {obj.name}")
        rep.extend(verify_dqb(obj.D, jobs), "H: ")
        rep.extend(verify_datum(obj))
        rep.extend(verify_datum(obj, via_module=True), "module route: ")
        return rep
    if kind == "qline":
        rep = verify_yd_bialgebra(obj)
        rep.extend(verify_antipode(obj))
        return rep
    raise InputError(f"cannot verify a {kind} file on its own")


def cmd_verify(args) -> int:
    from .serialize import load_any

    t0 = time.perf_counter()
    kind, obj = load_any(args.file)
    return _emit(args, verify_loaded(kind, obj, args.jobs), "verify", t0)


def cmd_twist(args) -> int:
    from .dqb import GaugeTransformation, is_trivial_reassociator, twist, verify_dqb
    from .group_dqb import pulled_back_cyclic, v_gauge
    from .serialize import dqb_to_json, gauge_from_json, load_any, load_json

    t0 = time.perf_counter()
    if args.file:
        kind, D = load_any(args.file)
        if kind != "dqb":
            raise InputError("twist needs a dqb file")
        _need(args, "gauge")
        g = gauge_from_json(load_json(args.gauge), D.H)
    else:
        _need(args, "n")
        i = args.i if args.i is not None else 1
        D = pulled_back_cyclic(args.n, i)
        v = v_gauge(args.n, i)
        g = GaugeTransformation(D.H, v, v.pointwise_inverse(), check=False)
    if args.inverse:
        g = g.inverse()
    rep = Report(f"twist of {D.name}")
    rep.extend(g.verify(), "gauge: ")
    Dv = twist(D, g, check=False)
    rep.extend(verify_dqb(Dv, args.jobs), "twisted: ")
    triv = is_trivial_reassociator(Dv)
    rep.info["trivial reassociator"] = triv[0]
    back = twist(Dv, g.inverse(), check=False)
    rep.add("round trip (H^v)^(v^-1) = H", back.omega == D.omega and back.H.mul == D.H.mul)
    if args.expect_trivial:
        rep.add("omega^v = eps (x) eps (x) eps", triv[0], triv[1] if len(triv) > 1 else None)
    return _emit(args, rep, "twist", t0, dqb_to_json(Dv) if args.out else None)


def cmd_enumerate(args) -> int:
    from .qyd import brute_force_data, datum_exponents, enumerate_data

    t0 = time.perf_counter()
    _need(args, "n", "w")
    data = enumerate_data(args.n, args.w)
    rep = Report(f"quasi-YD data on (kC_{args.n}, omega_zeta^{args.w})")
    rep.info["count"] = len(data)
    rep.add(f"{args.n} data per z", len(data) == args.n * args.n)
    for X in data:
        z, ex = datum_exponents(X)
        print(f"z = {z}  chi(c^t) = zeta_{args.n * args.n}^{list(ex)}  q = {X.q}  N = {X.N}")
    if args.brute or args.n <= 4:
        bf = brute_force_data(args.n, args.w)
        rep.add("matches brute force over mu_{n^2} tables", bf == {datum_exponents(X) for X in data})
    return _emit(args, rep, "enumerate", t0)


def cmd_qyd(args) -> int:
    if args.action == "enumerate":
        return cmd_enumerate(args)
    _need(args, "file")
    return cmd_verify(args)


def _datum_from_args(args):
    from .cyclotomic import field
    from .qyd import datum_for_cyclic
    from .serialize import datum_from_json, load_json

    if getattr(args, "datum", None):
        return datum_from_json(load_json(args.datum), Path(args.datum).parent)
    _need(args, "n")
    n = args.n
    i = args.i if args.i is not None else 1
    z = args.z if args.z is not None else 1
    j = args.j if args.j is not None else 0
    F = field(n * n)
    q = F.root(1)
    return datum_for_cyclic(n, i, z, (q ** n) ** j * q ** (i * z))


def cmd_qline(args) -> int:
    from .quantum_line import build_quantum_line, quotient_check, truncated_tensor_algebra, verify_antipode, \
        verify_tensor_algebra, verify_yd_bialgebra
    from .serialize import qline_to_json

    t0 = time.perf_counter()
    X = _datum_from_args(args)
    R = build_quantum_line(X)
    rep = Report(f"quantum line {R.name}, N = {R.N}")
    rep.info["dim R"] = R.dim
    rep.extend(verify_yd_bialgebra(R))
    rep.extend(verify_antipode(R))
    T = truncated_tensor_algebra(X, R.N + 3)
    rep.extend(verify_tensor_algebra(T), "T(V): ")
    rep.extend(quotient_check(T, R), "quotient: ")
    return _emit(args, rep, "qline build", t0, qline_to_json(R) if args.out else None)


def cmd_boson(args) -> int:
    from . import bosonization as bz
    from .dqb import verify_dqb
    from .serialize import dqb_to_json, load_any

    t0 = time.perf_counter()
    a = args.action
    if a == "build":
        if args.R:
            kind, R = load_any(args.R)
            if kind != "qline":
                raise InputError("--R must be a qline file")
        else:
            from .quantum_line import build_quantum_line
            R = build_quantum_line(_datum_from_args(args))
        if args.H:
            kind, H = load_any(args.H)
            if kind != "dqb" or H.omega != R.D.omega or H.H.mul != R.D.H.mul:
                raise InputError("--H does not match the structure R lives over")
        B = bz.bosonize(R)
        rep = bz.verify_bosonization(B, args.jobs)
        return _emit(args, rep, "boson build", t0, dqb_to_json(B.B) if args.out else None)
    n = args.n if args.n is not None else 2
    if a == "classify-data":
        _, _, B = bz.basic_bosonization(n)
        cl = bz.classify_boson_data(B, n)
        rep = cl.report
        if n == 2:
            bf = bz.brute_force_boson_data(B, n)
            rep.add("matches brute force over eps_R-factored tables in mu_4 and 0",
                    [(w, c.data) for w, c in bf] == [(w, c.data) for w, c in cl.candidates])
        rep.info["w"] = [w for w, _ in cl.candidates]
        return _emit(args, rep, "boson classify-data", t0)
    if a == "iterated":
        ex = bz.build_iterated_example(n, jobs=args.jobs)
        return _emit(args, ex.report, "boson iterated", t0)
    if a == "trivialize-A":
        return _emit(args, bz.gauge_trivialize_A(n), "boson trivialize-A", t0)
    raise InputError(a)


def cmd_example(args) -> int:
    from . import bosonization as bz
    from .cyclotomic import field
    from .qyd import (chi_power_check, commuting_witness, datum_for_cyclic, group_datum_check, pullback_datum,
                      verify_datum, QydMorphism)
    from .quantum_line import build_quantum_line, transport, verify_antipode, verify_yd_bialgebra

    t0 = time.perf_counter()
    name = args.name
    if name == "basic":
        n = args.n or 3
        X = _datum_from_args(argparse.Namespace(datum=None, n=n, i=args.i, z=args.z, j=args.j))
        rep = Report(f"example basic, n = {n}")
        rep.extend(verify_datum(X))
        rep.extend(verify_datum(X, via_module=True), "module route: ")
        R = build_quantum_line(X)
        rep.info["N"] = R.N
        rep.extend(verify_yd_bialgebra(R))
        rep.extend(verify_antipode(R))
        rep.extend(bz.verify_bosonization(bz.bosonize(R), args.jobs))
    elif name == "p-squared":
        p = args.p or 3
        rep = Report(f"example p-squared, p = {p}")
        F = field(p * p)
        q = F.root(1)
        for i in range(1, p):
            for z in range(1, p):
                count = 0
                for j in range(p):
                    X = datum_for_cyclic(p, i, z, (q ** p) ** j * q ** (i * z))
                    if X.N == p * p:
                        count += build_quantum_line(X).dim == p * p
                rep.add(f"i = {i}, z = {z}: {p} choices of j with dim R = p^2", count == p)
        k = bz.count_classes(p, 1)
        rep.info["classes with z = 1"] = k
        rep.add(f"p(p-1) = {p * (p - 1)} distinct classes with z = 1", k == p * (p - 1))
    elif name == "dicyclic":
        from .group_dqb import dicyclic, dicyclic_dqb

        p = args.p or 3
        src, pi = dicyclic_dqb(p)
        F = src.F
        X = datum_for_cyclic(4, 1, 2, F.root(2))
        G = dicyclic(p)
        a = G.power(G.labels.index("x"), 2)
        Y, sub = pullback_datum(pi, X, a)
        rep = Report(f"example dicyclic, p = {p}")
        rep.extend(sub)
        if Y is not None:
            rep.extend(group_datum_check(src, G.table, a, Y.chi), "group criterion: ")
            rep.extend(commuting_witness(Y))
    elif name == "phi":
        n = args.n or 2
        Y, base, phi = bz.phi_datum(n)
        rep = Report(f"example phi, n = {n}")
        rep.extend(verify_datum(Y))
        lhs = Y.chi(Y.H.power_index(1, n))
        rhs = Y.chi(1) ** n
        zeta = Y.F.root(Y.F.conductor // n)
        rep.info["chi phi(C^n)"] = lhs
        rep.info["chi phi(C)^n"] = rhs
        rep.add("chi phi(C^n) = 1", lhs.is_one())
        rep.add("chi phi(C)^n = zeta (so chi(c)^n = zeta^{wz} fails on kC_{n^2})", rhs == zeta and not rhs.is_one())
        rep.add("power formula gives chi phi(C^n)", chi_power_check(Y, 1, n) == lhs)
        rep.extend(QydMorphism(Y, base, phi).verify())
    elif name == "Cn":
        n = args.n or 2
        rep = bz.gauge_trivialize_A(n)
        Y, base, phi = bz.phi_datum(n)
        rep.extend(transport(QydMorphism(Y, base, phi)), "transport: ")
    elif name == "iterated-B":
        rep = bz.build_iterated_example(args.n or 2, jobs=args.jobs).report
    else:
        raise InputError(f"unknown example {name!r}; choose from {', '.join(EXAMPLES)}")
    return _emit(args, rep, f"example {name}", t0)


# -- parser -------------------------------------------------------------------

def _common(p: argparse.ArgumentParser) -> None:
    for flag in ("n", "p", "i", "w", "z", "j"):
        p.add_argument(f"--{flag}", type=int)
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default $QUASILINE_JOBS or 1)")
    p.add_argument("--full", action="store_true", help="accepted for compatibility; all checks run in full")
    p.add_argument("--out", help="write the built structure (or the report) as JSON")
    p.add_argument("--json", action="store_true", help="print the report as JSON")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="quasiline", description="Exact verification of dual quasi-bialgebras, "
                                 "quasi-YD data, quantum lines and bosonizations.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("group-dqb", help="(kC_n, omega_{zeta^i}) and its checks")
    _common(p)
    p.add_argument("--witness", action="store_true", help="also check d^2 v_i = omega o phi^3 on kC_{n^2}")
    p.add_argument("--antipode", action="store_true", help="also check the dual quasi-antipode identities")
    p.set_defaults(func=cmd_group_dqb)

    p = sub.add_parser("verify", help="verify a structure file")
    p.add_argument("file")
    _common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("twist", help="twist a dqb by a gauge transformation")
    _common(p)
    p.add_argument("--file", help="dqb structure file")
    p.add_argument("--gauge", help="gauge file")
    p.add_argument("--inverse", action="store_true", help="twist by the inverse gauge")
    p.add_argument("--expect-trivial", action="store_true", help="fail unless the twisted reassociator is trivial")
    p.set_defaults(func=cmd_twist)

    p = sub.add_parser("enumerate", help="all quasi-YD data on (kC_n, omega_{zeta^w})")
    _common(p)
    p.add_argument("--brute", action="store_true", help="cross-check by brute force even for n > 4")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("qyd", help="quasi-YD data")
    p.add_argument("action", choices=["enumerate", "verify"])
    _common(p)
    p.add_argument("--file")
    p.add_argument("--brute", action="store_true")
    p.set_defaults(func=cmd_qyd)

    p = sub.add_parser("qline", help="quantum lines")
    p.add_argument("action", choices=["build"])
    _common(p)
    p.add_argument("--datum", help="datum file (otherwise --n --i --z --j on kC_n)")
    p.set_defaults(func=cmd_qline)

    p = sub.add_parser("boson", help="bosonizations")
    p.add_argument("action", choices=["build", "classify-data", "iterated", "trivialize-A"])
    _common(p)
    p.add_argument("--R", help="qline file")
    p.add_argument("--H", help="dqb file R lives over (checked against R)")
    p.add_argument("--datum")
    p.set_defaults(func=cmd_boson)

    p = sub.add_parser("example", help="named end-to-end examples")
    p.add_argument("name", choices=EXAMPLES)
    _common(p)
    p.set_defaults(func=cmd_example)
    return ap


def main(argv: Optional[list] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if getattr(args, "jobs", None) is None and os.environ.get("QUASILINE_JOBS"):
        args.jobs = int(os.environ["QUASILINE_JOBS"])
    if not hasattr(args, "file"):
        args.file = None
    try:
        return args.func(args)
    except (InputError, SchemaError, FileNotFoundError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except AxiomError as e:
        print(e.report if hasattr(e, "report") else e)
        return 1
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
