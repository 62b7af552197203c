import json
import subprocess
import sys

import pytest

from quasiline.cli import DATA_DIR, main
from quasiline.cyclotomic import field
from quasiline.dqb import GaugeTransformation, verify_dqb
from quasiline.group_dqb import cyclic_dqb, pulled_back_cyclic, v_gauge
from quasiline.qyd import datum_for_cyclic, verify_datum
from quasiline.quantum_line import build_quantum_line, verify_yd_bialgebra
from quasiline.serialize import (SchemaError, datum_from_json, datum_to_json, dqb_from_json, dqb_to_json,
                                 gauge_from_json, gauge_to_json, load_any, qline_from_json, qline_to_json, save_json)


def summary(rep):
    return [(c.name, c.ok, c.counterexample) for c in rep.checks]


def test_dqb_round_trip_gives_identical_report():
    D = cyclic_dqb(3, 2)
    E = dqb_from_json(json.loads(json.dumps(dqb_to_json(D))))
    assert E.omega == D.omega and E.H.mul == D.H.mul
    assert summary(verify_dqb(E)) == summary(verify_dqb(D))


def test_datum_and_qline_round_trip():
    X = datum_for_cyclic(2, 1, 1, field(4).root(1))
    Y = datum_from_json(json.loads(json.dumps(datum_to_json(X))))
    assert Y.g == X.g and Y.chi == X.chi
    assert summary(verify_datum(Y)) == summary(verify_datum(X))
    R = build_quantum_line(X)
    S = qline_from_json(json.loads(json.dumps(qline_to_json(R))))
    assert S.beta == R.beta and S.prod == R.prod
    assert summary(verify_yd_bialgebra(S)) == summary(verify_yd_bialgebra(R))


def test_corrupted_qline_file_stays_corrupted():
    R = build_quantum_line(datum_for_cyclic(2, 1, 1, field(4).root(1)))
    obj = qline_to_json(R)
    obj["beta"][1][2] = {"conductor": 4, "coeffs": ["5/1"]}
    assert not verify_yd_bialgebra(qline_from_json(obj)).ok


def test_gauge_round_trip():
    D = pulled_back_cyclic(2, 1)
    g = GaugeTransformation(D.H, v_gauge(2, 1))
    h = gauge_from_json(gauge_to_json(g), D.H)
    assert h.v == g.v and h.v_inv == g.v_inv


def test_schema_errors():
    with pytest.raises(SchemaError):
        dqb_from_json({"schema": "other"})
    obj = dqb_to_json(cyclic_dqb(2, 1))
    obj["version"] = 99
    with pytest.raises(SchemaError):
        dqb_from_json(obj)
    obj = dqb_to_json(cyclic_dqb(2, 1))
    with pytest.raises(SchemaError):
        gauge_from_json(gauge_to_json(GaugeTransformation(pulled_back_cyclic(2).H, v_gauge(2, 1))),
                        cyclic_dqb(2, 1).H)


@pytest.mark.parametrize("name", sorted(p.name for p in DATA_DIR.glob("*.json")))
def test_shipped_data_files_load(name):
    kind, obj = load_any(DATA_DIR / name)
    assert kind in ("dqb", "datum", "gauge", "qline")


CLI_OK = [
    ["group-dqb", "--n", "3", "--i", "1", "--witness", "--antipode"],
    ["verify", str(DATA_DIR / "kC4_omega_zeta.json")],
    ["verify", str(DATA_DIR / "datum_basic_n2.json")],
    ["twist", "--file", str(DATA_DIR / "kC4_pullback.json"), "--gauge", str(DATA_DIR / "v1.json"),
     "--inverse", "--expect-trivial"],
    ["enumerate", "--n", "3", "--w", "1"],
    ["qyd", "enumerate", "--n", "2", "--w", "1", "--brute"],
    ["qline", "build", "--n", "2", "--i", "1", "--z", "1", "--j", "0"],
    ["boson", "build", "--n", "2"],
    ["boson", "classify-data", "--n", "2"],
    ["boson", "trivialize-A", "--n", "2"],
    ["example", "basic"],
    ["example", "phi"],
    ["example", "Cn", "--n", "2"],
]


@pytest.mark.parametrize("argv", CLI_OK, ids=lambda a: " ".join(a[:2]))
def test_cli_commands_pass(argv, capsys):
    assert main(argv) == 0
    assert "OK" in capsys.readouterr().out


def test_cli_twist_without_inverse_is_not_trivial_at_n3(tmp_path):
    D = pulled_back_cyclic(3, 1)
    g = GaugeTransformation(D.H, v_gauge(3, 1))
    save_json(dqb_to_json(D), tmp_path / "d.json")
    save_json(gauge_to_json(g), tmp_path / "g.json")
    base = ["twist", "--file", str(tmp_path / "d.json"), "--gauge", str(tmp_path / "g.json"), "--expect-trivial"]
    assert main(base) == 1
    assert main(base + ["--inverse"]) == 0


def test_cli_json_and_out(tmp_path, capsys):
    out = tmp_path / "R.json"
    assert main(["qline", "build", "--n", "2", "--i", "1", "--z", "1", "--j", "0", "--out", str(out), "--json"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["kind"] == "report" and rep["report"]["ok"]
    assert load_any(out)[0] == "qline"
    assert main(["verify", str(out)]) == 0


def test_cli_verify_corrupted_file_fails(tmp_path):
    obj = dqb_to_json(cyclic_dqb(2, 1))
    obj["omega"] = [r if r[:3] != [1, 1, 1] else [1, 1, 1, {"conductor": 4, "coeffs": ["0/1", "1/1"]}]
                    for r in obj["omega"]]
    save_json(obj, tmp_path / "bad.json")
    assert main(["verify", str(tmp_path / "bad.json")]) == 1


def test_cli_input_errors(tmp_path):
    assert main(["verify", str(tmp_path / "missing.json")]) == 2
    (tmp_path / "junk.json").write_text("{not json")
    assert main(["verify", str(tmp_path / "junk.json")]) == 2
    assert main(["group-dqb"]) == 2


def test_console_script_entry_point():
    r = subprocess.run([sys.executable, "-m", "quasiline.cli", "enumerate", "--n", "2", "--w", "0"],
                       capture_output=True, text=True, timeout=120)
    assert r.returncode == 0, r.stderr
