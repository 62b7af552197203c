"""Build the quantum line over ((kC_2, omega_zeta), c, chi(c) = i), bosonize it, and classify
the quasi-YD data on the bosonization."""

from quasiline.bosonization import basic_bosonization, classify_boson_data, verify_bosonization
from quasiline.quantum_line import verify_antipode, verify_yd_bialgebra


def main():
    X, R, B = basic_bosonization(2)
    print(f"q = {X.q}, N = {R.N}, basis {R.labels}")
    print(verify_yd_bialgebra(R))
    print(verify_antipode(R))
    print("antipode scalars:", [str(s) for s in R.antipode_scalars()])

    print(verify_bosonization(B))
    cl = classify_boson_data(B, 2)
    for w, chi in cl.candidates:
        vals = {B.B.labels[k[0]]: str(v) for k, v in sorted(chi.data.items())}
        print(f"w = {w}: chi_B = {vals}")


if __name__ == "__main__":
    main()
