"""omega_zeta pulled back to kC_4 is the coboundary of v_1.  Twisting by v_1^-1 kills it,
and the same gauge through pi kills the reassociator of the 16-dimensional A."""

from quasiline.bosonization import gauge_trivialize_A
from quasiline.dqb import GaugeTransformation, is_trivial_reassociator, twist
from quasiline.group_dqb import coboundary_witness_check, pulled_back_cyclic, v_gauge


def main():
    print(coboundary_witness_check(2, 1))
    D = pulled_back_cyclic(2, 1)
    g = GaugeTransformation(D.H, v_gauge(2, 1))
    print("twist by v^-1 trivial:", is_trivial_reassociator(twist(D, g.inverse()))[0])
    print(gauge_trivialize_A(2))


if __name__ == "__main__":
    main()
