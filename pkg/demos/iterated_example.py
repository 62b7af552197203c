"""The second bosonization S#B at n = 2, dimension 32."""

import time

from quasiline.bosonization import build_iterated_example


def main(n: int = 2):
    t0 = time.perf_counter()
    ex = build_iterated_example(n)
    print(ex.report)
    print(f"iota = {ex.iota}, dim S = {ex.S.dim}, dim S#B = {ex.SB.dim}")
    print(f"{time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()
