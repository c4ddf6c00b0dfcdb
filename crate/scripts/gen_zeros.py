#!/usr/bin/env python3
"""Generate the table of nontrivial Riemann zeta zero ordinates shipped in data/.

Each line is the imaginary part t_n of the n-th zero in the upper half plane,
computed with mpmath.zetazero at 30 significant digits and printed with 12
decimal places. Lines starting with '#' are comments.
"""
import sys
from mpmath import mp, zetazero

COUNT = 1000

def main(out_path: str) -> None:
    mp.dps = 30
    with open(out_path, "w") as f:
        f.write("# ordinates t_n of the first %d nontrivial zeros of the Riemann zeta function\n" % COUNT)
        f.write("# (upper half plane, ascending), computed with mpmath.zetazero, 12 decimals\n")
        for n in range(1, COUNT + 1):
            t = zetazero(n).imag
            f.write(mp.nstr(t, 17, strip_zeros=False))
            f.write("\n")
            if n % 100 == 0:
                print("done", n, flush=True)

if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data/zeros_1000.txt")
