"""Write the ordinates of the nontrivial zeros of zeta(s) up to a height.

Usage: python3 scripts/zeta_zeros.py [HEIGHT] > crates/zerobound/tests/data/zeta_zeros.txt

mpmath.zetazero(n) returns the n-th zero by index, so the list has no gaps.
"""
import sys

import mpmath as mp


def main():
    height = float(sys.argv[1]) if len(sys.argv) > 1 else 210.0
    mp.mp.dps = 20
    print(f"# Imaginary parts of the first nontrivial zeros of the Riemann zeta function up to height {height:g}")
    print(f"# generated with mpmath.zetazero (mpmath {mp.__version__}), 12 decimals")
    n = 1
    while True:
        gamma = mp.zetazero(n).imag
        if gamma > height:
            break
        print(f"{float(gamma):.12f}")
        n += 1


if __name__ == "__main__":
    main()
