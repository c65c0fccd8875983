"""Write the ordinates of the zeros of L(Delta, s), the weight-12 level-1 newform.

Usage: python3 scripts/delta_zeros.py HEIGHT [STEP] > crates/zerobound/tests/data/delta_zeros.txt

The completed function Lambda(s) = (2 pi)^{-s} Gamma(s) L(Delta, s) is evaluated
on the line s = 6 + it through the incomplete-gamma expansion
    Lambda(s) = sum_n tau(n) [Gamma(s, 2 pi n) (2 pi n)^{-s} + Gamma(12 - s, 2 pi n) (2 pi n)^{s-12}],
which is real there because the root number is 1. Zeros are located by sign
changes on a grid of spacing STEP and refined with a bracketing solver.
Zeros closer together than STEP can be missed; compare the count with the
Riemann-von Mangoldt main term before use.
"""
import sys

import mpmath as mp


def tau_coefficients(count):
    """tau(1..count) from q * prod (1 - q^n)^24."""
    c = [0] * (count + 1)
    c[0] = 1
    for n in range(1, count + 1):
        for _ in range(24):
            for i in range(count, n - 1, -1):
                c[i] -= c[i - n]
    return [0] + c[:count]


def completed(t, taus):
    s = mp.mpc(6, t)
    total = mp.mpf(0)
    for n in range(1, len(taus)):
        x = 2 * mp.pi * n
        total += taus[n] * (mp.gammainc(s, x) * x ** (-s) + mp.gammainc(12 - s, x) * x ** (s - 12))
    # Remove the exp(-pi t / 2) decay of the gamma factor.
    return mp.re(total * mp.exp(mp.pi * t / 2))


def main():
    height = float(sys.argv[1])
    step = float(sys.argv[2]) if len(sys.argv) > 2 else 0.15
    taus = tau_coefficients(int(height / 4) + 25)
    assert taus[1:4] == [1, -24, 252]
    mp.mp.dps = int(height * 1.6 / 2.3) + 30
    print(f"# Imaginary parts of the zeros of L(Delta, s) up to height {height:g}")
    print(f"# generated with scripts/delta_zeros.py (mpmath {mp.__version__}), step {step:g}, 9 decimals")
    t = step
    prev = completed(t, taus)
    while t < height:
        nxt = t + step
        value = completed(nxt, taus)
        if mp.sign(value) != mp.sign(prev):
            # The bracket already certifies a sign change; the default residual
            # check is relative to 1 and rejects good roots at this scale.
            z = mp.findroot(lambda u: completed(u, taus), (t, nxt), solver="anderson", verify=False)
            print(f"{float(z):.9f}", flush=True)
        prev, t = value, nxt


if __name__ == "__main__":
    main()
