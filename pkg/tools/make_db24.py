#!/usr/bin/env python3
"""Generate the Daubechies-24 (24 vanishing moments, 48 taps) lowpass filter.

Spectral factorization done in 60-digit arithmetic with mpmath, then rounded
to float64 and printed as a Python tuple ready to paste into
``hurstkit.transforms``.  Run once; the output is committed as constants.

Method: the halfband polynomial P(y) = sum_{k<p} C(p-1+k, k) y^k is lifted to
a Laurent polynomial in z via y = (2 - z - 1/z)/4, its roots are split into
inside/outside-unit-circle pairs, and the minimum-phase factor is assembled
with the binomial zeros at z = -1.  Normalized so sum(h) = sqrt(2).
"""

import mpmath as mp

P = 24  # vanishing moments; filter length 2*P


def db_lowpass(p):
    mp.mp.dps = 60
    # P(y) = sum_{k=0}^{p-1} binom(p-1+k, k) y^k
    py = [mp.binomial(p - 1 + k, k) for k in range(p - 1, -1, -1)]  # high->low

    # Substitute y = (2 - z - 1/z)/4 and multiply by z^(p-1):
    # build B(z) = z^(p-1) * P((2 - z - 1/z)/4), degree 2(p-1).
    # Work with explicit coefficient convolution.
    def polymul(a, b):
        out = [mp.mpf(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return out

    # y in z: (-z^2 + 2z - 1)/(4z); numerator coefficients (z^2, z, 1)
    ynum = [mp.mpf(-1) / 4, mp.mpf(2) / 4, mp.mpf(-1) / 4]  # -(z-1)^2/(4z)
    acc = [mp.mpf(0)] * (2 * (p - 1) + 1)
    zpow = [mp.mpf(1)]  # ynum^k, degree 2k
    for k in range(p):
        c = py[p - 1 - k]  # coefficient of y^k
        # shift ynum^k (degree 2k, centered at z^k) to align: multiply by z^(p-1-k)
        off = p - 1 - k
        for i, v in enumerate(zpow):
            acc[i + off] += c * v
        if k < p - 1:
            zpow = polymul(zpow, ynum)

    roots = mp.polyroots(list(reversed(acc)), maxsteps=200, extraprec=200)
    inside = [r for r in roots if abs(r) < 1]
    assert len(inside) == p - 1, f"expected {p-1} roots inside unit circle, got {len(inside)}"

    # h(z) = c * (1+z)^p * prod (z - r_i); normalize sum h = sqrt(2)
    coeffs = [mp.mpf(1)]
    for _ in range(p):
        coeffs = polymul(coeffs, [mp.mpf(1), mp.mpf(1)])  # (1+z)
    for r in inside:
        coeffs = polymul(coeffs, [-r, mp.mpf(1)])  # (z - r)
    coeffs = [mp.re(c) for c in coeffs]
    s = sum(coeffs)
    scale = mp.sqrt(2) / s
    h = [c * scale for c in coeffs]

    # checks at high precision
    assert abs(sum(h) - mp.sqrt(2)) < mp.mpf(10) ** -40
    e = sum(c * c for c in h)
    assert abs(e - 1) < mp.mpf(10) ** -40, e
    for lag in range(1, p):
        ac = sum(h[i] * h[i + 2 * lag] for i in range(len(h) - 2 * lag))
        assert abs(ac) < mp.mpf(10) ** -40, (lag, ac)
    return h


if __name__ == "__main__":
    h = db_lowpass(P)
    print(f"# Daubechies-{P} lowpass, {2*P} taps, sum = sqrt(2)")
    print("DB24_LOWPASS = (")
    for c in h:
        print(f"    {mp.nstr(c, 17, strip_zeros=False)},")
    print(")")
