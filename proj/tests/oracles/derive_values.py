#!/usr/bin/env python3
# Copyright 2026 The Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Independent high-precision oracle for the frozen values in the C++ tests.

Uses mpmath quadrature with the closed-form interference factor available
for path-loss exponent 4, and enumerates neighbor cache multisets with
multinomial weights (no Poisson thinning, no convolution). Run it to
reproduce the constants pinned in tests/frozen_values.h.
"""

from itertools import combinations_with_replacement
from collections import Counter

from mpmath import mp, mpf, exp, log, log1p, sqrt, atan, quad, factorial, floor

mp.dps = 40

RADIUS = mpf(5)
TAU = mpf(10) ** (mpf(5) / 10)  # 5 dB
F, L, M, ETA, GAMMA = 5, 5, 5, mpf("0.5"), mpf("0.6")


def zipf(n, gamma):
    w = [mpf(i) ** (-gamma) for i in range(1, n + 1)]
    s = sum(w)
    return [x / s for x in w]


def poisson_pmf(k, mean):
    if mean == 0:
        return mpf(1) if k == 0 else mpf(0)
    return mean ** k * exp(-mean) / factorial(k)


def poisson_truncation(mean, eps):
    n = 0
    while True:
        tail = 1 - sum(poisson_pmf(k, mpf(mean)) for k in range(n + 1))
        if tail < eps:
            return n
        n += 1


def beta_alpha4(r):
    # int_0^R x^4/(x^4 + tau r^4) 2x/R^2 dx, closed form via y = x^2.
    if r == 0:
        return mpf(1)
    c = sqrt(TAU) * r * r
    return 1 - (c / RADIUS ** 2) * atan(RADIUS ** 2 / c)


def success(u, snr):
    f = lambda r: exp(-r ** 4 * TAU / snr) * beta_alpha4(r) ** (u - 1) * 2 * r / RADIUS ** 2
    return quad(f, [0, mpf("0.25"), 1, RADIUS])


def budget(u, snr, mu, scheme):
    lg = log1p(TAU)
    rate = success(1, snr) * lg / u if scheme == "oma" else success(u, snr) * lg
    return int(floor(L * rate / mu))


def average_load(c, snr, lam, mu, scheme, eps=mpf("1e-16")):
    """Expectation by multiset enumeration over n neighbors."""
    f = zipf(F, GAMMA)
    q = [mpf(1) / (L + 1)] * (L + 1)
    mean = ETA * lam / mu
    nmax = poisson_truncation(mean, eps)
    budgets = {}
    total = mpf(0)
    for i in range(F):
        acc = mpf(0)
        for n in range(nmax + 1):
            pn = poisson_pmf(n, mean)
            inner = mpf(0)
            for combo in combinations_with_replacement(range(L + 1), n):
                counts = Counter(combo)
                w = factorial(n)
                for v, k in counts.items():
                    w /= factorial(k)
                p = w
                for v in combo:
                    p *= q[v]
                u = sum(1 for v in combo if v > 0)
                if u == 0:
                    load = L - c[i]
                else:
                    if u not in budgets:
                        budgets[u] = budget(u, snr, mu, scheme)
                    b = budgets[u]
                    load = max(0, L - c[i] - sum(min(v, b) for v in combo if v > 0))
                inner += p * load
            acc += pn * inner
        total += f[i] * acc
    return total


def expected_delivery(snr, lam, mu, scheme, nmax=14):
    """nu (floored OMA) or zeta (floor-free NOMA) by explicit n-vector enumeration."""
    q = [mpf(1) / (L + 1)] * (L + 1)
    mean = ETA * lam / mu
    lg = log1p(TAU)
    p1 = success(1, snr)
    acc = mpf(0)
    cache = {}
    for n in range(nmax + 1):
        pn = poisson_pmf(n, mean)
        for combo in combinations_with_replacement(range(L + 1), n):
            counts = Counter(combo)
            w = factorial(n)
            for v, k in counts.items():
                w /= factorial(k)
            p = w
            for v in combo:
                p *= q[v]
            u = sum(1 for v in combo if v > 0)
            if u == 0:
                continue
            if u not in cache:
                if scheme == "oma":
                    cache[u] = u * floor(L / (u * mu) * p1 * lg)
                else:
                    cache[u] = (L / mu) * lg * u * success(u, snr)
            acc += pn * p * cache[u]
    return acc


def db(x):
    return mpf(10) ** (mpf(x) / 10)


if __name__ == "__main__":
    print("zipf(5,0.6) =", [mp.nstr(v, 17) for v in zipf(5, GAMMA)])
    print("pmf(eta=.5,lam=1,mu=1,n=0) =", mp.nstr(exp(mpf("-0.5")), 17))
    for mean in ("0.5", "1.0"):
        for eps in ("1e-9", "1e-13"):
            print(f"truncation(mean={mean}, eps={eps}) =", poisson_truncation(mpf(mean), mpf(eps)))
    print("beta(r=R) =", mp.nstr(beta_alpha4(RADIUS), 17))
    for snr_db in (0, 10, 20, 30, 40):
        row = [mp.nstr(success(u, db(snr_db)), 17) for u in (1, 2, 3, 5)]
        print(f"success(u=1,2,3,5; snr={snr_db} dB) =", row)
    print("B(1; snr=20 dB, mu=1) =", budget(1, db(20), 1, "oma"))
    for mu in (1, 10):
        print(f"nu(snr=20 dB, lam=1, mu={mu}) =", mp.nstr(expected_delivery(db(20), 1, mu, "oma"), 17))
        print(f"zeta(snr=20 dB, lam=1, mu={mu}) =", mp.nstr(expected_delivery(db(20), 1, mu, "noma"), 17))
    print("nu(snr=40 dB, lam=1, mu=1) =", mp.nstr(expected_delivery(db(40), 1, 1, "oma"), 17))
    for scheme in ("oma", "noma"):
        for snr_db in (20, 40):
            for c in ([5, 0, 0, 0, 0], [2, 2, 1, 0, 0]):
                v = average_load(c, db(snr_db), 1, 1, scheme)
                print(f"load({c}, {scheme}, snr={snr_db} dB, lam=mu=1) =", mp.nstr(v, 17))
