"""Compiled sweep for the 7 <= L <= 21 map.

At L = 12 a single weight class holds hundreds of millions of partitions, far
too many for an image set.  The sweep instead applies the map to every
frequency vector, decodes the image with an independent left inverse and
requires the round trip to be the identity: a map with a left inverse is
injective.  Frequency vectors are int64 arrays indexed by part size 0..L+3.
"""

from __future__ import annotations

import numpy as np
from numba import njit

# case codes returned by two2_apply
CASE_NAMES = {1: "1", 2: "2", 3: "3", 4: "4(i)", 5: "4(ii)(a)", 6: "4(ii)(b)"}
NO_BRANCH = -1

# stats layout
S_DOMAIN, S_WEIGHT_BAD, S_CODOMAIN_BAD, S_DECODE_BAD, S_NO_BRANCH = 0, 1, 2, 3, 4
S_CASE0 = 5  # S_CASE0 + code for codes 1..6
N_STATS = S_CASE0 + 7


@njit(cache=True)
def two2_apply(f, L, g):
    for i in range(L + 4):
        g[i] = f[i]
    fL = f[L]
    if fL > 0:
        r = fL % 3
        g[3] = L * (fL - r) // 3 + r
        g[L - 3] += r
        g[L] = 0
        return r + 1
    if f[L + 2] >= 6:
        g[L + 2] -= 6
        g[3] = 2 * L + 4
        return 4
    i0 = -1
    for i in range(4, L + 4):
        if i != L + 2 and f[i] >= 3:
            i0 = i
            break
    if i0 < 0:
        return NO_BRANCH
    g[i0] -= 3
    if i0 != L + 1:
        g[3] = i0
        return 5
    g[3] = 3
    g[L - 2] += 3
    return 6


@njit(cache=True)
def two2_decode(g, L, h):
    """Left inverse of two2_apply; returns False when g has no preimage shape."""
    for i in range(L + 4):
        h[i] = g[i]
    c = g[3]
    h[3] = 0
    if c <= 0:
        return False
    r = c % L
    if r <= 2:
        if (3 * (c - r)) % L != 0:
            return False
        h[L - 3] -= r
        h[L] = 3 * (c - r) // L + r
    elif c == 2 * L + 4:
        h[L + 2] += 6
    elif c == 3:
        h[L - 2] -= 3
        h[L + 1] += 3
    elif 4 <= c <= L + 3:
        h[c] += 3
    else:
        return False
    for i in range(L + 4):
        if h[i] < 0:
            return False
    return True


@njit(cache=True)
def _visit(f, L, N, g, h, stats, fail):
    stats[S_DOMAIN] += 1
    code = two2_apply(f, L, g)
    if code == NO_BRANCH:
        stats[S_NO_BRANCH] += 1
        if fail[0] == 0:
            fail[0] = 1
            fail[1:] = f
        return
    stats[S_CASE0 + code] += 1
    w = 0
    ok = True
    for i in range(L + 4):
        w += i * g[i]
        if g[i] < 0:
            ok = False
    if w != N:
        stats[S_WEIGHT_BAD] += 1
        if fail[0] == 0:
            fail[0] = 2
            fail[1:] = f
    if not ok or g[3] < 1 or g[L] != 0:
        stats[S_CODOMAIN_BAD] += 1
        if fail[0] == 0:
            fail[0] = 3
            fail[1:] = f
    same = two2_decode(g, L, h)
    if same:
        for i in range(L + 4):
            if h[i] != f[i]:
                same = False
                break
    if not same:
        stats[S_DECODE_BAD] += 1
        if fail[0] == 0:
            fail[0] = 4
            fail[1:] = f


@njit(cache=True)
def two2_sweep(L, N):
    """Visit every partition of N into parts 4..L+3.

    Returns (stats, fail) where fail[0] is 0 or the kind of the first failure
    (1 no branch, 2 weight, 3 codomain, 4 round trip) and fail[1:] its
    frequency vector.
    """
    size = L + 4
    f = np.zeros(size, np.int64)
    g = np.zeros(size, np.int64)
    h = np.zeros(size, np.int64)
    stats = np.zeros(N_STATS, np.int64)
    fail = np.zeros(size + 1, np.int64)
    # parts L+3 down to 6 by explicit stack; 4 and 5 closed off by a small loop
    top = L + 3
    depth = top - 6 + 1
    rem = np.zeros(depth + 1, np.int64)
    rem[0] = N
    level = 0
    f[top] = N // top + 1
    while level >= 0:
        p = top - level
        f[p] -= 1
        if f[p] < 0:
            f[p] = 0
            level -= 1
            continue
        r = rem[level] - p * f[p]
        if p > 6:
            level += 1
            rem[level] = r
            f[p - 1] = r // (p - 1) + 1
            continue
        # p == 6: solve 4a + 5b = r
        b = r // 5
        while b >= 0:
            a4 = r - 5 * b
            if a4 % 4 == 0:
                f[5] = b
                f[4] = a4 // 4
                _visit(f, L, N, g, h, stats, fail)
            b -= 1
        f[4] = 0
        f[5] = 0
    return stats, fail
