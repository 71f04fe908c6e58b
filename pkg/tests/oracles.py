"""Slow, obviously-correct reference implementations used only by the tests."""

from itertools import combinations, product


def naive_mul(x, y, T):
    out = [0] * T
    for i, u in enumerate(x):
        for j, v in enumerate(y):
            if i + j < T:
                out[i + j] += u * v
    return out


def partitions(n, max_part=None):
    """All partitions of n as weakly decreasing tuples (recursive)."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for p in range(min(n, max_part), 0, -1):
        for rest in partitions(n - p, p):
            yield (p,) + rest


def count_parts_in(n, lo, hi):
    return sum(1 for pi in partitions(n) if all(lo <= p <= hi for p in pi))


def q_binomial_by_subsets(A, B):
    """Coefficients of [A choose B]_q as the inversion count over B-subsets of range(A)."""
    deg = B * (A - B)
    c = [0] * (deg + 1)
    for S in combinations(range(A), B):
        c[sum(S) - B * (B - 1) // 2] += 1
    return c


def brute_solutions(gens, n):
    """Every nonnegative tuple x with sum(g_i x_i) == n, sorted lexicographically."""
    ranges = [range(n // g + 1) for g in gens]
    return sorted(x for x in product(*ranges) if sum(g * m for g, m in zip(gens, x)) == n)


def G_by_partitions(L, s, N):
    """Smallest part exactly s minus smallest part >= s+1, both with range <= L."""
    tot = 0
    for pi in partitions(N):
        lo, hi = pi[-1], pi[0]
        if hi - lo > L:
            continue
        if lo == s:
            tot += 1
        elif lo > s:
            tot -= 1
    return tot


def H_by_partitions(L, s, N):
    cod = sum(1 for pi in partitions(N)
              if pi[-1] == s and pi[0] <= L + s and L not in pi)
    dom = sum(1 for pi in partitions(N) if pi[-1] >= s + 1 and pi[0] <= L + s)
    return cod - dom
