"""Representations n = sum g_i x_i over small fixed generator sets.

The injections need a *fixed* solution for every target, so solutions are
chosen canonically: the lexicographically smallest multiplier tuple (first
multiplier minimal, then the second, and so on).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Optional


@dataclass(frozen=True)
class SemigroupSolution:
    generators: tuple
    multipliers: tuple
    target: int

    def __post_init__(self):
        if len(self.generators) != len(self.multipliers):
            raise ValueError("generators and multipliers differ in length")
        if any(m < 0 for m in self.multipliers):
            raise ValueError("multipliers must be nonnegative")
        if sum(g * m for g, m in zip(self.generators, self.multipliers)) != self.target:
            raise ValueError(f"{self.multipliers} does not solve target {self.target}")

    def __iter__(self):
        return iter(self.multipliers)

    def __getitem__(self, i):
        return self.multipliers[i]


GENS_456 = (4, 5, 6)
GENS_567 = (5, 6, 7)
GENS_4567 = (4, 5, 6, 7)
GENS_6_11 = (6, 7, 8, 9, 10, 11)

FIXED_SETS = (GENS_456, GENS_567, GENS_4567, GENS_6_11)

# the 6..11 set represents 0 by the empty solution unless told otherwise
_ZERO_BY_DEFAULT = {GENS_6_11}


def two_gen(a: int, b: int, n: int) -> tuple:
    """Count nonnegative solutions of ``a x + b y = n`` and return one with least x.

    The count always lies in ``{n // (a b), n // (a b) + 1}`` for coprime a, b.
    """
    if a < 1 or b < 1:
        raise ValueError("generators must be positive")
    if gcd(a, b) != 1:
        raise ValueError(f"generators {a}, {b} are not coprime")
    if n < 0:
        raise ValueError("target must be nonnegative")
    # a x = n (mod b) pins x modulo b
    x0 = (n * pow(a, -1, b)) % b if b > 1 else 0
    if a * x0 > n:
        return 0, None
    count = (n - a * x0) // (a * b) + 1
    return count, SemigroupSolution((a, b), (x0, (n - a * x0) // b), n)


@lru_cache(maxsize=None)
def _representable(gens: tuple, limit: int) -> tuple:
    ok = [False] * (limit + 1)
    ok[0] = True
    for n in range(1, limit + 1):
        ok[n] = any(g <= n and ok[n - g] for g in gens)
    return tuple(ok)


def _table(gens: tuple, n: int) -> list:
    """Representability tables for every suffix of ``gens`` up to ``n``."""
    limit = max(64, 1 << n.bit_length())
    return [_representable(gens[i:], limit) for i in range(len(gens))]


def lex_min_solution(gens, n: int) -> Optional[tuple]:
    """Lexicographically smallest nonnegative solution of ``sum g_i x_i = n``."""
    gens = tuple(gens)
    if n < 0:
        return None
    tabs = _table(gens, n)
    if not tabs[0][n]:
        return None
    out = []
    rem = n
    for i, g in enumerate(gens):
        if i == len(gens) - 1:
            out.append(rem // g)
            rem = 0
            break
        x = 0
        while not tabs[i + 1][rem - g * x]:
            x += 1
        out.append(x)
        rem -= g * x
    return tuple(out)


def solve_fixed(gens, n: int, allow_empty: Optional[bool] = None) -> Optional[SemigroupSolution]:
    """Canonical solution over one of the fixed generator sets, or None.

    ``n = 0`` yields the all-zero tuple only when ``allow_empty`` is set (the
    default is True for 6..11 and False for the others).
    """
    gens = tuple(sorted(gens))
    if gens not in FIXED_SETS:
        raise ValueError(f"unsupported generator set {gens}")
    if n < 0:
        return None
    if n == 0:
        if allow_empty is None:
            allow_empty = gens in _ZERO_BY_DEFAULT
        return SemigroupSolution(gens, (0,) * len(gens), 0) if allow_empty else None
    sol = lex_min_solution(gens, n)
    return None if sol is None else SemigroupSolution(gens, sol, n)


def alternate_456(n: int, sol) -> SemigroupSolution:
    """A solution of ``4x+5y+6z = n+6`` different from ``(a, b, c+1)``.

    ``sol = (a, b, c)`` solves the equation for ``n``; the three branches are
    tried in a fixed order so the returned tuple is deterministic.
    """
    if n < 4 or n == 5:
        raise ValueError(f"no alternate guaranteed for n={n}")
    a, b, c = tuple(sol)
    if 4 * a + 5 * b + 6 * c != n:
        raise ValueError(f"{(a, b, c)} does not solve 4x+5y+6z={n}")
    if a >= 1:
        out = (a - 1, b + 2, c)
    elif c >= 1:
        out = (a + 3, b, c - 1)
    else:
        out = (a + 4, b - 2, c)
    return SemigroupSolution(GENS_456, out, n + 6)

