"""Partitions in frequency notation, constrained enumeration and exact counting."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Optional


class Partition:
    """An integer partition stored as ``part -> multiplicity`` (multiplicities >= 1).

    Instances are immutable and hashable.  ``items()`` lists parts ascending.
    """

    __slots__ = ("_items", "_weight")

    def __init__(self, freq: Mapping[int, int] | Iterable[tuple] = ()):
        pairs = freq.items() if isinstance(freq, Mapping) else freq
        items = []
        for part, mult in pairs:
            if mult < 0:
                raise ValueError(f"negative multiplicity {mult} for part {part}")
            if mult == 0:
                continue
            if part < 1:
                raise ValueError(f"part {part} is not positive")
            items.append((int(part), int(mult)))
        items.sort()
        for (a, _), (b, _) in zip(items, items[1:]):
            if a == b:
                raise ValueError(f"part {a} listed twice")
        self._items = tuple(items)
        self._weight = sum(p * m for p, m in items)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        freq: dict = {}
        for p in parts:
            freq[p] = freq.get(p, 0) + 1
        return cls(freq)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Read ``(3^4, 4^1, 5^1)``; a bare part means multiplicity one."""
        body = text.strip()
        if not (body.startswith("(") and body.endswith(")")):
            raise ValueError(f"not a partition literal: {text!r}")
        body = body[1:-1].strip()
        freq: dict = {}
        if body:
            for tok in body.split(","):
                m = re.fullmatch(r"\s*(\d+)\s*(?:\^\s*(\d+))?\s*", tok)
                if not m:
                    raise ValueError(f"bad term {tok!r} in {text!r}")
                part = int(m.group(1))
                mult = int(m.group(2)) if m.group(2) is not None else 1
                freq[part] = freq.get(part, 0) + mult
        return cls(freq)

    def items(self) -> tuple:
        return self._items

    @property
    def freq(self) -> dict:
        return dict(self._items)

    def f(self, part: int) -> int:
        for p, m in self._items:
            if p == part:
                return m
        return 0

    @property
    def weight(self) -> int:
        return self._weight

    @property
    def num_parts(self) -> int:
        return sum(m for _, m in self._items)

    @property
    def smallest_part(self) -> Optional[int]:
        return self._items[0][0] if self._items else None

    @property
    def largest_part(self) -> Optional[int]:
        return self._items[-1][0] if self._items else None

    def parts(self) -> list:
        """Weakly decreasing list of parts."""
        out = []
        for p, m in reversed(self._items):
            out.extend([p] * m)
        return out

    def is_empty(self) -> bool:
        return not self._items

    def __eq__(self, other) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self._items == other._items

    def __hash__(self) -> int:
        return hash(self._items)

    def __str__(self) -> str:
        return "(" + ", ".join(f"{p}^{m}" for p, m in self._items) + ")"

    def __repr__(self) -> str:
        return f"Partition({self})"


@dataclass(frozen=True)
class PartitionConstraint:
    """Weight, part range, optional forced smallest part and forbidden part sizes."""

    N: int
    min_part: int = 1
    max_part: Optional[int] = None
    exact_smallest: Optional[int] = None
    forbidden: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.N < 0:
            raise ValueError("weight must be nonnegative")
        object.__setattr__(self, "forbidden", frozenset(self.forbidden))
        if self.max_part is None:
            object.__setattr__(self, "max_part", max(self.N, self.min_part))
        if self.min_part < 1 or self.min_part > self.max_part:
            raise ValueError(f"bad part range [{self.min_part}, {self.max_part}]")
        s = self.exact_smallest
        if s is not None and not (self.min_part <= s <= self.max_part):
            raise ValueError(f"exact_smallest {s} outside [{self.min_part}, {self.max_part}]")

    def allowed_parts(self) -> list:
        lo = self.min_part if self.exact_smallest is None else self.exact_smallest
        return [p for p in range(lo, self.max_part + 1) if p not in self.forbidden]

    def accepts(self, pi: Partition) -> bool:
        if pi.weight != self.N:
            return False
        if pi.is_empty():
            return self.exact_smallest is None
        if self.exact_smallest is not None and pi.smallest_part != self.exact_smallest:
            return False
        return all(self.min_part <= p <= self.max_part and p not in self.forbidden
                   for p, _ in pi.items())


def iter_frequency_vectors(N: int, parts: list, required: Optional[int] = None) -> Iterator[dict]:
    """Yield ``{part: mult}`` dicts with ``sum(part*mult) == N``.

    ``parts`` are tried largest first, multiplicities descending.  When
    ``required`` is given it must be one of ``parts`` and gets multiplicity >= 1.
    The yielded dict is fresh on every step.
    """
    ps = sorted(set(parts), reverse=True)
    k = len(ps)
    if k == 0:
        if N == 0 and required is None:
            yield {}
        return
    lows = [1 if p == required else 0 for p in ps]
    last = ps[-1]
    if k == 1:
        if N % last == 0 and N // last >= lows[0]:
            yield {last: N // last} if N else {}
        return
    mult = [0] * k
    rem = [0] * k
    rem[0] = N
    mult[0] = N // ps[0] + 1
    i = 0
    while i >= 0:
        mult[i] -= 1
        if mult[i] < lows[i]:
            i -= 1
            continue
        r = rem[i] - mult[i] * ps[i]
        if i == k - 2:
            # the last part's multiplicity is forced
            if r % last == 0 and r // last >= lows[-1]:
                mult[-1] = r // last
                yield {ps[j]: mult[j] for j in range(k) if mult[j]}
            continue
        i += 1
        rem[i] = r
        mult[i] = r // ps[i] + 1


def enumerate_partitions(c: PartitionConstraint) -> Iterator[Partition]:
    """Lazily yield each partition satisfying ``c`` exactly once."""
    if c.N == 0:
        if c.exact_smallest is None:
            yield Partition()
        return
    parts = c.allowed_parts()
    req = c.exact_smallest
    if req is not None and req in c.forbidden:
        return
    for d in iter_frequency_vectors(c.N, parts, req):
        yield Partition(d)


def count_in_parts(N: int, parts: Iterable[int]) -> list:
    """Counts of partitions of ``0..N`` with every part drawn from ``parts``."""
    a = [0] * (N + 1)
    a[0] = 1
    for p in sorted(set(parts)):
        for n in range(p, N + 1):
            a[n] += a[n - p]
    return a


@lru_cache(maxsize=64)
def _max_part_table(M: int, N: int) -> tuple:
    return tuple(count_in_parts(N, range(1, M + 1)))


def count_max_part(n: int, M: int) -> int:
    """Number of partitions of ``n`` with every part at most ``M``."""
    if n < 0:
        return 0
    if M < 1:
        return 1 if n == 0 else 0
    size = max(64, 1 << (n.bit_length()))
    return _max_part_table(M, size)[n]


def count_range_ie(n: int) -> int:
    """Partitions of ``n`` into parts from 4..17, by inclusion-exclusion on parts 1, 2, 3.

    Removing parts 1, 2, 3 from the max-part-17 count multiplies its series by
    ``(1-q)(1-q^2)(1-q^3) = 1 - q - q^2 + q^4 + q^5 - q^6``.
    """
    total = 0
    for shift, sign in ((0, 1), (1, -1), (2, -1), (4, 1), (5, 1), (6, -1)):
        if n - shift >= 0:
            total += sign * count_max_part(n - shift, 17)
    return total


@lru_cache(maxsize=8)
def _pentagonal_table(N: int) -> tuple:
    p = [0] * (N + 1)
    p[0] = 1
    for n in range(1, N + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > n:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[n - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p[n] = total
    return tuple(p)


def p_unrestricted(n: int) -> int:
    """p(n) via Euler's pentagonal-number recurrence."""
    if n < 0:
        return 0
    size = max(64, 1 << (n.bit_length()))
    return _pentagonal_table(size)[n]


def _sqrt_lower(m: int, den: int) -> Fraction:
    """A rational r <= sqrt(m) with r > sqrt(m) - 1/den."""
    return Fraction(math.isqrt(m * den * den), den)


def _exp_lower(x: Fraction, terms: int) -> Fraction:
    """Partial Taylor sum of exp(x), a lower bound for x >= 0."""
    total = Fraction(0)
    term = Fraction(1)
    for k in range(terms):
        total += term
        term = term * x / (k + 1)
    return total


def bound_check(n: int) -> bool:
    """Certify ``p(n) <= exp(3 sqrt(n))`` with exact rational lower bounds.

    ``sqrt`` and ``exp`` are both under-approximated, so True is rigorous.
    The exponent is split as ``exp(y) = exp(y/k)^k`` with ``y/k < 1``.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    p = p_unrestricted(n)
    if n == 0:
        return p <= 1
    y = 3 * _sqrt_lower(n, 10 ** 4)
    k = int(y) + 1
    base = _exp_lower(y / k, terms=16)
    return p * base.denominator ** k <= base.numerator ** k
