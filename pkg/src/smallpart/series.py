"""Truncated formal power series in q with exact integer coefficients.

Every q-series in the package is a :class:`TruncatedSeries`: a dense tuple of
Python ints holding the coefficients of ``q^0 .. q^(T-1)`` together with the
truncation order ``T``.  Values are immutable; all operations return new series.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

# Below this size the schoolbook product wins over Kronecker packing.
_KRONECKER_MIN = 48


class TruncatedSeries:
    """Coefficients ``a_0 .. a_{T-1}`` of a power series known modulo ``q^T``."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int], order: Optional[int] = None):
        c = tuple(int(x) for x in coeffs)
        if order is not None:
            if order < 1:
                raise ValueError("order must be positive")
            c = c[:order] + (0,) * (order - len(c))
        elif not c:
            raise ValueError("empty coefficient list needs an explicit order")
        self._coeffs = c

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls((1,), order)

    @classmethod
    def monomial(cls, exponent: int, order: int, coeff: int = 1) -> "TruncatedSeries":
        c = [0] * order
        if exponent < order:
            c[exponent] = coeff
        return cls(c)

    @classmethod
    def from_terms(cls, terms: dict, order: int) -> "TruncatedSeries":
        c = [0] * order
        for e, v in terms.items():
            if 0 <= e < order:
                c[e] += v
        return cls(c)

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    @property
    def order(self) -> int:
        return len(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __getitem__(self, n):
        return self._coeffs[n]

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        shown = ", ".join(str(x) for x in self._coeffs[:8])
        more = ", ..." if self.order > 8 else ""
        return f"TruncatedSeries([{shown}{more}], order={self.order})"

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot raise the truncation order")
        return TruncatedSeries(self._coeffs[:order])

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(-x for x in self._coeffs)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return combine(self, other, "add")

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return combine(self, other, "sub")

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return combine(self, other, "mul")

    def evaluate_at_one(self) -> int:
        return sum(self._coeffs)


def combine(a: TruncatedSeries, b: TruncatedSeries, op: str) -> TruncatedSeries:
    """Add, subtract or multiply two series; the result has order ``min(Ta, Tb)``."""
    T = min(a.order, b.order)
    x, y = a.coeffs[:T], b.coeffs[:T]
    if op == "add":
        return TruncatedSeries(u + v for u, v in zip(x, y))
    if op == "sub":
        return TruncatedSeries(u - v for u, v in zip(x, y))
    if op == "mul":
        return TruncatedSeries(poly_mul(x, y, T))
    raise ValueError(f"unknown op {op!r}")


def _trim(c: Sequence[int]) -> list:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def schoolbook_mul(x: Sequence[int], y: Sequence[int], T: int) -> list:
    out = [0] * T
    ys = [(j, v) for j, v in enumerate(y[:T]) if v]
    for i, u in enumerate(x[:T]):
        if not u:
            continue
        lim = T - i
        for j, v in ys:
            if j >= lim:
                break
            out[i + j] += u * v
    return out


def _pack(c: Sequence[int], nbytes: int) -> int:
    pos = b"".join(v.to_bytes(nbytes, "little") if v > 0 else bytes(nbytes) for v in c)
    neg = b"".join((-v).to_bytes(nbytes, "little") if v < 0 else bytes(nbytes) for v in c)
    return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")


def kronecker_mul(x: Sequence[int], y: Sequence[int], T: int) -> list:
    """Truncated product via Kronecker substitution q -> 2^k and one big-int multiply."""
    x, y = _trim(x[:T]), _trim(y[:T])
    if not x or not y:
        return [0] * T
    bound = max(abs(v) for v in x) * max(abs(v) for v in y) * min(len(x), len(y))
    nbytes = (bound.bit_length() + 2 + 7) // 8  # sign bit plus slack
    nbits = 8 * nbytes
    prod = _pack(x, nbytes) * _pack(y, nbytes)
    prod &= (1 << (nbits * T)) - 1
    raw = prod.to_bytes(nbytes * T, "little")
    half = 1 << (nbits - 1)
    full = 1 << nbits
    out = [0] * T
    carry = 0
    for n in range(T):
        v = int.from_bytes(raw[n * nbytes:(n + 1) * nbytes], "little") + carry
        if v >= half:
            v -= full
            carry = 1
        else:
            carry = 0
        out[n] = v
    return out


def poly_mul(x: Sequence[int], y: Sequence[int], T: int) -> list:
    if min(len(x), len(y), T) < _KRONECKER_MIN:
        return schoolbook_mul(x, y, T)
    return kronecker_mul(x, y, T)


def divide_one_minus_qj(c: list, j: int) -> None:
    """In place: c <- c / (1 - q^j) modulo q^len(c)."""
    for n in range(j, len(c)):
        c[n] += c[n - j]


def multiply_one_minus_qj(c: list, j: int) -> None:
    """In place: c <- c * (1 - q^j) modulo q^len(c)."""
    for n in range(len(c) - 1, j - 1, -1):
        c[n] -= c[n - j]


def inv_pochhammer(m: int, n: int, T: int) -> TruncatedSeries:
    """``1/(q^m; q)_n`` mod ``q^T``: partitions with every part in ``m .. m+n-1``."""
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    c = [0] * T
    c[0] = 1
    for j in range(m, m + n):
        divide_one_minus_qj(c, j)
    return TruncatedSeries(c)


def pochhammer(m: int, n: int, T: int) -> TruncatedSeries:
    """The finite product ``(q^m; q)_n`` expanded and truncated."""
    c = [0] * T
    c[0] = 1
    for j in range(m, m + n):
        multiply_one_minus_qj(c, j)
    return TruncatedSeries(c)


@dataclass(frozen=True)
class QBinomial:
    upper: int
    lower: int
    poly: TruncatedSeries

    @property
    def degree(self) -> int:
        return self.lower * (self.upper - self.lower)

    def at_one(self) -> int:
        return self.poly.evaluate_at_one()


def q_binomial(A: int, B: int, T: Optional[int] = None) -> QBinomial:
    """Gaussian binomial ``[A choose B]_q`` from the integer Pascal recurrence.

    Uses ``[a, b] = [a-1, b-1] + q^b [a-1, b]`` row by row, so no division occurs.
    """
    if A < 0 or B < 0:
        raise ValueError("A and B must be nonnegative")
    if B > A:
        raise ValueError(f"lower index {B} exceeds upper index {A}")
    deg = B * (A - B)
    if T is None:
        T = deg + 1
    if deg >= T:
        raise ValueError(f"order {T} too small for degree {deg}")
    # row[b] holds [a choose b] as a coefficient list
    row = [[1]]
    for a in range(1, A + 1):
        new = []
        for b in range(0, min(a, B) + 1):
            left = row[b - 1] if b >= 1 else []
            right = row[b] if b < len(row) and b <= a - 1 else []
            size = max(len(left), len(right) + b)
            c = [0] * size
            for i, v in enumerate(left):
                c[i] += v
            for i, v in enumerate(right):
                c[i + b] += v
            new.append(c)
        row = new
    return QBinomial(A, B, TruncatedSeries(row[B], T))


def cumulate_mod_L(h: TruncatedSeries, L: int) -> TruncatedSeries:
    """Multiply by ``1/(1 - q^L)``: ``b_n = sum of a_m`` over ``m <= n, m = n (mod L)``."""
    if L < 1:
        raise ValueError("L must be positive")
    c = list(h.coeffs)
    divide_one_minus_qj(c, L)
    return TruncatedSeries(c)


def first_negative(s: TruncatedSeries) -> Optional[tuple]:
    for n, v in enumerate(s.coeffs):
        if v < 0:
            return (n, v)
    return None

