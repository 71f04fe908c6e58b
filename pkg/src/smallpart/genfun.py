"""The difference series G_{L,s}, H_{L,s,k}, their correction polynomials and bounds.

``G_{L,s}`` counts partitions with smallest part exactly ``s`` minus those with
smallest part at least ``s+1``, both with ``largest - smallest <= L``.
``H_{L,s,k} = q^s (1-q^k)/(q^s;q)_{L+1} - (1/(q^{s+1};q)_L - 1)``, and
``G_{L,s} = H_{L,s,L} / (1 - q^L)``.  Each series is available in closed form
(exact series arithmetic) and by brute enumeration.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from typing import Optional

from .partitions import PartitionConstraint, count_in_parts, enumerate_partitions
from .semigroup import two_gen
from .series import TruncatedSeries, cumulate_mod_L, first_negative, inv_pochhammer


@dataclass(frozen=True)
class SeriesSpec:
    L: int
    s: int
    k: Optional[int] = None

    def __post_init__(self):
        if self.L < 1 or self.s < 1:
            raise ValueError("L and s must be positive")
        if self.k is None:
            object.__setattr__(self, "k", self.L)
        elif self.k < 1:
            raise ValueError("k must be positive")

    @property
    def in_hypotheses(self) -> bool:
        """True when ``L >= s+1``, where the partition interpretation of H holds."""
        return self.L >= self.s + 1

    def as_dict(self) -> dict:
        return {"L": self.L, "s": self.s, "k": self.k, "in_hypotheses": self.in_hypotheses}


def H_closed(L: int, s: int, k: Optional[int] = None, T: int = 100) -> TruncatedSeries:
    """``H_{L,s,k}`` modulo ``q^T`` assembled from inverse Pochhammer factors."""
    if T < 1:
        raise ValueError("order must be positive")
    spec = SeriesSpec(L, s, k)
    first = list(inv_pochhammer(s, L + 1, T).coeffs)
    # multiply by q^s (1 - q^k)
    shifted = [0] * T
    for n in range(s, T):
        shifted[n] = first[n - s]
        if n - s - spec.k >= 0:
            shifted[n] -= first[n - s - spec.k]
    second = inv_pochhammer(s + 1, L, T).coeffs
    out = [a - b for a, b in zip(shifted, second)]
    out[0] += 1
    return TruncatedSeries(out)


def G_closed(L: int, s: int, T: int = 100) -> TruncatedSeries:
    return cumulate_mod_L(H_closed(L, s, L, T), L)


def _count(c: PartitionConstraint) -> int:
    return sum(1 for _ in enumerate_partitions(c))


def H_comb(L: int, s: int, N: int) -> int:
    """``|I_{L,s,L}| - |D_{L,s}|`` at weight N, both sets enumerated."""
    if L <= s:
        raise ValueError(f"partition interpretation needs L >= s+1 (got L={L}, s={s})")
    if N < 1:
        raise ValueError("N must be positive")
    codomain = _count(PartitionConstraint(N, min_part=s, max_part=L + s,
                                          exact_smallest=s, forbidden={L}))
    domain = _count(PartitionConstraint(N, min_part=s + 1, max_part=L + s))
    return codomain - domain


def G_brute(L: int, s: int, N: int) -> int:
    """Coefficient of q^N in G_{L,s} by direct enumeration of both sets."""
    if N < 1:
        return 0
    first = _count(PartitionConstraint(N, min_part=s, max_part=s + L, exact_smallest=s))
    second = 0
    # a partition of N has smallest part <= N
    for t in range(s + 1, N + 1):
        second += _count(PartitionConstraint(N, min_part=t, max_part=t + L, exact_smallest=t))
    return first - second


def domain_codomain_sizes(L: int, N: int, s: int = 3) -> tuple:
    """``(|D_{L,s}|, |I_{L,s,L}|)`` at weight N by dynamic programming."""
    d = count_in_parts(N, range(s + 1, L + s + 1))[N] if N >= 1 else 0
    if N < s:
        return d, 0
    parts = [p for p in range(s, L + s + 1) if p != L]
    i = count_in_parts(N - s, parts)[N - s]
    return d, i


@dataclass(frozen=True)
class CorrectionPolynomial:
    """Sparse polynomial ``sum c_e q^e`` with every stored ``c_e >= 1``."""

    terms: tuple = ()
    certified_below: Optional[int] = None

    def __post_init__(self):
        items = tuple(sorted((int(e), int(c)) for e, c in dict(self.terms).items() if c))
        if any(c < 1 for _, c in items):
            raise ValueError("correction coefficients must be positive")
        object.__setattr__(self, "terms", items)

    @classmethod
    def parse(cls, text: str) -> "CorrectionPolynomial":
        """Read ``q^4 + 2q^16`` style sums; ``0`` or empty is the zero polynomial."""
        text = text.replace(" ", "")
        if text in ("", "0"):
            return cls(())
        terms: dict = {}
        for tok in text.split("+"):
            coeff, _, exp = tok.partition("q")
            c = int(coeff) if coeff else 1
            if exp.startswith("^"):
                e = int(exp[1:])
            else:
                e = 1 if _ or exp else 0
            terms[e] = terms.get(e, 0) + c
        return cls(tuple(terms.items()))

    def as_dict(self) -> dict:
        return dict(self.terms)

    @property
    def degree(self) -> Optional[int]:
        return self.terms[-1][0] if self.terms else None

    def __bool__(self) -> bool:
        return bool(self.terms)

    def same_terms(self, other: "CorrectionPolynomial") -> bool:
        return self.terms == other.terms

    def series(self, T: int) -> TruncatedSeries:
        return TruncatedSeries.from_terms(dict(self.terms), T)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(("" if c == 1 else str(c)) + f"q^{e}" for e, c in self.terms)


def minimal_correction(L: int, s: int, T: int) -> CorrectionPolynomial:
    """Termwise-minimal p with ``G_{L,s} + p`` nonnegative below q^T."""
    g = G_closed(L, s, T)
    return CorrectionPolynomial(tuple((n, -v) for n, v in enumerate(g.coeffs) if v < 0),
                                certified_below=T)


def correction_diff(found: CorrectionPolynomial, expected: CorrectionPolynomial) -> dict:
    """Exponents where two polynomials disagree, as ``e -> (found, expected)``."""
    a, b = found.as_dict(), expected.as_dict()
    return {e: (a.get(e, 0), b.get(e, 0)) for e in sorted(set(a) | set(b))
            if a.get(e, 0) != b.get(e, 0)}


# Table rows: multiplicity t of part s, the two free parts, and a hypothesis check.
TABLE_ROWS = {
    1: dict(t=10, parts=(1, 2), desc="(s^10, (s+1)^x, (s+2)^y), L >= 2s+3"),
    2: dict(t=1, parts=(1, 2), desc="(s^1, (s+1)^x, (s+2)^y), s+3 <= L <= 2s+2"),
    3: dict(t=1, parts=(2, 3), desc="(s^1, (s+2)^x, (s+3)^y), L = s+1"),
    4: dict(t=1, parts=(1, 3), desc="(s^1, (s+1)^x, (s+3)^y), s even, L = s+2"),
    5: dict(t=1, parts=(1, 3), desc="(s^1, (s+1)^x, (s+3)^y), s odd, L = s+2, N odd"),
    6: dict(t=2, parts=(1, 3), desc="(s^2, (s+1)^x, (s+3)^y), s odd != 1, L = s+2, N even"),
    7: dict(t=6, parts=(1, 3), desc="(1^6, 2^x, 4^y), s = 1, L = 3, N even"),
}


def row_admissible(row: int, s: int, N: int) -> Optional[str]:
    """None when (row, s, N) meets the row's hypotheses, else the reason."""
    if row not in TABLE_ROWS:
        return f"unknown row {row}"
    if s < 1:
        return "s must be positive"
    t = TABLE_ROWS[row]["t"]
    if N < t * s:
        return f"N must be at least {t * s}"
    if row == 4 and s % 2:
        return "row 4 needs s even"
    if row == 5 and (s % 2 == 0 or N % 2 == 0):
        return "row 5 needs s odd and N odd"
    if row == 6 and (s % 2 == 0 or N % 2 or s == 1):
        return "row 6 needs s odd, s != 1 and N even"
    if row == 7 and (s != 1 or N % 2):
        return "row 7 needs s = 1 and N even"
    return None


def row_shape(row: int, s: int) -> tuple:
    """``(t, a, b)``: shapes are ``(s^t, a^x, b^y)``."""
    r = TABLE_ROWS[row]
    return r["t"], s + r["parts"][0], s + r["parts"][1]


def row_floor_bound(row: int, s: int, N: int) -> int:
    """The row's lower-bound formula, evaluated literally."""
    if row == 1:
        return (N - 10 * s) // ((s + 1) * (s + 2))
    if row == 2:
        return (N - s) // ((s + 1) * (s + 2))
    if row == 3:
        return (N - s) // ((s + 2) * (s + 3))
    if row == 4:
        return (N - s) // ((s + 1) * (s + 3))
    if row == 5:
        return 2 * (N - s) // ((s + 1) * (s + 3))
    if row == 6:
        return 2 * (N - 2 * s) // ((s + 1) * (s + 3))
    if row == 7:
        return (N - 6) // 4
    raise ValueError(f"unknown row {row}")


def row_reduced_equation(row: int, s: int, N: int) -> tuple:
    """The coprime two-variable equation ``a x + b y = n`` the row's count reduces to."""
    t, a, b = row_shape(row, s)
    n = N - t * s
    g = math.gcd(a, b)
    if n % g:
        return a // g, b // g, None
    return a // g, b // g, n // g


def table_row_count(row: int, s: int, N: int) -> tuple:
    """``(count, floor_bound)`` for partitions of N with the row's shape."""
    why = row_admissible(row, s, N)
    if why:
        raise ValueError(why)
    a, b, n = row_reduced_equation(row, s, N)
    count = 0 if n is None else two_gen(a, b, n)[0]
    return count, row_floor_bound(row, s, N)


# ---- bound quantities ------------------------------------------------------

DEFAULT_DIGIT_CAP = 10 ** 8


@dataclass
class BigQuantity:
    """A huge positive integer kept exactly when affordable, always in log scale."""

    log10: Optional[float]
    log10_log10: float
    exact: Optional[int] = field(default=None, repr=False)
    digits: Optional[int] = None

    def as_dict(self) -> dict:
        return {
            "exact_available": self.exact is not None,
            "digits": self.digits,
            "log10": self.log10,
            "log10_log10": self.log10_log10,
        }


@dataclass
class BoundsReport:
    L: int
    s: int
    P: int
    gamma: BigQuantity
    Gamma: BigQuantity
    log_delta: BigQuantity
    delta_prime_note: str
    N_L: int
    eta_status: str = "symbolic-only"

    def as_dict(self) -> dict:
        return {
            "L": self.L, "s": self.s, "P": str(self.P), "N_L": self.N_L,
            "gamma": self.gamma.as_dict(), "Gamma": self.Gamma.as_dict(),
            "ln_delta": self.log_delta.as_dict(),
            "delta_prime": self.delta_prime_note, "eta": self.eta_status,
        }


def P_value(L: int, s: int) -> int:
    return math.prod(range(s + 1, s + L + 1))


def N_L(L: int) -> int:
    return L * L + 10 * L + 7


def _gamma_parts(L: int, s: int) -> tuple:
    P = P_value(L, s)
    lead = sum(range(s + 1, s + L + 1))
    e = (P * P - 1) * L + 2
    tail = ((P * P - 1) * L - 2) * P
    return P, lead, e, tail


def _log10_of_power(lead: int, P: int, e: int) -> tuple:
    """``(log10, log10 log10)`` of ``lead * P^e``, tolerant of astronomic ``e``."""
    lp = math.log10(P)
    ll = math.log10(e) + math.log10(lp)
    try:
        val = e * lp + math.log10(lead)
    except OverflowError:
        return None, ll
    if math.isinf(val):
        return None, ll
    return val, math.log10(val)


def _exact_digits(x) -> int:
    import gmpy2

    x = gmpy2.mpz(x)
    d = gmpy2.num_digits(x, 10)
    if x < gmpy2.mpz(10) ** (d - 1):
        d -= 1
    return int(d)


def gamma_quantity(L: int, s: int, digit_cap: int = DEFAULT_DIGIT_CAP) -> BigQuantity:
    """``gamma(L,s) = (sum of s+1..s+L) * (P^((P^2-1)L+2) + ((P^2-1)L-2) P)``."""
    P, lead, e, tail = _gamma_parts(L, s)
    log10, loglog = _log10_of_power(lead, P, e)
    q = BigQuantity(log10=log10, log10_log10=loglog)
    if log10 is not None and log10 + 1 <= digit_cap:
        import gmpy2

        exact = gmpy2.mpz(lead) * (gmpy2.mpz(P) ** e + tail)
        q.exact = exact
        q.digits = _exact_digits(exact)
    elif log10 is not None and log10 < 1e15:
        q.digits = int(math.floor(log10)) + 1
    return q


def bounds(L: int, s: int, digit_cap: int = DEFAULT_DIGIT_CAP) -> BoundsReport:
    gamma = gamma_quantity(L, s, digit_cap)
    Gamma = gamma_quantity(3 * s + 2, s, digit_cap)
    # ln delta = 3 Gamma
    if Gamma.exact is not None:
        ln_delta = BigQuantity(log10=math.log10(3) + Gamma.log10,
                               log10_log10=math.log10(math.log10(3) + Gamma.log10),
                               exact=3 * Gamma.exact,
                               digits=_exact_digits(3 * Gamma.exact))
    else:
        lg = None if Gamma.log10 is None else math.log10(3) + Gamma.log10
        ln_delta = BigQuantity(log10=lg,
                               log10_log10=Gamma.log10_log10 if lg is None else math.log10(lg))
    extra = math.log((s + 2) * (s + 3))
    note = (f"ln delta' = ln delta + {extra:.6f} + o(1); "
            f"log10(ln delta') ~ {ln_delta.log10_log10 if ln_delta.log10 is None else ln_delta.log10:.6g}"
            f"{' (log-log scale)' if ln_delta.log10 is None else ''}")
    return BoundsReport(L=L, s=s, P=P_value(L, s), gamma=gamma, Gamma=Gamma,
                        log_delta=ln_delta, delta_prime_note=note, N_L=N_L(L))


# ---- export ----------------------------------------------------------------

def coefficient_rows(spec: SeriesSpec, T: int) -> list:
    """Rows ``(n, a_n, b_n)``: H_{L,s,k} and G_{L,s} coefficients."""
    h = H_closed(spec.L, spec.s, spec.k, T)
    g = G_closed(spec.L, spec.s, T)
    return [(n, h[n], g[n]) for n in range(T)]


def to_csv(spec: SeriesSpec, T: int) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", f"a_{{{spec.L},n}}", f"b_{{{spec.L},n}}"])
    for row in coefficient_rows(spec, T):
        w.writerow(row)
    return buf.getvalue()


def to_json(spec: SeriesSpec, T: int, which: str = "G") -> str:
    if which == "G":
        s = G_closed(spec.L, spec.s, T)
    elif which == "H":
        s = H_closed(spec.L, spec.s, spec.k, T)
    else:
        raise ValueError(f"unknown series {which!r}")
    neg = first_negative(s)
    doc = {
        "series": which,
        "spec": spec.as_dict(),
        "order": T,
        "coeffs": [str(v) for v in s.coeffs],
        "first_negative": None if neg is None else [neg[0], str(neg[1])],
    }
    return json.dumps(doc, sort_keys=True)
