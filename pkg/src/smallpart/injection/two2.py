"""The injection for 7 <= L <= 21 at weights N >= L^2 + 10L + 7, and its left inverse."""

from __future__ import annotations

from ..partitions import Partition
from .labels import TWO2, CaseLabel, NoApplicableBranch


def two2_bound(L: int) -> int:
    return L * L + 10 * L + 7


def _check(L: int, pi: Partition, enforce_bound: bool) -> None:
    if not 7 <= L <= 21:
        raise ValueError(f"this map needs 7 <= L <= 21, got {L}")
    if pi.is_empty() or pi.smallest_part < 4 or pi.largest_part > L + 3:
        raise ValueError(f"{pi} is not in D_{{{L},3}}")
    if enforce_bound and pi.weight < two2_bound(L):
        raise ValueError(f"weight {pi.weight} is below {two2_bound(L)}")


def dichotomy_holds(L: int, f: dict) -> bool:
    """With no part L: f_{L+2} >= 6, or some other part of size 4..L+3 occurs 3+ times."""
    if f.get(L + 2, 0) >= 6:
        return True
    return any(m >= 3 for p, m in f.items() if p != L + 2 and 4 <= p <= L + 3)


def _dichotomy_caps(L: int) -> dict:
    caps = {p: 2 for p in range(4, L + 4) if p != L}
    caps[L + 2] = 5
    return caps


def dichotomy_failures(L: int, N: int) -> int:
    """Number of partitions of N in D_{L,3} with no part L that break the dichotomy.

    Those are exactly the ones with f_{L+2} <= 5 and every other multiplicity <= 2,
    counted by a bounded-multiplicity DP rather than enumeration.
    """
    a = [0] * (N + 1)
    a[0] = 1
    for p, cap in _dichotomy_caps(L).items():
        b = [0] * (N + 1)
        for n in range(N + 1):
            if a[n]:
                for k in range(cap + 1):
                    if n + k * p > N:
                        break
                    b[n + k * p] += a[n]
        a = b
    return a[N]


def max_dichotomy_failure_weight(L: int) -> int:
    """Heaviest partition breaking the dichotomy: L^2 + 8L + 6."""
    return sum(p * c for p, c in _dichotomy_caps(L).items())


def phi_two2(L: int, pi: Partition, enforce_bound: bool = True):
    _check(L, pi, enforce_bound)
    f = pi.freq
    fL = f.pop(L, 0)
    if fL > 0:
        r = fL % 3
        f[3] = L * (fL - r) // 3 + r
        if r:
            f[L - 3] = f.get(L - 3, 0) + r
        return Partition(f), CaseLabel(TWO2, str(r + 1), trace={"f": fL})
    if f.get(L + 2, 0) >= 6:
        f[L + 2] -= 6
        f[3] = 2 * L + 4
        return Partition(f), CaseLabel(TWO2, "4(i)")
    heavy = [p for p, m in f.items() if m >= 3 and p != L + 2]
    if not heavy:
        raise NoApplicableBranch(TWO2, pi, "no part of multiplicity >= 3 and f_{L+2} <= 5")
    i0 = min(heavy)
    f[i0] -= 3
    if i0 != L + 1:
        f[3] = i0
        return Partition(f), CaseLabel(TWO2, "4(ii)(a)", trace={"i0": i0})
    f[3] = 3
    f[L - 2] = f.get(L - 2, 0) + 3
    return Partition(f), CaseLabel(TWO2, "4(ii)(b)", trace={"i0": i0})


def psi_two2(L: int, image: Partition) -> Partition:
    """Left inverse of :func:`phi_two2`, read off the frequency of 3.

    Raises ValueError when ``image`` is not of a shape the map produces.
    """
    f = image.freq
    c = f.pop(3, 0)
    if c <= 0:
        raise ValueError("image has no part 3")
    r = c % L
    if r in (0, 1, 2):
        # cases 1-3: c = L(f-r)/3 + r
        if (3 * (c - r)) % L:
            raise ValueError(f"frequency of 3 {c} is not of the form L(f-r)/3 + r")
        fL = 3 * (c - r) // L + r
        if r:
            if f.get(L - 3, 0) < r:
                raise ValueError("missing the parts L-3 this case adds")
            f[L - 3] -= r
        f[L] = fL
    elif c == 2 * L + 4:
        f[L + 2] = f.get(L + 2, 0) + 6
    elif c == 3:
        if f.get(L - 2, 0) < 3:
            raise ValueError("missing the parts L-2 this case adds")
        f[L - 2] -= 3
        f[L + 1] = f.get(L + 1, 0) + 3
    elif 4 <= c <= L + 3:
        f[c] = f.get(c, 0) + 3
    else:
        raise ValueError(f"frequency of 3 {c} matches no case")
    return Partition(f)
