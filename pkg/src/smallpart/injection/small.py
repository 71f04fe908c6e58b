"""The injections for L = 6, 5 and 4 (weights from 67, 164 and 1042 on)."""

from __future__ import annotations

from ..partitions import Partition
from ..semigroup import GENS_567, solve_fixed
from .labels import FIVE, FOUR, THREE, CaseLabel, NoApplicableBranch

SMALL_BOUNDS = {6: 67, 5: 164, 4: 1042}
_LEMMA = {6: THREE, 5: FOUR, 4: FIVE}


def _check(L: int, pi: Partition, enforce_bound: bool) -> None:
    if L not in SMALL_BOUNDS:
        raise ValueError(f"small-L maps exist for L in 4, 5, 6, not {L}")
    if pi.is_empty() or pi.smallest_part < 4 or pi.largest_part > L + 3:
        raise ValueError(f"{pi} is not in D_{{{L},3}}")
    if enforce_bound and pi.weight < SMALL_BOUNDS[L]:
        raise ValueError(f"weight {pi.weight} is below {SMALL_BOUNDS[L]}")


def _shift(f: dict, deltas: dict) -> dict:
    out = dict(f)
    for p, d in deltas.items():
        out[p] = out.get(p, 0) + d
        if out[p] < 0:
            raise NoApplicableBranch("", Partition(f), f"part {p} would go negative")
    return out


def _phi6(pi: Partition):
    f = pi.freq
    fL = f.pop(6, 0)
    if fL > 0:
        f[3] = 2 * fL
        return Partition(f), CaseLabel(THREE, "1", trace={"f": fL})
    heavy = [p for p, m in f.items() if m >= 3]
    if not heavy:
        raise NoApplicableBranch(THREE, pi, "no part other than 6 occurs 3 or more times")
    i0 = min(heavy)
    if i0 % 2:
        return Partition(_shift(f, {3: i0, i0: -3})), CaseLabel(THREE, "2(i)", trace={"i0": i0})
    if i0 == 4:
        return Partition(_shift(f, {3: 1, 4: -3, 9: 1})), CaseLabel(THREE, "2(ii)", trace={"i0": 4})
    # i0 == 8
    return Partition(_shift(f, {3: 3, 5: 3, 8: -3})), CaseLabel(THREE, "2(iii)", trace={"i0": 8})


# (part, threshold, frequency of 3 in the image, extra parts added) for f = 0 and f = 1
_FOUR_F0 = ((4, 6, 8, {}), (6, 1, 2, {}), (7, 3, 7, {}), (8, 12, 32, {}))
_FOUR_F1 = ((4, 1, 3, {}), (6, 11, 13, {4: 8}), (7, 7, 18, {}), (8, 8, 23, {}))


def _phi5(pi: Partition):
    f = pi.freq
    fL = f.pop(5, 0)
    r = fL % 3
    if fL > 0 and r == 0:
        f[3] = 5 * fL // 3
        return Partition(f), CaseLabel(FOUR, "1", trace={"f": fL})
    if fL > 1 and r == 1:
        f[3] = 5 * (fL - 4) // 3 + 4
        f[4] = f.get(4, 0) + 2
        return Partition(f), CaseLabel(FOUR, "2", trace={"f": fL})
    if r == 2:
        f[3] = 5 * (fL - 2) // 3 + 1
        f[7] = f.get(7, 0) + 1
        return Partition(f), CaseLabel(FOUR, "3", trace={"f": fL})
    case, table = ("4", _FOUR_F0) if fL == 0 else ("5", _FOUR_F1)
    for sub, (part, need, threes, extra) in zip(("i", "ii", "iii", "iv"), table):
        if f.get(part, 0) >= need:
            out = _shift(f, {part: -need, 3: threes, **extra})
            return Partition(out), CaseLabel(FOUR, f"{case}({sub})",
                                             trace={"f": fL, "part": part, "threshold": need})
    raise NoApplicableBranch(FOUR, pi, f"no threshold met with f={fL}")


def _sol567(n: int):
    sol = solve_fixed(GENS_567, n)
    if sol is None:
        raise NoApplicableBranch(FIVE, None, f"{n} has no 5,6,7 representation")
    return sol


# (part, threshold, offset on f for the frequency of 3, offset for the 5,6,7 target)
_FIVE_F_SMALL = ((5, 62, 100, 10), (6, 57, 110, 12), (7, 53, 120, 11))


def _phi4(pi: Partition):
    f = pi.freq
    fL = f.pop(4, 0)
    if 10 <= fL < 100:
        sub, threes, target, extra = "1", fL, fL, {}
    elif fL >= 100:
        sub, threes, target, extra = "2", fL + 30, fL - 90, {}
    else:
        for name, (part, need, off3, offn) in zip(("3(i)", "3(ii)", "3(iii)"), _FIVE_F_SMALL):
            if f.get(part, 0) >= need:
                sub, threes, target, extra = name, fL + off3, fL + offn, {part: -need}
                break
        else:
            raise NoApplicableBranch(FIVE, pi, f"f={fL} and no threshold met")
    sol = _sol567(target)
    deltas = {3: threes, **extra}
    for g, m in zip(GENS_567, sol):
        deltas[g] = deltas.get(g, 0) + m
    return Partition(_shift(f, deltas)), CaseLabel(FIVE, sub, trace={"f": fL, "target": target,
                                                                     "solution": list(sol)})


def phi_small(L: int, pi: Partition, enforce_bound: bool = True):
    _check(L, pi, enforce_bound)
    return {6: _phi6, 5: _phi5, 4: _phi4}[L](pi)
