"""The injection D_{L,3} -> I_{L,3,L} for L >= 22 at weights N >= 21, and its witnesses.

Each image is built from a copy of the frequency table of pi; ``_Image`` keeps
the bookkeeping (remove some parts, add some others) readable and refuses to
drive a multiplicity negative.
"""

from __future__ import annotations

from ..partitions import Partition
from ..semigroup import (GENS_456, GENS_567, GENS_4567, GENS_6_11, alternate_456,
                         solve_fixed)
from .labels import HELPFUL2, CaseLabel, NoApplicableBranch

MIN_L = 22
MIN_N = 21


class _Image:
    def __init__(self, pi: Partition):
        self.pi = pi
        self.f = pi.freq

    def take(self, part: int, k: int = 1) -> "_Image":
        have = self.f.get(part, 0)
        if have < k:
            raise NoApplicableBranch(HELPFUL2, self.pi, f"needs {k} copies of {part}, has {have}")
        self.f[part] = have - k
        return self

    def put(self, part: int, k: int = 1) -> "_Image":
        if k:
            self.f[part] = self.f.get(part, 0) + k
        return self

    def put_solution(self, gens, mults) -> "_Image":
        for g, m in zip(gens, mults):
            self.put(g, m)
        return self

    def done(self) -> Partition:
        return Partition(self.f)


def _check_domain(L: int, pi: Partition, enforce_bound: bool) -> None:
    if L < MIN_L:
        raise ValueError(f"this map needs L >= {MIN_L}, got {L}")
    if pi.is_empty():
        raise ValueError("pi must be nonempty")
    if pi.smallest_part < 4 or pi.largest_part > L + 3:
        raise ValueError(f"{pi} is not in D_{{{L},3}}: parts must lie in [4, {L + 3}]")
    if enforce_bound and pi.weight < MIN_N:
        raise ValueError(f"weight {pi.weight} is below {MIN_N}")


def _least_from(f: dict, lo: int):
    """Least part >= lo with positive multiplicity, or None."""
    cands = [p for p, m in f.items() if m > 0 and p >= lo]
    return min(cands) if cands else None


def phi_helpful2(L: int, pi: Partition, enforce_bound: bool = True):
    """Image of ``pi`` and the case it went through.

    Set ``enforce_bound=False`` to probe weights below 21; an unreachable
    branch then shows up as :class:`NoApplicableBranch`.
    """
    _check_domain(L, pi, enforce_bound)
    f = pi.freq
    fr = lambda p: f.get(p, 0)  # noqa: E731
    img = _Image(pi)
    trace: dict = {}

    def label(path, group, **extra):
        trace.update(extra)
        return CaseLabel(HELPFUL2, path, group, trace)

    fL = fr(L)
    if fL >= 1:
        sol = solve_fixed(GENS_4567, (L - 18) * fL)
        img.take(L, fL).put(3, 6 * fL).put_solution(GENS_4567, sol)
        return img.done(), label("1", "F1" if fL == 1 else "K1", f=fL, solution=list(sol))

    s = pi.smallest_part
    if s == L + 3:
        img.take(L + 3).put(3, 2).put(4, 2).put(5).put(L - 16)
        return img.done(), label("2(a)", "B1")
    if 7 <= s < L + 3:
        img.take(s).put(3).put(s - 3)
        return img.done(), label("2(b)", "A1", s=s)

    f4, f5, f6 = fr(4), fr(5), fr(6)
    if f4 >= 1 and f5 >= 1:
        img.take(4).take(5).put(3, 3)
        return img.done(), label("2(c)(i)", "C1")
    if f6 >= 1:
        img.take(6).put(3, 2)
        return img.done(), label("2(c)(ii)(α)", "B2")

    if f4 == 0:
        # pi = (5^f5, 7^f7, ...)
        if f5 >= 3:
            img.take(5, 3).put(3, 5)
            return img.done(), label("2(c)(ii)(β)(I)(A)", "E1")
        if f5 == 1:
            return _five_once(L, pi, img, label)
        if f5 == 2:
            return _five_twice(L, pi, img, label)
        raise NoApplicableBranch(HELPFUL2, pi, "f4 = f5 = f6 = 0 with smallest part <= 6")

    # f5 = f6 = 0, f4 >= 1: pi = (4^f4, 7^f7, ...)
    if f4 >= 3:
        img.take(4, 3).put(3, 4)
        # the inline label on this case reads F2; the grouping by frequency of 3 says D2
        return img.done(), label("2(c)(ii)(β)(II)(A)", "D2", inline_label="F2")
    if f4 == 1:
        return _four_once(L, pi, img, label)
    return _four_twice(L, pi, img, label)


def _need(m, pi, name):
    if m is None:
        raise NoApplicableBranch(HELPFUL2, pi, f"{name} does not exist")
    return m


def _five_once(L, pi, img, label):
    f = pi.freq
    m1 = _need(_least_from(f, 7), pi, "m1")
    if m1 not in (7, 11, 12):
        sol = solve_fixed(GENS_567, m1 - 3)
        img.take(5).take(m1).put(3).put(5).put_solution(GENS_567, sol)
        return img.done(), label("2(c)(ii)(β)(I)(B)(i)", "A2", m1=m1, solution=list(sol))
    if m1 == 7:
        if f[7] >= 2:
            img.take(5).take(7, 2).put(3, 5).put(4)
            return img.done(), label("2(c)(ii)(β)(I)(B)(ii)(a)", "E2", m1=7)
        m2 = _need(_least_from(f, 8), pi, "m2")
        if m2 == 8:
            img.take(5).take(7).take(8).put(3, 2).put(4).put(5, 2)
            return img.done(), label("2(c)(ii)(β)(I)(B)(ii)(b)(i)", "B3", m1=7, m2=8)
        if m2 < L + 3:
            img.take(5).take(7).take(m2).put(3, 2).put(4).put(5).put(m2 - 3)
            return img.done(), label("2(c)(ii)(β)(I)(B)(ii)(b)(ii)", "B4", m1=7, m2=m2)
        img.take(5).take(7).take(L + 3).put(3, 2).put(4, 2).put(5, 2).put(L - 9)
        return img.done(), label("2(c)(ii)(β)(I)(B)(ii)(b)(iii)", "B5", m1=7, m2=m2)
    if m1 == 11:
        if f[11] >= 2:
            img.take(5).take(11, 2).put(3, 9)
            return img.done(), label("2(c)(ii)(β)(I)(B)(iii)(a)", "I1", m1=11)
        m3 = _need(_least_from(f, 12), pi, "m3")
        img.take(5).take(11).take(m3).put(3, 8).put(m3 - 8)
        return img.done(), label("2(c)(ii)(β)(I)(B)(iii)(b)", "H1", m1=11, m3=m3)
    # m1 == 12
    if f[12] >= 2:
        img.take(5).take(12, 2).put(3, 7).put(4, 2)
        return img.done(), label("2(c)(ii)(β)(I)(B)(iv)(a)", "G1", m1=12)
    m4 = _need(_least_from(f, 13), pi, "m4")
    if m4 == 13:
        img.take(5).take(12).take(13).put(3, 4).put(6, 3)
        return img.done(), label("2(c)(ii)(β)(I)(B)(iv)(b)(i)", "D1", m1=12, m4=13)
    sol = solve_fixed(GENS_4567, m4 - 10)
    img.take(5).take(12).take(m4).put(3, 9).put_solution(GENS_4567, sol)
    return img.done(), label("2(c)(ii)(β)(I)(B)(iv)(b)(ii)", "I2", m1=12, m4=m4,
                             solution=list(sol))


def _five_twice(L, pi, img, label):
    f = pi.freq
    m5 = _need(_least_from(f, 7), pi, "m5")
    if m5 != 10:
        sol = solve_fixed(GENS_456, m5 - 3)
        img.take(5, 2).take(m5).put(3).put(4).put(6).put_solution(GENS_456, sol)
        return img.done(), label("2(c)(ii)(β)(I)(C)(i)", "A3", m5=m5, solution=list(sol))
    if f[10] >= 2:
        img.take(5, 2).take(10, 2).put(3, 10)
        return img.done(), label("2(c)(ii)(β)(I)(C)(ii)(a)", "J1", m5=10)
    m6 = _need(_least_from(f, 11), pi, "m6")
    img.take(5, 2).take(10).take(m6).put(3, 7)
    if m6 % 2:
        img.put((m6 - 1) // 2, 2)
        return img.done(), label("2(c)(ii)(β)(I)(C)(ii)(b)(i)", "G2", m5=10, m6=m6)
    img.put(m6 // 2 - 1).put(m6 // 2)
    return img.done(), label("2(c)(ii)(β)(I)(C)(ii)(b)(ii)", "G3", m5=10, m6=m6)


def a4_solution(m7: int):
    """{4,5,6}-solution used for ``m7 - 3`` in case A4, plus whether it was swapped.

    When ``m5 = m7 - 6`` is a legal A3 smallest part and the canonical choice
    would reproduce the A3 image, the constructive alternate is taken instead.
    """
    sol = solve_fixed(GENS_456, m7 - 3)
    m5 = m7 - 6
    if m5 >= 7 and m5 != 10:
        a, b, c = solve_fixed(GENS_456, m5 - 3)
        if tuple(sol) == (a, b, c + 1):
            return alternate_456(m5 - 3, (a, b, c)), True
    return sol, False


def _four_once(L, pi, img, label):
    f = pi.freq
    m7 = _need(_least_from(f, 7), pi, "m7")
    if m7 not in (10, 14):
        sol, swapped = a4_solution(m7)
        img.take(4).take(m7).put(3).put(4).put_solution(GENS_456, sol)
        return img.done(), label("2(c)(ii)(β)(II)(B)(i)", "A4", m7=m7, solution=list(sol),
                                 alternate=swapped)
    if m7 == 10:
        if f[10] >= 2:
            img.take(4).take(10, 2).put(3, 4).put(6, 2)
            return img.done(), label("2(c)(ii)(β)(II)(B)(ii)(a)", "D3", m7=10)
        m8 = _need(_least_from(f, 11), pi, "m8")
        img.take(4).take(10).take(m8).put(3, 7).put(m8 - 7)
        return img.done(), label("2(c)(ii)(β)(II)(B)(ii)(b)", "G4", m7=10, m8=m8)
    img.take(4).take(14).put(3, 6)
    return img.done(), label("2(c)(ii)(β)(II)(B)(iii)", "F2", m7=14)


def _four_twice(L, pi, img, label):
    f = pi.freq
    m9 = _need(_least_from(f, 7), pi, "m9")
    img.take(4, 2).take(m9).put(3)
    if m9 % 2:
        img.put((m9 + 5) // 2, 2)
        return img.done(), label("2(c)(ii)(β)(II)(C)(i)", "A5", m9=m9)
    img.put(m9 // 2 + 2).put(m9 // 2 + 3)
    return img.done(), label("2(c)(ii)(β)(II)(C)(ii)", "A6", m9=m9)


def witness_helpful2(L: int, N: int) -> Partition:
    """A member of I_{L,3,L} at weight N that the map above never produces."""
    if L < MIN_L:
        raise ValueError(f"witnesses are defined for L >= {MIN_L}")
    if N < MIN_N:
        raise ValueError(f"witnesses are defined for N >= {MIN_N}")
    if N == 21:
        return Partition({3: 4, 4: 1, 5: 1})
    if N == 22:
        return Partition({3: 4, 5: 2})
    sol = solve_fixed(GENS_6_11, N - 17)
    f = {3: 4, 5: 1}
    for g, m in zip(GENS_6_11, sol):
        f[g] = f.get(g, 0) + m
    return Partition(f)
