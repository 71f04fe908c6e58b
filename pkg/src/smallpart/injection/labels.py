"""Case labels, verification reports and the per-lemma parameter table."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Optional


class NoApplicableBranch(RuntimeError):
    """A partition reached a point where no case of the map applies.

    The case analysis claims this cannot happen above the weight bound, so
    seeing it means either a gap in the analysis or an implementation bug.
    """

    def __init__(self, lemma: str, pi, detail: str):
        super().__init__(f"{lemma}: no branch for {pi}: {detail}")
        self.lemma = lemma
        self.pi = pi
        self.detail = detail


HELPFUL2 = "Helpful2"
TWO2 = "Two2"
THREE = "Three"
FOUR = "Four"
FIVE = "Five"


def lemma_for(L: int) -> str:
    if L >= 22:
        return HELPFUL2
    if 7 <= L <= 21:
        return TWO2
    if L == 6:
        return THREE
    if L == 5:
        return FOUR
    if L == 4:
        return FIVE
    raise ValueError(f"no injection is defined for L={L}")


def weight_bound(L: int) -> int:
    """Smallest N for which the map for this L is claimed to exist."""
    lemma = lemma_for(L)
    if lemma == HELPFUL2:
        return 21
    if lemma == TWO2:
        return L * L + 10 * L + 7
    return {THREE: 67, FOUR: 164, FIVE: 1042}[lemma]


# frequency of 3 in the image for each group letter of the L >= 22 map
GROUP_THREES = {"A": 1, "B": 2, "C": 3, "D": 4, "E": 5, "F": 6, "G": 7,
                "H": 8, "I": 9, "J": 10}


@dataclass(frozen=True)
class CaseLabel:
    lemma: str
    path: str
    group: Optional[str] = None
    trace: dict = field(default_factory=dict, compare=False, hash=False)

    def expected_threes(self) -> Optional[object]:
        """Frequency of 3 the group promises: an int, ``"6f"`` for K1, or None."""
        if self.group is None:
            return None
        if self.group == "K1":
            return "6f"
        return GROUP_THREES[self.group[0]]

    def coherent_with(self, image) -> bool:
        exp = self.expected_threes()
        if exp is None:
            return True
        threes = image.f(3)
        if exp == "6f":
            return threes >= 12 and threes % 6 == 0
        return threes == exp

    def as_dict(self) -> dict:
        d = {"lemma": self.lemma, "path": self.path, "group": self.group}
        if self.trace:
            d["trace"] = {k: (v if isinstance(v, (int, str, list, type(None))) else str(v))
                          for k, v in self.trace.items()}
        return d

    def __str__(self) -> str:
        g = f" [{self.group}]" if self.group else ""
        return f"{self.lemma} case {self.path}{g}"


@dataclass
class InjectionReport:
    L: int
    N: int
    lemma: str
    method: str
    domain_size: int
    image_size: int
    total: bool
    injective: bool
    weight_preserved: bool
    codomain_ok: bool
    witnesses_excluded: Optional[bool]
    labels_coherent: bool
    codomain_size: int
    domain_count_ok: bool
    case_counts: dict = field(default_factory=dict)
    first_failure: Optional[dict] = None
    s: int = 3

    @property
    def passed(self) -> bool:
        return (self.total and self.injective and self.weight_preserved
                and self.codomain_ok and self.labels_coherent and self.domain_count_ok
                and self.witnesses_excluded is not False)

    @property
    def coefficient(self) -> int:
        """``|I| - |D|`` at this weight: the H_{L,3,L} coefficient."""
        return self.codomain_size - self.domain_size

    def as_dict(self) -> dict:
        d = asdict(self)
        d["passed"] = self.passed
        d["coefficient"] = self.coefficient
        d["case_counts"] = dict(sorted(self.case_counts.items()))
        return d
