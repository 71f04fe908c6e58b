"""Exhaustive checks of the injections over one weight class at a time."""

from __future__ import annotations

from collections import Counter
from typing import Optional

from ..genfun import domain_codomain_sizes
from ..partitions import Partition, iter_frequency_vectors
from .helpful2 import phi_helpful2, witness_helpful2
from .labels import (HELPFUL2, TWO2, InjectionReport, NoApplicableBranch, lemma_for,
                     weight_bound)
from .small import phi_small
from .two2 import phi_two2

# above this many domain elements the L <= 21 check switches to the compiled sweep
KERNEL_THRESHOLD = 2_000_000


def phi(L: int, pi: Partition, enforce_bound: bool = True):
    """Dispatch to the map for this L."""
    lemma = lemma_for(L)
    if lemma == HELPFUL2:
        return phi_helpful2(L, pi, enforce_bound)
    if lemma == TWO2:
        return phi_two2(L, pi, enforce_bound)
    return phi_small(L, pi, enforce_bound)


def in_codomain(L: int, img: Partition) -> bool:
    return (img.f(3) >= 1 and img.f(L) == 0
            and img.smallest_part >= 3 and img.largest_part <= L + 3)


def _fail(kind, pi, other=None, detail=None) -> dict:
    d = {"kind": kind, "pi": str(pi)}
    if other is not None:
        d["other"] = str(other)
    if detail is not None:
        d["detail"] = detail
    return d


def verify_injection(L: int, N: int, method: str = "auto",
                     enforce_bound: bool = True) -> InjectionReport:
    """Apply the map to all of D_{L,3} at weight N and check it.

    ``method`` is ``"set"`` (image set, any L), ``"kernel"`` (compiled
    round-trip sweep, 7 <= L <= 21) or ``"auto"``.
    """
    lemma = lemma_for(L)
    if enforce_bound and N < weight_bound(L):
        raise ValueError(f"N={N} is below the bound {weight_bound(L)} for L={L}")
    dom_count, cod_count = domain_codomain_sizes(L, N)
    if method == "auto":
        method = "kernel" if lemma == TWO2 and dom_count > KERNEL_THRESHOLD else "set"
    if method == "kernel":
        if lemma != TWO2:
            raise ValueError("the compiled sweep exists only for 7 <= L <= 21")
        return _verify_kernel(L, N, dom_count, cod_count)
    if method != "set":
        raise ValueError(f"unknown method {method!r}")
    return _verify_set(L, N, lemma, dom_count, cod_count, enforce_bound)


def _verify_set(L, N, lemma, dom_count, cod_count, enforce_bound) -> InjectionReport:
    seen: dict = {}
    cases: Counter = Counter()
    total = weight_ok = cod_ok = inj = coherent = True
    first: Optional[dict] = None
    n = 0
    for freq in iter_frequency_vectors(N, list(range(4, L + 4))):
        n += 1
        pi = Partition(freq)
        try:
            img, lab = phi(L, pi, enforce_bound)
        except NoApplicableBranch as exc:
            total = False
            first = first or _fail("no branch", pi, detail=exc.detail)
            continue
        cases[lab.group or lab.path] += 1
        if img.weight != N:
            weight_ok = False
            first = first or _fail("weight", pi, img)
        if not in_codomain(L, img):
            cod_ok = False
            first = first or _fail("codomain", pi, img)
        if not lab.coherent_with(img):
            coherent = False
            first = first or _fail("label", pi, img, detail=str(lab))
        key = img.items()
        prev = seen.get(key)
        if prev is not None:
            inj = False
            first = first or _fail("collision", pi, Partition(prev), detail=f"both map to {img}")
        else:
            seen[key] = pi.items()
    witness_ok = None
    if lemma == HELPFUL2 and N >= 21:
        w = witness_helpful2(L, N)
        witness_ok = in_codomain(L, w) and w.weight == N and w.items() not in seen
        if not witness_ok:
            first = first or _fail("witness", w)
    return InjectionReport(
        L=L, N=N, lemma=lemma, method="image-set", domain_size=n, image_size=len(seen),
        total=total, injective=inj and len(seen) == n,
        weight_preserved=weight_ok, codomain_ok=cod_ok, witnesses_excluded=witness_ok,
        labels_coherent=coherent, codomain_size=cod_count, domain_count_ok=(n == dom_count),
        case_counts=dict(cases), first_failure=first)


_KINDS = {1: "no branch", 2: "weight", 3: "codomain", 4: "round trip"}


def _verify_kernel(L, N, dom_count, cod_count) -> InjectionReport:
    from . import _kernels as K

    stats, fail = K.two2_sweep(L, N)
    first = None
    if fail[0]:
        pi = Partition({p: int(m) for p, m in enumerate(fail[1:]) if m})
        first = _fail(_KINDS[int(fail[0])], pi)
    n = int(stats[K.S_DOMAIN])
    decoded = n - int(stats[K.S_DECODE_BAD]) - int(stats[K.S_NO_BRANCH])
    cases = {name: int(stats[K.S_CASE0 + code]) for code, name in K.CASE_NAMES.items()
             if stats[K.S_CASE0 + code]}
    return InjectionReport(
        L=L, N=N, lemma=TWO2, method="round-trip", domain_size=n,
        # every element with a verified left inverse has its own image
        image_size=decoded,
        total=bool(stats[K.S_NO_BRANCH] == 0), injective=decoded == n,
        weight_preserved=bool(stats[K.S_WEIGHT_BAD] == 0),
        codomain_ok=bool(stats[K.S_CODOMAIN_BAD] == 0),
        witnesses_excluded=None, labels_coherent=True, codomain_size=cod_count,
        domain_count_ok=(n == dom_count), case_counts=cases, first_failure=first)
