import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from smallpart import genfun as gf
from smallpart.injection import (CaseLabel, NoApplicableBranch, a4_solution, dichotomy_failures,
                                 dichotomy_holds, in_codomain, max_dichotomy_failure_weight,
                                 phi, phi_helpful2, phi_small, phi_two2, psi_two2,
                                 verify_injection, weight_bound, witness_helpful2)
from smallpart.injection import _kernels as K
from smallpart.partitions import Partition, iter_frequency_vectors

P = Partition.parse


# ---- the L >= 22 map ---------------------------------------------------------

@pytest.mark.parametrize("pi,image,group,path", [
    ("(25^1)", "(3^2, 4^2, 5^1, 6^1)", "B1", "2(a)"),
    ("(22^1)", "(3^6, 4^1)", "F1", "1"),
    ("(7^3)", "(3^1, 4^1, 7^2)", "A1", "2(b)"),
])
def test_helpful2_examples(pi, image, group, path):
    img, lab = phi_helpful2(22, P(pi))
    assert img == P(image)
    assert (lab.group, lab.path) == (group, path)
    assert img.weight == P(pi).weight


def test_helpful2_rejects():
    with pytest.raises(ValueError):
        phi_helpful2(21, P("(7^3)"))
    with pytest.raises(ValueError):
        phi_helpful2(22, P("(5^2, 10^1)"))  # weight 20
    with pytest.raises(ValueError):
        phi_helpful2(22, P("(3^1, 9^2)"))  # part 3 is outside the domain
    with pytest.raises(ValueError):
        phi_helpful2(22, P("(26^1)"))


def test_helpful2_unreachable_branch_is_diagnosed():
    # below weight 21 the least part after 5 and 7 need not exist
    with pytest.raises(NoApplicableBranch):
        phi_helpful2(22, P("(5^1, 7^1)"), enforce_bound=False)


def test_a4_uses_the_alternate_on_collision():
    sol, swapped = a4_solution(15)
    assert swapped and tuple(sol) == (3, 0, 0)
    assert a4_solution(18)[1] is False
    a3_img, a3_lab = phi_helpful2(22, P("(5^2, 9^1, 15^1)"))
    a4_img, a4_lab = phi_helpful2(22, P("(4^1, 15^2)"))
    assert (a3_lab.group, a4_lab.group) == ("A3", "A4")
    assert a4_lab.trace["alternate"] is True
    assert a3_img != a4_img
    assert a3_img == P("(3^1, 4^1, 6^2, 15^1)")


def test_inline_label_recorded():
    img, lab = phi_helpful2(22, P("(4^3, 9^1)"))
    assert lab.group == "D2" and lab.trace["inline_label"] == "F2"
    assert img.f(3) == 4


def domain_partition(L, lo_weight):
    parts = st.lists(st.integers(4, L + 3), min_size=1, max_size=14)
    return parts.map(Partition.from_parts).filter(lambda p: p.weight >= lo_weight)


@settings(max_examples=300, deadline=None)
@given(st.integers(22, 40).flatmap(lambda L: st.tuples(st.just(L), domain_partition(L, 21))))
def test_helpful2_invariants(case):
    L, pi = case
    img, lab = phi_helpful2(L, pi)
    assert img.weight == pi.weight
    assert in_codomain(L, img)
    assert lab.coherent_with(img)


@pytest.mark.parametrize("L,N,expected", [
    (22, 21, "(3^4, 4^1, 5^1)"), (22, 23, "(3^4, 5^1, 6^1)"), (25, 22, "(3^4, 5^2)")])
def test_witnesses(L, N, expected):
    assert witness_helpful2(L, N) == P(expected)


def test_witness_properties():
    for N in range(21, 80):
        w = witness_helpful2(30, N)
        assert w.weight == N and w.f(3) == 4 and in_codomain(30, w)
    with pytest.raises(ValueError):
        witness_helpful2(22, 20)


def test_label_coherence_rules():
    k1 = CaseLabel("Helpful2", "1", "K1")
    assert k1.coherent_with(P("(3^12, 4^1)"))
    assert not k1.coherent_with(P("(3^6, 4^1)"))
    assert CaseLabel("Helpful2", "x", "G3").expected_threes() == 7


# ---- the 7 <= L <= 21 map -----------------------------------------------------

def test_two2_examples():
    img, lab = phi_two2(7, P("(7^3, 10^11)"))
    assert img == P("(3^7, 10^11)") and lab.path == "1"
    # 8 = L+1 at L = 7, so three 8s become three 5s = L-2 plus 3^3
    img, lab = phi_two2(7, P("(8^16)"))
    assert img == P("(3^3, 5^3, 8^13)") and lab.path == "4(ii)(b)"
    img, lab = phi_two2(7, P("(4^3, 10^12)"))
    assert img == P("(3^4, 10^12)") and lab.path == "4(ii)(a)"
    img, lab = phi_two2(7, P("(8^15, 9^6)"))
    assert img.f(3) == 18 and img.f(9) == 0 and lab.path == "4(i)"


def test_two2_rejects():
    with pytest.raises(ValueError):
        phi_two2(7, P("(8^15)"))  # weight 120 < 126
    with pytest.raises(ValueError):
        phi_two2(22, P("(8^40)"))
    with pytest.raises(NoApplicableBranch):
        phi_two2(7, P("(4^2, 5^2)"), enforce_bound=False)


@settings(max_examples=300, deadline=None)
@given(st.integers(7, 21).flatmap(
    lambda L: st.tuples(st.just(L), domain_partition(L, 0).filter(
        lambda p: p.f(L) > 0 or dichotomy_holds(L, p.freq)))))
def test_two2_left_inverse(case):
    L, pi = case
    img, _ = phi_two2(L, pi, enforce_bound=False)
    assert psi_two2(L, img) == pi
    assert img.weight == pi.weight and in_codomain(L, img)


def _to_vec(pi, L):
    f = np.zeros(L + 4, np.int64)
    for p, m in pi.items():
        f[p] = m
    return f


def test_kernel_matches_python_map():
    rng = random.Random(7)
    for L, N in ((7, 126), (12, 271)):
        vecs = list(iter_frequency_vectors(N, list(range(4, L + 4)))) if L == 7 else None
        sample = vecs if vecs else [
            {p: m for p, m in Partition.from_parts(
                [rng.randint(4, L + 3) for _ in range(40)]).items()} for _ in range(300)]
        g = np.zeros(L + 4, np.int64)
        h = np.zeros(L + 4, np.int64)
        for d in sample:
            pi = Partition(d)
            if pi.f(L) == 0 and not dichotomy_holds(L, d):
                assert K.two2_apply(_to_vec(pi, L), L, g) == K.NO_BRANCH
                continue
            img, lab = phi_two2(L, pi, enforce_bound=False)
            code = K.two2_apply(_to_vec(pi, L), L, g)
            assert K.CASE_NAMES[code] == lab.path
            assert np.array_equal(g, _to_vec(img, L))
            assert K.two2_decode(g, L, h) and np.array_equal(h, _to_vec(pi, L))


def test_kernel_and_set_reports_agree():
    a = verify_injection(7, 130, method="set")
    b = verify_injection(7, 130, method="kernel")
    assert a.passed and b.passed
    assert (a.domain_size, a.image_size, a.codomain_size) == (b.domain_size, b.image_size,
                                                               b.codomain_size)


def test_dichotomy_probe():
    for L in range(7, 22):
        assert max_dichotomy_failure_weight(L) == L * L + 8 * L + 6
        assert dichotomy_failures(L, L * L + 10 * L + 6) == 0
        assert dichotomy_failures(L, L * L + 8 * L + 6) == 1
    # cross-check the DP against enumeration
    L = 7
    for N in (40, 77, 111):
        direct = sum(1 for d in iter_frequency_vectors(N, [p for p in range(4, 11) if p != L])
                     if not dichotomy_holds(L, d))
        assert direct == dichotomy_failures(L, N)


# ---- L = 4, 5, 6 ----------------------------------------------------------------

def test_small_examples():
    img, lab = phi_small(4, P("(4^259, 6^1)"))
    assert img == P("(3^289, 6^7, 7^19)")
    assert img.weight == 1042 and lab.path == "2"
    assert lab.trace["solution"] == [0, 6, 19]
    img, lab = phi_small(6, P("(6^1, 9^8)"))
    assert img == P("(3^2, 9^8)") and lab.path == "1"
    with pytest.raises(ValueError):
        phi_small(5, P("(4^6, 8^17)"))


@pytest.mark.parametrize("L", [4, 5, 6])
def test_small_maps_below_bound_fail_loudly_or_work(L):
    # below the bound a branch may be missing; it must be reported, never guessed
    for d in iter_frequency_vectors(40, list(range(4, L + 4))):
        pi = Partition(d)
        try:
            img, _ = phi_small(L, pi, enforce_bound=False)
        except NoApplicableBranch:
            continue
        assert img.weight == 40 and in_codomain(L, img)


# ---- verifier ---------------------------------------------------------------------

def test_verify_examples():
    r = verify_injection(22, 30)
    assert r.passed and r.witnesses_excluded
    assert r.domain_size == r.image_size == gf.domain_codomain_sizes(22, 30)[0]
    assert r.coefficient == gf.H_comb(22, 3, 30) >= 1
    r7 = verify_injection(7, 126)
    assert r7.passed and r7.injective
    with pytest.raises(ValueError):
        verify_injection(22, 20)


def test_verify_reports_failures_below_bound():
    r = verify_injection(6, 40, enforce_bound=False)
    assert not r.total and not r.passed
    assert r.first_failure["kind"] == "no branch"
    assert r.domain_size == gf.domain_codomain_sizes(6, 40)[0]


def test_dispatch():
    assert [weight_bound(L) for L in (4, 5, 6, 7, 21, 22)] == [1042, 164, 67, 126, 658, 21]
    assert phi(22, P("(7^3)"))[1].lemma == "Helpful2"
    with pytest.raises(ValueError):
        phi(3, P("(4^10)"))


def test_report_serializes():
    d = verify_injection(23, 25).as_dict()
    assert d["passed"] and d["coefficient"] == d["codomain_size"] - d["domain_size"]
