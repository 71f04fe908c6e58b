import pytest
from hypothesis import given, strategies as st

from smallpart.semigroup import (FIXED_SETS, GENS_456, GENS_567, GENS_6_11, SemigroupSolution,
                                 alternate_456, lex_min_solution, solve_fixed, two_gen)

from oracles import brute_solutions


def test_two_gen_examples():
    count, sol = two_gen(4, 5, 20)
    assert count == 2 and tuple(sol) == (0, 4)
    assert two_gen(4, 5, 11) == (0, None)
    with pytest.raises(ValueError):
        two_gen(4, 6, 12)


@pytest.mark.parametrize("gens", FIXED_SETS)
def test_canonical_is_lex_min_of_all_solutions(gens):
    for n in range(1, 70):
        sols = brute_solutions(gens, n)
        got = solve_fixed(gens, n)
        if not sols:
            assert got is None
        else:
            assert tuple(got) == sols[0]


def test_canonical_choice_for_169():
    # lexicographic minimum: least count of 5 first, then least count of 6
    assert tuple(solve_fixed(GENS_567, 169)) == (0, 6, 19)
    assert (0, 27, 1) in brute_solutions(GENS_567, 169)


def test_zero_target():
    assert tuple(solve_fixed(GENS_6_11, 0)) == (0,) * 6
    assert solve_fixed(GENS_456, 0) is None
    assert tuple(solve_fixed(GENS_456, 0, allow_empty=True)) == (0, 0, 0)


def test_unsupported_set():
    with pytest.raises(ValueError):
        solve_fixed((3, 5), 8)
    assert lex_min_solution((3, 5), 8) == (1, 1)
    assert lex_min_solution((3, 5), 7) is None


def test_solution_validates():
    with pytest.raises(ValueError):
        SemigroupSolution((4, 5), (1, 1), 10)


@given(st.integers(4, 400).filter(lambda n: n not in (5, 7)))
def test_alternate_456_property(n):
    base = solve_fixed(GENS_456, n)
    alt = alternate_456(n, base)
    a, b, c = base
    assert alt.target == n + 6
    assert tuple(alt) != (a, b, c + 1)
    assert min(alt) >= 0


def test_alternate_456_rejects():
    with pytest.raises(ValueError):
        alternate_456(5, (0, 1, 0))
    with pytest.raises(ValueError):
        alternate_456(9, (1, 0, 0))
    assert tuple(alternate_456(6, (0, 0, 1))) == (3, 0, 0)
