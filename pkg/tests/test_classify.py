"""Type-(N, gamma) verdicts, forced-structure checks, symmetry, projection."""

import pytest

from sgp.classify import (arithmetic_cover_criterion, exclusive_types,
                          is_prime, is_type_by_genus, is_type_by_tail,
                          leading_gcd, natural_gamma_fit, project_by_n,
                          symmetry_profile, tail_structure, type_verdict)
from sgp.core import from_gaps, from_generators, natural_gamma
from sgp.errors import GenusZero, NotPrime, PreconditionViolated

BUCHWEITZ_GAPS = tuple(range(1, 13)) + (19, 21, 24, 25)


def test_is_prime():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]


def test_type_verdict_examples():
    assert type_verdict(from_generators([2, 11]), 2, 0).is_type
    v = type_verdict(from_generators([4, 6, 17]), 2, 1)
    assert (v.cond_a, v.cond_b, v.cond_c, v.is_type) == (True, True, True, True)
    v = type_verdict(from_generators([4, 7]), 2, 1)
    assert not v.is_type
    assert not v.cond_c  # 6 is not an element
    assert v.cond_a and v.cond_b


def test_type_verdict_consistency(by_genus):
    # a positive verdict forces the gamma-th element and the gap count
    for g in range(11):
        for H in by_genus(g):
            for n in (2, 3, 5):
                for gamma in range(4):
                    v = type_verdict(H, n, gamma)
                    if v.is_type:
                        assert H.element_at(gamma) == 2 * n * gamma
                        assert natural_gamma(H, n) == gamma


def test_tail_structure():
    assert tail_structure(from_generators([4, 6, 17]), 2, 1)
    assert tail_structure(from_generators([1]), 3, 0)
    assert tail_structure(from_generators([2, 5]), 2, 0)
    with pytest.raises(PreconditionViolated):
        tail_structure(from_generators([4, 7]), 2, 1)  # cond_c fails


def test_natural_gamma_fit_examples():
    assert natural_gamma_fit(from_generators([4, 7]), 2) == (3, True, True, True)
    assert natural_gamma_fit(from_generators([2, 3]), 5) == (0, True, True, True)
    assert natural_gamma_fit(from_generators([3, 5]), 3) == (0, True, True, True)


def test_exclusive_types():
    assert exclusive_types(2, 1, 2, 1) is True
    assert exclusive_types(100, 0, 1, 1) is False
    with pytest.raises(ValueError):
        exclusive_types(2, 1, 2, 0)


def test_exclusive_types_exhaustive(by_genus):
    for g in range(13):
        for H in by_genus(g):
            for n in (2, 3, 5):
                for gamma in range(3):
                    if not type_verdict(H, n, gamma).is_type:
                        continue
                    for m in (2, 3, 5):
                        for r in (1, 2, 3):
                            if exclusive_types(n, gamma, m, r):
                                assert not type_verdict(H, m, gamma + r).is_type


def test_is_type_by_tail():
    assert is_type_by_tail(from_generators([4, 6, 17]), 2) is True
    assert is_type_by_tail(from_generators([4, 7]), 2) is False
    assert is_type_by_tail(from_generators([1]), 3) is True


def test_is_type_by_genus():
    assert is_type_by_genus(from_generators([2, 21]), 2) is True
    assert is_type_by_genus(from_generators([4, 6, 17]), 2) is True
    assert is_type_by_genus(from_generators([4, 7]), 2) is False
    with pytest.raises(NotPrime):
        is_type_by_genus(from_generators([4, 7]), 4)


def test_is_type_by_genus_exhaustive(by_genus):
    # the implication assert inside the call must never fire
    for g in range(10):
        for H in by_genus(g):
            for n in (2, 3, 5, 7):
                is_type_by_tail(H, n)
                is_type_by_genus(H, n)


def test_leading_gcd():
    H = from_generators([4, 6, 17])
    assert leading_gcd(H, 2, 3) == 2
    assert leading_gcd(H, 2, 4) == 2
    assert leading_gcd(from_generators([2, 9]), 2, 2) == 2
    with pytest.raises(PreconditionViolated):
        leading_gcd(from_generators([4, 7]), 2, 3)  # not of type (2, gamma_2)
    with pytest.raises(PreconditionViolated):
        leading_gcd(H, 2, 20)  # genus too small for this A


def test_symmetry_profile_examples():
    p = symmetry_profile(from_generators([2, 5]))
    assert (p.kind, p.i, p.exceptional_gaps, p.irregular) == ("symmetric", 1, (), False)
    p = symmetry_profile(from_gaps(BUCHWEITZ_GAPS))
    assert (p.kind, p.i, p.exceptional_gaps) == ("general", 4, (24, 21, 19))
    assert not p.irregular
    p = symmetry_profile(from_generators([3, 4, 5]))
    assert (p.kind, p.i, p.exceptional_gaps) == ("quasi_symmetric", 1, (1,))
    with pytest.raises(GenusZero):
        symmetry_profile(from_generators([1]))


def test_symmetry_profile_excludes_paired_window_gaps():
    # 4 is a window gap but its mirror 7 - 4 = 3 is an element, so only 5
    # (mirror 2, a gap) breaks the pairing
    p = symmetry_profile(from_gaps([1, 2, 4, 5, 7]))
    assert p.i == 2 and p.exceptional_gaps == (5,) and not p.irregular
    # window gaps {9, 10, 11, 13}: the mirror of 9 is the element 8
    p = symmetry_profile(from_gaps([1, 2, 3, 4, 5, 6, 7, 9, 10, 11, 13, 17]))
    assert p.i == 4 and p.exceptional_gaps == (13, 11, 10) and not p.irregular


def test_symmetry_kinds_exhaustive(by_genus):
    for g in range(1, 13):
        for H in by_genus(g):
            p = symmetry_profile(H)  # symmetric case re-verifies the pairing
            # closure forces exactly i-1 broken pairs, so never irregular
            assert not p.irregular
            if H.frobenius == 2 * g - 1:
                assert p.kind == "symmetric" and p.i == 1 and p.exceptional_gaps == ()
            elif H.frobenius == 2 * g - 2:
                assert p.kind == "quasi_symmetric" and p.i == 1
                assert p.exceptional_gaps == (g - 1,)
            else:
                assert p.kind == "general" and p.i > 1


def test_arithmetic_cover_criterion():
    assert arithmetic_cover_criterion(from_generators([4, 6, 17]), 2, 1) is True
    assert arithmetic_cover_criterion(from_generators([2, 21]), 2, 0) is True
    assert arithmetic_cover_criterion(from_generators([3, 17]), 2, 1) is False
    with pytest.raises(PreconditionViolated):
        arithmetic_cover_criterion(from_generators([4, 7]), 2, 1)  # genus 9 = rho3


def test_project_by_n():
    assert project_by_n(from_generators([4, 6, 17]), 2, 1) == from_generators([2, 3])
    assert project_by_n(from_generators([2, 21]), 2, 0) == from_generators([1])
    with pytest.raises(PreconditionViolated):
        project_by_n(from_generators([4, 7]), 2, 1)


def test_project_preserves_genus(by_genus):
    for g in range(10):
        for H in by_genus(g):
            for n in (2, 3):
                gamma = natural_gamma(H, n)
                if type_verdict(H, n, gamma).is_type:
                    assert project_by_n(H, n, gamma).genus == gamma
