"""Type-(N, gamma) classification, symmetry profiles, and the projection map.

A semigroup is of type (N, gamma) when it has gamma positive multiples of
N among its elements in [N, 2N*gamma], its gamma-th element equals
2N*gamma, and (2*gamma+1)N is an element.  This is the arithmetic shadow
of being an N-sheeted cover of a genus-gamma curve with a totally
ramified point; only the arithmetic side lives here.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import NamedTuple

from .bounds import divisor_condition, rho1, rho3
from .core import NumericalSemigroup, natural_gamma
from .errors import GenusZero, NonDivisibleElement, NotPrime, PreconditionViolated


def is_prime(n: int) -> bool:
    """Trial division; intended for the small N used throughout."""
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _require_prime(n: int) -> None:
    if not is_prime(n):
        raise NotPrime(f"{n} is not prime")


@dataclass(frozen=True)
class TypeVerdict:
    """The three defining conditions of type (N, gamma), reported separately.

    cond_a: exactly gamma positive multiples of N are elements in [N, 2N*gamma];
    cond_b: the gamma-th element is 2N*gamma;
    cond_c: (2*gamma+1)N is an element.
    """

    N: int
    gamma: int
    cond_a: bool
    cond_b: bool
    cond_c: bool
    is_type: bool
    gamma_n: int


def type_verdict(H: NumericalSemigroup, N: int, gamma: int) -> TypeVerdict:
    """Evaluate all three conditions independently (no short-circuiting).

    At gamma = 0 condition (a) is vacuous and (b) reads m_0 = 0, so type
    (N, 0) reduces to N being an element.
    """
    if N < 1 or gamma < 0:
        raise ValueError("need N >= 1 and gamma >= 0")
    multiples = sum(1 for k in range(1, 2 * gamma + 1) if k * N in H)
    cond_a = multiples == gamma
    cond_b = H.element_at(gamma) == 2 * N * gamma
    cond_c = (2 * gamma + 1) * N in H
    return TypeVerdict(N, gamma, cond_a, cond_b, cond_c,
                       cond_a and cond_b and cond_c, natural_gamma(H, N))


def tail_structure(H: NumericalSemigroup, N: int, gamma: int) -> bool:
    """Given conditions (a) and (c), check the forced consequences: every
    (2*gamma+i)N with i >= 1 is an element, 2N*gamma is an element, and
    gamma equals the count of gaps divisible by N.

    These are theorems for any valid input; the operation verifies rather
    than assumes them, so exhaustive callers double as a proof check.
    """
    v = type_verdict(H, N, gamma)
    if not (v.cond_a and v.cond_c):
        raise PreconditionViolated("conditions (a) and (c) must hold")
    if 2 * N * gamma not in H or natural_gamma(H, N) != gamma:
        return False
    k = 2 * gamma + 1
    while k * N <= H.frobenius:
        if k * N not in H:
            return False
        k += 1
    return True


class GammaFit(NamedTuple):
    gamma_n: int
    cond_a: bool
    cond_c: bool
    has_tail_element: bool


def natural_gamma_fit(H: NumericalSemigroup, N: int) -> GammaFit:
    """The natural gamma for N, plus the three facts that must hold with it:
    conditions (a) and (c) and membership of 2N*gamma_n.

    All three flags are True for every semigroup; returning them makes the
    theorem exhaustively testable.
    """
    gamma = natural_gamma(H, N)
    v = type_verdict(H, N, gamma)
    return GammaFit(gamma, v.cond_a, v.cond_c, 2 * N * gamma in H)


def exclusive_types(N: int, gamma: int, M: int, r: int) -> bool:
    """True iff 2(gamma+r)M > (2*gamma+r)N, the hypothesis under which no
    semigroup is both of type (N, gamma) and of type (M, gamma+r)."""
    if r < 1:
        raise ValueError("need r >= 1")
    return 2 * (gamma + r) * M > (2 * gamma + r) * N


def is_type_by_tail(H: NumericalSemigroup, N: int) -> bool:
    """Sufficient condition: every element not divisible by N exceeds
    2N*gamma_n.  When it holds, H is of type (N, gamma_n); the implication
    is asserted."""
    gamma = natural_gamma(H, N)
    hyp = all(h % N == 0 for h in range(1, 2 * N * gamma + 1) if h in H)
    if hyp:
        assert type_verdict(H, N, gamma).is_type
    return hyp


def is_type_by_genus(H: NumericalSemigroup, N: int) -> bool:
    """Sufficient condition for prime N: genus > N^2*gamma_n - N + 1.
    When it holds, H is of type (N, gamma_n); the implication is asserted."""
    _require_prime(N)
    gamma = natural_gamma(H, N)
    hyp = H.genus > rho1(2 * gamma, N, gamma)
    if hyp:
        assert type_verdict(H, N, gamma).is_type
    return hyp


def leading_gcd(H: NumericalSemigroup, N: int, A: int) -> int:
    """gcd of the first A - gamma_n positive elements; equals N under the
    preconditions (type (N, gamma_n), A >= gamma+1, genus > rho1(A, N, gamma))."""
    _require_prime(N)
    gamma = natural_gamma(H, N)
    if not type_verdict(H, N, gamma).is_type:
        raise PreconditionViolated("H is not of type (N, gamma_n)")
    if A < gamma + 1:
        raise PreconditionViolated("need A >= gamma + 1")
    if H.genus <= rho1(A, N, gamma):
        raise PreconditionViolated("need genus > rho1(A, N, gamma)")
    d = 0
    for i in range(1, A - gamma + 1):
        d = gcd(d, H.element_at(i))
    assert d == N, (d, N)
    return d


@dataclass(frozen=True)
class SymmetryProfile:
    """Near-symmetry data of the gap set.

    i is fixed by frobenius in {2g-2i+1, 2g-2i}.  exceptional_gaps lists,
    descending, the gaps h strictly between g-i and the last gap whose
    mirror last_gap - h is also a gap (the pairs excluded from the
    pairing), plus the self-paired middle gap g-i when the last gap is
    even.  Closure forces exactly i-1 excluded pairs (two elements cannot
    mirror each other, since they would sum to the last gap); irregular
    stays as a defensive flag for that count.
    """

    kind: str  # symmetric | quasi_symmetric | general
    i: int
    exceptional_gaps: tuple[int, ...]
    irregular: bool


def symmetry_profile(H: NumericalSemigroup) -> SymmetryProfile:
    g = H.genus
    if g == 0:
        raise GenusZero("symmetry is undefined for the naturals")
    ell = H.frobenius
    even = (ell % 2 == 0)
    i = (2 * g - ell) // 2 if even else (2 * g + 1 - ell) // 2
    if ell == 2 * g - 1:
        kind = "symmetric"
    elif ell == 2 * g - 2:
        kind = "quasi_symmetric"
    else:
        kind = "general"
    window = tuple(h for h in reversed(H.gaps)
                   if g - i < h < ell and ell - h not in H)
    exceptional = window + ((g - i,) if even else ())
    if kind == "symmetric":
        # full pairing: h is an element iff ell - h is a gap
        for h in range(ell + 1):
            assert (h in H) != (ell - h in H), (h, ell)
    if even:
        assert g - i not in H  # ell/2 is always a gap when ell is even
    return SymmetryProfile(kind, i, exceptional, len(window) != i - 1)


def arithmetic_cover_criterion(H: NumericalSemigroup, N: int, gamma: int) -> bool:
    """True iff some integer A in [2*gamma+2, 2*gamma+2+gamma//(N-1)]
    passes the divisor condition and has element_at(A-gamma) == A*N.

    For Weierstrass semigroups of genus above rho3 this characterises type
    (N, gamma); here it is evaluated as a pure arithmetic predicate.
    """
    _require_prime(N)
    if H.genus <= rho3(N, gamma):
        raise PreconditionViolated("need genus > rho3(N, gamma)")
    hi = 2 * gamma + 2 + gamma // (N - 1)
    return any(divisor_condition(A, N, gamma) and H.element_at(A - gamma) == A * N
               for A in range(2 * gamma + 2, hi + 1))


def project_by_n(H: NumericalSemigroup, N: int, gamma: int) -> NumericalSemigroup:
    """Project a type-(N, gamma) semigroup to genus gamma: divide the first
    gamma elements by N and keep the full tail from 2*gamma on."""
    if not type_verdict(H, N, gamma).is_type:
        raise PreconditionViolated("H is not of type (N, gamma)")
    head = set()
    for i in range(1, gamma + 1):
        m = H.element_at(i)
        if m % N:
            raise NonDivisibleElement(f"element m_{i} = {m} is not a multiple of {N}")
        head.add(m // N)
    result = NumericalSemigroup(x for x in range(1, 2 * gamma) if x not in head)
    assert result.genus == gamma
    return result
