"""Gap-sum machinery: n-fold sumsets of the gap set and the criteria that
rule a semigroup out as a Weierstrass semigroup.

The set of sums of n gaps (with repetition) of a Weierstrass semigroup has
cardinality at most (2n-1)(g-1).  Sumsets are computed exactly with int
bitsets, and the excess of the pairwise sumset over its guaranteed
baseline drives the pairing obstruction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classify import symmetry_profile
from .core import NumericalSemigroup
from .errors import GenusTooSmall, WrongShape

NOT_WEIERSTRASS = "not_weierstrass"
INCONCLUSIVE = "inconclusive"


def _gap_bits(H: NumericalSemigroup) -> int:
    bits = 0
    for gap in H.gaps:
        bits |= 1 << gap
    return bits


def _sumset_bits(H: NumericalSemigroup, n: int) -> int:
    bits = _gap_bits(H)
    acc = bits
    for _ in range(n - 1):
        nxt = 0
        for gap in H.gaps:
            nxt |= acc << gap
        acc = nxt
    return acc


@dataclass(frozen=True)
class GapSumProfile:
    """The set of sums of n gaps, its size, and the Weierstrass bound.

    excess is #G_2 - (last_gap - 1) - genus, the number of pairwise sums
    beyond the guaranteed baseline; it is reported only for n == 2 in the
    regime last_gap <= 2*genus - 2 and is None otherwise.
    """

    n: int
    sums: tuple[int, ...]
    cardinality: int
    bc_bound: int
    passes_bc: bool
    excess: int | None


def gap_sum_profile(H: NumericalSemigroup, n: int) -> GapSumProfile:
    """Exact n-fold sumset of the gap set, with repetition allowed."""
    if n < 2:
        raise ValueError("need n >= 2")
    g = H.genus
    if g < 2:
        raise GenusTooSmall("gap-sum bound degenerates below genus 2")
    acc = _sumset_bits(H, n)
    sums = []
    bits = acc
    while bits:
        low = bits & -bits
        sums.append(low.bit_length() - 1)
        bits ^= low
    card = len(sums)
    bound = (2 * n - 1) * (g - 1)
    excess = None
    if n == 2 and H.frobenius <= 2 * g - 2:
        excess = card - (H.frobenius - 1) - g
    return GapSumProfile(n, tuple(sums), card, bound, card <= bound, excess)


def pair_sum_extras(H: NumericalSemigroup) -> tuple[int, ...]:
    """Pairwise gap sums beyond the guaranteed baseline
    {2, ..., last_gap} plus {last_gap + gap}."""
    profile = gap_sum_profile(H, 2)
    ell = H.frobenius
    baseline = set(range(2, ell + 1)) | {ell + gap for gap in H.gaps}
    return tuple(s for s in profile.sums if s not in baseline)


@dataclass(frozen=True)
class ConjecturedSums:
    """The closed-form candidate for G_n and how it compares to the truth.

    values is {n, ..., (n-1)*last_gap} united with all (n-1)*gap_k + gap_j.
    subset_of_actual and equals_actual compare it with the computed sumset;
    in_regime marks last_gap <= 2g-2, where the closed form is meaningful.
    """

    values: tuple[int, ...]
    subset_of_actual: bool
    equals_actual: bool
    in_regime: bool


def conjectured_gap_sums(H: NumericalSemigroup, n: int) -> ConjecturedSums:
    if n < 2:
        raise ValueError("need n >= 2")
    if H.genus < 1:
        raise GenusTooSmall("no gaps to sum")
    ell = H.frobenius
    predicted = set(range(n, (n - 1) * ell + 1))
    for gk in H.gaps:
        base = (n - 1) * gk
        predicted.update(base + gj for gj in H.gaps)
    actual_bits = _sumset_bits(H, n)
    actual = {k for k in range(actual_bits.bit_length()) if actual_bits >> k & 1}
    return ConjecturedSums(tuple(sorted(predicted)),
                           predicted <= actual,
                           predicted == actual,
                           ell <= 2 * H.genus - 2)


def pairing_obstruction(H: NumericalSemigroup) -> str:
    """Rule H out as a Weierstrass semigroup from its exceptional gaps.

    Requires last gap 2g-2i+1 with i >= 4 and the i-1 pairing-violating
    gaps h_1 > ... > h_{i-1} of the symmetry profile.  If
    h_1 + h_{i-1} > 2 h_2, and 2*last_gap - h_u - h_v is a gap for every
    pair on the two descending sum chains (h_1 against everything, then
    the consecutive chain among h_2, ..., h_{i-1}), the pairwise sumset
    overshoots its bound by at least 2i-2 and H cannot be a Weierstrass
    semigroup.  Returns "not_weierstrass" or "inconclusive".

    The gap condition is checked literally; when a chain sum equals
    last_gap plus an exceptional gap it can hold even though that sum is
    already inside the guaranteed baseline, so callers wanting the count
    certified should cross-check gap_sum_profile(H, 2).
    """
    g = H.genus
    ell = H.frobenius
    if g == 0 or ell % 2 == 0:
        raise WrongShape("last gap must be odd and of the form 2g-2i+1 with i >= 4")
    i = (2 * g + 1 - ell) // 2
    if i < 4:
        raise WrongShape(f"need i >= 4, got i = {i}")
    profile = symmetry_profile(H)
    hs = tuple(h for h in profile.exceptional_gaps if h > g - i)
    if len(hs) != i - 1:
        raise WrongShape(
            f"expected {i - 1} exceptional gaps in ({g - i}, {ell}), found {len(hs)}")
    if not hs[0] + hs[-1] > 2 * hs[1]:
        return INCONCLUSIVE
    pairs = [(1, v) for v in range(1, i)]
    for u in range(2, i):
        pairs.append((u, u))
        if u + 1 <= i - 1:
            pairs.append((u, u + 1))
    for u, v in pairs:
        if (2 * ell - hs[u - 1] - hs[v - 1]) in H:
            return INCONCLUSIVE
    return NOT_WEIERSTRASS
