"""Exact finite representation of numerical semigroups.

The canonical data is the gap set, held as a sorted tuple together with a
membership bitset over [0, conductor].  Bitsets are plain Python ints
(bit k set iff k is an element), so everything here is exact integer
arithmetic end to end; nothing ever touches floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Iterator

from .errors import CapExceeded, EmptyInput, GcdNotOne, NotAnElement, NotASemigroup

DEFAULT_GENUS_CAP = 25


class NumericalSemigroup:
    """Cofinite additive subsemigroup of the naturals, keyed by its gap set.

    Instances are immutable values: equality and hashing go by the gap
    tuple.  Construction validates closure of the complement and raises
    NotASemigroup(a, b) with a concrete witness when two elements sum to
    a listed gap.  Minimal generators are derived on first use and cached.
    """

    __slots__ = ("gaps", "genus", "frobenius", "conductor",
                 "_member_bits", "_small_elements", "_min_gens")

    def __init__(self, gaps: Iterable[int] = ()):
        gap_list = sorted(set(gaps))
        if gap_list and gap_list[0] < 1:
            raise ValueError("gaps must be positive integers")
        self.gaps = tuple(gap_list)
        self.genus = len(gap_list)
        self.frobenius = gap_list[-1] if gap_list else -1
        self.conductor = self.frobenius + 1
        gap_bits = 0
        for v in gap_list:
            gap_bits |= 1 << v
        # bit k set iff k in H, for 0 <= k <= conductor
        self._member_bits = ((1 << (self.conductor + 1)) - 1) & ~gap_bits
        self._small_elements = tuple(
            k for k in range(self.conductor) if self._member_bits >> k & 1)
        self._min_gens: tuple[int, ...] | None = None
        self._check_closure(gap_bits)

    def _check_closure(self, gap_bits: int) -> None:
        pos = self._member_bits & ~1
        sums = 0
        a_bits = pos
        while a_bits:
            low = a_bits & -a_bits
            a = low.bit_length() - 1
            if 2 * a > self.frobenius:
                break
            a_bits ^= low
            sums |= pos << a
        bad = sums & gap_bits
        if bad:
            x = (bad & -bad).bit_length() - 1
            for a in range(1, x // 2 + 1):
                if pos >> a & 1 and pos >> (x - a) & 1:
                    raise NotASemigroup(a, x - a)

    def __contains__(self, n: int) -> bool:
        if n < 0:
            return False
        if n >= self.conductor:
            return True
        return bool(self._member_bits >> n & 1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.gaps == other.gaps

    def __hash__(self) -> int:
        return hash(self.gaps)

    def __repr__(self) -> str:
        return f"NumericalSemigroup(gens={list(self.min_generators)})"

    def element_at(self, i: int) -> int:
        """The i-th smallest element, 0-indexed from element_at(0) == 0."""
        if i < 0:
            raise ValueError("element index must be nonnegative")
        small = self._small_elements
        if i < len(small):
            return small[i]
        # elements at and beyond the conductor are consecutive
        return i + self.genus

    @property
    def multiplicity(self) -> int:
        """Least positive element."""
        return self.element_at(1)

    def elements(self, stop: int) -> list[int]:
        """All elements strictly below ``stop``."""
        return [n for n in range(max(stop, 0)) if n in self]

    @property
    def min_generators(self) -> tuple[int, ...]:
        if self._min_gens is None:
            self._min_gens = self._compute_min_generators()
        return self._min_gens

    def _compute_min_generators(self) -> tuple[int, ...]:
        if self.genus == 0:
            return (1,)
        m1 = self.element_at(1)
        bound = self.conductor + m1  # every minimal generator is < conductor + m1
        ext = self._member_bits | (((1 << (bound - self.conductor)) - 1) << self.conductor)
        pos = ext & ~1
        sums = 0
        a_bits = pos
        while a_bits:
            low = a_bits & -a_bits
            a = low.bit_length() - 1
            if 2 * a >= bound:
                break
            a_bits ^= low
            sums |= pos << a
        return tuple(x for x in range(1, bound)
                     if pos >> x & 1 and not sums >> x & 1)


def from_gaps(gaps: Iterable[int]) -> NumericalSemigroup:
    """Build the semigroup whose gap set is exactly ``gaps``.

    Raises NotASemigroup(a, b) when two non-gaps sum to a listed gap.
    """
    return NumericalSemigroup(gaps)


def from_generators(gens: Iterable[int]) -> NumericalSemigroup:
    """Smallest semigroup containing 0 and all of ``gens``.

    Requires gcd(gens) == 1, otherwise the complement is infinite.
    """
    gen_list = sorted(set(gens))
    if not gen_list:
        raise EmptyInput("need at least one generator")
    if gen_list[0] < 1:
        raise ValueError("generators must be positive integers")
    if reduce(math.gcd, gen_list) != 1:
        raise GcdNotOne(f"gcd of {gen_list} is not 1")
    if gen_list[0] == 1:
        return NumericalSemigroup(())
    m1 = gen_list[0]
    bound = 4 * gen_list[-1]
    while True:
        reachable = bytearray(bound + 1)
        reachable[0] = 1
        for n in range(m1, bound + 1):
            for a in gen_list:
                if a > n:
                    break
                if reachable[n - a]:
                    reachable[n] = 1
                    break
        frobenius = max((n for n in range(1, bound + 1) if not reachable[n]),
                        default=0)
        if frobenius + m1 <= bound:
            # a full run of m1 members follows the last gap, so the sieve
            # window provably saw every gap
            return NumericalSemigroup(
                n for n in range(1, frobenius + 1) if not reachable[n])
        bound *= 2


def natural_gamma(H: NumericalSemigroup, n: int) -> int:
    """Number of gaps divisible by n."""
    if n < 1:
        raise ValueError("modulus must be positive")
    return sum(1 for gap in H.gaps if gap % n == 0)


@dataclass(frozen=True)
class AperyProfile:
    """Least elements per residue class modulo a fixed element.

    s[k] is the least element congruent to k+1 (mod modulus) and
    e[k] = (s[k] - (k+1)) / modulus counts the gaps in that class.
    """

    modulus: int
    s: tuple[int, ...]
    e: tuple[int, ...]


def apery_profile(H: NumericalSemigroup, m: int) -> AperyProfile:
    """Apery data of H relative to the positive element m."""
    if m <= 0 or m not in H:
        raise NotAnElement(f"{m} is not a positive element")
    s = []
    e = []
    for i in range(1, m):
        n = i
        while n not in H:
            n += m
        s.append(n)
        e.append((n - i) // m)
    return AperyProfile(m, tuple(s), tuple(e))


def tree_children(H: NumericalSemigroup) -> list[NumericalSemigroup]:
    """Children in the genus tree: remove one minimal generator beyond the
    Frobenius number, in ascending order of the removed generator."""
    return [NumericalSemigroup(H.gaps + (m,))
            for m in H.min_generators if m > H.frobenius]


def descendants(H: NumericalSemigroup, max_genus: int) -> Iterator[NumericalSemigroup]:
    """H and all its tree descendants of genus <= max_genus, depth first."""
    if H.genus > max_genus:
        return
    yield H
    if H.genus < max_genus:
        for child in tree_children(H):
            yield from descendants(child, max_genus)


def enumerate_by_genus(g: int, cap: int = DEFAULT_GENUS_CAP) -> Iterator[NumericalSemigroup]:
    """Every numerical semigroup of genus exactly g, each exactly once.

    The stream is deterministic: children are visited in ascending order
    of the removed generator.
    """
    if g < 0:
        raise ValueError("genus must be nonnegative")
    if g > cap:
        raise CapExceeded(f"genus {g} exceeds cap {cap}")
    return (H for H in descendants(NumericalSemigroup(), g) if H.genus == g)


def enumerate_genus_range(lo: int, hi: int,
                          cap: int = DEFAULT_GENUS_CAP) -> Iterator[NumericalSemigroup]:
    """Every semigroup with lo <= genus <= hi, in tree order."""
    if lo < 0 or hi < lo:
        raise ValueError("need 0 <= lo <= hi")
    if hi > cap:
        raise CapExceeded(f"genus {hi} exceeds cap {cap}")
    return (H for H in descendants(NumericalSemigroup(), hi) if H.genus >= lo)


def parse_semigroup(text: str) -> NumericalSemigroup:
    """Parse the text forms ``gens:4,7`` and ``gaps:1,2,3,5``.

    Values must be ascending positive integers, comma separated with no
    whitespace; ``gaps:`` with an empty body denotes the naturals.
    """
    if text.startswith("gens:"):
        kind, body = "gens", text[5:]
    elif text.startswith("gaps:"):
        kind, body = "gaps", text[5:]
    else:
        raise ValueError(f"semigroup spec must start with 'gens:' or 'gaps:': {text!r}")
    if body:
        tokens = body.split(",")
        if not all(tok.isdigit() for tok in tokens):
            raise ValueError(f"malformed integer list in {text!r}")
        values = [int(tok) for tok in tokens]
        if any(b <= a for a, b in zip(values, values[1:])):
            raise ValueError(f"values must be strictly ascending in {text!r}")
    else:
        values = []
    if kind == "gens":
        return from_generators(values)
    return from_gaps(values)


def format_semigroup(H: NumericalSemigroup, form: str = "gaps") -> str:
    """Serialize to the text form; ``gaps`` is the canonical one."""
    if form == "gaps":
        return "gaps:" + ",".join(map(str, H.gaps))
    if form == "gens":
        return "gens:" + ",".join(map(str, H.min_generators))
    raise ValueError(f"unknown form {form!r}")
