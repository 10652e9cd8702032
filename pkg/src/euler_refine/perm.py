"""Alternating permutations: generation, classification, brute-force counts.

This module is the ground truth the formula and series routes are
checked against.  Permutations are kept in one-line notation with
1-based values; a permutation is up-down when its values strictly
zigzag starting with a rise, down-up when starting with a descent.

The text form used by the CLI and golden files is plain digit strings
for degree <= 9 and comma-separated values above that.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterator, Optional, Sequence

from .seq import CountTable


class AltKind(Enum):
    UP_DOWN = "up-down"
    DOWN_UP = "down-up"


class MinMaxKind(Enum):
    MIN_MAX = "min-max"
    MAX_MIN = "max-min"


class SecondMaxKind(Enum):
    UPPER = "upper"
    LOWER = "lower"


@dataclass(frozen=True)
class Permutation:
    """One-line notation; values[i-1] is the image of i.

    Degree 0 is allowed so that empty blocks of a decomposition can be
    carried as (vacuously alternating) patterns.
    """

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(self.values))
        n = len(self.values)
        if sorted(self.values) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.values}")

    @property
    def n(self) -> int:
        return len(self.values)

    def position_of(self, value: int) -> int:
        """1-based position of a value."""
        return self.values.index(value) + 1

    def to_text(self) -> str:
        if self.n <= 9:
            return "".join(str(v) for v in self.values)
        return ",".join(str(v) for v in self.values)

    @classmethod
    def from_text(cls, text: str) -> "Permutation":
        text = text.strip()
        if not text:
            return cls(())
        if "," in text:
            return cls(tuple(int(part) for part in text.split(",")))
        return cls(tuple(int(ch) for ch in text))

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True)
class Classification:
    kind: AltKind
    minmax: MinMaxKind
    secondmax: SecondMaxKind


def _zigzags(values: Sequence[int], first_rises: bool) -> bool:
    rise = first_rises
    for a, b in zip(values, values[1:]):
        if (a < b) != rise:
            return False
        rise = not rise
    return True


def is_up_down(p: Permutation) -> bool:
    """True when the values strictly zigzag starting with a rise.

    Degrees 0 and 1 count as up-down (the chain is empty).
    """
    return _zigzags(p.values, True)


def is_down_up(p: Permutation) -> bool:
    """True when the values strictly zigzag starting with a descent."""
    return _zigzags(p.values, False)


def is_alternating(p: Permutation) -> bool:
    return is_up_down(p) or is_down_up(p)


def complement(p: Permutation) -> Permutation:
    """Replace each value v by n - v + 1; an involution swapping the two kinds."""
    n = p.n
    return Permutation(tuple(n - v + 1 for v in p.values))


def upper_row(n: int, kind: AltKind) -> frozenset[int]:
    """Positions of the locally larger values: even for up-down, odd for down-up."""
    if n < 2:
        raise ValueError("upper row is defined for degree >= 2")
    start = 2 if kind is AltKind.UP_DOWN else 1
    return frozenset(range(start, n + 1, 2))


def classify(p: Permutation) -> Classification:
    """Kind plus the min-max and second-max refinements of an alternating permutation."""
    if p.n < 2:
        raise ValueError("classification requires degree >= 2")
    if is_up_down(p):
        kind = AltKind.UP_DOWN
    elif is_down_up(p):
        kind = AltKind.DOWN_UP
    else:
        raise ValueError(f"not an alternating permutation: {p}")
    n = p.n
    minmax = (
        MinMaxKind.MIN_MAX
        if p.position_of(1) < p.position_of(n)
        else MinMaxKind.MAX_MIN
    )
    secondmax = (
        SecondMaxKind.UPPER
        if p.position_of(n - 1) in upper_row(n, kind)
        else SecondMaxKind.LOWER
    )
    return Classification(kind, minmax, secondmax)


def enumerate_alternating(
    n: int, kind: AltKind, prefix: Sequence[int] = ()
) -> Iterator[Permutation]:
    """Yield the alternating permutations of one kind in lexicographic order.

    Extends one value at a time and abandons any prefix that breaks the
    zigzag chain.  A `prefix` restricts the output to its extensions, so
    disjoint prefixes partition the search space; a prefix that already
    violates the chain yields nothing.
    """
    if n < 1:
        raise ValueError("degree must be at least 1")
    prefix = tuple(prefix)
    if len(prefix) > n or len(set(prefix)) != len(prefix):
        raise ValueError(f"malformed prefix {prefix}")
    if any(v < 1 or v > n for v in prefix):
        raise ValueError(f"prefix values out of range 1..{n}: {prefix}")
    if not _zigzags(prefix, kind is AltKind.UP_DOWN):
        return
    used = bytearray(n + 1)
    for v in prefix:
        used[v] = 1
    partial = list(prefix)

    # Position idx (0-based) must rise from its predecessor on odd idx
    # for up-down and on even idx for down-up.
    rise_parity = 1 if kind is AltKind.UP_DOWN else 0

    def extend() -> Iterator[Permutation]:
        idx = len(partial)
        if idx == n:
            yield Permutation(tuple(partial))
            return
        if idx == 0:
            candidates = range(1, n + 1)
        elif idx % 2 == rise_parity:
            candidates = range(partial[-1] + 1, n + 1)
        else:
            candidates = range(1, partial[-1])
        for v in candidates:
            if not used[v]:
                used[v] = 1
                partial.append(v)
                yield from extend()
                partial.pop()
                used[v] = 0

    yield from extend()


def enumerate_alternating_by_filter(n: int, kind: AltKind) -> Iterator[Permutation]:
    """Reference generator: filter all n! permutations (small n only)."""
    if n < 1:
        raise ValueError("degree must be at least 1")
    check = is_up_down if kind is AltKind.UP_DOWN else is_down_up
    for values in itertools.permutations(range(1, n + 1)):
        p = Permutation(values)
        if check(p):
            yield p


def count_minmax(n: int, kind: AltKind) -> tuple[int, int]:
    """(min-max, max-min) counts over one alternating population.

    The two populations differ at even degree: the complement bijection
    sends up-down min-max onto down-up max-min, so the down-up pair is
    the up-down pair reversed.
    """
    if n < 2:
        raise ValueError("degree must be at least 2")
    minmax = maxmin = 0
    for p in enumerate_alternating(n, kind):
        if classify(p).minmax is MinMaxKind.MIN_MAX:
            minmax += 1
        else:
            maxmin += 1
    return minmax, maxmin


@lru_cache(maxsize=None)
def count_refinements(n: int) -> CountTable:
    """Classify every alternating permutation of degree n and tally all splits.

    ``ene``/``enw`` are counted over the up-down population (the
    convention under which they refine E_n rather than 2 E_n);
    :func:`count_minmax` reports either population on request.
    """
    if n < 2:
        raise ValueError("degree must be at least 2")
    e = ene = enw = eup = edown = 0
    for p in enumerate_alternating(n, AltKind.UP_DOWN):
        c = classify(p)
        e += 1
        if c.minmax is MinMaxKind.MIN_MAX:
            ene += 1
        else:
            enw += 1
        if c.secondmax is SecondMaxKind.UPPER:
            eup += 1
        else:
            edown += 1
    e_downup = dup = ddown = 0
    for p in enumerate_alternating(n, AltKind.DOWN_UP):
        e_downup += 1
        if classify(p).secondmax is SecondMaxKind.UPPER:
            dup += 1
        else:
            ddown += 1
    if e_downup != e:
        raise AssertionError(f"population mismatch at degree {n}: {e} vs {e_downup}")
    return CountTable(n=n, e=e, ene=ene, enw=enw, eup=eup, edown=edown,
                      dup=dup, ddown=ddown)
