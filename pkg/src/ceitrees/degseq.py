"""Tree degree sequences, level-degree sequences and majorization."""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import accumulate
from typing import Iterable, Iterator, Sequence

from .errors import (
    BadSum,
    BadUnion,
    InvalidSequence,
    LengthMismatch,
    LevelCountMismatch,
    NonPositive,
    NotComparable,
    RootNotSingleton,
    SumMismatch,
    TooSmall,
)


@dataclass(frozen=True)
class DegreeSequence:
    """Non-increasing positive integers summing to ``2(n - 1)``."""

    degrees: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.degrees)

    def __len__(self) -> int:
        return len(self.degrees)

    def __iter__(self) -> Iterator[int]:
        return iter(self.degrees)

    def __getitem__(self, i: int) -> int:
        return self.degrees[i]

    def __str__(self) -> str:
        return ",".join(map(str, self.degrees))


def validate_degree_sequence(degrees: Iterable[int]) -> DegreeSequence:
    """Check the tree degree condition; unsorted input is sorted, not rejected."""
    if isinstance(degrees, DegreeSequence):
        return degrees
    ds = sorted((int(d) for d in degrees), reverse=True)
    n = len(ds)
    if n < 2:
        raise TooSmall(f"a tree degree sequence needs n >= 2, got n={n}")
    if ds[-1] < 1:
        raise NonPositive(f"degree {ds[-1]} < 1")
    if sum(ds) != 2 * (n - 1):
        raise BadSum(f"sum {sum(ds)} != 2(n-1) = {2 * (n - 1)}")
    return DegreeSequence(tuple(ds))


_RUN = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+))?\s*$")


def parse_degree_sequence(text: str) -> DegreeSequence:
    """Parse ``"4,3,3,1,1,1,1"`` or the run-length form ``"3^2,2^1,1^4"``."""
    out: list[int] = []
    for part in text.split(","):
        m = _RUN.match(part)
        if not m:
            raise InvalidSequence(f"cannot parse degree term {part!r}")
        d = int(m.group(1))
        out.extend([d] * (int(m.group(2)) if m.group(2) is not None else 1))
    return validate_degree_sequence(out)


def format_degree_sequence(d: Sequence[int]) -> str:
    """Run-length form, e.g. ``(3,3,1,1,1,1)`` becomes ``3^2,1^4``."""
    parts = []
    i = 0
    while i < len(d):
        j = i
        while j < len(d) and d[j] == d[i]:
            j += 1
        parts.append(f"{d[i]}^{j - i}" if j - i > 1 else str(d[i]))
        i = j
    return ",".join(parts)


# Level-degree sequences ---------------------------------------------------


@dataclass(frozen=True)
class LevelDegreeSequence:
    """Degree multisets per height of a rooted tree, each stored non-increasing."""

    levels: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return sum(len(lv) for lv in self.levels)

    @property
    def height(self) -> int:
        return len(self.levels) - 1

    def __len__(self) -> int:
        return len(self.levels)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.levels)

    def __getitem__(self, i: int) -> tuple[int, ...]:
        return self.levels[i]

    def degree_sequence(self) -> DegreeSequence:
        return validate_degree_sequence([d for lv in self.levels for d in lv])


def validate_level_degree_sequence(
    levels: Iterable[Iterable[int]],
) -> LevelDegreeSequence:
    if isinstance(levels, LevelDegreeSequence):
        return levels
    lvls = [tuple(sorted((int(d) for d in lv), reverse=True)) for lv in levels]
    if not lvls or len(lvls[0]) != 1:
        size = len(lvls[0]) if lvls else 0
        raise RootNotSingleton(f"level 0 must hold exactly one degree, got {size}")
    # Trailing empty levels carry no information.
    while len(lvls) > 1 and not lvls[-1]:
        lvls.pop()
    for i, lv in enumerate(lvls):
        down = sum(lv) if i == 0 else sum(d - 1 for d in lv)
        below = len(lvls[i + 1]) if i + 1 < len(lvls) else 0
        if down != below:
            raise LevelCountMismatch(
                f"level {i} has total down-degree {down} but level {i + 1} has {below} vertices"
            )
    try:
        validate_degree_sequence([d for lv in lvls for d in lv])
    except (InvalidSequence, TooSmall) as exc:
        raise BadUnion(f"union of levels is not a tree degree sequence: {exc}") from exc
    return LevelDegreeSequence(tuple(lvls))


# Majorization -------------------------------------------------------------


@dataclass(frozen=True)
class MajorizationChain:
    steps: tuple[DegreeSequence, ...]

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self) -> Iterator[DegreeSequence]:
        return iter(self.steps)

    def __getitem__(self, i: int) -> DegreeSequence:
        return self.steps[i]


def majorizes(b: Sequence[int], a: Sequence[int]) -> bool:
    """True iff every prefix sum of ``a`` is at most that of ``b``."""
    if len(a) != len(b):
        raise LengthMismatch(f"lengths differ: {len(a)} vs {len(b)}")
    if sum(a) != sum(b):
        raise SumMismatch(f"sums differ: {sum(a)} vs {sum(b)}")
    return all(x <= y for x, y in zip(accumulate(a), accumulate(b)))


def majorization_chain(a: DegreeSequence, b: DegreeSequence) -> MajorizationChain:
    """Chain of unit moves from ``a`` up to ``b``.

    Each step raises the first entry ``j`` where ``a`` falls short of ``b``.
    It lowers the last entry of the run of equal values that contains the
    first excess over ``b`` after ``j``. Lowering the end of the run keeps the
    sequence non-increasing, and taking the first excess keeps every
    intermediate sequence majorized by ``b``.
    """
    a = validate_degree_sequence(a)
    b = validate_degree_sequence(b)
    try:
        ok = majorizes(b, a)
    except (LengthMismatch, SumMismatch) as exc:
        raise NotComparable(str(exc)) from exc
    if not ok:
        raise NotComparable(f"({b}) does not majorize ({a})")
    cur = list(a.degrees)
    target = b.degrees
    steps = [a]
    while tuple(cur) != target:
        j = next(i for i in range(len(cur)) if cur[i] < target[i])
        k = next(i for i in range(j + 1, len(cur)) if cur[i] > target[i])
        while k + 1 < len(cur) and cur[k + 1] == cur[k]:
            k += 1
        cur[j] += 1
        cur[k] -= 1
        steps.append(validate_degree_sequence(cur))
    return MajorizationChain(tuple(steps))


# Enumeration --------------------------------------------------------------


def _partitions(total: int, parts: int, largest: int) -> Iterator[list[int]]:
    """Partitions of ``total`` into exactly ``parts`` positive parts, each
    at most ``largest``, in lexicographically decreasing order."""
    if parts == 0:
        if total == 0:
            yield []
        return
    hi = min(largest, total - (parts - 1))
    lo = -(-total // parts)  # the first part is at least the average
    for first in range(hi, lo - 1, -1):
        for rest in _partitions(total - first, parts - 1, first):
            yield [first, *rest]


def all_degree_sequences(n: int) -> Iterator[DegreeSequence]:
    """Every tree degree sequence of length ``n``, lexicographically decreasing."""
    if n < 2:
        raise TooSmall(f"n must be >= 2, got {n}")
    for p in _partitions(2 * (n - 1), n, n - 1):
        yield DegreeSequence(tuple(p))
