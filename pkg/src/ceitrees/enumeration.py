"""Exhaustive generation of labeled trees through Prüfer codes.

Two enumeration spaces are supported, both addressable by contiguous rank
ranges so they can be split across worker processes:

* all ``n**(n-2)`` Prüfer codes (rank = the code read as a base-``n`` number);
* the multiset permutations of one degree sequence's Prüfer multiset, in
  lexicographic order.

Per-chunk results are dictionaries ``canonical code -> CEI``. Merging them is
a plain dict union, so the outcome does not depend on chunking or on the
number of workers.
"""

from __future__ import annotations

import heapq
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod
from typing import Iterator, Mapping, Sequence

from .degseq import DegreeSequence, all_degree_sequences, validate_degree_sequence
from .errors import BadEntry, BadR, InvalidAssignment, TooLarge, TooSmall
from .tree import (
    Tree,
    _from_adjacency_unchecked,
    branching_count,
    canonical_code,
    cei,
    tree_from_code,
)

# all_trees supports n <= 10; verification defaults lower (see enumeration_bound).
MAX_N = 10
DEFAULT_BOUND = 9

# Known numbers of unlabeled (free) trees on n = 1..10 vertices.
UNLABELED_TREE_COUNTS = (1, 1, 1, 2, 3, 6, 11, 23, 47, 106)


def enumeration_bound() -> int:
    """Largest n the verifiers accept: ``CEI_MAX_N`` if set, else 9, capped at 10."""
    raw = os.environ.get("CEI_MAX_N")
    if raw is None:
        return DEFAULT_BOUND
    return min(int(raw), MAX_N)


def check_bound(n: int, bound: int | None = None) -> None:
    bound = enumeration_bound() if bound is None else min(bound, MAX_N)
    if n > bound:
        raise TooLarge(f"n={n} exceeds the enumeration bound {bound}")


# Prüfer codec -------------------------------------------------------------


def prufer_decode(n: int, seq: Sequence[int]) -> Tree:
    """Tree with Prüfer code ``seq`` (smallest-leaf elimination order)."""
    if n < 2:
        raise TooSmall(f"n must be >= 2, got {n}")
    if len(seq) != n - 2:
        raise BadEntry(f"code for n={n} must have {n - 2} entries, got {len(seq)}")
    for x in seq:
        if not isinstance(x, int) or not 1 <= x <= n:
            raise BadEntry(f"entry {x!r} not in 1..{n}")
    return _decode(n, seq)


def _decode(n: int, seq: Sequence[int]) -> Tree:
    degree = [1] * (n + 1)
    for x in seq:
        degree[x] += 1
    leaves = [u for u in range(1, n + 1) if degree[u] == 1]
    heapq.heapify(leaves)
    adj: list[list[int]] = [[] for _ in range(n)]
    for x in seq:
        leaf = heapq.heappop(leaves)
        adj[leaf - 1].append(x)
        adj[x - 1].append(leaf)
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    adj[u - 1].append(v)
    adj[v - 1].append(u)
    return _from_adjacency_unchecked(adj)


def prufer_encode(t: Tree) -> tuple[int, ...]:
    degree = [0] + [len(a) for a in t.adj]
    removed = [False] * (t.n + 1)
    leaves = [u for u in t.vertices if degree[u] == 1]
    heapq.heapify(leaves)
    out = []
    for _ in range(t.n - 2):
        leaf = heapq.heappop(leaves)
        removed[leaf] = True
        nb = next(v for v in t.adj[leaf - 1] if not removed[v])
        out.append(nb)
        degree[nb] -= 1
        if degree[nb] == 1:
            heapq.heappush(leaves, nb)
    return tuple(out)


def random_tree(n: int, rng: random.Random) -> Tree:
    """Uniformly random labeled tree on ``1..n``."""
    return _decode(n, [rng.randint(1, n) for _ in range(n - 2)])


# Counting -----------------------------------------------------------------


def labeled_tree_count(d: Sequence[int]) -> int:
    """Labeled trees in which vertex ``i`` has degree ``d[i]``: ``(n-2)!/prod (d_i-1)!``.

    Python integers are unbounded, so this never overflows.
    """
    d = validate_degree_sequence(d)
    return factorial(d.n - 2) // prod(factorial(x - 1) for x in d)


def _multinomial(counts: Sequence[int]) -> int:
    return factorial(sum(counts)) // prod(factorial(c) for c in counts)


# Ranked multiset permutations ---------------------------------------------


def _unrank_multiset(values: Sequence[int], counts: list[int], rank: int) -> list[int]:
    counts = list(counts)
    out = []
    for _ in range(sum(counts)):
        for i, v in enumerate(values):
            if counts[i] == 0:
                continue
            counts[i] -= 1
            block = _multinomial(counts)
            if rank < block:
                out.append(v)
                break
            rank -= block
            counts[i] += 1
    return out


def _next_permutation(a: list[int]) -> bool:
    i = len(a) - 2
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = len(a) - 1
    while a[j] <= a[i]:
        j -= 1
    a[i], a[j] = a[j], a[i]
    a[i + 1 :] = reversed(a[i + 1 :])
    return True


def multiset_permutations(
    items: Sequence[int], start: int = 0, stop: int | None = None
) -> Iterator[tuple[int, ...]]:
    """Distinct permutations of ``items`` with lexicographic rank in ``[start, stop)``."""
    values = sorted(set(items))
    counts = [list(items).count(v) for v in values]
    total = _multinomial(counts)
    stop = total if stop is None else min(stop, total)
    if start >= stop:
        return
    cur = _unrank_multiset(values, counts, start)
    for _ in range(stop - start):
        yield tuple(cur)
        _next_permutation(cur)


def _prufer_multiset(assignment: Mapping[int, int]) -> list[int]:
    return [u for u in sorted(assignment) for _ in range(assignment[u] - 1)]


def canonical_assignment(d: DegreeSequence) -> dict[int, int]:
    """Vertex ``i`` gets the ``i``-th largest degree."""
    return {i: x for i, x in enumerate(d, start=1)}


def _check_assignment(d: DegreeSequence, assignment: Mapping[int, int]) -> dict[int, int]:
    assignment = dict(assignment)
    if sorted(assignment) != list(range(1, d.n + 1)):
        raise InvalidAssignment(f"assignment must cover labels 1..{d.n} exactly")
    if sorted(assignment.values(), reverse=True) != list(d):
        raise InvalidAssignment("assigned degrees do not match the degree sequence")
    return assignment


def trees_with_degree_sequence(
    d: Sequence[int], assignment: Mapping[int, int] | str = "all"
) -> Iterator[Tree]:
    """Every labeled tree where vertex ``u`` has degree ``assignment[u]``.

    With ``"all"`` the canonical assignment is used. Every isomorphism class
    realizing ``d`` appears at least once, which is what min/max searches need.
    """
    d = validate_degree_sequence(d)
    amap = canonical_assignment(d) if assignment == "all" else _check_assignment(d, assignment)
    n = d.n
    for code in multiset_permutations(_prufer_multiset(amap)):
        yield _decode(n, code)


# Chunked class scans ------------------------------------------------------


@dataclass(frozen=True)
class ClassTable:
    """Result of scanning an enumeration space.

    ``classes`` maps each canonical code to its CEI; ``labeled_count`` is the
    number of labeled trees visited.
    """

    classes: dict[bytes, Fraction]
    labeled_count: int

    def sorted_codes(self) -> list[bytes]:
        return sorted(self.classes)


def _scan_degree_chunk(args: tuple[int, tuple[int, ...], int, int]) -> tuple[dict[bytes, Fraction], int]:
    n, multiset, start, stop = args
    out: dict[bytes, Fraction] = {}
    seen = 0
    for code in multiset_permutations(multiset, start, stop):
        t = _decode(n, code)
        seen += 1
        key = canonical_code(t)
        if key not in out:
            out[key] = cei(t)
    return out, seen


def _scan_prufer_chunk(args: tuple[int, int, int]) -> tuple[dict[bytes, Fraction], int]:
    n, start, stop = args
    out: dict[bytes, Fraction] = {}
    m = n - 2
    digits = []
    r = start
    for _ in range(m):
        digits.append(r % n)
        r //= n
    digits.reverse()
    seen = 0
    for _ in range(stop - start):
        t = _decode(n, [x + 1 for x in digits])
        seen += 1
        key = canonical_code(t)
        if key not in out:
            out[key] = cei(t)
        i = m - 1
        while i >= 0:
            digits[i] += 1
            if digits[i] < n:
                break
            digits[i] = 0
            i -= 1
    return out, seen


def _split(total: int, pieces: int) -> list[tuple[int, int]]:
    pieces = max(1, min(pieces, total))
    step = -(-total // pieces)
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


def _run(fn, tasks: list, jobs: int) -> ClassTable:
    if jobs <= 1 or len(tasks) <= 1:
        results = map(fn, tasks)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(fn, tasks))
    merged: dict[bytes, Fraction] = {}
    count = 0
    for part, seen in results:
        merged.update(part)
        count += seen
    return ClassTable(merged, count)


def _degree_tasks(d: DegreeSequence, jobs: int) -> list[tuple]:
    multiset = tuple(_prufer_multiset(canonical_assignment(d)))
    total = labeled_tree_count(d)
    # Several chunks per worker keeps the pool busy when chunk costs differ.
    pieces = 1 if jobs <= 1 else 4 * jobs
    return [(d.n, multiset, lo, hi) for lo, hi in _split(total, pieces)]


def scan_degree_sequence(d: Sequence[int], jobs: int = 1) -> ClassTable:
    """Classes and CEIs of all labeled trees with degree sequence ``d``."""
    d = validate_degree_sequence(d)
    return _run(_scan_degree_chunk, _degree_tasks(d, jobs), jobs)


def scan_prufer_space(n: int, jobs: int = 1) -> ClassTable:
    """Scan all ``n**(n-2)`` labeled trees. Slow beyond n = 8 in pure Python."""
    if n < 2:
        raise TooSmall(f"n must be >= 2, got {n}")
    total = n ** (n - 2)
    pieces = 1 if jobs <= 1 else 4 * jobs
    return _run(_scan_prufer_chunk, [(n, lo, hi) for lo, hi in _split(total, pieces)], jobs)


def scan_all_classes(n: int, jobs: int = 1, method: str = "degree") -> ClassTable:
    """Every isomorphism class on ``n`` vertices with its CEI.

    ``method="degree"`` walks each degree sequence under its canonical
    assignment; ``method="prufer"`` walks the full Prüfer space.
    """
    if n < 2:
        raise TooSmall(f"n must be >= 2, got {n}")
    if n > MAX_N:
        raise TooLarge(f"n={n} exceeds the hard cap {MAX_N}")
    if method == "prufer":
        return scan_prufer_space(n, jobs)
    if method != "degree":
        raise ValueError(f"unknown method {method!r}")
    tasks = [task for d in all_degree_sequences(n) for task in _degree_tasks(d, jobs)]
    return _run(_scan_degree_chunk, tasks, jobs)


_CLASS_CACHE: dict[int, ClassTable] = {}


def class_table(n: int, jobs: int = 1) -> ClassTable:
    """Cached :func:`scan_all_classes`; the result does not depend on ``jobs``."""
    if n not in _CLASS_CACHE:
        _CLASS_CACHE[n] = scan_all_classes(n, jobs)
    return _CLASS_CACHE[n]


def all_trees(n: int, jobs: int = 1) -> Iterator[tuple[bytes, Tree]]:
    """One ``(canonical code, representative)`` per isomorphism class, by code."""
    table = class_table(n, jobs)
    for code in table.sorted_codes():
        yield code, tree_from_code(code)


def tree_class_count(n: int, jobs: int = 1) -> int:
    """Number of unlabeled trees on ``n`` vertices.

    ``n = 1`` counts the single-vertex tree, which :class:`Tree` itself does
    not represent.
    """
    if n == 1:
        return 1
    return len(class_table(n, jobs).classes)


def trees_with_branching(n: int, r: int, jobs: int = 1) -> Iterator[Tree]:
    """Representatives of the classes with exactly ``r`` vertices of degree >= 3.

    ``r = 0`` is accepted and yields only the path.
    """
    if not 0 <= r or 2 * r > n - 2:
        raise BadR(f"r={r} outside 0..n/2-1 for n={n}")
    for _, t in all_trees(n, jobs):
        if branching_count(t) == r:
            yield t
