"""Extremal tree constructions and the two CEI-monotone transformations.

Labels are assigned deterministically so that every construction is
reproducible bit for bit:

* greedy caterpillar: spine ``1..k`` in path order, then pendants spine
  vertex by spine vertex;
* level-greedy / greedy tree: breadth-first, left to right, root ``1``;
* transformations: new vertices get ``|q|+1, |q|+2, ...`` in the order they
  are attached.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .degseq import (
    DegreeSequence,
    LevelDegreeSequence,
    validate_degree_sequence,
    validate_level_degree_sequence,
)
from .errors import BadA, BadPQ, BadR
from .tree import Tree, build_tree, path_tree, star_tree


def greedy_caterpillar(d: Sequence[int]) -> Tree:
    """Caterpillar minimizing CEI for degree sequence ``d``.

    The spine is ``z_1..z_k`` where ``k`` counts entries above 1. Spine
    positions are ranked by eccentricity within the spine path (descending,
    ties broken by position) and receive the large degrees in non-increasing
    order, so the two ends get the two largest degrees and the middle the
    smallest.
    """
    d = validate_degree_sequence(d)
    n = d.n
    big = [x for x in d if x > 1]
    k = len(big)
    if k == 0:
        return path_tree(2)
    if k == 1:
        return star_tree(n)
    spine_ecc = [max(i, k - 1 - i) for i in range(k)]
    order = sorted(range(k), key=lambda i: (-spine_ecc[i], i))
    phi = [0] * k
    for pos, deg in zip(order, big):
        phi[pos] = deg
    edges = [(i, i + 1) for i in range(1, k)]
    nxt = k + 1
    for i in range(k):
        pendants = phi[i] - (1 if i in (0, k - 1) else 2)
        for _ in range(pendants):
            edges.append((i + 1, nxt))
            nxt += 1
    return build_tree(n, edges)


def level_greedy_tree(levels: Iterable[Iterable[int]]) -> tuple[Tree, int]:
    """Level-greedy rooted tree for a level-degree sequence.

    Returns ``(tree, root)``. Within each level vertices are ordered by
    non-increasing degree; walking a level left to right, a vertex with
    down-degree ``c`` adopts the next ``c`` unattached vertices of the level
    below.
    """
    L = validate_level_degree_sequence(levels)
    first = [1]
    for lv in L.levels[:-1]:
        first.append(first[-1] + len(lv))
    edges = []
    for i in range(len(L.levels) - 1):
        child = first[i + 1]
        for j, deg in enumerate(L.levels[i]):
            down = deg if i == 0 else deg - 1
            for _ in range(down):
                edges.append((first[i] + j, child))
                child += 1
    return build_tree(L.n, edges), 1


def greedy_levels(d: Sequence[int]) -> LevelDegreeSequence:
    """Level-degree sequence of the greedy tree for ``d``.

    Levels are filled with the largest remaining degrees; level sizes follow
    from the total down-degree of the level above.
    """
    d = validate_degree_sequence(d)
    degs = list(d)
    levels = [(degs[0],)]
    pos = 1
    size = degs[0]
    while pos < len(degs):
        levels.append(tuple(degs[pos : pos + size]))
        pos += size
        size = sum(x - 1 for x in levels[-1])
    return validate_level_degree_sequence(levels)


def greedy_tree(d: Sequence[int]) -> Tree:
    """Greedy tree for ``d``: CEI-maximal among trees with this degree sequence."""
    tree, _ = level_greedy_tree(greedy_levels(d))
    return tree


def _check_r(n: int, r: int) -> None:
    if r < 1 or 2 * r > n - 2:
        raise BadR(f"need 1 <= r <= n/2 - 1, got n={n}, r={r}")


def f_sequence(n: int, r: int) -> DegreeSequence:
    _check_r(n, r)
    return validate_degree_sequence([3] * r + [2] * (n - 2 * r - 2) + [1] * (r + 2))


def b_sequence(n: int, r: int) -> DegreeSequence:
    _check_r(n, r)
    return validate_degree_sequence([n - 2 * r + 1] + [3] * (r - 1) + [1] * (n - r))


def f_tree(n: int, r: int) -> Tree:
    """F(n, r): greedy caterpillar with ``r`` threes, then twos, then ``r + 2`` ones."""
    return greedy_caterpillar(f_sequence(n, r))


def b_tree(n: int, r: int) -> Tree:
    """B(n, r): greedy tree of ``(n-2r+1, 3, ..., 3, 1, ..., 1)``; ``B(n, 1)`` is the star."""
    return greedy_tree(b_sequence(n, r))


# Transformations ----------------------------------------------------------


def transform_a(q: Tree, u: int, a: int) -> tuple[Tree, Tree]:
    """Return ``(g1, g2)``.

    ``g1`` hangs a star ``S_{a+1}`` from ``u`` by its centre; ``g2`` instead
    attaches ``a + 1`` pendant vertices to ``u``. CEI(g2) >= CEI(g1).
    """
    q.check_vertex(u)
    if not isinstance(a, int) or a < 1:
        raise BadA(f"a must be >= 1, got {a!r}")
    base = q.edges()
    m = q.n
    v = m + 1
    g1 = base + [(u, v)] + [(v, v + i) for i in range(1, a + 1)]
    g2 = base + [(u, m + i) for i in range(1, a + 2)]
    return build_tree(m + a + 1, g1), build_tree(m + a + 1, g2)


def _attach_paths(g: Tree, w: int, lengths: Sequence[int]) -> Tree:
    edges = g.edges()
    nxt = g.n + 1
    for length in lengths:
        prev = w
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return build_tree(nxt - 1, edges)


def transform_b(g: Tree, w: int, p: int, q: int) -> tuple[Tree, Tree]:
    """Return ``(G(p, q), G(p+1, q-1))``: pendant paths of the given lengths at ``w``.

    CEI(G(p, q)) >= CEI(G(p+1, q-1)) whenever ``p >= q >= 1``.
    """
    g.check_vertex(w)
    if q < 1 or p < q:
        raise BadPQ(f"need p >= q >= 1, got p={p}, q={q}")
    return _attach_paths(g, w, (p, q)), _attach_paths(g, w, (p + 1, q - 1))
