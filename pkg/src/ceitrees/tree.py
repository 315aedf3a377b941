"""Labeled trees, eccentricities and the connective eccentricity index.

Vertices are the integers ``1..n``. A :class:`Tree` is immutable; build one
with :func:`build_tree`, which validates the edge list.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import BadLabel, BadVertex, NotATree, TooSmall

# Exact CEI values. ``Fraction`` is always stored reduced with a positive
# denominator and has arbitrary-precision numerator/denominator.
Rational = Fraction


@dataclass(frozen=True)
class Tree:
    """A labeled tree on vertices ``1..n``.

    ``adj[u - 1]`` is the sorted tuple of neighbours of ``u``. Instances are
    hashable and compare equal only when they are the same *labeled* tree;
    use :func:`canonical_code` for isomorphism.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]

    def neighbors(self, u: int) -> tuple[int, ...]:
        return self.adj[u - 1]

    def degree(self, u: int) -> int:
        return len(self.adj[u - 1])

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def degrees(self) -> tuple[int, ...]:
        """Degrees in label order."""
        return tuple(len(a) for a in self.adj)

    def degree_sequence(self) -> tuple[int, ...]:
        """Degrees sorted non-increasingly."""
        return tuple(sorted(self.degrees, reverse=True))

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in self.vertices for v in self.adj[u - 1] if u < v]

    def check_vertex(self, u: int) -> None:
        if not isinstance(u, int) or not 1 <= u <= self.n:
            raise BadVertex(f"vertex {u!r} not in 1..{self.n}")

    def relabel(self, perm: Sequence[int]) -> Tree:
        """Return the tree with vertex ``u`` renamed to ``perm[u - 1]``."""
        return _from_edges_unchecked(
            self.n, [(perm[u - 1], perm[v - 1]) for u, v in self.edges()]
        )

    def __repr__(self) -> str:
        return f"Tree(n={self.n}, edges={self.edges()})"


def _from_edges_unchecked(n: int, edges: Iterable[tuple[int, int]]) -> Tree:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u - 1].append(v)
        adj[v - 1].append(u)
    return Tree(n, tuple(tuple(sorted(a)) for a in adj))


def _from_adjacency_unchecked(adj: list[list[int]]) -> Tree:
    return Tree(len(adj), tuple(tuple(sorted(a)) for a in adj))


def build_tree(n: int, edges: Iterable[tuple[int, int]]) -> Tree:
    """Validate ``edges`` as a tree on ``1..n`` and build it.

    Raises :class:`TooSmall` for ``n < 2``, :class:`BadLabel` for labels
    outside ``1..n`` and :class:`NotATree` for a wrong edge count, a
    self-loop, a repeated edge, a cycle or a disconnected graph.
    """
    if n < 2:
        raise TooSmall(f"a tree needs at least 2 vertices, got n={n}")
    edges = [tuple(e) for e in edges]
    parent = list(range(n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, e in enumerate(edges):
        if len(e) != 2:
            raise NotATree(f"edge {e!r} is not a pair", i)
        u, v = e
        for x in (u, v):
            if not isinstance(x, int) or not 1 <= x <= n:
                raise BadLabel(f"label {x!r} out of range 1..{n}", i)
        if u == v:
            raise NotATree(f"self-loop at {u}", i)
        ru, rv = find(u), find(v)
        if ru == rv:
            raise NotATree(f"edge ({u}, {v}) closes a cycle or repeats an edge", i)
        parent[ru] = rv
    if len(edges) != n - 1:
        raise NotATree(f"expected {n - 1} edges for n={n}, got {len(edges)}")
    return _from_edges_unchecked(n, edges)


def path_tree(n: int) -> Tree:
    return build_tree(n, [(i, i + 1) for i in range(1, n)])


def star_tree(n: int) -> Tree:
    """Star on ``n`` vertices with centre 1."""
    return build_tree(n, [(1, i) for i in range(2, n + 1)])


def bfs_distances(t: Tree, source: int) -> list[int]:
    """Distances from ``source``; index ``u - 1`` holds ``d(source, u)``."""
    dist = [-1] * t.n
    dist[source - 1] = 0
    queue = deque([source])
    adj = t.adj
    while queue:
        u = queue.popleft()
        du = dist[u - 1] + 1
        for v in adj[u - 1]:
            if dist[v - 1] < 0:
                dist[v - 1] = du
                queue.append(v)
    return dist


def eccentricities(t: Tree) -> tuple[int, ...]:
    """Eccentricity of every vertex, in label order.

    In a tree, every vertex is farthest from one of the two ends of any
    diameter path, so three BFS sweeps suffice.
    """
    d0 = bfs_distances(t, 1)
    a = d0.index(max(d0)) + 1
    da = bfs_distances(t, a)
    b = da.index(max(da)) + 1
    db = bfs_distances(t, b)
    return tuple(x if x > y else y for x, y in zip(da, db))


def diameter(t: Tree) -> int:
    return max(eccentricities(t))


def branching_count(t: Tree) -> int:
    """Number of vertices of degree at least 3."""
    return sum(1 for a in t.adj if len(a) >= 3)


def cei(t: Tree) -> Fraction:
    """Connective eccentricity index: sum of ``deg(u) / ecc(u)`` over vertices."""
    if t.n < 2:
        raise TooSmall("CEI is undefined for a single vertex")
    ecc = eccentricities(t)
    # Group by eccentricity so only a handful of Fractions are built.
    by_ecc: dict[int, int] = {}
    for a, e in zip(t.adj, ecc):
        by_ecc[e] = by_ecc.get(e, 0) + len(a)
    return sum((Fraction(s, e) for e, s in by_ecc.items()), Fraction(0))


def cei_edge_form(t: Tree) -> Fraction:
    """CEI as the sum over edges ``uv`` of ``1/ecc(u) + 1/ecc(v)``."""
    if t.n < 2:
        raise TooSmall("CEI is undefined for a single vertex")
    ecc = eccentricities(t)
    total = Fraction(0)
    for u, v in t.edges():
        total += Fraction(1, ecc[u - 1]) + Fraction(1, ecc[v - 1])
    return total


# Canonical codes ----------------------------------------------------------


def centroids(t: Tree) -> list[int]:
    """The one or two centroid vertices, in label order."""
    n = t.n
    order, parent = _dfs_order(t, 1)
    size = [1] * (n + 1)
    for u in reversed(order):
        p = parent[u]
        if p:
            size[p] += size[u]
    result = []
    for u in order:
        heaviest = n - size[u]
        for v in t.adj[u - 1]:
            if v != parent[u]:
                heaviest = max(heaviest, size[v])
        if 2 * heaviest <= n:
            result.append(u)
    return sorted(result)


def _dfs_order(t: Tree, root: int) -> tuple[list[int], list[int]]:
    parent = [0] * (t.n + 1)
    order = []
    stack = [root]
    parent[root] = 0
    seen = [False] * (t.n + 1)
    seen[root] = True
    while stack:
        u = stack.pop()
        order.append(u)
        for v in t.adj[u - 1]:
            if not seen[v]:
                seen[v] = True
                parent[v] = u
                stack.append(v)
    return order, parent


def rooted_code(t: Tree, root: int) -> bytes:
    """AHU encoding of ``t`` rooted at ``root``: ``(`` + sorted child codes + ``)``."""
    order, parent = _dfs_order(t, root)
    codes: list[bytes] = [b""] * (t.n + 1)
    for u in reversed(order):
        children = sorted(codes[v] for v in t.adj[u - 1] if v != parent[u])
        codes[u] = b"(" + b"".join(children) + b")"
    return codes[root]


def canonical_code(t: Tree) -> bytes:
    """Isomorphism-invariant code of ``t``.

    Two trees get the same code iff they are isomorphic. The tree is rooted at
    its centroid; with two centroids the smaller of the two codes is taken.
    """
    return min(rooted_code(t, c) for c in centroids(t))


def tree_from_code(code: bytes) -> Tree:
    """Rebuild a tree from a rooted code, labeling vertices in preorder.

    Applied to :func:`canonical_code` output this yields one fixed labeled
    representative per isomorphism class.
    """
    edges = []
    stack: list[int] = []
    label = 0
    for ch in code:
        if ch == ord("("):
            label += 1
            if stack:
                edges.append((stack[-1], label))
            stack.append(label)
        elif ch == ord(")"):
            if not stack:
                raise ValueError("unbalanced code")
            stack.pop()
        else:
            raise ValueError(f"unexpected byte {ch!r} in code")
    if stack:
        raise ValueError("unbalanced code")
    return build_tree(label, edges)


def is_caterpillar(t: Tree) -> bool:
    """True when deleting all leaves leaves a path (possibly empty or one vertex)."""
    inner = [u for u in t.vertices if t.degree(u) > 1]
    keep = set(inner)
    inner_deg = [sum(1 for v in t.neighbors(u) if v in keep) for u in inner]
    return all(d <= 2 for d in inner_deg)
