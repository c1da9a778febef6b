"""Degree sequences, small simple graphs, and the exact second Zagreb index."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, List, Sequence, Tuple, Union

from .errors import (
    CapacityError,
    ConsistencyError,
    InvalidGraphError,
    NotGraphicalError,
)

Edge = Tuple[int, int]

DEFAULT_VERTEX_CAP = 8


def is_graphical(degrees: Sequence[int]) -> bool:
    """Erdős–Gallai test.

    The sequence is sorted nonincreasingly before testing, so callers may pass
    any order. Negative entries make the answer ``False``.
    """
    d = sorted((int(x) for x in degrees), reverse=True)
    if not d:
        return True
    if d[-1] < 0 or sum(d) % 2:
        return False
    n = len(d)
    prefix = 0
    for k in range(1, n + 1):
        prefix += d[k - 1]
        rhs = k * (k - 1) + sum(min(x, k) for x in d[k:])
        if prefix > rhs:
            return False
    return True


@dataclass(frozen=True)
class DegreeSequence:
    """Nonincreasing degrees of a simple graph with no isolated vertices."""

    degrees: Tuple[int, ...]

    def __post_init__(self):
        d = tuple(int(x) for x in self.degrees)
        object.__setattr__(self, "degrees", d)
        if not d:
            raise NotGraphicalError("empty degree sequence")
        if any(a < b for a, b in zip(d, d[1:])):
            raise NotGraphicalError(f"degrees must be nonincreasing, got {list(d)}")
        if d[-1] < 1:
            raise NotGraphicalError(f"every degree must be >= 1, got {list(d)}")
        if sum(d) % 2:
            raise NotGraphicalError(f"degree sum {sum(d)} is odd")
        if d[0] > len(d) - 1:
            raise NotGraphicalError(f"max degree {d[0]} exceeds n - 1 = {len(d) - 1}")
        if not is_graphical(d):
            raise NotGraphicalError(f"{list(d)} fails the Erdős–Gallai inequalities")

    @classmethod
    def from_unsorted(cls, degrees: Iterable[int]) -> "DegreeSequence":
        return cls(tuple(sorted((int(x) for x in degrees), reverse=True)))

    @property
    def n(self) -> int:
        return len(self.degrees)

    @property
    def edge_count(self) -> int:
        return sum(self.degrees) // 2

    @property
    def pendant_count(self) -> int:
        return sum(1 for x in self.degrees if x == 1)

    def __iter__(self):
        return iter(self.degrees)

    def __len__(self):
        return len(self.degrees)


class SimpleGraph:
    """Undirected simple graph on vertices ``0..n-1``.

    Connectivity is checked at construction unless ``require_connected=False``.
    """

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges: Iterable[Sequence[int]], require_connected: bool = True):
        if n < 1:
            raise InvalidGraphError(f"a graph needs at least one vertex, got n={n}")
        canon = []
        for e in edges:
            u, v = (int(x) for x in e)
            if u == v:
                raise InvalidGraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidGraphError(f"edge ({u}, {v}) references a vertex outside 0..{n - 1}")
            canon.append((u, v) if u < v else (v, u))
        edge_set = frozenset(canon)
        if len(edge_set) != len(canon):
            raise InvalidGraphError("duplicate edge")
        self.n = n
        self.edges = edge_set
        self._adj = [[] for _ in range(n)]
        for u, v in edge_set:
            self._adj[u].append(v)
            self._adj[v].append(u)
        if require_connected and not self.is_connected():
            raise InvalidGraphError("graph is not connected")

    def degrees(self) -> List[int]:
        """Degree of each vertex, indexed by vertex."""
        return [len(a) for a in self._adj]

    def is_connected(self) -> bool:
        seen = [False] * self.n
        seen[0] = True
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for v in self._adj[u]:
                if not seen[v]:
                    seen[v] = True
                    queue.append(v)
        return all(seen)

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    def __eq__(self, other):
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"SimpleGraph(n={self.n}, edges={self.sorted_edges()})"


def degree_sequence_of(g: SimpleGraph) -> DegreeSequence:
    return DegreeSequence.from_unsorted(g.degrees())


def edge_sum_vector(g: SimpleGraph) -> List[int]:
    """``d_u + d_v`` for every edge, sorted nonincreasingly."""
    deg = g.degrees()
    return sorted((deg[u] + deg[v] for u, v in g.edges), reverse=True)


def zagreb_exact(g: SimpleGraph) -> int:
    """Second Zagreb index: sum over edges of the product of endpoint degrees.

    Also evaluates ``(sum_edges (d_u + d_v)^2 - sum_v d_v^3) / 2`` and raises
    :class:`ConsistencyError` if the two disagree.
    """
    deg = g.degrees()
    direct = sum(deg[u] * deg[v] for u, v in g.edges)
    squares = sum((deg[u] + deg[v]) ** 2 for u, v in g.edges)
    cubes = sum(x ** 3 for x in deg)
    twice = squares - cubes
    if twice != 2 * direct:
        raise ConsistencyError(f"edge-product sum {direct} != ({squares} - {cubes}) / 2")
    return direct


def enumerate_realizations(
    seq: Union[DegreeSequence, Sequence[int]], vertex_cap: int = DEFAULT_VERTEX_CAP
) -> List[SimpleGraph]:
    """All connected labelled simple graphs where vertex ``i`` has degree ``seq[i]``.

    Graphs are distinct as edge sets, not up to isomorphism. Two pendant
    vertices can never be joined here when ``n >= 3``: that edge would be a
    whole component. A plain sequence that is not graphical yields ``[]``.
    """
    if not isinstance(seq, DegreeSequence):
        if not is_graphical(seq) or any(int(x) < 1 for x in seq):
            return []
        seq = DegreeSequence.from_unsorted(seq)
    n = seq.n
    if n > vertex_cap:
        raise CapacityError(f"n = {n} exceeds the enumeration cap {vertex_cap}")

    remaining = list(seq.degrees)
    edges: List[Edge] = []
    found: List[SimpleGraph] = []

    def place(u: int) -> None:
        while u < n and remaining[u] == 0:
            u += 1
        if u == n:
            g = SimpleGraph(n, edges, require_connected=False)
            if g.is_connected():
                found.append(g)
            return
        need = remaining[u]
        # all edges to lower-indexed vertices are already decided
        pool = [v for v in range(u + 1, n) if remaining[v] > 0]
        if len(pool) < need:
            return
        remaining[u] = 0
        for nbrs in combinations(pool, need):
            for v in nbrs:
                remaining[v] -= 1
                edges.append((u, v))
            place(u + 1)
            for v in nbrs:
                remaining[v] += 1
                edges.pop()
        remaining[u] = need

    place(0)
    return found
