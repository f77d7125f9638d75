"""Circulant graphs Cay(Z_n, S) with BFS-based structural queries.

Adjacency is never materialized: a vertex v is adjacent to v + s (mod n) for
s in the connection set, so BFS works straight off the residue list.  The
heavy scans live in _kernels and run under numba or numpy depending on the
environment.
"""

from dataclasses import dataclass, field
from math import gcd

import numpy as np

from . import _kernels
from .errors import DegenerateCut, Disconnected


@dataclass(frozen=True)
class Circulant:
    """Cay(Z_n, conn): conn is symmetric (conn = -conn) and excludes 0."""

    n: int
    conn: tuple[int, ...]
    _conn_arr: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 3:
            raise ValueError(f"modulus {self.n} must be >= 3")
        conn = tuple(sorted(set(self.conn)))
        if not conn:
            raise ValueError("connection set is empty")
        for s in conn:
            if not 1 <= s < self.n:
                raise ValueError(f"connection element {s} outside [1, {self.n})")
        if any((self.n - s) % self.n not in set(conn) for s in conn):
            raise ValueError("connection set is not symmetric under negation")
        object.__setattr__(self, "conn", conn)
        object.__setattr__(self, "_conn_arr", np.array(conn, dtype=np.int64))

    @property
    def degree(self) -> int:
        return len(self.conn)

    def _distances(self, source: int, removed=()) -> np.ndarray:
        blocked = np.zeros(self.n, dtype=np.bool_)
        for v in removed:
            blocked[v] = True
        return _kernels.bfs_distances(self.n, self._conn_arr, source, blocked)

    def neighbors(self, v: int) -> list[int]:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} outside [0, {self.n})")
        return sorted((v + s) % self.n for s in self.conn)

    def is_connected(self) -> bool:
        dist = self._distances(0)
        return bool((dist >= 0).all())

    def is_connected_gcd(self) -> bool:
        """Arithmetic connectivity criterion: gcd(n, s_1, ..., s_k) = 1."""
        g = self.n
        for s in self.conn:
            g = gcd(g, s)
        return g == 1

    def is_independent_set(self, members) -> bool:
        """No two members adjacent, i.e. no pairwise difference lies in conn."""
        conn = set(self.conn)
        members = list(members)
        for i, u in enumerate(members):
            for v in members[i + 1 :]:
                if (u - v) % self.n in conn:
                    return False
        return True

    def is_vertex_cut(self, members) -> bool:
        """Does removing `members` disconnect the graph?  Requires a connected
        graph and at least two surviving vertices."""
        removed = set(members)
        if not self.is_connected():
            raise Disconnected("vertex-cut query on a disconnected graph")
        if self.n - len(removed) < 2:
            raise DegenerateCut("removal leaves fewer than two vertices")
        if not removed:
            return False
        start = next(v for v in range(self.n) if v not in removed)
        dist = self._distances(start, removed)
        return int((dist >= 0).sum()) != self.n - len(removed)

    def diameter(self) -> int:
        """Eccentricity of vertex 0; valid for the whole graph by
        vertex-transitivity."""
        dist = self._distances(0)
        if (dist < 0).any():
            raise Disconnected("diameter of a disconnected graph")
        return int(dist.max())

    def eccentricity(self, v: int) -> int:
        dist = self._distances(v)
        if (dist < 0).any():
            raise Disconnected("eccentricity of a disconnected graph")
        return int(dist.max())

    def reachable_from(self, source: int, removed=()) -> set[int]:
        dist = self._distances(source, removed)
        return set(np.flatnonzero(dist >= 0).tolist())


def iso_multiplier(g: Circulant, g2: Circulant):
    """Some unit sigma with sigma * g.conn = g2.conn setwise, or None.

    Every subset of Z_n is a CI-subset, so a multiplier exists if and only if
    the two circulants are isomorphic.  Exhaustive scan over units; intended
    for desk-scale n.
    """
    if g.n != g2.n:
        raise ValueError(f"moduli differ: {g.n} != {g2.n}")
    if g.degree != g2.degree:
        return None
    sigma = _kernels.multiplier_scan(g.n, g._conn_arr, g2._conn_arr)
    return int(sigma) if sigma else None
