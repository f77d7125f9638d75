"""HARTS (hexagonal mesh) networks and the degree-6 circulants TL_{n_k}.

TL_{n_k} = Cay(Z_{n_k}, <3k+2>) with n_k = 3k^2 + 3k + 1; 3k+2 solves
x^2 - x + 1 = 0 mod n_k, so the subgroup is {+-1, +-(3k+1), +-(3k+2)}.
The size-k hexagonal mesh lives on n_{k-1} = 3k^2 - 3k + 1 vertices with
connection set {+-(k-1), +-k, +-(2k-1)} and is isomorphic to TL_{n_{k-1}}
via multiplication by 3k.
"""

from .circulant import Circulant
from .errors import SizeTooSmall


def tl_vertex_count(k: int) -> int:
    return 3 * k * k + 3 * k + 1


def _check_size(k: int):
    if k < 2:
        raise SizeTooSmall(f"size k = {k} must be >= 2")


def _tl_conn(k: int) -> set[int]:
    n = tl_vertex_count(k)
    a = 3 * k + 2
    return {1, n - 1, a % n, (n - a) % n, a - 1, n - (a - 1)}


def tl_graph(k: int) -> Circulant:
    _check_size(k)
    return Circulant(tl_vertex_count(k), tuple(sorted(_tl_conn(k))))


def harts_graph(k: int) -> Circulant:
    _check_size(k)
    n = tl_vertex_count(k - 1)
    conn = set()
    for s in (k - 1, k, 2 * k - 1):
        conn.add(s % n)
        conn.add((n - s) % n)
    return Circulant(n, tuple(sorted(conn)))


def harts_iso_tl(k: int) -> int:
    """Multiplier 3k mapping the size-k mesh onto TL_{n_{k-1}}, verified
    setwise on the connection sets."""
    _check_size(k)
    n = tl_vertex_count(k - 1)
    sigma = (3 * k) % n
    mapped = {sigma * s % n for s in harts_graph(k).conn}
    if mapped != _tl_conn(k - 1):
        raise AssertionError(f"multiplier {sigma} failed to map the mesh onto TL")
    return sigma


def tl_diameter_check(k: int) -> bool:
    """BFS check that TL_{n_k} has diameter exactly k."""
    return tl_graph(k).diameter() == k
