"""Complete rotations: verification, orbit decomposition, gossip certificates.

A complete rotation of a circulant is a unit w whose multiplication action
fixes the connection set S setwise and permutes it in a single |S|-cycle.
Its fixed points are the nonzero residues lying in <w>-orbits shorter than
the order of w; the free part consists of the full-length orbits.
"""

from dataclasses import dataclass
from math import ceil, gcd

from .circulant import Circulant
from .errors import NotARotation, NotAUnit
from .numtheory import multiplicative_order


@dataclass(frozen=True)
class RotationReport:
    n: int
    w: int
    d: int  # order of w mod n
    orbits: tuple[tuple[int, ...], ...]  # partition of Z_n \ {0}
    fixed: tuple[int, ...]  # union of short orbits
    free: tuple[int, ...]  # union of length-d orbits


def _require_unit(n: int, w: int):
    if gcd(w % n, n) != 1:
        raise NotAUnit(f"{w} is not a unit mod {n}")


def is_complete_rotation(g: Circulant, w: int) -> bool:
    """Does multiplication by w fix conn setwise and drive it in one cycle?"""
    _require_unit(g.n, w)
    conn = set(g.conn)
    if {w * s % g.n for s in conn} != conn:
        return False
    s = g.conn[0]
    orbit = set()
    x = s
    for _ in range(len(conn)):
        orbit.add(x)
        x = x * w % g.n
    return orbit == conn


def rotation_report(n: int, w: int) -> RotationReport:
    """Decompose Z_n \\ {0} into <w>-orbits and split off the fixed points."""
    _require_unit(n, w)
    w %= n
    d = multiplicative_order(w, n)
    seen = [False] * n
    orbits = []
    fixed = []
    free = []
    for v in range(1, n):
        if seen[v]:
            continue
        orbit = []
        x = v
        while not seen[x]:
            seen[x] = True
            orbit.append(x)
            x = x * w % n
        orbits.append(tuple(orbit))
        (free if len(orbit) == d else fixed).extend(orbit)
    return RotationReport(n, w, d, tuple(orbits), tuple(sorted(fixed)), tuple(sorted(free)))


def find_all_rotations(g: Circulant) -> list[int]:
    """Exhaustive unit scan; empty result means the graph is not rotational.

    Restricting to units is sound: a complete rotation of a circulant is an
    automorphism of Z_n, and those are exactly the unit multiplications.
    """
    return [w for w in range(1, g.n) if gcd(w, g.n) == 1 and is_complete_rotation(g, w)]


def cayley_map_embeddable(g: Circulant) -> bool:
    """A circulant embeds as a balanced regular Cayley map iff it is
    rotational."""
    return bool(find_all_rotations(g))


@dataclass(frozen=True)
class GossipCertificate:
    """Evidence that the gossiping time of g meets the rotation-based bound.

    When the fixed point set is empty the bound is the exact trivial value
    (n-1)/d; otherwise independence plus non-cut certify ceil((n-1)/d).
    """

    n: int
    w: int
    d: int
    fixed: tuple[int, ...]
    independent: bool
    vertex_cut: bool
    holds: bool
    bound: int
    exact: bool


def gossip_certificate(g: Circulant, w: int) -> GossipCertificate:
    if not is_complete_rotation(g, w):
        raise NotARotation(f"{w} is not a complete rotation of Cay(Z_{g.n}, S)")
    rep = rotation_report(g.n, w)
    if not rep.fixed:
        return GossipCertificate(
            n=g.n,
            w=rep.w,
            d=rep.d,
            fixed=(),
            independent=True,
            vertex_cut=False,
            holds=True,
            bound=(g.n - 1) // rep.d,
            exact=True,
        )
    independent = g.is_independent_set(rep.fixed)
    vertex_cut = g.is_vertex_cut(rep.fixed)
    holds = independent and not vertex_cut
    return GossipCertificate(
        n=g.n,
        w=rep.w,
        d=rep.d,
        fixed=rep.fixed,
        independent=independent,
        vertex_cut=vertex_cut,
        holds=holds,
        bound=ceil((g.n - 1) / rep.d),
        exact=False,
    )
