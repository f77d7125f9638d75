"""The prime-power family Gamma_{q,r} = Cay(Z_q, <(p-1)^(p^r)>), q = p^e.

For an odd prime p, e >= 3 and 0 <= r <= e-1 this is a connected rotational
circulant of degree 2 p^(e-r-1).  Its rotation's fixed point set F is the
nonzero multiples of p, always independent, and a vertex-cut exactly when
r >= 1 (the r >= 1 instances generalize Lichiardopol's counterexample; the
r = 0 instances certify the gossip bound).
"""

from dataclasses import dataclass

from .circulant import Circulant
from .errors import ExponentTooSmall, NotACut
from .numtheory import multiplicative_order
from .rotation import rotation_report


@dataclass(frozen=True)
class GammaSpec:
    p: int
    e: int
    r: int
    q: int  # p**e
    h: int  # (p-1)**(p**r) mod q
    degree: int  # 2 * p**(e-r-1)


def _validate(p: int, e: int, r: int):
    if p == 2 or p < 3:
        raise ValueError(f"p = {p} must be an odd prime")
    if e < 3:
        raise ExponentTooSmall(f"e = {e}; the family needs e >= 3")
    if not 0 <= r <= e - 1:
        raise ValueError(f"r = {r} outside [0, {e - 1}]")


def build_gamma(p: int, e: int, r: int) -> tuple[GammaSpec, Circulant]:
    """Construct Gamma_{q,r}.  The exponent p^r is handled inside pow, so
    (p-1)^(p^r) is never materialized as an integer."""
    _validate(p, e, r)
    q = p**e
    h = pow(p - 1, p**r, q)
    spec = GammaSpec(p, e, r, q, h, 2 * p ** (e - r - 1))
    conn = []
    x = h
    while x != 1:
        conn.append(x)
        x = x * h % q
    conn.append(1)
    return spec, Circulant(q, tuple(sorted(conn)))


def connection_closed_form(spec: GammaSpec) -> tuple[int, ...]:
    """The subgroup as {p^(r+1) k +- 1 mod q : 0 <= k < p^(e-r-1)}."""
    step = spec.p ** (spec.r + 1)
    out = set()
    for k in range(spec.p ** (spec.e - spec.r - 1)):
        out.add((step * k + 1) % spec.q)
        out.add((step * k - 1) % spec.q)
    return tuple(sorted(out))


def gamma_fixed_points(spec: GammaSpec) -> tuple[int, ...]:
    """The p^(e-1) - 1 nonzero multiples of p; independent of r.

    For r <= e-2 this is exactly the fixed point set of the rotation h.  At
    r = e-1 the graph degenerates to the q-cycle with h = -1, whose actual
    fixed point set is empty; the multiples of p remain the set the vertex-cut
    dichotomy is about.
    """
    return tuple(range(spec.p, spec.q, spec.p))


@dataclass(frozen=True)
class GammaReport:
    spec: GammaSpec
    degree_ok: bool  # order of h equals 2 p^(e-r-1)
    closed_form_ok: bool  # conn matches the p^(r+1) k +- 1 description
    fixed_formula_ok: bool  # multiples-of-p formula matches the orbit oracle
    independent: bool
    vertex_cut: bool
    dichotomy_ok: bool  # vertex_cut == (r >= 1)

    @property
    def ok(self) -> bool:
        return (
            self.degree_ok
            and self.closed_form_ok
            and self.fixed_formula_ok
            and self.independent
            and self.dichotomy_ok
        )


def verify_theorem_q(p: int, e: int, r: int) -> GammaReport:
    """Run every structural check for one (p, e, r) instance; all checks are
    evaluated even if an early one fails."""
    spec, g = build_gamma(p, e, r)
    fixed = gamma_fixed_points(spec)
    rep = rotation_report(spec.q, spec.h)
    # orbit oracle: multiples of p for r <= e-2; the q-cycle rotation -1 at
    # r = e-1 is fixed-point free
    expected_fixed = fixed if r <= e - 2 else ()
    return GammaReport(
        spec=spec,
        degree_ok=(
            multiplicative_order(spec.h, spec.q) == spec.degree and g.degree == spec.degree
        ),
        closed_form_ok=g.conn == connection_closed_form(spec),
        fixed_formula_ok=rep.fixed == expected_fixed,
        independent=g.is_independent_set(fixed),
        vertex_cut=g.is_vertex_cut(fixed),
        dichotomy_ok=g.is_vertex_cut(fixed) == (r >= 1),
    )


def blocked_path_witness(p: int, e: int, r: int) -> int:
    """For r >= 1, the vertex p + 1 is separated from 0 by removing F;
    verified by BFS on Gamma - F."""
    _validate(p, e, r)
    if r == 0:
        raise NotACut("F is not a vertex-cut when r = 0")
    spec, g = build_gamma(p, e, r)
    target = p + 1
    reached = g.reachable_from(0, gamma_fixed_points(spec))
    if target in reached:
        raise AssertionError(f"vertex {target} unexpectedly reachable in Gamma - F")
    return target
