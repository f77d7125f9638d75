"""Command-line front end.

Subcommands:
  classify N   enumerate all rotational first-kind Frobenius circulants on Z_N
  verify N S   analyze an explicit circulant given by its connection set
  gamma P E R  run the prime-power family dichotomy report
  harts K      hexagonal-mesh report and its TL isomorphism

Exit codes: 0 success, 1 legitimately empty result, 2 input error.
"""

import argparse
import csv
import json
import sys

import numpy as np

from . import _kernels
from .circulant import Circulant
from .classifier import (
    admissible_degrees,
    enumerate_classes,
    verify_first_kind_frobenius,
)
from .errors import FrobcircError
from .gamma import blocked_path_witness, build_gamma, verify_theorem_q
from .harts import harts_graph, harts_iso_tl, tl_graph
from .numtheory import factorize
from .rotation import (
    find_all_rotations,
    gossip_certificate,
    is_complete_rotation,
    rotation_report,
)

ORACLE_AUTO_LIMIT = 2000


def signed_form(h: int, n: int) -> str:
    """Table-style display: residues above n/2 shown as -[n-h]."""
    return f"-[{n - h}]" if h > n // 2 else f"+[{h}]"


def conn_pairs(conn, n) -> list[int]:
    """One base residue per +-pair, ascending."""
    return sorted({min(s, n - s) for s in conn})


def class_record(c, oracle: bool) -> dict:
    report = verify_first_kind_frobenius(c)
    frobenius = report.ok
    if oracle:
        frobenius = frobenius and bool(
            _kernels.semiregular_scan(c.n, np.array(c.subgroup, dtype=np.int64))
        )
    return {
        "n": c.n,
        "d": c.d,
        "m_vector": list(c.m_vector),
        "h": c.h,
        "h_signed": signed_form(c.h, c.n),
        "connection_set": list(c.subgroup),
        "connection_pairs": conn_pairs(c.subgroup, c.n),
        "rotational": is_complete_rotation(c.graph(), c.h),
        "frobenius": frobenius,
        "gossip_bound": (c.n - 1) // c.d,
    }


CLASS_COLUMNS = [
    "n",
    "d",
    "m_vector",
    "h",
    "h_signed",
    "connection_pairs",
    "rotational",
    "frobenius",
    "gossip_bound",
]


def render_records(records: list[dict], fmt: str, out) -> None:
    if fmt == "json":
        json.dump(records, out, indent=2)
        out.write("\n")
        return
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(CLASS_COLUMNS)
        for rec in records:
            writer.writerow(
                [
                    ",".join(map(str, rec[col])) if isinstance(rec[col], list) else rec[col]
                    for col in CLASS_COLUMNS
                ]
            )
        return
    # table
    rows = [
        [
            str(rec[col])
            if not isinstance(rec[col], list)
            else "(" + ", ".join(map(str, rec[col])) + ")"
            for col in CLASS_COLUMNS
        ]
        for rec in records
    ]
    widths = [
        max(len(CLASS_COLUMNS[i]), *(len(r[i]) for r in rows)) if rows else len(CLASS_COLUMNS[i])
        for i in range(len(CLASS_COLUMNS))
    ]
    out.write("  ".join(c.ljust(w) for c, w in zip(CLASS_COLUMNS, widths)).rstrip() + "\n")
    for r in rows:
        out.write("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() + "\n")


def cmd_classify(args, out) -> int:
    n = args.n
    if n < 3:
        print(f"error: n = {n} must be >= 3", file=sys.stderr)
        return 2
    if n % 2 == 0:
        print(
            f"no classes: the kernel Z_{n} of a first-kind Frobenius circulant must be odd",
            file=sys.stderr,
        )
        return 1
    f = factorize(n)
    degrees = admissible_degrees(f)
    if args.degree is not None:
        if args.degree not in degrees:
            print(
                f"no classes: degree {args.degree} is not an even divisor of D for n = {n}",
                file=sys.stderr,
            )
            return 1
        degrees = [args.degree]
    oracle = args.oracle
    if oracle is None:
        oracle = n <= ORACLE_AUTO_LIMIT
        if not oracle:
            print(
                f"warning: n = {n} > {ORACLE_AUTO_LIMIT}; brute-force oracle disabled "
                "(pass --oracle to force)",
                file=sys.stderr,
            )
    records = []
    for d in degrees:
        for c in enumerate_classes(f, d):
            records.append(class_record(c, oracle))
    render_records(records, args.format, out)
    return 0


def parse_conn(text: str, n: int) -> tuple[int, ...]:
    parts = [p.strip() for p in text.split(",")]
    conn = []
    for i, p in enumerate(parts):
        try:
            v = int(p)
        except ValueError:
            raise FrobcircError(f"connection set entry {i + 1} ({p!r}) is not an integer")
        if not 1 <= v < n:
            raise FrobcircError(f"connection set entry {i + 1} ({v}) outside [1, {n})")
        conn.append(v)
    return tuple(sorted(set(conn)))


def cmd_verify(args, out) -> int:
    n = args.n
    conn = parse_conn(args.conn, n)
    g = Circulant(n, conn)
    lines = [f"graph: Cay(Z_{n}, {{{', '.join(map(str, conn))}}}), degree {g.degree}"]
    if not g.is_connected():
        lines.append("connected: no")
        out.write("\n".join(lines) + "\n")
        print("error: the graph is disconnected; no rotation analysis possible", file=sys.stderr)
        return 1
    lines.append("connected: yes")
    rotations = find_all_rotations(g)
    lines.append(f"complete rotations: {rotations if rotations else 'none'}")
    frobenius = False
    for w in rotations:
        rep = rotation_report(n, w)
        if not rep.fixed:
            frobenius = True
            break
    lines.append(f"rotational first-kind Frobenius: {'yes' if frobenius else 'no'}")
    if rotations:
        w = rotations[0]
        rep = rotation_report(n, w)
        lines.append(f"fixed points of {w}: {list(rep.fixed) if rep.fixed else 'empty'}")
        cert = gossip_certificate(g, w)
        if cert.holds:
            kind = "exact value" if cert.exact else "bound"
            lines.append(f"gossip certificate: holds, {kind} {cert.bound}")
        else:
            lines.append(
                "gossip certificate: fails "
                f"(independent={cert.independent}, vertex_cut={cert.vertex_cut})"
            )
    out.write("\n".join(lines) + "\n")
    return 0


def cmd_gamma(args, out) -> int:
    report = verify_theorem_q(args.p, args.e, args.r)
    spec = report.spec
    lines = [
        f"Gamma_({spec.q},{spec.r}): p={spec.p} e={spec.e} r={spec.r}, "
        f"h={spec.h}, degree {spec.degree}",
        f"degree check: {'ok' if report.degree_ok else 'FAIL'}",
        f"connection closed form: {'ok' if report.closed_form_ok else 'FAIL'}",
        f"fixed set = nonzero multiples of {spec.p}: "
        f"{'ok' if report.fixed_formula_ok else 'FAIL'} "
        f"(size {spec.p ** (spec.e - 1) - 1})",
        f"fixed set independent: {'yes' if report.independent else 'NO'}",
    ]
    if report.vertex_cut:
        witness = blocked_path_witness(args.p, args.e, args.r)
        lines.append(f"F IS a vertex-cut; witness: vertex {witness} unreachable from 0 in Gamma - F")
    else:
        _, g = build_gamma(args.p, args.e, args.r)
        cert = gossip_certificate(g, spec.h)
        lines.append(f"F is NOT a vertex-cut; gossip bound {cert.bound}")
    lines.append(f"dichotomy (vertex-cut iff r >= 1): {'ok' if report.dichotomy_ok else 'FAIL'}")
    out.write("\n".join(lines) + "\n")
    return 0 if report.ok else 1


def cmd_harts(args, out) -> int:
    k = args.k
    mesh = harts_graph(k)
    tl = tl_graph(k - 1) if k > 2 else None
    sigma = harts_iso_tl(k)
    lines = [
        f"hexagonal mesh of size {k}: {mesh.n} vertices, "
        f"connection set {{{', '.join(map(str, mesh.conn))}}}",
        f"isomorphic to TL_{mesh.n} via multiplication by {sigma}",
        f"mesh diameter: {mesh.diameter()}",
    ]
    if k == 2:
        lines.append("note: the size-2 mesh is the complete graph K_7")
    if tl is not None:
        lines.append(
            f"TL_{tl.n} connection set {{{', '.join(map(str, tl.conn))}}}, "
            f"diameter {tl.diameter()}"
        )
    out.write("\n".join(lines) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="frobcirc",
        description="Rotational first-kind Frobenius circulants: classification and certificates",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_classify = sub.add_parser("classify", help="enumerate all classes for kernel Z_n")
    p_classify.add_argument("n", type=int)
    p_classify.add_argument("--degree", type=int, default=None)
    p_classify.add_argument("--format", choices=["table", "json", "csv"], default="table")
    group = p_classify.add_mutually_exclusive_group()
    group.add_argument("--oracle", dest="oracle", action="store_true", default=None)
    group.add_argument("--no-oracle", dest="oracle", action="store_false")
    p_classify.set_defaults(func=cmd_classify)

    p_verify = sub.add_parser("verify", help="analyze Cay(Z_n, S) for an explicit S")
    p_verify.add_argument("n", type=int)
    p_verify.add_argument("conn", help="comma-separated residues, e.g. 1,7,8,11,12,18")
    p_verify.set_defaults(func=cmd_verify)

    p_gamma = sub.add_parser("gamma", help="prime-power family vertex-cut dichotomy")
    p_gamma.add_argument("p", type=int)
    p_gamma.add_argument("e", type=int)
    p_gamma.add_argument("r", type=int)
    p_gamma.set_defaults(func=cmd_gamma)

    p_harts = sub.add_parser("harts", help="hexagonal mesh report")
    p_harts.add_argument("k", type=int)
    p_harts.set_defaults(func=cmd_harts)
    return parser


def main(argv=None, out=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = out or sys.stdout
    try:
        return args.func(args, out)
    except FrobcircError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
