"""
Command-line front end.

Exit codes: 0 verified, 1 verification failure, 2 usage or range error.
Machine output goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys

from .certificates import CertificateDocument, table_to_json, table_to_markdown, table_to_tsv
from .clifford import brute_force_cliff, cliff_value, min_cliff, safe_radius
from .errors import RangeError, VerificationError
from .lattice import E_CLASS, L_CLASS, DivisorClass, chi, make_surface, pair, self_int
from .linsys import effective_side, h_profile, root_classes
from .theorem import Kind, TheoremQuery, realize, sweep

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _err(msg: str) -> None:
    print(msg, file=sys.stderr)


def cmd_verify(args) -> int:
    if args.cliff is not None:
        query = TheoremQuery(Kind.CLIFFORD, args.genus, args.cliff)
    else:
        query = TheoremQuery(Kind.GONALITY, args.genus, args.gonality)
    try:
        cert = realize(query)
    except RangeError as exc:
        _err(f"range error: {exc}")
        return EXIT_USAGE
    except VerificationError as exc:
        _err(f"verification failed: {exc}")
        return EXIT_FAIL
    doc = CertificateDocument.build(query, cert)
    if args.json:
        print(doc.to_json())
    else:
        print(f"genus {cert.genus}, d = {cert.degree_d}")
        print(f"Cliff C = {cert.min_cliff}, gon C = {cert.gonality}")
        print("witnesses: " + ", ".join(str(D) for D in cert.witnesses))
        if cert.convention_branch:
            print(f"convention: {cert.convention_branch}")
        print(f"L nef: {cert.nef.holds}, L base point free: {cert.bpf.holds}")
        print(f"oracle agrees: {cert.oracle_agrees}")
    if not cert.verified:
        _err("verification failed: certificate checks did not all pass")
        return EXIT_FAIL
    return EXIT_OK


def cmd_table(args) -> int:
    try:
        table = sweep(args.genus_min, args.genus_max, workers=args.workers)
    except RangeError as exc:
        _err(f"range error: {exc}")
        return EXIT_USAGE
    except VerificationError as exc:
        _err(f"verification failed: {exc}")
        return EXIT_FAIL
    render = {"json": table_to_json, "tsv": table_to_tsv, "md": table_to_markdown}[args.format]
    sys.stdout.write(render(table))
    if args.format == "json":
        sys.stdout.write("\n")
    if not table.all_verified:
        for r in table.failures:
            _err(f"failing row: g={r.genus} {r.kind.value}={r.target} d={r.d}")
        return EXIT_FAIL
    return EXIT_OK


def _parse_class(text: str) -> DivisorClass:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"class must look like X,Y; got {text!r}")
    return DivisorClass(int(parts[0]), int(parts[1]))


def cmd_inspect(args) -> int:
    try:
        D = _parse_class(args.cls)
        S = make_surface(args.genus, args.degree)
    except (ValueError, RangeError) as exc:
        _err(f"usage error: {exc}")
        return EXIT_USAGE
    prof = h_profile(S, D)
    print(f"surface: g={S.genus}, d={S.degree}, gram={[list(r) for r in S.gram]}")
    print(f"class: {D}")
    print(f"D^2 = {self_int(S, D)}")
    print(f"D.L = {pair(S, D, L_CLASS)}")
    print(f"D.E = {pair(S, D, E_CLASS)}")
    print(f"chi = {chi(S, D)}")
    print(f"cliff_value = {cliff_value(S, D)}")
    if not D.is_zero():
        print(f"effective side: {effective_side(S, D).value}")
    if D in root_classes(S):
        print("root class: D^2 = -2")
    print(f"h0 {prof.h0}, h1 {prof.h1}, h2 {prof.h2}")
    print(f"rule: {prof.rule}")
    return EXIT_OK


def cmd_bruteforce(args) -> int:
    try:
        S = make_surface(args.genus, args.degree)
        xs, ys = safe_radius(S)
        n = args.bound if args.bound is not None else max(xs, ys)
        result = brute_force_cliff(S, n, n)
        cert = min_cliff(S)
    except RangeError as exc:
        _err(f"range error: {exc}")
        return EXIT_USAGE
    except VerificationError as exc:
        _err(f"verification failed: {exc}")
        return EXIT_FAIL
    print(f"surface: g={S.genus}, d={S.degree}, bound={n}")
    print(f"minimum: {result.minimum}")
    if result.convention_branch:
        print(f"convention: {result.convention_branch}")
    print("survivors: " + (", ".join(str(D) for D in result.survivors) or "none"))
    print("census: " + ", ".join(f"{k}={v}" for k, v in result.census.to_dict().items()))
    if result.minimum != cert.min_cliff:
        _err(f"disagreement: brute force {result.minimum} vs candidate minimum {cert.min_cliff}")
        return EXIT_FAIL
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="k3clifford",
        description="Certify Clifford index and gonality of curves on K3 surfaces with Picard lattice ZL+ZE.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="certify one (genus, Clifford index) or (genus, gonality) pair")
    p.add_argument("--genus", type=int, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--cliff", type=int)
    group.add_argument("--gonality", type=int)
    p.add_argument("--json", action="store_true", help="emit the JSON certificate")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="certify every admissible pair in a genus range")
    p.add_argument("--genus-min", type=int, required=True)
    p.add_argument("--genus-max", type=int, required=True)
    p.add_argument("--format", choices=("json", "tsv", "md"), default="tsv")
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("inspect", help="report invariants of one divisor class")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--class", dest="cls", required=True, metavar="X,Y")
    p.set_defaults(func=cmd_inspect)

    p = sub.add_parser("bruteforce", help="run the enumeration oracle")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--bound", type=int, default=None)
    p.set_defaults(func=cmd_bruteforce)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
