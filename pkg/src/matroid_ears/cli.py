"""Command-line front end.

Every report is a JSON object with sorted keys; integers are written as
decimal strings and polynomials as coefficient arrays indexed by degree.

Exit status: 0 success, 1 a verification failed, 2 usage or input error,
3 a resource cap was exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .analysis import (PREDICATES, check_2cm_chain, check_top_heavy, has_internal_zeros,
                       is_log_concave, is_real_rooted, is_ultra_log_concave, is_unimodal,
                       real_root_count, scan_uniform)
from .caps import CapExceeded
from .chow import (augmented_chow_hilbert, chow_hilbert, verify_augmented_chow_identity,
                   verify_bergman_chow_identity)
from .complex import f_polynomial, face_label, h_from_f
from .ears import CEDError, build_ced
from .enumeration import f_augmented, f_bergman, h_augmented
from .matroid import Matroid, MatroidError
from .matroid_complexes import augmented_bergman_complex, bergman_complex, independence_complex
from .poly import Poly

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(ValueError):
    pass


# -- documents ---------------------------------------------------------------------------

def parse_matroid(document) -> Matroid:
    """Matroid from {"type": "uniform", "rank", "n"} or {"type": "bases", "n", "bases"}."""
    if isinstance(document, (str, bytes)):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise UsageError(f"matroid document is not valid JSON: {exc}") from None
    if not isinstance(document, dict) or "type" not in document:
        raise UsageError("matroid document must be an object with a 'type' field")
    kind = document["type"]
    try:
        if kind == "uniform":
            return Matroid.uniform(int(document["rank"]), int(document["n"]))
        if kind == "bases":
            bases = [[int(e) for e in b] for b in document["bases"]]
            return Matroid.from_bases(int(document["n"]), bases)
    except KeyError as exc:
        raise UsageError(f"matroid document is missing {exc}") from None
    except (TypeError, ValueError) as exc:
        if isinstance(exc, MatroidError):
            raise
        raise UsageError(f"bad matroid document: {exc}") from None
    raise UsageError(f"unknown matroid type {kind!r}")


def matroid_document(M: Matroid) -> dict:
    if M.is_uniform:
        return {"type": "uniform", "rank": str(M.rank), "n": str(M.n)}
    return {"type": "bases", "n": str(M.n), "bases": [[str(e) for e in b] for b in M.bases()]}


def poly_out(p) -> list[str]:
    p = p if isinstance(p, Poly) else Poly(p)
    return [str(a) for a in p.coeffs]


def poly_in(value) -> Poly:
    """Polynomial from a JSON array (strings or ints) or comma-separated text."""
    if isinstance(value, str):
        value = value.strip()
        if value.startswith("["):
            value = json.loads(value)
        else:
            value = [v for v in value.split(",") if v.strip()]
    try:
        return Poly(int(v) for v in value)
    except (TypeError, ValueError) as exc:
        raise UsageError(f"bad polynomial: {exc}") from None


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2)


def _read_matroid(arg: str) -> Matroid:
    text = arg
    if arg == "-":
        text = sys.stdin.read()
    elif not arg.lstrip().startswith("{"):
        path = Path(arg)
        if not path.exists():
            raise UsageError(f"no such matroid file: {arg}")
        text = path.read_text()
    return parse_matroid(text)


def parse_range(text: str) -> list[int]:
    """'5', '2..7' (inclusive) or '1,3,4'."""
    try:
        if ".." in text:
            a, b = text.split("..")
            return list(range(int(a), int(b) + 1))
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise UsageError(f"bad range {text!r}") from None


# -- subcommands ---------------------------------------------------------------------------

def cmd_complex(args) -> tuple[dict, int]:
    M = _read_matroid(args.matroid)
    d = M.rank
    method = args.method
    if method == "auto":
        method = "formula" if M.is_uniform else "direct"
    if args.kind == "independence":
        f = f_polynomial(independence_complex(M))
        h = h_from_f(f, d)
    elif args.kind == "bergman":
        dd = max(d - 1, 0)
        f = f_bergman(M) if method == "formula" else f_polynomial(bergman_complex(M))
        h = h_from_f(f, dd)
    else:
        if method == "formula":
            f, h = f_augmented(M), h_augmented(M)
        else:
            f = f_polynomial(augmented_bergman_complex(M))
            h = h_from_f(f, d)
    return {"kind": args.kind, "matroid": matroid_document(M), "method": method,
            "f": poly_out(f), "h": poly_out(h)}, EXIT_OK


def cmd_ced(args) -> tuple[dict, int]:
    M = _read_matroid(args.matroid)
    try:
        ced = build_ced(M, max_bases=args.max_bases)
    except CEDError as exc:
        return {"matroid": matroid_document(M), "ok": False, "error": str(exc)}, EXIT_FAILED
    report = ced.verify()
    ears = []
    for e, chk in zip(ced.ears, report.ears):
        row = {
            "index": str(e.index),
            "basis": [str(b) for b in e.basis],
            "nbc": e.nbc,
            "facets": str(len(e.complex)),
            "kind": chk.kind,
            "certified": chk.certified,
            "proper": chk.proper,
            "boundary_gluing": chk.boundary_gluing,
            "checks": dict(e.checks),
            "notes": {k: v for k, v in e.notes.items() if isinstance(v, bool)},
        }
        if e.gamma is not None:
            row["gamma"] = e.gamma.kind
        if args.facets:
            row["facet_list"] = [face_label(f) for f in e.complex.facets]
        ears.append(row)
    out = {"matroid": matroid_document(M), "ok": report.ok, "covers": report.covers,
           "num_ears": str(len(ced.ears)), "num_bases": str(M.num_bases()), "ears": ears}
    return out, EXIT_OK if report.ok else EXIT_FAILED


def cmd_chow(args) -> tuple[dict, int]:
    M = _read_matroid(args.matroid)
    series = augmented_chow_hilbert(M) if args.augmented else chow_hilbert(M)
    return {"matroid": matroid_document(M), "augmented": args.augmented,
            "series": poly_out(series.poly)}, EXIT_OK


def cmd_verify(args) -> tuple[dict, int]:
    fn = verify_bergman_chow_identity if args.identity == "bergman" else verify_augmented_chow_identity
    lo = 1 if args.identity == "bergman" else 0
    rows, ok = [], True
    for d in parse_range(args.d):
        for n in parse_range(args.n):
            if not lo <= d <= n:
                continue
            v = fn(d, n)
            ok &= v.holds
            row = {"d": str(d), "n": str(n), "holds": v.holds}
            if not v.holds:
                row.update(lhs=poly_out(v.lhs), rhs=poly_out(v.rhs))
            rows.append(row)
    return {"identity": args.identity, "ok": ok, "results": rows}, EXIT_OK if ok else EXIT_FAILED


def cmd_check(args) -> tuple[dict, int]:
    if (args.poly is None) == (args.matroid is None):
        raise UsageError("give exactly one of --poly or --matroid")
    if args.poly is not None:
        p = poly_in(args.poly)
        d = args.d if args.d is not None else p.degree
    else:
        M = _read_matroid(args.matroid)
        p = f_augmented(M) if args.of == "f" else h_augmented(M)
        d = M.rank
    results: dict = {}
    for name in args.predicate:
        if name == "unimodal":
            results[name] = is_unimodal(p)
        elif name == "log-concave":
            results[name] = is_log_concave(p)
        elif name == "internal-zeros":
            results[name] = has_internal_zeros(p)
        elif name == "ultra-log-concave":
            results[name] = is_ultra_log_concave(p, args.order if args.order is not None else d)
        elif name == "real-rooted":
            results[name] = is_real_rooted(p)
            results["real-root-count"] = str(real_root_count(p))
        elif name == "top-heavy":
            results[name] = check_top_heavy(p, d).holds
        elif name == "2cm-chain":
            v = check_2cm_chain(p, d)
            results[name] = v.holds if v.applicable else "not applicable"
    return {"poly": poly_out(p), "d": str(d), "results": results}, EXIT_OK


def cmd_scan(args) -> tuple[dict, int]:
    rows = scan_uniform(parse_range(args.d), parse_range(args.n), args.predicate, args.workers)
    failures = [{"d": str(r.d), "n": str(r.n), "predicate": r.predicate,
                 "f": poly_out(r.f), "h": poly_out(r.h)} for r in rows]
    return {"d": args.d, "n": args.n, "predicates": list(args.predicate),
            "failures": failures}, EXIT_OK


# -- entry point ---------------------------------------------------------------------------

CHECKS = ["unimodal", "log-concave", "internal-zeros", "ultra-log-concave",
          "real-rooted", "top-heavy", "2cm-chain"]


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="matroid-ears",
                                 description="Augmented Bergman complexes of matroids.")
    ap.add_argument("--max-faces", type=int)
    ap.add_argument("--max-flats", type=int)
    ap.add_argument("--max-bases", type=int)
    sub = ap.add_subparsers(dest="command", required=True)

    mhelp = "JSON document, path to one, or '-' for stdin"
    p = sub.add_parser("complex", help="f- and h-polynomials of a complex")
    p.add_argument("--matroid", required=True, help=mhelp)
    p.add_argument("--kind", choices=["independence", "bergman", "augmented"], default="augmented")
    p.add_argument("--method", choices=["auto", "direct", "formula"], default="auto")
    p.set_defaults(func=cmd_complex)

    p = sub.add_parser("ced", help="build and verify the convex ear decomposition")
    p.add_argument("--matroid", required=True, help=mhelp)
    p.add_argument("--facets", action="store_true", help="list the facets of every ear")
    p.set_defaults(func=cmd_ced)

    p = sub.add_parser("chow", help="Chow or augmented Chow series")
    p.add_argument("--matroid", required=True, help=mhelp)
    p.add_argument("--augmented", action="store_true")
    p.set_defaults(func=cmd_chow)

    p = sub.add_parser("verify-identities", help="Chow identities for uniform matroids")
    p.add_argument("--identity", choices=["bergman", "augmented"], required=True)
    p.add_argument("--d", required=True)
    p.add_argument("--n", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("check", help="predicates on a polynomial")
    p.add_argument("--poly", help="coefficients, e.g. '1,5,3' or a JSON array")
    p.add_argument("--matroid", help=mhelp)
    p.add_argument("--of", choices=["f", "h"], default="h")
    p.add_argument("--d", type=int, help="degree to pad to (default: the degree)")
    p.add_argument("--order", type=int, help="order m for ultra-log-concavity")
    p.add_argument("--predicate", action="append", choices=CHECKS, required=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("scan", help="scan uniform matroids for predicate failures")
    p.add_argument("--d", required=True)
    p.add_argument("--n", required=True)
    p.add_argument("--predicate", action="append", choices=sorted(PREDICATES), required=True)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_scan)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    for flag, var in (("max_faces", "MATROID_EARS_MAX_FACES"),
                      ("max_flats", "MATROID_EARS_MAX_FLATS"),
                      ("max_bases", "MATROID_EARS_MAX_BASES")):
        if getattr(args, flag) is not None:
            os.environ[var] = str(getattr(args, flag))
    try:
        report, code = args.func(args)
    except CapExceeded as exc:
        print(dumps({"error": str(exc), "cap": exc.cap, "limit": str(exc.limit)}))
        return EXIT_CAP
    except (UsageError, MatroidError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(dumps(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
