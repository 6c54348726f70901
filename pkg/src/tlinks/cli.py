"""
Command-line front end.

    tlinks braid "T((2,2),(3,2))"
    tlinks fulltwist "T((4,3))" --verify full
    tlinks satellite --a 2 --b 2 --k 1 [--lower "(2,1)"] [--framing blackboard]
    tlinks certify --a 2 --b 2 --k 1
    tlinks certify --sweep a=2..4 b=2..4

Exit codes: 0 success or certified, 1 inconclusive, 2 input error,
3 internal invariant failure. Records go to the JSON-lines catalog named by
$TLINKS_CATALOG (or --catalog) when one is given.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import itertools
import json
import re
import sys

from .braid import BraidWord, format_braid
from .catalog import Catalog, CatalogEntry, EntryKind
from .invariants import DEFAULT_CROSSING_CAP, alexander_polynomial, closure_components, jones_normalized
from .obstruction import NotTKnotCertificate, ObstructionError, not_tknot_certificate
from .rewrite import fulltwist_presentation
from .satellite import (
    Framing,
    SatelliteError,
    companion_torus,
    family_braid,
    family_pattern,
    predicted_crossings,
)
from .tlink import TLinkError, format_tlink, is_knot, parse_tlink, standard_braid

EXIT_OK = 0
EXIT_INCONCLUSIVE = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3


class InputError(ValueError):
    pass


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _oracle(words: dict[str, BraidWord], cap: int = DEFAULT_CROSSING_CAP) -> dict:
    """Normalized Kauffman bracket of each word, or a skip note over the cap."""
    out: dict = {}
    for name, w in words.items():
        if len(w) > cap:
            out[name] = f"skipped: {len(w)} crossings > cap {cap}"
        else:
            out[name] = str(jones_normalized(w, cap))
    return out


def _parse_lower(text: str | None) -> tuple[tuple[int, int], ...]:
    if not text:
        return ()
    try:
        return parse_tlink(f"T({text})").pairs
    except TLinkError as exc:
        raise InputError(f"--lower: {exc}") from None


def _parse_range(text: str) -> tuple[str, range]:
    m = re.fullmatch(r"([abk])=(\d+)(?:\.\.(\d+))?", text.strip())
    if not m:
        raise InputError(f"bad sweep range {text!r}, expected e.g. a=2..4")
    lo = int(m[2])
    hi = int(m[3]) if m[3] else lo
    if hi < lo:
        raise InputError(f"empty sweep range {text!r}")
    return m[1], range(lo, hi + 1)


def cmd_braid(args, catalog: Catalog | None) -> int:
    spec = parse_tlink(args.spec)
    w = standard_braid(spec)
    print(format_braid(w))
    if args.verify == "full":
        _emit({"oracle": _oracle({"standard": w})})
    return EXIT_OK


def cmd_fulltwist(args, catalog: Catalog | None) -> int:
    spec = parse_tlink(args.spec)
    cert = fulltwist_presentation(spec)
    record = cert.to_dict()
    if args.verify == "full":
        oracle = _oracle({"input": cert.input_word, "output": cert.output_word})
        record["oracle"] = oracle
        if not any(v.startswith("skipped") for v in oracle.values()) and oracle["input"] != oracle["output"]:
            raise AssertionError(f"Kauffman bracket oracle disagrees for {format_tlink(spec)}")
    if catalog is not None:
        catalog.append(CatalogEntry.make(EntryKind.TLINK_FULLTWIST, format_tlink(spec), record))
    _emit(record)
    return EXIT_OK if cert.is_valid() else EXIT_INTERNAL


def satellite_record(lower, a: int, b: int, k: int, framing: Framing, verify: bool = False) -> dict:
    if a < 2 or b < 2 or k < 1:
        raise InputError(f"need a, b >= 2 and k >= 1, got a={a}, b={b}, k={k}")
    try:
        pattern = family_pattern(lower, a, b, k)
    except TLinkError as exc:
        raise InputError(f"invalid pattern: {exc}") from None
    w = family_braid(lower, a, b, k, framing)
    seifert = predicted_crossings(lower, a, b, k)
    companion = companion_torus(a)
    if framing is Framing.SEIFERT_ZERO:
        predicted = seifert
        note = "standard longitude: companion writhe cancelled by full twists on the pattern"
    else:
        # the Seifert correction cancels (a^2-1) b full twists' worth of crossings
        predicted = seifert + companion.exponent_sum() * b * (b - 1)
        note = "blackboard framing (Birman-Williams convention, no fixed longitude); not the family formula"
    record = {
        "params": {"lower": [list(p) for p in lower], "a": a, "b": b, "k": k},
        "framing": framing.value,
        "pattern": format_tlink(pattern),
        "pattern_is_knot": is_knot(pattern),
        "companion": format_braid(companion),
        "braid": format_braid(w),
        "length": len(w),
        "predicted": predicted,
        "formula_seifert": seifert,
        "match": len(w) == predicted,
        "note": note,
    }
    if verify:
        record["oracle"] = _oracle({"satellite": w})
        if record["pattern_is_knot"] and framing is Framing.SEIFERT_ZERO:
            lhs = alexander_polynomial(w)
            rhs = (alexander_polynomial(standard_braid(pattern))
                   * alexander_polynomial(companion).substitute_power(b)).canonical()
            record["alexander_satellite_formula"] = lhs == rhs
            if lhs != rhs:
                raise AssertionError("satellite Alexander polynomial does not factor as expected")
        record["components"] = closure_components(w)
    return record


def cmd_satellite(args, catalog: Catalog | None) -> int:
    lower = _parse_lower(args.lower)
    record = satellite_record(lower, args.a, args.b, args.k, Framing(args.framing), args.verify == "full")
    if not record["match"]:
        raise AssertionError(f"constructed length {record['length']} != predicted {record['predicted']}")
    if catalog is not None:
        catalog.append(CatalogEntry.make(EntryKind.SATELLITE, {**record["params"], "framing": args.framing}, record))
    _emit(record)
    return EXIT_OK


def _certify_one(lower, a: int, b: int, k: int) -> NotTKnotCertificate:
    return not_tknot_certificate(lower, a, b, k)


def cmd_certify(args, catalog: Catalog | None) -> int:
    lower = _parse_lower(args.lower)
    if args.sweep:
        ranges = {"a": None, "b": None, "k": range(args.k, args.k + 1)}
        for text in args.sweep:
            name, rng = _parse_range(text)
            ranges[name] = rng
        if ranges["a"] is None or ranges["b"] is None:
            raise InputError("--sweep needs both a=.. and b=.. ranges")
        params = list(itertools.product(ranges["a"], ranges["b"], ranges["k"]))
    else:
        if args.a is None or args.b is None:
            raise InputError("certify needs --a and --b, or --sweep")
        params = [(args.a, args.b, args.k)]

    certs: list[NotTKnotCertificate] = []
    with concurrent.futures.ThreadPoolExecutor(max_workers=args.jobs) as pool:
        futures = [pool.submit(_certify_one, lower, a, b, k) for a, b, k in params]
        # the main thread is the single catalog writer; results keep input order
        for fut in futures:
            cert = fut.result()
            certs.append(cert)
            record = cert.to_dict()
            if args.verify == "full":
                record["oracle"] = _oracle({"satellite": family_braid(cert.lower, cert.a, cert.b, cert.k)})
            if catalog is not None:
                catalog.append(CatalogEntry.make(EntryKind.CERTIFICATE, record["params"], record))
            _emit(record)
    return EXIT_OK if all(c.certified for c in certs) else EXIT_INCONCLUSIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tlinks", description="T-link full twists and satellite obstructions")
    parser.add_argument("--catalog", help="JSON-lines catalog path (default: $TLINKS_CATALOG)")
    sub = parser.add_subparsers(dest="command", required=True)

    def verify_flag(p):
        p.add_argument("--verify", choices=["none", "full"], default="none",
                       help="'full' also runs the Kauffman bracket oracle under the crossing cap")

    p = sub.add_parser("braid", help="standard braid of a T-link")
    p.add_argument("spec")
    verify_flag(p)
    p.set_defaults(func=cmd_braid)

    p = sub.add_parser("fulltwist", help="positive braid with a full twist, with certificate")
    p.add_argument("spec")
    verify_flag(p)
    p.set_defaults(func=cmd_fulltwist)

    for name, func in (("satellite", cmd_satellite), ("certify", cmd_certify)):
        p = sub.add_parser(name)
        p.add_argument("--a", type=int, required=name == "satellite")
        p.add_argument("--b", type=int, required=name == "satellite")
        p.add_argument("--k", type=int, default=1)
        p.add_argument("--lower", help='extra pattern pairs, e.g. "(2,1),(3,1)"')
        verify_flag(p)
        p.set_defaults(func=func)
        if name == "satellite":
            p.add_argument("--framing", choices=[f.value for f in Framing], default=Framing.SEIFERT_ZERO.value)
        else:
            p.add_argument("--sweep", nargs="+", metavar="RANGE", help="e.g. a=2..4 b=2..4 [k=1..3]")
            p.add_argument("--jobs", type=int, default=4)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    catalog = Catalog(args.catalog) if args.catalog else Catalog.from_env()
    try:
        return args.func(args, catalog)
    except AssertionError as exc:
        print(f"internal invariant failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (InputError, TLinkError, SatelliteError, ObstructionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
