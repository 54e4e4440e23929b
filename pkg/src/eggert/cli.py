"""The ``eggert`` command line.

Commands:
  verify-paper  run the catalog of named checks (table or --json)
  search        sweep presentations and stream deficit records as JSON lines
  report        dimension/deficit report for a spec file at an exponent
  identity      check the alternating subset-sum identity for (n, p)
  probe         run one of the open-question probes on a spec file

Exit codes: 0 success, 2 verification failure or bad flags, 3 a positive
deficit survived re-verification, 65/66/74 for data, missing-file and
I/O errors.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from typing import Optional, Sequence

from .exactlin import NotPrimeError, PrimeField, Subspace, subspace_from_rows
from .explorer import (
    REGISTRY,
    SearchConfig,
    best_records,
    confirmed_anomalies,
    coprime_pairs,
    run_search,
    verify_all,
)
from .powermaps import (
    CapExceededError,
    CharTooSmallError,
    identity_check_4_5,
    power_image,
    question_probe,
    root_section,
)
from .semigroups import power_subset, whole_subset
from .specio import SEMIGROUP_KINDS, SpecError, parse_any_spec

EXIT_OK = 0
EXIT_FAIL = 2
EXIT_ANOMALY = 3
EXIT_DATAERR = 65
EXIT_NOINPUT = 66
EXIT_IOERR = 74


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _config_hash(obj) -> str:
    return hashlib.sha256(_dump(obj).encode()).hexdigest()[:16]


def _load_spec_file(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError:
        print(f"error: spec file not found: {path}", file=sys.stderr)
        raise SystemExit(EXIT_NOINPUT)
    except json.JSONDecodeError as exc:
        print(f"error: malformed JSON in {path}: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_DATAERR)


def _parse_gens(text: str) -> tuple[tuple[int, ...], ...]:
    """--gens accepts '4,5' (one set) or 'pairs:7' (all coprime pairs)."""
    if text.startswith("pairs:"):
        limit = int(text.split(":", 1)[1])
        pairs = coprime_pairs(limit)
        if not pairs:
            raise ValueError(f"no coprime pairs at or below {limit}")
        return pairs
    gens = tuple(sorted(int(part) for part in text.split(",") if part))
    if not gens or any(g < 1 for g in gens):
        raise ValueError(f"bad generator list {text!r}")
    return (gens,)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eggert",
        description="Exact deficit computations for nilpotent commutative semigroups and algebras over GF(p).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    vp = sub.add_parser("verify-paper", help="run the catalog of named checks")
    vp.add_argument("--json", action="store_true", help="emit a JSON report document")
    vp.add_argument("--only", metavar="ID", help="run a single check id")

    se = sub.add_parser("search", help="sweep presentations and rank deficits")
    se.add_argument("--gens", required=True, help="'a,b,...' or 'pairs:G' for coprime pairs up to G")
    se.add_argument("--bound-max", type=int, required=True)
    se.add_argument("--bound-min", type=int, default=None, help="default: bound-max (single bound)")
    se.add_argument("--exponent", type=int, default=2)
    se.add_argument(
        "--scheme",
        default="identify",
        help="comma list from {none,identify,collapse} or 'all'",
    )
    se.add_argument("--top", type=int, default=0, help="print only the top K records (0 = all)")
    se.add_argument("--workers", type=int, default=1)
    se.add_argument("--seed", type=int, default=0)
    se.add_argument("--size-cap", type=int, default=512)
    se.add_argument(
        "--fail-on-positive",
        action="store_true",
        help="exit 3 when a positive deficit survives re-verification",
    )

    rp = sub.add_parser("report", help="deficit report for a semigroup or algebra spec")
    rp.add_argument("--spec", required=True, metavar="FILE")
    rp.add_argument("--exponent", type=int, default=None, help="default: the spec's characteristic")
    rp.add_argument("--dump-spec", action="store_true", help="print the normalized spec and exit")

    idp = sub.add_parser("identity", help="alternating subset-sum identity check")
    idp.add_argument("--n", type=int, required=True)
    idp.add_argument("--p", type=int, required=True)

    pr = sub.add_parser("probe", help="open-question probes (report only, never assert)")
    pr.add_argument("--spec", required=True, metavar="FILE")
    pr.add_argument("--question", required=True, choices=["v", "w", "u"])
    pr.add_argument("--exponent", type=int, default=2)
    pr.add_argument("--m", type=int, default=None, help="root exponent for question u")
    pr.add_argument("--cap", type=int, default=2**20)
    pr.add_argument(
        "--subspace",
        default=None,
        help="comma list of basis labels; default: root section (v,u) or its image (w)",
    )
    return parser


def cmd_verify_paper(args) -> int:
    start = time.monotonic()
    try:
        records = verify_all(args.only)
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return EXIT_FAIL
    elapsed = time.monotonic() - start
    all_passed = all(r.passed for r in records)
    if args.json:
        doc = {
            "command": "verify-paper",
            "config_hash": _config_hash({"only": args.only}),
            "results": [r.to_json() for r in records],
            "all_passed": all_passed,
            "wall_time_s": round(elapsed, 3),
        }
        print(json.dumps(doc, sort_keys=True, indent=2))
    else:
        for rec in records:
            status = "PASS" if rec.passed else "FAIL"
            description = REGISTRY[rec.check_id][0]
            print(f"{status}  {rec.check_id:<18} {description}")
            if not rec.passed:
                print(f"      computed: {_dump(rec.computed)}")
                print(f"      expected: {_dump(rec.expected)}")
            for note in rec.notes:
                print(f"      note: {note}")
        passed = sum(1 for r in records if r.passed)
        print(f"{passed}/{len(records)} checks passed in {elapsed:.2f}s")
    return EXIT_OK if all_passed else EXIT_FAIL


def cmd_search(args) -> int:
    try:
        generator_sets = _parse_gens(args.gens)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    bound_min = args.bound_min if args.bound_min is not None else args.bound_max
    if bound_min < 1 or bound_min > args.bound_max:
        print("error: need 1 <= bound-min <= bound-max", file=sys.stderr)
        return EXIT_FAIL
    schemes = (
        ("none", "identify", "collapse")
        if args.scheme == "all"
        else tuple(s for s in args.scheme.split(",") if s)
    )
    try:
        cfg = SearchConfig(
            generator_sets=generator_sets,
            bounds=tuple(range(bound_min, args.bound_max + 1)),
            exponent=args.exponent,
            schemes=schemes,
            size_cap=args.size_cap,
            seed=args.seed,
            top_k=args.top,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    records, skipped = run_search(cfg, workers=max(1, args.workers))
    top, stats = best_records(records, args.top)
    for rec in top:
        print(_dump(rec))
    summary = {
        "summary": {
            "config": cfg.echo(),
            "config_hash": _config_hash(cfg.echo()),
            "skipped": len(skipped),
            **stats,
        }
    }
    print(_dump(summary))
    anomalies = confirmed_anomalies(records)
    if args.fail_on_positive and anomalies:
        for rec in anomalies:
            print(f"anomaly: {_dump(rec)}", file=sys.stderr)
        return EXIT_ANOMALY
    return EXIT_OK


def _semigroup_report(spec, exponent: int) -> dict:
    s = spec.build()
    card_s = s.size - 1
    card_image = power_subset(whole_subset(s), exponent).nonzero_count()
    return {
        "dim": card_s,
        "image_dim": card_image,
        "deficit": exponent * card_image - card_s,
        "ratio": [card_image, card_s],
        "method": "semigroup-exact",
    }


def _algebra_report(spec, exponent: Optional[int]) -> dict:
    alg = spec.build()
    n = exponent if exponent is not None else alg.field.p
    result = power_image(alg, n)
    image_dim = result.subspace.dim
    return {
        "dim": alg.dim,
        "image_dim": image_dim,
        "deficit": n * image_dim - alg.dim,
        "ratio": [image_dim, alg.dim],
        "method": result.method,
    }


def cmd_report(args) -> int:
    raw = _load_spec_file(args.spec)
    spec = parse_any_spec(raw)
    if args.dump_spec:
        print(json.dumps(spec.to_json(), sort_keys=True, indent=2))
        return EXIT_OK
    kind = spec.to_json()["kind"]
    if kind in SEMIGROUP_KINDS:
        exponent = args.exponent if args.exponent is not None else 2
        report = _semigroup_report(spec, exponent)
    else:
        report = _algebra_report(spec, args.exponent)
    print(_dump(report))
    return EXIT_OK


def cmd_identity(args) -> int:
    try:
        field = PrimeField(args.p)
        holds = identity_check_4_5(field, args.n)
    except NotPrimeError as exc:
        print(f"error: NotPrime: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except CharTooSmallError as exc:
        print(f"error: CharTooSmall: {exc}", file=sys.stderr)
        return EXIT_FAIL
    print(_dump({"n": args.n, "p": args.p, "identity_holds": holds}))
    return EXIT_OK if holds else EXIT_FAIL


def _probe_subspace(alg, labels: Optional[str], question: str) -> Subspace:
    if labels:
        rows = [list(alg.vector_from_label(lab.strip())) for lab in labels.split(",")]
        return subspace_from_rows(alg.field, alg.dim, rows)
    witness = root_section(alg)
    return witness.image if question == "w" else witness.v


def cmd_probe(args) -> int:
    raw = _load_spec_file(args.spec)
    spec = parse_any_spec(raw)
    if spec.to_json()["kind"] in SEMIGROUP_KINDS:
        print("error: probes run on algebra specs; wrap the semigroup in a 'contracted' spec", file=sys.stderr)
        return EXIT_FAIL
    alg = spec.build()
    try:
        subspace = _probe_subspace(alg, args.subspace, args.question)
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return EXIT_DATAERR
    m = args.m if args.question == "u" else None
    if args.question == "u" and m is None:
        print("error: --m is required for question u", file=sys.stderr)
        return EXIT_FAIL
    try:
        report = question_probe(alg, subspace, args.exponent, args.question, cap=args.cap, m=m)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    print(_dump(report.to_json()))
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help; pass it through.
        return int(exc.code or 0)
    handlers = {
        "verify-paper": cmd_verify_paper,
        "search": cmd_search,
        "report": cmd_report,
        "identity": cmd_identity,
        "probe": cmd_probe,
    }
    try:
        return handlers[args.command](args)
    except SystemExit as exc:
        return int(exc.code or 0)
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATAERR
    except (NotPrimeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except OSError as exc:
        print(f"error: I/O failure: {exc}", file=sys.stderr)
        return EXIT_IOERR


if __name__ == "__main__":
    sys.exit(main())
