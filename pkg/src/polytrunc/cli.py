"""Command-line interface.

Exit codes: 0 success, 1 usage or parse problems, 2 a verified property
failed (criterion/oracle disagreement, invariant violation).  Every
command prints a human-readable report followed by line-delimited JSON
records under a ``--- records ---`` separator.
"""

from __future__ import annotations

import argparse
import json
import shlex
import sys
from pathlib import Path
from typing import Optional

from .catalog import catalog, catalog_entries
from .eberhard import SparsePSequence, flagify, scan_for_sequence, transformed_pvector
from .errors import PolytopeError, UnknownName
from .flags import enumerate_3belts, is_flag, is_flag_oracle
from .io import PLANAR_CODE_HEADER, parse_canonical_text, parse_planar_code, write_canonical_text
from .polytope import Polytope3, check_star_identity, p_vector
from .sweeps import (
    EXHAUSTIVE_EDGE_LIMIT,
    AdmissibleCensus,
    admissible_subgraphs,
    run_sweep,
)
from .truncation import EdgeSubgraph, predicted_face_sizes, truncate, flag_criterion

SCHEMA = "polytrunc.report/1"

USAGE_ERROR = 1
PROPERTY_ERROR = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 1 on usage errors, not argparse's 2
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)


def _records_out(records: list[dict]) -> None:
    print("--- records ---")
    for rec in records:
        rec = {"schema": SCHEMA, **rec}
        print(json.dumps(rec, sort_keys=True))


def _read_file_records(path: str) -> list[tuple[str, Optional[Polytope3], Optional[PolytopeError]]]:
    data = Path(path).read_bytes()
    if data.startswith(PLANAR_CODE_HEADER):
        scan = parse_planar_code(data)
        combined: list[tuple[int, Optional[Polytope3], Optional[PolytopeError]]] = [
            (i, p, None) for i, p in scan.entries
        ] + [(i, None, e) for i, e in scan.errors]
        combined.sort(key=lambda t: t[0])
        return [(f"{path}[{i}]", p, e) for i, p, e in combined]
    try:
        return [(path, parse_canonical_text(data.decode("utf-8")), None)]
    except PolytopeError as err:
        return [(path, None, err)]


def _read_single(path: str) -> Polytope3:
    records = _read_file_records(path)
    if len(records) != 1:
        raise PolytopeError(f"{path} holds {len(records)} records, expected exactly 1")
    _, poly, err = records[0]
    if err is not None:
        raise err
    assert poly is not None
    return poly


def _resolve_polytope(name_or_path: str) -> tuple[str, Polytope3]:
    try:
        return name_or_path, catalog(name_or_path)
    except UnknownName:
        if Path(name_or_path).exists():
            return name_or_path, _read_single(name_or_path)
        raise


def _parse_edges(poly: Polytope3, spec: str) -> EdgeSubgraph:
    pairs = []
    for chunk in spec.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        parts = chunk.split("-")
        if len(parts) != 2:
            raise ValueError(f"bad edge {chunk!r}, expected u-v")
        pairs.append((int(parts[0]), int(parts[1])))
    if not pairs:
        raise ValueError("no edges given")
    return EdgeSubgraph.from_vertex_pairs(poly, pairs)


def _pairs_text(gamma: EdgeSubgraph) -> list[str]:
    return [f"{u}-{v}" for u, v in gamma.vertex_pairs()]


def _echo(args_ns: argparse.Namespace) -> None:
    print(f"command: polytrunc {shlex.join(args_ns.raw_argv)}")


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _cmd_validate(args) -> int:
    _echo(args)
    records = []
    ok = 0
    rows = _read_file_records(args.file)
    for label, poly, err in rows:
        if poly is not None:
            print(f"{label}: ok f=({poly.f0},{poly.f1},{poly.f2})")
            records.append({"kind": "validate", "item": label, "ok": True,
                            "f": list(poly.f_vector)})
            ok += 1
        else:
            print(f"{label}: {type(err).__name__}: {err}")
            records.append({"kind": "validate", "item": label, "ok": False,
                            "error": type(err).__name__})
    print(f"summary: {ok}/{len(rows)} records valid")
    _records_out(records)
    return 0 if ok == len(rows) else USAGE_ERROR


def _cmd_pvector(args) -> int:
    _echo(args)
    records = []
    bad_parse = 0
    bad_star = 0
    for label, poly, err in _read_file_records(args.file):
        if poly is None:
            bad_parse += 1
            print(f"{label}: {type(err).__name__}: {err}")
            records.append({"kind": "pvector", "item": label, "ok": False,
                            "error": type(err).__name__})
            continue
        pv = p_vector(poly)
        star = check_star_identity(pv)
        bad_star += not star
        print(f"{label}: p-vector {pv.as_dict()} star-identity {'ok' if star else 'VIOLATED'}")
        records.append({"kind": "pvector", "item": label, "ok": True,
                        "p_vector": {str(k): c for k, c in pv.items()},
                        "star_identity": star})
    _records_out(records)
    if bad_star:
        return PROPERTY_ERROR
    return USAGE_ERROR if bad_parse else 0


def _cmd_belts(args) -> int:
    _echo(args)
    records = []
    mismatch = 0
    bad_parse = 0
    for label, poly, err in _read_file_records(args.file):
        if poly is None:
            bad_parse += 1
            print(f"{label}: {type(err).__name__}: {err}")
            continue
        belts = enumerate_3belts(poly)
        flag = is_flag(poly)
        oracle = is_flag_oracle(poly)
        mismatch += flag != oracle
        print(f"{label}: {len(belts)} three-belt(s); flag={flag} oracle={oracle}")
        for belt in belts:
            print(f"  belt faces {belt.faces}")
        records.append({"kind": "belts", "item": label,
                        "belts": [list(b.faces) for b in belts],
                        "flag": flag, "flag_oracle": oracle})
    _records_out(records)
    if mismatch:
        return PROPERTY_ERROR
    return USAGE_ERROR if bad_parse else 0


def _cmd_truncate(args) -> int:
    _echo(args)
    poly = _read_single(args.file)
    gamma = (
        EdgeSubgraph.all_edges(poly)
        if args.all_edges
        else _parse_edges(poly, args.edges)
    )
    predicted = predicted_face_sizes(poly, gamma)
    result = truncate(poly, gamma)
    out = result.polytope
    sizes = out.face_sizes
    exact = all(
        sizes[result.face_of_facet[f]] == want for f, want in predicted.facets.items()
    ) and all(
        sizes[result.face_of_edge[e]] == want for e, want in predicted.edge_faces.items()
    )

    print(f"cut {len(gamma)} edge(s): {','.join(_pairs_text(gamma))}")
    print(f"result: f=({out.f0},{out.f1},{out.f2}) p-vector {p_vector(out).as_dict()}")
    known = _catalog_match(out)
    if known:
        print(f"result is isomorphic to catalog {known}")
    print(f"predicted face sizes {'match' if exact else 'MISMATCH'}")
    for fid in sorted(result.face_of_facet):
        new = result.face_of_facet[fid]
        print(f"  facet {fid} -> face {new} (size {sizes[new]}, predicted {predicted.facets[fid]})")
    for e in sorted(result.face_of_edge):
        u, v = poly.edge_endpoints(e)
        new = result.face_of_edge[e]
        print(f"  edge {u}-{v} -> face {new} (size {sizes[new]}, predicted {predicted.edge_faces[e]})")
    text = write_canonical_text(out)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        print(f"wrote {args.output}")
    else:
        print("canonical text:")
        sys.stdout.write(text)
    _records_out([
        {
            "kind": "truncate",
            "item": args.file,
            "gamma": _pairs_text(gamma),
            "f": list(out.f_vector),
            "p_vector": {str(k): c for k, c in p_vector(out).items()},
            "predicted_sizes_match": exact,
        }
    ])
    return 0 if exact else PROPERTY_ERROR


def _cmd_flagcheck(args) -> int:
    _echo(args)
    poly = _read_single(args.file)
    gamma = (
        EdgeSubgraph.all_edges(poly)
        if args.all_edges
        else _parse_edges(poly, args.edges)
    )
    verdict = flag_criterion(poly, gamma)
    print(f"criterion: cut result {'flag' if verdict else 'not flag'}")
    record = {
        "kind": "flagcheck",
        "item": args.file,
        "gamma": _pairs_text(gamma),
        "criterion": verdict,
    }
    code = 0
    if args.verify:
        oracle = is_flag_oracle(truncate(poly, gamma).polytope)
        record["oracle"] = oracle
        print(f"oracle on the actual cut: {'flag' if oracle else 'not flag'}")
        if oracle != verdict:
            print("DISAGREEMENT between criterion and oracle")
            code = PROPERTY_ERROR
    _records_out([record])
    return code


def _cmd_flagify(args) -> int:
    _echo(args)
    poly = _read_single(args.file)
    expected = transformed_pvector(poly)
    result = flagify(poly)
    out = result.polytope
    actual = p_vector(out)
    flag = is_flag(out)
    oracle = is_flag_oracle(out)
    ok = actual == expected and flag and oracle
    print(f"input: f=({poly.f0},{poly.f1},{poly.f2}) p-vector {p_vector(poly).as_dict()}")
    print(f"output: f=({out.f0},{out.f1},{out.f2}) p-vector {actual.as_dict()}")
    print(f"p-vector transform {'matches' if actual == expected else 'MISMATCH'}"
          f" (expected {expected.as_dict()})")
    print(f"flag: {flag} (oracle {oracle})")
    if args.output:
        Path(args.output).write_text(write_canonical_text(out), encoding="utf-8")
        print(f"wrote {args.output}")
    _records_out([
        {
            "kind": "flagify",
            "item": args.file,
            "f": list(out.f_vector),
            "p_vector": {str(k): c for k, c in actual.items()},
            "transform_matches": actual == expected,
            "flag": flag,
            "flag_oracle": oracle,
        }
    ])
    return 0 if ok else PROPERTY_ERROR


def _cmd_verify(args) -> int:
    _echo(args)
    name, poly = _resolve_polytope(args.polytope)
    m = len(poly.edges)
    if args.sample is not None:
        if args.seed is None:
            print("error: --sample requires --seed", file=sys.stderr)
            return USAGE_ERROR
        mode = "sample"
    elif args.exhaustive or m <= EXHAUSTIVE_EDGE_LIMIT:
        if m > EXHAUSTIVE_EDGE_LIMIT:
            print(
                f"error: {m} edges is too many for --exhaustive; use --sample N --seed S",
                file=sys.stderr,
            )
            return USAGE_ERROR
        mode = "exhaustive"
    else:
        print(
            f"error: {m} edges needs --sample N --seed S (exhaustive limit is "
            f"{EXHAUSTIVE_EDGE_LIMIT})",
            file=sys.stderr,
        )
        return USAGE_ERROR

    census = AdmissibleCensus(poly)
    print(f"polytope: {name} f=({poly.f0},{poly.f1},{poly.f2})")
    if mode == "exhaustive":
        print(f"mode: exhaustive, {2 ** m} subgraphs examined, "
              f"{census.total_nonempty} admissible")
        subgraphs = admissible_subgraphs(poly)
    else:
        print(f"mode: sample, n={args.sample}, seed={args.seed}, "
              f"{census.total_nonempty} admissible subgraphs in total")
        subgraphs = admissible_subgraphs(poly, sample=args.sample, seed=args.seed)

    outcomes = sorted(
        run_sweep(poly, subgraphs, audit=True), key=lambda o: (len(o.edges), o.pairs)
    )
    records = []
    disagreements = 0
    invariant_failures = 0
    for o in outcomes:
        disagreements += not o.agree
        invariant_failures += not o.all_ok
        records.append({
            "kind": "verify",
            "polytope": name,
            "gamma": [f"{u}-{v}" for u, v in o.pairs],
            "valency1": o.valency1,
            "valency3": o.valency3,
            "criterion": o.criterion,
            "oracle": o.oracle,
            "f": list(o.out_f),
            "all_ok": o.all_ok,
        })
    checked = len(outcomes)
    agree = checked - disagreements
    pct = 100.0 * agree / checked if checked else 100.0
    print(f"checked {checked} admissible subgraph(s): agreements {agree} ({pct:.1f}%), "
          f"disagreements {disagreements}, invariant failures "
          f"{invariant_failures - disagreements if invariant_failures >= disagreements else invariant_failures}")
    _records_out(records)
    return PROPERTY_ERROR if invariant_failures else 0


def _cmd_scan(args) -> int:
    _echo(args)
    try:
        target = SparsePSequence(_parse_target(args.target))
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return USAGE_ERROR
    if args.catalog:
        stream = [(e.name, e.polytope) for e in catalog_entries()]
    else:
        stream = []
        for label, poly, err in _read_file_records(args.file):
            if poly is None:
                print(f"{label}: skipped ({type(err).__name__})")
            else:
                stream.append((label, poly))
    if not check_star_identity(dict(target.items())):
        print("note: target violates the face-count identity; "
              "no simple 3-polytope can match")
    matches = scan_for_sequence(
        [p for _, p in stream], target, flagify_matches=args.flagify
    )
    records = []
    for m in matches:
        label = stream[m.index][0]
        line = f"match: {label} p-vector {m.matched.as_dict()}"
        rec = {
            "kind": "scan",
            "item": label,
            "p_vector": {str(k): c for k, c in m.matched.items()},
        }
        if m.flagged is not None:
            fpv = p_vector(m.flagged.polytope)
            line += f" -> flag cut p-vector {fpv.as_dict()}"
            rec["flagified_p_vector"] = {str(k): c for k, c in fpv.items()}
        print(line)
        records.append(rec)
    print(f"summary: {len(matches)} match(es) among {len(stream)} polytope(s)")
    _records_out(records)
    return 0


def _catalog_match(poly: Polytope3) -> Optional[str]:
    """Name of the catalog entry isomorphic to ``poly``, if any."""
    from .polytope import canonical_form

    for entry in catalog_entries():
        if entry.polytope.f_vector == poly.f_vector and canonical_form(
            entry.polytope
        ) == canonical_form(poly):
            return entry.name
    return None


def _parse_target(text: str) -> dict[int, int]:
    out: dict[int, int] = {}
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "=" not in chunk:
            raise ValueError(f"bad target term {chunk!r}, expected k=count")
        k, c = chunk.split("=", 1)
        out[int(k)] = int(c)
    if not out:
        raise ValueError("empty target")
    return out


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _build_parser() -> _Parser:
    parser = _Parser(prog="polytrunc", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate every record of a file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("pvector", help="p-vectors and the face-count identity")
    p.add_argument("file")
    p.set_defaults(func=_cmd_pvector)

    p = sub.add_parser("belts", help="3-belts and flag status by both checkers")
    p.add_argument("file")
    p.set_defaults(func=_cmd_belts)

    def add_edges_options(p):
        group = p.add_mutually_exclusive_group(required=True)
        group.add_argument("--edges", help="comma-separated vertex pairs u-v")
        group.add_argument("--all-edges", action="store_true")

    p = sub.add_parser("truncate", help="cut an edge subgraph off a polytope")
    p.add_argument("file")
    add_edges_options(p)
    p.add_argument("-o", "--output", help="write the result as canonical text")
    p.set_defaults(func=_cmd_truncate)

    p = sub.add_parser("flagcheck", help="predict flagness of a cut")
    p.add_argument("file")
    add_edges_options(p)
    p.add_argument("--verify", action="store_true",
                   help="also run the brute-force oracle on the actual cut")
    p.set_defaults(func=_cmd_flagcheck)

    p = sub.add_parser("flagify", help="cut all edges; requires no triangles")
    p.add_argument("file")
    p.add_argument("-o", "--output", help="write the result as canonical text")
    p.set_defaults(func=_cmd_flagify)

    p = sub.add_parser("verify", help="sweep subgraphs, criterion vs oracle")
    p.add_argument("--polytope", required=True, help="catalog name or file")
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--sample", type=int)
    p.add_argument("--seed", type=int)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("scan", help="find polytopes matching a target p-vector")
    p.add_argument("file", nargs="?")
    p.add_argument("--catalog", action="store_true", help="scan the built-in catalog")
    p.add_argument("--target", required=True, help='e.g. "4=6" or "5=12"')
    p.add_argument("--flagify", action="store_true",
                   help="also cut every match into a flag polytope")
    p.set_defaults(func=_cmd_scan)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    if args.command == "scan" and bool(args.file) == bool(args.catalog):
        print("error: scan needs a file or --catalog (not both)", file=sys.stderr)
        return USAGE_ERROR
    args.raw_argv = argv
    try:
        return args.func(args)
    except FileNotFoundError as err:
        print(f"error: {err}", file=sys.stderr)
        return USAGE_ERROR
    except (PolytopeError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return USAGE_ERROR


def entry() -> None:  # console-script hook
    sys.exit(main())


if __name__ == "__main__":
    entry()
