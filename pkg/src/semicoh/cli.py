"""Command-line interface.

Subcommands: analyze, compare, rank, rst, isotropy, census, fixtures.
Exit codes: 0 ok, 2 invalid input, 3 internal invariant violation,
4 dimension limit.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .cache import cache_get, cache_key, cache_put
from .cyclotomic import exponent_multiset, matrix_census
from .engines import build_table, molien_column, rank_column
from .errors import (
    CohomologyError,
    DimensionTooLarge,
    InputError,
    InternalInvariantError,
)
from .fixtures import fixture_suite
from .groups import (
    GroupSpec,
    free_outside_origin,
    isotropy_data,
    max_finite_subgroup_census,
    rst_decompose,
)
from .iojson import (
    canonical_dumps,
    group_to_json_dict,
    load_group_file,
    parse_table,
    render_table,
    table_markdown,
    table_to_dict,
)
from .report import (
    compare_report,
    render_report_csv,
    render_report_json,
    render_report_markdown,
)


def _add_common(parser: argparse.ArgumentParser, with_engine=True):
    parser.add_argument("input", help="JSON group description file")
    parser.add_argument("--max-degree", type=int, default=None, metavar="L",
                        help="top degree (default n+3)")
    parser.add_argument("--format", choices=("json", "md", "csv"), default="md")
    parser.add_argument("--prime", type=int, default=None,
                        help="restrict torsion reporting to one prime")
    parser.add_argument("--no-cache", action="store_true")
    if with_engine:
        parser.add_argument("--engine", choices=("formula", "oracle", "both"),
                            default="both")
        parser.add_argument("--variant", choices=("published", "corrected", "both"),
                            default="both")


def _resolve_degree(spec: GroupSpec, value) -> int:
    return spec.n + 3 if value is None else value


def _emit(text: str):
    sys.stdout.write(text)


def _cached_table(spec, engine, max_degree, use_cache):
    key = cache_key(spec, engine, max_degree)
    if use_cache:
        hit = cache_get(key)
        if hit is not None:
            try:
                table = parse_table(hit)
                if (table.n, table.m, table.engine) == (spec.n, spec.m, engine):
                    return table
            except Exception:  # noqa: BLE001 - corrupt cache entry: recompute
                pass
    table = build_table(spec, max_degree, engine)
    if use_cache:
        cache_put(key, render_table(table))
    return table


def _engine_list(args) -> list[str]:
    engines = []
    if args.engine in ("formula", "both"):
        if args.variant in ("published", "both"):
            engines.append("formula-published")
        if args.variant in ("corrected", "both"):
            engines.append("formula-corrected")
    if args.engine in ("oracle", "both"):
        engines.append("oracle")
    return engines


def cmd_analyze(args) -> int:
    spec = load_group_file(args.input)
    max_degree = _resolve_degree(spec, args.max_degree)
    tables = [
        _cached_table(spec, engine, max_degree, not args.no_cache)
        for engine in _engine_list(args)
    ]
    if args.format == "json":
        docs = [table_to_dict(t) for t in tables]
        _emit(canonical_dumps(docs[0] if len(docs) == 1 else {"tables": docs}))
    elif args.format == "md":
        _emit("\n".join(table_markdown(t) for t in tables))
    else:
        primes = [args.prime] if args.prime else list(spec.primes)
        header = ["degree"]
        for t in tables:
            header += [f"{t.engine}_rank", f"{t.engine}_torsion"]
            header += [f"{t.engine}_theta{p}" for p in primes]
        lines = [",".join(header)]
        for l in range(max_degree + 1):
            row = [str(l)]
            for t in tables:
                g = t.groups[l]
                row += [str(g.rank), ";".join(str(f) for f in g.torsion)]
                row += [str(g.p_multiplicity(p)) for p in primes]
            lines.append(",".join(row))
        _emit("\n".join(lines) + "\n")
    return 0


def cmd_compare(args) -> int:
    spec = load_group_file(args.input)
    max_degree = _resolve_degree(spec, args.max_degree)
    report = compare_report(spec, max_degree)
    if args.prime:
        report["torsion"] = [r for r in report["torsion"] if r["prime"] == args.prime]
    if args.format == "json":
        _emit(render_report_json(report))
    elif args.format == "md":
        _emit(render_report_markdown(report))
    else:
        _emit(render_report_csv(report))
    return 0


def cmd_rank(args) -> int:
    spec = load_group_file(args.input)
    max_degree = _resolve_degree(spec, args.max_degree)
    wedge = list(rank_column(spec, max_degree))
    molien = list(molien_column(spec, max_degree))
    oracle = list(
        _cached_table(spec, "oracle", max_degree, not args.no_cache).rank_column()
    )
    doc = {
        "name": spec.name or "group",
        "max_degree": max_degree,
        "wedge_count": wedge,
        "molien": molien,
        "oracle": oracle,
        "all_agree": wedge == molien == oracle,
    }
    if args.format == "json":
        _emit(canonical_dumps(doc))
    elif args.format == "csv":
        lines = ["degree,wedge_count,molien,oracle"]
        lines += [f"{l},{wedge[l]},{molien[l]},{oracle[l]}" for l in range(max_degree + 1)]
        _emit("\n".join(lines) + "\n")
    else:
        _emit(
            f"ranks 0..{max_degree}: {wedge}\n"
            f"trace average agrees: {molien == wedge}\n"
            f"oracle agrees: {oracle == wedge}\n"
        )
    return 0


def _primes_for(args, spec):
    if args.prime:
        if args.prime not in spec.primes:
            raise InputError(f"{args.prime} is not a prime factor of m={spec.m}")
        return [args.prime]
    return list(spec.primes)


def cmd_rst(args) -> int:
    spec = load_group_file(args.input)
    doc = {}
    for p in _primes_for(args, spec):
        rst = rst_decompose(spec, p)
        doc[str(p)] = {
            "r": rst.r,
            "s": rst.s,
            "t": rst.t,
            "trivial_block_census": {str(d): mu for d, mu in rst.r_census.multiplicities},
            "free_origin_block_census": {str(d): mu for d, mu in rst.t_census.multiplicities},
            "r_basis": [list(row) for row in rst.r_basis.data],
            "t_basis": [list(row) for row in rst.t_basis.data] if rst.t_basis else None,
            "t_generators": [list(row) for row in rst.t_generators.data],
            "adapted_basis": [list(row) for row in rst.adapted_basis.data],
        }
    if args.format == "json":
        _emit(canonical_dumps(doc))
    else:
        for p, entry in sorted(doc.items(), key=lambda kv: int(kv[0])):
            _emit(f"p={p}: (r, s, t) = ({entry['r']}, {entry['s']}, {entry['t']})\n")
            _emit(f"  trivial block census: {entry['trivial_block_census']}\n")
            _emit(f"  free-origin block census: {entry['free_origin_block_census']}\n")
    return 0


def cmd_isotropy(args) -> int:
    spec = load_group_file(args.input)
    doc = {}
    for p in _primes_for(args, spec):
        iso = isotropy_data(spec, p)
        doc[str(p)] = {
            "divisors": list(iso.divisors),
            "m_d": {str(d): v for d, v in iso.m_d},
            "k_d": {str(d): v for d, v in iso.k_d},
        }
    if args.format == "json":
        _emit(canonical_dumps(doc))
    else:
        for p, entry in sorted(doc.items(), key=lambda kv: int(kv[0])):
            _emit(f"p={p}: D={entry['divisors']} m_d={entry['m_d']} k_d={entry['k_d']}\n")
    return 0


def cmd_census(args) -> int:
    spec = load_group_file(args.input)
    census = matrix_census(spec.phi, spec.m)
    exponents = exponent_multiset(census)
    free = free_outside_origin(spec)
    doc = {
        "cyclotomic_census": {str(d): mu for d, mu in census.multiplicities},
        "exponent_multiset": {str(a): c for a, c in exponents.counts},
        "free_outside_origin": {
            "per_prime": {str(p): flag for p, flag in free.per_prime},
            "overall": free.overall,
        },
    }
    if free.overall and spec.m > 1:
        mf = max_finite_subgroup_census(spec)
        doc["max_finite_subgroups"] = {
            "class_counts": {str(q): c for q, c in mf.class_counts},
            "nonzero_type_counts": {str(q): c for q, c in mf.nonzero_type_counts},
        }
    if args.format == "json":
        _emit(canonical_dumps(doc))
    else:
        _emit(f"cyclotomic census: {doc['cyclotomic_census']}\n")
        _emit(f"eigenvalue exponents (mod {spec.m}): {doc['exponent_multiset']}\n")
        _emit(f"free outside the origin: {doc['free_outside_origin']}\n")
        if "max_finite_subgroups" in doc:
            _emit(f"maximal finite subgroup classes: {doc['max_finite_subgroups']}\n")
    return 0


def cmd_fixtures(args) -> int:
    suite = fixture_suite()
    if args.dir:
        outdir = Path(args.dir)
        outdir.mkdir(parents=True, exist_ok=True)
        for fixture in suite:
            path = outdir / f"{fixture.name}.json"
            path.write_text(canonical_dumps(group_to_json_dict(fixture.spec)),
                            encoding="utf-8")
        _emit(f"wrote {len(suite)} fixtures to {outdir}\n")
        return 0
    for fixture in suite:
        status = "valid" if fixture.valid else "rejected-by-validation"
        _emit(f"{fixture.name}: n={fixture.spec.n} m={fixture.spec.m} ({status})\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semicoh",
        description="Exact integral cohomology of Z^n x| Z/m (m square-free): "
        "closed-form engines reconciled against a Smith-form evaluator.",
    )
    parser.add_argument("--version", action="version", version=f"semicoh {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="compute cohomology tables")
    _add_common(p_analyze)
    p_analyze.set_defaults(func=cmd_analyze)

    p_compare = sub.add_parser("compare", help="three-way reconciliation report")
    _add_common(p_compare, with_engine=False)
    p_compare.set_defaults(func=cmd_compare)

    p_rank = sub.add_parser("rank", help="free ranks, three independent ways")
    _add_common(p_rank, with_engine=False)
    p_rank.set_defaults(func=cmd_rank)

    p_rst = sub.add_parser("rst", help="per-prime (r, s, t) decomposition")
    _add_common(p_rst, with_engine=False)
    p_rst.set_defaults(func=cmd_rst)

    p_iso = sub.add_parser("isotropy", help="isotropy divisors D, m_d, k_d")
    _add_common(p_iso, with_engine=False)
    p_iso.set_defaults(func=cmd_isotropy)

    p_census = sub.add_parser("census", help="eigenvalue census and class counts")
    _add_common(p_census, with_engine=False)
    p_census.set_defaults(func=cmd_census)

    p_fix = sub.add_parser("fixtures", help="list or export the fixture corpus")
    p_fix.add_argument("--dir", default=None, help="write fixture JSON files here")
    p_fix.set_defaults(func=cmd_fixtures)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DimensionTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InternalInvariantError as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return 3
    except CohomologyError as exc:  # pragma: no cover - catch-all safety
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
