"""Command-line interface: ``comin <command> [options]``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time

from . import __version__
from .cache import ResultCache, default_cache_dir
from .catalog import NAMING_HELP, CatalogError, catalog_entries, describe
from .chains import ChainError, cost_model, delta_i
from .chow import chow_ring, degree
from .incidence import incidence_matrix
from .poset import minuscule_poset, partition_of, from_partition, dual

log = logging.getLogger("comin")


class InputError(ValueError):
    pass


# -- rendering ---------------------------------------------------------------------


def _stringify(obj):
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, dict):
        return {k: _stringify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_stringify(v) for v in obj]
    return obj


def _table(headers: list[str], rows: list[list]) -> str:
    cells = [[str(h) for h in headers]] + [[str(x) for x in r] for r in rows]
    widths = [max(len(r[k]) for r in cells) for k in range(len(headers))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def _emit(args, payload: dict, table: str) -> None:
    if args.format == "json":
        print(json.dumps(_stringify(payload), indent=2, sort_keys=True))
    else:
        print(table)


# -- argument helpers ----------------------------------------------------------------


def _space(args):
    text = args.space if args.space is not None else args.root
    if text is None:
        raise InputError("a space is required: --space NAME or --root TYPE,RANK,NODE")
    try:
        if args.root is not None:
            t, n, node = [x.strip() for x in args.root.split(",")]
            return describe((t, int(n), int(node)))
        return describe(text)
    except (CatalogError, ValueError) as exc:
        msg = str(exc)
        raise InputError(msg if "valid spaces" in msg else f"{msg}\n{NAMING_HELP}") from None


def _parse_class(space, text: str):
    p = minuscule_poset(space)
    text = text.strip()
    if text and set(text) <= {"0", "1"} and len(text) == p.size:
        try:
            return p.from_bitstring(text)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    if space.family == "Grassmannian":
        body = text.strip("()[] ")
        try:
            lam = [int(x) for x in body.replace(" ", ",").split(",") if x] if body else []
            return from_partition(p, lam)
        except ValueError as exc:
            raise InputError(f"bad partition {text!r}: {exc}") from None
    raise InputError(f"expected a bitstring of length {p.size} for {space.canonical_id}, got {text!r}")


def _class_label(c) -> str:
    if c.poset.space.family == "Grassmannian":
        lam = partition_of(c)
        return f"{c.bitstring} s({','.join(map(str, lam))})"
    return c.bitstring


# -- commands ---------------------------------------------------------------------


def cmd_list(args, cache) -> None:
    rows = []
    records = []
    for s in catalog_entries(args.max_rank, include_exceptional=not args.no_exceptional):
        t, n, node = s.root_type
        rows.append([s.canonical_id, s.family, f"{t}{n}/{node}", s.dim, s.index, s.r, s.vmrt.label])
        records.append({"id": s.canonical_id, **s.to_record()})
    _emit(args, {"spaces": records}, _table(["space", "family", "root", "dim", "ind", "r", "V"], rows))


def cmd_info(args, cache) -> None:
    s = _space(args)
    R = chow_ring(s)
    rec = {"id": s.canonical_id, **s.to_record(), "degree": R.fundamental_degree(), "basis_size": len(R.basis)}
    rec["vmrt"]["degree"] = s.vmrt.degree
    rec["poset_elements"] = ["".join(map(str, r)) for r in R.poset.root_labels]
    t, n, node = s.root_type
    rows = [
        ["space", s.canonical_id],
        ["family", s.family],
        ["root", f"{t}{n}, node {node}"],
        ["dim", s.dim],
        ["ind", s.index],
        ["r", s.r],
        ["V", f"{s.vmrt.label} (dim {s.vmrt.dim_V}, deg {s.vmrt.degree})"],
        ["degree", rec["degree"]],
        ["basis size", rec["basis_size"]],
    ]
    _emit(args, rec, _table(["field", "value"], rows))


def cmd_basis(args, cache) -> None:
    s = _space(args)
    R = chow_ring(s)
    rows, recs = [], []
    for c in R.basis:
        d = degree(c)
        rows.append([_class_label(c), c.dim, c.codim, d, dual(c).bitstring])
        rec = {"ideal": c.bitstring, "dim": c.dim, "codim": c.codim, "degree": d, "dual": dual(c).bitstring}
        if s.family == "Grassmannian":
            rec["partition"] = list(partition_of(c))
        recs.append(rec)
    header = "element order: " + " ".join("".join(map(str, r)) for r in R.poset.root_labels)
    _emit(args, {"space": s.canonical_id, "classes": recs},
          header + "\n" + _table(["class", "dim", "codim", "degree", "dual"], rows))


def cmd_lr(args, cache) -> None:
    s = _space(args)
    a, b = _parse_class(s, args.sigma), _parse_class(s, args.tau)

    def compute():
        R = chow_ring(s)
        prod = R.lr_index(R.position[a], R.position[b])
        return [[R.basis[k].bitstring, str(v)] for k, v in sorted(prod.items())]

    terms = cache.get_or_compute(s.canonical_id, "lr", {"sigma": a.bitstring, "tau": b.bitstring}, compute)
    p = minuscule_poset(s)
    rows = [[_class_label(p.from_bitstring(bits)), v] for bits, v in terms]
    payload = {"space": s.canonical_id, "sigma": a.bitstring, "tau": b.bitstring,
               "product": [{"ideal": bits, "coefficient": v} for bits, v in terms]}
    _emit(args, payload, _table(["class", "coefficient"], rows) if rows else "0")


def cmd_incidence(args, cache) -> None:
    s = _space(args)

    def compute():
        m = incidence_matrix(s)
        return [[x.bitstring, y.bitstring, str(v)] for x, y, v in m.nonzero()]

    triples = cache.get_or_compute(s.canonical_id, "incidence", {}, compute)
    p = minuscule_poset(s)
    rows = [[_class_label(p.from_bitstring(x)), _class_label(p.from_bitstring(y)), v] for x, y, v in triples]
    payload = {"space": s.canonical_id, "entries": [{"sigma": x, "tau": y, "value": v} for x, y, v in triples]}
    _emit(args, payload, _table(["sigma", "tau", "a"], rows))


def _check_positive(name: str, value: int) -> None:
    if value < 1:
        raise InputError(f"{name} must be a positive integer, got {value}")


def cmd_delta(args, cache) -> None:
    s = _space(args)
    _check_positive("--i", args.i)
    model = cost_model(s, args.i)
    print(f"cost model: {json.dumps(model, sort_keys=True)}", file=sys.stderr)
    try:
        value = cache.get_or_compute(s.canonical_id, "delta", {"i": args.i}, lambda: {"delta": str(delta_i(s, args.i))})
    except ChainError as exc:
        raise InputError(str(exc)) from None
    prov = {"d_i": model["truncation_degree"], "basis_size": model["basis_size"], "truncation_degree": model["truncation_degree"]}
    payload = {"space": s.canonical_id, "i": args.i, "delta": value["delta"], **prov}
    rows = [["delta", value["delta"]], ["d_i", prov["d_i"]], ["basis size", prov["basis_size"]],
            ["truncation degree", prov["truncation_degree"]]]
    _emit(args, payload, _table(["field", "value"], rows))


def _report_rows(rec: dict, depth: int = 0) -> list[list]:
    pad = "  " * depth
    c = rec["components"]
    rows = [[pad + rec["space"], rec["d"], rec["case"], c["smoothness_term"], c["index_term"],
             c["delta_term"] if c["delta_term"] is not None else "skipped", rec["bound"], rec["binding"]]]
    if rec["child"]:
        rows += _report_rows(rec["child"], depth + 1)
    return rows


def cmd_bound(args, cache) -> None:
    from .bounds import char_bound

    s = _space(args)
    _check_positive("--d", args.d)
    if args.chain_length is not None:
        _check_positive("--chain-length", args.chain_length)
    if not args.skip_delta:
        length = args.chain_length or s.dim
        print(f"cost model: {json.dumps(cost_model(s, length), sort_keys=True)}", file=sys.stderr)
    params = {"d": args.d, "skip_delta": args.skip_delta, "chain_length": args.chain_length}
    try:
        rec = cache.get_or_compute(
            s.canonical_id, "bound", params,
            lambda: char_bound(s, args.d, skip_delta=args.skip_delta, chain_length=args.chain_length).to_record(),
        )
    except ChainError as exc:
        raise InputError(str(exc)) from None
    if args.json:
        args.format = "json"
    table = _table(["space", "d", "case", "smoothness", "index", "delta", "bound", "binding"], _report_rows(rec))
    notes = []
    r = rec
    while r:
        notes += [f"{r['space']}: {n}" for n in r["notes"]]
        r = r["child"]
    table += f"\neffective bound: p > {rec['effective_bound']}"
    if notes:
        table += "\n" + "\n".join(notes)
    _emit(args, rec, table)


def cmd_selftest(args, cache) -> int:
    from .selftest import run

    return 0 if run(include_e7=args.include_e7) else 1


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["table", "json"], default="table")
    common.add_argument("--cache-dir", default=None, help="result cache root (default: $COMIN_CACHE_DIR or ~/.cache/comin)")
    common.add_argument("--no-cache", action="store_true", help="neither read nor write the cache")
    common.add_argument("-v", "--verbose", action="store_true")

    space = argparse.ArgumentParser(add_help=False)
    g = space.add_mutually_exclusive_group()
    g.add_argument("--space", help="Gr(i,N), P(n), Q(m), LG(n), OG(n), E6 or E7")
    g.add_argument("--root", help="root spelling TYPE,RANK,NODE such as A,3,2")

    parser = argparse.ArgumentParser(prog="comin", description="Schubert calculus and rigidity bounds for cominuscule varieties.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("list", parents=[common], help="catalog of cominuscule spaces")
    p.add_argument("--max-rank", type=int, default=8)
    p.add_argument("--no-exceptional", action="store_true")
    p.set_defaults(func=cmd_list)

    p = sub.add_parser("info", parents=[common, space], help="invariants of one space")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("basis", parents=[common, space], help="Schubert basis with degrees")
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("lr", parents=[common, space], help="product of two Schubert classes")
    p.add_argument("sigma", help="ideal bitstring, or a partition such as 2,1 on Grassmannians")
    p.add_argument("tau")
    p.set_defaults(func=cmd_lr)

    p = sub.add_parser("incidence", parents=[common, space], help="line-incidence matrix")
    p.set_defaults(func=cmd_incidence)

    p = sub.add_parser("delta", parents=[common, space], help="chain intersection number delta_X(i)")
    p.add_argument("--i", type=int, required=True)
    p.set_defaults(func=cmd_delta)

    p = sub.add_parser("bound", parents=[common, space], help="characteristic bound for d-rigidity")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--json", action="store_true", help="same as --format json")
    p.add_argument("--skip-delta", action="store_true")
    p.add_argument("--chain-length", type=int, default=None, help="override the chain length used in the delta term")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("selftest", parents=[common], help="run the invariant suite")
    p.add_argument("--include-e7", action="store_true")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s", stream=sys.stderr)
    cache = ResultCache(args.cache_dir or default_cache_dir(), enabled=not args.no_cache)
    start = time.perf_counter()
    try:
        status = args.func(args, cache) or 0
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (AssertionError, ArithmeticError) as exc:
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    elapsed = time.perf_counter() - start
    print(f"[{args.command}: {elapsed:.3f}s, cache {cache.last_status or 'unused'}]", file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
