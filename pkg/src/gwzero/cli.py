"""Command-line interface.

Exit codes: 0 success (a "not determined" result is a success), 2 input
error, 3 internal inconsistency (the closed forms and the axiom oracle
disagree).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .distinguish import distinguish_stabilized
from .errors import GWZeroError, NotDeterminedError
from .fourmanifold import blow_up
from .gw import GWQuery, evaluate, moduli_dim, reduce_via_axioms
from .manifest import (
    dumps,
    load_manifest,
    manifold_to_dict,
    query_to_dict,
    report_to_dict,
    report_to_text,
    value_to_dict,
)
from .randomized import oracle_sweep

EXIT_INPUT = 2
EXIT_INCONSISTENT = 3


def _out(text: str) -> None:
    sys.stdout.write(text + "\n")


def cmd_info(args) -> int:
    m = load_manifest(args.manifest)
    x = m.manifold(args.name)
    bp, bm = x.signature()
    info = {
        "name": x.name,
        "rank": x.rank,
        "signature": [bp, bm],
        "sigma": bp - bm,
        "b2_plus": bp,
        "parity": str(x.lattice.parity()),
        "determinant": x.lattice.det(),
        "simply_connected": x.simply_connected,
        "minimal": x.minimal,
        "exceptional_classes": [list(e) for e in x.exceptional_classes],
        "warnings": list(x.warnings),
    }
    if args.json:
        _out(dumps(info))
        return 0
    _out(f"{x.name}: rank {x.rank}, signature ({bp}, {bm}) = {bp - bm}, b2+ = {bp}, {info['parity']}")
    _out(f"  simply connected: {x.simply_connected}, minimal: {x.minimal}")
    for e in x.exceptional_classes:
        _out(f"  exceptional class {list(e)}")
    for w in x.warnings:
        _out(f"  warning: {w}")
    return 0


def cmd_blowup(args) -> int:
    m = load_manifest(args.manifest)
    x = blow_up(m.manifold(args.name), args.label, name=args.new_name)
    text = dumps({"version": 1, "manifolds": [manifold_to_dict(x)]})
    if args.out:
        Path(args.out).write_text(text + "\n")
    else:
        _out(text)
    return 0


def _eval_one(name: str, q: GWQuery, args) -> tuple[dict, bool]:
    v = evaluate(q)
    row = {"name": name, "query": query_to_dict(q), "moduli_dim": moduli_dim(q.space, q.cls, q.k)}
    row.update(value_to_dict(v, args.trace))
    agree = True
    if args.oracle:
        o = reduce_via_axioms(q)
        row["oracle"] = value_to_dict(o, args.trace)
        if v.determined and o.determined:
            agree = v.value == o.value
            row["agreement"] = "AGREE" if agree else "DISAGREE"
        else:
            row["agreement"] = "N/A"
    return row, agree


def cmd_eval(args) -> int:
    m = load_manifest(args.manifest)
    selected = [m.query(r) for r in args.query] if args.query else m.queries
    rows, ok = [], True
    for name, q in selected:
        row, agree = _eval_one(name, q, args)
        rows.append(row)
        ok &= agree
    if args.json:
        _out(dumps(rows))
    else:
        for row in rows:
            val = row["value"] if "value" in row else f"NotDetermined ({row['not_determined']})"
            line = f"{row['name']}: GW = {val}  [moduli dim {row['moduli_dim']}]"
            if args.oracle:
                o = row["oracle"]
                oval = o["value"] if "value" in o else f"NotDetermined ({o['not_determined']})"
                line += f"  oracle = {oval}  {row['agreement']}"
            _out(line)
            if args.trace:
                for t in row.get("trace", []):
                    _out(f"    - {t}")
                for t in row.get("oracle", {}).get("trace", []):
                    _out(f"    - oracle: {t}")
    return 0 if ok else EXIT_INCONSISTENT


def cmd_distinguish(args) -> int:
    m = load_manifest(args.manifest)
    r = distinguish_stabilized(m.manifold(args.name1), m.manifold(args.name2))
    _out(dumps(report_to_dict(r)) if args.json else report_to_text(r))
    return 0


def cmd_oracle_check(args) -> int:
    res = oracle_sweep(args.n, args.seed)
    summary = {
        "seed": res.seed,
        "queries": res.total,
        "compared": res.compared,
        "nonzero": res.nonzero,
        "disagreements": len(res.disagreements),
        "peel_order_checks": res.peel_checks,
        "peel_order_failures": res.peel_failures,
        "ok": res.ok,
    }
    if args.json:
        _out(dumps(summary))
    else:
        for key, val in summary.items():
            _out(f"{key}: {val}")
        for q, a, b in res.disagreements[:5]:
            _out(f"DISAGREE {json.dumps(query_to_dict(q))}: eval={a} oracle={b}")
    return 0 if res.ok else EXIT_INCONSISTENT


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gwzero", description="Genus-zero Gromov-Witten invariants of 4-manifolds and X x S2.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("info", help="lattice and minimality data of a manifold")
    s.add_argument("manifest")
    s.add_argument("name")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_info)

    s = sub.add_parser("blowup", help="emit the blowup of a manifold as a manifest")
    s.add_argument("manifest")
    s.add_argument("name")
    s.add_argument("label")
    s.add_argument("--new-name", default=None)
    s.add_argument("--out", default=None)
    s.set_defaults(func=cmd_blowup)

    s = sub.add_parser("eval", help="evaluate manifest queries")
    s.add_argument("manifest")
    s.add_argument("--query", action="append", help="query name or index (repeatable; default all)")
    s.add_argument("--oracle", action="store_true", help="cross-check with the axiom reduction")
    s.add_argument("--trace", action="store_true")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_eval)

    s = sub.add_parser("distinguish", help="compare the stabilizations of two manifolds")
    s.add_argument("manifest")
    s.add_argument("name1")
    s.add_argument("name2")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_distinguish)

    s = sub.add_parser("oracle-check", help="randomized closed-form vs axiom-oracle equivalence")
    s.add_argument("--seed", type=int, default=None, help="default: $GWZERO_SEED or a fixed seed")
    s.add_argument("-n", type=int, default=1000)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_oracle_check)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NotDeterminedError as exc:
        _out(f"not determined: {exc.reason}")
        return 0
    except (GWZeroError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
