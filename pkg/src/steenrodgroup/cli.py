"""Command-line front end: JSON in, JSON/CSV out, deterministic for a seed.

Exit codes: 0 success, 1 verification failure (counterexample serialized in
the report), 2 usage error (bad arguments, malformed JSON, limit exceeded).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .algebra import AlgebraError
from .group import (
    GroupError,
    commutator,
    compose,
    filtration_level,
    invert_closed,
    invert_recursive,
    invert_split,
    rho,
)
from .grouptheory import (
    GroupTheoryError,
    SeriesReport,
    enumerate_group,
    ev_subgroup_series,
    lower_central_series,
)
from .hopf import (
    HopfError,
    antipode_defect,
    coassociativity_defect,
    cocommutativity_defect,
    counit_defect,
    dual_mod_J,
    dual_steenrod,
    level_algebra,
    level_mod_I,
    milnor_quotient,
    milnor_quotient_ev,
    primitivity_check,
)
from .milnor import DualSymbol, MilnorError, in_dual_span, in_J_basis
from .partitions import PartitionError, enumerate_compositions
from .serialize import (
    SerializeError,
    filtration_to_str,
    group_from_obj,
    group_to_obj,
)
from .verify import run_suites

USAGE_ERROR = 2


class CliError(Exception):
    pass


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise CliError(f"cannot read JSON from {path}: {exc}") from exc


def _emit(args, payload, is_csv: bool = False):
    if is_csv:
        text = payload
    else:
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_pair(args):
    obj = _load_json(args.infile)
    if not isinstance(obj, dict) or "a" not in obj or "b" not in obj:
        raise CliError('expected {"a": <group element>, "b": <group element>}')
    return group_from_obj(obj["a"]), group_from_obj(obj["b"])


def cmd_compose(args) -> int:
    a, b = _load_pair(args)
    _emit(args, group_to_obj(compose(a, b)))
    return 0


def cmd_invert(args) -> int:
    g = group_from_obj(_load_json(args.infile))
    fn = {"recursive": invert_recursive, "closed": invert_closed, "split": invert_split}[args.method]
    _emit(args, group_to_obj(fn(g)))
    return 0


def cmd_commutator(args) -> int:
    a, b = _load_pair(args)
    _emit(args, group_to_obj(commutator(a, b)))
    return 0


def cmd_filtration(args) -> int:
    g = group_from_obj(_load_json(args.infile))
    _emit(args, {"level": filtration_to_str(filtration_level(g))})
    return 0


def cmd_rho(args) -> int:
    g = group_from_obj(_load_json(args.infile))
    _emit(args, group_to_obj(rho(g)))
    return 0


def cmd_partitions(args) -> int:
    comps = enumerate_compositions(args.n)
    _emit(args, [list(c.parts) for c in comps])
    return 0


def _series_obj(rep: SeriesReport, order: int, p: int, n: int) -> dict:
    return {
        "p": p,
        "n": n,
        "order": order,
        "kind": rep.kind,
        "sizes": rep.sizes,
        "class": rep.length,
        "bound": rep.bound,
        "ok": rep.ok,
    }


def cmd_lcs(args) -> int:
    base = milnor_quotient(args.p, args.n).algebra
    G = enumerate_group(base, args.n, args.p)
    rep = lower_central_series(G)
    payload = _series_obj(rep, G.order, args.p, args.n)
    if args.ev:
        ev = ev_subgroup_series(base, args.n, args.p)
        payload["ev"] = {"sizes": ev.sizes, "class": ev.length, "bound": ev.bound, "ok": ev.ok}
    _emit(args, payload)
    return 0 if rep.ok in (True, None) else 1


DEFAULT_SWEEP = [(2, 1), (2, 2), (3, 0), (3, 1)]


def cmd_sweep(args) -> int:
    grid = DEFAULT_SWEEP
    if args.p:
        grid = [(p, n) for p, n in grid if p == args.p]
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["p", "n", "algebra", "order", "class", "bound", "ok"])
    failed = False
    for p, n in grid:
        hp = milnor_quotient(p, n)
        G = enumerate_group(hp.algebra, n, p)
        rep = lower_central_series(G)
        ok = rep.ok is True
        failed = failed or not ok
        writer.writerow([p, n, hp.label, G.order, rep.length, rep.bound, ok])
    _emit(args, buf.getvalue(), is_csv=True)
    return 1 if failed else 0


PRESETS = {
    "A_dual": lambda a: dual_steenrod(a.p, a.N, a.D),
    "A": lambda a: milnor_quotient(a.p, a.n),
    "A_ev": lambda a: milnor_quotient_ev(a.p, a.n),
    "A_angle": lambda a: level_algebra(a.p, a.k, a.N, a.D),
    "A_mod_I": lambda a: level_mod_I(a.p, a.k, a.N),
    "A_mod_J": lambda a: dual_mod_J(a.p, a.k, a.N),
}


def cmd_hopf(args) -> int:
    try:
        hp = PRESETS[args.preset](args)
    except KeyError:
        raise CliError(f"unknown preset {args.preset!r}; choose from {sorted(PRESETS)}")
    counterexamples = []
    alg = hp.algebra
    for g in alg.generators:
        x = alg.gen(g.name)
        if coassociativity_defect(hp, x):
            counterexamples.append({"law": "coassociativity", "generator": g.name})
        l, r = counit_defect(hp, x)
        if not (l.is_zero() and r.is_zero()):
            counterexamples.append({"law": "counit", "generator": g.name})
        l, r = antipode_defect(hp, x)
        if not (l.is_zero() and r.is_zero()):
            counterexamples.append({"law": "antipode", "generator": g.name})
    defects = [
        {"generator": name, "defect": repr(t)}
        for name, t in cocommutativity_defect(hp)
        if not t.is_zero()
    ]
    payload = {
        "check": "hopf",
        "preset": args.preset,
        "label": hp.label,
        "degree_bound": hp.D,
        "primitive": primitivity_check(hp),
        "cocommutativity_defects": defects,
        "ok": not counterexamples,
        "counterexamples": counterexamples,
    }
    _emit(args, payload)
    return 0 if not counterexamples else 1


def _parse_seq(raw: str):
    raw = raw.strip()
    if not raw:
        return ()
    return tuple(int(v) for v in raw.split(","))


def cmd_milnor(args) -> int:
    E = _parse_seq(args.E)
    R = _parse_seq(args.R)
    if args.action == "in-j":
        verdict = in_J_basis(E, R, args.k, args.p)
    else:
        verdict = in_dual_span(DualSymbol(args.p, R, E), args.k)
    _emit(args, {"action": args.action, "p": args.p, "k": args.k, "E": list(E), "R": list(R), "result": verdict})
    return 0


def cmd_verify(args) -> int:
    results = run_suites(args.p, args.k, args.seed, args.samples)
    payload = {
        "p": args.p,
        "k": args.k,
        "seed": args.seed,
        "samples": args.samples,
        "suites": [r.to_obj() for r in results],
        "ok": all(r.ok for r in results),
    }
    _emit(args, payload)
    return 0 if payload["ok"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="steenrodgroup",
        description="Exact computations in mod-p composition groups of stunted series and the dual algebra family.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, infile=False):
        sp.add_argument("--out", default=None, help="output path (default stdout)")
        if infile:
            sp.add_argument("--in", dest="infile", required=True, help="input JSON path")

    sp = sub.add_parser("compose", help="compose two serialized group elements")
    common(sp, infile=True)
    sp.set_defaults(fn=cmd_compose)

    sp = sub.add_parser("invert", help="invert a serialized group element")
    common(sp, infile=True)
    sp.add_argument("--method", choices=["recursive", "closed", "split"], default="recursive")
    sp.set_defaults(fn=cmd_invert)

    sp = sub.add_parser("commutator", help="commutator of two serialized group elements")
    common(sp, infile=True)
    sp.set_defaults(fn=cmd_commutator)

    sp = sub.add_parser("filtration", help="filtration level of a group element")
    common(sp, infile=True)
    sp.set_defaults(fn=cmd_filtration)

    sp = sub.add_parser("rho", help="apply the level-raising quotient map")
    common(sp, infile=True)
    sp.set_defaults(fn=cmd_rho)

    sp = sub.add_parser("partitions", help="list all compositions of n")
    sp.add_argument("n", type=int)
    common(sp)
    sp.set_defaults(fn=cmd_partitions)

    sp = sub.add_parser("lcs", help="lower central series of an enumerated finite group")
    sp.add_argument("--p", type=int, default=2)
    sp.add_argument("--n", type=int, default=1)
    sp.add_argument("--ev", action="store_true", help="also report the eps-free subgroup series")
    common(sp)
    sp.set_defaults(fn=cmd_lcs)

    sp = sub.add_parser("sweep", help="run the finite-group grid, emit CSV")
    sp.add_argument("--p", type=int, default=None)
    sp.add_argument("--format", choices=["csv"], default="csv")
    common(sp)
    sp.set_defaults(fn=cmd_sweep)

    sp = sub.add_parser("hopf", help="Hopf-axiom report for a named preset")
    sp.add_argument("--preset", required=True)
    sp.add_argument("--p", type=int, default=2)
    sp.add_argument("--k", type=int, default=0)
    sp.add_argument("--n", type=int, default=2)
    sp.add_argument("--N", type=int, default=4)
    sp.add_argument("--D", type=int, default=None)
    common(sp)
    sp.set_defaults(fn=cmd_hopf)

    sp = sub.add_parser("milnor", help="basis membership predicates")
    sp.add_argument("action", choices=["in-j", "in-span"])
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--k", type=int, default=0)
    sp.add_argument("--E", default="")
    sp.add_argument("--R", default="")
    common(sp)
    sp.set_defaults(fn=cmd_milnor)

    sp = sub.add_parser("verify", help="run all property suites")
    sp.add_argument("--p", type=int, default=2)
    sp.add_argument("--k", type=int, default=4)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--samples", type=int, default=50)
    common(sp)
    sp.set_defaults(fn=cmd_verify)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (
        CliError,
        SerializeError,
        AlgebraError,
        GroupError,
        GroupTheoryError,
        HopfError,
        MilnorError,
        PartitionError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


def main() -> None:
    sys.exit(run())
