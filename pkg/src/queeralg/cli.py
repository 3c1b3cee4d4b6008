"""Command-line front door: verification suites, classification tables,
weight tables and product/Schur reports, in plain text or structured JSON
with exact scalar strings.  Identical inputs produce byte-identical
structured reports."""

from __future__ import annotations

import argparse
import json
import sys

from .cartanmod import CartanAlgebra, PsiFunctional
from .coeffalg import algebra_from_spec, gamma_from_spec, preset_base_field
from .graded import GradedMap, GradedSpace
from .hwmod import TruncatedVerma, SimpleQuotient
from .liesuper import LieModule, from_assoc
from .mapsuper import invariants, tensor_lie
from .products import Catalog, classify_enumerate, hat_tensor_flat, schur_data
from .queer import build_q
from .scalars import Tower
from .verify import SUITES, run_suites

USAGE_EXIT = 2
FAILURE_EXIT = 1


def _emit(report: dict, text_lines, fmt: str, out_path):
    if fmt == "structured":
        payload = json.dumps(report, sort_keys=True, indent=1) + "\n"
    else:
        payload = "\n".join(text_lines) + "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


def _load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise SystemExit(
            f"error: {path}: line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from exc
    except OSError as exc:
        raise SystemExit(f"error: cannot read {path}: {exc}") from exc


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    report = run_suites(names, args.seed)
    report["command"] = "verify"
    report["suite"] = args.suite
    lines = [f"verification suites (seed {args.seed})"]
    for suite in report["suites"]:
        lines.append(f"[{suite['name']}]")
        for c in suite["checks"]:
            mark = "ok  " if c["passed"] else "FAIL"
            detail = f"  ({c['detail']})" if c["detail"] else ""
            lines.append(f"  {mark} {c['name']}{detail}")
    lines.append(f"failures: {report['failures']}")
    _emit(report, lines, args.format, args.out)
    return 0 if report["failures"] == 0 else FAILURE_EXIT


def cmd_classify(args) -> int:
    tower = Tower()
    qd = build_q(tower, args.n)
    alg = algebra_from_spec(tower, _load_json(args.algebra)) if args.algebra \
        else preset_base_field(tower)
    catalog = Catalog(qd)
    wanted = [s for s in args.catalog.split(",") if s]
    for name in wanted:
        if name not in catalog.entries:
            print(f"error: unknown catalog entry {name!r} "
                  f"(available: {', '.join(catalog.names())})",
                  file=sys.stderr)
            return USAGE_EXIT
    for name in list(catalog.entries):
        if name not in wanted:
            catalog.entries.pop(name)
    ms = tensor_lie(qd, alg)
    inv = None
    if args.group:
        act = gamma_from_spec(tower, _load_json(args.group), alg, qd)
        try:
            inv = invariants(ms, act)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return FAILURE_EXIT
    try:
        rep = classify_enumerate(ms, catalog, inv=inv)
    except (ValueError, AssertionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FAILURE_EXIT
    rows = []
    for r in rep["rows"]:
        rows.append({
            "assignment": {str(k): v for k, v in sorted(r.assignment.items())},
            "dim": r.dim,
            "graded_dims": list(r.graded_dims),
            "irreducible": r.irreducible,
            "schur_factor_types": ["Q" if q else "M" for q in r.schur_types],
            "support": r.support,
            "annihilator_basis": r.ann_basis,
            "reduced_support": r.reduced,
            "top_weight": list(r.top_weight or ()),
        })
    report = {"command": "classify", "n": args.n,
              "twisted": rep["twisted"], "catalog": rep["catalog"],
              "pairwise_distinct": rep["pairwise_distinct"], "rows": rows}
    lines = [f"classification over q({args.n}), "
             f"{'twisted' if rep['twisted'] else 'untwisted'}",
             f"catalog: {', '.join(rep['catalog'])}",
             f"{'assignment':40s} {'dim':>5s} {'even|odd':>9s} "
             f"{'support':>10s} reduced"]
    for r in rows:
        assign = ",".join(f"{k}:{v}" for k, v in r["assignment"].items())
        lines.append(f"{assign:40s} {r['dim']:5d} "
                     f"{r['graded_dims'][0]:4d}|{r['graded_dims'][1]:<4d} "
                     f"{str(r['support']):>10s} {r['reduced_support']}")
    lines.append(f"all irreducible, pairwise non-isomorphic: "
                 f"{rep['pairwise_distinct']}")
    _emit(report, lines, args.format, args.out)
    return 0


def cmd_dims(args) -> int:
    tower = Tower()
    qd = build_q(tower, args.n)
    spec = _load_json(args.psi)
    alg = algebra_from_spec(tower, spec["algebra"]) if "algebra" in spec \
        else preset_base_field(tower)
    ctx = CartanAlgebra(qd, alg)
    psi = PsiFunctional.from_pairs(ctx, spec.get("values", []))
    ms = tensor_lie(qd, alg)
    vm = TruncatedVerma(ms, psi, args.depth)
    sq = SimpleQuotient(vm)
    sing = vm.singular_dims()
    betas = sorted(vm.dims_by_weight(), key=lambda b: (sum(b), b))
    rows = []
    for beta in betas:
        if sq.quot_dims.get(beta, 0) == 0 and sum(beta) > 0:
            continue
        rows.append({"weight_coords": list(beta),
                     "induced_dim": vm.dims_by_weight()[beta],
                     "simple_dim": sq.quot_dims.get(beta, 0),
                     "singular_dim": sing[beta]})
    report = {"command": "dims", "n": args.n, "depth": args.depth,
              "conclusive": sq.conclusive,
              "highest_weight_dim": vm.h_mod.dim,
              "total_simple_dim": sum(r["simple_dim"] for r in rows),
              "rows": rows}
    lines = [f"weight table for q({args.n}), depth {args.depth} "
             f"(conclusive: {sq.conclusive})",
             f"{'weight':>12s} {'induced':>8s} {'simple':>7s} {'singular':>9s}"]
    for r in rows:
        lines.append(f"{str(tuple(r['weight_coords'])):>12s} "
                     f"{r['induced_dim']:8d} {r['simple_dim']:7d} "
                     f"{r['singular_dim']:9d}")
    lines.append(f"total simple dim: {report['total_simple_dim']}")
    _emit(report, lines, args.format, args.out)
    return 0


def _decompose_factor(tower, qd, catalog, name):
    if name == "qone":
        from .assocsuper import make_Q
        g = from_assoc(make_Q(tower, 1))
        sp = GradedSpace(1, 1)
        one, zero = tower.one(), tower.zero()
        mats = [GradedMap(tower, sp, sp, [[one, zero], [zero, one]]),
                GradedMap(tower, sp, sp, [[zero, one], [one, zero]])]
        return LieModule(g, sp, mats)
    if name in catalog.entries:
        return catalog.entries[name]["flat"]
    raise SystemExit(f"error: unknown factor {name!r} "
                     f"(catalog: {', '.join(catalog.names())}, qone)")


def cmd_decompose(args) -> int:
    tower = Tower()
    qd = build_q(tower, args.n)
    catalog = Catalog(qd)
    names = [s for s in args.factors.split(",") if s]
    if len(names) < 2:
        print("error: need at least two factors", file=sys.stderr)
        return USAGE_EXIT
    factors = [_decompose_factor(tower, qd, catalog, n) for n in names]
    schurs = [schur_data(f) for f in factors]
    steps = []
    cur, cur_s = factors[0], schurs[0]
    for name, f, s in zip(names[1:], factors[1:], schurs[1:]):
        prod, info = hat_tensor_flat(cur, f, s1=cur_s, s2=s)
        steps.append({
            "factor": name,
            "split": info["split"],
            "dims": [cur.dim, f.dim, prod.dim],
            "halves": [info["plus"].dim, info["minus"].dim]
            if info["split"] else None,
        })
        cur = prod
        cur_s = schur_data(cur) if cur.dim <= 8 else _schur_stub(info, cur_s, s)
    report = {"command": "decompose", "n": args.n, "factors": names,
              "factor_schur_types": ["Q" if s.is_type_q else "M"
                                     for s in schurs],
              "steps": steps, "result_dim": cur.dim}
    lines = [f"irreducible product over q({args.n}) factors: "
             + ", ".join(names),
             "factor Schur types: "
             + ", ".join("Q" if s.is_type_q else "M" for s in schurs)]
    for st in steps:
        if st["split"]:
            lines.append(f"  (x) {st['factor']}: tensor "
                         f"{st['dims'][0]}x{st['dims'][1]} splits "
                         f"V({st['halves'][0]}) (+) V({st['halves'][1]})")
        else:
            lines.append(f"  (x) {st['factor']}: tensor "
                         f"{st['dims'][0]}x{st['dims'][1]} irreducible, "
                         f"dim {st['dims'][2]}")
    lines.append(f"result dim: {cur.dim}")
    _emit(report, lines, args.format, args.out)
    return 0


def _schur_stub(info, s1, s2):
    from .products import SchurData
    if info["split"] or not (s1.is_type_q or s2.is_type_q):
        return SchurData(1, None, None, None)
    return SchurData(1, info.get("phi"), None, info.get("phi"))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="queeralg",
        description="Exact computations with queer Lie superalgebras, their "
                    "map superalgebras and finite-dimensional modules.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--seed", type=int, default=7)
        sp.add_argument("--format", choices=("text", "structured"),
                        default="text")
        sp.add_argument("--out", default=None)

    pv = sub.add_parser("verify", help="run named verification suites")
    pv.add_argument("suite", choices=tuple(SUITES) + ("all",))
    common(pv)
    pv.set_defaults(func=cmd_verify)

    pc = sub.add_parser("classify",
                        help="enumerate irreducible modules over the preset")
    pc.add_argument("--n", type=int, default=2)
    pc.add_argument("--algebra", default=None,
                    help="JSON preset file; default is the base field")
    pc.add_argument("--group", default=None, help="JSON group-action file")
    pc.add_argument("--catalog", default="trivial,adjoint")
    common(pc)
    pc.set_defaults(func=cmd_classify)

    pd = sub.add_parser("dims", help="weight table of a truncated module")
    pd.add_argument("--n", type=int, default=2)
    pd.add_argument("--psi", required=True, help="JSON functional file")
    pd.add_argument("--depth", type=int, default=None)
    common(pd)
    pd.set_defaults(func=cmd_dims)

    pq = sub.add_parser("decompose",
                        help="Schur/product report for catalog factors")
    pq.add_argument("--n", type=int, default=2)
    pq.add_argument("--factors", required=True,
                    help="comma-separated catalog names (or 'qone')")
    common(pq)
    pq.set_defaults(func=cmd_decompose)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_EXIT if exc.code not in (0, None) else 0
    if getattr(args, "depth", "missing") is None:
        args.depth = args.n * (args.n + 1)
    try:
        return args.func(args)
    except SystemExit as exc:
        if isinstance(exc.code, str):
            print(exc.code, file=sys.stderr)
            return USAGE_EXIT
        return exc.code if exc.code is not None else 0


if __name__ == "__main__":
    sys.exit(main())
