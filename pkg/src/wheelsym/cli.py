"""Deterministic command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 internal fault.
All JSON output is canonical (sorted keys, fixed separators) and carries a
schema version field.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .charseries import b_n_closed_k1, b_n_formula, chi_k2, chi_kr, compare_with_oracle
from .cycfield import CycField
from .dualspace import EElement, epsilon, straighten
from .frobenius import build_basis, split_by_slim, verify_basis
from .partitions import (
    Partition,
    admissible_filter,
    enumerate_partitions,
    parse_partition,
    slim_filter,
)
from .polyring import MPoly, SymPoly
from .specialpolys import hall_littlewood, macdonald_operator
from .wheel import WheelSpec, dimension_oracle, is_member, oracle_cell

SCHEMA = "1"


def emit(obj, out_path=None):
    text = json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _partition_key(lam) -> str:
    return ",".join(str(p) for p in lam)


def _m_coeffs_json(f: SymPoly) -> dict:
    return {
        _partition_key(lam): c.to_json()
        for lam, c in sorted(f.m_coeffs().items(), key=lambda kv: tuple(kv[0]))
    }


def _e_terms_json(e: EElement) -> dict:
    return {
        _partition_key(lam): c.to_json()
        for lam, c in sorted(e.terms.items(), key=lambda kv: tuple(kv[0]))
    }


def _load_sym_poly(path: str) -> SymPoly:
    with open(path) as fh:
        return SymPoly(MPoly.from_json(json.load(fh)))


def _oracle_cells(k, r, n_max, d_max, jobs):
    args = [(k, r, n, d) for n in range(n_max + 1) for d in range(d_max + 1)]
    if jobs and jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            cells = list(pool.map(oracle_cell, args))
    else:
        cells = [oracle_cell(a) for a in args]
    return {(n, d): dim for n, d, dim in sorted(cells)}


# ---------------------------------------------------------------------------
# subcommand handlers


def cmd_partitions(args):
    if args.filter == "admissible":
        pred = admissible_filter(args.k, args.r)
    elif args.filter == "slim":
        pred = slim_filter(args.r - 1)
    else:
        pred = None
    lams = enumerate_partitions(args.n, args.max_weight, pred)
    emit(
        {
            "schema": SCHEMA,
            "n": args.n,
            "filter": args.filter,
            "partitions": [_partition_key(l) for l in lams],
            "count": len(lams),
        }
    )
    return 0


def cmd_hl(args):
    lam = parse_partition(args.lam)
    field = CycField(args.t_order)
    f = hall_littlewood(lam, field.root(1), field, args.n)
    emit({"schema": SCHEMA, "m_coeffs": _m_coeffs_json(f)})
    return 0


def cmd_macop(args):
    f = _load_sym_poly(args.poly)
    q = Fraction(args.q)
    t = Fraction(args.t)
    result = macdonald_operator(args.r, q, t, f)
    emit({"schema": SCHEMA, "m_coeffs": _m_coeffs_json(result)})
    return 0


def cmd_member(args):
    f = _load_sym_poly(args.poly)
    spec = WheelSpec(args.k, args.r, field=f.field)
    ok, witness = is_member(f, spec)
    payload = {"schema": SCHEMA, "member": ok}
    if witness is not None:
        payload["witness"] = {
            "plane": [c.to_json() for c in witness["plane"]],
            "monomial": list(witness["monomial"]),
            "coeff": witness["coeff"].to_json(),
        }
    emit(payload)
    return 0


def cmd_dim(args):
    cells = _oracle_cells(args.k, args.r, args.n, args.max_deg, args.jobs)
    table = {
        "schema": SCHEMA,
        "k": args.k,
        "r": args.r,
        "entries": [
            {"n": n, "d": d, "dim": dim}
            for (n, d), dim in sorted(cells.items())
            if n == args.n
        ],
    }
    emit(table, args.out)
    return 0


def cmd_char(args):
    series = (
        chi_k2(args.k, args.zmax, args.vmax)
        if args.r == 2
        else chi_kr(args.k, args.r, args.zmax, args.vmax)
    )
    rows = []
    oracle = None
    if args.method in ("oracle", "both"):
        oracle = _oracle_cells(args.k, args.r, args.zmax, args.vmax, args.jobs)
    for n in range(args.zmax + 1):
        for d in range(args.vmax + 1):
            row = {"n": n, "d": d}
            if args.method in ("formula", "both"):
                row["formula"] = series.coefficient(n, d)
            if oracle is not None:
                row["oracle"] = oracle[(n, d)]
            if args.method == "both":
                row["match"] = row["formula"] == row["oracle"]
            rows.append(row)
    if args.format == "csv":
        cols = ["n", "d"] + (
            ["formula"] if args.method == "formula" else []
        ) + (["oracle"] if args.method == "oracle" else []) + (
            ["formula", "oracle", "match"] if args.method == "both" else []
        )
        lines = [",".join(cols)]
        for row in rows:
            lines.append(",".join(str(row[c]).lower() if isinstance(row[c], bool) else str(row[c]) for c in cols))
        text = "\n".join(lines) + "\n"
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    else:
        emit({"schema": SCHEMA, "k": args.k, "r": args.r, "cells": rows}, args.out)
    if args.method == "both" and not all(r["match"] for r in rows):
        return 1
    return 0


def cmd_epsilon(args):
    field = CycField(args.k + 1)
    e = epsilon(args.i, args.k, field.root(1))
    emit({"schema": SCHEMA, "terms": _e_terms_json(e)})
    return 0


def cmd_straighten(args):
    field = CycField(args.k + 1)
    lam = parse_partition(args.e)
    result = straighten(EElement.basis(lam, field), args.k, field.root(1))
    emit({"schema": SCHEMA, "terms": _e_terms_json(result)})
    return 0


def cmd_basis(args):
    spec = WheelSpec(args.k, args.r)
    elements = build_basis(spec, args.n, args.max_deg)
    payload = {
        "schema": SCHEMA,
        "k": args.k,
        "r": args.r,
        "n": args.n,
        "elements": [
            {"lam": _partition_key(el.lam), "mu": _partition_key(el.mu), "degree": el.total_degree}
            for el in elements
        ],
    }
    status = 0
    if args.verify:
        dims = {
            d: dimension_oracle(spec, args.n, d) for d in range(args.max_deg + 1)
        }
        report = verify_basis(elements, spec, dims)
        payload["report"] = {
            "independence": report["independent"],
            "membership_failures": report["membership_failures"],
            "degrees": [
                {"degree": d, "count": v["count"], "oracle_dim": v["oracle_dim"]}
                for d, v in sorted(report["degrees"].items())
            ],
            "ok": report["ok"],
        }
        status = 0 if report["ok"] else 1
    emit(payload, args.out)
    return status


def cmd_split(args):
    f = _load_sym_poly(args.poly)
    spec = WheelSpec(args.k, args.r, field=f.field)
    tg = Fraction(args.t_generic) if args.t_generic else None
    cofactors = split_by_slim(f, spec, tg)
    emit(
        {
            "schema": SCHEMA,
            "cofactors": {
                _partition_key(mu): _m_coeffs_json(p)
                for mu, p in sorted(cofactors.items(), key=lambda kv: tuple(kv[0]))
            },
        }
    )
    return 0


# ---------------------------------------------------------------------------
# verify suites

CHAR_SUITES = {
    "char-k1r2": (1, 2, 4, 8),
    "char-k2r2": (2, 2, 4, 8),
    "char-k1r4": (1, 4, 3, 8),
    "char-k2r3": (2, 3, 3, 8),
}


def _run_char_suite(name, jobs):
    k, r, n_max, d_max = CHAR_SUITES[name]
    series = chi_k2(k, n_max, d_max) if r == 2 else chi_kr(k, r, n_max, d_max)
    oracle = _oracle_cells(k, r, n_max, d_max, jobs)
    failures = []
    for (n, d), dim in sorted(oracle.items()):
        formula = series.coefficient(n, d)
        if formula != dim:
            failures.append({"n": n, "d": d, "formula": formula, "oracle": dim})
    return {"suite": name, "cells": len(oracle), "failures": failures, "ok": not failures}


def _run_bn_suite():
    failures = []
    for k in range(1, 4):
        series = chi_k2(k, 5, 12)
        for n in range(6):
            if series.row(n) != b_n_formula(k, n, 12):
                failures.append({"k": k, "n": n, "check": "product-vs-sum"})
    for n in range(6):
        if b_n_closed_k1(n, 12) != b_n_formula(1, n, 12):
            failures.append({"k": 1, "n": n, "check": "closed-form"})
    return {"suite": "bn-identities", "failures": failures, "ok": not failures}


def _run_hl_suite(k):
    from .partitions import partitions_of_weight
    from .specialpolys import NormalizationPoleError

    spec = WheelSpec(k, 2)
    failures = []
    for n in range(1, 4):
        for d in range(7):
            count = 0
            for lam in partitions_of_weight(d, n):
                admissible = lam.is_admissible(k, 1)
                try:
                    P = hall_littlewood(lam, spec.t, spec.field, n)
                    had_pole = False
                except NormalizationPoleError:
                    had_pole = True
                if admissible == had_pole:
                    failures.append({"lam": _partition_key(lam), "n": n, "check": "pole"})
                    continue
                if not admissible:
                    continue
                count += 1
                ok, _ = is_member(P, spec)
                if not ok:
                    failures.append({"lam": _partition_key(lam), "n": n, "check": "membership"})
            if count != dimension_oracle(spec, n, d):
                failures.append({"n": n, "d": d, "check": "count"})
    return {"suite": f"hl-basis-k{k}", "failures": failures, "ok": not failures}


def run_suite(name, jobs=1):
    if name in CHAR_SUITES:
        return _run_char_suite(name, jobs)
    if name == "bn-identities":
        return _run_bn_suite()
    if name == "hl-basis-k1":
        return _run_hl_suite(1)
    if name == "hl-basis-k2":
        return _run_hl_suite(2)
    if name == "all":
        reports = [run_suite(s, jobs) for s in SUITE_NAMES if s != "all"]
        return {
            "suite": "all",
            "reports": reports,
            "ok": all(r["ok"] for r in reports),
        }
    raise KeyError(name)


SUITE_NAMES = sorted(CHAR_SUITES) + ["bn-identities", "hl-basis-k1", "hl-basis-k2", "all"]


def cmd_verify(args):
    report = run_suite(args.suite, args.jobs)
    report["schema"] = SCHEMA
    emit(report, args.out)
    return 0 if report["ok"] else 1


# ---------------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(prog="wheelsym")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("partitions", help="enumerate partitions with filters")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-weight", type=int, required=True)
    p.add_argument("--filter", choices=["all", "admissible", "slim"], default="all")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--r", type=int, default=2)
    p.set_defaults(func=cmd_partitions)

    p = sub.add_parser("hl", help="Hall-Littlewood polynomial at a root of unity")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t-order", type=int, required=True)
    p.set_defaults(func=cmd_hl)

    p = sub.add_parser("macop", help="apply a Macdonald operator to a polynomial file")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--q", required=True)
    p.add_argument("--t", required=True)
    p.add_argument("--poly", required=True)
    p.set_defaults(func=cmd_macop)

    p = sub.add_parser("member", help="wheel-condition membership test")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--poly", required=True)
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("dim", help="brute-force dimension table")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-deg", type=int, required=True)
    p.add_argument("--out")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("char", help="character series, formula and/or oracle")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--zmax", type=int, required=True)
    p.add_argument("--vmax", type=int, required=True)
    p.add_argument("--method", choices=["formula", "oracle", "both"], default="formula")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--out")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_char)

    p = sub.add_parser("epsilon", help="relation-series coefficient in the dual algebra")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.set_defaults(func=cmd_epsilon)

    p = sub.add_parser("straighten", help="rewrite a dual basis element in admissible form")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--e", required=True)
    p.set_defaults(func=cmd_straighten)

    p = sub.add_parser("basis", help="product basis of the wheel space")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-deg", type=int, required=True)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("split", help="slim-cofactor decomposition of a polynomial file")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--poly", required=True)
    p.add_argument("--t-generic")
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("--suite", choices=SUITE_NAMES, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except (ArithmeticError, AssertionError) as err:
        print(f"internal fault: {err}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
