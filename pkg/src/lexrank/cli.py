"""Command-line interface: ``lexrank <subcommand> ...``.

Exit codes: 0 success, 2 usage or parse error, 3 mathematical disagreement,
4 unresolved dual search.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from multiprocessing import Pool

from .duality import DualityError, alexander_dual, dual_presentation, dual_projdim
from .groebner import DEFAULT_VAR_LIMIT, GroebnerLimitError
from .lexsegment import SegmentError, all_pairs, build_segment, invariants_original, witness_case
from .monomial import MonomialError, MonomialIdeal, SquarefreeMonomial, parse_monomial
from .polynomial import GF32003, Polynomial, field_from_name
from .stanley_reisner import (
    ORACLE_LIMIT,
    OracleLimitError,
    hochster_betti,
    minimal_primes,
    oracle_invariants,
)
from .witness import (
    THREE_ELEMENT,
    UnresolvedError,
    WitnessError,
    certificate,
    dual_witness_original,
    groebner_verdict,
    quadratic_root_check,
    verify_sv,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DISAGREE = 3
EXIT_UNRESOLVED = 4

COMPARED = ("dim", "depth", "projdim", "reg")

CSV_COLUMNS = [
    "n", "u", "v", "shift", "case",
    "dim", "depth", "projdim", "reg", "ara", "height", "cm",
    "oracle_dim", "oracle_depth", "oracle_projdim", "oracle_reg",
    "agree_dim", "agree_depth", "agree_projdim", "agree_reg", "fields_agree",
    "cert_r", "cert_verdict", "cert_groebner",
    "dual_projdim", "oracle_dual_projdim", "terai",
    "dual_method", "dual_size", "dual_verdict", "dual_groebner",
    "ok",
]


class UsageError(Exception):
    pass


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def _parse_pair(args):
    n = args.n
    if n < 2:
        raise UsageError("n must be at least 2")
    try:
        u = parse_monomial(args.u, n)
        v = parse_monomial(args.v, n)
        build_segment(n, u, v)
    except (MonomialError, SegmentError) as exc:
        raise UsageError(str(exc)) from exc
    return n, u, v


def _field(args):
    try:
        return field_from_name(args.field)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


# --- invariants ------------------------------------------------------------

def cmd_invariants(args) -> int:
    n, u, v = _parse_pair(args)
    L, report = invariants_original(n, u, v)
    out = {"n": n, "u": str(u), "v": str(v), "shift": L.shift, "mu": L.mu,
           "closed": report.as_dict()}
    code = EXIT_OK
    if args.oracle:
        ideal = build_segment(n, u, v).ideal()
        oracle = oracle_invariants(ideal, _field(args), args.oracle_limit)
        agree = {key: getattr(report, key) == getattr(oracle, key) for key in COMPARED}
        out["oracle"] = oracle.as_dict()
        out["agree"] = agree
        if not all(agree.values()):
            code = EXIT_DISAGREE
    if args.format == "table":
        rows = [(k, out["closed"][k], out.get("oracle", {}).get(k, "")) for k in out["closed"]]
        print(f"L({u},{v}) n={n} shift={L.shift} mu={L.mu}")
        for key, closed, oracle in rows:
            print(f"  {key:<18}{str(closed):<8}{oracle}")
    else:
        _emit(out)
    return code


# --- witness ---------------------------------------------------------------

def cmd_witness(args) -> int:
    n, u, v = _parse_pair(args)
    field = _field(args)
    want_sv = args.verify in ("sv", "both")
    want_gb = args.verify in ("groebner", "both")
    if args.dual:
        try:
            w = dual_witness_original(n, u, v, field, groebner=want_gb, var_limit=args.var_limit)
        except UnresolvedError as exc:
            sys.stderr.write(f"UNRESOLVED: {exc}\n")
            for line in exc.search_log:
                sys.stderr.write(f"  {line}\n")
            return EXIT_UNRESOLVED
        out = w.to_json()
        if w.method == THREE_ELEMENT:
            out["quadratic_root_check"] = quadratic_root_check(w)
        ok = (not want_sv or w.verdict.ok) and (not want_gb or w.groebner.ok)
        if out.get("quadratic_root_check") is False:
            ok = False
        if args.log:
            out["search_log"] = w.search_log
    else:
        cert = certificate(n, u, v, groebner=want_gb, field=field, var_limit=args.var_limit)
        out = cert.to_json()
        ok = (not want_sv or cert.verdict.ok) and (not want_gb or cert.groebner.ok)
    out["n"] = n
    _emit(out)
    return EXIT_OK if ok else EXIT_DISAGREE


# --- dual ------------------------------------------------------------------

def cmd_dual(args) -> int:
    n, u, v = _parse_pair(args)
    L, _ = invariants_original(n, u, v)
    ideal = build_segment(n, u, v).ideal()
    pres = dual_presentation(ideal)
    closed = dual_projdim(L)
    out = {"n": n, "u": str(u), "v": str(v), **pres.to_json(),
           "dual_gens_text": [str(g) for g in pres.dual.gens],
           "dual_projdim": closed}
    code = EXIT_OK
    if args.oracle:
        field = _field(args)
        dual_table = hochster_betti(pres.dual, field, args.oracle_limit)
        primal_table = hochster_betti(ideal, field, args.oracle_limit)
        out["oracle_dual_projdim"] = dual_table.projdim
        out["oracle_reg"] = primal_table.reg_ideal
        out["dual_primes_height2"] = all(len(p) == 2 for p in minimal_primes(pres.dual, args.oracle_limit))
        if not (dual_table.projdim == primal_table.reg_ideal == closed):
            code = EXIT_DISAGREE
    _emit(out)
    return code


# --- betti -----------------------------------------------------------------

def cmd_betti(args) -> int:
    n, u, v = _parse_pair(args)
    ideal = build_segment(n, u, v).ideal()
    if args.dual:
        ideal = alexander_dual(ideal)
    table = hochster_betti(ideal, _field(args), args.oracle_limit)
    if args.format == "table":
        print(table)
    else:
        out = table.to_json()
        out["projdim"] = table.projdim
        out["reg"] = table.reg_ideal
        _emit(out)
    return EXIT_OK


# --- verify ----------------------------------------------------------------

def cmd_verify(args) -> int:
    try:
        if args.file == "-":
            data = json.load(sys.stdin)
        else:
            with open(args.file, encoding="utf-8") as fh:
                data = json.load(fh)
        target = MonomialIdeal.from_json(data["target"])
        kind = data["kind"]
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot read certificate: {exc}") from exc
    n = target.n
    field = _field(args)
    out = {"kind": kind}
    ok = True
    if kind == "sv_certificate":
        fam = [tuple(SquarefreeMonomial.from_vars(n, m) for m in a) for a in data["sets"]]
        if args.method in ("sv", "both"):
            verdict = verify_sv(fam, target)
            out["sv"] = str(verdict)
            ok &= verdict.ok
        polys = [Polynomial.monomial_sum(a, n, field) for a in fam]
    elif kind == "dual_witness":
        polys = [Polynomial.from_json(p, n, field) for p in data["polys_terms"]]
        if args.method == "sv":
            raise UsageError("dual witnesses can only be re-checked with --method groebner")
    else:
        raise UsageError(f"unknown certificate kind {kind!r}")
    if args.method in ("groebner", "both"):
        verdict = groebner_verdict(polys, target, args.var_limit)
        out["groebner"] = str(verdict)
        ok &= verdict.ok
    out["ok"] = ok
    _emit(out)
    return EXIT_OK if ok else EXIT_DISAGREE


# --- sweep -----------------------------------------------------------------

@dataclass
class SweepRow:
    n: int
    u: str
    v: str
    shift: int
    case: str
    closed: dict
    oracle: dict
    agree: dict
    fields_agree: bool
    cert_r: int
    cert_verdict: str
    cert_groebner: str
    dual_projdim: int
    oracle_dual_projdim: int
    terai: bool
    dual_method: str = ""
    dual_size: int | None = None
    dual_verdict: str = ""
    dual_groebner: str = ""
    unresolved: bool = False

    @property
    def ok(self) -> bool:
        fails = ("failed", "error")
        return (all(self.agree.values()) and self.fields_agree and self.terai
                and self.cert_r == self.closed["projdim"]
                and not self.cert_verdict.startswith(fails)
                and not self.cert_groebner.startswith(fails)
                and not self.dual_verdict.startswith(fails)
                and not self.dual_groebner.startswith(fails)
                and (self.dual_size is None or self.dual_size == self.dual_projdim)
                and not self.unresolved)

    def flat(self) -> dict:
        row = {"n": self.n, "u": self.u, "v": self.v, "shift": self.shift, "case": self.case}
        for key in ("dim", "depth", "projdim", "reg", "ara", "height", "cm"):
            row[key] = self.closed[key]
        for key in COMPARED:
            row[f"oracle_{key}"] = self.oracle[key]
            row[f"agree_{key}"] = self.agree[key]
        row.update(
            fields_agree=self.fields_agree, cert_r=self.cert_r, cert_verdict=self.cert_verdict,
            cert_groebner=self.cert_groebner, dual_projdim=self.dual_projdim,
            oracle_dual_projdim=self.oracle_dual_projdim, terai=self.terai,
            dual_method=self.dual_method, dual_size="" if self.dual_size is None else self.dual_size,
            dual_verdict=self.dual_verdict, dual_groebner=self.dual_groebner, ok=self.ok,
        )
        return row


def sweep_row(task) -> SweepRow:
    n, u_vars, v_vars, opts = task
    u = SquarefreeMonomial.from_vars(n, u_vars)
    v = SquarefreeMonomial.from_vars(n, v_vars)
    fields = [field_from_name(name) for name in opts["fields"]]
    L, closed = invariants_original(n, u, v)
    ideal = build_segment(n, u, v).ideal()
    oracles = [oracle_invariants(ideal, f) for f in fields]
    oracle = oracles[0]
    agree = {key: getattr(closed, key) == getattr(oracle, key) for key in COMPARED}
    fields_agree = all(o == oracle for o in oracles[1:])
    primal_table = hochster_betti(ideal, fields[0])
    dual = alexander_dual(ideal)
    oracle_dual_pd = hochster_betti(dual, fields[0]).projdim
    dpd = dual_projdim(L)
    terai = oracle_dual_pd == primal_table.reg_ideal == dpd
    use_gb = n <= opts["groebner_n_max"]
    try:
        cert = certificate(n, u, v, groebner=use_gb, field=GF32003, var_limit=opts["var_limit"])
        cert_r, cert_verdict = cert.r, str(cert.verdict)
        cert_gb = str(cert.groebner) if cert.groebner else "skipped"
    except (WitnessError, GroebnerLimitError) as exc:
        cert_r, cert_verdict, cert_gb = 0, f"error: {exc}", "skipped"
    row = SweepRow(n, str(u), str(v), L.shift, witness_case(L), closed.as_dict(), oracle.as_dict(), agree,
                   fields_agree, cert_r, cert_verdict, cert_gb, dpd, oracle_dual_pd, terai)
    if n <= opts["dual_n_max"]:
        try:
            w = dual_witness_original(n, u, v, GF32003, groebner=use_gb, var_limit=opts["var_limit"])
            row.dual_method = w.method
            row.dual_size = len(w.polys)
            verdict = str(w.verdict)
            if w.method == THREE_ELEMENT and not quadratic_root_check(w):
                verdict = "failed(quadratic identity)"
            row.dual_verdict = verdict
            row.dual_groebner = str(w.groebner) if w.groebner else "skipped"
        except UnresolvedError:
            row.dual_method, row.unresolved = "UNRESOLVED", True
        except (WitnessError, GroebnerLimitError) as exc:
            row.dual_verdict = f"error: {exc}"
    return row


def sweep_tasks(n_max: int, n_min: int, opts: dict) -> list:
    tasks = []
    for n in range(n_min, n_max + 1):
        for u, v in all_pairs(n):
            tasks.append((n, u.vars, v.vars, opts))
    return tasks


def run_sweep(n_max: int, n_min: int = 3, fields=("gf2",), groebner_n_max: int = 0,
              dual_n_max: int = 6, jobs: int = 1, var_limit: int = DEFAULT_VAR_LIMIT) -> list[SweepRow]:
    opts = {"fields": list(fields), "groebner_n_max": groebner_n_max,
            "dual_n_max": dual_n_max, "var_limit": var_limit}
    tasks = sweep_tasks(n_max, n_min, opts)
    if jobs > 1:
        with Pool(jobs) as pool:
            return list(pool.imap(sweep_row, tasks, chunksize=4))
    return [sweep_row(t) for t in tasks]


def format_rows(rows: list[SweepRow], out: str) -> str:
    buf = io.StringIO()
    if out == "csv":
        writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow(row.flat())
    else:
        for row in rows:
            buf.write(json.dumps(row.flat(), sort_keys=True) + "\n")
    return buf.getvalue()


def cmd_sweep(args) -> int:
    if args.n_max > ORACLE_LIMIT:
        raise UsageError(f"--n-max must be at most {ORACLE_LIMIT}")
    if args.n_min < 2 or args.n_min > args.n_max:
        raise UsageError("need 2 <= --n-min <= --n-max")
    fields = [f.strip() for f in args.fields.split(",") if f.strip()]
    try:
        for name in fields:
            field_from_name(name)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    rows = run_sweep(args.n_max, args.n_min, fields, args.groebner_n_max, args.dual_n_max,
                     max(1, args.jobs), args.var_limit)
    sys.stdout.write(format_rows(rows, args.out))
    bad = [r for r in rows if not r.ok]
    unresolved = sum(r.unresolved for r in rows)
    sys.stderr.write(f"rows={len(rows)} disagreements={len(bad)} unresolved={unresolved}\n")
    for r in bad:
        sys.stderr.write(f"  FAIL n={r.n} u={r.u} v={r.v}\n")
    if unresolved and len(bad) == unresolved:
        return EXIT_UNRESOLVED
    return EXIT_DISAGREE if bad else EXIT_OK


# --- parser ----------------------------------------------------------------

def _pair_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("-n", type=int, required=True, help="number of variables")
    p.add_argument("-u", required=True, help="upper quadric, e.g. x1x3, x1*x3 or [1,3]")
    p.add_argument("-v", required=True, help="lower quadric")


def _field_arg(p: argparse.ArgumentParser, default: str = "gf32003") -> None:
    p.add_argument("--field", default=default, help="gf2, gf<p> or q (default %(default)s)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lexrank", description="Lexsegment edge ideals: invariants and certificates.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="closed-form invariants")
    _pair_args(p)
    p.add_argument("--oracle", action="store_true", help="also run the Hochster oracle")
    p.add_argument("--oracle-limit", type=int, default=ORACLE_LIMIT)
    p.add_argument("--format", choices=["json", "table"], default="json")
    _field_arg(p, "gf2")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("witness", help="arithmetical-rank certificate")
    _pair_args(p)
    p.add_argument("--dual", action="store_true", help="certificate for the Alexander dual")
    p.add_argument("--verify", choices=["sv", "groebner", "both"], default="sv")
    p.add_argument("--var-limit", type=int, default=DEFAULT_VAR_LIMIT)
    p.add_argument("--log", action="store_true", help="include the dual search log")
    _field_arg(p)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("dual", help="Alexander dual and its projective dimension")
    _pair_args(p)
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--oracle-limit", type=int, default=ORACLE_LIMIT)
    _field_arg(p, "gf2")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("betti", help="graded Betti numbers via Hochster's formula")
    _pair_args(p)
    p.add_argument("--dual", action="store_true")
    p.add_argument("--oracle-limit", type=int, default=ORACLE_LIMIT)
    p.add_argument("--format", choices=["json", "table"], default="json")
    _field_arg(p, "gf2")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("sweep", help="cross-check every pair up to --n-max")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--n-min", type=int, default=3)
    p.add_argument("--groebner-n-max", type=int, default=0,
                   help="Groebner-verify certificates for n up to this (default off)")
    p.add_argument("--dual-n-max", type=int, default=6, help="build dual witnesses for n up to this")
    p.add_argument("--fields", default="gf2", help="comma list of oracle fields, e.g. gf2,q")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--var-limit", type=int, default=DEFAULT_VAR_LIMIT)
    p.add_argument("--out", choices=["csv", "jsonl"], default="csv")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="re-check a certificate JSON (file or -)")
    p.add_argument("file")
    p.add_argument("--method", choices=["sv", "groebner", "both"], default="both")
    p.add_argument("--var-limit", type=int, default=DEFAULT_VAR_LIMIT)
    _field_arg(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"lexrank: error: {exc}\n")
        return EXIT_USAGE
    except (OracleLimitError, GroebnerLimitError, DualityError, MonomialError, SegmentError) as exc:
        sys.stderr.write(f"lexrank: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
