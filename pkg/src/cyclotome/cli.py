"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or precondition error.
Records go to stdout as JSON lines (or CSV); errors go to stderr as one JSON
object carrying the violated clause.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from . import affine, cyclotomic, quantum
from .config import Budget
from .distance import min_distance
from .errors import CyclotomeError, EvenModulus, SearchBudgetExceeded

EXIT_OK, EXIT_VERIFY, EXIT_USAGE = 0, 1, 2

CATALOG_COLUMNS = ["family", "q", "n", "j", "k", "d_kind", "d", "d_lo", "d_hi",
                   "pure_to", "pure_to_kind", "degenerate", "params"]


@dataclass(frozen=True)
class RunConfig:
    budget: Budget
    output_format: str = "json"


class UsageError(Exception):
    pass


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _flatten(obj: dict, prefix: str = "") -> dict:
    out = {}
    for key, value in obj.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            out.update(_flatten(value, name + "."))
        elif isinstance(value, list):
            out[name] = _dumps(value)
        else:
            out[name] = value
    return out


def _emit(records: Sequence[dict], fmt: str, stream) -> None:
    if fmt == "json":
        for rec in records:
            stream.write(_dumps(rec) + "\n")
        return
    rows = [_flatten(r) for r in records]
    cols = sorted({c for r in rows for c in r})
    writer = csv.DictWriter(stream, fieldnames=cols, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)


def _error(exc: Exception, stream) -> int:
    clause = getattr(exc, "clause", type(exc).__name__)
    payload = {"error": clause, "message": str(exc)}
    if getattr(exc, "violated", None):
        payload["violated"] = exc.violated
    stream.write(_dumps(payload) + "\n")
    return EXIT_USAGE


def _checked(rec: quantum.QuantumCodeRecord) -> dict:
    if not quantum.singleton_check(rec):
        raise AssertionError(f"{rec.label()} fails the quantum Singleton bound")
    return rec.to_dict()


# -- commands ---------------------------------------------------------------------

def cmd_affine(p: int, r: int, m: int, want_quantum: bool, cfg: RunConfig) -> list[dict]:
    records = []
    for cls in affine.maximal_affine_invariant_codes(p, r, m):
        row = {"record": "affine_maximal", **cls.to_dict()}
        if want_quantum:
            row["quantum"] = _checked(quantum.affine_quantum_family(p, r, m, cfg.budget, j=cls.j))
        records.append(row)
    return records


def cmd_duadic(n: int, q: int, want_quantum: bool, degenerate: bool, cfg: RunConfig) -> list[dict]:
    if n % 2 == 0:
        raise EvenModulus(f"n = {n} is even")
    square = cyclotomic.is_square_mod(q, n)
    head = {"record": "duadic_existence", "n": n, "q": q, "square": square, "exists": square}
    try:
        splits = cyclotomic.find_splittings(n, q, n_cap=cfg.budget.n_cap)
        head["splittings"] = [s.to_dict() for s in splits]
    except SearchBudgetExceeded as exc:
        splits = []
        head["splittings"] = None
        head["splittings_skipped"] = str(exc)
    out = [head]
    if splits:
        out.append(_classical_duadic(n, q, splits[0], cfg.budget))
    if want_quantum or degenerate:
        rec = (quantum.degenerate_duadic_family(n, q, cfg.budget) if degenerate
               else quantum.duadic_quantum(n, q, cfg.budget))
        out.append({"record": "quantum", **_checked(rec)})
    return out


def _classical_duadic(n: int, q: int, sp: cyclotomic.Splitting, budget: Budget) -> dict:
    codes = quantum.duadic_codes(n, q, sp.s1, sp.s2)
    row = {"record": "duadic_classical", "n": n, "q": q, "splitting": sp.to_dict()}
    for name, code in (("even_like_1", codes.even1), ("odd_like_1", codes.odd1),
                       ("odd_like_2", codes.odd2)):
        entry = {"k": code.k, "defining_set": list(code.t.elements), "generator": code.g.encodings()}
        try:
            entry["d"] = min_distance(code, budget).to_dict()
        except CyclotomeError as exc:
            entry["d"] = {"kind": "skipped", "reason": exc.clause}
        row[name] = entry
    # odd-like minimum weight d satisfies d^2 >= n, and d^2 - d + 1 >= n under mu_-1
    row["odd_like_weight_floor"] = (quantum.sqrt_bound(n) if sp.a == n - 1
                                    else math.isqrt(n - 1) + 1)
    return row


def cmd_verify(suite: str, stream) -> int:
    from .verify import SUITES, run_suite
    if suite != "all" and suite not in SUITES:
        raise UsageError(f"unknown suite {suite!r}")
    failed = 0
    for name, ok, detail in run_suite(suite):
        stream.write(f"{'PASS' if ok else 'FAIL'} {name}: {detail}\n")
        failed += not ok
    return EXIT_VERIFY if failed else EXIT_OK


def _catalog_row(rec: quantum.QuantumCodeRecord, j: Optional[int], params: dict) -> dict:
    d = rec.distance
    num = lambda x: None if x is None else ("inf" if x == math.inf else int(x))
    return {"family": rec.family, "q": rec.q, "n": rec.n, "j": j, "k": rec.k,
            "d_kind": d.kind, "d": num(d.d_lo) if d.exact else None,
            "d_lo": num(d.d_lo), "d_hi": num(d.d_hi),
            "pure_to": rec.pure_to, "pure_to_kind": rec.pure_to_kind,
            "degenerate": rec.degenerate, "params": params}


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, dict):
        return _dumps(value)
    return str(value)


def cmd_catalog(ps, rs, ms, ns, qs, degenerate: bool, cfg: RunConfig, err) -> list[dict]:
    rows = []

    def skip(params: dict, exc: Exception) -> None:
        err.write(_dumps({"skip": params, "error": getattr(exc, "clause", type(exc).__name__),
                          "message": str(exc)}) + "\n")

    for p in ps:
        for r in rs:
            for m in ms:
                params = {"p": p, "r": r, "m": m}
                try:
                    if m % r:
                        raise affine.InvalidParameters(f"r={r} does not divide m={m}")
                    for cls in affine.maximal_affine_invariant_codes(p, r, m):
                        rec = quantum.affine_quantum_family(p, r, m, cfg.budget, j=cls.j)
                        _checked(rec)
                        rows.append(_catalog_row(rec, cls.j, params))
                except CyclotomeError as exc:
                    skip(params, exc)
    for q in qs:
        for n in ns:
            if n % 2 == 0:
                continue
            params = {"n": n, "q": q}
            try:
                rec = quantum.duadic_quantum(n, q, cfg.budget)
                _checked(rec)
                rows.append(_catalog_row(rec, None, params))
            except CyclotomeError as exc:
                skip(params, exc)
            if degenerate:
                try:
                    rec = quantum.degenerate_duadic_family(n, q, cfg.budget)
                    _checked(rec)
                    rows.append(_catalog_row(rec, None, params))
                except CyclotomeError as exc:
                    skip({**params, "family": quantum.DEGENERATE}, exc)
    rows.sort(key=lambda r: (r["family"], r["q"], r["n"], -1 if r["j"] is None else r["j"]))
    return rows


def write_catalog(rows: list[dict], fmt: str, stream) -> None:
    if fmt == "json":
        for row in rows:
            stream.write(_dumps(row) + "\n")
        return
    writer = csv.DictWriter(stream, fieldnames=CATALOG_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({c: _csv_cell(row[c]) for c in CATALOG_COLUMNS})


# -- argument parsing ---------------------------------------------------------------

def int_list(text: str) -> list[int]:
    """Parse ``2,3,5`` or ``1-4`` or a mix: ``1-3,7``."""
    out: list[int] = []
    for part in filter(None, (x.strip() for x in text.split(","))):
        lo, sep, hi = part.partition("-")
        if sep:
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return out


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cyclotome", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default=None)
    common.add_argument("--budget-enum", type=int, default=None, help="max q^k for full enumeration")
    common.add_argument("--budget-weight", type=int, default=None, help="max support-search weight")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("affine", parents=[common], help="maximal affine-invariant codes")
    a.add_argument("--p", type=int, required=True)
    a.add_argument("--r", type=int, required=True)
    a.add_argument("--m", type=int, required=True)
    a.add_argument("--quantum", action="store_true")

    d = sub.add_parser("duadic", parents=[common], help="duadic codes and quantum duadic codes")
    d.add_argument("--n", type=int, required=True)
    d.add_argument("--q", type=int, required=True)
    d.add_argument("--quantum", action="store_true")
    d.add_argument("--degenerate", action="store_true")

    v = sub.add_parser("verify", help="run property suites")
    v.add_argument("suite", choices=("affine", "duadic", "orders", "css", "all"))

    c = sub.add_parser("catalog", parents=[common], help="catalogue quantum records over a grid")
    c.add_argument("--p", type=int_list, default=[])
    c.add_argument("--r", type=int_list, default=[1])
    c.add_argument("--m", type=int_list, default=[])
    c.add_argument("--n", type=int_list, default=[])
    c.add_argument("--q", type=int_list, default=[])
    c.add_argument("--degenerate", action="store_true")
    c.add_argument("--out", default=None, help="output path (stdout if omitted)")
    return parser


def _config(args) -> RunConfig:
    budget = Budget.from_env()
    if getattr(args, "budget_enum", None):
        budget = budget.with_(enumeration=args.budget_enum)
    if getattr(args, "budget_weight", None):
        budget = budget.with_(support_weight_max=args.budget_weight)
    default_fmt = "csv" if args.command == "catalog" else "json"
    return RunConfig(budget, getattr(args, "format", None) or default_fmt)


def main(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        cfg = _config(args)
    except UsageError as exc:
        return _error(exc, stderr)
    except ValueError as exc:
        return _error(exc, stderr)
    try:
        if args.command == "verify":
            return cmd_verify(args.suite, stdout)
        if args.command == "affine":
            records = cmd_affine(args.p, args.r, args.m, args.quantum, cfg)
            _emit(records, cfg.output_format, stdout)
        elif args.command == "duadic":
            records = cmd_duadic(args.n, args.q, args.quantum, args.degenerate, cfg)
            _emit(records, cfg.output_format, stdout)
        else:
            rows = cmd_catalog(args.p if args.m else [], args.r, args.m, args.n if args.q else [],
                               args.q, args.degenerate, cfg, stderr)
            buf = io.StringIO()
            write_catalog(rows, cfg.output_format, buf)
            if args.out:
                with open(args.out, "w", encoding="utf-8", newline="") as fh:
                    fh.write(buf.getvalue())
            else:
                stdout.write(buf.getvalue())
    except (CyclotomeError, UsageError) as exc:
        return _error(exc, stderr)
    except OSError as exc:
        return _error(exc, stderr)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
