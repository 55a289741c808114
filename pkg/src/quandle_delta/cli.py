"""Command-line front end.

    quandle-delta table dihedral:8 --basis e --format text
    quandle-delta quotient dihedral:8 --k 2
    quandle-delta verify-paper
    quandle-delta scan --n 3..12 --k 1..4 --format csv
    quandle-delta validate my_quandle.json

Every command builds a report document ``{"schema_version", "command",
"results", "timing"}``; only ``timing`` varies between identical runs.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from . import lab
from .quandle import InvalidQuandle, QuandleError, load_quandle, parse_selector
from .ring import Mode, delta_tower, ebasis_table, format_evector
from .lattice import quotient_invariants

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_LIMIT = 3

SCAN_COLUMNS = ("n", "k", "mode", "free_rank", "torsion", "order", "clause", "verdict")


class UsageError(Exception):
    pass


def parse_range(text: str) -> tuple[int, int]:
    """``"3..12"`` -> ``(3, 12)``, inclusive; a bare ``"5"`` means ``5..5``."""
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected a..b") from None
    if a > b:
        raise UsageError(f"empty range {text!r}")
    return a, b


def make_document(command: dict, results, timing: dict, errata=None) -> dict:
    doc = {"schema_version": SCHEMA_VERSION, "command": command, "results": results, "timing": timing}
    if errata is not None:
        doc["errata"] = errata
    return doc


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


# --- commands -------------------------------------------------------------

def cmd_table(selector: str, basis: str = "a") -> dict:
    t0 = time.perf_counter()
    q = parse_selector(selector)
    if basis == "a":
        rows = q.table()
        cells = [[f"a{x}" for x in row] for row in rows]
    elif basis == "e":
        rows = [[list(v) for v in row] for row in ebasis_table(q)]
        cells = [[format_evector(v) for v in row] for row in rows]
    else:
        raise UsageError(f"unknown basis {basis!r}")
    results = {"quandle": q.name, "order": q.order, "basis": basis, "coords": rows, "entries": cells}
    command = {"command": "table", "quandle": selector, "basis": basis}
    return make_document(command, results, {"seconds": time.perf_counter() - t0})


def cmd_quotient(selector: str, k: int, mode="right") -> dict:
    t0 = time.perf_counter()
    if k < 1:
        raise UsageError(f"--k must be >= 1, got {k}")
    mode = Mode.parse(mode)
    q = parse_selector(selector)
    tower = delta_tower(q, k + 1, mode)
    quot = quotient_invariants(tower[k - 1], tower[k])
    results = {
        "quandle": q.name,
        "order_of_quandle": q.order,
        "k": k,
        "quotient": quot.to_dict(),
        "delta_k": tower[k - 1].rows(),
        "delta_k_plus_1": tower[k].rows(),
    }
    command = {"command": "quotient", "quandle": selector, "k": k, "mode": mode.value}
    return make_document(command, results, {"seconds": time.perf_counter() - t0})


def cmd_verify_paper(n_max: int = 24) -> dict:
    t0 = time.perf_counter()
    lemmas = lab.check_lemmas(n_max)
    theorem = lab.verify_theorem_r8()
    verdict = lab.classify(8, 2, theorem.quotient)
    results = {
        "passed": lemmas.passed and theorem.passed,
        "lemmas": lemmas.to_dict(),
        "theorem": {k: v for k, v in theorem.to_dict().items() if k != "errata"},
        "conjecture_at_8_2": {"clause": verdict[0], "verdict": verdict[1]},
    }
    command = {"command": "verify-paper", "lemma_n_max": n_max}
    return make_document(command, results, {"seconds": time.perf_counter() - t0}, errata=theorem.errata)


def cmd_scan(n_range, k_range, mode="right", limit=None, jobs=1) -> dict:
    t0 = time.perf_counter()
    mode = Mode.parse(mode)
    rows = lab.scan(n_range[0], n_range[1], k_range[0], k_range[1], mode, limit=limit, jobs=jobs)
    results = {"rows": [r.to_dict() for r in rows], "summary": lab.summarize(rows)}
    command = {"command": "scan", "n": list(n_range), "k": list(k_range), "mode": mode.value,
               "limit": limit}
    timing = {"seconds": time.perf_counter() - t0, "cells": [[r.n, r.k, r.elapsed] for r in rows]}
    return make_document(command, results, timing)


def cmd_validate(path: str) -> dict:
    t0 = time.perf_counter()
    try:
        q = load_quandle(path)
        results = {"valid": True, "name": q.name, "order": q.order, "violations": []}
    except InvalidQuandle as exc:
        results = {"valid": False, "name": exc.name, "violations": [str(v) for v in exc.violations]}
    return make_document({"command": "validate", "path": path}, results,
                         {"seconds": time.perf_counter() - t0})


# --- rendering ------------------------------------------------------------

def scan_csv(doc: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(SCAN_COLUMNS)
    for r in doc["results"]["rows"]:
        torsion = "" if r["torsion"] is None else ";".join(map(str, r["torsion"]))
        order = "" if r["order"] is None else r["order"]
        free = "" if r["free_rank"] is None else r["free_rank"]
        w.writerow([r["n"], r["k"], r["mode"], free, torsion, order, r["clause"], r["verdict"]])
    return buf.getvalue()


def read_scan_csv(text: str) -> list[dict]:
    """Parse :func:`scan_csv` output back into row dicts."""
    out = []
    for rec in csv.DictReader(io.StringIO(text)):
        order = rec["order"]
        out.append({
            "n": int(rec["n"]),
            "k": int(rec["k"]),
            "mode": rec["mode"],
            "free_rank": int(rec["free_rank"]) if rec["free_rank"] else None,
            "torsion": [int(x) for x in rec["torsion"].split(";") if x] if rec["free_rank"] else None,
            "order": None if not order else (order if order == "infinite" else int(order)),
            "clause": rec["clause"],
            "verdict": rec["verdict"],
        })
    return out


def _aligned(grid, header):
    rows = [header] + grid
    widths = [max(len(str(r[c])) for r in rows) for c in range(len(header))]
    return "\n".join("  ".join(str(x).ljust(w) for x, w in zip(r, widths)).rstrip() for r in rows)


def render_text(doc: dict) -> str:
    cmd = doc["command"]["command"]
    res = doc["results"]
    if cmd == "table":
        sym = res["basis"]
        start = 0 if sym == "a" else 1
        header = [""] + [f"{sym}{j}" for j in range(start, start + len(res["entries"]))]
        grid = [[f"{sym}{i}"] + row for i, row in enumerate(res["entries"], start=start)]
        return f"{res['quandle']} (order {res['order']}), products in basis {sym}\n" + _aligned(grid, header) + "\n"
    if cmd == "quotient":
        qr = res["quotient"]
        lines = [
            f"{res['quandle']}: Delta^{res['k']} / Delta^{res['k'] + 1} = {qr['structure']}",
            f"free_rank {qr['free_rank']}  torsion {qr['torsion']}  order {qr['order']}",
            f"Delta^{res['k']} basis:",
            *(f"  {format_evector(r)}" for r in res["delta_k"]),
            f"Delta^{res['k'] + 1} basis:",
            *(f"  {format_evector(r)}" for r in res["delta_k_plus_1"]),
        ]
        return "\n".join(lines) + "\n"
    if cmd == "verify-paper":
        lem = res["lemmas"]
        lines = [f"lemmas n={lem['n_values'][0]}..{lem['n_values'][-1]}: {lem['checks']} checks, "
                 f"{len(lem['violations'])} violations"]
        for s in res["theorem"]["steps"]:
            lines.append(f"[{'PASS' if s['passed'] else 'FAIL'}] {s['name']}")
        lines.append(f"Delta^2(R8) / Delta^3(R8) = {res['theorem']['quotient']['structure']}")
        lines.append(f"conjecture at n=8, k=2: {res['conjecture_at_8_2']['verdict']}")
        for x in doc.get("errata", []):
            lines.append(f"erratum {x['table']} {x['entry']}: printed {x['printed']}, recomputed {x['corrected']}")
        return "\n".join(lines) + "\n"
    if cmd == "scan":
        grid = []
        for r in res["rows"]:
            grid.append([r["n"], r["k"], r["mode"], "" if r["free_rank"] is None else r["free_rank"],
                         "" if r["torsion"] is None else r["torsion"], "" if r["order"] is None else r["order"],
                         r["clause"], r["verdict"]])
        s = res["summary"]
        tail = (f"\nconsistent {s['consistent']}, counterexample {s['counterexample']}, "
                f"not_applicable {s['not_applicable']}, not_computed {s['not_computed']}\n")
        return _aligned(grid, list(SCAN_COLUMNS)) + tail
    if cmd == "validate":
        if res["valid"]:
            return f"{res['name']}: valid quandle of order {res['order']}\n"
        return f"{res['name']}: not a quandle\n" + "".join(f"  {v}\n" for v in res["violations"])
    return dumps(doc)


# --- entry point ------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="quandle-delta",
                                description="Augmentation-ideal quotients of finite quandle rings over Z.")
    sub = p.add_subparsers(dest="command", required=True)

    def fmt(sp, choices=("json", "text")):
        sp.add_argument("--format", choices=choices, default="json")

    sp = sub.add_parser("table", help="Cayley table or e-basis product table")
    sp.add_argument("quandle", help="dihedral:<n>, trivial:<n> or file:<path>")
    sp.add_argument("--basis", choices=("a", "e"), default="a")
    fmt(sp)

    sp = sub.add_parser("quotient", help="structure of Delta^k / Delta^(k+1)")
    sp.add_argument("quandle")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--mode", choices=("right", "two-sided"), default="right")
    fmt(sp)

    sp = sub.add_parser("verify-paper", help="replay the R_8 counterexample and the lemma suites")
    sp.add_argument("--n-max", type=int, default=24, help="largest even n for the lemma check")
    fmt(sp)

    sp = sub.add_parser("scan", help="sweep dihedral quandles over ranges of n and k")
    sp.add_argument("--n", required=True, help="inclusive range a..b")
    sp.add_argument("--k", required=True, help="inclusive range a..b")
    sp.add_argument("--mode", choices=("right", "two-sided"), default="right")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--limit", type=int, default=None, help="skip cells with n*k above this")
    fmt(sp, ("json", "csv", "text"))

    sp = sub.add_parser("validate", help="check a quandle file")
    sp.add_argument("path")
    fmt(sp)
    return p


def run(argv=None) -> tuple[int, str]:
    """Execute a command; returns ``(exit_status, output)``."""
    args = build_parser().parse_args(argv)
    if args.command == "table":
        doc = cmd_table(args.quandle, args.basis)
        status = EXIT_OK
    elif args.command == "quotient":
        doc = cmd_quotient(args.quandle, args.k, args.mode)
        status = EXIT_OK
    elif args.command == "verify-paper":
        doc = cmd_verify_paper(args.n_max)
        status = EXIT_OK if doc["results"]["passed"] else EXIT_FAILED
    elif args.command == "scan":
        if args.jobs < 1:
            raise UsageError("--jobs must be >= 1")
        doc = cmd_scan(parse_range(args.n), parse_range(args.k), args.mode, args.limit, args.jobs)
        rows = doc["results"]["rows"]
        status = EXIT_LIMIT if rows and all(r["verdict"] == lab.NOT_COMPUTED for r in rows) else EXIT_OK
    else:
        doc = cmd_validate(args.path)
        status = EXIT_OK if doc["results"]["valid"] else EXIT_FAILED

    if args.format == "csv":
        out = scan_csv(doc)
    elif args.format == "text":
        out = render_text(doc)
    else:
        out = dumps(doc)
    return status, out


def main(argv=None) -> int:
    try:
        status, out = run(argv)
    except (UsageError, QuandleError, ValueError, OSError) as exc:
        print(f"quandle-delta: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
