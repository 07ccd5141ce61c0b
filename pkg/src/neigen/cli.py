"""Command-line front end.

Exit status is 0 on success, 1 for usage errors and 2 when the inputs are
well formed but outside the domain of the requested computation.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Callable, Iterator, Optional, Sequence, TextIO

from . import bmw, classify, qgroup, spectra
from .rootsys import build, format_weight, parse_weight
from .rou import DomainError

SCHEMA = 1


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _range(text: str) -> range:
    try:
        if "-" in text[1:]:
            lo, hi = text.split("-", 1) if text[0] != "-" else (None, None)
            return range(int(lo), int(hi) + 1)
        v = int(text)
        return range(v, v + 1)
    except (TypeError, ValueError) as exc:
        raise argparse.ArgumentTypeError(f"bad range {text!r}, expected LO-HI") from exc


def _weight(text: str):
    try:
        return parse_weight(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _diagram(text: str) -> bmw.YoungDiagram:
    try:
        return bmw.YoungDiagram.parse(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _fractions(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(t.strip()) for t in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad angle list {text!r}") from exc


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad integer list {text!r}") from exc


def _system_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--type", dest="series", required=True, choices=list("ABCDEFG"),
                   type=str.upper)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--weight", type=_weight, required=True, help="Dynkin labels, e.g. 1,0,0")


def make_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    top = _Parser(prog="neigen", parents=[common],
                  description="N-eigenvalue analyses for Lie groups and braid representations.")
    sub = top.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", parents=[common], help="table status of a highest weight")
    _system_args(p)
    p.add_argument("--n", type=int, required=True, help="eigenvalue count (2 or 3)")

    p = sub.add_parser("spectrum", parents=[common], help="eigenvalues of a torus element")
    _system_args(p)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--torus", type=_fractions, help="angles t_i (units of pi) per fundamental weight")
    g.add_argument("--cochar", type=_ints, help="integer cocharacter paired with Dynkin labels")

    p = sub.add_parser("witness", parents=[common], help="search dominant coweights for a witness")
    _system_args(p)
    p.add_argument("--bound", type=int, default=3)
    p.add_argument("--target", type=int, default=3)

    p = sub.add_parser("bmw", parents=[common], help="density verdict for a BMW sector")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--m", type=int, required=True, help="number of strands")
    p.add_argument("--diagram", type=_diagram, required=True, help="Young diagram, e.g. [2,1]")

    p = sub.add_parser("qgroup", parents=[common], help="braid eigenvalues from a tensor square")
    _system_args(p)
    p.add_argument("--ell", type=int, required=True)

    p = sub.add_parser("bratteli", parents=[common], help="admissible diagrams and dimensions")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--top", type=int, default=6, help="last level to build")

    p = sub.add_parser("sweep", parents=[common], help="run a grid of queries")
    p.add_argument("kind", choices=["bmw", "classify", "qgroup"])
    p.add_argument("--ell", type=_range, help="ell range LO-HI")
    p.add_argument("--ranks", type=_range, help="rank range LO-HI")
    p.add_argument("--type", dest="series", type=str.upper, help="series letters, e.g. BCD")
    p.add_argument("--weight", type=_weight, help="highest weight for qgroup sweeps")
    p.add_argument("--cases", default="bce", help="BMW cases to include")
    return top


# ------------------------------------------------------------------ commands


def cmd_classify(a) -> dict:
    rs = build(a.series, a.rank)
    st = classify.classify_pair(rs, a.weight, a.n)
    out = {"series": rs.series, "rank": rs.rank, "weight": format_weight(a.weight), "N": a.n,
           "status": st.status.value, "boundOk": classify.bound_ok(rs, a.weight, a.n)}
    if st.note:
        out["note"] = st.note
    return out


def cmd_spectrum(a) -> dict:
    rs = build(a.series, a.rank)
    lam = rs.check_weight(a.weight)
    if a.torus is not None:
        t = spectra.TorusElement(rs, a.torus)
        spec = spectra.spectrum(rs, lam, t)
        rep = spectra.n_eigen_report(rs, lam, t)
        return {"system": rs.name, "weight": format_weight(lam),
                "spectrum": spectra.format_spectrum(spec), **rep.to_json()}
    x = spectra.Cocharacter(rs, a.cochar)
    ex = sorted(spectra.exponent_spectrum(rs, lam, x))
    return {"system": rs.name, "weight": format_weight(lam), "exponents": ex, "count": len(ex)}


def cmd_witness(a) -> dict:
    rs = build(a.series, a.rank)
    w = classify.witness_search(rs, a.weight, a.bound, a.target)
    out = {"system": rs.name, "weight": format_weight(a.weight), "bound": a.bound,
           "target": a.target, "found": w is not None}
    if w is not None:
        out.update(coweight=list(w.cochar.y), scale=w.scale, exponents=list(w.exponents))
    return out


def cmd_bmw(a) -> dict:
    p = bmw.BMWParams(a.n, a.ell)
    v = bmw.density_verdict(p, a.m, a.diagram)
    c = bmw.case_of(p)
    out = {"n": p.n, "ell": p.ell, "m": a.m, "lambda": str(a.diagram), "case": c,
           "eigenvalues": spectra.format_spectrum(bmw.eigenvalue_triple(p)), **v.to_json()}
    if c is not None:
        out["noCycle"] = bmw.no_cycle_closed(p)
        out["geomProg"] = bmw.geom_prog_closed(p)
    if bmw.theorem_hypotheses(p):
        out["projectiveOrder"] = bmw.projective_order(p)
    return out


def cmd_qgroup(a) -> dict:
    res = qgroup.analyse(a.series, a.rank, a.weight, a.ell)
    dec = qgroup.table1_decomp(a.series, a.rank, a.weight)
    out = res.to_json()
    out["weight"] = format_weight(res.weight)
    out["sym"] = [format_weight(w) for w in dec.sym]
    out["antisym"] = [format_weight(w) for w in dec.antisym]
    return out


def cmd_bratteli(a) -> dict:
    if a.top < 0:
        raise DomainError("top level must be nonnegative")
    p = bmw.BMWParams(a.n, a.ell)
    b = bmw.bratteli(p, a.top)
    levels = [{str(d): b.dim(m, d) for d in sorted(level)} for m, level in enumerate(b.levels)]
    return {"n": p.n, "ell": p.ell, "case": bmw.case_of(p), "levels": levels}


# ------------------------------------------------------------------ sweeps


def _need(value, flag: str):
    if value is None:
        raise UsageError(f"sweep needs {flag}")
    if isinstance(value, range) and len(value) == 0:
        raise UsageError(f"empty range for {flag}")
    return value


def sweep_bmw(a) -> Iterator[dict]:
    ells = a.ell if a.ell is not None else range(3, 61)
    _need(ells, "--ell")
    for ell in ells:
        if ell < 3:
            continue
        for n in range(-ell, ell + 1):
            if n == -1:
                continue
            p = bmw.BMWParams(n, ell)
            c = bmw.case_of(p)
            if c is None or c not in a.cases:
                continue
            nc, nco = bmw.no_cycle_closed(p), bmw.oracle_no_cycle(p)
            gp, gpo = bmw.geom_prog_closed(p), bmw.oracle_geom_prog(p)
            yield {"n": n, "ell": ell, "case": c, "noCycle": nc, "noCycleOracle": nco,
                   "geomProg": gp, "geomProgOracle": gpo,
                   "result": "agree" if (nc, gp) == (nco, gpo) else "mismatch"}


_FIXED = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


def sweep_classify(a) -> Iterator[dict]:
    letters = a.series or "ABCD"
    ranks = a.ranks if a.ranks is not None else range(1, 9)
    _need(ranks, "--ranks")
    for s in letters:
        rr = _FIXED.get(s, ranks)
        for r in rr:
            if s in _FIXED and a.ranks is not None and r not in ranks:
                continue
            try:
                rs = build(s, r)
            except DomainError:
                continue
            cand = classify.candidates(rs, 3)
            listed = set(classify.table(classify.THREE_EIGEN, rs)) | set(classify.table(classify.EXCLUDED, rs))
            listed |= set(classify.table(classify.TWO_EIGEN, rs))
            yield {"system": rs.name, "candidates": len(cand), "listed": len(listed),
                   "missing": sorted(format_weight(w) for w in cand - listed),
                   "extra": sorted(format_weight(w) for w in listed - cand),
                   "result": "agree" if cand == listed else "mismatch"}


def sweep_qgroup(a) -> Iterator[dict]:
    series = _need(a.series, "--type")
    ranks = _need(a.ranks, "--ranks")
    ells = _need(a.ell, "--ell")
    for s in series:
        for r in ranks:
            lam = a.weight if a.weight is not None else build(s, r).fundamental(1)
            for ell in ells:
                res = qgroup.analyse(s, r, lam, ell)
                yield {"series": s, "rank": r, "weight": format_weight(lam), "ell": ell,
                       "result": res.verdict}


SWEEPS: dict[str, Callable] = {"bmw": sweep_bmw, "classify": sweep_classify, "qgroup": sweep_qgroup}


def _dump(obj: dict) -> str:
    return json.dumps({"schema": SCHEMA, **obj}, sort_keys=True)


def _show(x) -> str:
    if isinstance(x, dict) and set(x) == {"sign", "exponent"}:
        return str(qgroup.REigenvalue.from_json(x))
    return str(x)


def _text(obj: dict) -> str:
    parts = []
    for k in sorted(obj):
        v = obj[k]
        if isinstance(v, list):
            v = "{" + ", ".join(_show(x) for x in v) + "}"
        parts.append(f"{k}: {v}")
    return "\n".join(parts)


def _text_line(obj: dict) -> str:
    return " ".join(f"{k}={obj[k]}" for k in sorted(obj))


def run_sweep(a, out: TextIO) -> None:
    counts: dict[str, int] = {}
    any_row = False
    for row in SWEEPS[a.kind](a):
        any_row = True
        counts[row["result"]] = counts.get(row["result"], 0) + 1
        out.write((_dump(row) if a.json else _text_line(row)) + "\n")
    if not any_row:
        raise UsageError("sweep range is empty")
    summary = {"summary": dict(sorted(counts.items())), "total": sum(counts.values())}
    out.write((_dump(summary) if a.json else _text_line(summary)) + "\n")


COMMANDS: dict[str, Callable] = {
    "classify": cmd_classify, "spectrum": cmd_spectrum, "witness": cmd_witness, "bmw": cmd_bmw,
    "qgroup": cmd_qgroup, "bratteli": cmd_bratteli,
}


def run(argv: Optional[Sequence[str]] = None, out: TextIO = sys.stdout, err: TextIO = sys.stderr) -> int:
    parser = make_parser()
    try:
        a = parser.parse_args(list(argv) if argv is not None else None)
        if a.command == "sweep":
            run_sweep(a, out)
        else:
            res = COMMANDS[a.command](a)
            out.write((_dump(res) if a.json else _text(res)) + "\n")
    except UsageError as exc:
        err.write(f"{exc}\n")
        if "usage:" not in str(exc):
            err.write(parser.format_usage())
        return 1
    except DomainError as exc:
        err.write(f"neigen: {exc}\n")
        return 2
    return 0


def main() -> None:
    sys.exit(run())
