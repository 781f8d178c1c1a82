"""Command-line front end.

    snarkkit construct <name> [-o file]
    snarkkit construct blowup --host host.g6 --cycles "0,1,2;3,4,5" [-o file]
    snarkkit analyze <file> [--all|--coloring|--r3|--rho|--oddness|--tau|--cdc|--circ|--cyc-conn]
                     [--budget seconds] [--threads n] [--cert-dir dir] [-o report.json]
    snarkkit verify <certificate-or-report> <graph>

Verdicts are three-valued: a value with its certificate, an exhaustive
negative, or TIMEOUT when the per-stage budget ran out.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from typing import Callable

from . import constructions as C
from .certificates import (Certificate, CertificateError, cdc_certificate, coloring_certificate,
                           cover_certificate, cut_certificate, cycle_certificate, verify)
from .coloring import (find_3_edge_coloring, oddness, removal_coloring, resistance_r3,
                       vertex_resistance_rho)
from .cycles import (INFINITE, NoCycleError, circumference, cyclic_edge_connectivity, find_cdc,
                     find_kcdc, forced_factor_sweep, girth)
from .matchings import (UndefinedIndexError, enumerate_perfect_matchings,
                        fulkerson_double_cover, perfect_matching_index)
from .multipole import Graph6Error, GraphError, Multipole, read_graph, validate, write_graph
from .search import Budget, SearchTimeout

REPORT_VERSION = 1
MEASURES = ("coloring", "r3", "rho", "oddness", "tau", "cdc", "circ", "cyc-conn")
OUTPUT_DIR_ENV = "SNARKKIT_OUTPUT_DIR"


def _json_number(x):
    return "INFINITE" if x == INFINITE else x


class _Analysis:
    """One pipeline run: shared perfect matchings, certificates and timings."""

    def __init__(self, g: Multipole, budget: float | None):
        self.g = g
        self.budget_seconds = budget
        self.certificates: dict[str, dict] = {}
        self.timings: dict[str, float] = {}
        self._pms = None

    def budget(self) -> Budget:
        return Budget(self.budget_seconds)

    def pms(self, budget: Budget):
        if self._pms is None:
            self._pms = enumerate_perfect_matchings(self.g, budget)
        return self._pms

    def attach(self, name: str, cert: Certificate) -> str:
        self.certificates[name] = cert.to_dict()
        return name

    def run(self, name: str, fn: Callable[[Budget], dict]) -> dict:
        t = time.perf_counter()
        try:
            out = fn(self.budget())
        except SearchTimeout:
            out = {"status": "TIMEOUT"}
        self.timings[name] = round(time.perf_counter() - t, 3)
        return out

    # -- stages --------------------------------------------------------------

    def coloring(self, b: Budget) -> dict:
        g = self.g
        c = find_3_edge_coloring(g, budget=b)
        if c is None:
            return {"status": "NO", "value": "uncolorable", "exhaustive": True}
        ref = self.attach("coloring", coloring_certificate(g, c))
        return {"status": "YES", "value": "colorable", "certificate": ref}

    def r3(self, b: Budget) -> dict:
        g = self.g
        val, removed = resistance_r3(g, b)
        c = removal_coloring(g, removed_edges=removed, budget=b)
        ref = self.attach("r3", coloring_certificate(g, c, removed_edges=removed,
                                                     claim={"removed": val}))
        return {"status": "YES", "value": val, "certificate": ref,
                "lower_bound": "exhaustive"}

    def rho(self, b: Budget) -> dict:
        g = self.g
        val, gone = vertex_resistance_rho(g, b)
        c = removal_coloring(g, deleted_vertices=gone, budget=b)
        ref = self.attach("rho", coloring_certificate(g, c, deleted_vertices=gone,
                                                      claim={"removed": val}))
        return {"status": "YES", "value": val, "certificate": ref,
                "lower_bound": "exhaustive"}

    def oddness(self, b: Budget) -> dict:
        g = self.g
        pms = self.pms(b)
        if not pms.masks:
            return {"status": "UNDEFINED", "reason": "no perfect matching"}
        val, tf = oddness(g, pms)
        ref = self.attach("oddness", cycle_certificate(g, tf.components, two_factor=True,
                                                       claim={"odd_cycles": val}))
        return {"status": "YES", "value": val, "certificate": ref,
                "two_factors_examined": len(pms)}

    def tau(self, b: Budget) -> dict:
        g = self.g
        pms = self.pms(b)
        try:
            val, cover = perfect_matching_index(g, pms, b)
        except UndefinedIndexError as exc:
            return {"status": "UNDEFINED", "reason": str(exc)}
        ref = self.attach("tau", cover_certificate(g, cover, claim={"size": val}))
        out = {"status": "YES", "value": val, "certificate": ref,
               "perfect_matchings": len(pms),
               "no_cover_for_k": list(range(3, val))}
        fc = fulkerson_double_cover(g, pms, b)
        if fc is None:
            out["fulkerson"] = {"status": "NO", "exhaustive": True}
        else:
            fref = self.attach("fulkerson", cover_certificate(g, fc, exactly=2, claim={"size": 6}))
            out["fulkerson"] = {"status": "YES", "certificate": fref}
        return out

    def cdc(self, b: Budget) -> dict:
        g = self.g
        if not g.is_cubic:
            return {"status": "UNDEFINED", "reason": "CDC search expects a cubic graph"}
        found = find_cdc(g, budget=b)
        out: dict = {}
        if found is None:
            out["status"] = "NO"
            out["exhaustive"] = True
            return out
        out["status"] = "YES"
        out["certificate"] = self.attach("cdc", cdc_certificate(g, found))
        k5 = find_kcdc(g, 5, True, self.pms(b), b)
        if k5 is None:
            out["five_cdc_with_2factor_class"] = {"status": "NO", "exhaustive": True}
        else:
            ref = self.attach("cdc5-2factor", cdc_certificate(g, k5, k=5, factor_class=True))
            out["five_cdc_with_2factor_class"] = {"status": "YES", "certificate": ref}
        return out

    def circ(self, b: Budget) -> dict:
        g = self.g
        try:
            val, cyc = circumference(g, b)
        except NoCycleError:
            return {"status": "NO", "value": 0, "reason": "acyclic", "exhaustive": True}
        ref = self.attach("circ", cycle_certificate(g, [cyc], claim={"length": val}))
        return {"status": "YES", "value": val, "certificate": ref, "upper_bound": "exhaustive"}

    def cyc_conn(self, b: Budget) -> dict:
        g = self.g
        val, cut = cyclic_edge_connectivity(g, b)
        if cut is None:
            return {"status": "YES", "value": "INFINITE", "reason": "no cyclic edge cut"}
        ref = self.attach("cyc-conn", cut_certificate(g, cut, claim={"size": val}))
        return {"status": "YES", "value": val, "certificate": ref, "lower_bound": "exhaustive"}


def analyze_graph(g: Multipole, measures, budget: float | None = None,
                  threads: int = 1, factor_sweep: str | None = None) -> dict:
    """Run the requested measures on ``g`` and return the report dict."""
    a = _Analysis(g, budget)
    rep = validate(g)
    results: dict[str, dict] = {}
    stage = {"coloring": a.coloring, "r3": a.r3, "rho": a.rho, "oddness": a.oddness,
             "tau": a.tau, "cdc": a.cdc, "circ": a.circ, "cyc-conn": a.cyc_conn}
    for name in MEASURES:
        if name in measures:
            results[name] = a.run(name, stage[name])
    if factor_sweep is not None:
        def sweep(b: Budget) -> dict:
            res = forced_factor_sweep(g, a.pms(b), checkpoint=factor_sweep or None, budget=b)
            return {"status": "YES" if res.extendable else "NO",
                    "two_factors": res.total, "extendable": len(res.extendable),
                    "exhaustive": res.complete}
        results["factor-cdc"] = a.run("factor-cdc", sweep)
    return {
        "version": REPORT_VERSION,
        "subject": g.subject_hash,
        "vertices": g.n,
        "edges": g.m,
        "semiedges": len(g.semiedges),
        "validate": {"is_cubic": rep.is_cubic, "is_connected": rep.is_connected,
                     "is_bridgeless": rep.is_bridgeless},
        "girth": _json_number(girth(g)),
        "config": {"budget": budget, "threads": threads, "measures": sorted(measures)},
        "results": results,
        "certificates": a.certificates,
        "timings": a.timings,
    }


# -- commands -------------------------------------------------------------------

def _parse_cycles(text: str) -> list[tuple[int, ...]]:
    out = []
    for part in text.split(";"):
        part = part.strip()
        if part:
            out.append(tuple(int(x) for x in part.split(",")))
    return out


def _output_path(path: str | None) -> str | None:
    if path and not os.path.isabs(path) and os.environ.get(OUTPUT_DIR_ENV):
        return os.path.join(os.environ[OUTPUT_DIR_ENV], path)
    return path


def cmd_construct(args) -> int:
    if args.name in ("blowup", "semiblowup"):
        if not args.host or not args.cycles:
            raise SystemExit(f"{args.name} needs --host and --cycles")
        host = read_graph(args.host)
        build = C.blowup if args.name == "blowup" else C.semiblowup
        g = build(host, _parse_cycles(args.cycles))
    elif args.name in ("hamiltonian", "c5-blocks"):
        if args.k is None:
            raise SystemExit(f"{args.name} needs --k")
        g = C.family_hamiltonian(args.k) if args.name == "hamiltonian" else C.family_c5_blocks(args.k)
    else:
        g = C.named(args.name)
    out = _output_path(args.output)
    if out:
        write_graph(g, out)
    else:
        from .multipole import emit_graph6
        sys.stdout.write((g.to_json() if g.semiedges else emit_graph6(g)) + "\n")
    return 0


def _load_config(path: str | None) -> dict:
    if not path:
        return {}
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def cmd_analyze(args) -> int:
    cfg = _load_config(args.config)
    g = read_graph(args.graph)
    measures = {m for m in MEASURES if getattr(args, m.replace("-", "_"))}
    if args.all or (not measures and args.factor_cdc is None):
        measures = set(cfg.get("measures", MEASURES)) if not args.all else set(MEASURES)
    budget = args.budget if args.budget is not None else cfg.get("budget")
    threads = args.threads if args.threads is not None else cfg.get("threads", 1)
    report = analyze_graph(g, measures, budget, threads, args.factor_cdc)
    text = json.dumps(report, indent=2, sort_keys=True)
    out = _output_path(args.output)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")
    if args.cert_dir:
        cert_dir = _output_path(args.cert_dir)
        os.makedirs(cert_dir, exist_ok=True)
        for name, cert in report["certificates"].items():
            with open(os.path.join(cert_dir, f"{name}.json"), "w", encoding="utf-8") as fh:
                fh.write(json.dumps(cert, sort_keys=True) + "\n")
    return 0


def cmd_verify(args) -> int:
    g = read_graph(args.graph)
    with open(args.certificate, encoding="utf-8") as fh:
        data = json.load(fh)
    if "certificates" in data and "kind" not in data:
        items = sorted(data["certificates"].items())
    else:
        items = [(os.path.basename(args.certificate), data)]
    if not items:
        print("FAIL: no certificates found")
        return 1
    ok = True
    for name, doc in items:
        try:
            cert = Certificate.from_dict(doc)
        except CertificateError as exc:
            print(f"FAIL {name}: {exc}")
            ok = False
            continue
        v = verify(cert, g)
        print(f"{'PASS' if v else 'FAIL'} {name} ({cert.kind})" + ("" if v else f": {v.reason}"))
        ok = ok and v.ok
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="snarkkit", description="Snark constructions and exact invariants.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a named instance or a (semi)blowup")
    c.add_argument("name", help="registry name, or blowup / semiblowup / hamiltonian / c5-blocks")
    c.add_argument("--host", help="host graph file for blowup / semiblowup")
    c.add_argument("--cycles", help='disjoint host cycles, e.g. "0,1,2;3,4,5"')
    c.add_argument("--k", type=int, help="family parameter")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_construct)

    a = sub.add_parser("analyze", help="compute invariants with certificates")
    a.add_argument("graph")
    a.add_argument("--all", action="store_true")
    for m in MEASURES:
        a.add_argument(f"--{m}", action="store_true")
    a.add_argument("--factor-cdc", nargs="?", const="", default=None, metavar="CHECKPOINT",
                   help="CDC search with every 2-factor forced; optional checkpoint file")
    a.add_argument("--budget", type=float, help="seconds per stage")
    a.add_argument("--threads", type=int, help="accepted for compatibility; stages run serially")
    a.add_argument("--config", help="JSON file with budget / threads / measures")
    a.add_argument("--cert-dir", help="also write each certificate to this directory")
    a.add_argument("-o", "--output")
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify", help="re-check a certificate (or every certificate of a report)")
    v.add_argument("certificate")
    v.add_argument("graph")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (Graph6Error, GraphError, C.SelectionError, KeyError, OSError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
