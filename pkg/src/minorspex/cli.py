"""Command-line entry point: ``minorspex <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from importlib import resources
from typing import Sequence

from . import constructions as cons
from .canon import canonical_form
from .config import OUTPUT_MODES, RunConfig
from .decompose import is_cycle_graph, longest_maximal_linear_path, maximal_linear_paths, phi_identity_check
from .graph import CapacityError, Graph, Graph6Error, GraphError, from_graph6, to_graph6
from .invariants import FamilySpec, family_invariants, gamma_union_family
from .minor import find_model, has_minor, verify_model
from .search import SearchInvariantError, SearchQuery, SearchReport, run_query
from .spectral import (
    ConvergenceError,
    book_rho,
    edge_density_bound,
    quadratic_upper_bound_check,
    regular_bound_check,
    spectral_radius,
)
from .theorems import THEOREM_IDS, verify_theorem

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2

log = logging.getLogger("minorspex")


class UsageError(Exception):
    pass


# ---------------------------------------------------------------- I/O helpers


def _round(obj: object) -> object:
    if isinstance(obj, float):
        return float(f"{obj:.9f}")
    if isinstance(obj, dict):
        return {k: _round(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round(v) for v in obj]
    return obj


def dumps(obj: object) -> str:
    """JSON with every float printed at 9 decimals."""
    return json.dumps(_round(obj), indent=2, sort_keys=False)


def schema() -> dict:
    return json.loads(resources.files("minorspex").joinpath("report.schema.json").read_text())


def _read_lines(path: str) -> list[str]:
    try:
        with open(path, encoding="ascii") as fh:
            return [ln.strip() for ln in fh if ln.strip() and not ln.startswith(">>")]
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def load_graph(arg: str) -> Graph:
    """A graph6 string, a file holding one, or a fixture name such as ``K5``."""
    if os.path.isfile(arg):
        lines = _read_lines(arg)
        if not lines:
            raise UsageError(f"{arg} holds no graph")
        return from_graph6(lines[0])
    if os.sep in arg or arg.endswith(".g6"):
        raise UsageError(f"cannot read {arg}: no such file")
    try:
        return from_graph6(arg)
    except Graph6Error as first:
        try:
            return cons.named(arg)
        except GraphError:
            raise first from None


def load_family(args: Sequence[str]) -> FamilySpec:
    graphs: list[Graph] = []
    for a in args:
        if os.path.isfile(a):
            graphs.extend(from_graph6(s) for s in _read_lines(a))
        else:
            graphs.append(load_graph(a))
    return FamilySpec.of(graphs)


def _emit(cfg: RunConfig, payload: dict, graphs: Sequence[str] = (), table: Sequence[str] | None = None) -> None:
    if cfg.output == "graph6":
        for g in graphs:
            print(g)
    elif cfg.output == "table" and table is not None:
        for line in table:
            print(line)
    else:
        print(dumps(payload))


# ---------------------------------------------------------------- subcommands


def _construct(args: argparse.Namespace) -> Graph | list[Graph]:
    k, p = args.kind, args.params
    try:
        ints = [int(x) for x in p] if k != "named" else []
    except ValueError as exc:
        raise UsageError(f"parameters of {k} must be integers") from exc
    builders = {
        "book": lambda: cons.book(*ints),
        "book-matching": lambda: cons.book_with_matching(*ints),
        "wheel": lambda: cons.wheel(*ints),
        "flower": lambda: cons.flower(ints),
        "multipartite": lambda: cons.complete_multipartite(cons.MultipartiteSpec.of(*ints)),
        "star-forest": lambda: cons.star_forest(*ints),
        "co-star-forest": lambda: cons.complement_star_forest(*ints),
        "sub-co-star-forest": lambda: cons.subdivided_complement_star_forest(*ints),
        "subdivided-clique": lambda: cons.subdivided_clique(*ints),
        "petersen": cons.petersen,
        "g-up": lambda: cons.g_triangle(ints[0], cons.MultipartiteSpec.of(*ints[1:])),
        "g-even": lambda: cons.g_triangle_even(*ints),
        "named": lambda: cons.named(p[0]),
    }
    if k == "g-down":
        # every member of the regular family
        return list(cons.g_down_members(*ints))  # type: ignore[return-value]
    if k not in builders:
        raise UsageError(f"unknown construction {k!r}; known: {', '.join(sorted(builders))}, g-down")
    try:
        return builders[k]()
    except TypeError as exc:
        raise UsageError(f"bad parameters for {k}: {exc}") from exc


def cmd_construct(args: argparse.Namespace, cfg: RunConfig) -> int:
    built = _construct(args)
    graphs = built if isinstance(built, list) else [built]
    rows = [{"graph6": to_graph6(g), "n": g.n, "m": g.m, "canonical": canonical_form(g).decode("ascii")} for g in graphs]
    _emit(cfg, {"graphs": rows}, [r["graph6"] for r in rows], [r["graph6"] for r in rows])
    return EXIT_OK


def cmd_invariants(args: argparse.Namespace, cfg: RunConfig) -> int:
    fam = load_family(args.family)
    inv = family_invariants(fam)
    gamma_union = [to_graph6(g) for g in gamma_union_family(fam)]
    payload = {
        "members": [to_graph6(h) for h in fam.members],
        "gamma_family": inv.gamma_family,
        "alpha_family": inv.alpha_family,
        "c_family": inv.c_family,
        "minimal_ids": list(inv.minimal_ids),
        "gamma_union_family": gamma_union,
        "has_star": fam.has_star(),
    }
    table = [f"gamma={inv.gamma_family} alpha={inv.alpha_family} C={inv.c_family}"]
    _emit(cfg, payload, gamma_union, table)
    return EXIT_OK


def cmd_minor(args: argparse.Namespace, cfg: RunConfig) -> int:
    host, pattern = load_graph(args.host), load_graph(args.pattern)
    found = has_minor(host, pattern)
    payload: dict = {"host": to_graph6(host), "pattern": to_graph6(pattern), "has_minor": found}
    if args.witness and found:
        model = find_model(host, pattern)
        assert model is not None and verify_model(host, pattern, model)
        payload["branch_sets"] = [list(b) for b in model.branch_sets]
    _emit(cfg, payload, table=["yes" if found else "no"])
    return EXIT_OK


def cmd_rho(args: argparse.Namespace, cfg: RunConfig) -> int:
    g = load_graph(args.graph)
    cert = spectral_radius(g, tol=args.tol if args.tol is not None else cfg.tolerance)
    payload: dict = {"graph6": to_graph6(g), "rho": cert.rho, "iterations": cert.iterations, "residual": cert.residual}
    if args.perron:
        payload["perron"] = list(cert.perron)
    _emit(cfg, payload, table=[f"{cert.rho:.9f}"])
    return EXIT_OK


def cmd_bounds(args: argparse.Namespace, cfg: RunConfig) -> int:
    g = load_graph(args.graph)
    fam = load_family(args.family)
    inv = family_invariants(fam)
    rho = spectral_radius(g, tol=cfg.tolerance).rho
    n = g.n
    reports = [quadratic_upper_bound_check(rho, inv.gamma_family, inv.alpha_family, n)]
    if args.s1 is not None:
        reports.append(regular_bound_check(rho, args.s1, inv.gamma_family, n))
    rows = [r.__dict__.copy() for r in reports]
    for h in fam.members:
        coeff = edge_density_bound(h)
        rows.append({"name": f"edge_density[{to_graph6(h)}]", "lhs": float(g.m), "rhs": float(coeff * n),
                     "satisfied": g.m < coeff * n, "slack": float(coeff * n - g.m), "equality": False, "info": None})
    if 1 <= inv.gamma_family < n:
        lb = book_rho(inv.gamma_family, n)
        rows.append({"name": "book_rho", "lhs": lb, "rhs": rho, "satisfied": lb <= rho + cfg.epsilon,
                     "slack": rho - lb, "equality": abs(rho - lb) <= cfg.epsilon, "info": None})
    table = [f"{r['name']}: lhs={r['lhs']:.9f} rhs={r['rhs']:.9f} ok={r['satisfied']}" for r in rows]
    _emit(cfg, {"graph6": to_graph6(g), "rho": rho, "bounds": rows}, table=table)
    return EXIT_OK


def cmd_decompose(args: argparse.Namespace, cfg: RunConfig) -> int:
    g = load_graph(args.graph)
    dec = maximal_linear_paths(g)
    payload = {
        "graph6": to_graph6(g),
        "paths": [list(p) for p in dec.paths],
        "phi": dec.phi,
        "longest": list(longest_maximal_linear_path(g)),
        "phi_identity": None if is_cycle_graph(g) else phi_identity_check(g),
    }
    table = [" ".join(map(str, p)) for p in dec.paths] + [f"phi={dec.phi}"]
    _emit(cfg, payload, table=table)
    return EXIT_OK


def _write_g6(path: str | None, report: SearchReport) -> None:
    if path:
        with open(path, "w", encoding="ascii") as fh:
            for s in report.extremal:
                fh.write(s + "\n")


def _search(args: argparse.Namespace, cfg: RunConfig, mode: str) -> int:
    fam = load_family(args.family)
    q = SearchQuery(args.n, fam, mode, epsilon=cfg.epsilon, force=args.force)
    report = run_query(q, workers=cfg.workers)
    _write_g6(args.g6_out, report)
    _emit(cfg, report.to_dict(), report.extremal, [f"value={report.value}"] + report.extremal)
    return EXIT_OK


def cmd_spex(args: argparse.Namespace, cfg: RunConfig) -> int:
    return _search(args, cfg, "spex-connected" if args.connected else "spex")


def cmd_ex(args: argparse.Namespace, cfg: RunConfig) -> int:
    return _search(args, cfg, "ex-connected" if args.connected else "ex")


def cmd_sat(args: argparse.Namespace, cfg: RunConfig) -> int:
    return _search(args, cfg, "sat-list")


def cmd_verify(args: argparse.Namespace, cfg: RunConfig) -> int:
    params: dict = {}
    for key in ("a", "k", "t", "s1", "r"):
        v = getattr(args, key)
        if v is not None:
            params[key] = v
    if args.parts:
        params["parts"] = tuple(args.parts)
    if args.lengths:
        params["lengths"] = tuple(args.lengths)
    if args.h:
        params["h"] = load_graph(args.h)
    family = load_family(args.family) if args.family else None
    try:
        report = verify_theorem(args.theorem, args.n, workers=cfg.workers, force=args.force, family=family, **params)
    except TypeError as exc:
        raise UsageError(f"bad parameters for {args.theorem}: {exc}") from exc
    _write_g6(args.g6_out, report)
    passed = bool(report.verdict and report.verdict["passed"])
    _emit(cfg, report.to_dict(), report.extremal, [f"passed={passed}", f"value={report.value}"])
    return EXIT_OK if passed else EXIT_DOMAIN


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="minorspex", description="Spectral extremal problems for minor-free graphs.")
    ap.add_argument("--tol", dest="tolerance", type=float, default=None, help="power-iteration residual tolerance")
    ap.add_argument("--epsilon", type=float, default=None, help="spectral radius comparison tolerance")
    ap.add_argument("--workers", type=int, default=None, help="worker processes for searches")
    ap.add_argument("--output", choices=OUTPUT_MODES, default=None, help="json everywhere except minor, which prints yes/no")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a named construction and print its graph6")
    p.add_argument("kind")
    p.add_argument("params", nargs="*")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("invariants", help="family invariants gamma, alpha, C and the reduced family")
    p.add_argument("--family", action="append", required=True, help="graph6 file, graph6 string or fixture name")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("minor", help="minor containment test")
    p.add_argument("--host", required=True)
    p.add_argument("--pattern", required=True)
    p.add_argument("--witness", action="store_true", help="include branch sets")
    p.set_defaults(func=cmd_minor, default_output="table")

    p = sub.add_parser("rho", help="spectral radius with certificate")
    p.add_argument("graph")
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--perron", action="store_true")
    p.set_defaults(func=cmd_rho)

    p = sub.add_parser("bounds", help="evaluate eigenvalue and edge bounds for a graph")
    p.add_argument("graph")
    p.add_argument("--family", action="append", required=True)
    p.add_argument("--s1", type=int, default=None, help="also evaluate the regular-join bound")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("decompose", help="maximal linear paths")
    p.add_argument("graph")
    p.set_defaults(func=cmd_decompose)

    for name, func, help_ in (
        ("spex", cmd_spex, "maximum spectral radius over minor-free graphs"),
        ("ex", cmd_ex, "maximum edge count over minor-free graphs"),
        ("sat", cmd_sat, "all minor-saturated graphs"),
    ):
        p = sub.add_parser(name, help=help_)
        p.add_argument("-n", type=int, required=True)
        p.add_argument("--family", action="append", required=True)
        if name != "sat":
            p.add_argument("--connected", action="store_true")
        p.add_argument("--g6-out", default=None)
        p.add_argument("--force", action="store_true", help="allow n above the feasibility cap")
        p.set_defaults(func=func)

    p = sub.add_parser("verify", help="compare a predicted extremal family with the search")
    p.add_argument("--theorem", required=True, choices=THEOREM_IDS)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--a", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--s1", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--parts", type=int, nargs="+")
    p.add_argument("--lengths", type=int, nargs="+")
    p.add_argument("--h", help="subgraph removed from K_r (thm1.5)")
    p.add_argument("--family", action="append", help="family for thm1.1-lb")
    p.add_argument("--g6-out", default=None)
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=cmd_verify)
    return ap


def dispatch(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        cfg_kwargs: dict = {"output": args.output or getattr(args, "default_output", "json")}
        if args.tolerance is not None:
            cfg_kwargs["tolerance"] = args.tolerance
        if args.epsilon is not None:
            cfg_kwargs["epsilon"] = args.epsilon
        if args.workers is not None:
            cfg_kwargs["workers"] = args.workers
        cfg = RunConfig(**cfg_kwargs)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args, cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GraphError, CapacityError, Graph6Error, ConvergenceError, SearchInvariantError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def main() -> None:
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
