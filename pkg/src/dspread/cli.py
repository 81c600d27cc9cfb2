"""Command-line interface: analyze, bounds, sweep, conjecture.

Non-interactive by design: every command prints one JSON document (or a TSV
table) and exits. Floats are rendered with 12 significant digits so repeated
invocations are byte-identical.

Exit codes: 0 success, 2 input error (unparseable graph, bad family spec,
unreadable corpus), 3 precondition failure (disconnected graph, alpha out of
range), 4 at least one applicable proven bound violated.
"""

from __future__ import annotations

import argparse
import os
import sys
from importlib import resources
from typing import Optional, Sequence

from . import bounds as bounds_mod
from . import corpus as corpus_mod
from .eigen import spectral_spread, sym_eigen
from .families import parse_family, generate
from .graphs import (
    Graph,
    GraphParseError,
    distance_profile,
    encode_graph6,
    is_connected,
    is_transmission_regular,
    parse_graph6,
)
from .jsonfmt import json_text
from .matrices import generalized_distance_matrix

SCHEMA_VERSION = 1


class _InputError(Exception):
    pass


class _PreconditionError(Exception):
    pass


def _f(x: float) -> str:
    return format(float(x), ".12g")


def _default_tol() -> float:
    raw = os.environ.get("SPREAD_TOL")
    if raw is None:
        return bounds_mod.DEFAULT_TOL
    try:
        return float(raw)
    except ValueError:
        raise _InputError(f"SPREAD_TOL={raw!r} is not a number") from None


def _parse_alpha_list(text: str) -> list[float]:
    try:
        out = [float(t) for t in text.split(",") if t.strip() != ""]
    except ValueError:
        raise _InputError(f"bad alpha list {text!r}") from None
    if not out:
        raise _InputError("empty alpha list")
    return out


def _check_alphas(alphas: Sequence[float]) -> None:
    for a in alphas:
        if not 0.0 <= a <= 1.0:
            raise _PreconditionError(f"alpha must lie in [0, 1], got {a:g}")


def _resolve_inputs(text: str) -> list[tuple[str, Graph]]:
    """An input is a family spec ("kbip:2,3"), a corpus file path, or a
    graph6 string; files yield one graph per non-comment line."""
    if ":" in text:
        try:
            spec = parse_family(text)
        except ValueError as exc:
            raise _InputError(str(exc)) from None
        return [(text, generate(spec))]
    if os.path.exists(text):
        try:
            with open(text, "r", encoding="ascii") as fh:
                lines = list(corpus_mod.iter_graph6_lines(fh))
        except OSError as exc:
            raise _InputError(f"cannot read {text}: {exc}") from None
        try:
            return [(line, parse_graph6(line)) for line in lines]
        except GraphParseError as exc:
            raise _InputError(f"{text}: {exc}") from None
    try:
        return [(text, parse_graph6(text))]
    except GraphParseError as exc:
        raise _InputError(str(exc)) from None


def _base_report(desc: str, g: Graph, alpha: float) -> dict:
    profile = distance_profile(g)
    spec = sym_eigen(generalized_distance_matrix(profile, alpha), vectors=False)
    k = is_transmission_regular(profile)
    return {
        "input": desc,
        "graph6": encode_graph6(g),
        "n": g.n,
        "alpha": float(alpha),
        "wiener": profile.wiener,
        "diameter": profile.diameter,
        "transmission_min": int(profile.tr.min()),
        "transmission_max": int(profile.tr.max()),
        "transmission_regular": k,
        "spectrum": [float(v) for v in spec.values],
        "spread": spectral_spread(spec),
    }


def _emit(text: str) -> None:
    sys.stdout.write(text)
    if not text.endswith("\n"):
        sys.stdout.write("\n")


# --- analyze ----------------------------------------------------------------


def _cmd_analyze(args) -> int:
    inputs = _resolve_inputs(args.input)
    if args.alpha is not None:
        alphas = [args.alpha]
    elif args.alpha_grid is not None:
        alphas = _parse_alpha_list(args.alpha_grid)
    else:
        alphas = list(corpus_mod.ALPHA_GRID)
    _check_alphas(alphas)
    for _, g in inputs:
        if not is_connected(g):
            raise _PreconditionError("requires connected graph")
    reports = [_base_report(d, g, a) for d, g in inputs for a in alphas]
    if args.format == "tsv":
        rows = ["input\talpha\tn\twiener\tdiameter\tspread\tspectrum"]
        for r in reports:
            spectrum = ",".join(_f(v) for v in r["spectrum"])
            rows.append(
                f"{r['input']}\t{_f(r['alpha'])}\t{r['n']}\t{r['wiener']}"
                f"\t{r['diameter']}\t{_f(r['spread'])}\t{spectrum}"
            )
        _emit("\n".join(rows))
    else:
        _emit(json_text({"schema_version": SCHEMA_VERSION, "command": "analyze", "reports": reports}))
    return 0


# --- bounds -----------------------------------------------------------------


def _cmd_bounds(args) -> int:
    inputs = _resolve_inputs(args.input)
    alphas = [args.alpha] if args.alpha is not None else list(corpus_mod.ALPHA_GRID)
    _check_alphas(alphas)
    tol = args.tol if args.tol is not None else _default_tol()
    for _, g in inputs:
        if not is_connected(g):
            raise _PreconditionError("requires connected graph")
    reports = []
    violated = False
    for desc, g in inputs:
        ctx = bounds_mod.EvalContext(g)
        omega, _ = ctx.cliques
        for a in alphas:
            base = _base_report(desc, g, a)
            evaluated = bounds_mod.evaluate_all(g, a, tol=tol, ctx=ctx)
            base["clique_number"] = omega
            base["independence_number"] = ctx.independence
            base["bounds"] = [r.to_json() for r in evaluated]
            base["discrepancies"] = bounds_mod.discrepancies(evaluated)
            if bounds_mod.violations(evaluated):
                violated = True
            reports.append(base)
    if args.format == "tsv":
        rows = [
            "input\talpha\tbound_id\tdirection\tstatus\tapplicable"
            "\tbound\tactual\tgap\tholds\tequality\treason"
        ]
        for r in reports:
            for b in r["bounds"]:
                cells = [
                    r["input"],
                    _f(r["alpha"]),
                    b["bound_id"],
                    b["direction"],
                    b["status"],
                    str(b["applicable"]).lower(),
                    "" if b["bound"] is None else _f(b["bound"]),
                    "" if b["actual"] is None else _f(b["actual"]),
                    "" if b["gap"] is None else _f(b["gap"]),
                    "" if b["holds"] is None else str(b["holds"]).lower(),
                    "" if b["equality"] is None else str(b["equality"]).lower(),
                    b["reason"] or "",
                ]
                rows.append("\t".join(cells))
        _emit("\n".join(rows))
    else:
        _emit(json_text({"schema_version": SCHEMA_VERSION, "command": "bounds", "reports": reports}))
    return 4 if violated else 0


# --- sweep ------------------------------------------------------------------


def _parse_seed_random(text: str) -> tuple[int, int, float]:
    parts = text.split(",")
    if len(parts) != 3:
        raise _InputError("--seed-random expects n,count,p")
    try:
        return int(parts[0]), int(parts[1]), float(parts[2])
    except ValueError:
        raise _InputError(f"bad --seed-random value {text!r}") from None


def _cmd_sweep(args) -> int:
    alphas = _parse_alpha_list(args.alphas) if args.alphas else list(corpus_mod.ALPHA_GRID)
    _check_alphas(alphas)
    tol = args.tol if args.tol is not None else _default_tol()
    graphs: list[Graph] = []
    if args.corpus:
        try:
            graphs.extend(corpus_mod.load_corpus(args.corpus))
        except OSError as exc:
            raise _InputError(f"cannot read corpus {args.corpus}: {exc}") from None
        except GraphParseError as exc:
            raise _InputError(f"{args.corpus}: {exc}") from None
    if args.seed_random:
        n, count, p = _parse_seed_random(args.seed_random)
        for i in range(count):
            graphs.append(corpus_mod.random_connected_graph(n, p, seed=args.seed + i))
    if not graphs and not args.corpus:
        raise _InputError("nothing to sweep: give --corpus and/or --seed-random")
    summary = corpus_mod.sweep(graphs, alphas=alphas, tol=tol)
    doc = {"schema_version": SCHEMA_VERSION, "command": "sweep", "alphas": [float(a) for a in alphas]}
    doc.update(summary.to_json())
    _emit(json_text(doc))
    return 4 if summary.violations else 0


# --- conjecture -------------------------------------------------------------


def _packaged_corpus(n: int):
    name = f"bipartite_connected_n{n}.g6"
    ref = resources.files("dspread").joinpath("data").joinpath(name)
    if not ref.is_file():
        raise _InputError(
            f"no packaged corpus for n={n}; supply --corpus with an exhaustive "
            f"connected-bipartite graph6 file"
        )
    return ref


def _cmd_conjecture(args) -> int:
    if args.alpha is None:
        raise _InputError("--alpha is required")
    _check_alphas([args.alpha])
    if args.corpus:
        try:
            graphs = corpus_mod.load_corpus(args.corpus)
        except OSError as exc:
            raise _InputError(f"cannot read corpus {args.corpus}: {exc}") from None
        except GraphParseError as exc:
            raise _InputError(f"{args.corpus}: {exc}") from None
    else:
        ref = _packaged_corpus(args.n)
        graphs = [
            parse_graph6(line)
            for line in corpus_mod.iter_graph6_lines(ref.read_text(encoding="ascii").splitlines())
        ]
    try:
        result = corpus_mod.check_problem_39(graphs, args.n, args.alpha)
    except ValueError as exc:
        raise _InputError(str(exc)) from None
    doc = {"schema_version": SCHEMA_VERSION, "command": "conjecture"}
    doc.update(result.to_json())
    _emit(json_text(doc))
    return 0


# --- driver -----------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="dspread",
        description=(
            "Spectra and spectral spread of generalized distance matrices of "
            "connected graphs, with bound verification."
        ),
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="spectrum, spread, and distance statistics")
    p.add_argument("input", help="graph6 string, corpus file, or family spec like kbip:2,3")
    p.add_argument("--alpha", type=float, default=None)
    p.add_argument("--alpha-grid", default=None, help="comma-separated alphas")
    p.add_argument("--format", choices=("json", "tsv"), default="json")
    p.set_defaults(fn=_cmd_analyze)

    p = sub.add_parser("bounds", help="evaluate every registered spread bound")
    p.add_argument("input", help="graph6 string, corpus file, or family spec")
    p.add_argument("--alpha", type=float, default=None)
    p.add_argument("--tol", type=float, default=None, help="override SPREAD_TOL / default 1e-8")
    p.add_argument("--format", choices=("json", "tsv"), default="json")
    p.set_defaults(fn=_cmd_bounds)

    p = sub.add_parser("sweep", help="stress the bound registry over a corpus")
    p.add_argument("--corpus", default=None, help="graph6 file, one graph per line")
    p.add_argument("--alphas", default=None, help="comma-separated alphas")
    p.add_argument("--seed-random", default=None, metavar="N,COUNT,P",
                   help="add COUNT random connected graphs of order N, edge prob P")
    p.add_argument("--seed", type=int, default=1, help="base seed for --seed-random")
    p.add_argument("--tol", type=float, default=None)
    p.set_defaults(fn=_cmd_sweep)

    p = sub.add_parser("conjecture", help="minimum-spread scan of a bipartite corpus")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--corpus", default=None,
                   help="exhaustive connected-bipartite corpus; packaged files cover n <= 6")
    p.set_defaults(fn=_cmd_conjecture)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except _InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except _PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        # preconditions surfaced from library code (disconnected input, alpha range)
        print(f"error: {exc}", file=sys.stderr)
        return 3


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    sys.exit(main())
