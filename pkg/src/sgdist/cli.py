"""Command-line surface: one subcommand per library capability.

Exit codes: 0 success, 1 domain error (bad graph, violated hypothesis),
2 usage error, 3 formula-vs-direct disagreement (reserved for bug
detection).  Results go to stdout (or -o FILE), errors to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

import numpy as np

from . import catalog, core, distance, products, spectra

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2
EXIT_MISMATCH = 3


def _read_graph(path: str) -> core.SignedGraph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc}") from exc
    try:
        return core.parse_edge_list(text)
    except core.EdgeListError as exc:
        raise ValueError(f"{path}: {exc}") from exc


def _emit(args, payload: str) -> None:
    out = getattr(args, "output", None)
    if out:
        Path(out).write_text(payload, encoding="utf-8")
    else:
        end = "" if payload.endswith("\n") else "\n"
        print(payload, end=end)


def _matrix_payload(mat: np.ndarray, fmt: str) -> str:
    if fmt == "csv":
        return "\n".join(",".join(str(int(x)) for x in row) for row in mat) + "\n"
    return json.dumps({"order": int(mat.shape[0]), "entries": mat.tolist()})


def _cmd_info(args) -> int:
    g = _read_graph(args.file)
    preds = core.structural_predicates(g)
    payload = {
        "order": g.n,
        "size": g.m,
        "is_connected": preds.is_connected,
        "is_two_connected": preds.is_two_connected,
        "is_geodetic": preds.is_geodetic,
        "has_odd_cycle": preds.has_odd_cycle,
        "is_balanced": core.is_balanced(g),
        "net_degrees": core.net_degrees(g),
        "is_net_regular": core.is_net_regular(g),
    }
    _emit(args, json.dumps(payload))
    return EXIT_OK


def _cmd_dist(args) -> int:
    g = _read_graph(args.file)
    mat = distance.distance_matrix(g, args.which)
    _emit(args, _matrix_payload(mat, args.format))
    return EXIT_OK


def _cmd_compat(args) -> int:
    g = _read_graph(args.file)
    pairs = distance.incompatible_pairs(g)
    if args.format == "json":
        _emit(args, json.dumps({"compatible": not pairs, "incompatible_pairs": [list(p) for p in pairs]}))
    elif pairs:
        _emit(args, "incompatible: " + " ".join(f"({u},{v})" for u, v in pairs))
    else:
        _emit(args, "compatible")
    return EXIT_OK


def _cmd_witness(args) -> int:
    g = _read_graph(args.file)
    w = distance.least_incompatible_witness(g)
    if args.format == "json":
        payload = None
        if w is not None:
            payload = {
                "pair": list(w.pair),
                "path_pos": list(w.path_pos),
                "path_neg": list(w.path_neg),
                "cycle": list(w.cycle),
                "distance": w.k,
            }
        _emit(args, json.dumps({"compatible": w is None, "witness": payload}))
    elif w is None:
        _emit(args, "compatible")
    else:
        _emit(
            args,
            f"incompatible pair ({w.pair[0]},{w.pair[1]}) at distance {w.k}\n"
            f"positive path: {' '.join(map(str, w.path_pos))}\n"
            f"negative path: {' '.join(map(str, w.path_neg))}\n"
            f"negative cycle of length {len(w.cycle)}: {' '.join(map(str, w.cycle))}",
        )
    return EXIT_OK


def _cmd_product(args) -> int:
    g1 = _read_graph(args.file1)
    g2 = _read_graph(args.file2)
    if args.kind == "cartesian":
        prod = products.cartesian(g1, g2)
    elif args.kind == "lex":
        prod = products.lexicographic(g1, g2)
    else:
        if not products.tensor_is_connected(g1, g2):
            raise ValueError("tensor product disconnected: neither factor has an odd cycle")
        prod = products.tensor(g1, g2)
    _emit(args, core.serialize_edge_list(prod))
    return EXIT_OK


def _cmd_dist_formula(args) -> int:
    g1 = _read_graph(args.file1)
    g2 = _read_graph(args.file2)
    if args.kind == "cartesian":
        formula = spectra.cartesian_distance_formula(g1, g2)
        prod = products.cartesian(g1, g2)
    else:
        formula = spectra.lexicographic_distance_formula(g1, g2)
        prod = products.lexicographic(g1, g2)
    direct_max = distance.distance_matrix(prod, "max")
    direct_min = distance.distance_matrix(prod, "min")
    ok = np.array_equal(formula, direct_max) and np.array_equal(formula, direct_min)
    if not ok:
        print("formula route disagrees with direct distance computation", file=sys.stderr)
        return EXIT_MISMATCH
    _emit(
        args,
        json.dumps(
            {
                "order": int(formula.shape[0]),
                "entries": formula.tolist(),
                "matches_direct": True,
            }
        ),
    )
    return EXIT_OK


def _cmd_charpoly(args) -> int:
    g = _read_graph(args.file)
    poly = spectra.char_poly(distance.distance_matrix(g, args.which))
    _emit(args, json.dumps({"coefficients": poly.to_json(), "rendered": str(poly)}))
    return EXIT_OK


def _cmd_spectrum(args) -> int:
    g = _read_graph(args.file)
    spec = spectra.eig_symmetric(spectra.compatible_distance_matrix(g), tol=args.tol)
    if args.format == "json":
        _emit(
            args,
            json.dumps(
                {
                    "eigenvalues": [{"value": v, "multiplicity": m} for v, m in spec.entries],
                    "tol": spec.tol,
                }
            ),
        )
    else:
        _emit(args, str(spec))
    return EXIT_OK


def _cmd_gen(args) -> int:
    # Sign patterns such as "-+++" look like options, so `params` is a
    # REMAINDER capture; pull a trailing -o/--output out of it by hand.
    params = list(args.params)
    for flag in ("-o", "--output"):
        if flag in params:
            i = params.index(flag)
            if i + 1 >= len(params):
                raise ValueError(f"{flag} needs a file argument")
            args.output = params[i + 1]
            del params[i : i + 2]
    g = catalog.generate(args.kind, params)
    _emit(args, core.serialize_edge_list(g))
    return EXIT_OK


def _workers_from_env() -> int:
    raw = os.environ.get("SG_THREADS", "")
    if not raw:
        return 1
    try:
        w = int(raw)
    except ValueError:
        raise ValueError(f"SG_THREADS must be an integer, got {raw!r}") from None
    if w < 0:
        raise ValueError(f"SG_THREADS must be >= 0, got {w}")
    return w if w > 0 else (os.cpu_count() or 1)


def _cmd_petersen_table(args) -> int:
    table = catalog.enumerate_petersen_signings(workers=_workers_from_env())
    payload = {
        "total_signings": table.total,
        "classes": [
            {
                "label": c.label,
                "size": c.size,
                "char_poly": c.char_poly.to_json(),
                "rendered": str(c.char_poly),
                "representative": core.serialize_edge_list(c.representative),
            }
            for c in table.classes
        ],
    }
    _emit(args, json.dumps(payload))
    return EXIT_OK


def _cmd_conjecture(args) -> int:
    found = products.conjecture_search(args.trials, max_n=args.max_n, seed=args.seed)
    records = []
    for cand in found:
        records.append(
            {
                "trial": cand.trial,
                "g1": core.serialize_edge_list(cand.g1),
                "g2": core.serialize_edge_list(cand.g2),
                "incompatible_product_pairs": [list(p) for p in cand.product_pairs],
            }
        )
        outdir = Path(args.outdir)
        outdir.mkdir(parents=True, exist_ok=True)
        (outdir / f"candidate_{cand.trial}_g1.sg").write_text(
            core.serialize_edge_list(cand.g1), encoding="utf-8"
        )
        (outdir / f"candidate_{cand.trial}_g2.sg").write_text(
            core.serialize_edge_list(cand.g2), encoding="utf-8"
        )
        (outdir / f"candidate_{cand.trial}.json").write_text(
            json.dumps(records[-1]), encoding="utf-8"
        )
    _emit(
        args,
        json.dumps(
            {
                "trials": args.trials,
                "max_n": args.max_n,
                "seed": args.seed,
                "counterexamples": records,
            }
        ),
    )
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sgdist", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="order, size, predicates, balance, net-degrees")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_info)

    p = sub.add_parser("dist", help="signed distance matrix")
    p.add_argument("file")
    p.add_argument("--which", choices=("max", "min"), default="max")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_dist)

    p = sub.add_parser("compat", help="compatibility verdict and incompatible pairs")
    p.add_argument("file")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_compat)

    p = sub.add_parser("witness", help="least-distance incompatibility witness")
    p.add_argument("file")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("product", help="signed graph product, emitted as an edge list")
    p.add_argument("--kind", choices=("cartesian", "lex", "tensor"), required=True)
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_product)

    p = sub.add_parser("dist-formula", help="Kronecker-form product distance matrix, checked against direct BFS")
    p.add_argument("--kind", choices=("cartesian", "lex"), required=True)
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_dist_formula)

    p = sub.add_parser("charpoly", help="exact characteristic polynomial of the distance matrix")
    p.add_argument("file")
    p.add_argument("--which", choices=("max", "min"), default="max")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_charpoly)

    p = sub.add_parser("spectrum", help="distance spectrum of a compatible signed graph")
    p.add_argument("file")
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("gen", help="generate a named graph (path/cycle/complete/petersen)")
    p.add_argument("-o", "--output")
    p.add_argument("kind")
    p.add_argument("params", nargs=argparse.REMAINDER)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("petersen-table", help="census of all 2^15 Petersen signings")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_petersen_table)

    p = sub.add_parser("conjecture", help="randomized tensor-compatibility counterexample search")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--max-n", type=int, default=7)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--outdir", default=".")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_conjecture)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def main() -> None:
    sys.exit(run())
