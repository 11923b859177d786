"""Command-line front end.

Installed as ``sdg`` (also runnable via ``python -m sparsedigraph``).
Subcommands: generate, evolve, compare, tune, report, spectrum.

Every command is deterministic under a fixed ``--seed`` (default 0; no
wall-clock entropy anywhere).  Exit codes: 0 success, 1 usage error,
2 data or validation error, 3 resampling budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

import numpy as np

from .graph import (
    Digraph,
    EdgeListError,
    degree_sequence,
    graph_stats,
    read_edge_list,
    write_edge_list,
)
from .generators import (
    GenerationError,
    SdgParams,
    SedgeParams,
    sdg,
    sdg_default_params,
    sedge,
    sedge_default_params,
)
from .metrics import (
    MetricsReport,
    compare,
    ks_statistic,
    msd_sorted,
    restrict_to_new_nodes,
    spectral_gap,
    spectrum,
)
from .rng import RandomStream
from .tuning import TuneSpec, tune, write_score_table

_TUNE_GRID_STEP = 0.05
_TUNE_REPLICATES = 20


class _Parser(argparse.ArgumentParser):
    """argparse parser whose usage errors exit with code 1, not 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        with open(output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _read_id_list(path) -> np.ndarray:
    """Parse a new-node id file: one integer per line, '#' comments allowed."""
    ids = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            try:
                ids.append(int(line))
            except ValueError:
                raise EdgeListError(f"{path}:{lineno}: not an integer: {line!r}")
    return np.asarray(ids, dtype=np.int64)


def _write_id_list(ids, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for i in ids:
            fh.write(f"{int(i)}\n")


def _fmt(x) -> str:
    return f"{x:.6g}"


# ---------------------------------------------------------------------------
# Subcommands.


def cmd_generate(ns) -> int:
    if ns.edges > 0:
        d = sdg_default_params(ns.nodes, ns.edges)
    else:
        d = SdgParams(0.45, 1.0)
    params = SdgParams(
        e1=ns.e1 if ns.e1 is not None else d.e1,
        e2=ns.e2 if ns.e2 is not None else d.e2,
    )
    g = sdg(ns.nodes, ns.edges, params, RandomStream(ns.seed))
    write_edge_list(g, ns.output)
    stats = graph_stats(g)
    payload = {"params": params.to_dict(), **stats.to_dict()}
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    return 0


def cmd_evolve(ns) -> int:
    base = read_edge_list(ns.base)
    n_tot = base.node_count + ns.new_nodes
    e_tot = base.edge_count + ns.new_edges
    if e_tot > 0:
        d = sedge_default_params(n_tot, e_tot)
    else:
        d = SedgeParams(0.5, 0.4, 0.45, 1.0)
    params = SedgeParams(
        alpha=ns.alpha if ns.alpha is not None else d.alpha,
        beta=ns.beta if ns.beta is not None else d.beta,
        e1=ns.e1 if ns.e1 is not None else d.e1,
        e2=ns.e2 if ns.e2 is not None else d.e2,
    )
    g = sedge(base, ns.new_nodes, ns.new_edges, params, RandomStream(ns.seed))
    write_edge_list(g, ns.output)
    ids_path = ns.new_ids_out or ns.output + ".new-nodes"
    _write_id_list(range(base.node_count, g.node_count), ids_path)
    stats = graph_stats(g)
    payload = {"params": params.to_dict(), **stats.to_dict()}
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    return 0


def cmd_compare(ns) -> int:
    ref = read_edge_list(ns.reference)
    cand = read_edge_list(ns.candidate)
    if ns.new_nodes is None:
        report = compare(ref, cand, spectral=ns.spectral)
    else:
        ids = _read_id_list(ns.new_nodes)
        ref_in = restrict_to_new_nodes(ref, ids, "in")
        ref_out = restrict_to_new_nodes(ref, ids, "out")
        cand_in = restrict_to_new_nodes(cand, ids, "in")
        cand_out = restrict_to_new_nodes(cand, ids, "out")
        gap = None
        if ns.spectral:
            gap = spectral_gap(spectrum(ref), spectrum(cand))
        report = MetricsReport(
            ks_in=ks_statistic(ref_in, cand_in),
            ks_out=ks_statistic(ref_out, cand_out),
            msd_in=msd_sorted(ref_in, cand_in),
            msd_out=msd_sorted(ref_out, cand_out),
            spectral_summary=gap,
        )
    _emit(json.dumps(report.to_dict(), indent=2) + "\n", ns.output)
    return 0


def cmd_tune(ns) -> int:
    reference = read_edge_list(ns.reference)
    spec = TuneSpec(
        model=ns.model,
        grid_step=ns.grid_step,
        replicates=ns.replicates,
        objective=ns.objective,
        base_seed=ns.seed,
    )
    base = None
    new_ids = None
    if ns.model == "sedge":
        if ns.base is None:
            ns.parser.error("--model sedge requires --base")
        base = read_edge_list(ns.base)
        if ns.new_ids is not None:
            new_ids = _read_id_list(ns.new_ids)
    result = tune(reference, spec, base=base, new_node_ids=new_ids)
    if ns.dump_grid:
        write_score_table(result, ns.dump_grid)
    _emit(json.dumps(result.to_dict(), indent=2) + "\n", ns.output)
    return 0


def cmd_spectrum(ns) -> int:
    g = read_edge_list(ns.graph)
    mags = spectrum(g)
    lines = ["magnitude"]
    lines.extend(_fmt(m) for m in mags)
    _emit("\n".join(lines) + "\n", ns.output)
    return 0


# -- report ------------------------------------------------------------------


def _load_manifest(path, mode):
    """Parse and validate a corpus manifest.

    Returns (entries, errors): entries are dicts holding loaded graphs;
    errors is an exhaustive list of human-readable validation failures.
    """
    errors = []
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        return [], [f"manifest {path}: {exc}"]
    if not isinstance(raw, list):
        return [], [f"manifest {path}: top level must be a JSON list"]

    root = os.path.dirname(os.path.abspath(path))
    required = ("name", "path") if mode == "static" else (
        "name", "first", "second", "new_nodes")
    entries = []
    for idx, item in enumerate(raw):
        where = f"manifest entry {idx}"
        if not isinstance(item, dict):
            errors.append(f"{where}: must be a JSON object")
            continue
        missing = [k for k in required if k not in item]
        if missing:
            errors.append(f"{where}: missing keys {missing}")
            continue
        name = item["name"]
        entry = {"name": name}
        ok = True

        def load_graph(key):
            nonlocal ok
            p = os.path.join(root, str(item[key]))
            try:
                return read_edge_list(p)
            except (OSError, EdgeListError) as exc:
                errors.append(f"{where} ({name}): {key}: {exc}")
                ok = False
                return None

        if mode == "static":
            entry["graph"] = load_graph("path")
        else:
            first = load_graph("first")
            second = load_graph("second")
            ids = None
            p = os.path.join(root, str(item["new_nodes"]))
            try:
                ids = _read_id_list(p)
            except (OSError, EdgeListError) as exc:
                errors.append(f"{where} ({name}): new_nodes: {exc}")
                ok = False
            if ok:
                if second.node_count <= first.node_count:
                    errors.append(
                        f"{where} ({name}): second version must have more "
                        f"nodes ({second.node_count} <= {first.node_count})"
                    )
                    ok = False
                if second.edge_count < first.edge_count:
                    errors.append(
                        f"{where} ({name}): second version has fewer edges "
                        f"({second.edge_count} < {first.edge_count})"
                    )
                    ok = False
                if ids is not None and len(ids) > 0 and (
                        ids.min() < 0 or ids.max() >= second.node_count):
                    errors.append(
                        f"{where} ({name}): new-node ids out of range for "
                        f"the second version"
                    )
                    ok = False
            entry.update(first=first, second=second, new_ids=ids)
        if ok:
            entries.append(entry)
    return entries, errors


def _average_scores(ref_in, ref_out, make, score_ids, runs, root, offset):
    """Mean KS/MSD over ``runs`` generated graphs.

    Run i draws from substream ``offset + i``; ``score_ids`` restricts the
    candidate's degree sequences when not None.
    """
    acc = np.zeros(4)
    for i in range(runs):
        g = make(root.substream(offset + i))
        if score_ids is None:
            cand_in = degree_sequence(g, "in")
            cand_out = degree_sequence(g, "out")
        else:
            cand_in = restrict_to_new_nodes(g, score_ids, "in")
            cand_out = restrict_to_new_nodes(g, score_ids, "out")
        acc[0] += ks_statistic(ref_in, cand_in)
        acc[1] += ks_statistic(ref_out, cand_out)
        acc[2] += msd_sorted(ref_in, cand_in)
        acc[3] += msd_sorted(ref_out, cand_out)
    return acc / runs


def cmd_report(ns) -> int:
    if not ns.defaults and not ns.tuned:
        ns.parser.error("pass at least one of --defaults / --tuned")
    entries, errors = _load_manifest(ns.manifest, ns.mode)
    if errors:
        for line in errors:
            sys.stderr.write(line + "\n")
        return 2

    metric_names = ("ks_in", "ks_out", "msd_in", "msd_out")
    header = ["name"]
    if ns.defaults and ns.tuned:
        header += [f"{m}_defaults" for m in metric_names]
        header += [f"{m}_tuned" for m in metric_names]
        header += [f"ratio_{m}" for m in metric_names]
    else:
        header += list(metric_names)

    rows = []
    root = RandomStream(ns.seed)
    for j, entry in enumerate(entries):
        offset = j * ns.runs
        if ns.mode == "static":
            ref = entry["graph"]
            n, e = ref.node_count, ref.edge_count
            ref_in = degree_sequence(ref, "in")
            ref_out = degree_sequence(ref, "out")
            score_ids = None

            def make_factory(params):
                return lambda rng: sdg(n, e, params, rng)

            default_params = sdg_default_params(n, e)
            tune_kwargs = {}
            tune_reference = ref
        else:
            first, second = entry["first"], entry["second"]
            ids = entry["new_ids"]
            n_new = len(ids)
            e_new = second.edge_count - first.edge_count
            ref_in = restrict_to_new_nodes(second, ids, "in")
            ref_out = restrict_to_new_nodes(second, ids, "out")
            score_ids = np.arange(first.node_count, first.node_count + n_new)

            def make_factory(params):
                return lambda rng: sedge(first, n_new, e_new, params, rng)

            default_params = sedge_default_params(
                first.node_count + n_new, first.edge_count + e_new)
            tune_kwargs = {"base": first, "new_node_ids": ids}
            tune_reference = second

        row = [entry["name"]]
        scores = {}
        if ns.defaults:
            scores["defaults"] = _average_scores(
                ref_in, ref_out, make_factory(default_params), score_ids,
                ns.runs, root, offset)
        if ns.tuned:
            model = "sdg" if ns.mode == "static" else "sedge"
            spec = TuneSpec(model=model, grid_step=_TUNE_GRID_STEP,
                            replicates=_TUNE_REPLICATES,
                            base_seed=ns.seed + 1)
            result = tune(tune_reference, spec, **tune_kwargs)
            scores["tuned"] = _average_scores(
                ref_in, ref_out, make_factory(result.best_params), score_ids,
                ns.runs, root, offset)
        for key in ("defaults", "tuned"):
            if key in scores:
                row.extend(_fmt(v) for v in scores[key])
        if ns.defaults and ns.tuned:
            with np.errstate(divide="ignore", invalid="ignore"):
                ratio = scores["defaults"] / scores["tuned"]
            row.extend(_fmt(v) for v in ratio)
        rows.append(row)

    lines = [",".join(header)]
    lines.extend(",".join(r) for r in rows)
    _emit("\n".join(lines) + "\n", ns.output)
    return 0


# ---------------------------------------------------------------------------
# Parser wiring.


def build_parser() -> _Parser:
    parser = _Parser(prog="sdg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def common(p):
        p.add_argument("--seed", type=int, default=0,
                       help="RNG seed (default 0)")
        p.set_defaults(parser=p)

    p = sub.add_parser("generate", help="generate a fixed-size digraph")
    p.add_argument("--nodes", type=int, required=True)
    p.add_argument("--edges", type=int, required=True)
    p.add_argument("--e1", type=float, default=None,
                   help="uniform-source probability (default 0.45)")
    p.add_argument("--e2", type=float, default=None,
                   help="fresh-target probability (default N/E - 0.05)")
    p.add_argument("-o", "--output", required=True,
                   help="edge-list file to write")
    common(p)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("evolve", help="grow an existing digraph")
    p.add_argument("--base", required=True, help="edge-list file to grow")
    p.add_argument("--new-nodes", type=int, required=True)
    p.add_argument("--new-edges", type=int, required=True)
    p.add_argument("--alpha", type=float, default=None,
                   help="new-source edge share (default 0.5)")
    p.add_argument("--beta", type=float, default=None,
                   help="new-target edge share (default 0.4)")
    p.add_argument("--e1", type=float, default=None)
    p.add_argument("--e2", type=float, default=None)
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--new-ids-out", default=None,
                   help="where to write new node ids "
                        "(default: <output>.new-nodes)")
    common(p)
    p.set_defaults(func=cmd_evolve)

    p = sub.add_parser("compare", help="degree-distribution metrics")
    p.add_argument("--reference", required=True)
    p.add_argument("--candidate", required=True)
    p.add_argument("--new-nodes", default=None,
                   help="id-list file restricting metrics to these nodes")
    p.add_argument("--spectral", action="store_true",
                   help="also compare adjacency spectra")
    p.add_argument("-o", "--output", default=None)
    common(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("tune", help="grid-search parameters to a reference")
    p.add_argument("--reference", required=True)
    p.add_argument("--model", required=True,
                   choices=("sdg", "sedge", "bollobas"))
    p.add_argument("--grid-step", type=float, default=0.05)
    p.add_argument("--replicates", type=int, default=20)
    p.add_argument("--objective", default=None,
                   choices=("minimax_msd", "ks_max"))
    p.add_argument("--base", default=None,
                   help="pre-evolution graph (sedge only)")
    p.add_argument("--new-ids", default=None,
                   help="id-list of the reference's new nodes (sedge only)")
    p.add_argument("--dump-grid", default=None,
                   help="write the full score table as CSV here")
    p.add_argument("-o", "--output", default=None)
    common(p)
    p.set_defaults(func=cmd_tune)

    p = sub.add_parser("report", help="corpus-level metric tables")
    p.add_argument("--manifest", required=True, help="JSON corpus manifest")
    p.add_argument("--mode", required=True, choices=("static", "evolution"))
    p.add_argument("--runs", type=int, default=100)
    p.add_argument("--defaults", action="store_true",
                   help="score default parameters")
    p.add_argument("--tuned", action="store_true",
                   help="grid-search each entry, then score the optimum")
    p.add_argument("-o", "--output", default=None)
    common(p)
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("spectrum", help="adjacency eigenvalue magnitudes")
    p.add_argument("graph", help="edge-list file")
    p.add_argument("-o", "--output", default=None)
    common(p)
    p.set_defaults(func=cmd_spectrum)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        return ns.func(ns)
    except GenerationError as exc:
        sys.stderr.write(f"sdg: {exc}\n")
        return 3
    except (EdgeListError, ValueError, TypeError, OSError) as exc:
        sys.stderr.write(f"sdg: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
