"""Grid-search parameter recovery against a reference graph.

The tuner exhaustively scores every point of a parameter grid by
generating ``replicates`` graphs per point and averaging a similarity
objective against the reference.  Replicate i always draws from the
stream seeded ``base_seed + i``, so every grid point sees identical
random number sequences (common random numbers); the whole score table
is reproducible bit for bit.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .graph import Digraph, degree_sequence
from .generators import (
    GenerationError,
    SdgParams,
    SedgeParams,
    BollobasParams,
    sdg,
    sedge,
    bollobas_generate,
)
from .metrics import ks_statistic, msd_sorted, restrict_to_new_nodes
from .rng import RandomStream

_MODELS = ("sdg", "sedge", "bollobas")
_OBJECTIVES = ("minimax_msd", "ks_max")
_DELTAS = (0.0, 0.5, 1.0, 2.0)


@dataclass(frozen=True)
class TuneSpec:
    """Configuration of one grid search.

    ``objective`` defaults per model: minimax_msd for sdg and sedge,
    ks_max for bollobas (whose node count cannot match the reference, so
    MSD is unavailable).
    """

    model: str
    grid_step: float = 0.05
    replicates: int = 20
    objective: Optional[str] = None
    base_seed: int = 0

    def __post_init__(self):
        if self.model not in _MODELS:
            raise ValueError(f"model must be one of {_MODELS}, got {self.model!r}")
        if not 0.0 < self.grid_step <= 1.0:
            raise ValueError("grid_step must be in (0, 1]")
        if self.replicates < 1:
            raise ValueError("replicates must be >= 1")
        if self.objective is not None and self.objective not in _OBJECTIVES:
            raise ValueError(
                f"objective must be one of {_OBJECTIVES}, got {self.objective!r}"
            )

    def resolved_objective(self) -> str:
        if self.objective is not None:
            return self.objective
        return "ks_max" if self.model == "bollobas" else "minimax_msd"


@dataclass(frozen=True)
class TuneResult:
    """Outcome of a grid search.

    ``score_table`` maps every evaluated grid point (a plain parameter
    tuple) to its replicate-averaged score; ``best_score`` is its minimum
    and ``best_params`` the winning point as a params object.
    ``replicate_std`` is the sample standard deviation of the per-replicate
    scores at the optimum (0 when only one replicate was run).
    """

    model: str
    objective: str
    best_params: object
    best_score: float
    score_table: dict = field(repr=False)
    replicate_std: float = 0.0

    def to_dict(self) -> dict:
        return {
            "model": self.model,
            "objective": self.objective,
            "best_params": self.best_params.to_dict(),
            "best_score": self.best_score,
            "replicate_std": self.replicate_std,
        }


def _axis(step: float) -> list[float]:
    vals = []
    k = 0
    while True:
        v = round(k * step, 12)
        if v > 1.0 + 1e-9:
            break
        vals.append(min(v, 1.0))
        k += 1
    return vals


def _grid_points(spec: TuneSpec, n_ref: int, e_ref: int):
    """Parameter tuples in lexicographic order.

    e2 axes are capped strictly below N/E (the regime the in-degree law
    assumes); alpha+beta <= 1 for sedge; beta = 1-alpha-gamma >= 0 for
    bollobas with a shared delta axis.
    """
    axis = _axis(spec.grid_step)
    cap = n_ref / e_ref if e_ref > 0 else float("inf")
    e2_axis = [v for v in axis if v < cap]
    if not e2_axis:
        e2_axis = [0.0]
    if spec.model == "sdg":
        return [(e1, e2) for e1 in axis for e2 in e2_axis]
    if spec.model == "sedge":
        return [
            (a, b, e1, e2)
            for a in axis
            for b in axis
            if a + b <= 1.0 + 1e-9
            for e1 in axis
            for e2 in e2_axis
        ]
    return [
        (a, g, d)
        for a in axis
        for g in axis
        if a + g <= 1.0 + 1e-9
        for d in _DELTAS
    ]


def _params_for(model: str, point: tuple):
    if model == "sdg":
        return SdgParams(e1=point[0], e2=point[1])
    if model == "sedge":
        return SedgeParams(alpha=point[0], beta=point[1], e1=point[2], e2=point[3])
    a, g, d = point
    return BollobasParams(alpha=a, beta=round(1.0 - a - g, 12), gamma=g,
                          delta_in=d, delta_out=d)


def _score_one(generated: Digraph, objective: str, ref_in, ref_out,
               new_ids) -> float:
    if new_ids is None:
        cand_in = degree_sequence(generated, "in")
        cand_out = degree_sequence(generated, "out")
    else:
        cand_in = restrict_to_new_nodes(generated, new_ids, "in")
        cand_out = restrict_to_new_nodes(generated, new_ids, "out")
    if objective == "minimax_msd":
        m_in = msd_sorted(ref_in, cand_in)
        m_out = msd_sorted(ref_out, cand_out)
        if m_in is None or m_out is None:
            raise ValueError(
                "MSD objective needs matching node counts; use ks_max"
            )
        return max(m_in, m_out)
    return max(ks_statistic(ref_in, cand_in), ks_statistic(ref_out, cand_out))


def tune(reference: Digraph, spec: TuneSpec, *,
         base: Optional[Digraph] = None,
         new_node_ids=None) -> TuneResult:
    """Exhaustive grid search for the parameters best matching a reference.

    Parameters
    ----------
    reference : Digraph
        The graph to match.  sdg candidates copy its node and edge counts;
        bollobas candidates copy its edge count.
    spec : TuneSpec
    base : Digraph, optional
        Required for model="sedge": the pre-evolution graph.  Candidates
        grow it and similarity is measured on the new nodes only.
    new_node_ids : array-like of int, optional
        For model="sedge": which reference nodes count as new.  Defaults
        to the ids past the base's node count, which is right when the
        reference itself was produced by growing the base; real version
        pairs should pass the actual new-node id list.  Candidate graphs
        always have their new nodes at the tail id range.

    Returns
    -------
    TuneResult

    Notes
    -----
    Ties are broken by the lexicographically smallest parameter tuple; the
    iteration order already is lexicographic, so a strict improvement test
    suffices.

    Grid points whose generation exhausts its proposal budget (e.g. the
    pure-beta bollobas corner, which can never place an edge from a
    single-node seed) score infinity instead of aborting the search.
    """
    if reference.node_count < 1:
        raise ValueError("reference graph is empty")
    objective = spec.resolved_objective()
    if spec.model == "bollobas" and objective == "minimax_msd":
        raise ValueError(
            "bollobas node counts cannot match the reference, so MSD is "
            "unavailable; use objective='ks_max'"
        )

    new_ids = None
    if spec.model == "sedge":
        if base is None:
            raise ValueError("model='sedge' needs the pre-evolution base graph")
        if new_node_ids is None:
            n_new = reference.node_count - base.node_count
            if n_new < 0:
                raise ValueError("reference must not be smaller than base")
            ref_ids = np.arange(base.node_count, reference.node_count)
        else:
            ref_ids = np.asarray(new_node_ids, dtype=np.int64)
            n_new = len(ref_ids)
        e_new = reference.edge_count - base.edge_count
        if e_new < 0:
            raise ValueError("reference must not have fewer edges than base")
        new_ids = np.arange(base.node_count, base.node_count + n_new)
        ref_in = restrict_to_new_nodes(reference, ref_ids, "in")
        ref_out = restrict_to_new_nodes(reference, ref_ids, "out")
    else:
        ref_in = degree_sequence(reference, "in")
        ref_out = degree_sequence(reference, "out")

    n_ref = reference.node_count
    e_ref = reference.edge_count

    best_point = None
    best_score = float("inf")
    best_samples = None
    table: dict = {}
    for point in _grid_points(spec, n_ref, e_ref):
        params = _params_for(spec.model, point)
        samples = np.empty(spec.replicates)
        failed = False
        for i in range(spec.replicates):
            rng = RandomStream(spec.base_seed + i)
            try:
                if spec.model == "sdg":
                    g = sdg(n_ref, e_ref, params, rng)
                elif spec.model == "sedge":
                    g = sedge(base, n_new, e_new, params, rng)
                else:
                    g = bollobas_generate(e_ref, params, rng)
            except GenerationError:
                failed = True
                break
            samples[i] = _score_one(g, objective, ref_in, ref_out, new_ids)
        score = float("inf") if failed else float(samples.mean())
        table[point] = score
        if score < best_score:
            best_score = score
            best_point = point
            best_samples = samples
    if best_point is None:
        raise GenerationError("every grid point exhausted its proposal budget")
    std = float(best_samples.std(ddof=1)) if spec.replicates > 1 else 0.0
    return TuneResult(
        model=spec.model,
        objective=objective,
        best_params=_params_for(spec.model, best_point),
        best_score=best_score,
        score_table=table,
        replicate_std=std,
    )


_AXIS_NAMES = {
    "sdg": ("e1", "e2"),
    "sedge": ("alpha", "beta", "e1", "e2"),
    "bollobas": ("alpha", "gamma", "delta"),
}


def write_score_table(result: TuneResult, path) -> None:
    """Dump a TuneResult's full score table as CSV (one row per grid point)."""
    names = _AXIS_NAMES[result.model]
    with open(path, "w", encoding="utf-8", newline="") as fh:
        w = csv.writer(fh)
        w.writerow([*names, "score"])
        for point, score in result.score_table.items():
            w.writerow([*(f"{v:g}" for v in point), f"{score:.6g}"])


def stability_report(reference: Digraph, params, replicates: int,
                     base_seed: int = 0, *,
                     base: Optional[Digraph] = None) -> dict:
    """Mean and standard deviation of each metric at fixed parameters.

    Generates ``replicates`` graphs (replicate i seeded ``base_seed + i``,
    as in :func:`tune`) and reports ``{"ks_in": (mean, std), ...}`` with
    sample (ddof=1) standard deviations.  The model follows the type of
    ``params``; for SedgeParams a ``base`` graph is required and metrics
    are restricted to the new nodes.  MSD entries are None where
    unavailable (bollobas).
    """
    if replicates < 2:
        raise ValueError("stability needs replicates >= 2")
    new_ids = None
    if isinstance(params, SedgeParams):
        if base is None:
            raise ValueError("SedgeParams needs the pre-evolution base graph")
        n_new = reference.node_count - base.node_count
        e_new = reference.edge_count - base.edge_count
        if n_new < 0 or e_new < 0:
            raise ValueError("reference must not be smaller than base")
        new_ids = np.arange(base.node_count, reference.node_count)
        ref_in = restrict_to_new_nodes(reference, new_ids, "in")
        ref_out = restrict_to_new_nodes(reference, new_ids, "out")
    else:
        ref_in = degree_sequence(reference, "in")
        ref_out = degree_sequence(reference, "out")

    rows = {"ks_in": [], "ks_out": [], "msd_in": [], "msd_out": []}
    for i in range(replicates):
        rng = RandomStream(base_seed + i)
        if isinstance(params, SdgParams):
            g = sdg(reference.node_count, reference.edge_count, params, rng)
        elif isinstance(params, SedgeParams):
            g = sedge(base, n_new, e_new, params, rng)
        elif isinstance(params, BollobasParams):
            g = bollobas_generate(reference.edge_count, params, rng)
        else:
            raise TypeError(f"unsupported params type {type(params).__name__}")
        if new_ids is None:
            cand_in = degree_sequence(g, "in")
            cand_out = degree_sequence(g, "out")
        else:
            cand_in = restrict_to_new_nodes(g, new_ids, "in")
            cand_out = restrict_to_new_nodes(g, new_ids, "out")
        rows["ks_in"].append(ks_statistic(ref_in, cand_in))
        rows["ks_out"].append(ks_statistic(ref_out, cand_out))
        rows["msd_in"].append(msd_sorted(ref_in, cand_in))
        rows["msd_out"].append(msd_sorted(ref_out, cand_out))

    out = {}
    for key, vals in rows.items():
        if any(v is None for v in vals):
            out[key] = None
        else:
            arr = np.asarray(vals, dtype=np.float64)
            out[key] = (float(arr.mean()), float(arr.std(ddof=1)))
    return out
