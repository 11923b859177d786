"""Random digraph generators: fixed-size, evolving, and a classical baseline.

All generators build simple directed graphs (no self-loops, no parallel
edges) by sampling one edge at a time.  Proposals that would violate
simplicity are resampled; a run aborts with :class:`GenerationError` once it
has spent 100 proposals per requested edge without placing them all.

Determinism: every random decision is a pure function of the
:class:`~sparsedigraph.rng.RandomStream` passed in.  Each generator consumes
a fixed number of uniform doubles per proposal (4 for :func:`sdg`, 5 for
:func:`sedge`, 3 for :func:`bollobas_generate`), in proposal order, so a
seed fully determines the output graph.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, asdict

import numpy as np
from numba import njit

from .graph import Digraph
from .rng import RandomStream

PREF_ESCAPE = 0.10
"""Probability that a degree-preferential pick is made uniformly instead.

Strictly degree-proportional selection can never choose a zero-degree
node, so parameter settings that disable the uniform branches (``e1`` or
``e2`` at 0) would freeze the reachable endpoint set after the first edge,
and edge counts beyond ``node_count - 1`` would be unreachable in a simple
graph.  A small constant escape probability keeps every node reachable
while preserving the rich-get-richer dynamics at every timescale: it is
equivalent to replacing the branch probabilities ``(e, 1 - e)`` by
``(e + (1 - e) * PREF_ESCAPE, (1 - e) * (1 - PREF_ESCAPE))``, which keeps
the predicted tail exponents within ~0.13 of their nominal values across
the parameter ranges this package targets, well inside the evaluation
tolerances used here.
"""

_BUDGET_PER_EDGE = 100

_NEED = 0
_DONE = 1
_EXHAUSTED = 2


class GenerationError(RuntimeError):
    """A generator ran out of its proposal budget before placing every edge."""


class RegimeWarning(UserWarning):
    """Parameters are outside the regime the degree-law analysis assumes."""


@dataclass(frozen=True)
class SdgParams:
    """Parameters of the fixed-size generator.

    ``e1`` is the probability of picking the edge source uniformly instead
    of preferentially by out-degree; ``e2`` the probability of picking the
    destination uniformly among in-degree-0 nodes instead of preferentially
    by in-degree.
    """

    e1: float
    e2: float

    def __post_init__(self):
        for name in ("e1", "e2"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"{name} must be in [0, 1], got {v}")

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class SedgeParams:
    """Parameters of the evolving generator.

    With probability ``alpha`` an edge runs from anywhere to a new node,
    with probability ``beta`` from a new node to anywhere, otherwise both
    endpoints are unconstrained.  Within the chosen candidate sets,
    endpoint sampling follows the same ``e1``/``e2`` rules as the
    fixed-size generator.
    """

    alpha: float
    beta: float
    e1: float
    e2: float

    def __post_init__(self):
        for name in ("alpha", "beta", "e1", "e2"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"{name} must be in [0, 1], got {v}")
        if self.alpha + self.beta > 1.0 + 1e-12:
            raise ValueError("alpha + beta must not exceed 1")

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class BollobasParams:
    """Parameters of the directed scale-free baseline model.

    ``alpha``, ``beta`` and ``gamma`` are the step-type probabilities
    (new-source edge, internal edge, new-target edge) and must sum to 1.
    ``delta_in`` / ``delta_out`` are the additive degree offsets of the
    preferential choices.
    """

    alpha: float
    beta: float
    gamma: float
    delta_in: float
    delta_out: float

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"{name} must be in [0, 1], got {v}")
        if abs(self.alpha + self.beta + self.gamma - 1.0) > 1e-9:
            raise ValueError("alpha + beta + gamma must sum to 1")
        if self.delta_in < 0 or self.delta_out < 0:
            raise ValueError("delta_in and delta_out must be >= 0")

    def to_dict(self) -> dict:
        return asdict(self)


def sdg_default_params(n_nodes: int, n_edges: int) -> SdgParams:
    """Default parameters for a target size: ``e1 = 0.45``, ``e2 = N/E - 0.05``.

    ``e2`` is clamped into ``[0, 1]``.  Requires ``n_nodes, n_edges >= 1``.
    """
    if n_nodes < 1 or n_edges < 1:
        raise ValueError("defaults need n_nodes >= 1 and n_edges >= 1")
    e2 = min(1.0, max(0.0, n_nodes / n_edges - 0.05))
    return SdgParams(e1=0.45, e2=e2)


def sedge_default_params(n_nodes: int, n_edges: int) -> SedgeParams:
    """Default evolution parameters for a target size.

    ``alpha = 0.5``, ``beta = 0.4``; ``e1``/``e2`` as in
    :func:`sdg_default_params` computed from the grown graph's totals.
    """
    base = sdg_default_params(n_nodes, n_edges)
    return SedgeParams(alpha=0.5, beta=0.4, e1=base.e1, e2=base.e2)


# ---------------------------------------------------------------------------
# Sampling kernels.
#
# Edge membership is tracked in an open-addressing hash table of int64 keys
# (src * stride + dst), empty slots -1.  Preferential selection over a
# candidate set uses the endpoint-list trick: every placed edge appends its
# endpoints to per-set lists, so a uniform pick from a list is a
# degree-proportional pick over nodes.  The escape mixture folds into a
# single uniform draw: stretch the draw over total / (1 - escape); values
# past the endpoint-list total fall through to a uniform node pick.
# ---------------------------------------------------------------------------


@njit(cache=True)
def _table_seen(table, mask, key):
    # True if key was present; inserts it otherwise.
    h = (key * 0x9E3779B97F4A7C15) & 0x7FFFFFFFFFFFFFFF
    i = h & mask
    while True:
        v = table[i]
        if v == -1:
            table[i] = key
            return False
        if v == key:
            return True
        i = (i + 1) & mask


@njit(cache=True)
def _table_fill(table, mask, keys):
    for j in range(keys.shape[0]):
        _table_seen(table, mask, keys[j])


@njit(cache=True)
def _pick_pref(x, total, ends, n_cand, esc):
    # Escape-mixture preferential pick from one uniform draw x.  Returns a
    # node id from `ends` (degree-proportional part) or, encoded as
    # -1 - index, a uniform index in [0, n_cand) for the caller to offset.
    if total <= 0:
        return -1 - int(x * n_cand)
    stretched = x * total / (1.0 - esc)
    if stretched < total:
        return ends[int(stretched)]
    idx = int((stretched - total) * (1.0 - esc) / (total * esc) * n_cand)
    if idx >= n_cand:
        idx = n_cand - 1
    return -1 - idx


@njit(cache=True)
def _sdg_kernel(n_nodes, n_edges, e1, e2, esc, floats,
                out_ends, in_ends, zero_nodes, zero_pos, table, mask, counts):
    t = counts[0]
    zc = counts[1]
    bud = counts[2]
    pos = 0
    nf = floats.shape[0]
    n = n_nodes
    while t < n_edges:
        if pos + 4 > nf:
            counts[0] = t; counts[1] = zc; counts[2] = bud
            return _NEED
        if bud <= 0:
            counts[0] = t; counts[1] = zc; counts[2] = bud
            return _EXHAUSTED
        bud -= 1
        b1 = floats[pos]
        x1 = floats[pos + 1]
        b2 = floats[pos + 2]
        x2 = floats[pos + 3]
        pos += 4

        if b1 < e1:
            src = int(x1 * n)
        else:
            r = _pick_pref(x1, t, out_ends, n, esc)
            src = r if r >= 0 else -1 - r

        if b2 < e2 and zc > 0:
            dst = zero_nodes[int(x2 * zc)]
        else:
            r = _pick_pref(x2, t, in_ends, n, esc)
            dst = r if r >= 0 else -1 - r

        if src == dst:
            continue
        if _table_seen(table, mask, src * n + dst):
            continue
        out_ends[t] = src
        in_ends[t] = dst
        t += 1
        p = zero_pos[dst]
        if p >= 0:
            zc -= 1
            last = zero_nodes[zc]
            zero_nodes[p] = last
            zero_pos[last] = p
            zero_pos[dst] = -1
    counts[0] = t; counts[1] = zc; counts[2] = bud
    return _DONE


@njit(cache=True)
def _sedge_kernel(n_total, n_base, n_new, e_base, n_new_edges,
                  alpha, beta, e1, e2, esc, floats,
                  out_all, in_all, out_new, in_new,
                  zero_all, zpos_all, zero_new, zpos_new,
                  table, mask, counts):
    t = counts[0]
    zca = counts[1]
    zcn = counts[2]
    bud = counts[3]
    on = counts[4]
    inn = counts[5]
    pos = 0
    nf = floats.shape[0]
    while t < n_new_edges:
        if pos + 5 > nf:
            counts[0] = t; counts[1] = zca; counts[2] = zcn
            counts[3] = bud; counts[4] = on; counts[5] = inn
            return _NEED
        if bud <= 0:
            counts[0] = t; counts[1] = zca; counts[2] = zcn
            counts[3] = bud; counts[4] = on; counts[5] = inn
            return _EXHAUSTED
        bud -= 1
        b0 = floats[pos]
        bs = floats[pos + 1]
        xs = floats[pos + 2]
        bd = floats[pos + 3]
        xd = floats[pos + 4]
        pos += 5

        if b0 < alpha:
            src_new = False
            dst_new = True
        elif b0 < alpha + beta:
            src_new = True
            dst_new = False
        else:
            src_new = False
            dst_new = False

        if src_new:
            cn = n_new
            base_id = n_base
            t_out = on
            ends = out_new
        else:
            cn = n_total
            base_id = 0
            t_out = e_base + t
            ends = out_all
        if bs < e1:
            src = base_id + int(xs * cn)
        else:
            r = _pick_pref(xs, t_out, ends, cn, esc)
            src = r if r >= 0 else base_id + (-1 - r)

        if dst_new:
            cn = n_new
            base_id = n_base
            t_in = inn
            ends = in_new
            zl = zero_new
            zc = zcn
        else:
            cn = n_total
            base_id = 0
            t_in = e_base + t
            ends = in_all
            zl = zero_all
            zc = zca
        if bd < e2 and zc > 0:
            dst = zl[int(xd * zc)]
        else:
            r = _pick_pref(xd, t_in, ends, cn, esc)
            dst = r if r >= 0 else base_id + (-1 - r)

        if src == dst:
            continue
        if _table_seen(table, mask, src * n_total + dst):
            continue
        out_all[e_base + t] = src
        in_all[e_base + t] = dst
        if src >= n_base:
            out_new[on] = src
            on += 1
        if dst >= n_base:
            in_new[inn] = dst
            inn += 1
        t += 1
        p = zpos_all[dst]
        if p >= 0:
            zca -= 1
            last = zero_all[zca]
            zero_all[p] = last
            zpos_all[last] = p
            zpos_all[dst] = -1
        if dst >= n_base:
            p = zpos_new[dst - n_base]
            if p >= 0:
                zcn -= 1
                last = zero_new[zcn]
                zero_new[p] = last
                zpos_new[last - n_base] = p
                zpos_new[dst - n_base] = -1
    counts[0] = t; counts[1] = zca; counts[2] = zcn
    counts[3] = bud; counts[4] = on; counts[5] = inn
    return _DONE


@njit(cache=True)
def _bollobas_kernel(stride, target_edges, alpha, beta, din, dout, floats,
                     out_ends, in_ends, table, mask, counts):
    e = counts[0]
    m = counts[1]
    bud = counts[2]
    pos = 0
    nf = floats.shape[0]
    while e < target_edges:
        if pos + 3 > nf:
            counts[0] = e; counts[1] = m; counts[2] = bud
            return _NEED
        if bud <= 0:
            counts[0] = e; counts[1] = m; counts[2] = bud
            return _EXHAUSTED
        bud -= 1
        b = floats[pos]
        xs = floats[pos + 1]
        xd = floats[pos + 2]
        pos += 3

        if b < alpha:
            # New source node; target by in-degree + delta_in among existing.
            tot = e + din * m
            if tot <= 0.0:
                dst = int(xd * m)
            else:
                u = xd * tot
                if u < e:
                    dst = in_ends[int(u)]
                else:
                    dst = int((u - e) / din)
                    if dst >= m:
                        dst = m - 1
            src = m
            m += 1
        elif b < alpha + beta:
            # Edge between existing nodes.
            tot = e + dout * m
            if tot <= 0.0:
                src = int(xs * m)
            else:
                u = xs * tot
                if u < e:
                    src = out_ends[int(u)]
                else:
                    src = int((u - e) / dout)
                    if src >= m:
                        src = m - 1
            tot = e + din * m
            if tot <= 0.0:
                dst = int(xd * m)
            else:
                u = xd * tot
                if u < e:
                    dst = in_ends[int(u)]
                else:
                    dst = int((u - e) / din)
                    if dst >= m:
                        dst = m - 1
            if src == dst:
                continue
            if _table_seen(table, mask, src * stride + dst):
                continue
            out_ends[e] = src
            in_ends[e] = dst
            e += 1
            continue
        else:
            # New target node; source by out-degree + delta_out among existing.
            tot = e + dout * m
            if tot <= 0.0:
                src = int(xs * m)
            else:
                u = xs * tot
                if u < e:
                    src = out_ends[int(u)]
                else:
                    src = int((u - e) / dout)
                    if src >= m:
                        src = m - 1
            dst = m
            m += 1
        # Steps that added a node cannot collide: one endpoint is brand new.
        _table_seen(table, mask, src * stride + dst)
        out_ends[e] = src
        in_ends[e] = dst
        e += 1
    counts[0] = e; counts[1] = m; counts[2] = bud
    return _DONE


def _table_for(n_entries: int) -> tuple[np.ndarray, int]:
    size = 16
    while size < 3 * max(1, n_entries):
        size <<= 1
    table = np.full(size, -1, dtype=np.int64)
    return table, size - 1


def _block_size(remaining: int, bud: int, first: bool) -> int:
    if first:
        want = remaining + (remaining >> 4) + 64
    else:
        want = max(1024, 2 * remaining)
    return max(1, min(bud, want))


def sdg(n_nodes: int, n_edges: int, params: SdgParams, rng: RandomStream,
        *, escape: float = PREF_ESCAPE) -> Digraph:
    """Generate a simple digraph with exactly ``n_nodes`` and ``n_edges``.

    Each edge picks its source uniformly with probability ``e1`` and by
    out-degree-preferential attachment otherwise; its destination uniformly
    among in-degree-0 nodes with probability ``e2`` (falling back to
    in-degree-preferential once none remain) and preferentially otherwise.
    Self-loop and duplicate proposals are resampled.

    Parameters
    ----------
    n_nodes : int
        Node count, >= 2.
    n_edges : int
        Edge count, within simple-graph capacity ``n_nodes * (n_nodes - 1)``.
    params : SdgParams
    rng : RandomStream
    escape : float, optional
        Probability that a preferential pick is uniform instead, see
        :data:`PREF_ESCAPE`.  0 gives strictly degree-proportional picks.

    Returns
    -------
    Digraph

    Warns
    -----
    RegimeWarning
        When ``n_edges > 10 * n_nodes`` (outside the sparse regime) or
        ``e2 >= n_nodes / n_edges`` (the in-degree law stops holding).

    Raises
    ------
    GenerationError
        When the proposal budget (100 per edge) runs out.
    """
    n_nodes = int(n_nodes)
    n_edges = int(n_edges)
    if n_nodes < 2:
        raise ValueError("sdg needs n_nodes >= 2")
    if n_edges < 0:
        raise ValueError("n_edges must be >= 0")
    if n_edges > n_nodes * (n_nodes - 1):
        raise ValueError(
            f"{n_edges} edges exceed simple-graph capacity of {n_nodes} nodes"
        )
    if not 0.0 <= escape < 1.0:
        raise ValueError("escape must be in [0, 1)")
    if n_edges > 10 * n_nodes:
        warnings.warn(
            f"n_edges = {n_edges} is more than 10 * n_nodes; degree laws are "
            "calibrated for sparser graphs",
            RegimeWarning,
            stacklevel=2,
        )
    if n_edges > 0 and params.e2 >= n_nodes / n_edges:
        warnings.warn(
            f"e2 = {params.e2} is not below n_nodes/n_edges = "
            f"{n_nodes / n_edges:.6g}; the in-degree law assumes it is",
            RegimeWarning,
            stacklevel=2,
        )

    out_ends = np.empty(n_edges, dtype=np.int64)
    in_ends = np.empty(n_edges, dtype=np.int64)
    zero_nodes = np.arange(n_nodes, dtype=np.int64)
    zero_pos = np.arange(n_nodes, dtype=np.int64)
    table, mask = _table_for(n_edges)
    counts = np.array([0, n_nodes, _BUDGET_PER_EDGE * n_edges], dtype=np.int64)

    first = True
    while True:
        remaining = n_edges - int(counts[0])
        if remaining <= 0:
            break
        if counts[2] <= 0:
            raise GenerationError(
                f"proposal budget exhausted at edge {int(counts[0]) + 1} "
                f"of {n_edges}"
            )
        block = rng.float_block(4 * _block_size(remaining, int(counts[2]), first))
        status = _sdg_kernel(
            n_nodes, n_edges, params.e1, params.e2, escape, block,
            out_ends, in_ends, zero_nodes, zero_pos, table, mask, counts,
        )
        first = False
        if status == _DONE:
            break
        if status == _EXHAUSTED:
            raise GenerationError(
                f"proposal budget exhausted at edge {int(counts[0]) + 1} "
                f"of {n_edges}"
            )
    return Digraph._from_arrays(n_nodes, out_ends, in_ends)


def sedge(g_cur: Digraph, n_new_nodes: int, n_new_edges: int,
          params: SedgeParams, rng: RandomStream,
          *, escape: float = PREF_ESCAPE) -> Digraph:
    """Grow ``g_cur`` by ``n_new_nodes`` nodes and ``n_new_edges`` edges.

    New nodes get ids ``g_cur.node_count ..``.  For each added edge, with
    probability ``alpha`` the source is sampled from all nodes and the
    destination from the new nodes; with probability ``beta`` the source
    from the new nodes and the destination from all nodes; otherwise both
    from all nodes.  Within a candidate set, sampling follows the same
    ``e1``/``e2`` rules as :func:`sdg`, with degrees counted in the whole
    growing graph.  The result contains ``g_cur`` as an exact subgraph.

    When ``n_new_nodes`` is 0 the new-node branches are empty, so their
    probability mass folds into the unconstrained branch.

    Raises
    ------
    GenerationError
        When the proposal budget (100 per new edge) runs out.
    """
    n_new_nodes = int(n_new_nodes)
    n_new_edges = int(n_new_edges)
    if n_new_nodes < 0 or n_new_edges < 0:
        raise ValueError("n_new_nodes and n_new_edges must be >= 0")
    n_base = g_cur.node_count
    e_base = g_cur.edge_count
    n_total = n_base + n_new_nodes
    e_total = e_base + n_new_edges
    if n_total < 2 and n_new_edges > 0:
        raise ValueError("cannot add edges to a graph with fewer than 2 nodes")
    if e_total > n_total * (n_total - 1):
        raise ValueError(
            f"{e_total} edges exceed simple-graph capacity of {n_total} nodes"
        )
    if not 0.0 <= escape < 1.0:
        raise ValueError("escape must be in [0, 1)")

    alpha = params.alpha
    beta = params.beta
    if n_new_nodes == 0:
        # No new-node candidates; fold that probability mass into the
        # unconstrained branch.
        alpha = 0.0
        beta = 0.0

    base = g_cur._canonical()
    out_all = np.empty(e_total, dtype=np.int64)
    in_all = np.empty(e_total, dtype=np.int64)
    out_all[:e_base] = base[:, 0]
    in_all[:e_base] = base[:, 1]
    out_new = np.empty(n_new_edges, dtype=np.int64)
    in_new = np.empty(n_new_edges, dtype=np.int64)

    indeg = np.zeros(n_total, dtype=np.int64)
    indeg[:n_base] = g_cur.in_degrees()
    zca = int((indeg == 0).sum())
    zero_all = np.empty(n_total, dtype=np.int64)
    zero_all[:zca] = np.flatnonzero(indeg == 0)
    zpos_all = np.full(n_total, -1, dtype=np.int64)
    zpos_all[zero_all[:zca]] = np.arange(zca)
    zero_new = np.arange(n_base, n_total, dtype=np.int64)
    zpos_new = np.arange(n_new_nodes, dtype=np.int64)

    table, mask = _table_for(e_total)
    if e_base:
        _table_fill(table, mask, base[:, 0] * n_total + base[:, 1])

    counts = np.array(
        [0, zca, n_new_nodes, _BUDGET_PER_EDGE * n_new_edges, 0, 0],
        dtype=np.int64,
    )
    first = True
    while True:
        remaining = n_new_edges - int(counts[0])
        if remaining <= 0:
            break
        if counts[3] <= 0:
            raise GenerationError(
                f"proposal budget exhausted at new edge {int(counts[0]) + 1} "
                f"of {n_new_edges}"
            )
        block = rng.float_block(5 * _block_size(remaining, int(counts[3]), first))
        status = _sedge_kernel(
            n_total, n_base, n_new_nodes, e_base, n_new_edges,
            alpha, beta, params.e1, params.e2, escape, block,
            out_all, in_all, out_new, in_new,
            zero_all, zpos_all, zero_new, zpos_new, table, mask, counts,
        )
        first = False
        if status == _DONE:
            break
        if status == _EXHAUSTED:
            raise GenerationError(
                f"proposal budget exhausted at new edge {int(counts[0]) + 1} "
                f"of {n_new_edges}"
            )
    return Digraph._from_arrays(n_total, out_all, in_all)


def bollobas_generate(target_edges: int, params: BollobasParams,
                      rng: RandomStream, seed_graph: Digraph | None = None) -> Digraph:
    """Grow a directed scale-free graph until it has ``target_edges`` edges.

    Classical three-branch growth: with probability ``alpha`` a new node
    with an edge to an existing node chosen by in-degree + ``delta_in``;
    with probability ``beta`` an edge between existing nodes (source by
    out-degree + ``delta_out``, target by in-degree + ``delta_in``); with
    probability ``gamma`` a new node receiving an edge from an existing
    node chosen by out-degree + ``delta_out``.  The node count is emergent.
    Proposals that would create self-loops or duplicates are resampled.

    ``seed_graph`` defaults to a single isolated node.  When the zero-delta
    weights of an edgeless seed give a zero total, the choice falls back to
    uniform.

    Raises
    ------
    GenerationError
        When the proposal budget (100 per added edge) runs out, e.g. for
        pure-``beta`` parameters whose reachable edge set is smaller than
        ``target_edges``.
    """
    target_edges = int(target_edges)
    if target_edges < 1:
        raise ValueError("target_edges must be >= 1")
    if seed_graph is None:
        seed_graph = Digraph(1)
    n_seed = seed_graph.node_count
    if n_seed < 1:
        raise ValueError("seed graph needs at least one node")
    e_seed = seed_graph.edge_count
    to_add = max(0, target_edges - e_seed)
    stride = n_seed + to_add

    out_ends = np.empty(max(target_edges, e_seed), dtype=np.int64)
    in_ends = np.empty(max(target_edges, e_seed), dtype=np.int64)
    seed_arr = seed_graph._canonical()
    out_ends[:e_seed] = seed_arr[:, 0]
    in_ends[:e_seed] = seed_arr[:, 1]
    table, mask = _table_for(max(target_edges, e_seed))
    if e_seed:
        _table_fill(table, mask, seed_arr[:, 0] * stride + seed_arr[:, 1])

    counts = np.array([e_seed, n_seed, _BUDGET_PER_EDGE * to_add], dtype=np.int64)
    first = True
    while True:
        remaining = target_edges - int(counts[0])
        if remaining <= 0:
            break
        if counts[2] <= 0:
            raise GenerationError(
                f"proposal budget exhausted at edge {int(counts[0]) + 1} "
                f"of {target_edges}"
            )
        block = rng.float_block(3 * _block_size(remaining, int(counts[2]), first))
        status = _bollobas_kernel(
            stride, target_edges, params.alpha, params.beta,
            params.delta_in, params.delta_out, block,
            out_ends, in_ends, table, mask, counts,
        )
        first = False
        if status == _DONE:
            break
        if status == _EXHAUSTED:
            raise GenerationError(
                f"proposal budget exhausted at edge {int(counts[0]) + 1} "
                f"of {target_edges}"
            )
    n_final = int(counts[1])
    e_final = int(counts[0])
    return Digraph._from_arrays(n_final, out_ends[:e_final].copy(),
                                in_ends[:e_final].copy())


def sample_node(candidates, mode: str, g: Digraph, rng: RandomStream) -> int:
    """Sample one node id from ``candidates`` under a selection mode.

    Modes
    -----
    ``"uniform"``
        Uniform over the candidates.
    ``"pref_in"`` / ``"pref_out"``
        Candidate ``i`` with probability ``degree(i) / sum(degree)`` using
        in- resp. out-degrees in ``g``; uniform when the degree sum is 0.
    ``"zero_in"``
        Uniform over candidates of in-degree 0, falling back to
        ``"pref_in"`` when there are none.

    Exactly one uniform double is consumed per call.
    """
    ids = np.asarray(list(candidates), dtype=np.int64)
    if ids.size == 0:
        raise ValueError("candidates must be nonempty")
    if ids.min() < 0 or ids.max() >= g.node_count:
        raise ValueError("candidate id out of range")
    if mode == "uniform":
        return int(ids[int(rng.next_float() * ids.size)])
    if mode in ("pref_in", "pref_out"):
        degs = g.in_degrees() if mode == "pref_in" else g.out_degrees()
        w = degs[ids].astype(np.float64)
        tot = w.sum()
        if tot <= 0.0:
            return int(ids[int(rng.next_float() * ids.size)])
        cum = np.cumsum(w)
        u = rng.next_float() * tot
        idx = int(np.searchsorted(cum, u, side="right"))
        if idx >= ids.size:
            idx = ids.size - 1
        return int(ids[idx])
    if mode == "zero_in":
        zeros = ids[g.in_degrees()[ids] == 0]
        if zeros.size:
            return int(zeros[int(rng.next_float() * zeros.size)])
        return sample_node(ids, "pref_in", g, rng)
    raise ValueError(f"unknown sampling mode {mode!r}")
