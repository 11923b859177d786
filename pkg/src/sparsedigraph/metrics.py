"""Similarity metrics, adjacency spectra, and degree-law instruments.

KS compares normalized cumulative degree distributions and works across
graphs of different sizes; MSD compares sorted degree sequences entrywise
and is only defined when node counts match.  The power-law fit and the
closed-form exponent predictions serve as the validation instruments for
the generators' degree laws.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .graph import Digraph, DegreeSequence, degree_sequence
from .generators import SdgParams


@dataclass(frozen=True)
class DegreeCdf:
    """Normalized cumulative degree distribution.

    ``support`` holds the sorted distinct degree values, ``cumulative`` the
    fraction of nodes with degree <= the matching support entry; the last
    entry is 1.
    """

    support: np.ndarray
    cumulative: np.ndarray

    def at(self, k) -> np.ndarray:
        """CDF evaluated at the value(s) ``k`` (step function)."""
        idx = np.searchsorted(self.support, np.asarray(k), side="right")
        padded = np.concatenate([[0.0], self.cumulative])
        return padded[idx]


def degree_cdf(seq: DegreeSequence) -> DegreeCdf:
    values = np.asarray(seq.values)
    if values.size == 0:
        raise ValueError("empty degree sequence has no distribution")
    support, counts = np.unique(values, return_counts=True)
    cum = np.cumsum(counts) / values.size
    return DegreeCdf(support=support, cumulative=cum)


@dataclass(frozen=True)
class MetricsReport:
    """KS and MSD values for one reference/candidate pair.

    ``msd_in`` / ``msd_out`` are None when the node counts differ (sorted
    sequences cannot be aligned).  ``spectral_summary`` is filled only when
    spectra were requested.
    """

    ks_in: float
    ks_out: float
    msd_in: Optional[float]
    msd_out: Optional[float]
    spectral_summary: Optional[float] = None

    def to_dict(self) -> dict:
        d = {
            "ks_in": self.ks_in,
            "ks_out": self.ks_out,
            "msd_in": self.msd_in,
            "msd_out": self.msd_out,
        }
        if self.spectral_summary is not None:
            d["spectral_summary"] = self.spectral_summary
        return d


@dataclass(frozen=True)
class TheoreticalExponents:
    """Closed-form degree-law predictions for one parameter setting.

    in_exponent = (1+c2)/c2 and out_exponent = (1+c1)/c1 with c1 = 1-e1,
    c2 = 1-e2; the out-degree law holds for degrees shifted by
    out_offset = ((1-c1)/c1) * (E/N).
    """

    in_exponent: float
    out_exponent: float
    out_offset: float

    def to_dict(self) -> dict:
        return {
            "in_exponent": self.in_exponent,
            "out_exponent": self.out_exponent,
            "out_offset": self.out_offset,
        }


def ks_statistic(ref_seq: DegreeSequence, gen_seq: DegreeSequence) -> float:
    """Kolmogorov-Smirnov distance between two degree distributions.

    Maximum absolute gap between the normalized CDFs, evaluated over the
    union of both supports plus degree 0 (CDFs are step functions, so that
    covers every possible gap location).  Symmetric; in [0, 1].
    """
    if ref_seq.kind != gen_seq.kind:
        raise ValueError(
            f"cannot compare {ref_seq.kind!r} degrees with {gen_seq.kind!r}"
        )
    a = degree_cdf(ref_seq)
    b = degree_cdf(gen_seq)
    grid = np.union1d(np.concatenate([a.support, [0]]), b.support)
    gap = np.abs(a.at(grid) - b.at(grid))
    return float(gap.max())


def msd_sorted(ref_seq: DegreeSequence, gen_seq: DegreeSequence):
    """Mean squared distance of ascending-sorted degree sequences.

    Returns None when the lengths differ; the metric only makes sense for
    same-size graphs.  Symmetric, and invariant under any permutation of
    either input.
    """
    if ref_seq.kind != gen_seq.kind:
        raise ValueError(
            f"cannot compare {ref_seq.kind!r} degrees with {gen_seq.kind!r}"
        )
    a = np.asarray(ref_seq.values)
    b = np.asarray(gen_seq.values)
    if a.size != b.size:
        return None
    if a.size == 0:
        raise ValueError("empty degree sequences")
    d = np.sort(a) - np.sort(b)
    return float(np.mean(d.astype(np.float64) ** 2))


def restrict_to_new_nodes(g: Digraph, new_node_ids, kind: str) -> DegreeSequence:
    """Degree sequence over a listed subset of nodes.

    Degrees are counted in the full graph, so edges between listed and
    unlisted nodes contribute.  Order follows ``new_node_ids``; duplicate
    or out-of-range ids are rejected.
    """
    ids = np.asarray(list(new_node_ids), dtype=np.int64)
    if ids.size:
        if ids.min() < 0 or ids.max() >= g.node_count:
            raise ValueError("node id outside graph")
        if np.unique(ids).size != ids.size:
            raise ValueError("duplicate node ids")
    full = degree_sequence(g, kind)
    return DegreeSequence(values=np.asarray(full.values)[ids], kind=kind)


def compare(reference: Digraph, candidate: Digraph,
            spectral: bool = False) -> MetricsReport:
    """KS and MSD between two graphs' in- and out-degree sequences.

    MSD entries are None when node counts differ.  With ``spectral=True``
    the report also carries the mean absolute gap between the two
    adjacency spectra (see :func:`spectral_gap`); spectra are O(n^3), so
    this is opt-in.
    """
    ks_in = ks_statistic(degree_sequence(reference, "in"),
                         degree_sequence(candidate, "in"))
    ks_out = ks_statistic(degree_sequence(reference, "out"),
                          degree_sequence(candidate, "out"))
    msd_in = msd_sorted(degree_sequence(reference, "in"),
                        degree_sequence(candidate, "in"))
    msd_out = msd_sorted(degree_sequence(reference, "out"),
                         degree_sequence(candidate, "out"))
    summary = None
    if spectral:
        summary = spectral_gap(spectrum(reference), spectrum(candidate))
    return MetricsReport(ks_in=ks_in, ks_out=ks_out,
                         msd_in=msd_in, msd_out=msd_out,
                         spectral_summary=summary)


def adjacency_matrix(g: Digraph) -> np.ndarray:
    """Dense 0/1 adjacency matrix, row = source, column = destination."""
    m = np.zeros((g.node_count, g.node_count), dtype=np.float64)
    if g.edge_count:
        arr = g.edge_array()
        m[arr[:, 0], arr[:, 1]] = 1.0
    return m


def spectrum(g: Digraph) -> np.ndarray:
    """Adjacency eigenvalue magnitudes, sorted descending.

    Length equals the node count.  The eigenvalues themselves sum to the
    trace, which is 0 for self-loop-free graphs; magnitudes are returned
    because directed spectra are complex.
    """
    if g.node_count < 1:
        raise ValueError("spectrum needs at least one node")
    eig = np.linalg.eigvals(adjacency_matrix(g))
    mags = np.abs(eig)
    mags[::-1].sort()
    return mags


def spectral_gap(mags_a, mags_b) -> float:
    """Mean absolute gap between two descending magnitude lists.

    The shorter list is zero-padded so positional alignment is defined for
    graphs of different sizes.  A report-level summary; not a metric used
    for tuning.
    """
    a = np.sort(np.asarray(mags_a, dtype=np.float64))[::-1]
    b = np.sort(np.asarray(mags_b, dtype=np.float64))[::-1]
    n = max(a.size, b.size)
    if n == 0:
        raise ValueError("empty spectra")
    pa = np.zeros(n)
    pa[: a.size] = a
    pb = np.zeros(n)
    pb[: b.size] = b
    return float(np.mean(np.abs(pa - pb)))


def fit_powerlaw_exponent(seq, k_min: int = 5) -> float:
    """Discrete Hill-type maximum-likelihood tail exponent.

    Fits entries >= ``k_min`` with the estimator
    ``1 + n / sum(ln(k_i / (k_min - 0.5)))``; the -0.5 is the usual
    continuity correction for integer data.  Accepts a DegreeSequence or a
    plain numeric array (e.g. degrees shifted by a theoretical offset).

    Raises
    ------
    ValueError
        When fewer than 50 entries reach ``k_min`` (the estimate would be
        noise), or when every tail entry equals ``k_min`` (degenerate
        input; the estimator diverges as the tail carries no slope
        information).
    """
    if k_min < 1:
        raise ValueError("k_min must be >= 1")
    values = seq.values if isinstance(seq, DegreeSequence) else seq
    values = np.asarray(values, dtype=np.float64)
    tail = values[values >= k_min]
    if tail.size < 50:
        raise ValueError(
            f"insufficient tail: {tail.size} entries >= {k_min}, need 50"
        )
    if np.all(tail == tail[0]):
        raise ValueError(
            f"degenerate tail: all {tail.size} entries equal {tail[0]:g}"
        )
    return float(1.0 + tail.size / np.log(tail / (k_min - 0.5)).sum())


def theoretical_exponents(params: SdgParams, n_nodes: int,
                          n_edges: int) -> TheoreticalExponents:
    """Closed-form tail exponents and out-law offset for one setting.

    Requires ``e1 < 1`` and ``e2 < 1``; at 1 the preferential fractions
    vanish and the exponents are undefined.
    """
    if params.e1 >= 1.0 or params.e2 >= 1.0:
        raise ValueError("exponents undefined at e1 == 1 or e2 == 1")
    if n_nodes < 1:
        raise ValueError("n_nodes must be >= 1")
    c1 = 1.0 - params.e1
    c2 = 1.0 - params.e2
    return TheoreticalExponents(
        in_exponent=(1.0 + c2) / c2,
        out_exponent=(1.0 + c1) / c1,
        out_offset=(params.e1 / c1) * (n_edges / n_nodes),
    )
