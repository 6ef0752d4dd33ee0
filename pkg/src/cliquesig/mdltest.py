"""Codelength comparisons turned into hypothesis tests.

A gain of k bits over the null family's lower bound has probability at
most 2^-k under that null, so gain >= -log2(alpha) rejects at level
alpha. Because the comparison uses the lower bound, one rejection holds
simultaneously for every two-part completion of the family, whatever
integer code finishes it.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import log2
from typing import Iterable, Sequence

from .cliquecode import clique_codelength
from .graph import Graph, VertexSubset, vertex_subset
from .models import NullModel


def threshold_bits(alpha: float) -> float:
    """Compression gain required to reject at significance level alpha."""
    if not 0.0 < alpha <= 1.0:
        raise ValueError(f"alpha must lie in (0, 1], got {alpha}")
    return -log2(alpha)


def significance_bound(gain_bits: float) -> float:
    """Upper bound on the null probability of a gain at least this large."""
    if gain_bits <= 0.0:
        return 1.0
    return 2.0 ** -gain_bits


@dataclass(frozen=True)
class TestResult:
    """Outcome of one clique significance test."""

    null_bound_bits: float
    alt_bits: float
    gain_bits: float
    threshold_bits: float
    reject: bool
    significance_bound: float
    clique: VertexSubset
    model: NullModel

    def to_dict(self) -> dict:
        return {
            "null_bound_bits": self.null_bound_bits,
            "alt_bits": self.alt_bits,
            "gain_bits": self.gain_bits,
            "threshold_bits": self.threshold_bits,
            "reject": self.reject,
            "significance_bound": self.significance_bound,
            "clique": list(self.clique),
            "model": self.model.describe(),
        }


def test_clique(
    graph: Graph, members: Iterable[int], model: NullModel, alpha: float
) -> TestResult:
    """Test one clique against the null family's lower bound."""
    subset = vertex_subset(members)
    needed = threshold_bits(alpha)
    alt = clique_codelength(graph, subset, model).total
    null_bound = model.bound_codelength(graph)
    gain = null_bound - alt
    return TestResult(
        null_bound_bits=null_bound,
        alt_bits=alt,
        gain_bits=gain,
        threshold_bits=needed,
        reject=gain >= needed,
        significance_bound=significance_bound(gain),
        clique=subset,
        model=model,
    )


def test_best_clique(
    graph: Graph,
    candidates: Sequence[Iterable[int]],
    model: NullModel,
    alpha: float,
) -> TestResult:
    """One test over many candidate cliques: score the best compressor.

    Checking many candidates and then using only the winner is still a
    single fixed code (the one-codeword-per-graph version of the clique
    code is at least as short), so no multiple-testing correction is
    needed. Ties prefer the smaller subset, then lexicographic order,
    independent of candidate order.
    """
    subsets = [vertex_subset(c) for c in candidates]
    if not subsets:
        raise ValueError("need at least one candidate clique")
    results = [test_clique(graph, subset, model, alpha) for subset in subsets]
    return min(results, key=lambda r: (-r.gain_bits, len(r.clique), r.clique))
