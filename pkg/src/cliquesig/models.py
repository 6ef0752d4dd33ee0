"""Null models on labeled simple graphs: codelengths, two-part completions,
and exact seeded samplers.

Each family scores a block of candidate pairs with a known number of
present edges through pair_block_bits. The same scoring serves double
duty: applied to the whole graph it is the family's parameter-free lower
bound (discrete parameters given for free), and applied to a partial
block it prices the remainder inside pattern codes, which is exactly the
reuse that keeps pattern tests honest.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import log2

from .graph import Graph, all_pairs, pair_count
from .intcodes import IntegerCode, log2_binomial

_MASK64 = (1 << 64) - 1


def derive_seed(base: int, index: int) -> int:
    """Child seed as a pure function of (base, index): splitmix64 finalizer."""
    x = (base + 0x9E3779B97F4A7C15 * (index + 1)) & _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return (x ^ (x >> 31)) & _MASK64


class NullModel:
    """Base class for the shipped null-model families."""

    name: str = "null"

    def pair_block_bits(self, pairs: int, edges: int) -> float:
        """Bits to state which `edges` of `pairs` candidate slots hold an edge."""
        raise NotImplementedError

    def bound_codelength(self, graph: Graph) -> float:
        """Parameter-free lower bound on every two-part completion of this family.

        Data bits only: the node count (and for the fixed-edge-count family
        the edge count) come for free, which corresponds to scoring the data
        at the maximum-likelihood parameters.
        """
        return self.pair_block_bits(pair_count(graph.n), graph.m)

    def complete_codelength(
        self,
        graph: Graph,
        size_code: IntegerCode,
        edge_count_code: IntegerCode | None = None,
    ) -> float:
        """Two-part codelength: integer-coded parameters, then data given them."""
        return size_code.length(graph.n) + self.bound_codelength(graph)

    def sample(self, n: int, seed: int, m: int | None = None) -> Graph:
        """Draw one graph; deterministic for a fixed seed."""
        raise NotImplementedError

    def describe(self) -> str:
        """Canonical descriptor string, the same syntax parse_model accepts."""
        return self.name


@dataclass(frozen=True)
class UniformModel(NullModel):
    """Uniform distribution over all graphs of a given size.

    Equivalent to an independent fair coin per candidate pair, which is
    also how the sampler realizes it.
    """

    name = "uniform"

    def pair_block_bits(self, pairs: int, edges: int) -> float:
        _check_block(pairs, edges)
        return float(pairs)

    def sample(self, n: int, seed: int, m: int | None = None) -> Graph:
        if m is not None:
            raise ValueError("the uniform model does not take an edge count")
        return _bernoulli_graph(n, 0.5, seed)


@dataclass(frozen=True)
class GnpModel(NullModel):
    """Erdos-Renyi G(n, p): every pair present independently with fixed p.

    p is a model constant chosen by the user; it is never encoded, so the
    bound covers all two-part completions over the remaining discrete
    parameter n.
    """

    p: float

    name = "gnp"

    def __post_init__(self):
        if not 0.0 < self.p < 1.0:
            raise ValueError(f"p must lie strictly between 0 and 1, got {self.p}")

    def pair_block_bits(self, pairs: int, edges: int) -> float:
        _check_block(pairs, edges)
        return -(edges * log2(self.p) + (pairs - edges) * log2(1.0 - self.p)) + 0.0

    def sample(self, n: int, seed: int, m: int | None = None) -> Graph:
        if m is not None:
            raise ValueError("the gnp model does not take an edge count")
        return _bernoulli_graph(n, self.p, seed)

    def describe(self) -> str:
        return f"gnp:{self.p!r}"


@dataclass(frozen=True)
class GnmModel(NullModel):
    """Erdos-Renyi G(n, m): uniform over graphs with exactly m edges.

    The descriptor carries no parameters: the edge count is read from the
    graph being scored, the maximum-likelihood choice.
    """

    name = "gnm"

    def pair_block_bits(self, pairs: int, edges: int) -> float:
        _check_block(pairs, edges)
        return log2_binomial(pairs, edges)

    def complete_codelength(
        self,
        graph: Graph,
        size_code: IntegerCode,
        edge_count_code: IntegerCode | None = None,
    ) -> float:
        if edge_count_code is None:
            raise ValueError("the gnm model needs an integer code for the edge count")
        return (
            size_code.length(graph.n)
            + edge_count_code.length(graph.m)
            + self.bound_codelength(graph)
        )

    def sample(self, n: int, seed: int, m: int | None = None) -> Graph:
        if m is None:
            raise ValueError("gnm sampling needs an edge count m")
        pairs = all_pairs(n)
        if not 0 <= m <= len(pairs):
            raise ValueError(f"m={m} out of range for n={n} ({len(pairs)} pairs)")
        rng = random.Random(seed)
        chosen = rng.sample(range(len(pairs)), m)
        return Graph(n, (pairs[i] for i in chosen))


def _check_block(pairs: int, edges: int) -> None:
    if pairs < 0 or not 0 <= edges <= pairs:
        raise ValueError(f"need 0 <= edges <= pairs, got pairs={pairs}, edges={edges}")


def _bernoulli_graph(n: int, p: float, seed: int) -> Graph:
    # One rng.random() draw per pair in canonical order, so families that
    # coincide in distribution (uniform and gnp:0.5) also coincide per seed.
    rng = random.Random(seed)
    return Graph(n, (pair for pair in all_pairs(n) if rng.random() < p))


def parse_model(spec: str) -> NullModel:
    """Parse a model descriptor: "uniform", "gnm", or "gnp:<p>"."""
    text = spec.strip()
    if text == "uniform":
        return UniformModel()
    if text == "gnm":
        return GnmModel()
    if text.startswith("gnp:"):
        try:
            p = float(text[4:])
        except ValueError:
            raise ValueError(f"bad gnp probability {text[4:]!r}") from None
        return GnpModel(p)
    raise ValueError(f"unknown model {spec!r}: expected uniform, gnm, or gnp:<p>")
