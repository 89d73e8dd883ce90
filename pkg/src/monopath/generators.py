"""Seeded instance generators.

Randomised kinds are driven by SplitMix64, a public 64-bit generator with
splittable seeding, so any implementation of the same update rule reproduces
instances byte-for-byte:

    state = (state + 0x9E3779B97F4A7C15) mod 2**64
    z = state
    z = (z XOR (z >> 30)) * 0xBF58476D1CE4E5B9 mod 2**64
    z = (z XOR (z >> 27)) * 0x94D049BB133111EB mod 2**64
    output = z XOR (z >> 31)

Bounded draws use unbiased rejection sampling (see SplitMix64.below).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidSpecError
from .graph import OrientedGraph, build_graph

KINDS = ("oriented-gnm", "tournament", "dag", "dipath", "disjoint-cycles", "transitive")
_RANDOM_KINDS = ("oriented-gnm", "tournament", "dag")
_SIZED_KINDS = ("oriented-gnm", "dag")

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 PRNG; the update rule is documented in the module docstring."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_uint64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform integer in [0, n) via rejection below the largest multiple
        of n that fits in 64 bits (unbiased)."""
        if n <= 0:
            raise ValueError(f"below() needs n > 0, got {n}")
        limit = _MASK64 + 1 - ((_MASK64 + 1) % n)
        while True:
            draw = self.next_uint64()
            if draw < limit:
                return draw % n


@dataclass(frozen=True)
class GenSpec:
    """Instance description: kind, sizes and seed (seed ignored by the fixed
    constructions dipath / transitive / disjoint-cycles)."""

    kind: str
    vertex_count: int
    edge_count: int | None = None
    seed: int | None = None


def generate(spec: GenSpec) -> OrientedGraph:
    """Deterministic instance for the given spec; validates it first."""
    _validate(spec)
    n = spec.vertex_count
    if spec.kind == "dipath":
        return build_graph(n, [(i, i + 1) for i in range(n - 1)])
    if spec.kind == "transitive":
        return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    if spec.kind == "disjoint-cycles":
        edges = []
        for base in range(0, n - 2, 3):
            edges += [(base, base + 1), (base + 1, base + 2), (base + 2, base)]
        return build_graph(n, edges)

    rng = SplitMix64(spec.seed)
    if spec.kind == "tournament":
        edges = []
        for i in range(n):
            for j in range(i + 1, n):
                edges.append((i, j) if rng.next_uint64() & 1 == 0 else (j, i))
        return build_graph(n, edges)

    # oriented-gnm / dag: sample edge_count distinct unordered pairs uniformly.
    pairs = _sample_pairs(rng, n, spec.edge_count)
    if spec.kind == "dag":
        return build_graph(n, pairs)  # pairs are (low, high): already low -> high
    edges = [(a, b) if rng.next_uint64() & 1 == 0 else (b, a) for a, b in pairs]
    return build_graph(n, edges)


def _sample_pairs(rng: SplitMix64, n: int, m: int) -> list[tuple[int, int]]:
    """m distinct unordered pairs {a < b}, uniform via rejection; insertion order
    is the acceptance order, which downstream orientation draws rely on."""
    seen: set[tuple[int, int]] = set()
    pairs: list[tuple[int, int]] = []
    while len(pairs) < m:
        u = rng.below(n)
        v = rng.below(n)
        if u == v:
            continue
        pair = (u, v) if u < v else (v, u)
        if pair in seen:
            continue
        seen.add(pair)
        pairs.append(pair)
    return pairs


def _validate(spec: GenSpec) -> None:
    if spec.kind not in KINDS:
        raise InvalidSpecError(f"unknown kind {spec.kind!r}", kind=spec.kind)
    if spec.vertex_count < 0:
        raise InvalidSpecError(f"negative vertex count {spec.vertex_count}")
    if spec.kind in _RANDOM_KINDS and spec.seed is None:
        raise InvalidSpecError(f"kind {spec.kind!r} requires a seed", kind=spec.kind)
    if spec.kind in _SIZED_KINDS:
        if spec.edge_count is None or spec.edge_count < 0:
            raise InvalidSpecError(
                f"kind {spec.kind!r} requires a non-negative edge count", kind=spec.kind
            )
        cap = spec.vertex_count * (spec.vertex_count - 1) // 2
        if spec.edge_count > cap:
            raise InvalidSpecError(
                f"edge count {spec.edge_count} exceeds {cap} unordered pairs",
                edge_count=spec.edge_count,
                cap=cap,
            )
