"""Samplers: weighted tree descent with exact probabilities, and stub matching.

The RNG is an explicit splitmix64 generator so that identical seeds give
bit-identical samples everywhere: stream ``i`` of seed ``s`` starts from
``mix64(mix64(s) ^ mix64(i + 1))`` and advances by the golden-ratio
increment, finalizing each output with the splitmix64 mixer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .core import (
    LabeledGraph,
    NotGraphical,
    RestartBudgetExceeded,
    as_residuals,
)
from .constrained import cg_test
from .enumeration import _all_sets, _all_sets_cached, _sorted_view
from .graphicality import erdos_gallai_test

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def _mix64(z: int) -> int:
    z = (z + _GOLDEN) & _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


class SplitMix64:
    """Minimal splittable 64-bit generator (splitmix64)."""

    def __init__(self, state: int):
        self._state = state & _MASK

    @classmethod
    def stream(cls, seed: int, index: int) -> "SplitMix64":
        return cls(_mix64(seed & _MASK) ^ _mix64((index + 1) & _MASK))

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK
        return _mix64(self._state)

    def randrange(self, n: int) -> int:
        # Rejection sampling keeps the draw exactly uniform on [0, n).
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            u = self.next_u64()
            if u < limit:
                return u % n


@dataclass(frozen=True)
class RealizationSample:
    """One realization with its exact generation probability."""

    graph: LabeledGraph
    probability: Fraction
    branch_sizes: tuple[int, ...]


@dataclass(frozen=True)
class CountEstimate:
    estimate: Fraction
    stderr: float
    samples: int


@dataclass
class MrRunStats:
    restarts: int = 0
    rejection_causes: dict[str, int] = field(
        default_factory=lambda: {"self_loop": 0, "multi_edge": 0, "cg_reject": 0}
    )
    stub_connections_made: int = 0


def _check_graphical(degs: tuple[int, ...]) -> None:
    if not erdos_gallai_test(tuple(sorted(degs, reverse=True))).graphical:
        raise NotGraphical(f"{list(degs)} is not graphical")


def _descend(degs, rng: SplitMix64, reuse_sets: bool) -> RealizationSample:
    sets_of = _all_sets_cached if reuse_sets else _all_sets
    n = len(degs)
    residual = list(degs)
    edges: list[tuple[int, int]] = []
    branch_sizes: list[int] = []
    while True:
        labels, seq = _sorted_view(residual)
        if not labels:
            break
        options = sets_of(seq)
        pick = options[rng.randrange(len(options))] if len(options) > 1 else options[0]
        branch_sizes.append(len(options))
        focal = labels[0]
        for p in pick:
            v = labels[p - 1]
            residual[v - 1] -= 1
            edges.append((focal, v) if focal < v else (v, focal))
        residual[focal - 1] = 0
    probability = Fraction(1, math.prod(branch_sizes)) if branch_sizes else Fraction(1)
    return RealizationSample(LabeledGraph(n, edges), probability, tuple(branch_sizes))


def sample_weighted(
    d, seed: int, stream: int = 0, reuse_sets: bool = True
) -> RealizationSample:
    """Walk the construction tree root to leaf, uniform at each level.

    The returned probability is exact: the product of the reciprocals of
    the branch counts along the path.  Deterministic given seed and
    stream index (one stream per sample in a batch).
    """
    degs = as_residuals(d)
    _check_graphical(degs)
    return _descend(degs, SplitMix64.stream(seed, stream), reuse_sets)


def estimate_count(
    d, samples: int, seed: int, reuse_sets: bool = True
) -> CountEstimate:
    """Unbiased estimate of the number of realizations: the mean of 1/P(G).

    Each draw uses its own RNG stream, so batches may run concurrently and
    merge associatively.  The standard error is the sample standard
    deviation of the weights divided by sqrt(samples).
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    degs = as_residuals(d)
    _check_graphical(degs)
    total = 0
    total_sq = 0
    for i in range(samples):
        sample = _descend(degs, SplitMix64.stream(seed, i), reuse_sets)
        w = math.prod(sample.branch_sizes)  # exactly 1 / P(G)
        total += w
        total_sq += w * w
    estimate = Fraction(total, samples)
    if samples > 1:
        variance = (total_sq - total * total / samples) / (samples - 1)
        stderr = math.sqrt(max(variance, 0.0) / samples)
    else:
        stderr = float("inf")
    return CountEstimate(estimate, stderr, samples)


def enumerate_with_probabilities(d) -> Iterator[tuple[LabeledGraph, Fraction]]:
    """Every realization together with its weighted-sampler probability.

    Replays the construction tree depth first, tracking the branch count
    of each level, so that summing the probabilities over the full stream
    yields exactly 1 for any graphical sequence.
    """
    degs = as_residuals(d)
    n = len(degs)
    if not erdos_gallai_test(tuple(sorted(degs, reverse=True))).graphical:
        return

    def rec(residual, acc, prob):
        labels, seq = _sorted_view(residual)
        if not labels:
            yield LabeledGraph(n, acc), prob
            return
        options = _all_sets_cached(seq)
        focal = labels[0]
        child_prob = prob / len(options)
        for members in options:
            neighbours = [labels[p - 1] for p in members]
            for v in neighbours:
                residual[v - 1] -= 1
                acc.append((focal, v) if focal < v else (v, focal))
            saved = residual[focal - 1]
            residual[focal - 1] = 0
            yield from rec(residual, acc, child_prob)
            residual[focal - 1] = saved
            for v in neighbours:
                residual[v - 1] += 1
            del acc[-len(neighbours):]

    yield from rec(list(degs), [], Fraction(1))


def molloy_reed_sample(
    d,
    seed: int,
    early_reject: bool = False,
    budget: int = 10_000_000,
    stream: int = 0,
) -> tuple[LabeledGraph, MrRunStats]:
    """Uniform sampling by random stub pairing with restart on conflicts.

    Stubs are drawn uniformly irrespective of their node; a self-loop or
    duplicate edge abandons the attempt.  With ``early_reject`` the CG test
    runs after every connection i-j, centered on i first (the endpoint
    whose stub was drawn first) then on j, with the node's current
    neighbours as its forbidden set; a failure restarts immediately.  The
    budget caps the total number of stub pairings drawn across restarts.
    """
    degs = as_residuals(d)
    _check_graphical(degs)
    n = len(degs)
    rng = SplitMix64.stream(seed, stream)
    stats = MrRunStats()
    drawn = 0
    while True:
        residual = list(degs)
        remaining = sum(residual)
        edges: set[tuple[int, int]] = set()
        adjacency: dict[int, set[int]] = {v: set() for v in range(1, n + 1)}
        fail: str | None = None
        while remaining > 0:
            if drawn >= budget:
                raise RestartBudgetExceeded(
                    f"exceeded {budget} stub pairings", stats
                )
            drawn += 1
            i = _draw_stub(residual, rng.randrange(remaining))
            residual[i - 1] -= 1
            j = _draw_stub(residual, rng.randrange(remaining - 1))
            residual[i - 1] += 1
            if i == j:
                fail = "self_loop"
                break
            pair = (i, j) if i < j else (j, i)
            if pair in edges:
                fail = "multi_edge"
                break
            residual[i - 1] -= 1
            residual[j - 1] -= 1
            remaining -= 2
            edges.add(pair)
            adjacency[i].add(j)
            adjacency[j].add(i)
            stats.stub_connections_made += 1
            if early_reject and not (
                _cg_ok(residual, i, adjacency[i], n)
                and _cg_ok(residual, j, adjacency[j], n)
            ):
                fail = "cg_reject"
                break
        if fail is None:
            return LabeledGraph(n, edges), stats
        stats.restarts += 1
        stats.rejection_causes[fail] += 1


def _draw_stub(residual: list[int], r: int) -> int:
    for v, count in enumerate(residual, start=1):
        if r < count:
            return v
        r -= count
    raise AssertionError("stub index out of range")


def _cg_ok(residual, i, neighbours, n) -> bool:
    # A node needing more partners than it has allowed non-neighbours can
    # never finish simply; treat that as a CG rejection too.
    if residual[i - 1] > n - 1 - len(neighbours):
        return False
    return cg_test(residual, i, frozenset(neighbours))
