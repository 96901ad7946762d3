"""Exhaustive construction of every labeled realization, and exact counts.

The recursion picks the node of largest residual degree (smallest label on
ties), generates every graphicality-preserving adjacency set for it in
decreasing colexicographic order, and recurses on the reduced residuals.
Each labeled graph is produced exactly once.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .core import AdjacencySet, LabeledGraph, NotGraphical, as_residuals
from .constrained import cg_test
from .graphicality import erdos_gallai_test

# Cap on how many recently accepted sets the dominance shortcut scans;
# beyond that a full pairwise scan costs more than the EG test it saves.
_DOMINANCE_WINDOW = 8


@dataclass(frozen=True)
class EnumerationNode:
    """A node of the construction tree: residuals plus the sets fixed so far."""

    n: int
    residual: tuple[int, ...]
    chosen: tuple[AdjacencySet, ...]
    depth: int

    def edges(self) -> tuple[tuple[int, int], ...]:
        out = []
        for a in self.chosen:
            for v in a.members:
                out.append((a.focal, v) if a.focal < v else (v, a.focal))
        return tuple(out)


@dataclass(frozen=True)
class CountResult:
    count: int
    memo_hits: int
    memo_entries: int


def rightmost_adjacency_set(d) -> AdjacencySet:
    """Colex-largest graphicality-preserving adjacency set of node 1.

    Connects node 1 to node n first (never breaks graphicality), then scans
    k = n-1 downwards, keeping each tentative connection iff the constrained
    graphicality test passes with the kept members as forbidden connections.
    """
    degs = as_residuals(d)
    n = len(degs)
    if not erdos_gallai_test(tuple(sorted(degs, reverse=True))).graphical:
        raise NotGraphical(f"{list(degs)} is not graphical")
    d1 = degs[0]
    if d1 < 1:
        raise NotGraphical("rightmost set needs d_1 >= 1")
    residual = list(degs)
    residual[0] -= 1
    residual[n - 1] -= 1
    members = [n]
    k = n - 1
    while len(members) < d1:
        # Graphicality of the input guarantees the scan never exhausts.
        assert k >= 2, "rightmost-set scan exhausted on a graphical sequence"
        if residual[k - 1] > 0:
            trial = list(residual)
            trial[0] -= 1
            trial[k - 1] -= 1
            if cg_test(trial, 1, frozenset(members) | {k}):
                residual = trial
                members.append(k)
        k -= 1
    return AdjacencySet(1, tuple(sorted(members)))


def _all_sets(seq: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """All graphicality-preserving adjacency sets of node 1, decreasing colex.

    ``seq`` must be nonincreasing with positive entries.  Candidates are
    grown by prefix extension from the largest element down, pruning any
    prefix that fails the CG test with the chosen-so-far as forbidden set.
    A candidate elementwise below a recently accepted set is accepted
    without a graphicality check (left shifts preserve graphicality).
    """
    ar = rightmost_adjacency_set(seq).members
    d1 = seq[0]
    n = len(seq)
    out: list[tuple[int, ...]] = []

    def dominated(members: tuple[int, ...]) -> bool:
        for acc in out[-_DOMINANCE_WINDOW:]:
            if all(m <= a for m, a in zip(members, acc)):
                return True
        return False

    def extend(pos: int, chosen: list[int], residual: list[int], tight: bool):
        hi = ar[pos - 1] if tight else chosen[-1] - 1
        for v in range(hi, pos, -1):
            if residual[v - 1] == 0:
                continue
            new_res = list(residual)
            new_res[0] -= 1
            new_res[v - 1] -= 1
            if pos == 1:
                members = tuple(sorted(chosen + [v]))
                if dominated(members):
                    out.append(members)
                else:
                    rest = sorted(new_res[1:], reverse=True)
                    if erdos_gallai_test(tuple(rest)).graphical:
                        out.append(members)
            else:
                if cg_test(new_res, 1, frozenset(chosen) | {v}):
                    extend(
                        pos - 1,
                        chosen + [v],
                        new_res,
                        tight and v == ar[pos - 1],
                    )

    extend(d1, [], list(seq), True)
    return tuple(out)


# The family of adjacency sets depends only on the sorted residual sequence,
# so results are shared across enumeration, counting and sampling.
_all_sets_cached = lru_cache(maxsize=1 << 16)(_all_sets)


def all_adjacency_sets(d) -> list[AdjacencySet]:
    """The set A(d) for node 1, ordered colex-decreasing starting at A_R."""
    seq = as_residuals(d)
    return [AdjacencySet(1, m) for m in _all_sets(tuple(seq))]


def _sorted_view(residual: list[int]) -> tuple[list[int], tuple[int, ...]]:
    """Surviving labels ordered by (residual desc, label asc), plus degrees."""
    labels = sorted(
        (v for v in range(1, len(residual) + 1) if residual[v - 1] > 0),
        key=lambda v: (-residual[v - 1], v),
    )
    return labels, tuple(residual[v - 1] for v in labels)


def _recurse(residual: list[int], acc: list[tuple[int, int]]) -> Iterator[
    tuple[tuple[int, int], ...]
]:
    labels, seq = _sorted_view(residual)
    if not labels:
        yield tuple(acc)
        return
    focal = labels[0]
    for members in _all_sets_cached(seq):
        neighbours = [labels[p - 1] for p in members]
        for v in neighbours:
            residual[v - 1] -= 1
            acc.append((focal, v) if focal < v else (v, focal))
        saved = residual[focal - 1]
        residual[focal - 1] = 0
        yield from _recurse(residual, acc)
        residual[focal - 1] = saved
        for v in neighbours:
            residual[v - 1] += 1
        del acc[-len(neighbours):]


def enumerate_all(d) -> Iterator[LabeledGraph]:
    """Lazily yield every labeled simple graph realizing d, each exactly once.

    Non-graphical input yields nothing.  Order is deterministic: depth
    first, adjacency sets in decreasing colex order at every level.
    """
    degs = as_residuals(d)
    n = len(degs)
    if not erdos_gallai_test(tuple(sorted(degs, reverse=True))).graphical:
        return
    for edges in _recurse(list(degs), []):
        yield LabeledGraph(n, edges)


def top_level_branches(d) -> list[EnumerationNode]:
    """Split the construction tree at the root, one node per top-level set."""
    degs = as_residuals(d)
    n = len(degs)
    if not erdos_gallai_test(tuple(sorted(degs, reverse=True))).graphical:
        return []
    labels, seq = _sorted_view(list(degs))
    if not labels:
        return [EnumerationNode(n, tuple(degs), (), 0)]
    focal = labels[0]
    branches = []
    for members in _all_sets_cached(seq):
        neighbours = tuple(labels[p - 1] for p in members)
        residual = list(degs)
        residual[focal - 1] = 0
        for v in neighbours:
            residual[v - 1] -= 1
        chosen = (AdjacencySet(focal, tuple(sorted(neighbours))),)
        branches.append(EnumerationNode(n, tuple(residual), chosen, 1))
    return branches


def enumerate_branch(node: EnumerationNode) -> Iterator[LabeledGraph]:
    """Enumerate the subtree below one construction-tree node."""
    for edges in _recurse(list(node.residual), list(node.edges())):
        yield LabeledGraph(node.n, edges)


def enumerate_all_parallel(
    d, threads: int = 1, ordered: bool = True
) -> Iterator[LabeledGraph]:
    """Enumerate with worker threads owning disjoint top-level subtrees.

    With ``ordered`` the output order matches single-threaded enumeration.
    """
    if threads <= 1:
        yield from enumerate_all(d)
        return
    from concurrent.futures import ThreadPoolExecutor, as_completed

    branches = top_level_branches(d)
    if branches and branches[0].depth == 0:
        yield from enumerate_all(d)
        return
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(lambda b: list(enumerate_branch(b)), b) for b in branches]
        if ordered:
            for fut in futures:
                yield from fut.result()
        else:
            for fut in as_completed(futures):
                yield from fut.result()


def count_realizations(d, memoize: bool = True) -> CountResult:
    """Exact number of labeled realizations via the branch-sum recursion.

    The memo key is the sorted multiset of positive residual degrees: the
    count is invariant under relabeling (any permutation of labels bijects
    the realization sets), so it depends only on the degree multiset.
    """
    degs = as_residuals(d)
    key = tuple(sorted((x for x in degs if x > 0), reverse=True))
    if not erdos_gallai_test(key).graphical:
        return CountResult(0, 0, 0)
    memo: dict[tuple[int, ...], int] | None = {} if memoize else None
    hits = 0

    def count(seq: tuple[int, ...]) -> int:
        nonlocal hits
        if not seq:
            return 1
        if memo is not None and seq in memo:
            hits += 1
            return memo[seq]
        total = 0
        for members in _all_sets_cached(seq):
            child = list(seq)
            child[0] = 0
            for p in members:
                child[p - 1] -= 1
            total += count(tuple(sorted((x for x in child if x > 0), reverse=True)))
        if memo is not None:
            memo[seq] = total
        return total

    total = count(key)
    return CountResult(total, hits, len(memo) if memo is not None else 0)
