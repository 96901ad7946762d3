"""Star-constrained graphicality: reductions, set orders and the CG test."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .core import (
    AdjacencySet,
    ForbiddenSet,
    Incomparable,
    InvalidSet,
    TooManyForbidden,
    as_residuals,
)
from .graphicality import erdos_gallai_test


@dataclass(frozen=True)
class ReducedSequence:
    """Residual degrees after removing a focal node and its adjacency set.

    Zeros stay in place so node labels remain stable.  Any -1 entry marks
    the reduction as immediately non-graphical (a neighbour had no stub
    left to give).
    """

    residuals: tuple[int, ...]
    removed: int

    @property
    def has_negative(self) -> bool:
        return any(x < 0 for x in self.residuals)

    def sorted_positive(self) -> tuple[int, ...]:
        return tuple(sorted((x for x in self.residuals if x > 0), reverse=True))


def _forbidden_members(x, focal: int) -> frozenset[int]:
    if isinstance(x, ForbiddenSet):
        if x.focal != focal:
            raise InvalidSet(f"forbidden set focal {x.focal} != {focal}")
        return x.members
    return ForbiddenSet(focal, frozenset(x)).members


def reduce_by_set(d, a: AdjacencySet) -> ReducedSequence:
    """Remove the focal node, decrementing each member's degree by one."""
    degs = as_residuals(d)
    n = len(degs)
    if not (1 <= a.focal <= n):
        raise InvalidSet(f"focal {a.focal} outside 1..{n}")
    if any(not (1 <= m <= n) for m in a.members):
        raise InvalidSet(f"adjacency set {a.members} outside 1..{n}")
    residuals = list(degs)
    residuals[a.focal - 1] = 0
    for m in a.members:
        residuals[m - 1] -= 1
    return ReducedSequence(tuple(residuals), a.focal)


def set_leq(b: AdjacencySet, a: AdjacencySet) -> bool:
    """Elementwise order on equal-size adjacency sets: b is "to the left"."""
    if b.focal != a.focal or len(b) != len(a):
        raise Incomparable("sets must share focal node and cardinality")
    return all(x <= y for x, y in zip(b.members, a.members))


def colex_less(a: AdjacencySet, b: AdjacencySet) -> bool:
    """Strict colexicographic order: compare at the largest differing position."""
    if len(a) != len(b):
        raise Incomparable("sets must have equal cardinality")
    return tuple(reversed(a.members)) < tuple(reversed(b.members))


def leftmost_restricted(d, i: int, x) -> AdjacencySet:
    """The d_i allowed nodes of largest residual degree, smallest label first.

    On a nonincreasing sequence this is exactly the d_i lowest-index nodes
    outside the forbidden set; the residual-degree ordering generalizes it
    to unsorted residual views (ties cannot affect the CG verdict because
    tied allowed nodes produce identical reduced multisets).
    """
    degs = as_residuals(d)
    n = len(degs)
    if not (1 <= i <= n):
        raise InvalidSet(f"focal {i} outside 1..{n}")
    forbidden = _forbidden_members(x, i)
    if any(not (1 <= m <= n) for m in forbidden):
        raise InvalidSet(f"forbidden set {sorted(forbidden)} outside 1..{n}")
    di = degs[i - 1]
    if len(forbidden) > n - 1 - di:
        raise TooManyForbidden(
            f"|X|={len(forbidden)} exceeds n-1-d_i={n - 1 - di}"
        )
    allowed = [j for j in range(1, n + 1) if j != i and j not in forbidden]
    allowed.sort(key=lambda j: (-degs[j - 1], j))
    return AdjacencySet(i, tuple(sorted(allowed[:di])))


def cg_test(d, i: int, x=frozenset()) -> bool:
    """Can d be realized avoiding every connection from i into x?

    True iff the sequence reduced by the leftmost restricted set of i is
    graphical: no negative residual and the Erdos-Gallai test passes on
    the sorted positive part.
    """
    left = leftmost_restricted(d, i, x)
    reduced = reduce_by_set(d, left)
    if reduced.has_negative:
        return False
    return erdos_gallai_test(reduced.sorted_positive()).graphical
