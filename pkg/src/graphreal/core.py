"""Core domain types, input validation and the text wire formats.

Node labels are 1-based throughout: position k (1-based) of a degree
sequence is the degree of node k, and edges are unordered pairs of labels
in 1..n.  All types here are immutable after construction, so they are
safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class GraphRealError(Exception):
    """Base class for all library errors."""


class ParseError(GraphRealError):
    """Malformed textual input."""


class InvalidDegree(GraphRealError):
    """A degree entry is negative or otherwise malformed."""


class DegreeTooLarge(GraphRealError):
    """Some degree exceeds n - 1, so no simple graph can realize it."""


class NotGraphical(GraphRealError):
    """The sequence admits no simple-graph realization."""


class Incomparable(GraphRealError):
    """Adjacency sets with different focal node or cardinality were compared."""


class InvalidSet(GraphRealError):
    """An adjacency or forbidden set refers to labels outside 1..n or the focal."""


class TooManyForbidden(GraphRealError):
    """The forbidden set leaves fewer allowed neighbours than stubs to place."""


class OracleTooLarge(GraphRealError):
    """Brute-force oracle invoked beyond its size guardrail."""


class RestartBudgetExceeded(GraphRealError):
    """Stub-matching sampler exceeded its connection budget."""

    def __init__(self, message: str, stats=None):
        super().__init__(message)
        self.stats = stats


@dataclass(frozen=True)
class DegreeSequence:
    """Nonincreasing degree sequence; entry k (1-based) belongs to node k.

    Input sequences should be built through :func:`validate_input_sequence`,
    which sorts, strips zeros and records the applied permutation.  Residual
    sequences produced by reductions may legitimately contain zeros.
    """

    degrees: tuple[int, ...]
    # node label -> 1-based position in the original (unsorted) input
    permutation: tuple[int, ...] | None = None

    def __post_init__(self):
        degs = tuple(int(x) for x in self.degrees)
        object.__setattr__(self, "degrees", degs)
        if degs and degs[-1] < 0:
            raise InvalidDegree("degrees must be nonnegative")
        for a, b in zip(degs, degs[1:]):
            if a < b:
                raise InvalidDegree("degree sequence must be nonincreasing")

    @property
    def n(self) -> int:
        return len(self.degrees)

    def total(self) -> int:
        return sum(self.degrees)

    def degree_of(self, label: int) -> int:
        return self.degrees[label - 1]

    def __len__(self) -> int:
        return len(self.degrees)

    def __iter__(self) -> Iterator[int]:
        return iter(self.degrees)

    def __getitem__(self, idx):
        return self.degrees[idx]


def as_residuals(d) -> tuple[int, ...]:
    """Coerce a DegreeSequence or plain iterable into a per-label tuple."""
    if isinstance(d, DegreeSequence):
        return d.degrees
    return tuple(int(x) for x in d)


def validate_input_sequence(raw: Sequence[int]) -> DegreeSequence:
    """Sort a raw degree list nonincreasingly, strip zeros, record labels.

    The permutation maps each new node label to the 1-based position the
    degree occupied in ``raw`` (stable sort: ties keep input order).

    Raises InvalidDegree for an empty input or a negative entry, and
    DegreeTooLarge when the top degree exceeds n - 1 after zero-stripping.
    """
    if len(raw) == 0:
        raise InvalidDegree("degree sequence must be nonempty")
    entries = [int(x) for x in raw]
    if any(x < 0 for x in entries):
        raise InvalidDegree(f"negative degree in {entries}")
    order = sorted(range(len(entries)), key=lambda i: -entries[i])
    degrees = tuple(entries[i] for i in order if entries[i] > 0)
    permutation = tuple(i + 1 for i in order if entries[i] > 0)
    if degrees and degrees[0] > len(degrees) - 1:
        raise DegreeTooLarge(
            f"degree {degrees[0]} exceeds n-1 = {len(degrees) - 1}"
        )
    return DegreeSequence(degrees, permutation)


@dataclass(frozen=True)
class AdjacencySet:
    """An increasingly ordered set of distinct neighbours of a focal node.

    During incremental construction the members may be a prefix of the
    focal node's final neighbourhood.
    """

    focal: int
    members: tuple[int, ...]

    def __post_init__(self):
        members = tuple(int(x) for x in self.members)
        object.__setattr__(self, "members", members)
        if self.focal < 1:
            raise InvalidSet(f"focal label {self.focal} out of range")
        for a, b in zip(members, members[1:]):
            if a >= b:
                raise InvalidSet("members must be strictly increasing")
        if any(m < 1 for m in members):
            raise InvalidSet("member labels must be >= 1")
        if self.focal in members:
            raise InvalidSet("focal node cannot be its own neighbour")

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)


@dataclass(frozen=True)
class ForbiddenSet:
    """The star of connections a focal node must avoid."""

    focal: int
    members: frozenset[int]

    def __post_init__(self):
        members = frozenset(int(x) for x in self.members)
        object.__setattr__(self, "members", members)
        if self.focal in members:
            raise InvalidSet("focal node cannot forbid itself")
        if any(m < 1 for m in members):
            raise InvalidSet("member labels must be >= 1")

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)


def _canonical_edges(n: int, edges: Iterable) -> frozenset[tuple[int, int]]:
    out = set()
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if u == v:
            raise InvalidSet(f"self-loop at node {u}")
        if not (1 <= u <= n and 1 <= v <= n):
            raise InvalidSet(f"edge ({u},{v}) outside 1..{n}")
        out.add((u, v) if u < v else (v, u))
    return frozenset(out)


@dataclass(frozen=True)
class LabeledGraph:
    """Simple undirected graph on nodes 1..n, canonical edge-set form.

    Equality is labeled equality: two graphs are equal iff their canonical
    edge sets coincide (not isomorphism).
    """

    n: int
    edges: frozenset[tuple[int, int]]

    def __init__(self, n: int, edges: Iterable = ()):
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "edges", _canonical_edges(int(n), edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def canonical_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.edges))

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    def neighbors(self, v: int) -> set[int]:
        return {b if a == v else a for a, b in self.edges if v in (a, b)}

    def degrees(self) -> tuple[int, ...]:
        counts = [0] * self.n
        for u, v in self.edges:
            counts[u - 1] += 1
            counts[v - 1] += 1
        return tuple(counts)


def graph_degree_sequence(g: LabeledGraph) -> tuple[tuple[int, ...], DegreeSequence]:
    """Per-label degree counts plus the nonincreasing sorted sequence."""
    counts = g.degrees()
    return counts, DegreeSequence(tuple(sorted(counts, reverse=True)))


# --- text formats -----------------------------------------------------------
#
# Degree sequences: one sequence per line, whitespace-separated integers.
# Graphs: header "graph n=<n> m=<m>", one "u v" line per edge with u < v,
# graphs separated by a blank line.


def format_sequence(d) -> str:
    return " ".join(str(x) for x in as_residuals(d))


def parse_sequence(line: str) -> list[int]:
    tokens = line.split()
    if not tokens:
        raise ParseError("empty degree-sequence line")
    try:
        return [int(t) for t in tokens]
    except ValueError as exc:
        raise ParseError(f"bad degree token in {line!r}") from exc


def parse_sequences(text: str) -> list[list[int]]:
    return [parse_sequence(line) for line in text.splitlines() if line.strip()]


def format_graph(g: LabeledGraph) -> str:
    lines = [f"graph n={g.n} m={g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.canonical_edges())
    return "\n".join(lines)


def parse_graphs(text: str) -> list[LabeledGraph]:
    graphs = []
    header = None
    edges: list[tuple[int, int]] = []
    lines = text.splitlines()
    for line in lines + [""]:
        line = line.strip()
        if not line:
            if header is not None:
                n, m = header
                if len(edges) != m:
                    raise ParseError(f"expected {m} edges, found {len(edges)}")
                graphs.append(LabeledGraph(n, edges))
                header, edges = None, []
            continue
        if line.startswith("graph "):
            if header is not None:
                raise ParseError("graph header inside another graph block")
            try:
                fields = dict(tok.split("=") for tok in line.split()[1:])
                header = (int(fields["n"]), int(fields["m"]))
            except (ValueError, KeyError) as exc:
                raise ParseError(f"bad graph header {line!r}") from exc
        else:
            if header is None:
                raise ParseError(f"edge line {line!r} outside a graph block")
            try:
                u, v = (int(t) for t in line.split())
            except ValueError as exc:
                raise ParseError(f"bad edge line {line!r}") from exc
            if u >= v:
                raise ParseError(f"edge {u} {v} must satisfy u < v")
            edges.append((u, v))
    return graphs
