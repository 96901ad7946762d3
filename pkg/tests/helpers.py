"""Shared generators for the exhaustive test families."""

import itertools

from graphreal.graphicality import erdos_gallai_test

HH_GAP_SEQUENCE = (3, 3, 2, 2, 2, 2, 2, 2)
HH_GAP_COUNT = 4265  # pinned from oracle_enumerate; acceptance re-derives it


def nonincreasing_sequences(n, max_deg):
    """All nonincreasing positive sequences of length n with entries <= max_deg."""
    return itertools.combinations_with_replacement(range(max_deg, 0, -1), n)


def exhaustive_family(max_n=7, max_deg=6):
    for n in range(1, max_n + 1):
        yield from nonincreasing_sequences(n, max_deg)


def graphical_family(max_n=6):
    """All graphical positive nonincreasing sequences with n <= max_n."""
    out = []
    for n in range(1, max_n + 1):
        for seq in nonincreasing_sequences(n, min(n - 1, 6) or 1):
            if erdos_gallai_test(seq).graphical:
                out.append(seq)
    return out


def canonical_set(graphs):
    return {g.canonical_edges() for g in graphs}
