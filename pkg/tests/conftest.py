"""Shared, memoized computations for the test suite.

The acceptance criteria reuse each other's verification runs (criterion 9
audits the rows produced by criteria 4-5; criterion 10 re-runs the same
instances under different seeds), so the expensive reports are computed
once per session through these cached helpers.
"""

from __future__ import annotations

import functools

from heckecount.counting import cached_group, verify_theorem
from heckecount.rootsys import datum_from_label

TYPE_A_GRID = {
    "A1": ([2], [2, 3, 5, 7, 11]),
    "A2": ([2, 3], [2, 3, 5, 7, 11]),
    "A3": ([2, 3, 4], [2, 3, 5, 7, 11]),
    "A4": ([2, 3, 4, 5], [2, 3, 5, 7, 11]),
}

G2_GOOD = ([2, 3, 6], [5, 7, 13])
G2_BAD = [(2, 2), (3, 3)]

F4_E2_PRIMES = [5, 7, 13]
F4_BAD = [(2, 2), (3, 3)]

# frozen regression fixtures, recorded from the first verified runs
F4_E2_COUNT = 8
F4_BAD_COUNTS = {(2, 2): 4, (3, 3): 14}
F4_STABILIZED = {2: 8, 3: 15, 4: 19, 6: 20}
G2_CHAR0 = {2: 3, 3: 5, 6: 5}


def group(label: str):
    return cached_group(datum_from_label(label))


@functools.lru_cache(maxsize=None)
def type_a_reports(label: str):
    e_list, ells = TYPE_A_GRID[label]
    return verify_theorem(datum_from_label(label), e_list, ells)


@functools.lru_cache(maxsize=None)
def g2_reports():
    e_list, ells = G2_GOOD
    return verify_theorem(datum_from_label("G2"), e_list, ells)


@functools.lru_cache(maxsize=None)
def g2_bad_reports():
    return verify_theorem(datum_from_label("G2"), [2, 3], [2, 3])


def all_verify_rows():
    """Every (report, row) produced by the criteria 4-5 runs."""
    out = []
    for label in TYPE_A_GRID:
        for rep in type_a_reports(label):
            out.extend((rep, row) for row in rep.rows)
    for rep in g2_reports():
        out.extend((rep, row) for row in rep.rows)
    for rep in g2_bad_reports():
        out.extend((rep, row) for row in rep.rows)
    return out
