import math

import pytest

from heckecount.counting import (
    UnreachableEError,
    cached_table,
    char0_point,
    count_eregular,
    count_simples_char0,
    count_simples_rank,
    has_table_model,
    make_spec_point,
    verify_theorem,
)
from heckecount.ff import INFINITE, multiplicative_e
from heckecount.rootsys import datum_from_label

from conftest import G2_CHAR0, group


def test_spec_point_examples():
    p = make_spec_point(2, 5)
    assert (p.ell, p.i) == (5, 1)
    assert p.v_image.multiplicative_order() == 4
    assert p.q == p.field.scalar(-1)

    p = make_spec_point(3, 3)
    assert (p.ell, p.i) == (3, 1)
    assert p.q == p.field.one
    assert p.v_image.multiplicative_order() == 2

    p = make_spec_point(6, 7)
    assert p.i == 2  # min_extension_degree(7, 12) = 2

    p = make_spec_point(2, 2)
    assert p.q == p.field.one and p.v_image == p.field.one


def test_spec_point_char2_odd_e():
    # characteristic 2 has no elements of even order; v has order e instead
    for e in (3, 5, 7):
        p = make_spec_point(e, 2)
        assert p.ell == 2
        assert multiplicative_e(p.q) == e
        assert p.v_image * p.v_image == p.q
        assert p.v_image.multiplicative_order() == e


def test_spec_point_e_invariant():
    for e, ell in [(2, 3), (2, 7), (3, 5), (4, 3), (5, 11), (6, 5), (2, 2), (5, 5)]:
        p = make_spec_point(e, ell)
        assert multiplicative_e(p.q) == e


def test_unreachable():
    with pytest.raises(UnreachableEError):
        make_spec_point(4, 2)
    with pytest.raises(UnreachableEError):
        make_spec_point(6, 3)


def test_char0_point():
    p = char0_point(3)
    assert p.ell == 0
    assert multiplicative_e(p.q) == 3


def test_eregular_examples():
    assert count_eregular(2, 2) == 1
    assert count_eregular(3, 2) == 2
    assert count_eregular(4, 3) == 4
    assert count_eregular(1, 2) == 1
    # e larger than n: all partitions are e-regular
    assert count_eregular(4, 5) == 5


def test_rank_counts():
    g = group("A1")
    t = cached_table(g)
    assert count_simples_rank(g, t, make_spec_point(2, 3)) == 1
    assert count_simples_char0(g, t, 2) == 1
    assert count_simples_char0(g, t, INFINITE) == 2

    g2 = group("A2")
    t2 = cached_table(g2)
    assert count_simples_rank(g2, t2, make_spec_point(3, 7)) == 2
    assert count_simples_char0(g2, t2, 2) == 2


def test_g2_char0_fixtures():
    g = group("G2")
    t = cached_table(g)
    for e, expected in G2_CHAR0.items():
        assert count_simples_char0(g, t, e) == expected


def test_has_table_model():
    assert has_table_model(datum_from_label("A5"))
    assert has_table_model(datum_from_label("B4"))
    assert has_table_model(datum_from_label("G2"))
    assert not has_table_model(datum_from_label("F4"))
    assert not has_table_model(datum_from_label("D4"))


def test_verify_report_shape_and_monotone():
    reports = verify_theorem(datum_from_label("A2"), [2, 3, INFINITE], [2, 3, 5])
    assert len(reports) == 3
    for rep in reports:
        data = rep.to_json()
        assert set(data) == {"type", "e", "char0", "rows"}
        for row in rep.rows:
            if row.error is None and row.counts:
                assert max(row.counts.values()) <= rep.char0_count
    inf_rep = reports[2]
    assert inf_rep.to_json()["e"] == "inf"
    assert inf_rep.char0_count == 3


def test_verify_unreachable_row():
    (rep,) = verify_theorem(datum_from_label("A3"), [4], [2, 3])
    row2 = next(r for r in rep.rows if r.ell == 2)
    assert row2.status == "ERROR" and "unreachable" in row2.error
    assert rep.ok()


def test_d4_stabilized_baseline():
    (rep,) = verify_theorem(datum_from_label("D4"), [2], [3])
    assert rep.char0_provenance == "stabilized-modular"
    assert rep.ok()
    row = rep.rows[0]
    assert row.counts["meataxe"] == rep.char0_count
    assert row.status == "EQUAL"
