import math

import pytest

from heckecount.laurent import LaurentPoly
from heckecount.rootsys import (
    UnsupportedScaleError,
    bad_primes,
    build_group,
    datum_from_label,
    degrees_from_poincare,
    group_from_json,
    known_degrees,
    known_order,
    parse_type,
)

from conftest import group

ORDERS = {
    "A1": 2, "A2": 6, "A3": 24, "A4": 120, "A5": 720,
    "B2": 8, "B3": 48, "B4": 384, "D4": 192, "G2": 12, "F4": 1152,
}


def test_parse_type():
    assert parse_type("a3") == "A3"
    assert parse_type("I2(6)") == "G2"
    assert parse_type("I2(4)") == "B2"
    assert parse_type("I2(3)") == "A2"
    assert parse_type("E8") == "E8"
    with pytest.raises(ValueError):
        parse_type("H3")
    with pytest.raises(ValueError):
        parse_type("I2(5)")


def test_orders_and_degrees():
    for label, order in ORDERS.items():
        g = group(label)
        assert g.order == order
        assert math.prod(g.degrees()) == order
        assert known_order(label) == order
        assert known_degrees(label) == g.degrees()


def test_lengths_and_words():
    g = group("B3")
    for w in range(g.order):
        assert len(g.words[w]) == g.lengths[w]
        assert g.word_to_element(g.words[w]) == w


def test_poincare_degree_identity():
    one = LaurentPoly.one()
    u = LaurentPoly.u()
    for label in ORDERS:
        g = group(label)
        lhs = g.poincare_polynomial()
        for _ in range(g.rank):
            lhs = lhs * (u - one)
        rhs = one
        for d in g.degrees():
            rhs = rhs * (u ** d - one)
        assert lhs == rhs


def test_degrees_from_poincare_oracle():
    for label in ORDERS:
        g = group(label)
        assert degrees_from_poincare(g.poincare_polynomial(), g.rank) == known_degrees(label)


def test_class_counts():
    expected = {"A1": 2, "A2": 3, "A3": 5, "A4": 7, "B2": 5, "B3": 10, "G2": 6, "F4": 25, "D4": 13}
    for label, n in expected.items():
        g = group(label)
        classes = g.conjugacy_classes()
        assert len(classes) == n
        assert sum(c.size for c in classes) == g.order
        for c in classes:
            assert g.class_of(c.rep) == c.class_id
            assert g.lengths[c.rep] == min(g.lengths[m] for m in c.members)


def test_inverse_and_mult():
    g = group("B2")
    for w in range(g.order):
        assert g.mult(w, g.inverse(w)) == g.identity
        assert g.lengths[g.inverse(w)] == g.lengths[w]


def test_bad_primes_table():
    assert bad_primes("A5") == frozenset()
    assert bad_primes("B3") == frozenset({2})
    assert bad_primes("G2") == frozenset({2, 3})
    assert bad_primes("F4") == frozenset({2, 3})
    assert bad_primes("E8") == frozenset({2, 3, 5})


def test_exceptional_stored_only():
    with pytest.raises(UnsupportedScaleError):
        datum_from_label("E6")
    assert known_degrees("E7") == (2, 6, 8, 10, 12, 14, 18)
    assert known_order("E8") == 696729600


def test_scale_cap():
    with pytest.raises(UnsupportedScaleError):
        build_group(datum_from_label("A5"), max_order=100)


def test_json_roundtrip():
    g = group("B2")
    data = g.to_json()
    g2 = group_from_json(data)
    assert g2.order == g.order
    assert list(g2.lengths) == list(g.lengths)
    data["order"] = 7
    with pytest.raises(ValueError):
        group_from_json(data)
