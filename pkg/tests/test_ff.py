import math

import pytest

from heckecount.ff import (
    INFINITE,
    FFElem,
    cyclotomic_vanishing,
    element_of_order,
    factorize,
    get_field,
    is_prime,
    min_extension_degree,
    multiplicative_e,
)


def test_primality_and_factorization():
    assert [p for p in range(2, 30) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert factorize(360) == {2: 3, 3: 2, 5: 1}


def test_field_arithmetic_prime():
    f = get_field(7)
    a, b = f.scalar(3), f.scalar(5)
    assert a + b == f.one
    assert a * b == f.one  # 15 = 1 mod 7
    assert a.inverse() * a == f.one
    assert a ** 6 == f.one


def test_field_arithmetic_extension():
    f = get_field(2, 4)
    assert f.order == 16
    g = f.generator
    assert g ** 15 == f.one
    assert g ** 5 != f.one and g ** 3 != f.one
    assert (g + g) == f.zero  # characteristic 2


def test_min_extension_degree():
    assert min_extension_degree(7, 12) == 2  # 12 | 49 - 1
    assert min_extension_degree(3, 4) == 2
    assert min_extension_degree(5, 4) == 1
    assert min_extension_degree(2, 7) == 3  # 7 | 2^3 - 1


def test_element_of_order():
    f = get_field(5)
    z = element_of_order(f, 4)
    assert z.multiplicative_order() == 4
    assert z * z == f.scalar(-1)
    with pytest.raises(ValueError):
        element_of_order(f, 3)


def test_multiplicative_e():
    f = get_field(7)
    assert multiplicative_e(f.one) == 7  # q = 1: e is the characteristic
    assert multiplicative_e(f.scalar(2)) == 3  # 1 + 2 + 4 = 0 mod 7
    assert multiplicative_e(f.scalar(-1)) == 2
    f2 = get_field(2)
    assert multiplicative_e(f2.one) == 2


def test_multiplicative_e_cyclotomic():
    from heckecount.cyclo import get_cyclo_field

    F = get_cyclo_field(6)
    assert multiplicative_e(F.zeta * F.zeta) == 3
    two = F.scalar(2)
    assert multiplicative_e(two) is INFINITE or multiplicative_e(two) == math.inf


def test_cyclotomic_vanishing_law():
    # Phi_d(q) = 0 iff d = e * ell^n (or d = ell^n when q = 1)
    f = get_field(7)
    q = f.scalar(2)  # e = 3
    assert cyclotomic_vanishing(q, 3)
    assert cyclotomic_vanishing(q, 21)
    assert not cyclotomic_vanishing(q, 6)
    assert cyclotomic_vanishing(f.one, 7)
    assert not cyclotomic_vanishing(f.one, 5)


def test_deterministic_modulus_and_generator():
    f1 = get_field(3, 2)
    f2 = get_field(3, 2)
    assert f1 is f2  # cached
    assert f1.modulus == get_field(3, 2).modulus
    assert FFElem(f1, list(f1.generator.coeffs)) == f1.generator
