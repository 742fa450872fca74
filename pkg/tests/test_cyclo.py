from fractions import Fraction

import pytest

from heckecount.cyclo import get_cyclo_field
from heckecount.laurent import cyclotomic_polynomial


def test_zeta_order():
    for m in (3, 4, 6, 8, 12):
        F = get_cyclo_field(m)
        z = F.zeta
        assert z ** m == F.one
        for d in range(1, m):
            assert z ** d != F.one


def test_minimal_polynomial_vanishes():
    for m in (4, 6, 12):
        F = get_cyclo_field(m)
        assert not cyclotomic_polynomial(m).evaluate(F.zeta, domain=F)


def test_field_axioms_and_inverse():
    F = get_cyclo_field(12)
    z = F.zeta
    x = z + F.scalar(Fraction(3, 2))
    assert x * x.inverse() == F.one
    assert (x - x) == F.zero
    assert x * (z + F.one) == (z + F.one) * x
    with pytest.raises(ZeroDivisionError):
        F.zero.inverse()


def test_quadratic_identity():
    # zeta_6 satisfies z^2 = z - 1
    F = get_cyclo_field(6)
    z = F.zeta
    assert z * z == z - F.one


def test_scalar_embedding():
    F = get_cyclo_field(8)
    assert F.scalar(2) + F.scalar(-2) == F.zero
    assert F.scalar(Fraction(1, 3)) * F.scalar(3) == F.one
