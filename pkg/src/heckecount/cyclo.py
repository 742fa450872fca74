"""The cyclotomic number fields Q(zeta_m), exactly.

Elements are coefficient vectors over Q modulo the m-th cyclotomic
polynomial; since Phi_m is irreducible over Q, an element is zero iff its
vector is zero.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .laurent import cyclotomic_polynomial


class CycloNum:
    """An element of Q(zeta_m) = Q[x]/(Phi_m), x -> zeta_m."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: "CycloField", coeffs):
        v = list(coeffs)
        if len(v) > field.degree:
            v = field._reduce(v)
        v += [Fraction(0)] * (field.degree - len(v))
        self.coeffs = tuple(Fraction(x) for x in v)
        self.field = field

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CycloNum)
            and self.field.conductor == other.field.conductor
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.field.conductor, self.coeffs))

    def __add__(self, other: "CycloNum") -> "CycloNum":
        return CycloNum(self.field, (a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "CycloNum") -> "CycloNum":
        return CycloNum(self.field, (a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "CycloNum":
        return CycloNum(self.field, (-a for a in self.coeffs))

    def __mul__(self, other: "CycloNum") -> "CycloNum":
        a, b = self.coeffs, other.coeffs
        prod = [Fraction(0)] * (2 * len(a) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        return CycloNum(self.field, prod)

    def inverse(self) -> "CycloNum":
        """Extended Euclid against Phi_m in Q[x]."""
        if not self:
            raise ZeroDivisionError("inverse of zero")
        r0, r1 = list(self.field.phi_coeffs), list(self.coeffs)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while any(x for x in r1):
            q, r = _qpoly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _qpoly_sub(s0, _qpoly_mul(q, s1))
        r0 = _qpoly_trim(r0)
        if len(r0) != 1:
            raise AssertionError("modulus not coprime to element")
        inv_lead = 1 / r0[0]
        return CycloNum(self.field, [x * inv_lead for x in s0])

    def __truediv__(self, other: "CycloNum") -> "CycloNum":
        return self * other.inverse()

    def __pow__(self, n: int) -> "CycloNum":
        if n < 0:
            return self.inverse() ** (-n)
        out = self.field.one
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __repr__(self) -> str:
        return f"CycloNum({list(self.coeffs)} @ zeta_{self.field.conductor})"


def _qpoly_trim(p):
    i = len(p)
    while i and not p[i - 1]:
        i -= 1
    return p[:i]


def _qpoly_sub(a, b):
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] -= x
    return out


def _qpoly_mul(a, b):
    a, b = _qpoly_trim(a), _qpoly_trim(b)
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _qpoly_divmod(a, b):
    a, b = list(a), _qpoly_trim(b)
    if not b:
        raise ZeroDivisionError
    quo = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    for i in range(len(a) - len(b), -1, -1):
        f = a[i + len(b) - 1] / b[-1]
        if f:
            quo[i] = f
            for j, y in enumerate(b):
                a[i + j] -= f * y
    return quo, _qpoly_trim(a)


class CycloField:
    """Q(zeta_m); provides the primitive root, zero/one and rational scalars."""

    def __init__(self, conductor: int):
        if conductor < 1:
            raise ValueError("conductor must be positive")
        self.conductor = conductor
        phi = cyclotomic_polynomial(conductor)
        self.degree = phi.degree()
        self.phi_coeffs = tuple(phi.coeff(i) for i in range(self.degree + 1))
        # reduction table for x**k, k = degree .. 2*degree - 2
        self._red: list[tuple[Fraction, ...]] = []
        top = [-c for c in self.phi_coeffs[:-1]]  # x**degree
        cur = list(top)
        self._red.append(tuple(cur))
        for _ in range(self.degree - 2):
            lead = cur[-1]
            cur = [Fraction(0)] + cur[:-1]
            if lead:
                cur = [a + lead * b for a, b in zip(cur, top)]
            self._red.append(tuple(cur))
        self.zero = CycloNum(self, [])
        self.one = CycloNum(self, [Fraction(1)])
        self.zeta = CycloNum(self, [Fraction(0), Fraction(1)] if self.degree > 1
                             else self._red[0] if conductor > 1 else [Fraction(1)])

    def _reduce(self, coeffs) -> list[Fraction]:
        out = [Fraction(x) for x in coeffs[: self.degree]]
        out += [Fraction(0)] * (self.degree - len(out))
        for k in range(self.degree, len(coeffs)):
            c = Fraction(coeffs[k])
            if c:
                for i, r in enumerate(self._red[k - self.degree]):
                    out[i] += c * r
        return out

    def scalar(self, r: Fraction) -> CycloNum:
        return CycloNum(self, [Fraction(r)])

    def __eq__(self, other) -> bool:
        return isinstance(other, CycloField) and self.conductor == other.conductor

    def __hash__(self) -> int:
        return hash(("cyclo", self.conductor))

    def __repr__(self) -> str:
        return f"Q(zeta_{self.conductor})"


@lru_cache(maxsize=None)
def get_cyclo_field(conductor: int) -> CycloField:
    return CycloField(conductor)
