"""Exact Laurent polynomials over Q, and the rational functions built on them.

The whole package uses the convention u = v**2: every polynomial is stored
with exponents in v, and callers working at the u level double their
exponents (see :meth:`LaurentPoly.compose_square`).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping


class LaurentPoly:
    """A Laurent polynomial in v with rational coefficients.

    Immutable; canonical form stores no zero coefficients, so equality of
    coefficient maps is equality of polynomials.
    """

    __slots__ = ("c",)

    def __init__(self, coeffs: Mapping[int, Fraction] | None = None):
        c = {}
        if coeffs:
            for e, x in coeffs.items():
                x = Fraction(x)
                if x:
                    c[int(e)] = x
        self.c = c

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly()

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly({0: Fraction(1)})

    @staticmethod
    def monomial(exp: int, coeff=1) -> "LaurentPoly":
        return LaurentPoly({exp: Fraction(coeff)})

    @staticmethod
    def v() -> "LaurentPoly":
        return LaurentPoly.monomial(1)

    @staticmethod
    def u(power: int = 1) -> "LaurentPoly":
        """u**power = v**(2*power)."""
        return LaurentPoly.monomial(2 * power)

    @staticmethod
    def from_int(n) -> "LaurentPoly":
        return LaurentPoly({0: Fraction(n)})

    @staticmethod
    def from_u_coeffs(coeffs: Mapping[int, Fraction]) -> "LaurentPoly":
        """Build from a map {u-exponent: coefficient}."""
        return LaurentPoly({2 * e: Fraction(x) for e, x in coeffs.items()})

    # -- queries -----------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.c)

    def is_zero(self) -> bool:
        return not self.c

    def is_one(self) -> bool:
        return self.c == {0: Fraction(1)}

    def is_monomial(self) -> bool:
        return len(self.c) == 1

    def degree(self) -> int:
        """Largest v-exponent; raises on the zero polynomial."""
        return max(self.c)

    def valuation(self) -> int:
        """Smallest v-exponent; raises on the zero polynomial."""
        return min(self.c)

    def is_u_poly(self) -> bool:
        """True when only even v-exponents occur (a polynomial in u)."""
        return all(e % 2 == 0 for e in self.c)

    def coeff(self, exp: int) -> Fraction:
        return self.c.get(exp, Fraction(0))

    def leading_coeff(self) -> Fraction:
        return self.c[self.degree()]

    def constant(self) -> Fraction:
        return self.coeff(0)

    def denominator_lcm(self) -> int:
        """LCM of the coefficient denominators (1 for the zero polynomial)."""
        d = 1
        for x in self.c.values():
            g = _gcd(d, x.denominator)
            d = d // g * x.denominator
        return d

    def content(self) -> Fraction:
        """GCD of numerators over LCM of denominators; 0 for zero."""
        if not self.c:
            return Fraction(0)
        num = 0
        for x in self.c.values():
            num = _gcd(num, x.numerator)
        return Fraction(abs(num), self.denominator_lcm())

    # -- arithmetic --------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self.c == other.c

    def __hash__(self) -> int:
        return hash(frozenset(self.c.items()))

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -x for e, x in self.c.items()})

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        c = dict(self.c)
        for e, x in other.c.items():
            y = c.get(e, Fraction(0)) + x
            if y:
                c[e] = y
            elif e in c:
                del c[e]
        out = LaurentPoly.__new__(LaurentPoly)
        out.c = c
        return out

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        c: dict[int, Fraction] = {}
        for e1, x1 in self.c.items():
            for e2, x2 in other.c.items():
                e = e1 + e2
                y = c.get(e, Fraction(0)) + x1 * x2
                if y:
                    c[e] = y
                elif e in c:
                    del c[e]
        out = LaurentPoly.__new__(LaurentPoly)
        out.c = c
        return out

    def scale(self, r) -> "LaurentPoly":
        r = Fraction(r)
        if not r:
            return LaurentPoly.zero()
        return LaurentPoly({e: x * r for e, x in self.c.items()})

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by v**k."""
        return LaurentPoly({e + k: x for e, x in self.c.items()})

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if not self.is_monomial():
                raise ValueError("negative powers only for monomials")
            ((e, x),) = self.c.items()
            return LaurentPoly({e * n: x**n})
        out = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def compose_square(self) -> "LaurentPoly":
        """p(v) -> p(v**2); converts a polynomial in v into one in u."""
        return LaurentPoly({2 * e: x for e, x in self.c.items()})

    def evaluate(self, x, *, domain=None):
        """Evaluate at v = x, where x lives in some exact domain.

        ``domain`` must provide ``one`` and ``scalar(Fraction)``; x must
        support * and ** (with negative exponents when needed).  Without a
        domain, plain Python arithmetic on Fractions is used.
        """
        if domain is None:
            total = Fraction(0)
            for e, cf in self.c.items():
                total += cf * Fraction(x) ** e
            return total
        total = domain.scalar(Fraction(0))
        for e, cf in self.c.items():
            total = total + domain.scalar(cf) * x**e
        return total

    def substitute(self, other: "LaurentPoly") -> "LaurentPoly":
        """p(v) -> p(other); other must be invertible if p is Laurent."""
        out = LaurentPoly.zero()
        for e, cf in self.c.items():
            out = out + (other**e).scale(cf)
        return out

    # -- division ----------------------------------------------------------

    def divmod_poly(self, other: "LaurentPoly") -> tuple["LaurentPoly", "LaurentPoly"]:
        """Polynomial division.  Both operands must have valuation >= 0."""
        if not other:
            raise ZeroDivisionError("division by zero polynomial")
        if self and self.valuation() < 0 or other.valuation() < 0:
            raise ValueError("divmod_poly needs non-negative exponents")
        rem = dict(self.c)
        quo: dict[int, Fraction] = {}
        dlead = other.degree()
        dcoef = other.c[dlead]
        while rem:
            rdeg = max(rem)
            if rdeg < dlead:
                break
            f = rem[rdeg] / dcoef
            quo[rdeg - dlead] = f
            for e, x in other.c.items():
                k = e + rdeg - dlead
                y = rem.get(k, Fraction(0)) - f * x
                if y:
                    rem[k] = y
                elif k in rem:
                    del rem[k]
        return LaurentPoly(quo), LaurentPoly(rem)

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact division in Q[v, 1/v]; raises ValueError if not divisible."""
        if not other:
            raise ZeroDivisionError("division by zero polynomial")
        if not self:
            return LaurentPoly.zero()
        sa, sb = self.valuation(), other.valuation()
        a = self.shift(-sa)
        b = other.shift(-sb)
        q, r = a.divmod_poly(b)
        if r:
            raise ValueError("not exactly divisible")
        return q.shift(sa - sb)

    def divides(self, other: "LaurentPoly") -> bool:
        """True iff self divides other in Q[v, 1/v]."""
        if not self:
            return not other
        try:
            other.exact_div(self)
            return True
        except ValueError:
            return False

    def monic(self) -> "LaurentPoly":
        if not self:
            return self
        return self.scale(1 / self.leading_coeff())

    def derivative(self) -> "LaurentPoly":
        return LaurentPoly({e - 1: x * e for e, x in self.c.items() if e})

    # -- display -----------------------------------------------------------

    def to_str(self, var: str = "u") -> str:
        """Canonical string, e.g. "u^3-2u+1".

        With var="u" the polynomial must have even v-exponents only.
        """
        if not self.c:
            return "0"
        if var == "u":
            if not self.is_u_poly():
                return self.to_str("v")
            items = sorted(((e // 2, x) for e, x in self.c.items()), reverse=True)
        else:
            items = sorted(self.c.items(), reverse=True)
        parts = []
        for e, x in items:
            sign = "-" if x < 0 else "+"
            mag = -x if x < 0 else x
            if e == 0:
                body = str(mag)
            else:
                head = var if e == 1 else f"{var}^{e}"
                body = head if mag == 1 else f"{mag}{head}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += sign + body
        return out

    def __repr__(self) -> str:
        return f"LaurentPoly({self.to_str('v')})"

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {str(e): f"{x.numerator}/{x.denominator}" for e, x in sorted(self.c.items())}

    @staticmethod
    def from_json(data: Mapping[str, str]) -> "LaurentPoly":
        return LaurentPoly({int(e): Fraction(x) for e, x in data.items()})


def _gcd(a: int, b: int) -> int:
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


def poly_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Monic GCD in Q[v] of the polynomial parts (v-valuations stripped)."""
    if a:
        a = a.shift(-a.valuation())
    if b:
        b = b.shift(-b.valuation())
    while b:
        _, r = a.divmod_poly(b)
        a, b = b, r
    return a.monic() if a else a


@lru_cache(maxsize=None)
def cyclotomic_polynomial(d: int) -> LaurentPoly:
    """The d-th cyclotomic polynomial, as a polynomial in v."""
    if d < 1:
        raise ValueError("d must be positive")
    num = LaurentPoly({d: Fraction(1), 0: Fraction(-1)})
    for dd in range(1, d):
        if d % dd == 0:
            num = num.exact_div(cyclotomic_polynomial(dd))
    return num


def phi_split_check(e: int) -> list[LaurentPoly]:
    """Factor Phi_e(v**2) into cyclotomic polynomials in v.

    Returns [Phi_2e] for even e and [Phi_e, Phi_2e] for odd e, after
    asserting the product matches Phi_e evaluated at v**2.
    """
    if e < 2:
        raise ValueError("e must be >= 2")
    lhs = cyclotomic_polynomial(e).compose_square()
    if e % 2 == 0:
        factors = [cyclotomic_polynomial(2 * e)]
    else:
        factors = [cyclotomic_polynomial(e), cyclotomic_polynomial(2 * e)]
    prod = LaurentPoly.one()
    for f in factors:
        prod = prod * f
    if prod != lhs:
        raise AssertionError(f"cyclotomic splitting identity failed for e={e}")
    return factors


def phi_adic_valuation(p: LaurentPoly, d: int) -> tuple[int, LaurentPoly]:
    """Write p = Phi_d(v)**k * cofactor with Phi_d not dividing the cofactor."""
    if not p:
        raise ValueError("phi-adic valuation of zero is undefined")
    phi = cyclotomic_polynomial(d)
    k = 0
    while True:
        try:
            q = p.exact_div(phi)
        except ValueError:
            return k, p
        p = q
        k += 1


class RatFunc:
    """An element of Q(v), stored as num/den in canonical form.

    The denominator is a monic polynomial with nonzero constant term and no
    common factor with the numerator; v-units live in the numerator.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly | None = None):
        if den is None:
            den = LaurentPoly.one()
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            self.num = LaurentPoly.zero()
            self.den = LaurentPoly.one()
            return
        shift = num.valuation() - den.valuation()
        n = num.shift(-num.valuation())
        d = den.shift(-den.valuation())
        g = poly_gcd(n, d)
        if not g.is_one():
            n = n.exact_div(g)
            d = d.exact_div(g)
        lc = d.leading_coeff()
        if lc != 1:
            n = n.scale(1 / lc)
            d = d.scale(1 / lc)
        self.num = n.shift(shift)
        self.den = d

    @staticmethod
    def from_poly(p: LaurentPoly) -> "RatFunc":
        return RatFunc(p)

    @staticmethod
    def zero() -> "RatFunc":
        return RatFunc(LaurentPoly.zero())

    @staticmethod
    def one() -> "RatFunc":
        return RatFunc(LaurentPoly.one())

    @staticmethod
    def u(power: int = 1) -> "RatFunc":
        return RatFunc(LaurentPoly.u(power))

    def is_poly(self) -> bool:
        return self.den.is_one()

    def as_poly(self) -> LaurentPoly:
        if not self.den.is_one():
            raise ValueError(f"not a Laurent polynomial: {self!r}")
        return self.num

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            other = RatFunc(other)
        return (
            isinstance(other, RatFunc)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __neg__(self) -> "RatFunc":
        out = RatFunc.__new__(RatFunc)
        out.num = -self.num
        out.den = self.den
        return out

    def __add__(self, other: "RatFunc") -> "RatFunc":
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: "RatFunc") -> "RatFunc":
        return RatFunc(self.num * other.den - other.num * self.den, self.den * other.den)

    def __mul__(self, other: "RatFunc") -> "RatFunc":
        return RatFunc(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "RatFunc") -> "RatFunc":
        if not other.num:
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def inverse(self) -> "RatFunc":
        return RatFunc.one() / self

    def __pow__(self, n: int) -> "RatFunc":
        if n < 0:
            return self.inverse() ** (-n)
        out = RatFunc.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale(self, r) -> "RatFunc":
        out = RatFunc.__new__(RatFunc)
        out.num = self.num.scale(r)
        out.den = self.den if out.num else LaurentPoly.one()
        return out

    def to_str(self, var: str = "u") -> str:
        if self.den.is_one():
            return self.num.to_str(var)
        return f"({self.num.to_str(var)})/({self.den.to_str(var)})"

    def __repr__(self) -> str:
        return f"RatFunc({self.to_str('v')})"
