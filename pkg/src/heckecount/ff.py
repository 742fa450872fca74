"""Exact finite fields GF(ell**i) with deterministic modulus and generator.

The modulus is the lexicographically smallest monic irreducible polynomial
of the requested degree (Conway polynomials are deliberately not used: only
the abstract field matters for ranks and counts).
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .laurent import cyclotomic_polynomial

INFINITE = math.inf


def is_prime(n: int) -> bool:
    """Deterministic trial division; all primes in scope are tiny."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division."""
    out: dict[int, int] = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


# -- polynomial helpers over GF(ell), coefficient tuples low-to-high --------


def _poly_trim(p: tuple[int, ...]) -> tuple[int, ...]:
    i = len(p)
    while i and p[i - 1] == 0:
        i -= 1
    return p[:i]


def _poly_mulmod(a, b, mod, ell):
    prod = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % ell
    return _poly_divmod(tuple(prod), mod, ell)[1]


def _poly_divmod(a, b, ell):
    b = _poly_trim(b)
    if not b:
        raise ZeroDivisionError
    inv_lead = pow(b[-1], -1, ell)
    rem = list(a)
    quo = [0] * max(0, len(rem) - len(b) + 1)
    for i in range(len(rem) - len(b), -1, -1):
        f = rem[i + len(b) - 1] * inv_lead % ell
        if f:
            quo[i] = f
            for j, y in enumerate(b):
                rem[i + j] = (rem[i + j] - f * y) % ell
    return _poly_trim(tuple(quo)), _poly_trim(tuple(rem))


def _poly_gcd(a, b, ell):
    a, b = _poly_trim(a), _poly_trim(b)
    while b:
        a, b = b, _poly_divmod(a, b, ell)[1]
    return a


def _poly_powmod(base, n, mod, ell):
    out = (1,)
    base = _poly_divmod(base, mod, ell)[1]
    while n:
        if n & 1:
            out = _poly_mulmod(out, base, mod, ell)
        base = _poly_mulmod(base, base, mod, ell)
        n >>= 1
    return out


def _is_irreducible(mod, ell):
    """mod monic of degree i: no factor of degree <= i/2 iff irreducible."""
    deg = len(mod) - 1
    x = (0, 1)
    for j in range(1, deg // 2 + 1):
        xp = _poly_powmod(x, ell**j, mod, ell)
        coeffs = [0] * max(len(xp), 2)
        for k, v in enumerate(xp):
            coeffs[k] = v
        coeffs[1] = (coeffs[1] - 1) % ell  # x^(ell^j) - x
        diff = _poly_trim(tuple(coeffs))
        g = _poly_gcd(mod, diff, ell)
        if len(g) - 1 > 0:
            return False
    return True


class FFElem:
    """An element of GF(ell**i): a coefficient vector over GF(ell)."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: "FField", coeffs):
        self.field = field
        v = list(coeffs)[: field.degree]
        v += [0] * (field.degree - len(v))
        self.coeffs = tuple(x % field.char for x in v)

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FFElem)
            and self.field is other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((id(self.field), self.coeffs))

    def __add__(self, other: "FFElem") -> "FFElem":
        return FFElem(self.field, (a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "FFElem") -> "FFElem":
        return FFElem(self.field, (a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "FFElem":
        return FFElem(self.field, (-a for a in self.coeffs))

    def __mul__(self, other: "FFElem") -> "FFElem":
        f = self.field
        prod = _poly_mulmod(_poly_trim(self.coeffs), _poly_trim(other.coeffs),
                            f.modulus, f.char)
        return FFElem(f, prod)

    def inverse(self) -> "FFElem":
        if not self:
            raise ZeroDivisionError("inverse of zero field element")
        # a**(q-2) = a**-1
        return self ** (self.field.order - 2)

    def __truediv__(self, other: "FFElem") -> "FFElem":
        return self * other.inverse()

    def __pow__(self, n: int) -> "FFElem":
        f = self.field
        if n < 0:
            return self.inverse() ** (-n)
        out = _poly_powmod(_poly_trim(self.coeffs), n, f.modulus, f.char) if n else (1,)
        return FFElem(f, out)

    def multiplicative_order(self) -> int:
        if not self:
            raise ValueError("order of zero is undefined")
        n = self.field.order - 1
        for p in factorize(n):
            while n % p == 0 and self ** (n // p) == self.field.one:
                n //= p
        return n

    def __repr__(self) -> str:
        f = self.field
        if f.degree == 1:
            return f"FF({self.coeffs[0]} mod {f.char})"
        return f"FF({list(self.coeffs)} in GF({f.char}^{f.degree}))"


class FField:
    """GF(ell**degree) with a fixed modulus and multiplicative generator."""

    def __init__(self, ell: int, degree: int = 1):
        if not is_prime(ell):
            raise ValueError(f"{ell} is not prime")
        if degree < 1:
            raise ValueError("degree must be >= 1")
        self.char = ell
        self.degree = degree
        self.order = ell**degree
        self.modulus = self._find_modulus()
        self.zero = FFElem(self, [])
        self.one = FFElem(self, [1])
        self.generator = self._find_generator()

    def _find_modulus(self) -> tuple[int, ...]:
        ell, deg = self.char, self.degree
        if deg == 1:
            return (0, 1)
        # lexicographically smallest monic irreducible of this degree
        for code in range(ell**deg):
            coeffs = []
            c = code
            for _ in range(deg):
                coeffs.append(c % ell)
                c //= ell
            mod = tuple(coeffs) + (1,)
            if _is_irreducible(mod, ell):
                return mod
        raise AssertionError("no irreducible polynomial found")

    def _find_generator(self) -> FFElem:
        n = self.order - 1
        primes = list(factorize(n))
        for code in range(1, self.order):
            coeffs = []
            c = code
            for _ in range(self.degree):
                coeffs.append(c % self.char)
                c //= self.char
            g = FFElem(self, coeffs)
            if all(g ** (n // p) != self.one for p in primes):
                return g
        raise AssertionError("no generator found")

    def element(self, n: int) -> FFElem:
        """The prime-field element n mod ell."""
        return FFElem(self, [n])

    def scalar(self, r: Fraction) -> FFElem:
        r = Fraction(r)
        if r.denominator % self.char == 0:
            raise ZeroDivisionError(f"denominator {r.denominator} vanishes mod {self.char}")
        val = r.numerator * pow(r.denominator, -1, self.char)
        return FFElem(self, [val])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FField)
            and self.char == other.char
            and self.degree == other.degree
        )

    def __hash__(self) -> int:
        return hash((self.char, self.degree))

    def __repr__(self) -> str:
        return f"GF({self.char}^{self.degree})" if self.degree > 1 else f"GF({self.char})"


@lru_cache(maxsize=None)
def get_field(ell: int, degree: int = 1) -> FField:
    return FField(ell, degree)


def min_extension_degree(ell: int, target_order: int) -> int:
    """Smallest i with target_order | ell**i - 1 (order of ell mod target)."""
    if target_order < 1:
        raise ValueError("target order must be positive")
    if math.gcd(ell, target_order) != 1:
        raise ValueError(
            f"no extension of GF({ell}) has an element of order {target_order}: "
            f"gcd({ell}, {target_order}) != 1"
        )
    i, r = 1, ell % target_order
    while r != 1 % target_order:
        r = r * ell % target_order
        i += 1
    return i


def element_of_order(field: FField, n: int) -> FFElem:
    """field.generator ** ((order-1)/n), verified to have exact order n."""
    if n < 1 or (field.order - 1) % n != 0:
        raise ValueError(f"{n} does not divide |{field!r}^x| = {field.order - 1}")
    z = field.generator ** ((field.order - 1) // n)
    if z**n != field.one:
        raise AssertionError("order verification failed")
    for p in factorize(n):
        if z ** (n // p) == field.one:
            raise AssertionError("order verification failed")
    return z


def multiplicative_e(q):
    """Smallest i >= 2 with 1 + q + ... + q**(i-1) = 0, or inf if none.

    For q = 1 in characteristic ell this is ell; for q != 1 it is the
    multiplicative order of q when finite.
    """
    if not q:
        raise ValueError("e is undefined at q = 0")
    if isinstance(q, FFElem):
        if q == q.field.one:
            return q.field.char
        return q.multiplicative_order()
    # cyclotomic-field element: the only roots of unity in Q(zeta_m) are
    # the (lcm(2, m))-th roots, so a bounded order check is exhaustive
    field = q.field
    one = field.one
    bound = field.conductor if field.conductor % 2 == 0 else 2 * field.conductor
    if q ** bound != one:
        return INFINITE
    if q == one:
        return INFINITE
    order = 1
    p = q
    while p != one:
        p = p * q
        order += 1
    return order


def cyclotomic_vanishing(q: FFElem, d: int) -> bool:
    """Whether Phi_d(q) = 0; asserts the d = e * ell**n vanishing law."""
    if d < 2:
        raise ValueError("d must be >= 2")
    if not q:
        raise ValueError("q must be nonzero")
    field = q.field
    phi = cyclotomic_polynomial(d)
    value = field.zero
    for exp, coeff in phi.c.items():
        value = value + field.scalar(coeff) * q**exp
    actual = not bool(value)

    ell = field.char
    dd = d
    n = 0
    while dd % ell == 0:
        dd //= ell
        n += 1
    if q == field.one:
        predicted = dd == 1 and n >= 1
    else:
        predicted = dd == multiplicative_e(q)
    if actual != predicted:
        raise AssertionError(
            f"cyclotomic vanishing law failed: Phi_{d}({q!r}) zero={actual}, "
            f"predicted {predicted}"
        )
    return actual
