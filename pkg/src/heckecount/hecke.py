"""The Iwahori-Hecke algebra of a Weyl group in its T-basis.

Over the generic domain the coefficients are Laurent polynomials in v with
u = v**2 as the algebra parameter; specialized algebras carry a field and a
field element q instead.  Elements are sparse maps from group-element ids to
coefficients; products decompose the left factor into generators via its
recorded reduced word.
"""

from __future__ import annotations

from dataclasses import dataclass

from .laurent import LaurentPoly
from .linalg import solve_field
from .rootsys import WeylGroup


class HeckeAlgebra:
    """Algebra context: the group, the coefficient domain and the parameter."""

    def __init__(self, group: WeylGroup, field=None, q=None):
        self.group = group
        self.field = field
        if field is None:
            self.q = LaurentPoly.u()
            self.one_coeff = LaurentPoly.one()
        else:
            if q is None:
                raise ValueError("specialized algebra needs a parameter q")
            self.q = q
            self.one_coeff = field.one
        self.q_minus_1 = self.q - self.one_coeff
        self._inverses: list[int] | None = None

    @property
    def is_generic(self) -> bool:
        return self.field is None

    def domain_key(self):
        return ("generic",) if self.field is None else ("field", self.field, self.q)

    def _inverse(self, w: int) -> int:
        if self._inverses is None:
            self._inverses = [self.group.inverse(i) for i in range(self.group.order)]
        return self._inverses[w]

    # -- construction --------------------------------------------------------

    def element(self, coeffs: dict) -> "HeckeElement":
        return HeckeElement(self, {w: c for w, c in coeffs.items() if c})

    def zero(self) -> "HeckeElement":
        return HeckeElement(self, {})

    def one(self) -> "HeckeElement":
        return HeckeElement(self, {self.group.identity: self.one_coeff})

    def t(self, w: int) -> "HeckeElement":
        return HeckeElement(self, {w: self.one_coeff})

    def t_word(self, word) -> "HeckeElement":
        """The product T_{s_1} ... T_{s_m}; a single term if the word is reduced."""
        out = self.one()
        for s in word:
            out = out * self.t(self.group.simple_reflection(s))
        return out

    def scalar(self, c) -> "HeckeElement":
        return self.element({self.group.identity: c})

    # -- products --------------------------------------------------------------

    def _gen_left_mul(self, s: int, coeffs: dict) -> dict:
        """Coefficient map of T_s * (the element with the given map)."""
        g = self.group
        out: dict[int, object] = {}

        def acc(w, c):
            if w in out:
                c = out[w] + c
            if c:
                out[w] = c
            elif w in out:
                del out[w]

        s_elem = g.simple_reflection(s)
        for w, c in coeffs.items():
            sw = g.mult(s_elem, w)
            # l(sw) = l(w) + 1 iff w^{-1}(alpha_s) > 0
            if g.length_up(self._inverse(w), s):
                acc(sw, c)
            else:
                acc(sw, self.q * c)
                acc(w, self.q_minus_1 * c)
        return out

    def multiply(self, a: "HeckeElement", b: "HeckeElement") -> "HeckeElement":
        if a.algebra is not self or b.algebra is not self:
            raise ValueError("operands belong to different algebras")
        g = self.group
        total: dict[int, object] = {}
        for w, c in a.coeffs.items():
            cur = {x: y * c for x, y in b.coeffs.items()}
            for s in reversed(g.words[w]):
                cur = self._gen_left_mul(s, cur)
            for x, y in cur.items():
                if x in total:
                    y = total[x] + y
                if y:
                    total[x] = y
                elif x in total:
                    del total[x]
        return HeckeElement(self, total)

    def tau(self, h: "HeckeElement"):
        """The symmetrizing trace: the coefficient of T_1."""
        zero = LaurentPoly.zero() if self.field is None else self.field.zero
        return h.coeffs.get(self.group.identity, zero)


@dataclass(frozen=True)
class HeckeElement:
    """A sparse T-basis combination; immutable."""

    algebra: HeckeAlgebra
    coeffs: dict

    def __post_init__(self):
        object.__setattr__(
            self, "coeffs", {w: c for w, c in self.coeffs.items() if c}
        )

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, HeckeElement)
            and self.algebra is other.algebra
            and self.coeffs == other.coeffs
        )

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = out[w] + c if w in out else c
        return HeckeElement(self.algebra, out)

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = out[w] - c if w in out else -c
        return HeckeElement(self.algebra, out)

    def __neg__(self) -> "HeckeElement":
        return HeckeElement(self.algebra, {w: -c for w, c in self.coeffs.items()})

    def scale(self, c) -> "HeckeElement":
        return HeckeElement(self.algebra, {w: c * x for w, x in self.coeffs.items()})

    def __mul__(self, other: "HeckeElement") -> "HeckeElement":
        return self.algebra.multiply(self, other)


def t_word(algebra: HeckeAlgebra, word) -> HeckeElement:
    return algebra.t_word(word)


def tau(h: HeckeElement):
    return h.algebra.tau(h)


def specialize(h: HeckeElement, field, z) -> HeckeElement:
    """Push a generic element through theta: v -> z, u -> z**2."""
    if not h.algebra.is_generic:
        raise ValueError("can only specialize generic elements")
    target = HeckeAlgebra(h.algebra.group, field=field, q=z * z)
    return target.element(
        {w: c.evaluate(z, domain=field) for w, c in h.coeffs.items()}
    )


def satisfies_semisimplicity_criterion(q, degrees) -> bool:
    """True iff q**d != 1 for every degree d (split-semisimple fast path)."""
    one = q**0
    return all(q**d != one for d in degrees)


@dataclass
class ClassPolyTable:
    """The class polynomials f_{w,C}: rows indexed by w, columns by class."""

    group: WeylGroup
    entries: list[list[LaurentPoly]]  # [w][class] as u-polynomials

    def entry(self, w: int, class_id: int) -> LaurentPoly:
        return self.entries[w][class_id]

    def to_csv(self) -> str:
        classes = self.group.conjugacy_classes()
        header = "w," + ",".join(f"C{c.class_id}" for c in classes)
        lines = [header]
        for w in range(self.group.order):
            lines.append(
                f"{w}," + ",".join(self.entries[w][c.class_id].to_str("u") for c in classes)
            )
        return "\n".join(lines) + "\n"


def class_polynomials(group: WeylGroup, table) -> ClassPolyTable:
    """Solve chi_V(T_w) = sum_C f_{w,C} chi_V(T_{w_C}) for every w.

    ``table`` is a CharacterTable; the class-value matrix is invertible
    because the generic algebra is split semisimple.  Solutions are checked
    to be integer polynomials in u of degree at most l(w).
    """
    from .laurent import RatFunc

    classes = group.conjugacy_classes()
    nc = len(classes)
    if len(table.labels) != nc:
        raise ValueError("character table size differs from the class count")
    m = [
        [RatFunc(table.class_values[v][c]) if not isinstance(table.class_values[v][c], RatFunc)
         else table.class_values[v][c] for c in range(nc)]
        for v in range(nc)
    ]
    values = table.element_values()  # [V][w] generic character values
    rhs = [[RatFunc(values[v][w]) if not isinstance(values[v][w], RatFunc) else values[v][w]
            for w in range(group.order)] for v in range(nc)]
    sol = solve_field(m, rhs)  # columns indexed by w
    entries: list[list[LaurentPoly]] = []
    for w in range(group.order):
        row = []
        for c in range(nc):
            f = sol[c][w]
            p = f.as_poly()  # raises if not polynomial in v
            if p and (not p.is_u_poly() or p.valuation() < 0 or p.denominator_lcm() != 1):
                raise AssertionError(
                    f"class polynomial f_({w},{c}) = {p.to_str('v')} is not in Z[u]"
                )
            if p and p.degree() > 2 * group.lengths[w]:
                raise AssertionError("class polynomial degree exceeds l(w)")
            row.append(p)
        entries.append(row)
    # minimal representatives must give indicator rows
    for cls in classes:
        for c in range(nc):
            expect = LaurentPoly.one() if c == cls.class_id else LaurentPoly.zero()
            if entries[cls.rep][c] != expect:
                raise AssertionError("representative row is not an indicator row")
    return ClassPolyTable(group, entries)


def central_element(group: WeylGroup, table: ClassPolyTable, class_id: int) -> HeckeElement:
    """z_C = sum_w u^{-l(w)} f_{w,C} T_w over the generic domain."""
    algebra = HeckeAlgebra(group)
    coeffs = {}
    for w in range(group.order):
        f = table.entries[w][class_id]
        if f:
            coeffs[w] = f.shift(-2 * group.lengths[w])
    return algebra.element(coeffs)
