"""Root systems and fully enumerated finite Weyl groups at desk scale.

Groups are built from an explicit integer root system: each element is
stored as a permutation of the full root set, which gives O(1) length
(count positive roots sent negative) and fast conjugation.  One reduced
word per element is recorded during the breadth-first enumeration.

The exceptional types E6/E7/E8 are served from stored degree/bad-prime
tables only; ``build_group`` refuses them via the order cap.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .laurent import LaurentPoly

ROOTSYS_CACHE_VERSION = 1
DEFAULT_MAX_ORDER = 10_000

BAD_PRIMES = {
    "A": frozenset(),
    "B": frozenset({2}),
    "D": frozenset({2}),
    "G2": frozenset({2, 3}),
    "F4": frozenset({2, 3}),
    "E6": frozenset({2, 3}),
    "E7": frozenset({2, 3}),
    "E8": frozenset({2, 3, 5}),
}

# stored data for the exceptional types that are never built
EXCEPTIONAL_DEGREES = {
    "E6": (2, 5, 6, 8, 9, 12),
    "E7": (2, 6, 8, 10, 12, 14, 18),
    "E8": (2, 8, 12, 14, 18, 20, 24, 30),
}


class UnsupportedScaleError(ValueError):
    """Raised when a requested group exceeds the construction cap."""


@dataclass(frozen=True)
class CoxeterDatum:
    """A Coxeter graph: family label, rank, and the Coxeter matrix."""

    family: str
    rank: int
    coxeter_matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        m = self.coxeter_matrix
        if len(m) != self.rank or any(len(row) != self.rank for row in m):
            raise ValueError("Coxeter matrix shape must match rank")
        for i in range(self.rank):
            if m[i][i] != 1:
                raise ValueError("Coxeter matrix diagonal must be 1")
            for j in range(self.rank):
                if m[i][j] != m[j][i]:
                    raise ValueError("Coxeter matrix must be symmetric")
                if i != j and m[i][j] not in (2, 3, 4, 6):
                    raise ValueError(f"unsupported bond m(s,t) = {m[i][j]}")

    @property
    def label(self) -> str:
        return f"{self.family}{self.rank}" if self.family in ("A", "B", "D") else self.family


def _chain_matrix(rank: int, bonds: dict[tuple[int, int], int]) -> tuple[tuple[int, ...], ...]:
    m = [[2] * rank for _ in range(rank)]
    for i in range(rank):
        m[i][i] = 1
    for (i, j), val in bonds.items():
        m[i][j] = m[j][i] = val
    return tuple(tuple(row) for row in m)


def make_datum(family: str, rank: int) -> CoxeterDatum:
    """The Coxeter datum for one Table-1 family at the given rank."""
    if family == "A":
        if rank < 1:
            raise ValueError("A_n needs n >= 1")
        bonds = {(i, i + 1): 3 for i in range(rank - 1)}
        return CoxeterDatum("A", rank, _chain_matrix(rank, bonds))
    if family == "B":
        if rank < 2:
            raise ValueError("B_n needs n >= 2")
        bonds = {(i, i + 1): 3 for i in range(1, rank - 1)}
        bonds[(0, 1)] = 4
        return CoxeterDatum("B", rank, _chain_matrix(rank, bonds))
    if family == "D":
        if rank < 4:
            raise ValueError("D_n needs n >= 4")
        bonds = {(i, i + 1): 3 for i in range(2, rank - 1)}
        bonds[(0, 2)] = 3
        bonds[(1, 2)] = 3
        return CoxeterDatum("D", rank, _chain_matrix(rank, bonds))
    if family == "G2":
        return CoxeterDatum("G2", 2, _chain_matrix(2, {(0, 1): 6}))
    if family == "F4":
        bonds = {(0, 1): 3, (1, 2): 4, (2, 3): 3}
        return CoxeterDatum("F4", 4, _chain_matrix(4, bonds))
    raise ValueError(f"unknown family {family!r}")


def parse_type(label: str) -> str:
    """Normalize a type label like 'A3', 'b2', 'I2(6)'; E types allowed."""
    s = label.strip().upper().replace(" ", "")
    m = re.fullmatch(r"I2\((\d+)\)", s)
    if m:
        mm = int(m.group(1))
        dihedral = {3: "A2", 4: "B2", 6: "G2"}
        if mm not in dihedral:
            raise ValueError(f"I2({mm}) is not crystallographic; supported m: 3, 4, 6")
        return dihedral[mm]
    if s in ("G2", "F4", "E6", "E7", "E8"):
        return s
    m = re.fullmatch(r"([ABD])(\d+)", s)
    if not m:
        raise ValueError(f"cannot parse group type {label!r}")
    return f"{m.group(1)}{int(m.group(2))}"


def datum_from_label(label: str) -> CoxeterDatum:
    s = parse_type(label)
    if s in ("G2", "F4"):
        return make_datum(s, int(s[1]))
    if s.startswith("E"):
        raise UnsupportedScaleError(
            f"type {s} is served from stored tables only (order {known_order_label(s)})"
        )
    return make_datum(s[0], int(s[1:]))


def known_degrees(datum_or_label) -> tuple[int, ...]:
    """Reflection degrees from the classical formulas / stored tables."""
    if isinstance(datum_or_label, CoxeterDatum):
        family, n = datum_or_label.family, datum_or_label.rank
    else:
        s = parse_type(datum_or_label)
        if s in EXCEPTIONAL_DEGREES:
            return EXCEPTIONAL_DEGREES[s]
        family, n = (s, int(s[1])) if s in ("G2", "F4") else (s[0], int(s[1:]))
    if family == "A":
        return tuple(range(2, n + 2))
    if family == "B":
        return tuple(range(2, 2 * n + 1, 2))
    if family == "D":
        return tuple(sorted(list(range(2, 2 * n - 1, 2)) + [n]))
    if family == "G2":
        return (2, 6)
    if family == "F4":
        return (2, 6, 8, 12)
    return EXCEPTIONAL_DEGREES[family]


def known_order(datum_or_label) -> int:
    order = 1
    for d in known_degrees(datum_or_label):
        order *= d
    return order


def known_order_label(label: str) -> int:
    return known_order(label)


def bad_primes(datum_or_label) -> frozenset[int]:
    """Stored bad-prime table per family."""
    if isinstance(datum_or_label, CoxeterDatum):
        return BAD_PRIMES[datum_or_label.family]
    s = parse_type(datum_or_label)
    key = s if s in BAD_PRIMES else s[0]
    return BAD_PRIMES[key]


# -- root systems ------------------------------------------------------------


def _simple_roots(datum: CoxeterDatum) -> list[tuple[int, ...]]:
    family, n = datum.family, datum.rank

    def e(i: int, dim: int, scale: int = 1) -> list[int]:
        v = [0] * dim
        v[i] = scale
        return v

    if family == "A":
        return [
            tuple(x - y for x, y in zip(e(i, n + 1), e(i + 1, n + 1)))
            for i in range(n)
        ]
    if family == "B":
        out = [tuple(e(0, n))]
        for k in range(1, n):
            out.append(tuple(x - y for x, y in zip(e(k, n), e(k - 1, n))))
        return out
    if family == "D":
        out = [
            tuple(x + y for x, y in zip(e(0, n), e(1, n))),
            tuple(y - x for x, y in zip(e(0, n), e(1, n))),
        ]
        for k in range(2, n):
            out.append(tuple(y - x for x, y in zip(e(k - 1, n), e(k, n))))
        return out
    if family == "G2":
        return [(1, -1, 0), (-2, 1, 1)]
    if family == "F4":
        # doubled standard roots, to keep all coordinates integral
        return [
            (0, 2, -2, 0),
            (0, 0, 2, -2),
            (0, 0, 0, 2),
            (1, -1, -1, -1),
        ]
    raise ValueError(f"no root system for family {family!r}")


def _dot(a, b) -> int:
    return sum(x * y for x, y in zip(a, b))


def _reflect(beta, alpha):
    """s_alpha(beta) = beta - <beta, alpha^v> alpha, with integer Cartan number."""
    num = 2 * _dot(beta, alpha)
    den = _dot(alpha, alpha)
    if num % den != 0:
        raise AssertionError("non-integral Cartan number; root data corrupt")
    c = num // den
    return tuple(b - c * a for b, a in zip(beta, alpha))


def _generate_roots(simples: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    roots = set(simples)
    frontier = list(simples)
    while frontier:
        nxt = []
        for beta in frontier:
            for alpha in simples:
                r = _reflect(beta, alpha)
                if r not in roots:
                    roots.add(r)
                    nxt.append(r)
        frontier = nxt
    return sorted(roots)


def _positivity(roots, simples) -> list[bool]:
    """A root is positive iff its simple-basis coefficients are >= 0."""
    n = len(simples)
    flags = []
    for beta in roots:
        # solve sum x_j alpha_j = beta by Gaussian elimination over Q
        cols = list(zip(*simples))  # rows indexed by ambient coordinate
        aug = [[Fraction(c) for c in row] + [Fraction(b)] for row, b in zip(cols, beta)]
        x = [Fraction(0)] * n
        r = 0
        pivots = []
        for col in range(n):
            piv = next((i for i in range(r, len(aug)) if aug[i][col]), None)
            if piv is None:
                continue
            aug[r], aug[piv] = aug[piv], aug[r]
            inv = 1 / aug[r][col]
            aug[r] = [a * inv for a in aug[r]]
            for i in range(len(aug)):
                if i != r and aug[i][col]:
                    f = aug[i][col]
                    aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
            pivots.append(col)
            r += 1
        for i, col in enumerate(pivots):
            x[col] = aug[i][n]
        if any(aug[i][n] for i in range(r, len(aug))):
            raise AssertionError("root outside simple-root span")
        if not any(x):
            raise AssertionError("zero root")
        signs = {c > 0 for c in x if c}
        if len(signs) != 1:
            raise AssertionError("mixed-sign root coefficients")
        flags.append(signs.pop())
    return flags


# -- the group ---------------------------------------------------------------


@dataclass(frozen=True)
class ConjClassData:
    """One conjugacy class: members, size and a minimal-length representative."""

    class_id: int
    members: tuple[int, ...]
    size: int
    rep: int
    rep_word: tuple[int, ...]


class WeylGroup:
    """A fully enumerated finite Weyl group.

    Elements are permutations of the root index set; element 0 is the
    identity and elements appear in breadth-first (length-graded) order.
    """

    def __init__(self, datum: CoxeterDatum, max_order: int = DEFAULT_MAX_ORDER):
        projected = known_order(datum)
        if projected > max_order:
            raise UnsupportedScaleError(
                f"group of projected order {projected} exceeds the cap {max_order}"
            )
        self.datum = datum
        self.rank = datum.rank
        simples = _simple_roots(datum)
        self.roots = _generate_roots(simples)
        root_index = {r: i for i, r in enumerate(self.roots)}
        self.simple_root_indices = tuple(root_index[s] for s in simples)
        pos_flags = _positivity(self.roots, simples)
        self.positive_indices = frozenset(i for i, f in enumerate(pos_flags) if f)
        assert 2 * len(self.positive_indices) == len(self.roots)

        # generator permutations of the root set
        self.gen_perms: list[tuple[int, ...]] = []
        for alpha in simples:
            perm = tuple(root_index[_reflect(beta, alpha)] for beta in self.roots)
            self.gen_perms.append(perm)

        self._bfs(projected)
        self._verify(simples)
        self._classes: list[ConjClassData] | None = None
        self._class_of: list[int] | None = None

    # construction ----------------------------------------------------------

    def _bfs(self, projected: int) -> None:
        nroots = len(self.roots)
        identity = tuple(range(nroots))
        self.perms: list[tuple[int, ...]] = [identity]
        self.index: dict[tuple[int, ...], int] = {identity: 0}
        self.lengths: list[int] = [0]
        self.words: list[tuple[int, ...]] = [()]
        self.parents: list[int] = [-1]
        self.last_gens: list[int] = [-1]
        frontier = [0]
        while frontier:
            nxt = []
            for w in frontier:
                pw = self.perms[w]
                for s, ps in enumerate(self.gen_perms):
                    # w * s acts by s first, then w
                    p = tuple(pw[i] for i in ps)
                    if p not in self.index:
                        self.index[p] = len(self.perms)
                        self.perms.append(p)
                        self.lengths.append(self.lengths[w] + 1)
                        self.words.append(self.words[w] + (s,))
                        self.parents.append(w)
                        self.last_gens.append(s)
                        nxt.append(self.index[p])
            frontier = nxt
        self.order = len(self.perms)
        if self.order != projected:
            raise AssertionError(f"enumerated {self.order} elements, expected {projected}")
        self.identity = 0
        self.longest = max(range(self.order), key=lambda i: self.lengths[i])

    def _verify(self, simples) -> None:
        for i, p in enumerate(self.perms):
            neg = sum(1 for r in self.positive_indices if p[r] not in self.positive_indices)
            if neg != self.lengths[i]:
                raise AssertionError("BFS depth disagrees with root-counting length")
        # Coxeter matrix check: order of s*t equals m(s,t)
        for s in range(self.rank):
            for t in range(self.rank):
                st = self.mult(self.simple_reflection(s), self.simple_reflection(t))
                order, x = 1, st
                while x != self.identity:
                    x = self.mult(x, st)
                    order += 1
                if order != self.datum.coxeter_matrix[s][t]:
                    raise AssertionError("Coxeter matrix mismatch")

    # queries -----------------------------------------------------------------

    def simple_reflection(self, s: int) -> int:
        return self.index[self.gen_perms[s]]

    def mult(self, i: int, j: int) -> int:
        pi, pj = self.perms[i], self.perms[j]
        return self.index[tuple(pi[k] for k in pj)]

    def inverse(self, i: int) -> int:
        p = self.perms[i]
        inv = [0] * len(p)
        for a, b in enumerate(p):
            inv[b] = a
        return self.index[tuple(inv)]

    def length_up(self, i: int, s: int) -> bool:
        """True iff l(w s) = l(w) + 1, i.e. w(alpha_s) is positive."""
        return self.perms[i][self.simple_root_indices[s]] in self.positive_indices

    def word_to_element(self, word) -> int:
        w = self.identity
        for s in word:
            w = self.mult(w, self.simple_reflection(s))
        return w

    # derived data -------------------------------------------------------------

    def poincare_polynomial(self) -> LaurentPoly:
        """P_W = sum over w of u^l(w)."""
        counts: dict[int, int] = {}
        for l in self.lengths:
            counts[l] = counts.get(l, 0) + 1
        return LaurentPoly.from_u_coeffs(counts)

    def degrees(self) -> tuple[int, ...]:
        degs = degrees_from_poincare(self.poincare_polynomial(), self.rank)
        prod = 1
        for d in degs:
            prod *= d
        if prod != self.order:
            raise AssertionError("product of degrees differs from group order")
        return degs

    def conjugacy_classes(self) -> list[ConjClassData]:
        if self._classes is not None:
            return self._classes
        assigned = [-1] * self.order
        classes: list[ConjClassData] = []
        for seed in range(self.order):
            if assigned[seed] >= 0:
                continue
            cid = len(classes)
            orbit = [seed]
            assigned[seed] = cid
            queue = [seed]
            while queue:
                x = queue.pop()
                px = self.perms[x]
                for ps in self.gen_perms:
                    p = tuple(ps[px[ps[i]]] for i in range(len(px)))
                    y = self.index[p]
                    if assigned[y] < 0:
                        assigned[y] = cid
                        orbit.append(y)
                        queue.append(y)
            orbit.sort()
            rep = min(orbit, key=lambda i: (self.lengths[i], i))
            classes.append(
                ConjClassData(cid, tuple(orbit), len(orbit), rep, self.words[rep])
            )
        if sum(c.size for c in classes) != self.order:
            raise AssertionError("classes do not partition the group")
        self._classes = classes
        self._class_of = assigned
        return classes

    def class_of(self, i: int) -> int:
        self.conjugacy_classes()
        return self._class_of[i]

    # serialization -------------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "version": ROOTSYS_CACHE_VERSION,
            "datum": {
                "family": self.datum.family,
                "rank": self.datum.rank,
                "coxeter_matrix": [list(r) for r in self.datum.coxeter_matrix],
            },
            "order": self.order,
            "degrees": list(self.degrees()),
            "lengths": list(self.lengths),
            "words": [list(w) for w in self.words],
            "classes": [
                {
                    "id": c.class_id,
                    "members": list(c.members),
                    "size": c.size,
                    "rep": c.rep,
                    "rep_word": list(c.rep_word),
                }
                for c in self.conjugacy_classes()
            ],
        }


def build_group(datum: CoxeterDatum, max_order: int = DEFAULT_MAX_ORDER) -> WeylGroup:
    """Construct and fully enumerate the Weyl group of the datum."""
    return WeylGroup(datum, max_order=max_order)


def group_from_json(data: dict, max_order: int = DEFAULT_MAX_ORDER) -> WeylGroup:
    """Rebuild a group from its cache record and check it against the record."""
    if data.get("version") != ROOTSYS_CACHE_VERSION:
        raise ValueError(f"unsupported cache version {data.get('version')!r}")
    d = data["datum"]
    datum = CoxeterDatum(
        d["family"], d["rank"], tuple(tuple(r) for r in d["coxeter_matrix"])
    )
    w = build_group(datum, max_order=max_order)
    if w.order != data["order"] or list(w.lengths) != list(data["lengths"]):
        raise ValueError("cache record inconsistent with rebuilt group")
    return w


def poincare_polynomial(w: WeylGroup) -> LaurentPoly:
    return w.poincare_polynomial()


def conjugacy_classes(w: WeylGroup) -> list[ConjClassData]:
    return w.conjugacy_classes()


def degrees(w: WeylGroup) -> tuple[int, ...]:
    return w.degrees()


def degrees_from_poincare(p_w: LaurentPoly, rank: int) -> tuple[int, ...]:
    """Recover the degree multiset from (u-1)^rank * P_W = prod (u^d_i - 1).

    Uses cyclotomic multiplicities: Phi_d divides u^d' - 1 once for each
    degree d' that is a multiple of d, so the multiplicity of d as a degree
    can be read off top-down.
    """
    from .laurent import cyclotomic_polynomial

    u_minus_1 = LaurentPoly.u() - LaurentPoly.one()
    q = p_w * u_minus_1**rank
    max_d = q.degree() // 2  # degree in u
    mult: dict[int, int] = {}
    for d in range(1, max_d + 1):
        phi_u = cyclotomic_polynomial(d).compose_square()
        count = 0
        rem = q
        while phi_u.divides(rem):
            rem = rem.exact_div(phi_u)
            count += 1
        mult[d] = count
    chosen: list[int] = []
    for d in range(max_d, 0, -1):
        take = mult[d] - sum(1 for dd in chosen if dd % d == 0)
        if take < 0:
            raise AssertionError("degree recovery failed")
        chosen.extend([d] * take)
    chosen.sort()
    if len(chosen) != rank:
        raise AssertionError("degree recovery produced wrong count")
    check = LaurentPoly.one()
    for d in chosen:
        check = check * (LaurentPoly.u(d) - LaurentPoly.one())
    if check != q:
        raise AssertionError("degree recovery failed the product identity")
    return tuple(chosen)
