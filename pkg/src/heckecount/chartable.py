"""Generic irreducible representations and character tables.

Supported models: seminormal-form representations indexed by partitions
(type A) and bipartitions (type B, both parameters u), and the explicit
dihedral model for I2(m), m in {3, 4, 6} (G2 included).  Types D and F4
have no character-table model here; counting for them goes through the
MeatAxe path.

Every constructed representation is certified by the quadratic and braid
relations, completeness (count = number of conjugacy classes, sum of
squared dimensions = |W|) and trace orthogonality - not by provenance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .laurent import LaurentPoly, RatFunc, phi_adic_valuation
from .linalg import exact_rank, mat_eye, mat_mul
from .rootsys import CoxeterDatum, WeylGroup, bad_primes

CHARTABLE_CACHE_VERSION = 1
SCHUR_CAP = 1200


class NoCharTableModelError(ValueError):
    """Raised for types without a character-table model (use the MeatAxe path)."""


# -- partitions and standard tableaux ----------------------------------------


def partitions(n: int) -> list[tuple[int, ...]]:
    """All partitions of n in decreasing form, deterministically ordered."""

    def gen(rest: int, maxpart: int):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, maxpart), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return list(gen(n, n))


def bipartitions(n: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    out = []
    for k in range(n, -1, -1):
        for lam in partitions(k):
            for mu in partitions(n - k):
                out.append((lam, mu))
    return out


def standard_tableaux(shape: tuple[int, ...]) -> list[tuple[tuple[int, ...], ...]]:
    """All standard Young tableaux of the given shape, entries 1..n."""
    n = sum(shape)

    def gen(filled: list[list[int]], k: int):
        if k > n:
            yield tuple(tuple(row) for row in filled)
            return
        for r, rowlen in enumerate(shape):
            c = len(filled[r])
            if c >= rowlen:
                continue
            if r > 0 and len(filled[r - 1]) <= c:
                continue
            filled[r].append(k)
            yield from gen(filled, k + 1)
            filled[r].pop()

    return sorted(gen([[] for _ in shape], 1))


def standard_bitableaux(shapes) -> list[tuple]:
    """Standard fillings of a pair of shapes with entries 1..n, sorted."""
    n = sum(shapes[0]) + sum(shapes[1])

    def gen(filled, k):
        if k > n:
            yield (
                tuple(tuple(row) for row in filled[0]),
                tuple(tuple(row) for row in filled[1]),
            )
            return
        for comp in (0, 1):
            for r, rowlen in enumerate(shapes[comp]):
                c = len(filled[comp][r])
                if c >= rowlen:
                    continue
                if r > 0 and len(filled[comp][r - 1]) <= c:
                    continue
                filled[comp][r].append(k)
                yield from gen(filled, k + 1)
                filled[comp][r].pop()

    start = [[[] for _ in shapes[0]], [[] for _ in shapes[1]]]
    return sorted(gen(start, 1))


def _positions(tab) -> dict[int, tuple[int, int]]:
    return {v: (r, c) for r, row in enumerate(tab) for c, v in enumerate(row)}


def _bipositions(bitab) -> dict[int, tuple[int, int, int]]:
    out = {}
    for comp in (0, 1):
        for r, row in enumerate(bitab[comp]):
            for c, v in enumerate(row):
                out[v] = (comp, r, c)
    return out


# -- generic representations ---------------------------------------------------


@dataclass(frozen=True)
class GenericRep:
    """One irreducible: a label, its dimension and per-generator matrices."""

    label: str
    dim: int
    matrices: tuple  # one RatFunc matrix (list of rows) per generator


def _rf_u(power: int = 1) -> RatFunc:
    return RatFunc(LaurentPoly.monomial(2 * power))


_RF_ZERO = RatFunc(LaurentPoly.zero())
_RF_ONE = RatFunc(LaurentPoly.one())


def _seminormal_block(r1: RatFunc, r2: RatFunc) -> tuple[RatFunc, RatFunc]:
    """Mixing coefficients for T acting on v_t: alpha v_t + beta v_swap.

    r1, r2 are the residues of the entries k, k+1 in t; the 2x2 block over
    {t, swap(t)} then has trace u-1 and determinant -u.
    """
    u = _rf_u()
    den = r2 - r1
    alpha = (u - _RF_ONE) * r2 / den
    beta = (u * r2 - r1) / den
    return alpha, beta


def _type_a_reps(rank: int) -> list[GenericRep]:
    n = rank + 1  # group is S_n
    reps = []
    for shape in partitions(n):
        tabs = standard_tableaux(shape)
        dim = len(tabs)
        idx = {t: i for i, t in enumerate(tabs)}
        positions = [_positions(t) for t in tabs]
        mats = []
        for g in range(rank):
            k = g + 1  # swaps entries k, k+1
            m = [[_RF_ZERO] * dim for _ in range(dim)]
            for a, tab in enumerate(tabs):
                pos = positions[a]
                (r1, c1), (r2, c2) = pos[k], pos[k + 1]
                if r1 == r2:
                    m[a][a] = _rf_u()
                elif c1 == c2:
                    m[a][a] = -_RF_ONE
                else:
                    res1, res2 = _rf_u(c1 - r1), _rf_u(c2 - r2)
                    alpha, beta = _seminormal_block(res1, res2)
                    swapped = tuple(
                        tuple(k + 1 if v == k else k if v == k + 1 else v for v in row)
                        for row in tab
                    )
                    m[a][a] = alpha
                    m[idx[swapped]][a] = beta
            mats.append(m)
        reps.append(GenericRep(",".join(map(str, shape)), dim, tuple(mats)))
    return reps


def _type_b_residue(comp: int, r: int, c: int) -> RatFunc:
    # component 0 tracks eigenvalue u of T_0, component 1 eigenvalue -1
    return _rf_u(c - r + 1) if comp == 0 else -_rf_u(c - r)


def _type_b_reps(rank: int) -> list[GenericRep]:
    n = rank
    reps = []
    for shapes in bipartitions(n):
        tabs = standard_bitableaux(shapes)
        dim = len(tabs)
        idx = {t: i for i, t in enumerate(tabs)}
        positions = [_bipositions(t) for t in tabs]
        mats = []
        # generator 0: the sign flip, diagonal by the component of entry 1
        m0 = [[_RF_ZERO] * dim for _ in range(dim)]
        for a in range(dim):
            comp = positions[a][1][0]
            m0[a][a] = _rf_u() if comp == 0 else -_RF_ONE
        mats.append(m0)
        for g in range(1, rank):
            k = g  # swaps entries k, k+1
            m = [[_RF_ZERO] * dim for _ in range(dim)]
            for a, tab in enumerate(tabs):
                pos = positions[a]
                (p1, r1, c1), (p2, r2, c2) = pos[k], pos[k + 1]
                if p1 == p2 and r1 == r2:
                    m[a][a] = _rf_u()
                elif p1 == p2 and c1 == c2:
                    m[a][a] = -_RF_ONE
                else:
                    res1 = _type_b_residue(p1, r1, c1)
                    res2 = _type_b_residue(p2, r2, c2)
                    alpha, beta = _seminormal_block(res1, res2)
                    swapped = tuple(
                        tuple(
                            tuple(k + 1 if v == k else k if v == k + 1 else v for v in row)
                            for row in comp_tab
                        )
                        for comp_tab in tab
                    )
                    m[a][a] = alpha
                    m[idx[swapped]][a] = beta
            mats.append(m)
        lam, mu = shapes
        label = ",".join(map(str, lam)) + "|" + ",".join(map(str, mu))
        reps.append(GenericRep(label, dim, tuple(mats)))
    return reps


def _dihedral_reps(m: int) -> list[GenericRep]:
    u = _rf_u()
    one = _RF_ONE
    reps = [
        GenericRep("index", 1, ([[u]], [[u]])),
        GenericRep("sign", 1, ([[-one]], [[-one]])),
    ]
    if m % 2 == 0:
        reps.append(GenericRep("mixed1", 1, ([[u]], [[-one]])))
        reps.append(GenericRep("mixed2", 1, ([[-one]], [[u]])))
    # mu_j = 2 cos(2 pi j / m) is rational exactly for m in {3, 4, 6}
    mu_table = {3: {1: -1}, 4: {1: 0}, 6: {1: 1, 2: -1}}
    for j in sorted(mu_table[m]):
        mu = mu_table[m][j]
        c = u.scale(2 - mu)
        ms = [[-one, one], [_RF_ZERO, u]]
        mt = [[u, _RF_ZERO], [c, -one]]
        reps.append(GenericRep(f"twodim:{j}", 2, (ms, mt)))
    return reps


def irreducible_reps(datum: CoxeterDatum) -> list[GenericRep]:
    """The complete list of generic irreducibles for supported families."""
    family, rank = datum.family, datum.rank
    if family == "A":
        if rank > 5:
            raise NoCharTableModelError(f"A_{rank} exceeds the supported rank 5")
        reps = _type_a_reps(rank)
    elif family == "B":
        if rank > 4:
            raise NoCharTableModelError(f"B_{rank} exceeds the supported rank 4")
        reps = _type_b_reps(rank)
    elif family == "G2":
        reps = _dihedral_reps(6)
    else:
        raise NoCharTableModelError(
            f"no character-table model for type {datum.label}; use the meataxe path"
        )
    _certify_relations(datum, reps)
    return reps


def _certify_relations(datum: CoxeterDatum, reps: list[GenericRep]) -> None:
    """Quadratic and braid relations, checked exactly over Q(v)."""
    u = _rf_u()
    rank = datum.rank
    for rep in reps:
        eye = mat_eye(rep.dim, _RF_ZERO, _RF_ONE)
        for m in rep.matrices:
            sq = mat_mul(m, m, _RF_ZERO)
            expect = [
                [
                    u * eye[i][j] + (u - _RF_ONE) * m[i][j]
                    for j in range(rep.dim)
                ]
                for i in range(rep.dim)
            ]
            if sq != expect:
                raise AssertionError(f"quadratic relation fails for {rep.label}")
        for s in range(rank):
            for t in range(s + 1, rank):
                mm = datum.coxeter_matrix[s][t]
                a, b = rep.matrices[s], rep.matrices[t]
                left = right = eye
                for i in range(mm):
                    left = mat_mul(left, a if i % 2 == 0 else b, _RF_ZERO)
                    right = mat_mul(right, b if i % 2 == 0 else a, _RF_ZERO)
                if left != right:
                    raise AssertionError(
                        f"braid relation ({s},{t}) fails for {rep.label}"
                    )


# -- character tables ----------------------------------------------------------


class CharacterTable:
    """chi_V(T_{w_C}) for all irreducibles V and classes C, over Z[u]."""

    def __init__(self, group: WeylGroup, reps: list[GenericRep]):
        classes = group.conjugacy_classes()
        if len(reps) != len(classes):
            raise AssertionError(
                f"{len(reps)} irreducibles vs {len(classes)} classes"
            )
        if sum(r.dim**2 for r in reps) != group.order:
            raise AssertionError("sum of squared dimensions differs from |W|")
        labels = [r.label for r in reps]
        if len(set(labels)) != len(labels):
            raise AssertionError("duplicate representation labels")
        self.group = group
        self.reps = reps
        self.labels = labels
        self.dims = [r.dim for r in reps]
        self.class_values: list[list[LaurentPoly]] = []
        for rep in reps:
            row = []
            for cls in classes:
                mat = mat_eye(rep.dim, _RF_ZERO, _RF_ONE)
                for s in cls.rep_word:
                    mat = mat_mul(mat, rep.matrices[s], _RF_ZERO)
                row.append(_trace_poly(mat, rep.label))
            self.class_values.append(row)
        for v, rep in enumerate(reps):
            ident = self.class_values[v][group.class_of(group.identity)]
            if ident != LaurentPoly.from_int(rep.dim):
                raise AssertionError("identity column disagrees with dimensions")
        rows = {tuple(r) for r in self.class_values}
        if len(rows) != len(reps):
            raise AssertionError("character rows are not pairwise distinct")
        self._element_values: list[list[LaurentPoly]] | None = None

    def rank_generic(self) -> int:
        return exact_rank(self.class_values)

    def element_values(self) -> list[list[LaurentPoly]]:
        """chi_V(T_w) for every group element, by incremental BFS products."""
        if self._element_values is not None:
            return self._element_values
        g = self.group
        out = []
        for rep in self.reps:
            mats: list = [None] * g.order
            mats[g.identity] = mat_eye(rep.dim, _RF_ZERO, _RF_ONE)
            values = [LaurentPoly.from_int(rep.dim)] * g.order
            for w in range(1, g.order):
                mats[w] = mat_mul(
                    mats[g.parents[w]], rep.matrices[g.last_gens[w]], _RF_ZERO
                )
                values[w] = _trace_poly(mats[w], rep.label)
            out.append(values)
        self._element_values = out
        return out

    def to_json(self) -> dict:
        classes = self.group.conjugacy_classes()
        return {
            "version": CHARTABLE_CACHE_VERSION,
            "type": self.group.datum.label,
            "labels": list(self.labels),
            "dims": list(self.dims),
            "classes": [c.class_id for c in classes],
            "values": [[p.to_str("u") for p in row] for row in self.class_values],
        }

    def to_csv(self) -> str:
        classes = self.group.conjugacy_classes()
        header = "label,dim," + ",".join(f"C{c.class_id}" for c in classes)
        lines = [header]
        for v, label in enumerate(self.labels):
            vals = ",".join(p.to_str("u") for p in self.class_values[v])
            lines.append(f'"{label}",{self.dims[v]},{vals}')
        return "\n".join(lines) + "\n"


def _trace_poly(mat, label: str) -> LaurentPoly:
    tr = _RF_ZERO
    for i in range(len(mat)):
        tr = tr + mat[i][i]
    try:
        p = tr.as_poly()
    except ValueError:
        raise AssertionError(
            f"character value of {label} has a non-cancelling denominator: "
            f"{tr.to_str('v')}"
        )
    if not p.is_u_poly() or p.denominator_lcm() != 1:
        raise AssertionError(
            f"character value of {label} is not an integer polynomial in u: "
            f"{p.to_str('v')}"
        )
    return p


def character_table(group: WeylGroup, reps: list[GenericRep] | None = None) -> CharacterTable:
    if reps is None:
        reps = irreducible_reps(group.datum)
    return CharacterTable(group, reps)


# -- Schur elements -------------------------------------------------------------


@dataclass
class SchurData:
    """Schur elements c_V as Laurent polynomials in u (rational coefficients)."""

    labels: list[str]
    dims: list[int]
    elements: list[LaurentPoly]

    def to_json(self) -> dict:
        return {
            "version": CHARTABLE_CACHE_VERSION,
            "labels": list(self.labels),
            "dims": list(self.dims),
            "schur": [c.to_str("u") for c in self.elements],
        }


def schur_elements(group: WeylGroup, table: CharacterTable) -> SchurData:
    """c_V dim V = sum_w u^{-l(w)} chi_V(T_w) chi_V(T_{w^-1})."""
    if group.order > SCHUR_CAP:
        raise ValueError(f"group order {group.order} exceeds the Schur cap {SCHUR_CAP}")
    values = table.element_values()
    inverses = [group.inverse(w) for w in range(group.order)]
    p_w = group.poincare_polynomial()
    bad = bad_primes(group.datum)
    out = []
    for v, label in enumerate(table.labels):
        total = LaurentPoly.zero()
        vals = values[v]
        for w in range(group.order):
            total = total + (vals[w] * vals[inverses[w]]).shift(-2 * group.lengths[w])
        c = total.scale(Fraction(1, table.dims[v]))
        if not c:
            raise AssertionError(f"Schur element of {label} vanishes")
        if not c.divides(p_w):
            raise AssertionError(f"Schur element of {label} does not divide P_W")
        for prime, mult in _factor(c.denominator_lcm()).items():
            if prime not in bad:
                raise AssertionError(
                    f"Schur element of {label} has non-bad prime {prime} in a denominator"
                )
        out.append(c)
    return SchurData(list(table.labels), list(table.dims), out)


def _factor(n: int) -> dict[int, int]:
    from .ff import factorize

    return factorize(n)


# -- the (*) condition and the Theorem 3.2 hypothesis ---------------------------


@dataclass(frozen=True)
class StarFactor:
    """c_V = Phi_2e(v)^d * f with theta(f) tested against the point's field."""

    label: str
    d: int
    cofactor: LaurentPoly
    nonvanishing: bool


def star_factorization(schur: SchurData, e: int, field, z) -> list[StarFactor]:
    """Factor each c_V along Phi_2e and evaluate the cofactor at v -> z."""
    if e < 2:
        raise ValueError("e must be >= 2")
    out = []
    for label, c in zip(schur.labels, schur.elements):
        d, cof = phi_adic_valuation(c, 2 * e)
        val = cof.evaluate(z, domain=field)
        out.append(StarFactor(label, d, cof, bool(val)))
    return out


def condition_star(factors: list[StarFactor]) -> bool:
    return all(f.nonvanishing for f in factors)


def theorem32_hypothesis(e: int, ell: int, degrees) -> bool:
    """ell != 2 and e*ell divides no reflection degree."""
    if e < 2:
        raise ValueError("e must be >= 2")
    return ell != 2 and all(d % (e * ell) != 0 for d in degrees)
