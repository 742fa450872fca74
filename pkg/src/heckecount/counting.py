"""Counting simple modules of specialized Hecke algebras, three ways.

Specialization points are built exactly (finite fields or cyclotomic number
fields), the count is taken as the rank of the specialized character table,
as the number of distinct MeatAxe composition factors of the regular module,
or (type A) as the number of e-regular partitions, and a verification
harness cross-checks all applicable paths against the characteristic-0
count for the same e.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field

from .chartable import (
    CharacterTable,
    NoCharTableModelError,
    character_table,
    condition_star,
    partitions,
    schur_elements,
    star_factorization,
    theorem32_hypothesis,
)
from .cyclo import CycloField, get_cyclo_field
from .ff import (
    INFINITE,
    FField,
    element_of_order,
    get_field,
    is_prime,
    min_extension_degree,
    multiplicative_e,
)
from .laurent import cyclotomic_polynomial
from .linalg import rank_field
from .meataxe import MEATAXE_CAP, count_simples_meataxe
from .rootsys import CoxeterDatum, WeylGroup, bad_primes, build_group

STABILIZER_PRIME_COUNT = 3


class UnreachableEError(ValueError):
    """e cannot be realized in the requested characteristic."""


def has_table_model(datum: CoxeterDatum) -> bool:
    """Whether a generic character-table model exists for this type."""
    family, rank = datum.family, datum.rank
    return (
        (family == "A" and rank <= 5)
        or (family == "B" and rank <= 4)
        or family == "G2"
    )


# -- specialization points -----------------------------------------------------


@dataclass(frozen=True)
class SpecPoint:
    """An exact specialization v -> v_image, q = v_image**2.

    ``ell`` is the characteristic (0 for the cyclotomic point) and ``i`` the
    extension degree over the prime field (0 for the cyclotomic point).
    """

    ell: int
    i: int
    field: object
    v_image: object
    q: object
    e: int

    def q_order(self) -> int:
        one = self.q**0
        if self.q == one:
            return 1
        return self.e  # by construction q is a primitive e-th root

    def describe(self) -> dict:
        if self.ell == 0:
            return {"field": f"Q(zeta_{2 * self.e})", "ell": 0, "i": 0}
        return {"field": repr(self.field), "ell": self.ell, "i": self.i}


def _check_point(point: SpecPoint) -> SpecPoint:
    if multiplicative_e(point.q) != point.e:
        raise AssertionError("specialization point has the wrong e")
    if point.ell == 0 or point.e % point.ell != 0:
        phi = cyclotomic_polynomial(2 * point.e)
        if phi.evaluate(point.v_image, domain=point.field):
            raise AssertionError("Phi_2e does not vanish at the chosen v-image")
    return point


def make_spec_point(e: int, ell: int) -> SpecPoint:
    """The Table-3 point: q of order e in the smallest suitable GF(ell^i).

    For gcd(e, ell) = 1 the v-image is a primitive 2e-th root of unity
    (odd characteristic) or a primitive e-th root with v**2 = q (in
    characteristic 2 there are no elements of even order; q**((e+1)/2) is
    the unique square root of q of odd order, and Phi_2e = Phi_e mod 2).
    For e = ell, q = 1.  Other combinations are unreachable: multiplicative
    orders in GF(ell^i) are prime to ell.
    """
    if e is INFINITE or e == math.inf:
        raise ValueError("e must be finite for a modular specialization point")
    if e < 2:
        raise ValueError("e must be >= 2")
    if not is_prime(ell):
        raise ValueError(f"ell = {ell} is not prime")
    if e == ell == 2:
        f = get_field(2)
        return _check_point(SpecPoint(2, 1, f, f.one, f.one, 2))
    if e == ell:
        f = get_field(ell)
        return _check_point(SpecPoint(ell, 1, f, f.scalar(-1), f.one, e))
    if e % ell == 0:
        raise UnreachableEError(f"e = {e} is unreachable in characteristic {ell}")
    if ell == 2:
        i = min_extension_degree(2, e)
        f = get_field(2, i)
        q = element_of_order(f, e)
        v = q ** ((e + 1) // 2)
        return _check_point(SpecPoint(2, i, f, v, q, e))
    i = min_extension_degree(ell, 2 * e)
    f = get_field(ell, i)
    v = element_of_order(f, 2 * e)
    return _check_point(SpecPoint(ell, i, f, v, v * v, e))


def char0_point(e: int) -> SpecPoint:
    """v -> zeta_2e over the cyclotomic field Q(zeta_2e)."""
    if e < 2:
        raise ValueError("e must be >= 2")
    f = get_cyclo_field(2 * e)
    z = f.zeta
    return _check_point(SpecPoint(0, 0, f, z, z * z, e))


# -- the three counting paths ----------------------------------------------------


def count_simples_rank(group: WeylGroup, table: CharacterTable, point: SpecPoint) -> int:
    """Rank of the entrywise-specialized character table."""
    rows = [
        [val.evaluate(point.v_image, domain=point.field) for val in row]
        for row in table.class_values
    ]
    return rank_field(rows)


def count_simples_char0(group: WeylGroup, table: CharacterTable, e) -> int:
    """|Irr| in characteristic 0 for the given e (class count when e = inf)."""
    if e is INFINITE or e == math.inf:
        return len(group.conjugacy_classes())
    return count_simples_rank(group, table, char0_point(e))


def count_eregular(n: int, e: int) -> int:
    """Partitions of n in which every part repeats fewer than e times."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if e < 2:
        raise ValueError("e must be >= 2")
    count = 0
    for shape in partitions(n):
        if all(shape.count(part) < e for part in set(shape)):
            count += 1
    return count


# -- memoized helpers for the harness ---------------------------------------------

_GROUPS: dict[str, WeylGroup] = {}
_TABLES: dict[str, CharacterTable] = {}
_SCHURS: dict[str, object] = {}
_MEATAXE_COUNTS: dict[tuple, int] = {}


def cached_group(datum: CoxeterDatum) -> WeylGroup:
    if datum.label not in _GROUPS:
        _GROUPS[datum.label] = build_group(datum)
    return _GROUPS[datum.label]


def cached_table(group: WeylGroup) -> CharacterTable:
    label = group.datum.label
    if label not in _TABLES:
        _TABLES[label] = character_table(group)
    return _TABLES[label]


def cached_schur(group: WeylGroup):
    label = group.datum.label
    if label not in _SCHURS:
        _SCHURS[label] = schur_elements(group, cached_table(group))
    return _SCHURS[label]


def meataxe_count(group: WeylGroup, point: SpecPoint, seed: int = 0) -> int:
    key = (group.datum.label, point.e, point.ell, point.i, seed)
    if key not in _MEATAXE_COUNTS:
        _MEATAXE_COUNTS[key] = count_simples_meataxe(
            group, point.field, point.q, seed=seed
        )
    return _MEATAXE_COUNTS[key]


# -- verification harness ---------------------------------------------------------


@dataclass
class VerifyRow:
    """One (ell) row of a fixed-e verification report."""

    ell: int
    i: int
    q_order: int
    counts: dict
    status: str
    bad_prime: bool
    thm32_hypothesis: bool
    star_condition: bool | None = None
    error: str | None = None

    def to_json(self) -> dict:
        out = {
            "ell": self.ell,
            "i": self.i,
            "q_order": self.q_order,
            "counts": dict(sorted(self.counts.items())),
            "status": self.status,
            "bad_prime": self.bad_prime,
            "thm32_hypothesis": self.thm32_hypothesis,
        }
        if self.star_condition is not None:
            out["star_condition"] = self.star_condition
        if self.error is not None:
            out["error"] = self.error
        return out


@dataclass
class VerifyReport:
    """All tested primes for one (type, e), against the characteristic-0 count."""

    type: str
    e: object  # int or INFINITE
    char0_count: int
    char0_provenance: str
    rows: list[VerifyRow] = dc_field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "type": self.type,
            "e": "inf" if self.e is INFINITE or self.e == math.inf else self.e,
            "char0": {"count": self.char0_count, "provenance": self.char0_provenance},
            "rows": [r.to_json() for r in sorted(self.rows, key=lambda r: r.ell)],
        }

    def ok(self, expect_bad_strict: bool = False) -> bool:
        """Whether every reachable row has its Theorem-1.1-expected status."""
        for row in self.rows:
            if row.error is not None:
                if row.status != "ERROR":
                    return False
                continue  # unreachable e: an explained skip, not a failure
            if not row.bad_prime:
                if row.status != "EQUAL":
                    return False
            elif row.status not in (
                ("EQUAL", "STRICTLY_LESS") if expect_bad_strict else ("EQUAL",)
            ):
                return False
        return True


def _stabilized_char0(group: WeylGroup, e: int, seed: int) -> int:
    """Characteristic-0 baseline via agreeing modular counts at good primes.

    Uses the smallest good primes with the Theorem 3.2 hypothesis; under
    that hypothesis the modular count equals the characteristic-0 count, so
    three independent agreements pin the value without cyclotomic linear
    algebra at the group's full dimension.
    """
    degrees = group.degrees()
    bad = bad_primes(group.datum)
    candidates = [
        p
        for p in range(3, 100)
        if is_prime(p)
        and p not in bad
        and e % p != 0
        and theorem32_hypothesis(e, p, degrees)
    ]
    # prefer small extension degrees: the chop cost scales with GF(p^i)
    candidates.sort(key=lambda p: (min_extension_degree(p, 2 * e), p))
    chosen = candidates[:STABILIZER_PRIME_COUNT]
    if len(chosen) < STABILIZER_PRIME_COUNT:
        raise AssertionError(f"not enough good primes for a stabilized baseline at e={e}")
    counts = {p: meataxe_count(group, make_spec_point(e, p), seed) for p in chosen}
    if len(set(counts.values())) != 1:
        raise AssertionError(f"stabilized baseline disagrees across primes: {counts}")
    return counts[chosen[0]]


def _count_all_paths(
    group: WeylGroup, point: SpecPoint, methods, seed: int
) -> dict:
    counts = {}
    if "rank" in methods:
        counts["rank"] = count_simples_rank(group, cached_table(group), point)
    if "meataxe" in methods:
        counts["meataxe"] = meataxe_count(group, point, seed)
    if "partitions" in methods:
        counts["partitions"] = count_eregular(group.rank + 1, point.e)
    if not counts:
        raise ValueError(f"no counting path applies to type {group.datum.label}")
    if len(set(counts.values())) != 1:
        raise AssertionError(
            f"counting paths disagree for {group.datum.label}, "
            f"e={point.e}, ell={point.ell}: {counts}"
        )
    return counts


def applicable_methods(datum: CoxeterDatum, include_meataxe: bool = True) -> list[str]:
    methods = []
    if has_table_model(datum):
        methods.append("rank")
    if include_meataxe and known_order_fits(datum):
        methods.append("meataxe")
    if datum.family == "A":
        methods.append("partitions")
    return methods


def known_order_fits(datum: CoxeterDatum) -> bool:
    from .rootsys import known_order

    return known_order(datum) <= MEATAXE_CAP


def verify_theorem(
    datum: CoxeterDatum,
    e_list,
    ell_list,
    seed: int = 0,
    methods: list[str] | None = None,
) -> list[VerifyReport]:
    """One VerifyReport per e, cross-checking every applicable counting path."""
    group = cached_group(datum)
    bad = bad_primes(datum)
    degrees = group.degrees()
    reports = []
    for e in e_list:
        infinite = e is INFINITE or e == math.inf
        run_methods = methods if methods is not None else applicable_methods(datum)
        if infinite:
            char0 = len(group.conjugacy_classes())
            provenance = "class-count"
        elif has_table_model(datum):
            char0 = count_simples_char0(group, cached_table(group), e)
            provenance = "cyclotomic-rank"
        else:
            char0 = _stabilized_char0(group, int(e), seed)
            provenance = "stabilized-modular"
        report = VerifyReport(datum.label, e, char0, provenance)
        for ell in sorted(set(ell_list)):
            if infinite:
                # any q of order > max degree gives e = inf; not a Table-3
                # point, so the harness only reports the class count
                report.rows.append(
                    VerifyRow(ell, 0, 0, {"class-count": char0}, "EQUAL",
                              ell in bad, False)
                )
                continue
            try:
                point = make_spec_point(int(e), ell)
            except UnreachableEError as err:
                report.rows.append(
                    VerifyRow(ell, 0, 0, {}, "ERROR", ell in bad,
                              False, error=str(err))
                )
                continue
            counts = _count_all_paths(group, point, run_methods, seed)
            count = next(iter(counts.values()))
            if count > char0:
                raise AssertionError(
                    f"modular count {count} exceeds characteristic-0 "
                    f"count {char0} for {datum.label}, e={e}, ell={ell}"
                )
            # the theorem's standing assumptions: good characteristic and
            # e = order of q (so q != 1), on top of the degree condition
            hyp = (
                theorem32_hypothesis(int(e), ell, degrees)
                and ell not in bad
                and e % ell != 0
            )
            star = None
            if has_table_model(datum):
                try:
                    factors = star_factorization(
                        cached_schur(group), int(e), point.field, point.v_image
                    )
                    star = condition_star(factors)
                except ZeroDivisionError:
                    star = None  # theta undefined on some c_V at this ell
            status = "EQUAL" if count == char0 else "STRICTLY_LESS"
            if hyp and star is True and status != "EQUAL":
                raise AssertionError(
                    "Theorem 3.2 hypothesis and condition (*) hold but the "
                    f"counts differ for {datum.label}, e={e}, ell={ell}"
                )
            report.rows.append(
                VerifyRow(ell, point.i, point.q_order(), counts, status,
                          ell in bad, hyp, star)
            )
        reports.append(report)
    return reports
