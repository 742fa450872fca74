"""MeatAxe composition-factor analysis over finite fields.

Modules use the row-vector convention: vectors are rows, the algebra acts
on the right, so evaluating a word multiplies generator matrices left to
right.  The chop uses random short algebra words, null-vector spinning and
Norton's irreducibility criterion; seeds flow through numpy SeedSequences
so every recursion branch is deterministic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .ff import FField
from .ffmat import FFKernel
from .rootsys import WeylGroup

MEATAXE_CAP = 1200
ELEMENT_TRIES = 60
PROJECTIVE_ENUM_CAP = 2048
CANONICAL_RECIPE_TRIES = 256


class MeatAxeBudgetError(RuntimeError):
    """Iteration budget exhausted without an irreducibility certificate."""


@dataclass
class FFModule:
    """A module over a specialized Hecke algebra: one matrix per generator."""

    kernel: FFKernel
    mats: list[np.ndarray]  # each (dim, dim, field degree)
    provenance: str = ""

    @property
    def dim(self) -> int:
        return 0 if not self.mats else self.mats[0].shape[0]

    @property
    def field(self) -> FField:
        return self.kernel.field

    def verify_relations(self, coxeter_matrix, q) -> None:
        """Specialized quadratic and braid relations, checked exactly."""
        k = self.kernel
        n = self.dim
        qv = k.scalar(q)
        eye = k.eye(n)
        for m in self.mats:
            lhs = k.matmul(m, m)
            rhs = (k.polymul(eye, qv) + k.polymul(m, k.scalar(q - self.field.one))) % k.ell
            if not np.array_equal(lhs, rhs % k.ell):
                raise AssertionError("quadratic relation fails in FFModule")
        for s in range(len(self.mats)):
            for t in range(s + 1, len(self.mats)):
                mm = coxeter_matrix[s][t]
                left = right = eye
                for i in range(mm):
                    left = k.matmul(left, self.mats[s if i % 2 == 0 else t])
                    right = k.matmul(right, self.mats[t if i % 2 == 0 else s])
                if not np.array_equal(left, right):
                    raise AssertionError("braid relation fails in FFModule")


def regular_module(group: WeylGroup, field: FField, q, provenance: str = "") -> FFModule:
    """Right multiplication by T_s on the T_w basis of the regular module."""
    if group.order > MEATAXE_CAP:
        raise ValueError(f"group order {group.order} exceeds the meataxe cap {MEATAXE_CAP}")
    kernel = FFKernel(field)
    n = group.order
    qvec = kernel.scalar(q)
    qm1 = kernel.scalar(q - field.one)
    mats = []
    for s in range(group.rank):
        s_elem = group.simple_reflection(s)
        m = kernel.zeros(n, n)
        for w in range(n):
            ws = group.mult(w, s_elem)
            if group.length_up(w, s):
                m[w, ws, 0] = 1
            else:
                m[w, ws] = qvec
                m[w, w] = qm1
        mats.append(m)
    module = FFModule(kernel, mats, provenance)
    module.verify_relations(group.datum.coxeter_matrix, q)
    return module


# -- spinning and random elements ---------------------------------------------


def spin(module: FFModule, vectors: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Smallest submodule containing the given row vectors, as RREF + pivots."""
    k = module.kernel
    basis, pivots = k.rref(vectors)
    n = module.dim
    while len(pivots) < n:
        images = np.concatenate([k.matmul(basis, m) for m in module.mats])
        red = k.reduce_rows(images, basis, pivots)
        nz = red[red.any(axis=(1, 2))]
        if nz.shape[0] == 0:
            break
        basis, pivots = k.rref_extend(basis, pivots, nz)
    return basis, pivots


def random_element(module: FFModule, rng: np.random.Generator) -> np.ndarray:
    """A random short-word algebra element: c_0 I + sum of prefix products."""
    k = module.kernel
    length = int(rng.integers(4, 13))
    word = rng.integers(0, len(module.mats), size=length)
    out = k.polymul(k.eye(module.dim), _rand_scalar(k, rng))
    prefix = None
    for s in word:
        prefix = module.mats[s] if prefix is None else k.matmul(prefix, module.mats[s])
        out = (out + k.polymul(prefix, _rand_scalar(k, rng))) % k.ell
    return out


def _rand_scalar(kernel: FFKernel, rng: np.random.Generator) -> np.ndarray:
    return rng.integers(0, kernel.ell, size=kernel.d).astype(np.int64)


def _submodule_restriction(module: FFModule, basis, pivots) -> FFModule:
    k = module.kernel
    piv = np.array(pivots)
    mats = []
    for m in module.mats:
        img = k.matmul(basis, m)
        if not k.is_zero(k.reduce_rows(img, basis, pivots)):
            raise AssertionError("basis does not span a submodule")
        mats.append(np.ascontiguousarray(img[:, piv, :]))
    return FFModule(k, mats, module.provenance + "/sub")


def _quotient_restriction(module: FFModule, basis, pivots) -> FFModule:
    k = module.kernel
    free = np.array([j for j in range(module.dim) if j not in set(pivots)])
    mats = []
    for m in module.mats:
        rows = np.ascontiguousarray(m[free])
        red = k.reduce_rows(rows, basis, pivots)
        mats.append(np.ascontiguousarray(red[:, free, :]))
    return FFModule(k, mats, module.provenance + "/quo")


# -- chop -----------------------------------------------------------------------


def chop_modules(module: FFModule, seed) -> list[FFModule]:
    """Composition factors of the module (as FFModules), deterministic in seed."""
    ss = seed if isinstance(seed, np.random.SeedSequence) else np.random.SeedSequence(seed)
    if module.dim == 0:
        return []
    if module.dim == 1:
        return [module]
    k = module.kernel
    n = module.dim
    # all generators scalar: n copies of one 1-dimensional module, and no
    # algebra element can ever have a proper nullspace
    if all(_is_scalar_mat(k, m) for m in module.mats):
        one = FFModule(
            k,
            [np.ascontiguousarray(m[:1, :1, :]) for m in module.mats],
            module.provenance + "/scalar",
        )
        return [one] * n
    rng = np.random.default_rng(ss)
    for _ in range(ELEMENT_TRIES):
        z = random_element(module, rng)
        null = k.left_nullspace(z)
        nullity = null.shape[0]
        if nullity in (0, n):
            z, null = _eigenvalue_shift(module, z, rng)
            if z is None:
                continue
            nullity = null.shape[0]
        # any proper spin splits the module immediately
        candidates = [null[i : i + 1] for i in range(nullity)]
        proper = None
        for v in candidates:
            basis, pivots = spin(module, v)
            if len(pivots) < n:
                proper = (basis, pivots)
                break
        if proper is None and nullity > 1:
            count = (k.field.order**nullity - 1) // (k.field.order - 1)
            if count > PROJECTIVE_ENUM_CAP:
                continue  # inconclusive; try another element
            for combo in _projective_vectors(k, nullity):
                v = k.matmul(combo[None], null)
                basis, pivots = spin(module, v)
                if len(pivots) < n:
                    proper = (basis, pivots)
                    break
        if proper is None:
            # primal side exhausted; Norton: inspect the transposed module
            transposed = FFModule(
                k,
                [np.ascontiguousarray(m.transpose(1, 0, 2)) for m in module.mats],
                module.provenance + "^T",
            )
            dual_null = k.left_nullspace(np.ascontiguousarray(z.transpose(1, 0, 2)))
            dbasis, dpivots = spin(transposed, dual_null[0:1])
            if len(dpivots) == n:
                return [module]  # certified irreducible
            # the annihilator of the dual spin is a proper submodule
            ann = k.nullspace(dbasis)
            basis, pivots = k.rref(ann)
            proper = (basis, pivots)
        basis, pivots = proper
        sub = _submodule_restriction(module, basis, pivots)
        quo = _quotient_restriction(module, basis, pivots)
        s1, s2 = ss.spawn(2)
        return chop_modules(sub, s1) + chop_modules(quo, s2)
    raise MeatAxeBudgetError(
        f"no decision for module of dimension {n} over {k.field!r} "
        f"within {ELEMENT_TRIES} random elements"
    )


def _is_scalar_mat(kernel: FFKernel, m: np.ndarray) -> bool:
    n = m.shape[0]
    return np.array_equal(m, kernel.polymul(kernel.eye(n), m[0, 0]) % kernel.ell)


def _eigenvalue_shift(module: FFModule, z: np.ndarray, rng: np.random.Generator):
    """Find lambda in the field with z - lambda*I singular, via a Krylov
    minimal polynomial.

    Over larger fields a random algebra element is rarely singular on a
    small irreducible module, but it usually has an eigenvalue in the
    field: the minimal polynomial of a random vector under z is computed
    exactly and its roots in the field are scanned in order.
    """
    k = module.kernel
    n = module.dim
    v = rng.integers(0, k.ell, size=(1, n, k.d)).astype(np.int64)
    if k.is_zero(v):
        v[0, 0, 0] = 1
    rows = [v]
    basis, pivots = k.rref(v)
    x = v
    for _ in range(n):
        x = k.matmul(x, z)
        red = k.reduce_rows(x, basis, pivots)
        if k.is_zero(red):
            break
        basis, pivots = k.rref_extend(basis, pivots, red)
        rows.append(x)
    m = len(rows)
    # solve c @ rows = x: the monic minimal polynomial of v under z
    big = np.concatenate(rows + [x])
    aug = np.ascontiguousarray(big.transpose(1, 0, 2))  # (n, m+1, d)
    red2, piv2 = k.rref(aug)
    if piv2 and piv2[-1] == m:
        raise AssertionError("Krylov dependence solve is inconsistent")
    coeffs = k.zeros(m + 1)  # p(T) = T^m - sum_j c_j T^j
    coeffs[m, 0] = 1
    for r, p in enumerate(piv2):
        coeffs[p] = (-red2[r, m]) % k.ell
    # evaluate p at every field element at once (Horner)
    order = k.field.order
    alphas = k.zeros(order)
    for code in range(order):
        c = code
        for i in range(k.d):
            alphas[code, i] = c % k.ell
            c //= k.ell
    vals = np.broadcast_to(coeffs[m], (order, k.d)).copy()
    for j in range(m - 1, -1, -1):
        vals = (k.polymul(vals, alphas) + coeffs[j]) % k.ell
    for code in range(order):
        if vals[code].any():
            continue
        shifted = (z - k.polymul(k.eye(n), alphas[code])) % k.ell
        null = k.left_nullspace(shifted)
        if 0 < null.shape[0] < n:
            return shifted, null
    return None, None


def _projective_vectors(kernel: FFKernel, length: int):
    """All coefficient rows (length, d) with first nonzero coordinate = 1."""
    ell, d = kernel.ell, kernel.d
    scalars = list(itertools.product(range(ell), repeat=d))
    one = (1,) + (0,) * (d - 1)
    zero = (0,) * d
    for lead in range(length):
        head = [zero] * lead + [one]
        for tail in itertools.product(scalars, repeat=length - lead - 1):
            yield np.array(head + list(tail), dtype=np.int64)


# -- canonical forms and isomorphism ---------------------------------------------


def _recipe_element(module: FFModule, index: int) -> np.ndarray:
    rng = np.random.default_rng(np.random.SeedSequence([0x5EED, index]))
    return random_element(module, rng)


def _standard_basis(module: FFModule, v: np.ndarray) -> np.ndarray:
    """Spin v in deterministic order, keeping the raw (unreduced) images."""
    k = module.kernel
    n = module.dim
    chosen = v.copy()
    basis, pivots = k.rref(v)
    i = 0
    while chosen.shape[0] < n:
        if i >= chosen.shape[0]:
            raise AssertionError("standard basis stalled on a reducible module")
        x = chosen[i : i + 1]
        for m in module.mats:
            y = k.matmul(x, m)
            red = k.reduce_rows(y, basis, pivots)
            if not k.is_zero(red):
                chosen = np.concatenate([chosen, y])
                basis, pivots = k.rref_extend(basis, pivots, red)
                if chosen.shape[0] == n:
                    break
        i += 1
    return chosen


def canonical_form(module: FFModule) -> tuple:
    """A fingerprint depending only on the isomorphism class.

    For dimension 1 the generator scalars themselves; otherwise the
    standard-basis form with respect to the first deterministic recipe
    element of nullity one.
    """
    k = module.kernel
    n = module.dim
    if n == 1:
        return ("dim1", tuple(tuple(int(c) for c in m[0, 0]) for m in module.mats))
    eye = k.eye(n)
    for index in range(CANONICAL_RECIPE_TRIES):
        z = _recipe_element(module, index)
        null = k.left_nullspace(z)
        if null.shape[0] != 1:
            # deterministic eigenvalue sweep; ranks are iso-invariants, so
            # the first (index, code) hit is the same for isomorphic modules
            null = None
            for code in range(1, k.field.order):
                digits = []
                c = code
                for _ in range(k.d):
                    digits.append(c % k.ell)
                    c //= k.ell
                lam = np.array(digits, dtype=np.int64)
                shifted = (z - k.polymul(eye, lam)) % k.ell
                cand = k.left_nullspace(shifted)
                if cand.shape[0] == 1:
                    null = cand
                    break
            if null is None:
                continue
        sb = _standard_basis(module, null[0:1])
        inv = _kernel_inverse(k, sb)
        canon = tuple(
            k.matmul(k.matmul(sb, m), inv).tobytes() for m in module.mats
        )
        return ("std", n, index, canon)
    raise MeatAxeBudgetError(
        f"no nullity-1 recipe element found for a dimension-{n} module"
    )


def _kernel_inverse(kernel: FFKernel, a: np.ndarray) -> np.ndarray:
    n = a.shape[0]
    aug = np.concatenate([a, kernel.eye(n)], axis=1)
    red, pivots = kernel.rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return np.ascontiguousarray(red[:, n:, :])


def is_isomorphic(m1: FFModule, m2: FFModule) -> bool:
    """Exact isomorphism decision for two irreducible modules."""
    if m1.field != m2.field or len(m1.mats) != len(m2.mats):
        return False
    if m1.dim != m2.dim:
        return False
    return canonical_form(m1) == canonical_form(m2)


# -- counting ---------------------------------------------------------------------


@dataclass
class FactorRecord:
    """One isomorphism class among the composition factors."""

    dim: int
    multiplicity: int
    fingerprint: tuple
    module: FFModule

    def certificate(self) -> dict:
        f = self.module.field
        return {
            "field": {"char": f.char, "degree": f.degree},
            "dim": self.dim,
            "multiplicity": self.multiplicity,
            "generators": [
                [int(c) for c in m.reshape(-1)] for m in self.module.mats
            ],
        }


@dataclass
class FactorMultiset:
    """Composition factors of one module, grouped by isomorphism class."""

    factors: list[FactorRecord]
    total_dim: int

    @property
    def distinct_count(self) -> int:
        return len(self.factors)

    def to_json(self) -> dict:
        return {
            "total_dim": self.total_dim,
            "factors": [f.certificate() for f in self.factors],
        }


def chop(module: FFModule, seed) -> FactorMultiset:
    leaves = chop_modules(module, seed)
    if sum(m.dim for m in leaves) != module.dim:
        raise AssertionError("composition factor dimensions do not sum up")
    grouped: dict[tuple, FactorRecord] = {}
    for leaf in leaves:
        fp = canonical_form(leaf)
        if fp in grouped:
            grouped[fp].multiplicity += 1
        else:
            grouped[fp] = FactorRecord(leaf.dim, 1, fp, leaf)
    factors = sorted(grouped.values(), key=lambda f: (f.dim, repr(f.fingerprint)))
    return FactorMultiset(factors, module.dim)


def count_simples_meataxe(
    group: WeylGroup, field: FField, q, seed: int = 0, retries: int = 5
) -> int:
    """Number of pairwise non-isomorphic factors of the regular module."""
    tag = f"regular:{group.datum.label}:l={field.char}^{field.degree}"
    module = regular_module(group, field, q, tag)
    last: MeatAxeBudgetError | None = None
    for attempt in range(retries):
        try:
            return chop(module, np.random.SeedSequence([seed, attempt])).distinct_count
        except MeatAxeBudgetError as err:
            last = err
    raise last
