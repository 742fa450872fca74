"""Vectorized dense matrices over GF(ell**d), backed by numpy.

A matrix over GF(ell**d) is an int64 array of shape (n, m, d): the trailing
axis holds polynomial coefficients modulo the field's defining polynomial.
Heavy products and eliminations run in float64 (BLAS); this is exact because
factors and pivot rows are always reduced mod ell first, which keeps every
intermediate value far below 2**53.
"""

from __future__ import annotations

import numpy as np

from .ff import FFElem, FField


class FFKernel:
    """Arithmetic context for numpy matrices over one finite field."""

    def __init__(self, field: FField):
        self.field = field
        self.ell = field.char
        self.d = field.degree
        # additive growth bound in eliminations: delta <= d^2 * ell^3 per step
        assert self.d**2 * self.ell**3 * 10**7 < 2**53
        # reduction rows for x**k, k = d .. 2d-2
        red = np.zeros((max(self.d - 1, 0), self.d), dtype=np.int64)
        if self.d > 1:
            top = [(-c) % self.ell for c in field.modulus[:-1]]
            cur = list(top)
            red[0] = cur
            for k in range(1, self.d - 1):
                lead = cur[-1]
                cur = [0] + cur[:-1]
                if lead:
                    cur = [(a + lead * b) % self.ell for a, b in zip(cur, top)]
                red[k] = cur
        self.red = red
        self.redf = red.astype(np.float64)
        self._inv_table: np.ndarray | None = None

    # -- scalars -----------------------------------------------------------

    def scalar(self, x) -> np.ndarray:
        """Coefficient vector of an FFElem or a prime-field integer."""
        if isinstance(x, FFElem):
            return np.array(x.coeffs, dtype=np.int64)
        out = np.zeros(self.d, dtype=np.int64)
        out[0] = x % self.ell
        return out

    def to_elem(self, vec: np.ndarray) -> FFElem:
        return FFElem(self.field, [int(c) % self.ell for c in vec])

    def scalar_inv(self, vec: np.ndarray) -> np.ndarray:
        if self.field.order <= 65536:
            if self._inv_table is None:
                table = np.zeros((self.field.order, self.d), dtype=np.int64)
                for code in range(1, self.field.order):
                    digits, c = [], code
                    for _ in range(self.d):
                        digits.append(c % self.ell)
                        c //= self.ell
                    table[code] = self.scalar(FFElem(self.field, digits).inverse())
                self._inv_table = table
            code = 0
            for i in range(self.d - 1, -1, -1):
                code = code * self.ell + int(vec[i]) % self.ell
            return self._inv_table[code]
        return self.scalar(self.to_elem(vec).inverse())

    # -- construction ------------------------------------------------------

    def zeros(self, *shape) -> np.ndarray:
        return np.zeros(shape + (self.d,), dtype=np.int64)

    def eye(self, n: int) -> np.ndarray:
        out = self.zeros(n, n)
        out[np.arange(n), np.arange(n), 0] = 1
        return out

    def is_zero(self, a: np.ndarray) -> bool:
        return not a.any()

    # -- elementwise products ------------------------------------------------

    def _reduce_conv(self, conv: np.ndarray) -> np.ndarray:
        """Fold x**k coefficients for k >= d back down; conv has 2d-1 coeffs."""
        if self.d == 1:
            return conv % self.ell
        low = conv[..., : self.d]
        high = conv[..., self.d :]
        return (low + high @ self.red) % self.ell

    def polymul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Broadcasted coefficientwise product of field elements (int64)."""
        if self.d == 1:
            return (a * b) % self.ell
        shape = np.broadcast_shapes(a.shape[:-1], b.shape[:-1])
        conv = np.zeros(shape + (2 * self.d - 1,), dtype=np.int64)
        for i in range(self.d):
            for j in range(self.d):
                conv[..., i + j] += a[..., i] * b[..., j]
        return self._reduce_conv(conv)

    # -- matmul ------------------------------------------------------------

    def _planes(self, a: np.ndarray) -> list[np.ndarray]:
        return [np.ascontiguousarray(a[..., i], dtype=np.float64) for i in range(self.d)]

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """(n, k, d) @ (k, m, d) -> (n, m, d), exact via float64 BLAS."""
        ap = self._planes(a % self.ell)
        bp = self._planes(b % self.ell)
        conv = [None] * (2 * self.d - 1)
        for i in range(self.d):
            for j in range(self.d):
                prod = ap[i] @ bp[j]
                k = i + j
                conv[k] = prod if conv[k] is None else conv[k] + prod
        out = np.empty((a.shape[0], b.shape[1], self.d), dtype=np.int64)
        low = [np.asarray(np.rint(c), dtype=np.int64) % self.ell for c in conv[: self.d]]
        for k in range(self.d, 2 * self.d - 1):
            high = np.asarray(np.rint(conv[k]), dtype=np.int64) % self.ell
            for i in range(self.d):
                if self.red[k - self.d, i]:
                    low[i] = low[i] + high * self.red[k - self.d, i]
        for i in range(self.d):
            out[..., i] = low[i] % self.ell
        return out

    def matpow_word(self, mats: list[np.ndarray], word) -> np.ndarray:
        out = mats[word[0]]
        for s in word[1:]:
            out = self.matmul(out, mats[s])
        return out

    # -- elimination -------------------------------------------------------

    def _polymul_row(self, row: np.ndarray, scal: np.ndarray) -> np.ndarray:
        """row (m, d) float64 times reduced scalar (d,) float64, reduced."""
        if self.d == 1:
            return np.mod(row * scal[0], self.ell)
        conv = np.zeros((row.shape[0], 2 * self.d - 1))
        for i in range(self.d):
            if scal[i]:
                conv[:, i : i + self.d] += row * scal[i]
        low = np.mod(conv[:, : self.d], self.ell)
        high = np.mod(conv[:, self.d :], self.ell)
        return np.mod(low + high @ self.redf, self.ell)

    def _outer_update(self, block: np.ndarray, f: np.ndarray, row: np.ndarray) -> None:
        """block (k, m, d) -= f (k, d) outer row (m, d), in place (float64).

        Both f and row must be reduced mod ell; deltas stay below d**2*ell**3.
        """
        if self.d == 1:
            block[:, :, 0] -= f[:, 0:1] * row[None, :, 0]
            return
        if self.d == 2:
            f0, f1 = f[:, 0:1], f[:, 1:2]
            r0, r1 = row[None, :, 0], row[None, :, 1]
            c2 = f1 * r1
            block[:, :, 0] -= f0 * r0 + self.redf[0, 0] * c2
            block[:, :, 1] -= f0 * r1 + f1 * r0 + self.redf[0, 1] * c2
            return
        conv = np.zeros((block.shape[0], block.shape[1], 2 * self.d - 1))
        for i in range(self.d):
            fi = f[:, i : i + 1]
            for j in range(self.d):
                conv[:, :, i + j] += fi * row[None, :, j]
        block[:, :, : self.d] -= conv[:, :, : self.d]
        block[:, :, : self.d] -= conv[:, :, self.d :] @ self.redf

    def _forward(self, a: np.ndarray) -> tuple[np.ndarray, list[int]]:
        """Forward elimination in float64; returns (workspace, pivots).

        Pivot row i sits at workspace row i, normalized and reduced; rows
        below the pivot count are unreduced garbage spanning the same space.
        """
        w = np.asarray(a % self.ell, dtype=np.float64)
        n, m = w.shape[0], w.shape[1]
        pivots: list[int] = []
        r = 0
        for col in range(m):
            if r >= n:
                break
            w[r:, col, :] = np.mod(w[r:, col, :], self.ell)
            nz = np.nonzero(w[r:, col, :].any(axis=-1))[0]
            if nz.size == 0:
                continue
            p = r + int(nz[0])
            if p != r:
                w[[r, p]] = w[[p, r]]
            w[r] = np.mod(w[r], self.ell)
            inv = self.scalar_inv(np.asarray(w[r, col], dtype=np.int64)).astype(np.float64)
            w[r] = self._polymul_row(w[r], inv)
            if r + 1 < n:
                f = np.mod(w[r + 1 :, col, :], self.ell)
                self._outer_update(w[r + 1 :], f, w[r])
            pivots.append(col)
            r += 1
        return w, pivots

    def rank(self, a: np.ndarray) -> int:
        return len(self.rref(a)[1])

    def rref(self, a: np.ndarray) -> tuple[np.ndarray, list[int]]:
        """Reduced row echelon form (pivot rows only) and pivot columns.

        Divide and conquer on rows so most of the work happens inside the
        BLAS-backed matmul: reduce the bottom half against the top half's
        RREF, recurse, then back-clean the top rows and merge by pivot.
        """
        if a.shape[0] <= 128:
            return self._rref_base(a)
        h = a.shape[0] // 2
        top, p1 = self.rref(np.ascontiguousarray(a[:h]))
        bottom = self.reduce_rows(np.ascontiguousarray(a[h:]), top, p1)
        bot, p2 = self.rref(bottom)
        if p2:
            top = self.reduce_rows(top, bot, p2)
        rows = np.concatenate([top, bot])
        pivots = p1 + p2
        order = np.argsort(np.array(pivots, dtype=np.int64), kind="stable")
        return np.ascontiguousarray(rows[order]), sorted(pivots)

    def _rref_base(self, a: np.ndarray) -> tuple[np.ndarray, list[int]]:
        w, pivots = self._forward(a)
        r = len(pivots)
        w = w[:r]
        for i in range(r - 1, 0, -1):
            col = pivots[i]
            w[i] = np.mod(w[i], self.ell)
            f = np.mod(w[:i, col, :], self.ell).copy()
            if f.any():
                self._outer_update(w[:i], f, w[i])
        out = np.asarray(np.rint(np.mod(w, self.ell)), dtype=np.int64)
        return out, pivots

    def rref_extend(
        self, basis: np.ndarray, pivots: list[int], newrows: np.ndarray
    ) -> tuple[np.ndarray, list[int]]:
        """Grow an RREF basis by rows already reduced against it."""
        ext, p2 = self.rref(newrows)
        if not p2:
            return basis, pivots
        if pivots:
            basis = self.reduce_rows(basis, ext, p2)
        rows = np.concatenate([basis, ext])
        allp = pivots + p2
        order = np.argsort(np.array(allp, dtype=np.int64), kind="stable")
        return np.ascontiguousarray(rows[order]), sorted(allp)

    def nullspace(self, a: np.ndarray) -> np.ndarray:
        """Right kernel: vectors v with a @ v = 0, returned as rows."""
        n, m = a.shape[0], a.shape[1]
        red, pivots = self.rref(a)
        pivset = set(pivots)
        free = [j for j in range(m) if j not in pivset]
        basis = self.zeros(len(free), m)
        for k, f in enumerate(free):
            basis[k, f, 0] = 1
            for i, p in enumerate(pivots):
                basis[k, p] = (-red[i, f]) % self.ell
        return basis

    def left_nullspace(self, a: np.ndarray) -> np.ndarray:
        """Rows x with x @ a = 0."""
        return self.nullspace(np.ascontiguousarray(a.transpose(1, 0, 2)))

    # -- row-space bookkeeping (for spinning) --------------------------------

    def reduce_rows(self, vecs: np.ndarray, basis: np.ndarray, pivots: list[int]) -> np.ndarray:
        """Reduce rows against a full-RREF basis with the given pivots."""
        if len(pivots) == 0 or vecs.shape[0] == 0:
            return vecs % self.ell
        piv = np.array(pivots)
        coeffs = np.ascontiguousarray(vecs[:, piv, :])
        delta = self.matmul(coeffs, basis)
        return (vecs - delta) % self.ell
