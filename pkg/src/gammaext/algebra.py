"""Finite-dimensional graded F_p algebras presented by structure constants.

Three presentations share one interface:

- MonomialAlgebra: the product of two basis vectors is either zero or a
  single basis vector with coefficient 1 (matrix units, truncated
  polynomials, and their tensor products).  Stored as an index table, which
  is what the vectorized divided-power kernels consume.
- TableAlgebra: explicit sparse structure constants; small inputs only.
- GammaAlgebra (built in divided.py): divided power Gamma^d of a monomial or
  table algebra, with products computed lazily by orbit counting.

The unit is stored as a coefficient vector, not a basis index: the unit of
Gamma^d(End(k^n)) is the sum of all diagonal weight idempotents.
"""

from __future__ import annotations

import numpy as np

from .errors import InputError, InvariantError
from .graded import GradedSpace


class Algebra:
    """Common interface; concrete classes fill in mul_basis."""

    p: int
    space: GradedSpace
    unit: np.ndarray
    key: tuple

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def degrees(self):
        return self.space.degrees

    def label(self, i: int):
        return self.space.labels[i]

    def mul_basis(self, i: int, j: int) -> dict:
        raise NotImplementedError

    # -- generic element arithmetic (dense coefficient vectors) ----------
    def mul_vec(self, u, v) -> np.ndarray:
        u = np.asarray(u, dtype=np.int64) % self.p
        v = np.asarray(v, dtype=np.int64) % self.p
        out = np.zeros(self.dim, dtype=np.int64)
        for i in np.nonzero(u)[0]:
            for j in np.nonzero(v)[0]:
                for k, c in self.mul_basis(int(i), int(j)).items():
                    out[k] += int(u[i]) * int(v[j]) * c
        return out % self.p

    def left_mult_matrix(self, i: int) -> np.ndarray:
        """Matrix of x -> e_i * x on basis coordinates."""
        out = np.zeros((self.dim, self.dim), dtype=np.int64)
        for j in range(self.dim):
            for k, c in self.mul_basis(i, j).items():
                out[k, j] = c
        return out

    def right_mult_matrix(self, j: int) -> np.ndarray:
        """Matrix of x -> x * e_j on basis coordinates."""
        out = np.zeros((self.dim, self.dim), dtype=np.int64)
        for i in range(self.dim):
            for k, c in self.mul_basis(i, j).items():
                out[k, i] = c
        return out

    def full_table(self) -> np.ndarray:
        """Dense (dim, dim, dim) tensor P[i, j, z] of structure constants."""
        P = np.zeros((self.dim, self.dim, self.dim), dtype=np.int64)
        for i in range(self.dim):
            for j in range(self.dim):
                for z, c in self.mul_basis(i, j).items():
                    P[i, j, z] = c
        return P

    # -- invariant suite ---------------------------------------------------
    def check_unital(self) -> None:
        for j in range(self.dim):
            e = np.zeros(self.dim, dtype=np.int64)
            e[j] = 1
            if not np.array_equal(self.mul_vec(self.unit, e), e):
                raise InvariantError(f"unit fails on the left at basis {j}")
            if not np.array_equal(self.mul_vec(e, self.unit), e):
                raise InvariantError(f"unit fails on the right at basis {j}")

    def check_associative(self) -> None:
        """Exhaustive associativity check; intended for dim <= 200."""
        P = self.full_table()
        L = np.transpose(P, (0, 2, 1))  # L[i] = left mult matrix of e_i
        for i in range(self.dim):
            lhs = np.tensordot(P[i], L, axes=(1, 0)) % self.p  # L_{e_i e_j}
            rhs = np.matmul(L[i], L) % self.p                  # L[i] L[j]
            if not np.array_equal(lhs, rhs):
                j = int(np.nonzero((lhs != rhs).any(axis=(1, 2)))[0][0])
                raise InvariantError(f"associativity fails at basis pair ({i},{j})")

    def check_degrees(self) -> None:
        degs = self.degrees
        for i in range(self.dim):
            for j in range(self.dim):
                for z, c in self.mul_basis(i, j).items():
                    if c % self.p and degs[z] != degs[i] + degs[j]:
                        raise InvariantError(
                            f"product of degrees {degs[i]},{degs[j]} hit degree {degs[z]}"
                        )


class MonomialAlgebra(Algebra):
    """prod[i, j] = index of e_i e_j, or -1 when the product vanishes."""

    def __init__(self, p, space: GradedSpace, prod: np.ndarray, unit, key):
        if space.p != p:
            raise InputError("characteristic mismatch")
        self.p = p
        self.space = space
        self.prod = np.asarray(prod, dtype=np.int64)
        if self.prod.shape != (space.dim, space.dim):
            raise InputError("product table shape mismatch")
        self.unit = np.asarray(unit, dtype=np.int64) % p
        self.key = key

    def mul_basis(self, i, j):
        z = int(self.prod[i, j])
        return {} if z < 0 else {z: 1}


class TableAlgebra(Algebra):
    def __init__(self, p, space: GradedSpace, table: dict, unit, key=("table",)):
        self.p = p
        self.space = space
        self.table = {
            (i, j): {z: c % p for z, c in row.items() if c % p}
            for (i, j), row in table.items()
        }
        self.unit = np.asarray(unit, dtype=np.int64) % p
        self.key = key

    def mul_basis(self, i, j):
        return self.table.get((i, j), {})


# -- stock monomial algebras ---------------------------------------------

def field_algebra(p: int) -> MonomialAlgebra:
    space = GradedSpace(p, (("one",),), (0,))
    return MonomialAlgebra(p, space, np.zeros((1, 1), dtype=np.int64), [1], key=("k", p))


def truncated_polynomial(p: int) -> MonomialAlgebra:
    """A = k[x]/x^p with |x| = 2; basis x^0..x^{p-1}."""
    labels = tuple(("x", j) for j in range(p))
    space = GradedSpace(p, labels, tuple(2 * j for j in range(p)))
    prod = np.full((p, p), -1, dtype=np.int64)
    for i in range(p):
        for j in range(p):
            if i + j < p:
                prod[i, j] = i + j
    unit = np.zeros(p, dtype=np.int64)
    unit[0] = 1
    return MonomialAlgebra(p, space, prod, unit, key=("A", p))


def matrix_units(p: int, n: int) -> MonomialAlgebra:
    """End(k^n) on the basis e_ab (row a, column b), ordered lexicographically."""
    labels = tuple(("e", a, b) for a in range(n) for b in range(n))
    space = GradedSpace(p, labels, (0,) * (n * n))
    idx = {(a, b): a * n + b for a in range(n) for b in range(n)}
    prod = np.full((n * n, n * n), -1, dtype=np.int64)
    for (a, b), i in idx.items():
        for (c, d), j in idx.items():
            if b == c:
                prod[i, j] = idx[(a, d)]
    unit = np.zeros(n * n, dtype=np.int64)
    for a in range(n):
        unit[idx[(a, a)]] = 1
    return MonomialAlgebra(p, space, prod, unit, key=("end", p, n))


def tensor_monomial(B: MonomialAlgebra, C: MonomialAlgebra) -> MonomialAlgebra:
    if B.p != C.p:
        raise InputError("characteristic mismatch")
    space = B.space.tensor(C.space)
    nb, nc = B.dim, C.dim
    pb = B.prod[:, None, :, None]
    pc = C.prod[None, :, None, :]
    prod = np.where((pb >= 0) & (pc >= 0), pb * nc + pc, -1).reshape(nb * nc, nb * nc)
    unit = np.kron(B.unit, C.unit) % B.p
    return MonomialAlgebra(B.p, space, prod, unit, key=("tensor", B.key, C.key))
