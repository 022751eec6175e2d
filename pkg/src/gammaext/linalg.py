"""Exact dense linear algebra over the prime field F_p.

Matrices are numpy int64 arrays with entries normalized to [0, p).  All
pivoting is deterministic (leftmost nonzero column, topmost available row),
so every derived basis -- kernel, image, reduced echelon form -- is the same
on every run.

For p = 2, elimination above a small size threshold runs on a bit-packed
representation (64 columns per uint64 word); it produces the identical
reduced row echelon form as the generic path and is cross-checked against it
in the test suite.
"""

from __future__ import annotations

import sys

import numpy as np

from .errors import InputError

_GF2_THRESHOLD = 16384  # entries; below this the generic path is faster


def _check_prime(p: int) -> None:
    if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
        raise InputError(f"characteristic must be prime, got {p}")


def modinv(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroDivisionError("not invertible mod %d" % p)
    return pow(a, p - 2, p)


def _as_array(entries, p: int) -> np.ndarray:
    a = np.asarray(entries, dtype=np.int64)
    if a.ndim != 2:
        raise InputError(f"matrix must be 2-dimensional, got shape {a.shape}")
    return a % p


class _Echelon:
    """Reduced row echelon form with O(1) access to single columns.

    Holds either a dense int64 array or (for p = 2) a bit-packed uint64
    array; only the first `rank` rows are meaningful.
    """

    def __init__(self, p, rank, pivots, dense=None, packed=None, ncols=0):
        self.p = p
        self.rank = rank
        self.pivots = pivots
        self._dense = dense
        self._packed = packed
        self.ncols = ncols

    def col(self, c: int) -> np.ndarray:
        """Column c restricted to the first `rank` rows."""
        if self._dense is not None:
            return self._dense[: self.rank, c]
        w, b = divmod(c, 64)
        return ((self._packed[: self.rank, w] >> np.uint64(b)) & np.uint64(1)).astype(np.int64)

    def dense(self) -> np.ndarray:
        if self._dense is None:
            self._dense = _unpack_gf2(self._packed, self.ncols)
        return self._dense


def _pack_gf2(a: np.ndarray) -> np.ndarray:
    n, m = a.shape
    words = (m + 63) // 64
    padded = np.zeros((n, words * 64), dtype=np.uint8)
    padded[:, :m] = (a & 1).astype(np.uint8)
    by = np.packbits(padded, axis=1, bitorder="little")
    if sys.byteorder != "little":  # pragma: no cover
        by = by.reshape(n, words, 8)[:, :, ::-1].reshape(n, words * 8)
    return np.ascontiguousarray(by).view(np.uint64).reshape(n, words)

def _unpack_gf2(packed: np.ndarray, m: int) -> np.ndarray:
    n = packed.shape[0]
    by = packed.view(np.uint8).reshape(n, -1)
    if sys.byteorder != "little":  # pragma: no cover
        words = packed.shape[1]
        by = by.reshape(n, words, 8)[:, :, ::-1].reshape(n, words * 8)
    bits = np.unpackbits(by, axis=1, bitorder="little")[:, :m]
    return bits.astype(np.int64)


def _echelon_gf2(a: np.ndarray) -> _Echelon:
    n, m = a.shape
    P = _pack_gf2(a)
    one = np.uint64(1)
    pivots = []
    r = 0
    for c in range(m):
        if r == n:
            break
        w, b = divmod(c, 64)
        mask = one << np.uint64(b)
        nz = np.nonzero(P[r:, w] & mask)[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            P[[r, i]] = P[[i, r]]
        rows = np.nonzero(P[:, w] & mask)[0]
        rows = rows[rows != r]
        if rows.size:
            P[rows] ^= P[r]
        pivots.append(c)
        r += 1
    return _Echelon(2, r, pivots, packed=P, ncols=m)


def _echelon_generic(a: np.ndarray, p: int) -> _Echelon:
    R = a.copy()
    n, m = R.shape
    pivots = []
    r = 0
    for c in range(m):
        if r == n:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            R[[r, i]] = R[[i, r]]
        inv = modinv(int(R[r, c]), p)
        if inv != 1:
            R[r] = (R[r] * inv) % p
        rows = np.nonzero(R[:, c])[0]
        rows = rows[rows != r]
        if rows.size:
            R[rows] = (R[rows] - np.outer(R[rows, c], R[r])) % p
        pivots.append(c)
        r += 1
    return _Echelon(p, r, pivots, dense=R, ncols=m)


def echelon(a: np.ndarray, p: int, force: str | None = None) -> _Echelon:
    """Reduced row echelon form of `a` mod p (deterministic pivoting).

    force: None (auto), "gf2" or "generic"; used by tests to cross-check the
    two elimination kernels.
    """
    a = _as_array(a, p)
    if force == "gf2" or (force is None and p == 2 and a.size >= _GF2_THRESHOLD):
        if p != 2:
            raise InputError("gf2 path requires p = 2")
        return _echelon_gf2(a)
    return _echelon_generic(a, p)


def rank_of(a, p: int) -> int:
    return echelon(a, p).rank


def kernel_array(a, p: int, force: str | None = None) -> np.ndarray:
    """Basis of the right null space, as columns of an (m x k) array.

    Free columns are taken in ascending order; each basis vector has a 1 in
    its free coordinate, making the basis canonical.
    """
    a = _as_array(a, p)
    ech = echelon(a, p, force=force)
    m = a.shape[1]
    free = [c for c in range(m) if c not in set(ech.pivots)]
    K = np.zeros((m, len(free)), dtype=np.int64)
    for j, f in enumerate(free):
        K[f, j] = 1
        col = ech.col(f)
        for i, pc in enumerate(ech.pivots):
            K[pc, j] = (-int(col[i])) % p
    return K


def image_array(a, p: int) -> np.ndarray:
    """Pivot columns of the original matrix: a canonical basis of the column
    space."""
    a = _as_array(a, p)
    ech = echelon(a, p)
    return a[:, ech.pivots]


def solve_array(a, b, p: int):
    """One solution x of a @ x = b mod p, or None.

    Deterministic: free coordinates are set to zero.
    """
    a = _as_array(a, p)
    b = np.asarray(b, dtype=np.int64) % p
    if b.ndim != 1 or b.shape[0] != a.shape[0]:
        raise InputError("right-hand side shape mismatch")
    aug = np.concatenate([a, b[:, None]], axis=1)
    ech = echelon(aug, p)
    m = a.shape[1]
    if ech.pivots and ech.pivots[-1] == m:
        return None
    x = np.zeros(m, dtype=np.int64)
    col = ech.col(m)
    for i, pc in enumerate(ech.pivots):
        x[pc] = int(col[i]) % p
    return x


def in_span(basis: np.ndarray, v: np.ndarray, p: int) -> bool:
    """Is v in the column space of `basis`?"""
    return solve_array(basis, v, p) is not None


class Mat:
    """Immutable matrix over F_p."""

    __slots__ = ("p", "a")

    def __init__(self, p: int, entries):
        _check_prime(p)
        object.__setattr__(self, "p", p)
        a = _as_array(entries, p)
        a.setflags(write=False)
        object.__setattr__(self, "a", a)

    def __setattr__(self, *_):
        raise AttributeError("Mat is immutable")

    # -- constructors -------------------------------------------------
    @staticmethod
    def identity(p: int, n: int) -> "Mat":
        return Mat(p, np.eye(n, dtype=np.int64))

    @staticmethod
    def zeros(p: int, n: int, m: int) -> "Mat":
        return Mat(p, np.zeros((n, m), dtype=np.int64))

    # -- basic structure ----------------------------------------------
    @property
    def rows(self) -> int:
        return self.a.shape[0]

    @property
    def cols(self) -> int:
        return self.a.shape[1]

    def _chk(self, other: "Mat") -> None:
        if not isinstance(other, Mat):
            raise InputError("expected a Mat")
        if other.p != self.p:
            raise InputError(f"characteristic mismatch: {self.p} vs {other.p}")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Mat)
            and other.p == self.p
            and other.a.shape == self.a.shape
            and bool(np.array_equal(other.a, self.a))
        )

    def __hash__(self):
        return hash((self.p, self.a.shape, self.a.tobytes()))

    def __repr__(self):
        return f"Mat(p={self.p}, {self.rows}x{self.cols})"

    # -- arithmetic ----------------------------------------------------
    def __add__(self, other: "Mat") -> "Mat":
        self._chk(other)
        return Mat(self.p, self.a + other.a)

    def __sub__(self, other: "Mat") -> "Mat":
        self._chk(other)
        return Mat(self.p, self.a - other.a)

    def __neg__(self) -> "Mat":
        return Mat(self.p, -self.a)

    def scale(self, c: int) -> "Mat":
        return Mat(self.p, self.a * (c % self.p))

    def __matmul__(self, other: "Mat") -> "Mat":
        self._chk(other)
        if self.cols != other.rows:
            raise InputError(f"shape mismatch {self.a.shape} @ {other.a.shape}")
        return Mat(self.p, self.a @ other.a)

    def transpose(self) -> "Mat":
        return Mat(self.p, self.a.T)

    # -- elimination-derived data ---------------------------------------
    def rref(self):
        """(rank, pivot columns, reduced form)."""
        ech = echelon(self.a, self.p)
        return ech.rank, tuple(ech.pivots), Mat(self.p, ech.dense()[: ech.rank])

    def rank(self) -> int:
        return rank_of(self.a, self.p)

    def kernel(self) -> "Mat":
        """Columns span the right null space."""
        return Mat(self.p, kernel_array(self.a, self.p))

    def image(self) -> "Mat":
        """Columns are the pivot columns of self (a column-space basis)."""
        return Mat(self.p, image_array(self.a, self.p))

    def solve(self, b):
        """Solution of self @ x = b (1-d b), or None."""
        return solve_array(self.a, b, self.p)

    # -- structural products --------------------------------------------
    def kron(self, other: "Mat") -> "Mat":
        self._chk(other)
        return Mat(self.p, np.kron(self.a, other.a))

    def dsum(self, other: "Mat") -> "Mat":
        self._chk(other)
        out = np.zeros((self.rows + other.rows, self.cols + other.cols), dtype=np.int64)
        out[: self.rows, : self.cols] = self.a
        out[self.rows :, self.cols :] = other.a
        return Mat(self.p, out)

    def to_lists(self):
        return [[int(x) for x in row] for row in self.a]


def kron(a: Mat, b: Mat) -> Mat:
    return a.kron(b)


def dsum(a: Mat, b: Mat) -> Mat:
    return a.dsum(b)
