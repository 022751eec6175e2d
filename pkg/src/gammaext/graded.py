"""Finitely supported graded F_p vector spaces and degree-homogeneous maps.

A GradedSpace is an ordered basis of (label, degree) pairs; labels are
structured hashable values and the basis order is part of the data, so every
construction downstream (tensor bases, dual bases, action matrices) is
deterministic.

Shift convention, fixed repo-wide: shifting by n moves contents down by n,
i.e. shift(M, n) has in degree i what M had in degree n + i.  Consequently
shift(V_at_0, -2j) is V concentrated in degree 2j.

A GradedMap of shift n sends degree i into degree i + n; its total matrix is
block-supported on the compatible degree pairs, which the constructor checks.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import InputError, InvariantError
from .linalg import Mat


@dataclass(frozen=True)
class GradedSpace:
    p: int
    labels: tuple
    degrees: tuple

    def __post_init__(self):
        if len(self.labels) != len(self.degrees):
            raise InputError("labels and degrees must be parallel")
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "degrees", tuple(int(d) for d in self.degrees))

    # -- constructors ----------------------------------------------------
    @staticmethod
    def from_pairs(p, pairs) -> "GradedSpace":
        pairs = list(pairs)
        return GradedSpace(p, tuple(l for l, _ in pairs), tuple(d for _, d in pairs))

    @staticmethod
    def concentrated(p, dim, degree=0, tag="e") -> "GradedSpace":
        return GradedSpace(p, tuple((tag, i) for i in range(dim)), (degree,) * dim)

    @staticmethod
    def zero(p) -> "GradedSpace":
        return GradedSpace(p, (), ())

    # -- structure ---------------------------------------------------------
    @property
    def dim(self) -> int:
        return len(self.labels)

    def degrees_present(self):
        return sorted(set(self.degrees))

    def dim_in(self, degree: int) -> int:
        return sum(1 for d in self.degrees if d == degree)

    def positions_in(self, degree: int) -> np.ndarray:
        return np.array([i for i, d in enumerate(self.degrees) if d == degree], dtype=np.int64)

    def index(self, label) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise InputError(f"label {label!r} not in basis") from None

    def bottom(self):
        return min(self.degrees) if self.degrees else None

    def top(self):
        return max(self.degrees) if self.degrees else None

    # -- operations ---------------------------------------------------------
    def shift(self, n: int) -> "GradedSpace":
        return GradedSpace(self.p, self.labels, tuple(d - n for d in self.degrees))

    def dual(self) -> "GradedSpace":
        return GradedSpace(
            self.p,
            tuple(("dual", l) for l in self.labels),
            tuple(-d for d in self.degrees),
        )

    def tensor(self, other: "GradedSpace") -> "GradedSpace":
        if other.p != self.p:
            raise InputError("characteristic mismatch in tensor")
        labels = []
        degrees = []
        for l1, d1 in zip(self.labels, self.degrees):
            for l2, d2 in zip(other.labels, other.degrees):
                labels.append((l1, l2))
                degrees.append(d1 + d2)
        return GradedSpace(self.p, tuple(labels), tuple(degrees))

    def poincare(self):
        """Sorted [(degree, dim), ...] with positive dims only."""
        counts = {}
        for d in self.degrees:
            counts[d] = counts.get(d, 0) + 1
        return [(d, counts[d]) for d in sorted(counts)]


def poincare_to_json(series):
    return [[int(d), int(m)] for d, m in series]


def convolve_poincare(s1, s2):
    """Poincare series of a tensor product."""
    out = {}
    for d1, m1 in s1:
        for d2, m2 in s2:
            out[d1 + d2] = out.get(d1 + d2, 0) + m1 * m2
    return [(d, out[d]) for d in sorted(out) if out[d]]


class GradedMap:
    """Degree-homogeneous linear map between graded spaces.

    shift n means degree i of the source lands in degree i + n of the target.
    The total matrix is (target.dim x source.dim), column-vector convention.
    """

    __slots__ = ("source", "target", "n", "mat")

    def __init__(self, source: GradedSpace, target: GradedSpace, n: int, mat: Mat):
        if mat.p != source.p or target.p != source.p:
            raise InputError("characteristic mismatch in GradedMap")
        if mat.rows != target.dim or mat.cols != source.dim:
            raise InputError(
                f"matrix shape {mat.rows}x{mat.cols} does not match "
                f"target dim {target.dim}, source dim {source.dim}"
            )
        for j, dj in enumerate(source.degrees):
            for i in np.nonzero(mat.a[:, j])[0]:
                if target.degrees[int(i)] != dj + n:
                    raise InvariantError(
                        f"entry ({int(i)},{j}) violates shift {n}: "
                        f"{dj} -> {target.degrees[int(i)]}"
                    )
        self.source = source
        self.target = target
        self.n = n
        self.mat = mat

    @staticmethod
    def zero(source, target, n=0):
        return GradedMap(source, target, n, Mat.zeros(source.p, target.dim, source.dim))

    @staticmethod
    def identity(space):
        return GradedMap(space, space, 0, Mat.identity(space.p, space.dim))

    def block(self, degree: int) -> Mat:
        """Submatrix from source degree `degree` to target degree degree + n."""
        rows = self.target.positions_in(degree + self.n)
        cols = self.source.positions_in(degree)
        return Mat(self.mat.p, self.mat.a[np.ix_(rows, cols)])

    def compose(self, inner: "GradedMap") -> "GradedMap":
        """self after inner."""
        if inner.target is not self.source and inner.target.labels != self.source.labels:
            raise InputError("composition mismatch")
        return GradedMap(inner.source, self.target, self.n + inner.n, self.mat @ inner.mat)

    def __eq__(self, other):
        return (
            isinstance(other, GradedMap)
            and self.n == other.n
            and self.mat == other.mat
            and self.source.labels == other.source.labels
            and self.target.labels == other.target.labels
        )

    def __repr__(self):
        return f"GradedMap(shift={self.n}, {self.target.dim}x{self.source.dim})"
