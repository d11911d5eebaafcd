"""Conjugacy classes of finite-rank self-adjoint operators, in spectral form.

A class is the data (alpha, d): distinct nonzero rational eigenvalues with
the dimensions of their maximal eigenspaces.  An operator is stored as its
list of (eigenvalue, maximal eigenspace) pairs and is never reconstructed
from a matrix by eigendecomposition; the kernel is not recorded as an
eigenspace.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from .errors import DimensionMismatch, OrthoapartError
from .matrices import Matrix, real_fraction
from .compatibility import is_compatible
from .subspaces import Subspace, span_sum


@dataclass(frozen=True)
class ClassDescriptor:
    """A conjugacy class: ambient dimension, eigenvalues, eigenspace dims."""

    n: int
    alphas: Tuple[Fraction, ...]
    dims: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "alphas", tuple(Fraction(a) for a in self.alphas))
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))
        if len(self.alphas) != len(self.dims):
            raise OrthoapartError("alphas and dims must have equal length")
        if len(set(self.alphas)) != len(self.alphas):
            raise OrthoapartError("eigenvalues must be pairwise distinct")
        if any(a == 0 for a in self.alphas):
            raise OrthoapartError("eigenvalues must be nonzero")
        if any(d < 1 for d in self.dims):
            raise OrthoapartError("eigenspace dimensions must be positive")
        if self.rank > self.n:
            raise OrthoapartError(
                f"rank {self.rank} exceeds ambient dimension {self.n}"
            )

    @property
    def m(self) -> int:
        return len(self.alphas)

    @property
    def rank(self) -> int:
        return sum(self.dims)

    @property
    def distinct_dims(self) -> bool:
        """True iff all eigenspace dimensions are pairwise distinct.

        Informational only; no operation refuses to run when this is false.
        """
        return len(set(self.dims)) == len(self.dims)

    @property
    def is_projection_class(self) -> bool:
        return self.m == 1 and self.alphas[0] == 1


@dataclass(frozen=True)
class SpectralOperator:
    cls: ClassDescriptor
    eigenspaces: Tuple[Tuple[Fraction, Subspace], ...]

    def __post_init__(self):
        object.__setattr__(
            self,
            "eigenspaces",
            tuple((Fraction(a), x) for a, x in self.eigenspaces),
        )
        c = self.cls
        if len(self.eigenspaces) != c.m:
            raise OrthoapartError("one eigenspace per eigenvalue required")
        for (a, x), alpha, d in zip(self.eigenspaces, c.alphas, c.dims):
            if a != alpha:
                raise OrthoapartError(f"eigenvalue {a} out of class order (expected {alpha})")
            if x.ambient_dim != c.n:
                raise DimensionMismatch("eigenspace ambient dimension mismatch")
            if x.dim != d:
                raise OrthoapartError(f"eigenspace for {a} has dim {x.dim}, class says {d}")
        spaces = [x for _, x in self.eigenspaces]
        for i in range(len(spaces)):
            for j in range(i + 1, len(spaces)):
                if not spaces[i].is_orthogonal_to(spaces[j]):
                    raise OrthoapartError("maximal eigenspaces must be mutually orthogonal")

    @property
    def n(self) -> int:
        return self.cls.n

    def eigenspace(self, slot: int) -> Subspace:
        return self.eigenspaces[slot][1]


def materialize(a: SpectralOperator) -> Matrix:
    """The Hermitian matrix sum alpha_i P_{X_i}."""
    out = Matrix.zeros(a.n, a.n)
    for alpha, x in a.eigenspaces:
        out = out + x.proj.scale(alpha)
    return out


def image_of(a: SpectralOperator) -> Subspace:
    """Sum of all maximal eigenspaces; its dimension is the class rank."""
    img = Subspace.zero(a.n)
    for _, x in a.eigenspaces:
        img = span_sum(img, x)
    return img


def commutes(a: SpectralOperator, b: SpectralOperator) -> bool:
    """True iff every eigenspace of a is compatible with every eigenspace of b.

    Agrees exactly with commutation of the materialized matrices.
    """
    if a.n != b.n:
        raise DimensionMismatch("operators in different ambient dimensions")
    return all(
        is_compatible(x, y)
        for _, x in a.eigenspaces
        for _, y in b.eigenspaces
    )


def orthogonal(a: SpectralOperator, b: SpectralOperator) -> bool:
    """True iff the images are orthogonal (AB = BA = 0); implies commutes."""
    if a.n != b.n:
        raise DimensionMismatch("operators in different ambient dimensions")
    return image_of(a).is_orthogonal_to(image_of(b))


def hs_inner(a: SpectralOperator, b: SpectralOperator) -> Fraction:
    """Trace pairing tr(AB); real, symmetric, preserved by unitary and
    (for self-adjoint operators) anti-unitary conjugation."""
    if a.n != b.n:
        raise DimensionMismatch("operators in different ambient dimensions")
    return real_fraction((materialize(a) @ materialize(b)).trace())
