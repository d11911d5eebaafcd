"""Shared generators and independent oracles for the test suite.

Random objects are built from seeded `random.Random` instances so every run
is reproducible.  Rational frames are produced by composing coordinate-plane
rotations with Pythagorean-triple cosines, which keeps denominators small
while exercising genuinely non-coordinate subspaces.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import List, Sequence, Tuple

from orthoapart import (
    Apartment,
    ClassDescriptor,
    Frame,
    Labeling,
    Matrix,
    SpectralOperator,
    Subspace,
    image_of,
    materialize,
    projection_of,
    span_sum,
)
from orthoapart.apartments import in_minus_minus, in_plus_plus

PYTHAGOREAN = [(Fraction(3, 5), Fraction(4, 5)), (Fraction(5, 13), Fraction(12, 13)),
               (Fraction(8, 17), Fraction(15, 17))]


def rotation_matrix(n: int, i: int, j: int, c: Fraction, s: Fraction) -> Matrix:
    rows = [[1 if a == b else 0 for b in range(n)] for a in range(n)]
    rows[i][i], rows[i][j] = c, -s
    rows[j][i], rows[j][j] = s, c
    return Matrix(rows)


def random_unitary(n: int, rng: random.Random, rotations: int = 3) -> Matrix:
    """A rational orthogonal matrix: a few random plane rotations."""
    u = Matrix.identity(n)
    if n < 2:
        return u
    for _ in range(rotations):
        i, j = rng.sample(range(n), 2)
        c, s = rng.choice(PYTHAGOREAN)
        if rng.random() < 0.5:
            s = -s
        u = rotation_matrix(n, i, j, c, s) @ u
    return u


def random_frame(n: int, rng: random.Random, rotations: int = 3) -> Frame:
    u = random_unitary(n, rng, rotations)
    lines = tuple(
        projection_of([u.column(i)], ambient_dim=n) for i in range(n)
    )
    return Frame(n, lines)


def random_labeling(cls: ClassDescriptor, rng: random.Random) -> Labeling:
    indices = list(range(cls.n))
    rng.shuffle(indices)
    assignment: List = [None] * cls.n
    pos = 0
    for t, d in enumerate(cls.dims):
        for _ in range(d):
            assignment[indices[pos]] = t
            pos += 1
    return Labeling(tuple(assignment))


def random_operator(cls: ClassDescriptor, rng: random.Random, frame: Frame | None = None) -> SpectralOperator:
    frame = frame or random_frame(cls.n, rng)
    ap = Apartment(frame, cls)
    return random_labeling(cls, rng).to_operator(ap)


# ---------------------------------------------------------------------------
# independent oracles

def matrices_commute(a: SpectralOperator, b: SpectralOperator) -> bool:
    ma, mb = materialize(a), materialize(b)
    return ma @ mb == mb @ ma


def matrices_orthogonal(a: SpectralOperator, b: SpectralOperator) -> bool:
    ma, mb = materialize(a), materialize(b)
    return (ma @ mb).is_zero() and (mb @ ma).is_zero()


def oracle_in_orthocomplementary(op: SpectralOperator, ap: Apartment, i: int, j: int) -> bool:
    """C_ij membership evaluated on the actual subspaces, not on labels:
    the complement of 'some eigenspace contains both lines' and 'the image
    is orthogonal to the plane of the two lines'."""
    li, lj = ap.frame.lines[i], ap.frame.lines[j]
    plus_plus = any(x.contains(li) and x.contains(lj) for _, x in op.eigenspaces)
    plane = span_sum(li, lj)
    minus_minus = image_of(op).is_orthogonal_to(plane)
    return not (plus_plus or minus_minus)


def oracle_n_count(a: SpectralOperator, b: SpectralOperator, ap: Apartment) -> int:
    n = ap.n
    total = 0
    for i in range(n):
        for j in range(i + 1, n):
            if oracle_in_orthocomplementary(a, ap, i, j) and oracle_in_orthocomplementary(b, ap, i, j):
                total += 1
    return total
