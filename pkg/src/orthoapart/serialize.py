"""JSON wire formats.

Scalars travel as text ("p/q" or "p/q+r/s i"), matrices as row-major arrays
of scalar strings, vectors as flat arrays.  Class descriptors:
{"n": int, "alphas": [scalar, ...], "dims": [int, ...]}.  Operators: class
plus per-eigenvalue lists of spanning vectors.  Subspace families: lists of
spanning sets.  Frames: one spanning vector per line.  Labelings: arrays of
slot indices with null for kernel lines.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence

from .apartments import Labeling
from .compatibility import Frame
from .errors import OrthoapartError
from .matrices import Matrix, Vector, vector
from .operators import ClassDescriptor, SpectralOperator
from .scalars import GaussianRational, parse_scalar
from .subspaces import Subspace, projection_of


def scalar_to_text(x: GaussianRational) -> str:
    return str(x)


def vector_from_json(data: Sequence[str]) -> Vector:
    return vector([parse_scalar(str(s)) for s in data])


def vector_to_json(v: Sequence) -> List[str]:
    return [str(x) for x in v]


def matrix_from_json(data: Sequence[Sequence[str]]) -> Matrix:
    return Matrix([[parse_scalar(str(s)) for s in row] for row in data])


def matrix_to_json(m: Matrix) -> List[List[str]]:
    return [[str(x) for x in row] for row in m.entries()]


def class_from_json(data: dict) -> ClassDescriptor:
    alphas = []
    for a in data["alphas"]:
        s = parse_scalar(str(a))
        if not s.is_real:
            raise OrthoapartError("eigenvalues must be real rationals")
        alphas.append(s.re)
    return ClassDescriptor(int(data["n"]), tuple(alphas), tuple(int(d) for d in data["dims"]))


def class_to_json(cls: ClassDescriptor) -> dict:
    return {
        "n": cls.n,
        "alphas": [str(a) for a in cls.alphas],
        "dims": list(cls.dims),
    }


def operator_from_json(data: dict) -> SpectralOperator:
    cls = class_from_json(data["class"])
    eig = []
    for alpha, vecs in zip(cls.alphas, data["eigenspaces"]):
        eig.append((alpha, projection_of([vector_from_json(v) for v in vecs], ambient_dim=cls.n)))
    return SpectralOperator(cls, tuple(eig))


def operator_to_json(op: SpectralOperator) -> dict:
    return {
        "class": class_to_json(op.cls),
        "eigenspaces": [
            [vector_to_json(b) for b in x.basis()] for _, x in op.eigenspaces
        ],
    }


def family_from_json(data: Sequence[Sequence[Sequence[str]]], ambient_dim: Optional[int] = None) -> List[Subspace]:
    """A family file is a JSON list of spanning sets."""
    out = []
    for spanning in data:
        vecs = [vector_from_json(v) for v in spanning]
        out.append(projection_of(vecs, ambient_dim=ambient_dim))
    return out


def frame_to_json(frame: Frame) -> dict:
    return {
        "n": frame.ambient_dim,
        "lines": [vector_to_json(line.line_vector()) for line in frame.lines],
    }


def frame_from_json(data: dict) -> Frame:
    n = int(data["n"])
    lines = tuple(
        projection_of([vector_from_json(v)], ambient_dim=n) for v in data["lines"]
    )
    return Frame(n, lines)


def labeling_from_json(data: Sequence) -> Labeling:
    return Labeling(tuple(None if s is None else int(s) for s in data))


def labeling_to_json(lab: Labeling) -> List[Optional[int]]:
    return list(lab.assignment)
