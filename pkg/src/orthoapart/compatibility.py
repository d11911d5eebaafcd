"""Compatibility of subspaces and refinement of a compatible family into a
common orthogonal frame.

Two subspaces X, Y are compatible when (X cap Y)^perp cap X and
(X cap Y)^perp cap Y are orthogonal; equivalently, their projections
commute.  Any finite pairwise-compatible family can be refined into a frame
(n mutually orthogonal lines spanning the space) such that every family
member is a sum of frame lines: keep a partition of the space into
orthogonal blocks, split a block Y against a member X into Y cap X and
(Y cap X)^perp cap Y whenever the intersection is proper and nonzero, and
finally split each block into orthogonal lines.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .errors import IncompatibleFamily, OrthoapartError
from .matrices import inner
from .subspaces import (
    Subspace,
    complement_within,
    intersect,
    orthogonalize,
    projection_of,
)


@dataclass(frozen=True)
class Frame:
    """n mutually orthogonal lines spanning C^n: an orthonormal basis
    recorded up to scalar multiples."""

    ambient_dim: int
    lines: Tuple[Subspace, ...]

    def __post_init__(self):
        object.__setattr__(self, "lines", tuple(self.lines))
        n = self.ambient_dim
        if len(self.lines) != n:
            raise OrthoapartError(f"a frame in dimension {n} needs exactly {n} lines")
        for line in self.lines:
            if line.ambient_dim != n or line.dim != 1:
                raise OrthoapartError("frame members must be lines of the ambient space")
        # pairwise orthogonality of lines via spanning-vector inner products
        vecs = [line.line_vector() for line in self.lines]
        for i in range(n):
            for j in range(i + 1, n):
                if not inner(vecs[i], vecs[j]).is_zero:
                    raise OrthoapartError(f"frame lines {i} and {j} are not orthogonal")

    @classmethod
    def standard(cls, n: int) -> "Frame":
        return cls(n, tuple(Subspace.coordinate(n, [i]) for i in range(n)))


def is_compatible(x: Subspace, y: Subspace) -> bool:
    """Compatibility test; equals commutation of the projection matrices."""
    z = intersect(x, y)
    zp = z.perp()
    return intersect(zp, x).is_orthogonal_to(intersect(zp, y))


def projections_commute(x: Subspace, y: Subspace) -> bool:
    """Independent cross-check: P_X P_Y = P_Y P_X as a matrix identity."""
    return x.proj @ y.proj == y.proj @ x.proj


def split_into_lines(block: Subspace) -> List[Subspace]:
    """Split a subspace into pairwise orthogonal lines spanning it.

    Uses exact Gram-Schmidt without normalization, so the lines stay
    rational; the arbitrary choice is fixed by the pivot basis of the block.
    """
    n = block.ambient_dim
    return [projection_of([u], ambient_dim=n) for u in orthogonalize(block.basis())]


def refine_to_frame(family: Sequence[Subspace], ambient_dim: int | None = None) -> Frame:
    """Refine a pairwise-compatible family into a frame whose lines generate
    every family member.

    Zero subspaces are ignored and duplicates are dropped first.  Raises
    IncompatibleFamily with the offending input indices when some pair is
    not compatible.  Block scanning is deterministic (family order, then
    block order), so the output frame is reproducible.  The empty family
    (with an explicit ambient_dim) refines to the standard coordinate frame.
    """
    if not family:
        if ambient_dim is None:
            raise OrthoapartError("ambient_dim required for an empty family")
        return Frame.standard(ambient_dim)
    n = family[0].ambient_dim
    if ambient_dim is not None and ambient_dim != n:
        raise OrthoapartError("ambient_dim disagrees with the family's ambient dimension")
    for i, x in enumerate(family):
        if x.ambient_dim != n:
            raise IncompatibleFamily(0, i)
    for i in range(len(family)):
        for j in range(i + 1, len(family)):
            if not is_compatible(family[i], family[j]):
                raise IncompatibleFamily(i, j)

    members: List[Subspace] = []
    for x in family:
        if not x.is_zero() and x not in members:
            members.append(x)

    blocks: List[Subspace] = [Subspace.full(n)]
    changed = True
    while changed:
        changed = False
        for x in members:
            for bi, y in enumerate(blocks):
                z = intersect(x, y)
                zdim = z.dim
                if zdim != 0 and zdim != y.dim:
                    blocks[bi : bi + 1] = [z, complement_within(z, y)]
                    changed = True
                    break
            if changed:
                break

    lines: List[Subspace] = []
    for block in blocks:
        lines.extend(split_into_lines(block))
    return Frame(n, tuple(lines))
