"""Staircase regions in the twist lattice Z^n.

A region is a finitely generated upset: a finite union of translated
positive orthants c + N^n, stored as the antichain of minimal corners.
The whole lattice gets a distinguished value (``Region.whole``) so that
degenerate inputs such as the zero sheaf have a regularity region.

All set operations here are exact; nothing is sampled or truncated.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

Vec = tuple[int, ...]


class DimensionMismatch(ValueError):
    """Vectors or regions over different lattice ranks were combined."""


def as_vec(values, dim: int | None = None) -> Vec:
    """Coerce to a tuple of ints, optionally checking the length."""
    try:
        vec = tuple(int(c) for c in values)
    except TypeError as exc:
        raise ValueError(f"expected a sequence of integers, got {values!r}") from exc
    if dim is not None and len(vec) != dim:
        raise DimensionMismatch(f"expected a vector of length {dim}, got {vec!r}")
    return vec


def _same_length(u: Vec, v: Vec) -> None:
    if len(u) != len(v):
        raise DimensionMismatch(f"length mismatch: {u!r} vs {v!r}")


def vadd(u: Vec, v: Vec) -> Vec:
    _same_length(u, v)
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Vec, v: Vec) -> Vec:
    _same_length(u, v)
    return tuple(a - b for a, b in zip(u, v))


def vmax(u: Vec, v: Vec) -> Vec:
    _same_length(u, v)
    return tuple(max(a, b) for a, b in zip(u, v))


def leq(u: Vec, v: Vec) -> bool:
    """Componentwise u <= v."""
    _same_length(u, v)
    return all(a <= b for a, b in zip(u, v))


def magnitude(v: Vec) -> int:
    """Coordinate sum |v|."""
    return sum(v)


def basis_vector(dim: int, k: int) -> Vec:
    if not 0 <= k < dim:
        raise IndexError(f"coordinate {k} out of range for dimension {dim}")
    return tuple(1 if j == k else 0 for j in range(dim))


def iter_weight_vectors(total: int, length: int):
    """Yield all vectors in N^length with coordinate sum total, ascending lex.

    Empty for total < 0.  length must be >= 1.
    """
    if length < 1:
        raise ValueError("length must be >= 1")
    if total < 0:
        return
    if length == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in iter_weight_vectors(total - head, length - 1):
            yield (head,) + tail


@dataclass(frozen=True)
class Ambient:
    """A product of projective spaces, recorded by its factor dimensions."""

    r: Vec

    def __post_init__(self):
        object.__setattr__(self, "r", as_vec(self.r))
        if len(self.r) < 1:
            raise ValueError("ambient needs at least one factor")
        if any(rk < 1 for rk in self.r):
            raise ValueError(f"factor dimensions must be >= 1, got {self.r!r}")

    @property
    def n(self) -> int:
        return len(self.r)

    @property
    def total(self) -> int:
        """Dimension of the whole product, the sum of the factor dimensions."""
        return magnitude(self.r)

    def to_json(self) -> list[int]:
        return list(self.r)

    @classmethod
    def from_json(cls, obj) -> "Ambient":
        if not isinstance(obj, list) or not all(isinstance(x, int) for x in obj):
            raise ValueError(f"ambient must be a list of ints, got {obj!r}")
        return cls(tuple(obj))


def _minimal_corners(dim: int, corners) -> tuple[Vec, ...]:
    pts = sorted({as_vec(c, dim) for c in corners})
    keep = []
    for c in pts:
        if not any(other != c and leq(other, c) for other in pts):
            keep.append(c)
    return tuple(keep)


@dataclass(frozen=True)
class Region:
    """Upward closed subset of Z^dim with finitely many minimal corners.

    Instances are always canonical: corners form a lex-sorted antichain,
    and the whole-lattice value carries no corners.  Equality of canonical
    forms is equality of the underlying sets.
    """

    dim: int
    corners: tuple[Vec, ...] = ()
    everything: bool = False

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("region dimension must be >= 1")
        cs = () if self.everything else _minimal_corners(self.dim, self.corners)
        object.__setattr__(self, "corners", cs)

    @classmethod
    def from_corners(cls, dim: int, corners) -> "Region":
        return cls(dim=dim, corners=tuple(corners))

    @classmethod
    def empty(cls, dim: int) -> "Region":
        return cls(dim=dim, corners=())

    @classmethod
    def whole(cls, dim: int) -> "Region":
        return cls(dim=dim, everything=True)

    @property
    def is_empty(self) -> bool:
        return not self.everything and not self.corners

    def contains(self, m) -> bool:
        m = as_vec(m, self.dim)
        if self.everything:
            return True
        return any(leq(c, m) for c in self.corners)

    def __contains__(self, m) -> bool:
        return self.contains(m)

    def _check_dim(self, other: "Region") -> None:
        if self.dim != other.dim:
            raise DimensionMismatch(
                f"regions of dimension {self.dim} and {other.dim}"
            )

    def intersect(self, other: "Region") -> "Region":
        self._check_dim(other)
        if self.everything:
            return other
        if other.everything:
            return self
        # (a + N^n) cap (b + N^n) = max(a, b) + N^n, extended pairwise
        cs = [vmax(a, b) for a in self.corners for b in other.corners]
        return Region.from_corners(self.dim, cs)

    def union(self, other: "Region") -> "Region":
        self._check_dim(other)
        if self.everything or other.everything:
            return Region.whole(self.dim)
        return Region.from_corners(self.dim, self.corners + other.corners)

    def translate(self, shift) -> "Region":
        shift = as_vec(shift, self.dim)
        if self.everything:
            return self
        return Region.from_corners(self.dim, [vadd(c, shift) for c in self.corners])

    def to_json(self) -> dict:
        if self.everything:
            return {"everything": True}
        return {"corners": [list(c) for c in self.corners]}

    @classmethod
    def from_json(cls, dim: int, obj) -> "Region":
        if not isinstance(obj, dict):
            raise ValueError(f"region must be an object, got {obj!r}")
        keys = set(obj)
        if keys == {"everything"}:
            if obj["everything"] is not True:
                raise ValueError("everything must be true when present")
            return cls.whole(dim)
        if keys == {"corners"}:
            corners = obj["corners"]
            if not isinstance(corners, list):
                raise ValueError("corners must be a list of vectors")
            return cls.from_corners(dim, [as_vec(c, dim) for c in corners])
        raise ValueError(f"region object needs exactly one of corners/everything, got {sorted(keys)}")


def twist_sum_region(dim: int, term) -> Region:
    """Regularity region of a direct sum of twists O(-m_t)^{rank_t}.

    Each summand O(-m) is regular exactly on m + N^n, so the sum is regular
    on the intersection, a single corner at the componentwise maximum.
    Zero-rank entries are ignored; an empty sum is the zero sheaf, which is
    regular everywhere.
    """
    twists = []
    for entry in term:
        m, rank = entry
        rank = int(rank)
        if rank < 0:
            raise ValueError(f"negative rank {rank} in twist sum")
        if rank == 0:
            continue
        twists.append(as_vec(m, dim))
    if not twists:
        warnings.warn("empty twist sum: regularity region is the whole lattice")
        return Region.whole(dim)
    corner = twists[0]
    for t in twists[1:]:
        corner = vmax(corner, t)
    return Region.from_corners(dim, [corner])
