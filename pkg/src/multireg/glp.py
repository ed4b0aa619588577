"""Regularity bounds for curves in products of projective spaces.

Given a nondegenerate curve of multidegree d and genus g, a general
auxiliary line bundle of large enough degree on the curve produces a
presentation of the ideal sheaf whose shape is an Eagon-Northcott style
complex.  Everything the bound needs is arithmetic in (r, d, g): the
section count of the auxiliary bundle, the source ranks of the linear
presentation, and the twist/rank table of the complex itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import comb

from .regions import Ambient, Vec, as_vec, iter_weight_vectors, magnitude
from .twistcx import TwistComplex


@dataclass(frozen=True)
class CurveData:
    """A curve of multidegree d (and optionally genus g) in a product
    of at least two projective spaces."""

    ambient: Ambient
    d: Vec
    g: int | None = None

    def __post_init__(self):
        if not isinstance(self.ambient, Ambient):
            object.__setattr__(self, "ambient", Ambient(self.ambient))
        object.__setattr__(self, "d", as_vec(self.d, self.ambient.n))
        if self.ambient.n < 2:
            raise ValueError("curve bounds need at least two factors")
        for rk, dk in zip(self.ambient.r, self.d):
            if dk < rk:
                raise ValueError(
                    f"degree {dk} below factor dimension {rk}; "
                    "nondegenerate curves satisfy d_k >= r_k"
                )
        if self.g is not None and self.g < 0:
            raise ValueError("genus must be nonnegative")

    def to_json(self) -> dict:
        out = {"r": list(self.ambient.r), "d": list(self.d)}
        if self.g is not None:
            out["g"] = self.g
        return out

    @classmethod
    def from_json(cls, obj) -> "CurveData":
        if not isinstance(obj, dict) or not {"r", "d"} <= set(obj) <= {"r", "d", "g"}:
            raise ValueError("curve data needs keys r, d and optionally g")
        return cls(
            ambient=Ambient.from_json(obj["r"]),
            d=tuple(obj["d"]),
            g=obj.get("g"),
        )


def aux_section_count(curve: CurveData) -> int:
    """Number of global sections of the auxiliary bundle behind the bound.

    The largest pairwise degree excess d_i + d_j - r_i - r_j plus two.
    Always >= 2 for valid curve data.
    """
    n = curve.ambient.n
    best = max(
        curve.d[i] + curve.d[j] - curve.ambient.r[i] - curve.ambient.r[j]
        for i in range(n)
        for j in range(n)
        if i != j
    )
    return best + 2


def aux_bundle_degree(curve: CurveData) -> int:
    """Degree of the general auxiliary line bundle on the curve.

    Requires the genus.  A general bundle of this degree is nonspecial
    with the section count above (degree = g + sections - 1).
    """
    if curve.g is None:
        raise ValueError("auxiliary bundle degree needs the genus")
    return curve.g + aux_section_count(curve) - 1


def source_ranks(curve: CurveData, sections: int | None = None) -> Vec:
    """Multiplicities of each O(-e_k) block in the linear presentation source.

    The k-th count is r_k * a - d_k where a is the section count.  With the
    default a these are automatically positive; explicit overrides that
    drive a count below zero are rejected.
    """
    a = aux_section_count(curve) if sections is None else int(sections)
    if sections is not None and a < 2:
        raise ValueError(f"section count must be >= 2, got {a}")
    ranks = tuple(rk * a - dk for rk, dk in zip(curve.ambient.r, curve.d))
    if sections is None:
        assert all(h >= 0 for h in ranks)
    elif any(h < 0 for h in ranks):
        raise ValueError(
            f"section count {a} is too small for degrees {curve.d!r}: "
            f"source ranks {ranks!r} must be nonnegative"
        )
    return ranks


def en_term_rank(twist: Vec, ranks: Vec) -> int:
    """Rank of the complex at a given twist: the product of binomials
    C(ranks_k, twist_k).  Zero when any coordinate overshoots its rank."""
    twist = as_vec(twist)
    ranks = as_vec(ranks)
    if len(twist) != len(ranks):
        raise ValueError("twist and rank vectors must have equal length")
    if any(t < 0 for t in twist):
        raise ValueError(f"twists in the complex are nonnegative, got {twist!r}")
    out = 1
    for t, h in zip(twist, ranks):
        out *= comb(h, t) if t <= h else 0
    return out


@dataclass(frozen=True)
class ENShape:
    """Twist/rank table of the Eagon-Northcott style complex for a curve.

    Term i collects all twists of magnitude a+i with nonzero rank; the
    classical flag records whether ranks carry the extra symmetric-power
    factor C(a+i-1, i) of the classical complex.
    """

    sections: int
    ranks: Vec
    complex: TwistComplex
    classical: bool = False


def en_complex_shape(
    curve: CurveData,
    sections: int | None = None,
    classical_ranks: bool = False,
    max_terms: int | None = None,
) -> ENShape:
    a = aux_section_count(curve) if sections is None else int(sections)
    ranks = source_ranks(curve, sections=sections)
    top = sum(ranks) - a
    if top < 0:
        raise ValueError(
            f"section count {a} exceeds total source rank {sum(ranks)}; "
            "the complex has no terms"
        )
    if max_terms is not None and max_terms < 1:
        raise ValueError(f"max_terms must be >= 1, got {max_terms}")
    count = top + 1 if max_terms is None else min(top + 1, max_terms)
    n = curve.ambient.n
    # one binomial row per factor; the loops below avoid per-twist calls
    rows = [tuple(comb(h, t) for t in range(h + 1)) for h in ranks]
    buckets: list[list] = [[] for _ in range(count)]
    if count <= top:
        # only the leading terms are wanted: enumerate their magnitudes
        for i in range(count):
            for m in iter_weight_vectors(a + i, n):
                rank = 1
                for t, row in zip(m, rows):
                    if t >= len(row):
                        rank = 0
                        break
                    rank *= row[t]
                if rank:
                    buckets[i].append((m, rank))
    else:
        # full table: walk the box of nonzero twists once
        for m in product(*(range(h + 1) for h in ranks)):
            i = sum(m) - a
            if i < 0:
                continue
            rank = 1
            for t, row in zip(m, rows):
                rank *= row[t]
            buckets[i].append((m, rank))
    terms = []
    for i, entries in enumerate(buckets):
        if classical_ranks:
            sym = comb(a + i - 1, i)
            entries = [(m, rank * sym) for m, rank in entries]
        terms.append(tuple(entries))
    cx = TwistComplex(ambient=curve.ambient, terms=tuple(terms))
    return ENShape(sections=a, ranks=ranks, complex=cx, classical=classical_ranks)


@dataclass(frozen=True)
class RegularityBound:
    """A corner m such that m + N^n lies inside the regularity region of the
    ideal sheaf, plus the arithmetic behind it.

    excluded_p1xp1 marks the one ambient (P^1 x P^1) where the derivation
    of the bound carries an unresolved exclusion; the bound is still
    reported, flagged as advisory.
    """

    bound: Vec
    sections: int
    ranks: Vec
    excluded_p1xp1: bool


def curve_regularity_bound(curve: CurveData) -> RegularityBound:
    a = aux_section_count(curve)
    ranks = source_ranks(curve)
    bound = tuple(min(h, a) for h in ranks)
    excluded = curve.ambient.r == (1, 1)
    return RegularityBound(bound=bound, sections=a, ranks=ranks, excluded_p1xp1=excluded)


def duple_embedding_bound(degrees) -> RegularityBound:
    """Bound for a rational curve embedded by degrees (b_1, ..., b_n):
    the image of P^1 under the product of b_k-fold embeddings, realized as
    curve data with r = d = degrees and genus zero."""
    degrees = as_vec(degrees)
    ambient = Ambient(degrees)
    curve = CurveData(ambient=ambient, d=degrees, g=0)
    return curve_regularity_bound(curve)
