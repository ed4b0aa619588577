"""Complexes of twisted free sheaves tracked by shape only.

A complex E_0 <- E_1 <- ... <- E_L is stored as its list of terms, each a
multiset of (twist, rank) pairs.  The maps are never needed: the growth
test and the region bounds below depend only on the twists.
"""

from __future__ import annotations

from dataclasses import dataclass

from .regions import (
    Ambient,
    Region,
    Vec,
    as_vec,
    basis_vector,
    leq,
    magnitude,
    twist_sum_region,
    vsub,
)

Term = tuple[tuple[Vec, int], ...]


@dataclass(frozen=True)
class TwistComplex:
    """Shape of a finite complex of direct sums of line bundle twists."""

    ambient: Ambient
    terms: tuple[Term, ...]

    def __post_init__(self):
        if not isinstance(self.ambient, Ambient):
            object.__setattr__(self, "ambient", Ambient(self.ambient))
        if len(self.terms) < 1:
            raise ValueError("a twist complex needs at least one term")
        norm = []
        for term in self.terms:
            counts: dict[Vec, int] = {}
            for m, rank in term:
                m = as_vec(m, self.ambient.n)
                rank = int(rank)
                if rank < 1:
                    raise ValueError(f"twist {m!r} has rank {rank}; ranks must be >= 1")
                counts[m] = counts.get(m, 0) + rank
            norm.append(tuple(sorted(counts.items())))
        object.__setattr__(self, "terms", tuple(norm))

    @property
    def length(self) -> int:
        return len(self.terms) - 1

    def term(self, i: int) -> Term:
        return self.terms[i]

    def to_json(self) -> dict:
        return {
            "ambient": self.ambient.to_json(),
            "terms": [
                [[list(m), rank] for m, rank in term] for term in self.terms
            ],
        }

    @classmethod
    def from_json(cls, obj) -> "TwistComplex":
        if not isinstance(obj, dict) or set(obj) != {"ambient", "terms"}:
            raise ValueError("twist complex needs exactly the keys ambient/terms")
        ambient = Ambient.from_json(obj["ambient"])
        terms = []
        for term in obj["terms"]:
            entries = []
            for entry in term:
                if not (isinstance(entry, list) and len(entry) == 2):
                    raise ValueError(f"term entry must be [twist, rank], got {entry!r}")
                m, rank = entry
                entries.append((as_vec(m, ambient.n), int(rank)))
            terms.append(tuple(entries))
        return cls(ambient=ambient, terms=tuple(terms))


@dataclass(frozen=True)
class GrowthReport:
    """Outcome of the linear twist growth test.

    When ok, witnesses maps every twist in a positive-degree term to a
    leading-term twist below it within the step budget.  When not ok,
    offender is the first (term index, twist) pair with no such anchor.
    """

    ok: bool
    offender: tuple[int, Vec] | None = None
    witnesses: tuple[tuple[tuple[int, Vec], Vec], ...] = ()


class LinearGrowthError(ValueError):
    """A region bound was requested for a complex whose twists grow too fast."""

    def __init__(self, offender: tuple[int, Vec]):
        self.offender = offender
        k, m = offender
        super().__init__(
            f"twist {m!r} in term {k} has no leading-term twist below it "
            f"within {k} total steps"
        )


def linear_twist_growth(cx: TwistComplex) -> GrowthReport:
    """Check that twists grow at most one lattice step per homological step.

    Every twist m in term k must dominate some leading-term twist m0
    (componentwise m >= m0) with |m - m0| <= k.
    """
    base = [m for m, _ in cx.term(0)]
    if not base:
        raise ValueError("leading term is empty; the growth test needs anchors")
    witnesses = []
    for k in range(1, cx.length + 1):
        for m, _ in cx.term(k):
            anchor = None
            for m0 in base:
                if leq(m0, m) and magnitude(vsub(m, m0)) <= k:
                    anchor = m0
                    break
            if anchor is None:
                return GrowthReport(ok=False, offender=(k, m))
            witnesses.append(((k, m), anchor))
    return GrowthReport(ok=True, witnesses=tuple(witnesses))


def leading_term_bound(cx: TwistComplex) -> Region:
    """Regularity region bound read off the leading term.

    For a resolution with linear twist growth, the resolved sheaf is
    regular wherever the leading term is, so the region of E_0 as a twist
    sum is a lower bound for the region of the sheaf.  Exactness of the
    complex is the caller's responsibility; the shape alone cannot see it.
    """
    report = linear_twist_growth(cx)
    if not report.ok:
        raise LinearGrowthError(report.offender)
    return twist_sum_region(cx.ambient.n, cx.term(0))


def complex_region_bound(regions, ambient: Ambient) -> Region:
    """Combine per-term regularity regions into a bound for the resolved sheaf.

    The underlying formula is a union over all functions phi from step
    indices to factors of the intersections
    reg(E_0) cap (reg(E_1) - e_{phi(1)}) cap (reg(E_2) - e_{phi(1)} - e_{phi(2)}) cap ...
    with dim+1 steps.  Grouping the functions by their partial sums turns
    the enumeration into a dynamic program over weight vectors; union
    distributes over intersection, so the result is identical.

    Missing trailing regions count as the whole lattice (zero terms).
    """
    n = ambient.n
    steps = ambient.total + 1
    regs = list(regions)
    for reg in regs:
        if reg.dim != n:
            raise ValueError(
                f"region dimension {reg.dim} does not match ambient rank {n}"
            )
    if not regs:
        raise ValueError("need at least the leading-term region")
    while len(regs) < steps + 1:
        regs.append(Region.whole(n))
    regs = regs[: steps + 1]

    zero = tuple(0 for _ in range(n))
    states: dict[Vec, Region] = {zero: regs[0]}
    for step in range(1, steps + 1):
        nxt: dict[Vec, Region] = {}
        shifted = regs[step]
        for s, value in states.items():
            for k in range(n):
                e = basis_vector(n, k)
                s2 = tuple(a + b for a, b in zip(s, e))
                arrived = value.intersect(shifted.translate(tuple(-c for c in s2)))
                if s2 in nxt:
                    nxt[s2] = nxt[s2].union(arrived)
                else:
                    nxt[s2] = arrived
        states = nxt
    out = Region.empty(n)
    for value in states.values():
        out = out.union(value)
    return out


def quotient_region_bound(sub_region: Region, mid_region: Region, ambient: Ambient) -> Region:
    """Region guaranteed regular for the quotient in a short exact sequence.

    If the subsheaf is regular on sub_region and the middle sheaf on
    mid_region, the quotient is regular on
    (union over factors k of sub_region shifted down by e_k) cap mid_region.
    """
    n = ambient.n
    if sub_region.dim != n or mid_region.dim != n:
        raise ValueError("region dimensions must match the ambient rank")
    shifted = Region.empty(n)
    for k in range(n):
        e = basis_vector(n, k)
        shifted = shifted.union(sub_region.translate(tuple(-c for c in e)))
    return shifted.intersect(mid_region)
