"""Line bundle cohomology on projective space and products of them.

Dimensions on a single factor come from the classical vanishing pattern:
only H^0 (for d >= 0) and H^r (for d <= -r-1) of O(d) on P^r are nonzero.
On a product, a Kunneth sum over factorwise levels q_j in {0, r_j} gives
every twisted cohomology dimension in closed form.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import comb, factorial

from .regions import (
    Ambient,
    Vec,
    as_vec,
    iter_weight_vectors,
    magnitude,
    vsub,
)


def h_line(r: int, d: int, q: int) -> int:
    """dim H^q(P^r, O(d)).

    Nonzero only at q = 0 (binomial C(d+r, r)) or q = r (Serre dual,
    C(-d-1, r)).  q outside [0, r] is an error rather than a zero so that
    callers cannot silently pass a bad level.
    """
    if r < 1:
        raise ValueError(f"factor dimension must be >= 1, got {r}")
    if not 0 <= q <= r:
        raise ValueError(f"cohomological level {q} out of range [0, {r}]")
    if q == 0:
        return comb(d + r, r) if d >= 0 else 0
    if q == r:
        return comb(-d - 1, r) if -d - 1 >= r else 0
    return 0


def euler_chi_line(r: int, d: int) -> int:
    """Euler characteristic chi(P^r, O(d)) = C(d+r, r) as a polynomial in d."""
    num = 1
    for j in range(1, r + 1):
        num *= d + j
    return num // factorial(r)


def level_types(ambient: Ambient, level: int) -> tuple[Vec, ...]:
    """Factorwise level vectors q with q_j in {0, r_j} and |q| = level.

    These index the Kunneth components of H^level on the product.  The
    order (lexicographic in the selection pattern) is deterministic and
    shared by the basis enumeration in the cohomology oracle.
    """
    out = []
    for picks in product((0, 1), repeat=ambient.n):
        q = tuple(rk if p else 0 for rk, p in zip(ambient.r, picks))
        if magnitude(q) == level:
            out.append(q)
    return tuple(out)


def h_product(ambient: Ambient, m, i: int) -> int:
    """dim H^i of O(m) on the product, via the Kunneth decomposition."""
    m = as_vec(m, ambient.n)
    if not 0 <= i <= ambient.total:
        raise ValueError(f"cohomological level {i} out of range [0, {ambient.total}]")
    total = 0
    for q in level_types(ambient, i):
        block = 1
        for rk, mk, qk in zip(ambient.r, m, q):
            block *= h_line(rk, mk, qk)
            if block == 0:
                break
        total += block
    return total


def euler_chi_product(ambient: Ambient, m) -> int:
    m = as_vec(m, ambient.n)
    chi = 1
    for rk, mk in zip(ambient.r, m):
        chi *= euler_chi_line(rk, mk)
    return chi


def regularity_offsets(ambient: Ambient):
    """All i in N^n with 1 <= |i| <= dim of the product.

    Levels above the dimension vanish for every sheaf, so these offsets
    are the complete set of vanishing checks in the regularity test.
    """
    for s in range(1, ambient.total + 1):
        yield from iter_weight_vectors(s, ambient.n)


def is_regular_twist_sum(ambient: Ambient, term, m) -> bool:
    """Definition check for a direct sum of twists: H^{|i|} of the (m-i) twist
    vanishes for every offset 0 < |i| <= dim."""
    m = as_vec(m, ambient.n)
    summands = []
    for mt, rank in term:
        rank = int(rank)
        if rank < 0:
            raise ValueError(f"negative rank {rank} in twist sum")
        if rank > 0:
            summands.append(as_vec(mt, ambient.n))
    for i in regularity_offsets(ambient):
        lvl = magnitude(i)
        for mt in summands:
            # summand O(-mt) twisted by m - i
            if h_product(ambient, vsub(vsub(m, i), mt), lvl) != 0:
                return False
    return True


@dataclass(frozen=True)
class CohomologyBasis:
    """Monomial basis of H^q(P^r, O(d)) for the two nonvanishing levels.

    Level 0 is spanned by exponent vectors >= 0 summing to d; level r by
    vectors <= -1 summing to d (dual monomials).  Vectors are listed in
    descending lexicographic order, the order the multiplication matrices
    rely on.
    """

    r: int
    d: int
    q: int
    vectors: tuple[Vec, ...]


def cohomology_basis(r: int, d: int, q: int) -> CohomologyBasis:
    if r < 1:
        raise ValueError(f"factor dimension must be >= 1, got {r}")
    if q not in (0, r):
        raise ValueError(f"monomial bases exist only at levels 0 and {r}, got {q}")
    if q == 0:
        vecs = tuple(reversed(list(iter_weight_vectors(d, r + 1))))
    else:
        # e <= -1 summing to d corresponds to f = -1 - e >= 0 summing to -d - (r+1)
        vecs = tuple(
            tuple(-1 - fi for fi in f)
            for f in iter_weight_vectors(-d - (r + 1), r + 1)
        )
    basis = CohomologyBasis(r=r, d=d, q=q, vectors=vecs)
    assert len(basis.vectors) == h_line(r, d, q)
    return basis
