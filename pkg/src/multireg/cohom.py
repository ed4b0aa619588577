"""Exact sheaf cohomology for sheaves with a one- or two-term presentation.

A presentation is a complex A -> B of direct sums of twists with an
explicit polynomial matrix.  Twisting by m and taking the Kunneth
monomial bases of each summand turns every cohomology level into a
concrete multiplication matrix; the two-term hypercohomology identity

    dim H^i = dim coker(H^i(A(m)) -> H^i(B(m)))
            + dim ker(H^{i+1}(A(m)) -> H^{i+1}(B(m)))

then gives every dimension from two ranks, with no spectral sequence
ambiguity.  Ranks are computed by Gaussian elimination over a prime
field (default p = 32003) or over the rationals.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

import numpy as np

from .bott import cohomology_basis, level_types
from .regions import (
    Ambient,
    Region,
    Vec,
    as_vec,
    basis_vector,
    magnitude,
    vadd,
    vsub,
)

DEFAULT_PRIME = 32003

Monomial = tuple[Vec, ...]


class PolyError(ValueError):
    """Malformed polynomial input: syntax, unknown variable, inhomogeneity."""


class PresentationError(ValueError):
    """Structurally invalid presentation data."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldConfig:
    """Coefficient field: a prime characteristic, or 0 for the rationals."""

    characteristic: int = DEFAULT_PRIME

    def __post_init__(self):
        c = int(self.characteristic)
        object.__setattr__(self, "characteristic", c)
        if c != 0 and not _is_prime(c):
            raise ValueError(f"characteristic must be 0 or a prime, got {c}")

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0


RATIONALS = FieldConfig(0)


# ---------------------------------------------------------------------------
# multigraded polynomials


def _zero_monomial(ambient: Ambient) -> Monomial:
    return tuple(tuple(0 for _ in range(rk + 1)) for rk in ambient.r)


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    return tuple(
        tuple(a + b for a, b in zip(f1, f2)) for f1, f2 in zip(m1, m2)
    )


def _dict_add(d1: dict, d2: dict) -> dict:
    out = dict(d1)
    for mono, c in d2.items():
        c2 = out.get(mono, 0) + c
        if c2:
            out[mono] = c2
        else:
            out.pop(mono, None)
    return out


def _dict_mul(d1: dict, d2: dict) -> dict:
    out: dict = {}
    for m1, c1 in d1.items():
        for m2, c2 in d2.items():
            mono = _mono_mul(m1, m2)
            c = out.get(mono, 0) + c1 * c2
            if c:
                out[mono] = c
            else:
                out.pop(mono, None)
    return out


@dataclass(frozen=True)
class MultiPoly:
    """Polynomial on the product, homogeneous in each factor's variables.

    terms maps exponent tables (one exponent vector of length r_j + 1 per
    factor) to nonzero integer coefficients; the multidegree records the
    factorwise degrees, None for the zero polynomial.
    """

    ambient: Ambient
    terms: tuple[tuple[Monomial, int], ...]
    multidegree: Vec | None

    @classmethod
    def from_terms(cls, ambient: Ambient, mapping) -> "MultiPoly":
        clean: dict[Monomial, int] = {}
        for mono, coeff in dict(mapping).items():
            coeff = int(coeff)
            if coeff == 0:
                continue
            if len(mono) != ambient.n:
                raise PolyError(f"monomial {mono!r} has {len(mono)} factors, expected {ambient.n}")
            for j, (fac, rk) in enumerate(zip(mono, ambient.r)):
                if len(fac) != rk + 1 or any(e < 0 for e in fac):
                    raise PolyError(
                        f"factor {j} exponents {fac!r} invalid for P^{rk}"
                    )
            clean[tuple(tuple(f) for f in mono)] = coeff
        if not clean:
            return cls(ambient=ambient, terms=(), multidegree=None)
        degrees = {tuple(sum(fac) for fac in mono) for mono in clean}
        if len(degrees) > 1:
            raise PolyError(f"inhomogeneous polynomial: degrees {sorted(degrees)}")
        return cls(
            ambient=ambient,
            terms=tuple(sorted(clean.items())),
            multidegree=degrees.pop(),
        )

    @classmethod
    def zero(cls, ambient: Ambient) -> "MultiPoly":
        return cls(ambient=ambient, terms=(), multidegree=None)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def to_string(self) -> str:
        if self.is_zero:
            return "0"
        pieces = []
        for mono, coeff in self.terms:
            factors = []
            for j, fac in enumerate(mono):
                for i, e in enumerate(fac):
                    if e == 1:
                        factors.append(f"x{j}_{i}")
                    elif e > 1:
                        factors.append(f"x{j}_{i}^{e}")
            body = "*".join(factors) if factors else "1"
            if abs(coeff) != 1 or not factors:
                body = f"{abs(coeff)}*{body}" if factors else str(abs(coeff))
            pieces.append(("-" if coeff < 0 else "+", body))
        sign, body = pieces[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|x(?P<factor>\d+)_(?P<coord>\d+)|(?P<op>[-+*^()]))")


class _PolyParser:
    """Recursive descent over +, -, *, ^ and parentheses."""

    def __init__(self, ambient: Ambient, text: str):
        self.ambient = ambient
        self.text = text
        self.pos = 0
        self.tokens: list[tuple[str, object]] = []
        while self.pos < len(text):
            m = _TOKEN.match(text, self.pos)
            if m is None or m.end() == self.pos:
                rest = text[self.pos :].strip()
                if not rest:
                    break
                raise PolyError(f"cannot tokenize {rest[:20]!r} in {text!r}")
            self.pos = m.end()
            if m.group("num") is not None:
                self.tokens.append(("num", int(m.group("num"))))
            elif m.group("factor") is not None:
                self.tokens.append(("var", (int(m.group("factor")), int(m.group("coord")))))
            else:
                self.tokens.append(("op", m.group("op")))
        self.idx = 0

    def _peek(self):
        return self.tokens[self.idx] if self.idx < len(self.tokens) else (None, None)

    def _take(self):
        tok = self._peek()
        self.idx += 1
        return tok

    def parse(self) -> dict:
        d = self._expr()
        if self.idx != len(self.tokens):
            raise PolyError(f"trailing input after position {self.idx} in {self.text!r}")
        return d

    def _expr(self) -> dict:
        sign = 1
        kind, val = self._peek()
        if kind == "op" and val in "+-":
            self._take()
            sign = -1 if val == "-" else 1
        d = self._term()
        if sign < 0:
            d = {m: -c for m, c in d.items()}
        while True:
            kind, val = self._peek()
            if kind == "op" and val in "+-":
                self._take()
                nxt = self._term()
                if val == "-":
                    nxt = {m: -c for m, c in nxt.items()}
                d = _dict_add(d, nxt)
            else:
                return d

    def _term(self) -> dict:
        d = self._factor()
        while True:
            kind, val = self._peek()
            if kind == "op" and val == "*":
                self._take()
                d = _dict_mul(d, self._factor())
            else:
                return d

    def _factor(self) -> dict:
        d = self._atom()
        kind, val = self._peek()
        if kind == "op" and val == "^":
            self._take()
            kind, exp = self._take()
            if kind != "num":
                raise PolyError(f"exponent must be a nonnegative integer in {self.text!r}")
            out = {_zero_monomial(self.ambient): 1}
            for _ in range(exp):
                out = _dict_mul(out, d)
            return out
        return d

    def _atom(self) -> dict:
        kind, val = self._take()
        if kind == "num":
            return {_zero_monomial(self.ambient): val} if val else {}
        if kind == "var":
            j, i = val
            if not 0 <= j < self.ambient.n:
                raise PolyError(f"variable x{j}_{i}: no factor {j} in ambient {self.ambient.r}")
            if not 0 <= i <= self.ambient.r[j]:
                raise PolyError(f"variable x{j}_{i}: factor {j} has coordinates 0..{self.ambient.r[j]}")
            mono = list(_zero_monomial(self.ambient))
            fac = list(mono[j])
            fac[i] = 1
            mono[j] = tuple(fac)
            return {tuple(mono): 1}
        if kind == "op" and val == "(":
            d = self._expr()
            kind, val = self._take()
            if not (kind == "op" and val == ")"):
                raise PolyError(f"unbalanced parentheses in {self.text!r}")
            return d
        raise PolyError(f"unexpected token {val!r} in {self.text!r}")


def parse_poly(ambient: Ambient, text: str) -> MultiPoly:
    """Parse the input grammar: variables x{j}_{i}, integer coefficients,
    +, -, *, ^ and parentheses."""
    if not isinstance(text, str):
        raise PolyError(f"polynomial must be a string, got {text!r}")
    return MultiPoly.from_terms(ambient, _PolyParser(ambient, text).parse())


# ---------------------------------------------------------------------------
# Kunneth bases and multiplication matrices


@lru_cache(maxsize=None)
def _factor_vectors(r: int, d: int, q: int) -> tuple[Vec, ...]:
    return cohomology_basis(r, d, q).vectors


@lru_cache(maxsize=None)
def _type_basis(r: Vec, twist: Vec, q: Vec):
    """Basis tuples of one Kunneth component, with a lookup index."""
    per_factor = [
        _factor_vectors(rj, dj, qj) for rj, dj, qj in zip(r, twist, q)
    ]
    elems = tuple(product(*per_factor))
    index = {e: i for i, e in enumerate(elems)}
    return elems, index


def _type_dim(r: Vec, twist: Vec, q: Vec) -> int:
    dim = 1
    for rj, dj, qj in zip(r, twist, q):
        dim *= len(_factor_vectors(rj, dj, qj))
        if dim == 0:
            return 0
    return dim


def kunneth_basis(ambient: Ambient, twist, level: int) -> tuple[tuple[Vec, Monomial], ...]:
    """Ordered basis of H^level(O(twist)): (type, exponent table) pairs.

    Types run in the order of bott.level_types; within a type the product
    of factor bases is row-major with each factor in descending
    lexicographic order.  The multiplication matrices index rows and
    columns by exactly this order.
    """
    twist = as_vec(twist, ambient.n)
    out = []
    for q in level_types(ambient, level):
        elems, _ = _type_basis(ambient.r, twist, q)
        out.extend((q, e) for e in elems)
    return tuple(out)


def _block_entries(f: MultiPoly, src_elems, tgt_index, q: Vec):
    """Yield (row, col, coeff) for multiplication by f on one Kunneth type.

    On level-0 factors the action is ordinary monomial multiplication; on
    top-level factors it is truncated Laurent multiplication, where any
    product exponent >= 0 kills the term.
    """
    for col, elem in enumerate(src_elems):
        for mono, coeff in f.terms:
            dead = False
            target = []
            for qj, vj, mj in zip(q, elem, mono):
                wj = tuple(a + b for a, b in zip(vj, mj))
                if qj != 0 and any(e >= 0 for e in wj):
                    dead = True
                    break
                target.append(wj)
            if dead:
                continue
            row = tgt_index[tuple(target)]
            yield row, col, coeff


def mult_matrix(f: MultiPoly, source, target, level: int, field: FieldConfig = FieldConfig()):
    """Matrix of multiplication by f from H^level(O(source)) to H^level(O(target)).

    f must be homogeneous of multidegree target - source (or zero).  The
    matrix is block diagonal across Kunneth types, assembled in the
    kunneth_basis order; entries live in the configured field.
    """
    amb = f.ambient
    source = as_vec(source, amb.n)
    target = as_vec(target, amb.n)
    if not 0 <= level <= amb.total:
        raise ValueError(f"level {level} out of range [0, {amb.total}]")
    expected = vsub(target, source)
    if not f.is_zero and f.multidegree != expected:
        raise PolyError(
            f"multiplier degree {f.multidegree!r} does not match twist difference {expected!r}"
        )
    types = level_types(amb, level)
    rows = sum(_type_dim(amb.r, target, q) for q in types)
    cols = sum(_type_dim(amb.r, source, q) for q in types)
    p = field.characteristic
    mat = np.zeros((rows, cols), dtype=np.int64 if p else object)
    row_off = col_off = 0
    for q in types:
        src_elems, _ = _type_basis(amb.r, source, q)
        _, tgt_index = _type_basis(amb.r, target, q)
        for row, col, coeff in _block_entries(f, src_elems, tgt_index, q):
            v = mat[row_off + row, col_off + col] + coeff
            mat[row_off + row, col_off + col] = v % p if p else v
        row_off += _type_dim(amb.r, target, q)
        col_off += _type_dim(amb.r, source, q)
    return mat


def _rank_mod_p(mat: np.ndarray, p: int) -> int:
    """Row reduction over GF(p); pivot on the first nonzero entry in each
    column for determinism.  p < 2^31 keeps all products inside int64."""
    mat = np.array(mat % p, dtype=np.int64)
    rows, cols = mat.shape
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        nz = np.nonzero(mat[rank:, col])[0]
        if nz.size == 0:
            continue
        prow = rank + int(nz[0])
        if prow != rank:
            mat[[rank, prow]] = mat[[prow, rank]]
        inv = pow(int(mat[rank, col]), p - 2, p)
        mat[rank, :] = (mat[rank, :] * inv) % p
        below = mat[rank + 1 :, col]
        hot = np.nonzero(below)[0]
        if hot.size:
            mat[rank + 1 :][hot] = (
                mat[rank + 1 :][hot] - np.outer(below[hot], mat[rank, :])
            ) % p
        rank += 1
    return rank


def _rank_exact(mat: np.ndarray) -> int:
    rows = [[Fraction(x) for x in row] for row in mat.tolist()]
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        pivot = next((i for i in range(rank, nrows) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        prow = rows[rank]
        inv = 1 / prow[col]
        rows[rank] = [x * inv for x in prow]
        prow = rows[rank]
        for i in range(rank + 1, nrows):
            factor = rows[i][col]
            if factor:
                rows[i] = [a - factor * b for a, b in zip(rows[i], prow)]
        rank += 1
    return rank


def matrix_rank(mat: np.ndarray, field: FieldConfig = FieldConfig()) -> int:
    if mat.size == 0:
        return 0
    if field.is_rational:
        return _rank_exact(mat)
    return _rank_mod_p(mat, field.characteristic)


# ---------------------------------------------------------------------------
# presentations


@dataclass(frozen=True)
class FreePresentation:
    """One- or two-term presentation (+)O(-a_s) -> (+)O(-b_t) of a sheaf.

    targets are the twists b_t, sources the twists a_s; matrix[t][s] is the
    entry O(-a_s) -> O(-b_t), homogeneous of multidegree a_s - b_t when
    nonzero.  No matrix means a plain direct sum of twists.  Longer
    complexes are out of scope by design: two terms are exactly what the
    mapping-cone identity resolves without spectral sequence input.
    """

    ambient: Ambient
    targets: tuple[Vec, ...]
    sources: tuple[Vec, ...] = ()
    matrix: tuple[tuple[MultiPoly, ...], ...] | None = None

    def __post_init__(self):
        if not isinstance(self.ambient, Ambient):
            object.__setattr__(self, "ambient", Ambient(self.ambient))
        n = self.ambient.n
        object.__setattr__(self, "targets", tuple(as_vec(b, n) for b in self.targets))
        object.__setattr__(self, "sources", tuple(as_vec(a, n) for a in self.sources))
        if self.sources and self.matrix is None:
            raise PresentationError("sources given without a matrix")
        if self.matrix is not None:
            if not self.sources:
                raise PresentationError("matrix given without sources")
            mat = tuple(tuple(row) for row in self.matrix)
            if len(mat) != len(self.targets) or any(
                len(row) != len(self.sources) for row in mat
            ):
                raise PresentationError(
                    f"matrix must be {len(self.targets)} x {len(self.sources)}"
                )
            for t, (bt, row) in enumerate(zip(self.targets, mat)):
                for s, (asrc, entry) in enumerate(zip(self.sources, row)):
                    if not isinstance(entry, MultiPoly):
                        raise PresentationError(f"matrix[{t}][{s}] is not a polynomial")
                    if entry.is_zero:
                        continue
                    need = vsub(asrc, bt)
                    if entry.multidegree != need:
                        raise PresentationError(
                            f"matrix[{t}][{s}] has degree {entry.multidegree!r}, "
                            f"needs {need!r}"
                        )
            object.__setattr__(self, "matrix", mat)

    @property
    def is_single_term(self) -> bool:
        return self.matrix is None

    def twisted(self, m) -> "FreePresentation":
        """The presentation of the sheaf twisted by O(m)."""
        m = as_vec(m, self.ambient.n)
        return FreePresentation(
            ambient=self.ambient,
            targets=tuple(vsub(b, m) for b in self.targets),
            sources=tuple(vsub(a, m) for a in self.sources),
            matrix=self.matrix,
        )

    def to_json(self) -> dict:
        out: dict = {"targets": [list(b) for b in self.targets]}
        if self.matrix is not None:
            out["sources"] = [list(a) for a in self.sources]
            out["matrix"] = [[e.to_string() for e in row] for row in self.matrix]
        return out

    @classmethod
    def from_json(cls, ambient: Ambient, obj) -> "FreePresentation":
        if not isinstance(obj, dict):
            raise PresentationError(f"presentation must be an object, got {obj!r}")
        extra = set(obj) - {"targets", "sources", "matrix"}
        if extra:
            raise PresentationError(f"unknown presentation keys {sorted(extra)}")
        if "targets" not in obj:
            raise PresentationError("presentation needs targets")
        targets = tuple(as_vec(b, ambient.n) for b in obj["targets"])
        sources = tuple(as_vec(a, ambient.n) for a in obj.get("sources", ()))
        matrix = None
        if "matrix" in obj or sources:
            raw = obj.get("matrix")
            if raw is None:
                raise PresentationError("sources given without a matrix")
            matrix = tuple(
                tuple(parse_poly(ambient, entry) for entry in row) for row in raw
            )
        return cls(ambient=ambient, targets=targets, sources=sources, matrix=matrix)


class _HyperCohomology:
    """Dimension engine for one presentation over one field, with caching
    shared across the levels and twists of a scan."""

    def __init__(self, pres: FreePresentation, field: FieldConfig):
        self.pres = pres
        self.field = field
        self._levels: dict[tuple[Vec, int], tuple[int, int, int]] = {}

    def level_data(self, m: Vec, level: int) -> tuple[int, int, int]:
        """(rank, source dim, target dim) of H^level(A(m)) -> H^level(B(m))."""
        key = (m, level)
        cached = self._levels.get(key)
        if cached is not None:
            return cached
        pres, amb = self.pres, self.pres.ambient
        p = self.field.characteristic
        rank = 0
        dim_src = 0
        dim_tgt = 0
        for q in level_types(amb, level):
            tgt_sizes = [_type_dim(amb.r, vsub(m, bt), q) for bt in pres.targets]
            src_sizes = [_type_dim(amb.r, vsub(m, asrc), q) for asrc in pres.sources]
            rows = sum(tgt_sizes)
            cols = sum(src_sizes)
            dim_tgt += rows
            dim_src += cols
            if rows == 0 or cols == 0 or pres.matrix is None:
                continue
            mat = np.zeros((rows, cols), dtype=np.int64 if p else object)
            row_off = 0
            for t, bt in enumerate(pres.targets):
                if tgt_sizes[t]:
                    _, tgt_index = _type_basis(amb.r, vsub(m, bt), q)
                    col_off = 0
                    for s, asrc in enumerate(pres.sources):
                        if src_sizes[s]:
                            entry = pres.matrix[t][s]
                            if not entry.is_zero:
                                src_elems, _ = _type_basis(amb.r, vsub(m, asrc), q)
                                for row, col, coeff in _block_entries(
                                    entry, src_elems, tgt_index, q
                                ):
                                    v = mat[row_off + row, col_off + col] + coeff
                                    mat[row_off + row, col_off + col] = v % p if p else v
                        col_off += src_sizes[s]
                row_off += tgt_sizes[t]
            rank += matrix_rank(mat, self.field)
        out = (rank, dim_src, dim_tgt)
        self._levels[key] = out
        return out

    def dim(self, m: Vec, level: int) -> int:
        amb = self.pres.ambient
        if level < 0:
            raise ValueError(f"cohomological level must be >= 0, got {level}")
        if level > amb.total:
            return 0
        if self.pres.is_single_term:
            return sum(
                _type_dim(amb.r, vsub(m, bt), q)
                for q in level_types(amb, level)
                for bt in self.pres.targets
            )
        rank0, _, dim_tgt = self.level_data(m, level)
        coker = dim_tgt - rank0
        if level + 1 > amb.total:
            return coker
        rank1, dim_src1, _ = self.level_data(m, level + 1)
        return coker + (dim_src1 - rank1)


def sheaf_cohomology_dim(
    pres: FreePresentation, m, level: int, field: FieldConfig = FieldConfig()
) -> int:
    """dim H^level of the presented sheaf twisted by m."""
    m = as_vec(m, pres.ambient.n)
    return _HyperCohomology(pres, field).dim(m, level)


def _offsets(ambient: Ambient) -> tuple[Vec, ...]:
    from .bott import regularity_offsets

    return tuple(regularity_offsets(ambient))


def is_regular(pres: FreePresentation, m, field: FieldConfig = FieldConfig()) -> bool:
    """Definition check: H^{|i|} of the (m - i) twist vanishes for every
    offset i in N^n with 0 < |i| <= dim."""
    m = as_vec(m, pres.ambient.n)
    engine = _HyperCohomology(pres, field)
    for i in _offsets(pres.ambient):
        if engine.dim(vsub(m, i), magnitude(i)) != 0:
            return False
    return True


@dataclass(frozen=True)
class ScanResult:
    """Regularity region of a presented sheaf clipped to a window.

    Corners strictly inside the lower boundary are certified corners of
    the full region; corners touching the lower boundary may only reflect
    the clipping and are listed in uncertified.  closure_violations would
    indicate an upward-closure failure inside the window, which no
    correct input should produce; they are surfaced rather than silenced.
    """

    region: Region
    window: tuple[tuple[int, int], ...]
    members: frozenset[Vec]
    uncertified: tuple[Vec, ...]
    closure_violations: tuple[tuple[Vec, Vec], ...]
    characteristic: int

    @property
    def certified(self) -> bool:
        return not self.uncertified and not self.closure_violations

    def warnings(self) -> list[str]:
        out = []
        for c in self.uncertified:
            out.append(
                f"corner {list(c)} touches the lower window boundary; "
                "the true region may extend below the window"
            )
        for low, high in self.closure_violations:
            out.append(
                f"upward closure fails inside the window: {list(low)} is regular "
                f"but {list(high)} is not"
            )
        return out

    def to_json(self) -> dict:
        return {
            "region": self.region.to_json(),
            "window": [list(b) for b in self.window],
            "member_count": len(self.members),
            "uncertified_corners": [list(c) for c in self.uncertified],
            "closure_violations": [
                [list(a), list(b)] for a, b in self.closure_violations
            ],
            "characteristic": self.characteristic,
            "warnings": self.warnings(),
        }


def regularity_scan(
    pres: FreePresentation, window, field: FieldConfig = FieldConfig()
) -> ScanResult:
    """Exact membership scan of the regularity region over a finite window.

    window is one inclusive (lo, hi) pair per factor.  Every lattice point
    is tested against the definition; the region is the corner antichain
    of the members.
    """
    n = pres.ambient.n
    window = tuple((int(lo), int(hi)) for lo, hi in window)
    if len(window) != n:
        raise ValueError(f"window needs {n} coordinate ranges, got {len(window)}")
    if any(lo > hi for lo, hi in window):
        raise ValueError(f"empty window {window!r}")

    engine = _HyperCohomology(pres, field)
    offsets = _offsets(pres.ambient)

    def member(m: Vec) -> bool:
        return all(
            engine.dim(vsub(m, i), magnitude(i)) == 0 for i in offsets
        )

    members = frozenset(
        m for m in product(*(range(lo, hi + 1) for lo, hi in window)) if member(m)
    )
    region = Region.from_corners(n, members)
    uncertified = tuple(
        c for c in region.corners if any(c[k] == window[k][0] for k in range(n))
    )
    violations = []
    for m in sorted(members):
        for k in range(n):
            up = vadd(m, basis_vector(n, k))
            if up[k] <= window[k][1] and up not in members:
                violations.append((m, up))
    return ScanResult(
        region=region,
        window=window,
        members=members,
        uncertified=uncertified,
        closure_violations=tuple(violations),
        characteristic=field.characteristic,
    )
