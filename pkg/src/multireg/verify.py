"""Replay of the published benchmark values on the built-in examples.

Each check recomputes one documented value: the curve bounds, the complex
shape table, the growth-test bounds, and the scanned regularity regions.
Failures print the computed value next to the expected one; disagreements
are reported, never suppressed.  See the README for the one known
discrepancy (the two-points figure region).
"""

from __future__ import annotations

from itertools import product

from .cohom import FieldConfig, FreePresentation, is_regular, regularity_scan
from .glp import CurveData, curve_regularity_bound, duple_embedding_bound, en_complex_shape
from .regions import Ambient, Region, basis_vector, twist_sum_region
from .twistcx import TwistComplex, complex_region_bound, leading_term_bound, linear_twist_growth

P1xP1 = Ambient((1, 1))
P1xP2 = Ambient((1, 2))


def intro_curve() -> CurveData:
    return CurveData(ambient=Ambient((2, 2)), d=(3, 3), g=0)


def standard_curve() -> CurveData:
    return CurveData(ambient=P1xP2, d=(2, 8), g=4)


def square_curve() -> CurveData:
    return CurveData(ambient=P1xP1, d=(3, 2))


def two_points_complex_a() -> TwistComplex:
    return TwistComplex(ambient=P1xP1, terms=((((2, 0), 1), ((1, 1), 2)), (((2, 1), 2),)))


def two_points_complex_b() -> TwistComplex:
    return TwistComplex(ambient=P1xP1, terms=((((1, 1), 2), ((0, 2), 1)), (((1, 2), 2),)))


def two_points_presentation() -> FreePresentation:
    """Ideal sheaf of the points ([1:0],[1:0]) and ([0:1],[0:1]),
    generated by x0_0*x0_1, x0_0*x1_1, x0_1*x1_0 with the two evident
    syzygies."""
    return FreePresentation.from_json(
        P1xP1,
        {
            "targets": [[2, 0], [1, 1], [1, 1]],
            "sources": [[2, 1], [2, 1]],
            "matrix": [["x1_1", "x1_0"], ["-x0_1", "0"], ["0", "-x0_0"]],
        },
    )


def hypersurface_presentation() -> FreePresentation:
    return FreePresentation(ambient=P1xP1, targets=((3, 2),))


STANDARD_F1 = "x0_0^2*x1_0^2 + x0_1^2*x1_1^2 + x0_0*x0_1*x1_2^2"
STANDARD_F2 = "x0_0^3*x1_2 + x0_1^3*x1_0 + x0_1^3*x1_1"


def standard_presentation() -> FreePresentation:
    """Koszul presentation of the complete intersection of the two
    standard generators of degrees (2,2) and (3,1)."""
    return FreePresentation.from_json(
        P1xP2,
        {
            "targets": [[2, 2], [3, 1]],
            "sources": [[5, 3]],
            "matrix": [[STANDARD_F2], [f"-({STANDARD_F1})"]],
        },
    )


INTRO_EN_PAIRS = {
    0: {(4, 0): 5, (3, 1): 50, (2, 2): 100, (1, 3): 50, (0, 4): 5},
    1: {(5, 0): 1, (4, 1): 25, (3, 2): 100, (2, 3): 100, (1, 4): 25, (0, 5): 1},
    2: {(5, 1): 5, (4, 2): 50, (3, 3): 100, (2, 4): 50, (1, 5): 5},
    3: {(5, 2): 10, (4, 3): 50, (3, 4): 50, (2, 5): 10},
}

TWO_POINTS_FIGURE_CORNERS = ((0, 1), (1, 0))
STANDARD_FIGURE_CORNERS = ((2, 5), (3, 3), (4, 2))
HYPERSURFACE_CORNERS = ((3, 2),)


def msgen_brute_force(regions, ambient: Ambient) -> Region:
    """Direct union over all functions from step indices to factors;
    reference semantics for the dynamic program in complex_region_bound."""
    n = ambient.n
    steps = ambient.total + 1
    regs = list(regions)
    while len(regs) < steps + 1:
        regs.append(Region.whole(n))
    regs = regs[: steps + 1]
    out = Region.empty(n)
    for phi in product(range(n), repeat=steps):
        value = regs[0]
        shift = tuple(0 for _ in range(n))
        for i in range(1, steps + 1):
            e = basis_vector(n, phi[i - 1])
            shift = tuple(a - b for a, b in zip(shift, e))
            value = value.intersect(regs[i].translate(shift))
        out = out.union(value)
    return out


def _expect(name: str, got, want) -> tuple[str, bool, str]:
    ok = got == want
    detail = f"computed {got!r}" if ok else f"computed {got!r}, expected {want!r}"
    return name, ok, detail


def _glp_checks():
    b = curve_regularity_bound(intro_curve())
    yield _expect("intro curve constant a", b.sections, 4)
    yield _expect("intro curve source ranks", b.ranks, (5, 5))
    yield _expect("intro curve bound", b.bound, (4, 4))
    yield _expect("standard curve bound", curve_regularity_bound(standard_curve()).bound, (7, 9))
    bl = curve_regularity_bound(square_curve())
    yield _expect("square ambient bound", bl.bound, (2, 3))
    yield _expect("square ambient excluded flag", bl.excluded_p1xp1, True)
    yield _expect("duple bound (2,2)", duple_embedding_bound((2, 2)).bound, (2, 2))
    yield _expect("duple bound (3,3,3)", duple_embedding_bound((3, 3, 3)).bound, (2, 2, 2))


def _en_checks():
    shape = en_complex_shape(intro_curve())
    for i, want in INTRO_EN_PAIRS.items():
        got = dict(shape.complex.term(i))
        yield _expect(f"intro complex term {i}", got, want)
    yield _expect("intro complex term count", len(shape.complex.terms), 7)


def _ltg_checks():
    cx_a, cx_b = two_points_complex_a(), two_points_complex_b()
    yield _expect("two-points resolution growth", linear_twist_growth(cx_a).ok, True)
    yield _expect("two-points bound", leading_term_bound(cx_a).corners, ((2, 1),))
    yield _expect("two-points second bound", leading_term_bound(cx_b).corners, ((1, 2),))
    single = TwistComplex(ambient=P1xP1, terms=((((3, 2), 1),),))
    yield _expect("hypersurface leading bound", leading_term_bound(single).corners, ((3, 2),))


def _regions_checks():
    yield _expect(
        "twist sum corner", twist_sum_region(2, [((2, 0), 1), ((1, 1), 2)]).corners, ((2, 1),)
    )
    yield _expect(
        "mixed twist sum corner",
        twist_sum_region(2, [((1, -2), 1), ((-1, 3), 1)]).corners,
        ((1, 3),),
    )


def _msgen_checks():
    # the function count on a surface ambient, and the dynamic program
    # against the direct enumeration on a sample input
    n, steps = P1xP1.n, P1xP1.total + 1
    yield _expect("function count", n**steps, 8)
    regs = [
        Region.from_corners(2, [(1, 0), (0, 2)]),
        Region.from_corners(2, [(2, 1)]),
        Region.from_corners(2, [(1, 3)]),
        Region.whole(2),
    ]
    got = complex_region_bound(regs, P1xP1)
    want = msgen_brute_force(regs, P1xP1)
    yield _expect("shifted-intersection union", got.corners, want.corners)


def _scan_checks(field: FieldConfig):
    hyper = hypersurface_presentation()
    yield _expect(
        "hypersurface scan",
        regularity_scan(hyper, [(0, 6), (0, 6)], field).region.corners,
        HYPERSURFACE_CORNERS,
    )
    yield _expect("hypersurface regular at (3,2)", is_regular(hyper, (3, 2), field), True)
    yield _expect("hypersurface regular at (2,2)", is_regular(hyper, (2, 2), field), False)

    pts = two_points_presentation()
    yield _expect("two points regular at (0,0)", is_regular(pts, (0, 0), field), False)
    got = regularity_scan(pts, [(-1, 4), (-1, 4)], field).region.corners
    name, ok, detail = _expect("two points scan (figure)", got, TWO_POINTS_FIGURE_CORNERS)
    if not ok:
        detail += (
            "; the published figure tracks a quotient-module invariant that the "
            "sheaf-level definition provably cannot reproduce (see README)"
        )
    yield name, ok, detail

    std = standard_presentation()
    scan = regularity_scan(std, [(0, 8), (0, 8)], field)
    yield _expect("standard curve scan", scan.region.corners, STANDARD_FIGURE_CORNERS)
    yield _expect("bound inside scanned region", scan.region.contains((7, 9)), True)


GROUPS = ("regions", "glp", "en", "ltg", "msgen", "scan")


def run_checks(only: str | None = None, prime: int | None = None):
    """Run the replay checks, optionally one group, optionally at another
    prime for the scans.  Returns (results, all_ok) with results a list of
    (group, name, ok, detail)."""
    if only is not None and only not in GROUPS:
        raise ValueError(f"unknown check group {only!r}; choose from {', '.join(GROUPS)}")
    field = FieldConfig(prime if prime is not None else 32003)
    sections = {
        "regions": _regions_checks,
        "glp": _glp_checks,
        "en": _en_checks,
        "ltg": _ltg_checks,
        "msgen": _msgen_checks,
        "scan": lambda: _scan_checks(field),
    }
    results = []
    for group in GROUPS:
        if only is not None and group != only:
            continue
        for name, ok, detail in sections[group]():
            results.append((group, name, ok, detail))
    all_ok = all(ok for _, _, ok, _ in results)
    return results, all_ok
