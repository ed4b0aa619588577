import random

import pytest

from multireg.regions import Ambient, Region, twist_sum_region
from multireg.twistcx import (
    GrowthReport,
    LinearGrowthError,
    TwistComplex,
    complex_region_bound,
    leading_term_bound,
    linear_twist_growth,
    quotient_region_bound,
)
from multireg.verify import msgen_brute_force, two_points_complex_a, two_points_complex_b

P1xP1 = Ambient((1, 1))


def test_complex_normalization():
    cx = TwistComplex(
        ambient=P1xP1,
        terms=(
            (((1, 1), 2), ((1, 1), 3), ((0, 2), 1)),
            (((2, 1), 1),),
        ),
    )
    assert cx.term(0) == (((0, 2), 1), ((1, 1), 5))
    assert cx.length == 1
    with pytest.raises(ValueError):
        TwistComplex(ambient=P1xP1, terms=((((1, 1), 0),),))
    with pytest.raises(ValueError):
        TwistComplex(ambient=P1xP1, terms=())


def test_complex_serialization():
    cx = two_points_complex_a()
    assert TwistComplex.from_json(cx.to_json()) == cx
    with pytest.raises(ValueError):
        TwistComplex.from_json({"terms": []})
    with pytest.raises(ValueError):
        TwistComplex.from_json({"ambient": [1, 1], "terms": [], "extra": 1})
    with pytest.raises(ValueError):
        TwistComplex.from_json({"ambient": [1, 1], "terms": [[[1, 1]]]})


def test_growth_test_passes_on_resolutions():
    for cx in (two_points_complex_a(), two_points_complex_b()):
        report = linear_twist_growth(cx)
        assert report.ok
        assert report.offender is None
        covered = {key for key, _ in report.witnesses}
        assert covered == {
            (k, m) for k in range(1, cx.length + 1) for m, _ in cx.term(k)
        }
        for (k, m), base in report.witnesses:
            assert all(b <= a for b, a in zip(base, m))
            assert sum(a - b for b, a in zip(base, m)) <= k


def test_growth_test_finds_offender():
    cx = TwistComplex(ambient=P1xP1, terms=((((0, 0), 1),), (((2, 0), 1),)))
    report = linear_twist_growth(cx)
    assert report == GrowthReport(ok=False, offender=(1, (2, 0)))
    with pytest.raises(LinearGrowthError):
        leading_term_bound(cx)


def test_growth_test_needs_anchors():
    cx = TwistComplex(ambient=P1xP1, terms=((), (((1, 0), 1),)))
    with pytest.raises(ValueError):
        linear_twist_growth(cx)


def test_leading_term_bound_values():
    assert leading_term_bound(two_points_complex_a()).corners == ((2, 1),)
    assert leading_term_bound(two_points_complex_b()).corners == ((1, 2),)
    hyp = TwistComplex(ambient=P1xP1, terms=((((3, 2), 1),),))
    assert leading_term_bound(hyp).corners == ((3, 2),)


def test_combined_region_frozen_example():
    cx = two_points_complex_a()
    regs = [twist_sum_region(2, term) for term in cx.terms]
    assert complex_region_bound(regs, P1xP1).corners == ((2, 1),)
    cx = two_points_complex_b()
    regs = [twist_sum_region(2, term) for term in cx.terms]
    assert complex_region_bound(regs, P1xP1).corners == ((1, 2),)


def test_combined_region_identities():
    origin = Region.from_corners(2, [(0, 0)])
    assert complex_region_bound([origin] * 4, P1xP1) == origin
    lead = Region.from_corners(2, [(3, 1)])
    assert complex_region_bound([lead], P1xP1) == lead
    assert complex_region_bound(
        [lead, Region.whole(2), Region.whole(2), Region.whole(2)], P1xP1
    ) == lead
    with pytest.raises(ValueError):
        complex_region_bound([], P1xP1)
    with pytest.raises(ValueError):
        complex_region_bound([Region.whole(3)], P1xP1)


def _random_region(rng, dim):
    roll = rng.random()
    if roll < 0.06:
        return Region.whole(dim)
    count = rng.randint(1, 3)
    corners = [
        tuple(rng.randint(-2, 3) for _ in range(dim)) for _ in range(count)
    ]
    return Region.from_corners(dim, corners)


def test_combined_region_matches_brute_force():
    rng = random.Random(20240814)
    for _ in range(300):
        n = rng.randint(2, 3)
        amb = Ambient((1,) * n)
        count = rng.randint(1, amb.total + 2)
        regs = [_random_region(rng, n) for _ in range(count)]
        assert complex_region_bound(regs, amb) == msgen_brute_force(regs, amb)


def _subset(a: Region, b: Region) -> bool:
    return a.intersect(b) == a


def test_combined_region_monotone():
    rng = random.Random(20240815)
    for _ in range(200):
        n = 2
        amb = P1xP1
        count = rng.randint(1, 4)
        small = [_random_region(rng, n) for _ in range(count)]
        large = [s.union(_random_region(rng, n)) for s in small]
        assert _subset(
            complex_region_bound(small, amb), complex_region_bound(large, amb)
        )


def test_quotient_region_bound():
    sub = Region.from_corners(2, [(1, 1)])
    mid = Region.from_corners(2, [(0, 0)])
    assert quotient_region_bound(sub, mid, P1xP1).corners == ((0, 1), (1, 0))
    assert quotient_region_bound(Region.whole(2), mid, P1xP1) == mid
    with pytest.raises(ValueError):
        quotient_region_bound(Region.whole(3), mid, P1xP1)
