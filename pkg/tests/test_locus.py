import random

import pytest

from triple_defect import GF, RATIONALS, parse, ring
from triple_defect.errors import CertificationError, InputError
from triple_defect.locus import (ProjectivePoint, certify_cone_smooth,
                                 find_singular_points, verify_triple_point)
from triple_defect.poly import Polynomial, monomial_basis

from support import random_homogeneous

R7 = ring(GF(7))
R11 = ring(GF(11))

QUARTIC = parse("x0*(x1^3+x2^3+x3^3+x4^3) + x1^4+x2^4+x3^4+x4^4", R7)


def test_canonical_points():
    p = ProjectivePoint.canonical((3, 0, 0, 0, 0), R7)
    assert p.coordinates == (1, 0, 0, 0, 0)
    q = ProjectivePoint.canonical((2, 4, 0, 0, 6), R7)
    assert q.coordinates[0] == 1
    assert p == ProjectivePoint.canonical((5, 0, 0, 0, 0), R7)
    with pytest.raises(InputError):
        ProjectivePoint.canonical((0, 0, 0, 0, 0), R7)
    # weighted rescaling acts with lambda^w on each coordinate
    rw = ring(GF(7), weights=(1, 1, 1, 1, 2))
    w = ProjectivePoint.canonical((2, 0, 0, 0, 3), rw)
    assert w.coordinates == (1, 0, 0, 0, 4 * 4 * 3 % 7)


def test_find_singular_points_examples():
    fermat = parse("x0^5+x1^5+x2^5+x3^5+x4^5", R11)
    assert find_singular_points(fermat) == []

    pts = find_singular_points(QUARTIC)
    assert [p.coordinates for p in pts] == [(1, 0, 0, 0, 0)]

    # a smooth-over-F7 sextic surface stand-in: no singular points found
    smooth = parse("x0^6+x1^6+x2^6+x3^6+x0*x1*x2*x3*x4*x4", R7)
    assert find_singular_points(smooth) == []


def test_find_singular_points_verified_and_deterministic():
    pts1 = find_singular_points(QUARTIC)
    pts2 = find_singular_points(QUARTIC, workers=3)
    assert pts1 == pts2
    for p in pts1:
        assert QUARTIC.evaluate(p.coordinates) == 0
        for i in range(5):
            assert QUARTIC.partial_derivative(i).evaluate(p.coordinates) == 0


def test_find_singular_requires_finite_field():
    F = parse("x0^5+x1^5+x2^5+x3^5+x4^5", ring(RATIONALS))
    with pytest.raises(InputError):
        find_singular_points(F)


def test_find_singular_weighted_ring():
    rw = ring(GF(7), weights=(1, 1, 1, 1, 2))
    # x4^3 - (smooth sextic): cover of a smooth surface, no singular points
    F = parse("x4^3 - x0^6 - x1^6 - x2^6 - x3^6", rw)
    assert find_singular_points(F) == []
    # cone with an isolated triple point at e0's opposite: x4^3 = x1^6 + ...
    G = parse("x4^3 - x1^6 - x2^6 - x3^6", rw)
    pts = find_singular_points(G)
    assert [p.coordinates for p in pts] == [(1, 0, 0, 0, 0)]


def test_verify_triple_point_quartic():
    cert = verify_triple_point(QUARTIC, (1, 0, 0, 0, 0))
    lr = cert.cubic_form.ring
    assert cert.cubic_form == parse("y1^3+y2^3+y3^3+y4^3", lr)
    assert cert.cone.status == "smooth"
    assert cert.cone.saturation_degree <= 5
    assert cert.q_matrix.rank() == 4
    assert cert.annihilator.shape == (11, 15)
    assert cert.annihilator.rank() == 11
    prod = cert.annihilator @ cert.q_matrix.transpose()
    assert all(x == 0 for row in prod.rows() for x in row)


def test_verify_triple_point_errors():
    node = parse("x0^2*(x1^2 + x2^2 + x3^2 + x4^2)", R7)
    with pytest.raises(CertificationError, match="multiplicity < 3"):
        verify_triple_point(node, (1, 0, 0, 0, 0))

    cone_bad = parse("x0*x1^3", R7)
    with pytest.raises(CertificationError, match="singular"):
        verify_triple_point(cone_bad, (1, 0, 0, 0, 0))

    with pytest.raises(CertificationError, match="not on the hypersurface"):
        verify_triple_point(QUARTIC, (1, 1, 1, 1, 1))

    quad4 = parse("x1^4 + x2^4 + x3^4 + x4^4", R7)
    with pytest.raises(CertificationError, match="multiplicity > 3"):
        verify_triple_point(quad4, (1, 0, 0, 0, 0))


def test_certify_cone_smooth_examples():
    lr = ring(GF(7), weights=(1, 1, 1, 1), names=("y1", "y2", "y3", "y4"))
    fermat = parse("y1^3+y2^3+y3^3+y4^3", lr)
    res = certify_cone_smooth(fermat)
    assert res.status == "smooth"
    assert res.saturation_degree == 5

    res = certify_cone_smooth(parse("y1^3", lr))
    assert res.status == "singular"
    assert res.witness == (0, 1, 0, 0)

    res = certify_cone_smooth(parse("y1^2*y2", lr))
    assert res.status == "singular"
    # partial in y1 is 2*y1*y2, partial in y2 is y1^2; (0:0:1:0) kills both
    assert res.witness == (0, 0, 1, 0)

    with pytest.raises(InputError):
        certify_cone_smooth(parse("y1^2", lr))
    with pytest.raises(InputError):
        certify_cone_smooth(lr.zero())


def test_certified_smooth_cone_has_no_rational_singular_point():
    lr = ring(GF(7), weights=(1, 1, 1, 1), names=("y1", "y2", "y3", "y4"))
    cubic = parse("y1^3+y2^3+y3^3+y4^3 + y1*y2*y4", lr)
    res = certify_cone_smooth(cubic)
    if res.status == "smooth":
        partials = [cubic.partial_derivative(i) for i in range(4)]
        from triple_defect.locus import _scan_common_zeros
        assert _scan_common_zeros(lr, partials) == []


def test_random_smooth_cones_saturate_by_8():
    rng = random.Random(2)
    lr = ring(GF(11), weights=(1, 1, 1, 1), names=("y1", "y2", "y3", "y4"))
    fermat = parse("y1^3+y2^3+y3^3+y4^3", lr)
    smooth_seen = 0
    for _ in range(12):
        pert = random_homogeneous(rng, lr, 3, sparsity=0.3)
        res = certify_cone_smooth(fermat + pert)
        assert res.status != "undetermined"
        smooth_seen += res.status == "smooth"
    assert smooth_seen >= 8  # perturbations of a smooth cubic are mostly smooth
