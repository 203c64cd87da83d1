"""Triple cyclic covers of P^3 branched along a surface of degree 3k.

A surface D = {g = 0} in P^3 of degree divisible by 3 determines the
threefold x4^3 = g(x0..x3) in P(1,1,1,1, deg(g)/3).  Its singular points
sit exactly over the singular points of D (the x4-partial forces x4 = 0),
so an exhaustive singular scan of the surface is an exhaustive scan of
the cover.  We fix the sign convention F = x4^3 - g.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .locus import ProjectivePoint
from .poly import Polynomial, Ring, ring


@dataclass(frozen=True)
class CoverSpec:
    surface_g: Polynomial      # quasi-smooth or not: the branch surface in P^3
    cover_F: Polynomial        # x4^3 - g in the weighted 5-variable ring
    cover_ring: Ring

    @property
    def defect_degree(self) -> int:
        return 2 * self.cover_F.weighted_degree() - sum(self.cover_ring.weights)


def triple_cover(g: Polynomial) -> CoverSpec:
    """Build the cover x4^3 = g for a degree-3k branch surface g in P^3."""
    if g.ring.nvars != 4 or g.ring.weights != (1, 1, 1, 1):
        raise InputError("the branch surface must live in P^3 (4 unit-weight variables)")
    if g.is_zero():
        raise InputError("zero branch polynomial")
    dg = g.weighted_degree()
    if dg is None:
        raise InputError("branch polynomial must be homogeneous")
    if dg % 3 != 0:
        raise InputError(f"branch degree {dg} is not divisible by 3")
    w4 = dg // 3
    cring = ring(g.ring.field, weights=(1, 1, 1, 1, w4))
    terms = {m + (0,): c for m, c in g.terms.items()}
    f = cring.field
    embedded = Polynomial(cring, terms)
    x4cubed = Polynomial(cring, {(0, 0, 0, 0, 3): f.one()})
    cover_F = x4cubed - embedded
    assert cover_F.weighted_degree() == dg
    return CoverSpec(g, cover_F, cring)


def lift_point(cover: CoverSpec, pt) -> ProjectivePoint:
    """Lift a surface point P with g(P) = 0 to (P : 0) on the cover."""
    coords = tuple(pt.coordinates) if hasattr(pt, "coordinates") else tuple(pt)
    f = cover.cover_ring.field
    if not f.is_zero(cover.surface_g.evaluate(coords)):
        raise InputError(f"point {coords} is not on the branch surface")
    return ProjectivePoint.canonical(coords + (f.zero(),), cover.cover_ring)


def lift_points(cover: CoverSpec, surface_points):
    """Lift a list of branch-surface points; preserves order."""
    return [lift_point(cover, pt) for pt in surface_points]
