"""Singular points of a hypersurface and ordinary-triple-point certificates.

Over a prime field the singular locus is found by exhaustive enumeration
of the (weighted) projective space, chart by chart: each point is visited
exactly once in canonical form, the hypersurface and its partials are
evaluated in bulk with int64 numpy arithmetic, and every candidate is
re-verified with exact scalar arithmetic before it is reported.

A point is certified as an ordinary triple point by establishing, in this
order: the point lies on the hypersurface; the local equation has no terms
below order 3; the order-3 leading form is nonzero; the projectivised
tangent cone (a cubic surface) is smooth; and the quadratic jets of the
five partials span a 4-dimensional space.  Cone smoothness is certified by
a graded saturation test on the ideal of the cone's partials - pure linear
algebra, valid over the algebraic closure - with an exhaustive rational
search as the negative certificate over a finite field.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import CertificationError, InputError
from .exactalg import Matrix
from .jets import Chart, choose_chart, jet_monomials, partial_jets, taylor_coefficients
from .poly import Polynomial, Ring, monomial_basis

_CHUNK = 1 << 16


@dataclass(frozen=True)
class ProjectivePoint:
    """A point of (weighted) projective space in canonical coordinates.

    Canonical form: the first nonzero coordinate of weight 1 is scaled to
    1 under the weighted action; two points are equal iff their canonical
    coordinate tuples are equal.
    """

    coordinates: tuple

    @classmethod
    def canonical(cls, coords, ring_: Ring) -> "ProjectivePoint":
        f = ring_.field
        xs = [f.coerce(x) for x in coords]
        if len(xs) != ring_.nvars:
            raise InputError("coordinate count does not match the ring")
        if all(f.is_zero(x) for x in xs):
            raise InputError("all coordinates are zero")
        for c in range(ring_.nvars):
            if ring_.weights[c] == 1 and not f.is_zero(xs[c]):
                lam = f.inv(xs[c])
                return cls(tuple(f.mul(x, f.pow(lam, w))
                                 for x, w in zip(xs, ring_.weights)))
        # no weight-1 pivot: orbit-minimal representative (finite fields only)
        if not f.is_prime_field:
            raise InputError("point has no nonzero weight-1 coordinate; "
                             "no canonical form over Q")
        p = f.characteristic
        best = None
        for lam in range(1, p):
            scaled = tuple(x * pow(lam, w, p) % p for x, w in zip(xs, ring_.weights))
            if best is None or scaled < best:
                best = scaled
        return cls(best)

    def __str__(self):
        return "(" + " : ".join(str(x) for x in self.coordinates) + ")"


# -- exhaustive enumeration over F_p -------------------------------------------


def _strata(ring_: Ring):
    """Disjoint strata covering projective space once, in canonical form.

    Chart strata fix the pivot to 1 and earlier weight-1 coordinates to 0;
    the residual stratum (all weight-1 coordinates zero) is enumerated raw
    and deduplicated by orbit minimum afterwards.
    """
    n = ring_.nvars
    weight1 = [i for i in range(n) if ring_.weights[i] == 1]
    for c in weight1:
        fixed = {j: 0 for j in weight1 if j < c}
        fixed[c] = 1
        free = [j for j in range(n) if j not in fixed]
        yield "chart", fixed, free
    heavy = [i for i in range(n) if ring_.weights[i] > 1]
    if heavy:
        fixed = {j: 0 for j in weight1}
        yield "residual", fixed, heavy


def _chunk_values(polys, fixed, free, start, count, p):
    """Evaluate each polynomial on a chunk of stratum points, mod p."""
    idx = np.arange(start, start + count, dtype=np.int64)
    coords = {}
    for j in reversed(free):
        coords[j] = idx % p
        idx = idx // p
    max_exp = {j: 0 for j in free}
    for poly in polys:
        for m in poly.terms:
            for j in free:
                max_exp[j] = max(max_exp[j], m[j])
    pows = {}
    for j in free:
        table = [np.ones(count, dtype=np.int64)]
        for _ in range(max_exp[j]):
            table.append(table[-1] * coords[j] % p)
        pows[j] = table
    values = []
    for poly in polys:
        acc = np.zeros(count, dtype=np.int64)
        for m, c in poly.terms.items():
            if any(m[j] > 0 and fixed[j] == 0 for j in fixed):
                continue
            t = np.full(count, int(c), dtype=np.int64)
            for j in free:
                if m[j]:
                    t = t * pows[j][m[j]] % p
            acc = (acc + t) % p
        values.append(acc)
    return coords, values


def _scan_common_zeros(ring_: Ring, polys, workers: int = 1):
    """All canonical points of P(w) over F_p where every poly vanishes."""
    if not ring_.field.is_prime_field:
        raise InputError("exhaustive search requires a finite field")
    p = ring_.field.characteristic
    f = ring_.field
    n = ring_.nvars

    raw = []

    def handle_chunk(kind, fixed, free, start, count):
        coords, values = _chunk_values(polys, fixed, free, start, count, p)
        mask = values[0] == 0
        for v in values[1:]:
            mask &= v == 0
        hits = np.nonzero(mask)[0]
        found = []
        for i in hits:
            tup = tuple(int(coords[j][i]) if j in coords else fixed[j] for j in range(n))
            found.append((kind, tup))
        return found

    jobs = []
    for kind, fixed, free in _strata(ring_):
        total = p ** len(free)
        start = 0
        while start < total:
            count = min(_CHUNK, total - start)
            jobs.append((kind, fixed, free, start, count))
            start += count
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for found in pool.map(lambda j: handle_chunk(*j), jobs):
                raw.extend(found)
    else:
        for job in jobs:
            raw.extend(handle_chunk(*job))

    points = set()
    for kind, tup in raw:
        if kind == "residual" and all(v == 0 for v in tup):
            continue
        pt = ProjectivePoint.canonical(tup, ring_)
        # exact re-verification, independent of the vectorised evaluation
        if all(f.is_zero(poly.evaluate(pt.coordinates)) for poly in polys):
            points.add(pt)
    return sorted(points, key=lambda q: q.coordinates)


def find_singular_points(F: Polynomial, workers: int = 1):
    """Exhaustive singular locus of {F = 0} over a prime field.

    Returns the canonical points where F and all its partials vanish,
    sorted by coordinates.  Over Q there is nothing to enumerate and the
    caller must supply candidate points.
    """
    if F.is_zero():
        raise InputError("zero polynomial")
    if not F.is_homogeneous():
        raise InputError("F must be homogeneous")
    polys = [F] + [F.partial_derivative(i) for i in range(F.ring.nvars)]
    return _scan_common_zeros(F.ring, polys, workers)


# -- tangent cone certification -------------------------------------------------


@dataclass(frozen=True)
class ConeCertificate:
    """Outcome of the cone smoothness test.

    status is "smooth" (with the saturation degree), "singular" (with a
    rational witness point), or "undetermined" (saturation failed up to
    k_max and no rational singular point exists / was searchable).
    """

    status: str
    saturation_degree: int | None
    k_max: int
    witness: tuple | None = None


def certify_cone_smooth(cubic: Polynomial, k_max: int = 8) -> ConeCertificate:
    """Decide smoothness of the projectivised cubic cone.

    The cone is smooth iff its four partial quadrics have no common zero
    over the algebraic closure; that holds iff the ideal they generate
    fills a whole graded piece (projective Nullstellensatz), which is a
    rank computation in each degree k = 2..k_max.
    """
    r = cubic.ring
    if cubic.is_zero() or cubic.weighted_degree() != 3:
        raise InputError("cone form must be a nonzero cubic")
    partials = [cubic.partial_derivative(i) for i in range(r.nvars)]
    f = r.field
    for k in range(2, k_max + 1):
        basis = monomial_basis(r, k)
        index = {m: j for j, m in enumerate(basis)}
        rows = []
        for q in partials:
            if q.is_zero():
                continue
            for m in monomial_basis(r, k - 2):
                prod = Polynomial(r, {tuple(m): f.one()}) * q
                row = [f.zero()] * len(basis)
                for mm, c in prod.terms.items():
                    row[index[mm]] = c
                rows.append(row)
        if rows and Matrix(f, rows, len(basis)).rank() == len(basis):
            return ConeCertificate("smooth", k, k_max)
    if f.is_prime_field:
        # a nonzero cubic has a nonzero partial in char >= 5 (Euler identity)
        zeros = _scan_common_zeros(r, [q for q in partials if not q.is_zero()], 1)
        if zeros:
            return ConeCertificate("singular", None, k_max,
                                   witness=zeros[0].coordinates)
    return ConeCertificate("undetermined", None, k_max)


# -- triple point certification --------------------------------------------------


@dataclass(frozen=True)
class TriplePointCertificate:
    """Per-point proof data consumed by the defect computation.

    q_matrix holds the quadratic jets of the five partials (rank 4); the
    annihilator rows are the 11 independent functionals on the 15 jet
    coordinates that kill the span of those jets.
    """

    point: ProjectivePoint
    chart: Chart
    cubic_form: Polynomial
    q_matrix: Matrix
    annihilator: Matrix
    cone: ConeCertificate


def verify_triple_point(F: Polynomial, pt, k_max: int = 8) -> TriplePointCertificate:
    """Certify that pt is an ordinary triple point of {F = 0}.

    Raises CertificationError naming the first failed check; on success
    every certificate invariant has been established at runtime.
    """
    if F.is_zero() or not F.is_homogeneous():
        raise InputError("F must be a nonzero homogeneous polynomial")
    if F.ring.nvars != 5:
        raise InputError("triple point certification runs in the 5-variable ring")
    chart = choose_chart(pt, F.ring)
    point = ProjectivePoint(chart.center)
    f = F.ring.field

    if not f.is_zero(F.evaluate(chart.center)):
        raise CertificationError(f"{point} is not on the hypersurface")

    coeffs = taylor_coefficients(F, chart, 3)
    low = [a for a in jet_monomials(chart.nlocal, 0, 2) if not f.is_zero(coeffs[a])]
    if low:
        raise CertificationError(f"multiplicity < 3 at {point}: "
                                 f"order-{sum(low[0])} term survives")
    cubic_terms = {a: coeffs[a] for a in jet_monomials(chart.nlocal, 3, 3)
                   if not f.is_zero(coeffs[a])}
    if not cubic_terms:
        raise CertificationError(f"multiplicity > 3 at {point}")
    cubic_form = Polynomial(chart.local_ring(), cubic_terms)

    cone = certify_cone_smooth(cubic_form, k_max)
    if cone.status == "singular":
        raise CertificationError(f"tangent cone at {point} is singular "
                                 f"(witness {cone.witness})")

    q_matrix = partial_jets(F, chart, expect_triple_point=True)
    if q_matrix.rank() != 4:
        raise CertificationError(f"partials dependent mod m^3 at {point}: "
                                 "not an ordinary triple point")
    annihilator = q_matrix.row_space_annihilator()
    return TriplePointCertificate(point, chart, cubic_form, q_matrix, annihilator, cone)
