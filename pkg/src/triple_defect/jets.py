"""Charts at projective points and low-order jets.

A point with a nonzero weight-1 coordinate admits a chart: the point is
rescaled so that coordinate equals 1 (the weighted action never needs a
root extraction for a weight-1 pivot) and the remaining coordinates become
affine.  Jets are classes modulo powers of the local maximal ideal; the
order-2 jet of a polynomial is its vector of 15 Taylor coefficients

    1; y1..y4; y1^2, y1*y2, y1*y3, y1*y4, y2^2, y2*y3, y2*y4, y3^2, y3*y4, y4^2

where yk is the k-th non-chart variable in ascending index order.  This
fixed index order is also the serialisation order of certificates.

Taylor coefficients are computed by evaluating derivatives at the center,
never by expanding the full local equation; the only divisions are by
alpha! with |alpha| <= 3, which is why the base field excludes p = 2, 3.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CertificationError, InputError
from .exactalg import Matrix
from .poly import Polynomial, Ring, local_ring


@dataclass(frozen=True)
class Chart:
    """A normalised center together with its weight-1 chart coordinate."""

    ring: Ring
    center: tuple
    chart_index: int
    local_vars: tuple  # ambient indices of the local variables, ascending

    @property
    def nlocal(self) -> int:
        return len(self.local_vars)

    def local_ring(self) -> Ring:
        return local_ring(self.ring, self.chart_index)


def _coords(pt):
    return tuple(pt.coordinates) if hasattr(pt, "coordinates") else tuple(pt)


def choose_chart(pt, ring_: Ring) -> Chart:
    """Chart at the smallest weight-1 index with nonzero coordinate.

    The point is rescaled by the weighted action (coordinate j picks up
    lambda^w_j with lambda the pivot inverse) so the pivot becomes 1.
    """
    f = ring_.field
    coords = [f.coerce(x) for x in _coords(pt)]
    if len(coords) != ring_.nvars:
        raise InputError("point length does not match the ring")
    if all(f.is_zero(x) for x in coords):
        raise InputError("the zero tuple is not a projective point")
    for c in range(ring_.nvars):
        if ring_.weights[c] == 1 and not f.is_zero(coords[c]):
            lam = f.inv(coords[c])
            normal = tuple(f.mul(x, f.pow(lam, w)) for x, w in zip(coords, ring_.weights))
            locals_ = tuple(j for j in range(ring_.nvars) if j != c)
            return Chart(ring_, normal, c, locals_)
    raise CertificationError("no smooth chart available: "
                             "no nonzero coordinate of weight 1")


def jet_monomials(nlocal: int, min_order: int = 0, max_order: int = 2):
    """Local exponent tuples of total order in [min_order, max_order].

    Order 0 first, then linear, then quadratic slots in the documented
    index order; the same scheme extends to order 3 for tangent cones.
    """
    out = []
    for order in range(min_order, max_order + 1):
        block = []

        def rec2(prefix, used, idx):
            if idx == nlocal:
                if used == order:
                    block.append(prefix)
                return
            for e in range(order - used, -1, -1):
                rec2(prefix + (e,), used + e, idx + 1)

        rec2((), 0, 0)
        out.extend(block)
    return out


JET2_SIZE = 15  # 1 + 4 + 10 local monomials of order <= 2 in four variables


def _falling(e: int, a: int) -> int:
    v = 1
    for k in range(a):
        v *= e - k
    return v


def _multi_factorial(alpha) -> int:
    # alpha! = prod_i alpha_i!  (not |alpha|!): each variable differentiates
    # independently, so only repeated directions contribute a factor
    v = 1
    for a in alpha:
        for k in range(2, a + 1):
            v *= k
    return v


def taylor_coefficients(p: Polynomial, chart: Chart, max_order: int = 2) -> dict:
    """Taylor coefficients d^a f(0)/a! of the local expansion, |a| <= order.

    f is the dehomogenisation of p in the chart; the coefficients are read
    off from evaluated derivatives of p at the center, so no expansion of
    the full local equation ever happens.
    """
    if p.ring != chart.ring:
        raise InputError("polynomial and chart from different rings")
    f = p.ring.field
    alphas = jet_monomials(chart.nlocal, 0, max_order)
    inv_fact = {a: f.inv(f.coerce(_multi_factorial(a))) for a in alphas}
    center = chart.center
    out = {a: f.zero() for a in alphas}
    for m, c in p.terms.items():
        local_exps = tuple(m[v] for v in chart.local_vars)
        for a in alphas:
            v = c
            dead = False
            for e, ak, amb in zip(local_exps, a, chart.local_vars):
                if ak > e:
                    dead = True
                    break
                if ak:
                    v = f.mul(v, f.coerce(_falling(e, ak)))
                rest = e - ak
                if rest:
                    x = center[amb]
                    if f.is_zero(x):
                        dead = True
                        break
                    v = f.mul(v, f.pow(x, rest))
            if dead:
                continue
            out[a] = f.add(out[a], v)
    for a in alphas:
        if _multi_factorial(a) > 1:
            out[a] = f.mul(out[a], inv_fact[a])
    return out


def jet2(p: Polynomial, chart: Chart):
    """The 15 order-<=2 Taylor coefficients in the fixed index order."""
    coeffs = taylor_coefficients(p, chart, 2)
    return [coeffs[a] for a in jet_monomials(chart.nlocal, 0, 2)]


def jet_matrix(monomials, chart: Chart) -> Matrix:
    """Jet-evaluation matrix: column j is jet2 of the j-th monomial."""
    f = chart.ring.field
    one = f.one()
    cols = []
    for m in monomials:
        p = Polynomial(chart.ring, {tuple(m): one})
        cols.append(jet2(p, chart))
    nrows = len(jet_monomials(chart.nlocal, 0, 2))
    rows = [[col[i] for col in cols] for i in range(nrows)]
    return Matrix(f, rows, len(cols))


def partial_jets(F: Polynomial, chart: Chart, expect_triple_point: bool = True) -> Matrix:
    """Order-2 jets of the partial derivatives of F at the chart center.

    Row i is jet2 of dF/dx_i.  At a point of multiplicity >= 3 every row
    has zero constant and linear part; with expect_triple_point this is
    verified and a violation is a certification failure.
    """
    if not F.is_homogeneous():
        raise InputError("F must be homogeneous")
    f = F.ring.field
    rows = []
    low = 1 + chart.nlocal  # slots of order <= 1
    for i in range(F.ring.nvars):
        row = jet2(F.partial_derivative(i), chart)
        if expect_triple_point and any(not f.is_zero(x) for x in row[:low]):
            raise CertificationError(
                f"point is not a triple point of F: dF/d{F.ring.names[i]} "
                "has nonzero jet below order 2")
        rows.append(row)
    return Matrix(f, rows, len(jet_monomials(chart.nlocal, 0, 2)))
