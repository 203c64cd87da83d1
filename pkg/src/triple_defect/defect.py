"""Dimension of the equisingular ideal's relevant graded piece, and the defect.

For a degree-d hypersurface with mu ordinary triple points the relevant
degree is D = 2d - |w|.  A degree-D form A belongs to the equisingular
ideal iff at every singular point its order-2 jet lies in the span Q_i of
the quadratic jets of the partials: the fast method stacks, per point, the
11 annihilator functionals of Q_i applied to the jet-evaluation matrix of
the degree-D monomial basis, and reads everything off one exact rank

    dim I_eq^(D) = N - rank(M),   defect = 11*mu - rank(M).

The oracle method transcribes the definition instead: per point it spans
(m_i^3)^(D) + (J_F)^(D) inside the coefficient space and intersects the
subspaces by iterated kernels.  Both are exact; they must agree whenever
the fast method's precondition holds, and the test suite leans on that.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .exactalg import Matrix
from .jets import choose_chart, jet_matrix
from .poly import Polynomial, monomial_basis


class DegreeTooLowError(InputError):
    """The quotient method's degree precondition failed; use the oracle."""


@dataclass(frozen=True)
class DefectResult:
    degree_D: int
    dim_S_D: int
    mu: int
    rank_r: int
    dim_Ieq: int
    delta: int
    method: str  # "quotient" | "oracle" | "both_agree"


def _defect_degree(F: Polynomial) -> tuple:
    d = F.weighted_degree()
    if d is None:
        raise InputError("F must be homogeneous")
    D = 2 * d - sum(F.ring.weights)
    if D < 0:
        raise InputError(f"defect degree 2d - |w| = {D} is negative")
    return d, D


def _check_distinct(points):
    seen = set()
    for pt in points:
        if pt.coordinates in seen:
            raise InputError(f"duplicate point {pt}")
        seen.add(pt.coordinates)


def _jet_surjectivity_check(F, d, chart):
    """The fast method needs, per variable j, a degree d + w_j - |w| form
    nonvanishing at the point; x_c^k works whenever k >= 0 since the chart
    coordinate has weight 1 and value 1.  Without it the jet image of J_F
    may be a proper subspace of Q_i and only the oracle is valid."""
    total = sum(F.ring.weights)
    for j, wj in enumerate(F.ring.weights):
        k = d + wj - total
        if k < 0:
            raise DegreeTooLowError(
                f"degree {d} too low for the quotient method "
                f"(variable {F.ring.names[j]} needs a degree-{k} multiplier); "
                "use the oracle method")


def equisingular_dim(F: Polynomial, certs) -> DefectResult:
    """dim I_eq^(D) and the defect via the per-point jet quotient.

    certs are the triple-point certificates of the singular points; their
    annihilators compress each point's membership condition to 11 linear
    functionals on the degree-D coefficient space.
    """
    d, D = _defect_degree(F)
    certs = list(certs)
    for cert in certs:
        if cert.chart.ring != F.ring:
            raise InputError("certificate from a different ring")
    _check_distinct([c.point for c in certs])
    basis = monomial_basis(F.ring, D)
    n = len(basis)
    mu = len(certs)
    blocks = []
    for cert in certs:
        _jet_surjectivity_check(F, d, cert.chart)
        blocks.append(cert.annihilator @ jet_matrix(basis, cert.chart))
    stacked = Matrix.vstack(F.ring.field, blocks, ncols=n)
    r = stacked.rank()
    return DefectResult(D, n, mu, r, n - r, 11 * mu - r, "quotient")


def _coefficient_row(p: Polynomial, index, n):
    f = p.ring.field
    row = [f.zero()] * n
    for m, c in p.terms.items():
        row[index[m]] = c
    return row


def _point_subspace(F, d, D, basis, index, pt) -> Matrix:
    """Row basis of (m_i^3)^(D) + (J_F)^(D) in degree-D coefficients."""
    r = F.ring
    f = r.field
    n = len(basis)
    chart = choose_chart(pt, r)
    jm = jet_matrix(basis, chart)
    rows = jm.kernel_basis()  # forms with zero order-2 jet at the point
    for j in range(r.nvars):
        dF = F.partial_derivative(j)
        if dF.is_zero():
            continue
        k = D - (d - r.weights[j])
        if k < 0:
            continue
        for m in monomial_basis(r, k):
            prod = Polynomial(r, {tuple(m): f.one()}) * dF
            rows.append(_coefficient_row(prod, index, n))
    return Matrix(f, rows, n).row_basis()


def equisingular_dim_oracle(F: Polynomial, points) -> DefectResult:
    """Ground-truth dim I_eq^(D): intersect the per-point subspaces.

    Works for any points with a chart (triple or not); this is the direct
    transcription of the intersection defining the equisingular ideal.
    """
    d, D = _defect_degree(F)
    points = list(points)
    _check_distinct(points)
    basis = monomial_basis(F.ring, D)
    index = {m: j for j, m in enumerate(basis)}
    n = len(basis)
    f = F.ring.field
    mu = len(points)

    current = Matrix.identity(f, n)
    for pt in points:
        span = _point_subspace(F, d, D, basis, index, pt)
        ann = span.row_space_annihilator()
        # restrict the annihilator to the running intersection's basis
        restricted = ann @ current.transpose()
        combos = restricted.kernel_basis()
        rows = [_combine(v, current, f) for v in combos]
        current = Matrix(f, rows, n)
    dim = current.nrows
    return DefectResult(D, n, mu, n - dim, dim, dim - (n - 11 * mu), "oracle")


def _combine(coeffs, basis_matrix: Matrix, f):
    """Linear combination of the basis matrix rows with given coefficients."""
    n = basis_matrix.ncols
    out = [f.zero()] * n
    for c, i in zip(coeffs, range(basis_matrix.nrows)):
        if f.is_zero(c):
            continue
        row = basis_matrix.row(i)
        for j in range(n):
            out[j] = f.add(out[j], f.mul(c, row[j]))
    return out


def defect(F: Polynomial, certs, cross_validate: bool = False) -> DefectResult:
    """Defect of the hypersurface from its certified triple points.

    Runs the quotient method, falling back to the oracle when the degree
    is too low for it; with cross_validate the oracle runs as well and any
    disagreement is reported as an internal error (it must never happen).
    """
    certs = list(certs)
    try:
        result = equisingular_dim(F, certs)
    except DegreeTooLowError:
        return equisingular_dim_oracle(F, [c.point for c in certs])
    if cross_validate:
        oracle = equisingular_dim_oracle(F, [c.point for c in certs])
        if oracle.dim_Ieq != result.dim_Ieq:
            raise RuntimeError(
                f"internal error: quotient method gives dim {result.dim_Ieq}, "
                f"oracle gives {oracle.dim_Ieq}")
        return DefectResult(result.degree_D, result.dim_S_D, result.mu,
                            result.rank_r, result.dim_Ieq, result.delta,
                            "both_agree")
    return result
