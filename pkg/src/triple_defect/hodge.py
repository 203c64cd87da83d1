"""Hodge numbers of the crepant resolution from mu, delta and dim I_eq.

For a degree-d threefold in P^4 with mu ordinary triple points,

    h11 = dim I_eq^(2d-5) - C(2d-1,4) + 12*mu + 1 = 1 + mu + delta
    h12 = dim I_eq^(2d-5) - 5*C(d,4)             = h12_smooth - 11*mu + delta
    h03 = C(d-1,4)
    e   = -d^4 + 5d^3 - 10d^2 + 10d + 24*mu

(each blown-up point trades the Milnor-number contribution of the triple
point for a cubic surface of Euler number 9, whence the +24 per point).
The weighted versions replace binomials by weighted graded dimensions; no
independent Euler formula is available there, so e is derived from the
Betti identity e = 2 + 2*h11 - 2*(h03 + h12) instead of checked against it.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from math import comb, gcd

from .errors import InputError


@dataclass(frozen=True)
class HodgeReport:
    d: int
    weights: tuple
    mu: int
    dim_Ieq: int
    delta: int
    h11: int
    h12: int
    h03: int
    h12_smooth: int
    euler: int
    q_factorial: bool
    warnings: tuple = dc_field(default=())


@lru_cache(maxsize=None)
def _count(weights: tuple, k: int) -> int:
    if k < 0:
        return 0
    if not weights:
        return 1 if k == 0 else 0
    w = weights[0]
    return sum(_count(weights[1:], k - e * w) for e in range(k // w + 1))


def dim_graded(weights, k: int) -> int:
    """Number of monomials of weighted degree exactly k (0 for k < 0)."""
    return _count(tuple(weights), k)


def euler_p4(d: int, mu: int) -> int:
    """Topological Euler number of the resolved threefold in P^4."""
    if d < 1 or mu < 0:
        raise InputError("need d >= 1 and mu >= 0")
    return -d ** 4 + 5 * d ** 3 - 10 * d ** 2 + 10 * d + 24 * mu


def hodge_p4(d: int, mu: int, dim_Ieq: int) -> HodgeReport:
    """Hodge numbers for a degree-d hypersurface in P^4 (unit weights)."""
    if d < 4:
        raise InputError("need degree d >= 4")
    n = comb(2 * d - 1, 4)
    if not 0 <= dim_Ieq <= n:
        raise InputError(f"dim I_eq = {dim_Ieq} outside [0, {n}]")
    h11 = dim_Ieq - n + 12 * mu + 1
    h12 = dim_Ieq - 5 * comb(d, 4)
    h03 = comb(d - 1, 4)
    h12_smooth = n - 5 * comb(d, 4)
    delta = dim_Ieq - (n - 11 * mu)
    euler = euler_p4(d, mu)
    if h11 < 0 or h12 < 0:
        raise InputError(f"negative Hodge number (h11={h11}, h12={h12}): "
                         "inconsistent (d, mu, dim_Ieq)")
    # the four formulas are mutually consistent; a violation is a bug
    if 2 + 2 * h11 - 2 * (h03 + h12) != euler:
        raise RuntimeError("internal error: Betti identity violated")
    if h11 != 1 + mu + delta or h12 != h12_smooth - 11 * mu + delta:
        raise RuntimeError("internal error: theorem and corollary forms disagree")
    return HodgeReport(d, (1, 1, 1, 1, 1), mu, dim_Ieq, delta,
                       h11, h12, h03, h12_smooth, euler, delta == 0)


def hodge_weighted(d: int, weights, mu: int, dim_Ieq: int) -> HodgeReport:
    """Hodge numbers for a hypersurface in P(w0..w4) avoiding Sing P(w).

    The hypotheses of the weighted statement (weights pairwise coprime,
    each dividing d) are checked at warning level only; the triple-cover
    construction always satisfies them.
    """
    weights = tuple(int(w) for w in weights)
    if len(weights) != 5:
        raise InputError("need five weights")
    notes = []
    for i in range(5):
        for j in range(i + 1, 5):
            if gcd(weights[i], weights[j]) != 1:
                notes.append(f"weights {weights[i]}, {weights[j]} not coprime")
    for w in weights:
        if d % w != 0:
            notes.append(f"weight {w} does not divide degree {d}")
    for note in notes:
        warnings.warn(note)
    total = sum(weights)
    if d < total - min(weights):
        raise InputError(f"degree {d} too small for weights {weights}")
    n = dim_graded(weights, 2 * d - total)
    if not 0 <= dim_Ieq <= n:
        raise InputError(f"dim I_eq = {dim_Ieq} outside [0, {n}]")
    h11 = dim_Ieq - n + 12 * mu + 1
    h12 = dim_Ieq - sum(dim_graded(weights, d + w - total) for w in weights)
    h03 = dim_graded(weights, d - total)
    h12_smooth = n - sum(dim_graded(weights, d + w - total) for w in weights)
    delta = dim_Ieq - (n - 11 * mu)
    if h11 < 0 or h12 < 0:
        raise InputError(f"negative Hodge number (h11={h11}, h12={h12}): "
                         "inconsistent (d, weights, mu, dim_Ieq)")
    if h11 != 1 + mu + delta or h12 != h12_smooth - 11 * mu + delta:
        raise RuntimeError("internal error: theorem and corollary forms disagree")
    euler = 2 + 2 * h11 - 2 * (h03 + h12)
    return HodgeReport(d, weights, mu, dim_Ieq, delta,
                       h11, h12, h03, h12_smooth, euler, delta == 0,
                       warnings=tuple(notes))
