"""Shared helpers for the test suite: random instances and brute-force oracles."""

from triple_defect import GF, ring, verify_triple_point
from triple_defect.errors import CertificationError
from triple_defect.jets import choose_chart, jet_matrix
from triple_defect.locus import ProjectivePoint
from triple_defect.poly import Polynomial, monomial_basis


def brute_count_monomials(weights, k):
    """Independent counting oracle: recursive enumeration of exponents."""
    if k < 0:
        return 0
    if not weights:
        return 1 if k == 0 else 0
    w = weights[0]
    return sum(brute_count_monomials(weights[1:], k - e * w)
               for e in range(k // w + 1))


def brute_monomial_tuples(weights, k):
    """Independent enumeration of the exponent tuples of degree k."""
    if not weights:
        return [()] if k == 0 else []
    out = []
    w = weights[0]
    for e in range(k // w + 1):
        for tail in brute_monomial_tuples(weights[1:], k - e * w):
            out.append((e,) + tail)
    return out


def random_homogeneous(rng, ring_, d, sparsity=1.0):
    basis = monomial_basis(ring_, d)
    f = ring_.field
    terms = {}
    for m in basis:
        if rng.random() > sparsity:
            continue
        if f.is_prime_field:
            c = rng.randrange(f.characteristic)
        else:
            c = rng.randrange(-9, 10)
        if c:
            terms[m] = f.coerce(c)
    return Polynomial(ring_, terms)


def random_triple_point_instance(rng, p, d, max_attempts=200):
    """A degree-d form over F_p with a certified ordinary triple point.

    Samples F from the kernel of the order-2 jet map at a random point
    (so mult >= 3 there by construction) and rejects until the full
    certification passes.
    """
    field = GF(p)
    r = ring(field)
    while True:
        coords = tuple(rng.randrange(p) for _ in range(5))
        if any(coords):
            break
    pt = ProjectivePoint.canonical(coords, r)
    chart = choose_chart(pt, r)
    basis = monomial_basis(r, d)
    kern = jet_matrix(basis, chart).kernel_basis()
    for _ in range(max_attempts):
        terms = {}
        for vec in kern:
            c = rng.randrange(p)
            if c == 0:
                continue
            for m, v in zip(basis, vec):
                if v:
                    terms[m] = (terms.get(m, 0) + c * v) % p
        F = Polynomial(r, {m: c for m, c in terms.items() if c})
        if F.is_zero():
            continue
        try:
            cert = verify_triple_point(F, pt)
            return F, pt, cert
        except CertificationError:
            continue
    raise RuntimeError(f"no certified instance found for p={p}, d={d}")
