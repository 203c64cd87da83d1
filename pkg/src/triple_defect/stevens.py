"""The degree-six surface in P^3 with ten ordinary triple points.

The surface is 27*K1*K2*K3 + 2*Q^3 = 0 for three affine quadrics K1, K2,
K3 and a quadric Q built from a primitive third root of unity eps.  Over
F_67 with eps = -30 all ten triple points are rational, which makes the
surface the standard finite-field benchmark for the defect machinery:
its triple cover has mu = 10, dim I_eq^(6) = 30, delta = 10.
"""

from __future__ import annotations

from .errors import InputError
from .exactalg import GF, FieldSpec
from .poly import Polynomial, parse, ring

DEFAULT_P = 67
DEFAULT_EPSILON = -30


def check_epsilon(field: FieldSpec, epsilon):
    """A valid eps is a primitive third root of unity: eps^3 = 1, eps != 1."""
    e = field.coerce(epsilon)
    if field.pow(e, 3) != field.one() or e == field.one():
        raise InputError(f"epsilon = {epsilon} is not a primitive cube root "
                         f"of unity over {field}")
    return e


def stevens_affine_parts(field: FieldSpec, epsilon):
    """The four affine building blocks K1, K2, K3, Q in x1, x2, x3."""
    e = check_epsilon(field, epsilon)
    r = ring(field, weights=(1, 1, 1, 1))
    f = field

    def c(x):
        return f.scalar_str(x)

    e2 = f.mul(e, e)
    k1 = parse(f"2*x1^2 - {c(f.add(e, f.coerce(2)))}*x3 + {c(e2)}*x1*x3", r)
    k2 = parse(f"-x2^2 + {c(f.mul(f.coerce(2), e))}*x1 + x2 + {c(e2)}*x1*x2", r)
    k3 = parse(f"2*x3^2 - {c(f.mul(f.coerce(2), e2))}*x2 "
               f"+ {c(f.add(f.mul(f.coerce(6), e), f.coerce(2)))}*x3 "
               f"+ {c(f.mul(f.coerce(4), e2))}*x2*x3", r)
    q = parse(f"-({c(f.add(e, f.coerce(2)))} - x1)*({c(e)} - x2)*({c(e2)} + x3)"
              f" + x1*(x2 - 1)*(x3 + {c(f.add(f.mul(f.coerce(3), e), f.coerce(1)))})", r)
    return k1, k2, k3, q


def stevens_surface(p: int = DEFAULT_P, epsilon=DEFAULT_EPSILON) -> Polynomial:
    """The homogeneous sextic in P^3 (homogenised with x0)."""
    field = GF(p)
    k1, k2, k3, q = stevens_affine_parts(field, epsilon)
    sextic = k1 * k2 * k3 * 27 + q * q * q * 2
    return sextic.homogenize(6, 0)
