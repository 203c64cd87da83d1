"""Exact scalar arithmetic over Q and prime fields, and exact dense matrices.

Scalars are plain Python objects: ``Fraction`` over the rationals, ints in
``[0, p)`` over a prime field F_p.  A :class:`FieldSpec` bundles the field
choice and provides the arithmetic; :class:`Matrix` provides rank, reduced
row echelon form, kernel bases and row-space annihilators, all exact.

Prime-field matrices are backed by int64 numpy arrays (entries stay below
p, intermediate products below p^2, so int64 never overflows for the
admitted p).  Rational matrices are kept as Fraction rows; elimination
clears denominators and removes content at every step, so entries stay as
small integers until the final pivot normalisation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import InputError

# int64 safety: p^2 * ncols must stay below 2^63 for the numpy backend.
MAX_PRIME = 1 << 20


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """An exact base field: the rationals or a prime field F_p with p >= 5.

    p = 2 and 3 are rejected because jets divide by 2 and tangent cones
    by 6.  The upper bound keeps int64 matrix arithmetic overflow-free.
    """

    kind: str  # "rationals" | "prime_field"
    characteristic: int | None = None

    def __post_init__(self):
        if self.kind == "rationals":
            if self.characteristic is not None:
                raise InputError("rationals carry no characteristic")
        elif self.kind == "prime_field":
            p = self.characteristic
            if p is None or not _is_prime(p):
                raise InputError(f"{p} is not prime")
            if p < 5:
                raise InputError(f"p = {p} too small: need p >= 5 (jets divide by 2! and 3!)")
            if p >= MAX_PRIME:
                raise InputError(f"p = {p} too large for the int64 backend (p < {MAX_PRIME})")
        else:
            raise InputError(f"unknown field kind {self.kind!r}")

    @property
    def is_prime_field(self) -> bool:
        return self.kind == "prime_field"

    # -- scalar arithmetic ------------------------------------------------

    def coerce(self, x):
        """Map an int, Fraction or scalar of this field into the field."""
        if self.is_prime_field:
            p = self.characteristic
            if isinstance(x, (int, np.integer)):
                return int(x) % p
            if isinstance(x, Fraction):
                return self.fraction(x.numerator, x.denominator)
            raise InputError(f"cannot coerce {x!r} into F_{p}")
        if isinstance(x, (int, np.integer)):
            return Fraction(int(x))
        if isinstance(x, Fraction):
            return x
        raise InputError(f"cannot coerce {x!r} into Q")

    def fraction(self, num: int, den: int):
        """The field element num/den; exact errors on bad denominators."""
        if den == 0:
            raise InputError("division by zero in a rational literal")
        if self.is_prime_field:
            p = self.characteristic
            if den % p == 0:
                raise InputError(f"denominator {den} is 0 mod {p}")
            return num * pow(den, -1, p) % p
        return Fraction(num, den)

    def zero(self):
        return 0 if self.is_prime_field else Fraction(0)

    def one(self):
        return 1 if self.is_prime_field else Fraction(1)

    def add(self, a, b):
        return (a + b) % self.characteristic if self.is_prime_field else a + b

    def sub(self, a, b):
        return (a - b) % self.characteristic if self.is_prime_field else a - b

    def mul(self, a, b):
        return (a * b) % self.characteristic if self.is_prime_field else a * b

    def neg(self, a):
        return (-a) % self.characteristic if self.is_prime_field else -a

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero")
        if self.is_prime_field:
            return pow(a, -1, self.characteristic)
        return Fraction(1) / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, n: int):
        if n < 0:
            return self.pow(self.inv(a), -n)
        if self.is_prime_field:
            return pow(a, n, self.characteristic)
        return a ** n

    def is_zero(self, a) -> bool:
        return a == 0

    def scalar_str(self, a) -> str:
        return str(a)

    def __str__(self):
        return "Q" if self.kind == "rationals" else f"Fp:{self.characteristic}"


RATIONALS = FieldSpec("rationals")


def GF(p: int) -> FieldSpec:
    return FieldSpec("prime_field", p)


# -- rational elimination helpers -----------------------------------------


def _primitive_int_row(row):
    """Scale a Fraction row to a primitive integer row (content removed)."""
    lcm = 1
    for x in row:
        lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
    ints = [int(x * lcm) for x in row]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return ints


def _reduce_int_row(ints):
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return ints


class Matrix:
    """Immutable exact dense matrix over a :class:`FieldSpec`.

    Do not mutate entries after construction; all operations return new
    objects and are safe to run concurrently.
    """

    def __init__(self, field: FieldSpec, rows, ncols: int | None = None):
        self.field = field
        rows = [list(r) for r in rows]
        if rows:
            ncols_seen = len(rows[0])
            if any(len(r) != ncols_seen for r in rows):
                raise InputError("ragged rows")
            if ncols is not None and ncols != ncols_seen:
                raise InputError("ncols disagrees with row length")
            ncols = ncols_seen
        elif ncols is None:
            raise InputError("empty matrix needs an explicit column count")
        self.nrows = len(rows)
        self.ncols = ncols
        if field.is_prime_field:
            p = field.characteristic
            data = np.array([[field.coerce(x) for x in r] for r in rows], dtype=np.int64)
            self._fp = data.reshape(self.nrows, self.ncols) % p
            self._qq = None
        else:
            self._fp = None
            self._qq = [[field.coerce(x) for x in r] for r in rows]

    # -- constructors ------------------------------------------------------

    @classmethod
    def _from_fp(cls, field, array):
        m = cls.__new__(cls)
        m.field = field
        m.nrows, m.ncols = array.shape
        m._fp, m._qq = array, None
        return m

    @classmethod
    def zeros(cls, field, nrows, ncols):
        z = field.zero()
        return cls(field, [[z] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, field, n):
        z, o = field.zero(), field.one()
        return cls(field, [[o if i == j else z for j in range(n)] for i in range(n)], n)

    @classmethod
    def vstack(cls, field, mats, ncols=None):
        rows = []
        for m in mats:
            if ncols is None:
                ncols = m.ncols
            elif m.ncols != ncols:
                raise InputError("column counts differ in vstack")
            rows.extend(m.rows())
        if ncols is None:
            raise InputError("vstack of nothing needs an explicit column count")
        return cls(field, rows, ncols)

    # -- access ------------------------------------------------------------

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def entry(self, i, j):
        if self._fp is not None:
            return int(self._fp[i, j])
        return self._qq[i][j]

    def row(self, i):
        if self._fp is not None:
            return [int(x) for x in self._fp[i]]
        return list(self._qq[i])

    def rows(self):
        return [self.row(i) for i in range(self.nrows)]

    def transpose(self):
        return Matrix(self.field, [[self.entry(i, j) for i in range(self.nrows)]
                                   for j in range(self.ncols)], self.nrows)

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.field == other.field
                and self.shape == other.shape and self.rows() == other.rows())

    def __repr__(self):
        return f"Matrix({self.field}, {self.nrows}x{self.ncols})"

    # -- products ------------------------------------------------------------

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise InputError(f"shape mismatch {self.shape} @ {other.shape}")
        if self.field != other.field:
            raise InputError("field mismatch in product")
        if self._fp is not None:
            p = self.field.characteristic
            return Matrix._from_fp(self.field, (self._fp @ other._fp) % p)
        f = self.field
        ot = other.transpose().rows()
        rows = [[sum((a * b for a, b in zip(r, c)), f.zero()) for c in ot] for r in self._qq]
        return Matrix(f, rows, other.ncols)

    def mul_vector(self, v):
        """Matrix-vector product as a list of scalars."""
        if len(v) != self.ncols:
            raise InputError("vector length mismatch")
        f = self.field
        if self._fp is not None:
            vv = np.array([f.coerce(x) for x in v], dtype=np.int64)
            return [int(x) for x in (self._fp @ vv) % f.characteristic]
        return [sum((a * b for a, b in zip(r, v)), f.zero()) for r in self._qq]

    # -- elimination ---------------------------------------------------------

    def _rref_fp(self):
        p = self.field.characteristic
        a = self._fp.copy()
        pivots = []
        r = 0
        for c in range(self.ncols):
            if r == self.nrows:
                break
            nz = np.nonzero(a[r:, c])[0]
            if nz.size == 0:
                continue
            i = r + int(nz[0])
            if i != r:
                a[[r, i]] = a[[i, r]]
            a[r] = a[r] * pow(int(a[r, c]), -1, p) % p
            hit = np.nonzero(a[:, c])[0]
            hit = hit[hit != r]
            if hit.size:
                a[hit] = (a[hit] - np.outer(a[hit, c], a[r])) % p
            pivots.append(c)
            r += 1
        return a, pivots

    def _rref_qq(self):
        work = [_primitive_int_row(r) for r in self._qq]
        pivots = []
        r = 0
        for c in range(self.ncols):
            if r == len(work):
                break
            i = next((k for k in range(r, len(work)) if work[k][c] != 0), None)
            if i is None:
                continue
            work[r], work[i] = work[i], work[r]
            piv = work[r]
            for k in range(len(work)):
                if k != r and work[k][c] != 0:
                    a, b = piv[c], work[k][c]
                    work[k] = _reduce_int_row([a * x - b * y for x, y in zip(work[k], piv)])
            pivots.append(c)
            r += 1
        out = []
        for idx, c in enumerate(pivots):
            piv = work[idx][c]
            out.append([Fraction(x, piv) for x in work[idx]])
        zero_row = [Fraction(0)] * self.ncols
        out.extend([list(zero_row) for _ in range(self.nrows - len(pivots))])
        return out, pivots

    def rref(self):
        """Reduced row echelon form and the pivot column indices.

        The RREF is canonical: it depends only on the row space, so rank,
        kernel bases and annihilators are reproducible bit for bit.
        """
        if self._fp is not None:
            a, pivots = self._rref_fp()
            return Matrix._from_fp(self.field, a), tuple(pivots)
        rows, pivots = self._rref_qq()
        return Matrix(self.field, rows, self.ncols), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def row_basis(self) -> "Matrix":
        """Canonical basis of the row space (nonzero RREF rows)."""
        red, pivots = self.rref()
        return Matrix(self.field, [red.row(i) for i in range(len(pivots))], self.ncols)

    def kernel_basis(self):
        """Canonical basis of {v : M v = 0}, one vector per free column."""
        red, pivots = self.rref()
        pivot_set = set(pivots)
        free = [c for c in range(self.ncols) if c not in pivot_set]
        f = self.field
        basis = []
        for fc in free:
            v = [f.zero()] * self.ncols
            v[fc] = f.one()
            for r, pc in enumerate(pivots):
                v[pc] = f.neg(red.entry(r, fc))
            basis.append(v)
        return basis

    def row_space_annihilator(self) -> "Matrix":
        """Basis, as rows, of the functionals vanishing on the row space.

        A (ncols - rank) x ncols matrix; its rows are the kernel basis of
        this matrix, so ann @ M^T = 0 exactly.
        """
        return Matrix(self.field, self.kernel_basis(), self.ncols)
