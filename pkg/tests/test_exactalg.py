import pytest
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from triple_defect import GF, RATIONALS, Matrix
from triple_defect.errors import InputError


def test_field_validation():
    GF(5)
    GF(67)
    with pytest.raises(InputError):
        GF(4)
    with pytest.raises(InputError):
        GF(2)
    with pytest.raises(InputError):
        GF(3)
    with pytest.raises(InputError):
        GF(1 << 21)  # beyond the int64-safe bound


def test_scalar_basics():
    f = GF(7)
    assert f.coerce(-2) == 5
    assert f.fraction(1, 3) == 5  # 3 * 5 = 15 = 1 mod 7
    with pytest.raises(InputError):
        f.fraction(1, 7)
    with pytest.raises(InputError):
        f.fraction(1, 0)
    q = RATIONALS
    assert q.fraction(2, 4) == Fraction(1, 2)
    assert q.inv(Fraction(3, 2)) == Fraction(2, 3)


def test_rank_examples():
    assert Matrix(RATIONALS, [[1, 0], [0, 1]]).rank() == 2
    assert Matrix(RATIONALS, [[0] * 4] * 3).rank() == 0
    assert Matrix(GF(5), [[1, 2], [3, 6]]).rank() == 1


def test_kernel_examples():
    assert Matrix(RATIONALS, [[1, 0, 0], [0, 1, 0], [0, 0, 1]]).kernel_basis() == []

    m = Matrix(RATIONALS, [[1, 1, 1]])
    kern = m.kernel_basis()
    assert len(kern) == 2
    for v in kern:
        assert m.mul_vector(v) == [Fraction(0)]
    # spans the same plane as {(1,-1,0), (1,0,-1)}
    span = Matrix(RATIONALS, kern + [[1, -1, 0], [1, 0, -1]])
    assert span.rank() == 2

    m = Matrix(RATIONALS, [[1, 0, 1], [0, 1, 1]])
    kern = m.kernel_basis()
    assert len(kern) == 1
    assert m.mul_vector(kern[0]) == [Fraction(0), Fraction(0)]
    assert Matrix(RATIONALS, kern + [[1, 1, -1]]).rank() == 1


def test_annihilator_shapes():
    f = GF(7)
    # 4 x 15 of rank 4: the per-point situation, codimension 11
    rows = [[1 if j == i else (i + 2) * (j + 1) % 7 for j in range(15)] for i in range(4)]
    m = Matrix(f, rows)
    assert m.rank() == 4
    ann = m.row_space_annihilator()
    assert ann.shape == (11, 15)
    assert ann.rank() == 11
    prod = ann @ m.transpose()
    assert all(x == 0 for row in prod.rows() for x in row)

    z = Matrix(RATIONALS, [[0, 0, 0]])
    assert z.row_space_annihilator().shape == (3, 3)
    assert z.row_space_annihilator().rank() == 3

    eye = Matrix(GF(7), [[1 if i == j else 0 for j in range(15)] for i in range(15)])
    assert eye.row_space_annihilator().shape == (0, 15)


def test_vstack_and_matmul():
    f = GF(11)
    a = Matrix(f, [[1, 2], [3, 4]])
    b = Matrix(f, [[5, 6], [7, 8]])
    s = Matrix.vstack(f, [a, b])
    assert s.shape == (4, 2)
    p = a @ b
    assert p.rows() == [[(1 * 5 + 2 * 7) % 11, (1 * 6 + 2 * 8) % 11],
                        [(3 * 5 + 4 * 7) % 11, (3 * 6 + 4 * 8) % 11]]
    empty = Matrix.vstack(f, [], ncols=3)
    assert empty.shape == (0, 3)
    assert empty.rank() == 0


_fields = st.sampled_from([GF(5), GF(7), RATIONALS])
_dims = st.integers(min_value=1, max_value=6)


@st.composite
def matrices(draw):
    f = draw(_fields)
    r = draw(_dims)
    c = draw(_dims)
    entries = [[draw(st.integers(-9, 9)) for _ in range(c)] for _ in range(r)]
    return Matrix(f, entries)


@given(matrices())
@settings(max_examples=120, deadline=None)
def test_rank_nullity_and_transpose(m):
    kern = m.kernel_basis()
    assert m.rank() + len(kern) == m.ncols
    assert m.rank() == m.transpose().rank()
    zero = m.field.zero()
    for v in kern:
        assert all(x == zero for x in m.mul_vector(v))


@given(matrices(), st.randoms(use_true_random=False))
@settings(max_examples=60, deadline=None)
def test_rank_invariant_under_row_permutation(m, rnd):
    rows = m.rows()
    rnd.shuffle(rows)
    assert Matrix(m.field, rows, m.ncols).rank() == m.rank()


@given(st.sampled_from([GF(5), GF(7), GF(67)]), st.integers(-40, 40),
       st.integers(-40, 40), st.integers(-40, 40))
@settings(max_examples=120, deadline=None)
def test_field_axioms(f, a, b, c):
    a, b, c = f.coerce(a), f.coerce(b), f.coerce(c)
    assert f.add(a, f.neg(a)) == f.zero()
    assert f.mul(f.add(a, b), c) == f.add(f.mul(a, c), f.mul(b, c))
    assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
    if not f.is_zero(a):
        assert f.mul(a, f.inv(a)) == f.one()
