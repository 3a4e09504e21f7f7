from fractions import Fraction

import pytest

from wheelsym.cycfield import CycField
from wheelsym.linalg import SingularSystemError, nullspace, rank, solve

Q = CycField(1)


def M(rows, field=Q):
    return [[field.from_rational(Fraction(v)) for v in row] for row in rows]


def test_rank_basic():
    assert rank(M([[1, 2], [2, 4]])) == 1
    assert rank(M([[1, 0], [0, 1]])) == 2
    assert rank(M([[0, 0], [0, 0]])) == 0
    assert rank([]) == 0


def test_rank_rectangular_and_fractions():
    m = M([[Fraction(1, 2), Fraction(1, 3), 1], [1, Fraction(2, 3), 2], [0, 1, 7]])
    assert rank(m) == 2


def test_rank_over_cyclotomic():
    f = CycField(6)
    z = f.root(1)
    m = [[f.one(), z], [z, z * z]]
    assert rank(m) == 1
    m = [[f.one(), z], [z, f.one()]]
    assert rank(m) == 2


def test_nullspace():
    m = M([[1, 2, 3]])
    basis = nullspace(m, Q, 3)
    assert len(basis) == 2
    for v in basis:
        total = Q.zero()
        for c, x in zip(m[0], v):
            total = total + c * x
        assert total.is_zero()
    assert len(nullspace([], Q, 3)) == 3


def test_solve():
    a = M([[2, 1], [1, 3]])
    b = [Q.from_rational(5), Q.from_rational(10)]
    x = solve(a, b, Q)
    assert [v.rational_value() for v in x] == [Fraction(1), Fraction(3)]
    with pytest.raises(SingularSystemError):
        solve(M([[1, 2], [2, 4]]), b, Q)
