import random
from fractions import Fraction

from minrep import linalg
from minrep.scalars import QI


def frac_mat(rows):
    return [[Fraction(x) for x in row] for row in rows]


def test_rref_and_rank():
    m = frac_mat([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    assert linalg.rank(m) == 2
    red, pivots = linalg.rref(m)
    assert pivots == [0, 1]


def test_kernel_annihilates():
    rng = random.Random(5)
    for _ in range(10):
        m = [[Fraction(rng.randint(-4, 4)) for _ in range(5)] for _ in range(3)]
        for v in linalg.kernel(m):
            img = [sum(r[i] * v[i] for i in range(5)) for r in m]
            assert all(x == 0 for x in img)


def test_solve_consistent_and_inconsistent():
    a = frac_mat([[1, 1], [1, -1]])
    x = linalg.solve(a, [Fraction(3), Fraction(1)])
    assert x == [Fraction(2), Fraction(1)]
    bad = frac_mat([[1, 1], [2, 2]])
    assert linalg.solve(bad, [Fraction(1), Fraction(3)]) is None


def test_inverse_roundtrip():
    rng = random.Random(9)
    while True:
        m = [[Fraction(rng.randint(-3, 3)) for _ in range(4)] for _ in range(4)]
        if linalg.rank(m) == 4:
            break
    inv = linalg.inverse(m)
    assert linalg.mat_mul(m, inv) == linalg.identity(4)


def test_qi_entries_work_throughout():
    i = QI(0, 1)
    m = [[QI(1), i], [-i, QI(1)]]
    assert linalg.rank(m) == 1
    kern = linalg.kernel(m, one=QI(1), zero=QI(0))
    assert len(kern) == 1
    v = kern[0]
    assert m[0][0] * v[0] + m[0][1] * v[1] == QI(0)


def test_char_poly_and_rational_roots():
    m = frac_mat([[2, 0, 0], [0, 3, 1], [0, 0, 3]])
    cp = linalg.char_poly(m)
    # det(xI - m) = (x-2)(x-3)^2 = x^3 - 8x^2 + 21x - 18
    assert cp == [Fraction(-18), Fraction(21), Fraction(-8), Fraction(1)]
    assert linalg.rational_roots(cp) == [Fraction(2), Fraction(3)]


def test_rational_roots_with_denominators():
    # (2x - 1)(x + 3) = 2x^2 + 5x - 3
    roots = linalg.rational_roots([Fraction(-3), Fraction(5), Fraction(2)])
    assert roots == [Fraction(-3), Fraction(1, 2)]


def test_in_span():
    vs = [[Fraction(1), Fraction(0)], [Fraction(1), Fraction(1)]]
    assert linalg.in_span(vs, [Fraction(5), Fraction(3)])
    assert not linalg.in_span([vs[0]], [Fraction(0), Fraction(1)])
