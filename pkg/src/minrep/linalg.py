"""Exact dense linear algebra over Fraction or QI entries.

Matrices are lists of lists.  Everything is plain Gauss-Jordan with exact
field arithmetic, so there are no pivoting tolerances: a pivot is any
nonzero entry.  The helpers work for any entry type supporting +, -, *, /
and truthiness (Fraction and QI both do).
"""

from __future__ import annotations

from fractions import Fraction


def mat_copy(m):
    return [row[:] for row in m]


def transpose(m):
    return [list(col) for col in zip(*m)] if m else []


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(c, m):
    return [[c * x for x in row] for row in m]


def mat_mul(a, b):
    n, k = len(a), len(b)
    p = len(b[0]) if b else 0
    bt = transpose(b)
    return [[_dot(arow, bcol) for bcol in bt] for arow in a]


def _dot(u, v):
    it = iter(x * y for x, y in zip(u, v))
    s = next(it)
    for t in it:
        s = s + t
    return s


def trace(m):
    s = m[0][0]
    for i in range(1, len(m)):
        s = s + m[i][i]
    return s


def identity(n, one=Fraction(1), zero=Fraction(0)):
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def zeros(rows, cols, zero=Fraction(0)):
    return [[zero] * cols for _ in range(rows)]


def commutator(a, b):
    return mat_sub(mat_mul(a, b), mat_mul(b, a))


def rref(m):
    """Reduced row echelon form.  Returns (rref_matrix, pivot_columns)."""
    a = mat_copy(m)
    rows = len(a)
    cols = len(a[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        pr = next((i for i in range(r, rows) if a[i][c]), None)
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = a[r][c]
        a[r] = [x / inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a, pivots


def rank(m):
    if not m:
        return 0
    return len(rref(m)[1])


def kernel(m, one=Fraction(1), zero=Fraction(0)):
    """Basis of the right null space of m (vectors of length ncols)."""
    if not m:
        return []
    cols = len(m[0])
    red, pivots = rref(m)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [zero] * cols
        v[fc] = one
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis


def solve(a, b, one=Fraction(1), zero=Fraction(0)):
    """Solve a x = b for a single consistent right-hand side; None if none."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    aug = [list(a[i]) + [b[i]] for i in range(rows)]
    red, pivots = rref(aug)
    if cols in pivots:
        return None
    x = [zero] * cols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][cols]
    return x


def inverse(m, one=Fraction(1), zero=Fraction(0)):
    n = len(m)
    aug = [list(m[i]) + [one if i == j else zero for j in range(n)] for i in range(n)]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in red]


def in_span(vectors, target):
    """Whether target is a linear combination of the given vectors."""
    if not vectors:
        return not any(target)
    m = transpose(vectors)
    return solve(m, list(target)) is not None


def span_rank(vectors):
    if not vectors:
        return 0
    return rank(list(vectors))


def char_poly(m):
    """Characteristic polynomial coefficients [c0, ..., cn] of det(xI - m).

    Faddeev-LeVerrier over exact Fractions; cn = 1.
    """
    n = len(m)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    mk = identity(n)
    c = Fraction(1)
    for k in range(1, n + 1):
        mk = mat_mul(m, mk)
        c = -trace(mk) / k
        coeffs[n - k] = c
        for i in range(n):
            mk[i][i] = mk[i][i] + c
    return coeffs


def rational_roots(coeffs):
    """All rational roots of a polynomial with Fraction coefficients."""
    # Strip leading zeros and factor out x^k.
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    roots = set()
    k = 0
    while cs and cs[0] == 0:
        cs.pop(0)
        k += 1
    if k:
        roots.add(Fraction(0))
    if not cs or len(cs) == 1:
        return sorted(roots)
    denom = 1
    for c in cs:
        denom = denom * c.denominator // _gcd(denom, c.denominator)
    ics = [int(c * denom) for c in cs]
    a0, an = abs(ics[0]), abs(ics[-1])
    for p in _divisors(a0):
        for q in _divisors(an):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if _poly_eval(cs, cand) == 0:
                    roots.add(cand)
    return sorted(roots)


def _poly_eval(cs, x):
    v = Fraction(0)
    for c in reversed(cs):
        v = v * x + c
    return v


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _divisors(n):
    if n == 0:
        return [1]
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)
