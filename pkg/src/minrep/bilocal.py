"""Wick calculus for normal-ordered products of free fields at labeled points.

Fields phi_f(x_k) carry a flavor f and a point label k; the two-point
contractions D+_{kl} are kept as algebraically independent commuting
symbols, so every identity proved here is an identity of Wick
combinatorics with no analytic input.  On top of the engine sit the
closed commutator formula for matrix-labeled bilinears, the Frobenius
pairing of the labeling matrix algebra, and the real/complex/quaternionic
commutant classification.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .reports import Report

# ---------------------------------------------------------------------------
# Polynomials in the contraction symbols D+_{kl}

_EMPTY = ()


class DeltaPoly:
    """Q-polynomial in the symbols D+_{kl}; monomials are sorted pair tuples."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        clean = {m: c for m, c in (terms or {}).items() if c}
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("DeltaPoly is immutable")

    @staticmethod
    def zero() -> "DeltaPoly":
        return _DP_ZERO

    @staticmethod
    def one() -> "DeltaPoly":
        return _DP_ONE

    @staticmethod
    def const(c) -> "DeltaPoly":
        return DeltaPoly({_EMPTY: Fraction(c)})

    @staticmethod
    def symbol(k: int, l: int) -> "DeltaPoly":
        return DeltaPoly({((k, l),): Fraction(1)})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, DeltaPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        t = dict(self.terms)
        for m, c in other.terms.items():
            s = t.get(m, Fraction(0)) + c
            if s:
                t[m] = s
            else:
                t.pop(m, None)
        return DeltaPoly(t)

    def __neg__(self):
        return DeltaPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        t: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(sorted(m1 + m2))
                s = t.get(m, Fraction(0)) + c1 * c2
                if s:
                    t[m] = s
                else:
                    t.pop(m, None)
        return DeltaPoly(t)

    def scale(self, c) -> "DeltaPoly":
        c = Fraction(c)
        if not c:
            return _DP_ZERO
        return DeltaPoly({m: c * v for m, v in self.terms.items()})

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in sorted(self.terms.items()):
            sym = "*".join(f"D{k}{l}" for k, l in m)
            parts.append(f"({c})" + (f"*{sym}" if sym else ""))
        return " + ".join(parts)


_DP_ZERO = DeltaPoly({})
_DP_ONE = DeltaPoly({_EMPTY: Fraction(1)})


def delta_commutator(k: int, l: int) -> DeltaPoly:
    """Free-field commutator symbol D_{kl} = D+_{kl} - D+_{lk}."""
    return DeltaPoly.symbol(k, l) - DeltaPoly.symbol(l, k)


def delta_double(i: int, j: int) -> DeltaPoly:
    """Central double contraction D+_{1i} D+_{2j} - D+_{i1} D+_{j2}."""
    return (DeltaPoly.symbol(1, i) * DeltaPoly.symbol(2, j)
            - DeltaPoly.symbol(i, 1) * DeltaPoly.symbol(j, 2))


# ---------------------------------------------------------------------------
# Wick elements

Field = tuple  # (point label, flavor)


class WickElement:
    """Linear combination of normal products with DeltaPoly coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        clean = {m: c for m, c in (terms or {}).items() if c}
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("WickElement is immutable")

    @staticmethod
    def zero() -> "WickElement":
        return WickElement({})

    @staticmethod
    def normal_product(fields, coeff=None) -> "WickElement":
        key = tuple(sorted(fields))
        return WickElement({key: coeff if coeff is not None else DeltaPoly.one()})

    @staticmethod
    def field(point: int, flavor: int) -> "WickElement":
        return WickElement.normal_product([(point, flavor)])

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, WickElement) and self.terms == other.terms

    def __add__(self, other):
        t = dict(self.terms)
        for m, c in other.terms.items():
            s = t.get(m, DeltaPoly.zero()) + c
            if s:
                t[m] = s
            else:
                t.pop(m, None)
        return WickElement(t)

    def __neg__(self):
        return WickElement({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "WickElement":
        if isinstance(c, (int, Fraction)):
            c = DeltaPoly.const(c)
        if not c:
            return WickElement.zero()
        return WickElement({m: c * v for m, v in self.terms.items()})

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in sorted(self.terms.items()):
            prod = "".join(f":phi{f}(x{p})" for p, f in m) + ":" if m else "1"
            parts.append(f"[{c}] {prod}")
        return " + ".join(parts)


def wick_product(u: WickElement, v: WickElement) -> WickElement:
    """Product of normal-ordered elements by summing over contraction sets.

    A left field (k, f) contracts with a right field (l, g) to
    delta_{fg} D+_{kl}; uncontracted fields recombine into one normal
    product.  Enumeration walks the left fields one at a time, pairing
    each either with nothing or with one unused right field.
    """
    out: dict = {}
    for fa, ca in u.terms.items():
        for fb, cb in v.terms.items():
            base = ca * cb
            for factor, rest_a, rest_b in _contraction_sets(list(fa), list(fb)):
                key = tuple(sorted(rest_a + rest_b))
                add = base * factor
                s = out.get(key, DeltaPoly.zero()) + add
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
    return WickElement(out)


def _contraction_sets(left: list, right: list):
    """Yield (DeltaPoly factor, uncontracted left, uncontracted right)."""
    if not left or not right:
        yield DeltaPoly.one(), left, right
        return
    head, tail = left[0], left[1:]
    # head stays uncontracted
    for factor, ra, rb in _contraction_sets(tail, right):
        yield factor, [head] + ra, rb
    # head contracts with each matching right field
    for idx, other in enumerate(right):
        if head[1] != other[1]:
            continue
        sym = DeltaPoly.symbol(head[0], other[0])
        rest = right[:idx] + right[idx + 1:]
        for factor, ra, rb in _contraction_sets(tail, rest):
            yield sym * factor, ra, rb


def wick_commutator(u: WickElement, v: WickElement) -> WickElement:
    return wick_product(u, v) - wick_product(v, u)


# ---------------------------------------------------------------------------
# Matrix-labeled bilinears and the closed commutator formula


def bilocal_field(m, p: int, q: int) -> WickElement:
    """V_M(x_p, x_q) = sum_ij M_ij :phi_i(x_p) phi_j(x_q):, linear in M."""
    out = WickElement.zero()
    for i, row in enumerate(m, start=1):
        for j, c in enumerate(row, start=1):
            c = Fraction(c)
            if c:
                out = out + WickElement.normal_product([(p, i), (q, j)],
                                                       DeltaPoly.const(c))
    return out


def _scaled(v: WickElement, d: DeltaPoly) -> WickElement:
    return WickElement({m: d * c for m, c in v.terms.items()})


def commutator_rhs(m, mp) -> WickElement:
    """Closed form: D13 V_{tM M'}(2,4) + D24 V_{M tM'}(1,3)
    + D23 V_{M M'}(1,4) + D14 V_{M' M}(3,2)
    + tr(tM M') DD_{12,34} + tr(M M') DD_{12,43}.

    The central coefficients follow the single/double contraction
    bookkeeping: the (1-3)(2-4) pairing carries sum M_ij M'_ij, the
    (1-4)(2-3) pairing carries sum M_ij M'_ji.  For symmetric labels the
    two coincide.
    """
    tm = linalg.transpose(m)
    tmp = linalg.transpose(mp)
    out = _scaled(bilocal_field(linalg.mat_mul(tm, mp), 2, 4), delta_commutator(1, 3))
    out = out + _scaled(bilocal_field(linalg.mat_mul(m, tmp), 1, 3), delta_commutator(2, 4))
    out = out + _scaled(bilocal_field(linalg.mat_mul(m, mp), 1, 4), delta_commutator(2, 3))
    out = out + _scaled(bilocal_field(linalg.mat_mul(mp, m), 3, 2), delta_commutator(1, 4))
    c_34 = linalg.trace(linalg.mat_mul(tm, mp))
    c_43 = linalg.trace(linalg.mat_mul(m, mp))
    const = WickElement({(): delta_double(3, 4).scale(c_34) + delta_double(4, 3).scale(c_43)})
    return out + const


def verify_commutator_formula(m, mp) -> Report:
    """Exact equality of the Wick commutator against the closed form."""
    rep = Report("bilocal/commutator-formula")
    lhs = wick_commutator(bilocal_field(m, 1, 2), bilocal_field(mp, 3, 4))
    rhs = commutator_rhs(m, mp)
    defect = lhs - rhs
    rep.add(f"bilocal/formula/L{len(m)}", defect.is_zero(), defect=str(defect))
    return rep


# ---------------------------------------------------------------------------
# Frobenius pairing


def frobenius(m1, m2) -> Fraction:
    if len(m1) != len(m2) or len(m1[0]) != len(m2[0]):
        raise ValueError("shape mismatch in the Frobenius pairing")
    return linalg.trace(linalg.mat_mul(linalg.transpose(m1), m2))


def frobenius_property_check(m1, m2, m3) -> Report:
    """<M1 M2, M3> = <M1, M3 tM2>, symmetry, and positivity on M1."""
    rep = Report("bilocal/frobenius")
    lhs = frobenius(linalg.mat_mul(m1, m2), m3)
    rhs = frobenius(m1, linalg.mat_mul(m3, linalg.transpose(m2)))
    rep.add("frobenius/product-compatibility", lhs == rhs,
            detail=f"{lhs} vs {rhs}")
    rep.add("frobenius/symmetry", frobenius(m1, m2) == frobenius(m2, m1))
    sq = frobenius(m1, m1)
    nonzero = any(c for row in m1 for c in row)
    rep.add("frobenius/positivity", sq > 0 if nonzero else sq == 0,
            detail=f"<M,M> = {sq}")
    return rep


# ---------------------------------------------------------------------------
# t-algebras and commutant classification


@dataclass
class TAlgebra:
    basis: list
    unital: bool = True

    def __post_init__(self):
        vecs = [_vec(m) for m in self.basis]
        if linalg.span_rank(vecs) != len(vecs):
            raise ValueError("t-algebra basis is linearly dependent")
        for i, a in enumerate(self.basis):
            if not linalg.in_span(vecs, _vec(linalg.transpose(a))):
                raise ValueError(f"basis element {i} transposes out of the span")
            for j, b in enumerate(self.basis):
                if not linalg.in_span(vecs, _vec(linalg.mat_mul(a, b))):
                    raise ValueError(f"product {i}*{j} leaves the span")
        if self.unital:
            n = len(self.basis[0])
            if not linalg.in_span(vecs, _vec(linalg.identity(n))):
                raise ValueError("unital t-algebra must contain the identity")

    @property
    def size(self) -> int:
        return len(self.basis[0])


def _vec(m):
    return [c for row in m for c in row]


class ReducibleAlgebraError(ValueError):
    """The algebra acts reducibly; decompose before classifying."""


def commutant_basis(mats, size: int):
    """Exact solve of M X = X M for all M: basis of the commutant."""
    rows = []
    for m in mats:
        for i in range(size):
            for j in range(size):
                row = [Fraction(0)] * (size * size)
                for k in range(size):
                    row[k * size + j] += Fraction(m[i][k])
                    row[i * size + k] -= Fraction(m[k][j])
                rows.append(row)
    kern = linalg.kernel(rows)
    return [[v[i * size:(i + 1) * size] for i in range(size)] for v in kern]


def commutant_type(alg: TAlgebra):
    """Classify the commutant of an irreducible t-algebra as R, C or H.

    Returns (label, commutant basis).  The division structure over the
    reals is established exactly: dimension 1 is the scalars; dimension 2
    needs the traceless generator to square to a negative scalar;
    dimension 4 needs the traceless part to satisfy a Clifford relation
    with negative definite Gram matrix.  Anything else means the algebra
    was reducible over R, reported as an error with a witness when a
    rational invariant subspace exists.
    """
    size = alg.size
    comm = commutant_basis(alg.basis, size)
    dim = len(comm)
    if dim == 1:
        _require_scalar(comm[0], size)
        return "R", comm
    if dim == 2:
        j = _traceless_part(_non_scalar(comm, size), size)
        sq = linalg.mat_mul(j, j)
        lam = _scalar_value(sq, size)
        if lam is None or lam >= 0:
            raise ReducibleAlgebraError(_reducible_message(alg))
        return "C", comm
    if dim == 4:
        traceless = []
        for c in comm:
            t = _traceless_part(c, size)
            if any(any(row) for row in t):
                traceless.append(t)
        basis3 = _independent(traceless, 3)
        gram = [[Fraction(0)] * 3 for _ in range(3)]
        for i in range(3):
            for j in range(3):
                anti = linalg.mat_add(linalg.mat_mul(basis3[i], basis3[j]),
                                      linalg.mat_mul(basis3[j], basis3[i]))
                lam = _scalar_value(anti, size)
                if lam is None:
                    raise ReducibleAlgebraError(_reducible_message(alg))
                gram[i][j] = -lam / 2
        if not _positive_definite(gram):
            raise ReducibleAlgebraError(_reducible_message(alg))
        return "H", comm
    raise ReducibleAlgebraError(_reducible_message(alg))


def _non_scalar(comm, size):
    for c in comm:
        t = _traceless_part(c, size)
        if any(any(row) for row in t):
            return c
    raise ReducibleAlgebraError("commutant has no non-scalar element")


def _traceless_part(m, size):
    t = linalg.trace(m) / size
    out = [row[:] for row in m]
    for i in range(size):
        out[i][i] -= t
    return out


def _scalar_value(m, size):
    lam = m[0][0]
    for i in range(size):
        for j in range(size):
            want = lam if i == j else 0
            if m[i][j] != want:
                return None
    return lam


def _require_scalar(m, size):
    if _scalar_value(m, size) is None:
        raise ReducibleAlgebraError("1-dimensional commutant is not scalar")


def _independent(mats, want):
    picked = []
    vecs = []
    for m in mats:
        v = _vec(m)
        if not linalg.in_span(vecs, v):
            picked.append(m)
            vecs.append(v)
            if len(picked) == want:
                return picked
    raise ReducibleAlgebraError("commutant traceless part is too small")


def _positive_definite(g):
    n = len(g)
    for k in range(1, n + 1):
        minor = [row[:k] for row in g[:k]]
        if _det(minor) <= 0:
            return False
    return True


def _det(m):
    n = len(m)
    if n == 1:
        return m[0][0]
    total = Fraction(0)
    for j in range(n):
        sub = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * _det(sub)
        total += term if j % 2 == 0 else -term
    return total


def _reducible_message(alg):
    witness = invariant_subspace_witness(alg.basis, alg.size)
    hint = f"; invariant subspace witness: {witness}" if witness else ""
    return ("algebra acts reducibly over R: decompose into isotypic blocks "
            "before classifying" + hint)


def invariant_subspace_witness(mats, size: int):
    """Search for a proper rational invariant subspace.

    Tries cyclic subspaces generated from rational eigenvectors of the
    basis elements and from coordinate vectors; exact arithmetic
    throughout.  Returns a basis of a proper invariant subspace or None
    (absence of a rational witness does not certify irreducibility).
    """
    seeds = []
    for i in range(size):
        e = [Fraction(0)] * size
        e[i] = Fraction(1)
        seeds.append(e)
    for m in mats:
        fm = [[Fraction(c) for c in row] for row in m]
        for root in linalg.rational_roots(linalg.char_poly(fm)):
            shifted = [row[:] for row in fm]
            for i in range(size):
                shifted[i][i] -= root
            seeds.extend(linalg.kernel(shifted))
    for seed in seeds:
        if not any(seed):
            continue
        space = [seed]
        grew = True
        while grew:
            grew = False
            for m in mats:
                for v in list(space):
                    img = [sum(Fraction(m[i][k]) * v[k] for k in range(size))
                           for i in range(size)]
                    if any(img) and not linalg.in_span(space, img):
                        space.append(img)
                        grew = True
        if len(space) < size:
            return space
    return None


# ---------------------------------------------------------------------------
# Canonical real forms of the labeling algebras and gauge invariance


_QUAT = {  # right multiplication table q_col * q_row conventions baked below
    ("1", "1"): ("1", 1), ("1", "i"): ("i", 1), ("1", "j"): ("j", 1), ("1", "k"): ("k", 1),
    ("i", "1"): ("i", 1), ("i", "i"): ("1", -1), ("i", "j"): ("k", 1), ("i", "k"): ("j", -1),
    ("j", "1"): ("j", 1), ("j", "i"): ("k", -1), ("j", "j"): ("1", -1), ("j", "k"): ("i", 1),
    ("k", "1"): ("k", 1), ("k", "i"): ("j", 1), ("k", "j"): ("i", -1), ("k", "k"): ("1", -1),
}

_UNITS = ("1", "i", "j", "k")


def quaternion_left(q: str):
    """4x4 rational matrix of left multiplication by a unit quaternion."""
    m = [[Fraction(0)] * 4 for _ in range(4)]
    for col, u in enumerate(_UNITS):
        prod, sign = _QUAT[(q, u)]
        m[_UNITS.index(prod)][col] = Fraction(sign)
    return m


def quaternion_right(q: str):
    """4x4 rational matrix of right multiplication by a unit quaternion."""
    m = [[Fraction(0)] * 4 for _ in range(4)]
    for col, u in enumerate(_UNITS):
        prod, sign = _QUAT[(u, q)]
        m[_UNITS.index(prod)][col] = Fraction(sign)
    return m


def complex_unit(n: int):
    """Block-diagonal J with J^2 = -1 on R^(2n)."""
    j = [[Fraction(0)] * (2 * n) for _ in range(2 * n)]
    for b in range(n):
        j[2 * b][2 * b + 1] = Fraction(-1)
        j[2 * b + 1][2 * b] = Fraction(1)
    return j


def _block_diag(block, copies: int):
    b = len(block)
    out = [[Fraction(0)] * (b * copies) for _ in range(b * copies)]
    for c in range(copies):
        for i in range(b):
            for j in range(b):
                out[c * b + i][c * b + j] = Fraction(block[i][j])
    return out


def quaternion_left_algebra(n: int):
    """Left multiplications by 1, i, j, k on n quaternionic coordinates."""
    return [_block_diag(quaternion_left(q), n) for q in _UNITS]


def canonical_m_span(kind: str, n: int):
    """The labeling span for N fields over R, C or H in real coordinates.

    R: scalar multiples of the identity on R^N.
    C: {x 1 + y J} on R^(2N) via the regular representation of 1, i.
    H: right multiplications by 1, i, j, k on R^(4N).
    """
    if kind == "R":
        return [linalg.identity(n)]
    if kind == "C":
        return [linalg.identity(2 * n), complex_unit(n)]
    if kind == "H":
        return [_block_diag(quaternion_right(q), n) for q in _UNITS]
    raise ValueError(f"unknown kind {kind!r}")


def gauge_algebra_basis(kind: str, n: int):
    """Antisymmetric generators of O(N), U(N) or Sp(2N) on flavor space."""
    if kind == "R":
        out = []
        for a in range(n):
            for b in range(a + 1, n):
                m = [[Fraction(0)] * n for _ in range(n)]
                m[a][b] = Fraction(1)
                m[b][a] = Fraction(-1)
                out.append(m)
        return out
    if kind == "C":
        j2 = [[Fraction(0), Fraction(-1)], [Fraction(1), Fraction(0)]]
        one2 = [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]]
        return _flavor_blocks(n, 2, diag_blocks=[j2],
                              sym_off=[j2], antisym_off=[one2])
    if kind == "H":
        ls = {q: quaternion_left(q) for q in _UNITS}
        one4 = ls["1"]
        imag = [ls["i"], ls["j"], ls["k"]]
        return _flavor_blocks(n, 4, diag_blocks=imag,
                              sym_off=imag, antisym_off=[one4])
    raise ValueError(f"unknown kind {kind!r}")


def _flavor_blocks(n: int, b: int, diag_blocks, sym_off, antisym_off):
    out = []
    for f in range(n):
        for blk in diag_blocks:
            m = [[Fraction(0)] * (n * b) for _ in range(n * b)]
            _put(m, f, f, blk, b)
            out.append(m)
    for f in range(n):
        for g in range(f + 1, n):
            for blk in antisym_off:
                m = [[Fraction(0)] * (n * b) for _ in range(n * b)]
                _put(m, f, g, blk, b)
                _put(m, g, f, [[-x for x in row] for row in blk], b)
                out.append(m)
            for blk in sym_off:
                m = [[Fraction(0)] * (n * b) for _ in range(n * b)]
                _put(m, f, g, blk, b)
                _put(m, g, f, blk, b)
                out.append(m)
    return out


def _put(m, f, g, blk, b):
    for i in range(b):
        for j in range(b):
            m[f * b + i][g * b + j] = Fraction(blk[i][j])


def canonical_form_check(kind: str, n: int) -> Report:
    """Closure of the canonical span and gauge invariance of its bilinears.

    (a) the span of the labeling matrices is closed under the four
    products of the commutator formula (tM M', M tM', M M', M' M);
    (b) every gauge generator A satisfies tA M + M A = 0, so the bilocal
    transforms trivially; checked both on matrices and through the Wick
    engine as V_{tA M + M A} = 0.
    """
    rep = Report(f"bilocal/canonical/{kind}/N{n}")
    span = canonical_m_span(kind, n)
    vecs = [_vec(m) for m in span]
    closed = True
    for a in span:
        if not linalg.in_span(vecs, _vec(linalg.transpose(a))):
            closed = False
        for b in span:
            prods = (linalg.mat_mul(linalg.transpose(a), b),
                     linalg.mat_mul(a, linalg.transpose(b)),
                     linalg.mat_mul(a, b), linalg.mat_mul(b, a))
            if not all(linalg.in_span(vecs, _vec(p)) for p in prods):
                closed = False
    rep.add(f"canonical/{kind}/N{n}/closure", closed,
            detail="span closed under transpose and the four products")
    gauge = gauge_algebra_basis(kind, n)
    ok_mat = True
    ok_wick = True
    for a in gauge:
        if linalg.transpose(a) != [[-x for x in row] for row in a]:
            ok_mat = False
        for m in span:
            var = linalg.mat_add(linalg.mat_mul(linalg.transpose(a), m),
                                 linalg.mat_mul(m, a))
            if any(any(row) for row in var):
                ok_mat = False
            if not bilocal_field(var, 1, 2).is_zero():
                ok_wick = False
    rep.add(f"canonical/{kind}/N{n}/gauge-matrix", ok_mat,
            detail="tA M + M A = 0 for all gauge generators")
    rep.add(f"canonical/{kind}/N{n}/gauge-wick", ok_wick,
            detail="transformed bilocal vanishes in the Wick engine")
    t_alg = TAlgebra(span)
    rep.add(f"canonical/{kind}/N{n}/t-algebra", True,
            detail="span verified closed under products and transposition")
    return rep


def right_ideal_orthogonal_check(basis, ideal) -> Report:
    """Orthogonal complement of a right ideal is again a right ideal."""
    rep = Report("bilocal/right-ideal")
    alg_vecs = [_vec(m) for m in basis]
    ideal_vecs = [_vec(m) for m in ideal]
    closed = all(linalg.in_span(ideal_vecs, _vec(linalg.mat_mul(i, a)))
                 for i in ideal for a in basis)
    rep.add("right-ideal/given-ideal-closed", closed)
    # orthogonal complement inside the algebra span w.r.t. the Frobenius form
    rows = [[frobenius(i, b) for b in basis] for i in ideal]
    comp_coeffs = linalg.kernel(rows) if rows else []
    comp = []
    for v in comp_coeffs:
        m = None
        for c, b in zip(v, basis):
            scaled = linalg.mat_scale(c, b)
            m = scaled if m is None else linalg.mat_add(m, scaled)
        comp.append(m)
    comp_vecs = [_vec(m) for m in comp]
    is_ideal = all(linalg.in_span(comp_vecs, _vec(linalg.mat_mul(c, a)))
                   for c in comp for a in basis)
    rep.add("right-ideal/orthogonal-complement-closed", is_ideal,
            detail=f"complement dimension {len(comp)}")
    return rep
