"""Exact symbolic Weyl (CCR) algebra in normal-ordered form.

Elements are finite Q(i)-linear combinations of normal-ordered monomials
c*_{m1}...c*_{mp} c_{n1}...c_{nq} over an arbitrary universe of modes.
A mode is any hashable, totally ordered tuple, e.g. ("a", 1) or
("h", 2, 1, 0); products are rewritten to canonical normal order through
the contraction rule [c_m, c*_n] = delta_{mn}, so structural equality of
the term dictionaries is semantic equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct
from math import comb, factorial

from .scalars import QI

Mode = tuple


def mode_str(m: Mode) -> str:
    return str(m[0]) + "_".join(str(x) for x in m[1:])


def _sorted_counts(modes) -> tuple[tuple[Mode, int], ...]:
    counts: dict[Mode, int] = {}
    for m in modes:
        counts[m] = counts.get(m, 0) + 1
    return tuple(sorted(counts.items()))


@dataclass(frozen=True)
class WeylMonomial:
    """Normal-ordered monomial: creator multiset then annihilator multiset."""

    creators: tuple[Mode, ...]
    annihilators: tuple[Mode, ...]

    @staticmethod
    def make(creators, annihilators) -> "WeylMonomial":
        return WeylMonomial(tuple(sorted(creators)), tuple(sorted(annihilators)))

    @property
    def degree(self) -> int:
        return len(self.creators) + len(self.annihilators)

    @property
    def level_shift(self) -> int:
        return len(self.creators) - len(self.annihilators)

    def adjoint(self) -> "WeylMonomial":
        return WeylMonomial(self.annihilators, self.creators)

    def __str__(self):
        parts = [mode_str(m) + "*" for m in self.creators]
        parts += [mode_str(m) for m in self.annihilators]
        return " ".join(parts) if parts else "1"


_ONE_MONO = WeylMonomial((), ())


def _mono_product(x: WeylMonomial, y: WeylMonomial):
    """Yield (integer weight, monomial) terms of the normal-ordered product.

    Only the annihilators of x interact with the creators of y; a mode with
    p annihilators meeting q creators contributes k! C(p,k) C(q,k) for each
    number k of contractions, independently across modes.
    """
    ax = _sorted_counts(x.annihilators)
    cy = _sorted_counts(y.creators)
    cy_map = dict(cy)
    shared = [(m, p, cy_map[m]) for m, p in ax if m in cy_map]
    if not shared:
        yield 1, WeylMonomial.make(x.creators + y.creators, x.annihilators + y.annihilators)
        return
    choices = [range(min(p, q) + 1) for _, p, q in shared]
    for ks in iproduct(*choices):
        weight = 1
        removed_a: dict[Mode, int] = {}
        removed_c: dict[Mode, int] = {}
        for (m, p, q), k in zip(shared, ks):
            if k:
                weight *= factorial(k) * comb(p, k) * comb(q, k)
                removed_a[m] = k
                removed_c[m] = k
        creators = list(x.creators) + _multiset_minus(y.creators, removed_c)
        annihilators = _multiset_minus(x.annihilators, removed_a) + list(y.annihilators)
        yield weight, WeylMonomial.make(creators, annihilators)


def _multiset_minus(items, removed: dict) -> list:
    if not removed:
        return list(items)
    left = dict(removed)
    out = []
    for m in items:
        if left.get(m, 0):
            left[m] -= 1
        else:
            out.append(m)
    return out


class WeylElement:
    """Immutable Q(i)-linear combination of normal-ordered monomials."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        clean = {m: q for m, q in (terms or {}).items() if q}
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("WeylElement is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "WeylElement":
        return _ZERO

    @staticmethod
    def one() -> "WeylElement":
        return _IDENTITY

    @staticmethod
    def scalar(c) -> "WeylElement":
        return WeylElement({_ONE_MONO: QI.of(c)})

    @staticmethod
    def creator(mode: Mode, coeff=1) -> "WeylElement":
        return WeylElement({WeylMonomial.make([mode], []): QI.of(coeff)})

    @staticmethod
    def annihilator(mode: Mode, coeff=1) -> "WeylElement":
        return WeylElement({WeylMonomial.make([], [mode]): QI.of(coeff)})

    @staticmethod
    def monomial(creators, annihilators, coeff=1) -> "WeylElement":
        return WeylElement({WeylMonomial.make(creators, annihilators): QI.of(coeff)})

    # -- structure ---------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, WeylElement):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def scalar_part(self) -> QI:
        return self.terms.get(_ONE_MONO, QI(0))

    def without_scalar(self) -> "WeylElement":
        t = dict(self.terms)
        t.pop(_ONE_MONO, None)
        return WeylElement(t)

    def is_scalar(self) -> bool:
        return all(m == _ONE_MONO for m in self.terms)

    def modes(self) -> set:
        out = set()
        for m in self.terms:
            out.update(m.creators)
            out.update(m.annihilators)
        return out

    def max_level_raise(self) -> int:
        return max((m.level_shift for m in self.terms), default=0)

    def degree(self) -> int:
        return max((m.degree for m in self.terms), default=0)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        t = dict(self.terms)
        for m, q in other.terms.items():
            s = t.get(m, QI(0)) + q
            if s:
                t[m] = s
            else:
                t.pop(m, None)
        return WeylElement(t)

    def __neg__(self):
        return WeylElement({m: -q for m, q in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, WeylElement):
            return normal_product(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "WeylElement":
        q = QI.of(c)
        if not q:
            return _ZERO
        return WeylElement({m: q * v for m, v in self.terms.items()})

    def adjoint(self) -> "WeylElement":
        return WeylElement({m.adjoint(): q.conj() for m, q in self.terms.items()})

    # -- rendering ---------------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (kv[0].creators, kv[0].annihilators))

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({q}) {m}" for m, q in self.sorted_terms())

    __repr__ = __str__


_ZERO = WeylElement({})
_IDENTITY = WeylElement({_ONE_MONO: QI(1)})


def normal_product(x: WeylElement, y: WeylElement) -> WeylElement:
    """Product x.y rewritten to canonical normal-ordered form via the CCR."""
    acc: dict[WeylMonomial, QI] = {}
    for mx, qx in x.terms.items():
        for my, qy in y.terms.items():
            q = qx * qy
            for w, mono in _mono_product(mx, my):
                s = acc.get(mono, QI(0)) + q * w
                if s:
                    acc[mono] = s
                else:
                    acc.pop(mono, None)
    return WeylElement(acc)


def commutator(x: WeylElement, y: WeylElement) -> WeylElement:
    return normal_product(x, y) - normal_product(y, x)


def ad_power(x: WeylElement, y: WeylElement, k: int) -> WeylElement:
    """Iterated bracket ad(x)^k (y)."""
    out = y
    for _ in range(k):
        out = commutator(x, out)
    return out


# ---------------------------------------------------------------------------
# Quadratics from matrices


@dataclass(frozen=True)
class Polarization:
    """Spinor pair (phi, phi_tilde) with [phi^b, phi~_a] = delta_a^b.

    The standard split over k creation/annihilation pairs of each charge is
    phi = (a_1..a_k, b*_1..b*_k), phi~ = (a*_1..a*_k, -b_1..-b_k).
    """

    phi: tuple[WeylElement, ...]
    phi_tilde: tuple[WeylElement, ...]

    @property
    def size(self) -> int:
        return len(self.phi)


def standard_polarization(k: int, a_name: str = "a", b_name: str = "b") -> Polarization:
    phi = tuple([WeylElement.annihilator((a_name, i)) for i in range(1, k + 1)]
                + [WeylElement.creator((b_name, i)) for i in range(1, k + 1)])
    phit = tuple([WeylElement.creator((a_name, i)) for i in range(1, k + 1)]
                 + [WeylElement.annihilator((b_name, i), -1) for i in range(1, k + 1)])
    pol = Polarization(phi, phit)
    _check_polarization(pol)
    return pol


def _check_polarization(pol: Polarization) -> None:
    n = pol.size
    for b in range(n):
        for a in range(n):
            want = WeylElement.scalar(1) if a == b else WeylElement.zero()
            if commutator(pol.phi[b], pol.phi_tilde[a]) != want:
                raise ValueError("polarization does not satisfy the CCR pairing")


def quadratic_from_matrix(x_matrix, pol: Polarization) -> WeylElement:
    """The literal bilinear sum_{ab} phi~_a X_ab phi^b, not normal subtracted.

    Reordering constants (e.g. b b* = b*b + 1) are kept, so the map is an
    exact Lie algebra homomorphism on matrices; any scalar offset against
    other conventions is visible in the output rather than absorbed.
    """
    n = pol.size
    if len(x_matrix) != n or any(len(row) != n for row in x_matrix):
        raise ValueError(f"matrix must be {n}x{n} to match the polarization")
    out = WeylElement.zero()
    for a in range(n):
        for b in range(n):
            c = QI.of(x_matrix[a][b])
            if c:
                out = out + normal_product(pol.phi_tilde[a], pol.phi[b]).scale(c)
    return out


def matrix_from_quadratic(w: WeylElement, pol: Polarization):
    """Invert quadratic_from_matrix via the adjoint action on phi.

    [phi~ X phi, phi^c] = -sum_b X_cb phi^b, which is blind to any scalar
    part of w.  Raises if ad_w does not preserve the span of phi.
    """
    n = pol.size
    basis = {}
    for b, el in enumerate(pol.phi):
        (mono, coeff), = el.terms.items()
        basis[mono] = (b, coeff)
    x = [[QI(0)] * n for _ in range(n)]
    for c in range(n):
        br = commutator(w, pol.phi[c])
        for mono, q in br.terms.items():
            if mono not in basis:
                raise ValueError(f"bracket leaves the polarization span: {mono}")
            b, coeff = basis[mono]
            x[c][b] = -q / coeff
    return x


def mode_action_matrix(w: WeylElement, xi: list[WeylElement]):
    """Matrix M with [w, xi_a] = sum_b A_ab xi_b returned as M = t(A).

    The transpose makes w -> M a Lie algebra homomorphism.  Each xi entry
    must be a single creator or annihilator term.
    """
    n = len(xi)
    basis = {}
    for b, el in enumerate(xi):
        (mono, coeff), = el.terms.items()
        basis[mono] = (b, coeff)
    a = [[QI(0)] * n for _ in range(n)]
    for r in range(n):
        br = commutator(w, xi[r])
        for mono, q in br.terms.items():
            if mono not in basis:
                raise ValueError(f"bracket leaves the mode span: {mono}")
            b, coeff = basis[mono]
            a[r][b] = q / coeff
    return [[a[r][c] for r in range(n)] for c in range(n)]


def quadratic_blocks(w: WeylElement, modes: list[Mode]):
    """Split a quadratic into (alpha, beta, gamma) coefficient matrices.

    w = sum alpha_ij c*_i c_j + sum beta_ij c*_i c*_j + sum gamma_ij c_i c_j
    + scalar, with beta and gamma returned as symmetric matrices.
    """
    idx = {m: i for i, m in enumerate(modes)}
    n = len(modes)
    alpha = [[QI(0)] * n for _ in range(n)]
    beta = [[QI(0)] * n for _ in range(n)]
    gamma = [[QI(0)] * n for _ in range(n)]
    half = QI(Fraction(1, 2))
    for mono, q in w.terms.items():
        nc, na = len(mono.creators), len(mono.annihilators)
        if (nc, na) == (0, 0):
            continue
        if nc + na != 2:
            raise ValueError(f"element is not quadratic: {mono}")
        if (nc, na) == (1, 1):
            alpha[idx[mono.creators[0]]][idx[mono.annihilators[0]]] += q
        elif (nc, na) == (2, 0):
            i, j = idx[mono.creators[0]], idx[mono.creators[1]]
            if i == j:
                beta[i][i] += q
            else:
                beta[i][j] += q * half
                beta[j][i] += q * half
        else:
            i, j = idx[mono.annihilators[0]], idx[mono.annihilators[1]]
            if i == j:
                gamma[i][i] += q
            else:
                gamma[i][j] += q * half
                gamma[j][i] += q * half
    return alpha, beta, gamma
