"""Multivariate polynomials over an exact coefficient ring.

Monomials are exponent tuples; coefficients are any ring type supporting
+, -, *, truthiness and (for conjugation) .conj().  Used with QI for the
harmonic polynomials and with QIS for the Gaussian wave-function model.
"""

from __future__ import annotations


class Poly:
    """Immutable sparse polynomial: {exponent tuple: coefficient}."""

    __slots__ = ("terms", "nvars")

    def __init__(self, nvars: int, terms: dict | None = None):
        clean = {m: c for m, c in (terms or {}).items() if c}
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "nvars", nvars)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @staticmethod
    def constant(nvars: int, c) -> "Poly":
        return Poly(nvars, {(0,) * nvars: c})

    @staticmethod
    def variable(nvars: int, i: int, one) -> "Poly":
        exp = [0] * nvars
        exp[i] = 1
        return Poly(nvars, {tuple(exp): one})

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, Poly) and self.nvars == other.nvars \
            and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other):
        t = dict(self.terms)
        for m, c in other.terms.items():
            s = t.get(m)
            s = c if s is None else s + c
            if s:
                t[m] = s
            else:
                t.pop(m, None)
        return Poly(self.nvars, t)

    def __neg__(self):
        return Poly(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        t: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = t.get(m)
                p = c1 * c2
                s = p if s is None else s + p
                if s:
                    t[m] = s
                else:
                    t.pop(m, None)
        return Poly(self.nvars, t)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "Poly":
        if not c:
            return Poly(self.nvars)
        return Poly(self.nvars, {m: c * v for m, v in self.terms.items()})

    def diff(self, i: int) -> "Poly":
        t = {}
        for m, c in self.terms.items():
            if m[i]:
                e = list(m)
                e[i] -= 1
                t[tuple(e)] = c * m[i]
        return Poly(self.nvars, t)

    def mul_var(self, i: int, power: int = 1) -> "Poly":
        t = {}
        for m, c in self.terms.items():
            e = list(m)
            e[i] += power
            t[tuple(e)] = c
        return Poly(self.nvars, t)

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def coefficient(self, mono: tuple):
        return self.terms.get(mono)

    def conj(self) -> "Poly":
        return Poly(self.nvars, {m: c.conj() for m, c in self.terms.items()})

    def evaluate(self, point):
        """Evaluate at a point given as a list of coefficient-ring values."""
        total = None
        for m, c in self.terms.items():
            v = c
            for i, e in enumerate(m):
                for _ in range(e):
                    v = v * point[i]
            total = v if total is None else total + v
        return total

    def leading_monomial(self) -> tuple:
        return min(self.terms)

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            mono = "*".join(f"x{i}^{e}" if e > 1 else f"x{i}"
                            for i, e in enumerate(m) if e)
            parts.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)


def monomials_of_degree(nvars: int, degree: int):
    """All exponent tuples of the given total degree, lexicographic."""
    if nvars == 1:
        yield (degree,)
        return
    for first in range(degree, -1, -1):
        for rest in monomials_of_degree(nvars - 1, degree - first):
            yield (first,) + rest


def monomials_up_to(nvars: int, degree: int):
    for d in range(degree + 1):
        yield from monomials_of_degree(nvars, d)
