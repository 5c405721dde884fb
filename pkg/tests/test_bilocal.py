import random
from fractions import Fraction

import pytest

from minrep import bilocal, linalg
from minrep.bilocal import (DeltaPoly, TAlgebra, WickElement, bilocal_field,
                            canonical_form_check, commutant_type,
                            delta_commutator, frobenius,
                            frobenius_property_check, verify_commutator_formula,
                            wick_commutator, wick_product)


# ---------------------------------------------------------------------------
# Independent oracle: a one-at-a-time reordering engine.  Each field
# phi_f(x_k) is split into an annihilation half A_(k,f) and a creation half
# C_(k,f) with [A_(k,f), C_(l,g)] = delta_fg D+_{kl}; elements are kept as
# {(creation tuple, annihilation tuple): DeltaPoly} and products are
# normalized by bubbling annihilators to the right one swap at a time.
# The algorithm shares nothing with the matching enumeration in the engine.


class OracleElement:
    def __init__(self, terms=None):
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    def __add__(self, other):
        t = dict(self.terms)
        for k, v in other.terms.items():
            s = t.get(k, DeltaPoly.zero()) + v
            if s:
                t[k] = s
            else:
                t.pop(k, None)
        return OracleElement(t)

    def __sub__(self, other):
        return self + OracleElement({k: -v for k, v in other.terms.items()})

    def __eq__(self, other):
        return self.terms == other.terms

    def is_zero(self):
        return not self.terms


def oracle_word(word, coeff=None):
    """Normalize a word of halves into an OracleElement by adjacent swaps."""
    coeff = coeff if coeff is not None else DeltaPoly.one()
    # find an annihilator directly left of a creator
    for i in range(len(word) - 1):
        kind1, p1, f1 = word[i]
        kind2, p2, f2 = word[i + 1]
        if kind1 == "A" and kind2 == "C":
            swapped = list(word)
            swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
            out = oracle_word(swapped, coeff)
            if f1 == f2:
                contracted = list(word[:i]) + list(word[i + 2:])
                out = out + oracle_word(contracted,
                                        coeff * DeltaPoly.symbol(p1, p2))
            return out
    cre = tuple(sorted((p, f) for k, p, f in word if k == "C"))
    ann = tuple(sorted((p, f) for k, p, f in word if k == "A"))
    return OracleElement({(cre, ann): coeff})


def oracle_from_wick(w: WickElement) -> OracleElement:
    """Expand each normal product :phi...: into (C+A) halves, normal ordered."""
    out = OracleElement()
    for fields, coeff in w.terms.items():
        expansion = [[]]
        for (p, f) in fields:
            expansion = [word + [(kind, p, f)] for word in expansion
                         for kind in ("C", "A")]
        for word in expansion:
            # creators first: inside one normal product nothing contracts
            ordered = [t for t in word if t[0] == "C"] + [t for t in word if t[0] == "A"]
            out = out + oracle_word(ordered, coeff)
    return out


def oracle_product(u: WickElement, v: WickElement) -> OracleElement:
    out = OracleElement()
    for fa, ca in u.terms.items():
        for fb, cb in v.terms.items():
            words_a = [[]]
            for (p, f) in fa:
                words_a = [w + [(k, p, f)] for w in words_a for k in ("C", "A")]
            words_b = [[]]
            for (p, f) in fb:
                words_b = [w + [(k, p, f)] for w in words_b for k in ("C", "A")]
            for wa in words_a:
                wa_sorted = [t for t in wa if t[0] == "C"] + [t for t in wa if t[0] == "A"]
                for wb in words_b:
                    wb_sorted = [t for t in wb if t[0] == "C"] + [t for t in wb if t[0] == "A"]
                    out = out + oracle_word(wa_sorted + wb_sorted, ca * cb)
    return out


class TestEngineAgainstOracle:
    def test_single_fields(self):
        u = WickElement.field(1, 1)
        v = WickElement.field(2, 1)
        got = wick_commutator(u, v)
        want = delta_commutator(1, 2)
        assert got == WickElement({(): want})

    def test_distinct_flavors_commute(self):
        u = WickElement.field(1, 1)
        v = WickElement.field(2, 2)
        assert wick_commutator(u, v).is_zero()

    def test_products_match_oracle_on_pairs(self):
        u = WickElement.normal_product([(1, 1), (2, 1)])
        v = WickElement.normal_product([(3, 1), (4, 1)])
        assert oracle_product(u, v) == oracle_from_wick(wick_product(u, v))

    def test_commutator_matches_oracle_single_flavor(self):
        u = WickElement.normal_product([(1, 1), (2, 1)])
        v = WickElement.normal_product([(3, 1), (4, 1)])
        lhs = oracle_product(u, v) - oracle_product(v, u)
        rhs = oracle_from_wick(wick_commutator(u, v))
        assert lhs == rhs

    def test_commutator_matches_oracle_random(self):
        rng = random.Random(99)
        for _ in range(6):
            fa = [(rng.randint(1, 4), rng.randint(1, 2)) for _ in range(2)]
            fb = [(rng.randint(1, 4), rng.randint(1, 2)) for _ in range(2)]
            u = WickElement.normal_product(fa)
            v = WickElement.normal_product(fb)
            assert oracle_product(u, v) == oracle_from_wick(wick_product(u, v))

    def test_explicit_four_point_structure(self):
        u = WickElement.normal_product([(1, 1), (2, 1)])
        v = WickElement.normal_product([(3, 1), (4, 1)])
        got = wick_commutator(u, v)
        from minrep.bilocal import delta_double
        want = WickElement({
            ((2, 1), (4, 1)): delta_commutator(1, 3),
            ((1, 1), (3, 1)): delta_commutator(2, 4),
            ((1, 1), (4, 1)): delta_commutator(2, 3),
            ((2, 1), (3, 1)): delta_commutator(1, 4),
            (): delta_double(3, 4) + delta_double(4, 3),
        })
        assert got == want


class TestBilocalFields:
    def test_identity_matrix_gives_flavor_sum(self):
        m = linalg.identity(3)
        v = bilocal_field(m, 1, 2)
        assert set(v.terms) == {((1, i), (2, i)) for i in range(1, 4)}

    def test_zero_matrix(self):
        assert bilocal_field([[Fraction(0)] * 2 for _ in range(2)], 1, 2).is_zero()

    def test_transpose_point_swap_symmetry(self):
        rng = random.Random(21)
        for _ in range(8):
            m = [[Fraction(rng.randint(-5, 5)) for _ in range(3)] for _ in range(3)]
            assert bilocal_field(linalg.transpose(m), 2, 1) == bilocal_field(m, 1, 2)


class TestCommutatorFormula:
    def test_identity_labels(self):
        for size in (1, 2, 3, 4):
            m = linalg.identity(size)
            assert verify_commutator_formula(m, m).ok

    def test_zero_label(self):
        m = linalg.identity(2)
        z = [[Fraction(0)] * 2 for _ in range(2)]
        lhs = wick_commutator(bilocal_field(m, 1, 2), bilocal_field(z, 3, 4))
        assert lhs.is_zero()
        assert verify_commutator_formula(m, z).ok

    @pytest.mark.parametrize("size", [1, 2, 3, 4])
    def test_seeded_random_labels(self, size):
        rng = random.Random(1000 + size)
        for _ in range(50):
            m = [[Fraction(rng.randint(-9, 9), rng.randint(1, 4))
                  for _ in range(size)] for _ in range(size)]
            mp = [[Fraction(rng.randint(-9, 9), rng.randint(1, 4))
                   for _ in range(size)] for _ in range(size)]
            assert verify_commutator_formula(m, mp).ok


class TestFrobenius:
    def test_identity_pairing(self):
        assert frobenius(linalg.identity(5), linalg.identity(5)) == 5

    def test_matrix_unit(self):
        e12 = [[Fraction(0), Fraction(1)], [Fraction(0), Fraction(0)]]
        assert frobenius(e12, e12) == 1

    def test_property_random_triples(self):
        rng = random.Random(17)
        for _ in range(50):
            ms = [[[Fraction(rng.randint(-6, 6), rng.randint(1, 3))
                    for _ in range(3)] for _ in range(3)] for _ in range(3)]
            assert frobenius_property_check(*ms).ok

    def test_shape_mismatch(self):
        with pytest.raises(ValueError):
            frobenius(linalg.identity(2), linalg.identity(3))


class TestCommutantClassification:
    def test_full_matrix_algebra_is_real_type(self):
        basis = []
        for a in range(2):
            for b in range(2):
                m = [[Fraction(0)] * 2 for _ in range(2)]
                m[a][b] = Fraction(1)
                basis.append(m)
        kind, comm = commutant_type(TAlgebra(basis))
        assert kind == "R" and len(comm) == 1

    def test_complex_scalars(self):
        kind, comm = commutant_type(TAlgebra(bilocal.canonical_m_span("C", 1)))
        assert kind == "C" and len(comm) == 2

    def test_quaternion_left_multiplications(self):
        basis = bilocal.quaternion_left_algebra(1)
        kind, comm = commutant_type(TAlgebra(basis))
        assert kind == "H" and len(comm) == 4
        # the commutant of left multiplications contains the rights
        comm_vecs = [bilocal._vec(m) for m in comm]
        for q in bilocal._UNITS:
            assert linalg.in_span(comm_vecs,
                                  bilocal._vec(bilocal.quaternion_right(q)))

    def test_reducible_split_field_detected(self):
        # Q(sqrt 2) embedded by a symmetric matrix: a t-algebra, a division
        # algebra over Q, but split over R; must be rejected as reducible.
        s = [[Fraction(1), Fraction(1)], [Fraction(1), Fraction(-1)]]
        basis = [linalg.identity(2), s]
        with pytest.raises(bilocal.ReducibleAlgebraError):
            commutant_type(TAlgebra(basis))

    def test_reducible_diagonal_detected(self):
        d = [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(2)]]
        with pytest.raises(bilocal.ReducibleAlgebraError):
            commutant_type(TAlgebra([linalg.identity(2), d]))

    def test_invariant_subspace_witness(self):
        d = [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(2)]]
        w = bilocal.invariant_subspace_witness([linalg.identity(2), d], 2)
        assert w is not None and len(w) == 1

    def test_t_algebra_validation(self):
        e12 = [[Fraction(0), Fraction(1)], [Fraction(0), Fraction(0)]]
        with pytest.raises(ValueError):
            TAlgebra([linalg.identity(2), e12])  # not transpose closed


class TestCanonicalForms:
    @pytest.mark.parametrize("kind,n", [("R", 1), ("R", 2), ("C", 1), ("C", 2),
                                        ("H", 1), ("H", 2)])
    def test_closure_and_gauge_invariance(self, kind, n):
        assert canonical_form_check(kind, n).ok

    def test_complex_span_structure(self):
        one, j = bilocal.canonical_m_span("C", 1)
        assert linalg.mat_mul(j, j) == [[-x for x in row] for row in one]

    def test_quaternion_span_closed(self):
        span = bilocal.canonical_m_span("H", 1)
        vecs = [bilocal._vec(m) for m in span]
        for a in span:
            for b in span:
                assert linalg.in_span(vecs, bilocal._vec(linalg.mat_mul(a, b)))

    def test_gauge_dimensions(self):
        assert len(bilocal.gauge_algebra_basis("R", 3)) == 3       # o(3)
        assert len(bilocal.gauge_algebra_basis("C", 2)) == 4       # u(2)
        assert len(bilocal.gauge_algebra_basis("H", 2)) == 10      # sp(4)


class TestRightIdeals:
    def test_orthogonal_complement_of_right_ideal(self):
        # Mat(2,R) plus the column ideal spanned by E11, E21
        basis = []
        for a in range(2):
            for b in range(2):
                m = [[Fraction(0)] * 2 for _ in range(2)]
                m[a][b] = Fraction(1)
                basis.append(m)
        col = [basis[0], basis[2]]  # E11, E21: a left ideal... use rows
        row_ideal = [basis[0], basis[1]]  # E11, E12 spans a right ideal
        rep = bilocal.right_ideal_orthogonal_check(basis, row_ideal)
        assert rep.ok

    def test_block_diagonal_ideal(self):
        one = linalg.identity(2)
        e11 = [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(0)]]
        e22 = [[Fraction(0), Fraction(0)], [Fraction(0), Fraction(1)]]
        rep = bilocal.right_ideal_orthogonal_check([one, e11, e22], [e11])
        assert rep.ok
