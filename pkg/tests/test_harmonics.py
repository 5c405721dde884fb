import random
from fractions import Fraction

import pytest

from minrep import harmonics, linalg
from minrep.harmonics import (HarmonicError, angular_momentum, build_harmonic,
                              compactify, conformal_hamiltonian,
                              l_squared, lowering, raising,
                              sphere_identity_defect, verify_mode)
from minrep.poly import Poly, monomials_of_degree
from minrep.scalars import QI


class TestConstruction:
    def test_ground_mode_is_constant(self):
        mode = build_harmonic(1, 0, 0)
        assert mode.poly == Poly.constant(4, QI(1))

    def test_first_vector_mode(self):
        # degree 1, L3 eigenvalue 1: proportional to z1 + i z2
        mode = build_harmonic(2, 1, 1)
        p = mode.poly
        z1 = (1, 0, 0, 0)
        z2 = (0, 1, 0, 0)
        c1, c2 = p.terms[z1], p.terms[z2]
        assert set(p.terms) == {z1, z2}
        assert c2 / c1 == QI(0, 1)

    def test_rotation_invariant_degree_two(self):
        mode = build_harmonic(3, 0, 0)
        p = mode.poly
        for j in (1, 2, 3):
            assert angular_momentum(j, p).is_zero()
        # uniqueness up to scale: the kernel construction is pinned by the
        # eigen-checks plus homogeneity
        assert verify_mode(p, 3, 0, 0).ok

    def test_invalid_labels(self):
        for bad in [(0, 0, 0), (2, 2, 0), (3, 1, 2), (3, -1, 0)]:
            with pytest.raises(HarmonicError):
                build_harmonic(*bad)

    def test_lowering_chain_consistency(self):
        top = build_harmonic(4, 2, 2).poly
        lowered = lowering(top)
        built = build_harmonic(4, 2, 1).poly
        # same ray: cross-normalize by the leading coefficients
        lead = lowered.terms[lowered.leading_monomial()]
        assert lowered.scale(QI(1) / lead) == built

    def test_raising_kills_top(self):
        for n, l in [(2, 1), (4, 3), (5, 2)]:
            assert raising(build_harmonic(n, l, l).poly).is_zero()


class TestVerification:
    @pytest.mark.parametrize("n,l,m", [(2, 1, 0), (3, 2, -1), (4, 1, 1), (5, 3, 0)])
    def test_modes_pass_all_checks(self, n, l, m):
        mode = build_harmonic(n, l, m)
        assert verify_mode(mode.poly, n, l, m).ok

    def test_negative_control_non_harmonic(self):
        p = Poly(4, {(2, 0, 0, 0): QI(1)})   # z1^2
        rep = verify_mode(p, 3, 0, 0)
        assert not rep.ok
        failed = {r.check_id for r in rep.failures()}
        assert any("laplacian" in f for f in failed)

    def test_counts_are_squares(self):
        assert harmonics.level_count_check(6).ok

    def test_independence_within_level(self):
        n = 4
        modes = [build_harmonic(n, l, m) for l in range(n) for m in range(-l, l + 1)]
        monos = sorted(set(monomials_of_degree(4, n - 1)))
        mat = [[mode.poly.terms.get(mm, QI(0)) for mm in monos] for mode in modes]
        assert linalg.rank(mat) == n * n


class TestOperatorAlgebra:
    def test_angular_momentum_commutators(self):
        assert harmonics.angular_algebra_check(3).ok

    def test_hamiltonian_eigenvalue_is_degree_plus_one(self):
        rng = random.Random(4)
        for d in range(4):
            mono = tuple(rng.randint(0, d) for _ in range(4))
            p = Poly(4, {mono: QI(1)})
            assert conformal_hamiltonian(p) == p.scale(QI(sum(mono) + 1))

    def test_l2_commutes_with_lowering(self):
        p = build_harmonic(4, 2, 2).poly
        assert l_squared(lowering(p)) == lowering(l_squared(p))


class TestCompactification:
    def test_origin(self):
        z = compactify((0, 0, 0, 0))
        assert z == (QI(0), QI(0), QI(0), QI(1))

    def test_sphere_identity_on_random_rational_points(self):
        rng = random.Random(23)
        count = 0
        while count < 20:
            x = tuple(Fraction(rng.randint(-8, 8), rng.randint(1, 5)) for _ in range(4))
            assert not sphere_identity_defect(x)
            count += 1

    def test_time_zero_points_land_on_the_sphere(self):
        rng = random.Random(8)
        for _ in range(10):
            x = (0,) + tuple(Fraction(rng.randint(-5, 5), rng.randint(1, 3))
                             for _ in range(3))
            z = compactify(x)
            assert all(c.is_real() for c in z)
            total = QI(0)
            for c in z:
                total = total + c * c
            assert total == QI(1)

    def test_polynomial_identity(self):
        assert harmonics.sphere_identity_polynomial_check()

    def test_half_unit_time_point(self):
        # x = (1, 0, 0, 0): 2w = 1 - 1 - 2i = -2i, z4 = (1+1)/(-2i) = i
        z = compactify((1, 0, 0, 0))
        assert z == (QI(0), QI(0), QI(0), QI(0, 1))
