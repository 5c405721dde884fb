from fractions import Fraction

import pytest

from minrep import rootsys
from minrep.rootsys import build_root_system, grade_by_highest_root, minimal_orbit_report


def test_counts_match_closed_forms():
    # (family, rank, expected algebra dimension)
    cases = [("A", 3, 15), ("A", 1, 3), ("B", 2, 10), ("C", 3, 21),
             ("D", 4, 28), ("G2", 2, 14), ("F4", 4, 52),
             ("E6", 6, 78), ("E7", 7, 133), ("E8", 8, 248)]
    for fam, rank, dim in cases:
        rs = build_root_system(fam, rank)
        assert rs.dim == dim
        assert len(rs.roots) == dim - rank
        assert len(rs.positive_roots) * 2 == len(rs.roots)


def test_invalid_families_rejected():
    with pytest.raises(rootsys.RootSystemError):
        build_root_system("B", 1)
    with pytest.raises(rootsys.RootSystemError):
        build_root_system("D", 2)
    with pytest.raises(rootsys.RootSystemError):
        build_root_system("E6", 7)
    with pytest.raises(rootsys.RootSystemError):
        build_root_system("Z", 4)


def test_cartan_matrix_properties():
    for fam, rank in [("A", 4), ("B", 3), ("C", 3), ("D", 4), ("G2", 2), ("F4", 4)]:
        rs = build_root_system(fam, rank)
        c = rs.cartan_matrix
        for i in range(rank):
            assert c[i][i] == 2
            for j in range(rank):
                if i != j:
                    assert c[i][j] <= 0


def test_highest_root_is_maximal():
    for fam, rank in [("A", 3), ("C", 3), ("E6", 6)]:
        rs = build_root_system(fam, rank)
        roots = set(rs.roots)
        assert rs.highest_root in set(rs.positive_roots)
        for alpha in rs.simple_roots:
            shifted = tuple(t + a for t, a in zip(rs.highest_root, alpha))
            assert shifted not in roots


def _independent_a3_grading():
    """Oracle: enumerate the 12 roots e_i - e_j of sl4 directly and bin them
    by 2(r|theta)/(theta|theta) with theta = e_1 - e_4."""
    def unit(i):
        v = [Fraction(0)] * 4
        v[i] = Fraction(1)
        return v

    roots = []
    for i in range(4):
        for j in range(4):
            if i != j:
                roots.append([a - b for a, b in zip(unit(i), unit(j))])
    theta = [a - b for a, b in zip(unit(0), unit(3))]
    tt = sum(t * t for t in theta)
    dims = {-2: 0, -1: 0, 0: 3, 1: 0, 2: 0}
    for r in roots:
        e = 2 * sum(a * b for a, b in zip(r, theta)) / tt
        dims[int(e)] += 1
    return dims


def test_a3_grading_against_enumeration_oracle():
    expected = _independent_a3_grading()
    assert expected == {-2: 1, -1: 4, 0: 5, 1: 4, 2: 1}
    rs = build_root_system("A", 3)
    assert grade_by_highest_root(rs).dims == expected


def test_grading_shape_for_every_family():
    for fam, rank in [("A", 5), ("B", 4), ("C", 4), ("D", 5),
                      ("G2", 2), ("F4", 4), ("E6", 6), ("E7", 7), ("E8", 8)]:
        rs = build_root_system(fam, rank)
        g = grade_by_highest_root(rs)
        assert g.dims[2] == g.dims[-2] == 1
        assert g.dims[1] == g.dims[-1]
        assert g.total() == rs.dim


def test_e8_g1_dimension():
    g = grade_by_highest_root(build_root_system("E8", 8))
    assert g.dims[1] == 56


def test_a1_grading_degenerate():
    g = grade_by_highest_root(build_root_system("A", 1))
    assert g.dims == {-2: 1, -1: 0, 0: 1, 1: 0, 2: 1}


def test_a1_principal_orbit_coincides_with_minimal():
    rs = build_root_system("A", 1)
    rep = minimal_orbit_report(rs)
    principal = rs.dim - rs.rank
    assert principal == 2
    assert rep.min_orbit_dim == principal


def test_report_examples():
    rep = minimal_orbit_report(build_root_system("E8", 8))
    assert (rep.dim_g, rep.centralizer_label, rep.dim_g1, rep.gk_dim) == (248, "E7", 56, 29)
    rep = minimal_orbit_report(build_root_system("A", 4))   # sl5
    assert rep.dim_g1 == 6 and rep.gk_dim == 4
    assert rootsys.same_algebra_label(rep.centralizer_label, "A2+u(1)")
    rep = minimal_orbit_report(build_root_system("C", 3))
    assert rep.dim_g1 == 4 and rep.gk_dim == 3
    assert rootsys.same_algebra_label(rep.centralizer_label, "C2")
    rep = minimal_orbit_report(build_root_system("D", 4))
    assert rep.dim_g1 == 8 and rep.gk_dim == 5
    assert rootsys.same_algebra_label(rep.centralizer_label, "A1+A1+A1")
    rep = minimal_orbit_report(build_root_system("B", 2))
    assert rep.dim_g1 == 2 and rep.gk_dim == 2


def test_table_rows_satisfy_identities_and_closed_forms():
    for rep in rootsys.table1_report():
        assert rep.identities_hold()
        fam = rep.algebra_label if rep.algebra_label[0] not in "ABCD" else rep.algebra_label[0]
        rank = 0 if fam == rep.algebra_label else int(rep.algebra_label[1:])
        g1, gk = rootsys.expected_dims(fam, rank)
        assert (rep.dim_g1, rep.gk_dim) == (g1, gk)
        assert rootsys.same_algebra_label(rep.centralizer_label,
                                          rootsys.expected_centralizer(fam, rank))


def test_gk_dim_formulas_for_classical_ranges():
    for rank in range(2, 8):
        assert minimal_orbit_report(build_root_system("A", rank)).gk_dim == rank
    for rank in range(2, 7):
        assert minimal_orbit_report(build_root_system("C", rank)).gk_dim == rank


def test_label_aliases():
    assert rootsys.same_algebra_label("B2", "C2")
    assert rootsys.same_algebra_label("A3+A1", "D3+A1")
    assert rootsys.same_algebra_label("A1+A1", "D2")
    assert not rootsys.same_algebra_label("B3", "C3")
    assert rootsys.same_algebra_label("A2+u(1)", "u(1)+A2")
