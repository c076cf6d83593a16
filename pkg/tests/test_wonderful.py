from collections import Counter
from itertools import combinations

import pytest

from conftest import SLOW
from motive_forge.cellular import motive_of_cells
from motive_forge.configurations import union_class, validate_configuration
from motive_forge.errors import SizeGuardError
from motive_forge.gbundle import reductive_group_class
from motive_forge.rootsys import (
    ParabolicSubset,
    build_root_system,
    element_from_word,
    identity,
    longest_element,
)
from motive_forge.tate import L, LPolynomial, euler_class, pure_coefficients, self_duality_check
from motive_forge.wonderful import (
    Interpretation,
    face_lattice,
    orbit_class,
    orbit_class_oracle,
    orbit_closure_cells,
    orbit_closure_motive,
    boundary_configuration,
)
from oracles import count_gl, count_projective_points

TYPES = ["A1", "A2", "B2", "G2"] + (["A3"] if SLOW else [])


def P(rs, *idx):
    return ParabolicSubset.of(rs, idx)


def subsets(rs):
    for k in range(rs.rank + 1):
        for idx in combinations(range(1, rs.rank + 1), k):
            yield P(rs, *idx)


def hist(rs, *idx, interpretation="ascent"):
    return orbit_closure_cells(rs, P(rs, *idx), interpretation).histogram()


def test_face_lattice_examples():
    a1 = build_root_system("A1")
    assert [(tuple(f.parabolic), f.dim, f.codim) for f in face_lattice(a1)] == [((), 2, 1), ((1,), 3, 0)]
    a2 = build_root_system("A2")
    assert sorted(f.dim for f in face_lattice(a2)) == [6, 7, 7, 8]
    for name in ["A3", "B3", "D4"]:
        assert len(face_lattice(build_root_system(name))) == 2 ** build_root_system(name).rank


def test_face_incidence():
    rs = build_root_system("A3")
    faces = face_lattice(rs)
    for f in faces:
        for g in faces:
            assert f.contains(g) == set(g.parabolic).issubset(f.parabolic)


def test_cell_formula_by_direct_substitution():
    rs = build_root_system("A2")
    top = orbit_closure_cells(rs, ParabolicSubset.full(rs))
    for u, v, n in top.entries():
        asc = [i for i in (1, 2) if element_from_word(rs, u.word + (i,)).length > u.length]
        assert n == 3 - u.length + len(asc) + v.length
        assert top[(u, v)] == n


def test_a1_examples():
    rs = build_root_system("A1")
    for interp in Interpretation:
        assert hist(rs, 1, interpretation=interp) == [1, 1, 1, 1]
        assert hist(rs, interpretation=interp) == [1, 2, 1]
    assert orbit_class(rs, ParabolicSubset.full(rs)) == L**3 - L


def test_a1_closure_is_projective_three_space_and_group_is_pgl2():
    rs = build_root_system("A1")
    full = ParabolicSubset.full(rs)
    for q in (2, 3, 5):
        assert euler_class(orbit_closure_motive(rs, full))(q) == count_projective_points(3, q)
        assert orbit_class(rs, full)(q) == count_gl(2, q) // (q - 1)


def test_a2_group_points_over_f2():
    rs = build_root_system("A2")
    assert orbit_class(rs, ParabolicSubset.full(rs))(2) == count_gl(3, 2)


def test_a2_examples():
    rs = build_root_system("A2")
    assert hist(rs, 1, 2) == [1, 2, 4, 7, 8, 7, 4, 2, 1]
    assert hist(rs, 1) == hist(rs, 2) == [1, 3, 6, 8, 8, 6, 3, 1]
    flag = LPolynomial.from_list([1, 2, 2, 1])
    assert euler_class(orbit_closure_motive(rs, P(rs))) == flag * flag
    assert orbit_class(rs, ParabolicSubset.full(rs)) == L**8 - L**6 - L**5 + L**3


def test_oracle_examples():
    a1 = build_root_system("A1")
    assert orbit_class_oracle(a1, ParabolicSubset.full(a1)) == L * (L - 1) * (1 + L)
    a2 = build_root_system("A2")
    assert orbit_class_oracle(a2, P(a2, 1)) == (1 + L + L**2) ** 2 * (L**3 - L)
    flag = LPolynomial.from_list([1, 2, 2, 1])
    assert orbit_class_oracle(a2, P(a2)) == flag * flag


@pytest.mark.parametrize("name", ["A1", "A2", "B2", "G2", "A3", "B3"])
def test_closed_orbit_has_no_subtraction(name):
    rs = build_root_system(name)
    assert orbit_class(rs, P(rs)) == euler_class(orbit_closure_motive(rs, P(rs)))


@pytest.mark.parametrize("name", TYPES)
def test_ascent_tables_are_self_dual(name):
    rs = build_root_system(name)
    for I in subsets(rs):
        motive = orbit_closure_motive(rs, I)
        assert self_duality_check(motive, 2 * rs.num_positive + len(I))


@pytest.mark.parametrize("name", TYPES)
def test_orbit_class_matches_oracle(name):
    rs = build_root_system(name)
    for I in subsets(rs):
        assert orbit_class(rs, I) == orbit_class_oracle(rs, I)


@pytest.mark.parametrize("name", TYPES)
def test_orbits_partition_the_compactification(name):
    rs = build_root_system(name)
    total = sum((orbit_class(rs, I) for I in subsets(rs)), LPolynomial())
    assert total == euler_class(orbit_closure_motive(rs, ParabolicSubset.full(rs)))
    assert orbit_class(rs, ParabolicSubset.full(rs)) == reductive_group_class(rs, 0)


@pytest.mark.parametrize("name", ["A1", "A2", "B2"])
def test_table_shape(name):
    rs = build_root_system(name)
    order = rs.weyl_order
    for I in subsets(rs):
        table = orbit_closure_cells(rs, I)
        assert len(table) == order**2
        brute = Counter(n for _, _, n in table.entries())
        assert table.histogram() == [brute[d] for d in range(max(brute) + 1)]
        assert sum(table.histogram()) == order**2
        assert table.max_dim == 2 * rs.num_positive + len(I)
        assert table[(identity(rs), longest_element(rs))] == table.max_dim
        assert orbit_closure_motive(rs, I) == motive_of_cells(table.as_cell_decomposition())


def test_support_interpretation_breaks_duality_on_a2():
    rs = build_root_system("A2")
    full = ParabolicSubset.full(rs)
    assert hist(rs, 1, 2, interpretation="support") == [1, 4, 6, 7, 6, 5, 4, 2, 1]
    motive = orbit_closure_motive(rs, full, Interpretation.SUPPORT)
    assert not self_duality_check(motive, 8)


def test_cell_cap():
    rs = build_root_system("F4")
    with pytest.raises(SizeGuardError):
        orbit_class(rs, ParabolicSubset.full(rs))
    with pytest.raises(SizeGuardError):
        orbit_closure_cells(build_root_system("A3"), P(build_root_system("A3")), cap=100)


def test_f4_closed_orbit_with_explicit_cap():
    rs = build_root_system("F4")
    table = orbit_closure_cells(rs, P(rs, 1, 2, 3, 4))
    assert sum(table.histogram()) == 1152**2
    assert table.histogram() == table.histogram()[::-1]


def test_boundary_configuration_examples():
    a1 = build_root_system("A1")
    c = boundary_configuration(a1)
    assert [comp.cls for comp in c.components] == [1 + 2 * L + L**2]
    a2 = build_root_system("A2")
    c = boundary_configuration(a2)
    divisor = LPolynomial.from_list([1, 3, 6, 8, 8, 6, 3, 1])
    closed = LPolynomial.from_list([1, 4, 8, 10, 8, 4, 1])
    assert [comp.cls for comp in c.components] == [divisor, divisor]
    assert c.intersections == {frozenset({1, 2}): closed}
    assert validate_configuration(c).valid
    assert union_class(c) == LPolynomial.from_list([1, 2, 4, 6, 8, 8, 5, 2])
    assert len(boundary_configuration(build_root_system("B3")).components) == 3


@pytest.mark.parametrize("name", TYPES)
def test_gysin_shadow(name):
    rs = build_root_system(name)
    closure = euler_class(orbit_closure_motive(rs, ParabolicSubset.full(rs)))
    assert closure - union_class(boundary_configuration(rs)) == reductive_group_class(rs, 0)


def test_pure_coefficients_of_divisor():
    rs = build_root_system("A2")
    assert pure_coefficients(orbit_closure_motive(rs, P(rs, 2))) == [1, 3, 6, 8, 8, 6, 3, 1]
