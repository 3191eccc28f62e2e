import random

import pytest

from opdet.endofunctions import EndoFunction, all_functions, is_acyclic, is_bijective, random_acyclic_function
from opdet.expansion import S_f, coefficient_direct
from opdet.limits import DomainError
from opdet.partitions import (
    OrderedPartition,
    enumerate_ordered_partitions,
    lower_set_cube,
    precequals,
    singleton_partitions,
    stirling_alternating_identity,
)
from opdet.permutahedron import (
    FaceSet,
    all_faces,
    euler_characteristic,
    gamma_f,
    satisfies_halfspace,
    vertex_coordinates,
)

P = OrderedPartition.parse


def test_vertex_examples():
    assert vertex_coordinates(P("1/2/3")) == (1, 2, 3)
    assert vertex_coordinates(P("3/1/2")) == (2, 3, 1)
    for A in singleton_partitions(3):
        assert sum(vertex_coordinates(A)) == 6
    with pytest.raises(ValueError):
        vertex_coordinates(P("12/3"))


def test_vertices_are_permutations():
    for n in range(1, 6):
        pts = [vertex_coordinates(A) for A in singleton_partitions(n)]
        assert len(set(pts)) == len(pts)
        for x in pts:
            assert sorted(x) == list(range(1, n + 1))
            assert sum(x) == n * (n + 1) // 2


def test_halfspace_examples():
    assert satisfies_halfspace(P("1/2/3"), 1, 2)
    assert satisfies_halfspace(P("3/1/2"), 3, 1)
    assert not satisfies_halfspace(P("2/1"), 1, 2)
    with pytest.raises(ValueError):
        satisfies_halfspace(P("1/2"), 1, 3)


@pytest.mark.parametrize("n", range(1, 7))
def test_halfspace_equals_precequals(n):
    for A in singleton_partitions(n):
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                assert satisfies_halfspace(A, i, j) == precequals(A, i, j)


def test_euler_examples():
    assert euler_characteristic([]) == 0
    assert euler_characteristic(lower_set_cube(P("2/3/1"))) == 0
    for n in range(1, 9):
        chi = euler_characteristic(all_faces(n))
        assert chi == 1 == stirling_alternating_identity(n)


def test_faceset_rejects_mixed_n():
    with pytest.raises(ValueError):
        FaceSet(2, frozenset({P("1/2"), P("123")}))
    fs = all_faces(2)
    assert len(fs) == 3 and P("12") in fs


def test_gamma_examples():
    assert euler_characteristic(gamma_f(EndoFunction([1, 1, 1]))) == 0
    assert euler_characteristic(gamma_f(EndoFunction([1, 1, 3, 3]))) == 0
    ident = gamma_f(EndoFunction.identity(4))
    assert ident.faces == all_faces(4).faces
    assert euler_characteristic(ident) == 1
    with pytest.raises(DomainError):
        gamma_f(EndoFunction([2, 1]))


@pytest.mark.parametrize("n", range(1, 5))
def test_gamma_chi_is_coefficient(n):
    for f in all_functions(n):
        if is_acyclic(f):
            g = gamma_f(f)
            assert g.faces == S_f(f)
            chi = euler_characteristic(g)
            assert chi == coefficient_direct(f)
            assert chi == (1 if is_bijective(f) else 0)


def test_gamma_chi_sampled_n5():
    rng = random.Random(5)
    for _ in range(40):
        f = random_acyclic_function(5, rng)
        assert euler_characteristic(gamma_f(f)) == (1 if is_bijective(f) else 0)


def test_face_dimensions():
    faces = list(enumerate_ordered_partitions(3))
    dims = sorted(3 - B.r for B in faces)
    assert dims.count(0) == 6 and dims.count(1) == 6 and dims.count(2) == 1
