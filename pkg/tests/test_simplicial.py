import pytest
from hypothesis import given, settings

from conftest import acyclic_digraphs, complexes
from oracles import rational_reduced_betti
from mpx.digraph import blow_up, gen_family, make_digraph, underlying
from mpx.errors import UnsupportedParameter
from mpx.homology import reduced_homology
from mpx.multipath import multipath_complex
from mpx.simplicial import (
    SimplicialComplex,
    are_isomorphic,
    cone,
    cross_polytope_subcomplex,
    from_facets,
    is_subcomplex,
    join,
    matching_complex,
    sphere0,
    suspension,
)


def test_from_facets_closure():
    x = from_facets([[0, 1, 2], [2, 3]])
    assert x.f_vector() == [4, 4, 1]
    assert x.facets == ((0, 1, 2), (2, 3))
    assert x.is_closed()


def test_redundant_facets_collapse():
    assert from_facets([[0, 1], [0], [1, 0]]).facets == ((0, 1),)


def test_empty_and_simplex():
    e = SimplicialComplex.empty()
    assert e.is_empty() and e.dim == -1 and e.f_vector() == []
    s = SimplicialComplex.simplex(3)
    assert s.f_vector() == [4, 6, 4, 1]
    assert s.euler_characteristic() == 1


def test_link():
    x = from_facets([[0, 1, 2], [0, 3]])
    assert x.link([0]).facets == ((1, 2), (3,))
    assert x.link([1, 2]).facets == ((0,),)
    assert x.link([1, 3]).is_empty()


def test_json_round_trip():
    x = multipath_complex(gen_family("BP", 3))
    assert SimplicialComplex.from_json(x.to_json()) == x
    assert x.to_json()["n_vertices"] == 8


class TestMatching:
    def test_path(self):
        # P_4 = a-b-c-d: matchings {ab, cd} plus bc alone
        h = underlying(gen_family("I", 3))
        assert matching_complex(h).facets == ((0, 2), (1,))

    def test_triangle_is_three_points(self):
        h = underlying(make_digraph(3, [(0, 1), (1, 2), (0, 2)]))
        assert matching_complex(h).facets == ((0,), (1,), (2,))

    def test_k33_faces(self):
        g = make_digraph(6, [(a, b) for a in range(3) for b in range(3, 6)])
        x = matching_complex(underlying(g))
        assert x.f_vector() == [9, 18, 6]


class TestConstructions:
    def test_suspension_of_point(self):
        x = suspension(from_facets([[0]]))
        assert x.facets == ((0, 1), (0, 2))

    def test_cone_is_contractible(self):
        x = cone(from_facets([[0], [1], [2, 3]]))
        assert reduced_homology(x).nonzero_degrees() == []

    def test_join_f_polynomial(self):
        x, y = from_facets([[0, 1], [2]]), sphere0()
        fx, fy = [1] + x.f_vector(), [1] + y.f_vector()
        prod = [0] * (len(fx) + len(fy) - 1)
        for i, a in enumerate(fx):
            for j, b in enumerate(fy):
                prod[i + j] += a * b
        assert [1] + join(x, y).f_vector() == prod

    def test_join_with_empty(self):
        x = from_facets([[0, 1]])
        assert join(x, SimplicialComplex.empty()) == x

    def test_octahedron(self):
        octa = join(join(sphere0(), sphere0()), sphere0())
        assert octa.f_vector() == [6, 12, 8]
        assert reduced_homology(octa).betti_numbers() == {2: 1}


@settings(max_examples=60, deadline=None)
@given(complexes(max_vertices=5, max_facets=4), complexes(max_vertices=4, max_facets=3))
def test_join_reduced_euler(x, y):
    def chi(z):
        return z.euler_characteristic() - 1
    assert chi(join(x, y)) == -chi(x) * chi(y)


class TestCrossPolytope:
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
    def test_prime(self, n):
        x = cross_polytope_subcomplex("PRIME", n)
        k = (n + 1) // 2
        assert is_subcomplex(x, multipath_complex(gen_family("BL", n)))
        assert len(x.facets) == 2 ** k
        assert reduced_homology(x).betti_numbers() == {k - 1: 1}

    @pytest.mark.parametrize("n", [4, 8])
    def test_double_prime(self, n):
        x = cross_polytope_subcomplex("DOUBLE_PRIME", n)
        k = n // 2
        assert is_subcomplex(x, multipath_complex(gen_family("BL", n)))
        assert reduced_homology(x).betti_numbers() == {k - 1: 1}

    @pytest.mark.parametrize("variant, n", [("DOUBLE_PRIME", 6), ("PRIME", 0), ("OTHER", 3)])
    def test_rejects(self, variant, n):
        with pytest.raises(UnsupportedParameter):
            cross_polytope_subcomplex(variant, n)


class TestIsomorphism:
    def test_tt3(self):
        g = gen_family("TT", 3)
        x = multipath_complex(g)
        y = matching_complex(underlying(blow_up(g)))
        iso = are_isomorphic(x, y)
        assert iso is not None
        assert x.relabel(iso) == y

    def test_distinguishes(self):
        assert are_isomorphic(from_facets([[0], [1]]), from_facets([[0]])) is None
        # same f-vector, different shape: path of 3 edges vs star of 3 edges
        path = from_facets([[0, 1], [1, 2], [2, 3]])
        star = from_facets([[0, 1], [0, 2], [0, 3]])
        assert are_isomorphic(path, star) is None

    def test_relabelled(self):
        x = from_facets([[0, 1, 2], [2, 3], [3, 4], [4, 0]])
        perm = {0: 3, 1: 0, 2: 4, 3: 1, 4: 2}
        iso = are_isomorphic(x, x.relabel(perm))
        assert iso is not None and x.relabel(iso) == x.relabel(perm)

    def test_empty(self):
        assert are_isomorphic(SimplicialComplex.empty(), SimplicialComplex.empty()) == {}


@settings(max_examples=60, deadline=None)
@given(acyclic_digraphs(max_vertices=6, max_edges=10))
def test_dag_multipath_is_matching_complex(g):
    x = multipath_complex(g)
    y = matching_complex(underlying(blow_up(g)))
    iso = are_isomorphic(x, y)
    assert iso is not None and x.relabel(iso) == y


@settings(max_examples=60, deadline=None)
@given(complexes())
def test_euler_matches_betti(x):
    betti = rational_reduced_betti(list(x))
    assert x.euler_characteristic() - 1 == sum((-1) ** d * b for d, b in betti.items())
