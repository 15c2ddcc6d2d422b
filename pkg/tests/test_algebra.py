"""
Tests for algebras, modules, bimodules, the graded quotient engine and
preprojective algebras.
"""

import random

import pytest

from tests.conftest import brute_force_preprojective_dims


class TestAlgebras:
    """Structure constants of group and category algebras."""

    def test_group_algebra(self, f2):
        from src.algebra.algebra import group_algebra
        from src.groups.groups import cyclic_group

        algebra = group_algebra(cyclic_group(2), f2)
        assert algebra.dim == 2
        assert algebra.n_vertices == 1
        assert algebra.check_associativity() == (True, None)

    def test_category_algebra_of_b2(self, b2_algebras):
        algebra = b2_algebras.algebra
        assert algebra.dim == 5
        assert algebra.check_idempotents() == (True, None)
        assert algebra.check_associativity() == (True, None)

    def test_vertex_group_algebra(self, b2_quiver, f2):
        from src.algebra.algebra import vertex_group_algebra
        from src.quivers.category import build_category

        algebra, inclusion = vertex_group_algebra(build_category(b2_quiver), f2)
        assert algebra.dim == 3
        assert len(inclusion) == 3


class TestModules:
    """Modules over category algebras."""

    def test_projectives_of_a2(self, a2_quiver, f2):
        from src.algebra.modules import projective_module, regular_module
        from src.homology.representations import quiver_algebras

        algebra = quiver_algebras(a2_quiver, f2).algebra
        p1, _ = projective_module(algebra, 0)
        p2, _ = projective_module(algebra, 1)
        assert p1.dimension_vector() == [1, 1]
        assert p2.dimension_vector() == [0, 1]
        assert regular_module(algebra).dimension_vector() == [1, 2]

    def test_hom_from_projective(self, a2_quiver, f2):
        from src.algebra.modules import hom_space, projective_module, regular_module
        from src.homology.representations import quiver_algebras

        algebra = quiver_algebras(a2_quiver, f2).algebra
        p1, _ = projective_module(algebra, 0)
        # Hom(A e_1, M) = e_1 M
        assert len(hom_space(p1, regular_module(algebra))) == 1
        assert len(hom_space(p1, p1)) == 1

    def test_kernel_and_cokernel(self, a2_quiver, f2):
        from src.algebra.modules import cokernel, hom_space, kernel, projective_module
        from src.homology.representations import quiver_algebras

        algebra = quiver_algebras(a2_quiver, f2).algebra
        p1, _ = projective_module(algebra, 0)
        p2, _ = projective_module(algebra, 1)
        (inclusion,) = hom_space(p2, p1)
        ker, _ = kernel(inclusion, p2, p1)
        coker, _ = cokernel(inclusion, p2, p1)
        assert ker.dim == 0
        assert coker.dimension_vector() == [1, 0]


class TestGradedEngine:
    """The graded quotient engine on path algebras."""

    def test_path_algebra_without_relations(self, f2):
        from src.algebra.graded import graded_quotient_dims, path_algebra_quotient
        from src.quivers.quiver import make_quiver

        q = make_quiver(3, [("a", 0, 1), ("b", 1, 2)])
        result = graded_quotient_dims(path_algebra_quotient(q, [], f2, maxdeg=4))
        assert result.dims == [3, 2, 1, 0]
        assert result.stabilized_at == 3
        assert result.total == 6

    def test_monomial_relation(self, f2):
        from src.algebra.graded import graded_quotient_dims, path_algebra_quotient
        from src.quivers.quiver import make_quiver

        q = make_quiver(3, [("a", 0, 1), ("b", 1, 2)])
        relation = {q.path([1, 0]): f2.one}
        result = graded_quotient_dims(path_algebra_quotient(q, [relation], f2, maxdeg=4))
        assert result.dims == [3, 2, 0]

    def test_inhomogeneous_relation_rejected(self, f2):
        from src.algebra.graded import path_algebra_quotient
        from src.errors import AlgebraError
        from src.quivers.quiver import make_quiver

        q = make_quiver(3, [("a", 0, 1), ("b", 1, 2), ("c", 0, 2)])
        relation = {q.path([1, 0]): f2.one, q.path([2]): f2.one}
        with pytest.raises(AlgebraError):
            path_algebra_quotient(q, [relation], f2, maxdeg=3)

    def test_unknown_grading(self, f2):
        from src.algebra.graded import path_algebra_quotient
        from src.errors import AlgebraError
        from src.quivers.quiver import make_quiver

        with pytest.raises(AlgebraError):
            path_algebra_quotient(make_quiver(1, []), [], f2, grading="bogus")

    def test_maxdeg_beyond_ambient(self, f2):
        from src.algebra.graded import graded_quotient_dims, path_algebra_quotient
        from src.errors import AlgebraError
        from src.quivers.quiver import make_quiver

        q = make_quiver(2, [("a", 0, 1), ("b", 0, 1)])
        presentation = path_algebra_quotient(q, [], f2, maxdeg=2)
        with pytest.raises(AlgebraError):
            graded_quotient_dims(presentation, 3)


class TestPreprojective:
    """Graded dimensions of Π(Q, X)."""

    def test_classical_a2(self, a2_quiver, f2):
        from src.algebra.graded import graded_quotient_dims
        from src.algebra.preprojective import preprojective_presentation

        result = graded_quotient_dims(preprojective_presentation(a2_quiver, f2, 4))
        assert result.dims == [3, 1, 0]
        assert result.total == 4
        assert result.block_dims[1] == [[0, 1], [0, 0]]

    def test_degree_zero_is_category_algebra(self, b2_quiver, f2):
        from src.algebra.graded import graded_quotient_dims
        from src.algebra.preprojective import preprojective_presentation

        result = graded_quotient_dims(preprojective_presentation(b2_quiver, f2, 0), 0)
        assert result.dims == [5]

    @pytest.mark.parametrize("n_vertices,arrows,maxdeg", [
        (2, [(0, 1)], 4),
        (3, [(0, 1), (1, 2)], 6),
        (3, [(1, 0), (1, 2)], 6),
        (2, [(0, 1), (0, 1)], 4),
    ])
    def test_matches_path_enumeration(self, rationals, n_vertices, arrows, maxdeg):
        from src.algebra.graded import graded_quotient_dims
        from src.algebra.preprojective import preprojective_presentation
        from src.quivers.ei_quiver import trivial_assignment
        from src.quivers.quiver import make_quiver

        quiver = make_quiver(n_vertices, [(f"a{k}", s, t) for k, (s, t) in enumerate(arrows)])
        engine = graded_quotient_dims(preprojective_presentation(trivial_assignment(quiver), rationals, maxdeg))
        assert engine.dims == brute_force_preprojective_dims(n_vertices, arrows, maxdeg)

    def test_kronecker_does_not_stabilize(self, kronecker_quiver, rationals):
        from src.algebra.graded import graded_quotient_dims
        from src.algebra.preprojective import preprojective_presentation

        result = graded_quotient_dims(preprojective_presentation(kronecker_quiver, rationals, 4))
        assert result.dims == brute_force_preprojective_dims(2, [(0, 1), (0, 1)], 4)
        assert result.dims[0] == 4
        assert not result.stabilized
        assert result.total is None

    def test_classical_a3_total(self, a3_quiver, f3):
        from src.algebra.graded import graded_quotient_dims
        from src.algebra.preprojective import preprojective_presentation

        result = graded_quotient_dims(preprojective_presentation(a3_quiver, f3, 6))
        assert result.stabilized
        assert result.total == 10

    def test_vertex_components_generate_same_ideal(self, b2_quiver, f2):
        from src.algebra.graded import graded_quotient_dims
        from src.algebra.preprojective import preprojective_presentation

        whole = graded_quotient_dims(preprojective_presentation(b2_quiver, f2, 6))
        split = graded_quotient_dims(preprojective_presentation(b2_quiver, f2, 6, per_vertex=True))
        assert whole.dims == split.dims
        assert whole.block_dims == split.block_dims

    def test_orbit_representatives_do_not_matter(self, g12_two_triple, f2):
        from src.algebra.graded import graded_quotient_dims
        from src.algebra.preprojective import preprojective_presentation
        from src.cartan.quivers import cartan_ei_quiver

        ei_quiver = cartan_ei_quiver(g12_two_triple)
        reference = graded_quotient_dims(preprojective_presentation(ei_quiver, f2, 4)).dims
        for seed in range(10):
            drawn = preprojective_presentation(ei_quiver, f2, 4, rng=random.Random(seed))
            assert graded_quotient_dims(drawn).dims == reference

    def test_rho_is_homogeneous_of_star_degree_one(self, b2_quiver, f2):
        from src.algebra.preprojective import rho_element
        from src.quivers.category import truncated_category
        from src.quivers.ei_quiver import double_ei_quiver

        double = double_ei_quiver(b2_quiver)
        category = truncated_category(double, 2)
        rho = rho_element(category, f2)
        assert rho
        for key in rho:
            morphism = category.morphisms[key]
            assert morphism.path.length == 2
            assert double.star_degree(morphism.path) == 1


class TestTensorStructure:
    """KC as a tensor algebra and Π as the tensor algebra of Π_1."""

    def test_category_algebra_is_tensor_algebra(self, a3_quiver, b2_quiver, f2):
        from src.algebra.preprojective import tensor_algebra_check
        from src.quivers.category import build_category

        assert tensor_algebra_check(build_category(a3_quiver), f2) == (True, None)
        assert tensor_algebra_check(build_category(b2_quiver), f2) == (True, None)

    def test_pi_one_of_a2(self, a2_quiver, f2):
        from src.homology.representations import quiver_algebras

        pi_one = quiver_algebras(a2_quiver, f2).pi_one
        assert pi_one.dim == 1
        assert pi_one.block_dims() == [[0, 1], [0, 0]]

    def test_tensor_power_dims_of_a2(self, a2_quiver, f2):
        from src.algebra.bimodule import tensor_power_dims
        from src.homology.representations import quiver_algebras

        assert tensor_power_dims(quiver_algebras(a2_quiver, f2).pi_one, 3) == [3, 1, 0, 0]

    def test_zeroth_tensor_power_is_the_algebra(self, a2_quiver, b2_algebras, f2):
        from src.algebra.bimodule import tensor_power, tensor_power_dims
        from src.homology.representations import quiver_algebras

        pi_one = quiver_algebras(a2_quiver, f2).pi_one
        assert tensor_power(pi_one, 0) == []
        assert tensor_power_dims(pi_one, 0) == [3]
        assert tensor_power_dims(b2_algebras.pi_one, 0) == [5]

    def test_tensor_power_rejects_negative(self, a2_quiver, f2):
        from src.algebra.bimodule import tensor_power
        from src.errors import AlgebraError
        from src.homology.representations import quiver_algebras

        with pytest.raises(AlgebraError):
            tensor_power(quiver_algebras(a2_quiver, f2).pi_one, -1)

    def test_b2_graded_dims_are_tensor_powers(self, b2_algebras, b2_quiver, f2):
        from src.algebra.bimodule import tensor_power_dims
        from src.algebra.graded import graded_quotient_dims
        from src.algebra.preprojective import preprojective_presentation
        from src.verifiers.preprojective import padded

        quotient = graded_quotient_dims(preprojective_presentation(b2_quiver, f2, 6), 6)
        assert padded(quotient.dims, 6) == tensor_power_dims(b2_algebras.pi_one, 6)

    def test_is_module_map(self, a2_quiver, f2):
        from src.algebra.modules import hom_space, is_module_map, projective_module, regular_module
        from src.homology.representations import quiver_algebras, rep_to_module, simple_representation

        algebras = quiver_algebras(a2_quiver, f2)
        p1, _ = projective_module(algebras.algebra, 0)
        regular = regular_module(algebras.algebra)
        assert all(is_module_map(f, p1, regular) for f in hom_space(p1, regular))

        # soc P1 = S2, so nothing nonzero goes S1 -> P1
        s1 = rep_to_module(simple_representation(algebras, 0))
        assert not is_module_map([[f2.one], [f2.one]], s1, p1)
