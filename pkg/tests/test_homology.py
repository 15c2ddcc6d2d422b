"""
Tests for representations, projective covers, translations and the
trace, adjunction and Φ/Ψ constructions.
"""

import random

import pytest

REGULAR_C2 = [[[1, 0], [0, 1]], [[0, 1], [1, 0]]]


@pytest.fixture
def a2_algebras(a2_quiver, f2):
    from src.homology.representations import quiver_algebras

    return quiver_algebras(a2_quiver, f2)


class TestRepresentations:
    """Representations of EI quivers and their modules over KC."""

    def test_data_representation_is_locally_projective(self, b2_algebras):
        from src.homology.representations import is_locally_projective, make_representation

        rep = make_representation(b2_algebras, [REGULAR_C2, [[[1]]]], [[[1, 0], [0, 1]]], name="P")
        assert rep.dimension_vector() == [2, 1]
        assert rep.check() == (True, None)
        assert is_locally_projective(rep)

    def test_unbalanced_map_rejected(self, b2_algebras):
        from src.errors import ModuleError
        from src.homology.representations import make_representation

        with pytest.raises(ModuleError):
            make_representation(b2_algebras, [REGULAR_C2, [[[1]]]], [[[1, 0], [0, 0]]])

    def test_wrong_shape_rejected(self, b2_algebras):
        from src.errors import ModuleError
        from src.homology.representations import make_representation

        with pytest.raises(ModuleError):
            make_representation(b2_algebras, [REGULAR_C2, [[[1]]]], [[[1], [0]]])

    def test_module_dimension_vector(self, b2_algebras):
        from src.homology.representations import make_representation, rep_to_module

        rep = make_representation(b2_algebras, [REGULAR_C2, [[[1]]]], [[[1, 0], [0, 1]]])
        module = rep_to_module(rep)
        assert module.algebra is b2_algebras.algebra
        assert module.dimension_vector() == [2, 1]
        assert module.check_axioms() == (True, None)

    def test_random_representations(self, b2_algebras):
        from src.homology.representations import is_locally_projective, random_representation

        for seed in range(5):
            rep = random_representation(b2_algebras, random.Random(seed))
            assert rep.check() == (True, None)
            assert is_locally_projective(rep)

    def test_projective_summands_over_f3(self, b2_quiver, f3):
        from src.homology.covers import is_projective
        from src.homology.representations import quiver_algebras, random_projective_summand

        # F_3 C_2 = trivial + sign, so a summand of A can have dimension 1
        algebra = quiver_algebras(b2_quiver, f3).vertex_algebras[0]
        dims = set()
        for seed in range(30):
            summand = random_projective_summand(algebra, random.Random(seed))
            assert summand.dim in (0, 1, 2)
            assert summand.dim == 0 or is_projective(summand)
            dims.add(summand.dim)
        assert 1 in dims

    def test_random_representations_with_non_free_vertex_modules(self, b2_quiver, f3):
        from src.homology.phi_psi import PhiPsi
        from src.homology.representations import is_locally_projective, quiver_algebras, random_representation, rep_to_module
        from src.homology.translations import tau_hom, tau_minimal, tau_standard

        algebras = quiver_algebras(b2_quiver, f3)
        non_free = []
        for seed in range(30):
            rep = random_representation(algebras, random.Random(seed))
            assert rep.check() == (True, None)
            assert is_locally_projective(rep)
            # free modules over the C_2 vertex have even dimension
            if rep.vertex_modules[0].dim % 2:
                non_free.append(rep)
        assert non_free

        rep = non_free[0]
        reference = tau_minimal(rep_to_module(rep)).dimension_vector()
        assert tau_standard(rep).dimension_vector() == reference
        assert tau_hom(rep).dimension_vector() == reference
        assert PhiPsi(rep).check_diagram() == (True, None)

    def test_trivial_vertex_module_is_not_locally_projective(self, b2_algebras):
        from src.homology.representations import is_locally_projective, simple_representation

        assert not is_locally_projective(simple_representation(b2_algebras, 0))
        assert is_locally_projective(simple_representation(b2_algebras, 1))


class TestCovers:
    """Projective covers and homological dimension tests."""

    def test_cover_of_simple(self, a2_algebras):
        from src.homology.covers import projective_cover
        from src.homology.representations import rep_to_module, simple_representation

        cover = projective_cover(rep_to_module(simple_representation(a2_algebras, 0)))
        assert cover.cover.dimension_vector() == [1, 1]
        assert cover.kernel.dimension_vector() == [0, 1]

    def test_projective_and_injective(self, a2_algebras):
        from src.algebra.modules import projective_module
        from src.homology.covers import is_injective, is_projective
        from src.homology.representations import rep_to_module, simple_representation

        p1, _ = projective_module(a2_algebras.algebra, 0)
        s1 = rep_to_module(simple_representation(a2_algebras, 0))
        assert is_projective(p1)
        assert is_injective(p1)
        assert not is_projective(s1)
        assert is_injective(s1)

    def test_path_algebra_is_hereditary(self, a2_algebras):
        from src.homology.covers import injective_dimension_at_most_one, projective_dimension_at_most_one
        from src.homology.representations import rep_to_module, simple_representation

        for i in range(2):
            module = rep_to_module(simple_representation(a2_algebras, i))
            assert projective_dimension_at_most_one(module)
            assert injective_dimension_at_most_one(module)

    def test_non_projective_vertex_module(self, b2_algebras):
        from src.homology.covers import injective_dimension_at_most_one, projective_dimension_at_most_one
        from src.homology.representations import rep_to_module, simple_representation

        module = rep_to_module(simple_representation(b2_algebras, 0))
        assert not projective_dimension_at_most_one(module)
        assert not injective_dimension_at_most_one(module)


class TestIsomorphism:
    """Randomized isomorphism checks."""

    def test_same_projective(self, a2_algebras):
        from src.algebra.modules import projective_module
        from src.homology.iso import IsoVerdict, module_iso_check

        first, _ = projective_module(a2_algebras.algebra, 0)
        second, _ = projective_module(a2_algebras.algebra, 0)
        assert module_iso_check(first, second, random.Random(0), retries=64) == IsoVerdict.ISO

    def test_different_dimension_vectors(self, a2_algebras):
        from src.homology.iso import IsoVerdict, module_iso_check
        from src.homology.representations import rep_to_module, simple_representation

        s1 = rep_to_module(simple_representation(a2_algebras, 0))
        s2 = rep_to_module(simple_representation(a2_algebras, 1))
        assert module_iso_check(s1, s2) == IsoVerdict.NOT_ISO

    def test_different_algebras(self, a2_algebras, b2_algebras):
        from src.algebra.modules import regular_module
        from src.errors import ModuleError
        from src.homology.iso import module_iso_check

        with pytest.raises(ModuleError):
            module_iso_check(regular_module(a2_algebras.algebra), regular_module(b2_algebras.algebra))

    def test_verdict_values(self):
        from src.homology.iso import IsoVerdict

        assert [v.value for v in IsoVerdict] == ["iso", "not-iso", "not-certified"]


class TestExtBimodule:
    """Ext^1(DΛ, Λ) against Π_1."""

    def test_a2(self, a2_algebras):
        from src.homology.ext import ext_bimodule
        from src.homology.iso import IsoVerdict, bimodule_iso_check

        ext = ext_bimodule(a2_algebras.algebra)
        assert ext.dim == 1
        assert ext.block_dims() == a2_algebras.pi_one.block_dims()
        assert bimodule_iso_check(ext, a2_algebras.pi_one, random.Random(0), retries=64) == IsoVerdict.ISO

    def test_b2_dimensions(self, b2_algebras):
        from src.homology.ext import ext_bimodule

        ext = ext_bimodule(b2_algebras.algebra)
        assert ext.dim == b2_algebras.pi_one.dim
        assert ext.block_dims() == b2_algebras.pi_one.block_dims()


class TestTranslations:
    """τ and τ⁻ by every route."""

    def test_tau_of_simple_source(self, a2_algebras):
        from src.homology.representations import rep_to_module, simple_representation
        from src.homology.translations import tau_hom, tau_minimal, tau_standard

        rep = simple_representation(a2_algebras, 0)
        assert tau_minimal(rep_to_module(rep)).dimension_vector() == [0, 1]
        assert tau_standard(rep).dimension_vector() == [0, 1]
        assert tau_hom(rep).dimension_vector() == [0, 1]

    def test_tau_of_projective_vanishes(self, a2_algebras):
        from src.algebra.modules import projective_module
        from src.homology.translations import tau_minimal

        p1, _ = projective_module(a2_algebras.algebra, 0)
        assert tau_minimal(p1).dim == 0

    def test_tau_inverse_of_simple_sink(self, a2_algebras):
        from src.homology.representations import rep_to_module, simple_representation
        from src.homology.translations import tau_inverse_ext, tau_inverse_minimal, tau_inverse_tensor

        rep = simple_representation(a2_algebras, 1)
        module = rep_to_module(rep)
        assert tau_inverse_minimal(module).dimension_vector() == [1, 0]
        assert tau_inverse_ext(module).dimension_vector() == [1, 0]
        assert tau_inverse_tensor(module, rep).dimension_vector() == [1, 0]

    def test_ar_translate_returns_representation(self, a2_algebras):
        from src.homology.representations import Representation, simple_representation
        from src.homology.translations import TauRoute, ar_translate, ar_translate_inverse

        tau = ar_translate(simple_representation(a2_algebras, 0), TauRoute.STANDARD)
        assert isinstance(tau, Representation)
        assert tau.dimension_vector() == [0, 1]
        assert ar_translate_inverse(tau).dimension_vector() == [1, 0]

    def test_tau_inverse_needs_local_projectivity(self, b2_algebras):
        from src.errors import ModuleError
        from src.homology.representations import simple_representation
        from src.homology.translations import ar_translate_inverse

        with pytest.raises(ModuleError):
            ar_translate_inverse(simple_representation(b2_algebras, 0))

    def test_routes_agree_on_b2(self, b2_algebras):
        from src.homology.representations import random_representation, rep_to_module
        from src.homology.translations import tau_hom, tau_minimal, tau_standard

        rep = random_representation(b2_algebras, random.Random(3))
        reference = tau_minimal(rep_to_module(rep)).dimension_vector()
        assert tau_standard(rep).dimension_vector() == reference
        assert tau_hom(rep).dimension_vector() == reference


class TestStandardResolution:
    """The standard resolution of locally projective representations."""

    def test_exact_on_a2(self, a2_algebras):
        from src.homology.representations import simple_representation
        from src.homology.resolution import standard_resolution

        resolution = standard_resolution(simple_representation(a2_algebras, 0))
        assert resolution.check_exactness() == (True, None)
        assert resolution.p0.dim == resolution.p1.dim + 1

    def test_maps_must_be_module_maps(self, a2_algebras, f2):
        from dataclasses import replace

        from src.algebra.modules import is_module_map
        from src.homology.representations import simple_representation
        from src.homology.resolution import standard_resolution

        resolution = standard_resolution(simple_representation(a2_algebras, 0))
        assert resolution.p0.dim == 2
        # Hom(P_1, S_1) is one-dimensional, so only one nonzero 1 x 2 matrix over F_2 is a module map
        candidates = [[[f2.one, f2.zero]], [[f2.zero, f2.one]], [[f2.one, f2.one]]]
        broken = [mu for mu in candidates if not is_module_map(mu, resolution.p0, resolution.module)]
        assert len(broken) == 2
        for mu in broken:
            ok, error = replace(resolution, mu=mu).check_exactness()
            assert ok is False
            assert "module map" in error

    def test_exact_on_b2(self, b2_algebras):
        from src.homology.representations import random_representation
        from src.homology.resolution import standard_resolution

        rep = random_representation(b2_algebras, random.Random(7))
        assert standard_resolution(rep).check_exactness() == (True, None)


class TestTraceAndAdjunction:
    """Dual bases, trace pairings and the arrow adjunction."""

    def test_dual_basis_of_group_algebra(self, b2_algebras):
        from src.algebra.modules import regular_module
        from src.homology.trace import DualBasis

        assert DualBasis(regular_module(b2_algebras.vertex_algebras[0])).check() == (True, None)

    def test_dual_basis_needs_group_algebra(self, b2_algebras):
        from src.algebra.modules import regular_module
        from src.errors import ModuleError
        from src.homology.trace import DualBasis

        with pytest.raises(ModuleError):
            DualBasis(regular_module(b2_algebras.algebra))

    def test_trace_pairing_is_perfect(self, b2_algebras, f2):
        from src.algebra.modules import regular_module
        from src.homology.representations import trivial_module
        from src.homology.trace import trace_pairing

        algebra = b2_algebras.vertex_algebras[0]
        projective = regular_module(algebra)
        assert trace_pairing(projective, projective).is_bijective(f2)
        assert trace_pairing(trivial_module(algebra), projective).is_bijective(f2)

    def test_adjunction_inverse(self, b2_algebras, b2_quiver):
        from src.algebra.modules import regular_module
        from src.homology.trace import Adjunction

        quiver = b2_quiver.quiver
        s, t = quiver.source(0), quiver.target(0)
        source_alg, target_alg = b2_algebras.vertex_algebras[s], b2_algebras.vertex_algebras[t]
        adjunction = Adjunction(
            b2_quiver.bisets[0], target_alg, source_alg, regular_module(source_alg), regular_module(target_alg)
        )
        assert adjunction.check_inverse() == (True, None)


class TestPhiPsi:
    """Φ, Ψ and the kernel of Φ."""

    def test_diagram_commutes(self, b2_algebras):
        from src.homology.phi_psi import PhiPsi
        from src.homology.representations import random_representation

        rep = random_representation(b2_algebras, random.Random(5))
        assert PhiPsi(rep).check_diagram() == (True, None)

    def test_kernel_matches_tau(self, a2_algebras):
        from src.homology.phi_psi import phi_map
        from src.homology.representations import simple_representation
        from src.homology.translations import tau_hom

        rep = simple_representation(a2_algebras, 0)
        phi = phi_map(rep)
        assert phi.kernel.dimension_vector() == tau_hom(rep).dimension_vector()
        assert phi.rank == phi.source.dim - phi.kernel.dim


class TestRadical:
    """Semisimplicity and the regular representation."""

    def test_group_algebra_semisimplicity(self, f2, f3):
        from src.algebra.algebra import group_algebra
        from src.groups.groups import cyclic_group
        from src.homology.radical import is_semisimple

        assert not is_semisimple(group_algebra(cyclic_group(2), f2))
        assert is_semisimple(group_algebra(cyclic_group(2), f3))

    def test_regular_representation(self, a2_algebras):
        from src.homology.representations import is_locally_projective, regular_representation

        rep = regular_representation(a2_algebras)
        assert rep.dimension_vector() == [1, 2]
        assert is_locally_projective(rep)


class TestFunctors:
    """Duality, the Nakayama functor, injective envelopes and Ext^1 on A₂."""

    def test_dual_module(self, a2_algebras):
        from src.algebra.modules import dual_module, projective_module

        p1, _ = projective_module(a2_algebras.algebra, 0)
        dual = dual_module(p1)
        assert dual.algebra is a2_algebras.algebra.opposite()
        assert dual.dim == 2
        assert dual.check_axioms() == (True, None)

    def test_nakayama_sends_projectives_to_injectives(self, a2_algebras):
        from src.algebra.modules import projective_module
        from src.homology.covers import is_injective
        from src.homology.functors import nakayama

        p1, _ = projective_module(a2_algebras.algebra, 0)
        p2, _ = projective_module(a2_algebras.algebra, 1)
        assert nakayama(p1).dimension_vector() == [1, 0]
        assert nakayama(p2).dimension_vector() == [1, 1]
        assert is_injective(nakayama(p2))

    def test_nakayama_needs_projective(self, a2_algebras):
        from src.errors import ModuleError
        from src.homology.functors import nakayama
        from src.homology.representations import rep_to_module, simple_representation

        with pytest.raises(ModuleError):
            nakayama(rep_to_module(simple_representation(a2_algebras, 0)))

    def test_injective_envelope_of_sink_simple(self, a2_algebras):
        from src.homology.covers import injective_envelope
        from src.homology.representations import rep_to_module, simple_representation

        envelope = injective_envelope(rep_to_module(simple_representation(a2_algebras, 1)))
        assert envelope.envelope.dimension_vector() == [1, 1]
        assert envelope.cokernel.dimension_vector() == [1, 0]

    def test_ext1_between_simples(self, a2_algebras):
        from src.homology.ext import ext1
        from src.homology.representations import rep_to_module, simple_representation

        s1 = rep_to_module(simple_representation(a2_algebras, 0))
        s2 = rep_to_module(simple_representation(a2_algebras, 1))
        assert ext1(s1, s2).dimension == 1
        assert ext1(s2, s1).dimension == 0
