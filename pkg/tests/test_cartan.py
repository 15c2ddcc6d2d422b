"""
Tests for Cartan triples, the algebras H and Π(C, D, Ω), and the
comparison with preprojective algebras of EI quivers of Cartan type.
"""

import pytest

B2 = [[2, -1], [-2, 2]]
G2 = [[2, -1], [-3, 2]]


class TestCartanTriple:
    """Validation of (C, D, Ω)."""

    def test_valid_triple(self, b2_triple):
        assert b2_triple.n == 2
        assert b2_triple.g(0, 1) == 1
        assert b2_triple.f(0, 1) == 1
        assert b2_triple.f(1, 0) == 2
        assert b2_triple.omega_star == ((1, 0),)

    @pytest.mark.parametrize("C,D,omega,condition", [
        ([[2, -1], [-2, 2]], [2, 1, 1], [(0, 1)], "shape"),
        ([[2, -1], [-2, 2]], [0, 1], [(0, 1)], "symmetrizer"),
        ([[3, -1], [-2, 2]], [2, 1], [(0, 1)], "C1"),
        ([[2, 1], [-2, 2]], [2, 1], [(0, 1)], "C2"),
        ([[2, -1], [-2, 2]], [1, 1], [(0, 1)], "C3"),
        ([[2, -1], [-2, 2]], [2, 1], [], "O1"),
        ([[2, -1], [-1, 2]], [1, 1], [(0, 1), (1, 0)], "O2"),
    ])
    def test_violations(self, C, D, omega, condition):
        from src.cartan.triple import cartan_violations, validate_cartan
        from src.errors import CartanError

        assert condition in [name for name, _ in cartan_violations(C, D, omega)]
        with pytest.raises(CartanError) as exc_info:
            validate_cartan(C, D, omega)
        assert exc_info.value.condition == cartan_violations(C, D, omega)[0][0]

    def test_loop_in_orientation(self):
        from src.cartan.triple import cartan_violations

        names = [name for name, _ in cartan_violations([[2]], [1], [(0, 0)])]
        assert "O2" in names

    def test_to_dict_is_one_based(self, b2_triple):
        assert b2_triple.to_dict() == {"C": B2, "D": [2, 1], "Omega": [["1", "2"]]}


class TestDerivedTriple:
    """(C', D', Ω') from a triple and a characteristic."""

    def test_prime_power_case_is_relabelling(self, b2_triple):
        from src.cartan.triple import derived_triple, is_prime_power_case

        derived = derived_triple(b2_triple, 2)
        assert derived.is_relabelling
        assert derived.triple.C == ((2, -1), (-2, 2))
        assert derived.triple.D == (2, 1)
        assert derived.r == (1, 0)
        assert is_prime_power_case(b2_triple, 2)

    def test_characteristic_zero_unfolds(self, b2_triple):
        from src.cartan.triple import derived_triple, is_prime_power_case

        derived = derived_triple(b2_triple, 0)
        assert not derived.is_relabelling
        assert derived.index == ((0, 0), (0, 1), (1, 0))
        assert derived.triple.C == ((2, 0, -1), (0, 2, -1), (-1, -1, 2))
        assert derived.triple.D == (1, 1, 1)
        assert derived.triple.omega == ((0, 2), (1, 2))
        assert not is_prime_power_case(b2_triple, 0)

    def test_odd_characteristic(self, b2_triple):
        from src.cartan.triple import derived_triple

        derived = derived_triple(b2_triple, 3)
        assert derived.d == (2, 1)
        assert derived.triple.D == (1, 1, 1)

    def test_rejects_composite_characteristic(self, b2_triple):
        from src.cartan.triple import derived_triple
        from src.errors import CartanError

        with pytest.raises(CartanError):
            derived_triple(b2_triple, 4)


class TestCartanQuivers:
    """Q(C, Ω), Q°(C, Ω) and the EI quiver of Cartan type."""

    def test_quivers(self, b2_triple):
        from src.cartan.quivers import build_cartan_quivers

        quivers = build_cartan_quivers(b2_triple)
        assert quivers.plain.n_arrows == 1
        assert quivers.quiver.n_arrows == 3
        assert quivers.doubled.n_arrows == 4
        assert quivers.plain.source(0) == 1
        assert quivers.plain.target(0) == 0
        assert quivers.star_arrows() == [3]

    def test_ei_quiver(self, b2_quiver):
        assert [g.order for g in b2_quiver.groups] == [2, 1]
        assert b2_quiver.bisets[0].size == 2
        assert b2_quiver.is_action_free()

    def test_g_must_divide_symmetrizer(self):
        from src.cartan.quivers import cartan_ei_quiver
        from src.cartan.triple import validate_cartan
        from src.errors import CartanError

        triple = validate_cartan([[2, -2], [-2, 2]], [1, 1], [(0, 1)])
        with pytest.raises(CartanError) as exc_info:
            cartan_ei_quiver(triple)
        assert exc_info.value.condition == "symmetrizer"


class TestCartanAlgebras:
    """H(C, D, Ω) and Π(C, D, Ω)."""

    def test_h_of_b2(self, b2_triple, f2):
        from src.algebra.graded import graded_quotient_dims
        from src.cartan.algebras import algebra_H

        result = graded_quotient_dims(algebra_H(b2_triple, f2))
        assert result.dims == [3, 2, 0]
        assert result.total == 5

    def test_preprojective_degree_zero_is_h(self, b2_triple, f2):
        from src.algebra.graded import graded_quotient_dims
        from src.cartan.algebras import gls_preprojective

        result = graded_quotient_dims(gls_preprojective(b2_triple, f2, 6))
        assert result.dims[0] == 5
        assert result.stabilized

    def test_relation_names(self, b2_triple, f2):
        from src.cartan.algebras import gls_relations, relation_names
        from src.cartan.quivers import build_cartan_quivers

        quivers = build_cartan_quivers(b2_triple)
        names = relation_names(quivers, f2, gls_relations(quivers, f2))
        assert names
        assert all(isinstance(k, str) and isinstance(v, str) for r in names for k, v in r.items())


class TestComparison:
    """Π(Q°, X) against Π(C', D', Ω')."""

    def test_b2_over_f2(self, b2_triple, f2):
        from src.cartan.comparison import compare_cartan_sides

        report = compare_cartan_sides(b2_triple, f2, 8)
        assert report.case == "prime-power"
        assert report.category_side.degree_zero == 5
        assert report.cartan_side.degree_zero == 5
        assert report.passed, report.checks

    def test_b2_over_rationals(self, b2_triple, rationals):
        from src.cartan.comparison import compare_cartan_sides

        report = compare_cartan_sides(b2_triple, rationals, 6)
        assert report.case == "characteristic-0"
        assert report.cartan_side.dims.total == 10
        assert report.passed, report.checks

    def test_missing_roots_of_unity(self, f2):
        from src.cartan.comparison import compare_cartan_sides
        from src.cartan.triple import validate_cartan
        from src.errors import HypothesisError

        triple = validate_cartan(G2, [3, 1], [(0, 1)])
        with pytest.raises(HypothesisError):
            compare_cartan_sides(triple, f2, 4)

    async def test_async_matches_sync(self, b2_triple, f2):
        from src.cartan.comparison import compare_cartan_sides, compare_cartan_sides_async

        sync = compare_cartan_sides(b2_triple, f2, 6)
        concurrent = await compare_cartan_sides_async(b2_triple, f2, 6)
        assert concurrent.to_dict() == sync.to_dict()
        assert [c[:2] for c in concurrent.checks] == [c[:2] for c in sync.checks]


class TestCartanHelpers:
    """g_ij, f_ij and the pair of quivers Q, Q°."""

    def test_gij_fij(self):
        from src.cartan.triple import gij_fij

        g, f = gij_fij(B2)
        assert g == {(0, 1): 1, (1, 0): 1}
        assert f == {(0, 1): 1, (1, 0): 2}

        g, f = gij_fij([[2, -2], [-2, 2]])
        assert g == {(0, 1): 2, (1, 0): 2}
        assert f == {(0, 1): 1, (1, 0): 1}

    def test_build_quivers(self, b2_triple):
        from src.cartan.quivers import build_quivers

        quiver, plain = build_quivers(b2_triple)
        assert quiver.n_arrows == 3
        assert plain.n_arrows == 1
        assert plain.is_acyclic()
