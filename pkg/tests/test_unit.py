"""
Unit tests for the EI preprojective toolkit: validators, formatters,
configuration, fields, groups, bisets and quivers.
"""

import random

import pytest


class TestValidators:
    """Tests for validation utilities."""

    def test_validate_prime(self):
        from src.utils.validators import validate_prime

        assert validate_prime(2) == (True, None)
        assert validate_prime(101)[0] is True

        valid, error = validate_prime(4)
        assert valid is False
        assert "not prime" in error

        valid, _ = validate_prime(True)
        assert valid is False

    def test_validate_field_spec(self):
        from src.utils.validators import validate_field_spec

        assert validate_field_spec({"kind": "prime", "p": 3})[0] is True
        assert validate_field_spec({"kind": "extension", "p": 3, "k": 2})[0] is True
        assert validate_field_spec({"kind": "rationals"})[0] is True
        assert validate_field_spec({"kind": "cyclotomic", "n": 4})[0] is True

        valid, error = validate_field_spec({"kind": "reals"})
        assert valid is False
        assert "reals" in error

        valid, _ = validate_field_spec({"kind": "extension", "p": 3, "k": 0})
        assert valid is False

        valid, error = validate_field_spec({"kind": "extension", "p": 2, "modulus": ["a", "b"]})
        assert valid is False
        assert "integers" in error

    def test_validate_group_table(self):
        from src.utils.validators import validate_group_table

        assert validate_group_table([[0, 1], [1, 0]])[0] is True

        valid, error = validate_group_table([[0, 1], [1, 1]])
        assert valid is False

        valid, error = validate_group_table([[1, 0], [0, 1]])
        assert valid is False
        assert "identity" in error

    def test_validate_vertex(self):
        from src.utils.validators import validate_vertex

        assert validate_vertex(1, 3)[0] is True
        assert validate_vertex(3, 3)[0] is True
        assert validate_vertex(0, 3)[0] is False
        assert validate_vertex(4, 3)[0] is False


class TestFormatters:
    """Tests for report formatting."""

    def test_format_dims(self):
        from src.utils.formatters import format_dims

        assert format_dims([3, 1, 0]) == "(3, 1, 0 | 4)"

    def test_format_dimension_vector(self):
        from src.utils.formatters import format_dimension_vector

        assert format_dimension_vector([2, 1]) == "[2 1]"

    def test_report_json_is_sorted_and_stable(self):
        from src.utils.formatters import format_report_json

        report = {"status": "pass", "command": "validate", "data": {"b": 1, "a": 2}}
        text = format_report_json(report)
        assert text.endswith("\n")
        assert text.index('"command"') < text.index('"status"')
        assert text.index('"a"') < text.index('"b"')
        assert format_report_json(dict(reversed(list(report.items())))) == text

    def test_report_csv_series(self):
        from src.utils.formatters import format_report_csv

        report = {"checks": [], "data": {"series": {"Π(Q,X)": [3, 1, 0], "E^n": [3, 1]}}}
        lines = format_report_csv(report).splitlines()
        assert lines[0] == "degree,E^n,Π(Q,X)"
        assert lines[1] == "0,3,3"
        assert lines[3] == "2,,0"

    def test_report_csv_checks(self):
        from src.utils.formatters import format_report_csv

        report = {"checks": [{"name": "acyclic", "passed": True, "detail": ""}], "data": {}}
        lines = format_report_csv(report).splitlines()
        assert lines == ["check,passed,detail", "acyclic,true,"]

    def test_status_line_lists_failures(self):
        from src.utils.formatters import format_status_line

        report = {
            "command": "theorem-a",
            "status": "fail",
            "checks": [{"name": "E≅Π1", "passed": True}, {"name": "Πn-vs-E^n", "passed": False}],
        }
        assert format_status_line(report) == "theorem-a: fail (failed: Πn-vs-E^n)"


class TestConfig:
    """Tests for configuration."""

    def test_settings_defaults(self):
        from src.config import settings

        assert settings.engine.default_maxdeg >= 1
        assert settings.engine.max_path_length > 0
        assert settings.verification.orbit_redraws >= 1
        assert settings.report.report_version == 1

    def test_default_field_is_valid(self):
        from src.config import settings
        from src.utils.validators import validate_field_spec

        assert validate_field_spec(settings.scalars.default_field)[0] is True

    def test_environment_overrides(self, monkeypatch):
        from pydantic import ValidationError

        from src.config import VerificationSettings

        monkeypatch.setenv("EIPRE_ORBIT_REDRAWS", "3")
        assert VerificationSettings().orbit_redraws == 3

        monkeypatch.setenv("EIPRE_ISO_RETRIES", "0")
        with pytest.raises(ValidationError):
            VerificationSettings()

    def test_log_level_is_normalised(self):
        from pydantic import ValidationError

        from src.config import Settings

        assert Settings(LOG_LEVEL="debug").log_level == "DEBUG"
        with pytest.raises(ValidationError):
            Settings(LOG_LEVEL="loud")

    def test_sample_inputs_directory(self):
        from src.config import settings

        assert (settings.inputs_dir / "b2_cartan.json").is_file()


class TestLogging:
    """Tests for the loguru setup."""

    def test_job_context_tags_records(self):
        from loguru import logger

        from src.utils.logger import get_logger, job_context

        extras = []
        sink_id = logger.add(lambda message: extras.append(dict(message.record["extra"])), level="DEBUG")
        try:
            with job_context("validate", 7):
                get_logger("tests.logging").info("inside")
            get_logger("tests.logging").info("outside")
        finally:
            logger.remove(sink_id)

        assert extras[0]["job"] == "validate#7"
        assert extras[0]["name"] == "tests.logging"
        assert extras[1]["job"] == "-"

    def test_stdlib_records_are_forwarded(self):
        import logging

        from loguru import logger

        messages = []
        sink_id = logger.add(lambda message: messages.append(message.record["message"]), level="DEBUG")
        try:
            logging.getLogger("tests.stdlib").warning("forwarded")
        finally:
            logger.remove(sink_id)

        assert "forwarded" in messages


class TestFields:
    """Tests for exact fields."""

    def test_prime_field_arithmetic(self, f3):
        assert f3.add(2, 2) == 1
        assert f3.mul(2, 2) == 1
        assert f3.inv(2) == 2
        assert f3.neg(1) == 2
        assert f3.order == 3
        assert f3.label() == "GF(3)"

    def test_extension_field_inverses(self):
        from src.scalars.fields import make_field

        field = make_field({"kind": "extension", "p": 3, "k": 2})
        elements = list(field.elements())
        assert field.order == 9
        assert len(elements) == 9
        for a in elements:
            if not field.is_zero(a):
                assert field.mul(a, field.inv(a)) == field.one

    def test_cyclotomic_generator_order(self):
        from src.scalars.fields import make_field

        field = make_field({"kind": "cyclotomic", "n": 4})
        zeta = field.generator()
        assert field.pow(zeta, 4) == field.one
        assert field.pow(zeta, 2) == field.neg(field.one)

    def test_rationals_are_exact(self, rationals):
        third = rationals.inv(rationals.from_int(3))
        assert rationals.add(third, rationals.add(third, third)) == rationals.one

    def test_invalid_field_raises(self):
        from src.errors import FieldError
        from src.scalars.fields import make_field

        with pytest.raises(FieldError):
            make_field({"kind": "prime", "p": 4})

    def test_splits_completely(self, f2, f3, rationals):
        from src.scalars.fields import splits_completely

        assert splits_completely(f2, 2) is True
        assert splits_completely(f2, 4) is True
        assert splits_completely(f2, 3) is False
        assert splits_completely(f3, 2) is True
        assert splits_completely(rationals, 2) is True
        assert splits_completely(rationals, 3) is False

    def test_enough_roots_of_unity(self, f2, rationals):
        from src.scalars.fields import enough_roots_of_unity, make_field

        assert enough_roots_of_unity(f2, [2, 1]) is True
        assert enough_roots_of_unity(rationals, [2, 1]) is True
        assert enough_roots_of_unity(rationals, [3, 1]) is False
        assert enough_roots_of_unity(make_field({"kind": "cyclotomic", "n": 3}), [3, 1]) is True


class TestLinearAlgebra:
    """Tests for exact linear algebra."""

    def test_rank_and_nullspace(self, f2):
        from src.scalars.linalg import nullspace, rank

        rows = [[1, 1, 0], [0, 1, 1], [1, 0, 1]]
        assert rank(f2, rows, 3) == 2
        kernel = nullspace(f2, rows, 3)
        assert len(kernel) == 1
        assert kernel[0] == [1, 1, 1]

    def test_inverse(self, f2):
        from src.scalars.linalg import identity, inverse, mat_mul

        a = [[1, 1], [0, 1]]
        inv = inverse(f2, a)
        assert mat_mul(f2, a, inv) == identity(f2, 2)
        assert inverse(f2, [[1, 1], [1, 1]]) is None

    def test_solve(self, f3):
        from src.scalars.linalg import mat_vec, solve

        a = [[1, 2], [0, 1]]
        x = solve(f3, a, [1, 2], 2)
        assert mat_vec(f3, a, x) == [1, 2]


class TestGroups:
    """Tests for finite groups and homomorphisms."""

    def test_cyclic_group(self):
        from src.groups.groups import cyclic_group

        c4 = cyclic_group(4)
        assert c4.order == 4
        assert c4.power(1, 4) == c4.identity
        assert c4.inv(1) == 3
        assert c4.label(1) == "η"
        assert c4.check_axioms() == (True, None)

    def test_group_from_table_rejects_non_group(self):
        from src.errors import GroupError
        from src.groups.groups import group_from_table

        with pytest.raises(GroupError):
            group_from_table([[0, 1], [1, 1]])

    def test_klein_four_from_table(self):
        from src.groups.groups import group_from_table

        table = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]]
        v4 = group_from_table(table, name="V4")
        assert all(v4.mul(a, a) == 0 for a in v4.elements())

    def test_cyclic_embedding(self):
        from src.errors import GroupError
        from src.groups.groups import cyclic_embedding, cyclic_group

        emb = cyclic_embedding(cyclic_group(2), cyclic_group(4))
        assert emb.images == (0, 2)
        assert emb.is_homomorphism()
        assert emb.is_injective()

        with pytest.raises(GroupError):
            cyclic_embedding(cyclic_group(3), cyclic_group(4))


class TestBisets:
    """Tests for bisets, their duals and products."""

    def test_regular_biset_is_free(self):
        from src.groups.bisets import is_action_free, regular_biset
        from src.groups.groups import cyclic_group

        biset = regular_biset(cyclic_group(3))
        assert biset.check_axioms() == (True, None)
        assert is_action_free(biset) == (True, True)

    def test_trivial_action_is_not_free(self):
        from src.groups.bisets import is_action_free, trivial_action_biset
        from src.groups.groups import cyclic_group

        biset = trivial_action_biset(cyclic_group(2), cyclic_group(1), 2)
        assert is_action_free(biset) == (False, True)

    def test_dual_of_dual(self):
        from src.groups.bisets import biset_from_embeddings, dual_biset
        from src.groups.groups import cyclic_embedding, cyclic_group

        c1, c2 = cyclic_group(1), cyclic_group(2)
        biset = biset_from_embeddings(cyclic_embedding(c1, c2), cyclic_embedding(c1, c1))
        dual = dual_biset(biset)
        assert dual.left_group == c1
        assert dual.right_group == c2
        assert dual.check_axioms() == (True, None)
        twice = dual_biset(dual)
        assert twice.left == biset.left
        assert twice.right == biset.right

    def test_biset_from_embeddings_sizes(self):
        from src.groups.bisets import biset_from_embeddings
        from src.groups.groups import cyclic_embedding, cyclic_group

        c1, c2 = cyclic_group(1), cyclic_group(2)
        # C2 x_{C1} C1 and C2 x_{C2} C2
        assert biset_from_embeddings(cyclic_embedding(c1, c2), cyclic_embedding(c1, c1)).size == 2
        assert biset_from_embeddings(cyclic_embedding(c2, c2), cyclic_embedding(c2, c2)).size == 2

    def test_product_over_regular_biset(self):
        from src.groups.bisets import biset_product, regular_biset
        from src.groups.groups import cyclic_group

        c3 = cyclic_group(3)
        product = biset_product(regular_biset(c3), regular_biset(c3))
        assert product.biset.size == 3
        assert product.biset.check_axioms() == (True, None)
        assert len(product.class_of) == 9

    def test_product_rejects_mismatched_groups(self):
        from src.errors import BisetError
        from src.groups.bisets import biset_product, regular_biset
        from src.groups.groups import cyclic_group

        with pytest.raises(BisetError):
            biset_product(regular_biset(cyclic_group(2)), regular_biset(cyclic_group(3)))

    def test_orbit_reps(self):
        from src.groups.bisets import orbit_reps, trivial_action_biset
        from src.groups.groups import cyclic_group

        biset = trivial_action_biset(cyclic_group(2), cyclic_group(1), 3)
        assert orbit_reps(biset, "left") == [0, 1, 2]
        drawn = orbit_reps(biset, "right", rng=random.Random(0))
        assert sorted(drawn) == [0, 1, 2]


class TestQuivers:
    """Tests for quivers, EI quivers and their categories."""

    def test_paths_compose_last_first(self):
        from src.quivers.quiver import make_quiver

        q = make_quiver(3, [("a", 0, 1), ("b", 1, 2)])
        p = q.path([1, 0])
        assert p.source == 0 and p.target == 2
        assert q.path_name(p) == "ba"
        assert q.longest_path_length() == 2

    def test_cycle_detection(self):
        from src.errors import QuiverError
        from src.quivers.quiver import make_quiver

        q = make_quiver(2, [("a", 0, 1), ("b", 1, 0)])
        assert q.is_acyclic() is False
        with pytest.raises(QuiverError):
            q.longest_path_length()

    def test_double_quiver(self):
        from src.quivers.quiver import make_quiver

        q = make_quiver(2, [("a", 0, 1)]).double()
        assert q.n_arrows == 2
        assert q.arrows[1].name == "a*"
        assert (q.source(1), q.target(1)) == (1, 0)

    def test_classical_category_dimensions(self, a2_quiver, a3_quiver):
        from src.quivers.category import build_category, per_length_dimensions

        assert len(build_category(a2_quiver)) == 3
        category = build_category(a3_quiver)
        assert len(category) == 6
        assert per_length_dimensions(category) == [3, 2, 1]

    def test_b2_category(self, b2_quiver):
        from src.quivers.category import build_category

        assert b2_quiver.is_action_free()
        category = build_category(b2_quiver)
        assert len(category) == 5
        assert category.check_associativity() == (True, None)

    def test_ei_quiver_rejects_wrong_groups(self):
        from src.errors import QuiverError
        from src.groups.bisets import regular_biset
        from src.groups.groups import cyclic_group
        from src.quivers.ei_quiver import make_ei_quiver
        from src.quivers.quiver import make_quiver

        c2 = cyclic_group(2)
        with pytest.raises(QuiverError):
            make_ei_quiver(make_quiver(2, [("a", 0, 1)]), [c2, cyclic_group(1)], [regular_biset(c2)])

    def test_double_refuses_cycles(self):
        from src.errors import QuiverError
        from src.quivers.ei_quiver import double_ei_quiver, trivial_assignment
        from src.quivers.quiver import make_quiver

        cyclic = trivial_assignment(make_quiver(2, [("a", 0, 1), ("b", 1, 0)]))
        with pytest.raises(QuiverError):
            double_ei_quiver(cyclic)

    def test_non_free_fixture(self, non_free_quiver):
        assert non_free_quiver.validate() == (True, None)
        assert non_free_quiver.is_action_free() is False

    def test_paths_up_to(self):
        from src.errors import QuiverError
        from src.quivers.quiver import make_quiver

        q = make_quiver(3, [("a", 0, 1), ("b", 1, 2)])
        layers = q.paths_up_to(3)
        assert [len(layer) for layer in layers] == [3, 2, 1, 0]
        assert layers[2][0] == q.path([1, 0])
        assert [len(layer) for layer in q.paths_up_to(2, weights=[1, 0], max_weight=0)] == [3, 1, 0]
        with pytest.raises(QuiverError):
            q.paths_up_to(-1)

    def test_path_biset(self, b2_quiver):
        from src.errors import QuiverError
        from src.quivers.ei_quiver import path_biset
        from src.quivers.quiver import Path

        quiver = b2_quiver.quiver
        assert path_biset(b2_quiver, quiver.trivial_path(0)).size == 2
        assert path_biset(b2_quiver, quiver.trivial_path(1)).size == 1
        assert path_biset(b2_quiver, quiver.path([0])).size == 2
        with pytest.raises(QuiverError):
            path_biset(b2_quiver, Path((5,), 0, 1))
