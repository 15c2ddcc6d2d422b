"""
End-to-end tests: payload files through the orchestrator and the command line.
"""

import json

import pytest

from tests.conftest import DATA_DIR

A2 = {"vertices": 2, "arrows": [{"name": "a", "from": 1, "to": 2}], "field": {"kind": "prime", "p": 2}, "maxdeg": 4}


@pytest.fixture
def few_random_modules(monkeypatch):
    from src.config import settings

    monkeypatch.setattr(settings.verification, "random_modules", 2)
    monkeypatch.setattr(settings.verification, "orbit_redraws", 3)


def run_job(path, command, n_random=2, **flags):
    from src.interface.loaders import load_job
    from src.verifiers.orchestrator import VerificationOrchestrator

    job = load_job(path, command, **flags)
    return VerificationOrchestrator(n_random=n_random).run_job_sync(job)


class TestOrchestrator:
    """Jobs run through VerificationOrchestrator."""

    def test_validate_quiver(self):
        report = run_job(DATA_DIR / "b2_quiver.json", "validate")
        assert report.status == "pass"
        assert report.data["valid"] is True
        assert report.data["dim_KC"] == 5
        assert [c.name for c in report.checks] == ["axioms", "acyclic", "representation:P"]

    def test_validate_cartan_reports_every_condition(self, payload_file):
        from src.verifiers.structure import CARTAN_CONDITIONS

        path = payload_file({"C": [[2, -1], [-2, 2]], "D": [1, 1], "Omega": [[1, 2]]})
        report = run_job(path, "validate")
        assert report.status == "fail"
        assert [c.name for c in report.checks] == list(CARTAN_CONDITIONS)
        assert [c.name for c in report.checks if not c.passed] == ["C3"]

    def test_preprojective_a2(self, payload_file, few_random_modules):
        report = run_job(payload_file(A2), "preprojective")
        assert report.status == "pass"
        assert report.data["dims"] == [3, 1, 0]
        assert report.data["stabilized"] is True
        assert report.data["series"] == {"Π(Q,X)": [3, 1, 0]}

    def test_tensor_algebra_command_on_b2(self, few_random_modules):
        report = run_job(DATA_DIR / "b2_quiver.json", "theorem-a", maxdeg=4)
        assert report.status == "pass", [c for c in report.checks if not c.passed]
        assert report.data["dim_KC"] == 5
        assert report.data["dim_E"] == report.data["dim_Π1"]

    @pytest.mark.parametrize("name", ["a2.json", "a3.json", "b2_quiver.json", "g12_two_cartan.json"])
    def test_tensor_algebra_command_to_degree_six(self, name):
        report = run_job(DATA_DIR / name, "theorem-a", maxdeg=6)
        assert report.status == "pass", [c for c in report.checks if not c.passed]
        assert report.data["degree_cap"] == 6
        assert report.data["dim_E"] == report.data["dim_Π1"]
        series = report.data["series"]
        assert len(series["Π(Q,X)"]) == 7
        assert series["Π(Q,X)"] == series["Π1^n"] == series["E^n"]

    def test_tensor_algebra_command_needs_free_actions(self):
        report = run_job(DATA_DIR / "trivial_action.json", "theorem-a")
        assert report.status == "hypothesis-not-met"
        assert report.checks == []

    def test_cartan_command_on_b2(self):
        report = run_job(DATA_DIR / "b2_cartan.json", "theorem-b")
        assert report.status == "pass"
        assert report.data["case"] == "prime-power"
        assert report.data["category_side"]["dim_KC"] == 5

    def test_cartan_command_without_roots_of_unity(self, payload_file):
        path = payload_file({"C": [[2, -1], [-3, 2]], "D": [3, 1], "Omega": [[1, 2]], "maxdeg": 4})
        report = run_job(path, "theorem-b")
        assert report.status == "hypothesis-not-met"

    def test_cartan_command_on_quiver_payload(self, payload_file):
        report = run_job(payload_file(A2), "theorem-b")
        assert report.status == "input-error"

    def test_oriented_cycle_is_input_error(self, payload_file):
        payload = {"vertices": 2, "arrows": [{"from": 1, "to": 2}, {"from": 2, "to": 1}]}
        report = run_job(payload_file(payload), "preprojective")
        assert report.status == "input-error"
        assert "cycle" in report.error

    def test_local_projectivity(self):
        report = run_job(DATA_DIR / "b2_quiver.json", "prop-3.3", n_random=4)
        assert report.status == "pass"
        assert report.data["total"] == 5
        assert report.data["locally_projective"] >= 1

    def test_translations(self):
        report = run_job(DATA_DIR / "b2_quiver.json", "prop-4.2", n_random=2)
        assert report.status == "pass", [c for c in report.checks if not c.passed]

    def test_phi_kernel(self):
        report = run_job(DATA_DIR / "b2_quiver.json", "lemma-4.1", n_random=2)
        assert report.status == "pass", [c for c in report.checks if not c.passed]

    def test_trace_diagram(self):
        report = run_job(DATA_DIR / "b2_quiver.json", "prop-3.10", n_random=1)
        assert report.status == "pass", [c for c in report.checks if not c.passed]

    @pytest.mark.slow
    @pytest.mark.parametrize("command", ["prop-3.3", "prop-4.2", "lemma-4.1", "prop-3.10"])
    def test_default_module_suite(self, command):
        from src.config import settings

        report = run_job(DATA_DIR / "b2_quiver.json", command, n_random=None)
        assert report.status == "pass", [c for c in report.checks if not c.passed]
        # the payload's representation P plus the random modules
        assert len(report.data["modules"]) == 1 + settings.verification.random_modules

    def test_report_header(self, payload_file):
        report = run_job(payload_file(A2), "validate", seed=5)
        assert report.report_version == 1
        assert report.command == "validate"
        assert report.field == {"kind": "prime", "p": 2}
        assert report.seed == 5


class TestLoaders:
    """Payload parsing errors."""

    def test_malformed_json(self, tmp_path):
        from src.errors import InputError
        from src.interface.loaders import load_job

        path = tmp_path / "bad.json"
        path.write_text("{not json", encoding="utf-8")
        with pytest.raises(InputError) as exc_info:
            load_job(path, "validate")
        assert "malformed JSON" in str(exc_info.value)

    def test_unknown_payload_kind(self, payload_file):
        from src.errors import InputError
        from src.interface.loaders import load_job

        with pytest.raises(InputError):
            load_job(payload_file({"nodes": 2}), "validate")

    def test_vertex_out_of_range(self, payload_file):
        from src.errors import InputError
        from src.interface.loaders import build_ei_quiver, load_job

        job = load_job(payload_file({"vertices": 2, "arrows": [{"from": 1, "to": 3}]}), "validate")
        with pytest.raises(InputError) as exc_info:
            build_ei_quiver(job.quiver)
        assert exc_info.value.path == "arrows.0"

    def test_flags_override_payload(self, payload_file):
        from src.interface.loaders import load_job

        job = load_job(payload_file(A2), "preprojective", field='{"kind": "prime", "p": 3}', maxdeg=2, seed=9)
        assert job.field.p == 3
        assert job.maxdeg == 2
        assert job.seed == 9

    def test_defaults(self, payload_file):
        from src.interface.loaders import load_job

        job = load_job(payload_file({"vertices": 1}), "validate")
        assert job.field.to_spec() == {"kind": "prime", "p": 2}
        assert job.maxdeg == 8
        assert job.seed == 0


class TestCommandLine:
    """The ei-preprojective command."""

    def test_pass_writes_json(self, payload_file, tmp_path, few_random_modules):
        from src.main import run

        out = tmp_path / "report.json"
        assert run(["--input", str(payload_file(A2)), "--command", "preprojective", "--out", str(out)]) == 0
        report = json.loads(out.read_text(encoding="utf-8"))
        assert report["status"] == "pass"
        assert report["data"]["dims"] == [3, 1, 0]

    def test_stdout(self, payload_file, capsys):
        from src.main import run

        assert run(["--input", str(payload_file(A2)), "--command", "validate"]) == 0
        assert json.loads(capsys.readouterr().out)["command"] == "validate"

    def test_csv(self, payload_file, tmp_path, few_random_modules):
        from src.main import run

        out = tmp_path / "report.csv"
        run(["--input", str(payload_file(A2)), "--command", "preprojective", "--out", str(out)])
        assert out.read_text(encoding="utf-8").splitlines() == ["degree,Π(Q,X)", "0,3", "1,1", "2,0"]

    def test_exit_codes(self, payload_file, tmp_path):
        from src.main import run

        failing = payload_file({"C": [[2, -1], [-2, 2]], "D": [1, 1], "Omega": [[1, 2]]}, name="bad_d.json")
        assert run(["--input", str(failing), "--command", "validate", "--out", str(tmp_path / "a.json")]) == 1
        hypothesis = str(DATA_DIR / "trivial_action.json")
        assert run(["--input", hypothesis, "--command", "theorem-a", "--out", str(tmp_path / "b.json")]) == 2

    def test_malformed_input(self, tmp_path):
        from src.main import run

        path = tmp_path / "bad.json"
        path.write_text("[1, 2", encoding="utf-8")
        out = tmp_path / "report.json"
        assert run(["--input", str(path), "--command", "validate", "--out", str(out)]) == 3
        report = json.loads(out.read_text(encoding="utf-8"))
        assert report["status"] == "input-error"
        assert report["error"]

    def test_bad_field_flag(self, payload_file, tmp_path):
        from src.main import run

        out = tmp_path / "report.json"
        code = run(["--input", str(payload_file(A2)), "--command", "validate", "--field", '{"kind":"prime","p":4}', "--out", str(out)])
        assert code == 3

    def test_non_integer_modulus(self, payload_file, tmp_path):
        from src.main import run

        payload = dict(A2, field={"kind": "extension", "p": 2, "modulus": ["a", "b"]})
        out = tmp_path / "report.json"
        assert run(["--input", str(payload_file(payload)), "--command", "validate", "--out", str(out)]) == 3
        report = json.loads(out.read_text(encoding="utf-8"))
        assert report["status"] == "input-error"
        assert "integers" in report["error"]

    def test_reports_are_deterministic(self, payload_file, tmp_path, few_random_modules):
        from src.main import run

        path = str(DATA_DIR / "b2_quiver.json")
        first, second = tmp_path / "first.json", tmp_path / "second.json"
        for out in (first, second):
            run(["--input", path, "--command", "prop-3.3", "--seed", "3", "--out", str(out)])
        assert first.read_bytes() == second.read_bytes()

    def test_unknown_command(self, payload_file):
        from src.main import run

        with pytest.raises(SystemExit):
            run(["--input", str(payload_file(A2)), "--command", "theorem-c"])


class TestVerifiers:
    """Single verifiers run outside the orchestrator."""

    def test_execute_sync(self, b2_quiver, f2):
        from src.context.computation_context import ComputationContext
        from src.verifiers.local_projectivity import LocalProjectivityVerifier

        verifier = LocalProjectivityVerifier()
        result = verifier.execute_sync(ComputationContext(f2, ei_quiver=b2_quiver, n_random=2))
        assert result.success
        assert result.verifier_name == "local-projectivity"
        assert verifier.state.status == "completed"

    def test_hypothesis_failure_is_reported(self, non_free_quiver, f2):
        from src.context.computation_context import ComputationContext
        from src.verifiers.local_projectivity import LocalProjectivityVerifier

        result = LocalProjectivityVerifier().execute_sync(ComputationContext(f2, ei_quiver=non_free_quiver))
        assert result.success is False
        assert result.hypothesis_met is False
        assert result.checks == []
