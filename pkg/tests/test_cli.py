import json

import pytest

from comatch.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


@pytest.fixture
def sharp2_path(tmp_path, capsys):
    path = tmp_path / "sharp2.json"
    code = main(["generate", "cycle-sharpness", "2", "--out", str(path)])
    assert code == 0
    capsys.readouterr()
    return path


@pytest.fixture
def torus_path(tmp_path, capsys):
    path = tmp_path / "torus.json"
    code = main(["generate", "torus-grid", "4", "2", "--out", str(path)])
    assert code == 0
    capsys.readouterr()
    return path


class TestGenerate:
    def test_roundtrip_is_canonical(self, sharp2_path, tmp_path, capsys):
        doc = json.loads(sharp2_path.read_text())
        assert doc["provenance"]["generator"] == "cycle-sharpness"
        code, report = run_cli(capsys, "analyze", str(sharp2_path))
        assert code == 0

    def test_unknown_params_rejected(self, capsys):
        code = main(["generate", "cycle-sharpness"])
        assert code == 2


class TestAnalyze:
    def test_sharpness_values(self, sharp2_path, capsys):
        code, report = run_cli(capsys, "analyze", str(sharp2_path))
        assert code == 0
        results = report["results"]
        assert results["comatching_number"] == {"value": 2, "exact": True}
        assert results["comatching_with_intersection_number"]["value"] == 2
        assert results["helly_number"] == 2
        assert results["colorful_helly_number"] == {"value": 3, "exact": True}

    def test_single_member_system(self, tmp_path, capsys):
        path = tmp_path / "one.json"
        path.write_text(
            json.dumps(
                {"ground": ["a", "b"], "members": [{"name": "F", "elements": ["a"]}]}
            )
        )
        code, report = run_cli(capsys, "analyze", str(path))
        assert code == 0
        assert report["results"]["colorful_helly_number"]["value"] == 1

    def test_complex_report(self, torus_path, capsys):
        code, report = run_cli(
            capsys, "analyze", str(torus_path), "--budget-nodes", "200000"
        )
        assert code == 0
        results = report["results"]
        assert results["reduced_betti"]["reduced_betti"] == [0, 2, 1, 0]
        assert results["comatching_number"] == {"value": 2, "exact": True}
        assert results["leray_number"]["value"] == 3

    def test_parse_error_exit_code(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        assert main(["analyze", str(bad)]) == 2

    def test_cap_violation_exit_code(self, sharp2_path, capsys):
        assert main(["analyze", str(sharp2_path), "--cap-ground", "2"]) == 2

    def test_determinism_byte_identical(self, sharp2_path, tmp_path, capsys):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        assert main(["analyze", str(sharp2_path), "--seed", "5", "--out", str(a)]) == 0
        assert main(["analyze", str(sharp2_path), "--seed", "5", "--out", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()


class TestPipelines:
    def test_nerve_then_homology(self, sharp2_path, tmp_path, capsys):
        nerve_path = tmp_path / "nerve.json"
        assert main(["nerve", str(sharp2_path), "--out", str(nerve_path)]) == 0
        code, profile = run_cli(capsys, "homology", str(nerve_path))
        assert code == 0
        # The nerve of the M=2 system is a four-cycle: one loop.
        assert profile["reduced_betti"] == [0, 1]

    def test_prime_mode_flagged(self, torus_path, capsys):
        code, profile = run_cli(
            capsys, "homology", str(torus_path), "--arith", "prime"
        )
        assert code == 0
        assert profile["exact"] is False
        assert profile["reduced_betti"] == [0, 2, 1, 0]

    def test_collapse_and_verify(self, torus_path, tmp_path, capsys):
        seq_path = tmp_path / "collapse.json"
        code = main(
            ["collapse", str(torus_path), "3", "--out", str(seq_path)]
        )
        assert code == 0
        assert json.loads(seq_path.read_text())["status"] == "proved"
        assert main(["verify", str(seq_path), str(torus_path)]) == 0

    def test_leray_witness_verify(self, torus_path, tmp_path, capsys):
        witness_path = tmp_path / "leray.json"
        assert main(["leray", str(torus_path), "2", "--out", str(witness_path)]) == 0
        assert json.loads(witness_path.read_text())["status"] == "fails"
        assert main(["verify", str(witness_path), str(torus_path)]) == 0

    def test_dichotomy_both_arms(self, sharp2_path, tmp_path, capsys):
        inst = tmp_path / "inst.json"
        inst.write_text(json.dumps({"families": [["A", "B"], ["C", "D"]]}))
        code, doc = run_cli(capsys, "dichotomy", str(sharp2_path), str(inst))
        assert code == 0
        assert doc["kind"] == "comatching_with_intersection"

        inst.write_text(json.dumps({"families": [["A", "B"], ["A", "B"]]}))
        code, doc = run_cli(capsys, "dichotomy", str(sharp2_path), str(inst))
        assert code == 0
        assert doc["kind"] == "empty_transversal"

    def test_collapse_budget_exit(self, torus_path, capsys):
        code = main(["collapse", str(torus_path), "2", "--budget-nodes", "50"])
        assert code == 3


class TestVerify:
    def test_comatching_certificate_roundtrip(self, sharp2_path, tmp_path, capsys):
        report_path = tmp_path / "report.json"
        assert main(["analyze", str(sharp2_path), "--out", str(report_path)]) == 0
        report = json.loads(report_path.read_text())
        cert_path = tmp_path / "cert.json"
        cert_path.write_text(json.dumps(report["certificates"]["comatching"]))
        assert main(["verify", str(cert_path), str(sharp2_path)]) == 0

    def test_tampered_comatching_fails(self, sharp2_path, tmp_path, capsys):
        report_path = tmp_path / "report.json"
        assert main(["analyze", str(sharp2_path), "--out", str(report_path)]) == 0
        cert = json.loads(report_path.read_text())["certificates"]["comatching"]
        cert["pairs"][0]["point"] = "2"  # 2 lies in A: breaks the pattern
        cert_path = tmp_path / "cert.json"
        cert_path.write_text(json.dumps(cert))
        assert main(["verify", str(cert_path), str(sharp2_path)]) == 1

    def test_refuting_instance_replay(self, sharp2_path, tmp_path, capsys):
        report_path = tmp_path / "report.json"
        assert main(["analyze", str(sharp2_path), "--out", str(report_path)]) == 0
        cert = json.loads(report_path.read_text())["certificates"]["refuting_instance"]
        cert_path = tmp_path / "ref.json"
        cert_path.write_text(json.dumps(cert))
        assert main(["verify", str(cert_path), str(sharp2_path)]) == 0

        cert["families"] = [["A", "B"], ["A", "B"]]
        cert_path.write_text(json.dumps(cert))
        assert main(["verify", str(cert_path), str(sharp2_path)]) == 1

    def test_kind_object_mismatch(self, sharp2_path, torus_path, tmp_path, capsys):
        cert_path = tmp_path / "cert.json"
        cert_path.write_text(json.dumps({"kind": "comatching", "pairs": []}))
        assert main(["verify", str(cert_path), str(torus_path)]) == 2

    def test_every_report_certificate_verifies(
        self, sharp2_path, torus_path, tmp_path, capsys
    ):
        # Certificate closure: whatever analyze emits, verify must accept.
        for source in (sharp2_path, torus_path):
            report_path = tmp_path / f"{source.stem}-report.json"
            assert main(["analyze", str(source), "--out", str(report_path)]) == 0
            certificates = json.loads(report_path.read_text())["certificates"]
            assert certificates
            for name, cert in certificates.items():
                cert_path = tmp_path / f"{source.stem}-{name}.json"
                cert_path.write_text(json.dumps(cert))
                assert main(["verify", str(cert_path), str(source)]) == 0, name


class TestSuites:
    def test_check_theorems_passes_on_default_seed(self, capsys):
        code, doc = run_cli(capsys, "check-theorems", "--systems", "25")
        assert code == 0
        assert doc["violations"] == []
        assert doc["systems_checked"] > 0

    def test_question1_smoke(self, capsys):
        code, doc = run_cli(
            capsys, "question1", "--samples", "5", "--seed", "3"
        )
        assert code == 0
        assert doc["samples"] == 5
        for record in doc["records"]:
            assert record["comatching_number"]["exact"]
            assert record["comatching_number"]["value"] <= 2

    def test_question1_torus_contributes_high_leray_bound(self, capsys):
        code, doc = run_cli(
            capsys,
            "question1",
            "--samples",
            "2",
            "--seed",
            "3",
            "--include-torus",
        )
        assert code == 0
        torus_record = doc["records"][-1]
        assert torus_record["comatching_number"] == {"value": 2, "exact": True}
        assert torus_record["nerve_leray_number"]["value"] >= 3
        assert doc["max_nerve_leray_number_seen"] >= 3

    def test_question1_deterministic(self, tmp_path, capsys):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        for target in (a, b):
            assert (
                main(["question1", "--samples", "4", "--seed", "9", "--out", str(target)])
                == 0
            )
        assert a.read_bytes() == b.read_bytes()

    def test_env_override(self, sharp2_path, tmp_path, capsys, monkeypatch):
        out = tmp_path / "viaenv.json"
        monkeypatch.setenv("COMATCH_OUT", str(out))
        assert main(["analyze", str(sharp2_path)]) == 0
        assert out.exists()
