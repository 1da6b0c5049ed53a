import json
import pytest
from sympy.polys.domains import QQ
from src.cli import app
from src.cli.app import EXIT_FAILED, EXIT_OK, EXIT_USAGE, main, parse_config
from src.config import Settings, settings
from src.reports import ClosureReport, KappaReport


@pytest.fixture
def small_suites(monkeypatch):
    monkeypatch.setattr(settings, "jacobi_samples", 3)
    monkeypatch.setattr(settings, "module_axiom_samples", 3)
    monkeypatch.setattr(settings, "equivariance_samples", 3)


class TestParsing:
    def test_defaults(self):
        config = parse_config(["kappa", "--N", "1", "--lambda", "2"])
        assert config.command == "kappa"
        assert config.label == (2,)
        assert config.R == settings.generator_radius
        assert config.sigma_values == (QQ(0), QQ(0))

    def test_sigma_is_normalised(self):
        config = parse_config(["derham", "--N", "1", "--sigma", "2/4,-0"])
        assert config.sigma == ["1/2", "0"]

    def test_environment_seed_wins(self, monkeypatch):
        monkeypatch.setenv("DIVTORUS_SEED", "7")
        monkeypatch.setattr(app, "settings", Settings())
        config = parse_config(["kappa", "--N", "1", "--lambda", "2", "--seed", "3"])
        assert config.seed == 7


class TestExitCodes:
    @pytest.mark.parametrize(
        "argv",
        [
            ["kappa", "--N", "1", "--lambda", "2", "--sigma", "1/0,0"],
            ["kappa", "--N", "1", "--lambda", "2", "--sigma", "0.5,0"],
            ["kappa", "--N", "2", "--lambda", "1"],
            ["kappa", "--N", "9", "--lambda", "1,0,0,0,0,0,0,0,0"],
            ["kappa", "--N", "2"],
            ["frobnicate"],
            ["irreducibility", "--N", "1", "--lambda", "2", "--box-out", "1", "--box-in", "2"],
            ["irreducibility", "--N", "1", "--lambda", "2", "--sigma", "1/2,0", "--seed-at=-sigma"],
            ["dump-irrep", "--N", "2", "--lambda", "4,4"],
        ],
    )
    def test_usage_errors(self, argv, capsys):
        assert main(argv) == EXIT_USAGE
        assert capsys.readouterr().out == ""

    def test_failed_check_exit_code(self, monkeypatch, capsys):
        from src.cli import commands

        monkeypatch.setattr(commands, "lowest_weight_offset", lambda lam: (0,) * len(lam))
        assert main(["kappa", "--N", "3", "--lambda", "0,1,0"]) == EXIT_FAILED
        assert "DIFFERS from enumeration" in capsys.readouterr().out


class TestCommands:
    def test_kappa(self, capsys):
        assert main(["kappa", "--N", "3", "--lambda", "0,1,0"]) == EXIT_OK
        assert "(1,2,1) [matches enumeration]" in capsys.readouterr().out

    def test_theta_strings(self, capsys):
        assert main(["theta-strings", "--N", "2", "--lambda", "1,1"]) == EXIT_OK
        assert "length 3, unique maximal string" in capsys.readouterr().out

    def test_dump_irrep(self, capsys):
        assert main(["dump-irrep", "--N", "1", "--lambda", "2"]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data["dim"] == 3
        assert data["lambda"] == [2]

    def test_verify_algebra(self, small_suites, capsys):
        argv = ["verify-algebra", "--N", "1", "--R", "1", "--box-out", "1", "--box-in", "1"]
        assert main(argv) == EXIT_OK
        out = capsys.readouterr().out
        assert "jacobi: 3/3 pass" in out
        assert "module-axiom: 3/3 pass" in out

    def test_irreducibility(self, capsys):
        argv = [
            "irreducibility", "--N", "1", "--lambda", "2", "--sigma", "1/2,0",
            "--box-out", "3", "--box-in", "1", "--format", "json",
        ]
        assert main(argv) == EXIT_OK
        report = ClosureReport.from_json(capsys.readouterr().out)
        assert report.verdict == "fills-module"
        assert report.replay_ok

    def test_irreducibility_w_seed(self, capsys, tmp_path):
        path = tmp_path / "certificates.json"
        argv = [
            "irreducibility", "--N", "1", "--lambda", "1", "--sigma", "1/2,0", "--seed-in", "W",
            "--box-out", "3", "--box-in", "1", "--certificates", str(path),
        ]
        assert main(argv) == EXIT_OK
        assert "verdict: fills-known-submodule" in capsys.readouterr().out
        replay = json.loads(path.read_text(encoding="utf-8"))
        assert replay["module"]["k"] == 1
        assert replay["roots"]

    def test_derham(self, small_suites, capsys):
        argv = ["derham", "--N", "2", "--sigma", "1,0,0", "--box-out", "1", "--box-in", "1"]
        assert main(argv) == EXIT_OK
        out = capsys.readouterr().out
        assert "psi∘psi = 0: pass" in out
        assert "equivariance k=2: 3/3 pass" in out

    def test_out_file(self, tmp_path, capsys):
        path = tmp_path / "kappa.json"
        argv = ["kappa", "--N", "2", "--lambda", "1,1", "--format", "json", "--out", str(path)]
        assert main(argv) == EXIT_OK
        assert capsys.readouterr().out == ""
        report = KappaReport.from_json(path.read_text(encoding="utf-8"))
        assert report.kappa == [2, 2]
        assert report.config.N == 2
