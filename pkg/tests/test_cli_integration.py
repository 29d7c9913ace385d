import json
import sys
from pathlib import Path
from unittest.mock import patch

import pytest

from ljcert.app.cli.main import main
from ljcert.infrastructure.settings import SettingsStore

DATA_DIR = Path(__file__).parent / "data"
ICOSAHEDRON = DATA_DIR / "lj13_icosahedron.xyz"
PAIR_UNIT = DATA_DIR / "pair_unit.txt"


def _run_cli(monkeypatch, argv: list[str]) -> int:
    monkeypatch.setattr(sys, "argv", ["ljcert", *argv])
    return main()


@pytest.fixture
def isolated_settings(tmp_path):
    store = SettingsStore(tmp_path / "config.json")
    with patch("ljcert.app.cli.verify.settings_store", store), \
            patch("ljcert.app.cli.cluster.settings_store", store), \
            patch("ljcert.app.cli.config.settings_store", store):
        yield store


def test_main_without_arguments_prints_help(monkeypatch, capsys) -> None:
    assert _run_cli(monkeypatch, []) == 0
    assert "ljcert" in capsys.readouterr().out


def test_main_unknown_proposition_is_usage_error(monkeypatch, capsys) -> None:
    assert _run_cli(monkeypatch, ["verify", "--prop", "9.9"]) == 2
    assert "invalid choice" in capsys.readouterr().err


def test_main_energy_outputs_json(monkeypatch, capsys, isolated_settings) -> None:
    exit_code = _run_cli(monkeypatch, ["energy", str(ICOSAHEDRON), "--format", "json"])

    captured = capsys.readouterr()
    data = json.loads(captured.out)
    assert exit_code == 0
    assert data["particles"] == 13
    assert data["min_distance"] == pytest.approx(0.96, abs=1e-5)
    assert data["within_stability_bound"] is True
    assert data["energy_per_particle"] == pytest.approx(data["total_energy"] / 13)


def test_main_energy_of_unit_pair(monkeypatch, capsys, isolated_settings) -> None:
    exit_code = _run_cli(monkeypatch, ["energy", str(PAIR_UNIT), "--format", "json"])

    data = json.loads(capsys.readouterr().out)
    assert exit_code == 0
    assert data["particles"] == 2
    assert data["total_energy"] == pytest.approx(-1.0)
    assert data["energy_per_particle"] == pytest.approx(-0.5)
    assert data["min_distance"] == pytest.approx(1.0)
    assert data["diameter_pair"] == [0, 1]
    assert data["max_minus_energy"] == pytest.approx(1.0)


def test_main_missing_file_reports_error(monkeypatch, capsys, tmp_path, isolated_settings) -> None:
    exit_code = _run_cli(monkeypatch, ["energy", str(tmp_path / "missing.xyz")])

    captured = capsys.readouterr()
    assert exit_code == 2
    assert captured.err.startswith("エラー:")


def test_main_malformed_file_reports_line(monkeypatch, capsys, tmp_path, isolated_settings) -> None:
    path = tmp_path / "bad.xyz"
    path.write_text("0 0 0\n1 0\n", encoding="utf-8")

    exit_code = _run_cli(monkeypatch, ["energy", str(path)])

    assert exit_code == 2
    assert "2行目" in capsys.readouterr().err


def test_main_keyboard_interrupt_exits_cleanly(monkeypatch, capsys, isolated_settings) -> None:
    with patch("ljcert.app.cli.cluster.read_configuration", side_effect=KeyboardInterrupt):
        exit_code = _run_cli(monkeypatch, ["energy", str(ICOSAHEDRON)])

    captured = capsys.readouterr()
    assert exit_code == 130
    assert captured.out == ""
    assert captured.err == "\n中断しました。\n"


def test_main_verify_appendix_outputs_json(monkeypatch, capsys, isolated_settings) -> None:
    exit_code = _run_cli(monkeypatch, ["verify", "--prop", "appendix", "--format", "json"])

    data = json.loads(capsys.readouterr().out)
    assert exit_code == 0
    assert data["verdict"] == "PASS"
    assert [c["proposition"] for c in data["certificates"]] == ["appendix"]
    assert "generated_at" not in data


def test_main_integral_outputs_enclosure(monkeypatch, capsys, isolated_settings) -> None:
    exit_code = _run_cli(monkeypatch, ["integral", "--lower", "0.54", "--format", "json"])

    data = json.loads(capsys.readouterr().out)
    assert exit_code == 0
    assert data["lower"] == "27/50"
    assert 24 * float(data["enclosure"]["hi"]) < 26.95
    assert data["quadrature"]["value"] == pytest.approx(float(data["enclosure"]["lo"]), abs=1e-8)


def test_main_fcc_optimized_scale(monkeypatch, capsys, isolated_settings) -> None:
    exit_code = _run_cli(monkeypatch, ["fcc", "--optimize-scale", "--format", "json"])

    data = json.loads(capsys.readouterr().out)
    assert exit_code == 0
    assert data["stability_lower_bound"] == pytest.approx(8.61)
    assert data["scale"] == pytest.approx(0.97123, abs=1e-4)


def test_main_fcc_cutoff_is_a_radius(monkeypatch, capsys, isolated_settings) -> None:
    exit_code = _run_cli(monkeypatch, ["fcc", "--scale", "2", "--cutoff", "6", "--format", "json"])

    data = json.loads(capsys.readouterr().out)
    assert exit_code == 0
    assert data["scale"] == 2.0
    assert data["cutoff"] == 6.0


def test_main_fcc_default_cutoff_scales_with_settings_factor(monkeypatch, capsys, isolated_settings) -> None:
    isolated_settings.update({"fccCutoffFactor": 5.0})
    exit_code = _run_cli(monkeypatch, ["fcc", "--scale", "2", "--format", "json"])

    data = json.loads(capsys.readouterr().out)
    assert exit_code == 0
    assert data["cutoff"] == pytest.approx(10.0)


def test_main_compactify_writes_file(monkeypatch, capsys, tmp_path, isolated_settings) -> None:
    source = tmp_path / "pair.xyz"
    source.write_text("0 0 0\n10 0 0\n", encoding="utf-8")
    target = tmp_path / "out.xyz"

    exit_code = _run_cli(monkeypatch, ["compactify", str(source), "-o", str(target)])

    assert exit_code == 0
    assert target.read_text(encoding="utf-8").startswith("# compactified")
    assert "書き出しました" in capsys.readouterr().err


def test_main_config_set_saves_value(monkeypatch, capsys, isolated_settings) -> None:
    exit_code = _run_cli(monkeypatch, ["config", "set", "max-depth", "25"])

    assert exit_code == 0
    assert isolated_settings.max_depth == 25
    saved = json.loads(isolated_settings.config_path.read_text(encoding="utf-8"))
    assert saved["maxDepth"] == 25


def test_main_config_set_rejects_bad_value(monkeypatch, capsys, isolated_settings) -> None:
    assert _run_cli(monkeypatch, ["config", "set", "jobs", "0"]) == 2
    assert _run_cli(monkeypatch, ["config", "set", "colour", "red"]) == 2
    assert "不明な設定キー" in capsys.readouterr().err
    assert isolated_settings.jobs == 1
