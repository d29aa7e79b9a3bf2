import json

from tilecohom.controllers.tilings import builtin, builtin_names, save_spec
from tilecohom.corpus.builtins import BUILTIN_DOCUMENTS
from tilecohom.main import main


def test_builtin_list(cli):
    """Test listar los ejemplos incorporados"""
    result = cli("builtin", "list")
    assert result.exit_code == 0
    assert result.stdout.splitlines() == builtin_names()


def test_builtin_show(cli):
    """Test exportar un ejemplo como documento JSON canónico"""
    result = cli("builtin", "show", "fibonacci")
    assert result.exit_code == 0
    assert result.stdout == save_spec(builtin("fibonacci"))
    assert json.loads(result.stdout)["name"] == "fibonacci"
    assert cli("builtin", "show").exit_code == 2


def test_check_builtin(cli):
    """Test validar un ejemplo correcto"""
    result = cli("check", "--builtin", "penrose-kite-dart")
    assert result.exit_code == 0
    assert result.stdout == "OK penrose-kite-dart\n"

    result = cli("check", "--builtin", "fibonacci", "--json")
    assert json.loads(result.stdout) == {"name": "fibonacci", "ok": True, "failures": []}


def test_check_file_with_failures(cli, document, tmp_path):
    """Test un documento con ∂∘∂ ≠ 0 da FAIL y código 1"""
    doc = document("penrose-kite-dart")
    doc["boundaries"]["2"][0][0] = 1
    path = tmp_path / "broken.json"
    path.write_text(json.dumps(doc), encoding="utf-8")

    result = cli("check", str(path))
    assert result.exit_code == 1
    lines = result.stdout.splitlines()
    assert lines[0] == "FAIL penrose-kite-dart"
    assert lines[1].startswith("  boundaries.1·boundaries.2:")


def test_check_agrees_with_rigid_build(cli, tmp_path):
    """Test check falla cuando el complejo rígido sin la arista invertida no cumple ∂∘∂ = 0"""
    doc = {
        "name": "reversing-edge",
        "dimension": 2,
        "geometry_mode": "rigid",
        "cells": {
            "0": [{"id": "u"}, {"id": "w"}],
            "1": [{"id": "e", "reverses_orientation": True}, {"id": "f"}],
            "2": [{"id": "F"}],
        },
        "boundaries": {"1": [[-1, 1], [1, -1]], "2": [[1], [1]]},
    }
    path = tmp_path / "reversing.json"
    path.write_text(json.dumps(doc), encoding="utf-8")

    assert cli("check", str(path)).exit_code == 1
    assert cli("homology", str(path), "--mode", "rigid").exit_code == 1


def test_malformed_documents(cli, tmp_path):
    """Test documentos mal formados o inexistentes dan código 1"""
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"name": "bad"}), encoding="utf-8")
    result = cli("check", str(path))
    assert result.exit_code == 1
    assert result.stdout == ""
    assert "dimension" in result.stderr

    result = cli("check", str(tmp_path / "missing.json"))
    assert result.exit_code == 1


def test_usage_errors(cli):
    """Test errores de uso dan código 2"""
    assert cli().exit_code == 2
    assert cli("triangulate").exit_code == 2
    assert cli("check").exit_code == 2
    assert cli("check", "spec.json", "--builtin", "fibonacci").exit_code == 2
    assert cli("check", "--builtin", "pinwheel").exit_code == 2
    assert cli("homology", "--builtin", "fibonacci").exit_code == 2
    assert cli("cohomology", "--builtin", "fibonacci", "--hull", "pinched").exit_code == 2


def test_homology_command(cli):
    """Test homología rígida de Penrose en texto y JSON"""
    result = cli("homology", "--builtin", "penrose-kite-dart", "--mode", "rigid")
    assert result.exit_code == 0
    assert result.stdout == "H_0 = Z^2 + Z/5\nH_1 = Z\nH_2 = Z\n"

    result = cli("homology", "--builtin", "penrose-kite-dart", "--mode", "rigid-modified", "--degree", "0")
    assert result.stdout == "H_0 = Z^2\n"

    document = json.loads(cli("homology", "--builtin", "penrose-kite-dart", "--mode", "rigid", "--json").stdout)
    assert document["mode"] == "rigid"
    assert [entry["group"] for entry in document["homology"]] == ["Z^2 + Z/5", "Z", "Z"]
    assert len(document["homology"][0]["generators"]) == 3


def test_homology_limit_command(cli):
    """Test límites directos desde la línea de comandos"""
    result = cli("homology", "--builtin", "triangle-solenoid-translation", "--mode", "translation", "--limit")
    assert result.exit_code == 0
    assert result.stdout == "H_0 = Z[1/2]\nH_1 = Z[1/2]^2\nH_2 = Z\n"

    result = cli("homology", "--builtin", "triangle-periodic-rigid", "--mode", "rigid", "--limit")
    assert result.exit_code == 1


def test_homology_mode_mismatch(cli):
    """Test modo por traslaciones sobre un spec rígido"""
    result = cli("homology", "--builtin", "penrose-kite-dart", "--mode", "translation")
    assert result.exit_code == 1
    assert result.stderr.endswith("\n")


def test_cohomology_command(cli):
    """Test Čech de las cápsulas de Penrose"""
    result = cli("cohomology", "--builtin", "penrose-kite-dart", "--hull", "rigid")
    assert result.exit_code == 0
    assert result.stdout == "H^0 = Z\nH^1 = Z^2\nH^2 = Z^3\nH^3 = Z^2\n"

    result = cli("cohomology", "--builtin", "penrose-kite-dart", "--hull", "rotation-quotient")
    assert result.stdout.splitlines() == [
        "H^0 = Z",
        "H^1 = Z",
        "H^2 = Z^2",
        "symmetry defect = Z/5 + Z/5 (primary parts Z/5 + Z/5)",
        "quotient homology = Z/5 + Z/5, 0, 0",
    ]

    document = json.loads(cli("cohomology", "--builtin", "square-periodic-rigid", "--hull", "rigid", "--json").stdout)
    assert document["cech"] == ["Z", "Z", "Z + Z/2", "Z"]
    assert document["flags"] == {}


def test_spectral_command(cli):
    """Test salida de la sucesión espectral del cuadrado"""
    result = cli("spectral", "--builtin", "square-periodic-rigid")
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert lines[0] == "E2[0,1] = Z + Z/2 + Z/4"
    assert lines[3] == "E2[0,0] = Z"
    assert lines[6].startswith("d2 = (") and lines[6].endswith(") order 4")
    assert "Einf[0,1] = Z + Z/2" in lines
    assert "Einf[2,0] = Z" in lines
    assert lines[-5:] == ["H^0 = Z", "H^1 = Z", "H^2 = Z + Z/2", "H^3 = Z", "flags: none"]


def test_spectral_json(cli):
    """Test documento JSON de la sucesión espectral de Penrose"""
    document = json.loads(cli("spectral", "--builtin", "penrose-kite-dart", "--json").stdout)
    assert document["cech"] == ["Z", "Z^2", "Z^3", "Z^2"]
    assert document["d2"]["order"] == 5
    assert document["e2"]["0,1"] == "Z^2 + Z/5"
    assert document["einf"]["0,1"] == "Z^2"


def test_spectral_non_stationary(cli):
    """Test homología no estacionaria se rechaza con código 1"""
    result = cli("spectral", "--builtin", "triangle-solenoid-rigid")
    assert result.exit_code == 1
    assert result.stderr == "non-stationary homology unsupported\n"


def test_limit_command(cli):
    """Test límites directos ad hoc"""
    result = cli("limit", "--group", "Z", "--matrix", "4")
    assert result.exit_code == 0
    assert result.stdout == "lim = Z[1/2]\nstatus: verified_profile\nnote: Z[1/4] normalized to Z[1/2]\n"

    result = cli("limit", "--group", "Z + Z/2", "--matrix", "3,0;1,1")
    assert result.stdout.splitlines()[0] == "lim = Z[1/3] + Z/2"

    document = json.loads(cli("limit", "--group", "Z^2", "--matrix", "2,1;0,2", "--json").stdout)
    assert document["status"] == "undetermined"
    assert document["p_divisible_ranks"] == {"2": 2}


def test_limit_command_errors(cli):
    """Test grupos o matrices mal escritos y endomorfismos mal definidos"""
    assert cli("limit", "--group", "Z^2", "--matrix", "1").exit_code == 2
    assert cli("limit", "--group", "Q", "--matrix", "1").exit_code == 2
    assert cli("limit", "--group", "Z", "--matrix", "x").exit_code == 2
    assert cli("limit", "--group", "Z + Z/2", "--matrix", "1,1;0,1").exit_code == 1


def test_verbose_flag(cli):
    """Test --verbose no cambia la salida"""
    assert cli("--verbose", "builtin", "list").stdout == cli("builtin", "list").stdout


def test_output_is_deterministic(cli):
    """Test dos ejecuciones producen la misma salida byte a byte"""
    for name in ("penrose-kite-dart", "triangle-periodic-rigid"):
        assert cli("spectral", "--builtin", name).stdout == cli("spectral", "--builtin", name).stdout


def test_main_writes_streams(capsys):
    """Test main escribe stdout y devuelve el código de salida"""
    assert main(["builtin", "list"]) == 0
    assert capsys.readouterr().out.splitlines() == list(BUILTIN_DOCUMENTS)
    assert main(["limit", "--group", "Z"]) == 2
    assert "--matrix" in capsys.readouterr().err


def test_rotation_quotient_defect_primary_parts(cli):
    """Test defecto de simetría del triángulo y sus partes primarias"""
    document = json.loads(
        cli("cohomology", "--builtin", "triangle-periodic-rigid", "--hull", "rotation-quotient", "--json").stdout
    )
    assert document["cech"] == ["Z", "0", "Z"]
    assert document["defect"] == "Z/6 + Z/6"
    assert document["defect_primary_parts"] == "Z/2 + Z/2 + Z/3 + Z/3"
    assert document["quotient_homology"] == ["Z/6 + Z/6", "0", "0"]
