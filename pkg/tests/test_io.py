"""Testes para arquivos de campo e relatórios."""

import json
import math
import struct

import numpy as np
import pytest

from app.data.field_file import (
    decode_field,
    encode_field,
    field_file_size,
    read_field,
    write_field,
)
from app.data.initial import InitialSpec
from app.errors import FieldFormatError
from app.picard.fixed_point import CONVERGED
from app.report.emitter import ReportEmitter, emit_report, read_table
from app.solver.mild import RunConfig, run_mild_solution
from app.verify.suites import RATIO, SuiteResult


def test_field_file_size():
    """Testa 24 + 4d + 16·c·n^d."""
    assert field_file_size(2, 2, 16) == 24 + 8 + 16 * 2 * 256
    assert field_file_size(3, 1, 8) == 24 + 12 + 16 * 512


def test_write_and_read_field(tmp_path, taylor_green):
    """Testa gravação e leitura bit a bit."""
    path = write_field(tmp_path / "fields" / "u0.sfl", taylor_green)
    assert path.stat().st_size == field_file_size(2, 2, 16)

    loaded = read_field(path)
    assert loaded.grid == taylor_green.grid
    assert loaded.mean_zero
    np.testing.assert_array_equal(loaded.coeffs, taylor_green.coeffs)


def test_rejects_bad_magic(scalar_field):
    """Testa magic diferente de SFL1."""
    data = b"XXXX" + encode_field(scalar_field)[4:]
    with pytest.raises(FieldFormatError, match="Magic"):
        decode_field(data)


def test_rejects_unknown_version(scalar_field):
    """Testa versão diferente de 1."""
    data = bytearray(encode_field(scalar_field))
    struct.pack_into("<I", data, 4, 2)
    with pytest.raises(FieldFormatError, match="Versão"):
        decode_field(bytes(data))


@pytest.mark.parametrize("cut", [3, 20, 100])
def test_rejects_truncated(scalar_field, cut):
    """Testa arquivos truncados em vários pontos."""
    data = encode_field(scalar_field)
    with pytest.raises(FieldFormatError):
        decode_field(data[:cut])


def test_rejects_trailing_bytes(scalar_field):
    """Testa tamanho maior que o cabeçalho declara."""
    with pytest.raises(FieldFormatError, match="Tamanho"):
        decode_field(encode_field(scalar_field) + b"\x00" * 16)


def test_empty_suite_table(tmp_path):
    """Testa CSV só com cabeçalho para resultado vazio."""
    result = SuiteResult("holder", RATIO, 0, 0)
    result.summarize()
    csv_path, json_path = ReportEmitter().generate(result, tmp_path)

    assert csv_path.name == "suite.csv"
    assert csv_path.read_text(encoding="utf-8").strip() == "trial,scale,value,reference"
    data = json.loads(json_path.read_text(encoding="utf-8"))
    assert data["suite"] == "holder"
    assert math.isnan(data["empirical_max"])


def test_json_floats_round_trip(tmp_path):
    """Testa floats exatos e infinitos no JSON."""
    path = ReportEmitter().write_json(
        {"x": 0.1 + 0.2, "inf": math.inf, "arr": np.array([1.0, 2.5])}, tmp_path / "r.json"
    )
    data = json.loads(path.read_text(encoding="utf-8"))
    assert data["x"] == 0.1 + 0.2
    assert math.isinf(data["inf"])
    assert data["arr"] == [1.0, 2.5]


def test_table_floats_round_trip(tmp_path):
    """Testa que read_table devolve exatamente os floats gravados."""
    values = [0.1 + 0.2, 1.0 / 3.0, math.pi * 1e10, 1e-300, -2.0 / 7.0]
    result = SuiteResult("holder", RATIO, len(values), 0)
    result.labels = list(range(len(values)))
    result.scales = [math.sqrt(2.0) * (i + 1) for i in range(len(values))]
    result.values = values
    result.references = [v * (1.0 + 2.0**-52) for v in values]
    result.summarize()

    csv_path, _ = ReportEmitter().generate(result, tmp_path)
    table = read_table(csv_path)
    assert table["value"].tolist() == values
    assert table["scale"].tolist() == result.scales
    assert table["reference"].tolist() == result.references


def test_solve_report_files(tmp_path):
    """Testa relatório de uma resolução convergente."""
    run = RunConfig(d=2, n=16, T=0.25, M=8)
    _, report = run_mild_solution(run, workers=1)
    csv_path, json_path = emit_report(report, tmp_path / "out")

    table = read_table(csv_path)
    assert list(table.columns) == ["t", "weighted_norm", "critical_norm", "div_residual"]
    assert len(table) == run.M + 1
    assert table["t"].iloc[-1] == pytest.approx(run.T)
    data = json.loads(json_path.read_text(encoding="utf-8"))
    assert data["verdict"] == CONVERGED
    assert data["picard"]["iterations"] == report.picard.iterations


def test_diverged_report_is_serializable(tmp_path):
    """Testa relatório de divergência com instante de explosão."""
    run = RunConfig(d=2, n=16, T=0.5, M=8, max_iter=10,
                    initial=InitialSpec("random-divfree", amp=1000.0))
    _, report = run_mild_solution(run, workers=1)
    _, json_path = emit_report(report, tmp_path)

    data = json.loads(json_path.read_text(encoding="utf-8"))
    assert data["verdict"] != CONVERGED
    assert data["residual"] is None
    assert data["blowup_time"] == report.blowup_time
