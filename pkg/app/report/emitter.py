"""Emissão de relatórios CSV + JSON."""

import json
from pathlib import Path
from typing import Any, Protocol, Sequence

import numpy as np
import pandas as pd

from app.utils.logging import get_logger

logger = get_logger(__name__)

FLOAT_FORMAT = "%.17g"


class Reportable(Protocol):
    """Relatório com tabela por linha e dicionário completo."""

    @property
    def csv_name(self) -> str: ...

    @property
    def columns(self) -> Sequence[str]: ...

    def rows(self) -> Sequence[dict[str, Any]]: ...

    def to_dict(self) -> dict[str, Any]: ...


def _to_builtin(value: Any) -> Any:
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, Path):
        return str(value)
    raise TypeError(f"Valor não serializável: {type(value).__name__}")


class ReportEmitter:
    """Gerador de relatórios CSV/JSON para resoluções e suítes."""

    def __init__(self, float_format: str = FLOAT_FORMAT) -> None:
        self.float_format = float_format

    def write_table(
        self, rows: Sequence[dict[str, Any]], columns: Sequence[str], path: str | Path
    ) -> Path:
        """Grava a tabela com pandas (floats com 17 dígitos significativos).

        Args:
            rows: Linhas.
            columns: Colunas na ordem do cabeçalho.
            path: Caminho do CSV.

        Returns:
            Caminho gravado.
        """
        path = Path(path)
        df = pd.DataFrame(list(rows), columns=list(columns))
        df.to_csv(path, index=False, float_format=self.float_format)
        return path

    def write_json(self, data: dict[str, Any], path: str | Path) -> Path:
        """Grava o JSON com a repr mais curta de cada float (ida e volta exata)."""
        path = Path(path)
        path.write_text(
            json.dumps(data, indent=2, default=_to_builtin, ensure_ascii=False) + "\n",
            encoding="utf-8",
        )
        return path

    def generate(self, report: Reportable, output_dir: str | Path) -> list[Path]:
        """Gera os arquivos de um relatório.

        Args:
            report: SolveReport ou SuiteResult.
            output_dir: Diretório de saída (criado se preciso).

        Returns:
            Caminhos do CSV e do JSON.
        """
        out = Path(output_dir)
        out.mkdir(parents=True, exist_ok=True)
        csv_path = self.write_table(report.rows(), report.columns, out / report.csv_name)
        json_path = self.write_json(report.to_dict(), out / "report.json")
        logger.info(
            "Relatório gravado",
            extra={"extra": {"csv": str(csv_path), "json": str(json_path)}},
        )
        return [csv_path, json_path]


def emit_report(report: Reportable, output_dir: str | Path) -> list[Path]:
    """Atalho para ``ReportEmitter().generate``."""
    return ReportEmitter().generate(report, output_dir)


def read_table(path: str | Path) -> pd.DataFrame:
    """Lê de volta um CSV gravado por ``ReportEmitter``."""
    return pd.read_csv(path, float_precision="round_trip")
