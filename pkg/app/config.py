"""Gerenciamento de configurações."""

import math
import os
from pathlib import Path
from typing import Any, Optional

import yaml
from dotenv import load_dotenv

from app.errors import ConfigError

# Chaves aceitas por seção (None = valor escalar no topo; "params" é livre)
SCHEMA: dict[str, Optional[frozenset[str]]] = {
    "grid": frozenset({"d", "n", "L"}),
    "norms": frozenset({"p", "r", "p_tilde", "s_aux"}),
    "time": frozenset({"T", "M", "gamma"}),
    "picard": frozenset(
        {"tol", "max_iter", "eta", "eta_trials", "vanishing_fraction", "series_threshold"}
    ),
    "initial": frozenset({"kind", "amp", "slope", "seed", "band"}),
    "suite": frozenset({"name", "trials", "seed", "n", "d", "L", "params"}),
    "logging": frozenset({"level", "format", "file"}),
    "tol_exact": None,
}
FREE_SECTIONS = {("suite", "params")}


def _check_keys(root: yaml.Node) -> None:
    """Rejeita chaves desconhecidas informando a linha."""
    if not isinstance(root, yaml.MappingNode):
        raise ConfigError(
            f"Configuração deve ser um mapeamento (linha {root.start_mark.line + 1})"
        )
    for key_node, value_node in root.value:
        key = key_node.value
        line = key_node.start_mark.line + 1
        if key not in SCHEMA:
            raise ConfigError(f"Chave desconhecida '{key}' na linha {line}")
        allowed = SCHEMA[key]
        if allowed is None:
            continue
        if not isinstance(value_node, yaml.MappingNode):
            raise ConfigError(f"Seção '{key}' deve ser um mapeamento (linha {line})")
        for sub_key_node, _ in value_node.value:
            sub_key = sub_key_node.value
            if sub_key not in allowed:
                raise ConfigError(
                    f"Chave desconhecida '{key}.{sub_key}' na linha "
                    f"{sub_key_node.start_mark.line + 1}"
                )


class Config:
    """Classe para gerenciar configurações do projeto."""

    def __init__(self, config_path: str | Path = "config.yaml") -> None:
        """Inicializa as configurações.

        Args:
            config_path: Caminho para o arquivo de configuração YAML.
        """
        # Carregar variáveis de ambiente
        load_dotenv()

        config_file = Path(config_path)
        if not config_file.exists():
            raise FileNotFoundError(f"Arquivo de configuração não encontrado: {config_path}")

        text = config_file.read_text(encoding="utf-8")
        self._config = self._parse(text)
        self.path = config_file

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "Config":
        """Cria uma configuração a partir de um dicionário (mesma validação do YAML)."""
        instance = cls.__new__(cls)
        instance._config = instance._parse(yaml.safe_dump(data, sort_keys=False))
        instance.path = None
        return instance

    @staticmethod
    def _parse(text: str) -> dict[str, Any]:
        try:
            root = yaml.compose(text)
            if root is None:
                return {}
            _check_keys(root)
            data = yaml.safe_load(text)
        except yaml.YAMLError as exc:
            mark = getattr(exc, "problem_mark", None)
            where = f" (linha {mark.line + 1})" if mark is not None else ""
            raise ConfigError(f"YAML malformado{where}: {exc}") from exc
        return dict(data or {})

    def get(self, key: str, default: Any = None) -> Any:
        """Obtém um valor de configuração.

        Args:
            key: Chave de configuração (suporta notação de ponto, ex: 'grid.n').
            default: Valor padrão se a chave não existir.

        Returns:
            Valor da configuração.
        """
        value: Any = self._config
        for k in key.split("."):
            if isinstance(value, dict) and k in value:
                value = value[k]
            else:
                return default
        return value

    def get_env(self, key: str, default: str = "") -> str:
        """Obtém uma variável de ambiente.

        Args:
            key: Nome da variável de ambiente.
            default: Valor padrão se a variável não existir.

        Returns:
            Valor da variável de ambiente.
        """
        return os.getenv(key, default)

    def as_dict(self) -> dict[str, Any]:
        """Retorna uma cópia rasa do dicionário de configuração."""
        return dict(self._config)

    @property
    def grid_d(self) -> int:
        """Retorna a dimensão espacial."""
        return int(self.get("grid.d", 2))

    @property
    def grid_n(self) -> int:
        """Retorna o número de modos por eixo."""
        return int(self.get("grid.n", 32))

    @property
    def grid_L(self) -> float:
        """Retorna o lado do domínio periódico."""
        return float(self.get("grid.L", 2.0 * math.pi))

    @property
    def tol_exact(self) -> float:
        """Retorna a tolerância das verificações exatas."""
        return float(self.get("tol_exact", 1e-12))

    @property
    def threads(self) -> int:
        """Retorna o limite de workers (0 = automático)."""
        raw = self.get_env("FL_NSE_THREADS", "0").strip() or "0"
        try:
            return int(raw)
        except ValueError:
            raise ConfigError(f"FL_NSE_THREADS deve ser inteiro, recebido: {raw!r}") from None
