"""Factory para criar grades e descritores de dados iniciais."""

import math
from typing import Any, Dict

from app.data.initial import InitialSpec
from app.errors import ConfigError
from app.spectral.grid import Grid
from app.utils.logging import get_logger

logger = get_logger(__name__)


def create_grid(config: Dict[str, Any], section: str = "grid") -> Grid:
    """Cria a grade periódica a partir da configuração.

    Args:
        config: Dicionário de configuração.
        section: Seção com as chaves d, n, L.

    Returns:
        Instância de Grid.
    """
    grid_config = config.get(section) or {}
    try:
        return Grid(
            int(grid_config.get("d", 2)),
            int(grid_config.get("n", 32)),
            float(grid_config.get("L", 2.0 * math.pi)),
        )
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"Grade inválida em '{section}': {exc}") from exc


def create_initial_spec(config: Dict[str, Any]) -> InitialSpec:
    """Lê a seção ``initial``.

    Args:
        config: Dicionário de configuração.

    Returns:
        Descritor do dado inicial.
    """
    initial_config = config.get("initial") or {}
    band = initial_config.get("band")
    try:
        spec = InitialSpec(
            kind=str(initial_config.get("kind", "taylor-green")),
            amp=float(initial_config.get("amp", 1.0)),
            slope=float(initial_config.get("slope", 1.0)),
            seed=int(initial_config.get("seed", 0)),
            band=None if band is None else int(band),
        )
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"Seção 'initial' inválida: {exc}") from exc
    if not math.isfinite(spec.amp) or spec.amp < 0:
        raise ConfigError(f"initial.amp deve ser finito e >= 0, recebido: {spec.amp}")
    # tipo desconhecido levanta ConfigError com as opções
    spec.generator()
    logger.debug(
        "Dado inicial configurado",
        extra={"extra": {"kind": spec.kind, "amp": spec.amp, "seed": spec.seed}},
    )
    return spec
