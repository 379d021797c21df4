"""Exceções do laboratório."""

from typing import Optional


class ConfigError(ValueError):
    """Configuração inválida ou hipótese de expoente violada."""


class DomainError(ValueError):
    """Campo fora do domínio da operação (média não nula, divergência não nula)."""


class NumericError(ArithmeticError):
    """Falha numérica: espectro não hermitiano ou valores não finitos."""

    def __init__(self, message: str, max_asymmetry: Optional[float] = None) -> None:
        super().__init__(message)
        self.max_asymmetry = max_asymmetry


class FieldFormatError(ValueError):
    """Arquivo de campo corrompido ou incompatível."""
