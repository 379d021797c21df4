"""Persistência binária de campos espectrais (formato SFL1)."""

import struct
from pathlib import Path

import numpy as np

from app.errors import FieldFormatError
from app.spectral.grid import Grid, SpectralField

MAGIC = b"SFL1"
VERSION = 1
_HEAD = struct.Struct("<4sIII")
_LENGTH = struct.Struct("<d")
_COMPLEX = np.dtype("<c16")


def field_file_size(d: int, components: int, n: int) -> int:
    """Tamanho em bytes: 24 + 4d + 16·c·n^d."""
    return _HEAD.size + 4 * d + _LENGTH.size + _COMPLEX.itemsize * components * n**d


def encode_field(f: SpectralField) -> bytes:
    grid = f.grid
    header = _HEAD.pack(MAGIC, VERSION, grid.d, f.components)
    header += struct.pack(f"<{grid.d}I", *grid.shape)
    header += _LENGTH.pack(grid.L)
    return header + np.ascontiguousarray(f.coeffs, dtype=_COMPLEX).tobytes(order="C")


def decode_field(data: bytes) -> SpectralField:
    """Decodifica bytes SFL1.

    Raises:
        FieldFormatError: Magic, versão, dimensão ou tamanho inválidos.
    """
    if len(data) < _HEAD.size:
        raise FieldFormatError(f"Arquivo curto demais: {len(data)} bytes")
    magic, version, d, components = _HEAD.unpack_from(data, 0)
    if magic != MAGIC:
        raise FieldFormatError(f"Magic inválido: {magic!r}")
    if version != VERSION:
        raise FieldFormatError(f"Versão não suportada: {version}")
    if d not in (2, 3) or components < 1:
        raise FieldFormatError(f"Cabeçalho inválido: d={d}, componentes={components}")
    offset = _HEAD.size
    if len(data) < offset + 4 * d + _LENGTH.size:
        raise FieldFormatError("Cabeçalho truncado")
    ns = struct.unpack_from(f"<{d}I", data, offset)
    offset += 4 * d
    (length,) = _LENGTH.unpack_from(data, offset)
    offset += _LENGTH.size
    if len(set(ns)) != 1:
        raise FieldFormatError(f"Somente grades cúbicas são suportadas: n={ns}")
    expected = field_file_size(d, components, ns[0])
    if len(data) != expected:
        raise FieldFormatError(f"Tamanho {len(data)} difere do esperado {expected}")
    try:
        grid = Grid(d, ns[0], length)
    except ValueError as exc:
        raise FieldFormatError(f"Grade inválida no arquivo: {exc}") from exc
    coeffs = np.frombuffer(data, dtype=_COMPLEX, offset=offset).reshape((components,) + grid.shape)
    mean_zero = bool(np.all(coeffs[(slice(None),) + grid.zero_index] == 0))
    return SpectralField(grid, coeffs.astype(np.complex128), mean_zero)


def write_field(path: str | Path, f: SpectralField) -> Path:
    """Grava um campo em disco e retorna o caminho."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(encode_field(f))
    return path


def read_field(path: str | Path) -> SpectralField:
    """Lê um campo gravado por ``write_field``."""
    return decode_field(Path(path).read_bytes())
