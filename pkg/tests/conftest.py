"""Fixtures compartilhadas."""

import logging

import numpy as np
import pytest

from app.data.initial import TaylorGreenGenerator
from app.data.sampler import FieldSampler
from app.spectral.grid import Grid
from app.utils import logging as lab_logging


@pytest.fixture(autouse=True)
def reset_logging():
    """Remove handlers instalados pela CLI (streams do CliRunner são fechados)."""
    yield
    root = logging.getLogger()
    for handler in lab_logging._installed:
        root.removeHandler(handler)
    lab_logging._installed.clear()


@pytest.fixture
def grid():
    """Grade 2D pequena."""
    return Grid(2, 16)


@pytest.fixture
def rng():
    """Gerador determinístico."""
    return np.random.default_rng(1234)


@pytest.fixture
def scalar_field(grid, rng):
    """Campo escalar aleatório de banda limitada (sem Nyquist)."""
    return FieldSampler(grid, components=1, slope=1.0, band=5).draw(rng)


@pytest.fixture
def taylor_green(grid):
    """Vórtice de Taylor–Green em 2D."""
    return TaylorGreenGenerator(amp=1.0).generate(grid)
