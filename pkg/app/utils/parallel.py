"""Pool de workers para avaliações independentes."""

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Optional, TypeVar

T = TypeVar("T")
R = TypeVar("R")

THREADS_ENV = "FL_NSE_THREADS"


def resolve_workers(workers: Optional[int] = None) -> int:
    """Resolve o número de workers.

    Args:
        workers: Valor explícito; None lê ``FL_NSE_THREADS`` (0 = automático).

    Returns:
        Número de workers (>= 1).
    """
    if workers is None:
        raw = os.getenv(THREADS_ENV, "0").strip() or "0"
        try:
            workers = int(raw)
        except ValueError:
            raise ValueError(f"{THREADS_ENV} deve ser inteiro, recebido: {raw!r}") from None
    if workers < 0:
        raise ValueError(f"Número de workers inválido: {workers}")
    if workers == 0:
        workers = os.cpu_count() or 1
    return workers


def parallel_map(
    fn: Callable[[T], R], items: Iterable[T], workers: Optional[int] = None
) -> list[R]:
    """Aplica ``fn`` a cada item, preservando a ordem.

    Args:
        fn: Função pura aplicada a cada item.
        items: Itens independentes.
        workers: Número de workers (None = configuração do ambiente).

    Returns:
        Resultados na ordem dos itens.
    """
    items = list(items)
    n_workers = min(resolve_workers(workers), max(len(items), 1))
    if n_workers <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=n_workers) as pool:
        return list(pool.map(fn, items))
