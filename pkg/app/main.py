"""Ponto de entrada principal com CLI."""

import functools
import math
import sys
from pathlib import Path
from typing import Any, Callable, Optional

import click

from app import __version__
from app.config import Config
from app.data.field_file import read_field, write_field
from app.data.initial import KINDS, generate_initial_data
from app.errors import ConfigError, DomainError, FieldFormatError, NumericError
from app.norms.sobolev import NormSpec, sfl_norm
from app.report.emitter import ReportEmitter
from app.solver.mild import RunConfig, run_mild_solution
from app.spectral.grid import Grid
from app.utils.logging import setup_logging
from app.verify.suites import SUITES, SuiteConfig, run_suite

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_NUMERIC = 2

QUIET = {"logging": {"level": "WARNING"}}


class LabGroup(click.Group):
    """Grupo que converte erros de uso no código de saída 1."""

    def main(self, *args: Any, **kwargs: Any) -> Any:
        kwargs["standalone_mode"] = False
        try:
            rv = super().main(*args, **kwargs)
        except click.UsageError as exc:
            exc.show()
            sys.exit(EXIT_CONFIG)
        except click.ClickException as exc:
            exc.show()
            sys.exit(exc.exit_code)
        except click.Abort:
            click.echo("Abortado!", err=True)
            sys.exit(EXIT_CONFIG)
        sys.exit(rv if isinstance(rv, int) else EXIT_OK)


def handle_errors(fn: Callable[..., int]) -> Callable[..., int]:
    """Mapeia exceções do laboratório nos códigos de saída."""

    @functools.wraps(fn)
    def wrapper(*args: Any, **kwargs: Any) -> int:
        try:
            return fn(*args, **kwargs)
        except (NumericError, DomainError) as exc:
            click.echo(f"❌ Falha numérica: {exc}", err=True)
            return EXIT_NUMERIC
        except (ConfigError, FieldFormatError) as exc:
            click.echo(f"❌ Erro de configuração: {exc}", err=True)
            return EXIT_CONFIG
        except OSError as exc:
            click.echo(f"❌ Erro de arquivo: {exc}", err=True)
            return EXIT_CONFIG
        except ValueError as exc:
            click.echo(f"❌ Parâmetro inválido: {exc}", err=True)
            return EXIT_CONFIG

    return wrapper


@click.group(cls=LabGroup)
def cli() -> None:
    """Laboratório de soluções brandas de Navier–Stokes em espaços de Sobolev–Fourier–Lorentz."""
    pass


@cli.command()
@click.option("--kind", required=True, type=click.Choice(KINDS), help="Tipo de dado inicial")
@click.option("--out", required=True, help="Arquivo de saída (.sfl)")
@click.option("--n", "n", default=32, type=int, help="Modos por eixo")
@click.option("--d", "d", default=2, type=int, help="Dimensão (2 ou 3)")
@click.option("--L", "length", default=2.0 * math.pi, type=float, help="Lado do domínio")
@click.option("--slope", default=1.0, type=float, help="Expoente do envelope |ξ|^{-a}")
@click.option("--seed", default=0, type=int, help="Semente")
@click.option("--amp", default=1.0, type=float, help="Amplitude")
@click.option("--band", default=None, type=int, help="Maior |k_i| sorteado")
@handle_errors
def gen(
    kind: str,
    out: str,
    n: int,
    d: int,
    length: float,
    slope: float,
    seed: int,
    amp: float,
    band: Optional[int],
) -> int:
    """Gera um dado inicial e grava em formato SFL1."""
    setup_logging(QUIET)
    grid = Grid(d, n, length)
    field = generate_initial_data(kind, grid, amp=amp, slope=slope, seed=seed, band=band)
    path = write_field(out, field)
    click.echo(f"✅ Campo {kind} (d={d}, n={n}) gravado em {path}")
    return EXIT_OK


@cli.command()
@click.option("--field", "field_path", required=True, help="Arquivo SFL1")
@click.option("--s", "s", default=0.0, type=float, help="Regularidade s")
@click.option("--p", "p", default=2.0, type=float, help="Expoente p")
@click.option("--r", "r", default=2.0, type=float, help="Índice fino r (inf aceito)")
@click.option("--surrogate", is_flag=True, help="Substituto sup para p = 1")
@handle_errors
def norm(field_path: str, s: float, p: float, r: float, surrogate: bool) -> int:
    """Imprime a norma Ḣ^s_{𝓛^{p,r}} de um campo."""
    setup_logging(QUIET)
    field = read_field(field_path)
    click.echo(repr(sfl_norm(field, NormSpec(s, p, r), sup_surrogate=surrogate)))
    return EXIT_OK


@cli.command()
@click.option("--config", default="config.yaml", help="Caminho para config.yaml")
@click.option("--out-dir", default="out", help="Diretório dos relatórios")
@handle_errors
def simulate(config: str, out_dir: str) -> int:
    """Resolve a equação integral por Picard e grava trajectory.csv e report.json."""
    cfg = Config(config)
    setup_logging(cfg.as_dict())
    run = RunConfig.from_config(cfg)
    regime = run.regime

    click.echo("🚀 Iniciando solução branda...")
    click.echo(f"   Grade: d={run.d}, n={run.n}, T={run.T}, M={run.M}")
    click.echo(f"   Dado inicial: {run.initial.kind} (amp={run.initial.amp})")
    click.echo(f"   Regime: {regime.name}, K = {regime.aux.label()}, α = {regime.alpha:.4g}")

    _, report = run_mild_solution(run, workers=cfg.threads)
    paths = ReportEmitter().generate(report, out_dir)

    click.echo("\n📈 Resultados:")
    click.echo(f"   Veredito: {report.verdict}")
    click.echo(f"   Iterações: {report.picard.iterations}")
    click.echo(f"   Primeira razão de contração: {report.picard.first_ratio:.4g}")
    click.echo(f"   Pequenez calórica: {report.caloric_smallness:.6g}")
    click.echo(f"   Norma crítica (sup): {report.critical_sup:.6g}")
    click.echo(f"   Tempo: {report.wall_time:.2f}s")
    click.echo(f"\n📄 Relatórios: {', '.join(str(p) for p in paths)}")

    if not report.picard.converged:
        click.echo(f"\n⚠️  Picard não convergiu ({report.verdict})", err=True)
        return EXIT_NUMERIC
    click.echo("\n✅ Solução concluída com sucesso!")
    return EXIT_OK


@cli.command()
@click.option("--suite", "suite", default=None, type=click.Choice(list(SUITES)),
              help="Suíte (sobrepõe suite.name)")
@click.option("--config", default="config.yaml", help="Caminho para config.yaml")
@click.option("--out-dir", default="out", help="Diretório dos relatórios")
@handle_errors
def verify(suite: Optional[str], config: str, out_dir: str) -> int:
    """Executa uma suíte de verificação e grava suite.csv e report.json."""
    cfg = Config(config)
    setup_logging(cfg.as_dict())
    suite_cfg = SuiteConfig.from_config(cfg, suite)

    click.echo(
        f"🔬 Executando suíte {suite_cfg.name} ({suite_cfg.kind}, {suite_cfg.trials} sorteios)"
    )
    result = run_suite(suite_cfg, workers=cfg.threads)
    paths = ReportEmitter().generate(result, Path(out_dir))

    click.echo(f"   Máximo empírico: {result.empirical_max:.6g}")
    if result.fitted_slope is not None:
        click.echo(f"   Inclinação: {result.fitted_slope:.6g} (alvo {result.target:.6g})")
    click.echo(f"📄 Relatórios: {', '.join(str(p) for p in paths)}")

    if not result.passed:
        click.echo(f"\n❌ Suíte {suite_cfg.name} falhou", err=True)
        return EXIT_NUMERIC
    click.echo(f"\n✅ Suíte {suite_cfg.name} aprovada!")
    return EXIT_OK


@cli.command()
def version() -> int:
    """Mostra a versão."""
    click.echo(f"fl-nse {__version__}")
    return EXIT_OK


if __name__ == "__main__":
    cli()
