"""
Команды stot, poles, spectrum, verify, equiv и generate.

Коды выхода: 0 - успех, 1 - ошибка разбора описания графа,
2 - ошибка проверки входных данных, 3 - численная ошибка.

Примеры:
    qgraph stot --graph tetra.json --p-min 0.01 --p-max 6.28 --steps 628
    qgraph poles --graph tetra.json
    qgraph spectrum --graph interval.json --p-min 0 --p-max 31.5
    qgraph equiv --graph triangle.json --graph-b star.json --p-list 0.3,0.7,1.1
    qgraph generate tetrahedron --local tetra2 --out tetra2.json
"""

import functools
import sys
from typing import Any, Callable, Dict, List, Optional

import click
import pandas as pd

from backend.confg.config import config
from backend.internal.entity.errors import (
    RunConfigError,
    ScatteringError,
    VerificationFailedError,
)
from backend.internal.repo.persistent.result_writer import ResultWriter
from backend.pkg.logger import get_logger
from frontend.cli.run_config import RunConfig, parse_float_list
from frontend.utils.formatting import COLUMNS, complex_pair, matrix_pairs, optional_float

logger = get_logger(__name__)


def handle_errors(func: Callable) -> Callable:
    """Ошибки расчёта печатаются в stderr и переводятся в код выхода"""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except ScatteringError as e:
            click.echo(f"Ошибка: {e}", err=True)
            sys.exit(e.exit_code)

    return wrapper


def common_options(func: Callable) -> Callable:
    options = [
        click.option("--out", type=click.Path(dir_okay=False), default=None,
                     help="Файл результата (по умолчанию stdout)"),
        click.option("--format", "output_format", default=None,
                     help="Формат вывода: json или csv"),
        click.option("--tol", type=float, default=None, help="Допуск проверок"),
        click.option("--workers", type=int, default=None,
                     help="Число потоков (по умолчанию число процессоров)"),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def grid_options(func: Callable) -> Callable:
    options = [
        click.option("--p-min", type=float, default=None, help="Начало сетки импульсов"),
        click.option("--p-max", type=float, default=None, help="Конец сетки импульсов"),
        click.option("--steps", type=int, default=None, help="Число точек сетки"),
        click.option("--p-list", default=None, help="Явный список импульсов через запятую"),
        click.option("--p-imag", type=float, default=0.0, help="Мнимая часть импульсов сетки"),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def make_run_config(command: str, **kwargs) -> RunConfig:
    """Значения по умолчанию берутся из конфигурации приложения"""
    cli_config = config.cli
    run = RunConfig(
        command=command,
        graph=kwargs.get("graph"),
        graph_b=kwargs.get("graph_b"),
        p_min=kwargs.get("p_min"),
        p_max=kwargs.get("p_max"),
        steps=kwargs.get("steps"),
        p_list=parse_float_list(kwargs.get("p_list")),
        p_imag=kwargs.get("p_imag") or 0.0,
        unit=kwargs.get("unit"),
        out=kwargs.get("out"),
        output_format=kwargs.get("output_format") or cli_config.output_format,
        tol=kwargs.get("tol") if kwargs.get("tol") is not None else cli_config.tol,
        workers=kwargs.get("workers") if kwargs.get("workers") is not None else cli_config.workers,
    )
    logger.debug("Параметры запуска: %s", run)
    return run


def emit(
    services: Dict[str, Any],
    run: RunConfig,
    payload: Dict[str, Any],
    rows: List[Dict[str, Any]],
) -> None:
    writer: ResultWriter = services["result_writer"]
    if run.output_format == "csv":
        text = writer.render_csv(pd.DataFrame(rows, columns=COLUMNS[run.command]))
    else:
        text = writer.render_json(payload)
    writer.write(text, run.out)


@click.group()
@click.pass_context
def cli(ctx: click.Context):
    """Полная матрица рассеяния квантового графа"""
    if ctx.obj is None:
        raise click.UsageError("Сервисы приложения не инициализированы")


@cli.command()
@click.option("--graph", type=click.Path(), required=True, help="Описание графа (JSON)")
@grid_options
@common_options
@click.pass_obj
@handle_errors
def stot(services, **kwargs):
    """S_tot(p) и |S_ij|^2 в каждой точке сетки"""
    run = make_run_config("stot", **kwargs)
    run.validate()
    service = services["scattering_service"]
    system = service.load_system(run.graph)
    records = service.stot_grid(system, run.momenta(), run.workers)

    points, rows = [], []
    for record in records:
        p, matrix = record["p"], record["matrix"]
        points.append(
            {
                "p": complex_pair(p),
                "near_pole": record["near_pole"],
                "sigma_min": optional_float(record["sigma_min"]),
                "sigma_max": optional_float(record["sigma_max"]),
                "matrix": None if matrix is None else matrix_pairs(matrix),
                "abs2": None if matrix is None else (abs(matrix) ** 2).tolist(),
            }
        )
        if matrix is None:
            rows.append({"p_re": p.real, "p_im": p.imag, "near_pole": True})
            continue
        for i in range(matrix.shape[0]):
            for j in range(matrix.shape[1]):
                z = complex(matrix[i, j])
                rows.append(
                    {
                        "p_re": p.real,
                        "p_im": p.imag,
                        "row": i + 1,
                        "col": j + 1,
                        "re": z.real,
                        "im": z.imag,
                        "abs2": abs(z) ** 2,
                        "near_pole": False,
                    }
                )

    skipped = sum(1 for record in records if record["near_pole"])
    if skipped:
        click.echo(f"Точек около полюсов: {skipped}", err=True)
    emit(services, run, {"command": "stot", "points": points}, rows)


@cli.command()
@click.option("--graph", type=click.Path(), required=True, help="Описание графа (JSON)")
@click.option("--unit", type=float, default=None, help="Общая единица длины рёбер")
@click.option("--all-roots", is_flag=True, help="Выводить и корни, не связанные с внешними рёбрами")
@common_options
@click.pass_obj
@handle_errors
def poles(services, all_roots, **kwargs):
    """Полюса S_tot из секулярного многочлена"""
    run = make_run_config("poles", **kwargs)
    run.validate(needs_grid=False)
    system = services["scattering_service"].load_system(run.graph)
    poly, found = services["spectral_service"].poles(system, run.unit, include_decoupled=all_roots)

    records = [
        {
            "zeta": complex_pair(pole.zeta),
            "p_representative": complex_pair(pole.momentum),
            "multiplicity": pole.multiplicity,
            "coupled": pole.coupled,
        }
        for pole in found
    ]
    rows = [
        {
            "zeta_re": complex(pole.zeta).real,
            "zeta_im": complex(pole.zeta).imag,
            "p_re": complex(pole.momentum).real,
            "p_im": complex(pole.momentum).imag,
            "multiplicity": pole.multiplicity,
            "coupled": pole.coupled,
        }
        for pole in found
    ]
    payload = {
        "command": "poles",
        "unit": poly.unit_length,
        "degree_bound": poly.degree_bound,
        "coefficients": [complex_pair(c) for c in poly.coefficients],
        "poles": records,
    }
    emit(services, run, payload, rows)


@cli.command()
@click.option("--graph", type=click.Path(), required=True, help="Описание графа (JSON)")
@click.option("--p-min", type=float, required=True, help="Левый конец интервала (не включается)")
@click.option("--p-max", type=float, required=True, help="Правый конец интервала")
@common_options
@click.pass_obj
@handle_errors
def spectrum(services, **kwargs):
    """Собственные импульсы компактного графа на (p_min, p_max]"""
    run = make_run_config("spectrum", **kwargs)
    run.validate(needs_grid=False)
    p_min, p_max = run.interval()
    system = services["scattering_service"].load_system(run.graph)
    momenta = services["spectral_service"].spectrum(system, p_min, p_max)

    payload = {"command": "spectrum", "p_min": p_min, "p_max": p_max, "momenta": momenta}
    emit(services, run, payload, [{"p": p} for p in momenta])


@cli.command()
@click.option("--graph", type=click.Path(), required=True, help="Описание графа (JSON)")
@grid_options
@common_options
@click.pass_obj
@handle_errors
def verify(services, **kwargs):
    """Отклонения от S(p)S(-p) = I и от унитарности"""
    run = make_run_config("verify", **kwargs)
    run.validate()
    service = services["scattering_service"]
    system = service.load_system(run.graph)
    records = service.verify_grid(system, run.momenta(), run.workers)

    rows = [
        {
            "p_re": r["p"].real,
            "p_im": r["p"].imag,
            "involution": optional_float(r["involution"]),
            "unitarity": optional_float(r["unitarity"]),
            "near_pole": r["near_pole"],
        }
        for r in records
    ]
    worst = max(
        (d for r in records for d in (r["involution"], r["unitarity"]) if d is not None),
        default=0.0,
    )
    payload = {
        "command": "verify",
        "tol": run.tol,
        "max_defect": worst,
        "points": [dict(row, p=complex_pair(r["p"])) for row, r in zip(rows, records)],
    }
    emit(services, run, payload, rows)
    if worst > run.tol:
        raise VerificationFailedError(f"Максимальное отклонение {worst:.3e} больше допуска {run.tol}")


@cli.command()
@click.option("--graph", type=click.Path(), required=True, help="Первый граф (JSON)")
@click.option("--graph-b", type=click.Path(), required=True, help="Второй граф (JSON)")
@grid_options
@common_options
@click.pass_obj
@handle_errors
def equiv(services, **kwargs):
    """Сравнить полные матрицы рассеяния двух графов"""
    run = make_run_config("equiv", **kwargs)
    run.validate()
    service = services["scattering_service"]
    first = service.load_system(run.graph)
    second = service.load_system(run.graph_b)
    records = service.equiv_grid(first, second, run.momenta(), run.workers)

    rows = [
        {
            "p_re": r["p"].real,
            "p_im": r["p"].imag,
            "deviation": optional_float(r["deviation"]),
            "near_pole": r["near_pole"],
        }
        for r in records
    ]
    worst = max((r["deviation"] for r in records if r["deviation"] is not None), default=0.0)
    payload = {
        "command": "equiv",
        "tol": run.tol,
        "max_deviation": worst,
        "points": [dict(row, p=complex_pair(r["p"])) for row, r in zip(rows, records)],
    }
    emit(services, run, payload, rows)
    if worst > run.tol:
        raise VerificationFailedError(f"Графы различаются: отклонение {worst:.3e}, допуск {run.tol}")


@cli.command()
@click.argument("name")
@click.option("--length", type=float, default=None, help="Длина рёбер")
@click.option("--lengths", default=None, help="Длины d12,d13,d23 для треугольника и звезды")
@click.option("--r", type=float, default=None, help="Коэффициент отражения")
@click.option("--r2", type=float, default=None, help="Отражение во второй вершине отрезка")
@click.option("--n", type=int, default=None, help="Число внешних рёбер звезды")
@click.option("--local", type=click.Choice(["kirchhoff", "tetra2"]), default=None,
              help="Локальная матрица платоновых тел")
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Файл описания графа")
@click.pass_obj
@handle_errors
def generate(services, name, length, lengths, r, r2, n, local, out):
    """Описание графа-образца NAME в формате JSON"""
    params: Dict[str, Optional[Any]] = {
        "d": length,
        "length": length,
        "r": r,
        "r1": r,
        "r2": r2,
        "n": n,
        "local": local,
        "lengths": parse_float_list(lengths),
    }
    if params["lengths"] is not None and len(params["lengths"]) != 3:
        raise RunConfigError("--lengths ожидает три числа: d12,d13,d23")
    params = {key: value for key, value in params.items() if value is not None}
    text = services["fixture_service"].generate_text(name, **params)
    services["result_writer"].write(text if text.endswith("\n") else text + "\n", out)
