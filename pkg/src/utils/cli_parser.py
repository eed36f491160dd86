# DESTILA (DEJMPS Entanglement Simulation of Two-parameter Infidelity and Loss Analysis) is an open-source Monte Carlo toolkit for entanglement purification under amplitude-damping and dephasing noise.
# Copyright (C) 2025 Gabriel Moraes - Noxfort Labs
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU Affero General Public License as
# published by the Free Software Foundation, either version 3 of the
# License, or (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU Affero General Public License for more details.
#
# You should have received a copy of the GNU Affero General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>.

# File: src/utils/cli_parser.py (NOVO ARQUIVO)
# Author: Gabriel Moraes
# Date: 17 de Outubro de 2026

"""
Linha de comando do DESTILA.

Os padrões de cada flag vêm do settings.ini (SettingsManager); a flag
--config escolhe outro arquivo. Erros de uso viram UsageError com o nome da
flag ofensora, nunca SystemExit.
"""

import argparse
import re
import sys
from dataclasses import dataclass, field

from src.analysis.comparison_table import ReferenceHeadlines
from src.analysis.contour_extractor import CONTOUR_FIELDS
from src.core.enums import (NoiseOrder, NoiseTarget, OutputFormat, PermutationObjective, SimulationMode,
                            SuccessCriterion, enum_choices)
from src.core.errors import UsageError
from src.engine.grid import SEED_LIMIT, GridSpec
from src.protocol.protocol_config import ProtocolConfig
from src.quantum.channels import NoiseModel
from src.rendering.plot_emitter import SLICE_AXES
from src.utils.settings_manager import SettingsManager

DEFAULT_THROUGHPUT_ROUNDS = 5


@dataclass(frozen=True)
class ThroughputRequest:
    gamma: float
    p: float
    max_rounds: int = DEFAULT_THROUGHPUT_ROUNDS
    target_fidelity: float | None = None


@dataclass(frozen=True)
class RunConfig:
    grid: GridSpec
    protocol: ProtocolConfig
    noise: NoiseModel
    mode: SimulationMode
    out_prefix: str
    output_format: OutputFormat
    contours: dict = field(default_factory=dict)
    slices: tuple = ()
    plots: bool = True
    workers: int = 1
    log_dir: str = "logs/destila"
    log_level: str = "INFO"
    metrics_port: int | None = None
    compare: bool = False
    throughput: ThroughputRequest | None = None
    reference_headlines: ReferenceHeadlines = ReferenceHeadlines()
    config_path: str | None = None

    def to_dict(self) -> dict:
        """Forma serializável, embutida no JSON de saída para proveniência."""
        return {
            "grid": self.grid.to_dict(),
            "protocol": self.protocol.to_dict(),
            "noise": self.noise.to_dict(),
            "mode": self.mode.value,
            "out_prefix": self.out_prefix,
            "format": self.output_format.value,
            "contours": {k: list(v) for k, v in self.contours.items()},
            "slices": [[axis, value] for axis, value in self.slices],
            "plots": self.plots,
            "workers": self.workers,
            "compare": self.compare,
            "throughput": None if self.throughput is None else {
                "gamma": self.throughput.gamma,
                "p": self.throughput.p,
                "max_rounds": self.throughput.max_rounds,
                "target_fidelity": self.throughput.target_fidelity,
            },
        }


class DestilaArgumentParser(argparse.ArgumentParser):
    """ArgumentParser que lança UsageError em vez de encerrar o processo."""

    def error(self, message):
        match = re.search(r"(--[\w-]+)", message)
        raise UsageError(f"Uso inválido: {message}", match.group(1) if match else None)


# --- Conversores de argumentos ---

def _unit_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{text}' não é um número real")
    if not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError(f"{value} fora de [0, 1]")
    return value


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{text}' não é um inteiro")
    if value < 1:
        raise argparse.ArgumentTypeError(f"{value} deve ser >= 1")
    return value


def _non_negative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{text}' não é um inteiro")
    if value < 0:
        raise argparse.ArgumentTypeError(f"{value} deve ser >= 0")
    return value


def _seed(text: str) -> int:
    value = _non_negative_int(text)
    if value >= SEED_LIMIT:
        raise argparse.ArgumentTypeError(f"{value} não cabe em 64 bits")
    return value


def parse_range(text: str) -> tuple:
    """'MIN:MAX:STEPS' -> (min, max, steps)."""
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"'{text}' não segue o formato MIN:MAX:STEPS")
    lo, hi = _unit_float(parts[0]), _unit_float(parts[1])
    steps = _positive_int(parts[2])
    if lo > hi:
        raise argparse.ArgumentTypeError(f"mínimo {lo} maior que o máximo {hi}")
    if steps < 2:
        raise argparse.ArgumentTypeError("são necessários ao menos 2 passos")
    return lo, hi, steps


def parse_contour(text: str) -> tuple:
    """'FIELD=LEVEL[,LEVEL...]' -> (field, (levels...))."""
    name, sep, levels = text.partition("=")
    name = name.strip()
    if not sep or name not in CONTOUR_FIELDS:
        raise argparse.ArgumentTypeError(
            f"'{text}' deve ser CAMPO=NIVEL[,NIVEL...] com CAMPO em {', '.join(CONTOUR_FIELDS)}")
    try:
        values = tuple(float(v) for v in levels.split(",") if v.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"níveis inválidos em '{text}'")
    if not values:
        raise argparse.ArgumentTypeError(f"nenhum nível em '{text}'")
    return name, values


def parse_slice(text: str) -> tuple:
    """'gamma=V' ou 'p=V' -> (eixo, valor)."""
    axis, sep, value = text.partition("=")
    axis = axis.strip()
    if not sep or axis not in SLICE_AXES:
        raise argparse.ArgumentTypeError(f"'{text}' deve ser gamma=V ou p=V")
    return axis, _unit_float(value.strip())


def parse_throughput(text: str) -> ThroughputRequest:
    """'GAMMA,P[,K[,TARGET]]'."""
    parts = [p.strip() for p in text.split(",")]
    if not 2 <= len(parts) <= 4:
        raise argparse.ArgumentTypeError(f"'{text}' deve ser GAMMA,P[,K[,TARGET]]")
    gamma, p = _unit_float(parts[0]), _unit_float(parts[1])
    rounds = _positive_int(parts[2]) if len(parts) >= 3 else DEFAULT_THROUGHPUT_ROUNDS
    target = _unit_float(parts[3]) if len(parts) == 4 else None
    return ThroughputRequest(gamma, p, rounds, target)


def _split_entries(text: str) -> list:
    return [entry.strip() for entry in text.split(";") if entry.strip()]


def _settings_contours(settings: SettingsManager) -> dict:
    contours = {}
    for entry in _split_entries(settings.get("OUTPUT", "contours")):
        try:
            name, levels = parse_contour(entry)
        except argparse.ArgumentTypeError as e:
            raise UsageError(f"[OUTPUT] contours inválido: {e}", "OUTPUT.contours") from e
        contours[name] = contours.get(name, ()) + levels
    return contours


def _settings_slices(settings: SettingsManager) -> tuple:
    slices = []
    for entry in _split_entries(settings.get("OUTPUT", "slices")):
        try:
            slices.append(parse_slice(entry))
        except argparse.ArgumentTypeError as e:
            raise UsageError(f"[OUTPUT] slices inválido: {e}", "OUTPUT.slices") from e
    return tuple(slices)


def _enum_setting(settings: SettingsManager, enum_cls, section: str, key: str):
    text = settings.get(section, key)
    try:
        return enum_cls(text)
    except ValueError as e:
        raise UsageError(f"[{section}] {key} = '{text}' inválido; opções: {', '.join(enum_choices(enum_cls))}.",
                         f"{section}.{key}") from e


def build_parser(settings: SettingsManager) -> DestilaArgumentParser:
    s = settings
    gamma_default = (s.getfloat("GRID", "gamma_min"), s.getfloat("GRID", "gamma_max"), s.getint("GRID", "gamma_steps"))
    p_default = (s.getfloat("GRID", "p_min"), s.getfloat("GRID", "p_max"), s.getint("GRID", "p_steps"))
    metrics_default = s.getint("METRICS", "port") if s.getboolean("METRICS", "enabled") else None

    parser = DestilaArgumentParser(
        prog="destila",
        allow_abbrev=False,
        description="Simulação Monte Carlo da purificação de emaranhamento DEJMPS sob ruído de "
                    "amortecimento de amplitude (γ) e defasagem (p).",
    )
    parser.add_argument("--config", metavar="PATH", default=None,
                        help="Arquivo settings.ini alternativo (padrão: config/settings.ini).")

    grid = parser.add_argument_group("grade e amostragem")
    grid.add_argument("--gamma", type=parse_range, default=gamma_default, metavar="MIN:MAX:STEPS",
                      help="Eixo γ (padrão: %(default)s).")
    grid.add_argument("--p", type=parse_range, default=p_default, metavar="MIN:MAX:STEPS",
                      help="Eixo p (padrão: %(default)s).")
    grid.add_argument("--trials", type=_positive_int, default=s.getint("SIMULATION", "trials"), metavar="N",
                      help="Tentativas por célula (padrão: %(default)s).")
    grid.add_argument("--seed", type=_seed, default=s.getint("SIMULATION", "seed"), metavar="S",
                      help="Semente base de 64 bits (padrão: %(default)s).")
    grid.add_argument("--mode", choices=enum_choices(SimulationMode),
                      default=_enum_setting(s, SimulationMode, "SIMULATION", "mode").value,
                      help="Estimador por célula (padrão: %(default)s).")
    grid.add_argument("--workers", type=_non_negative_int, default=s.getint("SIMULATION", "workers"), metavar="N",
                      help="Processos paralelos; 0 = núcleos físicos (padrão: %(default)s).")

    protocol = parser.add_argument_group("protocolo e ruído")
    protocol.add_argument("--rounds", type=_positive_int, default=s.getint("PROTOCOL", "rounds"), metavar="K",
                          help="Rodadas de purificação (padrão: %(default)s).")
    protocol.add_argument("--objective", choices=enum_choices(PermutationObjective),
                          default=_enum_setting(s, PermutationObjective, "PROTOCOL", "objective").value,
                          help="Critério de permutação dos coeficientes de Bell (padrão: %(default)s).")
    protocol.add_argument("--criterion", choices=enum_choices(SuccessCriterion),
                          default=_enum_setting(s, SuccessCriterion, "PROTOCOL", "criterion").value,
                          help="Pós-seleção: 00 ou 11 (coincident) ou só 00 (both-zero) (padrão: %(default)s).")
    protocol.add_argument("--noise-order", choices=enum_choices(NoiseOrder),
                          default=_enum_setting(s, NoiseOrder, "NOISE", "order").value,
                          help="Ordem dos canais em cada qubit (padrão: %(default)s).")
    protocol.add_argument("--noise-target", choices=enum_choices(NoiseTarget),
                          default=_enum_setting(s, NoiseTarget, "NOISE", "target").value,
                          help="Fótons que recebem ruído (padrão: %(default)s).")

    output = parser.add_argument_group("saída")
    output.add_argument("--out", default=s.get("OUTPUT", "out_prefix"), metavar="PREFIX",
                        help="Prefixo dos arquivos de saída (padrão: %(default)s).")
    output.add_argument("--format", choices=enum_choices(OutputFormat),
                        default=_enum_setting(s, OutputFormat, "OUTPUT", "format").value,
                        help="Formato da superfície (padrão: %(default)s).")
    output.add_argument("--contour", type=parse_contour, action="append", metavar="FIELD=LEVEL[,LEVEL...]",
                        help=f"Curvas de nível; FIELD em {', '.join(CONTOUR_FIELDS)}. Repetível.")
    output.add_argument("--slice", type=parse_slice, action="append", metavar="gamma=V|p=V",
                        help="Corte ao longo da linha de grade mais próxima. Repetível.")
    output.add_argument("--no-plots", action="store_true",
                        help="Não gera arquivos .dat, SVG nem cortes.")
    output.add_argument("--compare", action="store_true",
                        help="Gera a tabela de comparação das quatro configurações (<prefixo>_comparison.csv).")
    output.add_argument("--throughput", type=parse_throughput, metavar="GAMMA,P[,K[,TARGET]]",
                        help="Tabela de vazão por número de rodadas num ponto (<prefixo>_throughput.csv).")

    runtime = parser.add_argument_group("execução")
    runtime.add_argument("--log-dir", default=s.get("LOGGING", "log_dir"), metavar="DIR",
                         help="Diretório do console_output.log (padrão: %(default)s).")
    runtime.add_argument("--log-level", default=s.get("LOGGING", "console_level").upper(),
                         choices=["DEBUG", "INFO", "WARNING", "ERROR"],
                         help="Nível do log no console (padrão: %(default)s).")
    runtime.add_argument("--metrics-port", type=_positive_int, default=metrics_default, metavar="PORT",
                         help="Expõe métricas do Prometheus nesta porta.")
    return parser


def _pre_parse_config(args: list) -> str | None:
    pre = DestilaArgumentParser(add_help=False, allow_abbrev=False)
    pre.add_argument("--config", default=None)
    known, _ = pre.parse_known_args(args)
    return known.config


def parse_cli(args: list | None = None, settings: SettingsManager | None = None) -> RunConfig:
    args = sys.argv[1:] if args is None else list(args)
    config_path = _pre_parse_config(args)
    if settings is None:
        settings = SettingsManager(config_path)

    ns = build_parser(settings).parse_args(args)

    contours = {}
    if ns.contour:
        for name, levels in ns.contour:
            contours[name] = contours.get(name, ()) + levels
    else:
        contours = _settings_contours(settings)

    (g_lo, g_hi, g_steps), (p_lo, p_hi, p_steps) = ns.gamma, ns.p
    grid = GridSpec(gamma_min=g_lo, gamma_max=g_hi, steps_gamma=g_steps,
                    p_min=p_lo, p_max=p_hi, steps_p=p_steps,
                    trials=ns.trials, base_seed=ns.seed)

    return RunConfig(
        grid=grid,
        protocol=ProtocolConfig(PermutationObjective(ns.objective), SuccessCriterion(ns.criterion), ns.rounds),
        noise=NoiseModel(NoiseOrder(ns.noise_order), NoiseTarget(ns.noise_target)),
        mode=SimulationMode(ns.mode),
        out_prefix=ns.out,
        output_format=OutputFormat(ns.format),
        contours=contours,
        slices=tuple(ns.slice) if ns.slice else _settings_slices(settings),
        plots=(not ns.no_plots) and settings.getboolean("OUTPUT", "plots"),
        workers=ns.workers,
        log_dir=ns.log_dir,
        log_level=ns.log_level,
        metrics_port=ns.metrics_port,
        compare=ns.compare,
        throughput=ns.throughput,
        reference_headlines=ReferenceHeadlines(settings.getfloat("COMPARISON", "reference_delta_f"),
                                                 settings.getfloat("COMPARISON", "reference_delta_y"),
                                                 settings.getfloat("COMPARISON", "reference_min_f_purify")),
        config_path=config_path,
    )
