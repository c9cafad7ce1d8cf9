#!/usr/bin/env python3
# main.py - Orquestrador Principal do Projeto Enriques

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Sequence

# Adicionar o diretório atual ao path para importações
current_dir = Path(__file__).parent
sys.path.append(str(current_dir))

import pandas as pd

from formas_modulares.eisenstein import F2, eisenstein_G
from formas_modulares.eta import delta, eta
from invariantes.donaldson_thomas import DT, VW, dt
from invariantes.gromov_witten import km_N
from invariantes.omega import OmegaTable, a_coeffs, hilb_euler, omega_table
from invariantes.pares_estaveis import f_KM, toda_log_PT
from invariantes.registros import InvariantRecord, TipoInvariante
from reticulado.classes import CurveClass, MukaiVector
from series.qseries import QSeries
from theta_jacobi.e8 import representantes_orbitas_e8, theta_E8
from theta_jacobi.theta import inv_theta_sq, km_kernel
from utils.excecoes import ErroDominio, ErroTruncamento
from utils.logging_config import configure_project_logging, get_logger, log_erro_critico
from verificacao.cache import CacheTabelas
from verificacao.exportador import exportar, registros_para_dataframe, tabela_para_dataframe
from verificacao.orquestrador import OrquestradorVerificacao, resultados_para_json, tabela_pass_fail
from verificacao.suites import SUITES

logger = get_logger(__name__)

ALVOS_TABELA = ("omega", "a", "hilb", "km", "dt", "vw", "fkm", "toda")
ALVOS_SERIE = ("eta", "delta", "F2", "G<k>", "km-kernel", "inv-theta-sq", "theta-E8")
# flags que sobrescrevem os limites das suítes
FLAGS_LIMITES = ("qmax", "gmax", "norm", "ell", "rank", "nmax", "kmax", "dmax", "seed")


def inteiro_positivo(texto: str) -> int:
    try:
        valor = int(texto)
    except ValueError:
        raise argparse.ArgumentTypeError(f"inteiro esperado: {texto!r}")
    if valor <= 0:
        raise argparse.ArgumentTypeError(f"limite deve ser positivo: {valor}")
    return valor


def _ou(valor: Optional[int], padrao: int) -> int:
    return padrao if valor is None else valor


# -- tabelas -------------------------------------------------------------------


def _omega_com_cache(max_g: int, max_n: int) -> OmegaTable:
    cache = CacheTabelas.do_ambiente()
    if cache is None:
        return omega_table(max_g, max_n)
    return cache.obter("omega_table", (max_g, max_n), lambda: omega_table(max_g, max_n),
                       OmegaTable.para_json, OmegaTable.de_json)


def tabela_omega(args) -> pd.DataFrame:
    gmax, qmax = _ou(args.gmax, 4), _ou(args.qmax, 10)
    tabela = _omega_com_cache(gmax, qmax - 1)
    if args.forma == "p":
        return tabela_para_dataframe(["r", "n"], sorted(tabela.linhas_forma_p(), key=lambda t: (t[1], t[0])))
    return tabela_para_dataframe(["g", "n"], tabela.linhas_forma_g())


def tabela_a(args) -> pd.DataFrame:
    nmax = _ou(args.nmax, 10)
    a = a_coeffs(nmax)
    return tabela_para_dataframe(["n"], [(n, a.coef(n)) for n in range(nmax + 1)])


def tabela_hilb(args) -> pd.DataFrame:
    nmax = _ou(args.nmax, 10)
    hilb = hilb_euler(nmax)
    return tabela_para_dataframe(["n"], [(n, hilb.coef(n)) for n in range(nmax + 1)])


def tabela_km(args) -> pd.DataFrame:
    gmax, kmax, dmax = _ou(args.gmax, 2), _ou(args.kmax, 2), _ou(args.dmax, 4)
    reps = representantes_orbitas_e8(_ou(args.norm, 4))
    registros = []
    for g in range(1, gmax + 1):
        for k in range(kmax + 1):
            for d in range(dmax + 1):
                if (k, d) == (0, 0):
                    continue
                for _, alpha in sorted(reps.items()):
                    beta = CurveClass(k, d, alpha)
                    registros.append(InvariantRecord(TipoInvariante.GW_N, km_N(g, beta), g=g, beta=beta))
    return registros_para_dataframe(registros)


def _vetores_mukai(args, r_min: int) -> List[MukaiVector]:
    rank, nmax, kmax, dmax = _ou(args.rank, 1), _ou(args.nmax, 4), _ou(args.kmax, 0), _ou(args.dmax, 0)
    vetores = []
    for r in range(r_min, rank + 1):
        for k in range(kmax + 1):
            for d in range(dmax + 1):
                for n in range(-nmax, nmax + 1):
                    v = MukaiVector(r, CurveClass(k, d), n)
                    if not v.e_nulo():
                        vetores.append(v)
    return vetores


def tabela_dt(args) -> pd.DataFrame:
    registros = []
    for v in _vetores_mukai(args, 0):
        registros.append(InvariantRecord(TipoInvariante.dt, dt(v), mukai=v))
        registros.append(InvariantRecord(TipoInvariante.DT, DT(v), mukai=v))
    return registros_para_dataframe(registros)


def tabela_vw(args) -> pd.DataFrame:
    registros = [InvariantRecord(TipoInvariante.VW, VW(v), mukai=v) for v in _vetores_mukai(args, 1)]
    return registros_para_dataframe(registros)


def tabela_fkm(args) -> pd.DataFrame:
    qmax = _ou(args.qmax, 6)
    linhas = []
    for h in range(qmax):
        for r, c in f_KM(CurveClass(1, h)).items():
            linhas.append((2 * h, r, c))
    return tabela_para_dataframe(["beta_sq", "p"], linhas)


def tabela_toda(args) -> pd.DataFrame:
    kmax, dmax = _ou(args.kmax, 2), _ou(args.dmax, 3)
    linhas = []
    for (k, d), serie in sorted(toda_log_PT(kmax, dmax).items()):
        if not serie.e_regular():
            logger.warning(f"⚠️ log PT em ({k},{d}) com parte polar não exportada: {serie.polar.expressao}")
        for r, c in serie.regular.items():
            linhas.append((k, d, r, c))
    return tabela_para_dataframe(["beta_k", "beta_d", "p"], linhas)


TABELAS = {
    "omega": tabela_omega,
    "a": tabela_a,
    "hilb": tabela_hilb,
    "km": tabela_km,
    "dt": tabela_dt,
    "vw": tabela_vw,
    "fkm": tabela_fkm,
    "toda": tabela_toda,
}


# -- séries ------------------------------------------------------------------


def _serie_dataframe(serie: QSeries) -> pd.DataFrame:
    linhas = [(str(Fraction(n, serie.exp_denom)), c) for n, c in serie.items()]
    return tabela_para_dataframe(["q"], linhas)


def _jserie_dataframe(serie) -> pd.DataFrame:
    linhas = []
    for n, c in serie.items():
        for r, v in c.items():
            linhas.append((str(Fraction(n, serie.exp_denom)), r, v))
    return tabela_para_dataframe(["q", "p"], linhas)


def construir_serie(alvo: str, qmax: int) -> pd.DataFrame:
    if alvo == "eta":
        return _serie_dataframe(eta(qmax))
    if alvo == "delta":
        return _serie_dataframe(delta(qmax))
    if alvo == "F2":
        return _serie_dataframe(F2(qmax))
    if alvo.startswith("G") and alvo[1:].isdigit():
        return _serie_dataframe(eisenstein_G(int(alvo[1:]), qmax))
    if alvo == "km-kernel":
        return _jserie_dataframe(km_kernel(qmax))
    if alvo == "inv-theta-sq":
        return _jserie_dataframe(inv_theta_sq(qmax).regular)
    if alvo == "theta-E8":
        return _serie_dataframe(theta_E8(qmax).especializar_zeta_um())
    raise ErroDominio(f"série desconhecida: {alvo} (use {', '.join(ALVOS_SERIE)})")


# -- verbos ------------------------------------------------------------------


def _formato(args, padrao: str) -> str:
    for formato in ("json", "csv", "xlsx"):
        if getattr(args, formato):
            return formato
    return padrao


def _emitir(df: pd.DataFrame, args, nome_aba: str) -> None:
    texto = exportar(df, _formato(args, "csv"), args.saida, nome_aba)
    if texto is not None:
        sys.stdout.write(texto)


def executar_tabela(args) -> int:
    if args.alvo not in TABELAS:
        raise ErroDominio(f"tabela desconhecida: {args.alvo} (use {', '.join(ALVOS_TABELA)})")
    logger.info(f"📊 Tabela {args.alvo}")
    _emitir(TABELAS[args.alvo](args), args, args.alvo)
    return 0


def executar_serie(args) -> int:
    logger.info(f"📈 Série {args.alvo}")
    _emitir(construir_serie(args.alvo, _ou(args.qmax, 10)), args, args.alvo)
    return 0


def executar_verificacao(args) -> int:
    sobrescritas = {flag: getattr(args, flag) for flag in FLAGS_LIMITES}
    orquestrador = OrquestradorVerificacao(sobrescritas=sobrescritas)
    por_suite = orquestrador.executar(args.alvos, paralelo=args.paralelo)
    if _formato(args, "texto") == "json":
        sys.stdout.write(json.dumps(resultados_para_json(por_suite), ensure_ascii=False, indent=2) + "\n")
    else:
        sys.stdout.write(tabela_pass_fail(por_suite))
    return 0 if orquestrador.resultados["aprovado"] else 1


def criar_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="Projeto Enriques - invariantes enumerativos e verificação")
    comandos = parser.add_subparsers(dest="comando", required=True)

    def limites(sub: argparse.ArgumentParser):
        for flag in ("qmax", "gmax", "norm", "ell", "rank", "nmax", "kmax", "dmax"):
            sub.add_argument(f"--{flag}", type=inteiro_positivo)
        formatos = sub.add_mutually_exclusive_group()
        formatos.add_argument("--json", action="store_true", help="Saída JSON")
        formatos.add_argument("--csv", action="store_true", help="Saída CSV (padrão para tabelas)")
        formatos.add_argument("--xlsx", action="store_true", help="Planilha Excel (exige --saida)")
        sub.add_argument("--saida", help="Arquivo de saída")

    tabela = comandos.add_parser("table", help="Gera uma tabela de invariantes")
    tabela.add_argument("alvo", choices=ALVOS_TABELA)
    tabela.add_argument("--forma", choices=("g", "p"), default="g", help="omega: forma em z (g) ou em p")
    limites(tabela)

    serie = comandos.add_parser("series", help="Expande uma série em q")
    serie.add_argument("alvo", help=f"Uma de: {', '.join(ALVOS_SERIE)}")
    limites(serie)

    verificar = comandos.add_parser("verify", help="Roda suítes de verificação")
    verificar.add_argument("alvos", nargs="+", choices=[*SUITES, "all"], metavar="suite")
    verificar.add_argument("--seed", type=int, help="Semente das palavras de reflexão")
    verificar.add_argument("--paralelo", action="store_true", help="Executa as suítes em threads")
    limites(verificar)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Códigos de saída: 0 sucesso, 1 FAIL, 2 argumentos, 3 truncamento insuficiente."""
    parser = criar_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    # Detectar modo debug a partir de variável de ambiente
    modo_debug = os.getenv("DEBUG", "").lower() in ("true", "1", "yes")
    configure_project_logging("DEBUG" if modo_debug else None)

    try:
        if args.comando == "table":
            return executar_tabela(args)
        if args.comando == "series":
            return executar_serie(args)
        return executar_verificacao(args)
    except ErroTruncamento as e:
        sys.stderr.write(f"❌ Truncamento insuficiente: {e}\n")
        return 3
    except ErroDominio as e:
        sys.stderr.write(f"❌ Argumento inválido: {e}\n")
        return 2
    except KeyboardInterrupt:
        sys.stderr.write("\n❌ Operação cancelada pelo usuário\n")
        return 1
    except Exception as e:
        log_erro_critico("Erro inesperado", e, logger)
        sys.stderr.write(f"❌ Erro inesperado: {e}\n")
        return 1


def main():
    """Função principal para executar o sistema."""
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
