#!/usr/bin/env python3
"""
Invariantes de Gromov-Witten pela fórmula de Klemm-Mariño:

    N_{g,β} = 2 Σ_{k ímpar, k | β} k^{2g−3} ω_g(β²/2k²)

com N^Q = 4N, n^Q_{g,β} = 8ω_g(β²/2), o valor de grau zero, a fórmula
das fibras e a contabilidade de pesos quase-Jacobi.
"""

from fractions import Fraction
from typing import Dict, Optional, Sequence, Tuple

from formas_modulares.anel import Anel, RingElement, formal_dG2
from formas_modulares.eisenstein import eisenstein_G, sigma
from formas_modulares.reconhecedor import ResultadoReconhecimento, recognize
from hecke.operadores import divisores_impares
from invariantes.omega import OmegaTable, e_hilb, tabela_cobrindo
from reticulado.classes import CurveClass
from reticulado.cohomologia import triple_intersection, wt
from series.qseries import QSeries
from utils.excecoes import ErroDominio
from utils.logging_config import get_logger

logger = get_logger(__name__)


def _tabela(g: int, n, tabela: Optional[OmegaTable]) -> OmegaTable:
    return tabela if tabela is not None else tabela_cobrindo(g, n)


def km_N(g: int, beta: CurveClass, tabela: Optional[OmegaTable] = None) -> Fraction:
    if beta.e_nula():
        raise ErroDominio("N_{g,β} exige β ≠ 0; o grau zero é degree_zero_value()")
    tabela = _tabela(g, Fraction(beta.quadrado, 2), tabela)
    total = Fraction(0)
    for k in divisores_impares(beta.divisibilidade):
        total += Fraction(k) ** (2 * g - 3) * tabela.omega(g, Fraction(beta.quadrado, 2 * k * k))
    return 2 * total


def NQ(g: int, beta: CurveClass, tabela: Optional[OmegaTable] = None) -> Fraction:
    """N^Q_{g,β} = 4·N_{g,β} (threefold de Enriques)."""
    return 4 * km_N(g, beta, tabela)


def n_small(g: int, beta: CurveClass, tabela: Optional[OmegaTable] = None) -> Fraction:
    """n^Q_{g,β} = 8ω_g(β²/2)."""
    n = Fraction(beta.quadrado, 2)
    return 8 * _tabela(g, n, tabela).omega(g, n)


def formula_fibras(d: int) -> Fraction:
    """2σ₋₁(d) − σ₋₁(d/2)."""
    return 2 * sigma(d, -1) - sigma(Fraction(d, 2), -1)


def torsion_N_minus(g: int, d: int, tabela: Optional[OmegaTable] = None) -> Fraction:
    """N⁻_{g,df}: 0 para d ímpar e N_{g,df} para d par."""
    if d <= 0:
        raise ErroDominio(f"N⁻ exige d ≥ 1, recebido {d}")
    if d % 2:
        return Fraction(0)
    return km_N(g, CurveClass.fibra(d), tabela)


def km2_coefficients(g: int, max_n: int, tabela: Optional[OmegaTable] = None) -> Dict[int, Fraction]:
    """c_g(2n) = 4·2^{2g−3}·ω_g(n), a normalização em q² da mesma tabela."""
    tabela = _tabela(g, max_n, tabela)
    fator = 4 * Fraction(2) ** (2 * g - 3)
    return {2 * n: fator * tabela.omega(g, n) for n in range(max_n + 1)}


def degree_zero_value() -> Fraction:
    """e(Y)/24 com e(Y) = e(Hilb¹ Y) = 12."""
    return e_hilb(1) / 24


def series_F10_tau0_s(trunc: int, tabela: Optional[OmegaTable] = None) -> QSeries:
    """Σ_{d≥1} d·N_{1,df} q^d."""
    tabela = _tabela(1, 0, tabela)
    return QSeries({d: d * km_N(1, CurveClass.fibra(d), tabela) for d in range(1, trunc)}, trunc)


def F10_por_eisenstein(trunc: int) -> QSeries:
    """2G₂(q) − 2G₂(q²)."""
    G2 = eisenstein_G(2, trunc)
    return 2 * G2 - 2 * G2.escalar_q(2).truncar(trunc)


def reconhecer_F10(trunc: int = 20) -> ResultadoReconhecimento:
    return recognize(series_F10_tau0_s(trunc), 2, Anel.G02_QMOD)


def anomalia_F10(elemento: RingElement) -> Tuple[Fraction, Fraction]:
    """(d/dG₂ da forma reconhecida, 2·∫ s·f·1 − 2·(grau zero)); devem coincidir e valer 1."""
    derivada = formal_dG2(elemento).termos_dict.get((0, 0, 0, 0), Fraction(0))
    esperado = 2 * triple_intersection("s", "f", "1") - 2 * degree_zero_value()
    return derivada, esperado


def quasi_jacobi_weight(g: int, insercoes: Sequence[str]) -> int:
    """2g − 2 + n + Σ wt(γᵢ)."""
    if g < 0:
        raise ErroDominio(f"gênero negativo: {g}")
    return 2 * g - 2 + len(insercoes) + sum(wt(nome) for nome in insercoes)
