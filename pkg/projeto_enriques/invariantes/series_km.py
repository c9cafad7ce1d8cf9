#!/usr/bin/env python3
"""
Séries F^KM_{g,ℓ}(ζ, q) com coeficientes indexados por E8:

    F^KM_{g,1} = 8·Θ_{E8}(ζ, q)·Σ_n ω_g(n)qⁿ
    F^KM_{g,ℓ} = F^KM_{g,1} |_{2g−2} V_ℓ
    [F^KM_{g,ℓ}]_{q^d ζ^α} = Σ_{k ímpar | (ℓ,d,α)} 8k^{2g−3} ω_g((2ℓd − α·α)/2k²)
"""

from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, Optional, Sequence, Tuple

from formas_modulares.anel import Anel, formal_dG2
from formas_modulares.eta import delta
from formas_modulares.reconhecedor import recognize
from hecke.operadores import divisores_impares, hecke_V
from invariantes.omega import OmegaTable, tabela_cobrindo
from series.qseries import QSeries
from theta_jacobi.e8 import E8QSeries, Vetor, divisibilidade_vetor, norma_e8, vetores_e8
from utils.excecoes import ErroConsistencia, ErroDominio
from utils.logging_config import LoggerContextManager, get_logger

logger = get_logger(__name__)


def _vetores(norm_bound: int, vetores: Optional[Iterable[Sequence[int]]]) -> Tuple[Vetor, ...]:
    if vetores is None:
        return vetores_e8(norm_bound)
    return tuple(tuple(int(a) for a in v) for v in vetores if norma_e8(v) <= norm_bound)


def fechado_por_divisao(vetores: Iterable[Vetor], ell: int) -> bool:
    """O conjunto contém α/a sempre que a ímpar divide ℓ e α."""
    conjunto = set(vetores)
    for alpha in conjunto:
        for a in divisores_impares(ell):
            if a > 1 and all(x % a == 0 for x in alpha) and tuple(x // a for x in alpha) not in conjunto:
                return False
    return True


def theta_E8_restrita(trunc: int, vetores: Sequence[Vetor], norm_bound: int) -> E8QSeries:
    coeffs = {(norma_e8(v) // 2, v): Fraction(1) for v in vetores if norma_e8(v) // 2 < trunc}
    return E8QSeries(coeffs, trunc, norm_bound)


def F_KM_genero_um_nivel(g: int, trunc: int, norm_bound: int, tabela: OmegaTable,
                         vetores: Sequence[Vetor]) -> E8QSeries:
    """8·Θ_{E8}·Σ ω_g(n)qⁿ restrito ao conjunto de vetores."""
    omega_g = tabela.serie_genero(g, trunc)
    return theta_E8_restrita(trunc, vetores, norm_bound) * omega_g * 8


def F_KM_direta(g: int, ell: int, trunc: int, norm_bound: int, tabela: OmegaTable,
                vetores: Sequence[Vetor]) -> E8QSeries:
    coeffs: Dict[Tuple[int, Vetor], Fraction] = {}
    for alpha in vetores:
        norma = norma_e8(alpha)
        div_alpha = divisibilidade_vetor(alpha)
        for d in range(trunc):
            total = Fraction(0)
            for k in divisores_impares(gcd(ell, d, div_alpha)):
                total += Fraction(k) ** (2 * g - 3) * tabela.omega(g, Fraction(2 * ell * d - norma, 2 * k * k))
            if total:
                coeffs[(d, alpha)] = 8 * total
    return E8QSeries(coeffs, trunc, norm_bound)


def F_KM_series(g: int, ell: int, trunc: int, norm_bound: int,
                vetores: Optional[Iterable[Sequence[int]]] = None,
                tabela: Optional[OmegaTable] = None, verificar: bool = True) -> E8QSeries:
    """F^KM_{g,ℓ} até q^trunc e α·α ≤ norm_bound.

    ℓ = 1 pelo produto com Θ_{E8}, ℓ > 1 pela elevação de Hecke; com
    verificar=True os dois caminhos são comparados com a fórmula direta.
    `vetores` restringe a parte E8 a uma amostra fechada por divisão ímpar.
    """
    if ell <= 0 or trunc <= 0:
        raise ErroDominio(f"ℓ e trunc devem ser positivos: ℓ={ell}, trunc={trunc}")
    amostra = _vetores(norm_bound, vetores)
    if vetores is not None and not fechado_por_divisao(amostra, ell):
        raise ErroDominio("amostra de vetores não é fechada por divisão ímpar")
    tabela = tabela if tabela is not None else tabela_cobrindo(g, ell * trunc)
    with LoggerContextManager(logger, "F^KM", f"g={g}, ℓ={ell}, q^{trunc}, α·α ≤ {norm_bound}"):
        base = F_KM_genero_um_nivel(g, ell * trunc, norm_bound, tabela, amostra)
        serie = base if ell == 1 else hecke_V(base, ell, 2 * g - 2, trunc)
        if verificar:
            direta = F_KM_direta(g, ell, trunc, norm_bound, tabela, amostra)
            if serie != direta:
                logger.error(f"❌ F^KM_{{{g},{ell}}}: Hecke e fórmula direta divergem")
                raise ErroConsistencia(f"F^KM_{{{g},{ell}}}: caminho de Hecke ≠ caminho direto")
    return serie


def chave_dependencia(ell: int, d: int, alpha: Sequence[int]) -> Tuple[int, int]:
    """(2ℓd − α·α, gcd(ℓ, d, div α)): o par do qual o coeficiente depende."""
    return 2 * ell * d - norma_e8(alpha), gcd(ell, d, divisibilidade_vetor(alpha))


def checar_dependencia(serie: E8QSeries, ell: int, vetores: Sequence[Vetor]) -> Tuple[bool, int]:
    """Agrupa os coeficientes por chave_dependencia e exige um único valor por grupo."""
    vistos: Dict[Tuple[int, int], Fraction] = {}
    conferidos = 0
    for alpha in vetores:
        for d in range(serie.trunc):
            chave = chave_dependencia(ell, d, alpha)
            valor = serie.coef(d, alpha)
            if chave in vistos and vistos[chave] != valor:
                logger.error(f"❌ Coeficiente em (d={d}, α={alpha}) quebra a dependência {chave}")
                return False, conferidos
            vistos[chave] = valor
            conferidos += 1
    return True, conferidos


def serie_delta_omega(g: int, trunc: int, tabela: OmegaTable) -> QSeries:
    """Δ·Σ ω_g(n)qⁿ = Δ·F^KM_{g,1}/(8Θ_{E8}), de peso 2g + 6."""
    return (delta(trunc) * tabela.serie_genero(g, trunc)).truncar(trunc)


def dG2_transport_check(g: int, trunc: int = 40, tabela: Optional[OmegaTable] = None) -> bool:
    """d/dG₂ do reconhecimento de Δ·Ω_g coincide com −(reconhecimento de Δ·Ω_{g−1})."""
    if g < 2:
        raise ErroDominio(f"o transporte em G₂ começa em g = 2, recebido {g}")
    tabela = tabela if tabela is not None else tabela_cobrindo(g, trunc)
    atual = recognize(serie_delta_omega(g, trunc, tabela), 2 * g + 6, Anel.G02_QMOD)
    anterior = recognize(serie_delta_omega(g - 1, trunc, tabela), 2 * g + 4, Anel.G02_QMOD)
    if not atual or not anterior:
        logger.error(f"❌ Δ·Ω_{g} ou Δ·Ω_{g - 1} fora de QMod(Γ₀(2))")
        return False
    return (formal_dG2(atual.elemento) + anterior.elemento).e_zero()
