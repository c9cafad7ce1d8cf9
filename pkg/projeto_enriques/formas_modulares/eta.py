#!/usr/bin/env python3
"""
Função eta de Dedekind, Δ e quocientes eta Π η(Nτ)^{e_N}.

Expoentes fracionários (múltiplos de 1/24) ficam no exp_denom da QSeries.
"""

from fractions import Fraction
from functools import lru_cache
from math import ceil
from typing import Dict, Tuple

from series.qseries import QSeries, produto_infinito
from utils.excecoes import ErroConsistencia
from utils.logging_config import get_logger

logger = get_logger(__name__)


def eta_quotient(expoentes: Dict[int, int], trunc: int) -> QSeries:
    """Π_N η(Nτ)^{e_N} com coeficientes conhecidos abaixo de q^trunc."""
    return _eta_quotient(tuple(sorted(expoentes.items())), trunc)


@lru_cache(maxsize=64)
def _eta_quotient(expoentes: Tuple[Tuple[int, int], ...], trunc: int) -> QSeries:
    deslocamento = Fraction(sum(N * e for N, e in expoentes), 24)
    # o produto começa em q^deslocamento: precisa de termos até trunc − deslocamento
    termos_produto = max(ceil(trunc - deslocamento), 0)
    produto = produto_infinito([(N, e, -1) for N, e in expoentes if e], termos_produto)
    escala = 24
    coeffs = {24 * n + int(deslocamento * 24): c for n, c in produto.coeffs.items()}
    serie = QSeries(coeffs, escala * trunc, escala)
    return serie.normalizar_denominador()


def eta_power(k: int, trunc: int) -> QSeries:
    """η(τ)^k = q^{k/24} Π(1 − qⁿ)^k."""
    return eta_quotient({1: k}, trunc)


def eta(trunc: int) -> QSeries:
    return eta_power(1, trunc)


def delta(trunc: int) -> QSeries:
    """Δ = η²⁴ = q − 24q² + 252q³ − …"""
    return eta_power(24, trunc)


def cusp_quotient(trunc: int) -> QSeries:
    """η¹⁶(2τ)/η⁸(τ) = q + O(q²), que se anula na cúspide ∞."""
    f = eta_quotient({1: -8, 2: 16}, trunc)
    if trunc > 1 and (f.valuacao != 1 or f.coef(1) != 1):
        raise ErroConsistencia(f"quociente de cúspide não começa em q: {f}")
    return f
