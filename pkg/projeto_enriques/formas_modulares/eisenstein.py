#!/usr/bin/env python3
"""
Séries de Eisenstein G_k e a forma F₂ de nível 2.

G_k(τ) = −B_k/(2k) + Σ_{n≥1} σ_{k−1}(n) qⁿ, com G_k = 0 para k ímpar.
F₂(τ) = G₂(τ) − 2·G₂(2τ) = 1/24 + Σ_{n≥1} (Σ_{d|n, d ímpar} d) qⁿ.
"""

from fractions import Fraction
from functools import lru_cache
from math import comb

from series.qseries import QSeries
from utils.excecoes import ErroConsistencia, ErroDominio
from utils.logging_config import get_logger

logger = get_logger(__name__)


@lru_cache(maxsize=None)
def bernoulli(k: int) -> Fraction:
    """Número de Bernoulli B_k (B₁ = −1/2) pela convolução recursiva."""
    if k < 0:
        raise ErroDominio(f"índice de Bernoulli negativo: {k}")
    if k == 0:
        return Fraction(1)
    soma = sum((comb(k + 1, j) * bernoulli(j) for j in range(k)), Fraction(0))
    return -soma / (k + 1)


def soma_divisores(n_max: int, potencia: int, somente_impares: bool = False) -> list:
    """Lista s[n] = Σ_{d|n} d^potencia para 0 ≤ n < n_max (s[0] = 0)."""
    s = [0] * max(n_max, 0)
    passo_d = 2 if somente_impares else 1
    for d in range(1, n_max, passo_d):
        termo = d**potencia
        for n in range(d, n_max, d):
            s[n] += termo
    return s


def sigma(n: int, potencia: int) -> Fraction:
    """σ_potencia(n) para n inteiro positivo; 0 para n não inteiro ou ≤ 0."""
    n = Fraction(n)
    if n.denominator != 1 or n <= 0:
        return Fraction(0)
    n = int(n)
    return sum((Fraction(d) ** potencia for d in range(1, n + 1) if n % d == 0), Fraction(0))


@lru_cache(maxsize=64)
def eisenstein_G(k: int, trunc: int) -> QSeries:
    """G_k até q^trunc (exclusivo)."""
    if k <= 0:
        raise ErroDominio(f"peso de Eisenstein deve ser positivo: {k}")
    if k % 2:
        return QSeries.zero(trunc)
    coeffs = {0: -bernoulli(k) / (2 * k)}
    for n, s in enumerate(soma_divisores(trunc, k - 1)):
        if n:
            coeffs[n] = s
    return QSeries(coeffs, trunc)


def _F2_por_eisenstein(trunc: int) -> QSeries:
    G2 = eisenstein_G(2, trunc)
    return G2 - 2 * G2.escalar_q(2).truncar(trunc)


def _F2_por_divisores_impares(trunc: int) -> QSeries:
    coeffs = {0: Fraction(1, 24)}
    for n, s in enumerate(soma_divisores(trunc, 1, somente_impares=True)):
        if n:
            coeffs[n] = s
    return QSeries(coeffs, trunc)


@lru_cache(maxsize=16)
def F2(trunc: int) -> QSeries:
    """F₂ construída de dois modos e comparada coeficiente a coeficiente."""
    via_eisenstein = _F2_por_eisenstein(trunc)
    via_divisores = _F2_por_divisores_impares(trunc)
    if via_eisenstein != via_divisores:
        logger.error(f"❌ F₂ diverge: {via_eisenstein.diferencas(via_divisores)}")
        raise ErroConsistencia("F₂: combinação de Eisenstein ≠ soma de divisores ímpares")
    return via_divisores
