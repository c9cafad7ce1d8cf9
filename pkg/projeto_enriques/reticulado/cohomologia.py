#!/usr/bin/env python3
"""
H*(Y) na base {1, s, f, α₁..α₈, pt}: o operador t_λ, sua exponencial,
pesos das classes e interseções triplas.
"""

from fractions import Fraction
from typing import Sequence, Tuple

import numpy as np

from reticulado.reflexoes import Reticulado, pairing
from theta_jacobi.e8 import norma_e8, produto_e8
from utils.excecoes import ErroDominio

NOMES_BASE = ("1", "s", "f", "a1", "a2", "a3", "a4", "a5", "a6", "a7", "a8", "pt")
DIMENSAO = len(NOMES_BASE)
_H2 = slice(1, 11)

PESOS = {"1": -1, "s": 1, "f": -1, "pt": 1, **{f"a{i}": 0 for i in range(1, 9)}}


def vetor_base(nome: str) -> np.ndarray:
    if nome not in NOMES_BASE:
        raise ErroDominio(f"classe desconhecida em H*(Y): {nome}")
    e = np.zeros(DIMENSAO, dtype=object)
    e[NOMES_BASE.index(nome)] = 1
    return e


def vetor_h2(k, d, alpha: Sequence = (0,) * 8) -> np.ndarray:
    return np.array([0, k, d, *alpha, 0], dtype=object)


def wt(nome: str) -> int:
    """Autovalor do operador de peso: 1 em s e pt, 0 em E8(−1), −1 em 1 e f."""
    if nome not in PESOS:
        raise ErroDominio(f"{nome} não é autovetor do operador de peso")
    return PESOS[nome]


def _pareamento_h2(x: np.ndarray, y: np.ndarray) -> int:
    return pairing(Reticulado.H2_Y, [int(v) for v in x[_H2]], [int(v) for v in y[_H2]])


def t_lambda(lam: Sequence[int], x: Sequence) -> np.ndarray:
    """t_λ(x) = (f·x)λ − (λ·x)f na parte H²; H⁰ e H⁴ vão a zero."""
    x = np.asarray(x, dtype=object)
    lam_vet = vetor_h2(0, 0, lam)
    f = vetor_base("f")
    return _pareamento_h2(f, x) * lam_vet - _pareamento_h2(lam_vet, x) * f


def exp_t_lambda(lam: Sequence[int], x: Sequence) -> np.ndarray:
    """e^{t_λ}x = x + t_λx + t_λ²x/2; t_λ³ = 0 é verificado."""
    x = np.asarray(x, dtype=object)
    t1 = t_lambda(lam, x)
    t2 = t_lambda(lam, t1)
    if any(t_lambda(lam, t2)):
        raise ErroDominio("t_λ³ ≠ 0")
    return np.array([Fraction(a) + b + Fraction(c, 2) for a, b, c in zip(x, t1, t2)], dtype=object)


def exp_t_lambda_fechada(lam: Sequence[int], k: int, d: int, alpha: Sequence[int]) -> Tuple[int, Fraction, Tuple[int, ...]]:
    """ks + df + α ↦ ks + (d − α·λ − kλ²/2)f + α + kλ, com pareamentos em E8(−1)."""
    alpha_lambda = -produto_e8(alpha, lam)
    lambda2 = -norma_e8(lam)
    novo_d = d - alpha_lambda - Fraction(k * lambda2, 2)
    return k, novo_d, tuple(a + k * l for a, l in zip(alpha, lam))


def triple_intersection(g1: str, g2: str, g3: str) -> int:
    """∫_Y γ₁γ₂γ₃ para classes da base."""
    nomes = sorted((g1, g2, g3), key=lambda n: {"1": 0, "pt": 2}.get(n, 1))
    for n in nomes:
        if n not in NOMES_BASE:
            raise ErroDominio(f"classe desconhecida em H*(Y): {n}")
    if nomes == ["1", "1", "pt"]:
        return 1
    if nomes[0] == "1" and nomes[1] not in ("1", "pt") and nomes[2] not in ("1", "pt"):
        return _pareamento_h2(vetor_base(nomes[1]), vetor_base(nomes[2]))
    return 0
