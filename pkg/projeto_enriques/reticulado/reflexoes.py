#!/usr/bin/env python3
"""
Os três modelos de reticulado e as reflexões em raízes (δ² = −2).

- H²(Y) = U ⊕ E8(−1), coordenadas (k, d, α)
- M = U ⊕ U(2) ⊕ E8(−2), coordenadas (a₁, b₁, k, d, α)
- Mukai: (r, k, d, α, n) com o pareamento ββ′ − rr′ − rn′ − r′n

A mergulho v = (r, β, n) ↦ (r, −(2n + r); k, d, α) em M satisfaz w² = 2v²,
e os invariantes de v podem ser lidos direto em M.
"""

from enum import Enum
from math import gcd
from typing import Sequence

import numpy as np

from reticulado.classes import CurveClass, InvariantTriple, MukaiVector, Tipo
from theta_jacobi.e8 import Q_E8
from utils.excecoes import ErroDominio
from utils.logging_config import get_logger

logger = get_logger(__name__)

_U = np.array([[0, 1], [1, 0]], dtype=np.int64)


def _soma_direta(*blocos: np.ndarray) -> np.ndarray:
    n = sum(b.shape[0] for b in blocos)
    G = np.zeros((n, n), dtype=np.int64)
    i = 0
    for b in blocos:
        k = b.shape[0]
        G[i:i + k, i:i + k] = b
        i += k
    return G


class Reticulado(str, Enum):
    H2_Y = "H2(Y)"
    M = "U+U(2)+E8(-2)"
    MUKAI = "mukai"

    @property
    def gram(self) -> np.ndarray:
        return _GRAMS[self]


def _gram_mukai() -> np.ndarray:
    # ordem (r, k, d, α, n)
    G = _soma_direta(np.array([[-1]]), _U, -Q_E8, np.array([[0]]))
    G[0, 11] = G[11, 0] = -1
    return G


_GRAMS = {
    Reticulado.H2_Y: _soma_direta(_U, -Q_E8),
    Reticulado.M: _soma_direta(_U, 2 * _U, -2 * Q_E8),
    Reticulado.MUKAI: _gram_mukai(),
}
for _G in _GRAMS.values():
    _G.setflags(write=False)


def pairing(L: Reticulado, x: Sequence[int], y: Sequence[int]) -> int:
    # inteiros de Python: palavras longas de reflexões estouram int64
    G = Reticulado(L).gram.astype(object)
    x = np.asarray(x, dtype=object)
    y = np.asarray(y, dtype=object)
    if x.shape != (G.shape[0],) or y.shape != (G.shape[0],):
        raise ErroDominio(f"vetor com dimensão errada para {Reticulado(L).value}")
    return int(x @ G @ y)


def reflect(L: Reticulado, x: Sequence[int], delta: Sequence[int]) -> np.ndarray:
    """x ↦ x + (x·δ)δ, para δ·δ = −2."""
    if pairing(L, delta, delta) != -2:
        raise ErroDominio(f"reflexão exige δ² = −2, obtido {pairing(L, delta, delta)}")
    x = np.asarray(x, dtype=object)
    return x + pairing(L, x, delta) * np.asarray(delta, dtype=object)


def to_M(v: MukaiVector) -> np.ndarray:
    b = v.beta
    return np.array([v.r, -(2 * v.n + v.r), b.k, b.d, *b.alpha], dtype=np.int64)


def from_M(w: Sequence[int]) -> MukaiVector:
    w = [int(x) for x in w]
    r, b1 = w[0], w[1]
    if (-b1 - r) % 2:
        raise ErroDominio(f"{w} não está na imagem de to_M: b₁ + a₁ ímpar")
    return MukaiVector(r, CurveClass(w[2], w[3], tuple(w[4:])), (-b1 - r) // 2)


def to_mukai_coords(v: MukaiVector) -> np.ndarray:
    return np.array([v.r, v.beta.k, v.beta.d, *v.beta.alpha, v.n], dtype=np.int64)


def invariantes_em_M(w: Sequence[int]) -> InvariantTriple:
    """Invariantes calculados só com os dados de M: w²/2, gcd das coordenadas e a paridade de a₁/m, b₁/m."""
    w = [int(x) for x in w]
    if not any(w):
        raise ErroDominio("vetor nulo não tem invariantes")
    m = 0
    for x in w:
        m = gcd(m, x)
    quadrado = pairing(Reticulado.M, w, w)
    par = (w[0] // m) % 2 == 0 and (w[1] // m) % 2 == 0
    return InvariantTriple(quadrado // 2, m, Tipo.PAR if par else Tipo.IMPAR)


def random_root(rng: np.random.Generator, amplitude: int = 2) -> np.ndarray:
    """δ ∈ M com δ² = −2: parte (k, d, α) aleatória, um dos lados de U igual a 1."""
    k, d = (int(x) for x in rng.integers(-amplitude, amplitude + 1, size=2))
    alpha = np.zeros(8, dtype=np.int64)
    alpha[rng.choice(8, size=2, replace=False)] = rng.integers(-1, 2, size=2)
    resto = 4 * k * d - 2 * int(alpha @ Q_E8 @ alpha)
    outro = -1 - resto // 2
    if rng.integers(0, 2):
        u = [1, outro]
    else:
        u = [outro, 1]
    delta = np.array([*u, k, d, *alpha.tolist()], dtype=object)
    if pairing(Reticulado.M, delta, delta) != -2:
        raise ErroDominio(f"raiz aleatória com norma errada: {delta}")
    return delta


def palavra_de_reflexoes(w: Sequence[int], raizes: Sequence[np.ndarray]) -> np.ndarray:
    x = np.asarray(w, dtype=object)
    for delta in raizes:
        x = reflect(Reticulado.M, x, delta)
    return x
