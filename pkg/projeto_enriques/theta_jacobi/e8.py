#!/usr/bin/env python3
"""
Reticulado E8: matriz de Gram, enumeração de vetores curtos e a função
theta Θ_{E8}(ζ, q) = Σ_α ζ^α q^{α·α/2}.

A enumeração segue o esquema de Fincke-Pohst: decomposição LDLᵀ racional
exata da matriz de Gram e limites coordenada a coordenada a partir da
última. O oráculo por caixa (limites de Cauchy-Schwarz) serve aos testes.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import floor, gcd, isqrt, sqrt
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from series.qseries import QSeries
from series.racional import formatar_racional, racional
from utils.excecoes import ErroDominio, ErroTruncamento
from utils.logging_config import LoggerContextManager, get_logger

logger = get_logger(__name__)

Vetor = Tuple[int, ...]

# Diagrama de Dynkin de E8; o nó 4 ramifica para 2, 3 e 5 (índices base 1)
_ARESTAS_E8 = ((1, 3), (2, 4), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8))

Q_E8 = np.diag(np.full(8, 2, dtype=np.int64))
for _i, _j in _ARESTAS_E8:
    Q_E8[_i - 1, _j - 1] = Q_E8[_j - 1, _i - 1] = -1
Q_E8.setflags(write=False)

ZERO_E8: Vetor = (0,) * 8


def norma_e8(alpha: Sequence[int]) -> int:
    """α·α na forma positiva definida de E8."""
    a = np.asarray(alpha, dtype=np.int64)
    return int(a @ Q_E8 @ a)


def produto_e8(alpha: Sequence[int], beta: Sequence[int]) -> int:
    return int(np.asarray(alpha, dtype=np.int64) @ Q_E8 @ np.asarray(beta, dtype=np.int64))


def divisibilidade_vetor(alpha: Sequence[int]) -> int:
    """gcd das coordenadas (0 para o vetor nulo)."""
    g = 0
    for x in alpha:
        g = gcd(g, int(x))
    return g


def _ldl_racional(gram: Sequence[Sequence[int]]) -> List[List[Fraction]]:
    """Forma quadrática completada: Q(x) = Σ_i q_ii (x_i + Σ_{j>i} q_ij x_j)²."""
    n = len(gram)
    q = [[Fraction(int(gram[i][j])) for j in range(n)] for i in range(n)]
    for i in range(n):
        if q[i][i] <= 0:
            raise ErroDominio("matriz de Gram não é positiva definida")
        for j in range(i + 1, n):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for k in range(i + 1, n):
            for l in range(k, n):
                q[k][l] -= q[k][i] * q[i][l]
    return q


def _intervalo_inteiro(centro: Fraction, raio2: Fraction) -> Tuple[int, int]:
    """Inteiros x com (x − centro)² ≤ raio2."""
    aprox = sqrt(float(raio2)) if raio2 > 0 else 0.0
    baixo = floor(float(centro) - aprox) - 1
    while (baixo - centro) ** 2 > raio2 and baixo < centro:
        baixo += 1
    alto = floor(float(centro) + aprox) + 1
    while (alto - centro) ** 2 > raio2 and alto > centro:
        alto -= 1
    return baixo, alto


def lattice_enumerate(gram: Sequence[Sequence[int]], max_norm: int) -> List[Vetor]:
    """Todos os v com vᵀ·gram·v ≤ max_norm, cada um uma vez, ordenados por (norma, coordenadas)."""
    gram = np.asarray(gram, dtype=np.int64)
    if gram.ndim != 2 or gram.shape[0] != gram.shape[1]:
        raise ErroDominio(f"matriz de Gram deve ser quadrada: {gram.shape}")
    if not np.array_equal(gram, gram.T):
        raise ErroDominio("matriz de Gram não simétrica")
    q = _ldl_racional(gram.tolist())
    n = len(q)
    if max_norm < 0:
        return []
    encontrados: List[Vetor] = []
    x = [0] * n

    def descer(i: int, restante: Fraction):
        centro = -sum((q[i][j] * x[j] for j in range(i + 1, n)), Fraction(0))
        baixo, alto = _intervalo_inteiro(centro, restante / q[i][i])
        for xi in range(baixo, alto + 1):
            gasto = q[i][i] * (xi - centro) ** 2
            if gasto > restante:
                continue
            x[i] = xi
            if i == 0:
                encontrados.append(tuple(x))
            else:
                descer(i - 1, restante - gasto)
        x[i] = 0

    descer(n - 1, Fraction(max_norm))
    if not encontrados:
        return []
    arr = np.array(encontrados, dtype=np.int64)
    normas = np.einsum("ij,jk,ik->i", arr, gram, arr)
    ordem = sorted(range(len(encontrados)), key=lambda t: (int(normas[t]), encontrados[t]))
    return [encontrados[t] for t in ordem]


def enumerar_caixa(gram: Sequence[Sequence[int]], max_norm: int) -> List[Vetor]:
    """Oráculo ingênuo: caixa |x_i| ≤ √(max_norm·(G⁻¹)_ii) varrida por completo."""
    gram = np.asarray(gram, dtype=np.int64)
    inversa = np.linalg.inv(gram.astype(float))
    limites = [isqrt(int(floor(max_norm * inversa[i, i] + 1e-9))) + 1 for i in range(len(gram))]
    saida = []
    for v in product(*(range(-b, b + 1) for b in limites)):
        a = np.asarray(v, dtype=np.int64)
        norma = int(a @ gram @ a)
        if norma <= max_norm:
            saida.append((norma, v))
    return [v for _, v in sorted(saida)]


def _grade(valores: np.ndarray) -> np.ndarray:
    """Todas as 8-uplas com entradas em `valores`, uma por linha."""
    malha = np.meshgrid(*([valores.astype(np.int16)] * 8), indexing="ij")
    return np.stack([m.ravel() for m in malha], axis=1).astype(np.int32)


def contagem_e8_coordenadas_padrao(max_norm: int) -> Dict[int, int]:
    """Contagem por norma de E8 = D8 ∪ (D8 + ½) em coordenadas ortonormais.

    Construção independente da matriz Q_E8, usada como oráculo.
    """
    contagem: Dict[int, int] = {}
    raio = isqrt(max_norm)
    inteiros = _grade(np.arange(-raio, raio + 1))
    pares = inteiros[inteiros.sum(axis=1) % 2 == 0]
    normas = (pares**2).sum(axis=1)
    # coordenadas meio-inteiras: 2x ímpar, soma de x par
    limite_meio = isqrt(4 * max_norm)
    impares = np.arange(-limite_meio, limite_meio + 1)
    meios = _grade(impares[impares % 2 == 1])
    meios = meios[(meios.sum(axis=1) // 2) % 2 == 0]
    normas_meios = (meios**2).sum(axis=1) // 4
    for normas_grupo in (normas, normas_meios):
        valores, quantidades = np.unique(normas_grupo[normas_grupo <= max_norm], return_counts=True)
        for v, c in zip(valores.tolist(), quantidades.tolist()):
            contagem[v] = contagem.get(v, 0) + c
    return dict(sorted(contagem.items()))


@lru_cache(maxsize=16)
def vetores_e8(max_norm: int) -> Tuple[Vetor, ...]:
    """Vetores de E8 de norma ≤ max_norm (memoizado)."""
    with LoggerContextManager(logger, "E8", f"Enumeração de vetores com norma ≤ {max_norm}"):
        return tuple(lattice_enumerate(Q_E8, max_norm))


@lru_cache(maxsize=16)
def matriz_vetores_e8(max_norm: int) -> np.ndarray:
    """Os mesmos vetores como matriz (N, 8), para produtos vetorizados."""
    arr = np.array(vetores_e8(max_norm), dtype=np.int64).reshape(-1, 8)
    arr.setflags(write=False)
    return arr


class E8QSeries:
    """Série em q com coeficientes indexados por vetores de E8.

    Chave (n, α) representa ζ^α qⁿ; coeficientes conhecidos para n < trunc
    e α·α ≤ norm_bound.
    """

    __slots__ = ("trunc", "norm_bound", "_coeffs")

    def __init__(self, coeffs: Optional[Mapping[Tuple[int, Vetor], object]] = None, trunc: int = 0, norm_bound: int = 0):
        limpos: Dict[Tuple[int, Vetor], Fraction] = {}
        for (n, alpha), c in (coeffs or {}).items():
            alpha = tuple(int(a) for a in alpha)
            if n >= trunc or norma_e8(alpha) > norm_bound:
                continue
            c = racional(c)
            if c:
                limpos[(int(n), alpha)] = c
        self.trunc = int(trunc)
        self.norm_bound = int(norm_bound)
        self._coeffs = limpos

    @classmethod
    def _cru(cls, coeffs, trunc: int, norm_bound: int) -> "E8QSeries":
        obj = cls.__new__(cls)
        obj.trunc = trunc
        obj.norm_bound = norm_bound
        obj._coeffs = coeffs
        return obj

    @property
    def coeffs(self) -> Mapping[Tuple[int, Vetor], Fraction]:
        return dict(self._coeffs)

    def items(self) -> List[Tuple[Tuple[int, Vetor], Fraction]]:
        return sorted(self._coeffs.items())

    def coef(self, n: int, alpha: Sequence[int]) -> Fraction:
        alpha = tuple(int(a) for a in alpha)
        if n >= self.trunc:
            raise ErroTruncamento(f"coeficiente q^{n} além do truncamento", limite=f"trunc={self.trunc}")
        if norma_e8(alpha) > self.norm_bound:
            raise ErroTruncamento(
                f"vetor de norma {norma_e8(alpha)} além do limite", limite=f"norm_bound={self.norm_bound}"
            )
        return self._coeffs.get((n, alpha), Fraction(0))

    def __add__(self, outro: "E8QSeries") -> "E8QSeries":
        trunc = min(self.trunc, outro.trunc)
        limite = min(self.norm_bound, outro.norm_bound)
        res = {k: c for k, c in self._coeffs.items() if k[0] < trunc and norma_e8(k[1]) <= limite}
        for k, c in outro._coeffs.items():
            if k[0] < trunc and norma_e8(k[1]) <= limite:
                v = res.get(k, 0) + c
                if v:
                    res[k] = v
                else:
                    res.pop(k, None)
        return E8QSeries._cru(res, trunc, limite)

    def __neg__(self):
        return E8QSeries._cru({k: -c for k, c in self._coeffs.items()}, self.trunc, self.norm_bound)

    def __sub__(self, outro):
        return self + (-outro)

    def __mul__(self, outro) -> "E8QSeries":
        """Produto por escalar ou por uma QSeries em q (expoentes inteiros)."""
        if not isinstance(outro, QSeries):
            e = racional(outro)
            return E8QSeries._cru({k: c * e for k, c in self._coeffs.items() if c * e}, self.trunc, self.norm_bound)
        f = outro.normalizar_denominador()
        if f.exp_denom != 1:
            raise ErroDominio("produto de E8QSeries exige expoentes inteiros em q")
        v_self = min((n for n, _ in self._coeffs), default=self.trunc)
        trunc = min(self.trunc + f.valuacao, f.trunc + v_self)
        res: Dict[Tuple[int, Vetor], Fraction] = {}
        itens_f = f.items()
        for (n, alpha), c in self._coeffs.items():
            for m, cf in itens_f:
                if n + m >= trunc:
                    break
                chave = (n + m, alpha)
                res[chave] = res.get(chave, 0) + c * cf
        return E8QSeries._cru({k: c for k, c in res.items() if c}, trunc, self.norm_bound)

    __rmul__ = __mul__

    def __eq__(self, outro):
        if not isinstance(outro, E8QSeries):
            return NotImplemented
        trunc = min(self.trunc, outro.trunc)
        limite = min(self.norm_bound, outro.norm_bound)

        def recorte(s):
            return {k: c for k, c in s._coeffs.items() if k[0] < trunc and norma_e8(k[1]) <= limite}

        return recorte(self) == recorte(outro)

    __hash__ = None

    def e_simetrico(self) -> bool:
        """Simetria α ↦ −α."""
        return all(self._coeffs.get((n, tuple(-a for a in alpha))) == c for (n, alpha), c in self._coeffs.items())

    def especializar_zeta_um(self) -> QSeries:
        """ζ ↦ 1: soma sobre os vetores (só faz sentido se norm_bound cobre o suporte)."""
        res: Dict[int, Fraction] = {}
        for (n, _), c in self._coeffs.items():
            res[n] = res.get(n, 0) + c
        return QSeries(res, self.trunc)

    def escalar_q(self, N: int) -> "E8QSeries":
        """q ↦ q^N com a parte vetorial inalterada."""
        if N <= 0:
            raise ErroDominio(f"fator de escala deve ser positivo: {N}")
        return E8QSeries._cru({(n * N, a): c for (n, a), c in self._coeffs.items()}, self.trunc * N, self.norm_bound)

    def para_json(self) -> dict:
        return {
            "trunc": self.trunc,
            "norm_bound": self.norm_bound,
            "entries": [[n, list(alpha), formatar_racional(c)] for (n, alpha), c in self.items()],
        }

    @classmethod
    def de_json(cls, dados: dict) -> "E8QSeries":
        return cls(
            {(int(n), tuple(alpha)): Fraction(c) for n, alpha, c in dados["entries"]},
            int(dados["trunc"]),
            int(dados["norm_bound"]),
        )

    def __repr__(self):
        return f"E8QSeries[{len(self._coeffs)} termos, trunc={self.trunc}, norm_bound={self.norm_bound}]"


@lru_cache(maxsize=8)
def theta_E8(trunc: int) -> E8QSeries:
    """Θ_{E8}: coeficiente 1 em (α·α/2, α) para todo α com α·α ≤ 2(trunc − 1)."""
    limite = max(2 * (trunc - 1), 0)
    coeffs = {(norma_e8(v) // 2, v): Fraction(1) for v in vetores_e8(limite)}
    logger.debug(f"🔢 Θ_E8 até q^{trunc}: {len(coeffs)} vetores")
    return E8QSeries._cru(coeffs, trunc, limite)


def scale_q_E8(f: E8QSeries, N: int) -> E8QSeries:
    return f.escalar_q(N)


def representantes_orbitas_e8(max_norm: int) -> Dict[int, Vetor]:
    """Um representante por órbita de W(E8) para normas 0, 2, 4 e 6 (cada norma é uma órbita)."""
    if max_norm > 6:
        raise ErroDominio("normas ≥ 8 de E8 têm mais de uma órbita de Weyl")
    reps = {0: ZERO_E8, 2: (1, 0, 0, 0, 0, 0, 0, 0), 4: (1, 1, 0, 0, 0, 0, 0, 0), 6: (1, 1, 0, 0, 0, 0, 0, 1)}
    return {n: v for n, v in reps.items() if n <= max_norm}


def vetores_por_norma(vetores: Iterable[Vetor]) -> Dict[int, List[Vetor]]:
    grupos: Dict[int, List[Vetor]] = {}
    for v in vetores:
        grupos.setdefault(norma_e8(v), []).append(v)
    return grupos
