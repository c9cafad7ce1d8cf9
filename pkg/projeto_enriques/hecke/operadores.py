#!/usr/bin/env python3
"""
Operador de Hecke V_ℓ de Γ₀(2) pelo lado de Fourier:

    [f|_k V_ℓ](v, r) = Σ_{a ímpar, a | (v, r, ℓ)} a^{k−1} c(ℓv/a², r/a)

e a mudança de escala q ↦ q^N em séries graduadas por E8.
"""

from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

from series.qseries import QSeries
from theta_jacobi.e8 import E8QSeries, Vetor, norma_e8, scale_q_E8
from utils.excecoes import ErroDominio, ErroTruncamento
from utils.logging_config import get_logger

logger = get_logger(__name__)


def divisores_impares(n: int) -> List[int]:
    n = abs(n)
    return [a for a in range(1, n + 1, 2) if n % a == 0]


def _peso_a(a: int, peso: int) -> Fraction:
    return Fraction(a) ** (peso - 1)


def _trunc_saida(trunc_entrada: int, ell: int, pedido: Optional[int]) -> int:
    disponivel = trunc_entrada // ell
    if pedido is None:
        return disponivel
    if pedido > disponivel:
        raise ErroTruncamento(
            f"coeficiente subdeterminado (underdetermined coefficient): V_{ell} até q^{pedido}",
            limite=f"trunc de entrada {trunc_entrada} cobre só q^{disponivel}",
        )
    return pedido


def hecke_V(f: Union[QSeries, E8QSeries], ell: int, peso: int, trunc: Optional[int] = None):
    """f|_peso V_ell; para QSeries a parte vetorial é ausente (r = 0).

    O truncamento de saída é ⌊trunc/ℓ⌋; pedir mais levanta ErroTruncamento.
    """
    if ell <= 0:
        raise ErroDominio(f"ℓ deve ser positivo: {ell}")
    impares = divisores_impares(ell)

    if isinstance(f, E8QSeries):
        trunc_saida = _trunc_saida(f.trunc, ell, trunc)
        res: Dict[Tuple[int, Vetor], Fraction] = {}
        for (n, alpha), c in f.coeffs.items():
            for a in impares:
                if (n * a * a) % ell:
                    continue
                v = n * a * a // ell
                if v % a or v >= trunc_saida:
                    continue
                r = tuple(a * x for x in alpha)
                if norma_e8(r) > f.norm_bound:
                    continue
                res[(v, r)] = res.get((v, r), 0) + _peso_a(a, peso) * c
        return E8QSeries({k: c for k, c in res.items() if c}, trunc_saida, f.norm_bound)

    if not isinstance(f, QSeries):
        raise ErroDominio(f"hecke_V não se aplica a {type(f).__name__}")
    f = f.normalizar_denominador()
    if f.exp_denom != 1:
        raise ErroDominio("hecke_V exige expoentes inteiros em q")
    trunc_saida = _trunc_saida(f.trunc, ell, trunc)
    res_q: Dict[int, Fraction] = {}
    for n, c in f.coeffs.items():
        for a in impares:
            if (n * a * a) % ell:
                continue
            v = n * a * a // ell
            if v % a or v >= trunc_saida:
                continue
            res_q[v] = res_q.get(v, 0) + _peso_a(a, peso) * c
    logger.debug(f"🔁 V_{ell} (peso {peso}): {len(res_q)} coeficientes até q^{trunc_saida}")
    return QSeries(res_q, trunc_saida)


__all__ = ["hecke_V", "scale_q_E8", "divisores_impares"]
