#!/usr/bin/env python3
"""
JQSeries: série em q cujos coeficientes são PLaurent em p.

Casa as funções de duas variáveis (p, q) das identidades de theta.
"""

from fractions import Fraction
from typing import Dict, Iterable, List, Tuple

from series.plaurent import PLaurent
from series.qseries import QSeries


class JQSeries(QSeries):
    """QSeries com coeficientes PLaurent; truncamento com a mesma semântica."""

    __slots__ = ()

    @staticmethod
    def _converter(c):
        if isinstance(c, PLaurent):
            return c
        return PLaurent.constante(c)

    @staticmethod
    def _zero_coef():
        return PLaurent.zero()

    @staticmethod
    def _um_coef():
        return PLaurent.constante(1)

    @staticmethod
    def _inverter_coef(c):
        return c.inverso()

    def _coef_json(self, c):
        return c.para_json()

    @classmethod
    def _coef_de_json(cls, dado):
        return PLaurent.de_json(dado)

    @classmethod
    def de_qseries(cls, serie: QSeries) -> "JQSeries":
        if isinstance(serie, JQSeries):
            return serie
        return cls._cru(
            {n: PLaurent.constante(c) for n, c in serie.coeffs.items()}, serie.trunc, serie.exp_denom
        )

    def coef_p(self, expoente_q, r: int) -> Fraction:
        return self.coef(expoente_q).coef(r)

    def e_simetrico(self) -> bool:
        return all(c.e_simetrico() for c in self._coeffs.values())

    def substituir_p(self, k: int) -> "JQSeries":
        """p ↦ p^k em todos os coeficientes."""
        return self._cru({n: c.substituir_potencia(k) for n, c in self._coeffs.items()}, self.trunc, self.exp_denom)

    def multiplicar_p(self, s: int) -> "JQSeries":
        """Multiplica por p^s."""
        return self._cru({n: c.deslocar(s) for n, c in self._coeffs.items()}, self.trunc, self.exp_denom)

    def especializar_p_um(self) -> QSeries:
        """p ↦ 1."""
        return QSeries({n: c.avaliar_em_um() for n, c in self._coeffs.items()}, self.trunc, self.exp_denom)


def produto_jacobi(termos: Iterable[Tuple[int, int, int]], trunc: int) -> JQSeries:
    """Π_{m≥1} (1 − p^s·q^{c·m})^e para cada termo (s, c, e), até q^trunc.

    Atualização in loco de uma lista densa (índice q) de dicionários
    (expoente de p -> inteiro).
    """
    if trunc <= 0:
        return JQSeries.zero(trunc)
    A: List[Dict[int, int]] = [dict() for _ in range(trunc)]
    A[0][0] = 1
    for s, c, e in termos:
        m = 1
        while c * m < trunc:
            passo = c * m
            if e > 0:
                for _ in range(e):
                    for n in range(trunc - 1, passo - 1, -1):
                        alvo = A[n]
                        for r, v in A[n - passo].items():
                            alvo[r + s] = alvo.get(r + s, 0) - v
            else:
                for _ in range(-e):
                    for n in range(passo, trunc):
                        alvo = A[n]
                        for r, v in list(A[n - passo].items()):
                            alvo[r + s] = alvo.get(r + s, 0) + v
            m += 1
    coeffs = {}
    for n, d in enumerate(A):
        limpo = {r: Fraction(v) for r, v in d.items() if v}
        if limpo:
            coeffs[n] = PLaurent._cru(limpo)
    return JQSeries._cru(coeffs, trunc, 1)
