#!/usr/bin/env python3
"""
ZSeries: série de Laurent truncada na variável z (polo de ordem ≤ 2),
a substituição p = e^z e a leitura das contribuições por gênero.
"""

from fractions import Fraction
from math import factorial
from types import MappingProxyType
from typing import Dict, Mapping, Optional

from series.plaurent import PLaurent
from series.racional import formatar_racional, racional
from utils.excecoes import ErroDominio
from utils.logging_config import get_logger

logger = get_logger(__name__)

PISO_POLO = -2


class ZSeries:
    """Coeficientes de z^k para PISO_POLO ≤ k < trunc."""

    __slots__ = ("trunc", "_coeffs")

    def __init__(self, coeffs: Optional[Mapping[int, object]] = None, trunc: int = 0):
        limpos: Dict[int, Fraction] = {}
        for k, c in (coeffs or {}).items():
            k = int(k)
            if k < PISO_POLO:
                raise ErroDominio(f"polo de ordem {-k} além do piso z^{PISO_POLO}")
            if k >= trunc:
                continue
            c = racional(c)
            if c:
                limpos[k] = c
        self.trunc = int(trunc)
        self._coeffs = limpos

    @property
    def coeffs(self) -> Mapping[int, Fraction]:
        return MappingProxyType(self._coeffs)

    def coef(self, k: int) -> Fraction:
        if k >= self.trunc:
            raise ErroDominio(f"z^{k} além do truncamento z^{self.trunc}")
        return self._coeffs.get(k, Fraction(0))

    def __add__(self, outro: "ZSeries") -> "ZSeries":
        trunc = min(self.trunc, outro.trunc)
        res = dict(self._coeffs)
        for k, c in outro._coeffs.items():
            res[k] = res.get(k, 0) + c
        return ZSeries(res, trunc)

    def __neg__(self):
        return ZSeries({k: -c for k, c in self._coeffs.items()}, self.trunc)

    def __sub__(self, outro):
        return self + (-outro)

    def __mul__(self, outro):
        if not isinstance(outro, ZSeries):
            e = racional(outro)
            return ZSeries({k: c * e for k, c in self._coeffs.items()}, self.trunc)
        va = min(self._coeffs, default=self.trunc)
        vb = min(outro._coeffs, default=outro.trunc)
        trunc = min(self.trunc + vb, outro.trunc + va)
        res: Dict[int, Fraction] = {}
        for i, ci in self._coeffs.items():
            for j, cj in outro._coeffs.items():
                if i + j < trunc:
                    res[i + j] = res.get(i + j, 0) + ci * cj
        return ZSeries(res, trunc)

    __rmul__ = __mul__

    def __eq__(self, outro):
        if not isinstance(outro, ZSeries):
            return NotImplemented
        trunc = min(self.trunc, outro.trunc)
        return {k: c for k, c in self._coeffs.items() if k < trunc} == {
            k: c for k, c in outro._coeffs.items() if k < trunc
        }

    __hash__ = None

    def e_par(self) -> bool:
        return all(k % 2 == 0 for k in self._coeffs)

    def para_json(self) -> dict:
        return {"trunc": self.trunc, "coeffs": [[k, formatar_racional(c)] for k, c in sorted(self._coeffs.items())]}

    @classmethod
    def de_json(cls, dados: dict) -> "ZSeries":
        return cls({int(k): Fraction(c) for k, c in dados["coeffs"]}, int(dados["trunc"]))

    def __repr__(self):
        termos = " + ".join(f"({c})z^{k}" for k, c in sorted(self._coeffs.items()))
        return f"ZSeries[{termos or '0'} + O(z^{self.trunc})]"


def plaurent_to_zseries(c: PLaurent, z_trunc: int) -> ZSeries:
    """pⁿ ↦ Σ_k nᵏ zᵏ/k! (p = e^z), truncado em z^z_trunc."""
    res = {}
    for k in range(max(z_trunc, 0)):
        soma = sum((coef * r ** k for r, coef in c.items()), Fraction(0))
        if soma:
            res[k] = soma / factorial(k)
    return ZSeries(res, z_trunc)


def zseries_extract_genus(f: ZSeries) -> Dict[int, Fraction]:
    """g ↦ (−1)^{g−1}·[f]_{z^{2g−2}} para todo 2g−2 < trunc."""
    impares = [k for k in f.coeffs if k % 2]
    if impares:
        raise ErroDominio(f"expoentes ímpares {sorted(impares)}: não é expansão em gêneros (not a genus expansion)")
    g_min = 0 if -2 in f.coeffs else 1
    tabela = {}
    g = g_min
    while 2 * g - 2 < f.trunc:
        sinal = 1 if g % 2 == 1 else -1
        tabela[g] = sinal * f.coef(2 * g - 2)
        g += 1
    logger.debug(f"🔎 Extração por gênero: {len(tabela)} gêneros")
    return tabela
