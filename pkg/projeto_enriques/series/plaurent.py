#!/usr/bin/env python3
"""
PLaurent: polinômio de Laurent de suporte finito na variável elíptica p = e^z.
"""

from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Iterable, Mapping, Optional, Tuple

from series.racional import formatar_racional, racional
from utils.excecoes import ErroDominio


class PLaurent:
    """Polinômio de Laurent em p com coeficientes racionais exatos.

    Imutável: operações devolvem novos objetos. Coeficientes nulos nunca
    são armazenados.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Optional[Mapping[int, object]] = None, simetrico: bool = False):
        limpos: Dict[int, Fraction] = {}
        for r, c in (coeffs or {}).items():
            c = racional(c)
            if c:
                limpos[int(r)] = c
        self._coeffs = limpos
        if simetrico and not self.e_simetrico():
            raise ErroDominio(f"PLaurent declarado simétrico não é simétrico: {self}")

    @classmethod
    def _cru(cls, coeffs: Dict[int, Fraction]) -> "PLaurent":
        # coeffs já limpo (sem zeros, valores Fraction)
        obj = cls.__new__(cls)
        obj._coeffs = coeffs
        return obj

    @classmethod
    def constante(cls, c=1) -> "PLaurent":
        return cls({0: c})

    @classmethod
    def monomio(cls, r: int, c=1) -> "PLaurent":
        return cls({r: c})

    @classmethod
    def zero(cls) -> "PLaurent":
        return cls._cru({})

    @classmethod
    def par_simetrico(cls, n: int, c=1) -> "PLaurent":
        """c·(pⁿ + p^{−n}); para n = 0 devolve 2c."""
        c = racional(c)
        if n == 0:
            return cls({0: 2 * c})
        return cls({n: c, -n: c})

    @property
    def coeffs(self) -> Mapping[int, Fraction]:
        return MappingProxyType(self._coeffs)

    def items(self) -> Iterable[Tuple[int, Fraction]]:
        return sorted(self._coeffs.items())

    def coef(self, r: int) -> Fraction:
        return self._coeffs.get(r, Fraction(0))

    def __bool__(self):
        return bool(self._coeffs)

    def __eq__(self, outro):
        if isinstance(outro, PLaurent):
            return self._coeffs == outro._coeffs
        if isinstance(outro, (int, Fraction)):
            return self == PLaurent.constante(outro)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __add__(self, outro):
        if not isinstance(outro, PLaurent):
            outro = PLaurent.constante(outro)
        res = dict(self._coeffs)
        for r, c in outro._coeffs.items():
            v = res.get(r, 0) + c
            if v:
                res[r] = v
            else:
                res.pop(r, None)
        return PLaurent._cru(res)

    __radd__ = __add__

    def __neg__(self):
        return PLaurent._cru({r: -c for r, c in self._coeffs.items()})

    def __sub__(self, outro):
        return self + (-outro)

    def __rsub__(self, outro):
        return (-self) + outro

    def __mul__(self, outro):
        if isinstance(outro, PLaurent):
            res: Dict[int, Fraction] = {}
            for r1, c1 in self._coeffs.items():
                for r2, c2 in outro._coeffs.items():
                    res[r1 + r2] = res.get(r1 + r2, 0) + c1 * c2
            return PLaurent._cru({r: c for r, c in res.items() if c})
        escalar = racional(outro)
        if not escalar:
            return PLaurent.zero()
        return PLaurent._cru({r: c * escalar for r, c in self._coeffs.items()})

    __rmul__ = __mul__

    def e_simetrico(self) -> bool:
        return all(self._coeffs.get(-r) == c for r, c in self._coeffs.items())

    def e_monomio(self) -> bool:
        return len(self._coeffs) == 1

    def inverso(self) -> "PLaurent":
        """Inverso no anel de Laurent: existe apenas para monômios."""
        if not self.e_monomio():
            raise ErroDominio(f"PLaurent não invertível (not invertible): {self}")
        (r, c), = self._coeffs.items()
        return PLaurent._cru({-r: 1 / c})

    def deslocar(self, s: int) -> "PLaurent":
        """Multiplica por p^s."""
        return PLaurent._cru({r + s: c for r, c in self._coeffs.items()})

    def substituir_potencia(self, k: int) -> "PLaurent":
        """p ↦ p^k."""
        if k == 0:
            return PLaurent.constante(sum(self._coeffs.values(), Fraction(0)))
        return PLaurent._cru({r * k: c for r, c in self._coeffs.items()})

    def avaliar_em_um(self) -> Fraction:
        return sum(self._coeffs.values(), Fraction(0))

    @property
    def grau_min(self) -> Optional[int]:
        return min(self._coeffs) if self._coeffs else None

    @property
    def grau_max(self) -> Optional[int]:
        return max(self._coeffs) if self._coeffs else None

    def para_json(self) -> list:
        return [[r, formatar_racional(c)] for r, c in self.items()]

    @classmethod
    def de_json(cls, dados: list) -> "PLaurent":
        return cls({int(r): Fraction(c) for r, c in dados})

    def __repr__(self):
        return f"PLaurent({self})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        termos = []
        for r, c in self.items():
            if r == 0:
                termos.append(str(c))
            elif r == 1:
                termos.append(f"{c}*p")
            else:
                termos.append(f"{c}*p^{r}")
        return " + ".join(termos)
