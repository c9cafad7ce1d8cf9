#!/usr/bin/env python3
"""
Elementos dos anéis de formas (quase)modulares.

Mod(SL₂(Z)) = C[G₄, G₆]          QMod(SL₂(Z)) = C[G₂, G₄, G₆]
Mod(Γ₀(2))  = C[F₂, G₄]           QMod(Γ₀(2))  = C[G₂, F₂, G₄]

Um RingElement guarda o polinômio nos geradores (G₂, F₂, G₄, G₆) como
mapa vetor de expoentes -> racional.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Mapping, Tuple

from formas_modulares.eisenstein import F2, eisenstein_G
from series.qseries import QSeries
from series.racional import formatar_racional, racional
from utils.excecoes import ErroDominio

GERADORES = ("G2", "F2", "G4", "G6")
PESOS_GERADORES = (2, 2, 4, 6)

Monomio = Tuple[int, int, int, int]


class Anel(str, Enum):
    SL2_MOD = "SL2-mod"
    SL2_QMOD = "SL2-qmod"
    G02_MOD = "Γ₀(2)-mod"
    G02_QMOD = "Γ₀(2)-qmod"

    @property
    def geradores(self) -> Tuple[int, ...]:
        """Índices (em GERADORES) dos geradores do anel."""
        return _GERADORES_DO_ANEL[self]

    @property
    def e_quasimodular(self) -> bool:
        return 0 in self.geradores


_GERADORES_DO_ANEL = {
    Anel.SL2_MOD: (2, 3),
    Anel.SL2_QMOD: (0, 2, 3),
    Anel.G02_MOD: (1, 2),
    Anel.G02_QMOD: (0, 1, 2),
}


def peso_monomio(m: Monomio) -> int:
    return sum(e * w for e, w in zip(m, PESOS_GERADORES))


@lru_cache(maxsize=None)
def monomios(anel: Anel, peso: int) -> Tuple[Monomio, ...]:
    """Base monomial do espaço de peso dado, em ordem lexicográfica."""
    if peso < 0 or peso % 2:
        return ()
    indices = anel.geradores
    saida: List[Monomio] = []

    def recursao(pos: int, restante: int, atual: List[int]):
        if pos == len(indices):
            if restante == 0:
                m = [0, 0, 0, 0]
                for i, e in zip(indices, atual):
                    m[i] = e
                saida.append(tuple(m))
            return
        w = PESOS_GERADORES[indices[pos]]
        for e in range(restante // w + 1):
            recursao(pos + 1, restante - e * w, atual + [e])

    recursao(0, peso, [])
    return tuple(sorted(saida))


@dataclass(frozen=True)
class RingElement:
    """Polinômio homogêneo nos geradores, marcado pelo anel e pelo peso."""

    anel: Anel
    peso: int
    termos: Tuple[Tuple[Monomio, Fraction], ...]

    def __post_init__(self):
        permitidos = set(self.anel.geradores)
        for m, c in self.termos:
            if peso_monomio(m) != self.peso:
                raise ErroDominio(f"monômio {m} de peso {peso_monomio(m)} em elemento de peso {self.peso}")
            if any(e and i not in permitidos for i, e in enumerate(m)):
                raise ErroDominio(f"monômio {m} usa gerador fora de {self.anel.value}")
            if not c:
                raise ErroDominio("coeficiente nulo armazenado")

    @classmethod
    def de_dict(cls, anel: Anel, peso: int, termos: Mapping[Monomio, object]) -> "RingElement":
        limpos = {}
        for m, c in termos.items():
            c = racional(c)
            if c:
                limpos[tuple(int(e) for e in m)] = c
        return cls(Anel(anel), peso, tuple(sorted(limpos.items())))

    @classmethod
    def gerador(cls, nome: str, anel: Anel = Anel.G02_QMOD) -> "RingElement":
        i = GERADORES.index(nome)
        m = [0, 0, 0, 0]
        m[i] = 1
        return cls.de_dict(anel, PESOS_GERADORES[i], {tuple(m): 1})

    @property
    def termos_dict(self) -> Dict[Monomio, Fraction]:
        return dict(self.termos)

    def e_zero(self) -> bool:
        return not self.termos

    def _mesmo_espaco(self, outro: "RingElement"):
        if (self.anel, self.peso) != (outro.anel, outro.peso):
            raise ErroDominio(
                f"soma entre espaços distintos: {self.anel.value}/{self.peso} e {outro.anel.value}/{outro.peso}"
            )

    def __add__(self, outro: "RingElement") -> "RingElement":
        self._mesmo_espaco(outro)
        res = self.termos_dict
        for m, c in outro.termos:
            res[m] = res.get(m, 0) + c
        return RingElement.de_dict(self.anel, self.peso, res)

    def __neg__(self) -> "RingElement":
        return RingElement.de_dict(self.anel, self.peso, {m: -c for m, c in self.termos})

    def __sub__(self, outro: "RingElement") -> "RingElement":
        return self + (-outro)

    def __mul__(self, outro) -> "RingElement":
        if isinstance(outro, RingElement):
            if self.anel != outro.anel:
                raise ErroDominio(f"produto entre anéis distintos: {self.anel.value} e {outro.anel.value}")
            res: Dict[Monomio, Fraction] = {}
            for m1, c1 in self.termos:
                for m2, c2 in outro.termos:
                    m = tuple(a + b for a, b in zip(m1, m2))
                    res[m] = res.get(m, 0) + c1 * c2
            return RingElement.de_dict(self.anel, self.peso + outro.peso, res)
        e = racional(outro)
        return RingElement.de_dict(self.anel, self.peso, {m: c * e for m, c in self.termos})

    __rmul__ = __mul__

    def para_json(self) -> dict:
        return {
            "ring": self.anel.value,
            "weight": self.peso,
            "terms": [[*m, formatar_racional(c)] for m, c in self.termos],
        }

    def __str__(self):
        if not self.termos:
            return "0"
        partes = []
        for m, c in self.termos:
            fatores = [g if e == 1 else f"{g}^{e}" for g, e in zip(GERADORES, m) if e]
            monomio = "·".join(fatores)
            if not monomio:
                partes.append(str(c))
            elif c == 1:
                partes.append(monomio)
            else:
                partes.append(f"({c})·{monomio}")
        return " + ".join(partes)


@lru_cache(maxsize=256)
def _potencia_gerador(indice: int, e: int, trunc: int) -> QSeries:
    if indice == 1:
        base = F2(trunc)
    else:
        base = eisenstein_G(PESOS_GERADORES[indice], trunc)
    return base**e


def avaliar_monomio(m: Monomio, trunc: int) -> QSeries:
    termo = QSeries.constante(1, trunc)
    for i, e in enumerate(m):
        if e:
            termo = termo * _potencia_gerador(i, e, trunc)
    return termo


def evaluate(elemento: RingElement, trunc: int) -> QSeries:
    """Expansão em q do polinômio, exata abaixo de q^trunc."""
    soma = QSeries.zero(trunc)
    for m, c in elemento.termos:
        soma = soma + avaliar_monomio(m, trunc) * c
    return soma


def formal_dG2(elemento: RingElement) -> RingElement:
    """Derivada formal ∂/∂G₂; o peso cai 2."""
    if not elemento.anel.e_quasimodular:
        raise ErroDominio(f"d/dG₂ só se aplica a anéis quasimodulares, não a {elemento.anel.value}")
    res = {}
    for m, c in elemento.termos:
        if m[0]:
            res[(m[0] - 1, *m[1:])] = c * m[0]
    return RingElement.de_dict(elemento.anel, elemento.peso - 2, res)
