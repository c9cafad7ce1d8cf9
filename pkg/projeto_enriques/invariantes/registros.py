#!/usr/bin/env python3
"""
Registro uniforme de um invariante calculado, usado pelas tabelas e pela exportação.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Union

from reticulado.classes import CurveClass, MukaiVector, mukai_invariants
from series.plaurent import PLaurent


class TipoInvariante(str, Enum):
    GW_N = "GW-N"
    GW_n = "GW-n"
    DT = "DT"
    dt = "dt"
    VW = "VW"
    PT_f = "PT-f"


@dataclass(frozen=True)
class InvariantRecord:
    tipo: TipoInvariante
    valor: Union[Fraction, PLaurent]
    g: Optional[int] = None
    beta: Optional[CurveClass] = None
    mukai: Optional[MukaiVector] = None

    def __post_init__(self):
        object.__setattr__(self, "tipo", TipoInvariante(self.tipo))
        if self.beta is None and self.mukai is not None:
            object.__setattr__(self, "beta", self.mukai.beta)

    @property
    def divisibilidade(self) -> Optional[int]:
        if self.mukai is not None:
            return mukai_invariants(self.mukai).divisibilidade
        return self.beta.divisibilidade if self.beta is not None else None
