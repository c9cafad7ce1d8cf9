#!/usr/bin/env python3
"""
Classes de curva β = k·s + d·f + α em H²(Y) = U ⊕ E8(−1), vetores de Mukai
v = (r, β, n) e os invariantes (quadrado, divisibilidade, tipo) que
determinam a órbita sob a monodromia derivada.
"""

from dataclasses import dataclass, field
from enum import Enum
from math import gcd
from typing import Sequence, Tuple

from theta_jacobi.e8 import ZERO_E8, divisibilidade_vetor, norma_e8, produto_e8
from utils.excecoes import ErroDominio
from utils.logging_config import get_logger

logger = get_logger(__name__)


class Tipo(str, Enum):
    IMPAR = "odd"
    PAR = "even"


def _vetor8(alpha: Sequence[int]) -> Tuple[int, ...]:
    alpha = tuple(int(a) for a in alpha)
    if len(alpha) != 8:
        raise ErroDominio(f"componente E8 deve ter 8 coordenadas: {alpha}")
    return alpha


@dataclass(frozen=True)
class CurveClass:
    """β = k·s + d·f + α, com s² = f² = 0, s·f = 1 e α ∈ E8(−1)."""

    k: int
    d: int
    alpha: Tuple[int, ...] = field(default=ZERO_E8)

    def __post_init__(self):
        object.__setattr__(self, "alpha", _vetor8(self.alpha))

    @classmethod
    def fibra(cls, d: int) -> "CurveClass":
        return cls(0, d)

    @property
    def quadrado(self) -> int:
        return 2 * self.k * self.d - norma_e8(self.alpha)

    @property
    def divisibilidade(self) -> int:
        return gcd(self.k, self.d, divisibilidade_vetor(self.alpha))

    @property
    def norma_alpha(self) -> int:
        return norma_e8(self.alpha)

    def pairing(self, outro: "CurveClass") -> int:
        return self.k * outro.d + outro.k * self.d - produto_e8(self.alpha, outro.alpha)

    def e_nula(self) -> bool:
        return self.k == 0 and self.d == 0 and not any(self.alpha)

    def e_efetiva(self) -> bool:
        """k, d ≥ 0 e (k, d) ≠ (0, 0)."""
        return self.k >= 0 and self.d >= 0 and (self.k, self.d) != (0, 0)

    def __add__(self, outro: "CurveClass") -> "CurveClass":
        return CurveClass(self.k + outro.k, self.d + outro.d, tuple(a + b for a, b in zip(self.alpha, outro.alpha)))

    def __neg__(self) -> "CurveClass":
        return CurveClass(-self.k, -self.d, tuple(-a for a in self.alpha))

    def __sub__(self, outro: "CurveClass") -> "CurveClass":
        return self + (-outro)

    def __mul__(self, escalar: int) -> "CurveClass":
        return CurveClass(self.k * escalar, self.d * escalar, tuple(a * escalar for a in self.alpha))

    __rmul__ = __mul__

    def dividir(self, j: int) -> "CurveClass":
        if j == 0 or self.k % j or self.d % j or any(a % j for a in self.alpha):
            raise ErroDominio(f"{self} não é divisível por {j}")
        return CurveClass(self.k // j, self.d // j, tuple(a // j for a in self.alpha))

    def para_json(self) -> dict:
        return {"k": self.k, "d": self.d, "alpha": list(self.alpha)}

    @classmethod
    def de_json(cls, dados: dict) -> "CurveClass":
        return cls(int(dados["k"]), int(dados["d"]), tuple(dados.get("alpha", ZERO_E8)))

    def __str__(self):
        base = f"{self.k}s+{self.d}f"
        return base if not any(self.alpha) else f"{base}+α{list(self.alpha)}"


def alpha_d(d: int) -> CurveClass:
    """Classe primitiva s + d·f, de quadrado 2d."""
    return CurveClass(1, d)


@dataclass(frozen=True)
class MukaiVector:
    r: int
    beta: CurveClass
    n: int

    @property
    def quadrado(self) -> int:
        return self.beta.quadrado - self.r * self.r - 2 * self.r * self.n

    def produto(self, outro: "MukaiVector") -> int:
        """Pareamento de Euler ββ′ − rr′ − rn′ − r′n."""
        return self.beta.pairing(outro.beta) - self.r * outro.r - self.r * outro.n - outro.r * self.n

    def e_nulo(self) -> bool:
        return self.r == 0 and self.n == 0 and self.beta.e_nula()

    def dividir(self, j: int) -> "MukaiVector":
        if self.r % j or self.n % j:
            raise ErroDominio(f"{self} não é divisível por {j}")
        return MukaiVector(self.r // j, self.beta.dividir(j), self.n // j)

    def para_json(self) -> dict:
        return {"r": self.r, "beta": self.beta.para_json(), "n": self.n}

    @classmethod
    def de_json(cls, dados: dict) -> "MukaiVector":
        return cls(int(dados["r"]), CurveClass.de_json(dados["beta"]), int(dados["n"]))

    def __str__(self):
        return f"({self.r}, {self.beta}, {self.n})"


@dataclass(frozen=True)
class InvariantTriple:
    quadrado: int
    divisibilidade: int
    tipo: Tipo

    def __post_init__(self):
        object.__setattr__(self, "tipo", Tipo(self.tipo))
        if self.divisibilidade < 0:
            raise ErroDominio(f"divisibilidade negativa: {self.divisibilidade}")


def mukai_invariants(v: MukaiVector) -> InvariantTriple:
    """(v·v, m = gcd(r, div β, 2n), tipo); par sse r/m e (2n + r)/m são ambos pares."""
    if v.e_nulo():
        raise ErroDominio("vetor de Mukai nulo não tem invariantes")
    m = gcd(v.r, v.beta.divisibilidade, 2 * v.n)
    par = (v.r // m) % 2 == 0 and ((2 * v.n + v.r) // m) % 2 == 0
    return InvariantTriple(v.quadrado, m, Tipo.PAR if par else Tipo.IMPAR)


def orbit_representative(t: InvariantTriple) -> MukaiVector:
    """Representante canônico da órbita.

    par                     -> (0, m·α_d, 0)
    ímpar, v²/m² ímpar      -> (m, m·α_d, 0)
    ímpar, v²/m² par        -> (0, 2m′·α_d, m′) com m = 2m′
    """
    m = t.divisibilidade
    if m <= 0 or t.quadrado % (m * m):
        raise ErroDominio(f"invariantes irrealizáveis {t} (no such orbit)")
    reduzido = t.quadrado // (m * m)
    if t.tipo is Tipo.PAR:
        if reduzido % 2:
            raise ErroDominio(f"tipo par exige v²/m² par: {t} (no such orbit)")
        return MukaiVector(0, alpha_d(reduzido // 2) * m, 0)
    if reduzido % 2:
        return MukaiVector(m, alpha_d((reduzido + 1) // 2) * m, 0)
    if m % 2:
        raise ErroDominio(f"tipo ímpar com v²/m² par exige m par: {t} (no such orbit)")
    m_linha = m // 2
    return MukaiVector(0, alpha_d(reduzido // 2) * m, m_linha)
