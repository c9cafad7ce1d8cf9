#!/usr/bin/env python3
"""
Tabelas de coeficientes lidas do núcleo de Klemm-Mariño:

    ω(r, n)  = [km_kernel]_{pʳ qⁿ}
    ω_g(n)   = (−1)^{g−1} [km_kernel]_{z^{2g−2} qⁿ},  p = e^z

mais a(n) (Π(1+qⁿ)⁸/(1−qⁿ)⁸), e(Hilbⁿ Y) (Göttsche) e b(m) = [η^{−12}]_{q^m}.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Mapping, Optional, Tuple

from series.plaurent import PLaurent
from series.qseries import QSeries, produto_infinito
from series.racional import formatar_racional, racional
from series.zseries import plaurent_to_zseries, zseries_extract_genus
from theta_jacobi.theta import km_kernel
from utils.excecoes import ErroDominio, ErroTruncamento
from utils.logging_config import get_logger, log_step

logger = get_logger(__name__)

# granularidade das tabelas memoizadas sob demanda
BLOCO_N = 16
G_MINIMO = 6


def _indice_inteiro(n) -> Tuple[bool, int]:
    """(é inteiro não negativo, valor)."""
    n = racional(n)
    if n.denominator != 1 or n < 0:
        return False, 0
    return True, int(n)


@dataclass(frozen=True)
class OmegaTable:
    """ω_g(n) para 0 ≤ g ≤ max_g, 0 ≤ n ≤ max_n e a forma em p ω(r, n)."""

    max_g: int
    max_n: int
    valores: Mapping[Tuple[int, int], Fraction] = field(repr=False)
    forma_p: Mapping[int, PLaurent] = field(repr=False)

    def _checar_n(self, n: int):
        if n > self.max_n:
            raise ErroTruncamento(
                f"tabela ω insuficiente para n = {n}", limite=f"max_n={self.max_n}"
            )

    def omega(self, g: int, n) -> Fraction:
        """ω_g(n); zero para n negativo ou fracionário e para g ≤ 0."""
        inteiro, n = _indice_inteiro(n)
        if not inteiro or g <= 0:
            return Fraction(0)
        if g > self.max_g:
            raise ErroTruncamento(
                f"gênero {g} além do truncamento em z", limite=f"max_g={self.max_g}"
            )
        self._checar_n(n)
        return self.valores.get((g, n), Fraction(0))

    def omega_p(self, r: int, n) -> Fraction:
        """ω(r, n) = coeficiente de pʳqⁿ."""
        return self.coef_q(n).coef(r)

    def coef_q(self, n) -> PLaurent:
        """O polinômio de Laurent [km_kernel]_{qⁿ} (zero fora do suporte)."""
        inteiro, n = _indice_inteiro(n)
        if not inteiro:
            return PLaurent.zero()
        self._checar_n(n)
        return self.forma_p.get(n, PLaurent.zero())

    def serie_genero(self, g: int, trunc: Optional[int] = None) -> QSeries:
        """Σ_n ω_g(n) qⁿ."""
        trunc = self.max_n + 1 if trunc is None else trunc
        self._checar_n(trunc - 1)
        return QSeries({n: self.omega(g, n) for n in range(trunc)}, trunc)

    def linhas_forma_g(self):
        for g in range(1, self.max_g + 1):
            for n in range(self.max_n + 1):
                yield g, n, self.omega(g, n)

    def linhas_forma_p(self):
        for n in range(self.max_n + 1):
            for r, c in self.coef_q(n).items():
                yield r, n, c

    def para_json(self) -> dict:
        return {
            "max_g": self.max_g,
            "max_n": self.max_n,
            "valores": [[g, n, formatar_racional(v)] for (g, n), v in sorted(self.valores.items())],
            "forma_p": [[n, c.para_json()] for n, c in sorted(self.forma_p.items())],
        }

    @classmethod
    def de_json(cls, dados: dict) -> "OmegaTable":
        valores = {(int(g), int(n)): Fraction(v) for g, n, v in dados["valores"]}
        forma_p = {int(n): PLaurent.de_json(c) for n, c in dados["forma_p"]}
        return cls(int(dados["max_g"]), int(dados["max_n"]), valores, forma_p)


@lru_cache(maxsize=16)
@log_step("OMEGA", "Tabela ω_g(n) e ω(r, n)")
def omega_table(max_g: int, max_n: int) -> OmegaTable:
    if max_g < 0 or max_n < 0:
        raise ErroDominio(f"limites negativos: max_g={max_g}, max_n={max_n}")
    kernel = km_kernel(max_n + 1, verificar=False)
    z_trunc = max(2 * max_g - 1, 1)
    valores: Dict[Tuple[int, int], Fraction] = {}
    forma_p: Dict[int, PLaurent] = {}
    for n in range(max_n + 1):
        c = kernel.coef(n)
        if not c:
            continue
        forma_p[n] = c
        for g, v in zseries_extract_genus(plaurent_to_zseries(c, z_trunc)).items():
            if 1 <= g <= max_g and v:
                valores[(g, n)] = v
    logger.info(f"📊 Tabela ω: g ≤ {max_g}, n ≤ {max_n}, {len(valores)} valores não nulos")
    return OmegaTable(max_g, max_n, valores, forma_p)


def _arredondar(n: int, bloco: int = BLOCO_N) -> int:
    return max(bloco, -(-n // bloco) * bloco)


def tabela_cobrindo(g: int, n) -> OmegaTable:
    """Tabela memoizada que cobre ω_g(n), arredondando os limites para reaproveitar o cache."""
    n = racional(n)
    alvo = int(n) if n > 0 else 0
    return omega_table(max(g, G_MINIMO), _arredondar(alvo))


@lru_cache(maxsize=8)
def a_coeffs(max_n: int) -> QSeries:
    """Π(1+qⁿ)⁸/(1−qⁿ)⁸ = 1 + 16q + 144q² + 960q³ + 5264q⁴ + …"""
    return produto_infinito([(1, 8, 1), (1, -8, -1)], max_n + 1)


@lru_cache(maxsize=8)
def hilb_euler(max_n: int) -> QSeries:
    """Σ e(Hilbⁿ Y) qⁿ = Π 1/(1−qⁿ)¹²."""
    return produto_infinito([(1, -12, -1)], max_n + 1)


def e_hilb(n) -> Fraction:
    """e(Hilbⁿ Y), com e(Hilbⁿ) = 0 para n negativo ou fracionário."""
    inteiro, n = _indice_inteiro(n)
    if not inteiro:
        return Fraction(0)
    return hilb_euler(_arredondar(n + 1, 32)).coef(n)


def coef_eta_menos_12(m) -> Fraction:
    """b(m) = [η^{−12}]_{q^m} = e(Hilb^{m + 1/2}); b(−1/2) = 1."""
    return e_hilb(racional(m) + Fraction(1, 2))
