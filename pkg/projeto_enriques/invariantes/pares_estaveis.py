#!/usr/bin/env python3
"""
Séries de pares estáveis por classe de curva.

f^KM_β é o coeficiente q^{β²/2} do núcleo de Klemm-Mariño. f^PT_β vem
da fórmula de Toda:

    f^PT_β = Σ_{n>0,r>0} (n+r)(−1)^{r−1} dt(r,β,n)(pⁿ + p^{−n})
             − Σ_{n>0} n·dt(0,β,n)·pⁿ + Σ_{r>0} (−1)^{r−1} r·dt(r,β,0)

A soma em r = 0 tem suporte infinito em p e fica como token de polo.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Dict, Optional, Tuple

from hecke.operadores import divisores_impares
from invariantes.donaldson_thomas import FonteDT, dt
from invariantes.omega import OmegaTable, coef_eta_menos_12, tabela_cobrindo
from reticulado.classes import CurveClass, MukaiVector
from series.plaurent import PLaurent
from series.polos import TokenPolo, p, para_sympy, token_serie_periodica
from series.zseries import plaurent_to_zseries, zseries_extract_genus
from utils.excecoes import ErroConsistencia, ErroDominio
from utils.logging_config import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class SeriePT:
    """Parte regular (polinômio de Laurent) mais token de polo em p."""

    regular: PLaurent
    polar: TokenPolo

    @classmethod
    def de_plaurent(cls, c: PLaurent) -> "SeriePT":
        return cls(c, TokenPolo.zero())

    def e_regular(self) -> bool:
        return self.polar.e_zero()

    def substituir_potencia(self, k: int) -> "SeriePT":
        return SeriePT(self.regular.substituir_potencia(k), self.polar.substituir_potencia(k))

    def __add__(self, outro: "SeriePT") -> "SeriePT":
        return SeriePT(self.regular + outro.regular, self.polar + outro.polar)

    def __mul__(self, escalar) -> "SeriePT":
        return SeriePT(self.regular * escalar, self.polar * escalar)

    __rmul__ = __mul__

    def __eq__(self, outro):
        if not isinstance(outro, SeriePT):
            return NotImplemented
        return self.para_token() == outro.para_token()

    def __hash__(self):
        return hash(self.para_token())

    def para_token(self) -> TokenPolo:
        return TokenPolo.de_plaurent(self.regular) + self.polar

    def __str__(self):
        return str(self.regular) if self.e_regular() else f"{self.regular} + [{self.polar}]"


def _f_km_soma_dupla(quadrado: int) -> PLaurent:
    """Σ_{r ímpar} r·b(β²/2 − r²/2) + Σ_{n>0, r ímpar} (n+r)·b(β²/2 − rn − r²/2)(pⁿ + p^{−n})."""
    metade = Fraction(quadrado, 2)
    coeffs: Dict[int, Fraction] = {}
    r = 1
    while metade - Fraction(r * r, 2) >= Fraction(-1, 2):
        coeffs[0] = coeffs.get(0, 0) + r * coef_eta_menos_12(metade - Fraction(r * r, 2))
        n = 1
        while metade - r * n - Fraction(r * r, 2) >= Fraction(-1, 2):
            c = (n + r) * coef_eta_menos_12(metade - r * n - Fraction(r * r, 2))
            coeffs[n] = coeffs.get(n, 0) + c
            coeffs[-n] = coeffs.get(-n, 0) + c
            n += 1
        r += 2
    return PLaurent(coeffs)


def f_KM(beta: CurveClass, tabela: Optional[OmegaTable] = None, verificar: bool = True) -> PLaurent:
    """[Θ(z,2τ)²/Θ(z,τ)² · η(2τ)⁸/η(τ)¹⁶]_{q^{β²/2}}, conferido contra a soma dupla em η^{−12}."""
    quadrado = beta.quadrado
    if quadrado < 0:
        return PLaurent.zero()
    h = quadrado // 2
    tabela = tabela if tabela is not None else tabela_cobrindo(1, h)
    c = tabela.coef_q(h)
    if verificar:
        pela_soma = _f_km_soma_dupla(quadrado)
        if c != pela_soma:
            logger.error(f"❌ f^KM em β² = {quadrado}: núcleo {c} ≠ soma dupla {pela_soma}")
            raise ErroConsistencia(f"f^KM diverge da soma em η^{{−12}} para β² = {quadrado}")
    return c


def f_PT(beta: CurveClass, dt_source: Optional[FonteDT] = None) -> SeriePT:
    """Soma de Toda em três partes; o suporte usa β² − r² − 2rn ≥ −1."""
    if beta.e_nula():
        raise ErroDominio("f^PT_β exige β ≠ 0")
    fonte = dt_source or dt
    quadrado = beta.quadrado
    coeffs: Dict[int, Fraction] = {}
    r = 1
    while quadrado - r * r >= -1:
        sinal = (-1) ** (r - 1)
        coeffs[0] = coeffs.get(0, 0) + sinal * r * fonte(MukaiVector(r, beta, 0))
        n = 1
        while quadrado - r * r - 2 * r * n >= -1:
            c = (n + r) * sinal * fonte(MukaiVector(r, beta, n))
            coeffs[n] = coeffs.get(n, 0) + c
            coeffs[-n] = coeffs.get(-n, 0) + c
            n += 1
        r += 1
    # dt(0, β, n) é periódico em n com período div(β)
    periodo = beta.divisibilidade
    periodicos = [fonte(MukaiVector(0, beta, j)) for j in range(1, periodo + 1)]
    polar = -token_serie_periodica(periodicos) if any(periodicos) else TokenPolo.zero()
    return SeriePT(PLaurent(coeffs), polar)


def gwpt_bridge(f, z_trunc: int) -> Dict[int, Fraction]:
    """p = e^z e leitura de n_g em (−1)^{g−1} z^{2g−2}."""
    if isinstance(f, SeriePT):
        if not f.e_regular():
            raise ErroDominio(f"série com parte polar não se expande em z: {f.polar}")
        f = f.regular
    if not f.e_simetrico():
        raise ErroDominio(f"entrada assimétrica em p ↦ 1/p (asymmetric input): {f}")
    return zseries_extract_genus(plaurent_to_zseries(f, z_trunc))


def toda_log_PT(k_max: int, d_max: int, dt_source: Optional[FonteDT] = None) -> Dict[Tuple[int, int], SeriePT]:
    """Coeficientes de log PT(Q) na fatia β = k·s + d·f: Σ_{j ímpar | β} (1/j)·f^PT_{β/j}(p^j)."""
    cache: Dict[Tuple[int, int], SeriePT] = {}

    def f_fatia(k: int, d: int) -> SeriePT:
        if (k, d) not in cache:
            cache[(k, d)] = f_PT(CurveClass(k, d), dt_source)
        return cache[(k, d)]

    saida: Dict[Tuple[int, int], SeriePT] = {}
    for k in range(k_max + 1):
        for d in range(d_max + 1):
            if (k, d) == (0, 0):
                continue
            total = SeriePT.de_plaurent(PLaurent.zero())
            for j in divisores_impares(gcd(k, d)):
                total = total + f_fatia(k // j, d // j).substituir_potencia(j) * Fraction(1, j)
            saida[(k, d)] = total
    logger.debug(f"🔗 log PT(Q) na fatia: {len(saida)} classes")
    return saida


@dataclass(frozen=True)
class ResultadoLemaDiv2:
    serie: TokenPolo
    sem_polo: bool
    forma_fechada: Optional[TokenPolo]


def div2_lemma(c0, c1) -> ResultadoLemaDiv2:
    """Σ_{n>0} n·c_n·pⁿ com c_n = c1 (n ímpar), c0 (n par).

    Sem polo em p = 1 exatamente quando c0 = −c1, e então vale c1·p/(1+p)².
    """
    serie = token_serie_periodica([c1, c0])
    sem_polo = not serie.tem_polo_em_um()
    forma_fechada = None
    if sem_polo:
        forma_fechada = TokenPolo(para_sympy(c1) * p / (1 + p) ** 2)
        if serie != forma_fechada:
            raise ErroConsistencia(f"série sem polo difere de c1·p/(1+p)²: {serie}")
    return ResultadoLemaDiv2(serie, sem_polo, forma_fechada)
