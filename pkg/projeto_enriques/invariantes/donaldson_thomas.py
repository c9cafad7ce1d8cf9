#!/usr/bin/env python3
"""
Invariantes de Donaldson-Thomas 2-dimensionais e de Vafa-Witten.

    dt(v) = 8·[η^{−12}]_{q^{v·v/2}}        (zero se v·v é par)
    DT(v) = Σ_{k ímpar, k | v} k^{−2}·dt(v/k)
    VW(v) = DT(v)/4 = 2 Σ_{k ímpar} k^{−2} e(Hilb^{v·v/2k² + 1/2})

e a direção inversa: resolver dt em classes primitivas a partir de f^KM.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from hecke.operadores import divisores_impares
from invariantes.omega import OmegaTable, coef_eta_menos_12, e_hilb, tabela_cobrindo
from reticulado.classes import (CurveClass, InvariantTriple, MukaiVector, Tipo,
                                mukai_invariants, orbit_representative)
from utils.excecoes import ErroConsistencia, ErroDominio
from utils.logging_config import get_logger

logger = get_logger(__name__)

FonteDT = Callable[[MukaiVector], Fraction]


def dt(v: MukaiVector) -> Fraction:
    if v.e_nulo():
        raise ErroDominio("dt(v) exige v ≠ 0")
    quadrado = v.quadrado
    if quadrado % 2 == 0:
        return Fraction(0)
    return 8 * coef_eta_menos_12(Fraction(quadrado, 2))


def DT(v: MukaiVector, dt_source: Optional[FonteDT] = None) -> Fraction:
    if v.e_nulo():
        raise ErroDominio("DT(v) exige v ≠ 0")
    fonte = dt_source or dt
    m = mukai_invariants(v).divisibilidade
    return sum((Fraction(1, k * k) * fonte(v.dividir(k)) for k in divisores_impares(m)), Fraction(0))


def VW(v: MukaiVector) -> Fraction:
    return DT(v) / 4


def VW_formula(v: MukaiVector) -> Fraction:
    """2 Σ_{k ímpar | v} k^{−2} e(Hilb^{v·v/2k² + 1/2})."""
    if v.e_nulo():
        raise ErroDominio("VW(v) exige v ≠ 0")
    m = mukai_invariants(v).divisibilidade
    total = Fraction(0)
    for k in divisores_impares(m):
        total += Fraction(1, k * k) * e_hilb(Fraction(v.quadrado, 2 * k * k) + Fraction(1, 2))
    return 2 * total


def DT_primitivo(quadrado: int, tipo: Tipo) -> Fraction:
    """DT^{tipo}_{d,1} calculado no representante da órbita."""
    return DT(orbit_representative(InvariantTriple(quadrado, 1, tipo)))


def DT_primitivo_fechado(quadrado: int, tipo: Tipo) -> Fraction:
    """DT^{odd}_{d,1} = 8e(Hilb^{(d+1)/2}) para d ímpar; DT^{even}_{d,1} = 0."""
    if Tipo(tipo) is Tipo.PAR or quadrado % 2 == 0:
        return Fraction(0)
    return 8 * e_hilb((quadrado + 1) // 2)


def DT_even_odd_split(d: int) -> Tuple[Fraction, Fraction]:
    """(DT^{odd}_{4d,2}, DT^{even}_{4d,2}) = (DT(0, β, 1), DT(0, β, 0)) com β = 2s + d·f."""
    if d % 2:
        raise ErroDominio(f"a decomposição em divisibilidade 2 exige d par, recebido {d}")
    beta = CurveClass(2, d)
    return DT(MukaiVector(0, beta, 1)), DT(MukaiVector(0, beta, 0))


@dataclass(frozen=True)
class ResultadoSudoku:
    """dt resolvido por quadrado em classes primitivas (quadrado ímpar: tipo ímpar; par: tipo par)."""

    solucao: Dict[int, Fraction]
    equacoes_verificadas: int
    divergencias: List[int] = field(default_factory=list)

    @property
    def coincide_forma_fechada(self) -> bool:
        return not self.divergencias

    def fonte(self) -> FonteDT:
        """dt_source injetável em f_PT para classes primitivas."""

        def buscar(v: MukaiVector) -> Fraction:
            if mukai_invariants(v).divisibilidade != 1:
                raise ErroDominio(f"tabela resolvida só cobre classes primitivas: {v}")
            if v.quadrado < -1:
                return Fraction(0)
            return self.solucao[v.quadrado]

        return buscar


def _lado_pt(D: Dict[int, Fraction], h: int, n: int) -> Fraction:
    """Σ_{r≥1} (|n| + r)(−1)^{r−1} D(2h − r² − 2r|n|), sem o termo r = 0."""
    n = abs(n)
    total = Fraction(0)
    r = 1
    while 2 * h - r * r - 2 * r * n >= -1:
        x = 2 * h - r * r - 2 * r * n
        total += (n + r) * (-1) ** (r - 1) * D[x]
        r += 1
    return total


def solve_dt_primitive(max_square: int, tabela: Optional[OmegaTable] = None) -> ResultadoSudoku:
    """Resolve dt(v) para div(v) = 1 e v·v ≤ max_square a partir de f^PT_{α_h} = 8·f^KM_{α_h}.

    Em β = s + h·f, o coeficiente de p⁰ fixa D(2h − 1) e o de p¹ fixa
    D(2h); os demais pⁿ (n ≠ 0, 1) são equações de consistência.
    """
    if max_square < -1:
        raise ErroDominio(f"quadrado máximo deve ser ≥ −1: {max_square}")
    H = (max_square + 1) // 2 + 1
    tabela = tabela if tabela is not None else tabela_cobrindo(1, H)
    D: Dict[int, Fraction] = {}
    verificadas = 0
    for h in range(H + 1):
        alvo = tabela.coef_q(h) * 8
        resto = Fraction(0)
        r = 2
        while 2 * h - r * r >= -1:
            resto += (-1) ** (r - 1) * r * D[2 * h - r * r]
            r += 1
        D[2 * h - 1] = alvo.coef(0) - resto
        D[2 * h] = _lado_pt(D, h, 1) - alvo.coef(1)
        for n in range(-(h + 1), h + 2):
            if n in (0, 1):
                continue
            lado = _lado_pt(D, h, n) - (n * D[2 * h] if n > 0 else 0)
            if lado != alvo.coef(n):
                logger.error(f"❌ Equação p^{n} em β² = {2 * h}: {lado} ≠ {alvo.coef(n)}")
                raise ErroConsistencia(f"sistema de dt inconsistente em p^{n}, β² = {2 * h}")
            verificadas += 1
    divergencias = []
    solucao = {x: c for x, c in D.items() if x <= max_square}
    for x, c in sorted(solucao.items()):
        tipo = Tipo.IMPAR if x % 2 else Tipo.PAR
        if c != dt(orbit_representative(InvariantTriple(x, 1, tipo))):
            divergencias.append(x)
    logger.info(f"🧩 dt primitivo resolvido até v² = {max_square}: {verificadas} equações extras conferidas")
    return ResultadoSudoku(solucao, verificadas, divergencias)