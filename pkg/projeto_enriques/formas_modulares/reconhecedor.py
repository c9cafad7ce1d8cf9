#!/usr/bin/env python3
"""
Reconhecimento de formas quasimodulares por álgebra linear exata.

A série é escrita como combinação dos monômios de peso fixo resolvendo o
sistema racional de coeficientes de Fourier, eliminado em DomainMatrix
sobre QQ (sympy.polys.matrices). Exige pelo menos EXCEDENTE_MINIMO
equações além do posto para aceitar o resultado.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from formas_modulares.anel import Anel, RingElement, avaliar_monomio, evaluate, monomios
from series.qseries import QSeries
from utils.excecoes import ErroDominio, ErroTruncamento
from utils.logging_config import get_logger

logger = get_logger(__name__)

EXCEDENTE_MINIMO = 5


@dataclass(frozen=True)
class ResultadoReconhecimento:
    sucesso: bool
    elemento: Optional[RingElement]
    residuo: QSeries
    excedente: int

    def __bool__(self):
        return self.sucesso


def _fraction(valor) -> Fraction:
    return Fraction(int(valor.numerator), int(valor.denominator))


def _matriz_qq(linhas: Sequence[Sequence[Fraction]], colunas: int) -> DomainMatrix:
    dados = [[QQ(int(c.numerator), int(c.denominator)) for c in linha] for linha in linhas]
    return DomainMatrix(dados, (len(dados), colunas), QQ)


def _linhas_base(base, linhas: List[int], trunc: int) -> List[List[Fraction]]:
    colunas = [avaliar_monomio(m, trunc) for m in base]
    return [[col.coef_escalado(n) for col in colunas] for n in linhas]


def _resolver(linhas: List[List[Fraction]], alvo: List[Fraction], colunas: int):
    """(rref de [A | b], pivôs) sobre QQ."""
    aumentada = [linha + [b] for linha, b in zip(linhas, alvo)]
    R, pivos = _matriz_qq(aumentada, colunas + 1).rref()
    return R.to_list(), tuple(pivos)


def recognize(f: QSeries, peso: int, anel: Anel, max_order: Optional[int] = None) -> ResultadoReconhecimento:
    """Escreve f como polinômio nos geradores de `anel` em peso `peso`.

    Raises:
        ErroDominio: f com expoentes não inteiros
        ErroTruncamento: menos de EXCEDENTE_MINIMO equações excedentes (underdetermined)
    """
    anel = Anel(anel)
    f = f.normalizar_denominador()
    if f.exp_denom != 1 or any(n < 0 for n in f.coeffs):
        raise ErroDominio("reconhecimento exige expoentes inteiros não negativos em q")
    ordem = f.trunc if max_order is None else max_order
    if ordem > f.trunc:
        raise ErroTruncamento(
            "coeficientes insuficientes (underdetermined)", limite=f"max_order={ordem} > trunc={f.trunc}"
        )
    alvo = f.truncar(ordem)
    base = monomios(anel, peso)

    if not base:
        sucesso = not alvo
        elemento = RingElement.de_dict(anel, peso, {}) if sucesso else None
        return ResultadoReconhecimento(sucesso, elemento, alvo, ordem)

    n_base = len(base)
    A = _linhas_base(base, list(range(ordem)), ordem)
    b = [alvo.coef_escalado(n) for n in range(ordem)]
    posto = _matriz_qq(A, n_base).rank()
    excedente = ordem - posto
    if excedente < EXCEDENTE_MINIMO or posto < n_base:
        raise ErroTruncamento(
            f"sistema subdeterminado (underdetermined): posto {posto}, {n_base} monômios, excedente {excedente}",
            limite=f"max_order={ordem}",
        )

    R, pivos = _resolver(A, b, n_base)
    consistente = n_base not in pivos
    if consistente:
        solucao = {base[j]: _fraction(R[i][n_base]) for i, j in enumerate(pivos)}
    else:
        # melhor aproximação: sistema quadrado nas linhas independentes
        transposta = [[A[i][j] for i in range(ordem)] for j in range(n_base)]
        _, linhas_indep = _matriz_qq(transposta, ordem).rref()
        R_sub, pivos_sub = _resolver([A[i] for i in linhas_indep], [b[i] for i in linhas_indep], n_base)
        solucao = {base[j]: _fraction(R_sub[i][n_base]) for i, j in enumerate(pivos_sub)}

    elemento = RingElement.de_dict(anel, peso, solucao)
    residuo = alvo - evaluate(elemento, ordem)
    if consistente:
        logger.debug(f"🔎 Reconhecido em {anel.value}/{peso}: {elemento} (excedente {excedente})")
        return ResultadoReconhecimento(True, elemento, residuo, excedente)
    logger.debug(f"🔎 Não reconhecido em {anel.value}/{peso}: resíduo {residuo}")
    return ResultadoReconhecimento(False, None, residuo, excedente)


def vanishing_lemma_check(m: int, peso: int, ordem: int) -> bool:
    """Formas em QMod_k(Γ₀(2)) com coeficientes suportados em múltiplos de m.

    Devolve True quando o único tal elemento é 0 (k ≠ 0) ou as constantes
    (k = 0). Para m = 2 a resposta em geral é False.
    """
    if m < 2:
        raise ErroDominio(f"m deve ser ≥ 2: {m}")
    base = monomios(Anel.G02_QMOD, peso)
    if not base:
        return True
    linhas = [n for n in range(ordem) if n % m]
    if len(linhas) < len(base) + EXCEDENTE_MINIMO:
        raise ErroTruncamento(
            f"ordem insuficiente para decidir (inconclusive): {len(linhas)} restrições, {len(base)} monômios",
            limite=f"ordem={ordem}",
        )
    # dim ker = colunas − posto
    nucleo = len(base) - _matriz_qq(_linhas_base(base, linhas, ordem), len(base)).rank()
    logger.debug(f"🔎 Lema de anulamento m={m}, k={peso}: núcleo de dimensão {nucleo}")
    if peso == 0:
        return nucleo == 1
    return nucleo == 0
