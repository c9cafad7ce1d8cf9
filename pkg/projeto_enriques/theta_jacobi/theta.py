#!/usr/bin/env python3
"""
Função theta de Jacobi Θ(z, τ) e o quociente central

    Θ(z,2τ)²/Θ(z,τ)² · η(2τ)⁸/η(τ)¹⁶
      = Π (1−pq^{2m})²(1−p⁻¹q^{2m})²(1−q^{2m})⁴ / ((1−pq^m)²(1−p⁻¹q^m)²(1−q^m)¹²).

Θ é guardado como (p^{1/2} − p^{−1/2})·T(p, q), com T de expoentes
inteiros; apenas potências pares de Θ são expostas.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import List

from formas_modulares.eisenstein import eisenstein_G
from formas_modulares.eta import eta_power
from series.jqseries import JQSeries, produto_jacobi
from series.plaurent import PLaurent
from series.polos import TokenPolo, polo_theta
from series.qseries import QSeries, produto_infinito
from utils.excecoes import ErroConsistencia
from utils.logging_config import get_logger

logger = get_logger(__name__)

# (s, c, e): fator Π_{m≥1} (1 − p^s q^{c·m})^e
TERMOS_T = ((1, 1, 1), (-1, 1, 1), (0, 1, -2))
TERMOS_KM = ((1, 2, 2), (-1, 2, 2), (0, 2, 4), (1, 1, -2), (-1, 1, -2), (0, 1, -12))

PREFATOR_QUADRADO = PLaurent({1: 1, 0: -2, -1: 1})


def _exigir_igual(nome: str, a: QSeries, b: QSeries):
    if a != b:
        logger.error(f"❌ {nome}: construções divergem em {a.diferencas(b)}")
        raise ErroConsistencia(f"{nome}: construções independentes divergem")


@dataclass(frozen=True)
class ThetaJacobi:
    """Θ = (p^{1/2} − p^{−1/2})^{prefator}·T."""

    T: JQSeries
    prefator: bool = True

    def quadrado(self) -> JQSeries:
        T2 = self.T * self.T
        return T2 * PREFATOR_QUADRADO if self.prefator else T2


def _T_produto(trunc: int) -> JQSeries:
    return produto_jacobi(TERMOS_T, trunc)


def _T_soma(trunc: int) -> JQSeries:
    """[Σ_{j≥0} (−1)^j (p^{−j} + … + p^{j}) q^{j(j+1)/2}] / Π(1 − qⁿ)³."""
    numerador = {}
    j = 0
    while j * (j + 1) // 2 < trunc:
        numerador[j * (j + 1) // 2] = PLaurent({i: (-1) ** j for i in range(-j, j + 1)})
        j += 1
    soma = JQSeries(numerador, trunc)
    eta3_sem_prefator = produto_infinito([(1, -3, -1)], trunc)
    return soma * eta3_sem_prefator


@lru_cache(maxsize=8)
def theta(trunc: int) -> ThetaJacobi:
    """Θ pela soma em ν ∈ Z + ½ dividida por η³ e pelo produto triplo; as duas são comparadas."""
    por_produto = _T_produto(trunc)
    por_soma = _T_soma(trunc)
    _exigir_igual("Θ (produto triplo × soma meio-inteira)", por_produto, por_soma)
    return ThetaJacobi(por_produto)


def theta_sq(trunc: int) -> JQSeries:
    """Θ² = (p − 2 + p⁻¹)·T²."""
    return theta(trunc).quadrado()


@dataclass(frozen=True)
class InversoThetaQuadrado:
    """1/Θ² = parte polar (token p/(1−p)²) + parte regular em q."""

    polar: TokenPolo
    regular: JQSeries


def _inv_theta_sq_fechada(trunc: int) -> JQSeries:
    """Σ_{r≥1} (2r q^{r²} + Σ_{n≥1} (2r+n)(pⁿ+p^{−n}) q^{rn+r²})."""
    coeffs = {}
    r = 1
    while r * r < trunc:
        coeffs[r * r] = coeffs.get(r * r, PLaurent.zero()) + PLaurent.constante(2 * r)
        n = 1
        while r * n + r * r < trunc:
            chave = r * n + r * r
            coeffs[chave] = coeffs.get(chave, PLaurent.zero()) + PLaurent.par_simetrico(n, 2 * r + n)
            n += 1
        r += 1
    return JQSeries(coeffs, trunc)


@lru_cache(maxsize=8)
def inv_theta_sq(trunc: int) -> InversoThetaQuadrado:
    """1/Θ² por inversão de T², conferida contra a soma dupla fechada.

    Como 1/(p − 2 + p⁻¹) não é polinômio de Laurent, a conferência usa a
    forma multiplicada (p − 2 + p⁻¹)·S + 1 = 1/T².
    """
    T = theta(trunc).T
    inverso_T2 = (T * T).inverso()
    regular = _inv_theta_sq_fechada(trunc)
    _exigir_igual("1/Θ² (inversão × soma dupla)", regular * PREFATOR_QUADRADO + 1, inverso_T2)
    return InversoThetaQuadrado(polo_theta(), regular)


def _km_por_produto(trunc: int) -> JQSeries:
    return produto_jacobi(TERMOS_KM, trunc)


def _km_por_theta(trunc: int) -> JQSeries:
    T = theta(trunc).T
    T_2tau = T.escalar_q(2).truncar(trunc)
    razao = T_2tau * T_2tau * (T * T).inverso()
    # η(2τ)⁸/η(τ)¹⁶ sem o prefator q^{0}
    etas = produto_infinito([(2, 8, -1), (1, -16, -1)], trunc)
    return razao * etas


def km_kernel_soma_fechada(trunc: int) -> JQSeries:
    """Σ_{r ímpar} (r q^{r²/2} + Σ_{n≥1} (n+r)(pⁿ+p^{−n}) q^{rn + r²/2}), expoentes em q/2."""
    coeffs = {}
    r = 1
    while r * r < 2 * trunc:
        coeffs[r * r] = coeffs.get(r * r, PLaurent.zero()) + PLaurent.constante(r)
        n = 1
        while 2 * r * n + r * r < 2 * trunc:
            chave = 2 * r * n + r * r
            coeffs[chave] = coeffs.get(chave, PLaurent.zero()) + PLaurent.par_simetrico(n, n + r)
            n += 1
        r += 2
    return JQSeries(coeffs, 2 * trunc, 2)


@lru_cache(maxsize=8)
def km_kernel(trunc: int, verificar: bool = True) -> JQSeries:
    """O produto do núcleo de Klemm-Mariño até q^trunc.

    Com verificar=True compara produto, quociente de thetas e (após
    multiplicar por η¹² = q^{1/2}Π(1−qⁿ)¹²) a soma dupla fechada.
    """
    produto = _km_por_produto(trunc)
    if verificar:
        _exigir_igual("km_kernel (produto × quociente de thetas)", produto, _km_por_theta(trunc))
        deslocado = produto * JQSeries.de_qseries(eta_power(12, trunc))
        _exigir_igual("km_kernel·η¹² (produto × soma fechada)", deslocado, km_kernel_soma_fechada(trunc))
        logger.info(f"✅ km_kernel: três construções coincidem até q^{trunc}")
    return produto


# -- expansões de Taylor em z -----------------------------------------------


def _coeficientes_z(serie: JQSeries, z_ordem: int, meio_deslocamento: bool = False) -> List[QSeries]:
    """Coeficientes de z^k (k < z_ordem) após p = e^z.

    Com meio_deslocamento, a série é multiplicada por (p^{1/2} − p^{−1/2}).
    """
    saida = []
    for k in range(z_ordem):
        coeffs = {}
        for n, c in serie.coeffs.items():
            if meio_deslocamento:
                v = sum(
                    (a * ((Fraction(2 * r + 1, 2)) ** k - (Fraction(2 * r - 1, 2)) ** k) for r, a in c.items()),
                    Fraction(0),
                )
            else:
                v = sum((a * Fraction(r) ** k for r, a in c.items()), Fraction(0))
            if v:
                coeffs[n] = v / factorial(k)
        saida.append(QSeries(coeffs, serie.trunc, serie.exp_denom))
    return saida


def _exp_em_z(A: List[QSeries], trunc: int) -> List[QSeries]:
    """exp(Σ_k A_k z^k) com A_0 = 0: n·E_n = Σ_{k=1}^{n} k·A_k·E_{n−k}."""
    E = [QSeries.constante(1, trunc)]
    for n in range(1, len(A)):
        acc = QSeries.zero(trunc)
        for k in range(1, n + 1):
            if A[k]:
                acc = acc + A[k] * E[n - k] * k
        E.append(acc * Fraction(1, n))
    return E


def theta_taylor_check(z_ordem: int = 10, q_ordem: int = 20) -> bool:
    """Θ = z·exp(−2 Σ_{k≥2} G_k z^k/k!) coeficiente a coeficiente até z^{z_ordem−1}."""
    lado_theta = _coeficientes_z(theta(q_ordem).T, z_ordem, meio_deslocamento=True)
    A = [QSeries.zero(q_ordem)] + [
        eisenstein_G(k, q_ordem) * Fraction(-2, factorial(k)) if k >= 2 else QSeries.zero(q_ordem)
        for k in range(1, z_ordem)
    ]
    E = _exp_em_z(A, q_ordem)
    for k in range(z_ordem):
        esperado = E[k - 1] if k >= 1 else QSeries.zero(q_ordem)
        if lado_theta[k] != esperado:
            logger.error(f"❌ Taylor de Θ diverge em z^{k}: {lado_theta[k].diferencas(esperado)}")
            return False
    return True


def theta_ratio_eisenstein_check(z_ordem: int = 9, q_ordem: int = 20) -> bool:
    """Θ(z,2τ)²/Θ(z,τ)² = exp(4 Σ_{k≥2} (G_k(τ) − G_k(2τ)) z^k/k!)."""
    T = theta(q_ordem).T
    T_2tau = T.escalar_q(2).truncar(q_ordem)
    razao = T_2tau * T_2tau * (T * T).inverso()
    lado_theta = _coeficientes_z(razao, z_ordem)
    A = [QSeries.zero(q_ordem)]
    for k in range(1, z_ordem):
        if k < 2:
            A.append(QSeries.zero(q_ordem))
            continue
        G = eisenstein_G(k, q_ordem)
        A.append((G - G.escalar_q(2).truncar(q_ordem)) * Fraction(4, factorial(k)))
    E = _exp_em_z(A, q_ordem)
    for k in range(z_ordem):
        if lado_theta[k] != E[k]:
            logger.error(f"❌ Razão de thetas diverge em z^{k}: {lado_theta[k].diferencas(E[k])}")
            return False
    return True
