#!/usr/bin/env python3
"""
Identidades de gênero 1 (e sua extensão a todos os gêneros) na fatia β = k·s + d·f + α:

- forma produto: exp(Σ N_{1,β} q^β) = Π_{β>0} ((1+q^β)/(1−q^β))^{a(β²/2)},
  empurrada ao longo de q^{(k,d,α)} ↦ x^k y^d t^{⟨w,α⟩} e truncada em k + d ≤ K;
- recursão do operador do calor: (β,β)N_{1,β} = 8 Σ_{β₁+β₂=β} (β₁,β₂)N_{1,β₁}N_{1,β₂};
- função de partição: exp(Σ_g F_g (−1)^{g−1} z^{2g−2}) como produto sobre β e r,
  com coeficientes ZSeries em z.
"""

from fractions import Fraction
from math import comb, factorial, gcd, prod
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from invariantes.gromov_witten import km_N
from invariantes.omega import OmegaTable, a_coeffs, tabela_cobrindo
from reticulado.classes import CurveClass
from series.plaurent import PLaurent
from series.zseries import ZSeries, plaurent_to_zseries
from theta_jacobi.e8 import (Q_E8, matriz_vetores_e8, norma_e8, representantes_orbitas_e8,
                             vetores_e8)
from utils.excecoes import ErroDominio, ErroTruncamento
from utils.logging_config import get_logger

logger = get_logger(__name__)

# funcional linear em E8 usado para empurrar ζ^α em t^{⟨w,α⟩}
PESOS_PADRAO = (1, -2, 3, -5, 7, -11, 13, 17)

Monomio3 = Tuple[int, int, int]
Polinomio = Dict[Monomio3, Fraction]
UM = (0, 0, 0)


def _grau(m: Monomio3) -> int:
    return m[0] + m[1]


def _multiplicar(a: Polinomio, b: Polinomio, K: int) -> Polinomio:
    """a·b truncado em grau k + d ≤ K; a é indexado por grau para pular termos altos."""
    por_grau: Dict[int, List[Tuple[Monomio3, Fraction]]] = {}
    for m, c in a.items():
        por_grau.setdefault(_grau(m), []).append((m, c))
    res: Polinomio = {}
    for mb, cb in b.items():
        for g in range(K - _grau(mb) + 1):
            for ma, ca in por_grau.get(g, ()):
                chave = (ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2])
                res[chave] = res.get(chave, 0) + ca * cb
    return {m: c for m, c in res.items() if c}


def _somar_em(destino: Polinomio, parcela: Polinomio, escalar=1):
    for m, c in parcela.items():
        v = destino.get(m, 0) + escalar * c
        if v:
            destino[m] = v
        else:
            destino.pop(m, None)


def _exp(S: Polinomio, K: int) -> Polinomio:
    total: Polinomio = {UM: Fraction(1)}
    termo: Polinomio = {UM: Fraction(1)}
    for n in range(1, K + 1):
        termo = {m: c / n for m, c in _multiplicar(termo, S, K).items()}
        _somar_em(total, termo)
    return total


def _log(P: Polinomio, K: int) -> Polinomio:
    if P.get(UM) != 1:
        raise ErroDominio("log exige termo constante 1")
    X = {m: c for m, c in P.items() if m != UM}
    total: Polinomio = {}
    potencia: Polinomio = {UM: Fraction(1)}
    for n in range(1, K + 1):
        potencia = _multiplicar(potencia, X, K)
        _somar_em(total, potencia, Fraction((-1) ** (n + 1), n))
    return total


def _classes_fatia(K: int) -> Iterable[Tuple[int, int]]:
    for k in range(K + 1):
        for d in range(K + 1 - k):
            if (k, d) != (0, 0):
                yield k, d


def _dados_fatia(k: int, d: int, pesos: Sequence[int]):
    """Para cada α com α·α ≤ 2kd: (α·α, ⟨w,α⟩, div α), vetorizado com numpy."""
    M = matriz_vetores_e8(2 * k * d)
    normas = np.einsum("ij,jk,ik->i", M, Q_E8, M)
    j = M @ np.asarray(pesos, dtype=np.int64)
    div = np.gcd.reduce(M, axis=1)
    return zip(normas.tolist(), j.tolist(), div.tolist())


def genus1_series(K: int, pesos: Sequence[int] = PESOS_PADRAO,
                  tabela: Optional[OmegaTable] = None) -> Tuple[Polinomio, Dict[Monomio3, int]]:
    """(Σ N_{1,β} q^β empurrada, expoentes A = Σ a(β²/2) por monômio)."""
    if K < 1:
        raise ErroDominio(f"K deve ser ≥ 1: {K}")
    max_n = K * K // 4
    tabela = tabela if tabela is not None else tabela_cobrindo(1, max_n)
    a = a_coeffs(max_n)
    cache_N: Dict[Tuple[int, int], Fraction] = {}
    S: Polinomio = {}
    A: Dict[Monomio3, int] = {}
    for k, d in _classes_fatia(K):
        for norma, j, div_alpha in _dados_fatia(k, d, pesos):
            quadrado = 2 * k * d - norma
            divisibilidade = gcd(k, d, div_alpha)
            chave = (quadrado, divisibilidade)
            if chave not in cache_N:
                # N₁ só depende de β² e div β
                cache_N[chave] = _N_genero(1, quadrado, divisibilidade, tabela)
            m = (k, d, j)
            _somar_em(S, {m: cache_N[chave]})
            if quadrado >= 0:
                A[m] = A.get(m, 0) + int(a.coef(quadrado // 2))
    return S, {m: e for m, e in A.items() if e}


def _N_genero(g: int, quadrado: int, divisibilidade: int, tabela: OmegaTable) -> Fraction:
    """2 Σ_{m ímpar | β} m^{2g−3} ω_g(β²/2m²) a partir dos invariantes."""
    total = Fraction(0)
    for m in range(1, divisibilidade + 1, 2):
        if divisibilidade % m == 0:
            total += Fraction(m) ** (2 * g - 3) * tabela.omega(g, Fraction(quadrado, 2 * m * m))
    return 2 * total


def _fator_produto(m: Monomio3, A: int, K: int) -> Polinomio:
    """((1+u)/(1−u))^A − 1 com u = x^k y^d t^j, truncado em grau K."""
    grau_u = _grau(m)
    maximo = K // grau_u
    coeficientes = [Fraction(0)] * (maximo + 1)
    for i in range(min(A, maximo) + 1):
        for l in range(maximo - i + 1):
            coeficientes[i + l] += comb(A, i) * comb(A + l - 1, l) if l else comb(A, i)
    return {(m[0] * e, m[1] * e, m[2] * e): c for e, c in enumerate(coeficientes) if e and c}


def produto_borcherds(A: Dict[Monomio3, int], K: int) -> Polinomio:
    """Π ((1+u)/(1−u))^A; cada fator só toca os termos de grau ≤ K − grau(u)."""
    P: Polinomio = {UM: Fraction(1)}
    for m in sorted(A, key=_grau, reverse=True):
        incremento = _multiplicar(P, _fator_produto(m, A[m], K), K)
        _somar_em(P, incremento)
    return P


def genus1_product_check(K: int = 4, pesos: Sequence[int] = PESOS_PADRAO,
                         tabela: Optional[OmegaTable] = None) -> bool:
    """exp(Σ N₁ q^β) = produto e log(produto) = Σ N₁ q^β, na fatia com k + d ≤ K."""
    S, A = genus1_series(K, pesos, tabela)
    P = produto_borcherds(A, K)
    exp_ok = _exp(S, K) == P
    log_ok = _log(P, K) == S
    if not (exp_ok and log_ok):
        logger.error(f"❌ Forma produto de gênero 1 falhou (exp: {exp_ok}, log: {log_ok}) com K = {K}")
    logger.debug(f"🧮 Gênero 1 em k + d ≤ {K}: {len(S)} monômios em Σ N₁, {len(P)} no produto")
    return exp_ok and log_ok


def _N1(beta: CurveClass, tabela: OmegaTable) -> Fraction:
    if beta.quadrado < 0:
        return Fraction(0)
    return km_N(1, beta, tabela)


def recursao_lados(beta: CurveClass, norm_bound: Optional[int] = None,
                   tabela: Optional[OmegaTable] = None) -> Tuple[Fraction, Fraction]:
    """((β,β)N_{1,β}, 8 Σ (β₁,β₂) N_{1,β₁} N_{1,β₂}) sobre decomposições em classes efetivas."""
    if not beta.e_efetiva():
        raise ErroDominio(f"β deve ser efetiva na fatia: {beta}")
    tabela = tabela if tabela is not None else tabela_cobrindo(1, max(beta.quadrado, 0) // 2 + beta.k * beta.d)
    esquerda = beta.quadrado * _N1(beta, tabela)
    direita = Fraction(0)
    for k1 in range(beta.k + 1):
        for d1 in range(beta.d + 1):
            k2, d2 = beta.k - k1, beta.d - d1
            if (k1, d1) == (0, 0) or (k2, d2) == (0, 0):
                continue
            # enumera o lado de menor k·d; o outro α é o complemento
            lado_menor = min(k1 * d1, k2 * d2)
            limite = 2 * lado_menor
            if norm_bound is not None and limite > norm_bound:
                raise ErroTruncamento(
                    f"decomposição ({k1},{d1}) + ({k2},{d2}) exige vetores de norma {limite}",
                    limite=f"norm_bound={norm_bound}",
                )
            for gamma in vetores_e8(limite):
                if k1 * d1 <= k2 * d2:
                    alpha1 = gamma
                    alpha2 = tuple(a - b for a, b in zip(beta.alpha, gamma))
                else:
                    alpha2 = gamma
                    alpha1 = tuple(a - b for a, b in zip(beta.alpha, gamma))
                if norma_e8(alpha1) > 2 * k1 * d1 or norma_e8(alpha2) > 2 * k2 * d2:
                    continue
                b1 = CurveClass(k1, d1, alpha1)
                b2 = CurveClass(k2, d2, alpha2)
                direita += b1.pairing(b2) * _N1(b1, tabela) * _N1(b2, tabela)
    return esquerda, 8 * direita


def genus1_recursion_check(beta: CurveClass, norm_bound: Optional[int] = None,
                           tabela: Optional[OmegaTable] = None) -> bool:
    esquerda, direita = recursao_lados(beta, norm_bound, tabela)
    if esquerda != direita:
        logger.error(f"❌ Recursão de gênero 1 em β = {beta}: {esquerda} ≠ {direita}")
    return esquerda == direita


def genus1_recursion_sweep(k_max: int, d_max: int, max_norma_alpha: int = 4,
                           tabela: Optional[OmegaTable] = None) -> Tuple[bool, int]:
    """Recursão para k ≤ k_max, d ≤ d_max e α em representantes de W(E8) com α·α ≤ max_norma_alpha."""
    reps = representantes_orbitas_e8(max_norma_alpha)
    tabela = tabela if tabela is not None else tabela_cobrindo(1, k_max * d_max)
    conferidos = 0
    for k in range(k_max + 1):
        for d in range(d_max + 1):
            if (k, d) == (0, 0):
                continue
            for alpha in reps.values():
                if not genus1_recursion_check(CurveClass(k, d, alpha), tabela=tabela):
                    return False, conferidos
                conferidos += 1
    return True, conferidos


# -- função de partição em todos os gêneros ---------------------------------

PolinomioZ = Dict[Monomio3, ZSeries]


def _z_nula(c: ZSeries) -> bool:
    return not c.coeffs


def _somar_z(destino: PolinomioZ, parcela: PolinomioZ, escalar=1):
    for m, c in parcela.items():
        v = destino[m] + c * escalar if m in destino else c * escalar
        if _z_nula(v):
            destino.pop(m, None)
        else:
            destino[m] = v


def _multiplicar_z(a: PolinomioZ, b: PolinomioZ, K: int) -> PolinomioZ:
    por_grau: Dict[int, List[Tuple[Monomio3, ZSeries]]] = {}
    for m, c in a.items():
        por_grau.setdefault(_grau(m), []).append((m, c))
    res: PolinomioZ = {}
    for mb, cb in b.items():
        for g in range(K - _grau(mb) + 1):
            for ma, ca in por_grau.get(g, ()):
                _somar_z(res, {(ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]): ca * cb})
    return res


def _exp_z(S: PolinomioZ, K: int, z_trunc: int) -> PolinomioZ:
    um = ZSeries({0: 1}, z_trunc)
    total: PolinomioZ = {UM: um}
    termo: PolinomioZ = {UM: um}
    for n in range(1, K + 1):
        termo = {m: c * Fraction(1, n) for m, c in _multiplicar_z(termo, S, K).items()}
        _somar_z(total, termo)
    return total


def _log_z(P: PolinomioZ, K: int, z_trunc: int) -> PolinomioZ:
    if UM not in P or P[UM] != ZSeries({0: 1}, z_trunc):
        raise ErroDominio("log exige termo constante 1")
    X = {m: c for m, c in P.items() if m != UM}
    total: PolinomioZ = {}
    potencia: PolinomioZ = {UM: ZSeries({0: 1}, z_trunc)}
    for n in range(1, K + 1):
        potencia = _multiplicar_z(potencia, X, K)
        _somar_z(total, potencia, Fraction((-1) ** (n + 1), n))
    return total


def _truncar_z(P: PolinomioZ, z_trunc: int) -> PolinomioZ:
    """Corta cada coeficiente em z^z_trunc e descarta os que zeram."""
    res = {m: ZSeries({k: v for k, v in c.coeffs.items() if k < z_trunc}, z_trunc) for m, c in P.items()}
    return {m: c for m, c in res.items() if not _z_nula(c)}


def _binomial(a: int, i: int) -> int:
    """C(a, i) generalizado, a inteiro qualquer."""
    return prod(a - t for t in range(i)) // factorial(i)


def _razao_binomial(A: int, maximo: int) -> List[int]:
    """Coeficientes de ((1+u)/(1−u))^A até u^maximo, A de qualquer sinal."""
    return [
        sum(_binomial(A, i) * _binomial(-A, e - i) * (-1) ** (e - i) for i in range(e + 1))
        for e in range(maximo + 1)
    ]


def partition_function_series(K: int, G: int, pesos: Sequence[int] = PESOS_PADRAO,
                              tabela: Optional[OmegaTable] = None):
    """(Σ_g F_g (−1)^{g−1} z^{2g−2} empurrada, expoentes ω(r, β²/2) por monômio e r).

    Os coeficientes são ZSeries com z^{2g−2} para 1 ≤ g ≤ G.
    """
    if K < 1 or G < 1:
        raise ErroDominio(f"K e G devem ser ≥ 1: K={K}, G={G}")
    z_trunc = 2 * G - 1
    max_n = K * K // 4
    tabela = tabela if tabela is not None else tabela_cobrindo(G, max_n)
    cache: Dict[Tuple[int, int], ZSeries] = {}
    S: PolinomioZ = {}
    A: Dict[Monomio3, Dict[int, int]] = {}
    for k, d in _classes_fatia(K):
        for norma, j, div_alpha in _dados_fatia(k, d, pesos):
            quadrado = 2 * k * d - norma
            chave = (quadrado, gcd(k, d, div_alpha))
            if chave not in cache:
                cache[chave] = ZSeries(
                    {2 * g - 2: (-1) ** (g - 1) * _N_genero(g, *chave, tabela) for g in range(1, G + 1)}, z_trunc
                )
            m = (k, d, j)
            _somar_z(S, {m: cache[chave]})
            for r, c in tabela.coef_q(Fraction(quadrado, 2)).items():
                expoentes = A.setdefault(m, {})
                expoentes[r] = expoentes.get(r, 0) + int(c)
    return S, {m: {r: e for r, e in ex.items() if e} for m, ex in A.items()}


def produto_particao(A: Dict[Monomio3, Dict[int, int]], K: int, z_trunc: int) -> PolinomioZ:
    """Π_β Π_r ((1 + e^{rz}q^β)/(1 − e^{rz}q^β))^{A_r(β)} truncado em k + d ≤ K."""
    potencias_p: Dict[int, ZSeries] = {}

    def e_rz(s: int) -> ZSeries:
        if s not in potencias_p:
            potencias_p[s] = plaurent_to_zseries(PLaurent.monomio(s), z_trunc)
        return potencias_p[s]

    zero = ZSeries({}, z_trunc)
    P: PolinomioZ = {UM: ZSeries({0: 1}, z_trunc)}
    for m in sorted(A, key=_grau, reverse=True):
        maximo = K // _grau(m)
        # fator em u = q^β como série univariada com coeficientes em z
        fator = [ZSeries({0: 1}, z_trunc)] + [zero] * maximo
        for r, expoente in sorted(A[m].items()):
            razao = _razao_binomial(expoente, maximo)
            novo = [zero] * (maximo + 1)
            for e1, c1 in enumerate(fator):
                for e2 in range(maximo - e1 + 1):
                    if razao[e2]:
                        novo[e1 + e2] = novo[e1 + e2] + c1 * e_rz(e2 * r) * razao[e2]
            fator = novo
        incremento = {(m[0] * e, m[1] * e, m[2] * e): c for e, c in enumerate(fator) if e and not _z_nula(c)}
        _somar_z(P, _multiplicar_z(P, incremento, K))
    return P


def partition_function_check(K: int = 3, G: int = 3, pesos: Sequence[int] = PESOS_PADRAO,
                             tabela: Optional[OmegaTable] = None) -> bool:
    """exp(Σ_g F_g (−1)^{g−1} z^{2g−2}) = Π_β Π_r ((1+e^{rz}q^β)/(1−e^{rz}q^β))^{ω(r,β²/2)}
    na fatia k + d ≤ K, até z^{2G−2}; também confere o log do produto."""
    z_trunc = 2 * G - 1
    S, A = partition_function_series(K, G, pesos, tabela)
    P = produto_particao(A, K, z_trunc)
    P = _truncar_z(P, z_trunc)
    exp_ok = _truncar_z(_exp_z(S, K, z_trunc), z_trunc) == P
    log_ok = _truncar_z(_log_z(P, K, z_trunc), z_trunc) == _truncar_z(S, z_trunc)
    if not (exp_ok and log_ok):
        logger.error(f"❌ Função de partição falhou (exp: {exp_ok}, log: {log_ok}) com K = {K}, G = {G}")
    logger.debug(f"🧮 Função de partição em k + d ≤ {K}, g ≤ {G}: {len(S)} monômios, {len(P)} no produto")
    return exp_ok and log_ok
