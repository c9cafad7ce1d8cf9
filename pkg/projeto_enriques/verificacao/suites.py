#!/usr/bin/env python3
"""
Suítes de verificação: cada uma confere uma rede de identidades exatas
entre construções independentes e devolve uma lista de ResultadoVerificacao.

Todas recebem o dicionário de limites da suíte (ver configuracao.py).
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Dict, List, Mapping

import numpy as np

from formas_modulares.anel import Anel
from formas_modulares.eta import eta_quotient
from formas_modulares.reconhecedor import recognize, vanishing_lemma_check
from hecke.operadores import hecke_V
from invariantes.donaldson_thomas import (DT, VW, DT_even_odd_split, DT_primitivo,
                                          DT_primitivo_fechado, VW_formula, dt, solve_dt_primitive)
from invariantes.genero_um import (genus1_product_check, genus1_recursion_check, genus1_recursion_sweep,
                                    partition_function_check)
from invariantes.gromov_witten import (F10_por_eisenstein, anomalia_F10, formula_fibras, km_N,
                                       n_small, reconhecer_F10, series_F10_tau0_s)
from invariantes.omega import a_coeffs, e_hilb, tabela_cobrindo
from invariantes.pares_estaveis import SeriePT, f_KM, f_PT, gwpt_bridge
from invariantes.series_km import F_KM_series, checar_dependencia, dG2_transport_check
from reticulado.classes import CurveClass, MukaiVector, Tipo, mukai_invariants, orbit_representative
from reticulado.reflexoes import invariantes_em_M, palavra_de_reflexoes, random_root, to_M
from series.plaurent import PLaurent
from series.qseries import QSeries
from theta_jacobi.e8 import representantes_orbitas_e8, vetores_e8
from theta_jacobi.theta import (inv_theta_sq, km_kernel, km_kernel_soma_fechada,
                                theta_ratio_eisenstein_check, theta_taylor_check)
from utils.excecoes import ErroConsistencia
from utils.logging_config import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class ResultadoVerificacao:
    nome: str
    aprovado: bool
    detalhe: str = ""
    verificados: int = 0

    @property
    def status(self) -> str:
        return "PASS" if self.aprovado else "FAIL"


def _resultado(nome: str, aprovado: bool, detalhe: str = "", verificados: int = 1) -> ResultadoVerificacao:
    if not aprovado:
        logger.error(f"❌ {nome}: {detalhe}")
    return ResultadoVerificacao(nome, bool(aprovado), detalhe, verificados)


def _consistencia(nome: str, funcao: Callable[[], Any], detalhe: str = "") -> ResultadoVerificacao:
    """Roda uma construção que levanta ErroConsistencia quando dois caminhos divergem."""
    try:
        funcao()
    except ErroConsistencia as e:
        return _resultado(nome, False, str(e))
    return _resultado(nome, True, detalhe)


# -- 1. identidade tripla do núcleo -----------------------------------------


def suite_theta_identity(limites: Mapping[str, Any]) -> List[ResultadoVerificacao]:
    qmax = limites["qmax"]
    z_ordem = limites["z_ordem"]
    resultados = [
        _consistencia("km_kernel: produto = quociente de thetas = soma fechada",
                      lambda: km_kernel(qmax, verificar=True), f"até q^{qmax}")
    ]
    kernel = km_kernel(qmax, verificar=False)
    q1 = kernel.coef(1)
    esperado_q1 = PLaurent({1: 2, 0: 12, -1: 2})
    resultados.append(_resultado("[km_kernel]_{q¹} = 2p + 12 + 2p⁻¹", q1 == esperado_q1, f"obtido {q1}"))

    soma = km_kernel_soma_fechada(qmax)
    inicio = [(Fraction(1, 2), PLaurent.constante(1)), (Fraction(3, 2), PLaurent.par_simetrico(1, 2)),
              (Fraction(5, 2), PLaurent.par_simetrico(2, 3))]
    ok = all(soma.coef(e) == c for e, c in inicio)
    resultados.append(_resultado("η¹²·núcleo começa em q^{1/2} + 2(p+p⁻¹)q^{3/2} + 3(p²+p⁻²)q^{5/2}", ok))

    inv = inv_theta_sq(qmax)
    ok = inv.regular.coef(1) == PLaurent.constante(2) and inv.regular.coef(2).coef(1) == 3
    resultados.append(_resultado("1/Θ²: q¹ ↦ 2 e q² ∋ 3(p+p⁻¹)", ok, f"q¹: {inv.regular.coef(1)}"))

    resultados.append(_resultado("Θ = z·exp(−2Σ G_k z^k/k!)", theta_taylor_check(z_ordem + 1, qmax),
                                 f"z^{z_ordem}, q^{qmax}"))
    resultados.append(_resultado("Θ(z,2τ)²/Θ(z,τ)² = exp(4Σ(G_k(τ) − G_k(2τ))z^k/k!)",
                                 theta_ratio_eisenstein_check(z_ordem, qmax), f"z^{z_ordem - 1}, q^{qmax}"))
    return resultados


# -- 2. Borcherds em gênero 1 -----------------------------------------------


def suite_genus1_borcherds(limites: Mapping[str, Any]) -> List[ResultadoVerificacao]:
    nmax = limites["nmax"]
    K = limites["kmax"]
    tabela = tabela_cobrindo(1, nmax)
    a = a_coeffs(nmax)
    divergentes = [n for n in range(nmax + 1) if tabela.omega(1, n) != a.coef(n)]
    resultados = [
        _resultado("ω₁(n) = a(n)", not divergentes, f"n ≤ {nmax}" if not divergentes else f"n = {divergentes[:5]}",
                   nmax + 1),
        _resultado("a(0..4) = 1, 16, 144, 960, 5264", [a.coef(n) for n in range(5)] == [1, 16, 144, 960, 5264]),
        _resultado("exp/log da forma produto na fatia", genus1_product_check(K),
                   f"k + d ≤ {K}, α·α ≤ {K * K // 2}"),
        _resultado("função de partição em todos os gêneros = produto sobre (β, r)",
                   partition_function_check(limites["kparticao"], limites["gparticao"]),
                   f"k + d ≤ {limites['kparticao']}, g ≤ {limites['gparticao']}"),
    ]
    return resultados


# -- 3. ponte KM/PT ----------------------------------------------------------


def classes_caixa(max_quadrado: int, kmax: int, norm: int) -> List[CurveClass]:
    """Classes k·s + d·f + α (α representante de órbita) com 0 ≤ β² ≤ max_quadrado, mais fibras."""
    classes = [CurveClass.fibra(d) for d in range(1, 5)]
    reps = representantes_orbitas_e8(norm)
    for k in range(1, kmax + 1):
        for norma_alpha, alpha in sorted(reps.items()):
            d = 0
            while 2 * k * d - norma_alpha <= max_quadrado:
                beta = CurveClass(k, d, alpha)
                if beta.quadrado >= -2:
                    classes.append(beta)
                d += 1
    return classes


def suite_km_pt_bridge(limites: Mapping[str, Any]) -> List[ResultadoVerificacao]:
    max_quadrado = limites["max_quadrado"]
    classes = classes_caixa(max_quadrado, limites["kmax"], limites["norm"])
    tabela = tabela_cobrindo(1, max_quadrado // 2)
    divergentes = []
    com_polo = []
    for beta in classes:
        pt = f_PT(beta)
        if not pt.e_regular():
            com_polo.append(beta)
        if pt != SeriePT.de_plaurent(f_KM(beta, tabela) * 8):
            divergentes.append(beta)
    resultados = [
        _resultado("f^PT = 8·f^KM (dt em forma fechada)", not divergentes,
                   f"β² ≤ {max_quadrado}" if not divergentes else f"β = {[str(b) for b in divergentes[:3]]}",
                   len(classes)),
        _resultado("tokens de polo cancelam", not com_polo, f"{len(com_polo)} classes com polo", len(classes)),
    ]
    pares = [MukaiVector(r, CurveClass(1, d), n) for r in range(0, 4) for d in range(0, 5) for n in range(-3, 4)]
    pares = [v for v in pares if not v.e_nulo() and v.quadrado % 2 == 0]
    resultados.append(_resultado("dt(v) = 0 para v·v par", all(dt(v) == 0 for v in pares), "", len(pares)))
    return resultados


# -- 4. expansão GW/PT e fórmula das fibras ----------------------------------


def suite_gw_pt_expansion(limites: Mapping[str, Any]) -> List[ResultadoVerificacao]:
    max_quadrado = limites["max_quadrado"]
    gmax = limites["gmax"]
    dmax = limites["dmax"]
    tabela = tabela_cobrindo(gmax, max(max_quadrado // 2, dmax))
    z_trunc = 2 * gmax - 1
    falhas = []
    conferidos = 0
    for h in range(max_quadrado // 2 + 1):
        beta = CurveClass(1, h)
        n_km = gwpt_bridge(f_KM(beta, tabela), z_trunc)
        n_pt = gwpt_bridge(f_PT(beta), z_trunc)
        for g in range(1, gmax + 1):
            conferidos += 1
            if n_km.get(g, 0) != tabela.omega(g, h) or n_pt.get(g, 0) != n_small(g, beta, tabela):
                falhas.append((g, 2 * h))
    resultados = [
        _resultado("p = e^z: f^KM ↦ ω_g(β²/2) e f^PT ↦ 8ω_g(β²/2)", not falhas,
                   f"β² ≤ {max_quadrado}, g ≤ {gmax}" if not falhas else f"(g, β²) = {falhas[:5]}", conferidos)
    ]
    fibras_g1 = [d for d in range(1, dmax + 1) if km_N(1, CurveClass.fibra(d), tabela) != formula_fibras(d)]
    resultados.append(_resultado("N_{1,df} = 2σ₋₁(d) − σ₋₁(d/2)", not fibras_g1,
                                 f"d ≤ {dmax}" if not fibras_g1 else f"d = {fibras_g1[:5]}", dmax))
    fibras_altas = [(g, d) for g in range(2, 5) for d in range(1, dmax + 1)
                    if km_N(g, CurveClass.fibra(d), tabela) != 0]
    resultados.append(_resultado("N_{g,df} = 0 para g ∈ {2,3,4}", not fibras_altas,
                                 f"d ≤ {dmax}" if not fibras_altas else f"(g, d) = {fibras_altas[:5]}", 3 * dmax))
    return resultados


# -- 6. recursão de gênero 1 -------------------------------------------------


def suite_recursion(limites: Mapping[str, Any]) -> List[ResultadoVerificacao]:
    kmax, dmax, norm = limites["kmax"], limites["dmax"], limites["norm"]
    tabela = tabela_cobrindo(1, kmax * dmax)
    exemplos = [CurveClass.fibra(2), CurveClass(1, 1), CurveClass(2, 2)]
    resultados = [
        _resultado("recursão em 2f, s+f e 2s+2f",
                   all(genus1_recursion_check(b, tabela=tabela) for b in exemplos), "", len(exemplos))
    ]
    ok, conferidos = genus1_recursion_sweep(kmax, dmax, norm, tabela)
    resultados.append(_resultado("(β,β)N₁ = 8Σ(β₁,β₂)N₁N₁", ok, f"k ≤ {kmax}, d ≤ {dmax}, α·α ≤ {norm}", conferidos))
    return resultados


# -- 7. modularidade de Vafa-Witten -----------------------------------------


def serie_vw(r: int, qmax: int) -> QSeries:
    """Σ_n VW(r,0,n) q^{−2n−r}; só expoentes e ≥ −1 contribuem."""
    coeffs = {}
    for e in range(-r, qmax):
        if (e + r) % 2:
            continue
        n = (-e - r) // 2
        valor = VW(MukaiVector(r, CurveClass(0, 0), n))
        if valor:
            coeffs[e] = valor
    return QSeries(coeffs, qmax)


def suite_vw_modularity(limites: Mapping[str, Any]) -> List[ResultadoVerificacao]:
    rank, qmax, nmax = limites["rank"], limites["qmax"], limites["nmax"]
    resultados = []
    for r in range(1, rank + 1):
        base = eta_quotient({2: -12}, r * qmax)
        esperado = hecke_V(base, r, -1, qmax) * 2
        obtido = serie_vw(r, qmax)
        resultados.append(_resultado(f"Z^VW_{{{r},0}} = 2η^{{−12}}(2τ)|₋₁V_{r}", obtido == esperado,
                                     f"q^{qmax}" if obtido == esperado else str(obtido.diferencas(esperado)), qmax))
    hilb = [n for n in range(1, nmax + 1) if VW(MukaiVector(1, CurveClass(0, 0), -n)) != 2 * e_hilb(n)]
    resultados.append(_resultado("VW(1,0,−n) = 2e(Hilbⁿ)", not hilb and e_hilb(1) == 12,
                                 f"n ≤ {nmax}" if not hilb else f"n = {hilb[:5]}", nmax))
    vetores = [MukaiVector(r, CurveClass(k, d), n) for r in range(0, 3) for k in range(0, 3)
               for d in range(0, 3) for n in range(-2, 3)]
    vetores = [v for v in vetores if not v.e_nulo()]
    resultados.append(_resultado("VW = DT/4 = fórmula de Göttsche",
                                 all(VW(v) == VW_formula(v) for v in vetores), "", len(vetores)))
    v0 = MukaiVector(1, CurveClass(0, 0), -1)
    resultados.append(_resultado("DT(1,0,−1) = 96, VW(1,0,−1) = 24, VW(3,0,0) = 2/9",
                                 DT(v0) == 96 and VW(v0) == 24
                                 and VW(MukaiVector(3, CurveClass(0, 0), 0)) == Fraction(2, 9)))
    return resultados


# -- 8. dependência de DT nos invariantes ------------------------------------


def suite_dt_dependence(limites: Mapping[str, Any]) -> List[ResultadoVerificacao]:
    nmax, kmax, dmax = limites["nmax"], limites["kmax"], limites["dmax"]
    por_invariante: Dict[Any, Fraction] = {}
    quebras = []
    conferidos = 0
    for r in range(-nmax, nmax + 1):
        for n in range(-nmax, nmax + 1):
            for k in range(kmax + 1):
                for d in range(dmax + 1):
                    v = MukaiVector(r, CurveClass(k, d), n)
                    if v.e_nulo():
                        continue
                    t = mukai_invariants(v)
                    valor = DT(v)
                    conferidos += 1
                    if t not in por_invariante:
                        por_invariante[t] = valor
                        if DT(orbit_representative(t)) != valor:
                            quebras.append(str(v))
                    elif por_invariante[t] != valor:
                        quebras.append(str(v))
    resultados = [
        _resultado("DT constante nas fibras de (v², m, tipo)", not quebras,
                   f"{len(por_invariante)} órbitas" if not quebras else f"v = {quebras[:3]}", conferidos)
    ]
    pares = [d for d in range(2, 2 * dmax + 1, 2) if sum(DT_even_odd_split(d)) != 0]
    resultados.append(_resultado("DT^{odd}_{4d,2} = −DT^{even}_{4d,2}", not pares, "", dmax))
    tipos = [(q, Tipo.IMPAR if q % 2 else Tipo.PAR) for q in range(-1, 2 * nmax + 1)]
    primitivos = [(q, t) for q, t in tipos if DT_primitivo(q, t) != DT_primitivo_fechado(q, t)]
    resultados.append(_resultado("DT primitivo = 8e(Hilb^{(d+1)/2}) e DT^{even}_{d,1} = 0", not primitivos,
                                 "" if not primitivos else f"{primitivos[:3]}", 2 * nmax))
    sudoku = solve_dt_primitive(limites["max_quadrado"])
    resultados.append(_resultado("dt resolvido a partir de f^KM = forma fechada", sudoku.coincide_forma_fechada,
                                 f"{sudoku.equacoes_verificadas} equações extras"
                                 if sudoku.coincide_forma_fechada else f"v² = {sudoku.divergencias[:5]}",
                                 len(sudoku.solucao)))
    return resultados


# -- 8'. reflexões -----------------------------------------------------------


def suite_reflections(limites: Mapping[str, Any]) -> List[ResultadoVerificacao]:
    rng = np.random.default_rng(limites["seed"])
    nmax = limites["nmax"]
    palavras = limites["palavras"]
    quebras = []
    for _ in range(palavras):
        while True:
            r, n, k, d = (int(x) for x in rng.integers(-nmax, nmax + 1, size=4))
            alpha = tuple(int(x) for x in rng.integers(-1, 2, size=8))
            v = MukaiVector(r, CurveClass(k, d, alpha), n)
            if not v.e_nulo():
                break
        w = to_M(v)
        comprimento = int(rng.integers(1, limites["comprimento_max"] + 1))
        raizes = [random_root(rng) for _ in range(comprimento)]
        imagem = palavra_de_reflexoes(w, raizes)
        if invariantes_em_M(imagem) != invariantes_em_M(w) or invariantes_em_M(w) != mukai_invariants(v):
            quebras.append(str(v))
    return [
        _resultado("invariantes constantes sob palavras de reflexões", not quebras,
                   f"seed {limites['seed']}" if not quebras else f"v = {quebras[:3]}", palavras)
    ]


# -- 9. dependência dos coeficientes de F^KM --------------------------------


def amostra_hecke(norma_amostra: int) -> List[tuple]:
    """Vetores de norma ≤ norma_amostra mais 2α para as raízes α (norma 8)."""
    base = list(vetores_e8(norma_amostra))
    dobros = [tuple(2 * x for x in v) for v in vetores_e8(2) if any(v)]
    return base + [v for v in dobros if v not in set(base)]


def suite_hecke_dependence(limites: Mapping[str, Any]) -> List[ResultadoVerificacao]:
    ell_max, gmax, dmax, norm = limites["ell"], limites["gmax"], limites["dmax"], limites["norm"]
    amostra = amostra_hecke(limites["norma_amostra"])
    trunc = dmax + 1
    resultados = []
    for g in range(1, gmax + 1):
        tabela = tabela_cobrindo(g, ell_max * trunc)
        for ell in range(1, ell_max + 1):
            nome = f"F^KM_{{{g},{ell}}}"
            try:
                serie = F_KM_series(g, ell, trunc, norm, vetores=amostra, tabela=tabela, verificar=True)
            except ErroConsistencia as e:
                resultados.append(_resultado(f"{nome}: Hecke = direta", False, str(e)))
                continue
            ok, conferidos = checar_dependencia(serie, ell, amostra)
            resultados.append(_resultado(f"{nome}: Hecke = direta e dependência em (β², gcd)", ok,
                                         f"d ≤ {dmax}, α·α ≤ {norm}", conferidos))
    return resultados


# -- 10. plumbing quasimodular -----------------------------------------------


def suite_vanishing_lemma(limites: Mapping[str, Any]) -> List[ResultadoVerificacao]:
    resultados = []
    for m in limites["modulos"]:
        for k in limites["pesos"]:
            resultados.append(_resultado(f"lema de anulamento m={m}, k={k}",
                                         vanishing_lemma_check(m, k, limites["qmax"]), f"q^{limites['qmax']}"))
    return resultados


def suite_eta_ring(limites: Mapping[str, Any]) -> List[ResultadoVerificacao]:
    qmax = limites["qmax"]
    resultados = [
        _resultado("(η(τ)η(2τ))⁸ ∈ Mod₈(Γ₀(2))", bool(recognize(eta_quotient({1: 8, 2: 8}, qmax), 8, Anel.G02_MOD))),
        _resultado("Δ²/Δ(2τ) ∈ Mod₁₂(Γ₀(2))", bool(recognize(eta_quotient({1: 48, 2: -24}, qmax), 12, Anel.G02_MOD))),
    ]
    F10 = series_F10_tau0_s(qmax)
    resultados.append(_resultado("Σ d·N_{1,df} qᵈ = 2G₂(q) − 2G₂(q²)", F10 == F10_por_eisenstein(qmax)))
    reconhecido = reconhecer_F10(qmax)
    esperado = {(1, 0, 0, 0): Fraction(1), (0, 1, 0, 0): Fraction(1)}
    ok = bool(reconhecido) and reconhecido.elemento.termos_dict == esperado
    resultados.append(_resultado("2G₂(q) − 2G₂(q²) = G₂ + F₂", ok,
                                 str(reconhecido.elemento) if reconhecido else "não reconhecido"))
    if reconhecido:
        derivada, esperado_anomalia = anomalia_F10(reconhecido.elemento)
        resultados.append(_resultado("d/dG₂ = 2∫s·f·1 − 2·(grau zero) = 1",
                                     derivada == esperado_anomalia == 1, f"{derivada} vs {esperado_anomalia}"))
    for g in limites["generos"]:
        resultados.append(_resultado(f"d/dG₂(Δ·Ω_{g}) = −Δ·Ω_{g - 1}", dG2_transport_check(g, qmax), f"q^{qmax}"))
    return resultados


SUITES: Dict[str, Callable[[Mapping[str, Any]], List[ResultadoVerificacao]]] = {
    "theta-identity": suite_theta_identity,
    "genus1-borcherds": suite_genus1_borcherds,
    "km-pt-bridge": suite_km_pt_bridge,
    "gw-pt-expansion": suite_gw_pt_expansion,
    "recursion": suite_recursion,
    "vw-modularity": suite_vw_modularity,
    "dt-dependence": suite_dt_dependence,
    "hecke-dependence": suite_hecke_dependence,
    "vanishing-lemma": suite_vanishing_lemma,
    "eta-ring": suite_eta_ring,
    "reflections": suite_reflections,
}
