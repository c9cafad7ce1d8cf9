from fractions import Fraction

import numpy as np
import pytest

from formas_modulares.anel import Anel, RingElement, evaluate, formal_dG2, monomios, peso_monomio
from formas_modulares.eisenstein import F2, bernoulli, eisenstein_G
from formas_modulares.eta import cusp_quotient, delta, eta, eta_quotient
from formas_modulares.reconhecedor import recognize, vanishing_lemma_check
from series.qseries import QSeries
from utils.excecoes import ErroDominio, ErroTruncamento


@pytest.mark.parametrize("k, esperado", [(2, Fraction(1, 6)), (4, Fraction(-1, 30)), (6, Fraction(1, 42))])
def test_bernoulli(k, esperado):
    assert bernoulli(k) == esperado


def test_eisenstein_peso_quatro():
    assert eisenstein_G(4, 4) == QSeries({0: Fraction(1, 240), 1: 1, 2: 9, 3: 28}, 4)


def test_eisenstein_peso_impar_e_nulo():
    assert not eisenstein_G(3, 6)
    with pytest.raises(ErroDominio):
        eisenstein_G(0, 6)


def test_F2_por_divisores_impares():
    assert F2(6) == QSeries({0: Fraction(1, 24), 1: 1, 2: 1, 3: 4, 4: 1, 5: 6}, 6)


def test_eta_tem_expoentes_em_vinte_e_quatro_avos():
    serie = eta(2)
    assert serie.exp_denom == 24
    assert serie.coef(Fraction(1, 24)) == 1
    assert serie.coef(Fraction(25, 24)) == -1


def test_delta():
    assert delta(5) == QSeries({1: 1, 2: -24, 3: 252, 4: -1472}, 5)


def test_quociente_eta_com_expoente_negativo():
    serie = eta_quotient({2: -12}, 3)
    assert serie.coef(-1) == 1
    assert serie.coef(1) == 12


def test_monomios_por_anel():
    assert len(monomios(Anel.SL2_MOD, 12)) == 2
    assert set(monomios(Anel.G02_MOD, 4)) == {(0, 2, 0, 0), (0, 0, 1, 0)}
    assert peso_monomio((1, 1, 0, 0)) == 4


def test_elemento_fora_do_anel():
    with pytest.raises(ErroDominio):
        RingElement.de_dict(Anel.SL2_MOD, 2, {(1, 0, 0, 0): 1})


def test_G2_mais_F2_avaliado():
    elemento = RingElement.gerador("G2") + RingElement.gerador("F2")
    G2 = eisenstein_G(2, 12)
    assert evaluate(elemento, 12) == 2 * G2 - 2 * G2.escalar_q(2).truncar(12)


def test_derivada_formal_em_G2():
    G2 = RingElement.gerador("G2")
    quadrado = G2 * G2 + RingElement.gerador("F2") * G2
    assert formal_dG2(quadrado) == 2 * G2 + RingElement.gerador("F2")


def test_derivada_formal_so_em_anel_quasimodular():
    with pytest.raises(ErroDominio):
        formal_dG2(RingElement.gerador("G4", Anel.G02_MOD))


def test_reconhece_delta_em_SL2():
    resultado = recognize(delta(30), 12, Anel.SL2_MOD)
    assert resultado
    assert evaluate(resultado.elemento, 30) == delta(30)


def test_reconhece_2G2_menos_2G2_de_q2():
    G2 = eisenstein_G(2, 20)
    resultado = recognize(2 * G2 - 2 * G2.escalar_q(2).truncar(20), 2, Anel.G02_QMOD)
    assert resultado.elemento.termos_dict == {(1, 0, 0, 0): 1, (0, 1, 0, 0): 1}


def test_nao_reconhece_fora_do_espaco():
    resultado = recognize(eisenstein_G(2, 20), 2, Anel.G02_MOD)
    assert not resultado
    assert resultado.residuo


def test_reconhecimento_subdeterminado():
    with pytest.raises(ErroTruncamento, match="underdetermined"):
        recognize(delta(4), 12, Anel.SL2_MOD)


@pytest.mark.parametrize("m", [3, 4, 5])
@pytest.mark.parametrize("peso", [2, 4, 6])
def test_lema_de_anulamento(m, peso):
    assert vanishing_lemma_check(m, peso, 60)


def test_lema_de_anulamento_falha_em_m_2():
    # G₂(q²) = (G₂ − F₂)/2 só tem expoentes pares
    assert not vanishing_lemma_check(2, 2, 30)


def test_lema_de_anulamento_inconclusivo():
    with pytest.raises(ErroTruncamento, match="inconclusive"):
        vanishing_lemma_check(3, 2, 6)


def test_lema_de_anulamento_falha_em_m_2_peso_8():
    assert not vanishing_lemma_check(2, 8, 30)


def test_quociente_de_cuspide_vezes_o_inverso():
    produto = cusp_quotient(20) * eta_quotient({1: 8, 2: -16}, 20)
    assert produto == QSeries.constante(1, 19)


def test_reconhece_peso_catorze():
    G2, F2, G4 = (RingElement.gerador(nome) for nome in ("G2", "F2", "G4"))
    elemento = G2 * G4 * G4 * G4 + F2 * F2 * F2 * G4 * G4 * 3
    resultado = recognize(evaluate(elemento, 40), 14, Anel.G02_QMOD)
    assert resultado
    assert resultado.elemento.termos_dict == elemento.termos_dict


def test_reconhecimento_inverte_avaliacao_em_elementos_aleatorios():
    rng = np.random.default_rng(16)
    for _ in range(50):
        peso = 2 * int(rng.integers(1, 9))
        base = monomios(Anel.G02_QMOD, peso)
        coeficientes = rng.integers(-6, 7, size=len(base))
        elemento = RingElement.de_dict(Anel.G02_QMOD, peso,
                                       {m: int(c) for m, c in zip(base, coeficientes)})
        resultado = recognize(evaluate(elemento, len(base) + 10), peso, Anel.G02_QMOD)
        assert resultado
        assert resultado.elemento.termos_dict == elemento.termos_dict
