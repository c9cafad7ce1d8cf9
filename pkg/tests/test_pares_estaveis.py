from fractions import Fraction

import pytest

from invariantes.pares_estaveis import SeriePT, div2_lemma, f_KM, f_PT, gwpt_bridge, toda_log_PT
from reticulado.classes import CurveClass
from series.plaurent import PLaurent
from utils.excecoes import ErroDominio

RAIZ = (1, 0, 0, 0, 0, 0, 0, 0)


def test_f_KM_em_quadrado_zero_e_dois(tabela_omega):
    assert f_KM(CurveClass(1, 0), tabela_omega) == PLaurent({0: 1})
    assert f_KM(CurveClass(1, 1), tabela_omega) == PLaurent({-1: 2, 0: 12, 1: 2})


def test_f_KM_em_quadrado_negativo_e_zero():
    assert f_KM(CurveClass(1, 0, RAIZ)) == PLaurent.zero()


@pytest.mark.parametrize("h", range(6))
def test_f_KM_confere_com_soma_em_eta(h, tabela_omega):
    # verificar=True levanta ErroConsistencia se o núcleo e a soma dupla divergirem
    assert f_KM(CurveClass(1, h), tabela_omega, verificar=True).e_simetrico()


@pytest.mark.parametrize("beta", [CurveClass(1, 0), CurveClass.fibra(1), CurveClass.fibra(2)])
def test_f_PT_em_quadrado_zero(beta):
    pt = f_PT(beta)
    assert pt.e_regular()
    assert pt.regular == PLaurent({0: 8})


@pytest.mark.parametrize("beta", [CurveClass(1, 1), CurveClass(1, 3), CurveClass(2, 2), CurveClass(1, 2, RAIZ)])
def test_f_PT_e_oito_vezes_f_KM(beta, tabela_omega):
    assert f_PT(beta) == SeriePT.de_plaurent(f_KM(beta, tabela_omega) * 8)


def test_f_PT_exige_classe_nao_nula():
    with pytest.raises(ErroDominio):
        f_PT(CurveClass(0, 0))


def test_f_PT_com_dt_constante_tem_polo():
    pt = f_PT(CurveClass(1, 0), dt_source=lambda v: Fraction(1))
    assert not pt.e_regular()
    with pytest.raises(ErroDominio):
        gwpt_bridge(pt, 3)


def test_ponte_gw_pt(tabela_omega):
    assert gwpt_bridge(f_KM(CurveClass(1, 1), tabela_omega), 3) == {1: 16, 2: -2}
    assert gwpt_bridge(f_PT(CurveClass(1, 0)), 3) == {1: 8, 2: 0}


def test_ponte_rejeita_entrada_assimetrica():
    with pytest.raises(ErroDominio):
        gwpt_bridge(PLaurent({1: 1}), 3)


def test_log_PT_na_fatia():
    log_pt = toda_log_PT(0, 3)
    assert log_pt[(0, 2)].regular.coef(0) == 8
    # 3f recebe também f^PT_f(p³)/3
    assert log_pt[(0, 3)].regular.coef(0) == Fraction(32, 3)
    assert all(serie.e_regular() for serie in log_pt.values())


def test_lema_de_divisibilidade_dois():
    sem_polo = div2_lemma(-1, 1)
    assert sem_polo.sem_polo
    assert sem_polo.forma_fechada is not None
    com_polo = div2_lemma(1, 1)
    assert not com_polo.sem_polo
    assert com_polo.forma_fechada is None
