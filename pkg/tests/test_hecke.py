from fractions import Fraction

import pytest

from formas_modulares.eisenstein import eisenstein_G
from hecke.operadores import divisores_impares, hecke_V
from series.qseries import QSeries
from theta_jacobi.e8 import theta_E8
from utils.excecoes import ErroDominio, ErroTruncamento


def test_divisores_impares():
    assert divisores_impares(12) == [1, 3]
    assert divisores_impares(-15) == [1, 3, 5, 15]


def test_V1_e_identidade():
    G4 = eisenstein_G(4, 10)
    assert hecke_V(G4, 1, 4) == G4
    assert hecke_V(theta_E8(4), 1, 4) == theta_E8(4)


def test_eisenstein_e_autoforma_de_V3():
    """G₄|V₃ = σ₃(3)·G₄."""
    assert hecke_V(eisenstein_G(4, 30), 3, 4) == eisenstein_G(4, 10) * 28


def test_truncamento_de_saida():
    assert hecke_V(eisenstein_G(4, 31), 3, 4).trunc == 10


def test_truncamento_pedido_alem_do_disponivel():
    with pytest.raises(ErroTruncamento, match="underdetermined coefficient"):
        hecke_V(eisenstein_G(4, 30), 3, 4, trunc=11)


def test_ell_positivo():
    with pytest.raises(ErroDominio):
        hecke_V(eisenstein_G(4, 10), 0, 4)


def test_exige_expoentes_inteiros():
    with pytest.raises(ErroDominio):
        hecke_V(QSeries({1: 1}, 48, exp_denom=24), 3, 2)


def test_V3_em_serie_e8():
    serie = hecke_V(theta_E8(7), 3, 0)
    raiz = (1, 0, 0, 0, 0, 0, 0, 0)
    # ζ^α q¹ em V₃ vem de ζ^α q³, isto é, de α·α = 6
    assert serie.coef(0, (0,) * 8) == Fraction(4, 3)
    assert serie.coef(1, raiz) == 0
