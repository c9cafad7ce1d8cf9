from fractions import Fraction

import pytest

from series.plaurent import PLaurent
from series.qseries import QSeries
from theta_jacobi.e8 import (E8QSeries, contagem_e8_coordenadas_padrao, divisibilidade_vetor,
                             enumerar_caixa, lattice_enumerate, norma_e8, representantes_orbitas_e8,
                             theta_E8, vetores_e8)
from theta_jacobi.theta import (inv_theta_sq, km_kernel, km_kernel_soma_fechada, theta_ratio_eisenstein_check,
                                theta_sq, theta_taylor_check)
from utils.excecoes import ErroDominio, ErroTruncamento


def test_theta_quadrado_comeca_com_prefator():
    assert theta_sq(6).coef(0) == PLaurent({1: 1, 0: -2, -1: 1})


def test_nucleo_tres_construcoes_coincidem():
    kernel = km_kernel(12, verificar=True)
    assert kernel.coef(0) == PLaurent.constante(1)
    assert kernel.coef(1) == PLaurent({1: 2, 0: 12, -1: 2})
    assert kernel.e_simetrico()


def test_soma_fechada_do_nucleo_deslocado():
    soma = km_kernel_soma_fechada(4)
    assert soma.coef(Fraction(1, 2)) == PLaurent.constante(1)
    assert soma.coef(Fraction(3, 2)) == PLaurent.par_simetrico(1, 2)
    assert soma.coef(Fraction(5, 2)) == PLaurent.par_simetrico(2, 3)


def test_inverso_de_theta_quadrado():
    inv = inv_theta_sq(8)
    assert inv.polar.tem_polo_em_um()
    assert not inv.regular.coef(0)
    assert inv.regular.coef(1) == PLaurent.constante(2)
    assert inv.regular.coef(2) == PLaurent.par_simetrico(1, 3)


def test_taylor_de_theta():
    assert theta_taylor_check(8, 10)


def test_razao_de_thetas_e_eisenstein():
    assert theta_ratio_eisenstein_check(7, 10)


def test_contagem_de_vetores_e8():
    normas = {}
    for v in vetores_e8(6):
        normas[norma_e8(v)] = normas.get(norma_e8(v), 0) + 1
    assert normas == {0: 1, 2: 240, 4: 2160, 6: 6720}
    assert normas == contagem_e8_coordenadas_padrao(6)


def test_fincke_pohst_contra_caixa():
    gram = [[2, -1, 0], [-1, 2, -1], [0, -1, 2]]
    assert set(lattice_enumerate(gram, 8)) == set(enumerar_caixa(gram, 8))


def test_theta_e8_especializada():
    assert theta_E8(4).especializar_zeta_um() == QSeries({0: 1, 1: 240, 2: 2160, 3: 6720}, 4)
    assert theta_E8(3).e_simetrico()


def test_coeficiente_e8_fora_dos_limites():
    serie = theta_E8(2)
    with pytest.raises(ErroTruncamento):
        serie.coef(2, (0,) * 8)
    with pytest.raises(ErroTruncamento):
        serie.coef(1, (1, 1, 0, 0, 0, 0, 0, 0))


def test_produto_e8_por_serie_q():
    serie = E8QSeries({(0, (0,) * 8): 1}, 3, 2) * QSeries({0: 1, 1: 5}, 3)
    assert serie.coef(1, (0,) * 8) == 5


def test_representantes_de_orbitas():
    reps = representantes_orbitas_e8(6)
    assert {n: norma_e8(v) for n, v in reps.items()} == {0: 0, 2: 2, 4: 4, 6: 6}
    with pytest.raises(ErroDominio):
        representantes_orbitas_e8(8)


def test_divisibilidade_de_vetor():
    assert divisibilidade_vetor((2, 4, 0, 0, 0, 0, 0, -6)) == 2
    assert divisibilidade_vetor((0,) * 8) == 0
