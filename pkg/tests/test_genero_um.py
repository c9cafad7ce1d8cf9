import pytest

from invariantes.genero_um import (genus1_product_check, genus1_recursion_check, genus1_recursion_sweep,
                                   genus1_series, partition_function_check, partition_function_series,
                                   produto_borcherds, produto_particao, recursao_lados)
from reticulado.classes import CurveClass
from series.zseries import ZSeries
from utils.excecoes import ErroDominio, ErroTruncamento


def test_forma_produto_em_fatia_pequena(tabela_omega):
    assert genus1_product_check(2, tabela=tabela_omega)


@pytest.mark.lento
def test_forma_produto_em_fatia_k4():
    assert genus1_product_check(4)


def test_serie_de_genero_um_tem_o_termo_da_fibra(tabela_omega):
    S, A = genus1_series(2, tabela=tabela_omega)
    # monômio de f: (k, d, ⟨w, 0⟩) = (0, 1, 0)
    assert S[(0, 1, 0)] == 2
    assert A[(0, 1, 0)] == 1


def test_produto_vazio_e_um():
    assert produto_borcherds({}, 3) == {(0, 0, 0): 1}


def test_genus1_series_exige_K_positivo():
    with pytest.raises(ErroDominio):
        genus1_series(0)


def test_recursao_em_s_mais_f(tabela_omega):
    esquerda, direita = recursao_lados(CurveClass(1, 1), tabela=tabela_omega)
    assert esquerda == direita == 64


@pytest.mark.parametrize("beta", [CurveClass.fibra(2), CurveClass(2, 2), CurveClass(1, 2, (1, 0, 0, 0, 0, 0, 0, 0))])
def test_recursao_em_classes(beta, tabela_omega):
    assert genus1_recursion_check(beta, tabela=tabela_omega)


def test_recursao_na_fibra_dupla_e_zero(tabela_omega):
    assert recursao_lados(CurveClass.fibra(2), tabela=tabela_omega) == (0, 0)


def test_recursao_com_vetores_insuficientes():
    with pytest.raises(ErroTruncamento):
        recursao_lados(CurveClass(2, 2), norm_bound=0)


def test_recursao_exige_classe_efetiva():
    with pytest.raises(ErroDominio):
        recursao_lados(CurveClass(0, 0))
    with pytest.raises(ErroDominio):
        recursao_lados(CurveClass(-1, 2))


def test_varredura_da_recursao(tabela_omega):
    assert genus1_recursion_sweep(2, 2, 2, tabela=tabela_omega) == (True, 16)


# -- função de partição --------------------------------------------------------


def test_funcao_de_particao_em_fatia_pequena(tabela_omega):
    assert partition_function_check(2, 3, tabela=tabela_omega)


@pytest.mark.lento
def test_funcao_de_particao_em_fatia_k3():
    assert partition_function_check(3, 3)


def test_funcao_de_particao_termo_da_fibra(tabela_omega):
    S, A = partition_function_series(2, 2, tabela=tabela_omega)
    assert S[(0, 1, 0)] == ZSeries({0: 2}, 3)
    assert A[(0, 1, 0)] == {0: 1}


def test_funcao_de_particao_reduz_ao_genero_um(tabela_omega):
    S, A = partition_function_series(2, 2, tabela=tabela_omega)
    S1, A1 = genus1_series(2, tabela=tabela_omega)
    assert {m: c.coef(0) for m, c in S.items() if c.coef(0)} == S1
    # Σ_r ω(r, n) = ω₁(n) = a(n)
    assert {m: sum(ex.values()) for m, ex in A.items() if sum(ex.values())} == A1


def test_produto_particao_vazio_e_um():
    assert produto_particao({}, 2, 3) == {(0, 0, 0): ZSeries({0: 1}, 3)}


def test_funcao_de_particao_exige_limites_positivos():
    with pytest.raises(ErroDominio):
        partition_function_series(2, 0)
