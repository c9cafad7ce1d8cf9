from fractions import Fraction

import numpy as np
import pytest

from series.plaurent import PLaurent
from series.polos import TokenPolo, polo_theta, token_serie_periodica
from series.qseries import QSeries, produto_infinito, qs_invert, qs_pow, qs_shift
from series.racional import formatar_racional, racional
from series.zseries import ZSeries, plaurent_to_zseries, zseries_extract_genus
from utils.excecoes import ErroDominio, ErroTruncamento


def test_inverso_de_um_menos_q():
    serie = QSeries.de_lista([1, -1], trunc=5)
    assert serie.inverso() == QSeries.de_lista([1, 1, 1, 1, 1])


def test_inverso_com_valuacao_reduz_truncamento():
    inverso = QSeries({1: 1}, 5).inverso()
    assert inverso.coef(-1) == 1
    assert inverso.trunc == 3


def test_inverso_da_serie_nula():
    with pytest.raises(ErroDominio, match="not invertible"):
        QSeries.zero(4).inverso()


def test_coeficiente_alem_do_truncamento():
    with pytest.raises(ErroTruncamento):
        QSeries.de_lista([1, 2, 3]).coef(3)


def test_exp_e_log_sao_inversos():
    q = QSeries({1: 1}, 6)
    e = q.exp()
    assert [e.coef(n) for n in range(5)] == [1, 1, Fraction(1, 2), Fraction(1, 6), Fraction(1, 24)]
    assert e.log() == q


def test_exp_exige_termo_constante_nulo():
    with pytest.raises(ErroDominio):
        QSeries.de_lista([1, 1]).exp()


def test_soma_alinha_denominadores():
    a = QSeries({1: 1}, 48, exp_denom=24)
    b = QSeries({0: 1}, 2)
    soma = a + b
    assert soma.coef(Fraction(1, 24)) == 1
    assert soma.coef(0) == 1
    assert soma.trunc == 48 and soma.exp_denom == 24


def test_potencia_negativa_e_inverso():
    a = QSeries.de_lista([1, 3, -2, 5], trunc=8)
    assert qs_pow(a, -2) == qs_invert(a * a)
    assert qs_pow(a, 0) == QSeries.constante(1, 8)


def test_deslocamento():
    assert qs_shift(QSeries.de_lista([1, 1]), 2) == QSeries({2: 1, 3: 1}, 4)


def test_produto_de_euler():
    """Π(1 − qᵐ) = 1 − q − q² + q⁵ + q⁷ − …"""
    euler = produto_infinito([(1, 1, -1)], 8)
    assert euler == QSeries({0: 1, 1: -1, 2: -1, 5: 1, 7: 1}, 8)


def test_plaurent_inverso_so_para_monomio():
    assert PLaurent.monomio(2, 4).inverso() == PLaurent.monomio(-2, Fraction(1, 4))
    with pytest.raises(ErroDominio):
        PLaurent({0: 1, 1: 1}).inverso()


def test_plaurent_par_simetrico_e_substituicao():
    assert PLaurent.par_simetrico(0, 3) == PLaurent.constante(6)
    c = PLaurent.par_simetrico(1, 2)
    assert c.e_simetrico()
    assert c.substituir_potencia(3) == PLaurent({3: 2, -3: 2})
    assert c.avaliar_em_um() == 4


def test_plaurent_simetrico_declarado():
    with pytest.raises(ErroDominio):
        PLaurent({1: 1}, simetrico=True)


def test_token_periodico_de_periodo_um_e_o_polo_de_theta():
    token = token_serie_periodica([1])
    assert token == polo_theta()
    assert token.tem_polo_em_um()


def test_token_de_plaurent_volta_para_plaurent():
    c = PLaurent({-2: 3, 0: 1, 5: Fraction(-1, 7)})
    assert TokenPolo.de_plaurent(c).para_plaurent() == c


def test_token_com_polo_nao_vira_plaurent():
    with pytest.raises(ErroDominio):
        polo_theta().para_plaurent()


def test_substituicao_p_igual_e_z():
    z = plaurent_to_zseries(PLaurent.par_simetrico(1), 5)
    assert z == ZSeries({0: 2, 2: 1, 4: Fraction(1, 12)}, 5)


def test_extracao_por_genero():
    z = ZSeries({0: 2, 2: 1, 4: Fraction(1, 12)}, 5)
    assert zseries_extract_genus(z) == {1: 2, 2: -1, 3: Fraction(1, 12)}


def test_extracao_recusa_expoentes_impares():
    with pytest.raises(ErroDominio, match="not a genus expansion"):
        zseries_extract_genus(ZSeries({1: 1}, 4))


def test_zseries_limita_a_ordem_do_polo():
    with pytest.raises(ErroDominio):
        ZSeries({-3: 1}, 2)


def test_racionais_exatos():
    assert formatar_racional(3) == "3/1"
    assert formatar_racional(Fraction(-2, 6)) == "-1/3"
    with pytest.raises(TypeError):
        racional(0.5)


def test_json_preserva_serie_fracionaria():
    serie = QSeries({1: Fraction(1, 3), 25: -2}, 48, exp_denom=24)
    assert QSeries.de_json(serie.para_json()) == serie


def test_json_preserva_zseries():
    z = ZSeries({-2: 1, 0: Fraction(-1, 12), 2: Fraction(1, 240)}, 4)
    copia = ZSeries.de_json(z.para_json())
    assert copia == z
    assert copia.trunc == 4


# -- propriedades em séries aleatórias ----------------------------------------


def _serie_aleatoria(rng, trunc: int = 8, unidade: bool = False) -> QSeries:
    numeradores = rng.integers(-9, 10, size=trunc)
    denominadores = rng.integers(1, 6, size=trunc)
    valores = [Fraction(int(a), int(b)) for a, b in zip(numeradores, denominadores)]
    if unidade and not valores[0]:
        valores[0] = Fraction(1)
    return QSeries.de_lista(valores, trunc=trunc)


def _plaurent_aleatorio(rng) -> PLaurent:
    expoentes = rng.integers(-3, 4, size=3)
    coeficientes = rng.integers(-5, 6, size=3)
    return PLaurent({int(r): int(c) for r, c in zip(expoentes, coeficientes)})


@pytest.mark.parametrize("seed", range(20))
def test_axiomas_de_anel(seed):
    rng = np.random.default_rng(seed)
    a, b, c = (_serie_aleatoria(rng) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert a - a == QSeries.zero(8)


def test_inverso_de_unidades_aleatorias():
    rng = np.random.default_rng(100)
    um = QSeries.constante(1, 8)
    for _ in range(100):
        a = _serie_aleatoria(rng, unidade=True)
        assert qs_invert(a) * a == um


@pytest.mark.parametrize("seed", range(10))
def test_substituicao_e_z_e_linear_e_multiplicativa(seed):
    rng = np.random.default_rng(seed)
    a, b = _plaurent_aleatorio(rng), _plaurent_aleatorio(rng)
    assert plaurent_to_zseries(a * b, 6) == plaurent_to_zseries(a, 6) * plaurent_to_zseries(b, 6)
    assert plaurent_to_zseries(a + 3 * b, 6) == plaurent_to_zseries(a, 6) + plaurent_to_zseries(b, 6) * 3
