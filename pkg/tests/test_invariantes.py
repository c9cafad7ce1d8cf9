from fractions import Fraction

import pytest

from invariantes.donaldson_thomas import (DT, VW, DT_even_odd_split, DT_primitivo, DT_primitivo_fechado,
                                          VW_formula, dt, solve_dt_primitive)
from invariantes.gromov_witten import (NQ, anomalia_F10, degree_zero_value, formula_fibras, km2_coefficients,
                                       km_N, n_small, quasi_jacobi_weight, reconhecer_F10, torsion_N_minus)
from invariantes.omega import OmegaTable, a_coeffs, coef_eta_menos_12, e_hilb, hilb_euler, omega_table
from invariantes.registros import InvariantRecord, TipoInvariante
from invariantes.series_km import (F_KM_series, chave_dependencia, checar_dependencia, dG2_transport_check,
                                   fechado_por_divisao)
from reticulado.classes import CurveClass, MukaiVector, Tipo
from theta_jacobi.e8 import ZERO_E8, norma_e8, vetores_e8
from utils.excecoes import ErroDominio, ErroTruncamento

ZERO = CurveClass(0, 0)


def test_omega_genero_um_e_dois(tabela_omega):
    assert tabela_omega.omega(1, 0) == 1
    assert tabela_omega.omega(1, 1) == 16
    assert tabela_omega.omega(2, 1) == -2
    assert tabela_omega.omega(2, 0) == 0


def test_omega_forma_p(tabela_omega):
    assert tabela_omega.omega_p(0, 1) == 12
    assert tabela_omega.omega_p(1, 1) == 2
    assert tabela_omega.omega_p(-1, 1) == 2


def test_omega_fora_do_suporte(tabela_omega):
    assert tabela_omega.omega(1, Fraction(1, 2)) == 0
    assert tabela_omega.omega(1, -3) == 0
    assert tabela_omega.omega(0, 2) == 0


def test_omega_alem_da_tabela():
    tabela = omega_table(2, 3)
    with pytest.raises(ErroTruncamento):
        tabela.omega(3, 1)
    with pytest.raises(ErroTruncamento):
        tabela.omega(1, 4)


def test_omega_genero_um_coincide_com_a(tabela_omega):
    a = a_coeffs(32)
    assert all(tabela_omega.omega(1, n) == a.coef(n) for n in range(33))


def test_tabela_omega_em_json():
    tabela = omega_table(3, 5)
    assert OmegaTable.de_json(tabela.para_json()) == tabela


def test_coeficientes_a_e_hilbert():
    assert [a_coeffs(4).coef(n) for n in range(5)] == [1, 16, 144, 960, 5264]
    assert [hilb_euler(4).coef(n) for n in range(5)] == [1, 12, 90, 520, 2535]
    assert e_hilb(1) == 12
    assert e_hilb(-1) == 0 and e_hilb(Fraction(1, 2)) == 0


def test_coeficientes_de_eta_menos_doze():
    assert coef_eta_menos_12(Fraction(-1, 2)) == 1
    assert coef_eta_menos_12(Fraction(1, 2)) == 12
    assert coef_eta_menos_12(Fraction(-3, 2)) == 0


@pytest.mark.parametrize("d", range(1, 13))
def test_formula_das_fibras(d, tabela_omega):
    assert km_N(1, CurveClass.fibra(d), tabela_omega) == formula_fibras(d)


@pytest.mark.parametrize("g", [2, 3, 4])
def test_fibras_em_genero_alto_se_anulam(g, tabela_omega):
    assert all(km_N(g, CurveClass.fibra(d), tabela_omega) == 0 for d in range(1, 13))


def test_formula_das_fibras_primeiros_valores():
    assert formula_fibras(1) == 2
    assert formula_fibras(2) == 2


def test_km_N_com_divisores_impares(tabela_omega):
    beta = CurveClass(3, 3)
    esperado = 2 * (tabela_omega.omega(1, 9) + Fraction(1, 3) * tabela_omega.omega(1, 1))
    assert km_N(1, beta, tabela_omega) == esperado


def test_km_N_exige_classe_nao_nula():
    with pytest.raises(ErroDominio):
        km_N(1, ZERO)


def test_threefold_e_bps(tabela_omega):
    beta = CurveClass(1, 2)
    assert NQ(1, beta, tabela_omega) == 4 * km_N(1, beta, tabela_omega)
    assert n_small(1, CurveClass(1, 0), tabela_omega) == 8


def test_torcao(tabela_omega):
    assert torsion_N_minus(1, 3, tabela_omega) == 0
    assert torsion_N_minus(1, 2, tabela_omega) == km_N(1, CurveClass.fibra(2), tabela_omega)
    with pytest.raises(ErroDominio):
        torsion_N_minus(1, 0)


def test_coeficientes_em_q2(tabela_omega):
    assert km2_coefficients(1, 2, tabela_omega) == {0: 2, 2: 32, 4: 288}


def test_grau_zero_e_peso_quase_jacobi():
    assert degree_zero_value() == Fraction(1, 2)
    assert quasi_jacobi_weight(1, ["pt"]) == 2
    assert quasi_jacobi_weight(0, []) == -2
    assert quasi_jacobi_weight(2, ["1", "f"]) == 2


def test_F10_reconhecido_e_anomalia():
    resultado = reconhecer_F10(20)
    assert resultado.elemento.termos_dict == {(1, 0, 0, 0): 1, (0, 1, 0, 0): 1}
    assert anomalia_F10(resultado.elemento) == (1, 1)


def test_valores_de_dt_vw():
    v = MukaiVector(1, ZERO, -1)
    assert dt(v) == 96
    assert DT(v) == 96
    assert VW(v) == 24
    assert VW(MukaiVector(3, ZERO, 0)) == Fraction(2, 9)


def test_dt_se_anula_em_quadrado_par():
    assert dt(MukaiVector(0, CurveClass(1, 2), 0)) == 0


def test_dt_do_vetor_nulo():
    with pytest.raises(ErroDominio):
        dt(MukaiVector(0, ZERO, 0))


@pytest.mark.parametrize("n", range(1, 6))
def test_vw_de_hilbert(n):
    assert VW(MukaiVector(1, ZERO, -n)) == 2 * e_hilb(n)


def test_vw_igual_a_formula():
    vetores = [MukaiVector(r, CurveClass(k, d), n) for r in range(3) for k in range(3) for d in range(3)
               for n in range(-2, 3)]
    assert all(VW(v) == VW_formula(v) for v in vetores if not v.e_nulo())


@pytest.mark.parametrize("quadrado", range(-1, 9))
def test_dt_primitivo_fechado(quadrado):
    tipo = Tipo.IMPAR if quadrado % 2 else Tipo.PAR
    assert DT_primitivo(quadrado, tipo) == DT_primitivo_fechado(quadrado, tipo)


def test_divisibilidade_dois_par_e_impar():
    # β = 2s + d·f tem quadrado 4d, par, e dt se anula nas duas órbitas
    assert DT_even_odd_split(4) == (0, 0)
    assert DT_even_odd_split(0) == (0, 0)
    with pytest.raises(ErroDominio):
        DT_even_odd_split(3)


def test_dt_resolvido_a_partir_de_fkm():
    resultado = solve_dt_primitive(9)
    assert resultado.coincide_forma_fechada
    assert resultado.solucao[-1] == 8
    assert resultado.solucao[0] == 0
    assert resultado.solucao[1] == 96
    assert resultado.equacoes_verificadas > 0


def test_registro_herda_beta_do_vetor_de_mukai():
    v = MukaiVector(2, CurveClass(2, 4), 2)
    registro = InvariantRecord("DT", DT(v), mukai=v)
    assert registro.tipo is TipoInvariante.DT
    assert registro.beta == CurveClass(2, 4)
    assert registro.divisibilidade == 2


def _raiz():
    return next(v for v in vetores_e8(2) if norma_e8(v) == 2)


def test_F_KM_genero_um_nivel_um():
    serie = F_KM_series(1, 1, 3, 4)
    assert serie.coef(0, ZERO_E8) == 8
    assert serie.coef(1, _raiz()) == 8
    assert serie.coef(0, _raiz()) == 0


def test_F_KM_por_hecke_depende_so_da_chave():
    vetores = vetores_e8(4)
    serie = F_KM_series(1, 3, 3, 4)
    ok, conferidos = checar_dependencia(serie, 3, vetores)
    assert ok
    assert conferidos == 3 * len(vetores)


def test_chave_de_dependencia():
    assert chave_dependencia(1, 2, _raiz()) == (2, 1)
    assert chave_dependencia(3, 0, ZERO_E8) == (0, 3)


def test_amostra_precisa_ser_fechada_por_divisao():
    triplo = tuple(3 * a for a in _raiz())
    assert not fechado_por_divisao([triplo], 3)
    assert fechado_por_divisao([triplo, _raiz()], 3)
    with pytest.raises(ErroDominio):
        F_KM_series(1, 3, 2, 18, vetores=[triplo])


def test_F_KM_parametros_invalidos():
    with pytest.raises(ErroDominio):
        F_KM_series(1, 0, 3, 4)


@pytest.mark.lento
def test_transporte_em_G2():
    assert dG2_transport_check(2, 40)


def test_transporte_em_G2_exige_genero_dois():
    with pytest.raises(ErroDominio):
        dG2_transport_check(1)
