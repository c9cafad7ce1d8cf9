"""
Invariantes enumerativos do threefold de Enriques e da superfície de Enriques.

Componentes:
- omega.py: tabela ω_g(n) a partir do núcleo de Klemm-Mariño, a(n), e(Hilbⁿ)
- gromov_witten.py: N_{g,β}, N^Q, n^Q, fórmula das fibras, F_{1,0}
- donaldson_thomas.py: dt, DT, VW e a resolução de dt em classes primitivas
- pares_estaveis.py: f^KM_β, f^PT_β (fórmula de Toda), ponte GW/PT, lema de div 2
- series_km.py: F^KM_{g,ℓ} com índices E8, elevação de Hecke, transporte em G₂
- genero_um.py: forma produto e recursão de gênero 1
- registros.py: InvariantRecord para tabelas e exportação
"""

from .donaldson_thomas import (DT, VW, DT_even_odd_split, DT_primitivo,
                               DT_primitivo_fechado, FonteDT, ResultadoSudoku,
                               VW_formula, dt, solve_dt_primitive)
from .genero_um import (PESOS_PADRAO, genus1_product_check,
                        genus1_recursion_check, genus1_recursion_sweep,
                        genus1_series, produto_borcherds, recursao_lados)
from .gromov_witten import (NQ, F10_por_eisenstein, anomalia_F10,
                            degree_zero_value, formula_fibras,
                            km2_coefficients, km_N, n_small,
                            quasi_jacobi_weight, reconhecer_F10,
                            series_F10_tau0_s, torsion_N_minus)
from .omega import (OmegaTable, a_coeffs, coef_eta_menos_12, e_hilb,
                    hilb_euler, omega_table, tabela_cobrindo)
from .pares_estaveis import (ResultadoLemaDiv2, SeriePT, div2_lemma, f_KM,
                             f_PT, gwpt_bridge, toda_log_PT)
from .registros import InvariantRecord, TipoInvariante
from .series_km import (F_KM_direta, F_KM_series, chave_dependencia,
                        checar_dependencia, dG2_transport_check,
                        fechado_por_divisao, serie_delta_omega)

__version__ = "1.0.0"

__all__ = [
    "OmegaTable",
    "omega_table",
    "tabela_cobrindo",
    "a_coeffs",
    "hilb_euler",
    "e_hilb",
    "coef_eta_menos_12",
    "km_N",
    "NQ",
    "n_small",
    "formula_fibras",
    "torsion_N_minus",
    "km2_coefficients",
    "degree_zero_value",
    "series_F10_tau0_s",
    "F10_por_eisenstein",
    "reconhecer_F10",
    "anomalia_F10",
    "quasi_jacobi_weight",
    "FonteDT",
    "dt",
    "DT",
    "VW",
    "VW_formula",
    "DT_primitivo",
    "DT_primitivo_fechado",
    "DT_even_odd_split",
    "ResultadoSudoku",
    "solve_dt_primitive",
    "SeriePT",
    "f_KM",
    "f_PT",
    "gwpt_bridge",
    "toda_log_PT",
    "ResultadoLemaDiv2",
    "div2_lemma",
    "F_KM_series",
    "F_KM_direta",
    "fechado_por_divisao",
    "chave_dependencia",
    "checar_dependencia",
    "serie_delta_omega",
    "dG2_transport_check",
    "PESOS_PADRAO",
    "genus1_series",
    "produto_borcherds",
    "genus1_product_check",
    "genus1_recursion_check",
    "genus1_recursion_sweep",
    "recursao_lados",
    "InvariantRecord",
    "TipoInvariante",
]
