"""
Funções theta: Θ de Jacobi, o núcleo de Klemm-Mariño e Θ_{E8}.

Componentes:
- theta.py: Θ (produto triplo × soma meio-inteira), Θ², 1/Θ², km_kernel e
  as expansões de Taylor em z
- e8.py: matriz Q_E8, enumeração de Fincke-Pohst, oráculos e E8QSeries
"""

from .e8 import (Q_E8, ZERO_E8, E8QSeries, contagem_e8_coordenadas_padrao,
                 divisibilidade_vetor, enumerar_caixa, lattice_enumerate,
                 matriz_vetores_e8, norma_e8, produto_e8,
                 representantes_orbitas_e8, scale_q_E8, theta_E8, vetores_e8)
from .theta import (InversoThetaQuadrado, ThetaJacobi, inv_theta_sq,
                    km_kernel, km_kernel_soma_fechada, theta,
                    theta_ratio_eisenstein_check, theta_sq,
                    theta_taylor_check)

__version__ = "1.0.0"

__all__ = [
    "Q_E8",
    "ZERO_E8",
    "E8QSeries",
    "lattice_enumerate",
    "enumerar_caixa",
    "contagem_e8_coordenadas_padrao",
    "vetores_e8",
    "matriz_vetores_e8",
    "norma_e8",
    "produto_e8",
    "divisibilidade_vetor",
    "representantes_orbitas_e8",
    "theta_E8",
    "scale_q_E8",
    "ThetaJacobi",
    "InversoThetaQuadrado",
    "theta",
    "theta_sq",
    "inv_theta_sq",
    "km_kernel",
    "km_kernel_soma_fechada",
    "theta_taylor_check",
    "theta_ratio_eisenstein_check",
]
