"""
Operadores de Hecke V_ℓ (Γ₀(2)) e mudança de escala em q.

Componentes:
- operadores.py: hecke_V para QSeries e E8QSeries, divisores ímpares, scale_q_E8
"""

from .operadores import divisores_impares, hecke_V, scale_q_E8

__version__ = "1.0.0"

__all__ = ["hecke_V", "scale_q_E8", "divisores_impares"]
