"""
Formas modulares e quasimodulares para SL₂(Z) e Γ₀(2).

Componentes:
- eisenstein.py: números de Bernoulli, séries G_k e a forma F₂
- eta.py: η, Δ, quocientes eta e o quociente de cúspide η¹⁶(2τ)/η⁸(τ)
- anel.py: RingElement (polinômios em G₂, F₂, G₄, G₆), avaliação e d/dG₂
- reconhecedor.py: reconhecimento por álgebra linear exata e o lema de anulamento
"""

from .anel import Anel, RingElement, evaluate, formal_dG2, monomios
from .eisenstein import F2, bernoulli, eisenstein_G, sigma
from .eta import cusp_quotient, delta, eta, eta_power, eta_quotient
from .reconhecedor import (EXCEDENTE_MINIMO, ResultadoReconhecimento,
                           recognize, vanishing_lemma_check)

__version__ = "1.0.0"

__all__ = [
    "Anel",
    "RingElement",
    "evaluate",
    "formal_dG2",
    "monomios",
    "bernoulli",
    "eisenstein_G",
    "sigma",
    "F2",
    "eta",
    "eta_power",
    "eta_quotient",
    "delta",
    "cusp_quotient",
    "recognize",
    "vanishing_lemma_check",
    "ResultadoReconhecimento",
    "EXCEDENTE_MINIMO",
]
