"""
Reticulados: H²(Y) = U ⊕ E8(−1), vetores de Mukai e seus invariantes.

Componentes:
- classes.py: CurveClass, MukaiVector, InvariantTriple, mukai_invariants,
  orbit_representative
- reflexoes.py: matrizes de Gram dos três modelos, pareamento, reflexões,
  mergulho em U ⊕ U(2) ⊕ E8(−2) e raízes aleatórias
- cohomologia.py: t_λ, e^{t_λ}, pesos e interseções triplas em H*(Y)
"""

from .classes import (CurveClass, InvariantTriple, MukaiVector, Tipo, alpha_d,
                      mukai_invariants, orbit_representative)
from .cohomologia import (NOMES_BASE, exp_t_lambda, exp_t_lambda_fechada,
                          t_lambda, triple_intersection, vetor_base, vetor_h2,
                          wt)
from .reflexoes import (Reticulado, from_M, invariantes_em_M, pairing,
                        palavra_de_reflexoes, random_root, reflect, to_M,
                        to_mukai_coords)

__version__ = "1.0.0"

__all__ = [
    "CurveClass",
    "MukaiVector",
    "InvariantTriple",
    "Tipo",
    "alpha_d",
    "mukai_invariants",
    "orbit_representative",
    "Reticulado",
    "pairing",
    "reflect",
    "to_M",
    "from_M",
    "to_mukai_coords",
    "invariantes_em_M",
    "random_root",
    "palavra_de_reflexoes",
    "NOMES_BASE",
    "vetor_base",
    "vetor_h2",
    "wt",
    "t_lambda",
    "exp_t_lambda",
    "exp_t_lambda_fechada",
    "triple_intersection",
]
