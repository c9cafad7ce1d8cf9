"""
Núcleo de séries: aritmética exata e esparsa para séries truncadas.

Componentes:
- qseries.py: QSeries (q com expoentes racionais escalados) e produtos infinitos
- plaurent.py: PLaurent (polinômios de Laurent em p = e^z)
- jqseries.py: JQSeries (séries em q com coeficientes PLaurent) e produtos de Jacobi
- zseries.py: ZSeries, substituição p = e^z e extração por gênero
- polos.py: tokens de polo (funções racionais de p via sympy)
- racional.py: conversão e formatação "num/den"
"""

from .jqseries import JQSeries, produto_jacobi
from .plaurent import PLaurent
from .polos import TokenPolo, polo_theta, token_serie_periodica
from .qseries import (QSeries, produto_infinito, qs_add, qs_exp, qs_invert,
                      qs_log, qs_mul, qs_neg, qs_pow, qs_scale_q, qs_shift)
from .racional import formatar_racional, racional
from .zseries import ZSeries, plaurent_to_zseries, zseries_extract_genus

__version__ = "1.0.0"

__all__ = [
    "QSeries",
    "JQSeries",
    "PLaurent",
    "ZSeries",
    "TokenPolo",
    "produto_infinito",
    "produto_jacobi",
    "polo_theta",
    "token_serie_periodica",
    "qs_add",
    "qs_mul",
    "qs_neg",
    "qs_invert",
    "qs_exp",
    "qs_log",
    "qs_scale_q",
    "qs_pow",
    "qs_shift",
    "plaurent_to_zseries",
    "zseries_extract_genus",
    "racional",
    "formatar_racional",
]
