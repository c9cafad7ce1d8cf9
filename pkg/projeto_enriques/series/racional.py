#!/usr/bin/env python3
"""
Racionais exatos: conversão e formatação "num/den".
"""

from fractions import Fraction
from numbers import Rational
from typing import Union

Racional = Fraction
EntradaRacional = Union[int, Fraction, str]


def racional(valor: EntradaRacional) -> Fraction:
    """Converte para Fraction recusando floats (toda a aritmética é exata)."""
    if isinstance(valor, Fraction):
        return valor
    if isinstance(valor, bool):
        raise TypeError("booleano não é coeficiente")
    if isinstance(valor, (int, Rational)):
        return Fraction(valor)
    if isinstance(valor, str):
        return Fraction(valor)
    raise TypeError(f"coeficiente não racional: {type(valor).__name__}")


def formatar_racional(valor: EntradaRacional) -> str:
    """Sempre "num/den", inclusive para inteiros."""
    valor = racional(valor)
    return f"{valor.numerator}/{valor.denominator}"