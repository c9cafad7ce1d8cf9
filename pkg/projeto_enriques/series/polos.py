#!/usr/bin/env python3
"""
Tokens de polo: funções racionais de p guardadas simbolicamente (sympy).

Partes com suporte infinito em p (1/(p^{1/2} − p^{−1/2})², somas
Σ n·c_n·pⁿ com c periódico) nunca são expandidas; cancelamentos são
verificados sobre a forma racional canônica.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import sympy

from series.plaurent import PLaurent
from series.racional import racional
from utils.excecoes import ErroDominio

p = sympy.Symbol("p")


def para_sympy(valor) -> sympy.Rational:
    valor = racional(valor)
    return sympy.Rational(valor.numerator, valor.denominator)


@dataclass(frozen=True)
class TokenPolo:
    """Função racional de p em forma cancelada."""

    expressao: sympy.Expr

    def __post_init__(self):
        object.__setattr__(self, "expressao", sympy.cancel(sympy.sympify(self.expressao)))

    @classmethod
    def zero(cls) -> "TokenPolo":
        return cls(sympy.Integer(0))

    @classmethod
    def de_plaurent(cls, c: PLaurent) -> "TokenPolo":
        return cls(sum((para_sympy(v) * p**r for r, v in c.items()), sympy.Integer(0)))

    def e_zero(self) -> bool:
        return self.expressao == 0

    def __bool__(self):
        return not self.e_zero()

    def tem_polo_em_um(self) -> bool:
        _, den = sympy.fraction(self.expressao)
        return sympy.expand(den.subs(p, 1)) == 0

    def __add__(self, outro):
        if not isinstance(outro, TokenPolo):
            outro = TokenPolo(para_sympy(outro))
        return TokenPolo(self.expressao + outro.expressao)

    __radd__ = __add__

    def __neg__(self):
        return TokenPolo(-self.expressao)

    def __sub__(self, outro):
        return self + (-outro)

    def __mul__(self, outro):
        if isinstance(outro, TokenPolo):
            return TokenPolo(self.expressao * outro.expressao)
        if isinstance(outro, PLaurent):
            return TokenPolo(self.expressao * TokenPolo.de_plaurent(outro).expressao)
        return TokenPolo(self.expressao * para_sympy(outro))

    __rmul__ = __mul__

    def __eq__(self, outro):
        if not isinstance(outro, TokenPolo):
            return NotImplemented
        return sympy.cancel(self.expressao - outro.expressao) == 0

    def __hash__(self):
        return hash(sympy.srepr(self.expressao))

    def substituir_potencia(self, k: int) -> "TokenPolo":
        """p ↦ p^k."""
        return TokenPolo(self.expressao.subs(p, p**k))

    def para_plaurent(self) -> PLaurent:
        """Converte um token que é polinômio de Laurent; erro se houver polo fora de p = 0."""
        num, den = sympy.fraction(self.expressao)
        den_poly = sympy.Poly(den, p)
        if len(den_poly.terms()) != 1:
            raise ErroDominio(f"token com polo fora de p=0 não é PLaurent: {self.expressao}")
        (grau_den,), c_den = den_poly.terms()[0]
        coeffs = {}
        for (grau,), c in sympy.Poly(num, p).terms():
            v = sympy.Rational(c) / c_den
            coeffs[grau - grau_den] = Fraction(int(v.p), int(v.q))
        return PLaurent(coeffs)

    def __str__(self):
        return str(self.expressao)


def polo_theta() -> TokenPolo:
    """1/(p^{1/2} − p^{−1/2})² = p/(1 − p)²."""
    return TokenPolo(1 / (p - 2 + 1 / p))


def token_serie_periodica(coefs_periodo: Sequence) -> TokenPolo:
    """Σ_{n>0} n·c_n·pⁿ com c_n = coefs_periodo[(n − 1) mod P], P = len(coefs_periodo).

    Σ_{t≥0} (j + tP)·p^{j+tP} = p^j·(j/(1 − p^P) + P·p^P/(1 − p^P)²).
    """
    P = len(coefs_periodo)
    if P == 0:
        raise ErroDominio("período vazio")
    y = p**P
    expressao = sympy.Integer(0)
    for j in range(1, P + 1):
        c = para_sympy(coefs_periodo[j - 1])
        if c:
            expressao += c * p**j * (sympy.Integer(j) / (1 - y) + P * y / (1 - y) ** 2)
    return TokenPolo(expressao)
