#!/usr/bin/env python3
"""
QSeries: série truncada em q com coeficientes racionais exatos.

Expoentes são guardados escalados: a chave n representa q^{n/exp_denom}.
Coeficientes são conhecidos para toda chave n < trunc; fora do dicionário
(e abaixo de trunc) o coeficiente é zero.
"""

from fractions import Fraction
from math import gcd, lcm
from types import MappingProxyType
from typing import Any, Dict, Iterable, List, Mapping, Optional, Tuple

from series.racional import formatar_racional, racional
from utils.excecoes import ErroDominio, ErroTruncamento


class QSeries:
    """Série em q truncada e esparsa.

    A mesma implementação serve a JQSeries (coeficientes PLaurent): as
    operações só usam +, *, negação e o teste de nulidade dos coeficientes.
    """

    __slots__ = ("exp_denom", "trunc", "_coeffs")

    def __init__(self, coeffs: Optional[Mapping[int, Any]] = None, trunc: int = 0, exp_denom: int = 1):
        if exp_denom <= 0:
            raise ErroDominio(f"exp_denom deve ser positivo: {exp_denom}")
        limpos = {}
        for n, c in (coeffs or {}).items():
            n = int(n)
            if n >= trunc:
                continue
            c = self._converter(c)
            if c:
                limpos[n] = c
        self.exp_denom = exp_denom
        self.trunc = int(trunc)
        self._coeffs = limpos

    # -- coeficientes -------------------------------------------------------

    @staticmethod
    def _converter(c):
        return racional(c)

    @staticmethod
    def _zero_coef():
        return Fraction(0)

    @staticmethod
    def _um_coef():
        return Fraction(1)

    @staticmethod
    def _inverter_coef(c):
        return 1 / c

    @classmethod
    def _cru(cls, coeffs: Dict[int, Any], trunc: int, exp_denom: int):
        obj = cls.__new__(cls)
        obj.exp_denom = exp_denom
        obj.trunc = trunc
        obj._coeffs = coeffs
        return obj

    # -- construtores -------------------------------------------------------

    @classmethod
    def zero(cls, trunc: int, exp_denom: int = 1):
        return cls._cru({}, trunc, exp_denom)

    @classmethod
    def constante(cls, c, trunc: int, exp_denom: int = 1):
        return cls({0: c}, trunc, exp_denom)

    @classmethod
    def monomio(cls, n: int, c, trunc: int, exp_denom: int = 1):
        """c·q^{n/exp_denom}."""
        return cls({n: c}, trunc, exp_denom)

    @classmethod
    def de_lista(cls, valores: Iterable[Any], trunc: Optional[int] = None, inicio: int = 0, exp_denom: int = 1):
        valores = list(valores)
        if trunc is None:
            trunc = inicio + len(valores)
        return cls({inicio + i: v for i, v in enumerate(valores)}, trunc, exp_denom)

    # -- acesso -------------------------------------------------------------

    @property
    def coeffs(self) -> Mapping[int, Any]:
        return MappingProxyType(self._coeffs)

    def items(self) -> List[Tuple[int, Any]]:
        return sorted(self._coeffs.items())

    @property
    def valuacao(self) -> int:
        """Menor chave com coeficiente não nulo (trunc se a série é nula)."""
        return min(self._coeffs) if self._coeffs else self.trunc

    def coef_escalado(self, n: int):
        if n >= self.trunc:
            raise ErroTruncamento(
                f"coeficiente q^{Fraction(n, self.exp_denom)} além do truncamento",
                limite=f"trunc={Fraction(self.trunc, self.exp_denom)}",
            )
        return self._coeffs.get(n, self._zero_coef())

    def coef(self, expoente):
        """Coeficiente de q^{expoente} (expoente racional)."""
        escalado = Fraction(expoente) * self.exp_denom
        if escalado.denominator != 1:
            if escalado >= self.trunc:
                raise ErroTruncamento(
                    f"coeficiente q^{expoente} além do truncamento",
                    limite=f"trunc={Fraction(self.trunc, self.exp_denom)}",
                )
            return self._zero_coef()
        return self.coef_escalado(int(escalado))

    def __bool__(self):
        return bool(self._coeffs)

    # -- denominadores e truncamento ----------------------------------------

    def reescalar(self, novo_denom: int):
        if novo_denom % self.exp_denom:
            raise ErroDominio(f"{novo_denom} não é múltiplo de {self.exp_denom}")
        k = novo_denom // self.exp_denom
        if k == 1:
            return self
        return self._cru({n * k: c for n, c in self._coeffs.items()}, self.trunc * k, novo_denom)

    def normalizar_denominador(self):
        """Menor exp_denom que representa a série."""
        g = gcd(self.exp_denom, self.trunc, *self._coeffs)
        if g <= 1:
            return self
        return self._cru({n // g: c for n, c in self._coeffs.items()}, self.trunc // g, self.exp_denom // g)

    def truncar(self, novo_trunc: int):
        """Reduz o truncamento (unidades escaladas); nunca o estende."""
        novo_trunc = min(novo_trunc, self.trunc)
        return self._cru({n: c for n, c in self._coeffs.items() if n < novo_trunc}, novo_trunc, self.exp_denom)

    def _alinhar(self, outro):
        d = lcm(self.exp_denom, outro.exp_denom)
        return self.reescalar(d), outro.reescalar(d)

    # -- aritmética -------------------------------------------------------

    def __neg__(self):
        return self._cru({n: -c for n, c in self._coeffs.items()}, self.trunc, self.exp_denom)

    def __add__(self, outro):
        if not isinstance(outro, QSeries):
            outro = type(self).constante(outro, self.trunc, self.exp_denom)
        a, b = self._alinhar(outro)
        trunc = min(a.trunc, b.trunc)
        res = {n: c for n, c in a._coeffs.items() if n < trunc}
        for n, c in b._coeffs.items():
            if n >= trunc:
                continue
            if n in res:
                v = res[n] + c
                if v:
                    res[n] = v
                else:
                    del res[n]
            else:
                res[n] = c
        tipo = self._tipo_resultado(outro)
        if type(self) is not type(outro):
            res = {n: tipo._converter(c) for n, c in res.items()}
        return tipo._cru(res, trunc, a.exp_denom)

    __radd__ = __add__

    def __sub__(self, outro):
        return self + (-outro)

    def __rsub__(self, outro):
        return (-self) + outro

    def _tipo_resultado(self, outro):
        # JQSeries absorve QSeries
        if isinstance(outro, QSeries) and type(outro) is not type(self) and issubclass(type(outro), type(self)):
            return type(outro)
        return type(self)

    def __mul__(self, outro):
        if not isinstance(outro, QSeries):
            if not outro:
                return self._cru({}, self.trunc, self.exp_denom)
            return self._cru(
                {n: v for n, c in self._coeffs.items() if (v := c * outro)}, self.trunc, self.exp_denom
            )
        a, b = self._alinhar(outro)
        va, vb = a.valuacao, b.valuacao
        trunc = min(a.trunc + vb, b.trunc + va)
        res: Dict[int, Any] = {}
        itens_b = b.items()
        for i, ci in a.items():
            if i + vb >= trunc:
                break
            for j, cj in itens_b:
                s = i + j
                if s >= trunc:
                    break
                if s in res:
                    res[s] = res[s] + ci * cj
                else:
                    res[s] = ci * cj
        res = {n: c for n, c in res.items() if c}
        return self._tipo_resultado(outro)._cru(res, trunc, a.exp_denom)

    def __rmul__(self, outro):
        return self.__mul__(outro)

    def __pow__(self, e: int):
        if e < 0:
            return self.inverso() ** (-e)
        if e == 0:
            precisao = self.trunc - self.valuacao if self._coeffs else self.trunc
            return type(self).constante(self._um_coef(), precisao, self.exp_denom)
        base = self
        resultado = None
        while e:
            if e & 1:
                resultado = base if resultado is None else resultado * base
            e >>= 1
            if e:
                base = base * base
        return resultado

    def __eq__(self, outro):
        """Igualdade exata até o menor dos dois truncamentos."""
        if not isinstance(outro, QSeries):
            return NotImplemented
        a, b = self._alinhar(outro)
        trunc = min(a.trunc, b.trunc)
        da = {n: c for n, c in a._coeffs.items() if n < trunc}
        db = {n: c for n, c in b._coeffs.items() if n < trunc}
        return da == db

    __hash__ = None

    def diferencas(self, outro, limite: int = 5) -> List[Tuple[Fraction, Any, Any]]:
        """Primeiras posições (expoente, self, outro) onde as séries diferem."""
        a, b = self._alinhar(outro)
        trunc = min(a.trunc, b.trunc)
        chaves = sorted({n for n in a._coeffs if n < trunc} | {n for n in b._coeffs if n < trunc})
        saida = []
        for n in chaves:
            ca, cb = a._coeffs.get(n, a._zero_coef()), b._coeffs.get(n, b._zero_coef())
            if ca != cb:
                saida.append((Fraction(n, a.exp_denom), ca, cb))
                if len(saida) >= limite:
                    break
        return saida

    # -- operações analíticas ---------------------------------------------

    def inverso(self):
        if not self._coeffs:
            raise ErroDominio("série nula não invertível (not invertible)")
        v = self.valuacao
        c0 = self._coeffs[v]
        try:
            inv = self._inverter_coef(c0)
        except ZeroDivisionError:
            raise ErroDominio("coeficiente líder nulo (not invertible)")
        termos = self.trunc - v
        A = [(k - v, c) for k, c in self.items() if k > v]
        B = [inv]
        for n in range(1, termos):
            acc = None
            for k, ak in A:
                if k > n:
                    break
                t = ak * B[n - k]
                acc = t if acc is None else acc + t
            B.append(-(inv * acc) if acc is not None else self._zero_coef())
        res = {n - v: c for n, c in enumerate(B) if c}
        return self._cru(res, self.trunc - 2 * v, self.exp_denom)

    def exp(self):
        if any(n < 0 for n in self._coeffs):
            raise ErroDominio("exp de série com expoentes negativos (domain error)")
        if self._coeffs.get(0):
            raise ErroDominio("exp exige termo constante nulo (domain error)")
        f = [(k, c) for k, c in self.items() if k > 0]
        E = [self._um_coef()]
        for n in range(1, self.trunc):
            acc = None
            for k, fk in f:
                if k > n:
                    break
                t = fk * (E[n - k] * k)
                acc = t if acc is None else acc + t
            E.append(acc * Fraction(1, n) if acc is not None else self._zero_coef())
        return self._cru({n: c for n, c in enumerate(E) if c}, self.trunc, self.exp_denom)

    def log(self):
        if any(n < 0 for n in self._coeffs):
            raise ErroDominio("log de série com expoentes negativos (domain error)")
        if self._coeffs.get(0) != self._um_coef():
            raise ErroDominio("log exige termo constante 1 (domain error)")
        f = {k: c for k, c in self._coeffs.items() if k > 0}
        L = [self._zero_coef()]
        itens_f = sorted(f.items())
        for n in range(1, self.trunc):
            acc = None
            for k, fk in itens_f:
                if k >= n:
                    break
                t = fk * (L[n - k] * (n - k))
                acc = t if acc is None else acc + t
            fn = f.get(n, self._zero_coef())
            L.append(fn - acc * Fraction(1, n) if acc is not None else fn)
        return self._cru({n: c for n, c in enumerate(L) if c}, self.trunc, self.exp_denom)

    def escalar_q(self, N: int):
        """f(q) ↦ f(q^N)."""
        if N <= 0:
            raise ErroDominio(f"fator de escala deve ser positivo: {N}")
        return self._cru({n * N: c for n, c in self._coeffs.items()}, self.trunc * N, self.exp_denom)

    def deslocar(self, k: int):
        """Multiplica por q^{k/exp_denom}."""
        return self._cru({n + k: c for n, c in self._coeffs.items()}, self.trunc + k, self.exp_denom)

    def mapear(self, funcao):
        return type(self)({n: funcao(c) for n, c in self._coeffs.items()}, self.trunc, self.exp_denom)

    # -- serialização -----------------------------------------------------

    def _coef_json(self, c):
        return formatar_racional(c)

    @classmethod
    def _coef_de_json(cls, dado):
        return Fraction(dado)

    def para_json(self) -> dict:
        return {
            "exp_denom": self.exp_denom,
            "trunc": self.trunc,
            "coeffs": [[n, self._coef_json(c)] for n, c in self.items()],
        }

    @classmethod
    def de_json(cls, dados: dict):
        return cls(
            {int(n): cls._coef_de_json(c) for n, c in dados["coeffs"]},
            int(dados["trunc"]),
            int(dados["exp_denom"]),
        )

    def __repr__(self):
        termos = []
        for n, c in self.items()[:8]:
            e = Fraction(n, self.exp_denom)
            termos.append(f"({c})q^{e}")
        cauda = " + ..." if len(self._coeffs) > 8 else ""
        return f"{type(self).__name__}[{' + '.join(termos) or '0'}{cauda} + O(q^{Fraction(self.trunc, self.exp_denom)})]"


# -- operações nomeadas ------------------------------------------------------


def qs_add(a: QSeries, b: QSeries) -> QSeries:
    return a + b


def qs_mul(a: QSeries, b: QSeries) -> QSeries:
    return a * b


def qs_neg(a: QSeries) -> QSeries:
    return -a


def qs_invert(a: QSeries) -> QSeries:
    return a.inverso()


def qs_exp(a: QSeries) -> QSeries:
    return a.exp()


def qs_log(a: QSeries) -> QSeries:
    return a.log()


def qs_scale_q(a: QSeries, N: int) -> QSeries:
    return a.escalar_q(N)


def qs_pow(a: QSeries, e: int) -> QSeries:
    return a ** e


def qs_shift(a: QSeries, k: int) -> QSeries:
    return a.deslocar(k)


def produto_infinito(termos: Iterable[Tuple[int, int, int]], trunc: int) -> QSeries:
    """Π_{m≥1} (1 + sinal·q^{c·m})^e para cada termo (c, e, sinal), até q^trunc.

    Cada fator é aplicado in loco sobre a lista densa de coeficientes
    inteiros: multiplicar percorre de trás para frente, dividir de frente
    para trás.
    """
    A = [0] * max(trunc, 0)
    if trunc <= 0:
        return QSeries.zero(trunc)
    A[0] = 1
    for c, e, sinal in termos:
        m = 1
        while c * m < trunc:
            passo = c * m
            if e > 0:
                for _ in range(e):
                    for n in range(trunc - 1, passo - 1, -1):
                        A[n] += sinal * A[n - passo]
            else:
                for _ in range(-e):
                    for n in range(passo, trunc):
                        A[n] -= sinal * A[n - passo]
            m += 1
    return QSeries._cru({n: Fraction(a) for n, a in enumerate(A) if a}, trunc, 1)
