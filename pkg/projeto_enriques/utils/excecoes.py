#!/usr/bin/env python3
"""
Hierarquia de exceções do projeto Enriques.

A CLI traduz cada família em um código de saída:
ErroTruncamento -> 3, ErroDominio nos argumentos -> 2.
"""

from typing import Optional


class ErroEnriques(Exception):
    """Base de todos os erros da biblioteca."""


class ErroDominio(ErroEnriques, ValueError):
    """Pré-condição violada pela entrada (série não invertível, vetor nulo, ...)."""


class ErroTruncamento(ErroEnriques, ValueError):
    """Truncamento insuficiente para determinar o resultado pedido."""

    def __init__(self, mensagem: str, limite: Optional[str] = None):
        super().__init__(mensagem)
        self.limite = limite

    def __str__(self):
        base = super().__str__()
        if self.limite:
            return f"{base} [limite: {self.limite}]"
        return base


class ErroConsistencia(ErroEnriques, AssertionError):
    """Duas construções independentes do mesmo objeto discordam."""
