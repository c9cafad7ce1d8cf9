#!/usr/bin/env python3
"""
Memória em disco das tabelas, em arquivos JSON `{construtor}__{limites}.json`.

Ativada pela variável ENRIQUES_CACHE_DIR; sem ela `CacheTabelas.do_ambiente()`
devolve None e os construtores recalculam tudo.
"""

import json
import os
from pathlib import Path
from typing import Any, Callable, Optional

from utils.logging_config import get_logger

logger = get_logger(__name__)

VARIAVEL_AMBIENTE = "ENRIQUES_CACHE_DIR"


class CacheTabelas:
    def __init__(self, diretorio: str):
        self.diretorio = Path(diretorio)
        self.diretorio.mkdir(parents=True, exist_ok=True)

    @classmethod
    def do_ambiente(cls) -> Optional["CacheTabelas"]:
        diretorio = os.getenv(VARIAVEL_AMBIENTE)
        return cls(diretorio) if diretorio else None

    def caminho(self, construtor: str, *limites) -> Path:
        sufixo = "_".join(str(x) for x in limites) or "padrao"
        return self.diretorio / f"{construtor}__{sufixo}.json"

    def salvar(self, construtor: str, limites: tuple, dados: Any):
        arquivo = self.caminho(construtor, *limites)
        try:
            with open(arquivo, "w", encoding="utf-8") as f:
                json.dump(dados, f, indent=2, ensure_ascii=False, sort_keys=True)
            logger.info(f"💾 Cache salvo: {arquivo.name}")
        except OSError as e:
            logger.error(f"❌ Erro ao salvar cache {arquivo.name}: {e}")

    def carregar(self, construtor: str, limites: tuple) -> Optional[Any]:
        """Conteúdo do arquivo, ou None se ausente ou corrompido."""
        arquivo = self.caminho(construtor, *limites)
        if not arquivo.exists():
            return None
        try:
            with open(arquivo, "r", encoding="utf-8") as f:
                dados = json.load(f)
            logger.debug(f"📂 Cache carregado: {arquivo.name}")
            return dados
        except (OSError, json.JSONDecodeError) as e:
            logger.warning(f"⚠️ Cache corrompido ignorado ({arquivo.name}): {e}")
            return None

    def obter(self, construtor: str, limites: tuple, calcular: Callable[[], Any],
              para_json: Callable[[Any], Any], de_json: Callable[[Any], Any]) -> Any:
        """Lê do disco se possível; senão calcula e grava."""
        dados = self.carregar(construtor, limites)
        if dados is not None:
            try:
                return de_json(dados)
            except (KeyError, TypeError, ValueError) as e:
                logger.warning(f"⚠️ Cache ilegível para {construtor}: {e}")
        valor = calcular()
        self.salvar(construtor, limites, para_json(valor))
        return valor
