#!/usr/bin/env python3
"""
Limites padrão das suítes de verificação.

Os valores vêm de input_data/configuracoes/limites_verificacao.json; as
flags da CLI sobrescrevem chaves individuais.
"""

import json
from copy import deepcopy
from pathlib import Path
from typing import Any, Dict, Mapping, Optional

from utils.excecoes import ErroDominio
from utils.logging_config import get_logger

logger = get_logger(__name__)

ARQUIVO_LIMITES = "limites_verificacao.json"


def pasta_configuracoes_padrao() -> Path:
    projeto_root = Path(__file__).resolve().parent.parent.parent
    return projeto_root / "input_data" / "configuracoes"


def carregar_limites(pasta_configuracoes: Optional[str] = None) -> Dict[str, Dict[str, Any]]:
    """Dicionário suíte -> limites."""
    pasta = Path(pasta_configuracoes) if pasta_configuracoes else pasta_configuracoes_padrao()
    arquivo = pasta / ARQUIVO_LIMITES
    if not arquivo.exists():
        raise FileNotFoundError(f"Arquivo de limites não encontrado: {arquivo}")
    with open(arquivo, "r", encoding="utf-8") as f:
        limites = json.load(f)
    if not isinstance(limites, dict) or not all(isinstance(v, dict) for v in limites.values()):
        raise ErroDominio(f"{arquivo.name} deve mapear cada suíte para um objeto de limites")
    logger.debug(f"⚙️ Limites carregados de {arquivo}: {len(limites)} suítes")
    return limites


def aplicar_sobrescritas(limites: Mapping[str, Any], sobrescritas: Mapping[str, Any]) -> Dict[str, Any]:
    """Cópia de `limites` com as chaves presentes em `sobrescritas` (valores None ignorados).

    Só chaves já conhecidas pela suíte são aceitas; as demais são ignoradas
    com aviso em DEBUG.
    """
    resultado = deepcopy(dict(limites))
    for chave, valor in sobrescritas.items():
        if valor is None:
            continue
        if chave not in resultado:
            logger.debug(f"⚙️ Flag --{chave} não se aplica a esta suíte")
            continue
        if chave != "seed" and isinstance(valor, int) and valor <= 0:
            raise ErroDominio(f"--{chave} deve ser positivo: {valor}")
        resultado[chave] = valor
    return resultado
