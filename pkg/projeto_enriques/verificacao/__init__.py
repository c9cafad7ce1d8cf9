"""
Verificação das identidades e saída de tabelas.

Componentes:
- suites.py: uma suíte por família de identidades (theta-identity, ..., reflections)
- orquestrador.py: OrquestradorVerificacao e a tabela PASS/FAIL
- exportador.py: DataFrames pandas em CSV, JSON e XLSX
- cache.py: CacheTabelas em ENRIQUES_CACHE_DIR
- configuracao.py: limites padrão em input_data/configuracoes
"""

from .cache import CacheTabelas
from .configuracao import aplicar_sobrescritas, carregar_limites
from .exportador import (COLUNAS_INVARIANTES, exportar, registros_para_dataframe,
                         renderizar, tabela_para_dataframe)
from .orquestrador import (OrquestradorVerificacao, resultados_para_json,
                           tabela_pass_fail)
from .suites import SUITES, ResultadoVerificacao

__version__ = "1.0.0"

__all__ = [
    "SUITES",
    "ResultadoVerificacao",
    "OrquestradorVerificacao",
    "tabela_pass_fail",
    "resultados_para_json",
    "CacheTabelas",
    "carregar_limites",
    "aplicar_sobrescritas",
    "COLUNAS_INVARIANTES",
    "exportar",
    "renderizar",
    "registros_para_dataframe",
    "tabela_para_dataframe",
]
