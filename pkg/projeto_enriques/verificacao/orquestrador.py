#!/usr/bin/env python3
"""
Orquestrador das suítes de verificação.
Roda as suítes pedidas (opcionalmente em paralelo), junta os resultados na
ordem fixa de SUITES e monta a tabela PASS/FAIL impressa pela CLI.
"""

from concurrent.futures import ThreadPoolExecutor
from datetime import datetime
from typing import Any, Dict, List, Mapping, Optional, Sequence

from utils.excecoes import ErroDominio
from utils.logging_config import (get_logger, log_fim_passo, log_inicio_passo,
                                  log_resultado_validacao)
from verificacao.configuracao import aplicar_sobrescritas, carregar_limites
from verificacao.suites import SUITES, ResultadoVerificacao

logger = get_logger(__name__)


class OrquestradorVerificacao:
    """Coordena a execução das suítes e o relatório final."""

    def __init__(self, limites: Optional[Dict[str, Dict[str, Any]]] = None,
                 sobrescritas: Optional[Mapping[str, Any]] = None):
        self.limites = limites if limites is not None else carregar_limites()
        self.sobrescritas = dict(sobrescritas or {})
        self.resultados: Dict[str, Any] = {
            "inicio_processamento": datetime.now().isoformat(),
            "suites_concluidas": [],
            "status": "iniciado",
            "aprovado": False,
        }

    def _validar_alvos(self, alvos: Sequence[str]) -> List[str]:
        if not alvos or list(alvos) == ["all"]:
            return list(SUITES)
        desconhecidos = [a for a in alvos if a not in SUITES]
        if desconhecidos:
            raise ErroDominio(f"suíte desconhecida: {', '.join(desconhecidos)} (use {', '.join(SUITES)})")
        # ordem fixa, independente da ordem pedida
        return [nome for nome in SUITES if nome in alvos]

    def limites_da_suite(self, nome: str) -> Dict[str, Any]:
        return aplicar_sobrescritas(self.limites.get(nome, {}), self.sobrescritas)

    def _executar_suite(self, nome: str) -> List[ResultadoVerificacao]:
        limites = self.limites_da_suite(nome)
        log_inicio_passo(nome.upper(), f"Suíte de verificação {limites}", logger)
        resultados = SUITES[nome](limites)
        aprovados = sum(r.aprovado for r in resultados)
        log_resultado_validacao(nome, aprovados, len(resultados) - aprovados, logger)
        log_fim_passo(nome.upper(), "Suíte de verificação",
                      {"verificações": sum(r.verificados for r in resultados), "aprovadas": aprovados}, logger)
        return resultados

    def executar(self, alvos: Sequence[str], paralelo: bool = False) -> Dict[str, List[ResultadoVerificacao]]:
        """Suíte -> resultados, sempre na ordem de SUITES."""
        nomes = self._validar_alvos(alvos)
        if paralelo and len(nomes) > 1:
            with ThreadPoolExecutor(max_workers=min(len(nomes), 4)) as executor:
                futuros = {nome: executor.submit(self._executar_suite, nome) for nome in nomes}
                por_suite = {nome: futuros[nome].result() for nome in nomes}
        else:
            por_suite = {nome: self._executar_suite(nome) for nome in nomes}

        aprovado = all(r.aprovado for resultados in por_suite.values() for r in resultados)
        self.resultados.update(
            {
                "status": "concluido",
                "fim_processamento": datetime.now().isoformat(),
                "suites_concluidas": nomes,
                "aprovado": aprovado,
            }
        )
        logger.info(f"🎯 Verificação {'APROVADA' if aprovado else 'REPROVADA'}: {len(nomes)} suítes")
        return por_suite


def tabela_pass_fail(por_suite: Mapping[str, List[ResultadoVerificacao]]) -> str:
    """Tabela de texto determinística: suíte | verificação | status | detalhe."""
    linhas = []
    largura_suite = max((len(s) for s in por_suite), default=5)
    for suite, resultados in por_suite.items():
        for r in resultados:
            detalhe = f"  ({r.detalhe})" if r.detalhe else ""
            linhas.append(f"{suite:<{largura_suite}}  {r.status}  {r.nome}{detalhe}")
    total = sum(len(rs) for rs in por_suite.values())
    falhas = sum(not r.aprovado for rs in por_suite.values() for r in rs)
    linhas.append(f"{'TOTAL':<{largura_suite}}  {'PASS' if not falhas else 'FAIL'}  {total - falhas}/{total}")
    return "\n".join(linhas) + "\n"


def resultados_para_json(por_suite: Mapping[str, List[ResultadoVerificacao]]) -> List[Dict[str, Any]]:
    return [
        {"suite": suite, "check": r.nome, "status": r.status, "detail": r.detalhe, "checked": r.verificados}
        for suite, resultados in por_suite.items()
        for r in resultados
    ]
