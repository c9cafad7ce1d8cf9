#!/usr/bin/env python3
"""
Logging do projeto Enriques.

Construtores de tabelas, suítes de verificação e a CLI registram todos
pelo mesmo dictConfig: console em stderr (stdout é das tabelas e do JSON)
e, quando pedido, arquivo diário em output/logs.
"""

import functools
import logging
import logging.config
import os
import sys
import time
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, Mapping, Optional

NOME_LOGGER_RAIZ = "ENRIQUES"
FORMATO_CONSOLE = "%(levelname)-8s | %(message)s"
FORMATO_ARQUIVO = "%(asctime)s | %(levelname)-8s | %(name)s | %(module)s.%(funcName)s:%(lineno)d | %(message)s"
FORMATO_DATA = "%Y-%m-%d %H:%M:%S"
SEPARADOR = "=" * 80


class ColoredFormatter(logging.Formatter):
    """Nível colorido no console (só em TTY)."""

    CORES = {
        "DEBUG": "\033[36m",
        "INFO": "\033[32m",
        "WARNING": "\033[33m",
        "ERROR": "\033[31m",
        "CRITICAL": "\033[35m",
    }
    RESET = "\033[0m"

    def format(self, record):
        # cópia: o handler de arquivo recebe o mesmo registro sem ANSI
        record = logging.makeLogRecord(record.__dict__)
        record.levelname = f"{self.CORES.get(record.levelname, self.RESET)}{record.levelname}{self.RESET}"
        return super().format(record)


def _config_dict(log_level: str, log_file: Optional[str], colorido: bool) -> Dict[str, Any]:
    formatador_console: Dict[str, Any] = {"format": FORMATO_CONSOLE}
    if colorido:
        formatador_console["()"] = ColoredFormatter
    config: Dict[str, Any] = {
        "version": 1,
        "disable_existing_loggers": False,
        "formatters": {
            "console": formatador_console,
            "file": {"format": FORMATO_ARQUIVO, "datefmt": FORMATO_DATA},
        },
        "handlers": {
            "console": {
                "class": "logging.StreamHandler",
                "level": log_level,
                "formatter": "console",
                "stream": "ext://sys.stderr",
            }
        },
        "root": {"level": log_level, "handlers": ["console"]},
    }
    if log_file:
        config["handlers"]["file"] = {
            "class": "logging.FileHandler",
            "level": log_level,
            "formatter": "file",
            "filename": log_file,
            "mode": "a",
            "encoding": "utf-8",
        }
        config["root"]["handlers"].append("file")
    return config


def setup_logging(
    log_level: str = "INFO",
    log_file: Optional[str] = None,
    enable_colors: bool = True,
    module_name: Optional[str] = None,
) -> logging.Logger:
    """
    Aplica o dictConfig do projeto.

    Args:
        log_level: DEBUG, INFO, WARNING, ERROR ou CRITICAL
        log_file: arquivo de log adicional (opcional)
        enable_colors: colore o nível no console quando stderr é um terminal
        module_name: nome do logger devolvido (padrão: ENRIQUES)
    """
    if log_file:
        Path(log_file).parent.mkdir(parents=True, exist_ok=True)
    logging.config.dictConfig(_config_dict(log_level.upper(), log_file, enable_colors and sys.stderr.isatty()))
    return logging.getLogger(module_name or NOME_LOGGER_RAIZ)


def get_logger(name: str, log_file: Optional[str] = None) -> logging.Logger:
    """Logger do módulo; configura o root em WARNING (ou LOG_LEVEL) se ninguém configurou ainda."""
    if logging.getLogger().handlers:
        return logging.getLogger(name)
    return setup_logging(os.getenv("LOG_LEVEL", "WARNING"), log_file=log_file, module_name=name)


class LoggerContextManager:
    """Início, fim e duração de um construtor pesado (tabela ω, enumeração E8, F^KM)."""

    def __init__(self, logger: logging.Logger, step: str, operation: str):
        self.logger = logger
        self.step = step
        self.operation = operation
        self.inicio = 0.0

    def __enter__(self):
        self.inicio = time.perf_counter()
        self.logger.info(f"🚀 {self.step}: {self.operation}")
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        duracao = time.perf_counter() - self.inicio
        if exc_type is None:
            self.logger.info(f"✅ {self.step} em {duracao:.2f}s")
        else:
            self.logger.error(f"❌ {self.step} interrompido após {duracao:.2f}s: {exc_val}")
        return False


def log_step(step: str, operation: str):
    """Decorator que envolve o construtor num LoggerContextManager do seu módulo."""

    def decorator(func):
        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            with LoggerContextManager(logging.getLogger(func.__module__), step, operation):
                return func(*args, **kwargs)

        return wrapper

    return decorator


def configure_project_logging(log_level: Optional[str] = None) -> logging.Logger:
    """Console + output/logs/enriques_AAAAMMDD.log; nível de LOG_LEVEL (padrão INFO)."""
    project_root = Path(__file__).resolve().parents[2]
    log_file = project_root / "output" / "logs" / f"enriques_{datetime.now().strftime('%Y%m%d')}.log"
    nivel = log_level or os.getenv("LOG_LEVEL", "INFO")
    logger = setup_logging(log_level=nivel, log_file=str(log_file))
    logger.debug(f"🎯 Logging configurado: nível {nivel}, arquivo {log_file}")
    return logger


def _logger_ou_raiz(logger: Optional[logging.Logger]) -> logging.Logger:
    return logger if logger is not None else logging.getLogger(NOME_LOGGER_RAIZ)


def log_inicio_passo(passo: str, descricao: str, logger: Optional[logging.Logger] = None):
    logger = _logger_ou_raiz(logger)
    logger.info(SEPARADOR)
    logger.info(f"🚀 INICIANDO {passo}: {descricao}")


def log_fim_passo(passo: str, descricao: str, estatisticas: Optional[Mapping[str, Any]] = None,
                  logger: Optional[logging.Logger] = None):
    logger = _logger_ou_raiz(logger)
    resumo = ", ".join(f"{chave}={valor}" for chave, valor in (estatisticas or {}).items())
    logger.info(f"✅ FINALIZADO {passo}: {descricao}" + (f" | 📊 {resumo}" if resumo else ""))
    logger.info(SEPARADOR)


def log_erro_critico(mensagem: str, erro: Optional[Exception] = None, logger: Optional[logging.Logger] = None):
    logger = _logger_ou_raiz(logger)
    if erro is None:
        logger.critical(f"💀 ERRO CRÍTICO: {mensagem}")
        return
    logger.critical(f"💀 ERRO CRÍTICO: {mensagem} ({type(erro).__name__}: {erro})", exc_info=erro)


def log_resultado_validacao(tipo: str, validos: int, invalidos: int, logger: Optional[logging.Logger] = None):
    """Contagem PASS/FAIL de uma suíte; FAIL sobe para WARNING."""
    logger = _logger_ou_raiz(logger)
    total = validos + invalidos
    nivel = logging.WARNING if invalidos else logging.INFO
    logger.log(nivel, f"📋 {tipo}: ✅ PASS {validos} | ❌ FAIL {invalidos} | 📊 Total {total}")
