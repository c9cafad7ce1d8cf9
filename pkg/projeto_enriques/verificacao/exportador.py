#!/usr/bin/env python3
"""
Exportação de tabelas em CSV, JSON e XLSX via pandas.

Racionais nunca viram float: no CSV e no XLSX aparecem como as colunas
inteiras value_num/value_den, no JSON como a string "num/den".
"""

import io
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Optional, Sequence

import pandas as pd

from invariantes.registros import InvariantRecord
from series.plaurent import PLaurent
from series.racional import formatar_racional
from utils.excecoes import ErroDominio
from utils.logging_config import get_logger

logger = get_logger(__name__)

COLUNAS_INVARIANTES = ["g", "beta_k", "beta_d", "alpha_norm", "divisibility", "value_num", "value_den"]
FORMATOS = ("csv", "json", "xlsx")


def registros_para_dataframe(registros: Iterable[InvariantRecord]) -> pd.DataFrame:
    """Uma linha por registro; valores PLaurent abrem uma linha por potência de p (coluna p)."""
    linhas = []
    com_p = False
    for reg in registros:
        beta = reg.beta
        base = {
            "kind": reg.tipo.value,
            "g": reg.g,
            "beta_k": beta.k if beta is not None else None,
            "beta_d": beta.d if beta is not None else None,
            "alpha_norm": beta.norma_alpha if beta is not None else None,
            "divisibility": reg.divisibilidade,
        }
        if reg.mukai is not None:
            base["r"] = reg.mukai.r
            base["n"] = reg.mukai.n
        if isinstance(reg.valor, PLaurent):
            com_p = True
            for r, c in reg.valor.items():
                linhas.append({**base, "p": r, "value_num": c.numerator, "value_den": c.denominator})
        else:
            valor = Fraction(reg.valor)
            linhas.append({**base, "value_num": valor.numerator, "value_den": valor.denominator})
    colunas = ["kind", "g", "beta_k", "beta_d", "alpha_norm", "divisibility"]
    if any("r" in linha for linha in linhas):
        colunas += ["r", "n"]
    if com_p:
        colunas.append("p")
    colunas += ["value_num", "value_den"]
    df = pd.DataFrame(linhas, columns=colunas)
    # colunas opcionais ficam com inteiros anuláveis, sem virar float
    for coluna in colunas[1:]:
        df[coluna] = df[coluna].astype("Int64")
    return df


def tabela_para_dataframe(colunas: Sequence[str], linhas: Iterable[Sequence]) -> pd.DataFrame:
    """Linhas cujo último elemento é racional; ele vira value_num/value_den."""
    dados = []
    for linha in linhas:
        *chaves, valor = linha
        valor = Fraction(valor)
        dados.append([*chaves, valor.numerator, valor.denominator])
    df = pd.DataFrame(dados, columns=[*colunas, "value_num", "value_den"])
    for coluna in df.columns:
        if pd.api.types.is_integer_dtype(df[coluna]):
            df[coluna] = df[coluna].astype("Int64")
    return df


def _para_json(df: pd.DataFrame) -> str:
    saida = df.copy()
    if "value_num" in saida.columns:
        saida["value"] = [
            formatar_racional(Fraction(int(n), int(d))) for n, d in zip(saida["value_num"], saida["value_den"])
        ]
        saida = saida.drop(columns=["value_num", "value_den"])
    return saida.to_json(orient="records", force_ascii=False, indent=2) + "\n"


def renderizar(df: pd.DataFrame, formato: str) -> str:
    """Texto determinístico da tabela em csv ou json."""
    if formato == "csv":
        buffer = io.StringIO()
        df.to_csv(buffer, index=False, lineterminator="\n")
        return buffer.getvalue()
    if formato == "json":
        return _para_json(df)
    raise ErroDominio(f"formato textual desconhecido: {formato}")


def escrever_xlsx(df: pd.DataFrame, caminho: str, nome_aba: str = "tabela") -> str:
    """Planilha com cabeçalho em negrito (engine openpyxl)."""
    from openpyxl.styles import Alignment, Font, PatternFill

    caminho = Path(caminho)
    caminho.parent.mkdir(parents=True, exist_ok=True)
    with pd.ExcelWriter(caminho, engine="openpyxl") as writer:
        df.to_excel(writer, sheet_name=nome_aba, index=False)
        worksheet = writer.sheets[nome_aba]
        fonte = Font(bold=True, color="000000")
        preenchimento = PatternFill(start_color="D7E4BC", end_color="D7E4BC", fill_type="solid")
        centro = Alignment(horizontal="center", vertical="center")
        for col in range(1, len(df.columns) + 1):
            cell = worksheet.cell(row=1, column=col)
            cell.font = fonte
            cell.fill = preenchimento
            cell.alignment = centro
    logger.info(f"📊 Planilha gerada com {len(df)} linhas: {caminho}")
    return str(caminho)


def exportar(df: pd.DataFrame, formato: str, saida: Optional[str] = None, nome_aba: str = "tabela") -> Optional[str]:
    """Escreve em `saida` (ou devolve o texto, para csv/json sem arquivo)."""
    if formato not in FORMATOS:
        raise ErroDominio(f"formato desconhecido: {formato} (use {', '.join(FORMATOS)})")
    if formato == "xlsx":
        if not saida:
            raise ErroDominio("--xlsx exige --saida")
        escrever_xlsx(df, saida, nome_aba)
        return None
    texto = renderizar(df, formato)
    if saida:
        caminho = Path(saida)
        caminho.parent.mkdir(parents=True, exist_ok=True)
        with open(caminho, "w", encoding="utf-8", newline="") as f:
            f.write(texto)
        logger.info(f"💾 Tabela salva: {caminho}")
        return None
    return texto

