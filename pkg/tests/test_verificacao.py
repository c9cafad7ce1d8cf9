import json
from fractions import Fraction

import pandas as pd
import pytest

from invariantes.registros import InvariantRecord
from reticulado.classes import CurveClass
from series.plaurent import PLaurent
from utils.excecoes import ErroDominio
from verificacao.cache import VARIAVEL_AMBIENTE, CacheTabelas
from verificacao.configuracao import ARQUIVO_LIMITES, aplicar_sobrescritas, carregar_limites
from verificacao.exportador import exportar, registros_para_dataframe, renderizar, tabela_para_dataframe
from verificacao.orquestrador import OrquestradorVerificacao, resultados_para_json, tabela_pass_fail
from verificacao.suites import SUITES, ResultadoVerificacao

LIMITES_PEQUENOS = {
    "theta-identity": {"qmax": 8, "z_ordem": 5},
    "genus1-borcherds": {"nmax": 10, "kmax": 2, "kparticao": 2, "gparticao": 2},
    "km-pt-bridge": {"max_quadrado": 8, "kmax": 1, "norm": 2},
    "gw-pt-expansion": {"max_quadrado": 8, "gmax": 3, "dmax": 8},
    "recursion": {"kmax": 2, "dmax": 2, "norm": 2},
    "vw-modularity": {"rank": 2, "qmax": 8, "nmax": 4},
    "dt-dependence": {"nmax": 2, "kmax": 2, "dmax": 2, "max_quadrado": 8},
    "hecke-dependence": {"ell": 3, "gmax": 2, "dmax": 3, "norm": 4, "norma_amostra": 2},
    "vanishing-lemma": {"modulos": [3], "pesos": [2, 4], "qmax": 30},
    "eta-ring": {"qmax": 30, "generos": [2]},
    "reflections": {"palavras": 20, "comprimento_max": 3, "seed": 7, "nmax": 3},
}


# -- configuração -------------------------------------------------------------


def test_limites_padrao_cobrem_todas_as_suites():
    assert set(carregar_limites()) == set(SUITES)


def test_limites_pequenos_usam_as_mesmas_chaves():
    padrao = carregar_limites()
    assert all(set(LIMITES_PEQUENOS[nome]) == set(padrao[nome]) for nome in SUITES)


def test_arquivo_de_limites_ausente(tmp_path):
    with pytest.raises(FileNotFoundError):
        carregar_limites(str(tmp_path))


@pytest.mark.parametrize("conteudo", [[1, 2], {"eta-ring": 40}])
def test_arquivo_de_limites_malformado(tmp_path, conteudo):
    (tmp_path / ARQUIVO_LIMITES).write_text(json.dumps(conteudo), encoding="utf-8")
    with pytest.raises(ErroDominio):
        carregar_limites(str(tmp_path))


def test_sobrescritas_so_em_chaves_conhecidas():
    limites = {"qmax": 20, "z_ordem": 9}
    resultado = aplicar_sobrescritas(limites, {"qmax": 8, "nmax": 3, "z_ordem": None})
    assert resultado == {"qmax": 8, "z_ordem": 9}
    assert limites == {"qmax": 20, "z_ordem": 9}


def test_sobrescrita_nao_positiva():
    with pytest.raises(ErroDominio):
        aplicar_sobrescritas({"qmax": 20}, {"qmax": 0})


def test_semente_zero_e_aceita():
    assert aplicar_sobrescritas({"seed": 2024}, {"seed": 0}) == {"seed": 0}


# -- cache --------------------------------------------------------------------


def test_cache_calcula_uma_vez(tmp_path):
    cache = CacheTabelas(str(tmp_path))
    chamadas = []

    def calcular():
        chamadas.append(1)
        return {"n": [1, 16, 144]}

    primeiro = cache.obter("a", (2,), calcular, dict, dict)
    segundo = cache.obter("a", (2,), calcular, dict, dict)
    assert primeiro == segundo == {"n": [1, 16, 144]}
    assert len(chamadas) == 1
    assert cache.caminho("a", 2).name == "a__2.json"


def test_cache_corrompido_e_recalculado(tmp_path):
    cache = CacheTabelas(str(tmp_path))
    cache.caminho("omega", 1, 2).write_text("{", encoding="utf-8")
    assert cache.carregar("omega", (1, 2)) is None
    assert cache.obter("omega", (1, 2), lambda: [3], list, list) == [3]
    assert json.loads(cache.caminho("omega", 1, 2).read_text(encoding="utf-8")) == [3]


def test_cache_do_ambiente(tmp_path, monkeypatch):
    monkeypatch.delenv(VARIAVEL_AMBIENTE, raising=False)
    assert CacheTabelas.do_ambiente() is None
    monkeypatch.setenv(VARIAVEL_AMBIENTE, str(tmp_path / "cache"))
    cache = CacheTabelas.do_ambiente()
    assert cache is not None and cache.diretorio.is_dir()


# -- exportação ---------------------------------------------------------------


@pytest.fixture
def tabela_simples():
    return tabela_para_dataframe(["n"], [(0, 1), (1, Fraction(1, 2)), (2, Fraction(-3, 4))])


def test_csv_com_racionais_exatos(tabela_simples):
    assert renderizar(tabela_simples, "csv") == "n,value_num,value_den\n0,1,1\n1,1,2\n2,-3,4\n"


def test_json_com_racionais_em_texto(tabela_simples):
    registros = json.loads(renderizar(tabela_simples, "json"))
    assert registros == [{"n": 0, "value": "1/1"}, {"n": 1, "value": "1/2"}, {"n": 2, "value": "-3/4"}]


def test_registros_com_plaurent_abrem_coluna_p():
    registro = InvariantRecord("PT-f", PLaurent({-1: 2, 0: 12, 1: 2}), beta=CurveClass(1, 1))
    df = registros_para_dataframe([registro])
    assert list(df.columns) == ["kind", "g", "beta_k", "beta_d", "alpha_norm", "divisibility", "p",
                                "value_num", "value_den"]
    assert df["p"].tolist() == [-1, 0, 1]
    assert df["value_num"].tolist() == [2, 12, 2]


def test_xlsx_exige_saida(tabela_simples):
    with pytest.raises(ErroDominio):
        exportar(tabela_simples, "xlsx")


def test_formato_desconhecido(tabela_simples):
    with pytest.raises(ErroDominio):
        exportar(tabela_simples, "parquet")


def test_xlsx_preserva_linhas(tabela_simples, tmp_path):
    caminho = tmp_path / "saida" / "tabela.xlsx"
    assert exportar(tabela_simples, "xlsx", str(caminho)) is None
    lido = pd.read_excel(caminho, sheet_name="tabela")
    assert list(lido.columns) == ["n", "value_num", "value_den"]
    assert lido["value_num"].tolist() == [1, 1, -3]
    assert lido["value_den"].tolist() == [1, 2, 4]


def test_csv_em_arquivo(tabela_simples, tmp_path):
    caminho = tmp_path / "tabela.csv"
    assert exportar(tabela_simples, "csv", str(caminho)) is None
    assert caminho.read_text(encoding="utf-8") == renderizar(tabela_simples, "csv")


# -- orquestrador -------------------------------------------------------------


def test_ordem_fixa_das_suites():
    orquestrador = OrquestradorVerificacao(limites=LIMITES_PEQUENOS)
    por_suite = orquestrador.executar(["reflections", "vanishing-lemma"])
    assert list(por_suite) == ["vanishing-lemma", "reflections"]
    assert orquestrador.resultados["status"] == "concluido"
    assert orquestrador.resultados["aprovado"]


def test_suite_desconhecida():
    with pytest.raises(ErroDominio):
        OrquestradorVerificacao(limites=LIMITES_PEQUENOS).executar(["bogus"])


def test_paralelo_igual_ao_serial():
    alvos = ["vanishing-lemma", "reflections", "vw-modularity"]
    serial = OrquestradorVerificacao(limites=LIMITES_PEQUENOS).executar(alvos)
    paralelo = OrquestradorVerificacao(limites=LIMITES_PEQUENOS).executar(alvos, paralelo=True)
    assert serial == paralelo


def test_sobrescritas_chegam_a_suite():
    orquestrador = OrquestradorVerificacao(limites=LIMITES_PEQUENOS, sobrescritas={"seed": 11, "qmax": 12})
    assert orquestrador.limites_da_suite("reflections")["seed"] == 11
    assert orquestrador.limites_da_suite("vanishing-lemma")["qmax"] == 12


def test_tabela_pass_fail():
    por_suite = {"eta-ring": [ResultadoVerificacao("a", True, "x", 3), ResultadoVerificacao("b", False)]}
    assert tabela_pass_fail(por_suite) == (
        "eta-ring  PASS  a  (x)\n"
        "eta-ring  FAIL  b\n"
        "TOTAL     FAIL  1/2\n"
    )
    assert resultados_para_json(por_suite)[0] == {
        "suite": "eta-ring", "check": "a", "status": "PASS", "detail": "x", "checked": 3,
    }


# -- suítes -------------------------------------------------------------------


@pytest.mark.parametrize("nome", list(SUITES))
def test_suite_com_limites_pequenos(nome):
    resultados = SUITES[nome](LIMITES_PEQUENOS[nome])
    assert resultados
    reprovados = [r.nome for r in resultados if not r.aprovado]
    assert not reprovados


@pytest.mark.lento
def test_todas_as_suites_com_limites_padrao():
    orquestrador = OrquestradorVerificacao()
    por_suite = orquestrador.executar(["all"])
    assert list(por_suite) == list(SUITES)
    assert orquestrador.resultados["aprovado"]
