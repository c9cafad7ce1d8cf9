import json

import pytest

import main
from utils.excecoes import ErroTruncamento
from verificacao import suites
from verificacao.suites import ResultadoVerificacao


@pytest.fixture(autouse=True)
def sem_debug(monkeypatch):
    monkeypatch.delenv("DEBUG", raising=False)
    monkeypatch.delenv("ENRIQUES_CACHE_DIR", raising=False)


def _rodar(capsys, *argv):
    codigo = main.run(list(argv))
    return codigo, capsys.readouterr().out


def test_tabela_a(capsys):
    codigo, saida = _rodar(capsys, "table", "a", "--nmax", "4")
    assert codigo == 0
    assert saida == "n,value_num,value_den\n0,1,1\n1,16,1\n2,144,1\n3,960,1\n4,5264,1\n"


def test_tabela_vw(capsys):
    codigo, saida = _rodar(capsys, "table", "vw", "--rank", "1", "--nmax", "1")
    assert codigo == 0
    assert saida == (
        "kind,g,beta_k,beta_d,alpha_norm,divisibility,r,n,value_num,value_den\n"
        "VW,,0,0,0,1,1,-1,24,1\n"
        "VW,,0,0,0,1,1,0,2,1\n"
        "VW,,0,0,0,1,1,1,0,1\n"
    )


def test_tabela_omega_forma_p(capsys):
    codigo, saida = _rodar(capsys, "table", "omega", "--forma", "p", "--gmax", "1", "--qmax", "2")
    assert codigo == 0
    assert saida == "r,n,value_num,value_den\n0,0,1,1\n-1,1,2,1\n0,1,12,1\n1,1,2,1\n"


def test_tabela_omega_em_json(capsys):
    codigo, saida = _rodar(capsys, "table", "omega", "--gmax", "2", "--qmax", "2", "--json")
    assert codigo == 0
    linhas = {(r["g"], r["n"]): r["value"] for r in json.loads(saida)}
    assert linhas == {(1, 0): "1/1", (1, 1): "16/1", (2, 0): "0/1", (2, 1): "-2/1"}


def test_tabela_omega_usa_cache(capsys, monkeypatch, tmp_path):
    monkeypatch.setenv("ENRIQUES_CACHE_DIR", str(tmp_path))
    primeiro = _rodar(capsys, "table", "omega", "--gmax", "1", "--qmax", "3")
    segundo = _rodar(capsys, "table", "omega", "--gmax", "1", "--qmax", "3")
    assert primeiro == segundo
    assert (tmp_path / "omega_table__1_2.json").exists()


def test_serie_eta(capsys):
    codigo, saida = _rodar(capsys, "series", "eta", "--qmax", "2")
    assert codigo == 0
    assert saida == "q,value_num,value_den\n1/24,1,1\n25/24,-1,1\n"


def test_tabela_em_xlsx(capsys, tmp_path):
    caminho = tmp_path / "a.xlsx"
    codigo, saida = _rodar(capsys, "table", "a", "--nmax", "2", "--xlsx", "--saida", str(caminho))
    assert codigo == 0
    assert saida == ""
    assert caminho.exists()


@pytest.mark.parametrize(
    "argv",
    [
        ["series", "bogus"],
        ["table", "bogus"],
        ["table", "a", "--nmax", "0"],
        ["table", "a", "--json", "--csv"],
        ["table", "a", "--xlsx"],
        ["verify", "bogus"],
    ],
)
def test_argumentos_invalidos_saem_com_2(argv, capsys):
    assert main.run(argv) == 2


def test_truncamento_sai_com_3(monkeypatch, capsys):
    def falha(args):
        raise ErroTruncamento("tabela curta demais", limite="max_n=1")

    monkeypatch.setitem(main.TABELAS, "a", falha)
    assert main.run(["table", "a"]) == 3
    assert "Truncamento insuficiente" in capsys.readouterr().err


def test_verificacao_aprovada(capsys):
    codigo, saida = _rodar(capsys, "verify", "vanishing-lemma")
    assert codigo == 0
    assert saida.splitlines()[-1].startswith("TOTAL")
    assert "FAIL" not in saida


def test_verificacao_em_json(capsys):
    codigo, saida = _rodar(capsys, "verify", "reflections", "--seed", "0", "--json")
    assert codigo == 0
    registros = json.loads(saida)
    assert {r["suite"] for r in registros} == {"reflections"}
    assert all(r["status"] == "PASS" for r in registros)


def test_verificacao_reprovada_sai_com_1(monkeypatch, capsys):
    monkeypatch.setitem(suites.SUITES, "reflections", lambda limites: [ResultadoVerificacao("forçada", False)])
    codigo, saida = _rodar(capsys, "verify", "reflections")
    assert codigo == 1
    assert "FAIL" in saida.splitlines()[-1]
