from fractions import Fraction

import numpy as np
import pytest

from reticulado.classes import (CurveClass, InvariantTriple, MukaiVector, Tipo, mukai_invariants,
                                orbit_representative)
from reticulado.cohomologia import (exp_t_lambda, exp_t_lambda_fechada, t_lambda, triple_intersection,
                                    vetor_base, vetor_h2, wt)
from reticulado.reflexoes import (Reticulado, from_M, invariantes_em_M, pairing, palavra_de_reflexoes,
                                  random_root, reflect, to_M)
from utils.excecoes import ErroDominio

RAIZ = (1, 0, 0, 0, 0, 0, 0, 0)
ZERO = CurveClass(0, 0)


def test_quadrado_e_divisibilidade_de_classes():
    assert CurveClass(1, 3).quadrado == 6
    assert CurveClass(0, 0, RAIZ).quadrado == -2
    assert CurveClass(2, 4).divisibilidade == 2
    assert CurveClass(1, 1).pairing(CurveClass(0, 1)) == 1


def test_divisao_de_classe():
    assert CurveClass(2, 4).dividir(2) == CurveClass(1, 2)
    with pytest.raises(ErroDominio):
        CurveClass(2, 4).dividir(3)


def test_componente_e8_com_oito_coordenadas():
    with pytest.raises(ErroDominio):
        CurveClass(1, 1, (1, 2))


def test_quadrado_de_mukai():
    assert MukaiVector(1, ZERO, -1).quadrado == 1
    assert MukaiVector(3, ZERO, 0).quadrado == -9


@pytest.mark.parametrize(
    "v, esperado",
    [
        (MukaiVector(1, ZERO, -1), InvariantTriple(1, 1, Tipo.IMPAR)),
        (MukaiVector(0, CurveClass(2, 2), 0), InvariantTriple(8, 2, Tipo.PAR)),
        (MukaiVector(0, CurveClass(2, 2), 1), InvariantTriple(8, 2, Tipo.IMPAR)),
        (MukaiVector(3, ZERO, 0), InvariantTriple(-9, 3, Tipo.IMPAR)),
    ],
)
def test_invariantes_de_mukai(v, esperado):
    assert mukai_invariants(v) == esperado


def test_vetor_nulo_sem_invariantes():
    with pytest.raises(ErroDominio):
        mukai_invariants(MukaiVector(0, ZERO, 0))


@pytest.mark.parametrize(
    "t",
    [
        InvariantTriple(3, 1, Tipo.IMPAR),
        InvariantTriple(-1, 1, Tipo.IMPAR),
        InvariantTriple(4, 1, Tipo.PAR),
        InvariantTriple(8, 2, Tipo.IMPAR),
        InvariantTriple(8, 2, Tipo.PAR),
        InvariantTriple(-9, 3, Tipo.IMPAR),
    ],
)
def test_representante_realiza_os_invariantes(t):
    assert mukai_invariants(orbit_representative(t)) == t


@pytest.mark.parametrize(
    "t",
    [InvariantTriple(4, 1, Tipo.IMPAR), InvariantTriple(4, 2, Tipo.PAR), InvariantTriple(3, 2, Tipo.IMPAR)],
)
def test_orbita_inexistente(t):
    with pytest.raises(ErroDominio, match="no such orbit"):
        orbit_representative(t)


def test_mergulho_em_M_dobra_o_quadrado():
    v = MukaiVector(2, CurveClass(1, 3, RAIZ), -1)
    w = to_M(v)
    assert pairing(Reticulado.M, w, w) == 2 * v.quadrado
    assert from_M(w) == v
    assert invariantes_em_M(w) == mukai_invariants(v)


def test_reflexao_e_involucao():
    rng = np.random.default_rng(11)
    delta = random_root(rng)
    assert pairing(Reticulado.M, delta, delta) == -2
    x = to_M(MukaiVector(1, CurveClass(2, 1), 3))
    assert list(reflect(Reticulado.M, reflect(Reticulado.M, x, delta), delta)) == list(x)


def test_reflexao_exige_raiz():
    with pytest.raises(ErroDominio):
        reflect(Reticulado.M, [0] * 12, [0] * 12)


def test_palavra_de_reflexoes_preserva_invariantes():
    rng = np.random.default_rng(3)
    v = MukaiVector(2, CurveClass(2, 4), 2)
    w = to_M(v)
    imagem = palavra_de_reflexoes(w, [random_root(rng) for _ in range(6)])
    assert invariantes_em_M(imagem) == mukai_invariants(v)


def test_interseccoes_triplas():
    assert triple_intersection("1", "1", "pt") == 1
    assert triple_intersection("s", "1", "f") == 1
    assert triple_intersection("1", "s", "s") == 0
    assert triple_intersection("1", "a1", "a1") == -2
    assert triple_intersection("s", "f", "pt") == 0


def test_pesos():
    assert [wt(n) for n in ("1", "s", "f", "a3", "pt")] == [-1, 1, -1, 0, 1]
    with pytest.raises(ErroDominio):
        wt("x")


def test_t_lambda_anula_H0_e_H4():
    lam = (1, 0, -1, 0, 0, 0, 0, 0)
    assert not any(t_lambda(lam, vetor_base("1")))
    assert not any(t_lambda(lam, vetor_base("pt")))


def test_exponencial_de_t_lambda_em_forma_fechada():
    lam = (1, 0, 0, 1, 0, 0, 0, 0)
    alpha = (0, 1, 0, 0, 0, 0, 2, 0)
    k, d, novo_alpha = exp_t_lambda_fechada(lam, 3, 2, alpha)
    imagem = exp_t_lambda(lam, vetor_h2(3, 2, alpha))
    assert imagem[1] == k
    assert imagem[2] == d
    assert tuple(imagem[3:11]) == novo_alpha
    assert imagem[0] == 0 and imagem[11] == 0
    assert isinstance(d, Fraction)


def test_exponencial_de_t_lambda_preserva_a_forma():
    rng = np.random.default_rng(5)
    for _ in range(100):
        lam = tuple(int(x) for x in rng.integers(-2, 3, size=8))
        x = vetor_h2(*(int(c) for c in rng.integers(-3, 4, size=2)), tuple(int(c) for c in rng.integers(-2, 3, size=8)))
        y = vetor_h2(*(int(c) for c in rng.integers(-3, 4, size=2)), tuple(int(c) for c in rng.integers(-2, 3, size=8)))
        ex, ey = exp_t_lambda(lam, x), exp_t_lambda(lam, y)
        assert all(Fraction(c).denominator == 1 for c in (*ex, *ey))
        antes = pairing(Reticulado.H2_Y, list(x[1:11]), list(y[1:11]))
        depois = pairing(Reticulado.H2_Y, [int(c) for c in ex[1:11]], [int(c) for c in ey[1:11]])
        assert depois == antes


def _caixa_de_mukai():
    for r in range(-4, 5):
        for n in range(-4, 5):
            for k in range(5):
                for d in range(5):
                    v = MukaiVector(r, CurveClass(k, d), n)
                    if not v.e_nulo():
                        yield v


def test_representante_preserva_invariantes_na_caixa():
    for v in _caixa_de_mukai():
        t = mukai_invariants(v)
        assert mukai_invariants(orbit_representative(t)) == t, str(v)


def test_paridade_do_quadrado_com_divisibilidade_um():
    for v in _caixa_de_mukai():
        t = mukai_invariants(v)
        if t.divisibilidade == 1:
            assert t.quadrado % 2 == (1 if t.tipo is Tipo.IMPAR else 0), str(v)


def test_palavras_de_reflexoes_com_componente_e8():
    rng = np.random.default_rng(2024)
    for _ in range(30):
        alpha = tuple(int(x) for x in rng.integers(-1, 2, size=8))
        r, n, k, d = (int(x) for x in rng.integers(-3, 4, size=4))
        v = MukaiVector(r, CurveClass(k, d, alpha), n)
        if v.e_nulo():
            continue
        imagem = palavra_de_reflexoes(to_M(v), [random_root(rng) for _ in range(4)])
        assert invariantes_em_M(imagem) == mukai_invariants(v), str(v)
