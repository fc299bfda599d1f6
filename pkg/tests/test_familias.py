import numpy as np
import pytest

from src.errores import ErrorEntrada
from src.demostraciones import check_eres_proof, check_tableau_proof
from src.familias import (
    add_random_redundancy,
    construir_php_eres,
    gen_cphp,
    gen_ephp,
    gen_ephp_proof,
    gen_ext_layers,
    gen_php,
    gen_php_selfloops,
    php_clausulas,
    php_eres_proof,
    red,
    red_star,
    visibly_equivalent,
)
from src.familias.redundancia import reglas_agregadas
from src.nucleo import BOT, Program, Rule, enumerate_stable, is_tight
from src.tableau import EngineConfig, proof_length, solve


def test_php_tamanos():
    uno = gen_php(1)
    assert len(uno) == 7
    assert len(uno.atoms) == 4
    dos = gen_php(2)
    assert len(dos) == 21
    assert len(dos.atoms) == 12


def test_php_exige_n_positivo():
    with pytest.raises(ErrorEntrada):
        gen_php(0)


def test_php_restricciones():
    reglas = gen_php(1).rules
    assert Rule.de(BOT, "not p1_1") in reglas
    assert Rule.de(BOT, "p1_1", "p2_1") in reglas


def test_capas_de_extension():
    assert len(gen_ext_layers(2)) == 4
    assert gen_ext_layers(1) == ()
    assert Rule.de("e2_1_1", "p1_1") in gen_ext_layers(2)
    assert Rule.de("e2_1_1", "p1_2", "p3_1") in gen_ext_layers(2)


def test_cphp():
    assert gen_cphp(1).rules == gen_php(1).rules
    assert enumerate_stable(gen_cphp(2)) == set()


def test_php_clausulas():
    clausulas = php_clausulas(2)
    assert len(clausulas) == 9
    assert clausulas.num_vars == 6
    assert clausulas.nombre(4) == "p2_2"
    assert clausulas.enumerate_satisfying() == set()


def test_eres_del_palomar_trivial():
    tripletas, prueba = php_eres_proof(1)
    assert tripletas == ()
    assert sum(1 for p in prueba.pasos if not p.padres) == 3
    assert prueba.resoluciones() == 2
    assert prueba.es_refutacion()


@pytest.mark.parametrize("n", [2, 3])
def test_eres_del_palomar_valida(n):
    tripletas, prueba = php_eres_proof(n)
    assert check_eres_proof(php_clausulas(n), tripletas, prueba)


def test_eres_pasos_por_nivel():
    demostracion = construir_php_eres(3)
    assert set(demostracion.pasos_por_nivel) == {2, 3}
    assert all(pasos > 0 for pasos in demostracion.pasos_por_nivel.values())


def test_ephp_demostracion_valida():
    e, prueba = gen_ephp_proof(2)
    assert check_tableau_proof(gen_php(2), e, prueba)
    assert e.aplicar(gen_php(2)).rules == gen_ephp(2).rules


@pytest.mark.parametrize("n", [2, 3, 4])
def test_red_star_recupera_php(n):
    assert red_star(gen_ephp(n)).rules == gen_php(n).rules


def test_red_star_idempotente():
    php = gen_php(3)
    assert red(php).rules == php.rules
    assert red_star(red_star(gen_ephp(2))).rules == red_star(gen_ephp(2)).rules


def test_red_quita_cabezas_no_usadas():
    programa = Program([Rule.de("a", "not b"), Rule.de("b", "not a"), Rule.de("c", "a"), Rule.de("d", "c")])
    assert red(programa).rules == programa.rules[:3]
    assert red_star(programa).rules == programa.rules[:2]


def test_autolazos():
    programa = gen_php_selfloops(2)
    assert not is_tight(programa)
    assert Rule.de("p1_1", "p1_1") in programa.rules
    assert solve(programa).estado == "UNSAT"
    assert enumerate_stable(gen_php_selfloops(1)) == set()


def test_cantidad_de_redundancia():
    assert reglas_agregadas(10, 50) == 5
    assert reglas_agregadas(12, 450) == 54
    php = gen_php(10)
    assert len(add_random_redundancy(php, 10, 50, 1)) - len(php) == 5
    assert len(add_random_redundancy(php, 12, 450, 1)) - len(php) == 54


def test_redundancia_determinista():
    primera = add_random_redundancy(gen_php(3), 10, 200, 7)
    assert primera.rules == add_random_redundancy(gen_php(3), 10, 200, 7).rules
    assert primera.rules != add_random_redundancy(gen_php(3), 10, 200, 8).rules
    nuevas = primera.rules[len(gen_php(3)):]
    assert [r.head for r in nuevas] == [f"r{i}" for i in range(1, 21)]
    assert all(len(r.body) == 2 for r in nuevas)


def test_redundancia_preserva_equivalencia_visible(eleccion):
    redundante = add_random_redundancy(eleccion, 10, 100, 4)
    assert visibly_equivalent(eleccion, redundante, eleccion.atoms)
    assert red_star(redundante).rules == eleccion.rules


def test_redundancia_exige_atomos():
    with pytest.raises(ErrorEntrada):
        add_random_redundancy(Program([]), 10, 100, 0)


def test_equivalencia_visible():
    hecho = Program([Rule.de("a")])
    assert not visibly_equivalent(hecho, Program([]), {"a"})
    eleccion = Program([Rule.de("a", "not b"), Rule.de("b", "not a")])
    copia = Program([Rule.de("a", "not b"), Rule.de("b", "not a"), Rule.de("c", "a")])
    assert visibly_equivalent(eleccion, copia, {"a", "b"})
    assert not visibly_equivalent(eleccion, hecho, {"a"})
    with pytest.raises(ErrorEntrada):
        visibly_equivalent(eleccion, copia, {"z"})


@pytest.mark.lento
def test_equivalencia_visible_de_ephp():
    assert visibly_equivalent(gen_ephp(2), gen_php(2), gen_php(2).atoms, limite=200)


def _config_lookahead():
    return EngineConfig.preset("full", lookahead=True, alcance_corte="atoms")


@pytest.mark.parametrize("n", [3, pytest.param(4, marks=pytest.mark.lento), pytest.param(5, marks=pytest.mark.lento)])
def test_ephp_sin_decisiones_con_lookahead(n):
    resultado = solve(gen_ephp(n), None, _config_lookahead())
    assert resultado.estado == "UNSAT"
    assert resultado.stats.decisiones == 0


@pytest.mark.lento
def test_separacion_php():
    config = EngineConfig.preset("full", heuristica="lex")
    decisiones = [solve(gen_php(n), None, config).stats.decisiones for n in range(4, 9)]
    assert all(a < b for a, b in zip(decisiones, decisiones[1:]))
    assert all(b / a >= 2 for a, b in zip(decisiones[1:], decisiones[2:]))


@pytest.mark.lento
def test_longitud_polinomial_de_ephp():
    ns = np.array([3, 4, 5, 6, 7])
    longitudes = np.array([proof_length(gen_ephp_proof(n)[1]) for n in ns])
    pendiente = np.polyfit(np.log(ns), np.log(longitudes), 1)[0]
    assert pendiente < 7
