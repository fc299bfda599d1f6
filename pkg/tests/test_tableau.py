import logging
import random

import pytest

from src.errores import ErrorConfiguracion, ErrorExtension, ErrorPrecondicion, LimiteExcedido, TiempoAgotado
from src.demostraciones import check_tableau_proof
from src.familias import gen_ephp, gen_php
from src.nucleo import BOT, Body, Literal, Program, Rule, enumerate_stable, is_stable, is_tight
from src.tableau import (
    Branch,
    EngineConfig,
    Entry,
    ExtensionSet,
    cut,
    extend,
    lookahead,
    proof_length,
    propagate,
    solve,
)
from src.tableau.entradas import CORTE


def test_config_predefinida():
    assert EngineConfig.preset("smodels").alcance_corte == "atoms"
    assert EngineConfig.preset("full").alcance_corte == "atoms+bodies"
    assert EngineConfig.preset("supported").semantica == "supported-model semantics"


@pytest.mark.parametrize("cambios", [
    dict(reglas="otra"),
    dict(heuristica="vsids"),
    dict(reglas="smodels", alcance_corte="atoms+bodies"),
    dict(limite_segundos=0),
])
def test_config_invalida(cambios):
    es_valido, mensaje = EngineConfig(**cambios).validar()
    assert not es_valido and mensaje
    with pytest.raises(ErrorConfiguracion):
        EngineConfig(**cambios).exigir_valida()


def test_propagate_tras_cortar_a(pi0):
    rama_t, _ = cut(Branch.inicial(), "a", pi0)
    rama = propagate(pi0, ExtensionSet(), rama_t)
    # (f) precede a (i§): el cuerpo con not a cae antes de exigir un soporte
    assert rama.entradas == [Entry(False, BOT), Entry(True, "a"), Entry(False, Body.de("b", "not a")), Entry(False, "a")]
    assert [n.rule for n in rama.nodos[2:]] == ["f", "h§"]
    assert rama.contradictoria


def test_propagate_pi1_reglas_completas(pi1):
    rama = propagate(pi1, ExtensionSet(), Branch.inicial(), EngineConfig.preset("full"))
    assert Entry(False, Body.de("not a")) in rama.entradas
    assert Entry(True, "a") in rama.entradas
    assert rama.contradictoria


def test_propagate_pi1_reglas_soportadas(pi1):
    rama = propagate(pi1, ExtensionSet(), Branch.inicial(), EngineConfig.preset("supported"))
    assert not rama.contradictoria
    assert Entry(True, "a") in rama.entradas
    assert Entry(True, "b") in rama.entradas


def test_cut(pi0):
    rama_t, rama_f = cut(Branch.inicial(), "a", pi0)
    assert rama_t.hoja.entry == Entry(True, "a")
    assert rama_f.hoja.entry == Entry(False, "a")
    assert rama_t.hoja.rule == CORTE
    cuerpo = Body.de("b", "not a")
    assert cut(Branch.inicial(), cuerpo, pi0)[0].hoja.entry == Entry(True, cuerpo)


def test_cut_rechaza_objetos_asignados_o_fuera_de_alcance(pi0):
    rama_t, _ = cut(Branch.inicial(), "a", pi0)
    with pytest.raises(ErrorPrecondicion):
        cut(rama_t, "a", pi0)
    with pytest.raises(ErrorPrecondicion):
        cut(Branch.inicial(), Body.de("c"), pi0, alcance="atoms")
    with pytest.raises(ErrorPrecondicion):
        cut(Branch.inicial(), "z", pi0)


def test_solve_eleccion(eleccion):
    resultado = solve(eleccion)
    assert resultado.estado == "SAT"
    assert resultado.modelo in ({"a"}, {"b"})


def test_solve_pi0(pi0):
    resultado = solve(pi0)
    assert resultado.estado == "UNSAT"
    assert resultado.stats.decisiones >= 1
    assert check_tableau_proof(pi0, ExtensionSet(), resultado.prueba)


def test_solve_pi1_depende_del_conjunto_de_reglas(pi1, caplog):
    with caplog.at_level(logging.WARNING):
        soportado = solve(pi1, None, EngineConfig.preset("supported"))
    assert soportado.satisfacible
    assert soportado.modelo == {"a", "b"}
    assert soportado.semantica == "supported-model semantics"
    assert "supported-model semantics" in caplog.text

    completo = solve(pi1, None, EngineConfig.preset("full"))
    assert completo.estado == "UNSAT"
    assert completo.stats.decisiones == 0
    assert check_tableau_proof(pi1, ExtensionSet(), completo.prueba)


def test_lookahead_cierra_pi0_sin_decisiones(pi0):
    resultado = solve(pi0, None, EngineConfig.preset("full", lookahead=True))
    assert resultado.estado == "UNSAT"
    assert resultado.stats.decisiones == 0
    assert resultado.stats.sondeos > 0
    assert check_tableau_proof(pi0, ExtensionSet(), resultado.prueba)


def test_lookahead_sin_entradas_forzadas(eleccion):
    resultado = lookahead(eleccion, ExtensionSet(), Branch.inicial(), EngineConfig(lookahead=True))
    assert resultado.forzadas == []
    assert not resultado.contradictoria


def test_extend_general_y_elemental():
    programa = Program([Rule.de("a", "not b"), Rule.de("b", "not a")])
    e = extend(programa, ExtensionSet(), [Rule.de("c", "a"), Rule.de("c", "b")])
    assert len(e) == 2 and len(e.steps) == 1
    e = extend(programa, ExtensionSet(), [Rule.de("d", "not a", "not b")])
    e = extend(programa, e, [Rule.de("c", "not d")])
    assert e.cabezas() == ("d", "c")


def test_extend_exige_cabezas_frescas_y_atomos_conocidos(eleccion):
    with pytest.raises(ErrorExtension):
        extend(eleccion, ExtensionSet(), [Rule.de("a", "b")])
    with pytest.raises(ErrorExtension):
        extend(eleccion, ExtensionSet(), [Rule.de("p", "z")])


def test_proof_length(prueba_pi0):
    assert proof_length(prueba_pi0) == 11
    assert prueba_pi0.cortes() == 1
    assert len(prueba_pi0.hojas()) == 2


def test_limite_de_decisiones():
    with pytest.raises(LimiteExcedido):
        solve(gen_php(3), None, EngineConfig(limite_decisiones=1))


def test_limite_de_tiempo():
    with pytest.raises(TiempoAgotado):
        solve(gen_php(4), None, EngineConfig(limite_segundos=1e-9))


def test_limite_de_tiempo_sin_decisiones():
    config = EngineConfig.preset("full", lookahead=True, alcance_corte="atoms", limite_segundos=1e-9)
    with pytest.raises(TiempoAgotado):
        solve(gen_ephp(4), None, config)


def test_heuristica_aleatoria_determinista():
    config = EngineConfig(heuristica="random", semilla=11)
    primera = solve(gen_php(2), None, config)
    segunda = solve(gen_php(2), None, config)
    assert primera.stats == segunda.stats


@pytest.mark.parametrize("config", [
    EngineConfig.preset("full"),
    EngineConfig.preset("smodels"),
    EngineConfig.preset("full", heuristica="moms"),
    EngineConfig.preset("full", heuristica="random", semilla=3),
    EngineConfig.preset("full", lookahead=True),
])
def test_coincide_con_el_oraculo(programas_aleatorios, config):
    for programa in programas_aleatorios(120, semilla=21, max_atomos=8, max_reglas=16):
        estables = enumerate_stable(programa)
        resultado = solve(programa, None, config)
        assert resultado.satisfacible == bool(estables)
        if resultado.satisfacible:
            assert is_stable(programa, resultado.modelo)
        else:
            assert check_tableau_proof(programa, ExtensionSet(), resultado.prueba)


def test_coincide_con_el_oraculo_en_quinientos_programas(programas_aleatorios):
    programas = programas_aleatorios(500, semilla=25, max_atomos=8, max_reglas=16)
    ajustados = 0
    for programa in programas:
        estables = enumerate_stable(programa)
        resultado = solve(programa, None, EngineConfig.preset("full"))
        assert resultado.satisfacible == bool(estables)
        if resultado.satisfacible:
            assert resultado.modelo in estables
        ajustados += is_tight(programa)
    assert 0 < ajustados < len(programas)


def test_todos_los_modelos(programas_aleatorios):
    for programa in programas_aleatorios(80, semilla=22):
        resultado = solve(programa, None, EngineConfig(), todos=True)
        assert len(resultado.modelos) == len(set(resultado.modelos))
        assert set(resultado.modelos) == enumerate_stable(programa)


def test_monotonia_entre_conjuntos_de_reglas(programas_aleatorios):
    for programa in programas_aleatorios(100, semilla=23):
        soportado = propagate(programa, ExtensionSet(), Branch.inicial(), EngineConfig.preset("supported"))
        completo = propagate(programa, ExtensionSet(), Branch.inicial(), EngineConfig.preset("full"))
        if not completo.contradictoria:
            assert set(soportado.entradas) <= set(completo.entradas)


def test_extension_neutral(programas_aleatorios):
    rng = random.Random(24)
    for programa in programas_aleatorios(80, semilla=24, max_atomos=5):
        literales = list(programa.dlit)
        nuevas = [Rule("x_0", Body(tuple(rng.sample(literales, 2))))]
        nuevas.append(Rule("x_1", Body((Literal("x_0", rng.random() < 0.5), rng.choice(literales)))))
        e = extend(programa, ExtensionSet(), nuevas)
        extendido = e.aplicar(programa)
        proyectados = {m & programa.atom_set for m in enumerate_stable(extendido)}
        assert proyectados == enumerate_stable(programa)
        assert len(enumerate_stable(extendido)) == len(enumerate_stable(programa))
        assert solve(programa, e).satisfacible == bool(proyectados)
