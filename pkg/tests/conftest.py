"""Programas y conjuntos de cláusulas compartidos por las pruebas."""

import random

import pytest

from src.nucleo.clausulas import ClauseSet
from src.nucleo.programa import BOT, Body, Literal, Program, Rule


@pytest.fixture
def pi0():
    """Insatisfacible y ajustado."""
    return Program([
        Rule.de("a", "b", "not a"),
        Rule.de("b", "c"),
        Rule.de("c", "not b"),
    ])


@pytest.fixture
def pi1():
    """Sin modelos estables; {a, b} es modelo soportado."""
    return Program([
        Rule.de(BOT, "not a"),
        Rule.de("a", "b"),
        Rule.de("b", "a"),
    ])


@pytest.fixture
def eleccion():
    return Program([Rule.de("a", "not b"), Rule.de("b", "not a")])


@pytest.fixture
def c0():
    """Las cuatro cláusulas sobre dos variables."""
    return ClauseSet((
        frozenset({1, 2}),
        frozenset({1, -2}),
        frozenset({-1, 2}),
        frozenset({-1, -2}),
    ), 2, ("x", "y"))


def _programa_aleatorio(rng, max_atomos=6, max_reglas=10, ajustado=False):
    atomos = [f"q{i}" for i in range(rng.randint(1, max_atomos))]
    reglas = []
    for _ in range(rng.randint(1, max_reglas)):
        cabeza = BOT if rng.random() < 0.15 else rng.choice(atomos)
        literales = []
        for atomo in rng.sample(atomos, rng.randint(0, min(3, len(atomos)))):
            positivo = rng.random() < 0.5
            if ajustado and positivo and cabeza != BOT and atomos.index(atomo) <= atomos.index(cabeza):
                # Sólo dependencias positivas hacia átomos posteriores
                positivo = False
            literales.append(Literal(atomo, positivo))
        reglas.append(Rule(cabeza, Body(tuple(literales))))
    return Program(reglas, atomos)


def _cnf_aleatoria(rng, max_vars=5, max_clausulas=8):
    num_vars = rng.randint(1, max_vars)
    clausulas = []
    for _ in range(rng.randint(1, max_clausulas)):
        variables = rng.sample(range(1, num_vars + 1), rng.randint(1, min(3, num_vars)))
        clausulas.append(frozenset(v if rng.random() < 0.5 else -v for v in variables))
    return ClauseSet(tuple(clausulas), num_vars)


@pytest.fixture
def programas_aleatorios():
    """Fábrica: ``programas_aleatorios(cantidad, semilla, ajustado=False)``."""
    def fabricar(cantidad, semilla=0, **opciones):
        rng = random.Random(semilla)
        return [_programa_aleatorio(rng, **opciones) for _ in range(cantidad)]
    return fabricar


@pytest.fixture
def cnfs_aleatorias():
    def fabricar(cantidad, semilla=0, **opciones):
        rng = random.Random(semilla)
        return [_cnf_aleatoria(rng, **opciones) for _ in range(cantidad)]
    return fabricar


@pytest.fixture
def prueba_pi0(pi0):
    """Demostración ASP-T de Π₀ con un corte sobre ``a``."""
    from src.demostraciones.constructor import ConstructorTableau
    from src.tableau.extension import ExtensionSet

    constructor = ConstructorTableau(pi0, ExtensionSet())
    rama_t, rama_f = constructor.cortar(constructor.rama_inicial(), "a")
    constructor.cuerpo_unico(rama_t, "a", Body.de("b", "not a"))
    constructor.falsear_cuerpos(rama_f, "a")
    constructor.literal_de_cuerpo_falso(rama_f, Body.de("b", "not a"), Literal("b"))
    constructor.cuerpo_verdadero(rama_f, Body.de("not b"))
    constructor.cabeza_verdadera(rama_f, "c", Body.de("not b"))
    constructor.cuerpo_verdadero(rama_f, Body.de("c"))
    constructor.cabeza_verdadera(rama_f, "b", Body.de("c"))
    assert rama_t.cerrada and rama_f.cerrada
    return constructor.prueba()
