from dataclasses import replace
import logging
import random

import pytest

from src.errores import ErrorPrecondicion
from src.demostraciones import (
    ExtensionTriple,
    ResolutionProof,
    aspt_to_tres,
    check_eres_proof,
    check_res_proof,
    check_tableau_proof,
    construir_arbol_cortes,
    easpt_to_eres,
    eres_to_easpt,
    is_tree_like,
    tres_to_aspt,
)
from src.demostraciones.mutaciones import EXTENDIDA, RESOLUCION, TABLEAU, rama_abierta, resistencia
from src.demostraciones.resolucion import RESUELTO, ConstructorResolucion, Paso
from src.familias import php_clausulas, php_eres_proof
from src.demostraciones.constructor import ConstructorTableau
from src.nucleo import BOT, Body, Literal, Program, Rule
from src.nucleo.clausulas import ClauseSet
from src.puente import to_asp, to_cnf
from src.tableau import EngineConfig, ExtensionSet, extend, proof_length, solve
from src.tableau.entradas import Entry
from src.tableau.extension import ExtensionStep
from src.tableau import reglas as R


@pytest.fixture
def refutacion_c0(c0):
    """{x,y} {x,¬y} {¬x,y} {¬x,¬y} {y} {¬y} ∅"""
    prueba = ResolutionProof()
    for clausula in c0.clausulas:
        prueba.agregar_inicial(clausula)
    prueba.resolver(0, 2)
    prueba.resolver(1, 3)
    prueba.resolver(4, 5)
    return prueba


def _con_nodo(prueba, nodo):
    nodos = list(prueba.nodes)
    nodos[nodo.id] = nodo
    return type(prueba)(nodos, prueba.extension)


# ----------------------------------------------------------------------
# Tableau
# ----------------------------------------------------------------------

def test_prueba_construida_valida(pi0, prueba_pi0):
    veredicto = check_tableau_proof(pi0, ExtensionSet(), prueba_pi0)
    assert veredicto
    assert str(veredicto) == "VALID"


def test_prueba_del_motor_valida(pi0):
    prueba = solve(pi0).prueba
    assert check_tableau_proof(pi0, ExtensionSet(), prueba)


def test_premisa_redirigida_invalida(pi0, prueba_pi0):
    nodo = prueba_pi0.nodes[3]
    mutado = _con_nodo(prueba_pi0, replace(nodo, premises=(2,)))
    veredicto = check_tableau_proof(pi0, ExtensionSet(), mutado)
    assert not veredicto
    assert veredicto.paso == 3
    assert str(veredicto).startswith("INVALID (paso 3)")


def test_testigo_que_no_es_lazo(pi1):
    prueba = solve(pi1, None, EngineConfig.preset("full")).prueba
    con_testigo = [n for n in prueba.nodes if n.rule in R.CON_TESTIGO]
    assert con_testigo
    assert check_tableau_proof(pi1, ExtensionSet(), prueba)
    mutado = _con_nodo(prueba, replace(con_testigo[0], witness=frozenset({"a"})))
    assert not check_tableau_proof(pi1, ExtensionSet(), mutado)


def test_i_dag_exige_cuerpo_externo_al_testigo():
    # a <- a. a <- not b. b <- not a.  {a} no es externo a {a}
    programa = Program([Rule.de("a", "a"), Rule.de("a", "not b"), Rule.de("b", "not a")])
    constructor = ConstructorTableau(programa, ExtensionSet())
    rama_a, _ = constructor.cortar(constructor.rama_inicial(), "a")
    rama_b, _ = constructor.cortar(rama_a, "b")
    constructor.cuerpo_falso(rama_b, Body.de("not b"), Literal("b", False))
    nodo = constructor.deducir(
        rama_b, Entry(True, Body.de("a")), R.I_DAG,
        [Entry(True, "a"), Entry(False, Body.de("not b"))], frozenset({"a"}),
    )
    veredicto = check_tableau_proof(programa, ExtensionSet(), constructor.prueba())
    assert not veredicto
    assert veredicto.paso == nodo
    assert "no es externo" in veredicto.motivo


def test_extension_ilegal_invalida(pi0, prueba_pi0):
    ilegal = ExtensionSet((ExtensionStep("a", (Body(),)),))
    veredicto = check_tableau_proof(pi0, ilegal, prueba_pi0)
    assert not veredicto
    assert "extensión ilegal" in veredicto.motivo


def test_arbol_de_cortes(prueba_pi0):
    arbol = construir_arbol_cortes(prueba_pi0)
    assert len(arbol.hojas()) == arbol.cortes() + 1
    assert not arbol.nodos[arbol.raiz].es_hoja
    assert arbol.nodos[arbol.raiz].objeto == "a"


def test_arbol_de_cortes_rechaza_ramas_abiertas(pi0, prueba_pi0):
    with pytest.raises(ErrorPrecondicion):
        construir_arbol_cortes(rama_abierta(pi0, prueba_pi0))


# ----------------------------------------------------------------------
# Resolución
# ----------------------------------------------------------------------

def test_refutacion_valida_y_arborea(c0, refutacion_c0):
    assert check_res_proof(c0, refutacion_c0)
    assert is_tree_like(refutacion_c0)
    assert refutacion_c0.es_refutacion()
    assert refutacion_c0.resoluciones() == 3


def test_reuso_de_derivada_no_arboreo(c0):
    prueba = ResolutionProof()
    for clausula in c0.clausulas:
        prueba.agregar_inicial(clausula)
    y = prueba.resolver(0, 2)
    no_x = prueba.resolver(y, 3)
    si_x = prueba.resolver(y, 1)
    prueba.resolver(no_x, si_x)
    assert check_res_proof(c0, prueba)
    assert not is_tree_like(prueba)


def test_resolver_sin_pivote_invalido():
    unidad = frozenset({1})
    prueba = ResolutionProof([Paso(unidad), Paso(unidad), Paso(frozenset(), RESUELTO, (0, 1))])
    assert not check_res_proof(ClauseSet((unidad,), 1), prueba)


def test_refutacion_incompleta(c0, refutacion_c0):
    parcial = ResolutionProof(list(refutacion_c0.pasos[:5]))
    assert not check_res_proof(c0, parcial)
    assert check_res_proof(c0, parcial, exigir_vacia=False)


def test_recortar_descarta_pasos_ajenos(c0, refutacion_c0):
    prueba = ResolutionProof(list(refutacion_c0.pasos))
    prueba.resolver(0, 2)
    assert not prueba.es_refutacion()
    recortada = prueba.recortar(6)
    assert recortada.es_refutacion()
    assert len(recortada) == 7
    assert check_res_proof(c0, recortada)
    parcial = prueba.recortar(4)
    assert [p.clausula for p in parcial.pasos] == [c0.clausulas[0], c0.clausulas[2], frozenset([2])]
    assert parcial.pasos[2].padres == (0, 1)


def test_eres_sin_tripletas_es_res(c0, refutacion_c0):
    assert check_eres_proof(c0, (), refutacion_c0)


def test_eres_del_palomar():
    tripletas, prueba = php_eres_proof(2)
    assert check_eres_proof(php_clausulas(2), tripletas, prueba)


def test_tripleta_no_fresca_invalida():
    tripletas, prueba = php_eres_proof(2)
    primera = tripletas[0]
    mal = (ExtensionTriple(1, primera.l1, primera.l2),) + tripletas[1:]
    assert not check_eres_proof(php_clausulas(2), mal, prueba)


# ----------------------------------------------------------------------
# Simulaciones
# ----------------------------------------------------------------------

def test_aspt_to_tres(pi0, prueba_pi0):
    prueba = aspt_to_tres(pi0, prueba_pi0)
    clausulas, _ = to_cnf(pi0)
    assert check_res_proof(clausulas, prueba)
    assert is_tree_like(prueba)


def test_aspt_to_tres_exige_programa_ajustado(pi1):
    prueba = solve(pi1, None, EngineConfig.preset("full")).prueba
    with pytest.raises(ErrorPrecondicion):
        aspt_to_tres(pi1, prueba)


def test_aspt_to_tres_desde_pruebas_del_motor(programas_aleatorios):
    convertidas = 0
    for programa in programas_aleatorios(80, semilla=31, max_atomos=5, max_reglas=9, ajustado=True):
        resultado = solve(programa)
        if resultado.satisfacible:
            continue
        prueba = aspt_to_tres(programa, resultado.prueba)
        clausulas, _ = to_cnf(programa)
        assert check_res_proof(clausulas, prueba)
        assert is_tree_like(prueba)
        convertidas += 1
    assert convertidas > 0


def test_aspt_to_tres_con_la_vacia_antes_de_la_ultima_hoja():
    programa = Program([
        Rule.de("q1", "not q0"),
        Rule.de("q2", "not q0", "not q2"),
        Rule.de("q1", "not q0", "not q1", "not q2"),
        Rule.de("q1"),
    ], ["q0", "q1", "q2"])
    resultado = solve(programa)
    assert resultado.estado == "UNSAT"
    prueba = aspt_to_tres(programa, resultado.prueba)
    assert prueba.es_refutacion()
    assert check_res_proof(to_cnf(programa)[0], prueba)
    assert is_tree_like(prueba)


def test_aspt_to_tres_hoja_sin_clausula_falsa(caplog):
    # a <- b. b <- c. c <- not d. d. :- not a.  Tras cortar T a, (h†) cierra sin falsear ninguna cláusula
    programa = Program([
        Rule.de("a", "b"),
        Rule.de("b", "c"),
        Rule.de("c", "not d"),
        Rule.de("d"),
        Rule.de(BOT, "not a"),
    ])
    constructor = ConstructorTableau(programa, ExtensionSet())
    rama_t, rama_f = constructor.cortar(constructor.rama_inicial(), "a")
    constructor.cuerpo_verdadero(rama_t, Body())
    constructor.cabeza_verdadera(rama_t, "d", Body())
    constructor.cuerpo_falso(rama_t, Body.de("not d"), Literal("d", False))
    constructor.deducir(
        rama_t, Entry(False, "a"), R.H_DAG, [Entry(False, Body.de("not d"))], frozenset({"a", "b", "c"}),
    )
    constructor.deducir(rama_f, Entry(False, Body.de("not a")), R.E, [Entry(False, BOT)])
    constructor.literal_de_cuerpo_falso(rama_f, Body.de("not a"), Literal("a", False))
    assert rama_t.cerrada and rama_f.cerrada
    tableau = constructor.prueba()
    assert check_tableau_proof(programa, ExtensionSet(), tableau)

    with caplog.at_level(logging.DEBUG, logger="src.demostraciones.simulaciones"):
        prueba = aspt_to_tres(programa, tableau)
    assert "cortes auxiliares" in caplog.text
    assert check_res_proof(to_cnf(programa)[0], prueba)
    assert is_tree_like(prueba)


@pytest.mark.lento
def test_aspt_to_tres_en_cien_pruebas_del_motor(programas_aleatorios):
    convertidas = 0
    for programa in programas_aleatorios(3000, semilla=41, max_atomos=6, max_reglas=10, ajustado=True):
        resultado = solve(programa)
        if resultado.satisfacible:
            continue
        prueba = aspt_to_tres(programa, resultado.prueba)
        assert check_res_proof(to_cnf(programa)[0], prueba)
        assert is_tree_like(prueba)
        convertidas += 1
        if convertidas == 100:
            break
    assert convertidas == 100


def test_tres_to_aspt(c0, refutacion_c0):
    prueba = tres_to_aspt(c0, refutacion_c0)
    programa, _ = to_asp(c0)
    assert check_tableau_proof(programa, ExtensionSet(), prueba)
    assert prueba.cortes() == 3


def test_tres_to_aspt_del_palomar_trivial():
    tripletas, refutacion = php_eres_proof(1)
    assert tripletas == ()
    clausulas = php_clausulas(1)
    programa, _ = to_asp(clausulas)
    assert check_tableau_proof(programa, ExtensionSet(), tres_to_aspt(clausulas, refutacion))


def test_tres_to_aspt_rechaza_no_arboreas(c0):
    prueba = ResolutionProof()
    for clausula in c0.clausulas:
        prueba.agregar_inicial(clausula)
    y = prueba.resolver(0, 2)
    prueba.resolver(prueba.resolver(y, 3), prueba.resolver(y, 1))
    with pytest.raises(ErrorPrecondicion):
        tres_to_aspt(c0, prueba)


def _cnf_insatisfacible(rng):
    while True:
        num_vars = rng.randint(2, 4)
        clausulas = []
        for _ in range(rng.randint(6, 14)):
            variables = rng.sample(range(1, num_vars + 1), rng.randint(1, 2))
            clausulas.append(frozenset(v if rng.random() < 0.5 else -v for v in variables))
        candidata = ClauseSet(tuple(clausulas), num_vars)
        if not candidata.enumerate_satisfying():
            return candidata


def _refutacion_arborea(clausulas):
    """Refutación arbórea por división sobre las variables en orden."""
    res = ConstructorResolucion()

    def refutar(asignacion):
        for clausula in clausulas.clausulas:
            if all(asignacion.get(abs(l)) is (l < 0) for l in clausula):
                return res.inicial(clausula)
        var = next(v for v in range(1, clausulas.num_vars + 1) if v not in asignacion)
        asignacion[var] = True
        si = refutar(asignacion)
        asignacion[var] = False
        no = refutar(asignacion)
        del asignacion[var]
        if -var not in res.clausula(si):
            return si
        if var not in res.clausula(no):
            return no
        return res.resolver(si, no, var)

    return res.prueba.recortar(refutar({}))


@pytest.mark.lento
def test_tres_to_aspt_en_cien_refutaciones_arboreas():
    rng = random.Random(43)
    for _ in range(100):
        clausulas = _cnf_insatisfacible(rng)
        refutacion = _refutacion_arborea(clausulas)
        assert check_res_proof(clausulas, refutacion)
        assert is_tree_like(refutacion)
        prueba = tres_to_aspt(clausulas, refutacion)
        programa, _ = to_asp(clausulas)
        assert check_tableau_proof(programa, ExtensionSet(), prueba)
        ancho = max(len(c) for c in clausulas.clausulas)
        assert proof_length(prueba) <= 10 * len(refutacion) * (1 + ancho)


def test_ida_y_vuelta_cnf(c0, refutacion_c0):
    programa, _ = to_asp(c0)
    prueba = tres_to_aspt(c0, refutacion_c0)
    refutacion = aspt_to_tres(programa, prueba)
    assert check_res_proof(to_cnf(programa)[0], refutacion)


@pytest.mark.parametrize("n", [
    1, 2, pytest.param(3, marks=pytest.mark.lento), pytest.param(4, marks=pytest.mark.lento),
])
def test_eres_to_easpt_del_palomar(n):
    clausulas = php_clausulas(n)
    tripletas, refutacion = php_eres_proof(n)
    e, prueba = eres_to_easpt(clausulas, tripletas, refutacion)
    programa, _ = to_asp(clausulas)
    assert check_tableau_proof(programa, e, prueba)
    assert proof_length(prueba) <= 40 * len(refutacion) ** 2


def test_easpt_to_eres(pi0):
    e = extend(pi0, ExtensionSet(), [Rule.de("x", "a", "b")])
    resultado = solve(pi0, e)
    assert resultado.estado == "UNSAT"
    tripletas, refutacion = easpt_to_eres(pi0, resultado.prueba, e)
    clausulas, _ = to_cnf(pi0)
    assert check_eres_proof(clausulas, tripletas, refutacion)


def test_easpt_to_eres_sin_extension(pi0, prueba_pi0):
    tripletas, refutacion = easpt_to_eres(pi0, prueba_pi0, ExtensionSet())
    assert tripletas == ()
    assert check_res_proof(to_cnf(pi0)[0], refutacion)


@pytest.mark.lento
def test_easpt_to_eres_en_cincuenta_instancias_extendidas(programas_aleatorios):
    rng = random.Random(44)
    convertidas = 0
    for programa in programas_aleatorios(3000, semilla=45, max_atomos=6, max_reglas=10, ajustado=True):
        if len(programa.atoms) < 2:
            continue
        atomos = rng.sample(programa.atoms, 2)
        cuerpo = Body(tuple(Literal(a, rng.random() < 0.5) for a in atomos))
        e = extend(programa, ExtensionSet(), [Rule("x_e", cuerpo)])
        resultado = solve(programa, e)
        if resultado.satisfacible:
            continue
        tripletas, refutacion = easpt_to_eres(programa, resultado.prueba, e)
        assert check_eres_proof(to_cnf(programa)[0], tripletas, refutacion)
        convertidas += 1
        if convertidas == 50:
            break
    assert convertidas == 50


# ----------------------------------------------------------------------
# Mutaciones
# ----------------------------------------------------------------------

def test_resistencia_tableau(pi0, prueba_pi0):
    resultados = resistencia(pi0, prueba_pi0, TABLEAU)
    assert len(resultados) >= 8
    assert not any(resultados.values())


def test_resistencia_tableau_con_testigos(pi1):
    prueba = solve(pi1, None, EngineConfig.preset("full")).prueba
    resultados = resistencia(pi1, prueba, TABLEAU)
    assert "testigo-sin-cabeza" in resultados
    assert not any(resultados.values())


def test_resistencia_resolucion(c0, refutacion_c0):
    resultados = resistencia(c0, refutacion_c0, RESOLUCION)
    assert set(resultados) == {"desprender-pivote", "resolvente-erronea", "inicial-ajena", "reusar-derivada"}
    assert not any(resultados.values())


def test_resistencia_resolucion_extendida():
    clausulas = php_clausulas(2)
    resultados = resistencia(clausulas, php_eres_proof(2), EXTENDIDA)
    assert set(resultados) == {"tripleta-no-fresca", "tripleta-adelantada"}
    assert not any(resultados.values())


def test_programa_sin_demostracion():
    assert solve(Program([Rule.de("a")])).prueba is None
