"""
Mutaciones de demostraciones válidas que los verificadores deben rechazar.

Cada mutación devuelve una copia alterada o ``None`` si no encuentra dónde
aplicarse (por ejemplo, no hay nodos con testigo).
"""

from dataclasses import dataclass, replace
import logging
from typing import Callable

from src.nucleo.programa import BOT, Body
from src.tableau.entradas import CORTE, Entry, TableauProof
from src.tableau.extension import ExtensionSet, ExtensionStep
from src.tableau import reglas as R
from .resolucion import (
    INICIAL,
    RESUELTO,
    ExtensionTriple,
    ResolutionProof,
    check_eres_proof,
    check_res_proof,
    is_tree_like,
)
from .veredicto import invalido
from .verificador_tableau import check_tableau_proof

logger = logging.getLogger(__name__)

TABLEAU = "tableau"
RESOLUCION = "res"
EXTENDIDA = "eres"


@dataclass(frozen=True)
class Mutacion:
    nombre: str
    sistema: str
    aplicar: Callable
    exige_arbol: bool = False


# ----------------------------------------------------------------------
# Tableau
# ----------------------------------------------------------------------

def _deducidos(proof):
    return [n for n in proof.nodes[1:] if n.rule != CORTE]


def _con_nodo(proof, nodo):
    nodos = list(proof.nodes)
    nodos[nodo.id] = nodo
    return TableauProof(nodos, proof.extension)


def quitar_premisa(program, proof):
    for nodo in _deducidos(proof):
        if nodo.premises:
            return _con_nodo(proof, replace(nodo, premises=nodo.premises[:-1]))
    return None


def premisa_ajena(program, proof):
    """Reemplaza una premisa por la raíz ``F⊥``."""
    for nodo in _deducidos(proof):
        if nodo.premises and nodo.rule != R.E and 0 not in nodo.premises:
            premisas = (0,) + nodo.premises[1:]
            return _con_nodo(proof, replace(nodo, premises=premisas))
    return None


def premisa_posterior(program, proof):
    """La premisa apunta al propio nodo, que no es ancestro suyo."""
    for nodo in _deducidos(proof):
        if nodo.premises:
            return _con_nodo(proof, replace(nodo, premises=(nodo.id,) + nodo.premises[1:]))
    return None


def _regla_incompatible(entry):
    if isinstance(entry.obj, Body):
        return R.D if entry.sign else R.H_SEC
    return R.B if entry.sign else R.E


def cambiar_regla(program, proof):
    deducidos = _deducidos(proof)
    if not deducidos:
        return None
    nodo = deducidos[0]
    return _con_nodo(proof, replace(nodo, rule=_regla_incompatible(nodo.entry)))


def invertir_signo(program, proof):
    deducidos = _deducidos(proof)
    if not deducidos:
        return None
    nodo = deducidos[0]
    return _con_nodo(proof, replace(nodo, entry=nodo.entry.opuesta()))


def testigo_sin_cabeza(program, proof):
    for nodo in _deducidos(proof):
        if nodo.rule in R.CON_TESTIGO and nodo.witness:
            return _con_nodo(proof, replace(nodo, witness=frozenset()))
    return None


def rama_abierta(program, proof):
    """Quita el último nodo: su rama deja de ser contradictoria."""
    if len(proof.nodes) < 2:
        return None
    return TableauProof(list(proof.nodes[:-1]), proof.extension)


def raiz_verdadera(program, proof):
    raiz = proof.nodes[0]
    return _con_nodo(proof, replace(raiz, entry=Entry(True, BOT)))


def cabeza_no_fresca(program, proof):
    """Agrega un paso de extensión cuya cabeza ya es un átomo del programa."""
    if not program.atoms:
        return None
    paso = ExtensionStep(program.atoms[0], (Body(),))
    return TableauProof(list(proof.nodes), ExtensionSet(proof.extension.steps + (paso,)))


def corte_desparejo(program, proof):
    """Ambos hijos de un corte con el mismo signo."""
    for nodo in proof.nodes[1:]:
        if nodo.rule == CORTE and not nodo.entry.sign:
            return _con_nodo(proof, replace(nodo, entry=nodo.entry.opuesta()))
    return None


# ----------------------------------------------------------------------
# Resolución
# ----------------------------------------------------------------------

def _con_paso(proof, k, paso):
    pasos = list(proof.pasos)
    pasos[k] = paso
    return ResolutionProof(pasos)


def _resueltos(proof):
    return [k for k, p in enumerate(proof.pasos) if p.origen == RESUELTO]


def desprender_pivote(clauses, proof):
    """Un paso resuelve un padre consigo mismo."""
    for k in _resueltos(proof):
        i, _ = proof.pasos[k].padres
        return _con_paso(proof, k, replace(proof.pasos[k], padres=(i, i)))
    return None


def resolvente_erronea(clauses, proof):
    fresca = clauses.num_vars + 1
    for k in _resueltos(proof):
        paso = proof.pasos[k]
        return _con_paso(proof, k, replace(paso, clausula=paso.clausula | {fresca}))
    return None


def inicial_ajena(clauses, proof):
    fresca = clauses.num_vars + 1
    for k, paso in enumerate(proof.pasos):
        if paso.origen == INICIAL:
            return _con_paso(proof, k, replace(paso, clausula=paso.clausula | {-fresca}))
    return None


def reusar_derivada(clauses, proof):
    """Vuelve a usar como padre una cláusula derivada ya consumida."""
    resueltos = _resueltos(proof)
    if len(resueltos) < 2:
        return None
    ultimo = resueltos[-1]
    i, j = proof.pasos[ultimo].padres
    usada = next((p for p in (i, j) if proof.pasos[p].origen == RESUELTO), None)
    if usada is None:
        return None
    pasos = list(proof.pasos)
    # La misma resolución repetida: válida, pero deja de ser arbórea
    pasos.insert(ultimo, replace(proof.pasos[ultimo]))
    return ResolutionProof(pasos)


def tripleta_no_fresca(clauses, entrada):
    triples, proof = entrada
    if not triples:
        return None
    primera = triples[0]
    return (ExtensionTriple(1, primera.l1, primera.l2),) + tuple(triples[1:]), proof


def tripleta_adelantada(clauses, entrada):
    """La primera tripleta usa un literal sobre una variable aún no introducida."""
    triples, proof = entrada
    if not triples:
        return None
    primera = triples[0]
    futura = max(t.var for t in triples) + 1
    return (ExtensionTriple(primera.var, futura, primera.l2),) + tuple(triples[1:]), proof


MUTACIONES = (
    Mutacion("quitar-premisa", TABLEAU, quitar_premisa),
    Mutacion("premisa-ajena", TABLEAU, premisa_ajena),
    Mutacion("premisa-no-ancestro", TABLEAU, premisa_posterior),
    Mutacion("cambiar-regla", TABLEAU, cambiar_regla),
    Mutacion("invertir-signo", TABLEAU, invertir_signo),
    Mutacion("testigo-sin-cabeza", TABLEAU, testigo_sin_cabeza),
    Mutacion("rama-abierta", TABLEAU, rama_abierta),
    Mutacion("raiz-verdadera", TABLEAU, raiz_verdadera),
    Mutacion("cabeza-no-fresca", TABLEAU, cabeza_no_fresca),
    Mutacion("corte-desparejo", TABLEAU, corte_desparejo),
    Mutacion("desprender-pivote", RESOLUCION, desprender_pivote),
    Mutacion("resolvente-erronea", RESOLUCION, resolvente_erronea),
    Mutacion("inicial-ajena", RESOLUCION, inicial_ajena),
    Mutacion("reusar-derivada", RESOLUCION, reusar_derivada, exige_arbol=True),
    Mutacion("tripleta-no-fresca", EXTENDIDA, tripleta_no_fresca),
    Mutacion("tripleta-adelantada", EXTENDIDA, tripleta_adelantada),
)


def por_sistema(sistema):
    return [m for m in MUTACIONES if m.sistema == sistema]


def verificar_mutado(mutacion, entrada, mutado):
    """
    Veredicto del verificador correspondiente sobre la demostración mutada.

    ``entrada`` es el programa (tableau) o el conjunto de cláusulas.
    """
    if mutacion.sistema == TABLEAU:
        return check_tableau_proof(entrada, mutado.extension, mutado)
    if mutacion.sistema == RESOLUCION:
        veredicto = check_res_proof(entrada, mutado)
        if veredicto and mutacion.exige_arbol and not is_tree_like(mutado):
            return invalido("la demostración no es arbórea")
        return veredicto
    triples, proof = mutado
    return check_eres_proof(entrada, triples, proof)


def resistencia(entrada, demostracion, sistema):
    """
    Aplica cada mutación del sistema y devuelve ``{nombre: Veredicto}``; las
    mutaciones no aplicables se omiten.
    """
    resultados = {}
    for mutacion in por_sistema(sistema):
        mutado = mutacion.aplicar(entrada, demostracion)
        if mutado is None:
            logger.debug("mutación %s no aplicable", mutacion.nombre)
            continue
        resultados[mutacion.nombre] = verificar_mutado(mutacion, entrada, mutado)
    return resultados


