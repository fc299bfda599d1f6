"""
Grafo de dependencias positivas, lazos, conjuntos no fundados y separación.
"""

from itertools import combinations
import logging

from src.errores import ErrorPrecondicion, LimiteExcedido
from .programa import BOT, Program, Rule, Body

logger = logging.getLogger(__name__)

# Tamaño máximo de componente para enumerar lazos
LIMITE_LAZOS = 15


def grafo_positivo(program):
    """Aristas ``cabeza -> átomo positivo del cuerpo`` (sin ``BOT``)."""
    grafo = {a: set() for a in program.atoms}
    for regla in program.rules:
        if regla.head == BOT:
            continue
        grafo[regla.head].update(a for a in regla.body.pos if a != BOT)
    return grafo


def componentes_fuertes(grafo):
    """
    Componentes fuertemente conexas (Tarjan iterativo).

    Returns:
        Lista de conjuntos en orden topológico inverso.
    """
    indice = {}
    bajo = {}
    pila = []
    en_pila = set()
    componentes = []
    contador = 0

    for inicio in grafo:
        if inicio in indice:
            continue
        trabajo = [(inicio, iter(sorted(grafo[inicio])))]
        indice[inicio] = bajo[inicio] = contador
        contador += 1
        pila.append(inicio)
        en_pila.add(inicio)
        while trabajo:
            nodo, sucesores = trabajo[-1]
            avanzado = False
            for sucesor in sucesores:
                if sucesor not in indice:
                    indice[sucesor] = bajo[sucesor] = contador
                    contador += 1
                    pila.append(sucesor)
                    en_pila.add(sucesor)
                    trabajo.append((sucesor, iter(sorted(grafo[sucesor]))))
                    avanzado = True
                    break
                if sucesor in en_pila:
                    bajo[nodo] = min(bajo[nodo], indice[sucesor])
            if avanzado:
                continue
            trabajo.pop()
            if trabajo:
                padre = trabajo[-1][0]
                bajo[padre] = min(bajo[padre], bajo[nodo])
            if bajo[nodo] == indice[nodo]:
                componente = set()
                while True:
                    miembro = pila.pop()
                    en_pila.discard(miembro)
                    componente.add(miembro)
                    if miembro == nodo:
                        break
                componentes.append(frozenset(componente))
    return componentes


def _es_ciclica(componente, grafo):
    if len(componente) > 1:
        return True
    (unico,) = componente
    return unico in grafo[unico]


def componentes_ciclicas(program):
    """Componentes que contienen al menos un lazo."""
    grafo = grafo_positivo(program)
    return [c for c in componentes_fuertes(grafo) if _es_ciclica(c, grafo)]


def is_tight(program):
    """Un programa es ajustado si su grafo positivo no tiene lazos."""
    return not componentes_ciclicas(program)


def _fuertemente_conexo(subconjunto, grafo):
    inducido = {a: grafo[a] & subconjunto for a in subconjunto}
    componentes = componentes_fuertes(inducido)
    return len(componentes) == 1 and _es_ciclica(componentes[0], inducido)


def loops(program, limite=LIMITE_LAZOS):
    """
    Todos los lazos del programa.

    Un lazo es un conjunto no vacío de átomos con un camino de longitud no
    nula entre cada par ordenado dentro del conjunto. Se enumeran los
    subconjuntos de cada componente cíclica.

    Raises:
        LimiteExcedido: si alguna componente supera ``limite`` átomos.
    """
    grafo = grafo_positivo(program)
    lazos = []
    for componente in componentes_ciclicas(program):
        if len(componente) > limite:
            raise LimiteExcedido(
                f"componente de {len(componente)} átomos supera el límite de {limite} para enumerar lazos"
            )
        orden = [a for a in program.atoms if a in componente]
        for tam in range(1, len(orden) + 1):
            for sub in combinations(orden, tam):
                candidato = frozenset(sub)
                if _fuertemente_conexo(candidato, grafo):
                    lazos.append(candidato)
    return lazos


def external_bodies(program, conjunto):
    """eb(A) = {body(r) | head(r) ∈ A, body(r)+ ∩ A = ∅}."""
    conjunto = frozenset(conjunto)
    return frozenset(
        r.body for r in program.rules if r.head in conjunto and not (r.body.pos & conjunto)
    )


def atomos_soportados(program):
    """Punto fijo de átomos con una regla cuyo cuerpo positivo ya está soportado."""
    soportados = set()
    cambio = True
    reglas = [r for r in program.rules if r.head != BOT]
    while cambio:
        cambio = False
        for regla in reglas:
            if regla.head not in soportados and regla.body.pos <= soportados:
                soportados.add(regla.head)
                cambio = True
    return soportados


def greatest_unfounded(program):
    """Mayor conjunto no fundado: complemento del punto fijo de soporte."""
    soportados = atomos_soportados(program)
    return frozenset(a for a in program.atoms if a not in soportados)


def regla_que_impide_separar(program, u):
    """Primera regla que viola la condición de conjunto separador, o ``None``."""
    u = frozenset(u)
    for regla in program.rules:
        if regla.head in u and not (regla.body.atomos <= u):
            return regla
    return None


def es_conjunto_separador(program, u):
    return regla_que_impide_separar(program, u) is None


def _en_fondo(regla, u):
    if regla.head == BOT:
        return regla.body.atomos <= u
    return regla.head in u


def split(program, u):
    """
    Divide el programa en fondo (reglas dentro de ``u``) y cima (el resto).

    Raises:
        ErrorPrecondicion: si ``u`` no es un conjunto separador.
    """
    u = frozenset(u)
    violadora = regla_que_impide_separar(program, u)
    if violadora is not None:
        raise ErrorPrecondicion(f"{sorted(u)} no es un conjunto separador: regla '{violadora}'")
    fondo = [r for r in program.rules if _en_fondo(r, u)]
    cima = [r for r in program.rules if not _en_fondo(r, u)]
    return (
        Program(fondo, [a for a in program.atoms if a in u]),
        Program(cima, [a for a in program.atoms if a not in u]),
    )


def partial_eval(top, u, x):
    """
    Evaluación parcial de la cima respecto de ``x ⊆ u``: se conservan las
    reglas cuya parte en ``u`` satisface ``x`` y se eliminan de ellas los
    átomos de ``u``.
    """
    u = frozenset(u)
    x = frozenset(x)
    reglas = []
    for regla in top.rules:
        if not (regla.body.pos & u) <= x or (regla.body.neg & u & x):
            continue
        resto = Body(tuple(l for l in regla.body if l.atom not in u))
        reglas.append(Rule(regla.head, resto))
    declarados = [a for a in top.atoms if a not in u]
    return Program(reglas, declarados)


def es_lazo(program, conjunto):
    """``conjunto`` es un lazo del grafo positivo de ``program``."""
    conjunto = frozenset(conjunto)
    if not conjunto or not conjunto <= program.atom_set:
        return False
    return _fuertemente_conexo(conjunto, grafo_positivo(program))
