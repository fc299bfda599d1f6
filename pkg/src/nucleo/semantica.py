"""
Semántica de modelos estables: reducto de Gelfond-Lifschitz, modelo mínimo,
estabilidad, soporte y un oráculo de enumeración por fuerza bruta.
"""

from itertools import combinations
import logging

from src.errores import ErrorInterno, LimiteExcedido
from .programa import BOT, Program, Rule, Body

logger = logging.getLogger(__name__)

# Límite por defecto del oráculo exponencial
LIMITE_ORACULO = 20


def classical_model_check(program, m):
    """
    Comprueba si ``m`` es un modelo clásico de ``program``.

    Una regla con cabeza ``BOT`` nunca queda satisfecha si su cuerpo lo está.
    """
    modelo = program.validar_interpretacion(m)
    for regla in program.rules:
        if regla.body.satisfecho_por(modelo) and (regla.head == BOT or regla.head not in modelo):
            return False
    return True


def gl_reduct(program, m):
    """Reducto ``{h <- B+ | B- ∩ m = ∅}``; conserva la tabla de símbolos."""
    modelo = program.validar_interpretacion(m)
    reglas = [
        Rule(r.head, Body(tuple(l for l in r.body if l.positive)))
        for r in program.rules
        if not (r.body.neg & modelo)
    ]
    return Program(reglas, program.atoms)


def least_model(program):
    """
    Modelo mínimo de un programa positivo por punto fijo de consecuencia
    inmediata. El resultado puede contener ``BOT`` si alguna restricción se
    deriva.
    """
    # Contador de átomos positivos pendientes por regla
    pendientes = []
    vigilantes = {}
    cola = []
    for i, regla in enumerate(program.rules):
        positivos = regla.body.pos
        pendientes.append(len(positivos))
        for atomo in positivos:
            vigilantes.setdefault(atomo, []).append(i)
        if not positivos:
            cola.append(regla.head)
    modelo = set()
    while cola:
        atomo = cola.pop()
        if atomo in modelo:
            continue
        modelo.add(atomo)
        for i in vigilantes.get(atomo, ()):
            pendientes[i] -= 1
            if pendientes[i] == 0:
                cola.append(program.rules[i].head)
    return frozenset(modelo)


def is_stable(program, m):
    """``m`` es estable si es modelo y coincide con el modelo mínimo de su reducto."""
    modelo = program.validar_interpretacion(m)
    if not classical_model_check(program, modelo):
        return False
    minimo = least_model(gl_reduct(program, modelo))
    return BOT not in minimo and minimo == modelo


def es_minimo_por_subconjuntos(program, m):
    """
    Comprobación literal de minimalidad: ningún ``M' ⊂ m`` es modelo del
    reducto. Exponencial en ``|m|``; sólo para contrastar ``is_stable``.
    """
    modelo = program.validar_interpretacion(m)
    reducto = gl_reduct(program, modelo)
    if not classical_model_check(reducto, modelo):
        return False
    elementos = sorted(modelo)
    for tam in range(len(elementos)):
        for sub in combinations(elementos, tam):
            if classical_model_check(reducto, frozenset(sub)):
                return False
    return True


def is_supported(program, m):
    """Modelo soportado: modelo clásico donde cada átomo verdadero tiene un cuerpo verdadero."""
    modelo = program.validar_interpretacion(m)
    if not classical_model_check(program, modelo):
        return False
    return all(
        any(r.body.satisfecho_por(modelo) for r in program.rules_by_head.get(a, ()))
        for a in modelo
    )


def enumerate_stable(program, limite_atomos=LIMITE_ORACULO, verificar_minimalidad=False):
    """
    Conjunto exacto de modelos estables por búsqueda exhaustiva.

    Se recorren las elecciones de los átomos que aparecen negados; cada
    elección determina el único candidato (el modelo mínimo del reducto) y se
    poda con las cotas inferior y superior de la asignación parcial. Todo
    modelo devuelto pasa ``is_stable``.

    Raises:
        LimiteExcedido: si ``|atom(program)|`` supera ``limite_atomos``.
    """
    if len(program.atoms) > limite_atomos:
        raise LimiteExcedido(
            f"el oráculo admite hasta {limite_atomos} átomos y el programa tiene {len(program.atoms)}"
        )
    negados = [a for a in program.atoms if any(a in r.body.neg for r in program.rules)]
    positivas = [Rule(r.head, Body(tuple(l for l in r.body if l.positive))) for r in program.rules]
    modelos = set()

    def cotas(verdaderos, falsos):
        # Inferior: reglas cuyo cuerpo negativo ya es falso; superior: reglas no bloqueadas
        inferior = least_model(Program(
            [p for p, r in zip(positivas, program.rules) if r.body.neg <= falsos]))
        superior = least_model(Program(
            [p for p, r in zip(positivas, program.rules) if not (r.body.neg & verdaderos)]))
        return inferior, superior

    def buscar(i, verdaderos, falsos):
        inferior, superior = cotas(verdaderos, falsos)
        if BOT in inferior or (inferior & falsos) or not (verdaderos <= superior):
            return
        if i == len(negados):
            candidato = inferior - {BOT}
            if is_stable(program, candidato):
                if verificar_minimalidad and not es_minimo_por_subconjuntos(program, candidato):
                    raise ErrorInterno(f"minimalidad inconsistente en {sorted(candidato)}")
                modelos.add(candidato)
            return
        atomo = negados[i]
        buscar(i + 1, verdaderos | {atomo}, falsos)
        buscar(i + 1, verdaderos, falsos | {atomo})

    buscar(0, frozenset(), frozenset())
    logger.debug("oráculo: %d modelos estables sobre %d átomos", len(modelos), len(program.atoms))
    return modelos


def todos_los_subconjuntos(atomos):
    """Todas las interpretaciones sobre ``atomos`` (para pruebas de propiedades)."""
    atomos = list(atomos)
    for tam in range(len(atomos) + 1):
        for sub in combinations(atomos, tam):
            yield frozenset(sub)
