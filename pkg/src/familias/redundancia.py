"""
Redundancia aleatoria, simplificación ``red``/``red*`` y equivalencia visible.
"""

from collections import Counter
import logging
import random

from src.errores import ErrorEntrada
from src.nucleo.programa import BOT, Body, Literal, Program, Rule
from src.nucleo.semantica import LIMITE_ORACULO, enumerate_stable
from src.demostraciones.constructor import nombre_fresco

logger = logging.getLogger(__name__)


def reglas_agregadas(n, p):
    """Cantidad de reglas que agrega ``add_random_redundancy``: ``⌊p·n/100⌋``."""
    return (p * n) // 100


def add_random_redundancy(program, n, p, seed):
    """
    Agrega ``⌊p·n/100⌋`` reglas ``r_i <- l1, l2`` con cabezas frescas.

    Por regla se sortean ``l1`` y luego ``l2`` de ``dlit`` del programa
    actual, que incluye los ``r_i`` ya agregados; si coinciden se vuelve a
    sortear ``l2``. La salida depende sólo de ``seed``.

    Raises:
        ErrorEntrada: el programa no tiene átomos.
    """
    literales = list(program.dlit)
    if len(literales) < 2:
        raise ErrorEntrada("el programa necesita al menos un átomo para agregar redundancia")
    rng = random.Random(seed)
    usados = set(program.atoms)
    nuevas = []
    for i in range(1, reglas_agregadas(n, p) + 1):
        l1 = rng.choice(literales)
        l2 = rng.choice(literales)
        while l2 == l1:
            l2 = rng.choice(literales)
        cabeza = nombre_fresco("r", i, usados)
        nuevas.append(Rule(cabeza, Body((l1, l2))))
        literales.append(Literal(cabeza, True))
        literales.append(Literal(cabeza, False))
    logger.debug("redundancia: %d reglas con semilla %s", len(nuevas), seed)
    return program.con_reglas(nuevas)


def _atomos_en_cuerpos(program):
    return frozenset(a for cuerpo in program.bodies for a in cuerpo.pos | cuerpo.neg)


def red(program):
    """Quita las reglas cuya cabeza no es ``⊥`` ni aparece en ningún cuerpo."""
    en_cuerpos = _atomos_en_cuerpos(program)
    reglas = [r for r in program.rules if r.head == BOT or r.head in en_cuerpos]
    return Program(reglas, program.declarados)


def red_star(program):
    """Clausura de ``program`` bajo ``red``."""
    actual = program
    iteraciones = 0
    while True:
        siguiente = red(actual)
        iteraciones += 1
        if len(siguiente) == len(actual):
            logger.debug("red*: %d reglas quitadas en %d pasadas", len(program) - len(actual), iteraciones)
            return actual
        actual = siguiente


def visibly_equivalent(p1, p2, visible, limite=LIMITE_ORACULO):
    """
    Compara los modelos estables de ambos programas proyectados sobre
    ``visible``: debe haber una biyección que respete las proyecciones.

    Raises:
        ErrorEntrada: algún átomo visible no pertenece a ninguno de los programas.
        LimiteExcedido: alguno de los programas supera ``limite`` átomos.
    """
    visible = frozenset(visible)
    ajenos = visible - (p1.atom_set | p2.atom_set)
    if ajenos:
        raise ErrorEntrada(f"átomos visibles ajenos a ambos programas: {sorted(ajenos)}")
    proyecciones = []
    for programa in (p1, p2):
        proyecciones.append(Counter(m & visible for m in enumerate_stable(programa, limite)))
    return proyecciones[0] == proyecciones[1]
