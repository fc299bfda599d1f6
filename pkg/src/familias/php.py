"""
Familias del principio del palomar como programas lógicos normales.

``p{i}_{j}`` significa que la paloma ``i`` ocupa el agujero ``j``; el átomo
``p{i}_{j}'`` es su complemento. Las capas de extensión usan
``e{l}_{i}_{j}``, donde la capa ``n+1`` son los propios ``p{i}_{j}``.
"""

import logging

from src.errores import ErrorEntrada
from src.nucleo.clausulas import ClauseSet
from src.nucleo.programa import BOT, Body, Literal, Program, Rule
from src.tableau.extension import ExtensionSet, agrupar_por_cabeza

logger = logging.getLogger(__name__)


def nombre_p(i, j):
    return f"p{i}_{j}"


def nombre_e(n, l, i, j):
    """Átomo de la capa ``l``; la capa ``n+1`` es la de los ``p``."""
    if l == n + 1:
        return nombre_p(i, j)
    return f"e{l}_{i}_{j}"


def _exigir_n(n):
    if n < 1:
        raise ErrorEntrada(f"la familia exige n >= 1 (recibido {n})")


def _celdas(n):
    return [(i, j) for i in range(1, n + 2) for j in range(1, n + 1)]


def gen_php(n):
    """
    PHP con ``n+1`` palomas y ``n`` agujeros.

    Orden de las reglas: los pares de elección de cada ``p{i}_{j}``, luego una
    restricción por paloma sin agujero y una por cada par de palomas que
    comparten agujero.
    """
    _exigir_n(n)
    reglas = []
    for i, j in _celdas(n):
        p = nombre_p(i, j)
        reglas.append(Rule.de(p, f"not {p}'"))
        reglas.append(Rule.de(f"{p}'", f"not {p}"))
    for i in range(1, n + 2):
        reglas.append(Rule(BOT, Body(tuple(Literal(nombre_p(i, j), False) for j in range(1, n + 1)))))
    for i in range(1, n + 2):
        for j in range(i + 1, n + 2):
            for k in range(1, n + 1):
                reglas.append(Rule.de(BOT, nombre_p(i, k), nombre_p(j, k)))
    return Program(reglas)


def gen_ext_layers(n):
    """
    Reglas de las capas ``l = n .. 2``, cada una definida sobre la siguiente:
    ``e{l}_{i}_{j} <- e{l+1}_{i}_{j}`` y
    ``e{l}_{i}_{j} <- e{l+1}_{i}_{l}, e{l+1}_{l+1}_{j}``.
    """
    reglas = []
    for l in range(n, 1, -1):
        for i in range(1, l + 1):
            for j in range(1, l):
                cabeza = nombre_e(n, l, i, j)
                reglas.append(Rule.de(cabeza, nombre_e(n, l + 1, i, j)))
                reglas.append(Rule.de(cabeza, nombre_e(n, l + 1, i, l), nombre_e(n, l + 1, l + 1, j)))
    return tuple(reglas)


def pasos_capas(n):
    """Las capas como pasos de extensión de dos cuerpos, uno por átomo ``e``."""
    return ExtensionSet(tuple(agrupar_por_cabeza(gen_ext_layers(n))))


def gen_cphp(n):
    """PHP con todas las capas de extensión."""
    return gen_php(n).con_reglas(gen_ext_layers(n))


def gen_php_selfloops(n):
    """PHP con ``p{i}_{j} <- p{i}_{j}``: no ajustado, igualmente insatisfacible."""
    return gen_php(n).con_reglas(Rule.de(nombre_p(i, j), nombre_p(i, j)) for i, j in _celdas(n))


def variable_p(n, i, j):
    return (i - 1) * n + j


def php_clausulas(n):
    """
    Codificación clausal: una cláusula por paloma y una por cada par de
    palomas en el mismo agujero. ``p{i}_{j}`` es la variable ``(i-1)·n + j``.
    """
    _exigir_n(n)
    clausulas = [frozenset(variable_p(n, i, j) for j in range(1, n + 1)) for i in range(1, n + 2)]
    for i in range(1, n + 2):
        for j in range(i + 1, n + 2):
            for k in range(1, n + 1):
                clausulas.append(frozenset([-variable_p(n, i, k), -variable_p(n, j, k)]))
    nombres = tuple(nombre_p(i, j) for i, j in _celdas(n))
    return ClauseSet(tuple(clausulas), len(nombres), nombres)


FAMILIAS = {
    "php": gen_php,
    "cphp": gen_cphp,
    "php-loops": gen_php_selfloops,
}
