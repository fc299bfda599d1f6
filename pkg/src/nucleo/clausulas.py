"""
Lado clausal: cláusulas como conjuntos de enteros con signo (estilo DIMACS)
y conjuntos de cláusulas con tabla de nombres de variables.
"""

from dataclasses import dataclass
from functools import cached_property
from itertools import product
import logging

from src.errores import ErrorEntrada, LimiteExcedido

logger = logging.getLogger(__name__)


def clausula(*literales):
    """Crea una cláusula a partir de literales enteros no nulos."""
    if any(l == 0 for l in literales):
        raise ErrorEntrada("el literal 0 no es válido en una cláusula")
    return frozenset(literales)


def orden_clausula(c):
    """Literales en orden canónico: por variable, positivo antes que negativo."""
    return sorted(c, key=lambda l: (abs(l), l < 0))


def es_tautologia(c):
    return any(-l in c for l in c)


def falsificada_por(c, asignacion):
    """``True`` si la asignación parcial hace falsos todos los literales de ``c``."""
    return all(asignacion.get(abs(l)) is (l < 0) for l in c)


@dataclass(frozen=True)
class ClauseSet:
    """
    Conjunto de cláusulas sobre las variables ``1..num_vars``.

    ``nombres[v-1]`` es el nombre simbólico de la variable ``v`` (opcional).
    """

    clausulas: tuple
    num_vars: int
    nombres: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "clausulas", tuple(frozenset(c) for c in self.clausulas))
        maximo = max((abs(l) for c in self.clausulas for l in c), default=0)
        if maximo > self.num_vars:
            raise ErrorEntrada(f"la variable {maximo} excede num_vars={self.num_vars}")
        for c in self.clausulas:
            if es_tautologia(c):
                logger.warning("cláusula tautológica: %s", orden_clausula(c))

    @cached_property
    def variables(self):
        return tuple(range(1, self.num_vars + 1))

    @cached_property
    def conjunto(self):
        return frozenset(self.clausulas)

    def nombre(self, var):
        if self.nombres and var <= len(self.nombres):
            return self.nombres[var - 1]
        return f"x{var}"

    def variable(self, nombre):
        """Índice de la variable llamada ``nombre``."""
        try:
            return self.nombres.index(nombre) + 1
        except ValueError:
            raise ErrorEntrada(f"variable desconocida: {nombre}") from None

    def satisface(self, verdaderas):
        """``verdaderas`` es el conjunto de variables asignadas a verdadero."""
        return all(any((l > 0) == (abs(l) in verdaderas) for l in c) for c in self.clausulas)

    def enumerate_satisfying(self, limite=20):
        """Todas las asignaciones satisfactorias como conjuntos de variables verdaderas."""
        if self.num_vars > limite:
            raise LimiteExcedido(f"el oráculo admite hasta {limite} variables")
        modelos = set()
        for valores in product((False, True), repeat=self.num_vars):
            verdaderas = frozenset(v for v, b in zip(self.variables, valores) if b)
            if self.satisface(verdaderas):
                modelos.add(verdaderas)
        return modelos

    def __len__(self):
        return len(self.clausulas)

    def __iter__(self):
        return iter(self.clausulas)
