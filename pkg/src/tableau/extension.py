"""
Regla de extensión: agrega reglas con cabezas frescas sobre los literales
disponibles en cada etapa.
"""

from dataclasses import dataclass
import logging

from src.errores import ErrorExtension
from src.nucleo.programa import BOT, Rule

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExtensionStep:
    """Una aplicación de la regla de extensión: cabeza fresca y sus cuerpos."""

    head: str
    bodies: tuple

    def reglas(self):
        return tuple(Rule(self.head, cuerpo) for cuerpo in self.bodies)

    def es_elemental(self):
        return len(self.bodies) == 1 and 1 <= len(self.bodies[0]) <= 2


@dataclass(frozen=True)
class ExtensionSet:
    """Lista ordenada de pasos de extensión."""

    steps: tuple = ()

    def rules(self):
        return tuple(r for paso in self.steps for r in paso.reglas())

    def cabezas(self):
        return tuple(p.head for p in self.steps)

    def aplicar(self, program):
        """El programa ``Π ∪ E``."""
        return program.con_reglas(self.rules())

    def __len__(self):
        # Cuenta reglas, no pasos
        return sum(len(p.bodies) for p in self.steps)

    def __iter__(self):
        return iter(self.steps)


def agrupar_por_cabeza(reglas):
    """Agrupa reglas consecutivas con la misma cabeza en pasos generales."""
    pasos = []
    for regla in reglas:
        if pasos and pasos[-1][0] == regla.head:
            pasos[-1][1].append(regla.body)
        else:
            pasos.append((regla.head, [regla.body]))
    return [ExtensionStep(cabeza, tuple(dict.fromkeys(cuerpos))) for cabeza, cuerpos in pasos]


def validar_pasos(program, pasos, previos=()):
    """
    Comprueba frescura y alcance de cada paso respecto de la etapa en que se
    introduce.

    Raises:
        ErrorExtension: cabeza repetida o literal sobre un átomo desconocido.
    """
    conocidos = set(program.atoms)
    for paso in previos:
        conocidos.add(paso.head)
    for paso in pasos:
        if paso.head == BOT or paso.head in conocidos:
            raise ErrorExtension(f"la cabeza '{paso.head}' no es fresca")
        if not paso.bodies:
            raise ErrorExtension(f"el paso de extensión de '{paso.head}' no tiene cuerpos")
        for cuerpo in paso.bodies:
            desconocidos = cuerpo.atomos - conocidos
            if desconocidos:
                raise ErrorExtension(
                    f"'{paso.head}' usa átomos fuera de la etapa actual: {sorted(desconocidos)}"
                )
        conocidos.add(paso.head)


def extend(program, e, nuevas_reglas):
    """
    Devuelve ``e`` ampliado con ``nuevas_reglas``. Reglas consecutivas con la
    misma cabeza forman una única aplicación de la forma general.
    """
    pasos = agrupar_por_cabeza(nuevas_reglas)
    validar_pasos(program, pasos, e.steps)
    logger.debug("extensión: %d pasos nuevos", len(pasos))
    return ExtensionSet(e.steps + tuple(pasos))
