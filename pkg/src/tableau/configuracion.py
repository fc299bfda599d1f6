"""
Configuración del motor de tableaux y contadores de la búsqueda.
"""

from dataclasses import dataclass, replace

from src.errores import ErrorConfiguracion
from .reglas import CONJUNTOS

ALCANCES = ("atoms", "atoms+bodies")
HEURISTICAS = ("lex", "moms", "random")


@dataclass(frozen=True)
class EngineConfig:
    """Parámetros de una resolución."""

    reglas: str = "full"
    alcance_corte: str = "atoms+bodies"
    heuristica: str = "lex"
    semilla: int = 0
    lookahead: bool = False
    limite_bucle: int = 15        # tamaño máximo de componente para lazos
    limite_decisiones: int = None # sin límite por defecto
    limite_segundos: float = None # tiempo de pared, comprobado en decisiones, propagación y sondeos

    @classmethod
    def preset(cls, nombre, **cambios):
        """Configuración predefinida; ``smodels`` corta sólo sobre átomos."""
        alcance = "atoms" if nombre == "smodels" else "atoms+bodies"
        config = cls(reglas=nombre, alcance_corte=alcance)
        return replace(config, **cambios) if cambios else config

    @property
    def conjunto_reglas(self):
        return CONJUNTOS[self.reglas]

    @property
    def semantica(self):
        return "supported-model semantics" if self.reglas == "supported" else "stable-model semantics"

    def validar(self):
        """
        Valida la combinación de parámetros.

        Returns:
            Tupla ``(es_valido, mensaje)``.
        """
        if self.reglas not in CONJUNTOS:
            return False, f"conjunto de reglas desconocido: {self.reglas}"
        if self.alcance_corte not in ALCANCES:
            return False, f"alcance de corte desconocido: {self.alcance_corte}"
        if self.heuristica not in HEURISTICAS:
            return False, f"heurística desconocida: {self.heuristica}"
        if self.reglas == "smodels" and self.alcance_corte != "atoms":
            return False, "el conjunto smodels corta sólo sobre átomos"
        if self.limite_bucle < 1:
            return False, "el límite de lazos debe ser positivo"
        if self.limite_decisiones is not None and self.limite_decisiones < 0:
            return False, "el límite de decisiones no puede ser negativo"
        if self.limite_segundos is not None and self.limite_segundos <= 0:
            return False, "el límite de tiempo debe ser positivo"
        return True, ""

    def exigir_valida(self):
        es_valido, mensaje = self.validar()
        if not es_valido:
            raise ErrorConfiguracion(mensaje)
        return self


@dataclass
class SolveStats:
    """Contadores de una resolución."""

    decisiones: int = 0   # cortes elegidos por la heurística
    sondeos: int = 0      # pruebas de lookahead
    forzadas: int = 0     # cortes de lookahead con una rama cerrada
    entradas: int = 0     # nodos creados en la demostración
    ramas_cerradas: int = 0
