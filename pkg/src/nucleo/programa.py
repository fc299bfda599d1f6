"""
Modelo de datos de programas lógicos normales fijos (sin variables).

Un programa es una secuencia inmutable de reglas ``h <- B``. La cabeza puede
ser el pseudoátomo ``BOT`` (falsedad), con lo que la regla actúa como
restricción. Los cuerpos son conjuntos canónicos de literales por defecto, de
modo que dos cuerpos estructuralmente iguales son el mismo objeto de tableau.
"""

from dataclasses import dataclass, field
from functools import cached_property
import re

from src.errores import ErrorEntrada

# Pseudoátomo de falsedad
BOT = "⊥"

_SIMBOLO = re.compile(r"^[A-Za-z_][A-Za-z0-9_']*$")


def es_simbolo_valido(simbolo):
    return bool(_SIMBOLO.match(simbolo))


@dataclass(frozen=True)
class Literal:
    """Literal por defecto: un átomo ``a`` o su negación ``not a``."""

    atom: str
    positive: bool = True

    @classmethod
    def desde_texto(cls, texto):
        """Convierte ``"a"`` o ``"not a"`` en un literal."""
        partes = texto.split()
        if len(partes) == 2 and partes[0] == "not":
            return cls(partes[1], False)
        if len(partes) == 1:
            return cls(partes[0], True)
        raise ErrorEntrada(f"literal mal formado: {texto!r}")

    def negado(self):
        return Literal(self.atom, not self.positive)

    def clave(self):
        # Orden canónico: por átomo, el positivo antes que el negativo
        return (self.atom, 0 if self.positive else 1)

    def __str__(self):
        return self.atom if self.positive else f"not {self.atom}"


@dataclass(frozen=True)
class Body:
    """Cuerpo de regla: conjunto de literales sin repeticiones en orden canónico."""

    literales: tuple = ()

    def __post_init__(self):
        canonicos = tuple(sorted(set(self.literales), key=Literal.clave))
        object.__setattr__(self, "literales", canonicos)

    @classmethod
    def de(cls, *textos):
        return cls(tuple(Literal.desde_texto(t) if isinstance(t, str) else t for t in textos))

    @property
    def pos(self):
        """Átomos positivos del cuerpo (B+)."""
        return frozenset(l.atom for l in self.literales if l.positive)

    @property
    def neg(self):
        """Átomos negados del cuerpo (B-)."""
        return frozenset(l.atom for l in self.literales if not l.positive)

    @property
    def atomos(self):
        return frozenset(l.atom for l in self.literales)

    def satisfecho_por(self, modelo):
        return self.pos <= modelo and not (self.neg & modelo)

    def __len__(self):
        return len(self.literales)

    def __iter__(self):
        return iter(self.literales)

    def __contains__(self, literal):
        return literal in self.literales

    def __str__(self):
        return "{" + ", ".join(str(l) for l in self.literales) + "}"


@dataclass(frozen=True)
class Rule:
    """Regla ``head <- body``; cuerpo vacío significa hecho."""

    head: str
    body: Body = field(default_factory=Body)

    @classmethod
    def de(cls, head, *textos):
        """Atajo: ``Rule.de("a", "b", "not c")`` construye ``a <- b, not c``."""
        return cls(head, Body.de(*textos))

    def es_restriccion(self):
        return self.head == BOT

    def __str__(self):
        cabeza = "" if self.head == BOT else self.head
        if not self.body.literales:
            return f"{cabeza}."
        cuerpo = ", ".join(str(l) for l in self.body)
        return f"{cabeza} :- {cuerpo}." if cabeza else f":- {cuerpo}."


@dataclass(frozen=True)
class Program:
    """
    Programa lógico normal fijo.

    ``declarados`` permite fijar átomos que no aparecen en ninguna regla
    (por ejemplo tras una evaluación parcial). La tabla de símbolos sigue el
    orden de primera aparición.
    """

    rules: tuple = ()
    declarados: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "rules", tuple(self.rules))
        object.__setattr__(self, "declarados", tuple(self.declarados))

    @cached_property
    def atoms(self):
        """atom(Π) en orden de primera aparición, sin ``BOT``."""
        vistos = {}
        for regla in self.rules:
            if regla.head != BOT:
                vistos.setdefault(regla.head, None)
            for literal in regla.body:
                if literal.atom != BOT:
                    vistos.setdefault(literal.atom, None)
        for atomo in self.declarados:
            if atomo != BOT:
                vistos.setdefault(atomo, None)
        return tuple(vistos)

    @cached_property
    def atom_set(self):
        return frozenset(self.atoms)

    @cached_property
    def indice(self):
        """Posición de cada átomo en la tabla de símbolos."""
        return {atomo: i for i, atomo in enumerate(self.atoms)}

    @cached_property
    def bodies(self):
        """body(Π) sin repeticiones, en orden de primera aparición."""
        return tuple(dict.fromkeys(regla.body for regla in self.rules))

    @cached_property
    def body_set(self):
        return frozenset(self.bodies)

    @cached_property
    def heads(self):
        """head(Π), sin ``BOT``."""
        return frozenset(r.head for r in self.rules if r.head != BOT)

    @cached_property
    def rules_by_head(self):
        por_cabeza = {}
        for regla in self.rules:
            por_cabeza.setdefault(regla.head, []).append(regla)
        return {cabeza: tuple(reglas) for cabeza, reglas in por_cabeza.items()}

    @cached_property
    def dlit(self):
        """dlit(Π) = {a, not a | a en atom(Π)}."""
        return tuple(Literal(a, signo) for a in self.atoms for signo in (True, False))

    def bodies_of(self, head):
        """Cuerpos distintos de las reglas con cabeza ``head``."""
        return tuple(dict.fromkeys(r.body for r in self.rules_by_head.get(head, ())))

    def con_reglas(self, reglas):
        """Programa extendido con ``reglas`` al final."""
        return Program(self.rules + tuple(reglas), self.declarados)

    def es_positivo(self):
        return all(not r.body.neg for r in self.rules)

    def validar_interpretacion(self, modelo):
        """Lanza ``ErrorEntrada`` si ``modelo`` contiene átomos ajenos al programa."""
        ajenos = set(modelo) - self.atom_set
        if ajenos:
            raise ErrorEntrada(f"átomos desconocidos en la interpretación: {sorted(ajenos)}")
        return frozenset(modelo)

    def advertencias(self):
        """Observaciones no fatales sobre el programa."""
        avisos = []
        vistas = set()
        for regla in self.rules:
            if BOT in regla.body.atomos:
                avisos.append(f"'{BOT}' aparece en el cuerpo de: {regla}")
            if regla in vistas:
                avisos.append(f"regla duplicada: {regla}")
            vistas.add(regla)
        return avisos

    def __len__(self):
        return len(self.rules)

    def __iter__(self):
        return iter(self.rules)

    def __str__(self):
        return "\n".join(str(r) for r in self.rules)
