"""
Entradas firmadas, nodos de demostración, ramas y demostraciones de tableau.

Una demostración es un árbol almacenado como lista de nodos: el nodo 0 es la
raíz ``F⊥`` y cada nodo conoce a su padre. Un corte produce dos hermanos con
el mismo objeto y signos opuestos; cualquier otro nodo es hijo único.
"""

from dataclasses import dataclass, field
from functools import cached_property

from src.nucleo.programa import BOT, Body
from .extension import ExtensionSet

# Identificadores de regla de la raíz y del corte
RAIZ = "root"
CORTE = "cut"


@dataclass(frozen=True)
class Entry:
    """Entrada firmada ``T φ`` o ``F φ`` sobre un átomo, un cuerpo o ``⊥``."""

    sign: bool
    obj: object

    def opuesta(self):
        return Entry(not self.sign, self.obj)

    @property
    def es_cuerpo(self):
        return isinstance(self.obj, Body)

    def __str__(self):
        return ("T" if self.sign else "F") + str(self.obj)


def t(literal):
    """Entrada que hace verdadero al literal (``t l``)."""
    return Entry(literal.positive, literal.atom)


def f(literal):
    """Entrada que hace falso al literal (``f l``)."""
    return Entry(not literal.positive, literal.atom)


@dataclass(frozen=True)
class ProofNode:
    """Nodo de tableau: entrada más su justificación."""

    id: int
    parent: object
    entry: Entry
    rule: str
    premises: tuple = ()
    witness: object = None


def nodo_raiz():
    return ProofNode(0, None, Entry(False, BOT), RAIZ)


@dataclass(frozen=True)
class Branch:
    """Secuencia de nodos desde la raíz hasta una hoja."""

    nodos: tuple

    @classmethod
    def inicial(cls):
        return cls((nodo_raiz(),))

    @cached_property
    def asignacion(self):
        """Objeto -> signo, con el primer signo asignado a cada objeto."""
        valores = {}
        for nodo in self.nodos:
            valores.setdefault(nodo.entry.obj, nodo.entry.sign)
        return valores

    @property
    def contradictoria(self):
        vistas = {}
        for nodo in self.nodos:
            previo = vistas.setdefault(nodo.entry.obj, nodo.entry.sign)
            if previo != nodo.entry.sign:
                return True
        return False

    @property
    def entradas(self):
        return [n.entry for n in self.nodos]

    @property
    def hoja(self):
        return self.nodos[-1]

    def __len__(self):
        return len(self.nodos)


@dataclass
class TableauProof:
    """Árbol de tableau con el conjunto de extensión usado."""

    nodes: list
    extension: ExtensionSet = field(default_factory=ExtensionSet)

    def nodo(self, id_nodo):
        return self.nodes[id_nodo]

    def hijos(self, id_nodo):
        return self._hijos.get(id_nodo, [])

    @property
    def _hijos(self):
        hijos = {}
        for nodo in self.nodes:
            if nodo.parent is not None:
                hijos.setdefault(nodo.parent, []).append(nodo.id)
        return hijos

    def hojas(self):
        """Identificadores de los nodos sin hijos."""
        padres = {n.parent for n in self.nodes}
        return [n.id for n in self.nodes if n.id not in padres]

    def camino(self, id_nodo):
        """Identificadores desde la raíz hasta ``id_nodo`` inclusive."""
        camino = []
        actual = id_nodo
        while actual is not None:
            camino.append(actual)
            actual = self.nodes[actual].parent
        return camino[::-1]

    def rama(self, id_nodo):
        return Branch(tuple(self.nodes[i] for i in self.camino(id_nodo)))

    def cortes(self):
        """Cantidad de aplicaciones de la regla de corte."""
        return sum(1 for n in self.nodes if n.rule == CORTE) // 2

    def longitud(self):
        """Número de entradas más el número de reglas de extensión."""
        return len(self.nodes) + len(self.extension)

    def __len__(self):
        return len(self.nodes)


def proof_length(proof):
    return proof.longitud()
