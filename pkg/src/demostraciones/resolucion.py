"""
Demostraciones por resolución (general, arbórea y extendida) y sus
verificadores.

Los pasos se guardan en secuencia con índices explícitos a sus padres; la
forma arbórea se comprueba, no se impone en la estructura.
"""

from dataclasses import dataclass, field, replace
import logging

from src.errores import ErrorEntrada
from src.nucleo.clausulas import orden_clausula
from .veredicto import VALIDO, invalido

logger = logging.getLogger(__name__)

INICIAL = "initial"
RESUELTO = "resolved"
EXTENSION = "extension"


@dataclass(frozen=True)
class ExtensionTriple:
    """Paso de resolución extendida ``x ≡ l1 ∧ l2``."""

    var: int
    l1: int
    l2: int

    def clausulas(self):
        return (
            frozenset([self.var, -self.l1, -self.l2]),
            frozenset([-self.var, self.l1]),
            frozenset([-self.var, self.l2]),
        )


@dataclass(frozen=True)
class Paso:
    clausula: frozenset
    origen: str = INICIAL
    padres: tuple = ()
    pivote: int = None
    etiqueta: int = None   # índice de la tripleta para cláusulas de extensión


def pivotes(c1, c2):
    """Variables que aparecen con signos opuestos en ``c1`` y ``c2``."""
    return sorted({abs(l) for l in c1 if -l in c2})


def resolvente(c1, c2, pivote):
    return frozenset(l for l in c1 | c2 if abs(l) != pivote)


@dataclass
class ResolutionProof:
    """Secuencia de pasos; los índices son posiciones en ``pasos`` (base 0)."""

    pasos: list = field(default_factory=list)

    def agregar_inicial(self, clausula):
        self.pasos.append(Paso(frozenset(clausula)))
        return len(self.pasos) - 1

    def agregar_extension(self, clausula, etiqueta):
        self.pasos.append(Paso(frozenset(clausula), EXTENSION, etiqueta=etiqueta))
        return len(self.pasos) - 1

    def resolver(self, i, j, pivote=None):
        """Agrega la resolvente de los pasos ``i`` y ``j``."""
        c1, c2 = self.pasos[i].clausula, self.pasos[j].clausula
        if pivote is None:
            candidatos = pivotes(c1, c2)
            if len(candidatos) != 1:
                raise ErrorEntrada(f"los pasos {i} y {j} no tienen un único pivote: {candidatos}")
            pivote = candidatos[0]
        self.pasos.append(Paso(resolvente(c1, c2, pivote), RESUELTO, (i, j), pivote))
        return len(self.pasos) - 1

    def clausula(self, i):
        return self.pasos[i].clausula

    def recortar(self, i):
        """Demostración que termina en el paso ``i`` con sólo sus ancestros, renumerada."""
        necesarios = {i}
        for k in range(i, -1, -1):
            if k in necesarios:
                necesarios.update(self.pasos[k].padres)
        nuevos = {}
        pasos = []
        for k in sorted(necesarios):
            paso = self.pasos[k]
            nuevos[k] = len(pasos)
            pasos.append(replace(paso, padres=tuple(nuevos[p] for p in paso.padres)))
        return ResolutionProof(pasos)

    @property
    def final(self):
        return self.pasos[-1].clausula if self.pasos else None

    def es_refutacion(self):
        return bool(self.pasos) and not self.pasos[-1].clausula

    def resoluciones(self):
        return sum(1 for p in self.pasos if p.origen == RESUELTO)

    def __len__(self):
        return len(self.pasos)


def _verificar_pasos(proof, iniciales, extensiones, exigir_vacia):
    for i, paso in enumerate(proof.pasos):
        if paso.origen == RESUELTO:
            if len(paso.padres) != 2 or not all(0 <= p < i for p in paso.padres):
                return invalido("los padres deben preceder al paso", i)
            c1 = proof.pasos[paso.padres[0]].clausula
            c2 = proof.pasos[paso.padres[1]].clausula
            candidatos = pivotes(c1, c2)
            if not candidatos:
                return invalido("no hay pivote entre los padres", i)
            if len(candidatos) > 1:
                return invalido(f"sobreviven ambas polaridades de {candidatos[1:]}", i)
            if paso.pivote is not None and paso.pivote != candidatos[0]:
                return invalido(f"el pivote {paso.pivote} no aparece en ambos padres", i)
            if resolvente(c1, c2, candidatos[0]) != paso.clausula:
                return invalido("la cláusula no es la resolvente de sus padres", i)
        elif paso.origen == EXTENSION:
            if paso.clausula not in extensiones:
                return invalido("cláusula de extensión sin tripleta que la genere", i)
        elif paso.clausula not in iniciales:
            if paso.clausula in extensiones:
                continue
            return invalido(f"cláusula inicial ausente de la entrada: {orden_clausula(paso.clausula)}", i)
    if exigir_vacia and not proof.es_refutacion():
        return invalido("la demostración no termina en la cláusula vacía", len(proof.pasos) - 1)
    return VALIDO


def check_res_proof(clauses, proof, exigir_vacia=True):
    """Valida una demostración por resolución sobre ``clauses``."""
    return _verificar_pasos(proof, clauses.conjunto, frozenset(), exigir_vacia)


def is_tree_like(proof):
    """Cada cláusula derivada se usa como padre a lo sumo una vez."""
    usos = {}
    for paso in proof.pasos:
        for p in paso.padres:
            if proof.pasos[p].origen == RESUELTO:
                usos[p] = usos.get(p, 0) + 1
                if usos[p] > 1:
                    return False
    return True


def verificar_tripletas(clauses, triples):
    """Frescura y orden de las tripletas de extensión."""
    conocidas = set(range(1, clauses.num_vars + 1))
    for k, tripleta in enumerate(triples):
        if tripleta.var <= 0 or tripleta.var in conocidas:
            return invalido(f"la variable de extensión {tripleta.var} no es fresca", k)
        for l in (tripleta.l1, tripleta.l2):
            if l == 0 or abs(l) not in conocidas:
                return invalido(f"literal {l} fuera de las variables previas", k)
        conocidas.add(tripleta.var)
    return VALIDO


def check_eres_proof(clauses, triples, proof, exigir_vacia=True):
    """Como ``check_res_proof`` admitiendo las cláusulas de las tripletas."""
    veredicto = verificar_tripletas(clauses, triples)
    if not veredicto:
        return invalido(f"tripleta inválida: {veredicto.motivo}", veredicto.paso)
    extensiones = frozenset(c for t in triples for c in t.clausulas())
    return _verificar_pasos(proof, clauses.conjunto, extensiones, exigir_vacia)


class ConstructorResolucion:
    """Ayuda a construir demostraciones reutilizando cláusulas iniciales."""

    def __init__(self):
        self.prueba = ResolutionProof()
        self._iniciales = {}

    def inicial(self, clausula, etiqueta=None):
        clausula = frozenset(clausula)
        if clausula not in self._iniciales:
            if etiqueta is None:
                self._iniciales[clausula] = self.prueba.agregar_inicial(clausula)
            else:
                self._iniciales[clausula] = self.prueba.agregar_extension(clausula, etiqueta)
        return self._iniciales[clausula]

    def resolver(self, i, j, pivote=None):
        return self.prueba.resolver(i, j, pivote)

    def clausula(self, i):
        return self.prueba.clausula(i)
