"""
Traducciones fieles entre CNF y programas lógicos normales.

``to_asp`` codifica cada variable con un par de reglas de elección y cada
cláusula con un átomo que debe derivarse; ``to_cnf`` produce la compleción
clausal con una variable por átomo y otra por cuerpo.
"""

from dataclasses import dataclass
from functools import cached_property
import logging

from src.errores import ErrorEntrada
from src.nucleo.programa import BOT, Body, Literal, Program, Rule
from src.nucleo.clausulas import ClauseSet
from src.nucleo.semantica import is_stable

logger = logging.getLogger(__name__)

# Tipos de entrada del mapa de nombres
VARIABLE = "var"
COMPLEMENTO = "comp"
CLAUSULA = "clause"
ATOMO = "atom"
CUERPO = "body"


def texto_cuerpo(cuerpo):
    """Texto canónico sin espacios: ``b,-a``; el cuerpo vacío es ``""``."""
    return ",".join(l.atom if l.positive else f"-{l.atom}" for l in cuerpo)


def cuerpo_desde_texto(texto):
    if not texto:
        return Body()
    return Body(tuple(Literal(p[1:], False) if p.startswith("-") else Literal(p) for p in texto.split(",")))


@dataclass(frozen=True)
class NameMap:
    """
    Correspondencia entre objetos de un lado y nombres del otro.

    ``entradas`` son cuádruplas ``(tipo, objeto, nombre, var)``: para
    ``to_asp`` el objeto es la variable o el índice de cláusula y el nombre el
    átomo fresco; para ``to_cnf`` el objeto es el átomo o el cuerpo y ``var``
    la variable CNF.
    """

    origen: str
    entradas: tuple

    @cached_property
    def _por_objeto(self):
        return {(tipo, objeto): (nombre, var) for tipo, objeto, nombre, var in self.entradas}

    @cached_property
    def _por_nombre(self):
        return {nombre: (tipo, objeto, var) for tipo, objeto, nombre, var in self.entradas}

    def atomo_de_variable(self, v):
        return self._por_objeto[(VARIABLE, v)][0]

    def complemento_de_variable(self, v):
        return self._por_objeto[(COMPLEMENTO, v)][0]

    def atomo_de_clausula(self, i):
        return self._por_objeto[(CLAUSULA, i)][0]

    def var_de_atomo(self, atomo):
        return self._por_objeto[(ATOMO, atomo)][1]

    def var_de_cuerpo(self, cuerpo):
        return self._por_objeto[(CUERPO, cuerpo)][1]

    def var_de_literal(self, literal):
        """Literal CNF ``x_l``: ``x_a`` para ``a`` y ``-x_a`` para ``not a``."""
        v = self.var_de_atomo(literal.atom)
        return v if literal.positive else -v

    def buscar(self, nombre):
        return self._por_nombre.get(nombre)

    def de_tipo(self, tipo):
        return [(objeto, nombre, var) for t, objeto, nombre, var in self.entradas if t == tipo]

    def lineas(self):
        """Archivo auxiliar: una tripleta ``tipo nombre var`` por línea."""
        return [f"{tipo} {nombre} {var}" for tipo, _, nombre, var in self.entradas]

    @classmethod
    def desde_lineas(cls, lineas, origen):
        entradas = []
        for numero, linea in enumerate(lineas, 1):
            linea = linea.strip()
            if not linea or linea.startswith("c "):
                continue
            partes = linea.split()
            if len(partes) != 3:
                raise ErrorEntrada(f"línea {numero} del mapa de nombres mal formada: {linea!r}")
            tipo, nombre, var = partes[0], partes[1], int(partes[2])
            if tipo == ATOMO:
                objeto = nombre[len("x@atom:"):]
            elif tipo == CUERPO:
                objeto = cuerpo_desde_texto(nombre[len("x@body:"):])
            else:
                objeto = var
            entradas.append((tipo, objeto, nombre, var))
        return cls(origen, tuple(entradas))


def to_asp(clauses):
    """
    Programa cuyos modelos estables corresponden biyectivamente con las
    asignaciones que satisfacen ``clauses``.

    Returns:
        Tupla ``(Program, NameMap)``.
    """
    if clauses.num_vars < 1:
        raise ErrorEntrada("el conjunto de cláusulas no tiene variables")
    entradas = []
    reglas = []
    for v in clauses.variables:
        positivo, negativo = f"a{v}", f"a{v}'"
        entradas.append((VARIABLE, v, positivo, v))
        entradas.append((COMPLEMENTO, v, negativo, v))
        reglas.append(Rule.de(positivo, f"not {negativo}"))
        reglas.append(Rule.de(negativo, f"not {positivo}"))
    vistas = set()
    indice = 0
    for clausula in clauses.clausulas:
        if clausula in vistas:
            logger.warning("cláusula duplicada omitida: %s", sorted(clausula, key=abs))
            continue
        vistas.add(clausula)
        indice += 1
        atomo = f"c{indice}"
        entradas.append((CLAUSULA, indice, atomo, indice))
        reglas.append(Rule.de(BOT, f"not {atomo}"))
        for literal in sorted(clausula, key=lambda l: (abs(l), l < 0)):
            texto = f"a{abs(literal)}" if literal > 0 else f"not a{abs(literal)}"
            reglas.append(Rule.de(atomo, texto))
    return Program(reglas), NameMap("to_asp", tuple(entradas))


def to_cnf(program):
    """
    Compleción clausal de ``program``.

    Grupos emitidos en orden: definición de cada cuerpo ``x_B ≡ ∧ x_l``,
    unitarias ``¬x_B`` para los cuerpos de restricciones, definición de cada
    cabeza ``x_h ≡ ∨ x_B`` y unitarias ``¬x_a`` para los átomos sin reglas.

    Returns:
        Tupla ``(ClauseSet, NameMap)``.

    Raises:
        ErrorEntrada: ``⊥`` aparece en el cuerpo de una regla.
    """
    for regla in program.rules:
        if any(l.atom == BOT for l in regla.body):
            raise ErrorEntrada(f"⊥ en el cuerpo de una regla de {regla.head}")
    entradas = []
    nombres = []
    for atomo in program.atoms:
        nombres.append(f"x@atom:{atomo}")
        entradas.append((ATOMO, atomo, nombres[-1], len(nombres)))
    for cuerpo in program.bodies:
        nombres.append(f"x@body:{texto_cuerpo(cuerpo)}")
        entradas.append((CUERPO, cuerpo, nombres[-1], len(nombres)))
    mapa = NameMap("to_cnf", tuple(entradas))

    clausulas = []
    for cuerpo in program.bodies:
        xb = mapa.var_de_cuerpo(cuerpo)
        lits = [mapa.var_de_literal(l) for l in cuerpo]
        clausulas.append(frozenset([xb] + [-x for x in lits]))
        for x in lits:
            clausulas.append(frozenset([-xb, x]))
    for cuerpo in program.bodies_of(BOT):
        clausulas.append(frozenset([-mapa.var_de_cuerpo(cuerpo)]))
    for atomo in program.atoms:
        cuerpos = program.bodies_of(atomo)
        if not cuerpos:
            continue
        xa = mapa.var_de_atomo(atomo)
        clausulas.append(frozenset([-xa] + [mapa.var_de_cuerpo(c) for c in cuerpos]))
        for cuerpo in cuerpos:
            clausulas.append(frozenset([xa, -mapa.var_de_cuerpo(cuerpo)]))
    for atomo in program.atoms:
        if not program.bodies_of(atomo):
            clausulas.append(frozenset([-mapa.var_de_atomo(atomo)]))
    return ClauseSet(tuple(clausulas), len(nombres), tuple(nombres)), mapa


def map_models(direccion, m, names, lado=None):
    """
    Traslada un modelo al otro lado de la traducción que generó ``names``.

    ``direccion`` es ``"hacia_cnf"`` (modelo estable -> asignación) o
    ``"hacia_asp"`` (asignación -> modelo estable). Las asignaciones son
    conjuntos de variables verdaderas. Si se da ``lado`` (el programa o el
    conjunto de cláusulas de partida) se comprueba que ``m`` sea modelo; sin
    ``lado`` la conversión no comprueba nada y confía en ``m``. La única
    dirección que exige ``lado`` es ``"hacia_asp"`` desde ``to_asp``.

    Raises:
        ErrorEntrada: dirección desconocida o ``m`` no es modelo de su lado.
    """
    m = frozenset(m)
    if names.origen == "to_asp":
        if direccion == "hacia_cnf":
            if lado is not None and not is_stable(lado, m):
                raise ErrorEntrada("la interpretación no es un modelo estable del programa")
            return frozenset(v for _, nombre, v in names.de_tipo(VARIABLE) if nombre in m)
        if direccion == "hacia_asp":
            # Los átomos de cláusula dependen de las cláusulas originales
            if lado is None:
                raise ErrorEntrada("se necesitan las cláusulas originales para reconstruir el modelo")
            if not lado.satisface(m):
                raise ErrorEntrada("la asignación no satisface las cláusulas")
            modelo = set()
            for v, nombre, _ in names.de_tipo(VARIABLE):
                modelo.add(nombre if v in m else names.complemento_de_variable(v))
            for i, clausula in enumerate(dict.fromkeys(lado.clausulas), 1):
                if any((l > 0) == (abs(l) in m) for l in clausula):
                    modelo.add(names.atomo_de_clausula(i))
            return frozenset(modelo)
    elif names.origen == "to_cnf":
        if direccion == "hacia_asp":
            if lado is not None and not lado.satisface(m):
                raise ErrorEntrada("la asignación no satisface la compleción")
            return frozenset(atomo for atomo, _, v in names.de_tipo(ATOMO) if v in m)
        if direccion == "hacia_cnf":
            if lado is not None and not is_stable(lado, m):
                raise ErrorEntrada("la interpretación no es un modelo estable del programa")
            verdaderas = {v for atomo, _, v in names.de_tipo(ATOMO) if atomo in m}
            verdaderas |= {v for cuerpo, _, v in names.de_tipo(CUERPO) if cuerpo.satisfecho_por(m)}
            return frozenset(verdaderas)
    raise ErrorEntrada(f"dirección desconocida: {direccion}")
