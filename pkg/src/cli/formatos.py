"""
Lectura y escritura de los formatos de archivo del laboratorio.

- Programas: ``h :- l1, not l2.``, ``h.`` y ``:- l1.`` con comentarios ``%``.
- CNF: DIMACS estándar.
- Resolución: un paso por línea, ``<id> <lits> 0 [<p1> <p2>]``, precedido
  por las tripletas ``e <var> <l1> <l2>``; los índices empiezan en 1.
- Tableau: líneas ``x`` con los pasos de extensión y líneas ``n`` con un
  nodo por línea.
"""

import logging

from lark import Lark, Transformer, v_args
from lark.exceptions import UnexpectedInput, VisitError

from src.errores import ErrorSintaxis
from src.nucleo.clausulas import ClauseSet, orden_clausula
from src.nucleo.programa import BOT, Body, Literal, Program, Rule, es_simbolo_valido
from src.demostraciones.resolucion import EXTENSION, INICIAL, RESUELTO, ExtensionTriple, Paso, ResolutionProof
from src.puente.traducciones import cuerpo_desde_texto, texto_cuerpo
from src.tableau.entradas import Entry, ProofNode, TableauProof
from src.tableau.extension import ExtensionSet, ExtensionStep
from src.tableau import reglas as R

logger = logging.getLogger(__name__)

# ----------------------------------------------------------------------
# Programas
# ----------------------------------------------------------------------

_GRAMATICA = r"""
    start: regla*

    regla: ATOMO ":-" cuerpo "."   -> regla
         | ATOMO "."               -> hecho
         | ":-" cuerpo "."         -> restriccion

    cuerpo: literal ("," literal)*

    literal: ATOMO                 -> positivo
           | "not" ATOMO           -> negativo

    ATOMO: /[A-Za-z_][A-Za-z0-9_']*/
    COMENTARIO: /%[^\n]*/

    %import common.WS
    %ignore WS
    %ignore COMENTARIO
"""


@v_args(inline=True)
class _ProgramaTransformer(Transformer):
    def start(self, *reglas):
        return list(reglas)

    def regla(self, cabeza, cuerpo):
        return Rule(str(cabeza), cuerpo)

    def hecho(self, cabeza):
        return Rule(str(cabeza))

    def restriccion(self, cuerpo):
        return Rule(BOT, cuerpo)

    def cuerpo(self, *literales):
        return Body(literales)

    def positivo(self, atomo):
        return Literal(str(atomo))

    def negativo(self, atomo):
        return Literal(str(atomo), False)


_PARSER_PROGRAMA = Lark(_GRAMATICA, parser="lalr", transformer=_ProgramaTransformer())


def parse_program(texto):
    """
    Programa desde texto.

    Raises:
        ErrorSintaxis: con la línea y la columna del primer error.
    """
    try:
        reglas = _PARSER_PROGRAMA.parse(texto)
    except UnexpectedInput as exc:
        raise ErrorSintaxis(f"entrada inesperada {exc.get_context(texto).strip()!r}", exc.line, exc.column) from None
    except VisitError as exc:
        raise ErrorSintaxis(str(exc.orig_exc)) from None
    programa = Program(reglas)
    for aviso in programa.advertencias():
        logger.warning(aviso)
    return programa


def serialize_program(program, encabezado=None):
    """Texto del programa; ``encabezado`` se escribe como comentario inicial."""
    lineas = []
    if encabezado:
        lineas.append(f"% {encabezado}")
    lineas.extend(str(regla) for regla in program.rules)
    return "\n".join(lineas) + "\n"


# ----------------------------------------------------------------------
# DIMACS
# ----------------------------------------------------------------------

def _enteros(partes, numero):
    try:
        return [int(p) for p in partes]
    except ValueError:
        raise ErrorSintaxis(f"se esperaban enteros: {' '.join(partes)!r}", numero) from None


def parse_dimacs(texto, nombres=()):
    """
    ``ClauseSet`` desde DIMACS. Las cláusulas pueden ocupar varias líneas.

    Raises:
        ErrorSintaxis: cabecera ausente o mal formada, literal fuera de rango o
            cantidad de cláusulas distinta de la declarada.
    """
    num_vars = num_clausulas = None
    clausulas = []
    actual = []
    for numero, linea in enumerate(texto.splitlines(), 1):
        linea = linea.strip()
        if not linea or linea.startswith("c") or linea.startswith("%"):
            continue
        if linea.startswith("p"):
            partes = linea.split()
            if num_vars is not None or len(partes) != 4 or partes[1] != "cnf":
                raise ErrorSintaxis(f"cabecera mal formada: {linea!r}", numero)
            num_vars, num_clausulas = _enteros(partes[2:], numero)
            continue
        if num_vars is None:
            raise ErrorSintaxis("cláusula antes de la cabecera 'p cnf'", numero)
        for literal in _enteros(linea.split(), numero):
            if literal == 0:
                clausulas.append(frozenset(actual))
                actual = []
            elif abs(literal) > num_vars:
                raise ErrorSintaxis(f"la variable {abs(literal)} excede {num_vars}", numero)
            else:
                actual.append(literal)
    if num_vars is None:
        raise ErrorSintaxis("falta la cabecera 'p cnf'")
    if actual:
        clausulas.append(frozenset(actual))
    if len(clausulas) != num_clausulas:
        raise ErrorSintaxis(f"se declararon {num_clausulas} cláusulas y hay {len(clausulas)}")
    return ClauseSet(tuple(clausulas), num_vars, tuple(nombres))


def serialize_dimacs(clauses):
    lineas = [f"p cnf {clauses.num_vars} {len(clauses)}"]
    for c in clauses:
        lineas.append(" ".join(str(l) for l in orden_clausula(c) + [0]))
    return "\n".join(lineas) + "\n"


# ----------------------------------------------------------------------
# Demostraciones por resolución
# ----------------------------------------------------------------------

def serialize_res_proof(proof, triples=()):
    lineas = [f"e {t.var} {t.l1} {t.l2}" for t in triples]
    for i, paso in enumerate(proof.pasos, 1):
        partes = [str(i)] + [str(l) for l in orden_clausula(paso.clausula)] + ["0"]
        if paso.origen == RESUELTO:
            partes += [str(p + 1) for p in paso.padres]
        lineas.append(" ".join(partes))
    return "\n".join(lineas) + "\n"


def parse_res_proof(texto):
    """
    Tripletas y demostración. Las cláusulas sin padres que coinciden con una
    cláusula de tripleta se marcan como de extensión.

    Returns:
        Tupla ``(tripletas, ResolutionProof)``.

    Raises:
        ErrorSintaxis: identificadores fuera de secuencia o línea mal formada.
    """
    tripletas = []
    pasos = []
    for numero, linea in enumerate(texto.splitlines(), 1):
        linea = linea.strip()
        if not linea or linea.startswith("c"):
            continue
        partes = linea.split()
        if partes[0] == "e":
            if pasos or len(partes) != 4:
                raise ErrorSintaxis("tripleta mal ubicada o mal formada", numero)
            tripletas.append(ExtensionTriple(*_enteros(partes[1:], numero)))
            continue
        valores = _enteros(partes, numero)
        if valores[0] != len(pasos) + 1:
            raise ErrorSintaxis(f"se esperaba el identificador {len(pasos) + 1}", numero)
        if 0 not in valores[1:]:
            raise ErrorSintaxis("falta el 0 que cierra la cláusula", numero)
        cero = valores.index(0, 1)
        clausula = frozenset(valores[1:cero])
        padres = valores[cero + 1:]
        if not padres:
            pasos.append(Paso(clausula, INICIAL))
        elif len(padres) == 2 and all(1 <= p <= len(pasos) for p in padres):
            pasos.append(Paso(clausula, RESUELTO, tuple(p - 1 for p in padres)))
        else:
            raise ErrorSintaxis(f"padres inválidos: {padres}", numero)
    de_tripleta = {}
    for k, tripleta in enumerate(tripletas):
        for c in tripleta.clausulas():
            de_tripleta.setdefault(c, k)
    for i, paso in enumerate(pasos):
        if paso.origen == INICIAL and paso.clausula in de_tripleta:
            pasos[i] = Paso(paso.clausula, EXTENSION, etiqueta=de_tripleta[paso.clausula])
    return tuple(tripletas), ResolutionProof(pasos)


# ----------------------------------------------------------------------
# Demostraciones de tableau
# ----------------------------------------------------------------------

def _texto_objeto(obj):
    if isinstance(obj, Body):
        return "{" + texto_cuerpo(obj) + "}"
    return obj


def _objeto_desde_texto(texto, numero):
    if texto.startswith("{") and texto.endswith("}"):
        return cuerpo_desde_texto(texto[1:-1])
    if texto == BOT or es_simbolo_valido(texto):
        return texto
    raise ErrorSintaxis(f"objeto mal formado: {texto!r}", numero)


def _lista(valores):
    return ",".join(str(v) for v in valores) if valores else "-"


def serialize_tableau_proof(proof):
    """
    Una línea ``x <cabeza> <cuerpo>...`` por paso de extensión y una línea
    ``n <id> <padre> <signo> <objeto> <regla> <premisas> <testigo>`` por nodo.
    """
    lineas = []
    for paso in proof.extension.steps:
        lineas.append(" ".join(["x", paso.head] + [_texto_objeto(c) for c in paso.bodies]))
    for nodo in proof.nodes:
        testigo = sorted(nodo.witness) if nodo.witness else ()
        lineas.append(" ".join([
            "n",
            str(nodo.id),
            "-" if nodo.parent is None else str(nodo.parent),
            "T" if nodo.entry.sign else "F",
            _texto_objeto(nodo.entry.obj),
            nodo.rule,
            _lista(nodo.premises),
            _lista(testigo),
        ]))
    return "\n".join(lineas) + "\n"


def parse_tableau_proof(texto):
    """
    Raises:
        ErrorSintaxis: registro mal formado, regla desconocida o nodos fuera de orden.
    """
    pasos = []
    nodos = []
    for numero, linea in enumerate(texto.splitlines(), 1):
        linea = linea.strip()
        if not linea or linea.startswith("c "):
            continue
        partes = linea.split()
        if partes[0] == "x":
            if nodos or len(partes) < 3:
                raise ErrorSintaxis("paso de extensión mal ubicado o sin cuerpos", numero)
            cuerpos = tuple(_objeto_desde_texto(p, numero) for p in partes[2:])
            if not all(isinstance(c, Body) for c in cuerpos):
                raise ErrorSintaxis("los cuerpos de extensión van entre llaves", numero)
            pasos.append(ExtensionStep(partes[1], cuerpos))
            continue
        if partes[0] != "n" or len(partes) != 8:
            raise ErrorSintaxis(f"registro de nodo mal formado: {linea!r}", numero)
        _, id_nodo, padre, signo, objeto, regla, premisas, testigo = partes
        id_nodo = _enteros([id_nodo], numero)[0]
        if id_nodo != len(nodos):
            raise ErrorSintaxis(f"se esperaba el nodo {len(nodos)}", numero)
        if signo not in ("T", "F"):
            raise ErrorSintaxis(f"signo desconocido: {signo!r}", numero)
        if regla not in R.IDENTIFICADORES:
            raise ErrorSintaxis(f"regla desconocida: {regla!r}", numero)
        nodos.append(ProofNode(
            len(nodos),
            None if padre == "-" else _enteros([padre], numero)[0],
            Entry(signo == "T", _objeto_desde_texto(objeto, numero)),
            regla,
            () if premisas == "-" else tuple(_enteros(premisas.split(","), numero)),
            None if testigo == "-" else frozenset(testigo.split(",")),
        ))
    if not nodos:
        raise ErrorSintaxis("la demostración no tiene nodos")
    return TableauProof(nodos, ExtensionSet(tuple(pasos)))


# ----------------------------------------------------------------------
# Mapa de nombres
# ----------------------------------------------------------------------

def serialize_namemap(mapa):
    return "\n".join([f"c {mapa.origen}"] + mapa.lineas()) + "\n"


def leer_texto(ruta):
    with open(ruta, "r", encoding="utf-8") as archivo:
        return archivo.read()


def escribir_texto(ruta, texto):
    with open(ruta, "w", encoding="utf-8") as archivo:
        archivo.write(texto)
