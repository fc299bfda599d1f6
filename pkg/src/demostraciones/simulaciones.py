"""
Simulaciones polinomiales entre ASP Tableaux y resolución.

- ``aspt_to_tres`` / ``easpt_to_eres``: demostración de tableau sobre un
  programa ajustado -> refutación por resolución de su compleción, a través
  del árbol de cortes.
- ``tres_to_aspt`` / ``eres_to_easpt``: refutación de un conjunto de
  cláusulas -> demostración de tableau para ``to_asp`` del conjunto.
"""

from dataclasses import dataclass
import logging

from src.errores import ErrorInterno, ErrorPrecondicion
from src.nucleo.programa import BOT, Body, Literal
from src.nucleo.clausulas import falsificada_por, orden_clausula
from src.nucleo.dependencias import is_tight
from src.puente.traducciones import to_asp, to_cnf
from src.tableau.entradas import Entry
from src.tableau.extension import ExtensionSet, ExtensionStep
from src.tableau import reglas as R
from .constructor import ConstructorCadena, ConstructorTableau, nombre_fresco, pivote_de
from .resolucion import (
    RESUELTO,
    ConstructorResolucion,
    ExtensionTriple,
    ResolutionProof,
    check_eres_proof,
    check_res_proof,
    is_tree_like,
)
from .verificador_tableau import check_tableau_proof

logger = logging.getLogger(__name__)


# ----------------------------------------------------------------------
# Árbol de cortes
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class NodoCorte:
    """Corte sobre ``objeto`` o, si ``objeto`` es ``None``, hoja con su asignación."""

    objeto: object = None
    verdadero: int = None
    falso: int = None
    asignacion: tuple = ()
    origen: int = None

    @property
    def es_hoja(self):
        return self.objeto is None


@dataclass(frozen=True)
class CutTree:
    """Árbol binario de cortes; ``raiz`` indexa ``nodos``."""

    nodos: tuple
    raiz: int

    def hojas(self):
        return [n for n in self.nodos if n.es_hoja]

    def cortes(self):
        return sum(1 for n in self.nodos if not n.es_hoja)

    def __len__(self):
        return len(self.nodos)


class _ConstructorArbol:
    """Recorre una demostración reemplazando cada entrada deducida por un corte."""

    def __init__(self, proof):
        self.proof = proof
        self.hijos = proof._hijos
        self.signos = {BOT: False}
        self.nodos = []

    def _hoja(self, origen):
        asignacion = tuple(Entry(s, o) for o, s in self.signos.items())
        self.nodos.append(NodoCorte(asignacion=asignacion, origen=origen))
        return len(self.nodos) - 1

    def _corte(self, objeto, verdadero, falso):
        self.nodos.append(NodoCorte(objeto, verdadero, falso))
        return len(self.nodos) - 1

    def _con(self, objeto, signo, accion):
        self.signos[objeto] = signo
        try:
            return accion()
        finally:
            del self.signos[objeto]

    def nodo(self, v):
        """Subárbol para el nodo ``v``; la asignación actual excluye a ``v``."""
        entry = self.proof.nodes[v].entry
        previo = self.signos.get(entry.obj)
        if previo is not None:
            if previo != entry.sign:
                return self._hoja(v)
            return self.debajo(v)
        dentro = self._con(entry.obj, entry.sign, lambda: self.debajo(v))
        fuera = self._con(entry.obj, not entry.sign, lambda: self._hoja(v))
        if entry.sign:
            return self._corte(entry.obj, dentro, fuera)
        return self._corte(entry.obj, fuera, dentro)

    def debajo(self, v):
        """Subárbol bajo ``v``; la asignación actual ya incluye a ``v``."""
        hijos = self.hijos.get(v, [])
        if not hijos:
            raise ErrorPrecondicion(f"la rama que termina en el nodo {v} no es contradictoria")
        if len(hijos) == 1:
            return self.nodo(hijos[0])
        por_signo = {self.proof.nodes[h].entry.sign: h for h in hijos}
        objeto = self.proof.nodes[hijos[0]].entry.obj
        previo = self.signos.get(objeto)
        if previo is not None:
            return self.debajo(por_signo[previo])
        verdadero = self._con(objeto, True, lambda: self.debajo(por_signo[True]))
        falso = self._con(objeto, False, lambda: self.debajo(por_signo[False]))
        return self._corte(objeto, verdadero, falso)


def construir_arbol_cortes(proof):
    """
    Árbol de cortes de una demostración cerrada: cada entrada deducida que no
    es hoja pasa a ser un corte cuyo lado opuesto termina de inmediato.

    Raises:
        ErrorPrecondicion: si alguna rama de la demostración está abierta.
    """
    arbol = _ConstructorArbol(proof)
    raiz = arbol.debajo(0)
    return CutTree(tuple(arbol.nodos), raiz)


# ----------------------------------------------------------------------
# Tableau -> resolución arbórea
# ----------------------------------------------------------------------

class _ResolucionDesdeCortes:
    """
    Resuelve de abajo hacia arriba sobre un árbol de cortes.

    ``clausulas`` es la compleción en orden canónico como pares
    ``(cláusula, etiqueta)``; ``literal_de`` da el literal CNF de cada átomo
    o cuerpo.
    """

    def __init__(self, clausulas, literal_de):
        self.clausulas = clausulas
        self.literal_de = literal_de
        self.res = ConstructorResolucion()
        self.auxiliares = 0

    def _asignacion(self, entradas):
        asignacion = {}
        for entry in entradas:
            if entry.obj == BOT:
                continue
            lit = self.literal_de(entry.obj)
            asignacion[abs(lit)] = (lit > 0) == entry.sign
        return asignacion

    def _falsificada(self, asignacion):
        for clausula, etiqueta in self.clausulas:
            if falsificada_por(clausula, asignacion):
                return self.res.inicial(clausula, etiqueta)
        return None

    def _combinar(self, si, no, falso_si):
        """``si`` falsa con el literal ``falso_si`` falso, ``no`` con él verdadero."""
        c_si, c_no = self.res.clausula(si), self.res.clausula(no)
        if falso_si in c_si and -falso_si in c_no:
            return self.res.resolver(si, no, abs(falso_si))
        if falso_si not in c_si:
            return si
        return no

    def _refutar(self, asignacion):
        """
        Paso que refuta la asignación parcial de una hoja.

        Si una cláusula queda falsa se usa directamente. Si no (una hoja
        cerrada por ``h†`` o ``i†`` con un testigo de varios átomos), se corta
        sobre las variables libres de la cláusula no satisfecha más corta
        hasta falsear alguna y se combinan ambos lados; cada corte extra
        suma uno a ``auxiliares``.

        Raises:
            ErrorInterno: la asignación satisface todas las cláusulas.
        """
        indice = self._falsificada(asignacion)
        if indice is not None:
            return indice
        mejor = None
        for clausula, _ in self.clausulas:
            if any(asignacion.get(abs(l)) is (l > 0) for l in clausula):
                continue
            libres = [l for l in orden_clausula(clausula) if abs(l) not in asignacion]
            if mejor is None or len(libres) < len(mejor):
                mejor = libres
        if mejor is None:
            raise ErrorInterno("ninguna cláusula de la compleción es falsa en la hoja")
        self.auxiliares += 1
        var = abs(mejor[0])
        asignacion[var] = True
        si = self._refutar(asignacion)
        asignacion[var] = False
        no = self._refutar(asignacion)
        del asignacion[var]
        return self._combinar(si, no, -var)

    def resolver(self, arbol):
        pila = [(arbol.raiz, False)]
        resultado = {}
        while pila:
            i, visitado = pila.pop()
            nodo = arbol.nodos[i]
            if nodo.es_hoja:
                resultado[i] = self._refutar(self._asignacion(nodo.asignacion))
                continue
            if not visitado:
                pila.append((i, True))
                pila.append((nodo.falso, False))
                pila.append((nodo.verdadero, False))
                continue
            lit = self.literal_de(nodo.objeto)
            resultado[i] = self._combinar(resultado.pop(nodo.verdadero), resultado.pop(nodo.falso), -lit)
        raiz = resultado[arbol.raiz]
        if self.res.clausula(raiz):
            raise ErrorInterno(f"la raíz del árbol de cortes deja la cláusula {orden_clausula(self.res.clausula(raiz))}")
        # Las hojas absorbidas sin resolver dejan pasos sueltos tras la vacía
        prueba = self.res.prueba.recortar(raiz)
        if self.auxiliares:
            logger.debug("%d cortes auxiliares en hojas sin cláusula falsa", self.auxiliares)
        return prueba


def _exigir_entrada_valida(program, e, proof):
    if not is_tight(program):
        raise ErrorPrecondicion("el programa no es ajustado: la compleción no es fiel")
    veredicto = check_tableau_proof(program, e, proof)
    if not veredicto:
        raise ErrorPrecondicion(f"la demostración de tableau no es válida: {veredicto}")


def _literal_cnf(tabla):
    def literal_de(objeto):
        return tabla[objeto]
    return literal_de


def _tabla_complecion(mapa):
    tabla = {atomo: var for atomo, _, var in mapa.de_tipo("atom")}
    tabla.update({cuerpo: var for cuerpo, _, var in mapa.de_tipo("body")})
    return tabla


def aspt_to_tres(program, proof):
    """
    Refutación arbórea de ``to_cnf(program)`` a partir de una demostración
    ASP-T de un programa ajustado.

    Raises:
        ErrorPrecondicion: programa no ajustado, demostración inválida o con extensión.
    """
    if len(proof.extension):
        raise ErrorPrecondicion("la demostración usa extensión: utilice easpt_to_eres")
    _exigir_entrada_valida(program, ExtensionSet(), proof)
    clausulas, mapa = to_cnf(program)
    arbol = construir_arbol_cortes(proof)
    logger.debug("árbol de cortes: %d cortes, %d hojas", arbol.cortes(), len(arbol.hojas()))
    resolutor = _ResolucionDesdeCortes(
        [(c, None) for c in dict.fromkeys(clausulas.clausulas)], _literal_cnf(_tabla_complecion(mapa))
    )
    return resolutor.resolver(arbol)


def easpt_to_eres(program, proof, e):
    """
    Refutación por resolución extendida de ``to_cnf(program)`` a partir de una
    demostración E-ASP-T de un programa ajustado.

    Cada paso de extensión ``h <- B`` introduce ``x_B ≡ l1 ∧ l2`` si ``B`` es
    nuevo y ``x_h ≡ x_B``; una cabeza con dos cuerpos se representa con
    ``¬y`` donde ``y ≡ ¬x_B1 ∧ ¬x_B2``.

    Returns:
        Tupla ``(tripletas, ResolutionProof)``.
    """
    _exigir_entrada_valida(program, e, proof)
    clausulas, mapa = to_cnf(program)
    tabla = _tabla_complecion(mapa)
    siguiente = clausulas.num_vars + 1
    tripletas = []

    def nueva(l1, l2):
        nonlocal siguiente
        tripletas.append(ExtensionTriple(siguiente, l1, l2))
        siguiente += 1
        return siguiente - 1

    def literal(l):
        return tabla[l.atom] if l.positive else -tabla[l.atom]

    for paso in e.steps:
        for cuerpo in paso.bodies:
            if not 1 <= len(cuerpo) <= 2:
                raise ErrorPrecondicion(f"cuerpo de extensión de tamaño {len(cuerpo)} en '{paso.head}'")
            if cuerpo not in tabla:
                lits = [literal(l) for l in cuerpo]
                tabla[cuerpo] = nueva(lits[0], lits[-1])
        if len(paso.bodies) == 1:
            x_b = tabla[paso.bodies[0]]
            tabla[paso.head] = nueva(x_b, x_b)
        elif len(paso.bodies) == 2:
            b1, b2 = paso.bodies
            tabla[paso.head] = -nueva(-tabla[b1], -tabla[b2])
        else:
            raise ErrorPrecondicion(f"'{paso.head}' tiene {len(paso.bodies)} cuerpos; se admiten uno o dos")

    lista = [(c, None) for c in dict.fromkeys(clausulas.clausulas)]
    vistas = {c for c, _ in lista}
    for k, tripleta in enumerate(tripletas):
        for c in tripleta.clausulas():
            if c not in vistas:
                vistas.add(c)
                lista.append((c, k))
    arbol = construir_arbol_cortes(proof)
    prueba = _ResolucionDesdeCortes(lista, _literal_cnf(tabla)).resolver(arbol)
    logger.debug("E-RES: %d tripletas, %d pasos", len(tripletas), len(prueba))
    return tuple(tripletas), prueba


# ----------------------------------------------------------------------
# Resolución -> tableau
# ----------------------------------------------------------------------

def _literal_asp(lit):
    """Literal del programa ``to_asp`` que hace verdadero al literal CNF."""
    return Literal(f"a{abs(lit)}", lit > 0)


def _atomos_de_entrada(clauses, mapa):
    return {c: mapa.atomo_de_clausula(i) for i, c in enumerate(dict.fromkeys(clauses.clausulas), 1)}


def _cerrar_clausula_asp(constructor, rama, atomo):
    """Con ``F c`` en la rama: ``F{not c}`` por (e) desde ``F⊥`` y ``T c`` por (c)."""
    if rama.signo(atomo) is None:
        constructor.cabeza_falsa(rama, atomo)
    cuerpo = Body((Literal(atomo, False),))
    constructor.deducir(rama, Entry(False, cuerpo), R.E, [Entry(False, BOT)])
    constructor.literal_de_cuerpo_falso(rama, cuerpo, cuerpo.literales[0])


def tres_to_aspt(clauses, proof):
    """
    Demostración ASP-T para ``to_asp(clauses)`` desde una refutación arbórea.

    Desciende desde la cláusula vacía: resolver sobre ``x`` es cortar sobre
    ``a_x``, con el padre que contiene ``x`` en la rama ``F a_x``. Cada hoja
    se cierra con la cláusula inicial que la rama falsea.

    Raises:
        ErrorPrecondicion: demostración inválida o no arbórea.
    """
    veredicto = check_res_proof(clauses, proof)
    if not veredicto:
        raise ErrorPrecondicion(f"la refutación no es válida: {veredicto}")
    if not is_tree_like(proof):
        raise ErrorPrecondicion("la refutación no es arbórea")
    programa, mapa = to_asp(clauses)
    atomos = _atomos_de_entrada(clauses, mapa)
    constructor = ConstructorTableau(programa, ExtensionSet())
    pendientes = [(len(proof.pasos) - 1, constructor.rama_inicial())]
    while pendientes:
        k, rama = pendientes.pop()
        paso = proof.pasos[k]
        if paso.origen != RESUELTO:
            atomo = atomos[paso.clausula]
            for lit in orden_clausula(paso.clausula):
                literal = _literal_asp(lit)
                constructor.cuerpo_falso(rama, Body((literal,)), literal)
            constructor.cabeza_falsa(rama, atomo)
            _cerrar_clausula_asp(constructor, rama, atomo)
            if not rama.cerrada:
                raise ErrorInterno(f"la hoja de la cláusula {orden_clausula(paso.clausula)} no se cerró")
            continue
        var = pivote_de(proof, paso)
        i, j = paso.padres
        positivo, negativo = (i, j) if var in proof.pasos[i].clausula else (j, i)
        atomo = f"a{var}"
        signo = rama.signo(atomo)
        if signo is None:
            rama_t, rama_f = constructor.cortar(rama, atomo)
            pendientes.append((positivo, rama_f))
            pendientes.append((negativo, rama_t))
        else:
            # Resolución irregular: la variable ya se cortó en esta rama
            pendientes.append((negativo if signo else positivo, rama))
    return constructor.prueba()


class _CadenaASP(ConstructorCadena):
    """Esquema de cadena sobre ``to_asp(clauses)`` con las reglas de extensión."""

    def __init__(self, clauses, tripletas, prueba_res, programa, mapa):
        super().__init__(prueba_res)
        self.tripletas = tripletas
        self.entrada = _atomos_de_entrada(clauses, mapa)
        self.de_tripleta = {}
        for k, tripleta in enumerate(tripletas):
            for c in tripleta.clausulas():
                self.de_tripleta.setdefault(c, k)
        usados = set(programa.atoms)
        self.atomos = {}
        pasos = []
        for tripleta in tripletas:
            cuerpo = Body((_literal_asp(tripleta.l1), _literal_asp(tripleta.l2)))
            cabeza = f"a{tripleta.var}"
            usados.add(cabeza)
            pasos.append(ExtensionStep(cabeza, (cuerpo,)))
        for k in self.pasos_cadena():
            clausula = prueba_res.pasos[k].clausula
            if clausula in self.entrada or clausula in self.atomos:
                continue
            nombre = nombre_fresco("d", len(self.atomos) + 1, usados)
            self.atomos[clausula] = nombre
            pasos.append(ExtensionStep(nombre, self.cuerpos_clausula(clausula)))
        for k in self.pasos_cadena():
            nombre = nombre_fresco("p", k + 1, usados)
            cuerpo = [Literal(self.atomo_clausula(k))]
            if k:
                cuerpo.append(Literal(self.cadena[-1]))
            self.cadena.append(nombre)
            pasos.append(ExtensionStep(nombre, (Body(tuple(cuerpo)),)))
        self.extension = ExtensionSet(tuple(pasos))

    def sigma(self, literal):
        return (Body((_literal_asp(literal),)),)

    def atomo_clausula(self, k):
        clausula = self.prueba_res.pasos[k].clausula
        return self.entrada.get(clausula) or self.atomos[clausula]

    def es_entrada(self, k):
        return self.prueba_res.pasos[k].clausula in self.entrada

    def cerrar_entrada(self, rama, k):
        _cerrar_clausula_asp(self.constructor, rama, self.atomo_clausula(k))

    def cerrar_extension(self, rama, k):
        constructor = self.constructor
        clausula = self.prueba_res.pasos[k].clausula
        atomo = self.atomo_clausula(k)
        constructor.falsear_cuerpos(rama, atomo)
        constructor.literales_unitarios_falsos(rama, atomo)
        tripleta = self.tripletas[self.de_tripleta[clausula]]
        cabeza = f"a{tripleta.var}"
        cuerpo = Body((_literal_asp(tripleta.l1), _literal_asp(tripleta.l2)))
        if tripleta.var in clausula:
            # {x, ¬l1, ¬l2}: los dos literales son verdaderos y x falso
            constructor.cuerpo_verdadero(rama, cuerpo)
            constructor.cabeza_verdadera(rama, cabeza, cuerpo)
        else:
            # {¬x, l}: l falso y x verdadero
            lit = next(l for l in clausula if l != -tripleta.var)
            constructor.cuerpo_falso(rama, cuerpo, _literal_asp(lit))
            constructor.cabeza_falsa(rama, cabeza)


def _hasta_vacia(proof):
    for k, paso in enumerate(proof.pasos):
        if not paso.clausula:
            return ResolutionProof(list(proof.pasos[:k + 1]))
    raise ErrorPrecondicion("la demostración no deriva la cláusula vacía")


def eres_to_easpt(clauses, triples, proof):
    """
    Conjunto de extensión y demostración E-ASP-T para ``to_asp(clauses)``
    desde una refutación por resolución extendida.

    Reglas emitidas, en orden: ``a_x <- a_l1, a_l2`` por tripleta, un átomo
    por cláusula de la refutación ausente de la entrada y la cadena
    ``p_1 <- c_1``, ``p_i <- c_i, p_{i-1}``. El tableau corta ``p_1 .. p_{n-1}``.

    Returns:
        Tupla ``(ExtensionSet, TableauProof)``.
    """
    triples = tuple(triples)
    veredicto = check_eres_proof(clauses, triples, proof)
    if not veredicto:
        raise ErrorPrecondicion(f"la refutación extendida no es válida: {veredicto}")
    prueba_res = _hasta_vacia(proof)
    programa, mapa = to_asp(clauses)
    cadena = _CadenaASP(clauses, triples, prueba_res, programa, mapa)
    constructor = ConstructorTableau(programa, cadena.extension)
    prueba = cadena.construir(constructor)
    logger.debug(
        "E-ASP-T: %d reglas de extensión, %d nodos, %d cortes",
        len(cadena.extension), len(prueba.nodes), prueba.cortes(),
    )
    return cadena.extension, prueba


