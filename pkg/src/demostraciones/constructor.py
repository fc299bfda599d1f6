"""
Construcción explícita de demostraciones de tableau.

``ConstructorTableau`` agrega entradas justificadas a ramas abiertas sin
propagar; ``ConstructorCadena`` implementa el esquema de cortes sobre los
átomos de cadena de una refutación por resolución y cierra cada rama F según
el origen de la cláusula (entrada, resolución o extensión).
"""

import logging

from src.errores import ErrorInterno
from src.nucleo.programa import BOT, Literal
from src.tableau.entradas import CORTE, Entry, ProofNode, TableauProof, f, nodo_raiz, t
from src.tableau import reglas as R
from src.nucleo.clausulas import orden_clausula
from .resolucion import RESUELTO, pivotes

logger = logging.getLogger(__name__)


class RamaConstruida:
    """Rama abierta de una demostración en construcción."""

    __slots__ = ("valores", "punta", "cerrada")

    def __init__(self, valores, punta):
        self.valores = valores
        self.punta = punta
        self.cerrada = False

    def copia(self):
        return RamaConstruida(dict(self.valores), self.punta)

    def signo(self, objeto):
        valor = self.valores.get(objeto)
        return None if valor is None else valor[0]

    def tiene(self, entry):
        return self.signo(entry.obj) is entry.sign


class ConstructorTableau:
    """Agrega nodos justificados a una demostración sobre ``Π ∪ E``."""

    def __init__(self, program, extension):
        self.program = program
        self.extension = extension
        self.completo = extension.aplicar(program)
        self.nodos = [nodo_raiz()]

    def rama_inicial(self):
        return RamaConstruida({BOT: (False, 0)}, 0)

    def _agregar(self, rama, entry, regla, premisas=(), testigo=None):
        id_nodo = len(self.nodos)
        self.nodos.append(ProofNode(id_nodo, rama.punta, entry, regla, tuple(premisas), testigo))
        rama.punta = id_nodo
        previo = rama.valores.get(entry.obj)
        if previo is None:
            rama.valores[entry.obj] = (entry.sign, id_nodo)
        elif previo[0] != entry.sign:
            rama.cerrada = True
        return id_nodo

    def deducir(self, rama, entry, regla, premisas=(), testigo=None):
        """
        Agrega ``entry`` justificada por ``regla`` desde las entradas ``premisas``.
        No hace nada si la rama ya está cerrada o ya contiene la entrada.
        """
        if rama.cerrada:
            return None
        if rama.tiene(entry):
            return rama.valores[entry.obj][1]
        ids = []
        for premisa in premisas:
            if not rama.tiene(premisa):
                raise ErrorInterno(f"premisa {premisa} ausente al deducir {entry} por ({regla})")
            ids.append(rama.valores[premisa.obj][1])
        return self._agregar(rama, entry, regla, ids, testigo)

    def cortar(self, rama, objeto):
        padre = rama.punta
        hijos = []
        for signo in (True, False):
            hijo = rama.copia()
            hijo.punta = padre
            self._agregar(hijo, Entry(signo, objeto), CORTE)
            hijos.append(hijo)
        return hijos[0], hijos[1]

    def prueba(self):
        return TableauProof(list(self.nodos), self.extension)

    # Atajos por regla --------------------------------------------------

    def falsear_cuerpos(self, rama, cabeza):
        """(e): ``F h`` da ``F B`` para cada cuerpo de ``h``."""
        for cuerpo in self.completo.bodies_of(cabeza):
            self.deducir(rama, Entry(False, cuerpo), R.E, [Entry(False, cabeza)])

    def literal_de_cuerpo_falso(self, rama, cuerpo, literal):
        """(c): ``F B`` y los demás literales verdaderos dan ``f l``."""
        otros = [t(l) for l in cuerpo if l != literal]
        return self.deducir(rama, f(literal), R.C, [Entry(False, cuerpo)] + otros)

    def literales_unitarios_falsos(self, rama, cabeza):
        """(c) sobre cada cuerpo unitario falso de ``cabeza``."""
        for cuerpo in self.completo.bodies_of(cabeza):
            if len(cuerpo) == 1 and rama.signo(cuerpo) is False:
                self.literal_de_cuerpo_falso(rama, cuerpo, cuerpo.literales[0])

    def cuerpo_verdadero(self, rama, cuerpo):
        """(b): todos los literales verdaderos dan ``T B``."""
        return self.deducir(rama, Entry(True, cuerpo), R.B, [t(l) for l in cuerpo])

    def cabeza_verdadera(self, rama, cabeza, cuerpo):
        """(d): ``T B`` con ``h <- B`` da ``T h``."""
        return self.deducir(rama, Entry(True, cabeza), R.D, [Entry(True, cuerpo)])

    def cuerpo_falso(self, rama, cuerpo, literal):
        """(f): ``f l`` con ``l`` en ``B`` da ``F B``."""
        return self.deducir(rama, Entry(False, cuerpo), R.F, [f(literal)])

    def cabeza_falsa(self, rama, cabeza):
        """(h§): todos los cuerpos falsos dan ``F h``."""
        cuerpos = self.completo.bodies_of(cabeza)
        return self.deducir(rama, Entry(False, cabeza), R.H_SEC, [Entry(False, c) for c in cuerpos])

    def cuerpo_unico(self, rama, cabeza, cuerpo):
        """(i§) y (g): ``T h`` con los demás cuerpos falsos da ``T B`` y sus literales."""
        otros = [Entry(False, c) for c in self.completo.bodies_of(cabeza) if c != cuerpo]
        self.deducir(rama, Entry(True, cuerpo), R.I_SEC, [Entry(True, cabeza)] + otros)
        for literal in cuerpo:
            self.deducir(rama, t(literal), R.G, [Entry(True, cuerpo)])

    def restriccion_violada(self, rama):
        """(b) y (d) sobre una restricción cuyo cuerpo ya es verdadero."""
        for cuerpo in self.completo.bodies_of(BOT):
            if all(rama.tiene(t(l)) for l in cuerpo):
                self.cuerpo_verdadero(rama, cuerpo)
                self.cabeza_verdadera(rama, BOT, cuerpo)
                return True
        return False


class ConstructorCadena:
    """
    Esquema de cadena sobre una refutación ``C_1 .. C_n`` (``C_n`` vacía).

    Las subclases definen ``sigma`` (cuerpos que hacen verdadero un literal
    CNF), el átomo de cada cláusula y el cierre de las cláusulas de entrada y
    de extensión.
    """

    def __init__(self, prueba_res):
        self.prueba_res = prueba_res
        self.constructor = None
        self.cadena = []

    # A definir en subclases
    def sigma(self, literal):
        raise NotImplementedError

    def atomo_clausula(self, k):
        raise NotImplementedError

    def es_entrada(self, k):
        raise NotImplementedError

    def cerrar_entrada(self, rama, k):
        raise NotImplementedError

    def cerrar_extension(self, rama, k):
        raise NotImplementedError

    # Esquema común ------------------------------------------------------

    def pasos_cadena(self):
        """Índices de los pasos con átomo de cadena (todos salvo el último)."""
        return range(len(self.prueba_res.pasos) - 1)

    def cuerpos_clausula(self, clausula):
        return tuple(dict.fromkeys(b for l in orden_clausula(clausula) for b in self.sigma(l)))

    def _verdad_de_clausula(self, rama, k):
        """Desde ``T p_k`` deriva ``T c_k`` por (i§) y (g)."""
        cadena = self.cadena[k]
        cuerpo = self.constructor.completo.bodies_of(cadena)[0]
        self.constructor.cuerpo_unico(rama, cadena, cuerpo)

    def _agotar_clausula_verdadera(self, rama, atomo):
        """Con ``T c``: (i§) si queda un cuerpo abierto, o (f) y (h§) si todos caen."""
        constructor = self.constructor
        cuerpos = constructor.completo.bodies_of(atomo)
        abiertos = [c for c in cuerpos if rama.signo(c) is not False]
        if len(abiertos) == 1:
            constructor.cuerpo_unico(rama, atomo, abiertos[0])
            return True
        caidos = 0
        for cuerpo in abiertos:
            literal = next((l for l in cuerpo if rama.tiene(f(l))), None)
            if literal is not None:
                constructor.cuerpo_falso(rama, cuerpo, literal)
                caidos += 1
        if caidos == len(abiertos):
            constructor.cabeza_falsa(rama, atomo)
            return True
        return False

    def _cerrar_resolucion(self, rama, k):
        paso = self.prueba_res.pasos[k]
        atomo = self.atomo_clausula(k)
        self.constructor.falsear_cuerpos(rama, atomo)
        self._cerrar_con_padres(rama, paso)

    def _cerrar_con_padres(self, rama, paso):
        i, j = paso.padres
        for padre in (i, j):
            if rama.cerrada:
                return
            self._verdad_de_clausula(rama, padre)
        pendientes = [self.atomo_clausula(i), self.atomo_clausula(j)]
        # Primero el padre con un único cuerpo abierto
        for _ in range(3):
            for atomo in list(pendientes):
                if rama.cerrada:
                    return
                if self._agotar_clausula_verdadera(rama, atomo):
                    pendientes.remove(atomo)
            if not pendientes:
                break

    def construir(self, constructor):
        """Corta ``p_1 .. p_{n-1}`` en orden y cierra cada rama F."""
        self.constructor = constructor
        rama = constructor.rama_inicial()
        pasos = self.prueba_res.pasos
        for k in self.pasos_cadena():
            cadena = self.cadena[k]
            rama_t, rama_f = constructor.cortar(rama, cadena)
            cuerpo = constructor.completo.bodies_of(cadena)[0]
            constructor.deducir(rama_f, Entry(False, cuerpo), R.E, [Entry(False, cadena)])
            atomo = self.atomo_clausula(k)
            literal = Literal(atomo)
            constructor.literal_de_cuerpo_falso(rama_f, cuerpo, literal)
            if self.es_entrada(k):
                self.cerrar_entrada(rama_f, k)
            elif pasos[k].origen == RESUELTO:
                self._cerrar_resolucion(rama_f, k)
            else:
                self.cerrar_extension(rama_f, k)
            if not rama_f.cerrada:
                raise ErrorInterno(f"la rama F del paso {k} no se cerró")
            rama = rama_t
        final = len(pasos) - 1
        if self.es_entrada(final):
            self.cerrar_entrada(rama, final)
        else:
            self._cerrar_con_padres(rama, pasos[final])
        if not rama.cerrada:
            raise ErrorInterno("la rama final no se cerró")
        logger.debug("cadena de %d cortes construida (%d nodos)", len(self.cadena), len(constructor.nodos))
        return constructor.prueba()


def pivote_de(prueba_res, paso):
    if paso.pivote is not None:
        return paso.pivote
    i, j = paso.padres
    return pivotes(prueba_res.pasos[i].clausula, prueba_res.pasos[j].clausula)[0]


def nombre_fresco(prefijo, numero, usados):
    """``prefijo + numero`` con apóstrofos agregados hasta no chocar con ``usados``."""
    nombre = f"{prefijo}{numero}"
    while nombre in usados:
        nombre += "'"
    usados.add(nombre)
    return nombre
