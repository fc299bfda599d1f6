"""
Motor de ASP Tableaux.

Propaga las reglas de deducción sobre una rama con una agenda de prioridad,
aplica el corte según la heurística y, opcionalmente, lookahead completo.
Cada entrada agregada queda registrada como nodo de la demostración con su
justificación, de modo que una respuesta UNSAT es un árbol verificable.
"""

from dataclasses import dataclass
import heapq
import time
import logging

from src.errores import ErrorPrecondicion, LimiteExcedido, TiempoAgotado
from src.nucleo.programa import BOT, Body
from src.nucleo.dependencias import componentes_fuertes, external_bodies, is_tight
from .configuracion import EngineConfig, SolveStats
from .entradas import CORTE, Branch, Entry, ProofNode, TableauProof, f, nodo_raiz, t
from .extension import ExtensionSet
from .heuristicas import crear_heuristica
from . import reglas as R

logger = logging.getLogger(__name__)


class IndicePrograma:
    """Índices precomputados sobre ``Π ∪ E``."""

    def __init__(self, programa):
        self.programa = programa
        self.atomos = programa.atoms
        self.cuerpos = programa.bodies
        self.cuerpos_de = {h: programa.bodies_of(h) for h in programa.atoms}
        self.cuerpos_de[BOT] = programa.bodies_of(BOT)
        cabezas = {}
        for regla in programa.rules:
            cabezas.setdefault(regla.body, [])
            if regla.head not in cabezas[regla.body]:
                cabezas[regla.body].append(regla.head)
        self.cabezas_de = {b: tuple(hs) for b, hs in cabezas.items()}
        apariciones = {}
        for cuerpo in self.cuerpos:
            for literal in cuerpo:
                lista = apariciones.setdefault(literal.atom, [])
                if cuerpo not in lista:
                    lista.append(cuerpo)
        self.apariciones = {a: tuple(cs) for a, cs in apariciones.items()}
        # Reglas sin ⊥ como (cabeza, cuerpo, átomos positivos) para los puntos fijos
        self.reglas_soporte = [(r.head, r.body, r.body.pos) for r in programa.rules if r.head != BOT]
        self.ajustado = is_tight(programa)


class Estado:
    """Asignación de una rama abierta."""

    __slots__ = ("valores", "punta", "contradiccion", "agenda")

    def __init__(self, valores=None, punta=0):
        # objeto -> (signo, id del nodo que lo asignó)
        self.valores = valores if valores is not None else {}
        self.punta = punta
        self.contradiccion = None
        self.agenda = []

    def copia(self):
        return Estado(dict(self.valores), self.punta)

    def signo(self, objeto):
        valor = self.valores.get(objeto)
        return None if valor is None else valor[0]

    def nodo(self, objeto):
        return self.valores[objeto][1]

    def es_verdadero(self, literal):
        return self.signo(literal.atom) is literal.positive

    def es_falso(self, literal):
        return self.signo(literal.atom) is (not literal.positive)


@dataclass
class ResultadoSolve:
    """Resultado de ``solve``."""

    estado: str
    modelo: frozenset = None
    prueba: TableauProof = None
    stats: SolveStats = None
    semantica: str = "stable-model semantics"
    modelos: list = None

    @property
    def satisfacible(self):
        return self.estado == "SAT"


@dataclass
class ResultadoLookahead:
    forzadas: list
    rama: Branch
    contradictoria: bool


class MotorTableau:
    """Búsqueda por tableau sobre ``Π ∪ E`` con una configuración fija."""

    def __init__(self, program, extension=None, config=None):
        self.program = program
        self.extension = extension if extension is not None else ExtensionSet()
        self.config = (config or EngineConfig()).exigir_valida()
        self.completo = self.extension.aplicar(program)
        self.indice = IndicePrograma(self.completo)
        self.reglas = self.config.conjunto_reglas
        objetos = list(self.indice.atomos)
        if self.config.alcance_corte == "atoms+bodies":
            objetos += list(self.indice.cuerpos)
        self.objetos_corte = objetos
        self.heuristica = crear_heuristica(
            self.config.heuristica, objetos, self.indice.cuerpos, self.config.semilla
        )
        self.stats = SolveStats()
        self.nodos = []
        # Destino de los nodos nuevos; los sondeos escriben en un borrador
        self._destino = self.nodos
        self._base = 0
        self._secuencia = 0
        self._plazo = None

    # ------------------------------------------------------------------
    # Nodos y agenda
    # ------------------------------------------------------------------

    def _nuevo_nodo(self, padre, entry, regla, premisas=(), testigo=None):
        id_nodo = self._base + len(self._destino)
        self._destino.append(ProofNode(id_nodo, padre, entry, regla, tuple(premisas), testigo))
        return id_nodo

    def _agregar(self, estado, entry, regla, premisas=(), testigo=None):
        id_nodo = self._nuevo_nodo(estado.punta, entry, regla, premisas, testigo)
        estado.punta = id_nodo
        previo = estado.valores.get(entry.obj)
        if previo is not None and previo[0] != entry.sign:
            estado.contradiccion = id_nodo
        elif previo is None:
            estado.valores[entry.obj] = (entry.sign, id_nodo)
        return id_nodo

    def _deducir(self, estado, regla, entry, premisas, testigo=None):
        if regla not in self.reglas:
            return False
        if estado.signo(entry.obj) is entry.sign:
            return False
        self._secuencia += 1
        heapq.heappush(
            estado.agenda,
            (R.PRIORIDAD.get(regla, len(R.PRIORIDAD)), self._secuencia, entry, regla, premisas, testigo),
        )
        return True

    # ------------------------------------------------------------------
    # Disparadores de reglas locales
    # ------------------------------------------------------------------

    def _disparar(self, estado, entry, id_nodo):
        if entry.es_cuerpo:
            self._disparar_cuerpo(estado, entry.obj, entry.sign, id_nodo)
        else:
            self._disparar_atomo(estado, entry.obj, entry.sign, id_nodo)

    def _disparar_atomo(self, estado, atomo, signo, id_nodo):
        for cuerpo in self.indice.apariciones.get(atomo, ()):
            for literal in cuerpo:
                if literal.atom != atomo:
                    continue
                if literal.positive is signo:
                    self._revisar_b(estado, cuerpo)
                    self._revisar_c(estado, cuerpo)
                else:
                    self._deducir(estado, R.F, Entry(False, cuerpo), (id_nodo,))
        if signo:
            self._revisar_i_sec(estado, atomo)
        else:
            for cuerpo in self.indice.cuerpos_de.get(atomo, ()):
                self._deducir(estado, R.E, Entry(False, cuerpo), (id_nodo,))

    def _disparar_cuerpo(self, estado, cuerpo, signo, id_nodo):
        if signo:
            for cabeza in self.indice.cabezas_de.get(cuerpo, ()):
                self._deducir(estado, R.D, Entry(True, cabeza), (id_nodo,))
            for literal in cuerpo:
                self._deducir(estado, R.G, t(literal), (id_nodo,))
            return
        for cabeza in self.indice.cabezas_de.get(cuerpo, ()):
            if cabeza == BOT:
                continue
            self._revisar_h_sec(estado, cabeza)
            self._revisar_i_sec(estado, cabeza)
        self._revisar_c(estado, cuerpo)

    def _revisar_b(self, estado, cuerpo):
        if estado.signo(cuerpo) is True:
            return
        if all(estado.es_verdadero(l) for l in cuerpo):
            premisas = tuple(estado.nodo(l.atom) for l in cuerpo)
            self._deducir(estado, R.B, Entry(True, cuerpo), premisas)

    def _revisar_c(self, estado, cuerpo):
        if estado.signo(cuerpo) is not False:
            return
        abiertos = []
        premisas = [estado.nodo(cuerpo)]
        for literal in cuerpo:
            if estado.es_verdadero(literal):
                premisas.append(estado.nodo(literal.atom))
            elif estado.es_falso(literal):
                return
            else:
                abiertos.append(literal)
        if len(abiertos) == 1:
            self._deducir(estado, R.C, f(abiertos[0]), tuple(premisas))

    def _revisar_h_sec(self, estado, cabeza):
        cuerpos = self.indice.cuerpos_de.get(cabeza, ())
        if all(estado.signo(c) is False for c in cuerpos):
            premisas = tuple(estado.nodo(c) for c in cuerpos)
            self._deducir(estado, R.H_SEC, Entry(False, cabeza), premisas)

    def _revisar_i_sec(self, estado, cabeza):
        if cabeza == BOT or estado.signo(cabeza) is not True:
            return
        abiertos = [c for c in self.indice.cuerpos_de.get(cabeza, ()) if estado.signo(c) is not False]
        if len(abiertos) != 1 or estado.signo(abiertos[0]) is not None:
            return
        premisas = (estado.nodo(cabeza),) + tuple(
            estado.nodo(c) for c in self.indice.cuerpos_de[cabeza] if c != abiertos[0]
        )
        self._deducir(estado, R.I_SEC, Entry(True, abiertos[0]), premisas)

    # ------------------------------------------------------------------
    # Reglas globales († y ‡)
    # ------------------------------------------------------------------

    def _soportados(self, estado, excluido=None):
        """Punto fijo de soporte sobre las reglas con cuerpo no falso."""
        pendientes = []
        vigilantes = {}
        cola = []
        for i, (cabeza, cuerpo, positivos) in enumerate(self.indice.reglas_soporte):
            if cuerpo == excluido or estado.signo(cuerpo) is False:
                pendientes.append(-1)
                continue
            pendientes.append(len(positivos))
            for atomo in positivos:
                vigilantes.setdefault(atomo, []).append(i)
            if not positivos:
                cola.append(cabeza)
        soportados = set()
        while cola:
            atomo = cola.pop()
            if atomo in soportados:
                continue
            soportados.add(atomo)
            for i in vigilantes.get(atomo, ()):
                pendientes[i] -= 1
                if pendientes[i] == 0:
                    cola.append(self.indice.reglas_soporte[i][0])
        return soportados

    def _premisas_no_fundado(self, estado, conjunto):
        """Nodos de los cuerpos falsos de las reglas con cabeza en ``conjunto``."""
        ids = set()
        for atomo in conjunto:
            for cuerpo in self.indice.cuerpos_de.get(atomo, ()):
                if estado.signo(cuerpo) is False:
                    ids.add(estado.nodo(cuerpo))
        return tuple(sorted(ids))

    def _h_dag(self, estado):
        soportados = self._soportados(estado)
        no_fundado = frozenset(a for a in self.indice.atomos if a not in soportados)
        candidatos = [a for a in self.indice.atomos if a in no_fundado and estado.signo(a) is not False]
        if not candidatos:
            return False
        premisas = self._premisas_no_fundado(estado, no_fundado)
        for atomo in candidatos:
            self._deducir(estado, R.H_DAG, Entry(False, atomo), premisas, no_fundado)
        return True

    def _i_dag(self, estado):
        for cabeza in self.indice.atomos:
            if estado.signo(cabeza) is not True:
                continue
            abiertos = [c for c in self.indice.cuerpos_de[cabeza] if estado.signo(c) is not False]
            if len(abiertos) < 2:
                continue
            for cuerpo in abiertos:
                if estado.signo(cuerpo) is True:
                    continue
                soportados = self._soportados(estado, excluido=cuerpo)
                if cabeza in soportados:
                    continue
                no_fundado = frozenset(a for a in self.indice.atomos if a not in soportados)
                if cuerpo.pos & no_fundado:
                    # cuerpo no externo al conjunto
                    continue
                premisas = (estado.nodo(cabeza),) + self._premisas_no_fundado(estado, no_fundado)
                return self._deducir(estado, R.I_DAG, Entry(True, cuerpo), premisas, no_fundado)
        return False

    def _lazos_activos(self, estado):
        """Componentes cíclicas del grafo positivo restringido a cuerpos no falsos."""
        grafo = {a: set() for a in self.indice.atomos}
        for cabeza, cuerpo, positivos in self.indice.reglas_soporte:
            if estado.signo(cuerpo) is not False:
                grafo[cabeza].update(a for a in positivos if a in grafo)
        lazos = []
        for componente in componentes_fuertes(grafo):
            if len(componente) > 1 or next(iter(componente)) in grafo[next(iter(componente))]:
                lazos.append(componente)
        return lazos

    def _h_ddag(self, estado):
        empujado = False
        for lazo in self._lazos_activos(estado):
            externos = external_bodies(self.completo, lazo)
            if not all(estado.signo(c) is False for c in externos):
                continue
            premisas = tuple(sorted(estado.nodo(c) for c in externos))
            for atomo in self.indice.atomos:
                if atomo in lazo and estado.signo(atomo) is not False:
                    empujado |= self._deducir(estado, R.H_DDAG, Entry(False, atomo), premisas, lazo)
        return empujado

    def _i_ddag(self, estado):
        for lazo in self._lazos_activos(estado):
            verdaderos = [a for a in self.indice.atomos if a in lazo and estado.signo(a) is True]
            if not verdaderos:
                continue
            externos = external_bodies(self.completo, lazo)
            abiertos = [c for c in externos if estado.signo(c) is not False]
            if len(abiertos) != 1 or estado.signo(abiertos[0]) is not None:
                continue
            premisas = (estado.nodo(verdaderos[0]),) + tuple(
                sorted(estado.nodo(c) for c in externos if c != abiertos[0])
            )
            if self._deducir(estado, R.I_DDAG, Entry(True, abiertos[0]), premisas, lazo):
                return True
        return False

    def _globales(self, estado):
        if R.H_DAG in self.reglas and not self.indice.ajustado and self._h_dag(estado):
            return True
        if R.I_DAG in self.reglas and self._i_dag(estado):
            return True
        if self.indice.ajustado:
            return False
        if R.H_DDAG in self.reglas and self._h_ddag(estado):
            return True
        return R.I_DDAG in self.reglas and self._i_ddag(estado)

    # ------------------------------------------------------------------
    # Propagación
    # ------------------------------------------------------------------

    def _vigilar_plazo(self):
        if self._plazo is not None and time.monotonic() > self._plazo:
            raise TiempoAgotado(
                f"se agotaron los {self.config.limite_segundos} s tras {self.stats.decisiones} decisiones"
            )

    def _propagar(self, estado):
        while estado.contradiccion is None:
            self._vigilar_plazo()
            if not estado.agenda:
                if self._globales(estado):
                    continue
                break
            _, _, entry, regla, premisas, testigo = heapq.heappop(estado.agenda)
            if estado.signo(entry.obj) is entry.sign:
                continue
            id_nodo = self._agregar(estado, entry, regla, premisas, testigo)
            if estado.contradiccion is None:
                self._disparar(estado, entry, id_nodo)
        estado.agenda = []
        return estado

    def _iniciales(self, estado):
        """Deducciones sin premisas y consecuencias de la raíz ``F⊥``."""
        for cuerpo in self.indice.cuerpos:
            if not cuerpo.literales:
                self._deducir(estado, R.B, Entry(True, cuerpo), ())
        for atomo in self.indice.atomos:
            if not self.indice.cuerpos_de[atomo]:
                self._deducir(estado, R.H_SEC, Entry(False, atomo), ())

    def estado_inicial(self):
        self.nodos.clear()
        raiz = nodo_raiz()
        self.nodos.append(raiz)
        estado = Estado({BOT: (False, 0)}, 0)
        self._disparar(estado, raiz.entry, 0)
        self._iniciales(estado)
        return estado

    def cargar_rama(self, rama):
        """Carga una rama existente (renumerando sus nodos) como estado abierto."""
        self.nodos.clear()
        nuevos = {}
        for i, nodo in enumerate(rama.nodos):
            nuevos[nodo.id] = i
            padre = None if nodo.parent is None else i - 1
            premisas = tuple(nuevos[p] for p in nodo.premises if p in nuevos)
            self.nodos.append(ProofNode(i, padre, nodo.entry, nodo.rule, premisas, nodo.witness))
        estado = Estado({}, len(self.nodos) - 1)
        for nodo in self.nodos:
            previo = estado.valores.get(nodo.entry.obj)
            if previo is None:
                estado.valores[nodo.entry.obj] = (nodo.entry.sign, nodo.id)
            elif previo[0] != nodo.entry.sign and estado.contradiccion is None:
                estado.contradiccion = nodo.id
        if estado.contradiccion is None:
            for nodo in self.nodos:
                self._disparar(estado, nodo.entry, nodo.id)
            self._iniciales(estado)
        return estado

    def rama_actual(self, estado):
        camino = []
        actual = estado.punta
        while actual is not None:
            camino.append(self.nodos[actual])
            actual = self.nodos[actual].parent
        return Branch(tuple(camino[::-1]))

    # ------------------------------------------------------------------
    # Corte y lookahead
    # ------------------------------------------------------------------

    def _cortar(self, estado, objeto):
        """Crea los dos hijos del corte y devuelve sus estados (T, F)."""
        padre = estado.punta
        hijos = []
        for signo in (True, False):
            hijo = estado.copia()
            hijo.punta = padre
            entry = Entry(signo, objeto)
            id_nodo = self._agregar(hijo, entry, CORTE)
            hijo.punta = id_nodo
            hijos.append((hijo, entry, id_nodo))
        for hijo, entry, id_nodo in hijos:
            self._disparar(hijo, entry, id_nodo)
        return hijos[0][0], hijos[1][0]

    def _sonda_falla(self, estado, entry):
        self._vigilar_plazo()
        self.stats.sondeos += 1
        destino, base = self._destino, self._base
        self._base = base + len(destino)
        self._destino = []
        try:
            sonda = estado.copia()
            id_nodo = self._agregar(sonda, entry, CORTE)
            self._disparar(sonda, entry, id_nodo)
            self._propagar(sonda)
            return sonda.contradiccion is not None
        finally:
            self._destino, self._base = destino, base

    def _forzar(self, estado, objeto, signo_fallido):
        """Corte de lookahead: la rama fallida se cierra y la otra sigue en ``estado``."""
        self.stats.forzadas += 1
        rama_t, rama_f = self._cortar(estado, objeto)
        fallida, sobreviviente = (rama_t, rama_f) if signo_fallido else (rama_f, rama_t)
        self._propagar(fallida)
        self.stats.ramas_cerradas += 1
        estado.valores = sobreviviente.valores
        estado.punta = sobreviviente.punta
        estado.agenda = sobreviviente.agenda
        estado.contradiccion = sobreviviente.contradiccion
        self._propagar(estado)
        return Entry(not signo_fallido, objeto)

    def _lookahead(self, estado):
        forzadas = []
        cambio = True
        while cambio and estado.contradiccion is None:
            cambio = False
            for objeto in self.objetos_corte:
                if objeto in estado.valores:
                    continue
                for signo in (True, False):
                    if self._sonda_falla(estado, Entry(signo, objeto)):
                        forzadas.append(self._forzar(estado, objeto, signo))
                        cambio = True
                        break
                if estado.contradiccion is not None:
                    break
            logger.debug("lookahead: %d entradas forzadas", len(forzadas))
        return forzadas

    # ------------------------------------------------------------------
    # Búsqueda
    # ------------------------------------------------------------------

    def _completa(self, estado):
        return all(o in estado.valores for o in self.indice.atomos) and all(
            c in estado.valores for c in self.indice.cuerpos
        )

    def _modelo(self, estado):
        return frozenset(a for a in self.program.atoms if estado.signo(a) is True)

    def solve(self, todos=False):
        segundos = self.config.limite_segundos
        self._plazo = None if segundos is None else time.monotonic() + segundos
        pila = [self.estado_inicial()]
        modelos = []
        while pila:
            estado = self._propagar(pila.pop())
            if estado.contradiccion is None and self.config.lookahead:
                self._lookahead(estado)
            if estado.contradiccion is not None:
                self.stats.ramas_cerradas += 1
                continue
            objeto = self.heuristica.elegir(estado.valores)
            if objeto is None:
                objeto = next((o for o in self.indice.cuerpos if o not in estado.valores), None)
            if objeto is None:
                modelos.append(self._modelo(estado))
                logger.debug("rama completa no contradictoria: %s", sorted(modelos[-1]))
                if not todos:
                    break
                continue
            self.stats.decisiones += 1
            limite = self.config.limite_decisiones
            if limite is not None and self.stats.decisiones > limite:
                raise LimiteExcedido(f"se superó el límite de {limite} decisiones")
            self._vigilar_plazo()
            logger.debug("corte %d sobre %s", self.stats.decisiones, objeto)
            rama_t, rama_f = self._cortar(estado, objeto)
            pila.append(rama_f)
            pila.append(rama_t)
        self.stats.entradas = len(self.nodos)
        if self.config.reglas == "supported":
            logger.warning("respuesta bajo semántica de modelos soportados (supported-model semantics)")
        if modelos:
            return ResultadoSolve("SAT", modelos[0], None, self.stats, self.config.semantica, modelos)
        prueba = TableauProof(list(self.nodos), self.extension)
        return ResultadoSolve("UNSAT", None, prueba, self.stats, self.config.semantica, [])


# ----------------------------------------------------------------------
# Operaciones públicas
# ----------------------------------------------------------------------

def solve(program, e=None, config=None, todos=False):
    """Resuelve ``Π ∪ E``: SAT con un modelo o UNSAT con una demostración."""
    return MotorTableau(program, e, config).solve(todos)


def propagate(program, e, branch, config=None):
    """Cierra ``branch`` bajo las reglas de deducción habilitadas."""
    motor = MotorTableau(program, e, config)
    estado = motor.cargar_rama(branch)
    motor._propagar(estado)
    return motor.rama_actual(estado)


def cut(branch, objeto, program=None, e=None, alcance="atoms+bodies"):
    """
    Aplica el corte sobre ``objeto`` al final de ``branch``.

    Raises:
        ErrorPrecondicion: objeto ya asignado o fuera del alcance de corte.
    """
    if objeto in branch.asignacion:
        raise ErrorPrecondicion(f"el objeto {objeto} ya está asignado en la rama")
    if program is not None:
        completo = (e or ExtensionSet()).aplicar(program)
        es_cuerpo = isinstance(objeto, Body)
        permitido = objeto in completo.body_set if es_cuerpo else objeto in completo.atom_set
        if not permitido or (es_cuerpo and alcance == "atoms"):
            raise ErrorPrecondicion(f"el objeto {objeto} está fuera del alcance de corte")
    hoja = branch.hoja
    hijos = []
    for signo in (True, False):
        nodo = ProofNode(hoja.id + 1, hoja.id, Entry(signo, objeto), CORTE)
        hijos.append(Branch(branch.nodos + (nodo,)))
    return hijos[0], hijos[1]


def lookahead(program, e, branch, config=None):
    """Entradas forzadas por sondeo de ambos signos sobre ``branch``."""
    motor = MotorTableau(program, e, config)
    estado = motor._propagar(motor.cargar_rama(branch))
    forzadas = [] if estado.contradiccion is not None else motor._lookahead(estado)
    return ResultadoLookahead(forzadas, motor.rama_actual(estado), estado.contradiccion is not None)
