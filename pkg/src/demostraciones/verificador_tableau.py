"""
Verificador independiente de demostraciones de ASP Tableaux (con extensión).

Revalida cada justificación contra las reglas de deducción y sus
condiciones (§, †, ‡), comprueba que las premisas sean ancestros en la rama,
la forma de los cortes y que toda hoja sea contradictoria.
"""

import logging

from src.errores import ErrorExtension
from src.nucleo.programa import BOT, Body, Literal
from src.nucleo.dependencias import es_lazo, external_bodies
from src.tableau.entradas import CORTE, RAIZ, Entry, t
from src.tableau.extension import validar_pasos
from src.tableau import reglas as R
from .veredicto import VALIDO, invalido

logger = logging.getLogger(__name__)


class _Contexto:
    """Datos de ``Π ∪ E`` que consultan las comprobaciones por regla."""

    def __init__(self, programa):
        self.programa = programa
        self.atomos = programa.atom_set
        self.cuerpos = programa.body_set
        self.reglas = frozenset((r.head, r.body) for r in programa.rules)

    def cuerpos_de(self, cabeza):
        return frozenset(self.programa.bodies_of(cabeza))

    def no_fundado_sin(self, conjunto, excluidos):
        """``eb(conjunto) = ∅`` en el programa sin las reglas de cuerpo en ``excluidos``."""
        for regla in self.programa.rules:
            if regla.head in conjunto and regla.body not in excluidos and not (regla.body.pos & conjunto):
                return False
        return True


def _es_cuerpo(entry):
    return isinstance(entry.obj, Body)


def _cuerpos_falsos(premisas):
    """Cuerpos de premisas ``F B``; ``None`` si alguna premisa no lo es."""
    cuerpos = set()
    for p in premisas:
        if p.sign or not _es_cuerpo(p):
            return None
        cuerpos.add(p.obj)
    return cuerpos


def _separar_cabeza(premisas):
    """Divide premisas en una única ``T h`` sobre átomo y el resto."""
    atomos = [p for p in premisas if not _es_cuerpo(p)]
    if len(atomos) != 1 or not atomos[0].sign:
        return None, None
    return atomos[0], [p for p in premisas if _es_cuerpo(p)]


def _verificar_regla(ctx, nodo, entry, premisas):
    """Motivo de fallo de la justificación, o ``None`` si es válida."""
    regla = nodo.rule
    obj = entry.obj

    if regla == R.B:
        if not entry.sign or not _es_cuerpo(entry) or obj not in ctx.cuerpos:
            return "(b) concluye T de un cuerpo del programa"
        if set(premisas) != {t(l) for l in obj} or len(premisas) != len(obj):
            return "(b) exige t l para cada literal del cuerpo"
        return None

    if regla == R.C:
        if _es_cuerpo(entry):
            return "(c) concluye sobre un átomo"
        falsos = [p for p in premisas if _es_cuerpo(p) and not p.sign]
        if len(falsos) != 1 or falsos[0].obj not in ctx.cuerpos:
            return "(c) necesita exactamente una premisa F B"
        cuerpo = falsos[0].obj
        literal = Literal(obj, not entry.sign)
        if literal not in cuerpo:
            return "(c) el literal deducido no pertenece al cuerpo"
        resto = [p for p in premisas if p is not falsos[0]]
        if set(resto) != {t(l) for l in cuerpo if l != literal} or len(resto) != len(cuerpo) - 1:
            return "(c) exige t l para los demás literales"
        return None

    if regla == R.D:
        if not entry.sign or _es_cuerpo(entry) or len(premisas) != 1:
            return "(d) concluye T h desde una premisa"
        p = premisas[0]
        if not p.sign or not _es_cuerpo(p) or (obj, p.obj) not in ctx.reglas:
            return "(d) exige T B con h <- B en el programa"
        return None

    if regla == R.E:
        if entry.sign or not _es_cuerpo(entry) or len(premisas) != 1:
            return "(e) concluye F B desde una premisa"
        p = premisas[0]
        if p.sign or _es_cuerpo(p) or (p.obj, obj) not in ctx.reglas:
            return "(e) exige F h con h <- B en el programa"
        return None

    if regla == R.F:
        if entry.sign or not _es_cuerpo(entry) or obj not in ctx.cuerpos or len(premisas) != 1:
            return "(f) concluye F B desde una premisa"
        p = premisas[0]
        if _es_cuerpo(p) or Literal(p.obj, not p.sign) not in obj:
            return "(f) exige f l para un literal del cuerpo"
        return None

    if regla == R.G:
        if _es_cuerpo(entry) or len(premisas) != 1:
            return "(g) concluye t l desde una premisa"
        p = premisas[0]
        if not p.sign or not _es_cuerpo(p) or p.obj not in ctx.cuerpos:
            return "(g) exige T B"
        if Literal(obj, entry.sign) not in p.obj:
            return "(g) el literal no pertenece al cuerpo"
        return None

    if regla in (R.H_SEC, R.H_DAG, R.H_DDAG):
        if entry.sign or _es_cuerpo(entry) or obj == BOT or obj not in ctx.atomos:
            return f"({regla}) concluye F de un átomo"
        cuerpos = _cuerpos_falsos(premisas)
        if cuerpos is None or len(cuerpos) != len(premisas) or not cuerpos <= ctx.cuerpos:
            return f"({regla}) las premisas deben ser F B sobre cuerpos del programa"
        if regla == R.H_SEC:
            if cuerpos != ctx.cuerpos_de(obj):
                return "(h§) las premisas deben ser todos los cuerpos de la cabeza"
            return None
        testigo = nodo.witness
        if not testigo or obj not in testigo:
            return f"({regla}) el testigo debe contener a la cabeza"
        if regla == R.H_DAG:
            if not ctx.no_fundado_sin(frozenset(testigo), cuerpos):
                return "(h†) el testigo tiene cuerpos externos fuera de las premisas"
            return None
        if not es_lazo(ctx.programa, testigo):
            return "(h‡) el testigo no es un lazo"
        if external_bodies(ctx.programa, testigo) != cuerpos:
            return "(h‡) las premisas deben ser los cuerpos externos del lazo"
        return None

    if regla in (R.I_SEC, R.I_DAG, R.I_DDAG):
        if not entry.sign or not _es_cuerpo(entry) or obj not in ctx.cuerpos:
            return f"({regla}) concluye T de un cuerpo"
        cabeza, resto = _separar_cabeza(premisas)
        if cabeza is None:
            return f"({regla}) exige exactamente una premisa T h"
        cuerpos = _cuerpos_falsos(resto)
        if cuerpos is None or len(cuerpos) != len(resto) or obj in cuerpos or not cuerpos <= ctx.cuerpos:
            return f"({regla}) las demás premisas deben ser F B distintos del cuerpo deducido"
        if regla == R.I_SEC:
            if cuerpos | {obj} != ctx.cuerpos_de(cabeza.obj):
                return "(i§) los cuerpos deben ser exactamente los de la cabeza"
            return None
        testigo = nodo.witness
        if not testigo or cabeza.obj not in testigo:
            return f"({regla}) el testigo debe contener a la cabeza"
        if obj not in external_bodies(ctx.programa, testigo):
            return f"({regla}) el cuerpo deducido no es externo al testigo"
        if regla == R.I_DAG:
            if not ctx.no_fundado_sin(frozenset(testigo), cuerpos | {obj}):
                return "(i†) el testigo tiene cuerpos externos fuera de las premisas"
            return None
        if not es_lazo(ctx.programa, testigo):
            return "(i‡) el testigo no es un lazo"
        if external_bodies(ctx.programa, testigo) != cuerpos | {obj}:
            return "(i‡) los cuerpos externos del lazo no coinciden"
        return None

    return f"regla desconocida: {regla}"


def _intervalos(hijos, total):
    """Tiempos de entrada y salida de un recorrido en profundidad desde la raíz."""
    entrada = [0] * total
    salida = [0] * total
    reloj = 0
    pila = [(0, False)]
    while pila:
        nodo, cerrado = pila.pop()
        if cerrado:
            salida[nodo] = reloj
            reloj += 1
            continue
        entrada[nodo] = reloj
        reloj += 1
        pila.append((nodo, True))
        for hijo in reversed(hijos.get(nodo, [])):
            pila.append((hijo, False))
    return entrada, salida


def _hojas_contradictorias(proof, hijos):
    """Primera hoja no contradictoria, o ``None``."""
    valores = {}
    conflictos = 0
    pila = [(0, False)]
    while pila:
        id_nodo, salir = pila.pop()
        entry = proof.nodes[id_nodo].entry
        signos = valores.setdefault(entry.obj, [0, 0])
        if salir:
            antes = signos[0] > 0 and signos[1] > 0
            signos[entry.sign] -= 1
            if antes and not (signos[0] > 0 and signos[1] > 0):
                conflictos -= 1
            continue
        antes = signos[0] > 0 and signos[1] > 0
        signos[entry.sign] += 1
        if not antes and signos[0] > 0 and signos[1] > 0:
            conflictos += 1
        pila.append((id_nodo, True))
        descendientes = hijos.get(id_nodo, [])
        if not descendientes and conflictos == 0:
            return id_nodo
        for hijo in reversed(descendientes):
            pila.append((hijo, False))
    return None


def check_tableau_proof(program, e, proof):
    """
    Valida una demostración de (E-)ASP-T para ``Π ∪ E``.

    Returns:
        ``Veredicto`` con el primer nodo que falla, si lo hay.
    """
    e = e if e is not None else proof.extension
    try:
        validar_pasos(program, e.steps)
    except ErrorExtension as error:
        return invalido(f"extensión ilegal: {error}")
    ctx = _Contexto(e.aplicar(program))
    nodos = proof.nodes
    if not nodos:
        return invalido("demostración vacía")
    raiz = nodos[0]
    if raiz.id != 0 or raiz.parent is not None or raiz.rule != RAIZ or raiz.entry != Entry(False, BOT):
        return invalido("la raíz debe ser F⊥", 0)

    hijos = {}
    for i, nodo in enumerate(nodos[1:], 1):
        if nodo.id != i:
            return invalido("identificadores de nodo no consecutivos", i)
        if nodo.parent is None or not 0 <= nodo.parent < i:
            return invalido("el padre debe preceder al nodo", i)
        hijos.setdefault(nodo.parent, []).append(i)

    for padre, lista in hijos.items():
        cortes = [nodos[h] for h in lista if nodos[h].rule == CORTE]
        if not cortes:
            if len(lista) != 1:
                return invalido("un nodo deducido debe ser hijo único", lista[1])
            continue
        if len(lista) != 2 or len(cortes) != 2:
            return invalido("un corte produce exactamente dos hijos", lista[0])
        a, b = cortes
        if a.entry.obj != b.entry.obj or a.entry.sign == b.entry.sign:
            return invalido("los hijos de un corte deben ser Tφ y Fφ", b.id)
        objeto = a.entry.obj
        if not (objeto in ctx.cuerpos or (not isinstance(objeto, Body) and objeto in ctx.atomos)):
            return invalido("el objeto del corte no está en atom(Π) ∪ body(Π)", a.id)

    entrada, salida = _intervalos(hijos, len(nodos))
    for nodo in nodos[1:]:
        if nodo.rule == CORTE:
            if nodo.premises:
                return invalido("el corte no tiene premisas", nodo.id)
            continue
        for p in nodo.premises:
            if not (0 <= p < len(nodos)) or not (entrada[p] < entrada[nodo.id] and salida[nodo.id] < salida[p]):
                return invalido(f"la premisa {p} no precede al nodo en su rama", nodo.id)
        premisas = [nodos[p].entry for p in nodo.premises]
        motivo = _verificar_regla(ctx, nodo, nodo.entry, premisas)
        if motivo:
            return invalido(motivo, nodo.id)

    abierta = _hojas_contradictorias(proof, hijos)
    if abierta is not None:
        return invalido("rama abierta: la hoja no es contradictoria", abierta)
    return VALIDO
