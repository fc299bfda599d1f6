"""
Refutación por resolución extendida del palomar y su traslado a tableau.

La refutación reduce el palomar de ``m+1`` palomas y ``m`` agujeros al de
``m`` palomas y ``m-1`` agujeros. Para cada paloma ``i <= m`` y agujero
``j < m`` se define ``E[m,i,j] ≡ A ∨ (B ∧ C)`` con ``A = E[m+1,i,j]``,
``B = E[m+1,i,m]`` y ``C = E[m+1,m+1,j]``, mediante dos tripletas:
``y ≡ B ∧ C`` y ``z ≡ ¬A ∧ ¬y`` (entonces ``E[m,i,j] = ¬z``).

``gen_ephp`` agrega al programa PHP las capas, un átomo por cláusula de la
refutación y la cadena que las recorre; ``gen_ephp_proof`` construye la
demostración E-ASP-T correspondiente sin usar el corte salvo en la cadena.
"""

from dataclasses import dataclass, field
import logging

from src.errores import ErrorInterno
from src.nucleo.programa import Body, Literal
from src.demostraciones.constructor import ConstructorCadena, ConstructorTableau, nombre_fresco
from src.demostraciones.resolucion import ConstructorResolucion, ExtensionTriple
from src.tableau.extension import ExtensionSet, ExtensionStep
from .php import gen_php, nombre_e, nombre_p, pasos_capas, php_clausulas, variable_p

logger = logging.getLogger(__name__)

# Tipos de variable de extensión
CONJUNCION = "y"
NEGACION = "z"


@dataclass(frozen=True)
class Definicion:
    """Variable de extensión: tipo y posición ``(m, i, j)`` en la capa."""

    tipo: str
    m: int
    i: int
    j: int


@dataclass
class DemostracionCook:
    """Refutación E-RES de ``php_clausulas(n)`` con datos por nivel."""

    n: int
    clausulas: object
    tripletas: tuple
    prueba: object
    definiciones: dict
    pasos_por_nivel: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.prueba)


class ConstructorCook:
    """Construye la refutación nivel por nivel, de ``n`` a 2."""

    def __init__(self, n):
        self.n = n
        self.clausulas = php_clausulas(n)
        self.res = ConstructorResolucion()
        self.tripletas = []
        self.definiciones = {}
        self.siguiente = self.clausulas.num_vars + 1
        # Literal de E[l,i,j] para la capa actual
        self.e = {(n + 1, i, j): variable_p(n, i, j) for i in range(1, n + 2) for j in range(1, n + 1)}
        self.palomas = {}
        self.agujeros = {}

    def _tripleta(self, definicion, l1, l2):
        var = self.siguiente
        self.siguiente += 1
        self.tripletas.append(ExtensionTriple(var, l1, l2))
        self.definiciones[var] = definicion
        return len(self.tripletas) - 1

    def _clausula_de(self, k, posicion):
        return self.res.inicial(self.tripletas[k].clausulas()[posicion], etiqueta=k)

    def _entradas(self):
        n = self.n
        for i in range(1, n + 2):
            self.palomas[(n + 1, i)] = self.res.inicial(self.clausulas.clausulas[i - 1])
        for c in self.clausulas.clausulas[n + 1:]:
            a, b = sorted(-l for l in c)
            i, k = divmod(a - 1, n)
            i2, _ = divmod(b - 1, n)
            self.agujeros[(n + 1, i + 1, i2 + 1, k + 1)] = self.res.inicial(c)

    def _reducir(self, m):
        """Cláusulas de palomas y agujeros del nivel ``m`` desde las del ``m+1``."""
        e, res = self.e, self.res
        n1 = m + 1
        ty, tz = {}, {}
        for i in range(1, m + 1):
            for j in range(1, m):
                a, b, c = e[(n1, i, j)], e[(n1, i, m)], e[(n1, n1, j)]
                ty[(i, j)] = self._tripleta(Definicion(CONJUNCION, m, i, j), b, c)
                y = self.tripletas[ty[(i, j)]].var
                tz[(i, j)] = self._tripleta(Definicion(NEGACION, m, i, j), -a, -y)
                e[(m, i, j)] = -self.tripletas[tz[(i, j)]].var

        def d1(i, j):
            # {z, A, B}
            return res.resolver(self._clausula_de(tz[(i, j)], 0), self._clausula_de(ty[(i, j)], 1))

        def d2(i, j):
            # {z, A, C}
            return res.resolver(self._clausula_de(tz[(i, j)], 0), self._clausula_de(ty[(i, j)], 2))

        for i in range(1, m + 1):
            s = self.palomas[(n1, i)]
            for j in range(1, m):
                s = res.resolver(s, self._clausula_de(tz[(i, j)], 1))
            t = res.resolver(self.palomas[(n1, n1)], self.agujeros[(n1, i, n1, m)])
            for j in range(1, m):
                d3 = res.resolver(self._clausula_de(tz[(i, j)], 2), self._clausula_de(ty[(i, j)], 0))
                t = res.resolver(t, d3)
            self.palomas[(m, i)] = res.resolver(s, t)

        for i in range(1, m + 1):
            for i2 in range(i + 1, m + 1):
                for k in range(1, m):
                    mismo = self.agujeros[(n1, i, i2, k)]
                    x = res.resolver(res.resolver(d2(i, k), self.agujeros[(n1, i2, n1, k)]), mismo)
                    y = res.resolver(res.resolver(d2(i2, k), self.agujeros[(n1, i, n1, k)]), mismo)
                    w = res.resolver(d1(i, k), y)
                    v = res.resolver(res.resolver(x, d1(i2, k)), self.agujeros[(n1, i, i2, m)])
                    self.agujeros[(m, i, i2, k)] = res.resolver(w, v)

    def construir(self):
        self._entradas()
        pasos_por_nivel = {}
        for m in range(self.n, 1, -1):
            antes = len(self.res.prueba)
            self._reducir(m)
            pasos_por_nivel[m] = len(self.res.prueba) - antes
            logger.debug("nivel %d: %d pasos", m, pasos_por_nivel[m])
        final = self.res.resolver(self.palomas[(2, 1)], self.agujeros[(2, 1, 2, 1)])
        final = self.res.resolver(final, self.palomas[(2, 2)])
        if self.res.clausula(final):
            raise ErrorInterno("la reducción del palomar no terminó en la cláusula vacía")
        return DemostracionCook(
            self.n, self.clausulas, tuple(self.tripletas), self.res.prueba,
            dict(self.definiciones), pasos_por_nivel,
        )


def construir_php_eres(n):
    """Refutación E-RES completa de ``php_clausulas(n)`` con sus datos auxiliares."""
    return ConstructorCook(n).construir()


def php_eres_proof(n):
    """
    Refutación por resolución extendida del palomar.

    Returns:
        Tupla ``(tripletas, ResolutionProof)`` sobre ``php_clausulas(n)``.
    """
    demostracion = construir_php_eres(n)
    return demostracion.tripletas, demostracion.prueba


# ----------------------------------------------------------------------
# EPHP
# ----------------------------------------------------------------------

class CadenaPalomar(ConstructorCadena):
    """
    Esquema de cadena sobre ``gen_php(n)``: cada literal CNF se hace verdadero
    con cuerpos sobre los átomos ``p`` y ``e`` en lugar de átomos de variable.
    """

    def __init__(self, demostracion):
        super().__init__(demostracion.prueba)
        self.demostracion = demostracion
        self.n = demostracion.n
        self.entrada = frozenset(demostracion.clausulas.clausulas)
        capas = pasos_capas(self.n)
        usados = set(gen_php(self.n).atoms) | set(capas.cabezas())
        self.atomos = {}
        pasos = list(capas.steps)
        for paso in self.prueba_res.pasos:
            if paso.clausula and paso.clausula not in self.atomos:
                nombre = nombre_fresco("cl", len(self.atomos) + 1, usados)
                self.atomos[paso.clausula] = nombre
                pasos.append(ExtensionStep(nombre, self.cuerpos_clausula(paso.clausula)))
        for k in self.pasos_cadena():
            nombre = nombre_fresco("ch", k + 1, usados)
            cuerpo = [Literal(self.atomo_clausula(k))]
            if k:
                cuerpo.append(Literal(self.cadena[-1]))
            self.cadena.append(nombre)
            pasos.append(ExtensionStep(nombre, (Body(tuple(cuerpo)),)))
        self.extension = ExtensionSet(tuple(pasos))

    def atomo_de(self, literal):
        """Átomo verdadero exactamente cuando ``literal`` (un ``E[l,i,j]``) lo es."""
        if literal > 0:
            i, j = divmod(literal - 1, self.n)
            return nombre_p(i + 1, j + 1)
        definicion = self.demostracion.definiciones[-literal]
        return nombre_e(self.n, definicion.m, definicion.i, definicion.j)

    def _operandos(self, definicion):
        """Átomos de ``B`` y ``C`` de una conjunción."""
        m, i, j = definicion.m, definicion.i, definicion.j
        return nombre_e(self.n, m + 1, i, m), nombre_e(self.n, m + 1, m + 1, j)

    def sigma(self, literal):
        var = abs(literal)
        definicion = self.demostracion.definiciones.get(var)
        if definicion is None:
            return (Body((Literal(self.atomo_de(var), literal > 0),)),)
        if definicion.tipo == NEGACION:
            e = nombre_e(self.n, definicion.m, definicion.i, definicion.j)
            return (Body((Literal(e, literal < 0),)),)
        b, c = self._operandos(definicion)
        if literal > 0:
            return (Body.de(b, c),)
        return (Body.de(f"not {b}"), Body.de(f"not {c}"))

    def atomo_clausula(self, k):
        return self.atomos[self.prueba_res.pasos[k].clausula]

    def es_entrada(self, k):
        return self.prueba_res.pasos[k].clausula in self.entrada

    def _preparar(self, rama, k):
        atomo = self.atomo_clausula(k)
        self.constructor.falsear_cuerpos(rama, atomo)
        self.constructor.literales_unitarios_falsos(rama, atomo)

    def cerrar_entrada(self, rama, k):
        # Sin ⊥ <- not c: la restricción PHP de la cláusula queda con cuerpo verdadero
        self._preparar(rama, k)
        self.constructor.restriccion_violada(rama)

    def cerrar_extension(self, rama, k):
        constructor = self.constructor
        paso = self.prueba_res.pasos[k]
        tripleta = self.demostracion.tripletas[paso.etiqueta]
        definicion = self.demostracion.definiciones[tripleta.var]
        posicion = tripleta.clausulas().index(paso.clausula)
        self._preparar(rama, k)
        if definicion.tipo == CONJUNCION:
            if posicion == 0:
                constructor.cuerpo_verdadero(rama, Body.de(*self._operandos(definicion)))
            return
        e = nombre_e(self.n, definicion.m, definicion.i, definicion.j)
        if posicion == 0:
            constructor.cabeza_falsa(rama, e)
            return
        if posicion == 1:
            cuerpo = Body.de(self.atomo_de(-tripleta.l1))
        else:
            cuerpo = Body.de(*self._operandos(self.demostracion.definiciones[-tripleta.l2]))
        constructor.cuerpo_verdadero(rama, cuerpo)
        constructor.cabeza_verdadera(rama, e, cuerpo)


def _cadena_ephp(n):
    return CadenaPalomar(construir_php_eres(n))


def gen_ephp(n):
    """PHP con las capas, un átomo por cláusula de la refutación y la cadena."""
    cadena = _cadena_ephp(n)
    return cadena.extension.aplicar(gen_php(n))


def gen_ephp_proof(n):
    """
    Demostración E-ASP-T de ``gen_php(n)`` de longitud polinomial.

    Returns:
        Tupla ``(ExtensionSet, TableauProof)``; la extensión es exactamente la
        diferencia entre ``gen_ephp(n)`` y ``gen_php(n)``.
    """
    cadena = _cadena_ephp(n)
    constructor = ConstructorTableau(gen_php(n), cadena.extension)
    prueba = cadena.construir(constructor)
    logger.debug("EPHP n=%d: %d reglas de extensión, %d nodos", n, len(cadena.extension), len(prueba.nodes))
    return cadena.extension, prueba
