"""
Heurísticas de elección del objeto de corte.
"""

import random


class Heuristica:
    """Elige el primer objeto sin asignar en orden canónico."""

    def __init__(self, objetos):
        # Átomos en orden de tabla de símbolos, luego cuerpos
        self.objetos = objetos

    def candidatos(self, asignacion):
        return [o for o in self.objetos if o not in asignacion]

    def elegir(self, asignacion):
        for objeto in self.objetos:
            if objeto not in asignacion:
                return objeto
        return None


class HeuristicaMoms(Heuristica):
    """Átomo con más apariciones en los cuerpos sin asignar de tamaño mínimo."""

    def __init__(self, objetos, cuerpos):
        super().__init__(objetos)
        self.cuerpos = cuerpos

    def elegir(self, asignacion):
        abiertos = [c for c in self.cuerpos if c not in asignacion]
        if abiertos:
            minimo = min(len(c) for c in abiertos)
            cuenta = {}
            for cuerpo in abiertos:
                if len(cuerpo) != minimo:
                    continue
                for literal in cuerpo:
                    if literal.atom not in asignacion:
                        cuenta[literal.atom] = cuenta.get(literal.atom, 0) + 1
            mejor = None
            for objeto in self.objetos:
                if cuenta.get(objeto, 0) > cuenta.get(mejor, 0):
                    mejor = objeto
            if mejor is not None:
                return mejor
        return super().elegir(asignacion)


class HeuristicaAleatoria(Heuristica):
    """Elección uniforme con generador sembrado."""

    def __init__(self, objetos, semilla):
        super().__init__(objetos)
        self.generador = random.Random(semilla)

    def elegir(self, asignacion):
        candidatos = self.candidatos(asignacion)
        if not candidatos:
            return None
        return self.generador.choice(candidatos)


def crear_heuristica(nombre, objetos, cuerpos, semilla=0):
    if nombre == "moms":
        return HeuristicaMoms(objetos, cuerpos)
    if nombre == "random":
        return HeuristicaAleatoria(objetos, semilla)
    return Heuristica(objetos)
