"""
Experimentos de escalado: decisiones, entradas y longitud de demostración del
motor sobre las familias del palomar.

Los resultados absolutos no son comparables con otros resolutores; el banco
reproduce la forma cualitativa (crecimiento exponencial en PHP, ninguna
decisión con lookahead en EPHP, efecto de la redundancia aleatoria).
"""

from concurrent.futures import ProcessPoolExecutor
import csv
from dataclasses import dataclass, fields, replace
import logging
import os
import time

import numpy as np

from src.errores import ErrorConfiguracion, ErrorInterno, TiempoAgotado
from src.familias import FAMILIAS, add_random_redundancy, gen_php
from src.tableau.motor import solve

logger = logging.getLogger(__name__)

VERSION_CSV = 1
FAMILIAS_BANCO = ("php", "cphp", "ephp", "php-loops", "addred-php")
VALORES_P = tuple(range(50, 451, 50))
TIMEOUT_POR_DEFECTO = 60.0

SAT = "SAT"
UNSAT = "UNSAT"
TIMEOUT = "TIMEOUT"


def timeout_por_defecto():
    """Segundos por instancia: ``LAB_TIMEOUT`` o 60."""
    valor = os.environ.get("LAB_TIMEOUT")
    if valor is None:
        return TIMEOUT_POR_DEFECTO
    try:
        segundos = float(valor)
    except ValueError:
        raise ErrorConfiguracion(f"LAB_TIMEOUT no es un número: {valor!r}") from None
    if segundos <= 0:
        raise ErrorConfiguracion("LAB_TIMEOUT debe ser positivo")
    return segundos


@dataclass(frozen=True)
class BenchRecord:
    """Una ejecución del motor sobre una instancia."""

    family: str
    n: int
    preset: str
    seed: int
    result: str
    decisions: int = None
    entries: int = None
    lookahead_probes: int = None
    proof_length: int = None
    wall_millis: float = None
    p: int = None
    trial: int = None

    @property
    def censurado(self):
        return self.result == TIMEOUT

    def fila(self, con_tiempos=True):
        valores = []
        for campo in fields(self):
            valor = getattr(self, campo.name)
            if campo.name == "wall_millis":
                valor = f"{valor:.1f}" if con_tiempos and valor is not None else ""
            valores.append("" if valor is None else valor)
        return valores


COLUMNAS = tuple(campo.name for campo in fields(BenchRecord))


@dataclass(frozen=True)
class ReporteEscalado:
    """Ajustes sobre las medianas por ``n`` de las filas no censuradas."""

    ns: tuple
    pendiente_log_decisiones: float   # ln(decisiones + 1) contra n
    pendiente_loglog_longitud: float  # ln(longitud) contra ln(n)
    razones: tuple                    # decisiones(n+1) / decisiones(n)

    @property
    def exponencial(self):
        return bool(self.razones) and min(self.razones) >= 2

    @property
    def polinomial(self):
        return self.pendiente_loglog_longitud is not None and self.pendiente_loglog_longitud < 7


@dataclass
class ResultadoBanco:
    registros: list
    reporte: ReporteEscalado = None


def instancia(familia, n, p=None, semilla=0):
    """Programa de la familia; ``addred-php`` agrega redundancia a PHP."""
    if familia == "addred-php":
        return add_random_redundancy(gen_php(n), n, p, semilla)
    try:
        return FAMILIAS[familia](n)
    except KeyError:
        raise ErrorConfiguracion(f"familia desconocida: {familia}") from None


def _ejecutar(tarea):
    familia, n, p, ensayo, semilla, config = tarea
    programa = instancia(familia, n, p, semilla)
    comunes = dict(family=familia, n=n, preset=config.reglas, seed=semilla, p=p, trial=ensayo)
    inicio = time.perf_counter()
    try:
        resultado = solve(programa, None, config)
    except TiempoAgotado:
        milis = (time.perf_counter() - inicio) * 1000
        return BenchRecord(result=TIMEOUT, wall_millis=milis, **comunes)
    milis = (time.perf_counter() - inicio) * 1000
    if resultado.satisfacible:
        # Todas las familias del banco son insatisfacibles
        raise ErrorInterno(f"{familia} n={n} resultó satisfacible")
    stats = resultado.stats
    return BenchRecord(
        result=resultado.estado,
        decisions=stats.decisiones,
        entries=stats.entradas,
        lookahead_probes=stats.sondeos,
        proof_length=resultado.prueba.longitud(),
        wall_millis=milis,
        **comunes,
    )


def tareas_banco(familia, rango, config, repeticiones=1, semilla=0, valores_p=VALORES_P):
    """Tareas en orden de ejecución: por ``n``, luego por ``p`` y ensayo."""
    if familia not in FAMILIAS_BANCO:
        raise ErrorConfiguracion(f"familia desconocida: {familia}")
    tareas = []
    for n in rango:
        for p in (valores_p if familia == "addred-php" else (None,)):
            for ensayo in range(repeticiones):
                # La semilla del ensayo alimenta la redundancia y la heurística aleatoria
                s = semilla + ensayo
                tareas.append((familia, n, p, ensayo, s, replace(config, semilla=s)))
    return tareas


def bench_run(familia, rango, config, repeticiones=1, semilla=0, timeout=None, trabajos=1,
              valores_p=VALORES_P):
    """
    Ejecuta el banco y calcula el reporte de escalado.

    ``timeout`` (segundos por instancia) usa ``LAB_TIMEOUT`` si no se indica;
    las instancias que lo superan quedan como filas censuradas. Con
    ``trabajos > 1`` las instancias corren en procesos separados y el orden
    de las filas no cambia.
    """
    if timeout is None:
        timeout = timeout_por_defecto()
    config = replace(config, limite_segundos=timeout).exigir_valida()
    tareas = tareas_banco(familia, rango, config, repeticiones, semilla, valores_p)
    logger.info("banco %s: %d instancias, %d trabajos", familia, len(tareas), trabajos)
    if trabajos > 1:
        with ProcessPoolExecutor(max_workers=trabajos) as pool:
            registros = list(pool.map(_ejecutar, tareas))
    else:
        registros = [_ejecutar(t) for t in tareas]
    for registro in registros:
        if registro.censurado:
            logger.warning("%s n=%d p=%s: tiempo agotado (fila censurada)", registro.family, registro.n, registro.p)
    return ResultadoBanco(registros, reporte_escalado(registros))


def _medianas(registros, campo):
    por_n = {}
    for r in registros:
        if not r.censurado:
            por_n.setdefault(r.n, []).append(getattr(r, campo))
    ns = sorted(por_n)
    return np.array(ns, dtype=float), np.array([np.median(por_n[n]) for n in ns], dtype=float)


def reporte_escalado(registros):
    """``None`` si hay menos de dos valores de ``n`` con filas completas."""
    ns, decisiones = _medianas(registros, "decisions")
    if len(ns) < 2:
        return None
    pendiente_exp = float(np.polyfit(ns, np.log(decisiones + 1), 1)[0])
    _, longitudes = _medianas(registros, "proof_length")
    pendiente_pol = float(np.polyfit(np.log(ns), np.log(longitudes), 1)[0])
    razones = tuple(
        float(b / a) for a, b in zip(decisiones[:-1], decisiones[1:]) if a > 0
    )
    return ReporteEscalado(tuple(int(n) for n in ns), pendiente_exp, pendiente_pol, razones)


def resumen_por_p(registros):
    """Mediana, mínimo y máximo de decisiones por ``(n, p)``."""
    grupos = {}
    for r in registros:
        if r.p is not None and not r.censurado:
            grupos.setdefault((r.n, r.p), []).append(r.decisions)
    filas = []
    for (n, p), valores in sorted(grupos.items()):
        valores = np.array(valores, dtype=float)
        filas.append((n, p, float(np.median(valores)), int(valores.min()), int(valores.max())))
    return filas


def escribir_csv(ruta, registros, con_tiempos=True):
    with open(ruta, "w", newline="", encoding="utf-8") as archivo:
        archivo.write(f"# bench-csv v{VERSION_CSV}\n")
        escritor = csv.writer(archivo)
        escritor.writerow(COLUMNAS)
        for registro in registros:
            escritor.writerow(registro.fila(con_tiempos))


def lineas_plotdata(registros):
    """Columnas separadas por espacios, con una línea de encabezado ``#``."""
    if any(r.p is not None for r in registros):
        lineas = ["# n p median_decisions min_decisions max_decisions"]
        lineas += [f"{n} {p} {med:g} {mn} {mx}" for n, p, med, mn, mx in resumen_por_p(registros)]
        return lineas
    lineas = ["# n median_decisions median_entries median_proof_length"]
    ns, decisiones = _medianas(registros, "decisions")
    _, entradas = _medianas(registros, "entries")
    _, longitudes = _medianas(registros, "proof_length")
    for fila in zip(ns, decisiones, entradas, longitudes):
        lineas.append(" ".join(f"{v:g}" for v in fila))
    return lineas


def escribir_plotdata(ruta, registros):
    with open(ruta, "w", encoding="utf-8") as archivo:
        archivo.write("\n".join(lineas_plotdata(registros)) + "\n")
