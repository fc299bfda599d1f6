"""
Identificadores de las reglas de deducción, su prioridad en la agenda y los
conjuntos de reglas de cada configuración predefinida.
"""

from .entradas import CORTE, RAIZ

B = "b"
C = "c"
D = "d"
E = "e"
F = "f"
G = "g"
H_SEC = "h§"
I_SEC = "i§"
H_DAG = "h†"
I_DAG = "i†"
H_DDAG = "h‡"
I_DDAG = "i‡"

# Reglas locales en orden de prioridad
REGLAS_LOCALES = (B, F, D, E, C, G, H_SEC, I_SEC)
PRIORIDAD = {regla: i for i, regla in enumerate(REGLAS_LOCALES)}

# Reglas globales en orden de aplicación, sólo con la agenda local vacía
REGLAS_GLOBALES = (H_DAG, I_DAG, H_DDAG, I_DDAG)

TODAS = frozenset(REGLAS_LOCALES + REGLAS_GLOBALES)
IDENTIFICADORES = TODAS | {CORTE, RAIZ}

CONJUNTOS = {
    "supported": frozenset(REGLAS_LOCALES),
    "nomore": frozenset(REGLAS_LOCALES) | {H_DAG},
    "smodels": TODAS,
    "full": TODAS,
}

# Reglas con testigo de conjunto de átomos
CON_TESTIGO = frozenset({H_DAG, I_DAG, H_DDAG, I_DDAG})
