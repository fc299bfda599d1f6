"""ASP Tableaux: entradas, reglas de deducción, extensión y búsqueda."""

from .entradas import Entry, ProofNode, Branch, TableauProof, proof_length, t, f
from .extension import ExtensionStep, ExtensionSet, extend
from .configuracion import EngineConfig, SolveStats
from .motor import MotorTableau, ResultadoSolve, solve, propagate, cut, lookahead
