"""Traducciones entre CNF y programas lógicos normales."""

from .traducciones import NameMap, to_asp, to_cnf, map_models
