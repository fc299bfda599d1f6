"""Demostraciones: resolución, verificadores, simulaciones y mutaciones."""

from .veredicto import Veredicto
from .resolucion import (
    ExtensionTriple,
    ResolutionProof,
    ConstructorResolucion,
    check_res_proof,
    check_eres_proof,
    is_tree_like,
)
from .verificador_tableau import check_tableau_proof
from .simulaciones import (
    CutTree,
    construir_arbol_cortes,
    aspt_to_tres,
    tres_to_aspt,
    eres_to_easpt,
    easpt_to_eres,
)
