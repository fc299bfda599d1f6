"""Familias de instancias: palomar, capas de extensión, EPHP y redundancia."""

from .php import FAMILIAS as _GENERADORES, gen_php, gen_ext_layers, gen_cphp, gen_php_selfloops, php_clausulas
from .cook import php_eres_proof, construir_php_eres, gen_ephp, gen_ephp_proof
from .redundancia import add_random_redundancy, red, red_star, visibly_equivalent

FAMILIAS = dict(_GENERADORES, ephp=gen_ephp)
