"""Formatos de archivo, línea de comandos y banco de experimentos."""

from .formatos import (
    parse_program,
    serialize_program,
    parse_dimacs,
    serialize_dimacs,
    parse_res_proof,
    serialize_res_proof,
    parse_tableau_proof,
    serialize_tableau_proof,
)
from .banco import BenchRecord, bench_run
from .comandos import cli_dispatch
