"""Programas lógicos normales, semántica estable y cláusulas."""

from .programa import BOT, Literal, Body, Rule, Program
from .semantica import (
    classical_model_check,
    gl_reduct,
    least_model,
    is_stable,
    is_supported,
    enumerate_stable,
)
from .dependencias import (
    loops,
    is_tight,
    external_bodies,
    greatest_unfounded,
    split,
    partial_eval,
)
from .clausulas import ClauseSet, clausula
