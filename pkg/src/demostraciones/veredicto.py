"""Resultado de un verificador de demostraciones."""

from dataclasses import dataclass


@dataclass(frozen=True)
class Veredicto:
    """``valido`` o el primer paso fallido con su motivo."""

    valido: bool
    motivo: str = ""
    paso: int = None

    def __bool__(self):
        return self.valido

    def __str__(self):
        if self.valido:
            return "VALID"
        donde = f" (paso {self.paso})" if self.paso is not None else ""
        return f"INVALID{donde}: {self.motivo}"


VALIDO = Veredicto(True)


def invalido(motivo, paso=None):
    return Veredicto(False, motivo, paso)
