"""
Jerarquía de excepciones del laboratorio.

Los verificadores de demostraciones no lanzan excepciones ante pruebas
incorrectas: devuelven un veredicto. Estas clases cubren entradas inválidas,
configuraciones erróneas y garantías internas rotas.
"""


class ErrorLaboratorio(Exception):
    """Raíz de todas las excepciones propias del proyecto."""


class ErrorEntrada(ErrorLaboratorio):
    """Entrada inválida: átomo desconocido, archivo mal formado, precondición rota."""


class ErrorSintaxis(ErrorEntrada):
    """Error de sintaxis con posición en el texto de entrada."""

    def __init__(self, mensaje, linea=None, columna=None):
        self.linea = linea
        self.columna = columna
        if linea is not None:
            posicion = f"línea {linea}" + (f", columna {columna}" if columna is not None else "")
            mensaje = f"{posicion}: {mensaje}"
        super().__init__(mensaje)


class ErrorPrecondicion(ErrorEntrada):
    """La operación exige una propiedad que la entrada no cumple."""


class ErrorExtension(ErrorEntrada):
    """Regla de extensión ilegal (cabeza no fresca o literal desconocido)."""


class LimiteExcedido(ErrorEntrada):
    """Un oráculo exponencial o una búsqueda acotada superó su límite."""


class TiempoAgotado(LimiteExcedido):
    """La búsqueda superó su presupuesto de tiempo."""


class ErrorConfiguracion(ErrorLaboratorio):
    """Configuración del motor o de la línea de comandos inválida."""


class ErrorInterno(ErrorLaboratorio):
    """Se violó una garantía interna del laboratorio."""
