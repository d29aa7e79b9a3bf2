class TilecohomError(Exception):
    """Error base: lleva un detalle legible y el código de salida de la CLI"""

    exit_code = 1

    def __init__(self, detail: str, exit_code: int = None):
        super().__init__(detail)
        self.detail = detail
        if exit_code is not None:
            self.exit_code = exit_code

    def __str__(self) -> str:
        return self.detail


class SpecError(TilecohomError):
    """Documento de teselación mal formado (mensajes con ruta, p. ej. boundaries.1)"""


class ShapeError(TilecohomError):
    """Dimensiones de matrices incompatibles"""


class PreconditionError(TilecohomError):
    """Precondición de una operación no satisfecha"""


class InconsistentDataError(TilecohomError):
    """Datos de sustitución, simetría o rotación contradictorios"""


class InternalError(TilecohomError):
    """Falló una verificación interna; nunca se emite un grupo incorrecto"""


class UsageError(TilecohomError):
    """Uso incorrecto de la línea de comandos"""

    exit_code = 2
