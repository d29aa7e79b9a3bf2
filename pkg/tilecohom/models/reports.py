from dataclasses import dataclass
from typing import Tuple


@dataclass(frozen=True)
class ValidationReport:
    """Resultado de una validación: lista de fallos localizados"""
    failures: Tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass(frozen=True)
class CommandResult:
    exit_code: int = 0
    stdout: str = ""
    stderr: str = ""
