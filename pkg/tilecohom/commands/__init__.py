from tilecohom.commands import builtin, check, cohomology, homology, limit, spectral

COMMANDS = [check, homology, cohomology, spectral, limit, builtin]

__all__ = ["COMMANDS"]
