"""Error taxonomy shared by the library and the CLI.

The CLI maps these onto exit codes: InvariantError -> 1 (an internal
consistency check failed, i.e. a bug), InfeasibleError -> 2 (the request is
well-formed but exceeds the configured size ceiling), InputError -> 3
(malformed or inconsistent input).
"""


class GammaextError(Exception):
    pass


class InputError(GammaextError):
    """Malformed or inconsistent user input."""


class InfeasibleError(GammaextError):
    """Request exceeds the feasibility ceiling; carries the offending sizes."""

    def __init__(self, message, sizes=None):
        super().__init__(message)
        self.sizes = dict(sizes or {})


class InvariantError(GammaextError):
    """An internal algebraic invariant failed; indicates a bug."""
