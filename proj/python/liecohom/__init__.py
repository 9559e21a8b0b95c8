"""Exact cohomology of Lie algebras with complex, symplectic and D-complex structures."""

import json

from ._liecohom import SCHEMA_VERSION, betti_numbers, catalog_names, command_names, regression, run

__all__ = [
    "SCHEMA_VERSION",
    "CommandError",
    "betti_numbers",
    "catalog_names",
    "command",
    "command_names",
    "regression",
    "run",
]


class CommandError(RuntimeError):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def command(name, **kwargs):
    """Run a command and return the parsed JSON document; raises CommandError on a nonzero exit code."""
    params = {k: str(v) for k, v in kwargs.pop("params", {}).items()}
    kwargs["format"] = "json"
    code, out, err = run(name, params=params, **kwargs)
    if code != 0:
        raise CommandError(code, err or out)
    return json.loads(out)
