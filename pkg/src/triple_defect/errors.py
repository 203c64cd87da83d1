"""Exception types shared across the package.

Two failure families matter to callers: bad input (wrong syntax, wrong
field, unusable parameters) and certification failure (a point that is
not an ordinary triple point, a singular tangent cone, ...).  The CLI
maps them to exit codes 2 and 1 respectively.
"""


class InputError(ValueError):
    """Malformed or unusable input: syntax, field mismatch, bad degrees."""


class CertificationError(RuntimeError):
    """A geometric certification failed (point, cone, or rank check)."""
