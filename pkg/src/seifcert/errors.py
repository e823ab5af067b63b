"""Exception types shared across the package.

Every error raised on bad mathematical input names the violated
precondition in its message.
"""


class DomainError(ValueError):
    """Input violates a stated precondition (unsupported or out of domain)."""


class ParseError(ValueError):
    """Malformed textual input (rationals, Seifert strings, diagram files)."""


class InternalCheckError(RuntimeError):
    """A runtime self-check failed; indicates a bug, never bad user input."""
