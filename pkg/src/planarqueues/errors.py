"""Exception hierarchy shared by all modules.

Two failure families matter to callers: bad input (reject with a message,
CLI exit code 2) and broken internal invariants (a bug upstream, CLI exit
code 3).
"""


class InputError(Exception):
    """User-supplied data is unusable: malformed file, bad arguments."""


class EmbeddingError(InputError):
    """A rotation system / outer face fails plane-graph validity."""


class InvariantError(Exception):
    """An internal structural invariant that should hold by construction
    was violated; indicates a bug in an upstream stage."""
