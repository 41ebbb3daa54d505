"""Exception types shared across the library.

Argument, domain and range violations raise plain ``ValueError`` (CLI exit
code 2).  Failures of the numerical envelope, where a computation *could*
be attempted but its accuracy contract cannot be honoured, raise
``ResolutionError`` (CLI exit code 3) instead of degrading silently.
"""


class ResolutionError(RuntimeError):
    """An oscillation or grid envelope was exceeded; the result would be
    silently inaccurate, so the operation refuses to run."""


class EnvelopeError(ResolutionError):
    """An evaluation parameter lies outside the documented accuracy
    envelope of a special-function routine."""
