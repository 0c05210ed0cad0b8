"""Error taxonomy.

Distinct classes so callers (and the CLI exit-code mapping) can tell apart
bad input, shape mismatches between matrices, operations mixing different
categories, and internal consistency violations.  A ConsistencyError means a
mathematical fact the engine relies on failed to hold; it is never raised on
merely invalid user input.
"""

__all__ = [
    "FusionAuditError",
    "ShapeError",
    "CategoryMismatch",
    "GroupoidError",
    "SpecError",
    "ConsistencyError",
]


class FusionAuditError(Exception):
    """Base class for every error raised by this package."""


class ShapeError(FusionAuditError):
    """Matrix or block dimensions do not line up."""


class CategoryMismatch(FusionAuditError):
    """Two values from different graded categories were combined."""


class GroupoidError(FusionAuditError):
    """A groupoid constructor received data violating the axioms.

    Carries a list of human-readable failure descriptions naming the
    offending elements or triples.
    """

    def __init__(self, failures):
        self.failures = list(failures)
        super().__init__("; ".join(self.failures))


class SpecError(FusionAuditError):
    """A JSON document does not describe a valid input."""


class ConsistencyError(FusionAuditError):
    """An internal invariant that is a theorem failed on concrete data."""
