"""Exception hierarchy.

Input problems derive from :class:`InputError`; anything derived from
:class:`InvariantBreach` means an internal guarantee failed and the result
must not be trusted.
"""

from __future__ import annotations


class BsecError(Exception):
    pass


class InputError(BsecError):
    pass


class MalformedHeader(InputError):
    pass


class UnknownVertex(InputError):
    pass


class DuplicateEdge(InputError):
    pass


class DegreeBoundViolated(InputError):
    pass


class InvalidParameters(InputError):
    pass


class IncompleteColoring(InputError):
    pass


class InvariantBreach(BsecError):
    pass


class SingularityBroken(InvariantBreach):
    pass


class PotentialNotIncreased(InvariantBreach):
    pass


class StructureViolation(InvariantBreach):
    pass


class NoColorAvailable(InvariantBreach):
    pass
