#
# Copyright (c) 2026 Bewit Development Team
# This software is distributed under the terms of the MIT License.
#

from ..linalg import BewitError


class InvalidStateError(BewitError):
    """
    A matrix that was supposed to be a density matrix failed validation:
    it is not Hermitian, its trace is not one, or it has a negative eigenvalue beyond the allowed slack.
    """
    pass


class UnknownStateIDError(BewitError):
    """
    The requested catalog entry does not exist.
    """
    pass


class DomainError(BewitError):
    """
    A scalar parameter such as a visibility or a mixing weight is outside of its domain.
    """
    pass


class ParseError(BewitError):
    """
    A serialized state, Bloch specification, or witness file could not be parsed.
    """
    pass
