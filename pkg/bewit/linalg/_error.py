#
# Copyright (c) 2026 Bewit Development Team
# This software is distributed under the terms of the MIT License.
#


class BewitError(ValueError):
    """
    This is the root exception class for all errors raised by the library.
    Exception types defined at the higher layers (basis, states, criteria, witness)
    also inherit from this type, so the application may use it to catch any library-specific failure.

    It derives from :class:`ValueError` because every such failure is caused by an argument
    that does not satisfy the preconditions of the operation.
    """
    pass


class NotHermitianError(BewitError):
    """
    The operation requires a Hermitian matrix but the argument deviates from its conjugate transpose
    by more than the Hermiticity tolerance.
    """
    pass


class DimensionMismatchError(BewitError):
    """
    The shape of a matrix is inconsistent with the subsystem dimensions it is claimed to have,
    or two operands cannot be combined because their dimensions differ.
    """
    pass
