#
# Copyright (c) 2026 Bewit Development Team
# This software is distributed under the terms of the MIT License.
#

from __future__ import annotations
import typing
import logging
import dataclasses
import numpy
from .. import linalg
from ..util import repr_attributes, repr_array
from ._error import InvalidStateError


LOOSE_PSD_SLACK = 1e-6
"""
PSD slack for states assembled from constants that are only known to about seven significant digits,
and for states loaded from external files.
"""

_logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True, eq=False)
class DensityMatrix:
    """
    A bipartite density matrix on ``C^dim_a ⊗ C^dim_b``. The matrix is stored as a read-only complex array.

    The constructor only checks the shape; use :meth:`checked` or the constructors in this package
    to obtain a validated state.
    """

    matrix: numpy.ndarray
    dim_a: int
    dim_b: int

    def __post_init__(self) -> None:
        m = numpy.array(self.matrix, dtype=complex)
        if self.dim_a < 1 or self.dim_b < 1:
            raise linalg.DimensionMismatchError(f'Invalid subsystem dimensions: {self.dim_a}x{self.dim_b}')
        n = self.dim_a * self.dim_b
        if m.shape != (n, n):
            raise linalg.DimensionMismatchError(f'A {self.dim_a}x{self.dim_b} state must be {n}x{n}, got {m.shape}')
        m.setflags(write=False)
        object.__setattr__(self, 'matrix', m)

    @staticmethod
    def checked(matrix: numpy.ndarray,
                dim_a: int,
                dim_b: int,
                slack: float = linalg.PSD_SLACK) -> DensityMatrix:
        """
        Constructs the state and validates it with :func:`validate_state`.

        :raises: :class:`InvalidStateError` if the validation fails.
        """
        out = DensityMatrix(matrix, dim_a, dim_b)
        diag = validate_state(out, slack=slack)
        if not diag.passed:
            raise InvalidStateError(f'Not a valid density matrix: {diag}')
        return out

    @property
    def dim(self) -> int:
        """
        Total dimension ``dim_a * dim_b``.
        """
        return self.dim_a * self.dim_b

    @property
    def local_dimension(self) -> int:
        """
        The common local dimension of a symmetric bipartition.
        """
        if self.dim_a != self.dim_b:
            raise linalg.DimensionMismatchError(f'Asymmetric bipartition {self.dim_a}x{self.dim_b}')
        return self.dim_a

    def marginal(self, keep: linalg.Subsystem) -> numpy.ndarray:
        return linalg.partial_trace(self.matrix, self.dim_a, self.dim_b, keep)

    def conjugated(self, unitary: numpy.ndarray) -> DensityMatrix:
        """
        ``U ρ U†`` with the same bipartition.
        """
        return DensityMatrix(unitary @ self.matrix @ unitary.conj().T, self.dim_a, self.dim_b)

    def __repr__(self) -> str:
        return repr_attributes(self, repr_array(self.matrix), dim_a=self.dim_a, dim_b=self.dim_b)


@dataclasses.dataclass(frozen=True)
class StateDiagnostics:
    """
    The outcome of :func:`validate_state`. The report is informational; nothing is raised by the validator itself.
    """

    hermiticity_defect: float
    trace_defect: float
    min_eigenvalue: float
    tolerance: float
    slack: float

    @property
    def passed(self) -> bool:
        return self.hermiticity_defect <= self.tolerance and \
            self.trace_defect <= self.tolerance and \
            self.min_eigenvalue >= -self.slack


def validate_state(rho: typing.Union[DensityMatrix, numpy.ndarray],
                   tolerance: float = linalg.HERMITICITY_TOLERANCE,
                   slack: float = linalg.PSD_SLACK) -> StateDiagnostics:
    """
    Measures how far a matrix is from being a density matrix.
    The minimum eigenvalue is computed on the Hermitian part, so non-Hermitian input is reported rather than rejected.

    >>> validate_state(numpy.eye(16) / 16).passed
    True
    >>> d = validate_state(numpy.eye(4) * 0.9 / 4)
    >>> d.passed, round(d.trace_defect, 12)
    (False, 0.1)
    """
    m = rho.matrix if isinstance(rho, DensityMatrix) else numpy.asarray(rho, dtype=complex)
    herm = (m + m.conj().T) / 2
    out = StateDiagnostics(
        hermiticity_defect=linalg.hermiticity_defect(m),
        trace_defect=float(abs(numpy.trace(m) - 1)),
        min_eigenvalue=float(linalg.eigvalsh(herm)[0]),
        tolerance=tolerance,
        slack=slack,
    )
    if not out.passed:
        _logger.debug('State validation failed: %s', out)
    return out


def _unittest_validate_state() -> None:
    from pytest import raises

    assert validate_state(numpy.eye(16) / 16).passed

    d = validate_state(numpy.diag([0.9, 0.0]))
    assert not d.passed
    assert abs(d.trace_defect - 0.1) < 1e-12

    d = validate_state(numpy.diag([1.2, -0.2]))
    assert not d.passed
    assert abs(d.min_eigenvalue + 0.2) < 1e-12

    d = validate_state(numpy.array([[0.5, 0.1], [0.0, 0.5]]))
    assert not d.passed
    assert abs(d.hermiticity_defect - 0.1) < 1e-12

    with raises(InvalidStateError):
        DensityMatrix.checked(numpy.diag([1.2, -0.2]), 2, 1)

    with raises(linalg.DimensionMismatchError):
        DensityMatrix(numpy.eye(4) / 4, 2, 3)

    rho = DensityMatrix.checked(numpy.eye(4) / 4, 2, 2)
    assert rho.dim == 4 and rho.local_dimension == 2
    assert not rho.matrix.flags.writeable
    assert numpy.allclose(rho.marginal(linalg.Subsystem.A), numpy.eye(2) / 2)
