#
# Copyright (c) 2026 Bewit Development Team
# This software is distributed under the terms of the MIT License.
#

from __future__ import annotations
import numpy
from .. import linalg
from .. import states


def min_pt_eigenvalue(rho: states.DensityMatrix) -> float:
    """
    The smallest eigenvalue of the partial transpose (with respect to B).
    """
    return float(linalg.eigvalsh(linalg.partial_transpose(rho.matrix, rho.dim_a, rho.dim_b))[0])


def negativity(rho: states.DensityMatrix, tolerance: float = linalg.PSD_SLACK) -> float:
    """
    ``(‖ρ^Γ‖₁ - 1) / 2``: the total magnitude of the negative eigenvalues of the partial transpose.
    Exactly zero if :func:`is_ppt` holds with the same tolerance.
    """
    eig = linalg.eigvalsh(linalg.partial_transpose(rho.matrix, rho.dim_a, rho.dim_b))
    if eig[0] >= -tolerance:
        return 0.0
    return float(-numpy.sum(eig[eig < 0]))


def is_ppt(rho: states.DensityMatrix, tolerance: float = linalg.PSD_SLACK) -> bool:
    """
    True if the partial transpose has no eigenvalue below ``-tolerance``.
    """
    return min_pt_eigenvalue(rho) >= -tolerance


def _unittest_ppt() -> None:
    from pytest import approx
    me = states.max_entangled(4)
    assert min_pt_eigenvalue(me) == approx(-0.25)
    assert negativity(me) == approx(1.5)
    assert not is_ppt(me)

    product = states.DensityMatrix(numpy.kron(numpy.diag([0.5, 0.5, 0, 0]), numpy.diag([1, 0, 0, 0])), 4, 4)
    assert is_ppt(product)
    assert negativity(product) == 0.0
