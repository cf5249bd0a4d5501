#
# Copyright (c) 2026 Bewit Development Team
# This software is distributed under the terms of the MIT License.
#

"""
Closed-form expressions for the noisy and high-dimensional families built around the BPD state.
Each one is cross-checked against direct computation in the test suite.
"""

from __future__ import annotations
import math
from .. import states


BPD_CCNR = 1.5


def highdim_trace_criterion(v: float, dim: float) -> float:
    """
    Trace criterion of the BPD state mixed with ``1 - v`` white noise in ``dim⊗dim``, after the channel that
    keeps the 4x4 block and re-prepares ``|0⟩⟨0| ⊗ |0⟩⟨0|`` otherwise.
    ``dim`` may be :data:`math.inf`; the limit is ``1 + v/3`` below ``v = 3/4`` and ``v + 1/2`` above.

    >>> round(highdim_trace_criterion(1.0, 7), 12)
    1.5
    >>> round(highdim_trace_criterion(0.0, math.inf), 12), round(highdim_trace_criterion(0.7, math.inf), 12)
    (1.0, 1.233333333333)
    """
    _check_visibility(v)
    e = _inverse_square(dim)
    return 2 * v / 3 + 3 / 4 - 8 * (1 - v) * e + abs(v / 3 - 1 / 4 + 4 * (1 - v) * e)


def highdim_ccnr(v: float, dim: float, ccnr_value: float = BPD_CCNR) -> float:
    """
    CCNR value ``v CCNR(ρ) + (1 - v)/dim`` of a Bloch-diagonal 4x4 state mixed with white noise in ``dim⊗dim``.
    """
    _check_visibility(v)
    _inverse_square(dim)
    return v * ccnr_value + (0.0 if math.isinf(dim) else (1 - v) / dim)


def reprepared_isotropic_ccnr(v: float, ccnr_value: float) -> float:
    """
    CCNR value of the channel output when the re-prepared product is maximally mixed; independent of ``dim``.
    """
    _check_visibility(v)
    return v * ccnr_value + (1 - v) / 4


def asym_trace_criterion(v: float) -> float:
    """
    ``S(ρ_asym(v)) = (1 + 5v)/4``; crosses one at ``v = 0.6``.
    """
    _check_visibility(v)
    return (1 + 5 * v) / 4


def asym_ccnr(v: float) -> float:
    """
    ``CCNR(ρ_asym(v)) = 7v/6 + sqrt((1/4 + v/12)² + 3(1 - v)²/16)``.

    >>> abs(asym_ccnr(0.6) - (7 / 10 + math.sqrt(3) / 5)) < 1e-12
    True
    """
    _check_visibility(v)
    return 7 * v / 6 + math.sqrt((1 / 4 + v / 12) ** 2 + 3 * (1 - v) ** 2 / 16)


def _check_visibility(v: float) -> None:
    if not (0 <= v <= 1):
        raise states.DomainError(f'Visibility must be in [0, 1], got {v}')


def _inverse_square(dim: float) -> float:
    if math.isinf(dim) and dim > 0:
        return 0.0
    if dim < 4 or dim != int(dim):
        raise states.DomainError(f'Local dimension must be an integer of at least 4 or infinity, got {dim}')
    return 1 / dim ** 2


def _unittest_closed_forms() -> None:
    from pytest import approx, raises
    for dim in (4, 5, 6, 100, math.inf):
        assert highdim_trace_criterion(1.0, dim) == approx(1.5)
    assert highdim_trace_criterion(0.5, 4) == approx(0.25 + 1.25 * 0.5)
    assert highdim_ccnr(2 / 3, math.inf) == approx(1.0)
    assert asym_trace_criterion(0.6) == approx(1.0)
    assert asym_ccnr(1.0) == approx(1.5)
    assert reprepared_isotropic_ccnr(0.6, 1.5) == approx(1.0)
    with raises(states.DomainError):
        highdim_trace_criterion(0.5, 3)
    with raises(states.DomainError):
        highdim_ccnr(1.2, 5)
