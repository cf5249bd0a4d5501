#
# Copyright (c) 2026 Bewit Development Team
# This software is distributed under the terms of the MIT License.
#

from __future__ import annotations
import typing
import logging
import dataclasses
from .. import states
from ._error import BracketError


DEFAULT_TOLERANCE = 1e-6
DEFAULT_MAX_ITERATIONS = 60

_logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class ThresholdResult:
    """
    The outcome of a bisection: the predicate is false at ``v_star - bracket_width`` and true at
    ``v_star + bracket_width``.
    """
    v_star: float
    bracket_width: float
    iterations: int


def v_threshold(family: typing.Callable[[float], states.DensityMatrix],
                predicate: typing.Callable[[states.DensityMatrix], bool],
                lo: float = 0.0,
                hi: float = 1.0,
                tolerance: float = DEFAULT_TOLERANCE,
                max_iterations: int = DEFAULT_MAX_ITERATIONS) -> ThresholdResult:
    """
    Finds the smallest parameter at which a monotone predicate over a one-parameter family of states
    becomes true, by bisection.

    :raises: :class:`BracketError` unless the predicate is false at ``lo`` and true at ``hi``.
    """
    if not lo < hi:
        raise BracketError(f'Empty interval [{lo}, {hi}]')
    if predicate(family(lo)):
        raise BracketError(f'The predicate already holds at the lower end v={lo}')
    if not predicate(family(hi)):
        raise BracketError(f'The predicate does not hold at the upper end v={hi}')
    iterations = 0
    while hi - lo > tolerance and iterations < max_iterations:
        mid = (lo + hi) / 2
        if predicate(family(mid)):
            hi = mid
        else:
            lo = mid
        iterations += 1
        _logger.debug('Bisection step %d: [%.9f, %.9f]', iterations, lo, hi)
    return ThresholdResult(v_star=(lo + hi) / 2, bracket_width=hi - lo, iterations=iterations)


def v_pm_closed_form(ccnr_value: float) -> float:
    """
    The critical visibility ``3 / (4 CCNR - 1)`` of the prepare-and-measure witness for a Bloch-diagonal state
    mixed with white noise.

    >>> round(v_pm_closed_form(4), 12), round(v_pm_closed_form(1.5), 12)
    (0.2, 0.6)

    :raises: :class:`bewit.states.DomainError` if the CCNR value does not exceed one.
    """
    if not ccnr_value > 1:
        raise states.DomainError(f'No detection threshold exists for CCNR value {ccnr_value} <= 1')
    return min(1.0, 3 / (4 * ccnr_value - 1))


def _unittest_v_threshold() -> None:
    from pytest import raises, approx

    def family(v: float) -> states.DensityMatrix:
        return states.isotropic_mix(states.max_entangled(2), v)

    def predicate(rho: states.DensityMatrix) -> bool:
        return bool(rho.matrix[0, 3].real > 0.3)

    res = v_threshold(family, predicate, tolerance=1e-9)
    assert res.v_star == approx(0.6, abs=1e-8)
    assert res.bracket_width <= 1e-9

    with raises(BracketError):
        v_threshold(family, lambda _: True)
    with raises(BracketError):
        v_threshold(family, lambda _: False)
    with raises(BracketError):
        v_threshold(family, predicate, lo=0.5, hi=0.5)
    with raises(states.DomainError):
        v_pm_closed_form(1.0)
