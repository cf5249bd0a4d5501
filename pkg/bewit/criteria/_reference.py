#
# Copyright (c) 2026 Bewit Development Team
# This software is distributed under the terms of the MIT License.
#

"""
Published thresholds that require machinery outside of this library
(local hidden variable models, symmetric extensions, positive maps beyond the partial transpose).
They are reported alongside the computed quantities but always tagged as references.
"""

from __future__ import annotations
import enum
import typing
import dataclasses
from .. import states


class Source(enum.Enum):
    """
    Where a reported threshold comes from.
    """
    COMPUTED = 'computed'
    PPT = 'ppt'
    """Bisection on the PPT criterion."""
    CCNR = 'ccnr'
    """The CCNR threshold, which is tight for the state in question."""
    REFERENCE = 'reference'
    """A published constant; not computed."""


@dataclasses.dataclass(frozen=True)
class ReferenceValue:
    value: float
    source: Source
    note: str


V_LOC_REFERENCES: typing.Dict[states.StateID, ReferenceValue] = {
    states.StateID.ME: ReferenceValue(
        1 / 6 + 1 / 9 + 1 / 12, Source.REFERENCE, 'LHV model for the noisy maximally entangled state of two ququarts',
    ),
    states.StateID.WERNER_AS: ReferenceValue(
        3 / 4, Source.REFERENCE, 'LHV model for the antisymmetric Werner state',
    ),
    states.StateID.WERNER_LOC: ReferenceValue(
        1.0, Source.REFERENCE, 'the state itself admits an LHV model at p = 27/34',
    ),
}
"""
Visibility below which the noisy state admits a local hidden variable model.
"""

V_SEP_REFERENCES: typing.Dict[states.StateID, ReferenceValue] = {
    states.StateID.R6: ReferenceValue(0.7446, Source.REFERENCE, 'two-copy PPT symmetric extension'),
    states.StateID.R8: ReferenceValue(0.7446, Source.REFERENCE, 'two-copy PPT symmetric extension'),
    states.StateID.SENTIS: ReferenceValue(0.7814, Source.REFERENCE, 'Breuer-Hall positive map'),
}
"""
Separability thresholds of PPT states that cannot be obtained from the PPT or CCNR criteria.
"""


def reference_values() -> typing.Dict[str, typing.Dict[str, ReferenceValue]]:
    """
    All shipped references keyed by quantity name and then by state label.

    >>> round(reference_values()['v_loc']['ME'].value, 4)
    0.3611
    """
    return {
        'v_loc': {k.label: v for k, v in V_LOC_REFERENCES.items()},
        'v_sep': {k.label: v for k, v in V_SEP_REFERENCES.items()},
    }
