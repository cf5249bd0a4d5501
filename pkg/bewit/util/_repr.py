#
# Copyright (c) 2026 Bewit Development Team
# This software is distributed under the terms of the MIT License.
#

import numpy


def repr_attributes(obj: object, *anonymous_elements: object, **named_elements: object) -> str:
    """
    A simple helper function that constructs a :func:`repr` form of an object. Used widely across the library.

    >>> class Aa: pass
    >>> assert repr_attributes(Aa()) == 'Aa()'
    >>> assert repr_attributes(Aa(), 16) == 'Aa(16)'
    >>> assert repr_attributes(Aa(), dim_a=4) == 'Aa(dim_a=4)'
    >>> assert repr_attributes(Aa(), 4, dim_a=4, label='BPD') == "Aa(4, dim_a=4, label='BPD')"
    """
    fld = list(map(repr, anonymous_elements)) + list(f'{name}={value!r}' for name, value in named_elements.items())
    return f'{type(obj).__name__}(' + ', '.join(fld) + ')'


def repr_array(a: numpy.ndarray) -> str:
    """
    Compact single-line summary of a large array: shape, dtype, and a few leading entries.
    Density matrices and witness tensors are far too large to be dumped into a log line verbatim.

    >>> repr_array(numpy.eye(2))
    'array(shape=(2, 2), dtype=float64, head=[1.0, 0.0, 0.0, 1.0])'
    >>> repr_array(numpy.arange(10))
    'array(shape=(10,), dtype=int64, head=[0, 1, 2, 3, 4, 5, ...])'
    """
    flat = numpy.ravel(a)
    limit = 6
    head = ', '.join(repr(x.item()) for x in flat[:limit])
    if flat.size > limit:
        head += ', ...'
    return f'array(shape={a.shape}, dtype={a.dtype}, head=[{head}])'
