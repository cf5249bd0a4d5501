#
# Copyright (c) 2026 Bewit Development Team
# This software is distributed under the terms of the MIT License.
#

from __future__ import annotations
import typing
import functools
import numpy
from ._error import InvalidDimensionError


def hermitian_basis(dim: int) -> typing.List[numpy.ndarray]:
    """
    Orthonormal basis of Hermitian operators in dimension ``dim`` with respect to ``Tr(G_k G_l) = δ_kl``.

    The ordering is deterministic: ``I/√dim`` first, then the symmetric off-diagonal generators,
    then the antisymmetric ones (both in lexicographic order of the index pair ``j < k``),
    then the diagonal generators of growing support.
    For ``dim = 2`` this yields the Pauli matrices divided by √2.

    >>> len(hermitian_basis(4))
    16
    >>> g = hermitian_basis(2)
    >>> bool(numpy.allclose(g[2] * numpy.sqrt(2), [[0, -1j], [1j, 0]]))
    True
    """
    return list(_hermitian_basis_array(dim))


@functools.lru_cache(None)
def _hermitian_basis_array(dim: int) -> numpy.ndarray:
    if not isinstance(dim, (int, numpy.integer)) or dim < 2:
        raise InvalidDimensionError(f'An operator basis needs dimension at least 2, got {dim!r}')
    out: typing.List[numpy.ndarray] = [numpy.eye(dim, dtype=complex) / numpy.sqrt(dim)]
    pairs = [(j, k) for j in range(dim) for k in range(j + 1, dim)]
    for j, k in pairs:
        m = numpy.zeros((dim, dim), dtype=complex)
        m[j, k] = m[k, j] = 1 / numpy.sqrt(2)
        out.append(m)
    for j, k in pairs:
        m = numpy.zeros((dim, dim), dtype=complex)
        m[j, k] = -1j / numpy.sqrt(2)
        m[k, j] = 1j / numpy.sqrt(2)
        out.append(m)
    for ell in range(1, dim):
        diag = numpy.zeros(dim)
        diag[:ell] = 1
        diag[ell] = -ell
        out.append(numpy.diag(diag / numpy.sqrt(ell * (ell + 1))).astype(complex))
    arr = numpy.stack(out)
    arr.setflags(write=False)
    return arr


def hermitian_basis_array(dim: int) -> numpy.ndarray:
    """
    Same as :func:`hermitian_basis` but returns a read-only array of shape (dim², dim, dim).
    """
    return _hermitian_basis_array(dim)


def _unittest_hermitian_basis() -> None:
    from pytest import raises
    from ._pauli import pauli

    g2 = hermitian_basis(2)
    for i in range(4):
        assert numpy.allclose(g2[i], pauli(i) / numpy.sqrt(2))

    for dim in (3, 4, 5):
        g = hermitian_basis_array(dim)
        assert g.shape == (dim * dim, dim, dim)
        gram = numpy.einsum('kij,lji->kl', g, g)
        assert numpy.allclose(gram, numpy.eye(dim * dim), atol=1e-12)
        for m in g:
            assert numpy.allclose(m, m.conj().T)

    with raises(InvalidDimensionError):
        hermitian_basis(1)
