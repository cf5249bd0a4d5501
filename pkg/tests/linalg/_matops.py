#
# Copyright (c) 2026 Bewit Development Team
# This software is distributed under the terms of the MIT License.
#

import typing
import numpy
import pytest
import hypothesis
import hypothesis.strategies as st
import bewit
from bewit.linalg import kron, hermitian_eig, trace_norm, partial_transpose, partial_trace, Subsystem
from .._random import random_density_matrix, random_hermitian, random_unitary


def _unittest_hermitian_eig_random(rng: numpy.random.Generator) -> None:
    for dim in (2, 4, 16):
        m = random_hermitian(rng, dim)
        w, v = hermitian_eig(m)
        assert numpy.all(numpy.diff(w) >= 0)
        assert numpy.allclose(m @ v, v * w[None, :], atol=1e-10)
        assert bewit.linalg.is_unitary(v)

    with pytest.raises(bewit.linalg.NotHermitianError):
        hermitian_eig(numpy.array([[0, 1], [0, 0]], dtype=complex))


def _unittest_antisymmetric_projector_spectrum() -> None:
    swap = numpy.zeros((16, 16))
    for i in range(4):
        for j in range(4):
            swap[j * 4 + i, i * 4 + j] = 1
    p_as = (numpy.eye(16) - swap) / 2
    w, _ = hermitian_eig(p_as / 6)
    assert numpy.allclose(w[:10], 0, atol=1e-12)
    assert numpy.allclose(w[10:], 1 / 6, atol=1e-12)


def _unittest_partial_transpose(rng: numpy.random.Generator) -> None:
    for dims in ((4, 4), (2, 3), (3, 5)):
        rho = random_density_matrix(rng, *dims).matrix
        pt = partial_transpose(rho, *dims)
        assert numpy.allclose(partial_transpose(pt, *dims), rho)
        assert numpy.trace(pt) == pytest.approx(1)
        assert numpy.allclose(partial_trace(pt, *dims, Subsystem.A), partial_trace(rho, *dims, Subsystem.A))

    # Product states are invariant up to the transpose of the B factor.
    a = random_density_matrix(rng, 4, 1).matrix
    b = random_density_matrix(rng, 4, 1).matrix
    assert numpy.allclose(partial_transpose(kron(a, b), 4, 4), kron(a, b.T))

    with pytest.raises(bewit.linalg.DimensionMismatchError):
        partial_transpose(numpy.eye(16), 3, 5)


def _unittest_trace_norm(rng: numpy.random.Generator) -> None:
    for _ in range(10):
        m = rng.standard_normal((6, 6))
        assert trace_norm(m) == pytest.approx(float(numpy.linalg.svd(m, compute_uv=False).sum()))
    u = random_unitary(rng, 4)
    assert trace_norm(u) == pytest.approx(4)
    assert trace_norm(numpy.zeros((3, 3))) == 0


def _unittest_partial_trace_product(rng: numpy.random.Generator) -> None:
    a = random_density_matrix(rng, 3, 1).matrix
    b = random_density_matrix(rng, 5, 1).matrix
    assert numpy.allclose(partial_trace(kron(a, b), 3, 5, Subsystem.A), a)
    assert numpy.allclose(partial_trace(kron(a, b), 3, 5, Subsystem.B), b)


@hypothesis.settings(max_examples=40, deadline=None)
@hypothesis.given(shapes=st.lists(st.tuples(st.integers(1, 4), st.integers(1, 4)), min_size=3, max_size=3),
                  seed=st.integers(0, 2 ** 32 - 1))
def _unittest_kron_is_associative(shapes: typing.List[typing.Tuple[int, int]], seed: int) -> None:
    rng = numpy.random.default_rng(seed)
    a, b, c = (rng.standard_normal(s) + 1j * rng.standard_normal(s) for s in shapes)
    left = kron(kron(a, b), c)
    assert numpy.allclose(left, kron(a, kron(b, c)), rtol=0, atol=1e-12)
    assert numpy.allclose(left, kron(a, b, c), rtol=0, atol=1e-12)


def _unittest_trace_norm_is_unitarily_invariant(rng: numpy.random.Generator) -> None:
    for dim in (2, 3, 4, 9, 16):
        m = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
        u, w = random_unitary(rng, dim), random_unitary(rng, dim)
        assert trace_norm(u @ m @ w) == pytest.approx(trace_norm(m), abs=1e-9)
        assert trace_norm(u @ m) == pytest.approx(trace_norm(m), abs=1e-9)
