#
# Copyright (c) 2026 Bewit Development Team
# This software is distributed under the terms of the MIT License.
#

import numpy
import pytest
import hypothesis
import hypothesis.strategies as st
import bewit
from bewit.states import StateID, catalog, BLOCH_SPECS
from .._random import random_density_matrix


def _unittest_table_states_are_valid() -> None:
    for sid in bewit.states.CATALOG_STATES:
        rho = catalog(sid)
        slack = bewit.states.LOOSE_PSD_SLACK if sid == StateID.SENTIS else bewit.linalg.PSD_SLACK
        diag = bewit.states.validate_state(rho, slack=slack)
        assert diag.passed, sid
        assert diag.hermiticity_defect < 1e-12
        assert diag.trace_defect < 1e-12


def _unittest_bell_mixture_matches_table() -> None:
    assert numpy.allclose(bewit.states.bpd_from_bell_mixture().matrix, catalog(StateID.BPD).matrix, rtol=0, atol=1e-12)


def _unittest_werner_family_matches_table() -> None:
    assert numpy.allclose(bewit.states.werner(1.0).matrix, catalog(StateID.WERNER_AS).matrix, atol=1e-12)
    assert numpy.allclose(bewit.states.werner(bewit.states.WERNER_LOC_P).matrix,
                          catalog(StateID.WERNER_LOC).matrix,
                          atol=1e-12)
    assert numpy.allclose(bewit.states.max_entangled(4).matrix, catalog(StateID.ME).matrix, atol=1e-12)


def _unittest_werner_is_unitarily_invariant(rng: numpy.random.Generator) -> None:
    from .._random import random_unitary
    rho = bewit.states.werner(0.7, 3)
    u = random_unitary(rng, 3)
    assert numpy.allclose(rho.conjugated(numpy.kron(u, u)).matrix, rho.matrix, atol=1e-12)


def _unittest_asym_noise_breaks_bloch_form() -> None:
    ops = bewit.basis.product_operators()
    for v in (0.0, 0.6):
        rho = bewit.states.rho_asym(v)
        t = numpy.einsum('kij,lmn,jnim->kl', ops, ops, rho.matrix.reshape(4, 4, 4, 4)).real
        off = t - numpy.diag(numpy.diagonal(t))
        assert numpy.max(numpy.abs(off)) > 0.01
    rho = bewit.states.rho_asym(1.0)
    assert numpy.allclose(rho.matrix, catalog(StateID.BPD).matrix)


def _unittest_rho_3x3_is_a_state() -> None:
    rho = catalog(StateID.RHO_3X3)
    assert bewit.states.validate_state(rho).passed
    w = bewit.linalg.eigvalsh(rho.matrix)
    assert w[0] > -1e-12


def _unittest_channels(rng: numpy.random.Generator) -> None:
    rho = random_density_matrix(rng)
    assert numpy.allclose(bewit.states.embed(rho, 4).matrix, rho.matrix)

    big = random_density_matrix(rng, 6, 6)
    out = bewit.states.reprepare_channel(big, bewit.states.basis_state(0), numpy.eye(4) / 4)
    assert out.dim == 16
    assert numpy.trace(out.matrix) == pytest.approx(1)
    assert bewit.states.validate_state(out).passed

    # Nothing leaks outside the message subspace for states that live inside it.
    same = bewit.states.reprepare_channel(bewit.states.embed(rho, 6), bewit.states.basis_state(1), numpy.eye(4) / 4)
    assert numpy.allclose(same.matrix, rho.matrix)

    with pytest.raises(bewit.states.InvalidStateError):
        bewit.states.reprepare_channel(big, numpy.eye(4), numpy.eye(4) / 4)
    with pytest.raises(bewit.linalg.DimensionMismatchError):
        bewit.states.reprepare_channel(random_density_matrix(rng, 3, 3), numpy.eye(4) / 4, numpy.eye(4) / 4)
    with pytest.raises(bewit.linalg.DimensionMismatchError):
        bewit.states.embed(big, 4)


def _unittest_bloch_spec_validation() -> None:
    with pytest.raises(bewit.states.InvalidStateError):
        bewit.states.BlochDiagonalSpec((0.25,) * 15)
    with pytest.raises(bewit.states.InvalidStateError):
        bewit.states.BlochDiagonalSpec((0.3,) + (0.0,) * 15)
    with pytest.raises(bewit.states.InvalidStateError):
        bewit.states.from_bloch_diagonal(bewit.states.BlochDiagonalSpec((0.25,) + (0.2,) * 15))
    sentis = BLOCH_SPECS[StateID.SENTIS]
    assert bewit.states.from_bloch_diagonal(sentis, slack=bewit.states.LOOSE_PSD_SLACK).dim == 16


@hypothesis.settings(max_examples=30, deadline=None)
@hypothesis.given(v=st.floats(min_value=0.0, max_value=1.0),
                  dim=st.integers(min_value=4, max_value=8),
                  seed=st.integers(0, 2 ** 32 - 1))
def _unittest_reprepared_noisy_state(v: float, dim: int, seed: int) -> None:
    rng = numpy.random.default_rng(seed)
    rho = random_density_matrix(rng).matrix
    rho_a = random_density_matrix(rng, 4, 1).matrix
    rho_b = random_density_matrix(rng, 4, 1).matrix
    noisy = bewit.states.isotropic_mix(bewit.states.DensityMatrix(rho, 4, 4), v, dim)

    out = bewit.states.reprepare_channel(noisy, rho_a, rho_b).matrix
    expected = v * rho + (1 - v) * numpy.eye(16) / dim ** 2 + (1 - v) * (1 - 16 / dim ** 2) * numpy.kron(rho_a, rho_b)
    assert numpy.allclose(out, expected, rtol=0, atol=1e-12)

    # Maximally mixed re-preparation: the result does not depend on the dimension.
    out = bewit.states.reprepare_channel(noisy, numpy.eye(4) / 4, numpy.eye(4) / 4).matrix
    assert numpy.allclose(out, v * rho + (1 - v) * numpy.eye(16) / 16, rtol=0, atol=1e-12)
