#
# Copyright (c) 2026 Bewit Development Team
# This software is distributed under the terms of the MIT License.
#

import math
import numpy
import pytest
import hypothesis
import hypothesis.strategies as st
import bewit
from bewit.states import StateID, catalog
from bewit.criteria import ccnr, trace_criterion, qfi, local_hamiltonian, METROLOGY_HAMILTONIANS
from .._random import random_density_matrix, random_pure_state, random_unitary, random_permutation
from .._random import random_bloch_diagonal_state, random_product_state


def _unittest_trace_criterion_never_exceeds_ccnr(rng: numpy.random.Generator) -> None:
    for i in range(1000):
        rho = random_density_matrix(rng, rank=int(rng.integers(1, 17)))
        permutation = random_permutation(rng) if i % 2 else None
        assert trace_criterion(rho, permutation) <= ccnr(rho) + 1e-9


def _unittest_ccnr_equals_trace_criterion_on_bloch_diagonal_states(rng: numpy.random.Generator) -> None:
    for _ in range(50):
        rho = random_bloch_diagonal_state(rng)
        assert trace_criterion(rho) == pytest.approx(ccnr(rho), abs=1e-9)
    for sid in bewit.states.CATALOG_STATES:
        spec = bewit.states.BLOCH_SPECS[sid]
        rho = catalog(sid)
        assert numpy.allclose(bewit.criteria.diagonal_correlations(rho, spec.permutation), spec.lambdas, atol=1e-12)
        assert trace_criterion(rho, spec.permutation) == pytest.approx(ccnr(rho), abs=1e-9)


def _unittest_ccnr_is_local_unitary_invariant(rng: numpy.random.Generator) -> None:
    for _ in range(20):
        rho = random_density_matrix(rng)
        u = numpy.kron(random_unitary(rng), random_unitary(rng))
        assert ccnr(rho.conjugated(u)) == pytest.approx(ccnr(rho), abs=1e-9)


def _unittest_ccnr_bounds(rng: numpy.random.Generator) -> None:
    for _ in range(50):
        assert ccnr(random_product_state(rng)) <= 1 + 1e-9
    for _ in range(20):
        assert ccnr(random_pure_state(rng)) <= 4 + 1e-9
    assert ccnr(bewit.states.max_entangled(4)) == pytest.approx(4)
    assert ccnr(bewit.states.DensityMatrix(numpy.eye(16) / 16, 4, 4)) == pytest.approx(0.25)


def _unittest_negativity_and_ppt_agree() -> None:
    for sid in StateID:
        rho = catalog(sid)
        assert (bewit.criteria.negativity(rho) == 0) == bewit.criteria.is_ppt(rho), sid


def _unittest_bound_entangled_states_are_ppt() -> None:
    for sid in (StateID.R6, StateID.R8, StateID.BPD, StateID.RHO_3X3):
        assert bewit.criteria.is_ppt(catalog(sid)), sid
        assert ccnr(catalog(sid)) > 1, sid
    assert bewit.criteria.is_ppt(catalog(StateID.SENTIS), bewit.states.LOOSE_PSD_SLACK)


def _unittest_qfi_is_convex(rng: numpy.random.Generator) -> None:
    h = local_hamiltonian(METROLOGY_HAMILTONIANS['I⊗Z'])
    for _ in range(20):
        a, b = random_density_matrix(rng), random_pure_state(rng)
        p = float(rng.random())
        mixed = bewit.states.DensityMatrix(p * a.matrix + (1 - p) * b.matrix, 4, 4)
        assert qfi(mixed, h) <= p * qfi(a, h) + (1 - p) * qfi(b, h) + 1e-8


def _unittest_qfi_of_pure_states_is_four_variances(rng: numpy.random.Generator) -> None:
    for name, single in METROLOGY_HAMILTONIANS.items():
        h = local_hamiltonian(single)
        for _ in range(10):
            rho = random_pure_state(rng).matrix
            variance = numpy.trace(rho @ h @ h).real - numpy.trace(rho @ h).real ** 2
            assert qfi(bewit.states.DensityMatrix(rho, 4, 4), h) == pytest.approx(4 * variance, abs=1e-8), name


def _unittest_qfi_of_product_states_is_bounded(rng: numpy.random.Generator) -> None:
    for _ in range(50):
        assert bewit.criteria.max_qfi(random_product_state(rng)).value <= bewit.criteria.SEPARABLE_QFI_LIMIT + 1e-8


def _unittest_qfi_errors() -> None:
    rho = catalog(StateID.BPD)
    with pytest.raises(bewit.linalg.DimensionMismatchError):
        qfi(rho, numpy.eye(4))
    with pytest.raises(bewit.linalg.NotHermitianError):
        qfi(rho, numpy.triu(numpy.ones((16, 16))))


def _unittest_isotropic_ccnr_identity() -> None:
    for sid in (StateID.BPD, StateID.ME, StateID.R6):
        rho = catalog(sid)
        c = ccnr(rho)
        for dim in (4, 5, 6):
            for v in numpy.linspace(0, 1, 6):
                mixed = bewit.states.isotropic_mix(rho, float(v), dim)
                assert ccnr(mixed) == pytest.approx(v * c + (1 - v) / dim, abs=1e-9), (sid, dim, v)


def _unittest_reprepared_isotropic_noise() -> None:
    bpd = catalog(StateID.BPD)
    mixed_4 = numpy.eye(4) / 4
    for dim in (4, 5, 6):
        for v in (0.0, 0.3, 0.6, 0.9):
            out = bewit.states.reprepare_channel(bewit.states.isotropic_mix(bpd, v, dim), mixed_4, mixed_4)
            expected = bewit.criteria.reprepared_isotropic_ccnr(v, bewit.criteria.BPD_CCNR)
            assert ccnr(out) == pytest.approx(expected, abs=1e-9)
            assert expected == pytest.approx(v * 1.5 + (1 - v) / 4)


def _unittest_highdim_formula_matches_direct_computation() -> None:
    grid = [float(v) for v in numpy.linspace(0, 1, 21)]
    rows = bewit.criteria.highdim_rows(grid, [4, 5, 6])
    assert len(rows) == 63
    for r in rows:
        assert r.trace_criterion_direct is not None and r.ccnr_direct is not None
        assert abs(r.trace_criterion_direct - r.trace_criterion_formula) <= 1e-8, (r.v, r.dim)
        assert abs(r.ccnr_direct - r.ccnr_formula) <= 1e-8, (r.v, r.dim)


def _unittest_highdim_infinite_limit() -> None:
    s = bewit.criteria.highdim_trace_criterion
    assert s(0.0, math.inf) == pytest.approx(1.0)
    assert s(0.7, math.inf) == pytest.approx(1 + 0.7 / 3)
    assert s(0.9, math.inf) == pytest.approx(1.4)
    assert s(1.0, math.inf) == pytest.approx(1.5)
    # The CCNR value of the noisy state itself crosses one only at v = 2/3 in the limit.
    assert bewit.criteria.highdim_ccnr(2 / 3, math.inf) == pytest.approx(1.0)
    assert s(0.5, 10 ** 6) == pytest.approx(s(0.5, math.inf), abs=1e-6)
    with pytest.raises(bewit.states.DomainError):
        s(0.5, 3)
    with pytest.raises(bewit.states.DomainError):
        s(1.5, 4)


def _unittest_rho_3x3_values() -> None:
    rho = catalog(StateID.RHO_3X3)
    assert trace_criterion(rho) == pytest.approx(2.5 - math.sqrt(2), abs=1e-9)
    assert ccnr(rho) == pytest.approx(1.1163, abs=5e-4)
    assert ccnr(rho) > trace_criterion(rho)


def _unittest_asym_values() -> None:
    for v in numpy.linspace(0, 1, 11):
        rho = bewit.states.rho_asym(float(v))
        assert trace_criterion(rho) == pytest.approx(bewit.criteria.asym_trace_criterion(float(v)), abs=1e-9)
        assert ccnr(rho) == pytest.approx(bewit.criteria.asym_ccnr(float(v)), abs=1e-9)
    assert bewit.criteria.asym_ccnr(0.6) == pytest.approx(0.7 + math.sqrt(3) / 5, abs=1e-12)
    assert bewit.criteria.asym_trace_criterion(0.6) == pytest.approx(1.0)


@hypothesis.settings(max_examples=30, deadline=None)
@hypothesis.given(v=st.floats(min_value=0.0, max_value=1.0), dim=st.integers(min_value=4, max_value=64))
def _unittest_highdim_formulas_are_monotone_in_visibility(v: float, dim: int) -> None:
    eps = 1e-3
    lo, hi = max(0.0, v - eps), min(1.0, v + eps)
    s = bewit.criteria.highdim_trace_criterion
    assert s(lo, dim) <= s(hi, dim) + 1e-12
    assert bewit.criteria.highdim_ccnr(lo, dim) <= bewit.criteria.highdim_ccnr(hi, dim) + 1e-12
    assert s(v, dim) <= s(v, math.inf) + 1e-12


def _unittest_correlation_tensor_reconstructs_the_state(rng: numpy.random.Generator) -> None:
    for sid in bewit.states.StateID:
        rho = catalog(sid)
        pb = bewit.basis.product_basis(bewit.states.BLOCH_SPECS[sid].permutation
                                       if sid in bewit.states.BLOCH_SPECS else None)
        t = bewit.criteria.pauli_correlation_tensor(rho, pb.permutation)
        assert numpy.allclose(t.reconstruct(pb.operators_a, pb.operators_b), rho.matrix, rtol=0, atol=1e-10), sid
    for dim_a, dim_b in ((4, 4), (3, 5), (6, 6)):
        rho = random_density_matrix(rng, dim_a, dim_b)
        g_a = bewit.basis.hermitian_basis_array(dim_a)
        g_b = bewit.basis.hermitian_basis_array(dim_b)
        t = bewit.criteria.correlation_tensor(rho)
        assert t.entries.shape == (dim_a ** 2, dim_b ** 2)
        assert numpy.allclose(t.reconstruct(g_a, g_b), rho.matrix, rtol=0, atol=1e-10)


def _unittest_rho_3x3_correlation_entries() -> None:
    t = bewit.criteria.pauli_correlation_tensor(bewit.states.rho_3x3()).entries
    expected = bewit.states.rho_3x3_correlations()
    assert numpy.allclose(t, expected, rtol=0, atol=1e-12)
    assert numpy.allclose(t, t.T, rtol=0, atol=1e-12)
    for (k, ell), value in bewit.states.RHO_3X3_OFF_DIAGONAL.items():
        assert t[k - 1, ell - 1] == pytest.approx(value, abs=1e-12)
    upper = numpy.triu(numpy.abs(t) > 1e-12, k=1)
    nonzero = {(int(k) + 1, int(ell) + 1) for k, ell in zip(*numpy.nonzero(upper))}
    assert nonzero == set(bewit.states.RHO_3X3_OFF_DIAGONAL)
    assert numpy.allclose(numpy.diagonal(t), bewit.states.RHO_3X3_DIAGONAL, rtol=0, atol=1e-12)
