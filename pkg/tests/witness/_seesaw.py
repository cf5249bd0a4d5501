#
# Copyright (c) 2026 Bewit Development Team
# This software is distributed under the terms of the MIT License.
#

import numpy
import pytest
import simplejson
import bewit
from bewit.witness import SeeSawConfig, run_seesaw, canonical_coefficients, evaluate_witness, SEPARABLE_BOUND
from .._random import random_permutation, random_signs


def _check_summary(w: bewit.witness.WitnessCoefficients, summary: bewit.witness.SeeSawSummary) -> None:
    for outcome in summary.outcomes:
        assert outcome.value <= SEPARABLE_BOUND + 1e-6
        assert len(outcome.history) == 3 * outcome.iterations
        assert all(b >= a - 1e-9 for a, b in zip(outcome.history, outcome.history[1:]))
        assert abs(evaluate_witness(w, outcome.strategy) - outcome.value) <= 1e-12


def _unittest_seesaw_reaches_the_separable_value() -> None:
    # The default configuration: 200 restarts seeded with 42.
    w = canonical_coefficients()
    config = SeeSawConfig()
    assert (config.seed, config.restarts) == (42, 200)
    summary = run_seesaw(w, config)
    _check_summary(w, summary)
    assert summary.best.value == pytest.approx(SEPARABLE_BOUND, abs=1e-6)
    assert max(o.value for o in summary.outcomes) <= SEPARABLE_BOUND + 1e-6
    assert [o.restart_index for o in summary.outcomes] == list(range(200))
    assert summary.converged_fraction > 0
    assert sum(summary.iterations_histogram.values()) == 200


def _unittest_seesaw_any_signs_and_relabeling(rng: numpy.random.Generator) -> None:
    w = bewit.witness.witness_coefficients(random_signs(rng), random_permutation(rng))
    summary = run_seesaw(w, SeeSawConfig(seed=3, restarts=30))
    _check_summary(w, summary)
    assert summary.best.value == pytest.approx(SEPARABLE_BOUND, abs=1e-5)


def _unittest_classical_seesaw() -> None:
    w = canonical_coefficients()
    classical = run_seesaw(w, SeeSawConfig(seed=1, restarts=20), classical=True)
    quantum = run_seesaw(w, SeeSawConfig(seed=1, restarts=20))
    _check_summary(w, classical)
    assert classical.best.value <= quantum.best.value + 1e-6
    for outcome in classical.outcomes:
        diagonal = numpy.einsum('xii->xi', outcome.strategy.prep_a).real
        assert numpy.allclose(numpy.sort(diagonal, axis=1)[:, -1], 1)
        observables = outcome.strategy.observables
        assert numpy.allclose(observables, numpy.einsum('zii,ij->zij', observables, numpy.eye(16)))


def _unittest_seesaw_is_deterministic(monkeypatch: pytest.MonkeyPatch) -> None:
    w = canonical_coefficients()
    a = run_seesaw(w, SeeSawConfig(seed=5, restarts=6, threads=1))
    b = run_seesaw(w, SeeSawConfig(seed=5, restarts=6, threads=3))
    assert a.to_builtin() == b.to_builtin()
    assert [o.history for o in a.outcomes] == [o.history for o in b.outcomes]

    c = run_seesaw(w, SeeSawConfig(seed=6, restarts=6, threads=1))
    assert [o.history for o in a.outcomes] != [o.history for o in c.outcomes]

    monkeypatch.setenv(bewit.witness.THREADS_ENV_VAR, '2')
    assert SeeSawConfig().worker_count == 2
    assert SeeSawConfig(threads=4).worker_count == 4


def _unittest_seesaw_report() -> None:
    summary = run_seesaw(canonical_coefficients(), SeeSawConfig(seed=9, restarts=3, max_iterations=2))
    for outcome in summary.outcomes:
        assert outcome.iterations <= 2
    report = simplejson.loads(bewit.witness.dumps_seesaw_report(summary))
    assert report['seed'] == 9
    assert report['restarts'] == 3
    assert report['best_value'] == summary.best.value
    assert sum(report['iterations_histogram'].values()) == 3


def _unittest_seesaw_config_errors() -> None:
    with pytest.raises(bewit.linalg.BewitError):
        SeeSawConfig(restarts=0)
    with pytest.raises(bewit.linalg.BewitError):
        SeeSawConfig(max_iterations=0)
    with pytest.raises(bewit.linalg.BewitError):
        SeeSawConfig(tolerance=0)
