#
# Copyright (c) 2026 Bewit Development Team
# This software is distributed under the terms of the MIT License.
#

"""
Alternating maximization of the witness over strategies without shared entanglement.

Each restart starts from random pure preparations and cycles through three closed-form updates:
the optimal observables for fixed preparations, then the optimal preparations of Alice for fixed observables
and Bob's preparations, then the same for Bob. None of the updates can decrease the objective.
Restarts are independent; they are seeded by ``(seed, restart_index)`` and run on a thread pool.
"""

from __future__ import annotations
import os
import typing
import logging
import collections
import dataclasses
import numpy
import joblib
from .. import linalg
from .. import basis
from .. import states
from ..util import repr_attributes
from ._coefficients import WitnessCoefficients, canonical_coefficients
from ._strategy import PMStrategy, observable_field, optimal_observables, _strategy_value


THREADS_ENV_VAR = 'BEWIT_THREADS'

_N = basis.OPERATOR_COUNT
_D = states.MESSAGE_DIMENSION

_logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class SeeSawConfig:
    seed: int = 42
    restarts: int = 200
    max_iterations: int = 500
    tolerance: float = 1e-10
    """
    The iteration stops once the improvement over a full cycle is below ``tolerance * max(1, |value|)``.
    """
    threads: typing.Optional[int] = None
    """
    Worker pool size; if not set, taken from the environment variable ``BEWIT_THREADS`` or the CPU count.
    """

    def __post_init__(self) -> None:
        if self.restarts < 1:
            raise linalg.BewitError(f'At least one restart is required, got {self.restarts}')
        if self.max_iterations < 1:
            raise linalg.BewitError(f'At least one iteration is required, got {self.max_iterations}')
        if not self.tolerance > 0:
            raise linalg.BewitError(f'The tolerance must be positive, got {self.tolerance}')

    @property
    def worker_count(self) -> int:
        if self.threads is not None:
            return max(1, int(self.threads))
        env = os.environ.get(THREADS_ENV_VAR)
        if env:
            return max(1, int(env))
        return os.cpu_count() or 1


@dataclasses.dataclass(frozen=True)
class SeeSawOutcome:
    value: float
    strategy: PMStrategy
    iterations: int
    converged: bool
    seed: int
    restart_index: int
    history: typing.Tuple[float, ...]
    """
    The objective after each update: three entries per iteration.
    """

    def __repr__(self) -> str:
        return repr_attributes(self, value=self.value, iterations=self.iterations, converged=self.converged,
                               seed=self.seed, restart_index=self.restart_index)


@dataclasses.dataclass(frozen=True)
class SeeSawSummary:
    """
    All restarts of one run in index order. The best one is the highest value; ties go to the lower index,
    so the result does not depend on the order in which the workers finish.
    """
    outcomes: typing.Tuple[SeeSawOutcome, ...]

    @property
    def best(self) -> SeeSawOutcome:
        return max(self.outcomes, key=lambda o: (o.value, -o.restart_index))

    @property
    def seed(self) -> int:
        return self.outcomes[0].seed

    @property
    def converged_fraction(self) -> float:
        return sum(1 for o in self.outcomes if o.converged) / len(self.outcomes)

    @property
    def iterations_histogram(self) -> typing.Dict[int, int]:
        return dict(sorted(collections.Counter(o.iterations for o in self.outcomes).items()))

    def to_builtin(self) -> typing.Dict[str, typing.Any]:
        return {
            'seed': self.seed,
            'restarts': len(self.outcomes),
            'best_value': self.best.value,
            'converged_fraction': self.converged_fraction,
            'iterations_histogram': {str(k): v for k, v in self.iterations_histogram.items()},
        }


def run_seesaw(w: typing.Optional[WitnessCoefficients] = None,
               config: typing.Optional[SeeSawConfig] = None,
               classical: bool = False) -> SeeSawSummary:
    """
    Runs all restarts and collects their outcomes. The canonical witness and the default configuration
    are used unless specified. ``classical`` restricts the preparations to computational basis states
    and the observables to diagonal sign matrices.
    """
    w = w if w is not None else canonical_coefficients()
    config = config if config is not None else SeeSawConfig()
    _logger.info('Starting %s see-saw: %r', 'classical' if classical else 'quantum', config)
    jobs = (joblib.delayed(_run_restart)(w, config, index, classical) for index in range(config.restarts))
    outcomes = joblib.Parallel(n_jobs=config.worker_count, prefer='threads')(jobs)
    out = SeeSawSummary(tuple(outcomes))
    _logger.info('See-saw done: best %.9f at restart %d; %.0f%% converged',
                 out.best.value, out.best.restart_index, out.converged_fraction * 100)
    return out


def seesaw_separable(w: WitnessCoefficients,
                     seed: int = 42,
                     restarts: int = 200,
                     max_iterations: int = 500,
                     tolerance: float = 1e-10) -> SeeSawOutcome:
    """
    The best strategy with quantum messages and no shared entanglement found over the restarts.
    """
    return run_seesaw(w, SeeSawConfig(seed, restarts, max_iterations, tolerance)).best


def seesaw_classical(w: WitnessCoefficients,
                     seed: int = 42,
                     restarts: int = 200,
                     max_iterations: int = 500,
                     tolerance: float = 1e-10) -> SeeSawOutcome:
    """
    Same as :func:`seesaw_separable` with classical messages.
    """
    return run_seesaw(w, SeeSawConfig(seed, restarts, max_iterations, tolerance), classical=True).best


def _run_restart(w: WitnessCoefficients, config: SeeSawConfig, index: int, classical: bool) -> SeeSawOutcome:
    rng = numpy.random.default_rng([config.seed, index])
    if classical:
        prep_a = _basis_projectors(rng.integers(0, _D, size=_N))
        prep_b = _basis_projectors(rng.integers(0, _D, size=_N))
    else:
        prep_a = _random_pure_states(rng)
        prep_b = _random_pure_states(rng)

    history: typing.List[float] = []
    previous: typing.Optional[float] = None
    converged = False
    iteration = 0
    observables = numpy.zeros((_N, _D * _D, _D * _D), dtype=complex)
    while iteration < config.max_iterations:
        iteration += 1
        field = observable_field(w, prep_a, prep_b)
        observables = _diagonal_observables(field) if classical else optimal_observables(field)
        history.append(_strategy_value(w, prep_a, prep_b, observables))

        c5 = observables.reshape(_N, _D, _D, _D, _D)
        m = numpy.einsum('yst,zptrs->yzpr', prep_b, c5)
        prep_a = _best_preparations(numpy.einsum('xyz,yzpr->xpr', w.w, m), classical)
        history.append(_strategy_value(w, prep_a, prep_b, observables))

        n = numpy.einsum('xrp,zptrs->xzts', prep_a, c5)
        prep_b = _best_preparations(numpy.einsum('xyz,xzts->yts', w.w, n), classical)
        value = _strategy_value(w, prep_a, prep_b, observables)
        history.append(value)

        if previous is not None and abs(value - previous) < config.tolerance * max(1.0, abs(value)):
            converged = True
            break
        previous = value

    out = SeeSawOutcome(
        value=history[-1],
        strategy=PMStrategy(prep_a, prep_b, observables),
        iterations=iteration,
        converged=converged,
        seed=config.seed,
        restart_index=index,
        history=tuple(history),
    )
    _logger.debug('Restart %d: value %.12f after %d iterations, converged: %s',
                  index, out.value, out.iterations, out.converged)
    return out


def _random_pure_states(rng: numpy.random.Generator) -> numpy.ndarray:
    v = rng.standard_normal((_N, _D)) + 1j * rng.standard_normal((_N, _D))
    v /= numpy.linalg.norm(v, axis=1, keepdims=True)
    return numpy.asarray(numpy.einsum('xi,xj->xij', v, v.conj()))


def _basis_projectors(indices: numpy.ndarray) -> numpy.ndarray:
    out = numpy.zeros((len(indices), _D, _D), dtype=complex)
    out[numpy.arange(len(indices)), indices, indices] = 1
    return out


def _best_preparations(g: numpy.ndarray, classical: bool) -> numpy.ndarray:
    """
    Projectors maximizing ``Tr(ρ G)``: onto the top eigenvector, or onto the largest diagonal entry.
    """
    if classical:
        return _basis_projectors(numpy.argmax(numpy.einsum('xii->xi', g).real, axis=1))
    herm = (g + g.conj().transpose(0, 2, 1)) / 2
    _, vec = numpy.linalg.eigh(herm)
    top = vec[:, :, -1]
    return numpy.asarray(numpy.einsum('xi,xj->xij', top, top.conj()))


def _diagonal_observables(field: numpy.ndarray) -> numpy.ndarray:
    d = numpy.einsum('zii->zi', field).real
    signs = numpy.where(d >= 0, 1.0, -1.0)
    return numpy.asarray(numpy.einsum('zi,ij->zij', signs, numpy.eye(field.shape[1])).astype(complex))


def _unittest_seesaw_single_restart() -> None:
    w = canonical_coefficients()
    config = SeeSawConfig(seed=7, restarts=1, max_iterations=200, threads=1)
    a = run_seesaw(w, config).best
    b = run_seesaw(w, config).best
    assert a.value == b.value
    assert a.history == b.history
    assert all(later >= earlier - 1e-9 for earlier, later in zip(a.history, a.history[1:]))
    assert a.value <= 64 + 1e-6
