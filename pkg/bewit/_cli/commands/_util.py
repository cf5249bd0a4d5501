#
# Copyright (c) 2026 Bewit Development Team
# This software is distributed under the terms of the MIT License.
#

import typing
import logging
import pathlib
import argparse
import bewit


CANONICAL_WITNESS = 'canonical'

_logger = logging.getLogger(__name__)


def add_state_argument(parser: argparse.ArgumentParser, required: bool = True) -> None:
    parser.add_argument(
        '--state', '-s',
        required=required,
        metavar='ID_OR_PATH',
        help=f'''
A catalog state identifier or the path to a JSON file. The file holds
either a density matrix or a Bloch-diagonal specification (16 coefficients
and an optional permutation). Catalog identifiers:
{", ".join(s.label for s in bewit.states.StateID)}
'''.strip())
    parser.add_argument(
        '--visibility',
        type=float,
        default=bewit.states.DEFAULT_ASYM_VISIBILITY,
        help='Visibility of the state with asymmetric noise ("asym"). Default: %(default)s',
    )


def load_state(spec: str, asym_visibility: float = bewit.states.DEFAULT_ASYM_VISIBILITY) \
        -> typing.Tuple[bewit.states.DensityMatrix, typing.Optional[bewit.basis.Permutation]]:
    """
    Resolves a catalog identifier or a JSON file path into a state and the relabeling its witness should use.
    Catalog identifiers take precedence over files with the same name.
    The relabeling is known only for catalog entries and Bloch-diagonal specifications.
    """
    path = pathlib.Path(spec)
    if _is_catalog_id(spec) or (path.suffix.lower() != '.json' and not path.is_file()):
        sid = bewit.states.StateID.parse(spec)
        rho = bewit.states.catalog(sid, asym_visibility=asym_visibility)
        spec_entry = bewit.states.BLOCH_SPECS.get(sid)
        return rho, spec_entry.permutation if spec_entry is not None else None
    _logger.info('Loading the state from %s', path)
    obj = bewit.states.loads_state_or_spec(path.read_text(encoding='utf8'))
    if isinstance(obj, bewit.states.BlochDiagonalSpec):
        return bewit.states.from_bloch_diagonal(obj, slack=bewit.states.LOOSE_PSD_SLACK), obj.permutation
    return obj, None


def load_witness(spec: str,
                 asym_visibility: float = bewit.states.DEFAULT_ASYM_VISIBILITY) -> bewit.witness.WitnessCoefficients:
    """
    Either :data:`CANONICAL_WITNESS`, a catalog state whose own witness is wanted, or a CSV file path.
    """
    if spec.strip().lower() == CANONICAL_WITNESS:
        return bewit.witness.canonical_coefficients()
    path = pathlib.Path(spec)
    if path.suffix.lower() == '.csv' or (path.is_file() and not _is_catalog_id(spec)):
        _logger.info('Loading the witness from %s', path)
        with open(path, encoding='utf8', newline='') as f:
            return bewit.witness.read_witness_csv(f)
    rho, permutation = load_state(spec, asym_visibility)
    return bewit.witness.witness_for_state(rho, permutation)


def round_or_none(value: typing.Optional[float], digits: int = 10) -> typing.Optional[float]:
    """
    Rounds away the last few bits of numerical noise so that the reports are stable across platforms.

    >>> round_or_none(0.1 + 0.2), round_or_none(None)
    (0.3, None)
    """
    return None if value is None else round(float(value), digits)


def _is_catalog_id(spec: str) -> bool:
    try:
        bewit.states.StateID.parse(spec)
    except bewit.states.UnknownStateIDError:
        return False
    return True


def _unittest_load_state_catalog_first(tmp_path: pathlib.Path, monkeypatch: typing.Any) -> None:
    import numpy
    from pytest import raises
    monkeypatch.chdir(tmp_path)
    # Files shadowing catalog identifiers are ignored.
    (tmp_path / 'BPD').write_text('not a state')
    (tmp_path / 'canonical').write_text('not a witness')
    rho, _ = load_state('BPD')
    assert numpy.array_equal(rho.matrix, bewit.states.catalog(bewit.states.StateID.BPD).matrix)
    assert load_witness('BPD') == bewit.witness.witness_for_state(rho)
    assert load_witness('canonical') == bewit.witness.canonical_coefficients()

    (tmp_path / 'mine').write_text(bewit.states.dumps_state(rho))
    loaded, permutation = load_state('mine')
    assert numpy.allclose(loaded.matrix, rho.matrix) and permutation is None

    with raises(bewit.states.UnknownStateIDError):
        load_state('no-such-state')
