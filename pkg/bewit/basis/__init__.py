#
# Copyright (c) 2026 Bewit Development Team
# This software is distributed under the terms of the MIT License.
#

"""
Operator bases: the Pauli matrices, the two-qubit product basis ``A_k = σ_{k0}⊗σ_{k1}/2`` with
one-based flat indices ``k = 4*k0 + k1 + 1``, its permuted partner ``B_k``, the conjugation sign tables,
and orthonormal Hermitian (generalized Gell-Mann) bases of arbitrary dimension.
"""

from ._error import IndexOutOfRangeError as IndexOutOfRangeError
from ._error import InvalidPermutationError as InvalidPermutationError
from ._error import InvalidDimensionError as InvalidDimensionError

from ._pauli import OPERATOR_COUNT as OPERATOR_COUNT
from ._pauli import pauli as pauli
from ._pauli import PauliIndex as PauliIndex
from ._pauli import conj_sign as conj_sign
from ._pauli import conj_sign_table as conj_sign_table
from ._pauli import product_operators as product_operators

from ._permutation import Permutation as Permutation

from ._product import ProductBasis as ProductBasis
from ._product import product_basis as product_basis
from ._product import sign_table as sign_table

from ._hermitian import hermitian_basis as hermitian_basis
from ._hermitian import hermitian_basis_array as hermitian_basis_array
