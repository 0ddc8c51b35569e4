# Copyright 2026 The tabalg Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Spectra, characters and Krein parameters of P-polynomial table algebras."""

from ._core import (
    CharacterTable,
    DegenerateColumn,
    Error,
    InvalidParams,
    NonPositiveB,
    NonSimilarizable,
    NotARoot,
    RootCountMismatch,
    Spectrum,
    TableAlgebraParams,
    ToleranceNotMet,
    Tridiagonal,
    build_b1,
    character_table,
    charpoly_eval,
    charpoly_toeplitz_tridiag,
    cheb_t,
    cheb_u,
    det_recursive,
    eigenvalues_oracle,
    eigenvector_from_theta,
    eq7_residual,
    find_spectrum,
    krein_tensor,
    multiplicities,
    ngon,
    oracle_spectrum,
    run_cli,
    sturm_count,
    verify,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
