# Copyright 2026 The frobdet Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Exact factorization of finite semigroup determinants."""

from ._core import (
    FrobdetError,
    Semigroup,
    chain_fastpath,
    determinant,
    factor_clifford,
    factor_commutative,
    factor_group,
    factor_local,
    factor_nil_adjoined,
    factor_semilattice,
    family_names,
    frobenius_test,
    kovacs,
    ringcheck_matmonoid,
    ringcheck_zmod,
    smith,
)

__all__ = [
    "FrobdetError",
    "Semigroup",
    "chain_fastpath",
    "determinant",
    "factor_clifford",
    "factor_commutative",
    "factor_group",
    "factor_local",
    "factor_nil_adjoined",
    "factor_semilattice",
    "family_names",
    "frobenius_test",
    "kovacs",
    "ringcheck_matmonoid",
    "ringcheck_zmod",
    "smith",
]
