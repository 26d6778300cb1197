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
import math

import pytest

import frobdet


def totient(n):
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def test_smith_matches_totients():
    det, phi = frobdet.smith(8)
    assert phi == [totient(k) for k in range(1, 9)]
    assert det == math.prod(phi) == 768


def test_sgp_round_trip():
    s = frobdet.Semigroup.family("rook", ["2"])
    assert len(s) == 7
    again = frobdet.Semigroup.parse(s.to_sgp())
    assert again.to_sgp() == s.to_sgp()
    assert again.names == s.names


def test_multiplication_by_name():
    s = frobdet.Semigroup.family("zmod_mul", ["6"])
    assert s.mul("2", "3") == "0"
    assert s.mul("5", "5") == "1"
    assert s.zero == "0" and s.identity == "1"


def test_wenger_contracted_local():
    s = frobdet.Semigroup.family("wenger")
    f = frobdet.factor_local(s)
    assert f["status"] == "factored"
    assert f["constant"] == "-1"
    assert sorted(f["factors"]) == [("x_z'+x_az'", 4), ("x_z'-x_az'", 4)]
    assert f["verification"] == "exact"


def test_eleven_element_monoid_vanishes():
    f = frobdet.factor_commutative(frobdet.Semigroup.family("eleven"))
    assert f["status"] == "zero"
    assert any("= 0" in n for n in f["notes"])


def test_cyclic_nilpotent_sign():
    for k in range(2, 6):
        f = frobdet.factor_nil_adjoined(frobdet.Semigroup.family("cyclic_nilpotent", [str(k)]))
        assert f["constant"] == ("-1" if (k * (k - 1) // 2) % 2 else "1")
        assert len(f["factors"]) == 1 and f["factors"][0][1] == k


def test_left_zero_is_not_frobenius():
    r = frobdet.frobenius_test(frobdet.Semigroup.family("left_zero", ["2"]))
    assert r["status"] == "not_frobenius"
    assert frobdet.determinant(frobdet.Semigroup.family("left_zero", ["2"])) == "0"


def test_kovacs_identity():
    r = frobdet.kovacs(3, 2)
    assert r["holds"] and r["total"] == 2 ** 9


def test_ring_forms_nonzero():
    assert frobdet.ringcheck_zmod(6) is not None
    assert frobdet.ringcheck_matmonoid(2, 2) == str(2 ** 32)


def test_domain_errors_raise():
    with pytest.raises(frobdet.FrobdetError, match="UnknownFamily"):
        frobdet.Semigroup.family("nosuch")
    with pytest.raises(frobdet.FrobdetError):
        frobdet.Semigroup.parse("n 2\nelements a b\ntable\na b\nb a b\n")
