# Copyright 2026 The trisum Authors
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

from fractions import Fraction

import pytest

import trisum


def t(x):
    return x * (x + 1) / 2


def test_big_integers_round_trip():
    n = 10**40 + 7
    assert trisum.tri(n) == n * (n + 1) // 2
    assert trisum.inv_tri(trisum.tri(n)) == n
    assert trisum.inv_tri(107) is None


def test_rational_index():
    assert trisum.solve_index(Fraction(15, 8)) == Fraction(3, 2)
    assert trisum.solve_index(0) == 0
    assert trisum.solve_index(Fraction(2, 3)) is None


def test_search_matches_direct_check():
    rows = trisum.solve_system1(1000)
    assert len(rows) == 44
    assert rows[0] == (9, 13, 44, 16, 46, 45)
    for x, y, z, p, q, r in rows:
        assert t(x) + t(y) == t(p) and t(y) + t(z) == t(q) and t(z) + t(x) == t(r)
    assert trisum.solve_system1(1000, workers=3) == rows


def test_four_sum_search():
    rows = trisum.solve_system3(1000, distinct_only=True)
    assert [row[-1] for row in rows] == [1166, 1353, 1458]


def test_families_and_parameters():
    assert trisum.family_eval(2, 0) == (9, 13, 44, 16, 46, 45)
    u, v, w = Fraction(2), Fraction(3), Fraction(5, 7)
    sol = trisum.closed_form_eval(u, v, w)
    assert all(isinstance(s, Fraction) for s in sol)
    assert sol == trisum.parametric_linear_solve(u, v, w)
    x, y, z, p, q, r = sol
    assert t(x) + t(y) == t(p)
    with pytest.raises(trisum.DegenerateParameters):
        trisum.closed_form_eval(0, 2, 3)
    with pytest.raises(ValueError):
        trisum.family_eval(1, -1)


def test_curve():
    curve = trisum.specialize_curve(2, 3)
    assert curve["A"] == -28802736
    assert curve["B"] == 40355763840
    assert curve["generator"] == (5736, 252720)
    sols = trisum.generate_solutions(2, 3, 5)
    assert len(sols) >= 3
    for row in sols:
        x, y, z, p, q, r, s = row["tuple"]
        assert t(x) + t(y) + t(z) == t(s)
        assert row["verified"]
    with pytest.raises(trisum.QuarticDegenerate):
        trisum.specialize_curve(-1, 3)


def test_identity_suite_and_cli():
    statuses = {status for _, _, status, _ in trisum.run_identity_suite()}
    assert "FAIL" not in statuses
    code, out, err = trisum.run_cli(["search", "--max", "100"])
    assert code == 0
    assert out.splitlines()[0] == "x,y,z,p,q,r"
    assert trisum.run_cli(["param", "--u", "0", "--v", "2", "--w", "3"])[0] == 1
