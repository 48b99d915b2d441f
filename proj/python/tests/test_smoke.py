# Copyright 2026 The wittext Authors
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


import pytest

import wittext


def test_dense_extends_on_both_branches():
    m = wittext.dense("1/2", "9")
    out = wittext.extend(m, side="gt")
    assert out["status"] == "Extended"
    assert len(out["actions"]) == 2
    for action in out["actions"]:
        assert wittext.verify(action)["status"] == "pass"


def test_glue_and_central_operator():
    m = wittext.dense("1/2", "9")
    lt = wittext.extend(m, side="lt", branch="+")["actions"][0]
    gt = wittext.extend(m, side="gt", branch="+")["actions"][0]
    assert wittext.glue(lt, gt, vir=True)["ok"]
    gt_minus = wittext.extend(m, side="gt", branch="-")["actions"][0]
    assert not wittext.glue(lt, gt_minus, vir=True)["ok"]


def test_modules_satisfy_sl2():
    for m in (wittext.verma("1/2"), wittext.lowest("9/2"), wittext.finite(4), wittext.counterexample("1/2")):
        assert wittext.sl2_report(m)["status"] == "pass"


def test_errors_surface_as_value_errors():
    with pytest.raises(wittext.WittextError):
        wittext.counterexample("2")
    with pytest.raises(ValueError):
        wittext.dense("1/0", "9")


def test_free_lie():
    assert [wittext.relation_dim(n) for n in range(5, 10)] == [1, 1, 2, 2, 3]
    verdict = wittext.member("r2", ["r1"], 11)
    assert verdict == {"member": False, "stable": True, "dim": 2}


def test_criterion_record():
    rec = wittext.criterion(1)
    assert rec["criterion"] == 1
    assert rec["status"] == "pass"
    assert "seconds" not in rec
    assert wittext.criterion_count == 10
