import pytest

import polyzeta as pz


def test_zeta_2_thirty_digits():
    r = pz.zeta([2], digits=30)
    assert r["value"] == "1.644934066848226436472415166646"
    assert r["method"] == "thm7-half"
    assert r["point"] == "half"


def test_zeta_1_3():
    r = pz.zeta([1, 3], digits=20)
    assert r["value"] == "0.27058080842778454788"


def test_methods_agree():
    vals = {
        m: pz.zeta([3], digits=20, method=m)["value"]
        for m in ("thm7-half", "thm10", "cor12", "cor21", "lemma20-minusone")
    }
    assert len(set(vals.values())) == 1


def test_divergent_raises():
    with pytest.raises(ValueError):
        pz.zeta([1])


def test_shuffle_and_transforms():
    assert pz.shuffle("ab", "a") == "2*aab + aba"
    assert pz.transform("box", "ab") == "2*aa + 2*ab"
    assert pz.transform("nabla", "ab") == "-3*aa"
    assert pz.box_closed_form(3) == "3*aaa + 3*aab + aba + abb"


def test_lambda_round_trip():
    assert pz.lambda_map("aabb") == [1, 3]
    assert pz.lambda_inverse([1, 3]) == "aabb"


def test_regularization():
    parts = pz.regularize_b("ba")
    assert parts == {0: "-ab", 1: "a"}
    assert pz.zeta_reg("ba", digits=15)["value"] == "-1.644934066848226"


def test_zeta_pm():
    r = pz.zeta_pm("a", sign=1, digits=15)
    assert r["value_re"] == "0.000000000000000"
    assert r["value_im"] == pz.const_pi(15)


def test_constants():
    assert pz.const_log2(15) == "0.693147180559945"
    assert pz.const_pi(15) == "3.141592653589793"


def test_polylog_relational():
    # 0 < l <= m: twice the nondecreasing double sum is zeta(2)
    r = pz.polylog([1, 1], point="half", digits=15, strict=[True, False])
    z2 = pz.zeta([2], digits=15)["value"]
    assert abs(2 * float(r["value"]) - float(z2)) < 1e-12


def test_group_suite_passes():
    results = pz.verify("group", trials=4, seed=11)
    assert results and all(r["pass"] for r in results)


def test_oracle_agrees():
    fast = float(pz.zeta([3], digits=12)["value"])
    oracle = float(pz.zeta_oracle([3], cutoff=20000, digits=6))
    assert abs(fast - oracle) < 1e-5
