import json
from itertools import islice

import pytest
from hypothesis import given

from nsg import BadParams, TrivialSemigroup, build, w_mq
from nsg.sweep import builtin_table1
from nsg.theorems import (
    CHECKERS,
    FuzzParams,
    TheoremId,
    TheoremVerdict,
    check_all,
    check_C4_4,
    check_C5_2,
    check_C5_3,
    check_D5_HD,
    check_P3_3,
    check_P3_4,
    check_P3_5,
    check_P3_6,
    check_P5_1,
    check_T4_1,
    check_T4_2,
    check_T4_3,
    random_semigroup,
)

from conftest import generator_specs

ROW1 = "100,170,171,176;599"


def test_p3_3_sharp_on_w_mq():
    for m, q in [(3, 2), (5, 4), (10, 3)]:
        v = check_P3_3(w_mq(m, q))
        assert v.hypotheses_met and v.conclusion_holds
        assert v.witness["tight"]


def test_p3_3_example3(ex3):
    assert check_P3_3(ex3).conclusion_holds


def test_p3_3_ordinary():
    v = check_P3_3(build(";7"))
    assert v.witness["L"] == 0 and v.witness["k"] == 1
    assert v.conclusion_holds and v.witness["tight"]


def test_p3_4(ex46):
    v = check_P3_4(ex46)
    assert v.hypotheses_met and v.conclusion_holds
    assert v.witness["e_s"] * v.witness["k"] == 55
    v = check_P3_4(build(";7"))
    assert not v.hypotheses_met and v.conclusion_holds is None


def test_p3_5(ex46):
    v = check_P3_5(ex46)
    assert v.hypotheses_met and v.conclusion_holds and v.witness["W_2k"] == 470


def test_p3_5_guard_fires_on_counterexample():
    v = check_P3_5(build(";3"))
    assert v.witness["W_2k"] == -1
    assert not v.hypotheses_met and not v.falsified


def test_p3_6(ex46):
    v = check_P3_6(ex46)
    assert v.hypotheses_met and v.conclusion_holds and v.witness["W_k1"] == 206
    v = check_P3_6(build("2,3"))
    assert v.hypotheses_met and v.witness["W_k1"] == 0 and v.conclusion_holds


def test_t4_1(ex3):
    v = check_T4_1(ex3)
    assert v.conclusion_holds
    assert (v.witness["W_e"], v.witness["E"], v.witness["W_es"]) == (1205, 105, -95)
    v = check_T4_1(build(ROW1))
    assert (v.witness["W_e"], v.witness["E"], v.witness["W_es"]) == (2880, -1, -403)
    v = check_T4_1(build(";9"))
    assert (v.witness["W_e"], v.witness["E"], v.witness["W_es"]) == (0, 0, -9)


def test_t4_2(ex3):
    v = check_T4_2(build(ROW1))
    assert v.hypotheses_met and v.conclusion_holds
    assert (v.witness["mu"], v.witness["e_s"]) == (13, 4)
    assert v.witness["e_c"] * v.witness["delta"] == 3283
    assert not check_T4_2(ex3).hypotheses_met


def test_t4_3(ex45, ex46):
    v = check_T4_3(ex45)
    assert (v.witness["lhs"], v.witness["rhs"]) == (12000, 8750)
    assert v.hypotheses_met and v.conclusion_holds
    v = check_T4_3(ex46)
    assert v.witness["lhs"] == v.witness["rhs"] == 100
    assert not v.hypotheses_met
    for spec in builtin_table1():
        assert not check_T4_3(build(spec)).hypotheses_met


def test_c4_4(ex3):
    v = check_C4_4(build(ROW1))
    assert (v.witness["lhs"], v.witness["rhs"]) == (400, 29400)
    assert v.hypotheses_met and v.conclusion_holds
    assert not check_C4_4(ex3).hypotheses_met


def test_section5_example46(ex46):
    hd = check_D5_HD(ex46)
    assert hd.hypotheses_met and hd.witness["clause"] == 2
    v = check_P5_1(ex46)
    assert v.hypotheses_met and v.conclusion_holds and v.witness["W_e"] == 668
    v = check_C5_2(ex46)
    assert v.hypotheses_met and v.conclusion_holds and v.witness["E"] == 544
    assert check_C5_3(ex46).conclusion_holds


def test_small_concentration_is_highly_dense():
    for text in ["2,5", "3,5", ";4", "4,6,7,9"]:
        S = build(text)
        v = check_D5_HD(S)
        if v.witness["k"] <= 2:
            assert v.hypotheses_met and v.witness["clause"] == 1


def test_example45_not_highly_dense(ex45):
    # C = 25 > e/2 = 22.5
    v = check_D5_HD(ex45)
    assert (v.witness["k"], v.witness["e"]) == (25, 45)
    assert not v.hypotheses_met


def test_check_all(ex3):
    verdicts = check_all(ex3)
    assert [v.theorem for v in verdicts] == list(TheoremId)
    assert len(verdicts) == 12
    assert not any(v.falsified for v in verdicts)


def test_check_all_table1():
    for spec in builtin_table1():
        assert not any(v.falsified for v in check_all(build(spec)))


def test_check_all_trivial():
    with pytest.raises(TrivialSemigroup):
        check_all(build("1"))


def test_verdict_serialization(ex46):
    d = json.loads(json.dumps(check_T4_1(ex46).to_dict()))
    assert d["theorem"] == "T4_1" and d["hypotheses_met"] is True
    assert d["witness"]["E"] == 544


def test_falsified_flag():
    assert TheoremVerdict(TheoremId.T4_1, True, False).falsified
    assert not TheoremVerdict(TheoremId.T4_1, False, None).falsified


@given(generator_specs(max_m=30))
def test_no_falsification_hypothesis(spec):
    for v in check_all(build(*spec)):
        assert not v.falsified, v
        assert (v.conclusion_holds is None) == (not v.hypotheses_met)


def test_fuzz_deterministic():
    a = [S.spec for S in random_semigroup(FuzzParams(seed=42, count=3))]
    b = [S.spec for S in random_semigroup(FuzzParams(seed=42, count=3))]
    assert a == b and len(a) == 3
    c = [S.spec for S in random_semigroup(FuzzParams(seed=43, count=3))]
    assert a != c


def test_fuzz_multiplicity_two():
    for S in random_semigroup(FuzzParams(seed=1, max_multiplicity=2, count=50)):
        assert len(S.min_generators) == 2
        assert S.min_generators[0] == 2 and S.min_generators[1] % 2 == 1


def test_fuzz_bad_params():
    with pytest.raises(BadParams):
        next(random_semigroup(FuzzParams(max_multiplicity=1)))
    with pytest.raises(BadParams):
        next(random_semigroup(FuzzParams(threshold_probability=1.5)))


def test_fuzz_corpus_sound():
    params = FuzzParams(seed=7, max_multiplicity=60, count=1000)
    for S in random_semigroup(params):
        assert S.membership[S.conductor:].all()
        verdicts = check_all(S)
        assert not any(v.falsified for v in verdicts)
        by_id = {v.theorem: v for v in verdicts}
        # T4_3 and C4_4 can never both fire
        assert not (by_id[TheoremId.T4_3].hypotheses_met and by_id[TheoremId.C4_4].hypotheses_met)


def test_fuzz_threshold_range():
    params = FuzzParams(seed=3, max_multiplicity=20, threshold_probability=1.0, count=200)
    for S in islice(random_semigroup(params), 200):
        m, r = S.spec.generators[0], S.spec.threshold
        assert 2 * m <= r <= 15 * m


def test_checkers_cover_every_id():
    assert set(CHECKERS) == set(TheoremId)


@pytest.mark.parametrize("m, step, threshold", [(400, 5, 4150), (900, 20, 9700), (1000, 25, 13741)])
def test_t4_3_fires_on_progressions(m, step, threshold):
    S = build([m + step * i for i in range(m // step)], threshold)
    v = check_T4_3(S)
    assert v.hypotheses_met and v.conclusion_holds
    assert v.witness["k"] <= step + 1
