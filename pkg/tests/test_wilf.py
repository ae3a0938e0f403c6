import pytest
from hypothesis import given, strategies as st

from nsg import BadParams, TrivialSemigroup, build, concentration, eliahou, mu, w_mq, wilf
from nsg.invariants import generator_split, partition_profile

from conftest import generator_specs
from oracles import Brute


def test_wilf_examples(ex3, ex46):
    assert wilf(ex3, 23) == 1205
    assert wilf(ex3, 5) == 35
    assert wilf(ex46, 6) == 206
    assert wilf(ex3, 0) == -290


def test_mu_examples(ex3, ex46):
    assert mu(ex3) == 5
    assert mu(ex46) == 3
    assert mu(build("100,170,171,176;599")) == 13
    assert mu(build("2,3")) == 2
    assert mu(build("1")) == 0


def test_eliahou_examples(ex3, ex46):
    assert eliahou(ex3) == 105
    assert eliahou(ex46) == 544
    assert eliahou(build("100,170,172,175;600")) == -8
    assert eliahou(build(";11")) == 0


def test_eliahou_uses_half_open_window(ex46):
    # with the closed window [c, c+m] d_q would gain c+m and E would drop by q
    e_s, e_c, d_q = generator_split(ex46)
    q = partition_profile(ex46).q
    closed = e_s * ex46.delta - q * (d_q + 1) + partition_profile(ex46).nu
    assert closed == 540 != eliahou(ex46)


def test_eliahou_rejects_trivial():
    with pytest.raises(TrivialSemigroup):
        eliahou(build("1"))


def test_w_mq_small():
    assert w_mq(2, 1) == build("2,3")
    with pytest.raises(BadParams):
        w_mq(1, 3)
    with pytest.raises(BadParams):
        w_mq(4, 0)


@pytest.mark.parametrize("m", range(2, 9))
@pytest.mark.parametrize("q", range(1, 6))
def test_w_mq_properties(m, q):
    S = w_mq(m, q)
    p = partition_profile(S)
    assert S.delta == p.L + 1 == q
    assert p.rho == m
    assert all(wilf(S, k) <= 0 for k in range(1, m + 1))
    if q >= 2:
        assert concentration(S) == m
    else:
        # q = 1 collapses to {0, m, ->}
        assert concentration(S) == 1


@given(generator_specs(), st.integers(0, 50), st.integers(0, 50))
def test_wilf_linear(spec, a, b):
    S = build(*spec)
    assert wilf(S, a + b) == wilf(S, a) + b * S.delta


@given(generator_specs(max_m=40))
def test_mu_threshold(spec):
    S = build(*spec)
    u = mu(S)
    assert u == Brute(*spec).mu_scan()
    assert all(wilf(S, k) < 0 for k in range(u))
    assert wilf(S, u) >= 0
    assert 2 <= u <= S.multiplicity


@given(generator_specs(max_m=40))
def test_sandwich(spec):
    S = build(*spec)
    e_s, _, _ = generator_split(S)
    assert wilf(S, S.embedding_dimension) >= eliahou(S) >= wilf(S, e_s)
