import random

import numpy as np
import pytest
from hypothesis import given, strategies as st

from nsg import (
    EmptySpec,
    GeneratorSpec,
    NonCoprime,
    SpecParseError,
    ZeroGenerator,
    build,
    parse_spec,
)
from nsg.core import contains, equals, gaps, next_element, small_elements

from conftest import EXAMPLE_46, generator_specs
from oracles import Brute


def test_example3_build(ex3):
    assert ex3.conductor == 290
    assert ex3.multiplicity == 30
    assert ex3.embedding_dimension == 23


def test_table1_row1_embedding_dimension():
    assert build("100,170,171,176;599").embedding_dimension == 71


def test_full_monoid():
    N = build("1")
    assert N.conductor == 0
    assert N.multiplicity == 1
    assert N.min_generators == (1,)
    assert N.is_trivial
    assert 0 in N and 5 in N


@pytest.mark.parametrize(
    "text, exc",
    [("2,4", NonCoprime), ("", EmptySpec), ("0,3", ZeroGenerator), ("2;x", SpecParseError),
     ("3,,4", SpecParseError)],
)
def test_build_errors(text, exc):
    with pytest.raises(exc):
        build(text)


def test_empty_generators_with_threshold_is_ordinary():
    S = build(";3")
    assert S.min_generators == (3, 4, 5)
    assert S.conductor == 3


def test_parse_spec_roundtrip():
    spec = parse_spec("30, 42 ,51 ; 290")
    assert spec == GeneratorSpec((30, 42, 51), 290)
    assert str(spec) == "30,42,51;290"


def test_generator_above_threshold_is_absorbed():
    assert build("5,7,100;20") == build("5,7;20")


def test_conductor_may_drop_below_threshold():
    S = build("2,3;50")
    assert S.conductor == 2


def test_contains(ex3):
    S = build("2,3")
    assert not contains(S, 1)
    assert not contains(ex3, 289)
    assert contains(ex3, ex3.conductor)
    assert not contains(S, -4)


def test_gaps_and_small_elements(ex3):
    S = build("2,3")
    assert gaps(S) == (1,)
    assert small_elements(S) == (0,)
    assert len(small_elements(ex3)) == 65
    m = 7
    S = build(f";{m}")
    assert gaps(S) == tuple(range(1, m))
    assert small_elements(S) == (0,)


def test_next_element():
    assert next_element(build("2,3"), 0) == 2
    assert next_element(build(";7"), 7) == 8
    assert next_element(build(EXAMPLE_46), 50) == 55


def test_equals():
    assert equals(build("2,3"), build("2,3,4"))
    assert equals(build("3,4,5"), build(";3"))
    assert not equals(build("2,3"), build("3,4,5"))
    assert hash(build("2,3")) == hash(build("2,3,4"))


def test_membership_is_read_only(ex3):
    with pytest.raises(ValueError):
        ex3.membership[1] = True


@given(generator_specs())
def test_matches_brute_force(spec):
    gens, r = spec
    S = build(gens, r)
    B = Brute(gens, r)
    assert S.conductor == B.c
    assert S.multiplicity == B.m
    assert set(S.small_elements()) == B.small
    assert list(S.min_generators) == B.min_generators()


@given(generator_specs(allow_threshold=False))
def test_doubling_sieve_conductor_matches_oracle(spec):
    gens, _ = spec
    assert build(gens).conductor == Brute(gens).c


@given(generator_specs())
def test_structure_invariants(spec):
    S = build(*spec)
    c, m = S.conductor, S.multiplicity
    mem = S.membership
    assert mem[0] and mem.size == c + m
    assert mem[c:].all()
    if c >= 1:
        assert not mem[c - 1]
    assert S.min_generators[0] == m
    assert np.gcd.reduce(np.array(S.min_generators)) == 1
    assert all(a <= c + m - 1 for a in S.min_generators)
    assert len(S.gaps()) + S.delta == c


@given(generator_specs())
def test_round_trip_from_min_generators(spec):
    S = build(*spec)
    assert build(S.min_generators) == S
    assert build(S.min_generators, S.conductor or None) == S


@given(generator_specs())
def test_minimality(spec):
    S = build(*spec)
    for a in S.min_generators:
        rest = [g for g in S.min_generators if g != a]
        if not rest or np.gcd.reduce(np.array(rest)) != 1:
            continue
        assert build(rest) != S


@given(generator_specs(), st.integers(0, 2**32))
def test_additive_closure_probes(spec, seed):
    S = build(*spec)
    rng = random.Random(seed)
    n = S.conductor + S.multiplicity
    members = [x for x in range(n) if x in S]
    for _ in range(1000):
        x, y = rng.choice(members), rng.choice(members)
        assert (x + y) in S


def test_digest_identifies_element_set():
    assert build("2,3").digest() == build("2,3,4,5").digest()
    assert build("2,3").digest() != build("2,5").digest()
