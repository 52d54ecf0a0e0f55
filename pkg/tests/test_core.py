import pytest
from hypothesis import given, settings, strategies as st

from oagrank.arith import INF
from oagrank.core import (Element, H_n, H_n_minus, Lex, Q, Z, dense, flatten, in_nG, lex,
                          ZLocAllPrimes, omega, segment_exp, tail)
from oagrank.errors import BadCut, EmptySum, UnsupportedGroup

from oracles import BLOCK_POOL, brute_H_n, brute_H_n_minus, group_of, n_of

e0, e1 = Element.unit(0), Element.unit(1)
ZZ = lex(Z, Z)
A1, A2 = dense({2: INF}), dense({2: INF, 3: INF})


def test_flatten():
    assert flatten(Lex((Lex((Z, Q)), Z))) == lex(Z, Q, Z)
    assert flatten(Z) == Z
    assert flatten(Lex((Z, Lex((A1, A2))))) == lex(Z, A1, A2)
    with pytest.raises(EmptySum):
        flatten(Lex(()))


def test_infinite_component_must_be_last():
    with pytest.raises(UnsupportedGroup):
        lex(omega(Q), Z)
    with pytest.raises(UnsupportedGroup):
        lex(ZLocAllPrimes(), Z)


def test_segment_exp_examples():
    assert segment_exp(ZZ, 0, 2, 2) == 2
    assert segment_exp(Q, 0, 1, 3) == 0
    assert segment_exp(lex(Q, A1), 0, 2, 2) == INF
    with pytest.raises(BadCut):
        segment_exp(ZZ, 0, 3, 2)
    with pytest.raises(BadCut):
        segment_exp(ZZ, 2, 1, 2)


def test_segment_exp_infinite_presentations():
    g = lex(Z, omega(dense({3: 1})))
    assert segment_exp(g, 0, 1, 3) == 1
    assert segment_exp(g, 0, INF, 3) == INF
    assert segment_exp(g, 0, INF, 2) == 1
    # Z_(p_i): one copy for each prime
    assert segment_exp(ZLocAllPrimes(), 0, INF, 5) == 1
    assert segment_exp(ZLocAllPrimes(), 3, INF, 5) == 0


def test_in_nG_examples():
    assert in_nG(2 * e0, 2, ZZ)
    assert not in_nG(e0, 2, ZZ)
    assert in_nG(3 * e0, 3, dense({}))
    assert in_nG(e0, 3, Q)


def test_H_n_examples():
    assert H_n(e0, 2, ZZ) == tail(1)
    assert H_n(2 * e0, 2, ZZ) == tail(2)
    assert H_n(e1, 2, ZZ) == tail(2)


def test_H_n_minus_examples():
    # S_2 = {tail(1), tail(2)} and e_0 lies outside tail(1) only
    assert H_n_minus(e0, 2, ZZ) == tail(1)
    assert H_n_minus(e1, 2, ZZ) == tail(2)
    assert H_n_minus(e0, 2, lex(Z, Q, Z)) == tail(1)
    assert brute_H_n_minus(e0, 2, ZZ) == tail(1)
    assert brute_H_n_minus(e0, 2, lex(Z, Q, Z)) == tail(1)


def test_elements_rejected_on_infinite_presentations():
    with pytest.raises(UnsupportedGroup):
        H_n(e0, 2, omega(Z))


groups = st.lists(st.sampled_from(BLOCK_POOL), min_size=1, max_size=5).map(group_of)


@st.composite
def group_and_elements(draw, k=2):
    g = draw(groups)
    n = n_of(g)
    vecs = [draw(st.lists(st.integers(-40, 40), min_size=n, max_size=n)) for _ in range(k)]
    return g, [Element.from_vector(v) for v in vecs]


@settings(max_examples=150, deadline=None)
@given(group_and_elements(1), st.integers(1, 12))
def test_H_n_matches_scan(ge, n):
    g, (x,) = ge
    assert H_n(x, n, g) == brute_H_n(x, n, g)
    assert H_n_minus(x, n, g) == brute_H_n_minus(x, n, g)


@settings(max_examples=100, deadline=None)
@given(groups, st.integers(2, 12), st.data())
def test_segment_exp_additive(g, p_idx, data):
    from oagrank.arith import nth_prime
    p = nth_prime(p_idx % 5)
    n = n_of(g)
    a = data.draw(st.integers(0, n))
    b = data.draw(st.integers(a, n))
    c = data.draw(st.integers(b, n))
    lhs = segment_exp(g, a, c, p)
    rhs = segment_exp(g, a, b, p) + segment_exp(g, b, c, p)
    assert lhs == rhs


@settings(max_examples=100, deadline=None)
@given(groups, st.integers(1, 12))
def test_spanning_set_equality(g, n):
    """Over the generators, {H_n^-(e_i)} and {H_n(e_i)} give the same subgroups."""
    N = n_of(g)
    gens = [Element.unit(i) for i in range(N)]
    lower = {H_n(y, n, g) for y in gens} | {tail(N)}
    upper = {H_n_minus(y, n, g) for y in gens} | {tail(N)}
    assert lower == upper
