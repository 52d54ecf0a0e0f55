import random

import pytest
from hypothesis import given, settings, strategies as st

from oagrank.arith import INF
from oagrank.core import Q, Z, lex
from oagrank.errors import NonDiscreteBlock, NotSublattice, RankMismatch
from oagrank.ladders import LadderSubgroup, add, index, intersect, membership
from oagrank.lattice import (IntegerLattice, embed, lattice_index, lattice_intersect,
                             lattice_sum)
from oagrank.selftest import all_z, random_element, random_ladder, run

span = IntegerLattice.span
Z2 = IntegerLattice.standard(2)


def test_index_examples():
    assert lattice_index(Z2, Z2.scaled(2)) == 4
    assert lattice_index(Z2, span(2, [[1, 0]])) == INF
    assert lattice_index(Z2, span(2, [[2, 0], [0, 3]])) == 6
    with pytest.raises(NotSublattice):
        lattice_index(Z2.scaled(2), Z2)
    with pytest.raises(RankMismatch):
        lattice_index(Z2, IntegerLattice.standard(3))


def test_meet_and_join_examples():
    assert lattice_intersect(Z2.scaled(2), Z2.scaled(3)) == Z2.scaled(6)
    assert lattice_sum(Z2.scaled(2), Z2.scaled(3)) == Z2
    g = lex(Z, Z)
    a, b = LadderSubgroup.from_moduli(g, (2, 1)), LadderSubgroup.from_moduli(g, (INF, 6))
    assert lattice_intersect(embed(g, a), embed(g, b)) == embed(g, intersect(a, b))


def test_embed_examples():
    assert embed(lex(Z, Z), LadderSubgroup.multiple(lex(Z, Z), 2)) == Z2.scaled(2)
    assert embed(lex(Z, Z, Z), LadderSubgroup.from_moduli(lex(Z, Z, Z), (INF, 4, 1))) == \
        span(3, [[0, 4, 0], [0, 0, 1]])
    assert embed(lex(Z, Z), LadderSubgroup.from_moduli(lex(Z, Z), (2, 1))) == span(2, [[2, 0], [0, 1]])
    with pytest.raises(NonDiscreteBlock):
        embed(lex(Z, Q), LadderSubgroup.whole(lex(Z, Q)))


def test_non_diagonal_intersection():
    a = span(2, [[1, 1], [0, 2]])
    b = span(2, [[1, -1], [0, 3]])
    meet = lattice_intersect(a, b)
    pts = {(x, y) for x in range(-12, 13) for y in range(-12, 13) if (x, y) in a and (x, y) in b}
    assert pts == {(x, y) for x in range(-12, 13) for y in range(-12, 13) if (x, y) in meet}


matrices = st.integers(1, 4).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n),
                                             min_size=0, max_size=5)))


@settings(max_examples=150, deadline=None)
@given(matrices, st.randoms(use_true_random=False))
def test_hnf_canonical(nm, rnd):
    n, rows = nm
    lat = span(n, rows)
    assert span(n, lat.basis) == lat
    shuffled = list(rows)
    rnd.shuffle(shuffled)
    mixed = shuffled + [[a + b for a, b in zip(shuffled[0], shuffled[-1])]] if shuffled else []
    assert span(n, mixed) == lat
    for r in rows:
        assert r in lat


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2 ** 32))
def test_embed_is_a_homomorphism(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 6)
    g = all_z(n)
    a, b = random_ladder(rng, g, n), random_ladder(rng, g, n)
    la, lb = embed(g, a), embed(g, b)
    assert embed(g, intersect(a, b)) == lattice_intersect(la, lb)
    assert embed(g, add(a, b)) == lattice_sum(la, lb)
    c = intersect(a, b)
    assert index(a, c) == lattice_index(la, embed(g, c))
    x = random_element(rng, a)
    assert membership(x, a) == (x.vector(n) in la)


def test_selftest_harness_clean():
    res = run(seed=7, iters=200)
    assert res.discrepancies == 0 and res.checks == 1200
