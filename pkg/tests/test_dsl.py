import pytest
from hypothesis import given, settings, strategies as st

from oagrank.arith import INF
from oagrank.core import ArchimedeanBlock, Kind, Q, Z, ZLocAllPrimes, dense, lex, omega
from oagrank.dsl import normalize, parse, to_text
from oagrank.errors import NonPrimeKey, OmegaOfCompound, ParseError, TrivialGroup

from oracles import BLOCK_POOL, group_of


def test_worked_example_parses():
    g = parse("lex(Q, dense{2:inf}, dense{2:inf,3:inf})")
    assert g == lex(Q, dense({2: INF}), dense({2: INF, 3: INF}))


def test_basic_forms():
    z = parse("Z")
    assert isinstance(z, ArchimedeanBlock) and z.kind is Kind.DISCRETE
    assert parse("Q") == parse("dense{}") == dense({})
    assert parse("zhat_primes") == ZLocAllPrimes()
    assert parse("omega(dense{2:1})") == omega(dense({2: 1}))
    assert parse("lex(lex(Z,Q),Z)") == lex(Z, Q, Z)
    assert parse("dense{3:0; default:1}") == dense({3: 0}, default=1)
    assert parse("dense{; default:1}") == dense({}, default=1)
    assert parse("  lex( Z ,\n Q )  ") == lex(Z, Q)


@pytest.mark.parametrize("text, exc, pos", [
    ("dense{2:0}", ParseError, 6),
    ("0", TrivialGroup, 0),
    ("lex()", TrivialGroup, 4),
    ("dense{4:1}", NonPrimeKey, 6),
    ("omega(lex(Z,Q))", OmegaOfCompound, 6),
    ("lex(Z,Q", ParseError, 7),
    ("Z Q", ParseError, 2),
    ("dense{2:1,2:3}", ParseError, 10),
    ("R", ParseError, 0),
    ("dense{2:x}", ParseError, 8),
    ("lex(omega(Z), Z)", ParseError, 0),
    ("Z$", ParseError, 1),
])
def test_errors_carry_positions(text, exc, pos):
    with pytest.raises(exc) as info:
        parse(text)
    assert info.value.pos == pos


def test_printer():
    assert to_text(lex(Z, dense({2: INF, 3: 2}), omega(Q))) == "lex(Z, dense{2:inf,3:2}, omega(Q))"
    assert to_text(dense({}, default=1)) == "dense{; default:1}"
    assert normalize("lex(lex(Z),dense{3:inf,2:1})") == "lex(Z, dense{2:1,3:inf})"


ends = st.sampled_from([None, ZLocAllPrimes(), omega(Q), omega(dense({2: 1})), omega(Z)])


@settings(max_examples=200, deadline=None)
@given(st.lists(st.sampled_from(BLOCK_POOL), min_size=1, max_size=6), ends)
def test_round_trip(blocks, end):
    g = group_of(blocks)
    if end is not None:
        g = lex(g, end)
    text = to_text(g)
    assert parse(text) == g
    assert to_text(parse(text)) == text
