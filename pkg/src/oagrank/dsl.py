"""Text syntax for group expressions.

    group   := "Z" | "Q" | "dense" "{" [profile] "}"
             | "lex" "(" group { "," group } ")" | "omega" "(" group ")"
             | "zhat_primes"
    profile := item { "," item } [ ";" "default" ":" ("0" | "1") ]
    item    := prime ":" (nat | "inf")

``Q`` is ``dense{}``.  As a small extension the item list may be empty in
front of ``;``, so ``dense{; default:1}`` is accepted (the printer needs it).
"""
from __future__ import annotations

import re

from .arith import INF, is_inf
from .core import (ArchimedeanBlock, DivisibilityProfile, Kind, Lex, OmegaRepeat,
                   ZLocAllPrimes, flatten)
from .errors import (InputError, NonPrimeKey, OmegaOfCompound, ParseError,
                     TrivialGroup, UnsupportedGroup)

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<word>[A-Za-z_]+)|(?P<sym>[(){},;:]))")


def _tokenize(text):
    pos = 0
    out = []
    while True:
        m = _TOKEN.match(text, pos)
        if not m:
            rest = text[pos:]
            if rest.strip():
                bad = pos + len(rest) - len(rest.lstrip())
                raise ParseError(f"unexpected character {text[bad]!r}", bad)
            out.append(("end", None, len(text)))
            return out
        kind = m.lastgroup
        out.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()


class _Parser:
    def __init__(self, text):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        kind, val, pos = self.take()
        if val != value:
            got = "end of input" if kind == "end" else repr(val)
            raise ParseError(f"expected {value!r}, got {got}", pos)
        return pos

    def group(self):
        kind, val, pos = self.take()
        if kind == "num" and val == "0" or val == "trivial":
            raise TrivialGroup("the trivial group is not a valid presentation", pos)
        if kind != "word":
            raise ParseError(f"expected a group, got {val!r}" if val else "unexpected end of input", pos)
        if val == "Z":
            return ArchimedeanBlock(Kind.DISCRETE, DivisibilityProfile(1))
        if val == "Q":
            return ArchimedeanBlock(Kind.DENSE, DivisibilityProfile(0))
        if val == "zhat_primes":
            return ZLocAllPrimes()
        if val == "dense":
            return self.dense()
        if val == "lex":
            self.expect("(")
            if self.peek()[1] == ")":
                raise TrivialGroup("empty lexicographic sum", self.peek()[2])
            items = [self.group()]
            while self.peek()[1] == ",":
                self.take()
                items.append(self.group())
            self.expect(")")
            try:
                return flatten(Lex(tuple(items)))
            except UnsupportedGroup as exc:
                raise ParseError(str(exc), pos) from exc
        if val == "omega":
            self.expect("(")
            arg_pos = self.peek()[2]
            inner = self.group()
            self.expect(")")
            inner = flatten(inner)
            if not isinstance(inner, ArchimedeanBlock):
                raise OmegaOfCompound("omega(...) takes a single archimedean block", arg_pos)
            return OmegaRepeat(inner)
        raise ParseError(f"unknown group {val!r}", pos)

    def dense(self):
        self.expect("{")
        items = {}
        default = 0
        start = self.peek()[2]
        while self.peek()[1] not in ("}", ";"):
            if items:
                self.expect(",")
            kind, val, pos = self.take()
            if kind != "num":
                raise ParseError(f"expected a prime, got {val!r}", pos)
            p = int(val)
            self.expect(":")
            kind2, val2, pos2 = self.take()
            if val2 == "inf":
                e = INF
            elif kind2 == "num":
                e = int(val2)
            else:
                raise ParseError(f"expected an exponent, got {val2!r}", pos2)
            if p in items:
                raise ParseError(f"prime {p} listed twice", pos)
            items[p] = (e, pos)
        if self.peek()[1] == ";":
            self.take()
            kind, val, pos = self.take()
            if val != "default":
                raise ParseError("expected 'default'", pos)
            self.expect(":")
            kind, val, pos = self.take()
            if val not in ("0", "1"):
                raise ParseError("default exponent must be 0 or 1", pos)
            default = int(val)
        self.expect("}")
        for p, (e, pos) in items.items():
            if e == default:
                raise ParseError(f"exponent for {p} equals the default", pos)
        try:
            profile = DivisibilityProfile(default, tuple((p, e) for p, (e, _) in items.items()))
        except NonPrimeKey as exc:
            bad = next(pos for p, (_, pos) in items.items() if str(p) in str(exc))
            raise NonPrimeKey(str(exc), bad) from exc
        except InputError as exc:
            raise ParseError(str(exc), start) from exc
        return ArchimedeanBlock(Kind.DENSE, profile)


def parse(text: str):
    """Parse and flatten a group expression."""
    parser = _Parser(text)
    g = parser.group()
    kind, val, pos = parser.peek()
    if kind != "end":
        raise ParseError(f"trailing input {val!r}", pos)
    return flatten(g)


def _profile_text(profile):
    items = [f"{p}:{'inf' if is_inf(e) else e}" for p, e in profile.exceptions]
    body = ",".join(items)
    if profile.default_exp:
        body += "; default:1" if body else "; default:1"
    return "{" + body + "}"


def to_text(g) -> str:
    if isinstance(g, ArchimedeanBlock):
        if g.kind is Kind.DISCRETE:
            return "Z"
        if g.profile == DivisibilityProfile(0):
            return "Q"
        return "dense" + _profile_text(g.profile)
    if isinstance(g, OmegaRepeat):
        return f"omega({to_text(g.block)})"
    if isinstance(g, ZLocAllPrimes):
        return "zhat_primes"
    if isinstance(g, Lex):
        return "lex(" + ", ".join(to_text(c) for c in g.parts) + ")"
    raise InputError(f"not a group expression: {g!r}")


def normalize(text: str) -> str:
    return to_text(parse(text))
