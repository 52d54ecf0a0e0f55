"""Presented ordered abelian groups.

A group is a lexicographic sum of archimedean blocks, index 0 dominant.  Two
infinite components are available, both only as the last (least dominant)
summand: ``OmegaRepeat`` (one block repeated with order type omega) and
``ZLocAllPrimes`` (the sum over all primes p of Z localised at p, ordered by p).

Blocks carry a ``DivisibilityProfile``: ``exp(p)`` is the exponent with
[B : pB] = p ** exp(p).  Elements use one designated generator e_i per block,
chosen outside pB_i for every prime with exp(p) >= 1, so that

    k * e_i in n * B_i   iff   block_modulus(B_i, n) divides k.

Convex subgroups of a flat presentation are tails: ``tail(c)`` is the set of
elements supported on blocks with index >= c.  ``tail(0)`` is G; the zero
subgroup is ``tail(n_blocks)``, or ``tail(INF)`` on infinite presentations.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from .arith import INF, factor, is_inf, is_prime, nth_prime, prime_index
from .errors import (BadCut, EmptySum, InputError, NonPrimeKey, OmegaOfCompound,
                     UnsupportedGroup)


@dataclass(frozen=True)
class DivisibilityProfile:
    default_exp: int = 0
    exceptions: tuple = ()

    def __post_init__(self):
        if self.default_exp not in (0, 1):
            raise InputError(f"default exponent must be 0 or 1, got {self.default_exp!r}")
        seen = set()
        for p, e in self.exceptions:
            if not is_prime(p):
                raise NonPrimeKey(f"profile key {p!r} is not a prime")
            if p in seen:
                raise InputError(f"prime {p} listed twice")
            seen.add(p)
            if not (is_inf(e) or (isinstance(e, int) and e >= 0)):
                raise InputError(f"bad exponent {e!r} for prime {p}")
            if e == self.default_exp:
                raise InputError(f"exponent for {p} equals the default; profile not canonical")
        object.__setattr__(self, "exceptions", tuple(sorted(self.exceptions)))

    @classmethod
    def of(cls, mapping: Mapping[int, int | float] | None = None, default: int = 0):
        """Build a profile, silently dropping entries equal to the default."""
        items = [(p, e) for p, e in (mapping or {}).items() if e != default]
        return cls(default, tuple(items))

    def exp(self, p: int):
        for q, e in self.exceptions:
            if q == p:
                return e
        return self.default_exp

    @property
    def divisible(self):
        """True when the block is divisible (Q-like)."""
        return self.default_exp == 0 and all(e == 0 for _, e in self.exceptions)


class Kind(enum.Enum):
    DISCRETE = "discrete"
    DENSE = "dense"


class GroupExpr:
    """Base class of group expression nodes."""

    __slots__ = ()

    def __str__(self):
        from .dsl import to_text
        return to_text(self)


@dataclass(frozen=True, repr=False)
class ArchimedeanBlock(GroupExpr):
    kind: Kind
    profile: DivisibilityProfile

    def __post_init__(self):
        if self.kind is Kind.DISCRETE and self.profile != DivisibilityProfile(1):
            raise InputError("a discrete archimedean block is Z; its profile is fixed")

    def exp(self, p):
        return self.profile.exp(p)

    def __repr__(self):
        return f"ArchimedeanBlock({self})"


@dataclass(frozen=True, repr=False)
class Lex(GroupExpr):
    parts: tuple

    def __repr__(self):
        return f"Lex({self})"


@dataclass(frozen=True, repr=False)
class OmegaRepeat(GroupExpr):
    block: ArchimedeanBlock

    def __post_init__(self):
        if not isinstance(self.block, ArchimedeanBlock):
            raise OmegaOfCompound("omega(...) takes a single archimedean block")

    def __repr__(self):
        return f"OmegaRepeat({self})"


@dataclass(frozen=True, repr=False)
class ZLocAllPrimes(GroupExpr):
    def __repr__(self):
        return "ZLocAllPrimes()"


Z = ArchimedeanBlock(Kind.DISCRETE, DivisibilityProfile(1))
Q = ArchimedeanBlock(Kind.DENSE, DivisibilityProfile(0))


def dense(mapping=None, default=0):
    return ArchimedeanBlock(Kind.DENSE, DivisibilityProfile.of(mapping, default))


def lex(*parts):
    return flatten(Lex(tuple(parts)))


def omega(block):
    return OmegaRepeat(block)


def _infinite(node):
    return isinstance(node, (OmegaRepeat, ZLocAllPrimes))


def _collect(g, out):
    if isinstance(g, Lex):
        if not g.parts:
            raise EmptySum("lex() needs at least one summand")
        for child in g.parts:
            _collect(child, out)
    elif isinstance(g, (ArchimedeanBlock, OmegaRepeat, ZLocAllPrimes)):
        out.append(g)
    else:
        raise InputError(f"not a group expression: {g!r}")


def flatten(g: GroupExpr) -> GroupExpr:
    """Remove nested lexicographic sums; a one-part sum collapses to its part."""
    out = []
    _collect(g, out)
    for node in out[:-1]:
        if _infinite(node):
            raise UnsupportedGroup("an infinite component must be the last summand")
    if len(out) == 1:
        return out[0]
    return Lex(tuple(out))


@lru_cache(maxsize=2048)
def parts(g: GroupExpr) -> tuple:
    """Flat tuple of non-Lex components."""
    g = flatten(g)
    return g.parts if isinstance(g, Lex) else (g,)


def is_finite(g) -> bool:
    return not _infinite(parts(g)[-1])


def n_blocks(g):
    """Number of blocks, or INF for infinite presentations."""
    ps = parts(g)
    return INF if _infinite(ps[-1]) else len(ps)


def prefix_length(g) -> int:
    """Number of blocks before the infinite component (all of them if finite)."""
    ps = parts(g)
    return len(ps) - 1 if _infinite(ps[-1]) else len(ps)


def block_at(g, i: int) -> ArchimedeanBlock:
    ps = parts(g)
    L = prefix_length(g)
    if i < 0:
        raise BadCut(f"negative block index {i}")
    if i < L:
        return ps[i]
    last = ps[-1]
    if isinstance(last, OmegaRepeat):
        return last.block
    if isinstance(last, ZLocAllPrimes):
        return dense({nth_prime(i - L): 1})
    raise BadCut(f"block index {i} out of range for {n_blocks(g)} blocks")


def finite_blocks(g) -> tuple:
    if not is_finite(g):
        raise UnsupportedGroup(f"{g} has infinitely many blocks")
    return parts(g)


def require_finite(g):
    if not is_finite(g):
        raise UnsupportedGroup(f"element-level operations need finitely many blocks, got {g}")


@lru_cache(maxsize=8192)
def block_modulus(block: ArchimedeanBlock, n) -> int | float:
    """Smallest positive k with k * e in n * B, for the designated generator e.

    That is the part of n supported on primes p with exp(p) >= 1.  INF for
    n = INF (the zero subgroup).
    """
    if is_inf(n):
        return INF
    m = 1
    for p, a in factor(n):
        if block.exp(p) != 0:
            m *= p ** a
    return m


def divisible_by(block: ArchimedeanBlock, n: int) -> bool:
    return block_modulus(block, n) == 1


@dataclass(frozen=True, order=False)
class ConvexSubgroup:
    """The tail of blocks with index >= cut."""

    cut: int | float

    def __repr__(self):
        return "tail(omega)" if is_inf(self.cut) else f"tail({self.cut})"

    def contains(self, other: "ConvexSubgroup") -> bool:
        return self.cut <= other.cut

    def properly_contains(self, other: "ConvexSubgroup") -> bool:
        return self.cut < other.cut


def tail(c):
    return ConvexSubgroup(c)


def zero(g) -> ConvexSubgroup:
    return ConvexSubgroup(n_blocks(g))


def whole(g) -> ConvexSubgroup:
    return ConvexSubgroup(0)


def check_cut(g, c):
    n = n_blocks(g)
    if is_inf(c):
        if not is_inf(n):
            raise BadCut("cut omega on a finite presentation")
        return
    if not isinstance(c, int) or c < 0 or c > n:
        raise BadCut(f"cut {c!r} outside [0, {n}]")


def ascending(subgroups: Iterable[ConvexSubgroup]) -> list:
    """Sort by inclusion, smallest first."""
    return sorted(set(subgroups), key=lambda h: -h.cut)


def segment_exp(g, c1, c2, p: int):
    """e with [tail(c1)/tail(c2) : p (tail(c1)/tail(c2))] = p**e; INF-absorbing."""
    check_cut(g, c1)
    check_cut(g, c2)
    if c1 > c2:
        raise BadCut(f"cuts out of order: {c1} > {c2}")
    if is_inf(c1):
        return 0
    if not is_inf(c2):
        return sum((block_at(g, i).exp(p) for i in range(c1, c2)), 0)
    L = prefix_length(g)
    total = sum((block_at(g, i).exp(p) for i in range(c1, L)), 0)
    last = parts(g)[-1]
    if isinstance(last, OmegaRepeat):
        if last.block.exp(p) != 0:
            total += INF
    elif L + prime_index(p) >= max(c1, L):
        total += 1
    return total


def index_exp(g, p):
    """e with [G : pG] = p**e."""
    return segment_exp(g, 0, n_blocks(g), p)


@dataclass(frozen=True)
class Element:
    """Finite integer combination of designated block generators."""

    coeffs: tuple = ()

    def __post_init__(self):
        clean = {}
        for i, k in self.coeffs:
            if not isinstance(i, int) or i < 0:
                raise InputError(f"bad block index {i!r}")
            clean[i] = clean.get(i, 0) + int(k)
        object.__setattr__(self, "coeffs",
                           tuple(sorted((i, k) for i, k in clean.items() if k != 0)))

    @classmethod
    def from_vector(cls, vec):
        return cls(tuple(enumerate(vec)))

    @classmethod
    def unit(cls, i, k=1):
        return cls(((i, k),))

    def coeff(self, i):
        return dict(self.coeffs).get(i, 0)

    def vector(self, n):
        return [self.coeff(i) for i in range(n)]

    @property
    def support(self):
        return [i for i, _ in self.coeffs]

    def is_zero(self):
        return not self.coeffs

    def __add__(self, other):
        return Element(self.coeffs + other.coeffs)

    def __neg__(self):
        return Element(tuple((i, -k) for i, k in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, k: int):
        return Element(tuple((i, k * c) for i, c in self.coeffs))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"{k}*e{i}" for i, k in self.coeffs)

    def check(self, g):
        require_finite(g)
        n = n_blocks(g)
        for i in self.support:
            if i >= n:
                raise InputError(f"element uses block {i} but the group has {n} blocks")


def _check_n(n):
    if not isinstance(n, int) or n < 1:
        raise InputError(f"n must be a positive integer, got {n!r}")


def in_nG(x: Element, n: int, g) -> bool:
    _check_n(n)
    x.check(g)
    return all(k % block_modulus(block_at(g, i), n) == 0 for i, k in x.coeffs)


def H_n(x: Element, n: int, g) -> ConvexSubgroup:
    """Largest convex subgroup H with x not in H + nG (zero when x in nG)."""
    _check_n(n)
    x.check(g)
    for i, k in x.coeffs:
        if k % block_modulus(block_at(g, i), n):
            return tail(i + 1)
    return zero(g)


def H_n_minus(x: Element, n: int, g) -> ConvexSubgroup:
    """Union of the H_n(h) that do not contain x; zero when there are none."""
    _check_n(n)
    x.check(g)
    nb = n_blocks(g)
    if x.is_zero():
        return tail(nb)
    m = x.support[0]
    cuts = [i + 1 for i in range(nb) if not divisible_by(block_at(g, i), n)] + [nb]
    return tail(min(c for c in cuts if c > m))
