"""Definable subgroups in ladder form and their cosets.

A ladder subgroup is the blockwise sum of m_i * B_i, stored as the modulus
vector (m_i), with INF meaning the zero subgroup on that block.  Tails and the
groups H + nG are ladders, and ladders are closed under intersection (blockwise
lcm) and sum (blockwise gcd).  The vector is kept divisibility-monotone
(m_(i+1) divides m_i) and canonical: the blockwise least such vector
describing the same set, so dataclass equality is set equality.

An ``Ambient`` is the list of blocks a ladder lives on.  A slot may be a
*run*, an infinite stretch of copies of one block with no cut inside it; runs
only appear in the model built for infinite-spine witnesses.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import INF, factor, gcd_inf, is_inf, lcm_inf, vp
from .core import Element, block_modulus, finite_blocks
from .errors import AmbientMismatch, InputError, NotASubgroupOf


@dataclass(frozen=True)
class Ambient:
    blocks: tuple
    runs: tuple = None

    def __post_init__(self):
        if self.runs is None:
            object.__setattr__(self, "runs", (False,) * len(self.blocks))
        if len(self.runs) != len(self.blocks):
            raise InputError("runs and blocks differ in length")
        if not self.blocks:
            raise InputError("empty ambient")

    @classmethod
    def of(cls, g):
        if isinstance(g, Ambient):
            return g
        return cls(tuple(finite_blocks(g)))

    def __len__(self):
        return len(self.blocks)

    @property
    def has_runs(self):
        return any(self.runs)


def _canonical(amb, moduli):
    out = [None] * len(moduli)
    below = 1
    for i in range(len(moduli) - 1, -1, -1):
        m = moduli[i]
        out[i] = lcm_inf(block_modulus(amb.blocks[i], m), below)
        below = out[i]
    return tuple(out)


def _check_moduli(moduli):
    for m in moduli:
        if not (is_inf(m) or (isinstance(m, int) and m >= 1)):
            raise InputError(f"modulus must be a positive integer or inf, got {m!r}")
    for a, b in zip(moduli, moduli[1:]):
        # INF divides only INF; every m divides INF
        if not (is_inf(a) or (not is_inf(b) and a % b == 0)):
            raise InputError(f"moduli {moduli} are not divisibility-monotone")


@dataclass(frozen=True)
class LadderSubgroup:
    ambient: Ambient
    moduli: tuple

    def __post_init__(self):
        moduli = tuple(self.moduli)
        if len(moduli) != len(self.ambient):
            raise InputError(f"{len(moduli)} moduli for {len(self.ambient)} blocks")
        _check_moduli(moduli)
        object.__setattr__(self, "moduli", _canonical(self.ambient, moduli))

    @classmethod
    def from_moduli(cls, g, moduli):
        return cls(Ambient.of(g), tuple(moduli))

    @classmethod
    def whole(cls, g):
        amb = Ambient.of(g)
        return cls(amb, (1,) * len(amb))

    @classmethod
    def zero(cls, g):
        amb = Ambient.of(g)
        return cls(amb, (INF,) * len(amb))

    @classmethod
    def tail(cls, g, c):
        """The convex subgroup of blocks with index >= c."""
        amb = Ambient.of(g)
        return cls(amb, tuple(INF if i < c else 1 for i in range(len(amb))))

    @classmethod
    def tail_plus(cls, g, c, n):
        """tail(c) + nG; n may be INF, giving tail(c)."""
        amb = Ambient.of(g)
        return cls(amb, tuple(n if i < c else 1 for i in range(len(amb))))

    @classmethod
    def multiple(cls, g, n):
        amb = Ambient.of(g)
        return cls(amb, (n,) * len(amb))

    def __repr__(self):
        body = ",".join("inf" if is_inf(m) else str(m) for m in self.moduli)
        return f"Ladder({body})"

    def contains(self, other: "LadderSubgroup") -> bool:
        """other is a subgroup of self."""
        _same(self, other)
        for blk, a, b in zip(self.ambient.blocks, self.moduli, other.moduli):
            if is_inf(b):
                continue
            if is_inf(a) or block_modulus(blk, b) % block_modulus(blk, a):
                return False
        return True

    def __le__(self, other):
        return other.contains(self)

    def __ge__(self, other):
        return self.contains(other)


def _same(a, b):
    if a.ambient != b.ambient:
        raise AmbientMismatch("ladders live on different groups")


def intersect(a: LadderSubgroup, b: LadderSubgroup) -> LadderSubgroup:
    _same(a, b)
    return LadderSubgroup(a.ambient, tuple(lcm_inf(x, y) for x, y in zip(a.moduli, b.moduli)))


def add(a: LadderSubgroup, b: LadderSubgroup) -> LadderSubgroup:
    _same(a, b)
    return LadderSubgroup(a.ambient, tuple(gcd_inf(x, y) for x, y in zip(a.moduli, b.moduli)))


def intersect_all(ladders):
    ladders = list(ladders)
    out = ladders[0]
    for lad in ladders[1:]:
        out = intersect(out, lad)
    return out


def index(a: LadderSubgroup, b: LadderSubgroup):
    """[a : b] for b contained in a; INF for an infinite index."""
    _same(a, b)
    if not a.contains(b):
        raise NotASubgroupOf(f"{b} is not a subgroup of {a}")
    total = 1
    for blk, run, ma, mb in zip(a.ambient.blocks, a.ambient.runs, a.moduli, b.moduli):
        if ma == mb:
            continue
        if is_inf(mb):
            return INF
        for p, _ in factor(mb):
            e = blk.exp(p)
            dv = vp(mb, p) - vp(ma, p)
            if e == 0 or dv == 0:
                continue
            if is_inf(e) or run:
                return INF
            total *= p ** (e * dv)
    return total


def decompose_crt(a: LadderSubgroup):
    """Split into p-primary ladders whose intersection is a.

    A ladder with no finite modulus > 1 (a pure convex subgroup) has no prime
    parts and comes back as ``[(None, a)]``.
    """
    primes = sorted({p for m in a.moduli if not is_inf(m) for p, _ in factor(m)})
    if not primes:
        return [(None, a)]
    return [(p, LadderSubgroup(a.ambient,
                               tuple(INF if is_inf(m) else p ** vp(m, p) for m in a.moduli)))
            for p in primes]


def membership(x: Element, a: LadderSubgroup) -> bool:
    if a.ambient.has_runs:
        raise InputError("elements are not defined on a model with runs")
    for i, k in x.coeffs:
        if i >= len(a.ambient):
            raise InputError(f"element uses block {i} outside the group")
        m = a.moduli[i]
        if is_inf(m):
            return False
        if k % block_modulus(a.ambient.blocks[i], m):
            return False
    return True


def _crt(r1, m1, r2, m2):
    """Solve y = r1 (mod m1), y = r2 (mod m2); None when inconsistent."""
    g = math.gcd(m1, m2)
    if (r2 - r1) % g:
        return None
    l = m1 // g * m2
    if l == 1:
        return 0
    t = ((r2 - r1) // g) * pow(m1 // g, -1, m2 // g) if m2 // g > 1 else 0
    return (r1 + m1 * t) % l


@dataclass(frozen=True)
class Coset:
    base: Element
    group: LadderSubgroup

    def __post_init__(self):
        amb = self.group.ambient
        if amb.has_runs:
            raise InputError("cosets need a finite presentation")
        coeffs = []
        for i, k in self.base.coeffs:
            if i >= len(amb):
                raise InputError(f"element uses block {i} outside the group")
            m = self.group.moduli[i]
            coeffs.append((i, k if is_inf(m) else k % block_modulus(amb.blocks[i], m)))
        object.__setattr__(self, "base", Element(tuple(coeffs)))

    def __contains__(self, x):
        return membership(x - self.base, self.group)


def coset_intersect(c1: Coset, c2: Coset):
    """The intersection as a Coset, or None when empty."""
    _same(c1.group, c2.group)
    amb = c1.group.ambient
    coeffs = []
    for i, blk in enumerate(amb.blocks):
        x1, x2 = c1.base.coeff(i), c2.base.coeff(i)
        a, b = c1.group.moduli[i], c2.group.moduli[i]
        if is_inf(a) and is_inf(b):
            if x1 != x2:
                return None
            y = x1
        elif is_inf(a) or is_inf(b):
            y, other, m = (x1, x2, b) if is_inf(a) else (x2, x1, a)
            if (y - other) % block_modulus(blk, m):
                return None
        else:
            y = _crt(x1, block_modulus(blk, a), x2, block_modulus(blk, b))
            if y is None:
                return None
        coeffs.append((i, y))
    return Coset(Element(tuple(coeffs)), intersect(c1.group, c2.group))
