"""Randomized comparison of ladder arithmetic against the integer-lattice model.

Instances are all-Z presentations with at most six blocks and moduli up to
2**20.  Every operation is computed twice, once on ladders and once on the
lattices they embed to, and the results compared exactly.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .arith import INF, is_inf
from .core import Element, lex, Z
from .ladders import (LadderSubgroup, add, decompose_crt, index, intersect,
                      intersect_all, membership)
from .lattice import embed, lattice_index, lattice_intersect, lattice_sum

MAX_MODULUS = 2 ** 20
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13)


@dataclass
class SelftestResult:
    seed: int
    iters: int
    checks: int = 0
    failures: list = field(default_factory=list)

    @property
    def discrepancies(self):
        return len(self.failures)


def all_z(n):
    return lex(*([Z] * n)) if n > 1 else Z


def _smooth(rng, cap):
    m = 1
    for _ in range(rng.randint(0, 6)):
        q = rng.choice(_SMALL_PRIMES)
        if m * q > cap:
            break
        m *= q
    return m


def random_ladder(rng, g, n):
    """Divisibility-monotone moduli, built from the last block upwards."""
    moduli = [0] * n
    below = 1
    for i in range(n - 1, -1, -1):
        if is_inf(below) or rng.random() < 0.15:
            moduli[i] = INF
        else:
            moduli[i] = below * _smooth(rng, MAX_MODULUS // below)
        below = moduli[i]
    return LadderSubgroup.from_moduli(g, moduli)


def random_element(rng, lad):
    """Sometimes a member of ``lad``, sometimes a random vector."""
    coeffs = []
    for i, m in enumerate(lad.moduli):
        if rng.random() < 0.5 and not is_inf(m):
            k = m * rng.randint(-3, 3)
        else:
            k = rng.randint(-40, 40) if rng.random() < 0.7 else 0
        coeffs.append(k)
    return Element.from_vector(coeffs)


def run(seed: int = 0, iters: int = 1000) -> SelftestResult:
    rng = random.Random(seed)
    res = SelftestResult(seed, iters)

    def check(ok, what):
        res.checks += 1
        if not ok:
            res.failures.append(what)

    for _ in range(iters):
        n = rng.randint(1, 6)
        g = all_z(n)
        a, b = random_ladder(rng, g, n), random_ladder(rng, g, n)
        la, lb = embed(g, a), embed(g, b)
        check(embed(g, intersect(a, b)) == lattice_intersect(la, lb), ("intersect", a, b))
        check(embed(g, add(a, b)) == lattice_sum(la, lb), ("sum", a, b))
        inside = all(row in la for row in lb.basis)
        check(a.contains(b) == inside, ("contains", a, b))
        c = intersect(a, b)
        check(index(a, c) == lattice_index(la, embed(g, c)), ("index", a, c))
        x = random_element(rng, a)
        check(membership(x, a) == (x.vector(n) in la), ("membership", x, a))
        parts = [part for _, part in decompose_crt(a)]
        check(intersect_all(parts) == a, ("crt", a))
    return res
