"""Spines S_n, bracket groups and the definable convex subgroups."""
from __future__ import annotations

from dataclasses import dataclass

from .arith import factor
from .core import (H_n, ConvexSubgroup, OmegaRepeat, ascending, block_at,
                   check_cut, divisible_by, is_finite, parts,
                   prefix_length, tail, zero)
from .errors import BadSubgroup, InputError


@dataclass(frozen=True)
class Spine:
    """Members of S_n as convex subgroups, smallest first.

    When the spine is infinite ``members`` lists the finitely many members
    coming from the finite prefix (plus zero) and ``infinite`` holds
    ``(p, generator_block)``: a prime dividing n for which the repeated block is
    not p-divisible, and the index of its first copy.
    """

    n: int
    members: tuple
    infinite: tuple | None = None

    @property
    def finite(self):
        return self.infinite is None

    def __contains__(self, h):
        return h in self.members


def _non_divisible_prefix(g, n):
    return [i for i in range(prefix_length(g)) if not divisible_by(block_at(g, i), n)]


def spine(g, n: int) -> Spine:
    if not isinstance(n, int) or n < 1:
        raise InputError(f"n must be a positive integer, got {n!r}")
    cuts = {i + 1 for i in _non_divisible_prefix(g, n)}
    infinite = None
    if not is_finite(g):
        last = parts(g)[-1]
        L = prefix_length(g)
        if isinstance(last, OmegaRepeat):
            bad = [p for p, _ in factor(n) if last.block.exp(p) != 0]
            if bad:
                infinite = (bad[0], L)
        else:
            # block L + j is Z_(p_j); only primes dividing n contribute
            from .arith import prime_index
            cuts |= {L + prime_index(p) + 1 for p, _ in factor(n)}
    members = ascending([tail(c) for c in cuts] + [zero(g)])
    return Spine(n, tuple(members), infinite)


def spine_class(x, n, g) -> ConvexSubgroup:
    """The class of x in S_n, identified with the subgroup H_n(x)."""
    return H_n(x, n, g)


def bracket(g, alpha: ConvexSubgroup, m: int):
    """Intersection of H + mG over convex H strictly containing alpha."""
    from .ladders import LadderSubgroup
    if not is_finite(g):
        raise InputError("bracket groups are computed on finite presentations")
    try:
        check_cut(g, alpha.cut)
    except InputError as exc:
        raise BadSubgroup(str(exc)) from exc
    if alpha.cut == 0:
        return LadderSubgroup.whole(g)
    return LadderSubgroup.tail_plus(g, alpha.cut - 1, m)


def definable_convex_subgroups(g, limit: int = 16):
    """Proper definable convex subgroups, smallest first, and whether the list is complete.

    On an infinite presentation with infinitely many of them, the ``limit``
    most dominant ones are returned and zero is left out.
    """
    cuts = {i + 1 for i in range(prefix_length(g)) if not block_at(g, i).profile.divisible}
    if is_finite(g):
        return ascending([tail(c) for c in cuts] + [zero(g)]), True
    last = parts(g)[-1]
    if isinstance(last, OmegaRepeat) and last.block.profile.divisible:
        return ascending([tail(c) for c in cuts] + [zero(g)]), True
    # every block of the infinite component is non-divisible
    found = sorted(cuts)
    c = prefix_length(g) + 1
    while len(found) < limit:
        found.append(c)
        c += 1
    return ascending([tail(c) for c in found[:limit]]), False


def spine_embeds(g, n, m) -> bool:
    """S_n sits inside S_(n*m) as a set of subgroups (finite parts only)."""
    a, b = spine(g, n), spine(g, n * m)
    return set(a.members) <= set(b.members)
