"""k_p, P_infinity, c_G, dp-rank and strong-dependence verdicts with witnesses.

The dp-rank values are the closed-form invariants

    reduct:  c_G + sum_{p in P_inf} k_p   (1 when P_inf is empty)
    full:    1 + sum_{p in P_inf} k_p

valid for groups with finite spines; ``ALEPH0`` is reported otherwise.  They
are computed invariants, not measurements over indiscernible sequences.
Witnesses are families of ladder subgroups whose every proper subintersection
has infinite index over the full intersection; ``verify_family`` rechecks that
with the exact index.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .arith import INF, is_inf
from .core import (ConvexSubgroup, OmegaRepeat, ZLocAllPrimes, block_at, index_exp,
                   is_finite, parts, prefix_length, segment_exp, tail, whole, zero)
from .errors import InfiniteSpine, NotFiniteRank
from .ladders import Ambient, LadderSubgroup, index, intersect_all
from .spines import Spine, definable_convex_subgroups, spine

ALEPH0 = INF


class Verdict(enum.Enum):
    DP_MINIMAL = "DpMinimal"
    FINITE_RANK = "StronglyDependentFiniteRank"
    NOT_STRONGLY_DEPENDENT = "NotStronglyDependent"


def p_infinity(g):
    """Primes p with [G : pG] infinite, or None when there are infinitely many."""
    found = set()
    for i in range(prefix_length(g)):
        found |= {p for p, e in block_at(g, i).profile.exceptions if is_inf(e)}
    last = parts(g)[-1]
    if isinstance(last, OmegaRepeat):
        prof = last.block.profile
        if prof.default_exp:
            return None
        found |= {p for p, e in prof.exceptions if e != 0}
    return frozenset(found)


def listed_primes(g):
    """Primes named in some block profile (excluding the all-primes component)."""
    found = set()
    for i in range(prefix_length(g)):
        found |= {p for p, _ in block_at(g, i).profile.exceptions}
    last = parts(g)[-1]
    if isinstance(last, OmegaRepeat):
        found |= {p for p, _ in last.block.profile.exceptions}
    return found


def has_finite_spines(g) -> bool:
    last = parts(g)[-1]
    if isinstance(last, OmegaRepeat):
        return last.block.profile.divisible
    return True


def s_infinity(g, p: int) -> list:
    """Members H of S_p whose successor in S_p + {G} has H-quotient of infinite p-index."""
    sp = spine(g, p)
    if not sp.finite:
        raise InfiniteSpine(p)
    chain = list(sp.members) + [whole(g)]
    return [lo for lo, hi in zip(chain, chain[1:])
            if is_inf(segment_exp(g, hi.cut, lo.cut, p))]


def k_p(g, p: int) -> int:
    return len(s_infinity(g, p))


def c_G(g):
    """(c_G, container) where container is a proper definable convex subgroup
    strictly above every max S_p^inf, or None."""
    P = p_infinity(g)
    if not P or not has_finite_spines(g):
        return 0, None
    tops = [s_infinity(g, p)[-1] for p in sorted(P)]
    top = min(tops, key=lambda h: h.cut)
    defs, _ = definable_convex_subgroups(g)
    above = [h for h in defs if h.properly_contains(top) and h != whole(g)]
    if not above:
        return 0, None
    return 1, above[0]


def _finite_rank_data(g):
    P = p_infinity(g)
    if P is None or not has_finite_spines(g):
        return None
    return P, {p: k_p(g, p) for p in sorted(P)}


def dp_rank_reduct(g):
    data = _finite_rank_data(g)
    if data is None:
        return ALEPH0
    P, ks = data
    if not P:
        return 1
    return c_G(g)[0] + sum(ks.values())


def dp_rank(g):
    data = _finite_rank_data(g)
    if data is None:
        return ALEPH0
    return 1 + sum(data[1].values())


@dataclass(frozen=True)
class FamilyMember:
    p: int
    exponent: int
    subgroup: ConvexSubgroup
    ladder: LadderSubgroup


@dataclass(frozen=True)
class InpFamily:
    members: tuple
    ambient: Ambient | None = None

    def ladders(self):
        return [m.ladder for m in self.members]


@dataclass(frozen=True)
class ProperContainer:
    subgroup: ConvexSubgroup
    ladder: LadderSubgroup | None = None


@dataclass(frozen=True)
class InfiniteSpineChain:
    """First members G_(beta_i) + p^(i+1) G of an infinite-depth pattern.

    They live on ``ambient``: the group with its repeated component replaced by
    one omega-run followed by ``len(ladders)`` further infinite runs, a segment
    of an elementary extension in which consecutive spine members are
    separated by infinitely many blocks.
    """

    p: int
    ladders: tuple
    ambient: Ambient
    description: str = ""


def verify_family(ladders, ambient=None) -> bool:
    """Each subintersection omitting one member has infinite index over the full one."""
    ladders = list(ladders)
    if not ladders:
        return True
    full = intersect_all(ladders)
    for i0 in range(len(ladders)):
        rest = ladders[:i0] + ladders[i0 + 1:]
        sub = intersect_all(rest) if rest else LadderSubgroup(full.ambient, (1,) * len(full.ambient))
        if not is_inf(index(sub, full)):
            return False
    return True


def inp_witness(g):
    """Family {H_(p,j) + p^j G : p in P_inf, 1 <= j <= k_p} plus the c_G container."""
    data = _finite_rank_data(g)
    if data is None:
        raise NotFiniteRank(f"{g} is not of finite dp-rank")
    P, _ = data
    if not is_finite(g):
        # finite rank on an infinite presentation means P_inf is empty here
        return InpFamily(()), None
    members = []
    for p in sorted(P):
        for j, h in enumerate(s_infinity(g, p), start=1):
            members.append(FamilyMember(p, j, h, LadderSubgroup.tail_plus(g, h.cut, p ** j)))
    c, cont = c_G(g)
    container = ProperContainer(cont, LadderSubgroup.tail(g, cont.cut)) if c else None
    return InpFamily(tuple(members), Ambient.of(g)), container


def infinite_spine_chain(g, first_k: int = 4) -> InfiniteSpineChain:
    last = parts(g)[-1]
    sp = _infinite_spine(g)
    if sp is None:
        raise NotFiniteRank(f"{g} has finite spines")
    p, _ = sp.infinite
    L = prefix_length(g)
    prefix = [block_at(g, i) for i in range(L)]
    blocks = tuple(prefix + [last.block] * (first_k + 1))
    runs = (False,) * L + (True,) * (first_k + 1)
    amb = Ambient(blocks, runs)
    # run L + j + 1 starts the tail T_j; beta_i is T_(k-1-i), ascending in i
    ladders = []
    for i in range(first_k):
        c = L + first_k - i
        ladders.append(LadderSubgroup.tail_plus(amb, c, p ** (i + 1)))
    desc = f"{L} prefix blocks, one omega-run and {first_k} further runs of the repeated block"
    return InfiniteSpineChain(p, tuple(ladders), amb, desc)


def _infinite_spine(g) -> Spine | None:
    last = parts(g)[-1]
    if not isinstance(last, OmegaRepeat) or last.block.profile.divisible:
        return None
    prof = last.block.profile
    p = 2 if prof.default_exp else next(q for q, e in prof.exceptions if e != 0)
    return spine(g, p)


@dataclass(frozen=True)
class PrimeData:
    p: int
    spine: Spine
    s_infinity: tuple | None
    k_p: int | None


@dataclass(frozen=True)
class RankReport:
    group: object
    p_infinity: frozenset | None
    primes: tuple
    c_G: int
    dp_rank_reduct: int | float
    dp_rank: int | float
    verdict: Verdict
    witnesses: tuple = field(default=())

    def k(self, p):
        for d in self.primes:
            if d.p == p:
                return d.k_p
        return 0


def verdict(g, first_k: int = 4) -> RankReport:
    P = p_infinity(g)
    primes = sorted((P or set()) | listed_primes(g))
    sp_inf = _infinite_spine(g)
    if sp_inf is not None:
        primes = sorted(set(primes) | {sp_inf.infinite[0]})
    pdata = []
    for p in primes:
        sp = spine(g, p)
        if sp.finite:
            s = tuple(s_infinity(g, p))
            pdata.append(PrimeData(p, sp, s, len(s)))
        else:
            pdata.append(PrimeData(p, sp, None, None))
    rank = dp_rank(g)
    reduct = dp_rank_reduct(g)
    c, _ = c_G(g)
    witnesses = []
    if is_inf(rank):
        v = Verdict.NOT_STRONGLY_DEPENDENT
        witnesses.append(infinite_spine_chain(g, first_k))
    else:
        v = Verdict.DP_MINIMAL if rank == 1 else Verdict.FINITE_RANK
        family, container = inp_witness(g)
        if family.members:
            witnesses.append(family)
        if container is not None:
            witnesses.append(container)
    return RankReport(g, P, tuple(pdata), c, reduct, rank, v, tuple(witnesses))


def report_family_ladders(report: RankReport):
    """All ladders of the finite-rank pattern: family members plus container."""
    out = []
    for w in report.witnesses:
        if isinstance(w, InpFamily):
            out.extend(w.ladders())
        elif isinstance(w, ProperContainer):
            out.append(w.ladder)
    return out


@dataclass(frozen=True)
class Antiregularity:
    p: int
    antiregular: bool
    rank_one_kernel: ConvexSubgroup
    p_divisible_kernel: ConvexSubgroup | None
    coarsening: tuple | None


def antiregularity(g, p: int) -> Antiregularity:
    """A presented group always has the rank-one quotient G/tail(1).

    ``p_divisible_kernel`` is the smallest H with G/H non-trivial and
    p-divisible, if any.  ``coarsening`` is (kind, H) built from the largest
    member of S_p, for G not p-divisible: kind "rank_one" when G/H_p is
    archimedean, else "p_divisible" with G/H p-divisible.
    """
    L = prefix_length(g)
    lead = 0
    while lead < L and block_at(g, lead).exp(p) == 0:
        lead += 1
    p_div = index_exp(g, p) == 0
    if p_div:
        pdk = zero(g)
    elif lead >= 1:
        pdk = tail(lead)
    else:
        pdk = None
    coarsening = None
    if not p_div:
        i0 = lead if lead < L else _first_bad_index(g, p)
        coarsening = ("rank_one", tail(1)) if i0 == 0 else ("p_divisible", tail(i0))
    return Antiregularity(p, False, tail(1), pdk, coarsening)


def _first_bad_index(g, p):
    last = parts(g)[-1]
    L = prefix_length(g)
    if isinstance(last, ZLocAllPrimes):
        from .arith import prime_index
        return L + prime_index(p)
    return L
