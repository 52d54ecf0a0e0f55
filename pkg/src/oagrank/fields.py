"""Rule engine for henselian valued fields given as descriptors.

Fields are not computed with: a ``FieldDescriptor`` records the characteristic,
a coarse class and tri-state hypotheses.  The engine derives the flags forced
by those hypotheses, audits the necessary conditions a henselian valuation on
a strongly dependent field must satisfy, and routes the transfer argument
through the characteristic cases.

Rule identifiers (stable, used in reports):

    descriptor-consistency        stated flags contradict derived ones
    residue-strongly-dependent    residue field must be strongly dependent
    residue-perfect               ... and hence perfect
    value-group-strongly-dependent
    equichar-kaplansky            char (p, p): the valued field is Kaplansky
    core-p-divisible              char (0, p): convex subgroup below v(p) is p-divisible
    bounded-ramification-or-p-divisible-core
                                  char (0, p): [0, v(p)] finite, or a non-trivial
                                  p-divisible convex subgroup exists
    unbounded-ramification-infinite-residue
                                  char (0, p): [0, v(p)] infinite forces Kv infinite
    infinite-residue-p-divisible-core
                                  char (0, p): Kv infinite forces the archimedean
                                  class of v(p) to be dense and p-divisible
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .arith import is_inf, is_prime, prime_index
from .core import (ConvexSubgroup, GroupExpr, Kind, OmegaRepeat, ZLocAllPrimes, block_at,
                   index_exp, n_blocks, parts, prefix_length, segment_exp, tail, whole, zero)
from .errors import BadBlock, DescriptorError, NotHenselian, NotResidueCharP
from .rank import Verdict as GroupVerdict, antiregularity, verdict as group_verdict


class Tri(enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


class FieldClass(enum.Enum):
    ALGEBRAICALLY_CLOSED = "algebraically_closed"
    SEPARABLY_CLOSED = "separably_closed"
    REAL_CLOSED = "real_closed"
    FINITE = "finite"
    OTHER = "other"


FLAGS = ("strongly_dependent", "perfect", "artin_schreier_closed",
         "no_sep_ext_degree_div_p")


@dataclass(frozen=True)
class FieldDescriptor:
    characteristic: int
    field_class: FieldClass = FieldClass.OTHER
    q: int | None = None
    strongly_dependent: Tri = Tri.UNKNOWN
    perfect: Tri = Tri.UNKNOWN
    artin_schreier_closed: Tri = Tri.UNKNOWN
    no_sep_ext_degree_div_p: Tri = Tri.UNKNOWN

    def __post_init__(self):
        c = self.characteristic
        if not (c == 0 or is_prime(c)):
            raise DescriptorError(f"characteristic must be 0 or a prime, got {c!r}")
        if self.field_class is FieldClass.FINITE:
            if c == 0 or self.q is None or not _is_power_of(self.q, c):
                raise DescriptorError("a finite field needs q a power of the characteristic")
        if self.field_class is FieldClass.REAL_CLOSED and c != 0:
            raise DescriptorError("real closed fields have characteristic 0")

    @property
    def finite(self):
        return self.field_class is FieldClass.FINITE


def _is_power_of(q, p):
    if not isinstance(q, int) or q < p:
        return False
    while q % p == 0:
        q //= p
    return q == 1


def _derived(fd: FieldDescriptor):
    """Flags implied by the class and characteristic alone."""
    d = {}
    cls = fd.field_class
    if cls is FieldClass.FINITE:
        d.update(strongly_dependent=Tri.YES, perfect=Tri.YES,
                 artin_schreier_closed=Tri.NO, no_sep_ext_degree_div_p=Tri.NO)
    elif cls is FieldClass.ALGEBRAICALLY_CLOSED:
        d.update(strongly_dependent=Tri.YES, perfect=Tri.YES,
                 artin_schreier_closed=Tri.YES, no_sep_ext_degree_div_p=Tri.YES)
    elif cls is FieldClass.SEPARABLY_CLOSED:
        d.update(artin_schreier_closed=Tri.YES, no_sep_ext_degree_div_p=Tri.YES)
    elif cls is FieldClass.REAL_CLOSED:
        d.update(strongly_dependent=Tri.YES)
    if fd.characteristic == 0:
        d["perfect"] = Tri.YES
    return d


@dataclass
class Violation:
    rule: str
    message: str

    def __str__(self):
        return f"[{self.rule}] {self.message}"


def resolve(fd: FieldDescriptor, forced=None, who="field"):
    """Merge stated, derived and externally forced flags.

    Returns (flags, conflicts).  A stated or derived NO against a YES from a
    stronger source is a conflict; the YES wins in ``flags``.
    """
    forced = forced or {}
    flags = {name: getattr(fd, name) for name in FLAGS}
    conflicts = []
    for source, extra in (("derived", _derived(fd)), ("forced", forced)):
        for name, val in extra.items():
            cur = flags[name]
            if cur is Tri.UNKNOWN:
                flags[name] = val
            elif cur is not val:
                conflicts.append(Violation("descriptor-consistency",
                                           f"{who}.{name} is {cur.value} but {source} value is {val.value}"))
                if val is Tri.YES and source == "derived":
                    flags[name] = val
    if flags["strongly_dependent"] is Tri.YES:
        if flags["perfect"] is Tri.NO:
            conflicts.append(Violation("descriptor-consistency",
                                       f"{who} is strongly dependent but declared imperfect"))
        flags["perfect"] = Tri.YES
    return flags, conflicts


@dataclass(frozen=True)
class ValuedFieldDescriptor:
    base: FieldDescriptor
    residue: FieldDescriptor
    value_group: GroupExpr
    v_of_p: int | None = None
    henselian: bool = True

    def __post_init__(self):
        k, r = self.base.characteristic, self.residue.characteristic
        if not (k == r or (k == 0 and r > 0)):
            raise DescriptorError(f"illegal characteristic pair ({k}, {r})")
        if self.mixed and self.v_of_p is None:
            raise DescriptorError("mixed characteristic needs the block of v(p)")
        if not self.mixed and self.v_of_p is not None:
            raise DescriptorError("v(p) is only marked in mixed characteristic")

    @property
    def p(self):
        return self.residue.characteristic

    @property
    def mixed(self):
        return self.base.characteristic == 0 and self.residue.characteristic > 0

    @property
    def equichar_p(self):
        return self.base.characteristic > 0


def _base_sd(vf):
    flags, _ = resolve(vf.base, who="base")
    return flags["strongly_dependent"]


def residue_flags(vf):
    """Residue flags after the consequences of a strongly dependent henselian base."""
    forced = {}
    if vf.henselian and _base_sd(vf) is Tri.YES:
        forced.update(strongly_dependent=Tri.YES, perfect=Tri.YES)
        if vf.equichar_p:
            forced.update(artin_schreier_closed=Tri.YES, no_sep_ext_degree_div_p=Tri.YES)
    return resolve(vf.residue, forced, who="residue")


@dataclass
class KaplanskyResult:
    holds: bool | None
    clauses: dict
    forced: bool


def kaplansky_check(vf: ValuedFieldDescriptor) -> KaplanskyResult:
    p = vf.p
    if p == 0:
        raise NotResidueCharP("the Kaplansky condition needs residue characteristic p > 0")
    g = vf.value_group
    pdiv = index_exp(g, p) == 0
    stated, _ = resolve(vf.residue, who="residue")
    forced = vf.henselian and vf.equichar_p and _base_sd(vf) is Tri.YES
    clauses = {
        "value_group_p_divisible": (Tri.YES if pdiv else Tri.NO,
                                    f"[G : {p}G] = {p}^{_fmt(index_exp(g, p))}"),
        "residue_perfect": (stated["perfect"], "residue flag"),
        "no_sep_ext_degree_div_p": (stated["no_sep_ext_degree_div_p"], "residue flag"),
    }
    if forced:
        for name in ("residue_perfect", "no_sep_ext_degree_div_p"):
            val, _ = clauses[name]
            if val is Tri.UNKNOWN:
                clauses[name] = (Tri.YES, "forced: strongly dependent base of characteristic p")
    vals = [v for v, _ in clauses.values()]
    if Tri.NO in vals:
        holds = False
    elif Tri.UNKNOWN in vals:
        holds = None
    else:
        holds = True
    return KaplanskyResult(holds, clauses, forced)


def _fmt(e):
    return "inf" if is_inf(e) else str(e)


def delta_p(g, p: int) -> ConvexSubgroup:
    """Largest p-divisible convex subgroup."""
    if index_exp(g, p) == 0:
        return whole(g)
    last = parts(g)[-1]
    if isinstance(last, OmegaRepeat) and last.block.exp(p) != 0:
        return zero(g)
    if isinstance(last, ZLocAllPrimes):
        return tail(prefix_length(g) + prime_index(p) + 1)
    last_bad = max(i for i in range(prefix_length(g)) if block_at(g, i).exp(p) != 0)
    return tail(last_bad + 1)


class Ramification(enum.Enum):
    FINITE = "Finite"
    INFINITE = "Infinite"


def standard_decomposition(g, b: int):
    """(Delta0, Delta, ramification) for v(p) in block b.

    Delta0 is the largest convex subgroup missing v(p), Delta the smallest one
    containing it; [0, v(p)] is finite iff Delta0 = 0 and block b is discrete.
    """
    n = n_blocks(g)
    if not isinstance(b, int) or b < 0 or (not is_inf(n) and b >= n):
        raise BadBlock(f"block {b!r} out of range")
    d0, d = tail(b + 1), tail(b)
    finite = d0 == zero(g) and block_at(g, b).kind is Kind.DISCRETE
    return d0, d, Ramification.FINITE if finite else Ramification.INFINITE


def audit_necessary(vf: ValuedFieldDescriptor) -> list:
    if not vf.henselian or _base_sd(vf) is not Tri.YES:
        raise DescriptorError("the audit assumes a strongly dependent base with henselian v")
    out = []
    _, base_conf = resolve(vf.base, who="base")
    out.extend(base_conf)
    res, res_conf = residue_flags(vf)
    out.extend(res_conf)
    for v in res_conf:
        if ".strongly_dependent" in v.message:
            out.append(Violation("residue-strongly-dependent", "the residue field must be strongly dependent"))
        if ".perfect" in v.message or "imperfect" in v.message:
            out.append(Violation("residue-perfect", "the residue field must be perfect"))
    g = vf.value_group
    if group_verdict(g).verdict is GroupVerdict.NOT_STRONGLY_DEPENDENT:
        out.append(Violation("value-group-strongly-dependent",
                             f"value group {g} is not strongly dependent"))
    p = vf.p
    if vf.equichar_p:
        if index_exp(g, p) != 0:
            out.append(Violation("equichar-kaplansky",
                                 f"value group must be {p}-divisible"))
        if vf.residue.finite:
            out.append(Violation("equichar-kaplansky",
                                 "residue field must be Artin-Schreier closed, hence infinite"))
    if vf.mixed:
        d0, d, ram = standard_decomposition(g, vf.v_of_p)
        if segment_exp(g, d0.cut, n_blocks(g), p) != 0:
            out.append(Violation("core-p-divisible",
                                 f"the convex subgroup below v(p) must be {p}-divisible"))
        if ram is Ramification.INFINITE and delta_p(g, p) == zero(g):
            out.append(Violation("bounded-ramification-or-p-divisible-core",
                                 f"[0, v(p)] is infinite and no non-trivial {p}-divisible "
                                 "convex subgroup exists"))
        if ram is Ramification.INFINITE and vf.residue.finite:
            out.append(Violation("unbounded-ramification-infinite-residue",
                                 "[0, v(p)] is infinite but the residue field is finite"))
        if not vf.residue.finite and block_at(g, vf.v_of_p).exp(p) != 0:
            out.append(Violation("infinite-residue-p-divisible-core",
                                 f"infinite residue field needs the class of v(p) to be "
                                 f"{p}-divisible"))
    return out


class Status(enum.Enum):
    STRONGLY_DEPENDENT = "StronglyDependent"
    NOT_STRONGLY_DEPENDENT = "NotStronglyDependent"
    INCONSISTENT = "Inconsistent"
    UNDETERMINED = "Undetermined"


@dataclass
class FieldVerdict:
    status: Status
    case: str | None = None
    derivation: list = field(default_factory=list)
    violations: list = field(default_factory=list)
    missing: list = field(default_factory=list)
    defectless: bool | None = None
    algebraically_maximal: bool | None = None
    kaplansky: bool | None = None


def transfer_verdict(vf: ValuedFieldDescriptor) -> FieldVerdict:
    if not vf.henselian:
        raise NotHenselian("the transfer rules need a henselian valuation")
    sd = _base_sd(vf)
    if sd is Tri.UNKNOWN:
        return FieldVerdict(Status.UNDETERMINED, missing=["base.strongly_dependent"],
                            derivation=["base strong dependence unknown; no rule applies"])
    if sd is Tri.NO:
        return FieldVerdict(Status.NOT_STRONGLY_DEPENDENT, derivation=[
            "reduct: a strongly dependent (K, v) has strongly dependent field reduct K"])
    trail = ["hypothesis: K strongly dependent, v henselian",
             "residue-strongly-dependent: Kv is strongly dependent, hence perfect",
             "value-group-strongly-dependent: vK is strongly dependent"]
    violations = audit_necessary(vf)
    if violations:
        return FieldVerdict(Status.INCONSISTENT, derivation=trail, violations=violations)
    vg = group_verdict(vf.value_group)
    trail.append(f"value group {vf.value_group}: {vg.verdict.value}, dp-rank {_fmt(vg.dp_rank)}")
    out = FieldVerdict(Status.STRONGLY_DEPENDENT, derivation=trail)
    if not vf.residue.characteristic:
        out.case = "equicharacteristic-zero"
        trail.append("equicharacteristic-zero: strongly dependent residue field and value "
                     "group transfer to (K, v)")
    elif vf.equichar_p:
        out.case = "equicharacteristic-p"
        trail.append("equichar-kaplansky: (K, v) is an algebraically maximal Kaplansky field")
        trail.append("Kaplansky transfer: residue field and value group strongly dependent")
        out.kaplansky = True
    else:
        d0, d, ram = standard_decomposition(vf.value_group, vf.v_of_p)
        trail.append(f"decomposition at v(p): Delta0={d0}, Delta={d}, ramification {ram.value}")
        trail.append("coarsening to vK/Delta: equicharacteristic zero, strongly dependent")
        trail.append("core valuation on Delta0: equicharacteristic p, Kaplansky")
        if vf.residue.finite:
            out.case = "mixed-finite-residue"
            trail.append("finite residue field is not separably closed: v is definable in "
                         "the Shelah expansion")
        else:
            out.case = "mixed-infinite-residue"
            trail.append("middle valuation: unboundedly ramified with p-divisible archimedean "
                         "value group, Kaplansky")
            trail.append("justification only: saturation makes the middle valued field "
                         "spherically complete, hence algebraically maximal")
            trail.append("stable embeddedness transfer applied twice")
        out.kaplansky = kaplansky_check(vf).holds
    out.defectless = True
    out.algebraically_maximal = True
    trail.append("defectless, hence algebraically maximal")
    return out


def coarsening_candidate(g):
    """(p, H) for non-divisible g: the convex kernel candidate for a definable coarsening."""
    for p in _candidate_primes(g):
        if index_exp(g, p) != 0:
            a = antiregularity(g, p)
            return p, a.coarsening[1]
    return None


def _candidate_primes(g):
    from .rank import listed_primes
    from sympy import primerange
    return sorted(listed_primes(g) | set(primerange(2, 30)))


def dp_minimal_transfer(vf: ValuedFieldDescriptor, base_dp_minimal: bool) -> FieldVerdict:
    """Dp-minimal base with henselian v: (K, v) is dp-minimal.

    Reuses the strong-dependence engine (dp-minimal fields are strongly
    dependent) and adds the value-group clause that vK be dp-minimal.
    """
    if not vf.henselian:
        raise NotHenselian("the transfer rules need a henselian valuation")
    if not base_dp_minimal:
        return FieldVerdict(Status.UNDETERMINED, missing=["base.dp_minimal"],
                            derivation=["base field not known to be dp-minimal"])
    out = transfer_verdict(vf)
    if out.status is not Status.STRONGLY_DEPENDENT:
        return out
    vg = group_verdict(vf.value_group)
    if vg.verdict is not GroupVerdict.DP_MINIMAL:
        out.status = Status.INCONSISTENT
        out.violations.append(Violation("value-group-dp-minimal",
                                        f"value group {vf.value_group} has dp-rank {_fmt(vg.dp_rank)}"))
        return out
    out.derivation.append("dp-minimal base: value group dp-minimal, defectless; (K, v) dp-minimal")
    return out
