import pytest
from hypothesis import given, settings, strategies as st

from oagrank.arith import INF
from oagrank.core import Q, Z, ZLocAllPrimes, dense, lex, omega, segment_exp, tail, zero, whole
from oagrank.errors import BadBlock, DescriptorError, NotHenselian, NotResidueCharP
from oagrank.fields import (FieldClass, FieldDescriptor as F, Ramification, Status, Tri,
                            ValuedFieldDescriptor as VF, audit_necessary, coarsening_candidate,
                            delta_p, dp_minimal_transfer, kaplansky_check, resolve,
                            standard_decomposition, transfer_verdict)
from oagrank.rank import Verdict, verdict

from oracles import BLOCK_POOL, group_of, n_of

SD0 = F(0, strongly_dependent=Tri.YES)


def sd(p):
    return F(p, strongly_dependent=Tri.YES)


def test_descriptor_validation():
    with pytest.raises(DescriptorError):
        F(4)
    with pytest.raises(DescriptorError):
        F(3, FieldClass.FINITE, q=8)
    with pytest.raises(DescriptorError):
        F(2, FieldClass.REAL_CLOSED)
    with pytest.raises(DescriptorError):
        VF(F(2), F(3), Q)
    with pytest.raises(DescriptorError):
        VF(F(3), F(0), Q)
    with pytest.raises(DescriptorError):
        VF(SD0, F(2), Z)
    with pytest.raises(DescriptorError):
        VF(F(2), F(2), Z, v_of_p=0)


def test_flag_derivation():
    flags, conf = resolve(F(7, FieldClass.FINITE, q=49))
    assert flags["strongly_dependent"] is Tri.YES and flags["perfect"] is Tri.YES
    assert flags["no_sep_ext_degree_div_p"] is Tri.NO and not conf
    flags, _ = resolve(F(0))
    assert flags["perfect"] is Tri.YES
    _, conf = resolve(F(3, strongly_dependent=Tri.YES, perfect=Tri.NO))
    assert conf and conf[0].rule == "descriptor-consistency"
    _, conf = resolve(F(5, FieldClass.FINITE, q=5, strongly_dependent=Tri.NO))
    assert conf


def test_kaplansky_examples():
    r = kaplansky_check(VF(F(5), F(5, FieldClass.ALGEBRAICALLY_CLOSED), Q))
    assert r.holds is True and not r.forced
    assert kaplansky_check(VF(F(2), F(2), lex(Z))).holds is False
    r = kaplansky_check(VF(sd(3), F(3), Q))
    assert r.forced and r.holds is True
    assert kaplansky_check(VF(F(3), F(3), Q)).holds is None
    with pytest.raises(NotResidueCharP):
        kaplansky_check(VF(SD0, F(0), Q))


def test_delta_p_examples():
    assert delta_p(lex(dense({2: INF}), Q), 2) == tail(1)
    assert delta_p(Q, 2) == whole(Q)
    assert delta_p(lex(Z, Z), 2) == zero(lex(Z, Z))
    assert delta_p(ZLocAllPrimes(), 3) == tail(2)
    assert delta_p(lex(Q, omega(Z)), 2) == zero(lex(Q, omega(Z)))
    assert delta_p(lex(Z, omega(Q)), 2) == tail(1)


def test_standard_decomposition_examples():
    assert standard_decomposition(lex(Z), 0) == (tail(1), tail(0), Ramification.FINITE)
    assert standard_decomposition(lex(dense({2: 1})), 0) == (tail(1), tail(0), Ramification.INFINITE)
    d0, d, ram = standard_decomposition(lex(Z, Q), 0)
    assert d0 == tail(1) and d0 != zero(lex(Z, Q)) and ram is Ramification.INFINITE
    with pytest.raises(BadBlock):
        standard_decomposition(lex(Z, Q), 2)


def test_audit_examples():
    rules = [v.rule for v in audit_necessary(VF(SD0, F(2), lex(dense({2: 1})), v_of_p=0))]
    assert "bounded-ramification-or-p-divisible-core" in rules
    assert audit_necessary(VF(SD0, F(2, FieldClass.FINITE, q=2), lex(Z), v_of_p=0)) == []
    rules = [v.rule for v in audit_necessary(VF(sd(3), F(3), lex(Z)))]
    assert rules == ["equichar-kaplansky"]


def test_audit_more_rules():
    rules = {v.rule for v in audit_necessary(VF(SD0, F(2, FieldClass.FINITE, q=4), lex(Z, Q), v_of_p=0))}
    assert "unbounded-ramification-infinite-residue" in rules
    rules = {v.rule for v in audit_necessary(VF(SD0, F(0), omega(dense({2: 1}))))}
    assert rules == {"value-group-strongly-dependent"}
    rules = {v.rule for v in audit_necessary(VF(SD0, F(3), lex(Q, Z, Z), v_of_p=1))}
    assert "core-p-divisible" in rules
    rules = {v.rule for v in audit_necessary(VF(SD0, F(0, strongly_dependent=Tri.NO), Z))}
    assert "residue-strongly-dependent" in rules
    rules = {v.rule for v in audit_necessary(VF(sd(2), F(2, FieldClass.FINITE, q=2), Q))}
    assert "equichar-kaplansky" in rules
    # a dense 2-divisible class for v(p) with p-divisible core passes
    assert audit_necessary(VF(SD0, F(2), lex(dense({3: 1}), dense({3: INF})), v_of_p=0)) == []


def test_transfer_routing():
    v = transfer_verdict(VF(SD0, sd(0), lex(Z, Z)))
    assert v.status is Status.STRONGLY_DEPENDENT and v.case == "equicharacteristic-zero"
    v = transfer_verdict(VF(SD0, F(2, FieldClass.FINITE, q=2), lex(Z), v_of_p=0))
    assert v.status is Status.STRONGLY_DEPENDENT and v.case == "mixed-finite-residue"
    v = transfer_verdict(VF(sd(5), F(5, FieldClass.ALGEBRAICALLY_CLOSED), Q))
    assert v.status is Status.STRONGLY_DEPENDENT and v.case == "equicharacteristic-p"
    assert v.kaplansky is True and v.defectless is True and v.algebraically_maximal is True
    v = transfer_verdict(VF(SD0, F(2), lex(Q, Q), v_of_p=0))
    assert v.status is Status.STRONGLY_DEPENDENT and v.case == "mixed-infinite-residue"
    assert any("justification only" in s for s in v.derivation)


def test_transfer_other_statuses():
    v = transfer_verdict(VF(SD0, F(2), lex(dense({2: 1})), v_of_p=0))
    assert v.status is Status.INCONSISTENT
    assert "bounded-ramification-or-p-divisible-core" in {x.rule for x in v.violations}
    v = transfer_verdict(VF(F(0), F(0), Z))
    assert v.status is Status.UNDETERMINED and v.missing == ["base.strongly_dependent"]
    v = transfer_verdict(VF(F(0, strongly_dependent=Tri.NO), F(0), Z))
    assert v.status is Status.NOT_STRONGLY_DEPENDENT
    with pytest.raises(NotHenselian):
        transfer_verdict(VF(SD0, F(0), Z, henselian=False))


def test_dp_minimal_rule():
    v = dp_minimal_transfer(VF(SD0, sd(0), Z), True)
    assert v.status is Status.STRONGLY_DEPENDENT
    v = dp_minimal_transfer(VF(SD0, sd(0), lex(Z, dense({2: INF}))), True)
    assert v.status is Status.INCONSISTENT
    assert dp_minimal_transfer(VF(SD0, sd(0), Z), False).status is Status.UNDETERMINED


def test_coarsening_candidate():
    assert coarsening_candidate(Q) is None
    assert coarsening_candidate(lex(Z, Q)) == (2, tail(1))
    assert coarsening_candidate(lex(Q, dense({3: 1}))) == (3, tail(1))


groups = st.lists(st.sampled_from(BLOCK_POOL), min_size=1, max_size=5).map(group_of)


@settings(max_examples=100, deadline=None)
@given(groups, st.sampled_from([2, 3, 5]))
def test_delta_p_is_maximal(g, p):
    n = n_of(g)
    d = delta_p(g, p)
    assert segment_exp(g, d.cut, n, p) == 0
    for c in range(d.cut):
        assert segment_exp(g, c, n, p) != 0


@settings(max_examples=100, deadline=None)
@given(groups, st.data())
def test_decomposition_shape(g, data):
    b = data.draw(st.integers(0, n_of(g) - 1))
    d0, d, _ = standard_decomposition(g, b)
    assert d.properly_contains(d0) and d.cut == b and d0.cut == b + 1


@settings(max_examples=100, deadline=None)
@given(groups, st.sampled_from([0, 2, 3]), st.data())
def test_never_sd_with_violations(g, p, data):
    if p == 0:
        vf = VF(SD0, data.draw(st.sampled_from([F(0), sd(0)])), g)
    else:
        b = data.draw(st.integers(0, n_of(g) - 1))
        res = data.draw(st.sampled_from([F(p), F(p, FieldClass.FINITE, q=p),
                                         F(p, FieldClass.ALGEBRAICALLY_CLOSED)]))
        vf = VF(SD0, res, g, v_of_p=b)
    v = transfer_verdict(vf)
    viol = audit_necessary(vf)
    assert (v.status is Status.STRONGLY_DEPENDENT) == (not viol)
    vg_clause = "value-group-strongly-dependent" in {x.rule for x in viol}
    assert vg_clause == (verdict(g).verdict is Verdict.NOT_STRONGLY_DEPENDENT)
