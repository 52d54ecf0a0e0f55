"""JSON reports and descriptor files.

Infinite values are strings: "inf" for exponents and moduli, "aleph0" for
ranks, "omega" for the cut of the trivial subgroup of an infinite
presentation.  ``load_report`` validates against the bundled schema and
re-verifies every witness with the exact index.
"""
from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

import jsonschema

from .arith import INF, is_inf
from .core import ConvexSubgroup, index_exp
from .dsl import parse, to_text
from .errors import DescriptorError, InputError, InvariantError
from .fields import (FieldClass, FieldDescriptor, FieldVerdict, Tri,
                     ValuedFieldDescriptor)
from .ladders import Ambient, LadderSubgroup
from .rank import (InfiniteSpineChain, InpFamily, ProperContainer, RankReport,
                   verdict, verify_family)

SCHEMA_VERSION = "1.0"


@lru_cache(maxsize=None)
def schema(name: str) -> dict:
    """Load a bundled schema: ``report`` or ``descriptor``."""
    text = resources.files("oagrank.schemas").joinpath(f"{name}.schema.json").read_text()
    return json.loads(text)


@lru_cache(maxsize=None)
def _validator(name: str):
    cls = jsonschema.validators.validator_for(schema(name))
    return cls(schema(name))


def _validate(obj, name):
    _validator(name).validate(obj)


def _extnat(x):
    return "inf" if is_inf(x) else x


def _rank(x):
    return "aleph0" if is_inf(x) else x


def _cut(h: ConvexSubgroup):
    return "omega" if is_inf(h.cut) else h.cut


def _unmod(m):
    return INF if m == "inf" else m


def ladder_json(lad: LadderSubgroup):
    return [_extnat(m) for m in lad.moduli]


def ambient_json(amb: Ambient):
    return {"blocks": [to_text(b) for b in amb.blocks], "runs": list(amb.runs)}


def ambient_from_json(obj) -> Ambient:
    return Ambient(tuple(parse(b) for b in obj["blocks"]), tuple(obj["runs"]))


def _witness_json(w):
    if isinstance(w, InpFamily):
        return {"type": "InpFamily", "ambient": ambient_json(w.ambient),
                "members": [{"p": m.p, "exponent": m.exponent, "subgroup": _cut(m.subgroup),
                             "ladder": ladder_json(m.ladder)} for m in w.members]}
    if isinstance(w, ProperContainer):
        return {"type": "ProperContainer", "subgroup": _cut(w.subgroup),
                "ladder": ladder_json(w.ladder)}
    if isinstance(w, InfiniteSpineChain):
        return {"type": "InfiniteSpineChain", "p": w.p, "ambient": ambient_json(w.ambient),
                "ladders": [ladder_json(l) for l in w.ladders], "description": w.description}
    raise TypeError(f"unknown witness {w!r}")


def _spine_json(sp):
    if sp.finite:
        return {"finite": True, "members": [_cut(h) for h in sp.members]}
    p, block = sp.infinite
    return {"finite": False, "p": p, "generator_block": block}


def rank_json(rep: RankReport) -> dict:
    g = rep.group
    return {
        "p_infinity": "infinite" if rep.p_infinity is None else sorted(rep.p_infinity),
        "primes": [{"p": d.p, "index_exponent": _extnat(index_exp(g, d.p)),
                    "spine": _spine_json(d.spine),
                    "s_infinity": None if d.s_infinity is None else [_cut(h) for h in d.s_infinity],
                    "k_p": d.k_p} for d in rep.primes],
        "c_G": rep.c_G,
        "dp_rank_reduct": _rank(rep.dp_rank_reduct),
        "dp_rank": _rank(rep.dp_rank),
        "verdict": rep.verdict.value,
        "witnesses": [_witness_json(w) for w in rep.witnesses],
    }


def field_verdict_json(v: FieldVerdict) -> dict:
    return {
        "status": v.status.value,
        "case": v.case,
        "derivation": list(v.derivation),
        "violations": [{"rule": x.rule, "message": x.message} for x in v.violations],
        "missing": list(v.missing),
        "defectless": v.defectless,
        "algebraically_maximal": v.algebraically_maximal,
        "kaplansky": v.kaplansky,
    }


def build_report(text: str, first_k: int = 4, subgroup_ops=None, field_verdict=None) -> dict:
    g = parse(text)
    out = {"schema_version": SCHEMA_VERSION, "input": text, "normalized": to_text(g),
           "rank": rank_json(verdict(g, first_k))}
    if subgroup_ops:
        out["subgroup_ops"] = list(subgroup_ops)
    if field_verdict is not None:
        out["field_verdict"] = field_verdict_json(field_verdict)
    _validate(out, "report")
    return out


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2)


def witness_ladders(wobj, group_ambient: Ambient):
    """Ladders of one serialized witness, with the ambient they live on."""
    if wobj["type"] == "ProperContainer":
        return group_ambient, [LadderSubgroup(group_ambient, tuple(map(_unmod, wobj["ladder"])))]
    amb = ambient_from_json(wobj["ambient"])
    rows = ([m["ladder"] for m in wobj["members"]] if wobj["type"] == "InpFamily"
            else wobj["ladders"])
    return amb, [LadderSubgroup(amb, tuple(map(_unmod, r))) for r in rows]


def load_report(text_or_obj) -> dict:
    """Parse, validate and re-verify a report; raises InvariantError on a bad witness.

    The finite-rank family and its container are checked together, as one
    pattern; an infinite-spine chain is checked on its own ambient.
    """
    obj = json.loads(text_or_obj) if isinstance(text_or_obj, str) else text_or_obj
    try:
        _validate(obj, "report")
    except jsonschema.ValidationError as exc:
        raise InputError(f"report does not match the schema: {exc.message}") from exc
    g = parse(obj["normalized"])
    finite_pattern = []
    group_amb = None
    for w in obj["rank"]["witnesses"]:
        if w["type"] == "InfiniteSpineChain":
            _, lads = witness_ladders(w, None)
            if not verify_family(lads):
                raise InvariantError(f"infinite-spine chain for p={w['p']} fails the index check")
            continue
        if group_amb is None:
            group_amb = Ambient.of(g)
        amb, lads = witness_ladders(w, group_amb)
        if amb != group_amb:
            raise InvariantError("witness ambient differs from the analysed group")
        finite_pattern.extend(lads)
    if finite_pattern and not verify_family(finite_pattern):
        raise InvariantError("finite-rank witness family fails the index check")
    return obj


# descriptors

def _field_from_json(obj, who) -> FieldDescriptor:
    try:
        return FieldDescriptor(
            characteristic=obj["characteristic"],
            field_class=FieldClass(obj.get("class", "other")),
            q=obj.get("q"),
            strongly_dependent=Tri(obj.get("strongly_dependent", "unknown")),
            perfect=Tri(obj.get("perfect", "unknown")),
            artin_schreier_closed=Tri(obj.get("artin_schreier_closed", "unknown")),
            no_sep_ext_degree_div_p=Tri(obj.get("no_sep_ext_degree_div_p", "unknown")),
        )
    except DescriptorError as exc:
        raise DescriptorError(f"{who}: {exc}") from exc


def descriptor_from_json(text_or_obj):
    """(ValuedFieldDescriptor, base_dp_minimal or None) from a descriptor document."""
    obj = json.loads(text_or_obj) if isinstance(text_or_obj, str) else text_or_obj
    try:
        _validate(obj, "descriptor")
    except jsonschema.ValidationError as exc:
        raise DescriptorError(f"descriptor does not match the schema: {exc.message}") from exc
    vf = ValuedFieldDescriptor(
        base=_field_from_json(obj["base"], "base"),
        residue=_field_from_json(obj["residue"], "residue"),
        value_group=parse(obj["value_group"]),
        v_of_p=obj.get("v_of_p_block"),
        henselian=obj.get("henselian", True),
    )
    return vf, obj.get("base_dp_minimal")


def descriptor_json(vf: ValuedFieldDescriptor) -> dict:
    def fd(f: FieldDescriptor):
        out = {"characteristic": f.characteristic, "class": f.field_class.value}
        if f.q is not None:
            out["q"] = f.q
        for name in ("strongly_dependent", "perfect", "artin_schreier_closed",
                     "no_sep_ext_degree_div_p"):
            out[name] = getattr(f, name).value
        return out
    return {"base": fd(vf.base), "residue": fd(vf.residue),
            "value_group": to_text(vf.value_group), "v_of_p_block": vf.v_of_p,
            "henselian": vf.henselian}
