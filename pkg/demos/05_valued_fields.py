"""Henselian valued fields on a strongly dependent base, as descriptors.

The engine routes each descriptor through the characteristic cases, audits
the conditions the value group and residue field must meet, and explains
itself.  Descriptor files in descriptors/ can be fed to the command line as
``oagrank field classify descriptors/<file>.json``.
"""
from pathlib import Path

from oagrank.report import descriptor_from_json
from oagrank.fields import kaplansky_check, transfer_verdict

here = Path(__file__).resolve().parent / "descriptors"
for path in sorted(here.glob("*.json")):
    vf, _ = descriptor_from_json(path.read_text())
    v = transfer_verdict(vf)
    print(f"{path.name}: {v.status.value}" + (f" [{v.case}]" if v.case else ""))
    for x in v.violations:
        print(f"    {x}")
    if vf.p:
        k = kaplansky_check(vf)
        print(f"    Kaplansky: {k.holds} (forced by base: {k.forced})")
