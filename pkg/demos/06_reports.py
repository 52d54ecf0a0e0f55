"""JSON reports: build, save, reload with witness re-verification."""
import json
import tempfile
from pathlib import Path

from oagrank.errors import InvariantError
from oagrank.report import build_report, dumps, load_report

rep = build_report("lex(Z, dense{2:inf}, dense{2:inf,3:inf})")
path = Path(tempfile.mkdtemp()) / "g2.json"
path.write_text(dumps(rep))
print(f"wrote {path} ({path.stat().st_size} bytes)")
again = load_report(path.read_text())
print("reloaded, witnesses re-verified:", again["rank"]["dp_rank"], again["rank"]["verdict"])

# a tampered family no longer witnesses anything
bad = json.loads(path.read_text())
bad["rank"]["witnesses"][0]["members"][1]["ladder"] = [2, 2, 1]
try:
    load_report(bad)
except InvariantError as exc:
    print("tampered report rejected:", exc)
