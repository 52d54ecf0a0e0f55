"""Where strong dependence fails, and where it survives.

A group with infinitely many definable convex subgroups can still be
dp-minimal (the localizations Z_(p), one per prime).  Repeating a block that is
not 2-divisible forever makes the 2-spine infinite, and the rank jumps to
aleph_0; the witness is a chain tail + 2^(i+1) G on a model where consecutive
cuts are separated by infinitely many blocks.
"""
from oagrank import definable_convex_subgroups, parse, verdict
from oagrank.ladders import index, intersect_all

zhat = parse("zhat_primes")
subs, exhaustive = definable_convex_subgroups(zhat, limit=5)
rep = verdict(zhat)
print(f"{zhat}: first definable convex subgroups {subs} (complete list: {exhaustive})")
print(f"  verdict {rep.verdict.value}, dp-rank {rep.dp_rank}")

g = parse("omega(dense{2:1})")
rep = verdict(g, first_k=4)
print(f"\n{g}: verdict {rep.verdict.value}")
(chain,) = rep.witnesses
print(f"  chain for p={chain.p} on {chain.description}")
for lad in chain.ladders:
    print(f"    {lad}")
full = intersect_all(chain.ladders)
for i in range(len(chain.ladders)):
    rest = intersect_all(chain.ladders[:i] + chain.ladders[i + 1:])
    print(f"  drop member {i}: index over the full intersection = {index(rest, full)}")
