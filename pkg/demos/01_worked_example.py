"""Two groups that differ only in their top block.

G1 = Q + A1 + A2 and G2 = Z + A1 + A2, with A1 having infinite 2-index and A2
infinite 2- and 3-index.  Swapping Q for Z adds a definable convex subgroup
above everything carrying infinite index, which changes the rank of the pure
group reduct but not the full dp-rank.
"""
from oagrank import c_G, dp_rank, dp_rank_reduct, k_p, parse, spine, verify_family
from oagrank.rank import inp_witness

G1 = parse("lex(Q, dense{2:inf}, dense{2:inf,3:inf})")
G2 = parse("lex(Z, dense{2:inf}, dense{2:inf,3:inf})")

for name, g in (("G1", G1), ("G2", G2)):
    print(f"{name} = {g}")
    for p in (2, 3):
        print(f"  S_{p} = {list(spine(g, p).members)}   k_{p} = {k_p(g, p)}")
    c, container = c_G(g)
    print(f"  c_G = {c}" + (f" (container {container})" if container else ""))
    print(f"  dp-rank of the reduct = {dp_rank_reduct(g)}, dp-rank = {dp_rank(g)}")

    # The witness: one subgroup tail + p^j G for each member of S_p^inf,
    # and the container when there is one.  Dropping any member must leave
    # an intersection of infinite index over the full one.
    family, cont = inp_witness(g)
    ladders = family.ladders() + ([cont.ladder] if cont else [])
    for m in family.members:
        print(f"    p={m.p} j={m.exponent}: {m.subgroup} + {m.p ** m.exponent}G -> {m.ladder}")
    if cont:
        print(f"    container: {cont.ladder}")
    print(f"  family verified: {verify_family(ladders)}")
    print()
