"""Arithmetic of definable subgroups H + nG, checked against Z^n lattices.

On a group whose blocks are all Z the order can be forgotten: every ladder
subgroup is a sublattice, and intersection, sum and index must agree with the
integer-lattice computations.
"""
from oagrank import Element, parse
from oagrank.ladders import (Coset, LadderSubgroup, add, coset_intersect, decompose_crt, index,
                             intersect)
from oagrank.lattice import embed, lattice_index, lattice_intersect
from oagrank.selftest import run

g = parse("lex(Z, Z)")
H = LadderSubgroup.tail(g, 1)
six = LadderSubgroup.multiple(g, 6)
print("6G meet tail(1)      ", intersect(six, H))
print("tail(1) + 3G         ", add(H, LadderSubgroup.multiple(g, 3)))
print("[G : 2G]             ", index(LadderSubgroup.whole(g), LadderSubgroup.multiple(g, 2)))
print("[G : tail(1)]        ", index(LadderSubgroup.whole(g), H))
print("H + 12G by prime     ", decompose_crt(add(H, LadderSubgroup.multiple(g, 12))))

a, b = add(H, LadderSubgroup.multiple(g, 4)), add(H, LadderSubgroup.multiple(g, 6))
print("\n(H+4G) meet (H+6G)   ", intersect(a, b))
print("same via lattices    ", lattice_intersect(embed(g, a), embed(g, b)).basis)
print("index of 2G via det  ", lattice_index(embed(g, LadderSubgroup.whole(g)),
                                             embed(g, LadderSubgroup.multiple(g, 2))))

e0 = Element.unit(0)
c1, c2 = Coset(e0, LadderSubgroup.multiple(g, 2)), Coset(e0, LadderSubgroup.multiple(g, 3))
print("\n(e0+2G) meet (e0+3G) ", coset_intersect(c1, c2))
print("(e0+2G) meet (2e0+2G)", coset_intersect(c1, Coset(2 * e0, LadderSubgroup.multiple(g, 2))))

res = run(seed=1, iters=1000)
print(f"\nrandom comparison: {res.checks} checks, {res.discrepancies} discrepancies")
