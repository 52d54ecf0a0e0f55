"""H_n of elements and the spines they generate.

Each block carries one designated generator e_i, not divisible by any prime
at which the block has positive exponent.  H_n(x) is read off from the first
coordinate of x that is not divisible by n in its block.
"""
from oagrank import Element, H_n, H_n_minus, bracket, in_nG, parse, spine, tail

g = parse("lex(Z, Q, Z)")
e0, e1, e2 = (Element.unit(i) for i in range(3))
for x in (e0, 2 * e0, e1, e0 + e2, 2 * e0 + e2):
    print(f"x={x!r:<16} in 2G: {in_nG(x, 2, g)!s:<5}  H_2={H_n(x, 2, g)}  H_2^-={H_n_minus(x, 2, g)}")
print("S_2 =", list(spine(g, 2).members))
print("S_6 =", list(spine(g, 6).members))
for c in range(4):
    print(f"bracket over tail({c}) with m=2: {bracket(g, tail(c), 2)}")
