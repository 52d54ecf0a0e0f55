"""Small exact number-theory helpers shared by the group modules.

``INF`` stands for an infinite exponent, modulus or index throughout the package.
"""
import math
from functools import lru_cache

import sympy

INF = math.inf


def is_inf(x):
    return x == INF


@lru_cache(maxsize=4096)
def factor(n):
    """Prime factorisation of a positive integer as a sorted tuple of (p, e)."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    return tuple(sorted(sympy.factorint(n).items()))


def is_prime(n):
    return isinstance(n, int) and n >= 2 and bool(sympy.isprime(n))


def vp(n, p):
    """p-adic valuation of a positive integer; INF for the INF modulus."""
    if is_inf(n):
        return INF
    if n == 0:
        return INF
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


@lru_cache(maxsize=1024)
def nth_prime(i):
    """Zero-based: nth_prime(0) == 2."""
    return int(sympy.prime(i + 1))


def prime_index(p):
    return int(sympy.primepi(p)) - 1


def lcm_inf(a, b):
    if is_inf(a) or is_inf(b):
        return INF
    return math.lcm(a, b)


def gcd_inf(a, b):
    if is_inf(a):
        return b
    if is_inf(b):
        return a
    return math.gcd(a, b)


def divides_inf(a, b):
    """a | b with INF divisible by everything and dividing only INF."""
    if is_inf(b):
        return True
    if is_inf(a):
        return False
    return b % a == 0


def fmt_inf(x, word="inf"):
    return word if is_inf(x) else x
