"""
Dense univariate polynomials over prime fields, stored lowest degree first.

Only what the extension-field and root-of-unity code needs: products and
remainders mod p, deterministic irreducible search.
"""

from itertools import product
from typing import List, Sequence, Tuple

import sympy

from src.errors import FieldError

Coeffs = Tuple[int, ...]



def poly_mul_mod(a: Sequence[int], b: Sequence[int], modulus: Sequence[int], p: int) -> Coeffs:
    """
    Multiply two polynomials over GF(p) and reduce by a monic modulus.

    Args:
        a: First factor, lowest degree first
        b: Second factor
        modulus: Monic modulus, lowest degree first
        p: Prime

    Returns:
        Remainder of a*b, padded to deg(modulus) coefficients
    """
    k = len(modulus) - 1
    prod = [0] * (len(a) + len(b))
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            prod[i + j] = (prod[i + j] + x * y) % p
    for top in range(len(prod) - 1, k - 1, -1):
        c = prod[top]
        if c == 0:
            continue
        shift = top - k
        for i in range(k + 1):
            prod[shift + i] = (prod[shift + i] - c * modulus[i]) % p
    out = prod[:k] + [0] * max(0, k - len(prod))
    return tuple(out[:k])


def is_irreducible_mod_p(coeffs: Sequence[int], p: int) -> bool:
    """Irreducibility over GF(p) of a polynomial given lowest degree first."""
    t = sympy.Symbol("t")
    poly = sympy.Poly(list(reversed(list(coeffs))), t, modulus=p)
    if poly.degree() < 1:
        return False
    return bool(poly.is_irreducible)


def smallest_irreducible(p: int, k: int) -> Coeffs:
    """
    The lexicographically smallest monic irreducible polynomial of degree k.

    Candidates t^k + a_{k-1} t^{k-1} + ... + a_0 are ordered by the tuple
    (a_{k-1}, ..., a_0), most significant coefficient first.

    Returns:
        Coefficients (a_0, ..., a_{k-1}, 1)
    """
    if k <= 0:
        raise FieldError(f"extension degree must be positive, got {k}")
    for high_first in product(range(p), repeat=k):
        coeffs = tuple(reversed(high_first)) + (1,)
        if is_irreducible_mod_p(coeffs, p):
            return coeffs
    raise FieldError(f"no irreducible polynomial of degree {k} over GF({p})")


def cyclotomic_coefficients(n: int) -> List[int]:
    """Integer coefficients of the n-th cyclotomic polynomial, lowest degree first."""
    t = sympy.Symbol("t")
    poly = sympy.Poly(sympy.cyclotomic_poly(n, t), t)
    return [int(c) for c in reversed(poly.all_coeffs())]
