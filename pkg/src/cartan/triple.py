"""
Cartan triples (C, D, Ω) and the triple (C', D', Ω') derived from one and a
field characteristic.

Vertices are 0-based internally and shown 1-based, as for quivers.
"""

from dataclasses import dataclass, field
from math import gcd
from typing import Dict, List, Optional, Sequence, Set, Tuple

from sympy import isprime

from src.errors import CartanError
from src.quivers.quiver import make_quiver
from src.utils.logger import get_logger

logger = get_logger(__name__)

Pair = Tuple[int, int]


@dataclass(frozen=True)
class CartanTriple:
    """
    A symmetrizable Cartan matrix C, its symmetrizer D = diag(c_1, ..., c_n)
    and an acyclic orientation Ω.

    ``labels`` name the vertices in reports; they default to 1..n.
    """

    C: Tuple[Tuple[int, ...], ...]
    D: Tuple[int, ...]
    omega: Tuple[Pair, ...]
    labels: Tuple[str, ...] = ()

    @property
    def n(self) -> int:
        return len(self.D)

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else str(i + 1)

    @property
    def omega_star(self) -> Tuple[Pair, ...]:
        return tuple(sorted((j, i) for i, j in self.omega))

    @property
    def omega_bar(self) -> Tuple[Pair, ...]:
        return tuple(sorted(self.omega + self.omega_star))

    def sgn(self, i: int, j: int) -> int:
        if (i, j) in self.omega:
            return 1
        if (j, i) in self.omega:
            return -1
        raise CartanError("O1", f"({self.label(i)},{self.label(j)}) is not an edge of the orientation")

    def neighbours(self, i: int) -> List[int]:
        """Ω-bar(-, i): the j with (i, j) in Ω-bar."""
        return sorted(j for a, j in self.omega_bar if a == i)

    def g(self, i: int, j: int) -> int:
        return abs(gcd(self.C[i][j], self.C[j][i]))

    def f(self, i: int, j: int) -> int:
        return abs(self.C[i][j]) // self.g(i, j)

    def to_dict(self) -> Dict:
        return {
            "C": [list(row) for row in self.C],
            "D": list(self.D),
            "Omega": [[self.label(i), self.label(j)] for i, j in self.omega],
        }


def cartan_violations(
    C: Sequence[Sequence[int]],
    D: Sequence[int],
    omega: Sequence[Pair],
) -> List[Tuple[str, str]]:
    """
    Every violated condition as (name, message); empty for a Cartan triple.

    Names are C1, C2, C3, O1, O2, plus "shape" and "symmetrizer" for
    malformed input.
    """
    n = len(D)
    if len(C) != n or any(len(row) != n for row in C):
        return [("shape", f"C must be {n}x{n} to match D")]
    if any(c < 1 for c in D):
        return [("symmetrizer", f"symmetrizer entries must be >= 1, got {list(D)}")]
    pairs = [tuple(p) for p in omega]
    if any(not (0 <= i < n and 0 <= j < n) for i, j in pairs):
        return [("shape", "orientation names a vertex out of range")]

    out: List[Tuple[str, str]] = []
    for i in range(n):
        if C[i][i] != 2:
            out.append(("C1", f"c_{i + 1}{i + 1} = {C[i][i]}, expected 2"))
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            if C[i][j] > 0:
                out.append(("C2", f"c_{i + 1}{j + 1} = {C[i][j]} is positive"))
            elif (C[i][j] < 0) != (C[j][i] < 0):
                out.append(("C2", f"c_{i + 1}{j + 1} and c_{j + 1}{i + 1} are not both negative or both zero"))
    for i in range(n):
        for j in range(i + 1, n):
            if D[i] * C[i][j] != D[j] * C[j][i]:
                out.append(("C3", f"DC is not symmetric at ({i + 1},{j + 1})"))

    present = set(pairs)
    for i in range(n):
        for j in range(i + 1, n):
            oriented = (i, j) in present or (j, i) in present
            if oriented != (C[i][j] < 0):
                out.append(("O1", f"orientation and C disagree on the edge {{{i + 1},{j + 1}}}"))
    if any(i == j for i, j in pairs):
        out.append(("O2", "the orientation contains a loop"))
    else:
        arrows = [(f"{i}{j}", j, i) for i, j in sorted(present)]
        if not make_quiver(n, arrows).is_acyclic():
            out.append(("O2", "the orientation contains an oriented cycle"))
    return out


def validate_cartan(
    C: Sequence[Sequence[int]],
    D: Sequence[int],
    omega: Sequence[Pair],
    labels: Sequence[str] = (),
) -> CartanTriple:
    """
    Check (C1)-(C3), (O1), (O2) and build the triple.

    Args:
        C: Integer matrix as a list of rows
        D: Symmetrizer diagonal
        omega: Orientation as 0-based pairs (i, j)
        labels: Optional vertex names

    Returns:
        The validated CartanTriple

    Raises:
        CartanError: carrying the name of the first violated condition
    """
    violations = cartan_violations(C, D, omega)
    if violations:
        condition, message = violations[0]
        raise CartanError(condition, message)
    return CartanTriple(
        C=tuple(tuple(int(x) for x in row) for row in C),
        D=tuple(int(c) for c in D),
        omega=tuple(sorted({(int(i), int(j)) for i, j in omega})),
        labels=tuple(labels),
    )


def gij_fij(C: Sequence[Sequence[int]]) -> Tuple[Dict[Pair, int], Dict[Pair, int]]:
    """g_ij = |gcd(c_ij, c_ji)| and f_ij = |c_ij| / g_ij for every c_ij < 0."""
    g: Dict[Pair, int] = {}
    f: Dict[Pair, int] = {}
    n = len(C)
    for i in range(n):
        for j in range(n):
            if i != j and C[i][j] < 0:
                g[(i, j)] = abs(gcd(C[i][j], C[j][i]))
                f[(i, j)] = abs(C[i][j]) // g[(i, j)]
    return g, f


@dataclass(frozen=True)
class DerivedTriple:
    """
    (C', D', Ω') built from (C, D, Ω) and char K.

    ``index[k] = (i, l)`` is the vertex (i, l_i) of C'; ``r`` and ``d`` hold
    c_i = p^{r_i} d_i (r_i = 0 in characteristic zero) and ``sigma`` the sets
    Σ_ij for the edges of C.
    """

    source: CartanTriple
    characteristic: int
    triple: CartanTriple
    index: Tuple[Pair, ...]
    r: Tuple[int, ...]
    d: Tuple[int, ...]
    sigma: Dict[Pair, Set[Pair]] = field(default_factory=dict)

    @property
    def is_relabelling(self) -> bool:
        """Every d_i is 1, so (i, 0) <-> i identifies the two triples."""
        return all(x == 1 for x in self.d)

    def to_dict(self) -> Dict:
        out = self.triple.to_dict()
        out["characteristic"] = self.characteristic
        out["index"] = [self.triple.label(k) for k in range(self.triple.n)]
        out["r"] = list(self.r)
        out["d"] = list(self.d)
        return out


def _split_power(c: int, p: int) -> Pair:
    """c = p^r d with p not dividing d."""
    r = 0
    while c % p == 0:
        c //= p
        r += 1
    return r, c


def derived_triple(triple: CartanTriple, characteristic: int) -> DerivedTriple:
    """
    The Cartan triple (C', D', Ω') on M = {(i, l_i) : 0 <= l_i < d_i}.

    In characteristic p, c_i = p^{r_i} d_i and D' = diag(p^{r_i}); in
    characteristic zero r_i = 0, d_i = c_i and D' is the identity.

    Raises:
        CartanError: the characteristic is neither 0 nor a prime, or the
            result fails validation
    """
    p = characteristic
    if p != 0 and not isprime(p):
        raise CartanError("symmetrizer", f"characteristic must be 0 or prime, got {p}")
    n = triple.n
    if p:
        split = [_split_power(c, p) for c in triple.D]
        r = tuple(s[0] for s in split)
        d = tuple(s[1] for s in split)
    else:
        r = tuple(0 for _ in range(n))
        d = tuple(triple.D)
    scale = [p ** r[i] if p else 1 for i in range(n)]

    sigma: Dict[Pair, Set[Pair]] = {}
    for i in range(n):
        for j in range(n):
            modulus = gcd(d[i], d[j])
            sigma[(i, j)] = {
                (a, b)
                for a in range(d[i])
                for b in range(d[j])
                if (a * scale[i] - b * scale[j]) % modulus == 0
            }

    index = tuple((i, l) for i in range(n) for l in range(d[i]))
    position = {v: k for k, v in enumerate(index)}
    size = len(index)
    C_new = [[0] * size for _ in range(size)]
    for k, (i, a) in enumerate(index):
        for m, (j, b) in enumerate(index):
            if k == m:
                C_new[k][m] = 2
            elif i != j and triple.C[i][j] < 0 and (a, b) in sigma[(i, j)]:
                C_new[k][m] = -triple.g(i, j) * (p ** (r[j] - min(r[i], r[j])) if p else 1)
    D_new = [scale[i] for i, _ in index]
    omega_new = [
        (position[(i, a)], position[(j, b)])
        for i, j in triple.omega
        for a, b in sorted(sigma[(i, j)])
    ]
    if all(x == 1 for x in d):
        labels = tuple(triple.label(i) for i, _ in index)
    else:
        labels = tuple(f"({triple.label(i)},{l})" for i, l in index)

    result = validate_cartan(C_new, D_new, omega_new, labels=labels)
    logger.debug(f"derived triple in characteristic {p}: {size} vertices, orientation {result.omega}")
    return DerivedTriple(triple, p, result, index, r, d, sigma)


def is_prime_power_case(triple: CartanTriple, characteristic: int) -> bool:
    """Whether every c_i is a power of p = char K (only c_i = 1 when p = 0)."""
    if characteristic == 0:
        return all(c == 1 for c in triple.D)
    return all(_split_power(c, characteristic)[1] == 1 for c in triple.D)
