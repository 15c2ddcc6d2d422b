"""
Validation utilities for the EI preprojective toolkit.
"""

from typing import Any, Dict, Optional, Sequence, Tuple

from sympy import isprime


def validate_prime(p: Any) -> Tuple[bool, Optional[str]]:
    """
    Validate a field characteristic.

    Args:
        p: Candidate prime

    Returns:
        Tuple of (is_valid, error_message)
    """
    if not isinstance(p, int) or isinstance(p, bool):
        return False, f"prime must be an integer, got {p!r}"

    if p < 2 or not isprime(p):
        return False, f"{p} is not prime"

    return True, None


def validate_extension_degree(k: Any) -> Tuple[bool, Optional[str]]:
    """
    Validate the degree of a finite field extension.

    Args:
        k: Degree over the prime field

    Returns:
        Tuple of (is_valid, error_message)
    """
    if not isinstance(k, int) or isinstance(k, bool):
        return False, f"extension degree must be an integer, got {k!r}"

    if k <= 0:
        return False, f"extension degree must be positive, got {k}"

    return True, None


def validate_positive(n: Any, name: str = "value") -> Tuple[bool, Optional[str]]:
    """Validate a positive integer parameter."""
    if not isinstance(n, int) or isinstance(n, bool) or n <= 0:
        return False, f"{name} must be a positive integer, got {n!r}"
    return True, None


def validate_field_spec(spec: Dict[str, Any]) -> Tuple[bool, Optional[str]]:
    """
    Validate a field specification dictionary.

    Args:
        spec: One of {"kind":"prime","p":p}, {"kind":"extension","p":p,"k":k},
            {"kind":"rationals"}, {"kind":"cyclotomic","n":n}

    Returns:
        Tuple of (is_valid, error_message)
    """
    if not isinstance(spec, dict):
        return False, "field spec must be an object"

    kind = spec.get("kind")
    if kind == "prime":
        return validate_prime(spec.get("p"))
    if kind == "extension":
        ok, error = validate_prime(spec.get("p"))
        if not ok:
            return ok, error
        if "modulus" in spec:
            modulus = spec["modulus"]
            if not isinstance(modulus, list) or len(modulus) < 2:
                return False, "modulus must list at least two coefficients"
            if not all(isinstance(c, int) for c in modulus):
                return False, "modulus coefficients must be integers"
            if modulus[-1] % spec["p"] != 1:
                return False, "modulus must be monic"
            return True, None
        return validate_extension_degree(spec.get("k"))
    if kind == "rationals":
        return True, None
    if kind == "cyclotomic":
        return validate_positive(spec.get("n"), "cyclotomic order")

    return False, f"unknown field kind {kind!r}"


def validate_group_table(table: Sequence[Sequence[int]]) -> Tuple[bool, Optional[str]]:
    """
    Validate a group multiplication table with identity at index 0.

    Args:
        table: Square table, table[a][b] = index of a*b

    Returns:
        Tuple of (is_valid, error_message)
    """
    n = len(table)
    if n == 0:
        return False, "group table is empty"

    for row in table:
        if len(row) != n:
            return False, "group table is not square"
        if any(not isinstance(x, int) or x < 0 or x >= n for x in row):
            return False, "group table entries out of range"

    if list(table[0]) != list(range(n)) or [row[0] for row in table] != list(range(n)):
        return False, "index 0 is not a two-sided identity"

    for a in range(n):
        if 0 not in table[a]:
            return False, f"element {a} has no inverse"

    for a in range(n):
        for b in range(n):
            ab = table[a][b]
            for c in range(n):
                if table[ab][c] != table[a][table[b][c]]:
                    return False, f"table is not associative at ({a},{b},{c})"

    return True, None


def validate_vertex(i: Any, n: int) -> Tuple[bool, Optional[str]]:
    """Validate a 1-based vertex index against a vertex count."""
    if not isinstance(i, int) or i < 1 or i > n:
        return False, f"vertex {i!r} out of range 1..{n}"
    return True, None
