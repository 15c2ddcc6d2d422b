"""
Exact coefficient fields.

Elements are stored as plain canonical Python values ("raw" elements) and all
arithmetic goes through the owning field descriptor:

- prime fields: ints in 0..p-1
- extension fields GF(p^k): ints encoding the residue polynomial in base p
  (digit i is the coefficient of t^i)
- rationals: ``fractions.Fraction``
- cyclotomic fields Q[t]/(Phi_n): tuples of Fractions, lowest degree first

``FieldElement`` wraps a raw value for operator-style arithmetic.
"""

from abc import ABC, abstractmethod
from fractions import Fraction
from functools import lru_cache
import random
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

import sympy

from src.errors import FieldError
from src.scalars.polynomials import (
    cyclotomic_coefficients,
    is_irreducible_mod_p,
    poly_mul_mod,
    smallest_irreducible,
)
from src.utils.logger import get_logger
from src.utils.validators import validate_field_spec, validate_prime

logger = get_logger(__name__)


class FieldDescriptor(ABC):
    """An exact field together with arithmetic on its raw elements."""

    kind: str = ""
    characteristic: int = 0
    degree: Optional[int] = None

    zero: Any = None
    one: Any = None

    @property
    def order(self) -> Optional[int]:
        """Number of elements, or None for infinite fields."""
        if self.characteristic and self.degree:
            return self.characteristic ** self.degree
        return None

    @property
    def is_finite(self) -> bool:
        return self.order is not None

    @abstractmethod
    def add(self, a, b):
        ...

    @abstractmethod
    def neg(self, a):
        ...

    @abstractmethod
    def mul(self, a, b):
        ...

    @abstractmethod
    def inv(self, a):
        ...

    @abstractmethod
    def from_int(self, n: int):
        ...

    @abstractmethod
    def random_element(self, rng: random.Random):
        ...

    @abstractmethod
    def coordinates(self, a) -> List:
        """Coordinate vector over the prime subfield (or Q)."""

    @abstractmethod
    def to_json(self, a) -> Any:
        ...

    @abstractmethod
    def describe(self) -> Dict[str, Any]:
        """Field spec dictionary in the CLI input format."""

    @abstractmethod
    def label(self) -> str:
        ...

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a == self.zero

    def pow(self, a, e: int):
        if e < 0:
            return self.pow(self.inv(a), -e)
        result = self.one
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def elements(self) -> Iterator:
        raise FieldError(f"{self.label()} is infinite; elements cannot be enumerated")

    def format(self, a) -> str:
        return str(self.to_json(a))

    def element(self, value) -> "FieldElement":
        """Wrap a raw element, or coerce an int, into a FieldElement."""
        if isinstance(value, int) and not isinstance(value, bool):
            value = self.from_int(value)
        return FieldElement(self, value)

    def __call__(self, value) -> "FieldElement":
        return self.element(value)

    def _key(self) -> Tuple:
        return tuple(sorted((k, str(v)) for k, v in self.describe().items()))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FieldDescriptor) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self.label()})"


class PrimeField(FieldDescriptor):
    """The field GF(p)."""

    kind = "prime"

    def __init__(self, p: int):
        ok, error = validate_prime(p)
        if not ok:
            raise FieldError(error)
        self.p = p
        self.characteristic = p
        self.degree = 1
        self.zero = 0
        self.one = 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise FieldError("division by zero")
        return pow(a, -1, self.p)

    def pow(self, a, e: int):
        if e < 0:
            return pow(self.inv(a), -e, self.p)
        return pow(a, e, self.p)

    def from_int(self, n: int):
        return n % self.p

    def random_element(self, rng: random.Random):
        return rng.randrange(self.p)

    def coordinates(self, a) -> List:
        return [a]

    def elements(self) -> Iterator:
        return iter(range(self.p))

    def to_json(self, a) -> Any:
        return a

    def describe(self) -> Dict[str, Any]:
        return {"kind": "prime", "p": self.p}

    def label(self) -> str:
        return f"GF({self.p})"


class ExtensionField(FieldDescriptor):
    """
    The field GF(p^k) = GF(p)[t]/(f) for a monic irreducible f.

    Multiplication uses exp/log tables over a primitive element found by search.
    """

    kind = "extension"

    def __init__(self, p: int, k: Optional[int] = None, modulus: Optional[Sequence[int]] = None):
        ok, error = validate_prime(p)
        if not ok:
            raise FieldError(error)
        if modulus is None:
            if k is None or k <= 0:
                raise FieldError(f"extension degree must be positive, got {k}")
            modulus = smallest_irreducible(p, k)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) < 2 or modulus[-1] != 1:
                raise FieldError("modulus must be monic of degree at least 1")
            if k is not None and k != len(modulus) - 1:
                raise FieldError(f"modulus degree {len(modulus) - 1} does not match k={k}")
            if not is_irreducible_mod_p(modulus, p):
                raise FieldError(f"modulus {list(modulus)} is reducible over GF({p})")

        self.p = p
        self.k = len(modulus) - 1
        self.modulus = tuple(modulus)
        self.characteristic = p
        self.degree = self.k
        self.q = p ** self.k
        self.zero = 0
        self.one = 1

        self._powers = [p ** i for i in range(self.k)]
        self._digits = [self._to_digits(x) for x in range(self.q)]
        self._exp, self._log = self._build_tables()
        self._add_table = None
        if self.q <= 256:
            self._add_table = [
                [self._add_digits(a, b) for b in range(self.q)] for a in range(self.q)
            ]
        logger.debug(f"Built GF({p}^{self.k}) with modulus {list(self.modulus)}")

    def _to_digits(self, x: int) -> Tuple[int, ...]:
        digits = []
        for _ in range(self.k):
            digits.append(x % self.p)
            x //= self.p
        return tuple(digits)

    def _from_digits(self, digits: Sequence[int]) -> int:
        return sum(d * w for d, w in zip(digits, self._powers))

    def _add_digits(self, a: int, b: int) -> int:
        da, db = self._digits[a], self._digits[b]
        return self._from_digits([(x + y) % self.p for x, y in zip(da, db)])

    def _build_tables(self) -> Tuple[List[int], List[int]]:
        order = self.q - 1
        for candidate in range(1, self.q):
            exp = [1]
            current = self._digits[1]
            g = self._digits[candidate]
            while True:
                current = poly_mul_mod(current, g, self.modulus, self.p)
                value = self._from_digits(current)
                if value == 1:
                    break
                exp.append(value)
            if len(exp) == order:
                log = [0] * self.q
                for i, v in enumerate(exp):
                    log[v] = i
                return exp, log
        raise FieldError("no primitive element found; modulus is not irreducible")

    def add(self, a, b):
        if self._add_table is not None:
            return self._add_table[a][b]
        return self._add_digits(a, b)

    def neg(self, a):
        return self._from_digits([(-d) % self.p for d in self._digits[a]])

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a):
        if a == 0:
            raise FieldError("division by zero")
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def pow(self, a, e: int):
        if a == 0:
            if e <= 0:
                raise FieldError("zero has no non-positive powers")
            return 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def from_int(self, n: int):
        return n % self.p

    def random_element(self, rng: random.Random):
        return rng.randrange(self.q)

    def coordinates(self, a) -> List:
        return list(self._digits[a])

    def elements(self) -> Iterator:
        return iter(range(self.q))

    def to_json(self, a) -> Any:
        return list(self._digits[a])

    def from_coordinates(self, digits: Sequence[int]):
        """Inverse of ``coordinates``: the element sum d_i t^i."""
        return self._from_digits([int(d) % self.p for d in digits])

    def describe(self) -> Dict[str, Any]:
        return {"kind": "extension", "p": self.p, "k": self.k, "modulus": list(self.modulus)}

    def label(self) -> str:
        return f"GF({self.p}^{self.k})"

    def format(self, a) -> str:
        terms = []
        for i, d in enumerate(self._digits[a]):
            if d:
                terms.append(str(d) if i == 0 else (f"{d}*t^{i}" if d != 1 else f"t^{i}"))
        return " + ".join(terms) if terms else "0"


class RationalField(FieldDescriptor):
    """The rationals, with exact Fraction arithmetic."""

    kind = "rationals"

    def __init__(self):
        self.characteristic = 0
        self.degree = None
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise FieldError("division by zero")
        return 1 / a

    def from_int(self, n: int):
        return Fraction(n)

    def random_element(self, rng: random.Random):
        return Fraction(rng.randint(-3, 3))

    def coordinates(self, a) -> List:
        return [a]

    def to_json(self, a) -> Any:
        return a.numerator if a.denominator == 1 else f"{a.numerator}/{a.denominator}"

    def describe(self) -> Dict[str, Any]:
        return {"kind": "rationals"}

    def label(self) -> str:
        return "QQ"


class CyclotomicField(FieldDescriptor):
    """Q[t]/(Phi_n), elements as coefficient tuples of length phi(n)."""

    kind = "cyclotomic"

    def __init__(self, n: int):
        if not isinstance(n, int) or n <= 0:
            raise FieldError(f"cyclotomic order must be positive, got {n!r}")
        self.n = n
        self.modulus = cyclotomic_coefficients(n)
        self.d = len(self.modulus) - 1
        self.characteristic = 0
        self.degree = None
        self.zero = tuple(Fraction(0) for _ in range(self.d))
        self.one = tuple(Fraction(1 if i == 0 else 0) for i in range(self.d))

    def _reduce(self, coeffs: List[Fraction]) -> Tuple[Fraction, ...]:
        coeffs = list(coeffs) + [Fraction(0)] * max(0, self.d - len(coeffs))
        for top in range(len(coeffs) - 1, self.d - 1, -1):
            c = coeffs[top]
            if c:
                shift = top - self.d
                for i, m in enumerate(self.modulus):
                    coeffs[shift + i] -= c * m
        return tuple(coeffs[:self.d])

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def mul(self, a, b):
        prod = [Fraction(0)] * (2 * self.d)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return self._reduce(prod)

    def inv(self, a):
        if a == self.zero:
            raise FieldError("division by zero")
        t = sympy.Symbol("t")
        f = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(a)], t, domain="QQ")
        m = sympy.Poly(list(reversed(self.modulus)), t, domain="QQ")
        inverse = f.invert(m)
        coeffs = [sympy.Rational(c) for c in reversed(inverse.all_coeffs())]
        return self._reduce([Fraction(int(c.p), int(c.q)) for c in coeffs])

    def from_int(self, n: int):
        return tuple(Fraction(n if i == 0 else 0) for i in range(self.d))

    def generator(self):
        """The class of t, a primitive n-th root of unity."""
        return self._reduce([Fraction(0), Fraction(1)])

    def random_element(self, rng: random.Random):
        return tuple(Fraction(rng.randint(-2, 2)) for _ in range(self.d))

    def coordinates(self, a) -> List:
        return list(a)

    def to_json(self, a) -> Any:
        return [c.numerator if c.denominator == 1 else f"{c.numerator}/{c.denominator}" for c in a]

    def describe(self) -> Dict[str, Any]:
        return {"kind": "cyclotomic", "n": self.n}

    def label(self) -> str:
        return f"QQ(zeta_{self.n})"


class FieldElement:
    """Operator-friendly wrapper around a raw field element."""

    __slots__ = ("field", "value")

    def __init__(self, field: FieldDescriptor, value):
        self.field = field
        self.value = value

    def _coerce(self, other) -> Any:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError(f"cannot mix {self.field.label()} and {other.field.label()}")
            return other.value
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else FieldElement(self.field, self.field.add(self.value, v))

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else FieldElement(self.field, self.field.sub(self.value, v))

    def __rsub__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else FieldElement(self.field, self.field.sub(v, self.value))

    def __mul__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else FieldElement(self.field, self.field.mul(self.value, v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else FieldElement(self.field, self.field.div(self.value, v))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def __eq__(self, other) -> bool:
        v = self._coerce(other)
        return v is not NotImplemented and self.value == v

    def __hash__(self) -> int:
        return hash((self.field, self.value))

    def __repr__(self) -> str:
        return f"{self.field.format(self.value)} in {self.field.label()}"


@lru_cache(maxsize=64)
def _cached_field(kind: str, p: Optional[int], k: Optional[int], modulus: Optional[Tuple[int, ...]], n: Optional[int]) -> FieldDescriptor:
    if kind == "prime":
        return PrimeField(p)
    if kind == "extension":
        return ExtensionField(p, k=k, modulus=modulus)
    if kind == "rationals":
        return RationalField()
    if kind == "cyclotomic":
        return CyclotomicField(n)
    raise FieldError(f"unknown field kind {kind!r}")


def make_field(spec: Dict[str, Any]) -> FieldDescriptor:
    """
    Build a field from its specification.

    Args:
        spec: Field spec in the CLI input format

    Returns:
        FieldDescriptor (cached per spec)

    Raises:
        FieldError: non-prime p, reducible modulus, k <= 0 or unknown kind
    """
    ok, error = validate_field_spec(spec)
    if not ok:
        raise FieldError(error)
    modulus = spec.get("modulus")
    return _cached_field(
        spec["kind"],
        spec.get("p"),
        spec.get("k"),
        tuple(modulus) if modulus is not None else None,
        spec.get("n"),
    )


def _roots_of_unity_order(field: FieldDescriptor) -> int:
    """Order of the (cyclic) group of roots of unity of order prime to the characteristic."""
    if field.is_finite:
        return field.order - 1
    if isinstance(field, CyclotomicField):
        return field.n if field.n % 2 == 0 else 2 * field.n
    return 2


def splits_completely(field: FieldDescriptor, n: int) -> bool:
    """
    Whether t^n - 1 is a product of linear factors over the field.

    Writing n = p^a m with p the characteristic and p not dividing m, t^n - 1 is
    (t^m - 1)^(p^a), which splits iff the field contains m distinct m-th roots
    of unity.
    """
    if n < 1:
        raise FieldError(f"n must be positive, got {n}")
    m = n
    if field.characteristic:
        while m % field.characteristic == 0:
            m //= field.characteristic
    return _roots_of_unity_order(field) % m == 0


def enough_roots_of_unity(field: FieldDescriptor, diagonal: Sequence[int]) -> bool:
    """Whether t^{c_i} - 1 splits over the field for every symmetrizer entry c_i."""
    return all(splits_completely(field, c) for c in diagonal)
