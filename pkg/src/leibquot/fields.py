"""Exact scalar arithmetic: the rationals and prime fields GF(p).

Every computation in this package runs over one of these two field kinds.
Rationals are `fractions.Fraction` values (always reduced, positive
denominator); prime-field elements are plain ints in ``[0, p)``.  There is
no floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction

PRIME_CAP = 1 << 16


class FieldError(ValueError):
    pass


class Field:
    """Common interface of the two field descriptors."""

    is_finite: bool

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def coerce(self, x):
        raise NotImplementedError

    def parse(self, s: str):
        """Parse an exact coefficient string: integer or 'a/b'."""
        raise NotImplementedError

    def to_str(self, a) -> str:
        return str(a)

    def random(self, rng, span: int = 5):
        raise NotImplementedError

    def elements(self):
        raise FieldError("cannot enumerate an infinite field")


class RationalField(Field):
    is_finite = False
    characteristic = 0

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return 1 / a

    def coerce(self, x):
        return Fraction(x)

    def parse(self, s: str):
        return Fraction(s)

    def random(self, rng, span: int = 5):
        return Fraction(rng.randint(-span, span))

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


class PrimeField(Field):
    is_finite = True

    def __init__(self, p: int):
        if p < 2 or p >= PRIME_CAP:
            raise FieldError(f"prime must satisfy 2 <= p < 2^16, got {p}")
        if any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise FieldError(f"{p} is not prime")
        self.p = p
        self.characteristic = p

    def zero(self):
        return 0

    def one(self):
        return 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(a, self.p - 2, self.p)

    def coerce(self, x):
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise FieldError(f"denominator of {x} vanishes mod {self.p}")
            return (x.numerator * self.inv(x.denominator % self.p)) % self.p
        return int(x) % self.p

    def parse(self, s: str):
        return self.coerce(Fraction(s))

    def random(self, rng, span: int = 5):
        return rng.randrange(self.p)

    def elements(self):
        return range(self.p)

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


QQ = RationalField()

_gf_cache: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    if p not in _gf_cache:
        _gf_cache[p] = PrimeField(p)
    return _gf_cache[p]


def check_same_field(a: Field, b: Field):
    if a != b:
        raise FieldError(f"field mismatch: {a!r} vs {b!r}")
