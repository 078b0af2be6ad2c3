"""Coefficient fields for exact computation.

The default field is the rationals, realized by fractions.Fraction.  Prime
fields F_p are available for dimension-only work; their elements are small
wrapper objects so that the generic linear algebra in linalg.py can stay
duck-typed (arithmetic operators plus truthiness as the zero test).
"""

from fractions import Fraction


def is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class RationalField:
    name = "q"
    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def of_int(self, n):
        return Fraction(n)

    def inv_int(self, n):
        # multiplicative inverse of a nonzero integer
        assert n != 0
        return Fraction(1, n)

    def __repr__(self):
        return "QQ"


QQ = RationalField()


class FpElt:
    __slots__ = ("v", "p")

    def __init__(self, v, p):
        self.v = v % p
        self.p = p

    def __add__(self, other):
        assert self.p == other.p
        return FpElt(self.v + other.v, self.p)

    def __sub__(self, other):
        assert self.p == other.p
        return FpElt(self.v - other.v, self.p)

    def __mul__(self, other):
        assert self.p == other.p
        return FpElt(self.v * other.v, self.p)

    def __truediv__(self, other):
        assert self.p == other.p and other.v % other.p != 0
        return FpElt(self.v * pow(other.v, self.p - 2, self.p), self.p)

    def __neg__(self):
        return FpElt(-self.v, self.p)

    def __bool__(self):
        return self.v % self.p != 0

    def __eq__(self, other):
        if isinstance(other, FpElt):
            return self.p == other.p and (self.v - other.v) % self.p == 0
        if isinstance(other, int):
            return (self.v - other) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.v % self.p, self.p))

    def __repr__(self):
        return "%d (mod %d)" % (self.v % self.p, self.p)


class PrimeField:
    characteristic = None

    def __init__(self, p):
        if not is_prime(p):
            raise ValueError("F_p needs a prime, got %r" % (p,))
        self.p = p
        self.characteristic = p
        self.name = "fp:%d" % p
        self.zero = FpElt(0, p)
        self.one = FpElt(1, p)

    def of_int(self, n):
        return FpElt(n, self.p)

    def inv_int(self, n):
        if n % self.p == 0:
            raise ZeroDivisionError("%d is zero in F_%d" % (n, self.p))
        return FpElt(pow(n, self.p - 2, self.p), self.p)

    def __repr__(self):
        return "GF(%d)" % self.p


def parse_field(text):
    """Parse a field flag: "q" for the rationals, "fp:<p>" for a prime field."""
    if text in (None, "", "q", "Q"):
        return QQ
    if text.startswith("fp:"):
        return PrimeField(int(text[3:]))
    raise ValueError("unknown field %r (expected 'q' or 'fp:<p>')" % (text,))
