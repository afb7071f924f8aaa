"""Exact scalars: arbitrary-precision rationals and prime fields GF(p).

Rational scalars are `fractions.Fraction` (always lowest terms, positive
denominator).  Prime-field scalars are `GFElement` residues stored reduced
to [0, p).  Both interoperate with plain ints in arithmetic, so generic
code can scale by integer literals.  No floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NotPrime, ParseError

MAX_PRIME = 2**31


def is_prime(n: int) -> bool:
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


class GFElement:
    """Residue in GF(p), reduced to [0, p)."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _lift(self, other):
        if isinstance(other, GFElement):
            if other.p != self.p:
                raise ValueError("mixed prime fields")
            return other.v
        if isinstance(other, int):
            return other
        return None

    def __add__(self, other):
        w = self._lift(other)
        if w is None:
            return NotImplemented
        return GFElement(self.v + w, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        w = self._lift(other)
        if w is None:
            return NotImplemented
        return GFElement(self.v - w, self.p)

    def __rsub__(self, other):
        w = self._lift(other)
        if w is None:
            return NotImplemented
        return GFElement(w - self.v, self.p)

    def __mul__(self, other):
        w = self._lift(other)
        if w is None:
            return NotImplemented
        return GFElement(self.v * w, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        w = self._lift(other)
        if w is None:
            return NotImplemented
        if w % self.p == 0:
            raise ZeroDivisionError("division by zero in GF(p)")
        return GFElement(self.v * pow(w, -1, self.p), self.p)

    def __rtruediv__(self, other):
        w = self._lift(other)
        if w is None:
            return NotImplemented
        if self.v == 0:
            raise ZeroDivisionError("division by zero in GF(p)")
        return GFElement(w * pow(self.v, -1, self.p), self.p)

    def __neg__(self):
        return GFElement(-self.v, self.p)

    def __pow__(self, n):
        return GFElement(pow(self.v, n, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, GFElement):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        # equal to hash(int) for the reduced residue, keeping dict keys sane
        return hash(self.v)

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return str(self.v)


class Rationals:
    """The field of rational numbers."""

    kind = "rationals"
    char = 0
    zero = Fraction(0)
    one = Fraction(1)

    def of(self, num, den=1):
        return Fraction(num, den)

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        raise TypeError(f"cannot coerce {x!r} into the rationals")

    def parse(self, obj):
        """Scalar from a JSON value: int, "a/b" string, or [num, den] pair."""
        try:
            if isinstance(obj, bool):
                raise ValueError("bool is not a scalar")
            if isinstance(obj, int):
                return Fraction(obj)
            if isinstance(obj, str):
                return Fraction(obj)
            if isinstance(obj, (list, tuple)) and len(obj) == 2:
                return Fraction(int(obj[0]), int(obj[1]))
        except (ValueError, ZeroDivisionError, TypeError) as exc:
            raise ParseError(f"bad rational scalar {obj!r}: {exc}") from exc
        raise ParseError(f"bad rational scalar {obj!r}")

    def format(self, x) -> str:
        return str(x)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("rationals")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """GF(p) for a prime p < 2**31."""

    kind = "prime"

    def __init__(self, p: int):
        if not isinstance(p, int) or p < 2 or p >= MAX_PRIME or not is_prime(p):
            raise NotPrime(f"not an admissible prime: {p!r}")
        self.p = p
        self.char = p
        self.zero = GFElement(0, p)
        self.one = GFElement(1, p)

    def of(self, num, den=1):
        if den % self.p == 0:
            raise ZeroDivisionError("denominator vanishes in GF(p)")
        return GFElement(num * pow(den, -1, self.p), self.p)

    def coerce(self, x):
        if isinstance(x, GFElement):
            if x.p != self.p:
                raise TypeError("element of a different prime field")
            return x
        if isinstance(x, int):
            return GFElement(x, self.p)
        raise TypeError(f"cannot coerce {x!r} into GF({self.p})")

    def parse(self, obj):
        try:
            if isinstance(obj, bool):
                raise ValueError("bool is not a scalar")
            if isinstance(obj, int):
                return GFElement(obj, self.p)
            if isinstance(obj, str):
                f = Fraction(obj)
                return self.of(f.numerator, f.denominator)
            if isinstance(obj, (list, tuple)) and len(obj) == 2:
                return self.of(int(obj[0]), int(obj[1]))
        except (ValueError, ZeroDivisionError, TypeError) as exc:
            raise ParseError(f"bad GF({self.p}) scalar {obj!r}: {exc}") from exc
        raise ParseError(f"bad GF({self.p}) scalar {obj!r}")

    def format(self, x) -> str:
        return str(x.v)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = Rationals()


def parse_field(obj) -> Rationals | PrimeField:
    """Field from a JSON block like {"kind": "rationals"} or {"kind": "prime", "p": 7}."""
    if not isinstance(obj, dict) or "kind" not in obj:
        raise ParseError(f"bad field block {obj!r}")
    kind = obj["kind"]
    if kind == "rationals":
        return QQ
    if kind in ("prime", "gf"):
        if "p" not in obj:
            raise ParseError("prime field block needs p")
        try:
            return PrimeField(obj["p"])
        except NotPrime as exc:
            raise ParseError(str(exc)) from exc
    raise ParseError(f"unknown field kind {kind!r}")


def field_to_json(field) -> dict:
    if isinstance(field, Rationals):
        return {"kind": "rationals"}
    return {"kind": "prime", "p": field.p}
