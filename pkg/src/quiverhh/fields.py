"""Exact ground fields: the rationals and prime fields F_p.

Every computation in this package runs over one of these; floating point is
never used.  Rationals are gmpy2.mpq (arbitrary precision, normalized
sign/gcd), with fractions.Fraction as a fallback; elements of F_p are plain
ints in [0, p).
"""

from __future__ import annotations

try:
    from gmpy2 import mpq as _mpq
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as _mpq


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class FieldSpec:
    """A ground field, given by its characteristic (0 means Q, else prime p)."""

    def __init__(self, characteristic: int):
        if characteristic != 0 and not _is_prime(characteristic):
            raise ValueError(f"characteristic must be 0 or prime, got {characteristic}")
        self.characteristic = characteristic
        if characteristic == 0:
            self.zero = _mpq(0)
            self.one = _mpq(1)
        else:
            self.zero = 0
            self.one = 1

    def __repr__(self):
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self.characteristic == other.characteristic

    def __hash__(self):
        return hash(("FieldSpec", self.characteristic))

    def __call__(self, value):
        """Coerce an int (or exact rational) into the field."""
        p = self.characteristic
        if p == 0:
            return _mpq(value)
        if not isinstance(value, int):
            # exact rational: coerce via modular inverse of the denominator
            num = int(value.numerator)
            den = int(value.denominator)
            return num * pow(den % p, -1, p) % p
        return value % p

    def add(self, a, b):
        return (a + b) % self.characteristic if self.characteristic else a + b

    def sub(self, a, b):
        return (a - b) % self.characteristic if self.characteristic else a - b

    def mul(self, a, b):
        return (a * b) % self.characteristic if self.characteristic else a * b

    def neg(self, a):
        return (-a) % self.characteristic if self.characteristic else -a

    def inv(self, a):
        if self.characteristic:
            return pow(a, -1, self.characteristic)
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a == 0


QQ = FieldSpec(0)


def GF(p: int) -> FieldSpec:
    if p == 0:
        raise ValueError("GF needs a prime; use QQ for characteristic 0")
    return FieldSpec(p)
