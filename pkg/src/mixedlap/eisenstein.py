"""Exact arithmetic in the Eisenstein integers Z[w], w = (1 + sqrt(3) i) / 2.

Elements are stored in the basis (1, w).  Because w is a primitive sixth root
of unity it satisfies w**2 = w - 1, which closes multiplication, and its
complex conjugate is 1 - w.
"""

from __future__ import annotations

import math

__all__ = [
    "EisensteinInt",
    "NotDivisibleError",
    "ZERO",
    "ONE",
    "OMEGA",
    "OMEGA_BAR",
    "UNITS",
    "mul",
    "conj",
    "norm",
    "exact_div",
    "to_complex",
]

_HALF_SQRT3 = math.sqrt(3.0) / 2.0


class NotDivisibleError(ArithmeticError):
    """Raised when an exact quotient in Z[w] does not exist."""


class EisensteinInt:
    """Immutable value ``a + b*w`` with arbitrary-precision integer parts."""

    __slots__ = ("a", "b")

    def __init__(self, a: int = 0, b: int = 0) -> None:
        object.__setattr__(self, "a", int(a))
        object.__setattr__(self, "b", int(b))

    def __setattr__(self, name, value):
        raise AttributeError("EisensteinInt is immutable")

    @classmethod
    def coerce(cls, x) -> EisensteinInt:
        if isinstance(x, EisensteinInt):
            return x
        if isinstance(x, int):
            return cls(x, 0)
        if isinstance(x, (tuple, list)) and len(x) == 2:
            return cls(x[0], x[1])
        raise TypeError(f"cannot interpret {x!r} as an Eisenstein integer")

    # ring operations

    def __add__(self, other):
        if isinstance(other, int):
            return EisensteinInt(self.a + other, self.b)
        if not isinstance(other, EisensteinInt):
            return NotImplemented
        return EisensteinInt(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            return EisensteinInt(self.a - other, self.b)
        if not isinstance(other, EisensteinInt):
            return NotImplemented
        return EisensteinInt(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        if isinstance(other, int):
            return EisensteinInt(other - self.a, -self.b)
        return NotImplemented

    def __neg__(self):
        return EisensteinInt(-self.a, -self.b)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, int):
            return EisensteinInt(self.a * other, self.b * other)
        if not isinstance(other, EisensteinInt):
            return NotImplemented
        a, b, c, d = self.a, self.b, other.a, other.b
        bd = b * d
        return EisensteinInt(a * c - bd, a * d + b * c + bd)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if self.norm() != 1:
                raise NotDivisibleError(f"{self} is not a unit")
            return self.conj() ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conj(self) -> EisensteinInt:
        return EisensteinInt(self.a + self.b, -self.b)

    def norm(self) -> int:
        a, b = self.a, self.b
        return a * a + a * b + b * b

    def exact_div(self, other) -> EisensteinInt:
        """Return ``q`` with ``q * other == self``; raise if no such ``q`` exists."""
        other = EisensteinInt.coerce(other)
        d = other.norm()
        if d == 0:
            raise ZeroDivisionError("division by zero in Z[w]")
        num = self * other.conj()
        qa, ra = divmod(num.a, d)
        qb, rb = divmod(num.b, d)
        if ra or rb:
            raise NotDivisibleError(f"{other} does not divide {self}")
        return EisensteinInt(qa, qb)

    def is_real(self) -> bool:
        return self.b == 0

    def to_complex(self) -> complex:
        # lossy once |a|, |b| exceed 2**53
        return complex(self.a + 0.5 * self.b, _HALF_SQRT3 * self.b)

    # comparisons and hashing

    def __eq__(self, other):
        if isinstance(other, EisensteinInt):
            return self.a == other.a and self.b == other.b
        if isinstance(other, int):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __bool__(self):
        return bool(self.a or self.b)

    # rendering

    def __repr__(self):
        return f"EisensteinInt({self.a}, {self.b})"

    def __str__(self):
        a, b = self.a, self.b
        if b == 0:
            return str(a)
        if b == 1:
            w = "ω"
        elif b == -1:
            w = "-ω"
        else:
            w = f"{b}ω"
        if a == 0:
            return w
        if w.startswith("-"):
            return f"{a}{w}"
        return f"{a}+{w}"

    def format_complex(self, digits: int = 6) -> str:
        z = self.to_complex()
        return f"{z.real:.{digits}f}{z.imag:+.{digits}f}i"

    def to_json(self) -> list[int]:
        return [self.a, self.b]

    @classmethod
    def from_json(cls, data) -> EisensteinInt:
        a, b = data
        return cls(a, b)


ZERO = EisensteinInt(0, 0)
ONE = EisensteinInt(1, 0)
OMEGA = EisensteinInt(0, 1)
OMEGA_BAR = EisensteinInt(1, -1)
# powers w**0 .. w**5
UNITS = (
    ONE,
    OMEGA,
    EisensteinInt(-1, 1),
    EisensteinInt(-1, 0),
    EisensteinInt(0, -1),
    EisensteinInt(1, -1),
)


def omega_power(k: int) -> EisensteinInt:
    """``w**k`` for any integer ``k``."""
    return UNITS[k % 6]


def mul(x: EisensteinInt, y: EisensteinInt) -> EisensteinInt:
    return x * y


def conj(x: EisensteinInt) -> EisensteinInt:
    return x.conj()


def norm(x: EisensteinInt) -> int:
    return x.norm()


def exact_div(x: EisensteinInt, y: EisensteinInt) -> EisensteinInt:
    return x.exact_div(y)


def to_complex(x: EisensteinInt) -> complex:
    return x.to_complex()
