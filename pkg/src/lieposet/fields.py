"""Exact scalar arithmetic over Q and prime fields F_p.

Scalars are kept as "raw" values inside the hot paths: Python ``int`` or
``Fraction`` for Q, ``int`` in ``[0, p)`` for F_p. :class:`Scalar` wraps a
raw value together with its field for user-facing arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

RATIONALS = "Rationals"
PRIME_FIELD = "PrimeField"


class FieldError(ValueError):
    pass


class NonPrimeModulus(FieldError):
    pass


class MissingModulus(FieldError):
    pass


class ContextMismatch(FieldError):
    pass


class CharacteristicTooSmall(FieldError):
    pass


def require_characteristic(field: "FieldCtx", n: int) -> None:
    """Refuse 0 < char <= n; the poset constructions divide by numbers up to n."""
    if field.p and field.p <= n:
        raise CharacteristicTooSmall(
            f"characteristic {field.p} must be 0 or greater than N={n}"
        )


# ZeroDivisionError is what Python users expect; keep the documented name as an alias.
DivisionByZero = ZeroDivisionError


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin (exact for n < 3.3e24)."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def egcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with a*x + b*y == g == gcd(a, b)."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a - (a // b) * b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def inv_mod(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroDivisionError(f"0 has no inverse mod {p}")
    g, x, _ = egcd(a, p)
    assert g == 1
    return x % p


@dataclass(frozen=True)
class FieldCtx:
    kind: str
    p: int = 0

    def __post_init__(self):
        if self.kind == PRIME_FIELD:
            if not self.p:
                raise MissingModulus("a prime field needs a modulus")
            if not is_prime(self.p):
                raise NonPrimeModulus(f"{self.p} is not prime")
        elif self.kind == RATIONALS:
            if self.p:
                raise FieldError("the rationals take no modulus")
        else:
            raise FieldError(f"unknown field kind {self.kind!r}")

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def is_prime_field(self) -> bool:
        return self.kind == PRIME_FIELD

    def __str__(self):
        return f"fp:{self.p}" if self.p else "q"

    # -- raw value helpers -------------------------------------------------

    def reduce(self, x):
        """Canonical raw value of an int, Fraction or raw value."""
        if self.p:
            if isinstance(x, Fraction):
                return x.numerator * inv_mod(x.denominator, self.p) % self.p
            return x % self.p
        if isinstance(x, Fraction) and x.denominator == 1:
            return x.numerator
        return x

    def inv(self, x):
        if self.p:
            return inv_mod(x, self.p)
        if x == 0:
            raise ZeroDivisionError("inverse of 0")
        return self.reduce(1 / Fraction(x))

    def div(self, a, b):
        return self.reduce(a * self.inv(b))

    def parse(self, text: str):
        text = text.strip()
        return self.reduce(Fraction(text))

    def format(self, x) -> str:
        x = self.reduce(x)
        if isinstance(x, Fraction):
            return f"{x.numerator}/{x.denominator}"
        return str(x)

    def __call__(self, value) -> "Scalar":
        if isinstance(value, Scalar):
            if value.field != self:
                raise ContextMismatch(f"{value.field} vs {self}")
            return value
        if isinstance(value, str):
            return Scalar(self, self.parse(value))
        return Scalar(self, self.reduce(value))


QQ = FieldCtx(RATIONALS)


def field_create(kind: str, p: int | None = None) -> FieldCtx:
    if kind in (RATIONALS, "q", "Q"):
        return QQ
    if kind in (PRIME_FIELD, "fp"):
        if p is None:
            raise MissingModulus("a prime field needs a modulus")
        return FieldCtx(PRIME_FIELD, p)
    raise FieldError(f"unknown field kind {kind!r}")


def parse_field(spec: str) -> FieldCtx:
    """Parse the CLI form ``q`` or ``fp:7``."""
    spec = spec.strip().lower()
    if spec in ("q", "qq", "rationals"):
        return QQ
    if spec.startswith("fp"):
        _, _, p = spec.partition(":")
        if not p:
            raise MissingModulus("expected fp:<prime>")
        try:
            modulus = int(p)
        except ValueError:
            raise FieldError(f"bad modulus {p!r}") from None
        return FieldCtx(PRIME_FIELD, modulus)
    raise FieldError(f"unknown field spec {spec!r}")


Number = Union[int, Fraction, "Scalar"]


@dataclass(frozen=True)
class Scalar:
    field: FieldCtx
    value: Union[int, Fraction]

    def _other(self, other) -> Union[int, Fraction]:
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise ContextMismatch(f"{other.field} vs {self.field}")
            return other.value
        if isinstance(other, (int, Fraction)):
            return self.field.reduce(other)
        return NotImplemented

    def _wrap(self, x) -> "Scalar":
        return Scalar(self.field, self.field.reduce(x))

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.value - o)

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(o - self.value)

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.value * o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.value * self.field.inv(o))

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._wrap(o * self.field.inv(self.value))

    def __neg__(self):
        return self._wrap(-self.value)

    def inv(self) -> "Scalar":
        return Scalar(self.field, self.field.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise ContextMismatch(f"{other.field} vs {self.field}")
            return self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self.value == self.field.reduce(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return self.value != 0

    def __str__(self):
        return self.field.format(self.value)

    def __repr__(self):
        return f"Scalar({self}, {self.field})"


def arithmetic(a: Scalar, b: Scalar | None, op: str):
    """Dispatch form of the scalar operations (add, sub, mul, div, neg, inv, eq)."""
    if b is not None and a.field != b.field:
        raise ContextMismatch(f"{a.field} vs {b.field}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "neg":
        return -a
    if op == "inv":
        return a.inv()
    if op == "eq":
        return a == b
    raise ValueError(f"unknown op {op!r}")
