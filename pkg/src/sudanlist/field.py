"""Arithmetic in prime fields GF(p).

Polynomial and matrix code works on plain ``int`` residues in ``[0, p)`` and
uses the int-level helpers on :class:`FieldCtx`; :class:`FieldElement` is the
checked value type used at API boundaries.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import FieldMismatchError

MAX_MODULUS = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` by trial division, ascending."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def egcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``s*a + t*b == g == gcd(a, b)``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    return a, s0, t0


@dataclass(frozen=True)
class FieldCtx:
    """The prime field GF(p), ``2 <= p <= 2**16``."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or isinstance(self.p, bool):
            raise TypeError(f"modulus must be an int, got {self.p!r}")
        if not 2 <= self.p <= MAX_MODULUS:
            raise ValueError(f"modulus {self.p} outside [2, {MAX_MODULUS}]")
        if not is_prime(self.p):
            raise ValueError(f"modulus {self.p} is not prime")

    def __call__(self, value: int) -> FieldElement:
        return FieldElement(value % self.p, self)

    def __iter__(self):
        return (FieldElement(v, self) for v in range(self.p))

    def __len__(self):
        return self.p

    @property
    def zero(self) -> FieldElement:
        return FieldElement(0, self)

    @property
    def one(self) -> FieldElement:
        return FieldElement(1, self)

    def inv_int(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        _, s, _ = egcd(a, self.p)
        return s % self.p

    def residue(self, value) -> int:
        """Canonical int residue of an int or a FieldElement of this field."""
        if isinstance(value, FieldElement):
            if value.ctx != self:
                raise FieldMismatchError(f"element of GF({value.ctx.p}) used in GF({self.p})")
            return value.value
        return int(value) % self.p

    @cached_property
    def generator(self) -> FieldElement:
        return find_generator(self)

    def __repr__(self):
        return f"GF({self.p})"

    def to_json(self) -> int:
        return self.p


@dataclass(frozen=True)
class FieldElement:
    value: int
    ctx: FieldCtx

    def __post_init__(self):
        if not 0 <= self.value < self.ctx.p:
            raise ValueError(f"{self.value} is not a canonical residue mod {self.ctx.p}")

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.ctx != self.ctx:
                raise FieldMismatchError(f"GF({self.ctx.p}) vs GF({other.ctx.p})")
            return other.value
        if isinstance(other, int):
            return other % self.ctx.p
        return NotImplemented

    def _wrap(self, v: int) -> FieldElement:
        return FieldElement(v % self.ctx.p, self.ctx)

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

    def __neg__(self):
        return self._wrap(-self.value)

    def inverse(self) -> FieldElement:
        return FieldElement(self.ctx.inv_int(self.value), self.ctx)

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return self._wrap(self.value * self.ctx.inv_int(o))

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return self._wrap(pow(self.value, e, self.ctx.p))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.value == other.value and self.ctx == other.ctx
        if isinstance(other, int):
            return self.value == other % self.ctx.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.ctx.p))

    def __int__(self):
        return self.value

    __index__ = __int__

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value} (mod {self.ctx.p})"

    def __str__(self):
        return str(self.value)


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def multiplicative_order(a: FieldElement) -> int:
    if a.value == 0:
        raise ZeroDivisionError("0 is not in the multiplicative group")
    p = a.ctx.p
    order = p - 1
    for q in prime_factors(p - 1):
        while order % q == 0 and pow(a.value, order // q, p) == 1:
            order //= q
    return order


def find_generator(ctx: FieldCtx) -> FieldElement:
    """Smallest ``w`` whose powers run through every nonzero element of ``ctx``."""
    p = ctx.p
    factors = prime_factors(p - 1)
    for w in range(1, p):
        if all(pow(w, (p - 1) // q, p) != 1 for q in factors):
            return FieldElement(w, ctx)
    raise AssertionError(f"no generator found for GF({p})")
