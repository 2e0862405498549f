"""Exact arithmetic in the cyclotomic field Q(zeta_p), p an odd prime.

An element is a vector of ``fractions.Fraction`` coefficients over the power
basis 1, zeta, ..., zeta^(p-2), so every value is exact and canonically
represented (lowest terms, positive denominator).  Products are reduced with
the relation zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2)); inverses come from
the extended Euclidean algorithm against the p-th cyclotomic polynomial
1 + x + ... + x^(p-1), which is irreducible over Q.

The automorphism group over Q is cyclic of order m = p - 1.  The generator
used throughout this package sends zeta to zeta^g, where g is the smallest
primitive root modulo p (smallest for reproducibility), so applying it e
times permutes basis exponents by i -> g^e * i (mod p) followed by a single
reduction step.  An element is fixed by the generator exactly when it is
rational, i.e. when all coefficients past the constant one vanish.

All values are immutable after construction; operations are pure functions,
safe to share between threads.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

Rational = Fraction  # canonical scalar type of the base field
Scalar = Union[int, Fraction]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def _smallest_primitive_root(p: int) -> int:
    # g generates (Z/p)^* iff g^((p-1)/q) != 1 mod p for every prime q | p-1.
    factors = _prime_factors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    raise ArithmeticError(f"no primitive root modulo {p}")  # unreachable for prime p


class GaloisContext:
    """Field parameters of Q(zeta_p)/Q.

    Holds the odd prime conductor ``p``, the extension degree ``m = p - 1``,
    and the exponent ``g`` (smallest primitive root mod p) of the generator
    automorphism zeta -> zeta^g.  Two contexts are interchangeable iff they
    share ``p``.
    """

    __slots__ = ("p", "m", "g")

    def __init__(self, p: int) -> None:
        if p == 2 or not _is_prime(p):
            raise ValueError(f"conductor must be an odd prime, got {p}")
        self.p = p
        self.m = p - 1
        self.g = _smallest_primitive_root(p)

    def __repr__(self) -> str:
        return f"GaloisContext(p={self.p})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GaloisContext) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("GaloisContext", self.p))

    def element(self, coeffs: Iterable[Scalar]) -> CycloElement:
        """Element with the given power-basis coefficients (length m)."""
        return CycloElement(self, coeffs)

    def zero(self) -> CycloElement:
        return CycloElement(self, (0,) * self.m)

    def one(self) -> CycloElement:
        return self.from_rational(1)

    def from_rational(self, value: Scalar) -> CycloElement:
        return CycloElement(self, (Fraction(value),) + (Fraction(0),) * (self.m - 1))

    def zeta(self, power: int = 1) -> CycloElement:
        """zeta^power, reduced into the power basis."""
        t = power % self.p
        if t < self.m:
            return CycloElement(self, tuple(1 if i == t else 0 for i in range(self.m)))
        # zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2))
        return CycloElement(self, (-1,) * self.m)

    @property
    def basis(self) -> tuple[CycloElement, ...]:
        """The fixed power basis 1, zeta, ..., zeta^(m-1)."""
        return tuple(self.zeta(i) for i in range(self.m))

    def to_obj(self) -> dict:
        return {"p": self.p}

    @classmethod
    def from_obj(cls, obj: dict) -> GaloisContext:
        return cls(int(obj["p"]))


def _poly_trim(coeffs: list[Fraction]) -> list[Fraction]:
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


def _poly_divmod(num: list[Fraction], den: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    num = num[:]
    if len(num) < len(den):
        return [], _poly_trim(num)
    quot = [Fraction(0)] * (len(num) - len(den) + 1)
    inv_lead = 1 / den[-1]
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1] * inv_lead
        if c:
            quot[i] = c
            for j, d in enumerate(den):
                num[i + j] -= c * d
    return quot, _poly_trim(num)


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _poly_trim(out)


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, ai in enumerate(a):
        out[i] += ai
    for i, bi in enumerate(b):
        out[i] -= bi
    return _poly_trim(out)


class CycloElement:
    """One value of Q(zeta_p): an immutable coefficient vector over the power basis."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: GaloisContext, coeffs: Iterable[Scalar]) -> None:
        cs = tuple(Fraction(c) for c in coeffs)
        if len(cs) != ctx.m:
            raise ValueError(f"expected {ctx.m} coefficients, got {len(cs)}")
        self.ctx = ctx
        self.coeffs = cs

    # -- coercion -------------------------------------------------------

    def _coerce(self, other) -> CycloElement | None:
        if isinstance(other, CycloElement):
            if other.ctx.p != self.ctx.p:
                raise ValueError(
                    f"context mismatch: p={self.ctx.p} vs p={other.ctx.p}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return self.ctx.from_rational(other)
        return None

    # -- ring operations ------------------------------------------------

    def __add__(self, other) -> CycloElement:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return CycloElement(self.ctx, tuple(a + b for a, b in zip(self.coeffs, rhs.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> CycloElement:
        return CycloElement(self.ctx, tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> CycloElement:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return CycloElement(self.ctx, tuple(a - b for a, b in zip(self.coeffs, rhs.coeffs)))

    def __rsub__(self, other) -> CycloElement:
        return (-self) + other

    def __mul__(self, other) -> CycloElement:
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            return CycloElement(self.ctx, tuple(c * f for c in self.coeffs))
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        m, p = self.ctx.m, self.ctx.p
        raw = [Fraction(0)] * (2 * m - 1)
        for i, ai in enumerate(self.coeffs):
            if ai:
                for j, bj in enumerate(rhs.coeffs):
                    if bj:
                        raw[i + j] += ai * bj
        out = [Fraction(0)] * m
        tail = Fraction(0)  # accumulated coefficient of zeta^(p-1)
        for t, c in enumerate(raw):
            if not c:
                continue
            r = t % p
            if r < m:
                out[r] += c
            else:
                tail += c
        if tail:
            for i in range(m):
                out[i] -= tail
        return CycloElement(self.ctx, out)

    __rmul__ = __mul__

    def inverse(self) -> CycloElement:
        """Multiplicative inverse; inverting zero raises ZeroDivisionError."""
        if not any(self.coeffs):
            raise ZeroDivisionError("zero has no inverse in Q(zeta_p)")
        p, m = self.ctx.p, self.ctx.m
        # Extended gcd of the coefficient polynomial with 1 + x + ... + x^(p-1).
        r_prev: list[Fraction] = [Fraction(1)] * p
        r_cur = _poly_trim(list(self.coeffs))
        t_prev: list[Fraction] = []
        t_cur: list[Fraction] = [Fraction(1)]
        while r_cur:
            quot, rem = _poly_divmod(r_prev, r_cur)
            r_prev, r_cur = r_cur, rem
            t_prev, t_cur = t_cur, _poly_sub(t_prev, _poly_mul(quot, t_cur))
        # gcd is a nonzero constant because the modulus is irreducible over Q.
        scale = 1 / r_prev[0]
        inv = [c * scale for c in t_prev]
        if len(inv) > m:
            raise ArithmeticError("inverse degree exceeded the basis")  # unreachable
        inv += [Fraction(0)] * (m - len(inv))
        return CycloElement(self.ctx, inv)

    def __truediv__(self, other) -> CycloElement:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self * rhs.inverse()

    def __rtruediv__(self, other) -> CycloElement:
        return self.inverse() * other

    def __pow__(self, exponent: int) -> CycloElement:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.ctx.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # -- automorphism -----------------------------------------------------

    def aut(self, e: int) -> CycloElement:
        """Image under the e-th power of the generator automorphism zeta -> zeta^g."""
        ctx = self.ctx
        e %= ctx.m
        if e == 0:
            return self
        shift = pow(ctx.g, e, ctx.p)
        out = [Fraction(0)] * ctx.m
        tail = Fraction(0)  # accumulated coefficient of zeta^(p-1)
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            t = (shift * i) % ctx.p
            if t < ctx.m:
                out[t] += c
            else:
                tail += c
        if tail:
            for i in range(ctx.m):
                out[i] -= tail
        return CycloElement(ctx, out)

    # -- predicates and views ---------------------------------------------

    def is_rational(self) -> bool:
        """True iff the element lies in the base field Q."""
        return not any(self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.coeffs[0]

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CycloElement):
            return NotImplemented
        return self.ctx.p == other.ctx.p and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.ctx.p, self.coeffs))

    # -- serialization ------------------------------------------------------

    def to_strings(self) -> list[str]:
        """Coefficients as "num/den" strings in lowest terms."""
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]

    @classmethod
    def from_strings(cls, ctx: GaloisContext, items: Iterable[str]) -> CycloElement:
        return cls(ctx, [Fraction(s) for s in items])

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*z")
            else:
                terms.append(f"{c}*z^{i}")
        return " + ".join(terms) if terms else "0"

    def __repr__(self) -> str:
        return f"CycloElement(p={self.ctx.p}, {self})"
