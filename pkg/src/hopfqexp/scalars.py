"""Exact rational and cyclotomic-field arithmetic.

Every scalar in this package is an element of a fixed cyclotomic field
``Q(zeta_m)`` (the *working conductor* ``m``).  An element is stored in
the power basis ``1, zeta, ..., zeta^{phi(m)-1}`` modulo the m-th
cyclotomic polynomial, as a tuple of integer coordinates over a single
positive denominator.  Representations are canonical (content and
denominator coprime, denominator positive), so equality is a plain
coefficient comparison and values are hashable.

Rationals are ``fractions.Fraction`` at the API boundary; they embed
into any conductor automatically.  Elements of genuinely different
cyclotomic fields must be lifted explicitly (`lift_conductor`).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence, Union

Rational = Fraction

RationalLike = Union[int, Fraction]


class ConductorMismatch(ValueError):
    """Raised when two scalars live in different cyclotomic fields."""


def euler_phi(m: int) -> int:
    """Euler's totient of a positive integer."""
    if m < 1:
        raise ValueError("conductor must be positive")
    result = m
    n = m
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


def _divisors(m: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= m:
        if m % d == 0:
            small.append(d)
            if d != m // d:
                large.append(m // d)
        d += 1
    return small + large[::-1]


def _int_poly_div_exact(num: list[int], den: Sequence[int]) -> list[int]:
    # den is monic; division of integer polynomials is exact here.
    num = list(num)
    dd = len(den) - 1
    qd = len(num) - 1 - dd
    quot = [0] * (qd + 1)
    for k in range(qd, -1, -1):
        c = num[k + dd]
        quot[k] = c
        if c:
            for j in range(dd + 1):
                num[k + j] -= c * den[j]
    if any(num):
        raise ArithmeticError("non-exact polynomial division")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_int_coeffs(m: int) -> tuple[int, ...]:
    """Integer coefficients of the m-th cyclotomic polynomial, ascending."""
    if m < 1:
        raise ValueError("conductor must be positive")
    num = [0] * (m + 1)
    num[0], num[m] = -1, 1
    for d in _divisors(m):
        if d < m:
            num = _int_poly_div_exact(num, cyclotomic_int_coeffs(d))
    return tuple(num)


@lru_cache(maxsize=None)
def _reduction_rows(m: int) -> tuple[tuple[int, ...], ...]:
    # Row j is x^{phi+j} reduced mod Phi_m, as integer coordinates.
    phi = euler_phi(m)
    cyc = cyclotomic_int_coeffs(m)
    rows = []
    cur = [-c for c in cyc[:phi]]  # x^phi
    rows.append(tuple(cur))
    for _ in range(phi - 2):
        nxt = [0] + cur[:-1]
        top = cur[-1]
        if top:
            for i in range(phi):
                nxt[i] -= top * cyc[i]
        rows.append(tuple(nxt))
        cur = nxt
    return tuple(rows)


def _reduce_vector(vec: list[int], m: int, phi: int) -> list[int]:
    # Fold coordinates of degree >= phi back using precomputed rows.
    if len(vec) <= phi:
        return vec + [0] * (phi - len(vec))
    rows = _reduction_rows(m)
    out = vec[:phi]
    for k in range(phi, len(vec)):
        c = vec[k]
        if c:
            row = rows[k - phi]
            for i in range(phi):
                if row[i]:
                    out[i] += c * row[i]
    return out


@lru_cache(maxsize=None)
def _power_vector(m: int, e: int) -> tuple[int, ...]:
    # Coordinates of zeta_m^e in the power basis.
    phi = euler_phi(m)
    e %= m
    if e < phi:
        v = [0] * phi
        v[e] = 1
        return tuple(v)
    prev = list(_power_vector(m, e - 1))
    return tuple(_reduce_vector([0] + prev, m, phi))


def _vec_gcd(nums: Iterable[int], den: int) -> int:
    g = den
    for n in nums:
        g = gcd(g, n)
        if g == 1:
            return 1
    return g


class CyclotomicNumber:
    """An exact element of Q(zeta_m) in canonical power-basis form."""

    __slots__ = ("conductor", "num", "den")

    def __init__(self, conductor: int, coeffs: Sequence[RationalLike]):
        phi = euler_phi(conductor)
        if len(coeffs) != phi:
            raise ValueError(
                f"expected {phi} coordinates for conductor {conductor}, got {len(coeffs)}"
            )
        fracs = [Fraction(c) for c in coeffs]
        den = 1
        for f in fracs:
            den = den * f.denominator // gcd(den, f.denominator)
        num = tuple(int(f * den) for f in fracs)
        self.conductor = conductor
        self.num, self.den = _normalize(num, den)

    @classmethod
    def _raw(cls, conductor: int, num: tuple[int, ...], den: int) -> "CyclotomicNumber":
        obj = object.__new__(cls)
        obj.conductor = conductor
        obj.num, obj.den = _normalize(num, den)
        return obj

    @classmethod
    def rational(cls, value: RationalLike, conductor: int = 1) -> "CyclotomicNumber":
        f = Fraction(value)
        phi = euler_phi(conductor)
        num = (f.numerator,) + (0,) * (phi - 1)
        return cls._raw(conductor, num, f.denominator)

    @classmethod
    def zeta(cls, m: int, power: int = 1) -> "CyclotomicNumber":
        return cls._raw(m, _power_vector(m, power), 1)

    @classmethod
    def zero(cls, conductor: int = 1) -> "CyclotomicNumber":
        return cls.rational(0, conductor)

    @classmethod
    def one(cls, conductor: int = 1) -> "CyclotomicNumber":
        return cls.rational(1, conductor)

    # -- predicates ------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.num)

    def __bool__(self) -> bool:
        return any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self.num[0], self.den)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(n, self.den) for n in self.num)

    # -- coercion --------------------------------------------------------

    def _coerce(self, other) -> "CyclotomicNumber | None":
        if isinstance(other, CyclotomicNumber):
            if other.conductor == self.conductor:
                return other
            if other.is_rational():
                return CyclotomicNumber._raw(
                    self.conductor,
                    (other.num[0],) + (0,) * (len(self.num) - 1),
                    other.den,
                )
            if self.is_rational():
                return other  # caller re-dispatches with roles swapped
            raise ConductorMismatch(
                f"conductors {self.conductor} and {other.conductor}; lift explicitly"
            )
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            return CyclotomicNumber._raw(
                self.conductor, (f.numerator,) + (0,) * (len(self.num) - 1), f.denominator
            )
        return None

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.conductor != self.conductor:  # self rational, o genuine
            return o + self
        a, b = self, o
        if a.den == b.den:
            return CyclotomicNumber._raw(
                a.conductor, tuple(x + y for x, y in zip(a.num, b.num)), a.den
            )
        return CyclotomicNumber._raw(
            a.conductor,
            tuple(x * b.den + y * a.den for x, y in zip(a.num, b.num)),
            a.den * b.den,
        )

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber._raw(self.conductor, tuple(-x for x in self.num), self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.conductor != self.conductor:
            return o * self
        a, b = self.num, o.num
        phi = len(a)
        if phi == 1:
            return CyclotomicNumber._raw(self.conductor, (a[0] * b[0],), self.den * o.den)
        prod = [0] * (2 * phi - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        red = _reduce_vector(prod, self.conductor, phi)
        return CyclotomicNumber._raw(self.conductor, tuple(red), self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicNumber":
        if self.is_zero():
            raise ZeroDivisionError("division by zero in cyclotomic field")
        if self.is_rational():
            return CyclotomicNumber._raw(
                self.conductor,
                (self.den if self.num[0] > 0 else -self.den,) + (0,) * (len(self.num) - 1),
                abs(self.num[0]),
            )
        # Extended Euclid against the cyclotomic modulus, over Q.
        a = [Fraction(n, self.den) for n in self.num]
        mod = [Fraction(c) for c in cyclotomic_int_coeffs(self.conductor)]
        g, s = _frac_poly_half_egcd(a, mod)
        # g is a nonzero constant; a * s == g (mod Phi_m)
        inv = [c / g[0] for c in s]
        phi = len(self.num)
        inv = inv + [Fraction(0)] * (phi - len(inv))
        return CyclotomicNumber(self.conductor, inv[:phi])

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.conductor != self.conductor:
            return (o.inverse()) * self
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = CyclotomicNumber.one(self.conductor)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison ------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.as_fraction() == Fraction(other)
        if isinstance(other, CyclotomicNumber):
            if self.conductor == other.conductor:
                return self.num == other.num and self.den == other.den
            if self.is_rational() and other.is_rational():
                return self.as_fraction() == other.as_fraction()
            return False
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.as_fraction())
        return hash((self.conductor, self.num, self.den))

    def __repr__(self):
        if self.is_rational():
            return f"Cyc({self.as_fraction()})"
        return f"Cyc(m={self.conductor}, {list(self.coeffs)})"


def _normalize(num: tuple[int, ...], den: int) -> tuple[tuple[int, ...], int]:
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    if den < 0:
        num, den = tuple(-x for x in num), -den
    if den != 1:
        g = _vec_gcd(num, den)
        if g > 1:
            num = tuple(x // g for x in num)
            den //= g
    return num, den


def _frac_poly_half_egcd(a: list[Fraction], b: list[Fraction]):
    """Return (g, s) with g = gcd(a, b) (a constant here) and s*a = g mod b."""
    def trim(p):
        while p and p[-1] == 0:
            p.pop()
        return p

    r0, r1 = trim(list(a)), trim(list(b))
    s0, s1 = [Fraction(1)], []
    while r1:
        q, r = _frac_poly_divmod(r0, r1)
        r0, r1 = r1, trim(r)
        s0, s1 = s1, trim(_frac_poly_sub(s0, _frac_poly_mul(q, s1)))
    return r0, s0


def _frac_poly_divmod(a: list[Fraction], b: list[Fraction]):
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    if len(a) < len(b):
        return [], a
    q = [Fraction(0)] * (len(a) - db)
    for k in range(len(a) - db - 1, -1, -1):
        c = a[k + db] / lb
        q[k] = c
        if c:
            for j in range(db + 1):
                a[k + j] -= c * b[j]
    return q, a[:db]


def _frac_poly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _frac_poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    for i, y in enumerate(b):
        a[i] -= y
    return a


def lift_conductor(a: CyclotomicNumber, target: int) -> CyclotomicNumber:
    """Express ``a`` in Q(zeta_target); requires conductor(a) | target."""
    m = a.conductor
    if target == m:
        return a
    if target % m != 0:
        raise ConductorMismatch(f"conductor {m} does not divide target {target}")
    k = target // m
    phi = euler_phi(target)
    acc = [0] * phi
    for i, c in enumerate(a.num):
        if c:
            vec = _power_vector(target, i * k)
            for j in range(phi):
                if vec[j]:
                    acc[j] += c * vec[j]
    return CyclotomicNumber._raw(target, tuple(acc), a.den)


def as_scalar(value, conductor: int) -> CyclotomicNumber:
    """Coerce an int/Fraction/CyclotomicNumber into the given conductor."""
    if isinstance(value, CyclotomicNumber):
        if value.conductor == conductor:
            return value
        if value.is_rational():
            return CyclotomicNumber.rational(value.as_fraction(), conductor)
        return lift_conductor(value, conductor)
    return CyclotomicNumber.rational(Fraction(value), conductor)


# -- text form ------------------------------------------------------------

def format_rational(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


def scalar_to_json(c: CyclotomicNumber) -> list[str]:
    return [format_rational(f) for f in c.coeffs]


def scalar_from_json(data: Sequence[str], conductor: int) -> CyclotomicNumber:
    return CyclotomicNumber(conductor, [parse_rational(t) for t in data])
