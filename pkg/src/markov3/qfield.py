"""Exact arithmetic in real quadratic fields and eventually periodic continued fractions.

Rationals are :class:`fractions.Fraction`.  A :class:`QuadraticSurd` is the
number ``(a + b*sqrt(d))/c`` kept in a canonical form so that equality of
two surds over the same radicand is a field-wise comparison.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, total_ordering
from typing import Iterable, Sequence, Union

from .errors import EmptyWord, IndexBeyondRational, ParseError

Rat = Fraction
Number = Union[int, Fraction, "QuadraticSurd"]

_TRIAL_LIMIT = 100_000


def _primes_upto(n: int) -> list[int]:
    sieve = bytearray([1]) * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, n + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


_PRIMES = _primes_upto(_TRIAL_LIMIT)


def _is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


_PRIMORIAL = math.prod(_PRIMES)


@lru_cache(maxsize=65536)
def _square_split(d: int) -> tuple[int, int]:
    """Return (s, r) with d = s*s*r.

    Every prime below 10**5 is divided out (found through one gcd with their
    product), so r is exactly squarefree whenever the remaining cofactor is
    below 10**15, i.e. for every d below 10**15.  For larger d the cofactor
    may hide a square of two big primes; such representations of one field
    are reconciled by :func:`_same_field_ratio` rather than by factoring.
    """
    if d <= 1:
        return 1, d
    if _is_square(d):
        return math.isqrt(d), 1
    s, r, m = 1, 1, d
    g = math.gcd(m, _PRIMORIAL)
    for p in _PRIMES:
        if g == 1:
            break
        if g % p:
            continue
        g //= p
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        s *= p ** (e // 2)
        if e % 2:
            r *= p
    if _is_square(m):
        s *= math.isqrt(m)
    else:
        r *= m
    return s, r


def _same_field_ratio(d1: int, d2: int) -> Fraction | None:
    """Rational k with sqrt(d1) = k*sqrt(d2), or None."""
    if d1 == d2:
        return Fraction(1)
    prod = d1 * d2
    if not _is_square(prod):
        return None
    return Fraction(math.isqrt(prod), d2)


def _sign(n: int) -> int:
    return (n > 0) - (n < 0)


def _sign_one(a: int, b: int, d: int) -> int:
    """Sign of a + b*sqrt(d) using integers only."""
    if b == 0 or d == 0:
        return _sign(a)
    sa, sb = _sign(a), _sign(b)
    if sa == 0 or sa == sb:
        return sb
    diff = a * a - b * b * d
    if diff > 0:
        return sa
    if diff < 0:
        return sb
    return 0


def _sign_two(a: int, b: int, d1: int, c: int, d2: int) -> int:
    """Sign of a + b*sqrt(d1) + c*sqrt(d2)."""
    su = _sign_one(a, b, d1)
    sv = _sign(c) if d2 else 0
    if sv == 0:
        return su
    if su == 0 or su == sv:
        return sv
    # opposite signs: compare u^2 with v^2
    bigger = _sign_one(a * a + b * b * d1 - c * c * d2, 2 * a * b, d1)
    if bigger > 0:
        return su
    if bigger < 0:
        return sv
    return 0


@total_ordering
@dataclass(frozen=True, eq=False)
class QuadraticSurd:
    """The real number (a + b*sqrt(d))/c in canonical form."""

    a: int
    b: int
    c: int
    d: int

    @classmethod
    def make(cls, a: int, b: int = 0, c: int = 1, d: int = 0) -> "QuadraticSurd":
        if c == 0:
            raise ZeroDivisionError("zero denominator")
        if d < 0:
            raise ValueError("negative radicand")
        if b != 0 and d != 0:
            s, r = _square_split(d)
            b *= s
            d = r
            if d == 1:
                a, b, d = a + b, 0, 0
        if b == 0 or d == 0:
            b, d = 0, 0
        if c < 0:
            a, b, c = -a, -b, -c
        g = math.gcd(math.gcd(a, b), c)
        if g > 1:
            a, b, c = a // g, b // g, c // g
        return cls(a, b, c, d)

    @classmethod
    def rational(cls, q: int | Fraction) -> "QuadraticSurd":
        q = Fraction(q)
        return cls.make(q.numerator, 0, q.denominator, 0)

    @classmethod
    def sqrt(cls, r: int | Fraction) -> "QuadraticSurd":
        """sqrt(r) for a non-negative rational r."""
        r = Fraction(r)
        if r < 0:
            raise ValueError("negative radicand")
        # sqrt(n/m) = sqrt(n*m)/m; split n and m separately so the cached
        # factorizations of both are reused
        (s1, r1), (s2, r2) = _square_split(r.numerator), _square_split(r.denominator)
        return cls.make(0, s1 * s2, r.denominator, r1 * r2)

    @classmethod
    def coerce(cls, x: Number) -> "QuadraticSurd":
        if isinstance(x, QuadraticSurd):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.rational(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to QuadraticSurd")

    # -- predicates and parts ------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def rational_part(self) -> Fraction:
        return Fraction(self.a, self.c)

    def irrational_coeff(self) -> Fraction:
        return Fraction(self.b, self.c)

    def to_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is irrational")
        return Fraction(self.a, self.c)

    def conjugate(self) -> "QuadraticSurd":
        return QuadraticSurd(self.a, -self.b, self.c, self.d)

    def sign(self) -> int:
        return _sign_one(self.a, self.b, self.d)

    def __floor__(self) -> int:
        if self.b == 0:
            return self.a // self.c
        s = math.isqrt(self.b * self.b * self.d)
        if self.b > 0:
            return (self.a + s) // self.c
        return (self.a - s - 1) // self.c

    def __ceil__(self) -> int:
        return -math.floor(-self)

    def __float__(self) -> float:
        # debug only
        return (self.a + self.b * math.sqrt(self.d)) / self.c

    # -- arithmetic ------------------------------------------------------------

    def _align(self, other: "QuadraticSurd") -> tuple["QuadraticSurd", int]:
        """Rewrite other over self's radicand; returns (other', d)."""
        if other.b == 0 or self.b == 0 or other.d == self.d:
            return other, self.d or other.d
        k = _same_field_ratio(other.d, self.d)
        if k is None:
            raise ValueError(f"surds lie in different fields: sqrt({self.d}) vs sqrt({other.d})")
        # other.b*sqrt(other.d) = other.b*k*sqrt(self.d)
        bk = other.b * k
        return (
            QuadraticSurd.make(other.a * bk.denominator, bk.numerator, other.c * bk.denominator, self.d),
            self.d,
        )

    def __add__(self, other: Number) -> "QuadraticSurd":
        if isinstance(other, (int, Fraction)):
            o = Fraction(other)
            return QuadraticSurd.make(
                self.a * o.denominator + o.numerator * self.c, self.b * o.denominator, self.c * o.denominator, self.d
            )
        if not isinstance(other, QuadraticSurd):
            return NotImplemented
        o, d = self._align(other)
        return QuadraticSurd.make(self.a * o.c + o.a * self.c, self.b * o.c + o.b * self.c, self.c * o.c, d)

    __radd__ = __add__

    def __neg__(self) -> "QuadraticSurd":
        return QuadraticSurd(-self.a, -self.b, self.c, self.d)

    def __sub__(self, other: Number) -> "QuadraticSurd":
        if not isinstance(other, (int, Fraction, QuadraticSurd)):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Number) -> "QuadraticSurd":
        return (-self) + other

    def __mul__(self, other: Number) -> "QuadraticSurd":
        if isinstance(other, (int, Fraction)):
            o = Fraction(other)
            return QuadraticSurd.make(self.a * o.numerator, self.b * o.numerator, self.c * o.denominator, self.d)
        if not isinstance(other, QuadraticSurd):
            return NotImplemented
        o, d = self._align(other)
        return QuadraticSurd.make(
            self.a * o.a + self.b * o.b * d, self.a * o.b + self.b * o.a, self.c * o.c, d
        )

    __rmul__ = __mul__

    def reciprocal(self) -> "QuadraticSurd":
        # c/(a + b r) = c(a - b r)/(a^2 - b^2 d)
        norm = self.a * self.a - self.b * self.b * self.d
        if norm == 0:
            raise ZeroDivisionError("division by zero surd")
        return QuadraticSurd.make(self.c * self.a, -self.c * self.b, norm, self.d)

    def __truediv__(self, other: Number) -> "QuadraticSurd":
        if isinstance(other, (int, Fraction)):
            o = Fraction(other)
            if o == 0:
                raise ZeroDivisionError("division by zero")
            return QuadraticSurd.make(self.a * o.denominator, self.b * o.denominator, self.c * o.numerator, self.d)
        if not isinstance(other, QuadraticSurd):
            return NotImplemented
        return self * other.reciprocal()

    def __rtruediv__(self, other: Number) -> "QuadraticSurd":
        return self.reciprocal() * other

    # -- comparison ------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and Fraction(self.a, self.c) == other
        if not isinstance(other, QuadraticSurd):
            return NotImplemented
        return surd_cmp(self, other) == 0

    def __lt__(self, other: Number) -> bool:
        if not isinstance(other, (int, Fraction, QuadraticSurd)):
            return NotImplemented
        return surd_cmp(self, QuadraticSurd.coerce(other)) < 0

    def __hash__(self) -> int:
        if self.b == 0:
            return hash(Fraction(self.a, self.c))
        return hash((self.a, self.b, self.c, self.d))

    def __str__(self) -> str:
        return f"({self.a} + {self.b}*sqrt({self.d}))/{self.c}"

    def __repr__(self) -> str:
        return f"QuadraticSurd({self})"

    def decimal(self, digits: int = 20) -> str:
        """Debug-only decimal rendering, truncated toward minus infinity."""
        scale = 10**digits
        # floor(scale*(a + b sqrt d)/c)
        n = math.floor(self * scale)
        sign = "-" if n < 0 else ""
        n = abs(n)
        return f"{sign}{n // scale}.{n % scale:0{digits}d}"

    @classmethod
    def parse(cls, text: str) -> "QuadraticSurd":
        return parse_surd(text)


def surd_cmp(s: QuadraticSurd, t: QuadraticSurd) -> int:
    """Exact sign of s - t: -1, 0 or 1, using integer arithmetic only."""
    s, t = QuadraticSurd.coerce(s), QuadraticSurd.coerce(t)
    a = s.a * t.c - t.a * s.c
    if s.b == 0 or t.b == 0 or s.d == t.d:
        d = s.d or t.d
        return _sign_one(a, s.b * t.c - t.b * s.c, d)
    return _sign_two(a, s.b * t.c, s.d, -t.b * s.c, t.d)


def _try_add(s: QuadraticSurd, t: QuadraticSurd) -> QuadraticSurd | None:
    try:
        return s + t
    except ValueError:
        return None


@total_ordering
@dataclass(frozen=True)
class SurdSum:
    """s + t with s, t in two different quadratic fields.

    Only comparisons against numbers sharing a field with one of the terms
    are supported, which covers every cut value compared against a constant.
    """

    s: QuadraticSurd
    t: QuadraticSurd

    def _cmp(self, x: Number) -> int:
        x = QuadraticSurd.coerce(x)
        rest = _try_add(x, -self.t)
        if rest is not None:
            return surd_cmp(self.s, rest)
        rest = _try_add(x, -self.s)
        if rest is not None:
            return surd_cmp(self.t, rest)
        raise ValueError("comparison needs three distinct radicals")

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SurdSum):
            # equal iff the matching terms agree
            for a, b in ((other.s, other.t), (other.t, other.s)):
                u, v = _try_add(self.s, -a), _try_add(self.t, -b)
                if u is not None and v is not None:
                    w = add_values(u, v)
                    return isinstance(w, QuadraticSurd) and w == 0
            return False
        if not isinstance(other, (int, Fraction, QuadraticSurd)):
            return NotImplemented
        try:
            return self._cmp(other) == 0
        except ValueError:
            return False

    def __lt__(self, other: Number) -> bool:
        if not isinstance(other, (int, Fraction, QuadraticSurd)):
            return NotImplemented
        return self._cmp(other) < 0

    def __hash__(self) -> int:
        return hash((self.s, self.t))

    def __float__(self) -> float:
        return float(self.s) + float(self.t)

    def __add__(self, other: Number) -> "SurdSum":
        o = QuadraticSurd.coerce(other)
        u = _try_add(self.s, o)
        if u is not None:
            return add_values(u, self.t)
        v = _try_add(self.t, o)
        if v is not None:
            return add_values(self.s, v)
        raise ValueError("sum needs three distinct radicals")

    __radd__ = __add__

    def __neg__(self) -> "SurdSum":
        return SurdSum(-self.s, -self.t)

    def __sub__(self, other: Number) -> "SurdSum":
        return self + (-QuadraticSurd.coerce(other))

    def __rsub__(self, other: Number) -> "SurdSum":
        return (-self) + other

    def __str__(self) -> str:
        return f"{self.s} + {self.t}"

    def decimal(self, digits: int = 20) -> str:
        # exact floor via the two-radical sign test
        scale = 10**digits
        guess = math.floor(float(self) * scale)
        while self < Fraction(guess, scale):
            guess -= 1
        while not self < Fraction(guess + 1, scale):
            guess += 1
        sign = "-" if guess < 0 else ""
        n = abs(guess)
        return f"{sign}{n // scale}.{n % scale:0{digits}d}"


def add_values(s: QuadraticSurd, t: QuadraticSurd) -> "QuadraticSurd | SurdSum":
    """Exact s + t, as a single surd when the fields agree."""
    u = _try_add(s, t)
    return u if u is not None else SurdSum(s, t)


def galois_conjugate(s: QuadraticSurd) -> QuadraticSurd:
    return QuadraticSurd.coerce(s).conjugate()


_SURD_RE = re.compile(
    r"^\(\s*(?P<a>[+-]?\d+)\s*(?P<op>[+-])\s*(?P<b>[+-]?\d+)\s*\*\s*sqrt\(\s*(?P<d>\d+)\s*\)\s*\)\s*/\s*(?P<c>[+-]?\d+)$"
)


def parse_surd(text: str) -> QuadraticSurd:
    """Parse ``(a + b*sqrt(d))/c`` (also ``a - b*sqrt(d)``)."""
    m = _SURD_RE.match(text.strip())
    if not m:
        raise ParseError(f"not a surd literal: {text!r}", 0)
    b = int(m["b"])
    if m["op"] == "-":
        b = -b
    return QuadraticSurd.make(int(m["a"]), b, int(m["c"]), int(m["d"]))


# ---------------------------------------------------------------------------
# 2x2 matrices of continued fractions


@dataclass(frozen=True)
class Mat2:
    """Rows (p pp / q qp)."""

    p: int
    pp: int
    q: int
    qp: int

    def __matmul__(self, o: "Mat2") -> "Mat2":
        return Mat2(
            self.p * o.p + self.pp * o.q,
            self.p * o.pp + self.pp * o.qp,
            self.q * o.p + self.qp * o.q,
            self.q * o.pp + self.qp * o.qp,
        )

    @property
    def det(self) -> int:
        return self.p * self.qp - self.pp * self.q

    @property
    def trace(self) -> int:
        return self.p + self.qp

    def act(self, x: Number) -> Number:
        """Moebius action x -> (p x + pp)/(q x + qp)."""
        return (self.p * x + self.pp) / (self.q * x + self.qp)


IDENTITY = Mat2(1, 0, 0, 1)


def _digits_matrix(digits: Iterable[int]) -> Mat2:
    p, pp, q, qp = 1, 0, 0, 1
    for a in digits:
        p, pp, q, qp = p * a + pp, p, q * a + qp, q
    return Mat2(p, pp, q, qp)


def word_matrix(digits: Sequence[int]) -> Mat2:
    """Product of the elementary matrices (a 1 / 1 0) over the digits."""
    if len(digits) == 0:
        raise EmptyWord("word_matrix needs at least one digit")
    if any(a < 1 for a in digits):
        raise ValueError("digits must be positive")
    return _digits_matrix(digits)


def purely_periodic_value(period: Sequence[int]) -> QuadraticSurd:
    """Value of [p1; p2, ..., pm, p1, p2, ...]."""
    m = word_matrix(period)
    n = len(period) - 1
    disc = m.trace**2 + 4 * (-1) ** n
    return QuadraticSurd.make(m.p - m.qp, 1, 2 * m.q, disc)


# ---------------------------------------------------------------------------
# continued fractions


def _minimal_period(per: tuple[int, ...]) -> tuple[int, ...]:
    n = len(per)
    for k in range(1, n + 1):
        if n % k == 0 and per[:k] * (n // k) == per:
            return per[:k]
    return per


@dataclass(frozen=True)
class ContinuedFraction:
    """[x0; pre..., (per...)] with the period repeated forever."""

    x0: int
    pre: tuple[int, ...] = ()
    per: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "pre", tuple(int(v) for v in self.pre))
        object.__setattr__(self, "per", tuple(int(v) for v in self.per))
        if any(v < 1 for v in self.pre + self.per):
            raise ValueError("partial quotients must be positive")

    @property
    def is_rational(self) -> bool:
        return not self.per

    def digit(self, i: int) -> int:
        """x_i for i >= 0."""
        if i == 0:
            return self.x0
        if i <= len(self.pre):
            return self.pre[i - 1]
        if not self.per:
            raise IndexBeyondRational(f"digit {i} beyond a rational expansion of length {len(self.pre)}")
        return self.per[(i - len(self.pre) - 1) % len(self.per)]

    def digits(self, n: int) -> list[int]:
        """x_1 ... x_n (truncated for rationals)."""
        if self.is_rational:
            n = min(n, len(self.pre))
        return [self.digit(i) for i in range(1, n + 1)]

    def shift(self, n: int) -> "ContinuedFraction":
        """[x_n; x_{n+1}, ...]."""
        if n < 0:
            raise ValueError("negative shift")
        if n == 0:
            return self
        s = len(self.pre)
        if n <= s:
            return ContinuedFraction(self.pre[n - 1], self.pre[n:], self.per)
        if not self.per:
            raise IndexBeyondRational(f"index {n} beyond a rational expansion of length {s}")
        r = (n - s - 1) % len(self.per)
        rot = self.per[r + 1 :] + self.per[: r + 1]
        return ContinuedFraction(self.per[r], (), rot)

    def canonical(self) -> "ContinuedFraction":
        x0, pre, per = self.x0, list(self.pre), self.per
        if not per:
            if pre and pre[-1] == 1:
                pre.pop()
                if pre:
                    pre[-1] += 1
                else:
                    x0 += 1
            return ContinuedFraction(x0, tuple(pre), ())
        per = _minimal_period(per)
        while pre and pre[-1] == per[-1]:
            pre.pop()
            per = per[-1:] + per[:-1]
        return ContinuedFraction(x0, tuple(pre), per)

    def __str__(self) -> str:
        parts = [str(v) for v in self.pre]
        if self.per:
            parts.append("(" + ", ".join(str(v) for v in self.per) + ")")
        if not parts:
            return f"[{self.x0}]"
        return f"[{self.x0}; " + ", ".join(parts) + "]"

    @classmethod
    def parse(cls, text: str) -> "ContinuedFraction":
        return parse_cf(text)


def cf_value(x: ContinuedFraction) -> QuadraticSurd:
    """Exact value of an eventually periodic continued fraction."""
    head = _digits_matrix((x.x0,) + x.pre)
    if not x.per:
        return QuadraticSurd.rational(Fraction(head.p, head.q))
    return head.act(purely_periodic_value(x.per))


def _floor_pq(P: int, Q: int, D: int, s: int) -> int:
    """floor((P + sqrt(D))/Q) where s = isqrt(D) and D is not a square."""
    if Q > 0:
        return (P + s) // Q
    return (P + s + 1) // Q


def surd_to_cf(s: QuadraticSurd) -> ContinuedFraction:
    """Canonical continued fraction of s (finite for rationals)."""
    s = QuadraticSurd.coerce(s)
    if s.is_rational:
        return rational_to_cf(Fraction(s.a, s.c))
    # rewrite as (P + sqrt(D))/Q
    D = s.b * s.b * s.d
    P, Q = (s.a, s.c) if s.b > 0 else (-s.a, -s.c)
    if (D - P * P) % Q:
        P, D, Q = P * abs(Q), D * Q * Q, Q * abs(Q)
    r = math.isqrt(D)
    x0 = _floor_pq(P, Q, D, r)
    P = x0 * Q - P
    Q = (D - P * P) // Q
    seen: dict[tuple[int, int], int] = {}
    out: list[int] = []
    while (P, Q) not in seen:
        seen[(P, Q)] = len(out)
        a = _floor_pq(P, Q, D, r)
        out.append(a)
        P = a * Q - P
        Q = (D - P * P) // Q
    start = seen[(P, Q)]
    return ContinuedFraction(x0, tuple(out[:start]), tuple(out[start:])).canonical()


def rational_to_cf(q: Fraction | int) -> ContinuedFraction:
    q = Fraction(q)
    n, d = q.numerator, q.denominator
    x0, n = divmod(n, d)
    digits = []
    while n:
        d, n = n, d
        a, n = divmod(n, d)
        digits.append(a)
    return ContinuedFraction(x0, tuple(digits), ()).canonical()


def convergents(x: ContinuedFraction, n: int) -> list[Fraction]:
    """p_0/q_0, ..., p_{n-1}/q_{n-1}; shorter for short rational expansions."""
    if n < 1:
        raise ValueError("n must be >= 1")
    out = []
    p_prev, q_prev, p, q = 1, 0, x.x0, 1
    out.append(Fraction(p, q))
    for a in x.digits(n - 1):
        p_prev, q_prev, p, q = p, q, a * p + p_prev, a * q + q_prev
        out.append(Fraction(p, q))
    return out


def convergent_pairs(x: ContinuedFraction, n: int) -> list[tuple[int, int]]:
    """(p_k, q_k) for k = 0..n-1 without reducing through Fraction."""
    out = [(x.x0, 1)]
    p_prev, q_prev, p, q = 1, 0, x.x0, 1
    for a in x.digits(n - 1):
        p_prev, q_prev, p, q = p, q, a * p + p_prev, a * q + q_prev
        out.append((p, q))
    return out


def reversed_prefix_value(digits: Sequence[int]) -> Fraction:
    """[0; d_k, d_{k-1}, ..., d_1] for digits d_1..d_k (0 when empty)."""
    if not digits:
        return Fraction(0)
    m = _digits_matrix(reversed(digits))
    return Fraction(m.q, m.p)


# ---------------------------------------------------------------------------
# literal parsing


_CF_TOKEN = re.compile(r"\s*(?:(?P<int>[+-]?\d+)|(?P<sym>[\[\];,()]))")


def parse_cf(text: str) -> ContinuedFraction:
    """Parse ``[x0; d1, ..., dk, (p1, ..., pm)]`` into canonical form; the
    period block is optional."""
    tokens: list[tuple[str, str, int]] = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _CF_TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        start = m.start("int") if m["int"] is not None else m.start("sym")
        tokens.append(("int", m["int"], start) if m["int"] is not None else ("sym", m["sym"], start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    i = 0

    def expect(kind: str, value: str | None = None) -> tuple[str, str, int]:
        nonlocal i
        tok = tokens[i]
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = value or kind
            raise ParseError(f"expected {want!r} at position {tok[2]}", tok[2])
        i += 1
        return tok

    def positive() -> int:
        tok = expect("int")
        v = int(tok[1])
        if v < 1:
            raise ParseError(f"partial quotient must be positive at position {tok[2]}", tok[2])
        return v

    expect("sym", "[")
    x0 = int(expect("int")[1])
    pre: list[int] = []
    per: list[int] = []
    if tokens[i][1] == ";":
        i += 1
        while True:
            if tokens[i][1] == "(":
                i += 1
                per.append(positive())
                while tokens[i][1] == ",":
                    i += 1
                    per.append(positive())
                expect("sym", ")")
                break
            pre.append(positive())
            if tokens[i][1] != ",":
                break
            i += 1
    expect("sym", "]")
    expect("end")
    return ContinuedFraction(x0, tuple(pre), tuple(per)).canonical()
