"""Cut values lambda and their classification as good, bad or indeterminate.

A cut of a digit sequence x_1 x_2 ... at position n has value

    lambda_n(x) = [0; x_{n-1}, ..., x_1] + [x_n; x_{n+1}, ...]

and is bad when that value exceeds 3.  Words over {a, b} are read through
a = 22, b = 11.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import groupby
from typing import Optional, Sequence

from .errors import HorizonTooSmall, RationalInput
from .qfield import (
    ContinuedFraction,
    QuadraticSurd,
    SurdSum,
    add_values,
    _digits_matrix,
    cf_value,
    purely_periodic_value,
    reversed_prefix_value,
    _sign_one,
    surd_cmp,
    word_matrix,
)
from .words import AlphabetPair, Word, check_word, digits

THREE = QuadraticSurd.rational(3)
# tail values of a^infinity and b^infinity: the extremes over all {a,b}-extensions
EXT_HIGH = purely_periodic_value([2])
EXT_LOW = purely_periodic_value([1])
# absolute tolerance of the float pre-filter; float errors are far below it
TOL = 1e-9
_THREE_PARTS = (3, 0, 1)


def _norm(a: int, b: int, m: int) -> tuple[int, int, int]:
    return (a, b, m) if m > 0 else (-a, -b, -m)


def _seq_cf(pre: Sequence[int], per: Sequence[int]) -> ContinuedFraction:
    """The CF whose digits x_0, x_1, ... are pre followed by per repeated."""
    pre, per = tuple(pre), tuple(per)
    if pre:
        return ContinuedFraction(pre[0], pre[1:], per)
    if not per:
        raise ValueError("empty digit sequence")
    return ContinuedFraction(per[0], (), per[1:] + per[:1])


def seq_value(pre: Sequence[int], per: Sequence[int]) -> QuadraticSurd:
    """[s_0; s_1, s_2, ...] for the sequence pre + per^infinity."""
    return cf_value(_seq_cf(pre, per))


@dataclass(frozen=True)
class BiWord:
    """A two-sided digit context around one cut.

    ``left`` digits are read leftward from the cut (x_{-1} first), ``right``
    digits rightward (x_{+1} first); each side is (preperiod, period).
    """

    left_pre: tuple[int, ...] = ()
    left_per: tuple[int, ...] = ()
    right_pre: tuple[int, ...] = ()
    right_per: tuple[int, ...] = ()

    def __post_init__(self):
        for name in ("left_pre", "left_per", "right_pre", "right_per"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        if not self.right_per:
            raise ValueError("the right side must be infinite")


def cut_value(w: BiWord) -> QuadraticSurd:
    right = seq_value(w.right_pre, w.right_per)
    if w.left_per:
        left = seq_value(w.left_pre, w.left_per).reciprocal()
        return add_values(right, left)
    return right + reversed_prefix_value(tuple(reversed(w.left_pre)))


def lambda_at(x: ContinuedFraction, n: int) -> QuadraticSurd:
    """Exact lambda_n(x) for n >= 1."""
    if n < 1:
        raise ValueError("cut index starts at 1")
    tail = cf_value(x.shift(n))
    return tail + reversed_prefix_value(x.digits(n - 1))


# ---------------------------------------------------------------------------
# verdicts


@dataclass(frozen=True)
class CutVerdict:
    kind: str  # good | bad | indeterminate
    witness: Optional[object] = None


@dataclass(frozen=True)
class CutSite:
    position: int
    verdict: str
    value: Optional[QuadraticSurd] = None
    form: Optional[str] = None  # "mirror" (theta^T x|y theta R) or "leading" (2|2a...)
    theta: Optional[tuple[int, ...]] = None
    rest_start: Optional[int] = None  # index where R begins in the reading sequence

    def as_dict(self) -> dict:
        d = {
            "position": self.position,
            "verdict": self.verdict,
            "value": str(self.value) if self.value is not None else None,
        }
        if self.form is not None:
            d["form"] = self.form
            d["theta"] = "".join(map(str, self.theta or ()))
            d["rest_start"] = self.rest_start
        return d


def verdict_of(value: QuadraticSurd) -> str:
    return "bad" if surd_cmp(value, THREE) > 0 else "good"


def classify_word_cut(E: Word, F: Word, boundary: str) -> CutVerdict:
    """Lexicographic verdict for E^T b|a F (boundary 'b_a') or E^T a|b F ('a_b').

    With a < b: E^T b|aF is good iff E <= F, and E^T a|bF is good iff F <= E.
    Finite words only decide the verdict when they disagree somewhere.
    """
    for i, (e, f) in enumerate(zip(E, F)):
        if e != f:
            e_first = e < f
            if boundary == "b_a":
                return CutVerdict("good" if e_first else "bad", i)
            if boundary == "a_b":
                return CutVerdict("bad" if e_first else "good", i)
            raise ValueError(f"unknown boundary {boundary!r}")
    return CutVerdict("indeterminate", min(len(E), len(F)))


def find_bad_factor(w: Word) -> Optional[tuple[int, Word]]:
    """A factor x theta^T x | y theta y with x != y, as (cut index, theta)."""
    n = len(w)
    for j in range(1, n):
        x, y = w[j - 1], w[j]
        if x == y:
            continue
        s = 0
        while j - 2 - s >= 0 and j + 1 + s < n and w[j - 2 - s] == w[j + 1 + s]:
            s += 1
        l, r = j - 2 - s, j + 1 + s
        if l >= 0 and r < n and w[l] == x and w[r] == y:
            return j, w[j + 1 : j + 1 + s]
    return None


# ---------------------------------------------------------------------------
# periodic words


def _minimal_digit_period(d: Sequence[int]) -> tuple[int, ...]:
    d = tuple(d)
    n = len(d)
    for k in range(1, n + 1):
        if n % k == 0 and d[:k] * (n // k) == d:
            return d[:k]
    return d


def periodic_cut_denominators(period: Sequence[int]) -> tuple[int, list[int]]:
    """(D, [Q_0, ..., Q_{p-1}]) with the cut before digit i of period^infinity
    having value 2*sqrt(D)/Q_i."""
    m = word_matrix(period)
    D = m.trace**2 + 4 * (-1) ** (len(period) - 1)
    P, Q = m.p - m.qp, 2 * m.q
    qs = []
    for a in period:
        qs.append(Q)
        P = a * Q - P
        Q = (D - P * P) // Q
    return D, qs


def markov_cut_positions(w: Word | Sequence[int]) -> tuple[QuadraticSurd, list[int]]:
    """Maximum cut value of the bi-infinite periodic word and the 0-based
    positions (within one minimal digit period) where it is attained."""
    d = digits(w) if isinstance(w, str) else list(w)
    if not d:
        raise ValueError("empty word")
    period = _minimal_digit_period(d)
    D, qs = periodic_cut_denominators(period)
    qmin = min(qs)
    return QuadraticSurd.make(0, 2, qmin, D), [i for i, q in enumerate(qs) if q == qmin]


def markov_value_periodic(w: Word | Sequence[int]) -> QuadraticSurd:
    return markov_cut_positions(w)[0]


def periodic_cut_value(period: Sequence[int], i: int) -> QuadraticSurd:
    """Cut before digit i of the two-sided word period^infinity, via cut_value."""
    period = tuple(period)
    right = period[i:] + period[:i]
    left = tuple(reversed(period[:i])) + tuple(reversed(period[i:]))
    return cut_value(BiWord((), left, (), right))


# ---------------------------------------------------------------------------
# cylinders and blocks


def cylinder(prefix: Sequence[int]) -> tuple[Fraction, Fraction]:
    """Closure of {[0; prefix, t] : t >= 1} as (lo, hi)."""
    if not prefix:
        raise ValueError("empty prefix")
    m = _digits_matrix((0,) + tuple(prefix))
    ends = (Fraction(m.p, m.q), Fraction(m.p + m.pp, m.q + m.qp))
    return min(ends), max(ends)


@dataclass(frozen=True)
class BlockDecomposition:
    ok: bool
    blocks: tuple[tuple[int, int], ...] = ()
    leading_odd: bool = False
    failure_at: Optional[int] = None


def even_blocks(s: Sequence[int]) -> BlockDecomposition:
    """Split into constant blocks and check that all are even, except that a
    first block of 2s may be odd."""
    blocks: list[tuple[int, int]] = []
    pos = 0
    for k, g in groupby(s):
        n = len(list(g))
        if k not in (1, 2):
            return BlockDecomposition(False, tuple(blocks), failure_at=pos)
        blocks.append((k, n))
        pos += n
    leading_odd = bool(blocks) and blocks[0][0] == 2 and blocks[0][1] % 2 == 1
    pos = 0
    for i, (k, n) in enumerate(blocks):
        if n % 2 and not (i == 0 and leading_odd):
            return BlockDecomposition(False, tuple(blocks), leading_odd, failure_at=pos)
        pos += n
    return BlockDecomposition(True, tuple(blocks), leading_odd)


# ---------------------------------------------------------------------------
# one-sided words: cuts with a finite side extended by {a,b}-letters


def _finite_side_range(finite: Sequence[int], integer_part: bool) -> tuple[QuadraticSurd, QuadraticSurd]:
    """Range of [0; f_1, ..., f_k, T] (or [f_1; f_2, ..., f_k, T] when
    integer_part) as T runs over tail values of {a,b}-words."""
    head = (() if integer_part else (0,)) + tuple(finite)
    if not head:
        raise ValueError("empty finite side")
    m = _digits_matrix(head)
    # head[-1] is followed by the tail T: value = (p T + pp)/(q T + qp)
    v1, v2 = m.act(EXT_LOW), m.act(EXT_HIGH)
    return (v1, v2) if v1 <= v2 else (v2, v1)


def _classify_range(fixed: QuadraticSurd, lo: QuadraticSurd, hi: QuadraticSurd) -> str:
    """Verdict for fixed + t, t in [lo, hi]; the two parts may lie in
    different quadratic fields, so compare fixed against 3 - t."""
    if surd_cmp(fixed, THREE - lo) > 0:
        return "bad"
    if surd_cmp(fixed, THREE - hi) <= 0:
        return "good"
    return "indeterminate"


def one_sided_cuts(pre: Sequence[int], per: Sequence[int], horizon: int, side: str) -> list[CutSite]:
    """Verdicts for the cuts 2..horizon+1 of a one-sided infinite word.

    side='right': the word x_1 x_2 ... = pre per^infinity extends to the right
    and cut n sits between x_{n-1} and x_n.  side='left': the sequence lists
    the digits from the right end leftward, y_1 being the last digit, and cut
    n leaves y_{n-1} ... y_1 on its right.  The finite side is completed by
    arbitrary {a,b}-words.
    """
    pre, per = tuple(pre), tuple(per)
    total = horizon + 1
    seq = list(pre)
    while len(seq) < total:
        seq += per
    out = []
    for n in range(2, total + 1):
        finite = list(reversed(seq[: n - 1]))  # adjacent digit first
        cf = _seq_cf(pre, per).shift(n - 1)  # digits from position n on
        if side == "right":
            fixed = cf_value(cf)
            lo, hi = _finite_side_range(finite, integer_part=False)
        elif side == "left":
            fixed = cf_value(cf).reciprocal()
            lo, hi = _finite_side_range(finite, integer_part=True)
        else:
            raise ValueError(side)
        out.append(CutSite(n, _classify_range(fixed, lo, hi)))
    return out


CONTEXTS = (
    "alpha_power_beta_left",
    "alphabeta_periodic_left",
    "alpha_beta_power_right",
    "alphabeta_periodic_right",
)


def context_word(context: str, p: AlphabetPair) -> tuple[tuple[int, ...], tuple[int, ...], str]:
    da, db = tuple(digits(p.alpha)), tuple(digits(p.beta))
    if context == "alpha_power_beta_left":
        return tuple(reversed(db)), tuple(reversed(da)), "left"
    if context == "alphabeta_periodic_left":
        return (), tuple(reversed(da + db)), "left"
    if context == "alpha_beta_power_right":
        return da, db, "right"
    if context == "alphabeta_periodic_right":
        return (), da + db, "right"
    raise ValueError(f"unknown context {context!r}")


_CORES = (((2,), (2, 1, 1)), ((2, 1, 1), (2,)), ((1, 1), (2, 2)), ((2, 2), (1, 1)))


def mirror_factorization(seq: Sequence[int], n: int) -> Optional[tuple[tuple[int, ...], tuple[int, ...], int]]:
    """Split cut n of a one-sided reading sequence as theta^T x | y theta R.

    The finite side read away from the cut is c + theta and the infinite
    side is c' + theta + R, where (c, c') are the digit cores of an a|b or
    b|a cut.  Returns (c, theta, index where R starts) or None.  seq must
    extend at least 2n + 1 digits.
    """
    finite = tuple(reversed(seq[: n - 1]))
    for cf, ci in _CORES:
        if finite[: len(cf)] != cf:
            continue
        theta = finite[len(cf) :]
        start = n - 1
        body = tuple(seq[start : start + len(ci) + len(theta)])
        if body == ci + theta:
            return cf, theta, start + len(ci) + len(theta)
    return None


def _reading_sequence(pre: Sequence[int], per: Sequence[int], length: int) -> list[int]:
    seq = list(pre)
    while len(seq) < length:
        seq += per
    return seq


def find_indeterminate_cuts(context: str, p: AlphabetPair, horizon: int) -> list[CutSite]:
    """Indeterminate cuts of the one-sided word named by context within the
    horizon (positions counted from the finite end).

    Each site carries its mirror factorization.  Right words whose digits
    begin 2,2,2 also report the leading cut 2|2a..., whose left side is a
    single digit; with letter extensions it is always good, but it is the
    cut adjacent to an arbitrary digit prefix.
    """
    if horizon < len(digits(p.word)):
        raise HorizonTooSmall(f"horizon {horizon} < |digits(alpha beta)| = {len(digits(p.word))}")
    pre, per, side = context_word(context, p)
    seq = _reading_sequence(pre, per, 2 * horizon + 8)
    out = []
    if side == "right" and p.word.startswith("aa"):
        out.append(CutSite(2, "good", form="leading", theta=(), rest_start=1))
    for c in one_sided_cuts(pre, per, horizon, side):
        if c.verdict != "indeterminate":
            continue
        f = mirror_factorization(seq, c.position)
        if f is None:
            out.append(c)
        else:
            out.append(CutSite(c.position, c.verdict, form="mirror", theta=f[1], rest_start=f[2]))
    return out


def prefix_cuts(prefix: Sequence[int]) -> list[CutSite]:
    """Verdicts for lambda_1..lambda_L of a number whose first L digits are
    given (ending at a letter boundary) and whose remaining digits form an
    unknown {a,b}-word."""
    prefix = tuple(prefix)
    out = []
    for n in range(1, len(prefix) + 1):
        left = reversed_prefix_value(prefix[: n - 1])
        lo, hi = _finite_side_range(prefix[n - 1 :], integer_part=True)
        out.append(CutSite(n, _classify_range(QuadraticSurd.rational(left), lo, hi)))
    return out


# ---------------------------------------------------------------------------
# lexicographic balance conditions on one-sided words


def lex_cut_verdicts(letters: Word, horizon: int) -> list[tuple[int, str, str]]:
    """(boundary index j, 'a_b' | 'b_a', verdict) for letter boundaries
    1 <= j <= horizon of a one-sided word given by a long enough prefix."""
    out = []
    for j in range(1, min(horizon, len(letters) - 1) + 1):
        x, y = letters[j - 1], letters[j]
        if x == y:
            continue
        E = letters[: j - 1][::-1]
        F = letters[j + 1 : j + 1 + len(E) + 1]
        if len(F) <= len(E):
            raise HorizonTooSmall("prefix too short for the requested horizon")
        kind = "b_a" if x == "b" else "a_b"
        out.append((j, kind, classify_word_cut(E, F, kind).kind))
    return out


def is_lower_balanced_lex(letters: Word, horizon: int) -> bool:
    """Lower balance of a one-sided word: every a|b cut is good or left-exhausted
    and every b|a cut is good (a constant word counts only if it is a^inf)."""
    if set(letters) == {"a"}:
        return True
    if set(letters) == {"b"}:
        return False
    for _, kind, verdict in lex_cut_verdicts(letters, horizon):
        if kind == "a_b" and verdict == "bad":
            return False
        if kind == "b_a" and verdict != "good":
            return False
    return True


def is_upper_balanced_lex(letters: Word, horizon: int) -> bool:
    if set(letters) == {"b"}:
        return True
    if set(letters) == {"a"}:
        return False
    for _, kind, verdict in lex_cut_verdicts(letters, horizon):
        if kind == "b_a" and verdict == "bad":
            return False
        if kind == "a_b" and verdict != "good":
            return False
    return True


# ---------------------------------------------------------------------------
# scanning lambda_n over an eventually periodic expansion


class LambdaScan:
    """Float approximations of lambda_n(x) with exact evaluation on demand.

    Floats only select candidates; every decision returned by the helpers
    below is confirmed exactly whenever a float lies within TOL of the
    threshold being tested.
    """

    def __init__(self, x: ContinuedFraction):
        if not x.per:
            raise RationalInput("expansion must be infinite")
        self.x = x
        self.s, self.p = len(x.pre), len(x.per)
        self.step = self.p if self.p % 2 == 0 else 2 * self.p
        self._gamma_per = self._periodic_gammas()
        self._gamma_pre = self._pre_gammas()
        self._eta = [0.0, 0.0]  # index n -> eta_n, eta_1 = 0
        self._eta_star = self._periodic_eta_star()
        self._gx = None
        self._mismatch = None
        self._q = [0, 1]  # q_{-1}, q_0

    # floats ------------------------------------------------------------------

    def _periodic_gammas(self) -> list[float]:
        per = self.x.per
        g = 2.0
        vals = [0.0] * self.p
        sweeps = max(3, 120 // self.p + 2)
        for _ in range(sweeps):
            for i in range(self.p - 1, -1, -1):
                g = per[i] + 1.0 / g
                vals[i] = g
        return vals

    def _pre_gammas(self) -> list[float]:
        g = self._gamma_per[0] if self.p else 0.0
        vals = [0.0] * self.s
        for i in range(self.s - 1, -1, -1):
            g = self.x.pre[i] + 1.0 / g
            vals[i] = g
        return vals

    def _periodic_eta_star(self) -> list[float]:
        # eta*_r = [0; x_{n-1}, x_{n-2}, ...] for n = s+1+r with the left side periodic
        per = self.x.per
        e = 0.5
        vals = [0.0] * self.p
        sweeps = max(3, 120 // self.p + 2)
        for _ in range(sweeps):
            for r in range(self.p):
                vals[r] = e
                e = 1.0 / (per[r] + e)
        return vals

    def gamma_f(self, n: int) -> float:
        if n <= self.s:
            return self._gamma_pre[n - 1]
        return self._gamma_per[(n - self.s - 1) % self.p]

    def _digit(self, k: int) -> int:
        # k >= 1
        return self.x.pre[k - 1] if k <= self.s else self.x.per[(k - self.s - 1) % self.p]

    def eta_f(self, n: int) -> float:
        eta = self._eta
        while len(eta) <= n:
            m = len(eta) - 1
            eta.append(1.0 / (self._digit(m) + eta[m]))
        return eta[n]

    def lam_f(self, n: int) -> float:
        return self.gamma_f(n) + self.eta_f(n)

    def eta_star_f(self, n: int) -> float:
        return self._eta_star[(n - self.s - 1) % self.p]

    def limit_f(self, n: int) -> float:
        return self.gamma_f(n) + self.eta_star_f(n)

    # exact -------------------------------------------------------------------

    def lam(self, n: int) -> QuadraticSurd:
        return self.gamma(n) + self.eta(n)

    def _pq(self, n: int) -> tuple[int, int]:
        """gamma_n = (P + sqrt(D))/Q with integers P, Q and Q | D - P^2."""
        if self._gx is None:
            self._init_gamma()
        pre, per = self._gx
        if n <= self.s:
            return pre[n - 1]
        return per[(n - self.s - 1) % self.p]

    def gamma(self, n: int) -> QuadraticSurd:
        """[x_n; x_{n+1}, ...]."""
        P, Q = self._pq(n)
        return QuadraticSurd.make(P, self._t, Q, self._d)

    def _init_gamma(self) -> None:
        # every gamma_n lies in one field: run the integer recurrence forward
        # through the period and backward through the preperiod
        x, s, p = self.x, self.s, self.p
        g0 = cf_value(ContinuedFraction(0, (), x.per)).reciprocal()
        P, Q, t = (g0.a, g0.c, g0.b) if g0.b > 0 else (-g0.a, -g0.c, -g0.b)
        D = t * t * g0.d
        if (D - P * P) % Q:
            P, D, Q, t = P * abs(Q), D * Q * Q, Q * abs(Q), t * abs(Q)
        self._t, self._d, self._D = t, g0.d, D
        per = []
        P0, Q0 = P, Q
        for i in range(p):
            per.append((P, Q))
            P = x.per[i] * Q - P
            Q = (D - P * P) // Q
        pre = [(0, 0)] * s
        P, Q = P0, Q0
        for i in range(s - 1, -1, -1):
            # x_i + 1/gamma with 1/gamma = (-P + sqrt(D)) / ((D - P^2)/Q)
            Q = (D - P * P) // Q
            P = x.pre[i] * Q - P
            pre[i] = (P, Q)
        self._gx = (pre, per)

    # candidate values are integer triples (A, B, M) meaning (A + B*sqrt(D))/M
    # with M > 0, compared by cross multiplication without any gcd

    def lam_parts(self, n: int) -> tuple[int, int, int]:
        P, Q = self._pq(n)
        a, b = self._qs(n)  # eta_n = a/b
        return _norm(P * b + a * Q, b, Q * b)

    def limit_parts(self, n: int) -> tuple[int, int, int]:
        _, Q = self._pq(n)
        return _norm(0, 2, Q)

    def cmp_parts(self, x: tuple[int, int, int], y: tuple[int, int, int]) -> int:
        if self._gx is None:
            self._init_gamma()
        (a1, b1, m1), (a2, b2, m2) = x, y
        return _sign_one(a1 * m2 - a2 * m1, b1 * m2 - b2 * m1, self._D)

    def _qs(self, n: int) -> tuple[int, int]:
        """(q_{n-2}, q_{n-1})."""
        q = self._q
        while len(q) < n + 1:
            k = len(q) - 1  # q[k] holds q_{k-1}
            q.append(self._digit(k) * q[-1] + q[-2])
        return q[n - 1], q[n]

    def eta(self, n: int) -> Fraction:
        """[0; x_{n-1}, ..., x_1] = q_{n-2}/q_{n-1}."""
        return Fraction(*self._qs(n))

    def limit(self, n: int) -> QuadraticSurd:
        """Limit of lambda along n, n + step, n + 2 step, ... (n > s)."""
        g = self.gamma(n)
        return g - g.conjugate()

    # comparisons -------------------------------------------------------------

    def lam_exceeds_3(self, n: int) -> bool:
        f = self.lam_f(n)
        if f > 3 + TOL:
            return True
        if f < 3 - TOL:
            return False
        return self.cmp_parts(self.lam_parts(n), _THREE_PARTS) > 0

    def limit_cmp_3(self, n: int) -> int:
        f = self.limit_f(n)
        if f > 3 + TOL:
            return 1
        if f < 3 - TOL:
            return -1
        return self.cmp_parts(self.limit_parts(n), _THREE_PARTS)

    def class_increasing(self, n: int) -> bool:
        """Whether lambda along the class of n (n > s) increases toward its limit."""
        a, b = self.eta_f(n), self.eta_star_f(n)
        if abs(a - b) > TOL:
            return a < b
        # -conj(gamma_n) = [0; x_{n-1}, x_{n-2}, ...] with the period continued
        # backwards.  Both digit strings agree down to index s, so the first
        # disagreement is at a fixed index k <= s; eta_n ends as if with digit inf.
        if self._mismatch is None:
            s, p, per = self.s, self.p, self.x.per
            self._mismatch = (0, 1, 0)
            for k in range(s, 0, -1):
                u, v = self.x.pre[k - 1], per[(k - s - 1) % p]
                if u != v:
                    self._mismatch = (k, u, v)
                    break
        k, u, v = self._mismatch
        return (u > v) == ((n - 1 - k) % 2 == 0)

    def class_starts(self) -> range:
        return range(self.s + 1, self.s + self.step + 1)

    @property
    def scan_top(self) -> int:
        return self.s + self.step


@dataclass(frozen=True)
class SupResult:
    value: QuadraticSurd
    attained_at: Optional[int]
    limit_class: Optional[int] = None


def sup_lambda(x: ContinuedFraction) -> SupResult:
    """sup_n lambda_n(x) for eventually periodic irrational x.

    Along each class n0 + k*step (n0 > |pre|, step an even multiple of the
    period length) the map sending eta_n to eta_{n+step} is an increasing
    contraction, so lambda is monotone in k.  A decreasing class peaks at its
    first element, which is scanned; an increasing class has its limit
    gamma - conj(gamma) as supremum, never attained.
    """
    sc = LambdaScan(x)
    sc.eta_f(sc.scan_top)
    approx = {n: sc.gamma_f(n) + sc._eta[n] for n in range(1, sc.scan_top + 1)}
    best = max(approx.values())
    limits = {}
    for n0 in sc.class_starts():
        lf = sc.limit_f(n0)
        if lf >= best - TOL and sc.class_increasing(n0):
            limits[n0] = lf
    top = max([best] + list(limits.values()))
    cands: list[tuple[tuple[int, int, int], Optional[int], Optional[int]]] = []
    for n, f in approx.items():
        if f >= top - TOL:
            cands.append((sc.lam_parts(n), n, None))
    for n0, f in limits.items():
        if f >= top - TOL:
            cands.append((sc.limit_parts(n0), None, n0))
    winner = cands[0]
    for c in cands[1:]:
        if sc.cmp_parts(c[0], winner[0]) > 0:
            winner = c
    _, n, n0 = winner
    value = sc.lam(n) if n is not None else sc.limit(n0)
    return SupResult(value, n, n0)


def lex_vs_exact(period: Word) -> list[tuple[int, str, str]]:
    """Compare the lexicographic verdict with the exact cut value at every
    letter boundary x|y (x != y) of the bi-infinite word period^inf.

    Returns the disagreements as (letter index, lexicographic, exact); cuts
    whose two sides coincide as infinite words are skipped.
    """
    w = check_word(period)
    n = len(w)
    if n == 0:
        raise ValueError("empty period")
    d = digits(w)
    reach = 4 * n + 4
    out = []
    for j in range(n):
        x, y = w[j - 1], w[j]
        if x == y:
            continue
        E = "".join(w[(j - 2 - i) % n] for i in range(reach))
        F = "".join(w[(j + 1 + i) % n] for i in range(reach))
        kind = "b_a" if x == "b" else "a_b"
        lex = classify_word_cut(E, F, kind).kind
        if lex == "indeterminate":
            continue
        # a|b sits inside the a (2|2 b), b|a between the letters (b|22)
        pos = 2 * j - 1 if x == "a" else 2 * j
        exact = verdict_of(periodic_cut_value(d, pos % len(d)))
        if lex != exact:
            out.append((j, lex, exact))
    return out
