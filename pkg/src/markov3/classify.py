"""Counting the solutions of |x - p/q| < 1/(3q^2) for eventually periodic x,
normal forms of the tail after the last solution, and generation of numbers
with a prescribed number of solutions."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterator, Optional, Sequence, Union

from .cuts import (
    LambdaScan,
    cylinder,
    find_bad_factor,
    is_lower_balanced_lex,
    is_upper_balanced_lex,
    mirror_factorization,
    one_sided_cuts,
    prefix_cuts,
)
from .errors import (
    HasBadCut,
    InvalidPrefix,
    NonDecomposable,
    NotEventuallyPeriodic,
    RationalInput,
    SideConditionViolated,
    Unstable,
)
from .qfield import (
    ContinuedFraction,
    QuadraticSurd,
    cf_value,
    convergent_pairs,
    reversed_prefix_value,
    surd_cmp,
)
from .words import AlphabetPair, Word, digits, is_balanced, limit_prefix, parse_path, transpose

SHAPES = (
    "beta_power",
    "beta_then_alpha_power",
    "two_alpha_plus_alpha_power",
    "two_alpha_plus_beta_power",
)
STURMIAN = "sturmian"


# ---------------------------------------------------------------------------
# counting


@dataclass(frozen=True)
class Witness:
    n: int  # index of lambda_n > 3; the solution is p_{n-1}/q_{n-1}
    p: int
    q: int
    lam: QuadraticSurd

    def as_dict(self) -> dict:
        return {"n": self.n, "p": self.p, "q": self.q, "lambda": str(self.lam)}


@dataclass
class SolutionCount:
    kind: str  # finite | infinite
    witnesses: list[Witness]
    x: ContinuedFraction = field(repr=False)

    @property
    def count(self) -> Optional[int]:
        return len(self.witnesses) if self.kind == "finite" else None

    @property
    def N(self) -> int:
        """Largest index n with lambda_n > 3, or 0."""
        if self.kind != "finite":
            raise ValueError("N is defined only for finitely many solutions")
        return max((w.n for w in self.witnesses), default=0)

    def witnesses_upto(self, qmax: int) -> list[Witness]:
        """Solutions with denominator <= qmax; enumerates convergents when
        there are infinitely many."""
        if self.kind == "finite":
            return [w for w in self.witnesses if w.q <= qmax]
        sc = LambdaScan(self.x)
        out = []
        n = 1
        while True:
            pairs = convergent_pairs(self.x, n)
            p, q = pairs[-1]
            if q > qmax:
                return out
            if sc.lam_exceeds_3(n):
                out.append(Witness(n, p, q, sc.lam(n)))
            n += 1

    def as_dict(self, qmax: Optional[int] = None) -> dict:
        ws = self.witnesses if self.kind == "finite" else self.witnesses_upto(qmax or 10**4)
        return {
            "count": self.count if self.kind == "finite" else "infinite",
            "N": self.N if self.kind == "finite" else None,
            "witnesses": [w.as_dict() for w in ws],
        }


def _require_irrational(x: ContinuedFraction) -> None:
    if not x.per:
        raise RationalInput("x is rational; the count is defined for irrationals only")


def count_solutions(x: ContinuedFraction) -> SolutionCount:
    """Exact number of rationals p/q with |x - p/q| < 1/(3q^2).

    Only x_1, x_2, ... matter.  Beyond the preperiod lambda is monotone
    along each residue class of indices modulo an even multiple of the
    period; a class whose limit exceeds 3 gives infinitely many solutions,
    and a decreasing class is followed until it drops to 3 or below.
    """
    _require_irrational(x)
    sc = LambdaScan(x)
    if any(sc.limit_cmp_3(n0) > 0 for n0 in sc.class_starts()):
        return SolutionCount("infinite", [], x)
    bad = [n for n in range(1, sc.scan_top + 1) if sc.lam_exceeds_3(n)]
    for n0 in sc.class_starts():
        if n0 in bad and not sc.class_increasing(n0):
            n = n0 + sc.step
            while sc.lam_exceeds_3(n):
                bad.append(n)
                n += sc.step
    bad.sort()
    pairs = convergent_pairs(x, (bad[-1] if bad else 0) + 1)
    ws = [Witness(n, *pairs[n - 1], sc.lam(n)) for n in bad]
    return SolutionCount("finite", ws, x)


def is_solution(x: ContinuedFraction, p: int, q: int) -> bool:
    """|x - p/q| < 1/(3q^2), decided exactly."""
    d = cf_value(x) - Fraction(p, q)
    bound = QuadraticSurd.rational(Fraction(1, 3 * q * q))
    return surd_cmp(d, bound) < 0 and surd_cmp(d, -bound) > 0


def brute_force_count(x: ContinuedFraction, qmax: int) -> list[tuple[int, int]]:
    """All reduced p/q with q <= qmax and |x - p/q| < 1/(3q^2), by direct
    exact comparison (no continued fraction machinery)."""
    if qmax < 1:
        raise ValueError("qmax must be >= 1")
    v = cf_value(x)
    out = []
    third = Fraction(1, 3)
    for q in range(1, qmax + 1):
        xq = v * q
        # |xq - p| < 1/(3q) <= 1/3 leaves only the nearest integer
        p = math.floor(xq + Fraction(1, 2))
        if math.gcd(p, q) != 1:
            continue
        d = xq - p
        bound = third / q
        if surd_cmp(d, QuadraticSurd.rational(bound)) < 0 and surd_cmp(d, QuadraticSurd.rational(-bound)) > 0:
            out.append((p, q))
    return out


# ---------------------------------------------------------------------------
# tails


def tail_digits(shape: str, pair: AlphabetPair) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(preperiod, period) of x_{N+1} x_{N+2} ... for one of the four forms."""
    al, be = pair.alpha, pair.beta
    if shape == "beta_power":
        return (), tuple(digits(transpose(be)))
    if shape == "beta_then_alpha_power":
        return tuple(digits(transpose(be))), tuple(digits(transpose(al)))
    head = (2,) + tuple(digits(al[1:]))
    if shape == "two_alpha_plus_alpha_power":
        return head, tuple(digits(al))
    if shape == "two_alpha_plus_beta_power":
        return head, tuple(digits(be))
    raise ValueError(f"unknown shape {shape!r}")


def _key(pre: Sequence[int], per: Sequence[int]) -> ContinuedFraction:
    return ContinuedFraction(0, tuple(pre), tuple(per)).canonical()


@lru_cache(maxsize=32)
def _form_table(size: int) -> dict[ContinuedFraction, tuple[int, str, AlphabetPair]]:
    """Canonical tails of every node with |digits(alpha beta)| <= size,
    keeping the shallowest node (breadth first order) for each tail."""
    table: dict[ContinuedFraction, tuple[int, str, AlphabetPair]] = {}
    level = [AlphabetPair.root()]
    while level:
        nxt = []
        for p in level:
            if 2 * len(p.word) > size:
                continue
            for i, shape in enumerate(SHAPES):
                table.setdefault(_key(*tail_digits(shape, p)), (i, shape, p))
            nxt.extend(p.children())
        level = nxt
    return table


def _tail_of(x: ContinuedFraction, N: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    t = x.shift(N + 1)
    return (t.x0,) + t.pre, t.per


@dataclass(frozen=True)
class SideSite:
    position: int
    theta: tuple[int, ...]
    rest: ContinuedFraction  # [0; R]
    ok: bool

    def as_dict(self) -> dict:
        return {
            "position": self.position,
            "theta": "".join(map(str, self.theta)),
            "R": str(self.rest),
            "ok": self.ok,
        }


def _rest_cf(seq_pre: Sequence[int], per: Sequence[int], start: int) -> ContinuedFraction:
    """[0; R] where R is the reading sequence from index start on."""
    s = len(seq_pre)
    if start < s:
        return ContinuedFraction(0, tuple(seq_pre[start:]), tuple(per))
    r = (start - s) % len(per)
    return ContinuedFraction(0, (), tuple(per[r:] + per[:r]))


def side_condition(prefix: Sequence[int], pre: Sequence[int], per: Sequence[int]) -> tuple[bool, list[SideSite]]:
    """Check [0; x_N, ..., x_1] < [0; R] (tail starting with 1) or
    < [0; 2, R] (tail starting with 2) at every indeterminate cut of the
    tail read as a right infinite {a,b}-word (with a leading 2 restored)."""
    prefix, pre, per = tuple(prefix), tuple(pre), tuple(per)
    if not prefix:
        return True, []
    first = (pre + per)[0]
    seq_pre = pre if first == 1 else (2,) + pre
    horizon = len(seq_pre) + 3 * len(per) + 4
    seq = list(seq_pre)
    while len(seq) < 2 * horizon + 8:
        seq += per
    left = reversed_prefix_value(prefix)
    sites = []
    for c in one_sided_cuts(seq_pre, per, horizon, "right"):
        if c.verdict != "indeterminate":
            continue
        f = mirror_factorization(seq, c.position)
        if f is None:
            raise Unstable(f"indeterminate cut at {c.position} has no mirror form")
        core, theta, start = f
        rest = _rest_cf(seq_pre, per, start)
        if core == (1, 1):
            target = cf_value(rest)
        else:
            target = cf_value(ContinuedFraction(0, (2,) + rest.pre, rest.per))
        sites.append(SideSite(c.position, theta, rest, surd_cmp(QuadraticSurd.rational(left), target) < 0))
    return all(s.ok for s in sites), sites


@dataclass
class TailForm:
    N: int
    first_digit: int
    shape: str
    pair: Union[AlphabetPair, tuple[str, ...]]
    side_condition_ok: bool
    sites: list[SideSite] = field(default_factory=list)
    count: Optional[SolutionCount] = None

    def as_dict(self) -> dict:
        d = {
            "N": self.N,
            "first_digit": self.first_digit,
            "shape": self.shape,
            "side_condition": self.side_condition_ok,
            "sites": [s.as_dict() for s in self.sites],
        }
        if isinstance(self.pair, AlphabetPair):
            d["pair"] = self.pair.as_dict()
        else:
            d["path"] = "".join(self.pair)
        if self.count is not None:
            d.update({k: v for k, v in self.count.as_dict().items() if k in ("count", "witnesses")})
        return d


@dataclass
class NotInFamily:
    reason: str
    count: Optional[SolutionCount] = None

    def as_dict(self) -> dict:
        d = {"in_family": False, "reason": self.reason}
        if self.count is not None:
            d.update(self.count.as_dict())
        return d


def classify_tail(x: ContinuedFraction) -> Union[TailForm, NotInFamily]:
    """Normal form of x_{N+1} x_{N+2} ... where N is the last index with
    lambda_N > 3."""
    if not x.per:
        raise NotEventuallyPeriodic("x must have an infinite eventually periodic expansion")
    cnt = count_solutions(x)
    if cnt.kind == "infinite":
        return NotInFamily("infinitely many solutions", cnt)
    N = cnt.N
    pre, per = _tail_of(x, N)
    key = _key(pre, per)
    size = len(key.pre) + 3 * len(key.per) + 4
    hit = _form_table(size).get(key)
    if hit is None:
        return NotInFamily("tail matches none of the four forms", cnt)
    _, shape, pair = hit
    ok, sites = side_condition(x.digits(N), key.pre, key.per)
    return TailForm(N, (key.pre + key.per)[0], shape, pair, ok, sites, cnt)


# ---------------------------------------------------------------------------
# generation


@dataclass
class Generated:
    x: Optional[ContinuedFraction]
    digits: tuple[int, ...]  # x_1 ... for truncated output, else empty
    truncated: bool
    count: Optional[SolutionCount] = None

    def as_dict(self) -> dict:
        d = {"truncated": self.truncated}
        if self.x is not None:
            d["x"] = str(self.x)
        else:
            d["digits"] = list(self.digits)
        if self.count is not None:
            d.update(self.count.as_dict())
        return d


def _check_prefix(prefix: Sequence[int]) -> tuple[int, ...]:
    prefix = tuple(int(v) for v in prefix)
    if any(v < 1 for v in prefix):
        raise InvalidPrefix("partial quotients must be >= 1")
    if prefix and prefix[-1] < 2:
        raise InvalidPrefix("the last prefix digit must be >= 2 for lambda_N > 3")
    return prefix


def sturmian_digits(path: Sequence[str], first_digit: int, n: int) -> tuple[int, ...]:
    """First n digits of lim beta_k^T (first digit 1) or lim 2 alpha_k^+ (2)."""
    letters = n // 2 + 2
    if first_digit == 1:
        w = transpose(limit_prefix(path, "beta", letters))
        return tuple(digits(w))[:n]
    if first_digit == 2:
        w = limit_prefix(path, "alpha", letters)
        return ((2,) + tuple(digits(w[1:])))[:n]
    raise ValueError("first digit must be 1 or 2")


def _sturmian_side(prefix: tuple[int, ...], path, first_digit: int, n: int) -> bool:
    """Decide [0; x_N..x_1] < [0; lim alpha] (or < [0; 2, lim beta^T]) from
    finite prefixes of the limits."""
    left = reversed_prefix_value(prefix)
    if first_digit == 1:
        other = tuple(digits(limit_prefix(path, "alpha", n // 2 + 1)))
    else:
        other = (2,) + tuple(digits(transpose(limit_prefix(path, "beta", n // 2 + 1))))
    lo, hi = cylinder(other)
    if left < lo:
        return True
    if left >= hi:
        return False
    raise Unstable("horizon too short to decide the side condition")


def generate(
    N: int,
    prefix: Sequence[int],
    shape: str,
    pair: Union[AlphabetPair, str, Sequence[str], None] = None,
    horizon: int = 200,
    first_digit: int = 1,
) -> Generated:
    """Build x = [0; x_1, ..., x_N, tail] with the tail in the given form.

    shape is one of SHAPES (pair an AlphabetPair or an exterior path) or
    'sturmian' (pair a path; the output is a flagged finite truncation of
    length N + horizon)."""
    prefix = _check_prefix(prefix)
    if len(prefix) != N:
        raise InvalidPrefix(f"prefix has {len(prefix)} digits, expected N = {N}")
    if shape == STURMIAN:
        path = parse_path(pair or ())
        tail = sturmian_digits(path, first_digit, horizon)
        if N and not _sturmian_side(prefix, path, first_digit, horizon):
            raise SideConditionViolated("prefix violates the side condition")
        return Generated(None, prefix + tail, True)
    if not isinstance(pair, AlphabetPair):
        pair = AlphabetPair.from_path(parse_path(pair or ()))
    pre, per = tail_digits(shape, pair)
    ok, _ = side_condition(prefix, *(lambda k: (k.pre, k.per))(_key(pre, per)))
    if not ok:
        raise SideConditionViolated("prefix violates the side condition")
    x = ContinuedFraction(0, prefix + pre, per).canonical()
    return Generated(x, (), False, count_solutions(x))


def sturmian_prefix_ok(digits_: Sequence[int]) -> bool:
    """No cut of the finite prefix is bad for every {a,b}-continuation."""
    d = tuple(digits_)
    # trim to a letter boundary
    return all(c.verdict != "bad" for c in prefix_cuts(d))


# ---------------------------------------------------------------------------
# balanced words


def letters_of(digit_seq: Sequence[int]) -> Word:
    """Read a digit sequence of even 1- and 2-blocks as a word over {a, b}."""
    d = list(digit_seq)
    out = []
    for i in range(0, len(d) - 1, 2):
        if d[i] != d[i + 1] or d[i] not in (1, 2):
            raise NonDecomposable(f"digits {i + 1}, {i + 2} do not form a letter")
        out.append("a" if d[i] == 2 else "b")
    return "".join(out)


def gurwood_balance_classify(x: ContinuedFraction, periods: int = 3) -> str:
    """upper_balanced (x_1 = 1), lower_balanced_after_2 (x_1 = 2, the word
    2 x_1 x_2 ... is lower balanced) or neither."""
    _require_irrational(x)
    if periods < 3:
        raise ValueError("use at least 3 periods")
    cnt = count_solutions(x)
    if cnt.kind == "infinite" or cnt.count:
        raise HasBadCut("x has a cut of value > 3")
    n = len(x.pre) + 2 + periods * 2 * len(x.per) * 4
    d = x.digits(n)
    seq = d if d[0] == 1 else [2] + d
    try:
        w = letters_of(seq[: len(seq) - len(seq) % 2])
    except NonDecomposable:
        return "neither"
    horizon = len(w) // 3
    if d[0] == 1 and is_upper_balanced_lex(w, horizon):
        return "upper_balanced"
    if d[0] == 2 and is_lower_balanced_lex(w, horizon):
        return "lower_balanced_after_2"
    return "neither"


def has_bad_factor_everywhere(w: Word) -> bool:
    """Whether every extension of w to length 2|w| contains a bad factor."""
    n = len(w)

    def dfs(u: str) -> bool:
        if find_bad_factor(u) is not None:
            return True
        if len(u) == 2 * n:
            return False
        return dfs(u + "a") and dfs(u + "b")

    return dfs(w)


def gurwood_lemma31(n: int) -> list[Word]:
    """Unbalanced words of length n having an extension to length 2n without
    bad factors (the lemma asserts there are none)."""
    return [
        w
        for w in ("".join(t) for t in product("ab", repeat=n))
        if not is_balanced(w) and not has_bad_factor_everywhere(w)
    ]
