"""Words over {a, b}, the Christoffel tree and related combinatorics.

Words are plain ``str`` objects over the letters ``a`` and ``b``; the digit
view replaces ``a`` by 2,2 and ``b`` by 1,1.  Nodes of the tree are
:class:`AlphabetPair` values obtained from ``(a, b)`` by the exterior
operators ``U`` (alpha, beta) -> (alpha beta, beta) and ``V``
(alpha, beta) -> (alpha, alpha beta).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import groupby
from typing import Iterable, Iterator, Sequence, Union

from .errors import NonDecomposable, NotCoprime, OutOfRange, Unstable
from .qfield import QuadraticSurd

Word = str
LETTER_DIGIT = {"a": 2, "b": 1}


def check_word(w: str) -> Word:
    if set(w) - {"a", "b"}:
        raise ValueError(f"not a word over {{a,b}}: {w!r}")
    return w


def _op_name(op: str) -> str:
    op = op.strip()
    names = {"U": "U", "V": "V", "Ubar": "U", "Vbar": "V", "Ū": "U", "V̄": "V"}
    if op not in names:
        raise ValueError(f"unknown operator {op!r}")
    return names[op]


def parse_path(text: str | Sequence[str]) -> tuple[str, ...]:
    """Accept "UVUV", "U,V" or a sequence of operator names."""
    if isinstance(text, str):
        text = text.replace(",", " ").split() if ("," in text or " " in text) else list(text)
    return tuple(_op_name(op) for op in text)


# ---------------------------------------------------------------------------
# substitutions and the tree

_INNER = {"U": {"a": "ab", "b": "b"}, "V": {"a": "a", "b": "ab"}}


def apply_inner(op: str, w: Word) -> Word:
    table = _INNER[_op_name(op)]
    return "".join(table[c] for c in w)


def inner_image(path: Sequence[str], w: Word) -> Word:
    """(R_1 o R_2 o ... o R_n)(w): the last operator acts first."""
    for op in reversed(path):
        w = apply_inner(op, w)
    return w


@dataclass(frozen=True)
class AlphabetPair:
    alpha: Word
    beta: Word
    path: tuple[str, ...] = field(default=())

    @classmethod
    def root(cls) -> "AlphabetPair":
        return cls("a", "b", ())

    @classmethod
    def from_path(cls, path: Iterable[str]) -> "AlphabetPair":
        p = cls.root()
        for op in path:
            p = apply_exterior(op, p)
        return p

    @property
    def word(self) -> Word:
        return self.alpha + self.beta

    @property
    def depth(self) -> int:
        return len(self.path)

    def children(self) -> tuple["AlphabetPair", "AlphabetPair"]:
        return apply_exterior("U", self), apply_exterior("V", self)

    def parent(self) -> "AlphabetPair | None":
        if not self.path:
            return None
        if self.path[-1] == "U":
            return AlphabetPair(self.alpha[: len(self.alpha) - len(self.beta)], self.beta, self.path[:-1])
        return AlphabetPair(self.alpha, self.beta[len(self.alpha) :], self.path[:-1])

    def as_dict(self) -> dict:
        return {"alpha": self.alpha, "beta": self.beta, "path": "".join(self.path)}


def apply_exterior(op: str, p: AlphabetPair) -> AlphabetPair:
    op = _op_name(op)
    if op == "U":
        return AlphabetPair(p.alpha + p.beta, p.beta, p.path + ("U",))
    return AlphabetPair(p.alpha, p.alpha + p.beta, p.path + ("V",))


def tree_nodes(max_depth: int) -> Iterator[AlphabetPair]:
    """All nodes of depth <= max_depth, breadth first."""
    level = [AlphabetPair.root()]
    for _ in range(max_depth + 1):
        yield from level
        level = [c for p in level for c in p.children()]


def node_of_word(w: Word) -> AlphabetPair:
    """The node whose alpha*beta is the Christoffel word w (|w| >= 2)."""
    nb, na = w.count("b"), w.count("a")
    if na == 0 or nb == 0:
        raise ValueError(f"{w!r} is not of the form alpha*beta")
    p = AlphabetPair.root()
    # Stern-Brocot descent on the letter counts (b : a)
    while True:
        cb, ca = p.word.count("b"), p.word.count("a")
        if (cb, ca) == (nb, na):
            break
        p = apply_exterior("U" if nb * ca > cb * na else "V", p)
    if p.word != w:
        raise ValueError(f"{w!r} is not a Christoffel word")
    return p


def christoffel(mu: int, nu: int) -> Word:
    """Lower Christoffel word with mu letters b and nu letters a."""
    if mu < 0 or nu < 0 or math.gcd(mu, nu) != 1:
        raise NotCoprime(f"gcd({mu}, {nu}) != 1")
    if nu == 0:
        return "b"
    return "".join("a" + "b" * ((i * mu) // nu - ((i - 1) * mu) // nu) for i in range(1, nu + 1))


# ---------------------------------------------------------------------------
# digit views


def digits(w: Word) -> list[int]:
    return [LETTER_DIGIT[c] for c in w for _ in range(2)]


def word_of_digits(s: Sequence[int]) -> tuple[bool, Word]:
    """Inverse of :func:`digits`, allowing one stripped leading lone 2.

    Returns (stripped, word).
    """
    s = list(s)
    stripped = False
    blocks = [(k, len(list(g))) for k, g in groupby(s)]
    if any(k not in (1, 2) for k, _ in blocks):
        raise NonDecomposable("digits must lie in {1, 2}")
    if blocks and blocks[0][0] == 2 and blocks[0][1] % 2:
        stripped = True
        blocks[0] = (2, blocks[0][1] - 1)
    out = []
    for k, n in blocks:
        if n % 2:
            raise NonDecomposable(f"odd block of {k}s")
        out.append(("a" if k == 2 else "b") * (n // 2))
    return stripped, "".join(out)


# ---------------------------------------------------------------------------
# small word operations used by the identities


def transpose(w: Word) -> Word:
    return w[::-1]


def drop_first(w: Word) -> Word:
    return w[1:]


def with_last(w: Word, letter: str) -> Word:
    """w with its last letter replaced (w_a when letter = a)."""
    return w[:-1] + letter


def with_first(w: Word, letter: str) -> Word:
    """w with its first letter replaced (w^b when letter = b)."""
    return letter + w[1:]


def is_palindrome(w: Word) -> bool:
    return w == w[::-1]


def verify_identities(p: AlphabetPair) -> dict[str, str]:
    """Check the exact word identities at one tree node; 'pass', 'fail' or 'skipped'."""
    al, be = p.alpha, p.beta
    ab = al + be
    ok = lambda cond: "pass" if cond else "fail"
    res: dict[str, str] = {}
    res["alpha starts with a"] = ok(al.startswith("a"))
    res["beta ends with b"] = ok(be.endswith("b"))
    res["alpha beta = beta_a alpha^b"] = ok(ab == with_last(be, "a") + with_first(al, "b"))
    res["alpha^b beta = beta^T alpha^b"] = ok(with_first(al, "b") + be == transpose(be) + with_first(al, "b"))
    res["alpha beta_a = beta_a alpha^T"] = ok(al + with_last(be, "a") == with_last(be, "a") + transpose(al))
    for name, w in (("alpha", al), ("beta", be)):
        key = f"{name}^b_a = {name}^T"
        if len(w) < 2:
            res[key] = "skipped"
        else:
            res[key] = ok(with_last(with_first(w, "b"), "a") == transpose(w))
    theta = ab[1:-1]
    res["alpha beta = a theta b, theta palindrome"] = ok(ab[0] == "a" and ab[-1] == "b" and is_palindrome(theta))
    aabb = al + al + be + be
    n = len(ab)
    # aabb = a theta' a b theta' b with |theta'| = |alpha beta| - 2
    tp = aabb[1 : n - 1]
    res["alpha alpha beta beta = a theta' ab theta' b"] = ok(
        aabb == "a" + tp + "ab" + tp + "b" and is_palindrome(tp)
    )
    for name, w in (("alpha", al), ("beta", be)):
        res[f"b U(w^T) = U(w)^T b, w={name}"] = ok(
            "b" + apply_inner("U", transpose(w)) == transpose(apply_inner("U", w)) + "b"
        )
        res[f"V(w^T) a = a V(w)^T, w={name}"] = ok(
            apply_inner("V", transpose(w)) + "a" == "a" + transpose(apply_inner("V", w))
        )
    # finite forms of the infinite identities
    k = 3
    res["alpha^k beta_a = beta_a (alpha^T)^k"] = ok(al * k + with_last(be, "a") == with_last(be, "a") + transpose(al) * k)
    res["(beta^T)^k alpha^b = alpha^b beta^k"] = ok(transpose(be) * k + with_first(al, "b") == with_first(al, "b") + be * k)
    return res


# ---------------------------------------------------------------------------
# balance


def _prefix_b(w: Word) -> list[int]:
    acc = [0]
    for c in w:
        acc.append(acc[-1] + (c == "b"))
    return acc


def is_balanced(w: Word) -> bool:
    """Every two factors of equal length differ by at most one in their b-count."""
    acc = _prefix_b(w)
    n = len(w)
    for k in range(1, n):
        counts = [acc[i + k] - acc[i] for i in range(n - k + 1)]
        if max(counts) - min(counts) > 1:
            return False
    return True


def is_balanced_periodic(w: Word, periods: int = 3) -> bool:
    return is_balanced(w * periods)


@dataclass(frozen=True)
class MechanicalSpec:
    xi: Union[Fraction, QuadraticSurd, int]
    variant: str = "floor"  # or "skew"


def mechanical_prefix(spec: MechanicalSpec, n: int) -> Word:
    xi = spec.xi
    if isinstance(xi, int):
        xi = Fraction(xi)
    if xi < 0 or xi > 1:
        raise OutOfRange("slope must lie in [0, 1]")
    if n < 1:
        raise ValueError("n must be >= 1")
    letters = []
    if spec.variant == "floor":
        for k in range(1, n + 1):
            letters.append("ab"[math.floor(k * xi) - math.floor((k - 1) * xi)])
    elif spec.variant == "skew":
        letters.append("a")
        for k in range(2, n + 1):
            letters.append("ab"[math.floor(-(k - 1) * xi) - math.floor(-k * xi)])
    else:
        raise ValueError(f"unknown variant {spec.variant!r}")
    return "".join(letters)


def slope_path(cf_digits: Sequence[int]) -> tuple[str, ...]:
    """Exterior path whose alpha-limit is the floor mechanical word of
    slope [0; d1, d2, ...] (finite truncation of the digit list)."""
    if not cf_digits:
        return ()
    path = ["V"] * (cf_digits[0] - 1)
    for i, d in enumerate(cf_digits[1:], start=2):
        path += ["U" if i % 2 == 0 else "V"] * d
    return tuple(path)


def limit_prefix(path: Sequence[str], side: str, n: int) -> Word:
    """First n letters of lim alpha_k, or last n letters of lim beta_k.

    Along the path each alpha_k is a prefix of alpha_{k+1} and each beta_k a
    suffix of beta_{k+1}, so the letters present at the end of the path are
    stable.
    """
    p = AlphabetPair.from_path(parse_path(path))
    if side == "alpha":
        if len(p.alpha) < n:
            raise Unstable(f"only {len(p.alpha)} letters of alpha are determined by this path")
        return p.alpha[:n]
    if side == "beta":
        if len(p.beta) < n:
            raise Unstable(f"only {len(p.beta)} letters of beta are determined by this path")
        return p.beta[-n:]
    raise ValueError(f"side must be alpha or beta, not {side!r}")


def subword_complexity(seq: Sequence[int] | str, n: int) -> int:
    """Number of distinct length-n factors."""
    s = tuple(seq)
    return len({s[i : i + n] for i in range(len(s) - n + 1)})


def renormalization_agrees(path: Sequence[str]) -> bool:
    """Exterior operators applied to (a, b) in path order give the same pair as
    the composed letter substitutions R_1 o ... o R_n applied to a and b."""
    path = parse_path(path)
    p = AlphabetPair.from_path(path)
    return (p.alpha, p.beta) == (inner_image(path, "a"), inner_image(path, "b"))
