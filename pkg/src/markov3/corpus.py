"""Seeded input corpus for the oracle comparison of the solution counter."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .qfield import ContinuedFraction, parse_cf

# inputs whose classification is worked out by hand in the tests
FIXED = (
    "[0; (1)]",
    "[0; 2, (1)]",
    "[0; 3, (1)]",
    "[0; (2)]",
    "[0; 1, (2)]",
    "[0; 1, 1, (2)]",
    "[0; (1, 2)]",
    "[0; (1, 3)]",
    "[0; 4, 5, (1)]",
    "[0; (2, 1, 1, 2)]",
    "[0; (1, 1, 2, 2)]",
    "[0; 2, 1, 1, (2)]",
)


@dataclass(frozen=True)
class CorpusConfig:
    size: int = 200
    seed: int = 20240611
    max_digit: int = 4
    max_pre: int = 5
    max_per: int = 6


def random_cf(rng: random.Random, cfg: CorpusConfig) -> ContinuedFraction:
    pre = tuple(rng.randint(1, cfg.max_digit) for _ in range(rng.randint(0, cfg.max_pre)))
    per = tuple(rng.randint(1, cfg.max_digit) for _ in range(rng.randint(1, cfg.max_per)))
    return ContinuedFraction(0, pre, per).canonical()


def oracle_corpus(cfg: CorpusConfig = CorpusConfig()) -> list[ContinuedFraction]:
    """The fixed inputs followed by distinct random ones, cfg.size in total."""
    out = [parse_cf(s) for s in FIXED]
    seen = set(out)
    rng = random.Random(cfg.seed)
    while len(out) < cfg.size:
        x = random_cf(rng, cfg)
        if x not in seen:
            seen.add(x)
            out.append(x)
    return out
