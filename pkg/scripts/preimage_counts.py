"""Exploratory: how many x in (0, 1) share a given tilde-m value below 3.

Enumerates every eventually periodic [0; pre, (per)] with digits <= max_digit,
|pre| <= max_pre and |per| <= max_per, keeps those with tilde-m below 3, and
groups them by value.  The counts are only lower bounds for the true
preimage sizes; they are printed next to their residue mod 4.

    python3 scripts/preimage_counts.py --max-pre 4 --max-per 6
"""

from __future__ import annotations

import argparse
import json
from collections import defaultdict
from dataclasses import dataclass
from itertools import product

from markov3.qfield import ContinuedFraction, QuadraticSurd, parse_surd
from markov3.spectra import tilde_m

THREE = QuadraticSurd.rational(3)


@dataclass
class Config:
    max_digit: int = 2
    max_pre: int = 4
    max_per: int = 6


def candidates(cfg: Config):
    seen = set()
    digits = range(1, cfg.max_digit + 1)
    for lp in range(cfg.max_pre + 1):
        for pre in product(digits, repeat=lp):
            for lq in range(1, cfg.max_per + 1):
                for per in product(digits, repeat=lq):
                    x = ContinuedFraction(0, pre, per).canonical()
                    if x not in seen:
                        seen.add(x)
                        yield x


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for f in ("max_digit", "max_pre", "max_per"):
        ap.add_argument("--" + f.replace("_", "-"), type=int, default=getattr(Config, f))
    cfg = Config(**{k: v for k, v in vars(ap.parse_args()).items()})

    groups: dict[str, list[str]] = defaultdict(list)
    total = 0
    for x in candidates(cfg):
        total += 1
        v = tilde_m(x).value
        if v < THREE:
            groups[str(v)].append(str(x))
    rows = sorted(groups.items(), key=lambda kv: parse_surd(kv[0]))
    report = {
        "config": vars(cfg),
        "inputs": total,
        "values": [
            {"tilde_m": v, "count": len(xs), "count_mod_4": len(xs) % 4, "examples": xs[:4]}
            for v, xs in rows
        ],
    }
    print(json.dumps(report, indent=2))


if __name__ == "__main__":
    main()
