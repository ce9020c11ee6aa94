"""Table of the spectrum points below 3: for each Markov number m <= bound,
its triple, the form parameters, the Lagrange point sqrt(9 - 4/m^2), the
tilde-m point and a Christoffel word with that Markov number.

    python3 scripts/spectrum_table.py --bound 1000 > table.csv
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass

from markov3.spectra import enum_triples, form_from_triple, lagrange_point, pair_for_markov, tilde_point


@dataclass
class Config:
    bound: int = 1000
    decimals: int = 12


def rows(cfg: Config):
    for t in enum_triples(cfg.bound):
        f = form_from_triple(t)
        w = pair_for_markov(t.z)
        lp, tp = lagrange_point(t.z), tilde_point(t.z)
        yield {
            "m": t.z,
            "triple": f"{t.x} {t.y} {t.z}",
            "k": f.k,
            "word": w if isinstance(w, str) else w.word,
            "lagrange_point": str(lp),
            "tilde_point": str(tp),
            "lagrange_decimal_approx": lp.decimal(cfg.decimals),
            "tilde_decimal_approx": tp.decimal(cfg.decimals),
        }


def main() -> None:
    ap = argparse.ArgumentParser(description="spectrum points below 3")
    ap.add_argument("--bound", type=int, default=Config.bound)
    ap.add_argument("--decimals", type=int, default=Config.decimals)
    cfg = Config(**vars(ap.parse_args()))
    out = csv.DictWriter(sys.stdout, fieldnames=list(next(rows(Config(5, 1)))), lineterminator="\n")
    out.writeheader()
    out.writerows(rows(cfg))


if __name__ == "__main__":
    main()
