"""Command line interface: ``markov3 <command> ...``.

Output is JSON by default; tabular commands accept ``--csv``.  Exit status
is 0 on success, 1 on a domain error and 2 on a usage or parse error.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import product
from typing import Callable, Optional, Sequence

from . import classify, cuts, spectra, words
from .errors import DomainError, ParseError
from .qfield import ContinuedFraction, parse_cf, parse_surd


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# output helpers


def _emit_json(obj, out) -> None:
    out.write(json.dumps(obj, indent=2, ensure_ascii=False))
    out.write("\n")


def _emit_csv(rows: list[dict], out) -> None:
    buf = io.StringIO()
    if rows:
        w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({k: (json.dumps(v) if isinstance(v, (list, dict)) else v) for k, v in r.items()})
    out.write(buf.getvalue())


def _add_decimals(rows: list[dict], keys: Sequence[str], values: list[dict], k: Optional[int]) -> None:
    """Append '<key>_decimal_approx' columns; these are for eyeballing only."""
    if not k:
        return
    for row, vals in zip(rows, values):
        for key in keys:
            row[f"{key}_decimal_approx"] = vals[key].decimal(k)


def _cf_arg(text: str) -> ContinuedFraction:
    return parse_cf(text)


def _word_payload(w: str) -> dict:
    return {"letters": w, "digits": words.digits(w)}


# ---------------------------------------------------------------------------
# commands


def cmd_spectrum(args) -> tuple[list[dict], bool]:
    if args.below != 3:
        raise UsageError("only --below 3 is supported")
    rows, raw = [], []
    triples = {t.z: t for t in spectra.enum_triples(args.max_m)}
    for m in sorted(triples):
        t = triples[m]
        f = spectra.form_from_triple(t)
        lp, tp = spectra.lagrange_point(m), spectra.tilde_point(m)
        rows.append({
            "m": m, "x": t.x, "y": t.y, "z": t.z, "k": f.k, "l": f.l,
            "lagrange_point": str(lp), "tilde_point": str(tp),
        })
        raw.append({"lagrange_point": lp, "tilde_point": tp})
    _add_decimals(rows, ("lagrange_point", "tilde_point"), raw, args.decimal)
    return rows, True


def cmd_triples(args) -> tuple[list[dict], bool]:
    rows = [
        {"x": t.x, "y": t.y, "z": t.z, "path": ",".join(t.path)}
        for t in spectra.enum_triples(args.bound)
    ]
    return rows, True


def _triple_for(m: int) -> spectra.MarkovTriple:
    for t in spectra.enum_triples(m):
        if t.z == m:
            return t
    from .errors import NotMarkovNumber

    raise NotMarkovNumber(f"{m} is not a Markov number")


def cmd_forms(args) -> tuple[list[dict], bool]:
    f = spectra.form_from_triple(_triple_for(args.m))
    A, B, C = f.coefficients
    return [{"m": f.m, "k": f.k, "l": f.l, "A": A, "B": B, "C": C, "form": str(f)}], True


def cmd_roots(args) -> tuple[dict, bool]:
    f = spectra.form_from_triple(_triple_for(args.m))
    th, Th = spectra.roots(f)
    out = {"m": f.m, "k": f.k, "theta": str(th), "Theta": str(Th)}
    if f.m == 1:
        out["warning"] = "theta is negative for m = 1"
    if args.cf:
        rc = spectra.root_cf(f, spectra.pair_for_markov(f.m))
        out["theta_cf"] = str(rc.theta)
        out["Theta_plus_3_cf"] = str(rc.Theta_plus_3)
    if args.decimal:
        out["theta_decimal_approx"] = th.decimal(args.decimal)
        out["Theta_decimal_approx"] = Th.decimal(args.decimal)
    return out, False


def _parse_slope(text: str):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        return parse_surd(text)


def cmd_words(args) -> tuple[dict, bool]:
    if args.kind == "christoffel":
        w = words.christoffel(args.mu, args.nu)
    elif args.kind == "mechanical":
        w = words.mechanical_prefix(words.MechanicalSpec(_parse_slope(args.slope), args.variant), args.n)
    else:
        w = words.limit_prefix(words.parse_path(args.path), args.side, args.n)
    return _word_payload(w), False


def cmd_classify(args) -> tuple[dict, bool]:
    x = _cf_arg(args.cf)
    res = classify.classify_tail(x)
    out = {"x": str(x)}
    out.update(res.as_dict())
    return out, False


def cmd_count(args) -> tuple[dict, bool]:
    x = _cf_arg(args.cf)
    cnt = classify.count_solutions(x)
    out = {"x": str(x)}
    out.update(cnt.as_dict(args.oracle))
    if args.oracle:
        brute = classify.brute_force_count(x, args.oracle)
        mine = [(w.p, w.q) for w in cnt.witnesses_upto(args.oracle)]
        out["oracle_qmax"] = args.oracle
        out["oracle_agrees"] = sorted(brute) == sorted(mine)
    return out, False


def cmd_tilde(args) -> tuple[dict, bool]:
    x = _cf_arg(args.cf)
    r = spectra.tilde_m(x)
    out = {"x": str(x), "tilde_m": str(r.value), "attained_at": r.attained_at, "limit_class": r.limit_class}
    if args.decimal:
        out["tilde_m_decimal_approx"] = r.value.decimal(args.decimal)
    return out, False


def cmd_oracle(args) -> tuple[list[dict], bool]:
    x = _cf_arg(args.cf)
    return [{"p": p, "q": q} for p, q in classify.brute_force_count(x, args.qmax)], True


# -- verify sweeps -------------------------------------------------------------


def _node_of(path: str) -> words.AlphabetPair:
    return words.AlphabetPair.from_path(tuple(path))


def _check_identities(path: str) -> tuple[str, dict]:
    return path, words.verify_identities(_node_of(path))


def _check_equal_value(path: str) -> tuple[str, bool]:
    p = _node_of(path)
    return path, spectra.verify_equal_value(p.alpha, p.beta).ok


def _check_renorm(path: str) -> tuple[str, bool]:
    return path, words.renormalization_agrees(tuple(path))


def _check_balanced_markov(w: str) -> tuple[str, bool]:
    balanced = words.is_balanced_periodic(w)
    below = cuts.markov_value_periodic(w) < 3
    return w, balanced == below


def _check_lex(w: str) -> tuple[str, bool]:
    return w, not cuts.lex_vs_exact(w)


def _check_cor_cuts(path: str) -> tuple[str, bool]:
    p = _node_of(path)
    _, pos = cuts.markov_cut_positions(p.word)
    return path, len(pos) == 2


def _check_florek(path: str) -> tuple[str, bool]:
    p = _node_of(path)
    m = spectra.markov_number_of_word(p.word)
    t = spectra.triple_of_node(p)
    f = spectra.form_from_triple(spectra.MarkovTriple(*t))
    try:
        spectra.root_cf(f, p)
    except DomainError:
        return path, False
    return path, f.m == m


def _run(fn: Callable, items: list, jobs: int) -> list:
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))
    return [fn(i) for i in items]


def _paths(depth: int) -> list[str]:
    return ["".join(p.path) for p in words.tree_nodes(depth)]


def _primitive_words(max_len: int) -> list[str]:
    out = []
    for n in range(1, max_len + 1):
        for t in product("ab", repeat=n):
            w = "".join(t)
            if not any(n % k == 0 and w[:k] * (n // k) == w for k in range(1, n)):
                out.append(w)
    return out


def cmd_verify(args) -> tuple[dict, bool]:
    d, jobs = args.depth, args.jobs
    report: dict = {"check": args.check, "depth": d}
    if args.check == "identities":
        res = _run(_check_identities, _paths(d), jobs)
        tally: dict[str, dict[str, int]] = {}
        failures = []
        for path, r in res:
            for name, verdict in r.items():
                tally.setdefault(name, {"pass": 0, "fail": 0, "skipped": 0})[verdict] += 1
                if verdict == "fail":
                    failures.append({"path": path, "identity": name})
        report.update(nodes=len(res), identities=tally, failures=failures)
    elif args.check == "lemma31":
        bad = {n: classify.gurwood_lemma31(n) for n in range(1, d + 1)}
        report.update(counterexamples={str(n): ws for n, ws in bad.items() if ws})
        failures = [w for ws in bad.values() for w in ws]
    else:
        fn, items = {
            "equal-value": (_check_equal_value, lambda: _paths(d)),
            "relbtrenorm": (_check_renorm, lambda: ["".join(t) for n in range(d + 1) for t in product("UV", repeat=n)]),
            "balanced-markov": (_check_balanced_markov, lambda: _primitive_words(d)),
            "lex-cuts": (_check_lex, lambda: _primitive_words(d)),
            "cor-cuts": (_check_cor_cuts, lambda: _paths(d)),
            "florek": (_check_florek, lambda: _paths(d)),
        }[args.check]
        res = _run(fn, items(), jobs)
        failures = [k for k, ok in res if not ok]
        report.update(cases=len(res), failures=failures)
    report["all_pass"] = not failures
    return report, False


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="markov3", description="Exact Markov/Lagrange spectrum and approximation tools.")
    ap.add_argument("--csv", action="store_true", help="CSV output for tabular commands")
    ap.add_argument("--decimal", type=int, metavar="K", default=None,
                    help="add K-digit decimal approximations (not authoritative)")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("spectrum", help="Markov numbers with Lagrange and tilde-m points")
    s.add_argument("--below", type=int, default=3)
    s.add_argument("--max-m", type=int, required=True)
    s.set_defaults(func=cmd_spectrum)

    s = sub.add_parser("triples", help="normalized Markov triples up to a bound")
    s.add_argument("--bound", type=int, required=True)
    s.set_defaults(func=cmd_triples)

    s = sub.add_parser("forms", help="Markov form for a Markov number")
    s.add_argument("--m", type=int, required=True)
    s.set_defaults(func=cmd_forms)

    s = sub.add_parser("roots", help="roots of the Markov form")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--cf", action="store_true", help="also print continued fractions")
    s.set_defaults(func=cmd_roots)

    s = sub.add_parser("words", help="Christoffel, mechanical and limit words")
    wsub = s.add_subparsers(dest="kind", required=True)
    w = wsub.add_parser("christoffel")
    w.add_argument("mu", type=int, help="number of b")
    w.add_argument("nu", type=int, help="number of a")
    w = wsub.add_parser("mechanical")
    w.add_argument("--slope", required=True, help="rational p/q or surd literal")
    w.add_argument("--n", type=int, required=True)
    w.add_argument("--variant", choices=("floor", "skew"), default="floor")
    w = wsub.add_parser("limit")
    w.add_argument("--path", required=True, help="operator string such as UVUV")
    w.add_argument("--side", choices=("alpha", "beta"), default="alpha")
    w.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_words)

    for name, func, helptext in (
        ("classify", cmd_classify, "normal form of the tail"),
        ("tilde", cmd_tilde, "sup of lambda_n"),
    ):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("cf", help='continued fraction literal, e.g. "[0; 3, (1)]"')
        s.set_defaults(func=func)

    s = sub.add_parser("count", help="solutions of |x - p/q| < 1/(3q^2)")
    s.add_argument("cf")
    s.add_argument("--oracle", type=int, metavar="QMAX", default=None)
    s.set_defaults(func=cmd_count)

    s = sub.add_parser("oracle", help="brute-force solutions with q <= qmax")
    s.add_argument("cf")
    s.add_argument("--qmax", type=int, required=True)
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("verify", help="exhaustive checks of the structural lemmas")
    s.add_argument(
        "check",
        choices=("identities", "equal-value", "lemma31", "relbtrenorm", "balanced-markov", "lex-cuts", "cor-cuts", "florek"),
    )
    s.add_argument("--depth", type=int, required=True)
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_verify)
    return ap


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    ap = build_parser()
    try:
        with contextlib.redirect_stderr(err):
            args = ap.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        result, tabular = args.func(args)
    except (ParseError, UsageError) as e:
        msg = str(e)
        pos = getattr(e, "position", None)
        if pos is not None and "position" not in msg:
            msg += f" (at position {pos})"
        err.write(f"usage error: {msg}\n")
        return 2
    except (DomainError, ValueError, ZeroDivisionError) as e:
        err.write(f"error: {e}\n")
        return 1
    if tabular and args.csv:
        _emit_csv(result, out)
    else:
        _emit_json(result, out)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
