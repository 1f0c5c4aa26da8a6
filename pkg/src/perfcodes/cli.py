"""Command-line front end.

Every subcommand prints one JSON document (stable key order) and exits with
0 on success, 1 when the answer is negative, 2 on invalid input.  Large
counts and bounds are emitted as decimal strings.
"""

from __future__ import annotations

import argparse
import json
import sys
from itertools import islice
from typing import Any, Callable, Iterable, Optional, Sequence

from . import codes, counting, lifts, pyramidal, tiling
from .zmod import InvalidInput, ResidueSet, Subgroup, format_set, parse_set, prime_factors, project

DEFAULT_CAP = 10_000


class Outcome:
    """A JSON document plus the exit status it implies."""

    def __init__(self, doc: dict, ok: bool = True):
        self.doc = doc
        self.ok = ok


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise InvalidInput("parse-error", f"expected comma-separated integers, got {text!r}") from None


def _prime_power(q: int) -> tuple[int, int]:
    ps = prime_factors(q)
    if len(ps) != 1:
        raise InvalidInput("invalid-input", f"{q} is not a prime power; pass --p and --l")
    p, l = ps[0], 0
    while q > 1:
        q //= p
        l += 1
    return p, l


def _pl(args, size: int) -> tuple[int, int]:
    if args.p is not None and args.l is not None:
        return args.p, args.l
    p, l = _prime_power(size)
    if args.p is not None and args.p != p or args.l is not None and args.l != l:
        raise InvalidInput("invalid-input", f"set size {size} is not {args.p}^{args.l}")
    return p, l


def series_doc(s: Optional[pyramidal.AdmissibleSeries]) -> Optional[dict]:
    if s is None:
        return None
    return {
        "modulus": s.modulus,
        "subgroups": list(s.generators),
        "h": list(s.h_seq),
        "k": list(s.k_seq),
        "l": list(s.l_seq),
        "m": list(s.m_seq),
        "t": s.t,
    }


def _capped(items: Iterable[Any], cap: Optional[int]) -> tuple[list, bool]:
    if cap is None:
        return list(items), False
    out = list(islice(items, cap + 1))
    return out[:cap], len(out) > cap


# ------------------------------------------------------------- subcommands


def cmd_check(args, S: ResidueSet) -> Outcome:
    p, l = _pl(args, len(S) + 1)
    d = pyramidal.decide_existence(S, p, l)
    return Outcome(
        {
            "exists": d.exists,
            "pyramidal": d.pyramidal,
            "subgroup_code": d.subgroup_code,
            "non_subgroup_codes": d.non_subgroup_codes,
            "t": d.t,
            "series": series_doc(d.series),
        },
        d.exists,
    )


def cmd_series(args, X: ResidueSet) -> Outcome:
    p, l = _pl(args, len(X))
    if args.series:
        gens = _ints(args.series)
        ok = pyramidal.check_T_conditions(X, gens)
        return Outcome({"admissible": ok, "subgroups": list(gens)}, ok)
    s = pyramidal.longest_series(X, p, l)
    return Outcome({"pyramidal": s is not None, "series": series_doc(s)}, s is not None)


def _code_source(args, S: ResidueSet):
    """Pyramidal data when S is in the prime-power setting, else None."""
    try:
        p, l = _pl(args, len(S) + 1)
        d = pyramidal.decide_existence(S, p, l)
    except InvalidInput:
        if args.p is not None or args.l is not None:
            raise
        return None
    return d, p, l


def cmd_find_code(args, S: ResidueSet) -> Outcome:
    src = None if args.oracle else _code_source(args, S)
    if src is None:
        D = tiling.find_perfect_code(S)
    else:
        d = src[0]
        D = None
        if d.exists:
            recipe = next(codes.enumerate_recipes(S.with_zero(), series=d.series))
            D = codes.build_code(S.with_zero(), recipe)
    return Outcome({"exists": D is not None, "codes": [format_set(D)] if D else []}, D is not None)


def cmd_enumerate_codes(args, S: ResidueSet) -> Outcome:
    cap = None if args.budget == 0 else (args.budget or DEFAULT_CAP)
    doc: dict = {}
    if args.constructed:
        p, l = _pl(args, len(S) + 1)
        d = pyramidal.decide_existence(S, p, l)
        if not d.exists:
            found, truncated = [], False
        else:
            S0 = S.with_zero()
            gen = (codes.build_code(S0, r) for r in codes.enumerate_recipes(S0, series=d.series))
            found, truncated = _capped(gen, cap)
            doc["lower_bound"] = str(codes.lower_bound(d.series, l, p))
    else:
        found, truncated = _capped(tiling.enumerate_perfect_codes(S, workers=args.threads), cap)
    texts = [format_set(D) for D in found]
    if args.stream:
        return Outcome({"_lines": texts + (["# truncated"] if truncated else [])}, bool(texts))
    doc = {"count": len(texts), **doc, "truncated": truncated, "codes": texts}
    return Outcome(doc, bool(texts))


def cmd_lift(args, X: ResidueSet) -> Outcome:
    if args.m is None:
        raise InvalidInput("invalid-input", "--m is required")
    if args.kind == "g":
        sets, truncated = [lifts.g_lift(X, args.m)], False
    else:
        cap = None if args.budget == 0 else (args.budget or DEFAULT_CAP)
        gen = (L.lifted for L in lifts.enumerate_lifts(X, args.m, require_connected=args.connected))
        sets, truncated = _capped(gen, cap)
    texts = [format_set(Y) for Y in sets]
    if args.stream:
        return Outcome({"_lines": texts + (["# truncated"] if truncated else [])}, bool(texts))
    return Outcome({"count": len(texts), "truncated": truncated, "sets": texts}, bool(texts))


def cmd_project(args, X: ResidueSet) -> Outcome:
    if args.by is None:
        raise InvalidInput("invalid-input", "--by is required")
    n, d = X.modulus, args.by
    if d < 1 or n % d:
        raise InvalidInput("incompatible-operands", f"{d} does not divide {n}")
    if args.kind == "f":
        Y = lifts.f_project(X, n // d)
    elif args.kind == "g":
        Y = lifts.g_project(X, n // d)
    else:
        Y = project(X, Subgroup(n, d))
    return Outcome({"set": format_set(Y)})


def cmd_family(args) -> Outcome:
    if args.p is None or not args.l_seq or not args.m_seq:
        raise InvalidInput("invalid-input", "--p, --l-seq and --m-seq are required")
    spec = lifts.FamilySpec(args.p, _ints(args.l_seq), _ints(args.m_seq))
    cap = None if args.budget == 0 else (args.budget or DEFAULT_CAP)
    sets, truncated = _capped(lifts.generate_family(spec), cap)
    texts = [format_set(Y) for Y in sets]
    if args.stream:
        return Outcome({"_lines": texts + (["# truncated"] if truncated else [])}, bool(texts))
    return Outcome({"n": spec.n, "count": len(texts), "truncated": truncated, "sets": texts}, bool(texts))


def cmd_count(args) -> Outcome:
    if args.n is None or args.p is None or args.l is None:
        raise InvalidInput("invalid-input", "--n, --p and --l are required")
    params = counting.CountParams(args.n, args.p, args.l)
    try:
        formula: Optional[int] = counting.count_formula(params)
        reason = None
    except InvalidInput as e:
        if not args.oracle:
            raise
        formula, reason = None, e.message
    doc: dict = {"formula": None if formula is None else str(formula)}
    if reason:
        doc["formula_error"] = reason
    ok = True
    if args.oracle:
        oracle = counting.count_enumerate(params, budget=args.budget or None)
        match = None if formula is None else formula == oracle
        doc["oracle"] = str(oracle)
        doc["match"] = match
        ok = match is not False
    return Outcome(doc, ok)


def cmd_lower_bound(args, S: ResidueSet) -> Outcome:
    p, l = _pl(args, len(S) + 1)
    d = pyramidal.decide_existence(S, p, l)
    if not d.exists:
        return Outcome({"pyramidal": False, "lower_bound": None, "series": None}, False)
    bound = codes.lower_bound(d.series, l, p)
    return Outcome({"pyramidal": True, "lower_bound": str(bound), "series": series_doc(d.series)})


def cmd_verify_tiling(args, S: ResidueSet) -> Outcome:
    if not args.code:
        raise InvalidInput("invalid-input", "--code is required")
    D = parse_set(args.code)
    ok = tiling.is_perfect_code(S, D)
    return Outcome({"perfect_code": ok}, ok)


SET_COMMANDS: dict[str, Callable] = {
    "check": cmd_check,
    "series": cmd_series,
    "find-code": cmd_find_code,
    "enumerate-codes": cmd_enumerate_codes,
    "lift": cmd_lift,
    "project": cmd_project,
    "lower-bound": cmd_lower_bound,
    "verify-tiling": cmd_verify_tiling,
}
PLAIN_COMMANDS: dict[str, Callable] = {"family": cmd_family, "count": cmd_count}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="perfcodes", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)
    for name in [*SET_COMMANDS, *PLAIN_COMMANDS]:
        sp = sub.add_parser(name)
        sp.add_argument("--set", help="residue set n:e1,e2,...")
        sp.add_argument("--file", help="read sets from a file, one per line")
        sp.add_argument("--p", type=int)
        sp.add_argument("--l", type=int)
        sp.add_argument("--n", type=int)
        sp.add_argument("--m", type=int, help="lift factor")
        sp.add_argument("--by", type=int, help="quotient divisor d, projecting onto Z_d")
        sp.add_argument("--kind", choices=["plain", "f", "g"], default=None)
        sp.add_argument("--m-seq")
        sp.add_argument("--l-seq")
        sp.add_argument("--series", help="subgroup generators g0,g1,...,1 to verify")
        sp.add_argument("--code", help="candidate code n:d1,d2,...")
        sp.add_argument("--oracle", action="store_true")
        sp.add_argument("--constructed", action="store_true")
        sp.add_argument("--all", action="store_true")
        sp.add_argument("--connected", action="store_true")
        sp.add_argument("--stream", action="store_true")
        sp.add_argument("--threads", type=int, default=1)
        sp.add_argument("--budget", type=int, default=None, help="record cap (0 = unlimited)")
    return ap


def _emit(out: Outcome, stream) -> None:
    lines = out.doc.get("_lines")
    if lines is not None:
        for line in lines:
            print(line, file=stream)
    else:
        print(json.dumps(out.doc), file=stream)


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        if args.command in PLAIN_COMMANDS:
            out = PLAIN_COMMANDS[args.command](args)
        else:
            fn = SET_COMMANDS[args.command]
            if args.file:
                with open(args.file) as fh:
                    texts = [ln.strip() for ln in fh if ln.strip() and not ln.startswith("#")]
                results = [fn(args, parse_set(t)) for t in texts]
                out = Outcome({"results": [r.doc for r in results]}, all(r.ok for r in results))
            elif args.set:
                out = fn(args, parse_set(args.set))
            else:
                raise InvalidInput("invalid-input", "--set or --file is required")
    except InvalidInput as e:
        print(f"error: {e.kind}: {e.message}", file=stderr)
        return 2
    except OSError as e:
        print(f"error: io: {e}", file=stderr)
        return 2
    _emit(out, stdout)
    return 0 if out.ok else 1


def main() -> None:
    sys.exit(run())
