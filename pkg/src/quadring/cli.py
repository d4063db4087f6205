"""Command-line front end. Deterministic text by default, JSON with --json.

Exit codes: 0 success, 1 domain error (error name on stderr), 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from random import Random

from .errors import QuadringError, UnsupportedField
from .field import make_field
from .intmath import is_prime
from .ideals import Ideal, ideal_from_json_dict
from .infinitude import (
    escape_finite_list,
    nonassociate_prime_elements,
    prime_ideal_stream,
)
from .norms import extend_ideal, relative_norm
from .sampling import random_ideal
from .splitting import (
    Factorization,
    PrimeIdealFactor,
    factor_ideal,
    split_prime,
)
from .units import (
    UnitGroupKind,
    class_number_imaginary,
    is_ufd,
    minkowski_bound,
    unit_group,
)

# Fundamental-unit searches are only supported at desk scale.
MAX_REAL_D_CLI = 200

IDENTITIES = ("eq2.2", "eq2.4", "norm-pf", "escape")


def _factorization_text(fz: Factorization) -> str:
    p = fz.ideal.intersect_base()
    first = fz.factors[0][0]
    if first.e == 2:
        return f"{p} ramifies: {fz}"
    if first.f == 2:
        return f"{p} is inert: {first.ideal}"
    return f"{p} splits: {fz}"


def _prime_factor_from_json_dict(field, data: dict) -> PrimeIdealFactor:
    try:
        p, hnf, e, f = data["p"], data["hnf"], data["e"], data["f"]
    except (TypeError, KeyError) as exc:
        raise ValueError(f"prime factor JSON needs p, hnf, e, f: {data!r}") from exc
    ideal = Ideal(field, hnf[0], hnf[1], hnf[2])
    if ideal.intersect_base() != p:
        raise ValueError(f"hnf {hnf} does not lie above p={p}")
    if e not in (1, 2) or f not in (1, 2):
        raise ValueError(f"invalid ramification data e={e} f={f}")
    return PrimeIdealFactor(ideal=ideal, p=p, e=e, f=f)


def _load_factor_list(field, path: str) -> list[PrimeIdealFactor]:
    with open(path) as fh:
        data = json.load(fh)
    if isinstance(data, dict):
        data = data.get("factors", [])
    if not isinstance(data, list):
        raise ValueError("factor list JSON must be an array or have a 'factors' key")
    return [_prime_factor_from_json_dict(field, item) for item in data]


def _ideal_from_args(args) -> Ideal:
    if args.ideal is not None:
        return ideal_from_json_dict(json.loads(args.ideal))
    if args.d is None:
        raise ValueError("--element needs -d to select the field")
    field = make_field(args.d)
    return Ideal.principal(field.parse_element(args.element))


def _check_real_d(args) -> None:
    if args.d > MAX_REAL_D_CLI:
        raise UnsupportedField(
            f"real d > {MAX_REAL_D_CLI} is outside the supported CLI range"
        )


def _cmd_field(args) -> int:
    field = make_field(args.d)
    if args.json:
        print(json.dumps({"d": field.d, "D": field.D,
                          "omega": field.omega_kind.value,
                          "degree": field.degree}))
    else:
        print(f"d={field.d} D={field.D} omega={field.omega_kind.value} "
              f"degree={field.degree}")
    return 0


def _cmd_split(args) -> int:
    field = make_field(args.d)
    fz = split_prime(field, args.p)
    print(json.dumps(fz.to_json_dict()) if args.json else _factorization_text(fz))
    return 0


def _cmd_factor(args) -> int:
    A = _ideal_from_args(args)
    fz = factor_ideal(A)
    if args.json:
        print(json.dumps(fz.to_json_dict()))
    else:
        print(f"{A} = {fz}")
    return 0


def _cmd_norm(args) -> int:
    A = _ideal_from_args(args)
    n = relative_norm(A)
    if args.json:
        print(json.dumps({"ideal": A.to_json_dict(), "relative_norm": n,
                          "ideal_norm": A.norm()}))
    else:
        print(n)
    return 0


def _cmd_primes(args) -> int:
    field = make_field(args.d)
    factors = []
    for P in prime_ideal_stream(field):
        factors.append(P)
        if len(factors) == args.count:
            break
    if args.json:
        print(json.dumps({"d": field.d,
                          "factors": [P.to_json_dict() for P in factors]}))
    else:
        for P in factors:
            print(P)
    return 0


def _cmd_escape(args) -> int:
    field = make_field(args.d)
    known = _load_factor_list(field, args.list)
    fresh = escape_finite_list(field, known)
    if args.json:
        print(json.dumps(fresh.to_json_dict()))
    else:
        print(fresh)
    return 0


def _cmd_elements(args) -> int:
    field = make_field(args.d)
    if field.d > 0:
        _check_real_d(args)
    elems = nonassociate_prime_elements(field, args.count)
    if args.json:
        print(json.dumps({"d": field.d, "elements": [str(e) for e in elems]}))
    else:
        for e in elems:
            print(e)
    return 0


def _cmd_units(args) -> int:
    field = make_field(args.d)
    if field.d > 0:
        _check_real_d(args)
    info = unit_group(field)
    if args.json:
        print(json.dumps({
            "d": field.d,
            "kind": info.kind.value,
            "torsion_order": info.torsion_order,
            "fundamental_unit": (str(info.fundamental_unit)
                                 if info.fundamental_unit else None),
        }))
    else:
        print(info)
    return 0


def _cmd_class_number(args) -> int:
    field = make_field(args.d)
    h = class_number_imaginary(field)
    print(json.dumps({"d": field.d, "class_number": h}) if args.json else h)
    return 0


def _cmd_ufd(args) -> int:
    field = make_field(args.d)
    if field.d > 0:
        _check_real_d(args)
    answer = is_ufd(field)
    if args.json:
        print(json.dumps({"d": field.d, "ufd": answer,
                          "minkowski_bound": str(minkowski_bound(field))}))
    else:
        print("true" if answer else "false")
    return 0


def _verify_lines(args) -> tuple[list[str], int]:
    field = make_field(args.d)
    lines: list[str] = []
    failures = 0

    def record(tag: str, detail: str, ok: bool) -> None:
        nonlocal failures
        lines.append(f"{tag} d={field.d} {detail} {'OK' if ok else 'FAIL'}")
        failures += 0 if ok else 1

    if args.identity == "eq2.4":
        for a in range(1, args.max_a + 1):
            lhs = relative_norm(extend_ideal(field, a))
            rhs = a**field.degree
            record("EQ2.4", f"a={a} lhs={lhs} rhs={rhs}", lhs == rhs)
    elif args.identity == "eq2.2":
        rng = Random(args.seed)
        for i in range(1, args.trials + 1):
            A = random_ideal(field, rng)
            B = random_ideal(field, rng)
            lhs = relative_norm(A * B)
            rhs = relative_norm(A) * relative_norm(B)
            record("EQ2.2", f"trial={i} lhs={lhs} rhs={rhs}", lhs == rhs)
    elif args.identity == "norm-pf":
        for p in range(2, args.max_a + 1):
            if not is_prime(p):
                continue
            for P, _ in split_prime(field, p).factors:
                lhs = relative_norm(P.ideal)
                rhs = p**P.f
                record("NORM-PF", f"p={p} ideal={P.ideal} lhs={lhs} rhs={rhs}",
                       lhs == rhs)
    else:  # escape
        prefix: list[PrimeIdealFactor] = []
        stream = prime_ideal_stream(field)
        for k in range(1, args.trials + 1):
            prefix.append(next(stream))
            fresh = escape_finite_list(field, prefix)
            ok = all(fresh.ideal != P.ideal for P in prefix)
            record("ESCAPE", f"k={k} escapee={fresh.ideal}", ok)
    return lines, failures


def _cmd_verify(args) -> int:
    lines, failures = _verify_lines(args)
    if args.json:
        print(json.dumps({"identity": args.identity, "d": args.d,
                          "checks": len(lines), "failures": failures}))
    else:
        for line in lines:
            print(line)
    return 1 if failures else 0


def _cmd_report(args) -> int:
    from .report import write_splitting_report

    field = make_field(args.d)
    paths = write_splitting_report(field, args.max_p, args.out)
    if args.json:
        print(json.dumps({"csv": str(paths.csv),
                          "figures": [str(p) for p in paths.figures]}))
    else:
        print(paths.csv)
        for fig in paths.figures:
            print(fig)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quadring",
        description="Exact ideal arithmetic in quadratic rings of integers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("--json", action="store_true", help="emit JSON output")
        p.set_defaults(func=func)
        return p

    p = add("field", _cmd_field, help="describe a quadratic field")
    p.add_argument("-d", type=int, required=True)

    p = add("split", _cmd_split, help="factor a rational prime")
    p.add_argument("-d", type=int, required=True)
    p.add_argument("-p", type=int, required=True)

    for name, func in (("factor", _cmd_factor), ("norm", _cmd_norm)):
        p = add(name, func,
                help="factor an ideal" if name == "factor"
                else "relative norm of an ideal")
        p.add_argument("-d", type=int)
        g = p.add_mutually_exclusive_group(required=True)
        g.add_argument("--element", help="principal ideal generator, e.g. 6+0*w")
        g.add_argument("--ideal", help='ideal JSON, e.g. {"d": 2, "hnf": [7, 3, 1]}')

    p = add("verify", _cmd_verify, help="run a named identity sweep")
    p.add_argument("--identity", choices=IDENTITIES, required=True)
    p.add_argument("-d", type=int, required=True)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--max-a", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)

    p = add("primes", _cmd_primes, help="stream prime ideals")
    p.add_argument("-d", type=int, required=True)
    p.add_argument("--count", type=int, default=10)

    p = add("escape", _cmd_escape, help="produce a prime ideal outside a list")
    p.add_argument("-d", type=int, required=True)
    p.add_argument("--list", required=True, help="JSON file of prime factors")

    p = add("elements", _cmd_elements, help="non-associate prime elements")
    p.add_argument("-d", type=int, required=True)
    p.add_argument("--count", type=int, default=10)

    p = add("units", _cmd_units, help="unit group structure")
    p.add_argument("-d", type=int, required=True)

    p = add("class-number", _cmd_class_number, help="imaginary class number")
    p.add_argument("-d", type=int, required=True)

    p = add("ufd", _cmd_ufd, help="unique factorization test")
    p.add_argument("-d", type=int, required=True)

    p = add("report", _cmd_report, help="write splitting CSV and figures")
    p.add_argument("-d", type=int, required=True)
    p.add_argument("--max-p", type=int, default=1000)
    p.add_argument("--out", default="reports")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (QuadringError, ValueError, OSError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
