"""Command-line surface: one subcommand per library operation.

Exit codes: 0 success, 1 domain/capacity problems, 2 a certificate that
fails re-verification, 64 usage errors.  JSON is the canonical output
format (timing lives under its own key so reports stay byte-comparable);
CSV is available for the tabular censuses.
"""

import argparse
import json
import math
import sys
import time

import numpy as np

from . import census as census_mod
from . import chains as chains_mod
from . import construct as construct_mod
from . import preimage as preimage_mod
from .errors import PhisigmaError, VerificationError
from .primes import largest_factor_table, primes_up_to

USAGE_EXIT = 64


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(USAGE_EXIT)


def _int_list(text: str) -> list[int]:
    return [int(tok) for tok in text.split(",") if tok.strip()]


def _emit(text: str, out):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _json_report(payload: dict, started: float) -> str:
    payload = dict(payload)
    payload["timing"] = {"seconds": round(time.perf_counter() - started, 3)}
    return json.dumps(payload, indent=2, sort_keys=True)


def _smooth_bound_from(args) -> int:
    if getattr(args, "smooth_bound", None) is not None:
        return args.smooth_bound
    if getattr(args, "delta", None) is not None:
        bound = int(args.x ** (0.5 - args.delta))
        return max(bound, 2)
    raise _UsageError("one of --smooth-bound or --delta is required")


def build_parser() -> _Parser:
    parser = _Parser(prog="phisigma", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("census", help="count phi-values / sigma-values / common values")
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--squarefree", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.add_argument("--csv", action="store_true")
    p.add_argument("--out")

    for name in ("inv-phi", "inv-sigma"):
        p = sub.add_parser(name, help=f"enumerate {name[4:]}-preimages of n")
        p.add_argument("n", type=int)
        p.add_argument("--json", action="store_true")
        p.add_argument("--out")

    p = sub.add_parser("popular", help="n with at least k phi- and sigma-preimages")
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--csv", action="store_true")
    p.add_argument("--out")

    p = sub.add_parser("chain", help="the prime chain set T(y, q)")
    p.add_argument("--y", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")

    p = sub.add_parser("forbidden", help="union of chain sets over several roots")
    p.add_argument("--y", type=int, required=True)
    p.add_argument("--roots", type=_int_list, default=[])
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")

    p = sub.add_parser("sq-count", help="smooth shifted-prime counter S_q")
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--a", type=int, choices=(1, -1), default=1)
    p.add_argument("--smooth-bound", type=int)
    p.add_argument("--delta", type=float)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")

    p = sub.add_parser("smooth-count", help="how many n <= x are bound-smooth")
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--bound", type=int)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")

    p = sub.add_parser("exceptional", help="primes q <= y with a thin S_q count")
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--y", type=int, required=True)
    p.add_argument("--smooth-bound", type=int)
    p.add_argument("--delta", type=float)
    p.add_argument("--gamma", type=float, required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")

    p = sub.add_parser("construct", help="smooth-shifted-prime common-value certificate")
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--smooth-bound", type=int)
    p.add_argument("--delta", type=float)
    p.add_argument("--roots", type=_int_list, default=[])
    p.add_argument("--drop-index", type=int)
    p.add_argument("--auto-repair", action="store_true")
    p.add_argument("--out")

    p = sub.add_parser("marker-family", help="twin primes with private marker primes")
    p.add_argument("--z", type=int, required=True)
    p.add_argument("--theta", type=float, required=True)
    p.add_argument("--samples", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")

    p = sub.add_parser("collide", help="most-collided subset product of p+1")
    p.add_argument("--pool", type=_int_list)
    p.add_argument("--pool-limit", type=int)
    p.add_argument("--pool-smooth", type=int)
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--twin-only", action="store_true")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")

    p = sub.add_parser("factorial", help="does k! have phi- and sigma-preimages?")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")

    p = sub.add_parser("verify-cert", help="re-check a certificate file")
    p.add_argument("path")

    return parser


def _cmd_census(args, started):
    result = census_mod.value_census(
        args.limit,
        squarefree_domain=args.squarefree,
        workers=max(args.workers, 1),
        keep_bitsets=args.csv,
    )
    if args.csv:
        rows = ["n,is_phi_value,is_sigma_value"]
        rows.extend(census_mod.census_csv_rows(result))
        _emit("\n".join(rows), args.out)
    elif args.json:
        _emit(_json_report(result.summary(), started), args.out)
    else:
        s = result.summary()
        _emit(
            f"phi_values={s['phi_values']} sigma_values={s['sigma_values']} "
            f"common={s['common']}",
            args.out,
        )
    return 0


def _cmd_inverse(args, started, kind):
    fn = preimage_mod.inverse_phi if kind == "phi" else preimage_mod.inverse_sigma
    result = fn(args.n)
    if args.json:
        payload = {
            "n": args.n,
            "kind": kind,
            "count": result.count,
            "witnesses": list(result.witnesses),
        }
        _emit(_json_report(payload, started), args.out)
    else:
        _emit(" ".join(str(w) for w in result.witnesses), args.out)
    return 0


def _cmd_popular(args, started):
    if args.csv:
        hist = census_mod.popularity_histogram(args.limit)
        good = np.nonzero((hist.A >= args.k) & (hist.B >= args.k))[0]
        rows = ["n,A,B"]
        rows.extend(
            f"{int(n)},{int(hist.A[n])},{int(hist.B[n])}" for n in good if n >= 1
        )
        _emit("\n".join(rows), args.out)
        return 0
    values = census_mod.find_popular(args.limit, args.k)
    if args.json:
        payload = {"limit": args.limit, "k": args.k, "count": len(values), "values": values}
        _emit(_json_report(payload, started), args.out)
    else:
        _emit(" ".join(str(v) for v in values), args.out)
    return 0


def _cmd_chain(args, started):
    cs = chains_mod.prime_chain_set(args.y, args.q)
    if args.json:
        _emit(_json_report(cs.to_json_dict(), started), args.out)
    else:
        _emit(" ".join(str(t) for t in cs.members), args.out)
    return 0


def _cmd_forbidden(args, started):
    members = chains_mod.forbidden_set(args.y, args.roots)
    if args.json:
        payload = {"y": args.y, "roots": args.roots, "members": list(members)}
        _emit(_json_report(payload, started), args.out)
    else:
        _emit(" ".join(str(t) for t in members), args.out)
    return 0


def _cmd_sq_count(args, started):
    bound = _smooth_bound_from(args)
    count = chains_mod.smooth_shifted_count(args.x, bound, args.q, args.a)
    if args.json:
        payload = {"x": args.x, "smooth_bound": bound, "q": args.q, "a": args.a,
                   "count": count}
        _emit(_json_report(payload, started), args.out)
    else:
        _emit(str(count), args.out)
    return 0


def _cmd_smooth_count(args, started):
    bound = args.bound if args.bound is not None else max(int(math.log(args.x)), 2)
    count = chains_mod.smooth_count(args.x, bound)
    if args.json:
        payload = {"x": args.x, "bound": bound, "count": count}
        _emit(_json_report(payload, started), args.out)
    else:
        _emit(str(count), args.out)
    return 0


def _cmd_exceptional(args, started):
    bound = _smooth_bound_from(args)
    qs = chains_mod.exceptional_set(args.x, args.y, bound, args.gamma)
    if args.json:
        payload = {"x": args.x, "y": args.y, "smooth_bound": bound,
                   "gamma": args.gamma, "exceptional": list(qs)}
        _emit(_json_report(payload, started), args.out)
    else:
        _emit(" ".join(str(q) for q in qs), args.out)
    return 0


def _cmd_construct(args, started):
    bound = _smooth_bound_from(args)
    cert = construct_mod.build_common_value(
        args.x,
        bound,
        forbidden_roots=args.roots,
        drop_index=args.drop_index,
        auto_repair=args.auto_repair,
    )
    _emit(_json_report(cert.to_json_dict(), started), args.out)
    return 0


def _cmd_marker_family(args, started):
    fam = construct_mod.marker_family(
        args.z, args.theta, samples=args.samples, seed=args.seed
    )
    payload = {
        "twin_pool": fam["twin_pool"],
        "markers": {str(p): m for p, m in fam["markers"].items()},
        "primes": list(fam["primes"]),
        "family_size": fam["family_size"],
        "sample_certificates": [c.to_json_dict() for c in fam["sample_certificates"]],
    }
    if args.json:
        _emit(_json_report(payload, started), args.out)
    else:
        _emit(
            f"retained={' '.join(str(p) for p in fam['primes'])} "
            f"family_size={fam['family_size']}",
            args.out,
        )
    return 0


def _cmd_collide(args, started):
    if args.pool:
        pool = args.pool
    elif args.pool_limit and args.pool_smooth:
        lpf = largest_factor_table(args.pool_limit + 1)
        pool = [
            int(p) for p in primes_up_to(args.pool_limit) if lpf[p + 1] <= args.pool_smooth
        ]
    else:
        raise _UsageError("either --pool or both --pool-limit and --pool-smooth")
    res = construct_mod.subset_collision_search(pool, args.size, twin_only=args.twin_only)
    if args.json:
        payload = {
            "pool_size": len(pool),
            "subset_size": args.size,
            "n": [[p, e] for p, e in res["n"].factors],
            "value": res["value"],
            "count": len(res["representations"]),
            "representations": [list(rep) for rep in res["representations"]],
        }
        _emit(_json_report(payload, started), args.out)
    else:
        _emit(
            f"value={res['value']} representations={len(res['representations'])}",
            args.out,
        )
    return 0


def _cmd_factorial(args, started):
    rec = construct_mod.factorial_check(args.k)
    if args.json:
        _emit(_json_report(rec, started), args.out)
    else:
        _emit(
            f"A_positive={rec['A_positive']} B_positive={rec['B_positive']} "
            f"phi_witness={rec['phi_witness']} sigma_witness={rec['sigma_witness']}",
            args.out,
        )
    return 0


def _cmd_verify_cert(args, started):
    with open(args.path, encoding="utf-8") as fh:
        data = json.load(fh)
    cert = construct_mod.certificate_from_json_dict(data)
    construct_mod.verify_certificate(cert)
    print(f"certificate verified: phi(a) = sigma(b) = n ({cert.n.digits()} digits)")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else USAGE_EXIT
    started = time.perf_counter()
    try:
        if args.command == "census":
            return _cmd_census(args, started)
        if args.command == "inv-phi":
            return _cmd_inverse(args, started, "phi")
        if args.command == "inv-sigma":
            return _cmd_inverse(args, started, "sigma")
        if args.command == "popular":
            return _cmd_popular(args, started)
        if args.command == "chain":
            return _cmd_chain(args, started)
        if args.command == "forbidden":
            return _cmd_forbidden(args, started)
        if args.command == "sq-count":
            return _cmd_sq_count(args, started)
        if args.command == "smooth-count":
            return _cmd_smooth_count(args, started)
        if args.command == "exceptional":
            return _cmd_exceptional(args, started)
        if args.command == "construct":
            return _cmd_construct(args, started)
        if args.command == "marker-family":
            return _cmd_marker_family(args, started)
        if args.command == "collide":
            return _cmd_collide(args, started)
        if args.command == "factorial":
            return _cmd_factorial(args, started)
        if args.command == "verify-cert":
            return _cmd_verify_cert(args, started)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return USAGE_EXIT
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 2
    except PhisigmaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except json.JSONDecodeError as exc:
        print(f"error: malformed JSON: {exc}", file=sys.stderr)
        return 1
    return USAGE_EXIT


if __name__ == "__main__":
    raise SystemExit(main())
