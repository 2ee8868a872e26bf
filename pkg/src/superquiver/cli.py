"""Batch command line: mutation, frieze generation, the Somos run, the
verification sweeps, and the serve mode for the explorer client.

Exit codes: 0 success, 1 a verification sweep found a counterexample
(replayable payload printed as JSON), 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .errors import EngineError, UnknownName
from .frieze import generate
from .quiver import ExtendedQuiver, named_quiver, quiver_names, mutate, weight_function
from .seed import Seed, mutate_seed, mutation_sequence
from . import verify as verify_mod


def _load_input(source: str):
    """A path to quiver/seed JSON, or a builder name like somos4_a/aquiv(3)."""
    if os.path.exists(source):
        with open(source) as handle:
            obj = json.load(handle)
        if "cluster" in obj:
            return Seed.from_json_obj(obj)
        return ExtendedQuiver.from_json_obj(obj)
    try:
        return named_quiver(source)
    except UnknownName:
        raise EngineError(
            f"{source!r} is neither a file nor a known quiver name "
            f"(known: {', '.join(quiver_names())})"
        )


def _as_seed(obj):
    return obj if isinstance(obj, Seed) else Seed.initial(obj)


def _emit(obj):
    print(json.dumps(obj, sort_keys=True))


def cmd_quiver_mutate(args):
    obj = _load_input(args.input)
    quiver = obj.quiver if isinstance(obj, Seed) else obj
    out = mutate(quiver, args.vertex)
    result = out.to_json_obj()
    if out.m == 2:
        result["weights"] = list(weight_function(out))
    _emit(result)
    return 0


def cmd_seed_mutate_seq(args):
    seed = _as_seed(_load_input(args.input))
    try:
        sequence = [int(v) for v in args.sequence.split(",") if v.strip()]
    except ValueError:
        raise EngineError(f"bad sequence {args.sequence!r}; expected e.g. 1,2,3")
    out = mutation_sequence(seed, sequence)
    obj = out.to_json_obj()
    obj["rendered"] = [p.render() for p in out.cluster]
    _emit(obj)
    return 0


def cmd_frieze_gen(args):
    even_values = odd_values = None
    if args.values:
        values_obj = json.loads(args.values)
        even_values = values_obj.get("x")
        odd_values = values_obj.get("xi")
    n = args.width + 3
    fr = generate(
        args.width,
        diagonals=args.periods * n + 1,
        even_values=even_values,
        odd_values=odd_values,
    )
    if args.format == "text":
        print(fr.render_text())
    else:
        _emit(fr.to_json_obj())
    return 0


SOMOS_QUIVER = "somos4_a"
SOMOS_CYCLE = (1, 2, 3, 4)


def somos_terms(count, super_mode=False):
    """First `count` terms of the Somos-4 recurrence, by cyclic mutation of
    the period-1 weighted quiver from unit initial values."""
    seed = Seed.initial(named_quiver(SOMOS_QUIVER), values=[1, 1, 1, 1])
    terms = [seed.ring.one] * min(4, count)
    step = 0
    while len(terms) < count:
        k = SOMOS_CYCLE[step % 4]
        seed = mutate_seed(seed, k)
        terms.append(seed.value(k))
        step += 1
    if super_mode:
        return [render_dual_number(p) for p in terms]
    return [str(p.classical_projection().constant()) for p in terms]


def render_dual_number(p):
    """c0 + c1*eps with eps = xi1 xi2; the Somos run never leaves this form."""
    zero_exp = p.ring.zero_exp
    c0 = p.classical_projection().constant()
    c1 = 0
    for odd, exp, coeff in p.terms():
        if odd == (1, 2) and exp == zero_exp:
            c1 = coeff
        elif odd:
            raise EngineError(f"value is not of dual-number form: {p.render()}")
    if not c1:
        return str(c0)
    sign = "+" if c1 > 0 else "-"
    mag = abs(c1)
    head = "eps" if mag == 1 else f"{mag}*eps"
    return f"{c0}{sign}{head}"


def cmd_somos(args):
    print(" ".join(somos_terms(args.terms, args.super_mode)))
    return 0


def cmd_verify(args):
    if args.what == "laurent":
        report = verify_mod.verify_laurent(
            args.random, args.max_n, args.max_m, args.max_b, args.max_c,
            args.max_len, args.rng_seed, args.jobs, args.budget,
        )
    elif args.what == "form":
        report = verify_mod.verify_form(
            args.random, args.max_n, args.max_m, args.max_b,
            args.max_c, args.rng_seed, args.jobs,
        )
    elif args.what == "reduction":
        report = verify_mod.verify_reduction(
            args.random, args.max_n, args.max_m, args.max_b, args.max_c,
            args.max_len, args.rng_seed, args.jobs, args.budget,
        )
    else:
        report = verify_mod.verify_frieze(args.width)
    print(report.render())
    print(f"elapsed: {report.elapsed:.2f}s", file=sys.stderr)
    if not report.ok:
        print(verify_mod.dump_failures(report))
        return 1
    return 0


def cmd_serve(args):
    from .server import serve

    serve(host=args.host, port=args.port, undo_limit=args.undo_limit)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(prog="superquiver")
    sub = parser.add_subparsers(dest="command", required=True)

    p_quiver = sub.add_parser("quiver", help="extended quiver operations")
    quiver_sub = p_quiver.add_subparsers(dest="quiver_command", required=True)
    p_qm = quiver_sub.add_parser("mutate", help="mutate a quiver at a vertex")
    p_qm.add_argument("-i", "--input", required=True, help="quiver JSON file or builder name")
    p_qm.add_argument("-k", "--vertex", type=int, required=True)
    p_qm.set_defaults(func=cmd_quiver_mutate)

    p_seed = sub.add_parser("seed", help="cluster seed operations")
    seed_sub = p_seed.add_subparsers(dest="seed_command", required=True)
    p_sm = seed_sub.add_parser("mutate-seq", help="run a mutation sequence")
    p_sm.add_argument("-i", "--input", required=True, help="seed/quiver JSON file or builder name")
    p_sm.add_argument("-s", "--sequence", required=True, help="comma separated vertices")
    p_sm.set_defaults(func=cmd_seed_mutate_seq)

    p_frieze = sub.add_parser("frieze", help="superfrieze generation")
    frieze_sub = p_frieze.add_subparsers(dest="frieze_command", required=True)
    p_fg = frieze_sub.add_parser("gen", help="generate a frieze")
    p_fg.add_argument("--width", type=int, required=True)
    p_fg.add_argument("--values", help='initial values as {"x": [...], "xi": [...]}')
    p_fg.add_argument("--periods", type=int, default=2)
    p_fg.add_argument("--format", choices=("json", "text"), default="json")
    p_fg.set_defaults(func=cmd_frieze_gen)

    p_somos = sub.add_parser("somos", help="Somos-4 terms by quiver mutation")
    p_somos.add_argument("--terms", type=int, required=True)
    p_somos.add_argument("--super", dest="super_mode", action="store_true")
    p_somos.set_defaults(func=cmd_somos)

    p_verify = sub.add_parser("verify", help="randomized verification sweeps")
    p_verify.add_argument("what", choices=("laurent", "form", "reduction", "frieze"))
    p_verify.add_argument("--random", type=int, default=100)
    p_verify.add_argument("--max-n", type=int, default=5)
    p_verify.add_argument("--max-m", type=int, default=4)
    p_verify.add_argument("--max-b", type=int, default=2)
    p_verify.add_argument("--max-c", type=int, default=2)
    p_verify.add_argument("--max-len", type=int, default=8)
    p_verify.add_argument("--rng-seed", type=int, default=0)
    p_verify.add_argument("--jobs", type=int, default=1)
    p_verify.add_argument("--budget", type=int, default=verify_mod.DEFAULT_STEP_BUDGET)
    p_verify.add_argument("--width", type=int, default=1, help="frieze sweep width")
    p_verify.set_defaults(func=cmd_verify)

    p_serve = sub.add_parser("serve", help="session API for the explorer client")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=int(os.environ.get("SUPERQUIVER_PORT", "8420")))
    p_serve.add_argument("--undo-limit", type=int, default=256)
    p_serve.set_defaults(func=cmd_serve)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SystemExit:
        raise
    except (EngineError, json.JSONDecodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
