"""Command-line interface.

Each subcommand delegates to exactly one core operation and prints a
deterministic result: identical invocations produce byte-identical
output.  Exit codes: 0 on success, 1 on domain errors (composite prime,
singular seed, node budget exhaustion, ...), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import backward, congruence, hensel
from .errors import BudgetExceededError, PadicDynError
from .padic import PadicInt, as_prime
from .parsing import parse_poly
from .polynomial import IntPoly

# p^k stays below this unless --allow-large is passed.
MAX_MODULUS = 2**256

ENV_MAX_NODES = "PADIC_DYN_MAX_NODES"


def _json_dumps(payload: dict) -> str:
    return json.dumps(payload, indent=2)


def _parse_sequence(text: str, flag: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise PadicDynError(f"{flag} must be a comma-separated list of integers")


def _check_modulus_size(p: int, k: int, allow_large: bool) -> None:
    if not allow_large and p**k > MAX_MODULUS:
        raise PadicDynError(
            f"{p}^{k} exceeds the default modulus cap 2^256; pass --allow-large"
        )


def _root_dict(r: congruence.RootModP) -> dict:
    return {
        "residue": r.residue,
        "singular": r.singular,
        "derivative_residue": r.derivative_residue,
    }


def _cmd_roots(args) -> tuple[dict, list[str]]:
    f = parse_poly(args.poly)
    prime = as_prime(args.prime)
    roots = congruence.roots_mod_p(f, args.target, prime)
    degenerate = congruence.congruence_is_identically_zero(f, args.target, prime)
    payload = {
        "poly": f.coeff_list(),
        "prime": prime.p,
        "target": args.target,
        "roots": [_root_dict(r) for r in roots],
        "degenerate": degenerate,
    }
    lines = [
        f"{r.residue} {'singular' if r.singular else 'nonsingular'} "
        f"derivative={r.derivative_residue}"
        for r in roots
    ] or ["no roots"]
    if degenerate:
        lines.append("degenerate: every residue solves the congruence")
    return payload, lines


def _cmd_oracle(args) -> tuple[dict, list[str]]:
    f = parse_poly(args.poly)
    solutions = congruence.solve_congruence_bruteforce(f, args.target, args.modulus)
    payload = {
        "poly": f.coeff_list(),
        "modulus": args.modulus,
        "target": args.target,
        "solutions": solutions,
    }
    return payload, [" ".join(map(str, solutions)) if solutions else "no solutions"]


def _cmd_lift(args) -> tuple[dict, list[str]]:
    f = parse_poly(args.poly)
    prime = as_prime(args.prime)
    _check_modulus_size(prime.p, args.precision, args.allow_large)
    lifted = hensel.hensel_lift(f, args.seed, args.precision, prime, target=args.target)
    digits = PadicInt.from_int(lifted.root, prime, args.precision).digits
    payload = {
        "poly": f.coeff_list(),
        "prime": prime.p,
        "precision": args.precision,
        "seed": args.seed,
        "target": args.target,
        "ladder": list(lifted.ladder),
        "root": lifted.root,
        "digits": list(digits),
    }
    lines = [
        "ladder: " + " ".join(map(str, lifted.ladder)),
        "digits: " + " ".join(map(str, digits)),
    ]
    return payload, lines


def _cmd_preimages(args) -> tuple[dict, list[str]]:
    f = parse_poly(args.poly)
    prime = as_prime(args.prime)
    _check_modulus_size(prime.p, args.precision, args.allow_large)
    target = args.target % prime.p**args.precision
    lifted, singular = backward.preimages(f, target, prime, args.precision)
    payload = {
        "poly": f.coeff_list(),
        "prime": prime.p,
        "precision": args.precision,
        "target": target,
        "lifted": lifted,
        "singular": [_root_dict(r) for r in singular],
    }
    lines = [
        "lifted: " + (" ".join(map(str, lifted)) if lifted else "none"),
        "singular: "
        + (" ".join(str(r.residue) for r in singular) if singular else "none"),
    ]
    return payload, lines


def _resolve_node_budget(args) -> int:
    if args.max_nodes is not None:
        return args.max_nodes
    env_budget = os.environ.get(ENV_MAX_NODES)
    if env_budget is None:
        return backward.DEFAULT_NODE_BUDGET
    try:
        return int(env_budget)
    except ValueError:
        raise PadicDynError(f"{ENV_MAX_NODES} must be an integer, got {env_budget!r}")


def _cmd_tree(args) -> tuple[dict, list[str]]:
    f = parse_poly(args.poly)
    prime = as_prime(args.prime)
    _check_modulus_size(prime.p, args.precision, args.allow_large)
    tree = backward.backward_tree(
        f, args.seed, prime, args.precision, args.depth,
        max_nodes=_resolve_node_budget(args),
    )
    if not tree.complete:
        raise BudgetExceededError(
            f"node budget exhausted after {len(tree)} nodes"
        )
    if args.format == "dot":
        return tree.to_json_dict(), [tree.to_dot().rstrip("\n")]
    lines = [
        f"{n.id} depth={n.depth} value={n.value} status={n.status} "
        f"parent={'-' if n.parent is None else n.parent}"
        for n in tree.nodes
    ]
    return tree.to_json_dict(), lines


def _cmd_orbit(args) -> tuple[dict, list[str]]:
    f = parse_poly(args.poly)
    prime = as_prime(args.prime)
    _check_modulus_size(prime.p, args.precision, args.allow_large)
    orbit = backward.forward_orbit(f, args.seed, prime, args.precision, args.steps)
    payload = {
        "poly": f.coeff_list(),
        "prime": prime.p,
        "precision": args.precision,
        "start": args.seed,
        "steps": args.steps,
        "orbit": list(orbit.terms),
        "preperiodic": orbit.preperiodic,
        "tail_length": orbit.tail_length,
        "cycle_length": orbit.cycle_length,
    }
    lines = [" ".join(map(str, orbit.terms))]
    if orbit.preperiodic:
        lines.append(
            f"preperiodic tail={orbit.tail_length} cycle={orbit.cycle_length}"
        )
    else:
        lines.append("no repeat within the computed terms")
    return payload, lines


def _cmd_dist(args) -> tuple[dict, list[str]]:
    s = _parse_sequence(args.s, "--s")
    t = _parse_sequence(args.t, "--t")
    if args.metric == "series":
        if args.prime is None:
            raise PadicDynError("--prime is required for the series metric")
        d: Fraction = backward.distance_series(s, t, as_prime(args.prime))
    else:
        d = backward.distance_first_difference(s, t)
    payload = {
        "metric": args.metric,
        "prime": args.prime,
        "s": s,
        "t": t,
        "distance": str(d),
    }
    return payload, [str(d)]


def _add_poly_flag(sub) -> None:
    sub.add_argument(
        "--poly",
        required=True,
        help="polynomial in x, e.g. 'x^2 - 7x + 2' or '(x+1)^2'; "
        "'^' binds tighter than '*' (explicit or implicit, as in 7x), "
        "which binds tighter than '+'/'-'; unary minus allowed",
    )


def _add_format_flag(sub, choices) -> None:
    sub.add_argument("--format", choices=choices, default="json", help="output format")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="padicdyn",
        description="Backward orbits of integer polynomials over the p-adic "
        "integers: congruence solving, Hensel lifting, preimage trees.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    roots = sub.add_parser("roots", help="solve f(x) = target (mod p)")
    _add_poly_flag(roots)
    roots.add_argument("--prime", type=int, required=True)
    roots.add_argument("--target", type=int, default=0)
    _add_format_flag(roots, ["json", "table"])
    roots.set_defaults(handler=_cmd_roots)

    oracle = sub.add_parser(
        "oracle", help="brute-force f(x) = target (mod m) for any modulus"
    )
    _add_poly_flag(oracle)
    oracle.add_argument("--modulus", type=int, required=True)
    oracle.add_argument("--target", type=int, default=0)
    _add_format_flag(oracle, ["json", "table"])
    oracle.set_defaults(handler=_cmd_oracle)

    lift = sub.add_parser(
        "lift", help="Hensel-lift a nonsingular root mod p to precision p^k"
    )
    _add_poly_flag(lift)
    lift.add_argument("--prime", type=int, required=True)
    lift.add_argument("--precision", type=int, required=True)
    lift.add_argument("--seed", type=int, required=True)
    lift.add_argument("--target", type=int, default=0)
    lift.add_argument("--allow-large", action="store_true")
    _add_format_flag(lift, ["json", "table"])
    lift.set_defaults(handler=_cmd_lift)

    pre = sub.add_parser("preimages", help="one backward step mod p^k")
    _add_poly_flag(pre)
    pre.add_argument("--prime", type=int, required=True)
    pre.add_argument("--precision", type=int, required=True)
    pre.add_argument("--target", type=int, required=True)
    pre.add_argument("--allow-large", action="store_true")
    _add_format_flag(pre, ["json", "table"])
    pre.set_defaults(handler=_cmd_preimages)

    tree = sub.add_parser("tree", help="iterated preimage tree mod p^k")
    _add_poly_flag(tree)
    tree.add_argument("--prime", type=int, required=True)
    tree.add_argument("--precision", type=int, required=True)
    tree.add_argument("--seed", type=int, required=True)
    tree.add_argument("--depth", type=int, required=True)
    tree.add_argument(
        "--max-nodes",
        type=int,
        default=None,
        help=f"node budget (default {backward.DEFAULT_NODE_BUDGET}, "
        f"overridable via the {ENV_MAX_NODES} environment variable)",
    )
    tree.add_argument("--allow-large", action="store_true")
    _add_format_flag(tree, ["json", "dot", "table"])
    tree.set_defaults(handler=_cmd_tree)

    orbit = sub.add_parser("orbit", help="forward orbit mod p^k with cycle detection")
    _add_poly_flag(orbit)
    orbit.add_argument("--prime", type=int, required=True)
    orbit.add_argument("--precision", type=int, required=True)
    orbit.add_argument("--seed", type=int, required=True)
    orbit.add_argument("--steps", type=int, required=True)
    orbit.add_argument("--allow-large", action="store_true")
    _add_format_flag(orbit, ["json", "table"])
    orbit.set_defaults(handler=_cmd_orbit)

    dist = sub.add_parser("dist", help="distance between two residue sequences")
    dist.add_argument("--s", required=True, help="comma-separated integers")
    dist.add_argument("--t", required=True, help="comma-separated integers")
    dist.add_argument("--metric", choices=["series", "first-diff"], default="series")
    dist.add_argument("--prime", type=int, default=None)
    _add_format_flag(dist, ["json", "table"])
    dist.set_defaults(handler=_cmd_dist)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, table_lines = args.handler(args)
    except (PadicDynError, ValueError) as exc:
        if args.format == "json":
            error = {"error": {"type": type(exc).__name__, "message": str(exc)}}
            print(_json_dumps(error))
        else:
            print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        print(_json_dumps(payload))
    else:
        for line in table_lines:
            print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
