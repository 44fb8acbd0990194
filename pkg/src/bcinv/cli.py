"""Command-line front end.

Subcommands:

    compute   --ring <spec> --op <name> --a <lit> [--b] [--c] [--d] [--v] [--u]
    verify    --ring <spec> --suite <id|all> [--seed <u64>] [--sampled]
    enumerate --ring <spec>
    crosscheck --p <prime> --k <size>

Output is one JSON object per result (JSON lines for verify). Usage
errors exit 2 with a message on stderr; domain errors exit 1 with a JSON
error object on stdout; verify/crosscheck exit nonzero when a suite
fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import engine, verify
from .engine import ONLY_ONE_SIDED, InverseReport
from .errors import BcinvError
from .finite import FiniteEnumeration, inner_inverses, is_regular
from .rings import Element, Ring, parse_ring

# op name -> required element parameters, in call order
_OPS = {
    "bc_inverse": ("a", "b", "c"),
    "bc_exists_drazin": ("a", "b", "c"),
    "bc_exists_kcc": ("a", "b", "c"),
    "bc_exists_annihilator": ("a", "b", "c"),
    "bc_exists_fiveway": ("a", "b", "c"),
    "left_bc_family": ("a", "b", "c", "v"),
    "right_bc_family": ("a", "b", "c", "u"),
    "left_right_coincide": ("a", "b", "c"),
    "generator_invariance": ("a", "b", "c", "u", "v"),
    "inverse_along": ("a", "d"),
    "group_inverse": ("a",),
    "moore_penrose": ("a",),
    "core_inverse": ("a",),
    "dual_core_inverse": ("a",),
    "one_three_inverse": ("a",),
    "one_four_inverse": ("a",),
    "drazin_inverse": ("a",),
    "inner_outer_bc": ("a", "b", "c"),
    "group_via_along": ("a", "d"),
}


def _emit(obj: dict, pretty: bool) -> None:
    if pretty:
        print(json.dumps(obj, indent=2))
    else:
        print(json.dumps(obj, separators=(",", ":")))


def _result_json(res) -> dict:
    if isinstance(res, InverseReport):
        return res.to_json_dict()
    if res is ONLY_ONE_SIDED:
        return {"result": None, "only_one_sided": True}
    if isinstance(res, Element):
        return {"result": res.literal()}
    if res is None or isinstance(res, bool):
        return {"result": res}
    raise TypeError(f"unexpected result {res!r}")


def _cmd_compute(ns) -> int:
    ring = parse_ring(ns.ring)
    params = _OPS.get(ns.op)
    if params is None:
        raise ValueError(f"unknown op {ns.op!r}; known: {', '.join(_OPS)}")
    args = []
    for p in params:
        lit = getattr(ns, p)
        if lit is None:
            raise ValueError(f"op {ns.op} requires --{p}")
        args.append(ring.parse(lit))
    for p in ("a", "b", "c", "d", "u", "v"):
        if p not in params and getattr(ns, p) is not None:
            raise ValueError(f"op {ns.op} does not take --{p}")
    res = getattr(engine, ns.op)(*args)
    _emit(_result_json(res), ns.pretty)
    return 0


def _cmd_verify(ns) -> int:
    ring = parse_ring(ns.ring)
    if ns.suite == "all":
        reports = verify.run_all(ring, seed=ns.seed, sampled=ns.sampled)
    else:
        reports = [verify.run_suite(ring, ns.suite, seed=ns.seed, sampled=ns.sampled)]
    ok = True
    for r in reports:
        _emit(r.to_json_dict(), ns.pretty)
        ok = ok and r.passed
    return 0 if ok else 1


def _cmd_enumerate(ns) -> int:
    ring = parse_ring(ns.ring)
    enum = FiniteEnumeration(ring)
    elements = [e.literal() for e in enum]
    units = [e.literal() for e in enum if e.inverse() is not None]
    idempotents = [e.literal() for e in enum if e * e == e]
    regular = [
        {"element": e.literal(), "inner_inverse_count": len(inner_inverses(e))}
        for e in enum
        if is_regular(e)
    ]
    _emit(
        {
            "ring": ring.spec,
            "order": enum.count,
            "elements": elements,
            "units": units,
            "idempotents": idempotents,
            "regular": regular,
        },
        ns.pretty,
    )
    return 0


def _cmd_crosscheck(ns) -> int:
    report = verify.cross_backend_check(ns.p, ns.k)
    _emit(report.to_json_dict(), ns.pretty)
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bcinv",
        description="Exact (b,c)-inverses over concrete rings, with verification sweeps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="run one inverse operation")
    p_compute.add_argument("--ring", required=True)
    p_compute.add_argument("--op", required=True)
    for flag in ("--a", "--b", "--c", "--d", "--v", "--u"):
        p_compute.add_argument(flag)
    p_compute.add_argument("--pretty", action="store_true")
    p_compute.set_defaults(fn=_cmd_compute)

    p_verify = sub.add_parser("verify", help="run verification suites")
    p_verify.add_argument("--ring", required=True)
    p_verify.add_argument("--suite", required=True)
    p_verify.add_argument("--seed", type=int, default=None)
    p_verify.add_argument("--sampled", action="store_true")
    p_verify.add_argument("--pretty", action="store_true")
    p_verify.set_defaults(fn=_cmd_verify)

    p_enum = sub.add_parser("enumerate", help="list elements, units, idempotents")
    p_enum.add_argument("--ring", required=True)
    p_enum.add_argument("--pretty", action="store_true")
    p_enum.set_defaults(fn=_cmd_enumerate)

    p_cross = sub.add_parser("crosscheck", help="matrix backend vs finite enumeration")
    p_cross.add_argument("--p", type=int, required=True)
    p_cross.add_argument("--k", type=int, required=True)
    p_cross.add_argument("--pretty", action="store_true")
    p_cross.set_defaults(fn=_cmd_crosscheck)

    return parser


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        return ns.fn(ns)
    except ValueError as exc:
        print(f"bcinv: {exc}", file=sys.stderr)
        return 2
    except BcinvError as exc:
        _emit({"error": type(exc).__name__, "message": str(exc)}, False)
        return 1


if __name__ == "__main__":
    sys.exit(main())
