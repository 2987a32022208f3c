"""Command-line interface.

Exit codes: 0 when a result was produced (or candidates were found), 1 when
a decode ran cleanly but found nothing, 2 on invalid input or infeasible
parameters.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from .codec import (
    RSCode,
    corrupt,
    encode,
    list_decode_code,
    max_list_radius,
    ml_decode_bruteforce,
)
from .decoder import GridInstance, list_decode, grid_reconstruct
from .errors import BudgetExceeded, ParameterError
from .field import FieldCtx
from .poly import UniPoly
from .rootfind import DEFAULT_BUDGET

EXPERIMENT_HEADER = "e,unique_success,list_success,mean_list_size"

EPILOG = """\
output formats:
  encode       one line of comma-separated decimal symbols
  listdecode   JSON array of {"poly": [c0, c1, ...], "agreements": int}
  grid         JSON array of {"poly": "c*x1^e1*...", "agreements": int}
  experiment   CSV with header e,unique_success,list_success,mean_list_size

points file format: one "x,y" pair per line, decimal.
exit codes: 0 found / 1 empty / 2 error.
"""


class UsageError(Exception):
    pass


def _ints(text: str) -> list[int]:
    try:
        return [int(s) for s in text.replace(";", ",").split(",") if s.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _field(p: int) -> FieldCtx:
    try:
        return FieldCtx(p)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def parse_points(spec: str) -> list[tuple[int, int]]:
    """Points from a file (one ``x,y`` per line) or inline ``x,y x,y ...`` / ``x,y;x,y``."""
    path = Path(spec)
    text = path.read_text() if path.is_file() else spec.replace(";", "\n").replace(" ", "\n")
    pts = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split(",")
        if len(parts) != 2:
            raise UsageError(f"bad point {line!r}; expected x,y")
        try:
            pts.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise UsageError(f"bad point {line!r}; expected x,y") from None
    return pts


def _emit_json(obj) -> None:
    print(json.dumps(obj, separators=(",", ":")), flush=True)


def cmd_encode(args) -> int:
    ctx = _field(args.p)
    msg = UniPoly(_ints(args.msg), ctx)
    if args.d < 0 or args.d >= ctx.p:
        raise UsageError(f"d={args.d} must lie in [0, {ctx.p - 1}]")
    if msg.degree > args.d:
        raise UsageError(f"message degree {msg.degree} exceeds d={args.d}")
    code = RSCode(ctx, args.d, order=args.order)
    print(encode(code, msg).to_text(), flush=True)
    return 0


def cmd_listdecode(args) -> int:
    ctx = _field(args.p)
    pts = parse_points(args.points)
    if not pts:
        raise UsageError("no points given")
    if args.d < 1:
        raise UsageError("d must be at least 1")
    out = list_decode(pts, args.d, args.t, ctx)
    _emit_json(out.to_json())
    return 0 if out.candidates else 1


def cmd_grid(args) -> int:
    ctx = _field(args.p)
    H = _ints(args.H)
    table = _ints(args.table)
    if len(H) ** args.k != len(table):
        raise UsageError(f"table has {len(table)} entries, expected |H|^k = {len(H) ** args.k}")
    try:
        inst = GridInstance(ctx, tuple(H), args.k, tuple(table), args.d, args.t)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out = grid_reconstruct(inst, budget=args.budget)
    _emit_json(out.to_json())
    return 0 if out.candidates else 1


def run_experiment(p: int, d: int, trials: int, seed: int, emax: int,
                   order: str = "natural", budget: int = DEFAULT_BUDGET) -> list[str]:
    """CSV lines for the unique vs. list decoding sweep over error counts 0..emax.

    Unique decoding is the exhaustive nearest-codeword search; list decoding
    runs at the largest radius with a completeness guarantee. A trial
    succeeds when the decoder returns (or lists) the transmitted codeword.
    """
    ctx = FieldCtx(p)
    code = RSCode(ctx, d, order=order)
    if not 0 <= emax <= code.n:
        raise UsageError(f"emax={emax} must lie in [0, {code.n}]")
    if trials < 1:
        raise UsageError("trials must be positive")
    if d < 1:
        raise UsageError("d must be at least 1")
    if p ** (d + 1) > budget:
        raise BudgetExceeded(f"{p ** (d + 1)} codewords exceed budget {budget}")
    radius = max_list_radius(code)
    rows = [EXPERIMENT_HEADER]
    for e in range(emax + 1):
        uniq = lst = size = 0
        for trial in range(trials):
            rng = random.Random(f"{seed}:{e}:{trial}")
            msg = UniPoly([rng.randrange(p) for _ in range(d + 1)], ctx)
            sent = encode(code, msg)
            received, _ = corrupt(sent, e, rng.getrandbits(64))
            uniq += ml_decode_bruteforce(code, received, budget=budget) == sent
            found = list_decode_code(code, received, radius)
            lst += sent in found
            size += len(found)
        rows.append(f"{e},{uniq / trials:.4f},{lst / trials:.4f},{size / trials:.4f}")
    return rows


def cmd_experiment(args) -> int:
    rows = run_experiment(args.p, args.d, args.trials, args.seed, args.emax,
                          order=args.order, budget=args.budget)
    for row in rows:
        print(row, flush=True)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sudanlist",
        description="Reed-Solomon list decoding by weighted-degree interpolation.",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--p", type=int, required=True, help="prime field size")
        sp.add_argument("--d", type=int, required=True, help="degree bound")

    sp = sub.add_parser("encode", help="encode a message polynomial")
    common(sp)
    sp.add_argument("--msg", required=True, help="coefficients c0,c1,... (lowest degree first)")
    sp.add_argument("--order", choices=("natural", "generator"), default="natural")
    sp.set_defaults(func=cmd_encode)

    sp = sub.add_parser("listdecode", help="list all f with deg f <= d agreeing on >= t points")
    common(sp)
    sp.add_argument("--t", type=int, required=True, help="agreement threshold")
    sp.add_argument("--points", required=True, help="points file, or inline 'x,y x,y ...'")
    sp.set_defaults(func=cmd_listdecode)

    sp = sub.add_parser("grid", help="reconstruct k-variate f from a table on H^k")
    common(sp)
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--H", required=True, help="comma-separated distinct field elements")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--table", required=True, help="g values over H^k in row-major order")
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sp.set_defaults(func=cmd_grid)

    sp = sub.add_parser("experiment", help="sweep error counts, compare unique and list decoding")
    common(sp)
    sp.add_argument("--trials", type=int, default=20)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--emax", type=int, required=True)
    sp.add_argument("--order", choices=("natural", "generator"), default="natural")
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sp.set_defaults(func=cmd_experiment)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ParameterError, BudgetExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
