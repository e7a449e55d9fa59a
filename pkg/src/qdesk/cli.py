"""Command-line front end.

Exit codes: 0 on success, 1 on usage errors, 2 on runtime errors.
"""
from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from qdesk import turing, z2
from qdesk.algorithms import OracleSpec, classical_dj, coin_flip, deutsch_jozsa, validate_promise
from qdesk.circuit import CircuitParseError, parse_circuit, run_circuit
from qdesk.qsim import word_of
from qdesk.rng import make_rng

TRACE_MAX_N = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _dump(obj, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(obj, sort_keys=True) + "\n"
    lines = []
    for key in sorted(obj):
        val = obj[key]
        if isinstance(val, dict):
            lines.append(f"{key}:")
            lines += [f"  {k} {v}" for k, v in sorted(val.items())]
        elif isinstance(val, list):
            lines.append(f"{key}:")
            lines += [f"  {item}" for item in val]
        else:
            lines.append(f"{key}: {val}")
    return "\n".join(lines) + "\n"


def cmd_run(args) -> str:
    circuit = parse_circuit(_read(args.file))
    report = run_circuit(circuit, args.shots, args.seed)
    return report.to_json() if args.format == "json" else report.to_text()


def parse_oracle(spec: str, n: int) -> OracleSpec:
    if spec == "constant0":
        return OracleSpec.constant0(n)
    if spec == "constant1":
        return OracleSpec.constant1(n)
    kind, _, arg = spec.partition(":")
    if kind == "balanced" and arg:
        f = OracleSpec.from_bitmask(n, int(arg, 16))
        if validate_promise(f).value != "Balanced":
            raise ValueError(f"mask {arg} does not have {2 ** (n - 1)} set bits")
        return f
    if kind == "table" and arg:
        bits = "".join(_read(arg).split())
        if any(b not in "01" for b in bits):
            raise ValueError("oracle table must contain only 0 and 1")
        return OracleSpec(n, tuple(int(b) for b in bits))
    raise UsageError(f"unknown oracle {spec!r}")


def _state_lines(state: np.ndarray, n_total: int) -> list[str]:
    out = []
    for i, a in enumerate(state):
        if abs(a) > 1e-15:
            out.append(f"{word_of(i, n_total)} {format(a.real, '.17g')} {format(a.imag, '.17g')}")
    return out


def cmd_dj(args) -> str:
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    f = parse_oracle(args.oracle, args.n)
    if args.trace and args.n > TRACE_MAX_N:
        raise UsageError(f"--trace supports n <= {TRACE_MAX_N}")
    out = deutsch_jozsa(f, trace=args.trace)
    verdict, queries = classical_dj(f)
    report = {
        "verdict": out.verdict.value,
        "readout": out.readout,
        "oracle_queries": out.oracle_queries,
        "gate_count": out.gate_count,
        "promise": validate_promise(f).value,
        "classical_verdict": verdict.value,
        "classical_queries": queries,
    }
    if args.trace:
        report["trace"] = [
            f"step {k} {label}: " + "; ".join(_state_lines(state, args.n + 1))
            for k, (label, state) in enumerate(out.trace, 1)
        ]
    return _dump(report, args.format)


def cmd_coinflip(args) -> str:
    if args.shots < 1:
        raise UsageError("--shots must be >= 1")
    counts = coin_flip(args.shots, make_rng(args.seed), start=args.start)
    report = {
        "counts": {format(k, "+g"): v for k, v in counts.items()},
        "shots": args.shots,
        "seed": args.seed,
    }
    return _dump(report, args.format)


def cmd_z2_census(args) -> str:
    if args.format == "json":
        _, table = z2.six_group()
        report = dict(z2.census())
        report["orthogonal"] = z2.orthogonal_names()
        report["group"] = {f"{x}{y}": v for (x, y), v in table.items()}
        return _dump(report, "json")
    return z2.census_report()


def cmd_tm_run(args) -> str:
    program = turing.parse_program(_read(args.file), start=args.start)
    res = turing.tm_run(program, args.tape, args.max_steps)
    report = {"halted": res.halted, "steps": res.steps, "output": res.output, "state": res.final_state}
    return _dump(report, args.format)


def cmd_ptm_run(args) -> str:
    if args.repeats < 1 or args.repeats % 2 == 0:
        raise UsageError("--repeats must be a positive odd integer")
    program = turing.parse_ptm_program(_read(args.file), start=args.start)
    rng = make_rng(args.seed)
    if args.repeats == 1:
        res = turing.ptm_run(program, args.tape, rng, args.max_steps)
        report = {"halted": res.halted, "steps": res.steps, "output": res.output, "seed": args.seed}
    else:
        output = turing.ptm_majority(program, args.tape, args.repeats, rng, args.max_steps)
        report = {"output": output, "repeats": args.repeats, "seed": args.seed}
    return _dump(report, args.format)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(
        prog="qdesk",
        description="State-vector simulator, Deutsch-Jozsa, Z2 logic and Turing machines. "
        "Qubit indices are 0-based; qubit 0 is the leftmost, most significant bit.",
    )
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def fmt(sp, default="json"):
        sp.add_argument("--format", choices=("json", "text"), default=default)

    run = sub.add_parser("run", help="execute a circuit file")
    run.add_argument("file")
    run.add_argument("--shots", type=int, default=1)
    run.add_argument("--seed", type=int, required=True)
    fmt(run)
    run.set_defaults(func=cmd_run)

    dj = sub.add_parser("dj", help="Deutsch-Jozsa on an oracle")
    dj.add_argument("--n", type=int, required=True)
    dj.add_argument("--oracle", required=True, help="constant0|constant1|balanced:<hex mask>|table:<file>")
    dj.add_argument("--trace", action="store_true")
    fmt(dj, "text")
    dj.set_defaults(func=cmd_dj)

    coin = sub.add_parser("coinflip", help="coin-flip experiment")
    coin.add_argument("--shots", type=int, required=True)
    coin.add_argument("--seed", type=int, required=True)
    coin.add_argument("--start", type=int, choices=(0, 1), default=0)
    fmt(coin)
    coin.set_defaults(func=cmd_coinflip)

    z2p = sub.add_parser("z2", help="Z2 logic reports")
    z2sub = z2p.add_subparsers(dest="z2_command", required=True, parser_class=_Parser)
    census = z2sub.add_parser("census", help="classify all V2 -> V2 gates")
    fmt(census, "text")
    census.set_defaults(func=cmd_z2_census)

    for name, func, randomized in (("tm", cmd_tm_run, False), ("ptm", cmd_ptm_run, True)):
        mp = sub.add_parser(name, help=f"{name.upper()} interpreter")
        msub = mp.add_subparsers(dest=f"{name}_command", required=True, parser_class=_Parser)
        r = msub.add_parser("run", help="run a program file")
        r.add_argument("file")
        r.add_argument("--tape", default="")
        r.add_argument("--max-steps", type=int, default=turing.DEFAULT_MAX_STEPS)
        r.add_argument("--start", default="q0")
        if randomized:
            r.add_argument("--seed", type=int, required=True)
            r.add_argument("--repeats", type=int, default=1)
        fmt(r)
        r.set_defaults(func=func)
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "max_steps", 1) < 1:
            raise UsageError("--max-steps must be >= 1")
        sys.stdout.write(args.func(args))
        return 0
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (CircuitParseError, turing.ProgramError, OSError, ValueError, RuntimeError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
