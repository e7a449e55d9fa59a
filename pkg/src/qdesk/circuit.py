"""Circuit text format, seeded shot execution and JSON reports.

Format::

    # comment
    qubits 2
    h 0
    cnot 0 1
    measure all

Mnemonics are case-insensitive: ``h s t x y z`` take one qubit, ``u a b c d q``
takes four angles and a qubit, ``cnot c t``, ``toffoli c1 c2 t``, ``measure q``
and ``measure all`` (which must be the last op). Qubit 0 is the leftmost
(most significant) bit.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from qdesk.qsim import (
    MAX_QUBITS,
    QRegister,
    ResourceError,
    SingleQubitParams,
    apply_1q,
    apply_cnot,
    apply_toffoli,
    gate_from_params,
    measure_all,
    measure_qubit,
    named_gate,
    word_of,
)
from qdesk.qsim.measure import sample_indices
from qdesk.rng import shot_rng

AMPLITUDE_DUMP_MAX_QUBITS = 12

_ONE_QUBIT = ("h", "s", "t", "x", "y", "z")
_ARITY = {**{g: 1 for g in _ONE_QUBIT}, "u": 1, "cnot": 2, "toffoli": 3}


class CircuitParseError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"{message}, line {line}")
        self.line = line


@dataclass(frozen=True)
class Op:
    name: str
    qubits: tuple[int, ...] = ()
    params: tuple[float, ...] = ()

    @property
    def is_measure(self) -> bool:
        return self.name == "measure"

    def render(self) -> str:
        if self.name == "measure" and not self.qubits:
            return "measure all"
        parts = [self.name, *(repr(float(p)) for p in self.params), *map(str, self.qubits)]
        return " ".join(parts)


@dataclass(frozen=True)
class CircuitFile:
    n: int
    ops: tuple[Op, ...]

    @property
    def measures(self) -> bool:
        return any(op.is_measure for op in self.ops)


def parse_circuit(text: str) -> CircuitFile:
    n = None
    ops: list[Op] = []
    measure_all_line = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        word = parts[0].lower()
        if n is None:
            if word != "qubits" or len(parts) != 2:
                raise CircuitParseError("missing 'qubits N' header", lineno)
            try:
                n = int(parts[1])
            except ValueError:
                raise CircuitParseError(f"bad qubit count {parts[1]!r}", lineno) from None
            if n < 1:
                raise CircuitParseError("qubit count must be >= 1", lineno)
            continue
        if measure_all_line is not None:
            raise CircuitParseError("'measure all' must be the last op", measure_all_line)
        args = parts[1:]
        if word == "measure":
            if len(args) == 1 and args[0].lower() == "all":
                measure_all_line = lineno
                ops.append(Op("measure"))
                continue
            qubits = _indices(args, 1, n, lineno)
            ops.append(Op("measure", qubits))
            continue
        if word not in _ARITY:
            raise CircuitParseError(f"unknown mnemonic {parts[0]!r}", lineno)
        params: tuple[float, ...] = ()
        if word == "u":
            if len(args) != 5:
                raise CircuitParseError("u expects four angles and a qubit", lineno)
            try:
                params = tuple(float(a) for a in args[:4])
            except ValueError:
                raise CircuitParseError("bad angle", lineno) from None
            if not np.all(np.isfinite(params)):
                raise CircuitParseError("angles must be finite", lineno)
            args = args[4:]
        qubits = _indices(args, _ARITY[word], n, lineno)
        if len(set(qubits)) != len(qubits):
            raise CircuitParseError("repeated qubit index", lineno)
        ops.append(Op(word, qubits, params))
    if n is None:
        raise CircuitParseError("missing 'qubits N' header", 1)
    return CircuitFile(n, tuple(ops))


def _indices(args, count, n, lineno) -> tuple[int, ...]:
    if len(args) != count:
        raise CircuitParseError(f"expected {count} qubit index(es)", lineno)
    try:
        qubits = tuple(int(a) for a in args)
    except ValueError:
        raise CircuitParseError("bad qubit index", lineno) from None
    if any(not 0 <= q < n for q in qubits):
        raise CircuitParseError("index out of range", lineno)
    return qubits


def render_circuit(c: CircuitFile) -> str:
    return "\n".join([f"qubits {c.n}", *(op.render() for op in c.ops)]) + "\n"


def apply_op(reg: QRegister, op: Op, rng: np.random.Generator | None = None) -> str | None:
    """Apply one op; measurements return their outcome bits."""
    if op.name in _ONE_QUBIT:
        apply_1q(reg, named_gate(op.name.upper()), op.qubits[0])
    elif op.name == "u":
        apply_1q(reg, gate_from_params(SingleQubitParams(*op.params)), op.qubits[0])
    elif op.name == "cnot":
        apply_cnot(reg, *op.qubits)
    elif op.name == "toffoli":
        apply_toffoli(reg, *op.qubits)
    elif op.name == "measure":
        if rng is None:
            raise ValueError("measurement needs an rng")
        if op.qubits:
            return str(measure_qubit(reg, op.qubits[0], rng).outcome)
        return str(measure_all(reg, rng).outcome)
    else:
        raise ValueError(f"unknown op {op.name!r}")
    return None


@dataclass(frozen=True)
class RunReport:
    counts: dict[str, int]
    shots: int
    seed: int
    amplitudes: tuple[tuple[str, float, float], ...] | None = None

    def to_json(self) -> str:
        """JSON with floats at 17 significant digits and counts sorted by word."""
        counts = ", ".join(f'"{w}": {c}' for w, c in sorted(self.counts.items()))
        fields = [f'"counts": {{{counts}}}', f'"shots": {self.shots}', f'"seed": {self.seed}']
        if self.amplitudes is not None:
            amps = ", ".join(f'["{w}", {_num(re)}, {_num(im)}]' for w, re, im in self.amplitudes)
            fields.append(f'"amplitudes": [{amps}]')
        return "{" + ", ".join(fields) + "}\n"

    def to_text(self) -> str:
        lines = [f"shots: {self.shots}", f"seed: {self.seed}"]
        lines += [f"{w} {c}" for w, c in sorted(self.counts.items())]
        if self.amplitudes is not None:
            lines += [f"{w} {_num(re)} {_num(im)}" for w, re, im in self.amplitudes]
        return "\n".join(lines) + "\n"


def _num(x: float) -> str:
    s = format(float(x), ".17g")
    return "0" if s == "-0" else s


def _prefix_length(c: CircuitFile) -> int:
    for i, op in enumerate(c.ops):
        if op.is_measure:
            return i
    return len(c.ops)


def run_circuit(c: CircuitFile, shots: int = 1, seed: int = 0) -> RunReport:
    """Execute ``c`` once per shot from ``|0...0>``.

    Shot ``s`` draws only from the substream ``(seed, s)``. The unitary
    prefix before the first measurement is shot-independent and is evolved
    once; every shot then continues from a copy. Each shot's count key is
    its measurement bits concatenated in program order.
    """
    if c.n > MAX_QUBITS:
        raise ResourceError(f"{c.n} qubits exceeds cap {MAX_QUBITS}")
    if shots < 1 and c.measures:
        raise ValueError("shots must be >= 1 when the circuit measures")
    prefix = _prefix_length(c)
    base = QRegister(c.n)
    for op in c.ops[:prefix]:
        apply_op(base, op)

    if not c.measures:
        amps = None
        if c.n <= AMPLITUDE_DUMP_MAX_QUBITS:
            amps = tuple((word_of(i, c.n), float(a.real), float(a.imag)) for i, a in enumerate(base.state))
        return RunReport({}, shots, seed, amps)

    rest = c.ops[prefix:]
    counts: dict[str, int] = {}
    if len(rest) == 1 and not rest[0].qubits:
        # Single final measure-all: one Born draw per shot substream.
        probs = base.probabilities()
        draws = np.fromiter((shot_rng(seed, s).random() for s in range(shots)), float, shots)
        hits = np.bincount(sample_indices(probs, draws), minlength=probs.size)
        counts = {word_of(i, c.n): int(h) for i, h in enumerate(hits) if h}
        return RunReport(counts, shots, seed)

    for s in range(shots):
        rng = shot_rng(seed, s)
        reg = base.copy()
        bits = [apply_op(reg, op, rng) for op in rest]
        key = "".join(b for b in bits if b is not None)
        counts[key] = counts.get(key, 0) + 1
    return RunReport(counts, shots, seed)
