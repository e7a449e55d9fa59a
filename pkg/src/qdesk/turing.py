"""Quadruple-instruction Turing machines and their probabilistic variant.

Program text has one instruction per line::

    q0 0 1 q2      # in q0 reading 0: write 1, go to q2
    q0 1 R q0      # in q0 reading 1: move right
    q1 b L q3      # in q1 reading blank: move left

Symbols are ``0``, ``1`` and ``b`` (blank); actions are a symbol to write,
``R`` or ``L``. A machine halts when no instruction matches its state and
the scanned symbol. Probabilistic programs add an optional fifth column, a
rational weight such as ``2/3``; the lines sharing a (state, symbol) pair
form one distribution and their weights must sum to 1.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

BLANK = "b"
SYMBOLS = ("0", "1", BLANK)
MOVES = ("R", "L")
DEFAULT_MAX_STEPS = 10**6


class ProgramError(ValueError):
    pass


@dataclass(frozen=True)
class Instruction:
    state: str
    read: str
    action: str
    next: str

    def __post_init__(self):
        if self.read not in SYMBOLS:
            raise ProgramError(f"bad symbol {self.read!r}")
        if self.action not in SYMBOLS + MOVES:
            raise ProgramError(f"bad action {self.action!r}")

    def __str__(self) -> str:
        return f"{self.state} {self.read} {self.action} {self.next}"


@dataclass(frozen=True)
class TMProgram:
    rules: dict[tuple[str, str], Instruction]
    start: str = "q0"

    @classmethod
    def from_instructions(cls, instructions, start: str = "q0") -> TMProgram:
        rules = {}
        for ins in instructions:
            key = (ins.state, ins.read)
            if key in rules:
                raise ProgramError(f"two instructions for state {ins.state} reading {ins.read}")
            rules[key] = ins
        return cls(rules, start)


class Tape:
    """Sparse two-way infinite tape; absent cells are blank."""

    __slots__ = ("cells",)

    def __init__(self, cells: dict[int, str] | None = None):
        self.cells = {k: v for k, v in (cells or {}).items() if v != BLANK}

    @classmethod
    def from_word(cls, word: str) -> Tape:
        for ch in word:
            if ch not in SYMBOLS:
                raise ProgramError(f"bad tape symbol {ch!r}")
        return cls({i: ch for i, ch in enumerate(word)})

    def read(self, pos: int) -> str:
        return self.cells.get(pos, BLANK)

    def write(self, pos: int, sym: str) -> None:
        if sym == BLANK:
            self.cells.pop(pos, None)
        else:
            self.cells[pos] = sym

    def copy(self) -> Tape:
        return Tape(self.cells)

    def leftmost(self) -> int | None:
        return min(self.cells) if self.cells else None

    def output(self) -> str:
        """Contiguous non-blank run starting at the leftmost non-blank cell."""
        pos = self.leftmost()
        if pos is None:
            return ""
        out = []
        while pos in self.cells:
            out.append(self.cells[pos])
            pos += 1
        return "".join(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, Tape) and self.cells == other.cells

    def __repr__(self) -> str:
        return f"Tape({self.cells!r})"


@dataclass
class TMConfig:
    state: str
    head: int
    tape: Tape
    steps: int = 0


class _Halted:
    def __repr__(self) -> str:
        return "HALTED"


HALTED = _Halted()


@dataclass(frozen=True)
class RunResult:
    halted: bool
    steps: int
    output: str
    final_state: str = ""


def _execute(ins: Instruction, config: TMConfig) -> None:
    if ins.action == "R":
        config.head += 1
    elif ins.action == "L":
        config.head -= 1
    else:
        config.tape.write(config.head, ins.action)
    config.state = ins.next
    config.steps += 1


def tm_step(program: TMProgram, config: TMConfig) -> TMConfig | _Halted:
    """One step as a pure function; the input configuration is untouched."""
    ins = program.rules.get((config.state, config.tape.read(config.head)))
    if ins is None:
        return HALTED
    nxt = TMConfig(config.state, config.head, config.tape.copy(), config.steps)
    _execute(ins, nxt)
    return nxt


def initial_config(start: str, word: str) -> TMConfig:
    tape = Tape.from_word(word)
    head = tape.leftmost()
    return TMConfig(start, 0 if head is None else head, tape)


def tm_run(program: TMProgram, word: str, max_steps: int = DEFAULT_MAX_STEPS) -> RunResult:
    if max_steps < 1:
        raise ValueError("max_steps must be >= 1")
    config = initial_config(program.start, word)
    rules = program.rules
    while config.steps < max_steps:
        ins = rules.get((config.state, config.tape.read(config.head)))
        if ins is None:
            return RunResult(True, config.steps, config.tape.output(), config.state)
        _execute(ins, config)
    halted = (config.state, config.tape.read(config.head)) not in rules
    return RunResult(halted, config.steps, config.tape.output(), config.state)


def parse_program(text: str, start: str = "q0") -> TMProgram:
    instructions = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 4:
            raise ProgramError(f"line {lineno}: expected 'state symbol action next'")
        try:
            instructions.append(Instruction(*parts))
        except ProgramError as exc:
            raise ProgramError(f"line {lineno}: {exc}") from None
    return TMProgram.from_instructions(instructions, start)


# ---------------------------------------------------------------------------
# Probabilistic machines


@dataclass(frozen=True)
class Branch:
    weight: Fraction
    action: str
    next: str


@dataclass(frozen=True)
class PTMProgram:
    """Each (state, symbol) key maps to branches whose weights sum to 1."""

    rules: dict[tuple[str, str], tuple[Branch, ...]]
    start: str = "q0"
    _tables: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        for key, branches in self.rules.items():
            if not branches:
                raise ProgramError(f"empty distribution for {key}")
            if any(b.weight <= 0 for b in branches):
                raise ProgramError(f"non-positive weight for {key}")
            if sum(b.weight for b in branches) != 1:
                raise ProgramError(f"weights for {key} do not sum to 1")
            for b in branches:
                Instruction(key[0], key[1], b.action, b.next)
            denom = math.lcm(*(b.weight.denominator for b in branches))
            cumulative = np.cumsum([b.weight.numerator * (denom // b.weight.denominator) for b in branches])
            self._tables[key] = (denom, cumulative)

    @classmethod
    def from_tm(cls, program: TMProgram) -> PTMProgram:
        return cls(
            {k: (Branch(Fraction(1), i.action, i.next),) for k, i in program.rules.items()},
            program.start,
        )

    def choose(self, key: tuple[str, str], rng: np.random.Generator) -> Branch:
        branches = self.rules[key]
        if len(branches) == 1:
            return branches[0]
        # Exact rational sampling: a uniform integer below the common denominator.
        denom, cumulative = self._tables[key]
        k = int(rng.integers(denom))
        return branches[int(np.searchsorted(cumulative, k, side="right"))]


def ptm_run(
    program: PTMProgram, word: str, rng: np.random.Generator, max_steps: int = DEFAULT_MAX_STEPS
) -> RunResult:
    if max_steps < 1:
        raise ValueError("max_steps must be >= 1")
    config = initial_config(program.start, word)
    rules = program.rules
    while config.steps < max_steps:
        key = (config.state, config.tape.read(config.head))
        if key not in rules:
            return RunResult(True, config.steps, config.tape.output(), config.state)
        b = program.choose(key, rng)
        _execute(Instruction(key[0], key[1], b.action, b.next), config)
    halted = (config.state, config.tape.read(config.head)) not in rules
    return RunResult(halted, config.steps, config.tape.output(), config.state)


def plurality(outputs) -> str:
    """Most frequent output; ties go to the lexicographically smallest."""
    counts = Counter(outputs)
    best = max(counts.values())
    return min(o for o, c in counts.items() if c == best)


def ptm_majority(
    program: PTMProgram,
    word: str,
    repeats: int,
    rng: np.random.Generator,
    max_steps: int = DEFAULT_MAX_STEPS,
) -> str:
    if repeats < 1 or repeats % 2 == 0:
        raise ValueError("repeats must be a positive odd integer")
    streams = rng.spawn(repeats)
    return plurality(ptm_run(program, word, s, max_steps).output for s in streams)


def parse_ptm_program(text: str, start: str = "q0") -> PTMProgram:
    grouped: dict[tuple[str, str], list[Branch]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) not in (4, 5):
            raise ProgramError(f"line {lineno}: expected 'state symbol action next [weight]'")
        try:
            weight = Fraction(parts[4]) if len(parts) == 5 else Fraction(1)
            Instruction(*parts[:4])
        except (ValueError, ZeroDivisionError) as exc:
            raise ProgramError(f"line {lineno}: {exc}") from None
        grouped.setdefault((parts[0], parts[1]), []).append(Branch(weight, parts[2], parts[3]))
    try:
        return PTMProgram({k: tuple(v) for k, v in grouped.items()}, start)
    except ProgramError as exc:
        raise ProgramError(f"invalid distribution: {exc}") from None
