from fractions import Fraction
from math import comb

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from qdesk import turing as tm
from qdesk.rng import make_rng

FLIP = """
q0 0 1 q1
q0 1 0 q1
"""

RIGHT_FOREVER = """
q0 b R q0
q0 0 R q0
q0 1 R q0
"""

COIN = """
q0 b 0 q1 1/2
q0 b 1 q1 1/2
"""

BIASED = """
q0 b 1 q1 2/3
q0 b 0 q1 1/3
"""


def test_single_step_write_rule():
    prog = tm.parse_program("q1 b 1 q2", start="q1")
    config = tm.TMConfig("q1", 5, tm.Tape())
    nxt = tm.tm_step(prog, config)
    assert nxt.state == "q2"
    assert nxt.head == 5
    assert nxt.tape.read(5) == "1"
    assert nxt.steps == 1
    # input configuration untouched
    assert config.tape.read(5) == "b" and config.steps == 0


def test_step_halts_without_rule():
    prog = tm.parse_program("q1 b 1 q2", start="q1")
    assert tm.tm_step(prog, tm.TMConfig("q2", 0, tm.Tape.from_word("1"))) is tm.HALTED


def test_step_move_right():
    prog = tm.parse_program("q0 1 R q0")
    config = tm.TMConfig("q0", 0, tm.Tape.from_word("11"))
    nxt = tm.tm_step(prog, config)
    assert nxt.head == 1
    assert nxt.tape == config.tape


def test_run_bit_flip():
    res = tm.tm_run(tm.parse_program(FLIP), "0", 100)
    # hand trace: q0 reads 0, writes 1, enters q1, no rule for (q1, 1) -> halt
    assert res == tm.RunResult(True, 1, "1", "q1")


def test_run_empty_program():
    res = tm.tm_run(tm.TMProgram({}), "0110", 10)
    assert res.halted and res.steps == 0 and res.output == "0110"


def test_run_budget_exhausted():
    res = tm.tm_run(tm.parse_program(RIGHT_FOREVER), "1", 100)
    assert not res.halted
    assert res.steps == 100


def test_run_empty_input_uses_blank_tape():
    res = tm.tm_run(tm.parse_program("q0 b 1 q1"), "", 10)
    assert res.output == "1" and res.steps == 1


def test_head_starts_at_leftmost_symbol():
    # binary increment: walk right to the end, then carry leftwards
    prog = tm.parse_program(
        """
        q0 0 R q0
        q0 1 R q0
        q0 b L q1
        q1 1 0 q2
        q2 0 L q1
        q1 0 1 q3
        q1 b 1 q3
        """
    )
    assert tm.tm_run(prog, "1011").output == "1100"
    assert tm.tm_run(prog, "111").output == "1000"


def test_output_reads_from_leftmost_nonblank():
    tape = tm.Tape({-3: "1", -2: "0", 0: "1"})
    assert tape.output() == "10"
    assert tm.Tape().output() == ""


def test_parse_errors():
    with pytest.raises(tm.ProgramError, match="line 2"):
        tm.parse_program("q0 0 1 q1\nq0 2 1 q1")
    with pytest.raises(tm.ProgramError):
        tm.parse_program("q0 0 1 q1\nq0 0 R q1")
    with pytest.raises(tm.ProgramError):
        tm.parse_program("q0 0 X q1")
    with pytest.raises(ValueError):
        tm.tm_run(tm.TMProgram({}), "0", 0)


programs = st.lists(
    st.tuples(
        st.sampled_from(["q0", "q1", "q2"]),
        st.sampled_from(tm.SYMBOLS),
        st.sampled_from(tm.SYMBOLS + tm.MOVES),
        st.sampled_from(["q0", "q1", "q2"]),
    ),
    max_size=9,
    unique_by=lambda t: (t[0], t[1]),
).map(lambda rows: tm.TMProgram.from_instructions([tm.Instruction(*r) for r in rows]))


@given(programs, st.text("01", max_size=6))
def test_step_locality_and_determinism(prog, word):
    config = tm.initial_config(prog.start, word)
    for _ in range(30):
        nxt = tm.tm_step(prog, config)
        if nxt is tm.HALTED:
            break
        again = tm.tm_step(prog, config)
        assert again.state == nxt.state and again.head == nxt.head and again.tape == nxt.tape
        assert abs(nxt.head - config.head) <= 1
        changed = {k for k in set(config.tape.cells) | set(nxt.tape.cells) if config.tape.read(k) != nxt.tape.read(k)}
        assert changed <= {config.head}
        assert nxt.steps == config.steps + 1
        config = nxt


@given(programs, st.text("01", max_size=6))
def test_run_matches_repeated_steps(prog, word):
    config = tm.initial_config(prog.start, word)
    steps = 0
    while steps < 40:
        nxt = tm.tm_step(prog, config)
        if nxt is tm.HALTED:
            break
        config, steps = nxt, steps + 1
    res = tm.tm_run(prog, word, 40)
    assert res.steps == steps
    assert res.output == config.tape.output()


def test_ptm_degenerate_equals_tm():
    prog = tm.parse_program(FLIP)
    ptm = tm.PTMProgram.from_tm(prog)
    for word in ("0", "1", ""):
        assert tm.ptm_run(ptm, word, make_rng(1)) == tm.tm_run(prog, word)
    parsed = tm.parse_ptm_program(FLIP)
    assert tm.ptm_run(parsed, "0", make_rng(2)) == tm.tm_run(prog, "0")


def test_ptm_fair_coin_frequency():
    ptm = tm.parse_ptm_program(COIN)
    rng = make_rng(2024)
    runs = 100_000
    ones = sum(tm.ptm_run(ptm, "", rng).output == "1" for _ in range(runs))
    # binomial sd is 0.0016 at this size; 0.01 is > 6 sd
    assert abs(ones / runs - 0.5) <= 0.01


def test_ptm_seed_determinism():
    ptm = tm.parse_ptm_program(COIN + "q1 0 R q0\nq1 1 R q0\n")
    a = tm.ptm_run(ptm, "", make_rng(9), max_steps=200)
    b = tm.ptm_run(ptm, "", make_rng(9), max_steps=200)
    assert a == b
    assert repr(a) == repr(b)


def test_ptm_missing_distribution_halts():
    ptm = tm.parse_ptm_program(COIN)
    res = tm.ptm_run(ptm, "1", make_rng(0))
    assert res.halted and res.steps == 0


def test_ptm_weights_validated():
    with pytest.raises(tm.ProgramError):
        tm.parse_ptm_program("q0 b 1 q1 1/2\nq0 b 0 q1 1/3")
    with pytest.raises(tm.ProgramError):
        tm.parse_ptm_program("q0 b 1 q1 x")
    ptm = tm.parse_ptm_program(BIASED)
    assert [b.weight for b in ptm.rules["q0", "b"]] == [Fraction(2, 3), Fraction(1, 3)]


def test_rational_sampling_is_exact_in_expectation():
    ptm = tm.parse_ptm_program(BIASED)
    rng = make_rng(77)
    n = 60_000
    ones = sum(ptm.choose(("q0", "b"), rng).action == "1" for _ in range(n))
    assert abs(ones / n - 2 / 3) < 5 * np.sqrt(2 / 9 / n)


def test_majority_repeats_one_is_single_run():
    ptm = tm.parse_ptm_program(BIASED)
    rng_a, rng_b = make_rng(5), make_rng(5)
    single = tm.ptm_run(ptm, "", rng_b.spawn(1)[0]).output
    assert tm.ptm_majority(ptm, "", 1, rng_a) == single


def test_majority_degenerate_always_correct():
    ptm = tm.PTMProgram.from_tm(tm.parse_program("q0 b 1 q1"))
    rng = make_rng(3)
    assert all(tm.ptm_majority(ptm, "", 5, rng) == "1" for _ in range(50))


def test_majority_rejects_even_repeats():
    with pytest.raises(ValueError):
        tm.ptm_majority(tm.parse_ptm_program(BIASED), "", 4, make_rng(0))


def test_plurality_tie_break():
    assert tm.plurality(["10", "01", "10", "01", "11"]) == "01"


def binomial_majority(q, r):
    return sum(comb(r, k) * q**k * (1 - q) ** (r - k) for k in range(r // 2 + 1, r + 1))


def test_majority_tracks_binomial_oracle():
    ptm = tm.parse_ptm_program(BIASED)
    trials = 4000
    rates = []
    for repeats in (1, 5, 15):
        rng = make_rng(100 + repeats)
        hits = sum(tm.ptm_majority(ptm, "", repeats, rng) == "1" for _ in range(trials))
        rate = hits / trials
        expected = binomial_majority(2 / 3, repeats)
        assert abs(rate - expected) < 5 * np.sqrt(expected * (1 - expected) / trials)
        rates.append(rate)
    assert rates[0] < rates[1] < rates[2]
