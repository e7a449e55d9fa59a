"""
Turing machines, deterministic and random
=========================================

A binary incrementer, then a biased coin writer whose errors shrink under
majority voting.
"""
from math import comb

from qdesk import turing as tm
from qdesk.rng import make_rng

incr = tm.parse_program(
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
for word in ("0", "1011", "111"):
    res = tm.tm_run(incr, word)
    print(f"{word} + 1 = {res.output} in {res.steps} steps")

biased = tm.parse_ptm_program("q0 b 1 q1 2/3\nq0 b 0 q1 1/3")
rng = make_rng(0)
for repeats in (1, 5, 15, 25):
    hits = sum(tm.ptm_majority(biased, "", repeats, rng) == "1" for _ in range(2000))
    exact = sum(comb(repeats, k) * (2 / 3) ** k * (1 / 3) ** (repeats - k) for k in range(repeats // 2 + 1, repeats + 1))
    print(f"majority of {repeats:2d}: {hits / 2000:.3f} (binomial {exact:.3f})")
