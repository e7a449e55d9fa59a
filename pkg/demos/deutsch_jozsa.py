"""
Deutsch-Jozsa
=============

Decide whether an oracle is constant or balanced with two queries, then
compare with the classical query count.
"""
import numpy as np

from qdesk.algorithms import OracleSpec, classical_dj, deutsch_jozsa
from qdesk.rng import make_rng

rng = make_rng(3)
for n in (2, 4, 8):
    for f in (OracleSpec.constant0(n), OracleSpec.random_balanced(n, rng)):
        out = deutsch_jozsa(f)
        verdict, queries = classical_dj(f)
        print(f"n={n} {out.verdict.value:8s} readout={out.readout} quantum=2 classical={queries}")

# watch the state evolve for a small balanced oracle
out = deutsch_jozsa(OracleSpec(2, (0, 1, 1, 0)), trace=True)
for label, state in out.trace:
    print(f"{label:15s}", np.round(state.real, 3))
