"""
A quantum coin
==============

Rotate |0> with a single unitary and measure spin along z. Half the shots
give +1/2 and half give -1/2.
"""
import numpy as np

from qdesk.algorithms import coin_flip
from qdesk.qsim import PARAMS, U_COIN, gate_from_params
from qdesk.rng import make_rng

# the coin unitary from its four angles
print(np.round(gate_from_params(PARAMS["U_coin"]), 6))
print(np.allclose(gate_from_params(PARAMS["U_coin"]), U_COIN))

for start in (0, 1):
    counts = coin_flip(100_000, make_rng(7 + start), start=start)
    print(f"start |{start}>:", {k: v / 100_000 for k, v in counts.items()})
