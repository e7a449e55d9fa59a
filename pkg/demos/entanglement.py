"""
Entanglement and cloning
========================

The singlet cannot be written as a product state, and its two halves
always disagree when measured. A CNOT copies basis states but not |+>.
"""
import numpy as np

from qdesk.qsim import (
    clone_attempt_fidelity,
    is_product_2q,
    measure_qubit,
    prepare_singlet,
    product_determinant,
)
from qdesk.rng import shot_rng

singlet = prepare_singlet()
print("amplitudes:", np.round(singlet.state.real, 4))
print("determinant:", product_determinant(singlet.state), "product?", is_product_2q(singlet.state))

pairs = []
for shot in range(10):
    reg = prepare_singlet()
    rng = shot_rng(1, shot)
    pairs.append(measure_qubit(reg, 0, rng).outcome + measure_qubit(reg, 1, rng).outcome)
print("shots:", pairs)

r = 1 / np.sqrt(2)
for label, psi in (("|0>", [1, 0]), ("|1>", [0, 1]), ("|+>", [r, r])):
    print(f"clone fidelity {label}: {clone_attempt_fidelity(psi):.3f}")
