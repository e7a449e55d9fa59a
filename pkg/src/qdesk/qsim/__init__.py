"""Quantum register simulation."""
from qdesk.qsim.gates import (
    HADAMARD,
    IDENTITY,
    PARAMS,
    PAULI_X,
    PAULI_Y,
    PAULI_Z,
    PHASE_S,
    PHASE_T,
    U_COIN,
    SingleQubitParams,
    gate_from_params,
    named_gate,
)
from qdesk.qsim.measure import (
    DegenerateStateError,
    MeasurementRecord,
    measure_all,
    measure_qubit,
    qubit_branch_probabilities,
)
from qdesk.qsim.observables import (
    SPIN_Z,
    Observable,
    conjugate_observable,
    expectation,
    measure_observable,
    outcome_probabilities,
)
from qdesk.qsim.register import (
    MAX_QUBITS,
    QRegister,
    QubitIndexError,
    ResourceError,
    apply_1q,
    apply_cnot,
    apply_toffoli,
    qreg_basis,
    walsh_hadamard,
    word_of,
)
from qdesk.qsim.states import (
    PauliDecomposition,
    clone_attempt_fidelity,
    is_product_2q,
    pauli_decompose,
    prepare_singlet,
    product_determinant,
    spin_state,
)
