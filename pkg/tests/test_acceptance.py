"""Acceptance gate: one test per criterion, each at its stated tolerance and
time budget. A PASS/FAIL summary line per criterion is printed at the end of
the run."""
import subprocess
import sys
import time
from contextlib import contextmanager
from math import comb

import numpy as np

from qdesk import turing as tm
from qdesk import z2
from qdesk.algorithms import (
    OracleSpec,
    PromiseClass,
    Verdict,
    classical_dj,
    coin_flip,
    deutsch_jozsa,
    validate_promise,
)
from qdesk.circuit import parse_circuit, run_circuit
from qdesk.linalg import evolve_family
from qdesk.qsim import (
    PARAMS,
    PAULI_Z,
    PHASE_S,
    PHASE_T,
    QRegister,
    clone_attempt_fidelity,
    gate_from_params,
    is_product_2q,
    measure_qubit,
    pauli_decompose,
    prepare_singlet,
    product_determinant,
    qreg_basis,
    spin_state,
)
from qdesk.rng import make_rng, shot_rng
from _oracles import random_hermitian
from test_algorithms import all_promise_oracles
from test_register import random_circuit, run_kernels, run_matrices

R2 = 1 / np.sqrt(2)


@contextmanager
def budget(seconds):
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    assert elapsed < seconds, f"took {elapsed:.2f} s, budget {seconds} s"


def test_criterion_01_z2_census():
    with budget(1):
        counts = z2.census()
        assert counts["total"] == 256
        assert counts["reversible"] == 24
        assert counts["linear"] == 16
        assert counts["linear_singular"] == 10
        assert counts["linear_invertible"] == 6
        assert counts["z2_orthogonal"] == 2
        assert z2.orthogonal_names() == ["I", "J"]


def test_criterion_02_group_table():
    with budget(1):
        names, table = z2.six_group()
        assert set(table.values()) <= set(names)
        assert z2.compose("K", z2.compose("L", "M")) == "M"
        for g in "IJMN":
            assert z2.compose(g, g) == "I"
        assert z2.compose("K", "L") == z2.compose("L", "K") == "I"


def test_criterion_03_gate_identities():
    expected = {
        "U_coin": np.array([[1, 1], [-1, 1]]) * R2,
        "H": np.array([[1, 1], [1, -1]]) * R2,
        "S": np.diag([1, 1j]),
        "T": np.diag([1, np.exp(1j * np.pi / 4)]),
    }
    with budget(1):
        for name, m in expected.items():
            assert np.max(np.abs(gate_from_params(PARAMS[name]) - m)) <= 1e-12
        assert np.max(np.abs(PHASE_T @ PHASE_T - PHASE_S)) <= 1e-12
        assert np.max(np.abs(PHASE_S @ PHASE_S - PAULI_Z)) <= 1e-12


def test_criterion_04_kernel_equivalence():
    rng = np.random.default_rng(404)
    with budget(10):
        for _ in range(100):
            n = int(rng.integers(1, 7))
            ops = random_circuit(rng, n, int(rng.integers(0, 21)))
            assert np.max(np.abs(run_kernels(n, ops) - run_matrices(n, ops))) <= 1e-10


def test_criterion_05_deutsch_jozsa_exhaustive():
    with budget(5):
        total = 0
        for n in (1, 2, 3):
            for f in all_promise_oracles(n):
                total += 1
                out = deutsch_jozsa(f)
                assert out.oracle_queries == 2
                assert out == deutsch_jozsa(f)
                if validate_promise(f) is PromiseClass.BALANCED:
                    assert out.verdict is Verdict.BALANCED and out.readout != "0" * n
                else:
                    assert out.verdict is Verdict.CONSTANT and out.readout == "0" * n
        assert total == 84  # 4 + 8 + 72 tables: both constants and every balanced one
    rng = make_rng(2010)
    with budget(30):
        for _ in range(200):
            assert deutsch_jozsa(OracleSpec.random_balanced(10, rng)).verdict is Verdict.BALANCED


def test_criterion_06_classical_baseline():
    with budget(1):
        assert classical_dj(OracleSpec.constant0(4)) == (Verdict.CONSTANT, 2 ** (4 - 1) + 1)
        ratios = [deutsch_jozsa(OracleSpec.constant0(n)).gate_count / n for n in range(2, 13)]
        # a common centre exists with every ratio within +-1 of it
        assert max(ratios) - min(ratios) <= 2


def test_criterion_07_born_statistics():
    with budget(5):
        counts = run_circuit(parse_circuit("qubits 1\nh 0\nmeasure all"), shots=100_000, seed=7).counts
        assert all(0.49 <= counts[w] / 100_000 <= 0.51 for w in "01")
        flips = coin_flip(100_000, make_rng(7))
        assert all(0.49 <= c / 100_000 <= 0.51 for c in flips.values())


def test_criterion_08_collapse():
    with budget(1):
        reg = QRegister(2, np.full(4, 0.5))
        seed = 0
        while True:
            trial = reg.copy()
            rec = measure_qubit(trial, 0, make_rng(seed))
            if rec.outcome == "0":
                break
            seed += 1
        assert np.max(np.abs(rec.post_state - np.array([R2, R2, 0, 0]))) <= 1e-12


def test_criterion_09_entanglement():
    with budget(5):
        opposite = 0
        for s in range(10_000):
            rng = shot_rng(9, s)
            reg = prepare_singlet()
            opposite += measure_qubit(reg, 0, rng).outcome != measure_qubit(reg, 1, rng).outcome
        assert opposite == 10_000
        singlet = prepare_singlet().state
        assert not is_product_2q(singlet)
        assert abs(abs(product_determinant(singlet)) - 0.5) <= 1e-12
        assert is_product_2q(qreg_basis(2, "00").state)


def test_criterion_10_spin_identity():
    with budget(1):
        combo = R2 * (spin_state("x", "up") + spin_state("x", "down"))
        assert np.max(np.abs(combo - spin_state("z", "up"))) <= 1e-12


def test_criterion_11_no_cloning():
    with budget(1):
        assert clone_attempt_fidelity([1, 0]) == 1.0
        assert clone_attempt_fidelity([0, 1]) == 1.0
        assert abs(clone_attempt_fidelity([R2, R2]) - 0.5) <= 1e-12


def test_criterion_12_pauli_reconstruction():
    rng = np.random.default_rng(12)
    mats = rng.normal(size=(1000, 2, 2)) + 1j * rng.normal(size=(1000, 2, 2))
    with budget(1):
        for m in mats:
            assert np.max(np.abs(pauli_decompose(m).reconstruct() - m)) <= 1e-12


def test_criterion_13_dynamics_semigroup():
    rng = np.random.default_rng(13)
    cases = [(random_hermitian(rng), *rng.uniform(-5, 5, 2)) for _ in range(100)]
    with budget(1):
        for g, t, s in cases:
            lhs = evolve_family(g, t) @ evolve_family(g, s)
            assert np.max(np.abs(lhs - evolve_family(g, t + s))) <= 1e-10


def test_criterion_14_tm_and_ptm():
    with budget(30):
        prog = tm.parse_program("q1 b 1 q2", start="q1")
        nxt = tm.tm_step(prog, tm.TMConfig("q1", 0, tm.Tape()))
        assert (nxt.state, nxt.head, nxt.tape.read(0)) == ("q2", 0, "1")
        assert tm.tm_step(prog, nxt) is tm.HALTED

        biased = tm.parse_ptm_program("q0 b 1 q1 2/3\nq0 b 0 q1 1/3")
        rng = make_rng(14)
        trials = 10_000
        hits = sum(tm.ptm_majority(biased, "", 15, rng) == "1" for _ in range(trials))
        rate = hits / trials
        oracle = sum(comb(15, k) * (2 / 3) ** k * (1 / 3) ** (15 - k) for k in range(8, 16))
        print(f"15-fold majority: empirical {rate:.4f}, binomial oracle {oracle:.4f}")
        assert rate >= 0.95, f"empirical {rate:.4f} < 0.95 (exact binomial value {oracle:.4f})"


CLI_FILES = {
    "bell.qc": "qubits 2\nh 0\ncnot 0 1\nmeasure all\n",
    "flip.tm": "q0 0 1 q1\nq0 1 0 q1\n",
    "coin.ptm": "q0 b 0 q1 1/2\nq0 b 1 q1 1/2\n",
}


def test_criterion_15_cli_determinism(tmp_path):
    for name, text in CLI_FILES.items():
        (tmp_path / name).write_text(text)
    invocations = [
        ["run", str(tmp_path / "bell.qc"), "--shots", "1000", "--seed", "15"],
        ["dj", "--n", "3", "--oracle", "balanced:3c", "--trace"],
        ["coinflip", "--shots", "10", "--seed", "7"],
        ["z2", "census"],
        ["tm", "run", str(tmp_path / "flip.tm"), "--tape", "0"],
        ["ptm", "run", str(tmp_path / "coin.ptm"), "--seed", "15", "--repeats", "3"],
    ]
    for argv in invocations:
        outs = [
            subprocess.run([sys.executable, "-m", "qdesk.cli", *argv], capture_output=True, check=False)
            for _ in range(2)
        ]
        assert outs[0].returncode == 0, outs[0].stderr
        assert outs[0].stdout == outs[1].stdout and outs[0].stdout
