"""Classical logic over Z2: gate censuses, linear gates and reversible gates.

Truth tables list outputs for inputs in lexicographic order (00, 01, 10, 11
for two bits). Bits are the ints 0 and 1; matrices are ``uint8`` arrays
whose arithmetic is reduced mod 2.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

Bits = tuple[int, ...]


def z2_add(a: int, b: int) -> int:
    return (a + b) & 1


def z2_mul(a: int, b: int) -> int:
    return a & b & 1


def z2_neg(a: int) -> int:
    return a & 1


def vectorbit_add(p: Sequence[int], q: Sequence[int]) -> Bits:
    """Add two vector-bits ``(a;b) + (c;d) = (a+d; a+c)``.

    This is the non-componentwise rule used for the controlled-not
    construction with ket bits. It is not general Z2 vector addition;
    use :func:`xor_words` for that.
    """
    if len(p) != 2 or len(q) != 2:
        raise ValueError("vector-bit addition needs two length-2 words")
    a, _b = p
    c, d = q
    return (z2_add(a, d), z2_add(a, c))


def xor_words(p: Sequence[int], q: Sequence[int]) -> Bits:
    if len(p) != len(q):
        raise ValueError("words differ in length")
    return tuple(z2_add(x, y) for x, y in zip(p, q))


def words(m: int) -> list[Bits]:
    """All length-``m`` bit words in lexicographic order."""
    return list(itertools.product((0, 1), repeat=m))


@dataclass(frozen=True)
class TruthTable:
    m: int
    n: int
    outputs: tuple[Bits, ...]

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError("arities must be positive")
        if len(self.outputs) != 2**self.m:
            raise ValueError(f"need {2**self.m} rows, got {len(self.outputs)}")
        for row in self.outputs:
            if len(row) != self.n or any(b not in (0, 1) for b in row):
                raise ValueError(f"bad output row {row!r}")

    @classmethod
    def from_function(cls, m: int, n: int, fn) -> TruthTable:
        rows = []
        for w in words(m):
            out = fn(*w)
            rows.append((out,) if isinstance(out, int) else tuple(out))
        return cls(m, n, tuple(rows))

    def __call__(self, *bits: int) -> Bits:
        if len(bits) != self.m:
            raise ValueError(f"expected {self.m} input bits")
        index = 0
        for b in bits:
            index = (index << 1) | b
        return self.outputs[index]

    def column(self, k: int = 0) -> Bits:
        """Output bit ``k`` for every input, in lexicographic order."""
        return tuple(row[k] for row in self.outputs)


MAX_ENUM_WEIGHT = 32


def enumerate_gates(m: int, n: int) -> Iterator[TruthTable]:
    """Yield every truth table V_m -> V_n.

    Order is lexicographic over the sequence of output words, so the first
    table is constant zero.
    """
    if m < 1 or n < 1:
        raise ValueError("arities must be positive")
    if m * 2**m > MAX_ENUM_WEIGHT:
        raise ValueError(f"m={m} exceeds the enumeration guard m*2^m <= {MAX_ENUM_WEIGHT}")
    outs = words(n)
    for rows in itertools.product(outs, repeat=2**m):
        yield TruthTable(m, n, rows)


def is_reversible(tt: TruthTable) -> bool:
    if tt.m != tt.n:
        return False
    return len(set(tt.outputs)) == len(tt.outputs)


# ---------------------------------------------------------------------------
# Z2 matrices


def z2_matrix(rows) -> np.ndarray:
    arr = np.asarray(rows, dtype=np.uint8)
    if arr.ndim != 2:
        raise ValueError("Z2 matrix must be 2-D")
    if np.any(arr > 1):
        raise ValueError("Z2 entries must be 0 or 1")
    return arr


def z2_matmul(a, b) -> np.ndarray:
    a, b = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
    return ((a @ b) & 1).astype(np.uint8)


def z2_matvec(a, v: Sequence[int]) -> Bits:
    out = z2_matmul(a, np.asarray(v).reshape(-1, 1))
    return tuple(int(x) for x in out[:, 0])


def z2_inverse(a) -> np.ndarray | None:
    """Inverse over GF(2) by Gauss-Jordan elimination, or None if singular."""
    a = z2_matrix(a)
    size = a.shape[0]
    if a.shape != (size, size):
        raise ValueError("only square matrices have inverses")
    work = np.concatenate([a, np.eye(size, dtype=np.uint8)], axis=1)
    for col in range(size):
        pivots = np.nonzero(work[col:, col])[0]
        if pivots.size == 0:
            return None
        p = col + pivots[0]
        work[[col, p]] = work[[p, col]]
        for r in range(size):
            if r != col and work[r, col]:
                work[r] ^= work[col]
    return work[:, size:].copy()


def z2_det(a) -> int:
    return 0 if z2_inverse(a) is None else 1


def z2_orthogonal(a) -> bool:
    """True iff ``a`` is invertible over Z2 with inverse equal to its transpose."""
    inv = z2_inverse(a)
    return inv is not None and np.array_equal(inv, z2_matrix(a).T)


def all_2x2() -> list[np.ndarray]:
    return [np.array(e, dtype=np.uint8).reshape(2, 2) for e in itertools.product((0, 1), repeat=4)]


def linear_matrix_of(tt: TruthTable) -> np.ndarray | None:
    """The 2x2 Z2 matrix realising ``tt`` as ``x -> A x``, if any."""
    if tt.m != 2 or tt.n != 2:
        raise ValueError("linear_matrix_of expects a V2 -> V2 table")
    # A linear map is fixed by the images of the unit vectors.
    a = np.array([tt(1, 0), tt(0, 1)], dtype=np.uint8).T
    for w in words(2):
        if z2_matvec(a, w) != tt(*w):
            return None
    return a


def table_of_matrix(a) -> TruthTable:
    a = z2_matrix(a)
    rows, cols = a.shape
    return TruthTable(cols, rows, tuple(z2_matvec(a, w) for w in words(cols)))


SIX_NAMES = ("I", "J", "K", "L", "M", "N")

_SIX = {
    "I": ((1, 0), (0, 1)),
    "J": ((0, 1), (1, 0)),
    "K": ((1, 1), (1, 0)),
    "L": ((0, 1), (1, 1)),
    "M": ((1, 1), (0, 1)),
    "N": ((1, 0), (1, 1)),
}


def six_matrices() -> dict[str, np.ndarray]:
    return {name: z2_matrix(_SIX[name]) for name in SIX_NAMES}


def name_of(a) -> str | None:
    for name, mat in six_matrices().items():
        if np.array_equal(mat, a):
            return name
    return None


def six_group() -> tuple[dict[str, np.ndarray], dict[tuple[str, str], str]]:
    """The six invertible 2x2 Z2 matrices and their composition table.

    ``table[x, y]`` names the product ``x @ y``, i.e. gate ``y`` applied
    first and then gate ``x``.
    """
    mats = six_matrices()
    table = {}
    for x, y in itertools.product(SIX_NAMES, repeat=2):
        prod = name_of(z2_matmul(mats[x], mats[y]))
        if prod is None:
            raise AssertionError(f"{x}{y} left the group")
        table[x, y] = prod
    return mats, table


def compose(*names: str) -> str:
    """Name of the product of the named gates, written left to right."""
    mats = six_matrices()
    acc = np.eye(2, dtype=np.uint8)
    for name in names:
        acc = z2_matmul(acc, mats[name])
    result = name_of(acc)
    assert result is not None
    return result


def is_singular_by_zeros(a) -> bool:
    """Zero-pattern rule for singular 2x2 Z2 matrices."""
    a = z2_matrix(a)
    zeros = int(np.sum(a == 0))
    if zeros in (0, 3, 4):
        return True
    if zeros == 2:
        row_pair = any(np.all(a[i] == 0) for i in range(2))
        col_pair = any(np.all(a[:, j] == 0) for j in range(2))
        return row_pair or col_pair
    return False


def _permutation(size: int, swap: tuple[int, int]) -> np.ndarray:
    perm = np.eye(size, dtype=np.uint8)
    i, j = swap
    perm[[i, j]] = perm[[j, i]]
    return perm


def named_matrix(name: str) -> np.ndarray:
    if name == "N2":
        return six_matrices()["N"]
    if name == "BN4":
        return z2_matrix([[1, 0, 0, 0], [0, 1, 0, 0], [1, 0, 0, 1], [1, 0, 1, 0]])
    if name == "BNIE4":
        return _permutation(4, (2, 3))
    if name == "BBNIE8":
        return _permutation(8, (6, 7))
    raise KeyError(f"unknown matrix {name!r}")


def stacked_identity_fanout(v: Sequence[int]) -> Bits:
    """Apply the stacked ``(I; I)`` matrix: duplicate a word onto two wires."""
    size = len(v)
    stack = np.concatenate([np.eye(size, dtype=np.uint8)] * 2, axis=0)
    return z2_matvec(stack, v)


def fanout_tt(m: int) -> TruthTable:
    return TruthTable.from_function(m, 2 * m, lambda *w: w + w)


# ---------------------------------------------------------------------------
# Named logic gates and universality


NAMED_TABLES = {
    "not": (1, lambda x: 1 - x),
    "and": (2, lambda x, y: x & y),
    "or": (2, lambda x, y: x | y),
    "xor": (2, lambda x, y: x ^ y),
    "nand": (2, lambda x, y: 1 - (x & y)),
    "nor": (2, lambda x, y: 1 - (x | y)),
}


def named_tt(name: str) -> TruthTable:
    arity, fn = NAMED_TABLES[name]
    return TruthTable.from_function(arity, 1, fn)


def toffoli_tt() -> TruthTable:
    return TruthTable.from_function(3, 3, lambda x, y, z: (x, y, z ^ (x & y)))


def nand_via_toffoli(x: int, y: int) -> int:
    """Pin the Toffoli target to 1; the third output is then ``x NAND y``."""
    return toffoli_tt()(x, y, 1)[2]


@dataclass(frozen=True)
class Var:
    name: str

    def evaluate(self, env: dict[str, int]) -> int:
        return env[self.name]

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Nand:
    left: Var | Nand
    right: Var | Nand

    def evaluate(self, env: dict[str, int]) -> int:
        return 1 - (self.left.evaluate(env) & self.right.evaluate(env))

    def __str__(self) -> str:
        def wrap(e):
            return str(e) if isinstance(e, Var) else f"({e})"

        return f"{wrap(self.left)}|{wrap(self.right)}"


def expr_table(expr: Var | Nand, variables=("x", "y")) -> Bits:
    return tuple(expr.evaluate(dict(zip(variables, w))) for w in words(len(variables)))


def expr_depth(expr: Var | Nand) -> int:
    if isinstance(expr, Var):
        return 0
    return 1 + max(expr_depth(expr.left), expr_depth(expr.right))


NAND_DEPTH_CAP = 6


def synth_from_nand(target: TruthTable, max_depth: int = NAND_DEPTH_CAP) -> Var | Nand:
    """Shallowest NAND-only expression over ``x, y`` realising a V2 -> V1 table.

    Breadth-first by depth; the first expression found for each function is
    kept, so results are deterministic.
    """
    if target.m != 2 or target.n != 1:
        raise ValueError("synth_from_nand expects a V2 -> V1 table")
    want = target.column(0)
    found: dict[Bits, Var | Nand] = {}
    by_depth: list[list[Var | Nand]] = [[]]
    for v in (Var("x"), Var("y")):
        t = expr_table(v)
        if t not in found:
            found[t] = v
            by_depth[0].append(v)
    if want in found:
        return found[want]
    for depth in range(1, max_depth + 1):
        shallower = [e for level in by_depth for e in level]
        newest = set(map(id, by_depth[-1]))
        level = []
        for a, b in itertools.product(shallower, repeat=2):
            if id(a) not in newest and id(b) not in newest:
                continue
            e = Nand(a, b)
            t = expr_table(e)
            if t not in found:
                found[t] = e
                level.append(e)
                if t == want:
                    return e
        by_depth.append(level)
    raise RuntimeError(f"no NAND expression of depth <= {max_depth} for {want}")


def de_morgan_or(x: int, y: int) -> int:
    return 1 - ((1 - x) & (1 - y))


# ---------------------------------------------------------------------------
# Census


def census() -> dict[str, int]:
    """Exhaustive classification of all V2 -> V2 gates."""
    counts = dict(total=0, reversible=0, linear=0, linear_singular=0, linear_invertible=0, z2_orthogonal=0)
    for tt in enumerate_gates(2, 2):
        counts["total"] += 1
        counts["reversible"] += is_reversible(tt)
        a = linear_matrix_of(tt)
        if a is None:
            continue
        counts["linear"] += 1
        if z2_inverse(a) is None:
            counts["linear_singular"] += 1
        else:
            counts["linear_invertible"] += 1
            counts["z2_orthogonal"] += z2_orthogonal(a)
    return counts


def orthogonal_names() -> list[str]:
    return [name for name, a in six_matrices().items() if z2_orthogonal(a)]


def census_report() -> str:
    counts = census()
    mats, table = six_group()
    lines = [
        "V2 -> V2 gate census",
        f"total: {counts['total']}",
        f"reversible: {counts['reversible']}",
        f"linear: {counts['linear']}",
        f"linear singular: {counts['linear_singular']}",
        f"linear invertible: {counts['linear_invertible']}",
        f"z2-orthogonal: {counts['z2_orthogonal']} ({', '.join(orthogonal_names())})",
        "",
        "composition table (row @ column)",
        "   " + " ".join(SIX_NAMES),
    ]
    for x in SIX_NAMES:
        lines.append(f"{x}  " + " ".join(table[x, y] for y in SIX_NAMES))
    return "\n".join(lines) + "\n"


def ket_bits() -> tuple[np.ndarray, np.ndarray]:
    """The computational basis kets ``|0> = (1;0)`` and ``|1> = (0;1)``."""
    return np.array([1, 0], dtype=np.complex128), np.array([0, 1], dtype=np.complex128)
