"""Dense statevector simulator for small qubit registers.

Qubit 0 is the least significant bit of a basis-state index, so the basis
state |q3 q2 q1 q0> = |1001> of a 4-qubit register has index 9.  Measured
bitstrings are printed most-significant qubit first.  Registers are capped
at 8 qubits; everything is kept as a dense complex128 vector.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

MAX_QUBITS = 8
UNITARY_MAX_QUBITS = 5

GATE_ARITY = {"X": 1, "H": 1, "RX": 1, "CX": 2, "SWAP": 2, "CCX": 3}

_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
_H = np.array([[1.0, 1.0], [1.0, -1.0]], dtype=complex) / math.sqrt(2.0)
_PAULIS = (_X, _Y, _Z)


def _rx(theta: float) -> np.ndarray:
    c = math.cos(theta / 2.0)
    s = math.sin(theta / 2.0)
    return np.array([[c, -1.0j * s], [-1.0j * s, c]], dtype=complex)


@dataclass(frozen=True)
class GateOp:
    """One named gate: kind, qubit indices (controls first), optional angle."""

    kind: str
    qubits: tuple[int, ...]
    angle: float | None = None

    def __post_init__(self) -> None:
        if self.kind not in GATE_ARITY:
            raise ValueError(f"unknown gate kind {self.kind!r}")
        object.__setattr__(self, "qubits", tuple(int(q) for q in self.qubits))
        arity = GATE_ARITY[self.kind]
        if len(self.qubits) != arity:
            raise ValueError(
                f"{self.kind} takes {arity} qubit(s), got {len(self.qubits)}"
            )
        if len(set(self.qubits)) != len(self.qubits):
            raise ValueError(f"{self.kind} qubits must be distinct: {self.qubits}")
        if any(q < 0 for q in self.qubits):
            raise ValueError(f"negative qubit index in {self.qubits}")
        if self.kind == "RX":
            if self.angle is None:
                raise ValueError("RX requires an angle")
        elif self.angle is not None:
            raise ValueError(f"{self.kind} takes no angle")


def x(q: int) -> GateOp:
    return GateOp("X", (q,))


def h(q: int) -> GateOp:
    return GateOp("H", (q,))


def rx(theta: float, q: int) -> GateOp:
    return GateOp("RX", (q,), angle=float(theta))


def cx(control: int, target: int) -> GateOp:
    return GateOp("CX", (control, target))


def ccx(control1: int, control2: int, target: int) -> GateOp:
    return GateOp("CCX", (control1, control2, target))


def swap(a: int, b: int) -> GateOp:
    return GateOp("SWAP", (a, b))


@dataclass(frozen=True)
class Circuit:
    """An ordered gate list acting on a fixed-size register."""

    n_qubits: int
    ops: tuple[GateOp, ...] = ()

    def __post_init__(self) -> None:
        if not 1 <= self.n_qubits <= MAX_QUBITS:
            raise ValueError(
                f"n_qubits must be in [1, {MAX_QUBITS}], got {self.n_qubits}"
            )
        object.__setattr__(self, "ops", tuple(self.ops))
        for op in self.ops:
            if not isinstance(op, GateOp):
                raise ValueError(f"not a GateOp: {op!r}")
            if max(op.qubits) >= self.n_qubits:
                raise ValueError(
                    f"{op.kind} on {op.qubits} does not fit {self.n_qubits} qubits"
                )


@dataclass(frozen=True)
class NoiseModel:
    """Depolarizing noise after each gate plus classical readout bit flips.

    depolarizing_p is the per-touched-qubit probability of a uniformly
    random Pauli after every gate; readout_flip_q flips each measured bit
    independently.
    """

    depolarizing_p: float = 0.0
    readout_flip_q: float = 0.0

    def __post_init__(self) -> None:
        for name in ("depolarizing_p", "readout_flip_q"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"{name} must be in [0, 1], got {v}")


@dataclass
class StateVector:
    """2^n complex amplitudes of an n-qubit register."""

    n_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        if not 1 <= self.n_qubits <= MAX_QUBITS:
            raise ValueError(f"n_qubits must be in [1, {MAX_QUBITS}]")
        self.amplitudes = np.asarray(self.amplitudes, dtype=complex)
        if self.amplitudes.shape != (1 << self.n_qubits,):
            raise ValueError(
                f"amplitude vector must have length {1 << self.n_qubits}"
            )

    @classmethod
    def basis(cls, n_qubits: int, index: int = 0) -> "StateVector":
        if not 1 <= n_qubits <= MAX_QUBITS:
            raise ValueError(f"n_qubits must be in [1, {MAX_QUBITS}]")
        dim = 1 << n_qubits
        if not 0 <= index < dim:
            raise ValueError(f"basis index {index} out of range for {n_qubits} qubits")
        amps = np.zeros(dim, dtype=complex)
        amps[index] = 1.0
        return cls(n_qubits, amps)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))


def gate_matrix(g: GateOp) -> np.ndarray:
    """Return the unitary of a gate in its own 2^arity space.

    The first listed qubit is the most significant bit of the local index,
    so CX is the textbook block matrix diag(I, X).
    """
    if g.kind == "X":
        return _X.copy()
    if g.kind == "H":
        return _H.copy()
    if g.kind == "RX":
        return _rx(g.angle)
    if g.kind == "CX":
        m = np.eye(4, dtype=complex)
        m[[2, 3]] = m[[3, 2]]
        return m
    if g.kind == "CCX":
        m = np.eye(8, dtype=complex)
        m[[6, 7]] = m[[7, 6]]
        return m
    if g.kind == "SWAP":
        m = np.eye(4, dtype=complex)
        m[[1, 2]] = m[[2, 1]]
        return m
    raise ValueError(f"unknown gate kind {g.kind!r}")


def _apply_single(amps: np.ndarray, mat: np.ndarray, target: int,
                  controls: tuple[int, ...] = ()) -> None:
    # Index pairing with stride 2^target; controls select the active subspace.
    idx = np.arange(amps.size)
    mask = ((idx >> target) & 1) == 0
    for c in controls:
        mask &= ((idx >> c) & 1) == 1
    i0 = idx[mask]
    i1 = i0 | (1 << target)
    a0 = amps[i0]
    a1 = amps[i1]
    amps[i0] = mat[0, 0] * a0 + mat[0, 1] * a1
    amps[i1] = mat[1, 0] * a0 + mat[1, 1] * a1


def _apply_swap(amps: np.ndarray, a: int, b: int) -> None:
    idx = np.arange(amps.size)
    sel = (((idx >> a) & 1) == 1) & (((idx >> b) & 1) == 0)
    i = idx[sel]
    j = (i ^ (1 << a)) | (1 << b)
    amps[i], amps[j] = amps[j].copy(), amps[i].copy()


def apply_gate(s: StateVector, g: GateOp) -> StateVector:
    """Apply one gate in place and return the same register."""
    if max(g.qubits) >= s.n_qubits:
        raise ValueError(
            f"{g.kind} on {g.qubits} out of range for {s.n_qubits} qubits"
        )
    if g.kind in ("X", "H", "RX"):
        _apply_single(s.amplitudes, gate_matrix(g), g.qubits[0])
    elif g.kind == "CX":
        _apply_single(s.amplitudes, _X, g.qubits[1], controls=(g.qubits[0],))
    elif g.kind == "CCX":
        _apply_single(s.amplitudes, _X, g.qubits[2], controls=g.qubits[:2])
    elif g.kind == "SWAP":
        _apply_swap(s.amplitudes, g.qubits[0], g.qubits[1])
    else:
        raise ValueError(f"unknown gate kind {g.kind!r}")
    return s


def run_circuit(c: Circuit, initial: int = 0) -> StateVector:
    """Apply every op of the circuit, in order, to the basis state |initial>."""
    s = StateVector.basis(c.n_qubits, initial)
    for op in c.ops:
        apply_gate(s, op)
    return s


def probabilities(s: StateVector) -> np.ndarray:
    """Measurement probabilities |a_i|^2 over all 2^n basis states."""
    return np.abs(s.amplitudes) ** 2


def sample(s: StateVector, shots: int, rng_seed: int) -> dict[int, int]:
    """Draw shot counts from the register's outcome distribution.

    Deterministic for a fixed rng_seed; the returned map contains only
    outcomes with nonzero counts and its values sum to shots.
    """
    if shots < 1:
        raise ValueError(f"shots must be >= 1, got {shots}")
    rng = np.random.default_rng(rng_seed)
    p = probabilities(s)
    p = p / p.sum()
    counts = rng.multinomial(shots, p)
    return {int(i): int(c) for i, c in enumerate(counts) if c > 0}


def _embed(mat: np.ndarray, qubits: tuple[int, ...], n_qubits: int) -> np.ndarray:
    """Expand a 2^k gate matrix to the full 2^n space (verification path)."""
    k = len(qubits)
    dim = 1 << n_qubits
    idx = np.arange(dim)
    loc = np.zeros(dim, dtype=np.int64)
    cleared = idx.copy()
    for q in qubits:
        loc = (loc << 1) | ((idx >> q) & 1)
        cleared &= ~(1 << q)
    place = np.zeros(1 << k, dtype=np.int64)
    for lp in range(1 << k):
        v = 0
        for pos, q in enumerate(qubits):
            if (lp >> (k - 1 - pos)) & 1:
                v |= 1 << q
        place[lp] = v
    full = np.zeros((dim, dim), dtype=complex)
    rows = place[:, None] | cleared[None, :]
    full[rows, idx[None, :]] = mat[:, loc]
    return full


def circuit_unitary(c: Circuit) -> np.ndarray:
    """Full 2^n x 2^n matrix of the circuit, built gate by gate.

    This path multiplies explicitly embedded gate matrices and is kept
    independent of the in-place kernel so the two can cross-check each
    other.  Limited to 5 qubits.
    """
    if c.n_qubits > UNITARY_MAX_QUBITS:
        raise ValueError(
            f"unitary extraction supports at most {UNITARY_MAX_QUBITS} qubits, "
            f"got {c.n_qubits}"
        )
    u = np.eye(1 << c.n_qubits, dtype=complex)
    for op in c.ops:
        u = _embed(gate_matrix(op), op.qubits, c.n_qubits) @ u
    return u


def inverse_circuit(c: Circuit) -> Circuit:
    """Reverse the gate order; RX angles are negated, the rest self-invert."""
    inv = []
    for op in reversed(c.ops):
        if op.kind == "RX":
            inv.append(GateOp("RX", op.qubits, angle=-op.angle))
        else:
            inv.append(op)
    return Circuit(c.n_qubits, tuple(inv))


def noisy_sample(c: Circuit, initial: int, shots: int, noise: NoiseModel,
                 rng_seed: int) -> dict[int, int]:
    """Sample a circuit under the parametric noise model.

    Each shot simulates the circuit; after every gate, every touched qubit
    suffers a uniformly random Pauli with probability depolarizing_p.  The
    sampled outcome then has each bit flipped with probability
    readout_flip_q.  Deterministic for a fixed rng_seed.
    """
    if shots < 1:
        raise ValueError(f"shots must be >= 1, got {shots}")
    if not isinstance(noise, NoiseModel):
        noise = NoiseModel(*noise)
    rng = np.random.default_rng(rng_seed)
    n = c.n_qubits
    dim = 1 << n
    counts = np.zeros(dim, dtype=np.int64)

    if noise.depolarizing_p == 0.0:
        # Noiseless evolution is shot-independent; simulate once.
        p = probabilities(run_circuit(c, initial))
        p = p / p.sum()
        outcomes = rng.choice(dim, size=shots, p=p)
        if noise.readout_flip_q > 0.0:
            flips = rng.random((shots, n)) < noise.readout_flip_q
            masks = flips.astype(np.int64) @ (1 << np.arange(n))
            outcomes = outcomes ^ masks
        np.add.at(counts, outcomes, 1)
    else:
        for _ in range(shots):
            s = StateVector.basis(n, initial)
            for op in c.ops:
                apply_gate(s, op)
                for q in op.qubits:
                    if rng.random() < noise.depolarizing_p:
                        pauli = _PAULIS[rng.integers(0, 3)]
                        _apply_single(s.amplitudes, pauli, q)
            p = probabilities(s)
            p = p / p.sum()
            out = int(rng.choice(dim, p=p))
            for b in range(n):
                if rng.random() < noise.readout_flip_q:
                    out ^= 1 << b
            counts[out] += 1

    return {int(i): int(v) for i, v in enumerate(counts) if v > 0}


def format_bits(index: int, n_qubits: int) -> str:
    """Render a basis index as a bitstring, most significant qubit first."""
    return format(index, f"0{n_qubits}b")
