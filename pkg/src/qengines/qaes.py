"""Single-round substitution / mixing / rotation cipher on 4-bit chunks.

The shared secret is a self-inverse 16-entry substitution table plus a
list of classical reversible gates (X, CX, CCX, SWAP) acting on a 4-qubit
register.  Encryption runs each chunk through SubBytes, then the gate
list on a basis state via the simulator, then a position-dependent left
rotation; decryption applies the exact inverses in reverse order.  There
is no round key: whoever holds the seed can decrypt.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .sim import (
    Circuit,
    GateOp,
    StateVector,
    circuit_unitary,
    inverse_circuit,
    probabilities,
    run_circuit,
)

CHUNK_BITS = 4
TABLE_SIZE = 1 << CHUNK_BITS

CLASSICAL_GATE_KINDS = frozenset({"X", "CX", "CCX", "SWAP"})

_GATE_ARITY = {"X": 1, "CX": 2, "CCX": 3, "SWAP": 2}


@dataclass(frozen=True)
class SeedSpec:
    """The shared encryption secret: substitution table plus mixing gates."""

    version: int
    sub_table: tuple[int, ...]
    mix_gates: tuple[GateOp, ...]


@dataclass(frozen=True)
class CipherText:
    """Encrypted bits (a multiple of 4) plus the pre-padding bit length."""

    bits: str
    orig_bit_len: int

    def __post_init__(self) -> None:
        if set(self.bits) - {"0", "1"}:
            raise ValueError("cipher bits must contain only 0/1")
        if len(self.bits) % CHUNK_BITS != 0:
            raise ValueError(
                f"cipher bit length {len(self.bits)} is not a multiple of {CHUNK_BITS}"
            )
        if not self.orig_bit_len <= len(self.bits) < self.orig_bit_len + CHUNK_BITS:
            raise ValueError(
                f"orig_bit_len {self.orig_bit_len} inconsistent with "
                f"{len(self.bits)} cipher bits"
            )


@dataclass(frozen=True)
class MixPermutation:
    """Action of the mixing gates on each 4-bit basis state; always derived."""

    map: tuple[int, ...]

    @classmethod
    def from_gates(cls, mix_gates: tuple[GateOp, ...]) -> "MixPermutation":
        return cls(tuple(mix_chunk(v, mix_gates) for v in range(TABLE_SIZE)))


def validate_seed(seed: SeedSpec) -> list[str]:
    """Check every seed invariant; returns a list of violations (empty = ok)."""
    violations: list[str] = []
    table = seed.sub_table
    if len(table) != TABLE_SIZE or sorted(table) != list(range(TABLE_SIZE)):
        violations.append("sub_table is not a permutation of 0..15")
    else:
        if any(table[table[i]] != i for i in range(TABLE_SIZE)):
            violations.append("sub_table is not self-inverse")
    bad_kinds = [g.kind for g in seed.mix_gates if g.kind not in CLASSICAL_GATE_KINDS]
    if bad_kinds:
        violations.append(f"non-classical mix gate kinds: {sorted(set(bad_kinds))}")
    if any(max(g.qubits) >= CHUNK_BITS for g in seed.mix_gates):
        violations.append("mix gate qubit index out of range for 4 qubits")
    if not violations:
        u = circuit_unitary(Circuit(CHUNK_BITS, seed.mix_gates))
        rounded = np.abs(u)
        if not (np.all((rounded < 1e-12) | (np.abs(rounded - 1.0) < 1e-12))
                and np.all(np.abs(rounded.sum(axis=0) - 1.0) < 1e-12)
                and np.all(np.abs(rounded.sum(axis=1) - 1.0) < 1e-12)):
            violations.append("mix gates do not form a permutation matrix")
        else:
            derived = MixPermutation.from_gates(seed.mix_gates)
            if sorted(derived.map) != list(range(TABLE_SIZE)):
                violations.append("derived mix action is not a permutation")
    return violations


def _check_seed_basics(seed: SeedSpec) -> None:
    table = seed.sub_table
    if len(table) != TABLE_SIZE or sorted(table) != list(range(TABLE_SIZE)):
        raise ValueError("invalid seed: sub_table is not a permutation of 0..15")
    if any(table[table[i]] != i for i in range(TABLE_SIZE)):
        raise ValueError("invalid seed: sub_table is not self-inverse")
    for g in seed.mix_gates:
        if g.kind not in CLASSICAL_GATE_KINDS:
            raise ValueError(f"invalid seed: non-classical mix gate {g.kind}")
        if max(g.qubits) >= CHUNK_BITS:
            raise ValueError(f"invalid seed: mix gate {g.qubits} exceeds 4 qubits")


def sub_bytes(nibble: int, table: tuple[int, ...]) -> int:
    """Replace a 4-bit value by its substitution table entry."""
    if not 0 <= nibble < TABLE_SIZE:
        raise ValueError(f"nibble out of range: {nibble}")
    return table[nibble]


def mix_chunk(nibble: int, mix_gates: tuple[GateOp, ...]) -> int:
    """Run a 4-bit basis state through the mixing gates on the simulator.

    Chunk bit 3 (leftmost in the string form) is qubit 3.  Classical gates
    keep basis states sharp, so the result is read back as the single
    surviving basis index.
    """
    if not 0 <= nibble < TABLE_SIZE:
        raise ValueError(f"nibble out of range: {nibble}")
    for g in mix_gates:
        if g.kind not in CLASSICAL_GATE_KINDS:
            raise ValueError(f"non-classical mix gate {g.kind}")
    state = run_circuit(Circuit(CHUNK_BITS, mix_gates), nibble)
    p = probabilities(state)
    out = int(p.argmax())
    if p[out] < 1.0 - 1e-9:
        raise ValueError("mix gates did not preserve the basis state")
    return out


def _rotl4(value: int, amount: int) -> int:
    amount %= CHUNK_BITS
    if amount == 0:
        return value
    return ((value << amount) | (value >> (CHUNK_BITS - amount))) & (TABLE_SIZE - 1)


def shift_chunk(nibble: int, position: int) -> int:
    """Left-rotate a chunk by (position mod 4) bit positions; 0 leaves it."""
    if position < 1:
        raise ValueError(f"position is 1-based, got {position}")
    return _rotl4(nibble, position % CHUNK_BITS)


def _pad_bits(bits: str) -> str:
    if not bits:
        raise ValueError("plaintext bits are empty")
    if set(bits) - {"0", "1"}:
        raise ValueError("plaintext must contain only 0/1")
    return bits + "0" * ((-len(bits)) % CHUNK_BITS)


def encrypt(bits: str, seed: SeedSpec) -> CipherText:
    """SubBytes, then the mixing gates, then the position rotation, per chunk.

    The plaintext is zero-padded on the right to a multiple of 4; chunk
    positions are 1-based, so the first chunk is rotated by one.
    """
    _check_seed_basics(seed)
    padded = _pad_bits(bits)
    out = []
    for pos in range(1, len(padded) // CHUNK_BITS + 1):
        chunk = int(padded[(pos - 1) * CHUNK_BITS: pos * CHUNK_BITS], 2)
        value = sub_bytes(chunk, seed.sub_table)
        value = mix_chunk(value, seed.mix_gates)
        value = shift_chunk(value, pos)
        out.append(format(value, f"0{CHUNK_BITS}b"))
    return CipherText("".join(out), len(bits))


def decrypt(ct: CipherText, seed: SeedSpec) -> str:
    """Invert each encryption step in reverse order and strip the padding."""
    _check_seed_basics(seed)
    if len(ct.bits) % CHUNK_BITS != 0:
        raise ValueError("cipher bit length is not a multiple of 4")
    inverse_mix = inverse_circuit(Circuit(CHUNK_BITS, seed.mix_gates)).ops
    out = []
    for pos in range(1, len(ct.bits) // CHUNK_BITS + 1):
        chunk = int(ct.bits[(pos - 1) * CHUNK_BITS: pos * CHUNK_BITS], 2)
        value = _rotl4(chunk, (-pos) % CHUNK_BITS)
        value = mix_chunk(value, inverse_mix)
        value = sub_bytes(value, seed.sub_table)
        out.append(format(value, f"0{CHUNK_BITS}b"))
    return "".join(out)[: ct.orig_bit_len]


def _classical_gate(nibble: int, g: GateOp) -> int:
    # Pure bit arithmetic; deliberately bypasses the simulator.
    if g.kind == "X":
        return nibble ^ (1 << g.qubits[0])
    if g.kind == "CX":
        c, t = g.qubits
        return nibble ^ (1 << t) if (nibble >> c) & 1 else nibble
    if g.kind == "CCX":
        c1, c2, t = g.qubits
        if (nibble >> c1) & 1 and (nibble >> c2) & 1:
            return nibble ^ (1 << t)
        return nibble
    if g.kind == "SWAP":
        a, b = g.qubits
        if ((nibble >> a) & 1) != ((nibble >> b) & 1):
            return nibble ^ ((1 << a) | (1 << b))
        return nibble
    raise ValueError(f"non-classical mix gate {g.kind}")


def classical_oracle_encrypt(bits: str, seed: SeedSpec) -> str:
    """Bit-level reference encryption that never touches the simulator."""
    _check_seed_basics(seed)
    padded = _pad_bits(bits)
    out = []
    for pos in range(1, len(padded) // CHUNK_BITS + 1):
        value = int(padded[(pos - 1) * CHUNK_BITS: pos * CHUNK_BITS], 2)
        value = seed.sub_table[value]
        for g in seed.mix_gates:
            value = _classical_gate(value, g)
        value = _rotl4(value, pos % CHUNK_BITS)
        out.append(format(value, f"0{CHUNK_BITS}b"))
    return "".join(out)


def keygen(rng_seed: int, n_mix_gates: int = 12) -> SeedSpec:
    """Generate a seed: a random involution table and random classical gates.

    Deterministic per rng_seed.  Regenerates if both the table and the
    derived mix action happen to be identity.
    """
    rng = np.random.default_rng(rng_seed)
    kinds = sorted(CLASSICAL_GATE_KINDS)
    while True:
        table = [-1] * TABLE_SIZE
        unassigned = list(range(TABLE_SIZE))
        while unassigned:
            i = unassigned.pop(0)
            pool = [i] + unassigned
            j = int(pool[rng.integers(0, len(pool))])
            table[i] = j
            table[j] = i
            if j != i:
                unassigned.remove(j)
        gates = []
        for _ in range(n_mix_gates):
            kind = kinds[int(rng.integers(0, len(kinds)))]
            qubits = tuple(
                int(q) for q in rng.choice(CHUNK_BITS, size=_GATE_ARITY[kind],
                                           replace=False)
            )
            gates.append(GateOp(kind, qubits))
        seed = SeedSpec(version=1, sub_table=tuple(table), mix_gates=tuple(gates))
        mix_map = MixPermutation.from_gates(seed.mix_gates).map
        if tuple(table) == tuple(range(TABLE_SIZE)) and mix_map == tuple(
                range(TABLE_SIZE)):
            continue
        return seed


def shannon_entropy(probs: np.ndarray) -> float:
    """Shannon entropy in bits of a discrete outcome distribution."""
    p = np.asarray(probs, dtype=float)
    p = p[p > 0.0]
    return float(-(p * np.log2(p)).sum())


def cipher_entropy_diag(ct: CipherText) -> float:
    """Largest per-chunk measurement entropy when re-preparing cipher chunks.

    Each 4-bit cipher chunk is loaded as a basis state and its outcome
    distribution measured; under the classical gate set every chunk is a
    sharp basis state, so the result is exactly 0.  Empty ciphertext gives 0.
    """
    worst = 0.0
    for k in range(0, len(ct.bits), CHUNK_BITS):
        value = int(ct.bits[k:k + CHUNK_BITS], 2)
        state = StateVector.basis(CHUNK_BITS, value)
        worst = max(worst, shannon_entropy(probabilities(state)))
    return worst
