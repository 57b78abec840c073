"""Bitstring hashing through small parameterized circuits.

An input bitstring is chopped into blocks of n_qubits bits.  Each block
becomes one encoding layer of RX rotations: bit value 1 selects the theta
angle, bit value 0 the phi angle, and bit j of a block lands on qubit
(n_qubits - 1 - j).  The first block uses (theta1, phi1), every later
block (theta2, phi2).  After each encoding layer the chosen template's
entangler block is appended.  The hash is the most likely measurement
outcome, printed most significant qubit first.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .sim import (
    Circuit,
    GateOp,
    NoiseModel,
    cx,
    format_bits,
    h,
    noisy_sample,
    probabilities,
    run_circuit,
    rx,
)

TEMPLATES = ("PQC1", "PQC2", "PQC3", "PQC4", "PQC5")

MODE_EXACT = "exact"
MODE_SAMPLED = "sampled"


@dataclass(frozen=True)
class HashConfig:
    """Hashing parameters: template, width, encoding angles, execution mode."""

    template: str
    n_qubits: int = 4
    theta1: float = math.pi
    phi1: float = 0.0
    theta2: float = math.pi
    phi2: float = 0.0
    mode: str = MODE_EXACT
    shots: int = 1000
    rng_seed: int = 0
    noise: NoiseModel | None = None

    def __post_init__(self) -> None:
        if self.template not in TEMPLATES:
            raise ValueError(f"unknown template {self.template!r}")
        if not 1 <= self.n_qubits <= 8:
            raise ValueError(f"n_qubits must be in [1, 8], got {self.n_qubits}")
        if self.mode not in (MODE_EXACT, MODE_SAMPLED):
            raise ValueError(f"mode must be 'exact' or 'sampled', got {self.mode!r}")
        if self.mode == MODE_SAMPLED and self.shots < 1:
            raise ValueError(f"shots must be >= 1, got {self.shots}")


def to_bitstring(data: bytes | int, width: int) -> str:
    """Convert bytes or a non-negative integer to a fixed-width bitstring.

    Integers are rendered big-endian and left-padded with zeros; bytes are
    concatenated most significant bit first, then left-padded.  Values that
    do not fit in width bits raise ValueError.
    """
    if width < 1:
        raise ValueError(f"width must be >= 1, got {width}")
    if isinstance(data, (bytes, bytearray)):
        bits = "".join(format(b, "08b") for b in data)
        if len(bits) > width:
            raise ValueError(f"{len(data)} bytes do not fit in {width} bits")
        return bits.rjust(width, "0")
    value = int(data)
    if value < 0:
        raise ValueError(f"value must be non-negative, got {value}")
    if value.bit_length() > width:
        raise ValueError(f"{value} does not fit in {width} bits")
    return format(value, f"0{width}b")


def entangler_ops(template: str, n_qubits: int) -> list[GateOp]:
    """The fixed gate block a template appends after each encoding layer.

    PQC1: a Hadamard on every qubit followed by a CX ring; PQC2: a CX
    chain; PQC3: CX between every qubit pair; PQC4: nothing (rotations
    only); PQC5: a CX ring followed by the reverse-direction ring.
    """
    if template not in TEMPLATES:
        raise ValueError(f"unknown template {template!r}")
    n = n_qubits
    ops: list[GateOp] = []
    if template == "PQC1":
        ops += [h(q) for q in range(n)]
        if n >= 2:
            ops += [cx(i, (i + 1) % n) for i in range(n)]
    elif template == "PQC2":
        ops += [cx(i, i + 1) for i in range(n - 1)]
    elif template == "PQC3":
        for i in range(n):
            for j in range(i + 1, n):
                ops.append(cx(i, j))
    elif template == "PQC5" and n >= 2:
        ops += [cx(i, (i + 1) % n) for i in range(n)]
        ops += [cx(i, (i - 1) % n) for i in range(n)]
    return ops


def _blocks(input_bits: str, n_qubits: int) -> list[str]:
    if not input_bits:
        raise ValueError("input bitstring is empty")
    if set(input_bits) - {"0", "1"}:
        raise ValueError(f"input must contain only 0/1, got {input_bits!r}")
    pad = (-len(input_bits)) % n_qubits
    padded = input_bits + "0" * pad
    return [padded[k:k + n_qubits] for k in range(0, len(padded), n_qubits)]


def build_hash_circuit(input_bits: str, cfg: HashConfig) -> Circuit:
    """Build the encoding circuit for a bitstring.

    The input is zero-padded on the right to a multiple of n_qubits and
    split into blocks; block k is one RX layer (angles from theta1/phi1
    for block 0, theta2/phi2 afterwards) followed by the template's
    entangler block.
    """
    n = cfg.n_qubits
    ops: list[GateOp] = []
    for k, block in enumerate(_blocks(input_bits, n)):
        theta, phi = (cfg.theta1, cfg.phi1) if k == 0 else (cfg.theta2, cfg.phi2)
        for j, bit in enumerate(block):
            ops.append(rx(theta if bit == "1" else phi, n - 1 - j))
        ops += entangler_ops(cfg.template, n)
    return Circuit(n, tuple(ops))


def hash_bits(input_bits: str, cfg: HashConfig) -> str:
    """Hash a bitstring to an n_qubits-wide output.

    Exact mode takes the argmax of the final state's probabilities;
    sampled mode takes the argmax of noisy shot counts.  Ties break toward
    the smallest basis index, so exact mode is fully deterministic.
    """
    circuit = build_hash_circuit(input_bits, cfg)
    if cfg.mode == MODE_EXACT:
        p = probabilities(run_circuit(circuit, 0))
        index = int(p.argmax())
    else:
        noise = cfg.noise if cfg.noise is not None else NoiseModel()
        counts = noisy_sample(circuit, 0, cfg.shots, noise, cfg.rng_seed)
        best = max(counts.values())
        index = min(k for k, v in counts.items() if v == best)
    return format_bits(index, cfg.n_qubits)


def hash_batch(inputs: list[str], cfg: HashConfig) -> list[str]:
    """Hash a list of bitstrings, preserving order."""
    if not inputs:
        raise ValueError("empty input batch")
    return [hash_bits(bits, cfg) for bits in inputs]
