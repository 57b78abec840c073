"""Hashing bitstrings through parameterized circuits.

Run with:  python demos/hashing_tour.py
"""

from qengines import (
    HashConfig,
    TEMPLATES,
    build_hash_circuit,
    hash_batch,
    hash_bits,
    to_bitstring,
)

print("=== Encoding ===")
print("Each block of 4 input bits becomes one layer of RX rotations:")
print("bit 1 -> theta (default pi), bit 0 -> phi (default 0), and bit j of")
print("a block lands on qubit 3-j.  The hash is the most likely outcome.\n")

cfg = HashConfig("PQC4")
circuit = build_hash_circuit("1001", cfg)
print("input 1001 encodes as:")
for op in circuit.ops:
    print(f"  RX({op.angle:.3f}) on qubit {op.qubits[0]}")

print("\n=== Hashes of a few inputs, per template ===")
inputs = ["00000000", "01100011", "11110000", "11111111"]
header = "input     " + "  ".join(f"{t:>5}" for t in TEMPLATES)
print(header)
for bits in inputs:
    row = "  ".join(f"{hash_bits(bits, HashConfig(t)):>5}" for t in TEMPLATES)
    print(f"{bits}  {row}")

print("\nThe rotations-only template PQC4 reduces to XOR of the two input")
print("halves at the default angles; entangled templates mix harder.")

print("\n=== Determinism ===")
cfg = HashConfig("PQC3")
once = hash_batch([to_bitstring(i, 8) for i in range(10)], cfg)
twice = hash_batch([to_bitstring(i, 8) for i in range(10)], cfg)
print(f"first ten integer hashes:  {once}")
print(f"recomputed, identical:     {once == twice}")

print("\n=== Single-bit sensitivity ===")
base = "01100011"
cfg = HashConfig("PQC3")
print(f"hash({base}) = {hash_bits(base, cfg)}")
for i in range(8):
    flipped = base[:i] + ("1" if base[i] == "0" else "0") + base[i + 1:]
    print(f"flip bit {i}: hash({flipped}) = {hash_bits(flipped, cfg)}")
