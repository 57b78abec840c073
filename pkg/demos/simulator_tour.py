"""A walk through the statevector simulator.

Run with:  python demos/simulator_tour.py
"""

import math

import numpy as np

from qengines import (
    Circuit,
    NoiseModel,
    apply_gate,
    circuit_unitary,
    cx,
    h,
    inverse_circuit,
    noisy_sample,
    probabilities,
    run_circuit,
    rx,
    sample,
    x,
)

print("=== Basis states and gates ===")
print("Qubit 0 is the least significant bit of a basis index, so on two")
print("qubits |10> means q1=1, q0=0, i.e. index 2.\n")

bell = Circuit(2, (h(0), cx(0, 1)))
state = run_circuit(bell, 0)
print("H then CX from |00> gives the maximally correlated pair:")
for i, p in enumerate(probabilities(state)):
    if p > 1e-12:
        print(f"  |{i:02b}>  probability {p:.3f}")

print("\n=== Sampling is seeded and reproducible ===")
counts = sample(state, 1000, rng_seed=7)
print(f"1000 shots, seed 7: {counts}")
counts_again = sample(run_circuit(bell, 0), 1000, rng_seed=7)
print(f"same seed again:    {counts_again}  (identical: {counts == counts_again})")

print("\n=== Rotations ===")
for frac in (0.0, 0.25, 0.5, 1.0):
    s = run_circuit(Circuit(1, (rx(frac * math.pi, 0),)), 0)
    p1 = probabilities(s)[1]
    print(f"RX({frac:.2f}*pi)|0>: P(1) = {p1:.4f}")
print("A half turn acts like X up to an unobservable phase.")

print("\n=== Every circuit is reversible ===")
c = Circuit(3, (h(0), rx(0.7, 1), cx(0, 2), x(1), cx(1, 0)))
forward = run_circuit(c, 0)
undone = forward
for op in inverse_circuit(c).ops:
    apply_gate(undone, op)
print(f"forward then inverse returns to |000>: P(0) = {probabilities(undone)[0]:.12f}")

u = circuit_unitary(c)
dev = np.abs(u.conj().T @ u - np.eye(8)).max()
print(f"extracted 8x8 matrix is unitary to {dev:.2e}")

print("\n=== Noise ===")
clean = noisy_sample(Circuit(1, (x(0),)), 0, 1000, NoiseModel(0.0, 0.0), rng_seed=1)
noisy = noisy_sample(Circuit(1, (x(0),)), 0, 1000, NoiseModel(0.0, 0.1), rng_seed=1)
print(f"X|0> sampled cleanly:            {clean}")
print(f"with 10% readout flips:          {noisy}")
depol = noisy_sample(Circuit(2, (h(0), cx(0, 1))), 0, 500,
                     NoiseModel(0.05, 0.0), rng_seed=2)
print(f"correlated pair, 5% depolarizing: {depol}")
