"""Acceptance suite: one test per release criterion, with a printed verdict.

Criterion 7 (the template p-value ordering on the 100-input batch) is
implemented exactly as stated and is expected to fail: at the default
0/pi encoding the rotations-only template provably lands on the most
uniform histogram an integer count vector admits, so its p-value is
maximal rather than minimal.  The measured values are printed so the
failure is self-explanatory; the analysis lives in the project notes.
"""

import math
import time

import numpy as np

from qengines import (
    Circuit,
    GateOp,
    HashConfig,
    LETTER_A,
    MixPermutation,
    StateVector,
    apply_gate,
    bits_to_image,
    bucket_histogram,
    chi_squared_p,
    chi_squared_survival,
    cipher_entropy_diag,
    circuit_unitary,
    classical_oracle_encrypt,
    collision_rate,
    decrypt,
    encrypt,
    evaluate_batch,
    hash_bits,
    image_to_bits,
    keygen,
    probabilities,
    read_pbm,
    run_circuit,
    rx,
    validate_seed,
    write_pbm,
    x,
)

from helpers import chi2_sf_simpson, collision_rate_oracle, xor_halves

ALL_8BIT = [format(i, "08b") for i in range(256)]


def verdict(number: int, ok: bool, detail: str) -> None:
    print(f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}")


def random_circuit(n_qubits, n_gates, rng):
    arities = {"X": 1, "H": 1, "RX": 1, "CX": 2, "CCX": 3, "SWAP": 2}
    kinds = [k for k, a in arities.items() if a <= n_qubits]
    ops = []
    for _ in range(n_gates):
        kind = kinds[int(rng.integers(0, len(kinds)))]
        qubits = tuple(int(q) for q in rng.choice(n_qubits, size=arities[kind],
                                                  replace=False))
        angle = float(rng.uniform(-math.pi, math.pi)) if kind == "RX" else None
        ops.append(GateOp(kind, qubits, angle=angle))
    return Circuit(n_qubits, tuple(ops))


def test_criterion_1_simulator_correctness():
    start = time.perf_counter()
    rng = np.random.default_rng(1)
    worst_unitarity = 0.0
    worst_norm = 0.0
    for _ in range(1000):
        n = int(rng.integers(2, 6))
        c = random_circuit(n, 10, rng)
        u = circuit_unitary(c)
        dim = 1 << n
        worst_unitarity = max(worst_unitarity,
                              float(np.abs(u.conj().T @ u - np.eye(dim)).max()))
        s = run_circuit(c, int(rng.integers(0, dim)))
        worst_norm = max(worst_norm, abs(s.norm() ** 2 - 1.0))
    worst_prob = 0.0
    for _ in range(50):
        amps = rng.normal(size=8) + 1j * rng.normal(size=8)
        amps /= np.linalg.norm(amps)
        target = int(rng.integers(0, 3))
        a = apply_gate(StateVector(3, amps.copy()), rx(math.pi, target))
        b = apply_gate(StateVector(3, amps.copy()), x(target))
        worst_prob = max(worst_prob,
                         float(np.abs(probabilities(a) - probabilities(b)).max()))
    elapsed = time.perf_counter() - start
    ok = (worst_unitarity < 1e-10 and worst_norm < 1e-10
          and worst_prob < 1e-10 and elapsed < 10.0)
    verdict(1, ok, f"unitarity dev {worst_unitarity:.2e}, norm dev "
                   f"{worst_norm:.2e}, RX(pi)-vs-X dev {worst_prob:.2e}, "
                   f"runtime {elapsed:.1f}s")
    assert worst_unitarity < 1e-10
    assert worst_norm < 1e-10
    assert worst_prob < 1e-10
    assert elapsed < 10.0


def test_criterion_2_hash_determinism_and_width():
    start = time.perf_counter()
    templates = ("PQC1", "PQC2", "PQC3", "PQC4", "PQC5")
    first = {t: [hash_bits(b, HashConfig(t)) for b in ALL_8BIT] for t in templates}
    second = {t: [hash_bits(b, HashConfig(t)) for b in ALL_8BIT] for t in templates}
    elapsed = time.perf_counter() - start
    identical = all(first[t] == second[t] for t in templates)
    width_ok = all(len(v) == 4 for t in templates for v in first[t])
    ok = identical and width_ok and elapsed < 30.0
    verdict(2, ok, f"5 templates x 256 inputs, two runs identical={identical}, "
                   f"width 4={width_ok}, runtime {elapsed:.1f}s")
    assert identical
    assert width_ok
    assert elapsed < 30.0


def test_criterion_3_rotations_only_closed_form():
    cfg = HashConfig("PQC4")
    mismatches = sum(hash_bits(b, cfg) != xor_halves(b) for b in ALL_8BIT)
    verdict(3, mismatches == 0,
            f"XOR-of-halves oracle over 256 inputs, {mismatches} mismatches")
    assert mismatches == 0


def test_criterion_4_collision_rate_closed_forms():
    uniform = bucket_histogram([format(v, "04b") for v in range(16)] * 10, 4)
    cr_uniform = collision_rate(uniform)
    single = bucket_histogram(["0000"] * 100, 4)
    cr_single = collision_rate(single)
    oracle = collision_rate_oracle([100] + [0] * 15)
    ok = cr_uniform == 0.625 and abs(cr_single - oracle) < 1e-9
    verdict(4, ok, f"uniform CR={cr_uniform}, single-bucket CR={cr_single:.6f} "
                   f"vs oracle {oracle:.6f}")
    assert cr_uniform == 0.625
    assert abs(cr_single - oracle) < 1e-9
    assert abs(oracle - 1.9035) < 1e-4


def test_criterion_5_chi_squared_contract():
    uniform = bucket_histogram([format(v, "04b") for v in range(16)] * 10, 4)
    _, p_uniform = chi_squared_p(uniform)
    single = bucket_histogram(["0000"] * 100, 4)
    chi2_single, p_single = chi_squared_p(single)
    sf_dev = max(abs(chi_squared_survival(v, 15) - chi2_sf_simpson(v, 15))
                 for v in (0.0, 10.0, 25.0, 50.0))
    ok = (p_uniform >= 0.999999 and abs(chi2_single - 1500.0) < 1e-9
          and p_single <= 1e-12 and sf_dev < 1e-6)
    verdict(5, ok, f"uniform p={p_uniform}, single chi2={chi2_single}, "
                   f"single p={p_single:.2e}, sf-vs-integration dev {sf_dev:.2e}")
    assert p_uniform >= 0.999999
    assert abs(chi2_single - 1500.0) < 1e-9
    assert p_single <= 1e-12
    assert sf_dev < 1e-6


def test_criterion_6_collision_rate_trend():
    rows = []
    ok = True
    for template in ("PQC1", "PQC2", "PQC3", "PQC4", "PQC5"):
        rates = [evaluate_batch(HashConfig(template), size,
                                input_width=8).collision_rate
                 for size in (25, 50, 100)]
        rows.append(f"{template}={rates[0]:.3f}/{rates[1]:.3f}/{rates[2]:.3f}")
        ok = ok and rates[0] <= rates[1] <= rates[2]
    verdict(6, ok, "CR at 25/50/100: " + ", ".join(rows))
    assert ok


def test_criterion_7_template_p_value_ordering():
    p_values = {
        template: evaluate_batch(HashConfig(template), 100,
                                 input_width=8).p_value
        for template in ("PQC1", "PQC2", "PQC3", "PQC4", "PQC5")
    }
    others_min = min(p_values[t] for t in ("PQC1", "PQC2", "PQC3", "PQC5"))
    ok = p_values["PQC4"] < others_min
    verdict(7, ok, "p-values " + ", ".join(
        f"{t}={p_values[t]:.3e}" for t in sorted(p_values))
        + f"; PQC4 strictly lowest={ok}")
    assert p_values["PQC4"] < others_min


def test_criterion_8_image_round_trip(tmp_path):
    start = time.perf_counter()
    original_path = tmp_path / "a.pbm"
    original_path.write_bytes(write_pbm(LETTER_A))
    original_bytes = original_path.read_bytes()
    bits = image_to_bits(read_pbm(original_bytes))
    failures = 0
    for s in range(100):
        seed = keygen(s)
        restored = decrypt(encrypt(bits, seed), seed)
        restored_path = tmp_path / f"restored_{s}.pbm"
        restored_path.write_bytes(write_pbm(bits_to_image(restored, 10, 10)))
        if restored_path.read_bytes() != original_bytes:
            failures += 1
    elapsed = time.perf_counter() - start
    ok = failures == 0 and elapsed < 20.0
    verdict(8, ok, f"100 seeds, {failures} round-trip failures, "
                   f"runtime {elapsed:.1f}s")
    assert failures == 0
    assert elapsed < 20.0


def test_criterion_9_oracle_equivalence():
    mismatches = 0
    for s in range(100):
        seed = keygen(s)
        for v in range(16):
            bits = format(v, "04b")
            if encrypt(bits, seed).bits != classical_oracle_encrypt(bits, seed):
                mismatches += 1
    rng = np.random.default_rng(9)
    seed = keygen(123)
    for _ in range(1000):
        bits = "".join(str(b) for b in rng.integers(0, 2, size=64))
        if encrypt(bits, seed).bits != classical_oracle_encrypt(bits, seed):
            mismatches += 1
    verdict(9, mismatches == 0,
            f"16 nibbles x 100 seeds + 1000 random 64-bit inputs, "
            f"{mismatches} mismatches")
    assert mismatches == 0


def test_criterion_10_zero_entropy():
    worst = 0.0
    image_bits = image_to_bits(LETTER_A)
    rng = np.random.default_rng(10)
    for s in range(20):
        seed = keygen(s)
        inputs = [image_bits] + [
            "".join(str(b) for b in rng.integers(0, 2, size=32))
            for _ in range(5)
        ]
        for bits in inputs:
            worst = max(worst, cipher_entropy_diag(encrypt(bits, seed)))
    verdict(10, worst == 0.0, f"max per-chunk entropy {worst}")
    assert worst == 0.0


def test_criterion_11_seed_validity_sweep():
    bad = 0
    for s in range(500):
        seed = keygen(s)
        table = seed.sub_table
        involution = (sorted(table) == list(range(16))
                      and all(table[table[i]] == i for i in range(16)))
        perm = sorted(MixPermutation.from_gates(seed.mix_gates).map) == list(range(16))
        if not involution or not perm or validate_seed(seed):
            bad += 1
    verdict(11, bad == 0, f"500 generated seeds, {bad} invalid")
    assert bad == 0
