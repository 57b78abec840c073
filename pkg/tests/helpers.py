"""Independent oracles used to cross-check the library.

These deliberately avoid the library's own code paths: hash oracles
propagate classical bits or Z/X basis labels by hand, the chi-squared
oracle integrates the density with Simpson's rule, and the collision-rate
oracle evaluates the defining formula longhand.
"""

import math

# Entangler topologies for 4 qubits, duplicated literally so the tests pin
# them down as (control, target) pairs rather than importing the library's.
ENTANGLER_PAIRS = {
    "PQC2": [(0, 1), (1, 2), (2, 3)],
    "PQC3": [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
    "PQC4": [],
    "PQC5": [(0, 1), (1, 2), (2, 3), (3, 0), (0, 3), (1, 0), (2, 1), (3, 2)],
}


def xor_halves(bits8: str) -> str:
    """Closed form for the rotations-only template on 8-bit input."""
    hi, lo = bits8[:4], bits8[4:]
    return "".join(str(int(a) ^ int(b)) for a, b in zip(hi, lo))


def _blocks(bits: str, n: int) -> list[str]:
    padded = bits + "0" * ((-len(bits)) % n)
    return [padded[k:k + n] for k in range(0, len(padded), n)]


def classical_hash_oracle(bits: str, template: str, n: int = 4) -> str:
    """Bit-propagation hash for the CX-only templates at theta=pi, phi=0."""
    state = [0] * n
    for block in _blocks(bits, n):
        for j, ch in enumerate(block):
            if ch == "1":
                state[n - 1 - j] ^= 1
        for c, t in ENTANGLER_PAIRS[template]:
            state[t] ^= state[c]
    return "".join(str(state[q]) for q in reversed(range(n)))


def pqc1_hash_oracle(bits: str, n: int = 4) -> str:
    """Label-propagation hash for the Hadamard-plus-ring template at defaults.

    Tracks each qubit as one of '0', '1', '+', '-'.  A half-turn X rotation
    flips Z labels and fixes X labels; Hadamard swaps the bases; a CX whose
    target is '-' toggles an X-basis control (phase kickback) and does
    nothing observable otherwise.  Qubits ending in the X basis measure as
    a uniform coin, so the smallest-index tie break reads them as 0.
    """
    flip_z = {"0": "1", "1": "0", "+": "+", "-": "-"}
    hadamard = {"0": "+", "1": "-", "+": "0", "-": "1"}
    state = ["0"] * n
    for block in _blocks(bits, n):
        for j, ch in enumerate(block):
            if ch == "1":
                state[n - 1 - j] = flip_z[state[n - 1 - j]]
        state = [hadamard[s] for s in state]
        for i in range(n):
            c, t = i, (i + 1) % n
            if state[t] == "-" and state[c] in "+-":
                state[c] = "+" if state[c] == "-" else "-"
            elif state[t] in "01":
                if state[c] in "+-":
                    raise AssertionError("oracle does not cover mixed bases")
                if state[c] == "1":
                    state[t] = flip_z[state[t]]
    final = ["0" if s in "+-" else s for s in state]
    return "".join(final[q] for q in reversed(range(n)))


def chi2_sf_simpson(x: float, df: int, step: float = 1e-3) -> float:
    """Survival function of chi-squared by Simpson integration of the pdf."""
    if x <= 0.0:
        return 1.0
    a = df / 2.0
    norm = 1.0 / (2.0 ** a * math.gamma(a))

    def pdf(t: float) -> float:
        if t <= 0.0:
            return 0.0
        return norm * t ** (a - 1.0) * math.exp(-t / 2.0)

    n = int(round(x / step))
    if n % 2:
        n += 1
    h = x / n
    acc = pdf(0.0) + pdf(x)
    acc += 4.0 * sum(pdf(h * k) for k in range(1, n, 2))
    acc += 2.0 * sum(pdf(h * k) for k in range(2, n, 2))
    return 1.0 - acc * h / 3.0


def collision_rate_oracle(counts) -> float:
    """Longhand evaluation of (f_avg + stdev) / buckets."""
    buckets = len(counts)
    total = sum(counts)
    f_avg = total / buckets
    variance = sum((c - f_avg) ** 2 for c in counts) / buckets
    return (f_avg + math.sqrt(variance)) / buckets


def hamming(a: str, b: str) -> int:
    return sum(x != y for x, y in zip(a, b))
