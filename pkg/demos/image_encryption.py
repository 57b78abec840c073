"""Encrypting a tiny bitmap with the reversible-gate chunk cipher.

Run with:  python demos/image_encryption.py
"""

from qengines import (
    LETTER_A,
    bits_to_image,
    cipher_entropy_diag,
    classical_oracle_encrypt,
    decrypt,
    encrypt,
    image_to_bits,
    keygen,
    render_ascii,
    validate_seed,
)

print("=== The shared seed ===")
seed = keygen(rng_seed=7)
print(f"substitution table (self-inverse): {list(seed.sub_table)}")
print("mixing gates:",
      ", ".join(f"{g.kind}({','.join(map(str, g.qubits))})"
                for g in seed.mix_gates))
print(f"seed validates cleanly: {validate_seed(seed) == []}")

print("\n=== Plaintext ===")
print(render_ascii(LETTER_A))
bits = image_to_bits(LETTER_A)
print(f"{len(bits)} bits, processed as {len(bits) // 4} chunks of 4.")

print("\n=== Encrypt ===")
print("Per chunk: substitute, run the mixing gates on a 4-qubit basis")
print("state, then rotate left by the chunk position mod 4.")
ct = encrypt(bits, seed)
print(render_ascii(bits_to_image(ct.bits, 10, 10)))
mismatch = sum(a != b for a, b in zip(bits, ct.bits))
print(f"{mismatch} of 100 pixels differ from the plaintext.")

print("\nThe bit-level reference path agrees with the simulator path:",
      classical_oracle_encrypt(bits, seed) == ct.bits)
print("Re-measuring the cipher chunks finds sharp basis states, so the")
print(f"diagnostic entropy is {cipher_entropy_diag(ct)} bits: the classical")
print("gate set never creates superposition.")

print("\n=== Decrypt ===")
print("Rotate right, run the gates in reverse order, substitute again with")
print("the same self-inverse table.")
restored = decrypt(ct, seed)
print(render_ascii(bits_to_image(restored, 10, 10)))
print(f"round trip exact: {restored == bits}")

print("\n=== The seed matters ===")
wrong = keygen(rng_seed=8)
garbled = decrypt(ct, wrong)
print(render_ascii(bits_to_image(garbled, 10, 10)))
print(f"decrypting with a different seed restores the image: {garbled == bits}")
