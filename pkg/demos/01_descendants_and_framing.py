"""Descendant sets and framing: the objects everything else is built on.

A coalition of fingerprint holders can forge any word assembled
position-by-position from their own words.  A code is c-frameproof when
no coalition of size <= c can forge a codeword belonging to someone
outside the coalition.
"""

from frameproof import (
    descendant_contains,
    enumerate_descendants,
    is_frameproof_naive,
    make_code,
)

# Two holders compare their length-4 fingerprints.
alice = (0, 1, 1, 0)
bob = (1, 1, 0, 0)
print("alice:", alice)
print("bob:  ", bob)

forgeries = sorted(enumerate_descendants([alice, bob]))
print(f"\ntogether they can assemble {len(forgeries)} words:")
for w in forgeries:
    print("  ", w)

# Whoever holds (0, 1, 0, 0) is in trouble: it is a descendant.
victim = (0, 1, 0, 0)
print("\ncan they frame", victim, "->", descendant_contains([alice, bob], victim))

# A verifier makes the same judgement for a whole code at once.
code = make_code(4, 2, [alice, bob, victim])
report = is_frameproof_naive(code, 2)
print("\nis the 3-word code 2-frameproof?", report.verdict)
print("witness coalition:", report.witness.coalition)
print("framed word:      ", report.witness.framed_word)

# Dropping the victim leaves a code nobody inside can abuse.
safe = make_code(4, 2, [alice, bob])
print("\nwithout the victim:", is_frameproof_naive(safe, 2).verdict)
