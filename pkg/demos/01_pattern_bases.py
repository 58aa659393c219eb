"""Building pattern bases from the elementary factors.

A pattern bit vector of length 2**n encodes a Boolean function on n
bits; bit i of the vector is f(i), printed MSB-first.  A pattern basis
is a list of 2**n such vectors in which the XOR of any two members has
exactly half its bits set.  The two elementary bases

    B1 = (00, 01)                   rank 1
    Q2 = (0001, 0010, 0100, 1000)   rank 2

combine under the block product into bases of any rank up to 6.
Run with: python demos/01_pattern_bases.py
"""

from basisket import (
    PatternVector,
    build_basis_from_recipe,
    builtin_basis,
    class_rho,
    hamming_distance,
    pattern_product,
    validate_basis,
)

# The elementary bases.
for kind in ("B1", "Q2"):
    basis = builtin_basis(kind)
    print(f"{kind}: {[str(m) for m in basis.members]}")

# The block product writes one copy of the right vector per bit of the
# left vector, negated wherever the left bit is 1.
p = PatternVector.parse("0001")
q = PatternVector.parse("1000")
print(f"\n{p} (.) {q} = {pattern_product(p, q)}")

# Multiplying two bases member-by-member gives a new basis whose
# orthogonality is inherited from the factors.
basis = build_basis_from_recipe(["Q2", "Q2"])
print(f"\nQ2 x Q2 -> rank {basis.rank}, {len(basis.members)} members "
      f"of length {basis.length}:")
for k, member in enumerate(basis.members):
    print(f"  r{k:<2} {member}")

violation = validate_basis(basis.members)
print(f"\nvalidation: {'OK' if violation is None else violation}")

# Every pair of members sits at Hamming distance exactly half the length.
d01 = hamming_distance(basis.members[0], basis.members[1])
print(f"distance between r0 and r1: {d01} (= length / 2)")

# Pure-Q2 bases have a uniform zero count rho; every member of the
# rank-4 basis has exactly ten 0 bits.  The all-ones function therefore
# sits at distance rho from every member at once.
print(f"\nzero count of the rank-4 pure-Q2 class: {class_rho(basis)}")
for recipe in (["Q2"], ["Q2", "Q2"], ["Q2", "Q2", "Q2"]):
    print(f"  rho({'*'.join(recipe)}) = {class_rho(build_basis_from_recipe(recipe))}")
