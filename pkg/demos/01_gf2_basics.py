"""
Binary linear algebra in csspair
================================

Everything downstream (codes, transversality verdicts, decoders) rests
on exact GF(2) linear algebra: row reduction, dual bases, subspace
tests and coset representatives.  This script walks through them on
the 7-bit matrices used by the bundled code pair.
"""

from csspair import BitMatrix, complement_basis, dual_basis, rref, subspace_leq
from csspair.gf2 import right_identity_transform

# A generator matrix, written the way you would by hand.
G = BitMatrix.from_strings([
    "1100000",
    "0101111",
    "0011011",
    "1011100",
])
R, pivots, rank = rref(G)
print("G =")
print("\n".join(G.row_strings()))
print(f"rank {rank}, pivot columns {[p + 1 for p in pivots]} (1-indexed)")

# The dual code: every vector orthogonal to all rows of G.
D = dual_basis(G)
print("\ndual basis (should have 7 - 4 = 3 rows):")
print("\n".join(D.row_strings()))
print("G @ D^T == 0:", (G @ D.T).is_zero())

# Subspace containment drives every transversality condition.
checks = BitMatrix.from_strings(["1100000", "0101111"])
print("\nchecks inside G's row space:", subspace_leq(checks, G))

# Coset representatives: which rows of G matter modulo the checks?
reps = complement_basis(checks, G)
print("representatives of G modulo the checks:")
print("\n".join(reps.row_strings()))

# Inverting a small binary matrix (used to repair encodings later).
U = BitMatrix.from_strings(["11", "01"])
W = right_identity_transform(U)
print("\nU, its inverse W, and W @ U:")
print(" ".join(U.row_strings()), "|", " ".join(W.row_strings()),
      "|", " ".join((W @ U).row_strings()))
