"""
Pairwise CNOT transversality between two different codes
========================================================

Two stations running *different* CSS codes can still implement a
logical CNOT by physical pairwise CNOTs, provided the control code's
X-check group sits inside the target's and the two encodings agree
coset-wise.  This script checks the bundled pair algebraically, then
confirms the verdict by brute-force state-vector simulation, and shows
two ways the property breaks: mismatched logical dimensions, and a
re-encoded target.
"""

import numpy as np

from csspair import (
    BitMatrix,
    check_cnot_transversal,
    find_cnot_encoding,
    load_css,
    oracle_cnot,
    with_encoding,
)

qa = load_css("fixtures/pair7_station_a.code")
qb = load_css("fixtures/pair7_station_b.code")
print("control:", qa, " target:", qb)

rep = check_cnot_transversal(qa, qb, mode="coset")
print("algebraic verdict:", rep.verdict, rep.conditions)

res = oracle_cnot(qa, qb)
print(f"oracle: ok={res.ok} over {res.pairs_checked} logical basis pairs, "
      f"max amplitude deviation {res.max_deviation:.2e}")

# Failure mode 1: nesting the control space inside the target is not
# enough; the logical dimensions no longer match.
q_ce = load_css("fixtures/pair7_counterexample_b.code")
rep = check_cnot_transversal(qa, q_ce)
print("\nnested counterexample:", rep.verdict, rep.conditions,
      f"(k {rep.details['k_a']} vs {rep.details['k_b']})")

# Failure mode 2: same spaces, different encoding. Swapping the
# target's representative rows breaks the coset condition, and the
# oracle produces the smallest failing logical input pair.
swapped = with_encoding(qb, BitMatrix(qb.enc_a.a[::-1].copy()))
rep = check_cnot_transversal(qa, swapped)
res = oracle_cnot(qa, swapped)
print("\nswapped target encoding:", rep.verdict,
      "witness (psi_a, psi_b):", res.witness)

# The damage is repairable: search for one representative matrix both
# codes can share.
enc = find_cnot_encoding(qa, swapped)
print("shared encoding found:", enc.row_strings())
fixed = oracle_cnot(with_encoding(qa, enc), with_encoding(swapped, enc))
print("re-encoded pair passes the oracle:", fixed.ok)
