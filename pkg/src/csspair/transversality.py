"""Deciders for pairwise CNOT/CZ transversality of CSS codes.

A pair of CSS codes (code A controlling, code B targeted) implements a
logical CNOT by physical CNOTs on qubit pairs (i, n+i) exactly when

  * dual(C2) is contained in dual(C4), and
  * every row of A + B lies in dual(C4),

where A and B are the coset-representative matrices of the two codes.
The second condition is the coset-level form of "A equals B": only the
cosets of the representatives are physical, so representatives may
differ by dual(C4) vectors.  `strict` mode instead demands entrywise
A == B, which is sufficient but not necessary; `coset` mode is exact
and is what the state-vector oracle certifies.

For CZ the gate is diagonal, and transversality reduces to three
bilinear identities between generator matrices plus the pairing
condition A @ B^T = I.  Quantifying over whole subspaces is unneeded
because every exponent involved is bilinear: vanishing on generators
implies vanishing everywhere.

Every verdict produced here can be re-derived by brute force with
`oracle_cnot` / `oracle_cz`, which compare encode-then-gate against
gate-then-encode amplitude-wise on all logical basis pairs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import NamedTuple

import numpy as np

from . import gf2, statevec
from .codes import CssCode, logical_kets, make_css_from_stabilizers, with_encoding
from .errors import CapacityError, ContainmentError, DimensionMismatchError, SingularMatrixError
from .gf2 import BitMatrix

ORACLE_TOL = 1e-12

Witness = tuple[tuple[int, ...], tuple[int, ...]]


@dataclass
class TransversalityReport:
    """Outcome of one pairwise transversality check.

    verdict is the conjunction of the required condition flags (for the
    sufficient-condition check, the disjunction of the two branches).
    witness, when present, is the lexicographically smallest pair of
    logical basis vectors (psi_a, psi_b) on which the physical gate and
    the logical gate disagree.
    """

    gate: str
    verdict: bool
    conditions: dict[str, bool]
    mode: str | None = None
    details: dict = field(default_factory=dict)
    witness: Witness | None = None
    oracle_checked: bool = False
    oracle_ok: bool | None = None
    oracle_max_deviation: float | None = None

    def to_dict(self) -> dict:
        out = {
            "gate": self.gate,
            "verdict": self.verdict,
            "conditions": dict(self.conditions),
            "details": dict(self.details),
            "witness": None,
        }
        if self.mode is not None:
            out["mode"] = self.mode
        if self.witness is not None:
            out["witness"] = {
                "psi_a": "".join(map(str, self.witness[0])),
                "psi_b": "".join(map(str, self.witness[1])),
            }
        if self.oracle_checked:
            out["oracle"] = {
                "ok": self.oracle_ok,
                "max_amplitude_deviation": self.oracle_max_deviation,
            }
        return out


class OracleResult(NamedTuple):
    ok: bool
    witness: Witness | None
    max_deviation: float
    pairs_checked: int


def _orthogonal(m1: BitMatrix, m2: BitMatrix) -> bool:
    """True iff every row of m1 is orthogonal to every row of m2."""
    if m1.rows == 0 or m2.rows == 0:
        return True
    return (m1 @ m2.T).is_zero()


def _require_same_length(qa: CssCode, qb: CssCode) -> None:
    if qa.n != qb.n:
        raise DimensionMismatchError(f"block lengths differ: {qa.n} vs {qb.n}")


def check_cnot_transversal(qa: CssCode, qb: CssCode, mode: str = "coset") -> TransversalityReport:
    """Decide whether physical pairwise CNOT (qa control, qb target) is logical CNOT.

    mode="coset" checks the exact condition (rows of A + B inside
    dual(C4)); mode="strict" demands A == B entrywise.
    """
    if mode not in ("strict", "coset"):
        raise ValueError(f"unknown mode {mode!r}")
    _require_same_length(qa, qb)
    conditions: dict[str, bool] = {}
    details: dict = {"k_a": qa.k, "k_b": qb.k, "n": qa.n}
    k_match = qa.k == qb.k
    conditions["k_match"] = k_match
    containment = gf2.subspace_leq(qa.x_stab, qb.x_stab)
    conditions["C2perp_in_C4perp"] = containment
    witness: Witness | None = None
    enc_ok = True
    if k_match:
        if mode == "strict":
            enc_ok = qa.enc_a == qb.enc_a
            conditions["A_eq_B"] = enc_ok
        else:
            enc_ok = all(
                gf2.solve_row(qb.x_stab, (ra ^ rb)) is not None
                or not np.any(ra ^ rb)
                for ra, rb in zip(qa.enc_a.a, qb.enc_a.a)
            )
            conditions["A_plus_B_in_C4perp"] = enc_ok
    verdict = k_match and containment and enc_ok
    if k_match and not verdict:
        witness = _cnot_witness(qa, qb, containment)
    return TransversalityReport(
        gate="CNOT", verdict=verdict, conditions=conditions, mode=mode,
        details=details, witness=witness,
    )


def _cnot_witness(qa: CssCode, qb: CssCode, containment: bool) -> Witness | None:
    """Smallest (psi_a, psi_b) on which the physical CNOT goes wrong."""
    k = qa.k
    zeros = tuple([0] * k)
    if not containment:
        # Any dual(C2) vector outside dual(C4) spoils every input pair.
        return (zeros, zeros)
    diff = qa.enc_a.a ^ qb.enc_a.a
    for psi_a in product((0, 1), repeat=k):
        shift = (np.array(psi_a, dtype=np.uint8) @ diff) % 2 if k else np.zeros(qa.n, dtype=np.uint8)
        if np.any(shift) and gf2.solve_row(qb.x_stab, shift) is None:
            return (psi_a, zeros)
    return None  # strict-mode refusal without a physical failure


def check_cz_transversal(qa: CssCode, qb: CssCode) -> TransversalityReport:
    """Decide whether physical pairwise CZ acts as logical pairwise CZ.

    Symmetric in the two codes.  True iff dual(C2) is orthogonal to
    dual(C4), the representatives of each code are orthogonal to the
    other code's X-stabilizer group, and A @ B^T = I.
    """
    _require_same_length(qa, qb)
    conditions: dict[str, bool] = {}
    details: dict = {"k_a": qa.k, "k_b": qb.k, "n": qa.n}
    k_match = qa.k == qb.k
    conditions["k_match"] = k_match
    conditions["C2perp_orth_C4perp"] = _orthogonal(qa.x_stab, qb.x_stab)
    conditions["A_orth_C4perp"] = _orthogonal(qa.enc_a, qb.x_stab)
    conditions["C2perp_orth_B"] = _orthogonal(qa.x_stab, qb.enc_a)
    if k_match and qa.k > 0:
        conditions["ABt_is_identity"] = (qa.enc_a @ qb.enc_a.T) == BitMatrix.identity(qa.k)
    else:
        conditions["ABt_is_identity"] = k_match
    verdict = all(conditions.values())
    witness = None if verdict else _cz_witness(qa, qb) if k_match else None
    return TransversalityReport(
        gate="CZ", verdict=verdict, conditions=conditions, details=details, witness=witness,
    )


def _cz_witness(qa: CssCode, qb: CssCode) -> Witness | None:
    """Smallest (psi_a, psi_b) with a phase mismatch under pairwise CZ."""
    k = qa.k
    stab_cross_ok = _orthogonal(qa.x_stab, qb.x_stab)
    for psi_a in product((0, 1), repeat=k):
        pa = np.array(psi_a, dtype=np.uint8)
        x_a = (pa @ qa.enc_a.a) % 2 if k else np.zeros(qa.n, dtype=np.uint8)
        bad_a = qb.x_stab.rows > 0 and np.any((qb.x_stab.a @ x_a) % 2)
        for psi_b in product((0, 1), repeat=k):
            pb = np.array(psi_b, dtype=np.uint8)
            x_b = (pb @ qb.enc_a.a) % 2 if k else np.zeros(qb.n, dtype=np.uint8)
            bad_b = qa.x_stab.rows > 0 and np.any((qa.x_stab.a @ x_b) % 2)
            phase_bad = (int(x_a @ x_b) - int(pa @ pb)) % 2 == 1
            if (not stab_cross_ok) or bad_a or bad_b or phase_bad:
                return (psi_a, psi_b)
    return None


def check_cz_sufficient(qa: CssCode, qb: CssCode) -> TransversalityReport:
    """Containment-style sufficient conditions for CZ transversality.

    Branch 1: rows of A lie in C4 and C3 is contained in C2.
    Branch 2: C1 is contained in C4 and rows of B lie in C2.
    Either branch, together with A @ B^T = I, forces all the exact
    conditions of check_cz_transversal, so a true verdict here implies
    a true verdict there.  (For well-formed code pairs the implication
    is in fact an equivalence; this checker exists because whole-space
    containments are easier to audit by hand than the generator-level
    identities, and it reports which branch applies.)
    """
    _require_same_length(qa, qb)
    conditions: dict[str, bool] = {}
    details: dict = {"k_a": qa.k, "k_b": qb.k, "n": qa.n}
    k_match = qa.k == qb.k
    conditions["k_match"] = k_match
    a_in_c4 = _orthogonal(qa.enc_a, qb.x_stab)
    c3_in_c2 = gf2.subspace_leq(qb.c1.gen, qa.c2.gen)
    c1_in_c4 = gf2.subspace_leq(qa.c1.gen, qb.c2.gen)
    b_in_c2 = _orthogonal(qa.x_stab, qb.enc_a)
    if k_match and qa.k > 0:
        pairing = (qa.enc_a @ qb.enc_a.T) == BitMatrix.identity(qa.k)
    else:
        pairing = k_match
    conditions["A_in_C4"] = a_in_c4
    conditions["C3_in_C2"] = c3_in_c2
    conditions["C1_in_C4"] = c1_in_c4
    conditions["B_in_C2"] = b_in_c2
    conditions["ABt_is_identity"] = pairing
    branch1 = a_in_c4 and c3_in_c2 and pairing and k_match
    branch2 = c1_in_c4 and b_in_c2 and pairing and k_match
    conditions["sufficient_branch_1"] = branch1
    conditions["sufficient_branch_2"] = branch2
    return TransversalityReport(
        gate="CZ", verdict=branch1 or branch2, conditions=conditions,
        mode="sufficient", details=details,
    )


def make_mirrored_pair(g1_perp: BitMatrix, g2_perp: BitMatrix) -> tuple[CssCode, CssCode]:
    """Mirrored CSS pair: the second code swaps the first one's X/Z checks.

    Code 1 has X stabilizers from g2_perp and Z stabilizers from
    g1_perp; code 2 uses g1_perp for X and g2_perp for Z, so its spaces
    satisfy C4 = C1 and C3 = C2.  Requires the two row spaces to be
    mutually orthogonal (otherwise no CSS code exists).
    """
    if g1_perp.cols != g2_perp.cols:
        raise DimensionMismatchError("check matrices must share the block length")
    if not _orthogonal(g1_perp, g2_perp):
        raise ContainmentError("row spaces are not mutually orthogonal; not a valid CSS pair")
    code1 = make_css_from_stabilizers(x_stab=g2_perp, z_stab=g1_perp, name="mirrored-1")
    code2 = make_css_from_stabilizers(x_stab=g1_perp, z_stab=g2_perp, name="mirrored-2")
    return code1, code2


def is_mirrored_pair(q1: CssCode, q2: CssCode) -> bool:
    return (
        q1.n == q2.n
        and gf2.spans_equal(q1.x_stab, q2.z_stab)
        and gf2.spans_equal(q1.z_stab, q2.x_stab)
    )


def cz_encodings_for_mirrored(q1: CssCode, q2: CssCode) -> tuple[BitMatrix, BitMatrix]:
    """Repaired encodings (A', B) with A' @ B^T = I for a mirrored pair.

    The pairing U = A @ B^T of a valid mirrored pair is always
    invertible: a dependency among its rows would put a nonzero C1
    codeword orthogonal to all of C3 = C2, i.e. inside dual(C2), which
    contradicts the representatives being independent modulo dual(C2).
    A singular U therefore signals a construction bug, not bad input.
    """
    if not is_mirrored_pair(q1, q2):
        raise ContainmentError("codes do not form a mirrored pair")
    if q1.k != q2.k:
        raise ContainmentError("mirrored codes must share the logical dimension")
    if q1.k == 0:
        return BitMatrix.empty(q1.n), BitMatrix.empty(q2.n)
    u = q1.enc_a @ q2.enc_a.T
    try:
        w = gf2.right_identity_transform(u)
    except SingularMatrixError as exc:
        raise RuntimeError(
            "mirrored pair produced a singular logical pairing; this breaks an internal "
            "invariant and indicates a construction bug"
        ) from exc
    return w @ q1.enc_a, q2.enc_a


def repair_mirrored_encodings(q1: CssCode, q2: CssCode) -> tuple[CssCode, CssCode]:
    """Convenience wrapper: mirrored pair re-encoded so that A @ B^T = I."""
    enc_a, enc_b = cz_encodings_for_mirrored(q1, q2)
    if q1.k == 0:
        return q1, q2
    return with_encoding(q1, enc_a), with_encoding(q2, enc_b)


def audit_mirror_claims(z_stab_a: BitMatrix, x_stab_a: BitMatrix,
                        claimed_x_stab_b: BitMatrix,
                        claimed_enc_b: BitMatrix | None = None) -> list[str]:
    """Cross-check hand-written matrices against the mirrored structure.

    Returns a list of human-readable inconsistencies (empty when the
    claims hold): the second code's X stabilizers must span the first
    code's Z-stabilizer space, and any claimed representatives for the
    second code must be orthogonal to the first code's X stabilizers
    (they are supposed to be C2 codewords).
    """
    findings: list[str] = []
    if not gf2.spans_equal(claimed_x_stab_b, z_stab_a):
        findings.append(
            "claimed X stabilizers of the second code do not span the first code's "
            "Z-stabilizer space, so the pair is not mirrored (C4 != C1)"
        )
    if claimed_enc_b is not None:
        for i, row in enumerate(claimed_enc_b, start=1):
            if x_stab_a.rows and np.any((x_stab_a.a @ row) % 2):
                findings.append(
                    f"claimed representative row {i} of the second code is not orthogonal "
                    f"to the first code's X stabilizers, so it lies outside C2 = C3"
                )
    return findings


# -- brute-force oracles ----------------------------------------------------------


def _oracle_precheck(qa: CssCode, qb: CssCode) -> None:
    _require_same_length(qa, qb)
    if qa.k != qb.k:
        raise ValueError(f"oracle needs equal logical dimensions, got {qa.k} vs {qb.k}")
    if 2 * qa.n > statevec.MAX_QUBITS:
        raise CapacityError(f"joint register 2n = {2 * qa.n} exceeds {statevec.MAX_QUBITS} qubits")


def _encodings(q: CssCode) -> dict[tuple[int, ...], statevec.StateVector]:
    return {tuple(int(b) for b in psi): statevec.encode_logical(q, psi)
            for psi in logical_kets(q.k)}


def oracle_cnot(qa: CssCode, qb: CssCode, tol: float = ORACLE_TOL) -> OracleResult:
    """Exhaustive state-vector certification of pairwise-CNOT transversality.

    For every logical basis pair (psi_a, psi_b), compares gating the
    encoded states against encoding the gated logicals
    |psi_a> (x) |psi_a + psi_b|, amplitude-wise.
    """
    _oracle_precheck(qa, qb)
    k, n = qa.k, qa.n
    enc_a, enc_b = _encodings(qa), _encodings(qb)
    worst = 0.0
    pairs = 0
    for psi_a in product((0, 1), repeat=k):
        for psi_b in product((0, 1), repeat=k):
            pairs += 1
            joint = statevec.tensor(enc_a[psi_a], enc_b[psi_b])
            gated = statevec.apply_transversal_cnot(joint, n)
            summed = tuple(a ^ b for a, b in zip(psi_a, psi_b))
            expected = statevec.tensor(enc_a[psi_a], enc_b[summed])
            dev = statevec.max_amplitude_deviation(gated, expected)
            worst = max(worst, dev)
            if dev > tol:
                return OracleResult(False, (psi_a, psi_b), dev, pairs)
    return OracleResult(True, None, worst, pairs)


def oracle_cz(qa: CssCode, qb: CssCode, tol: float = ORACLE_TOL) -> OracleResult:
    """Exhaustive state-vector certification of pairwise-CZ transversality.

    Basis pairs are compared with the exact sign (-1)^(psi_a . psi_b);
    a final uniform-superposition input is checked as well, where a
    phase error that is constant on basis states would also surface.
    """
    _oracle_precheck(qa, qb)
    k, n = qa.k, qa.n
    enc_a, enc_b = _encodings(qa), _encodings(qb)
    worst = 0.0
    pairs = 0
    for psi_a in product((0, 1), repeat=k):
        for psi_b in product((0, 1), repeat=k):
            pairs += 1
            joint = statevec.tensor(enc_a[psi_a], enc_b[psi_b])
            gated = statevec.apply_transversal_cz(joint, n)
            sign = (-1.0) ** (sum(a * b for a, b in zip(psi_a, psi_b)) % 2)
            expected = statevec.StateVector(2 * n, sign * joint.amp, check=False)
            dev = statevec.max_amplitude_deviation(gated, expected)
            worst = max(worst, dev)
            if dev > tol:
                return OracleResult(False, (psi_a, psi_b), dev, pairs)
    # Superposition input: all logical kets at once on both sides.
    scale = 1.0 / np.sqrt(2.0**k)
    plus_a = statevec.StateVector(
        n, scale * np.sum([s.amp for s in enc_a.values()], axis=0), check=False)
    plus_b = statevec.StateVector(
        n, scale * np.sum([s.amp for s in enc_b.values()], axis=0), check=False)
    gated = statevec.apply_transversal_cz(statevec.tensor(plus_a, plus_b), n)
    expected_amp = np.zeros_like(gated.amp)
    for psi_a, sa in enc_a.items():
        for psi_b, sb in enc_b.items():
            sign = (-1.0) ** (sum(a * b for a, b in zip(psi_a, psi_b)) % 2)
            expected_amp += sign * np.kron(sa.amp, sb.amp)
    expected_amp /= 2.0**k
    dev = float(np.max(np.abs(gated.amp - expected_amp)))
    worst = max(worst, dev)
    if dev > tol:
        return OracleResult(False, None, dev, pairs + 1)
    return OracleResult(True, None, worst, pairs + 1)


def find_cnot_encoding(qa: CssCode, qb: CssCode) -> BitMatrix | None:
    """A single representative matrix usable by both codes, if one exists.

    Returns A* with rows inside C1 ∩ C3, independent modulo dual(C4)
    (hence also modulo dual(C2)); installing A* as the encoding of both
    codes makes the pair CNOT-transversal.  Returns None when the
    containment dual(C2) ⊆ dual(C4) fails or the intersection is too
    small to supply k independent cosets.
    """
    _require_same_length(qa, qb)
    if qa.k != qb.k:
        return None
    if not gf2.subspace_leq(qa.x_stab, qb.x_stab):
        return None
    k = qa.k
    if k == 0:
        return BitMatrix.empty(qa.n)
    # Fast path: the control code's encoding may already work for both.
    if _valid_common_encoding(qa.enc_a, qa, qb):
        return qa.enc_a
    shared = gf2.rowspace_intersection(qa.c1.gen, qb.c1.gen)
    ech = gf2._Echelon(qa.n, seed_rows=qb.x_stab)
    kept = [np.array(row, dtype=np.uint8) for row in shared
            if ech.add(gf2.vector_to_int(row))]
    if len(kept) != k:
        return None
    return BitMatrix(np.vstack(kept))


def _valid_common_encoding(enc: BitMatrix, qa: CssCode, qb: CssCode) -> bool:
    rows_in_c3 = all(gf2.solve_row(qb.c1.gen, row) is not None for row in enc)
    if not rows_in_c3:
        return False
    return gf2.rank(BitMatrix.stack(qb.x_stab, enc)) == qb.x_stab.rows + enc.rows
