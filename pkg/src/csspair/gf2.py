"""Exact dense linear algebra over GF(2).

All matrices are binary, stored row-major as numpy uint8 arrays with
addition meaning XOR.  This module supplies the reductions, duals,
subspace tests and coset extraction that the code-construction and
transversality layers are built on.  The intended regime is small block
lengths (n up to a few tens); everything is exact, nothing is sparse.

Vectors are 1-indexed in documentation and error messages (qubit 1 is
the leftmost column); storage is 0-indexed.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .errors import ContainmentError, DimensionMismatchError, ParseError, SingularMatrixError

FORMAT_COMMENT = "# format=1"


class BitMatrix:
    """Immutable dense binary matrix.

    Entries are 0/1 uint8; rows may be 0 (empty matrices are legal,
    e.g. the coset matrix of a code with no logical qubits) but there
    is always at least one column.
    """

    __slots__ = ("a",)

    def __init__(self, data, cols: int | None = None):
        arr = np.array(data, dtype=np.uint8, copy=True)
        if arr.ndim == 1:
            arr = arr.reshape(1, -1)
        if arr.ndim != 2:
            raise DimensionMismatchError(f"expected a 2-d array, got ndim={arr.ndim}")
        if arr.size == 0:
            if cols is None:
                cols = arr.shape[1] if arr.ndim == 2 and arr.shape[1] > 0 else 0
            arr = np.zeros((0, cols), dtype=np.uint8)
        if arr.shape[1] < 1:
            raise DimensionMismatchError("a BitMatrix needs at least one column")
        if np.any(arr > 1):
            raise ValueError("entries must be 0 or 1")
        arr.setflags(write=False)
        self.a = arr

    # -- construction helpers -------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(np.zeros((rows, cols), dtype=np.uint8))

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(np.eye(n, dtype=np.uint8))

    @classmethod
    def empty(cls, cols: int) -> "BitMatrix":
        """0 x cols matrix (spans only the zero space)."""
        return cls(np.zeros((0, cols), dtype=np.uint8))

    @classmethod
    def from_strings(cls, rows: Sequence[str]) -> "BitMatrix":
        """Build from bitstrings like ["1100", "0110"]."""
        return cls([[int(c) for c in r] for r in rows])

    @staticmethod
    def stack(*parts: "BitMatrix") -> "BitMatrix":
        """Vertical concatenation; all parts must share a column count."""
        cols = {p.cols for p in parts}
        if len(cols) != 1:
            raise DimensionMismatchError(f"cannot stack matrices with column counts {sorted(cols)}")
        return BitMatrix(np.vstack([p.a for p in parts]))

    # -- basic protocol --------------------------------------------------------

    @property
    def rows(self) -> int:
        return self.a.shape[0]

    @property
    def cols(self) -> int:
        return self.a.shape[1]

    @property
    def T(self) -> "BitMatrix":
        return BitMatrix(self.a.T.copy())

    def row(self, i: int) -> np.ndarray:
        return self.a[i].copy()

    def __iter__(self):
        for i in range(self.rows):
            yield self.a[i]

    def __eq__(self, other) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return self.a.shape == other.a.shape and bool(np.array_equal(self.a, other.a))

    def __hash__(self):
        return hash((self.a.shape, self.a.tobytes()))

    def __add__(self, other: "BitMatrix") -> "BitMatrix":
        if self.a.shape != other.a.shape:
            raise DimensionMismatchError("XOR requires equal shapes")
        return BitMatrix(np.bitwise_xor(self.a, other.a))

    def __matmul__(self, other: "BitMatrix") -> "BitMatrix":
        if self.cols != other.rows:
            raise DimensionMismatchError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        prod = (self.a.astype(np.int64) @ other.a.astype(np.int64)) % 2
        return BitMatrix(prod.astype(np.uint8))

    def is_zero(self) -> bool:
        return not np.any(self.a)

    def row_strings(self) -> list[str]:
        return ["".join(str(b) for b in row) for row in self.a]

    def __repr__(self) -> str:
        if self.rows == 0:
            return f"BitMatrix(0x{self.cols})"
        return "BitMatrix([" + ", ".join(self.row_strings()) + "])"

    # -- text format ------------------------------------------------------------

    def to_text(self) -> str:
        """Serialize to the matrix text format (bit-exact round trip)."""
        lines = [FORMAT_COMMENT, f"{self.rows} {self.cols}"]
        lines.extend(self.row_strings())
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "BitMatrix":
        mat, _ = parse_matrix_lines(text.splitlines(), start=0)
        return mat


def parse_matrix_lines(lines: Sequence[str], start: int) -> tuple[BitMatrix, int]:
    """Parse one matrix from a list of lines beginning at index ``start``.

    Grammar: optional ``#`` comment lines, then a header ``R C``, then R
    rows of exactly C characters from {0,1}.  Returns the matrix and the
    index one past its last consumed line.  Raises ParseError with a
    1-based line number on malformed input.
    """
    i = start
    n_lines = len(lines)
    while i < n_lines and (not lines[i].strip() or lines[i].lstrip().startswith("#")):
        i += 1
    if i >= n_lines:
        raise ParseError("missing matrix header", line=n_lines)
    header = lines[i].split()
    if len(header) != 2 or not all(tok.isdigit() for tok in header):
        raise ParseError(f"bad matrix header {lines[i]!r} (want 'ROWS COLS')", line=i + 1)
    r, c = int(header[0]), int(header[1])
    if c < 1:
        raise ParseError("column count must be at least 1", line=i + 1)
    i += 1
    rows: list[list[int]] = []
    while len(rows) < r:
        while i < n_lines and (not lines[i].strip() or lines[i].lstrip().startswith("#")):
            i += 1
        if i >= n_lines:
            raise ParseError(f"expected {r} matrix rows, found {len(rows)}", line=n_lines)
        content = lines[i].strip()
        if len(content) != c or set(content) - {"0", "1"}:
            raise ParseError(f"bad matrix row {content!r} (want {c} characters from 0/1)", line=i + 1)
        rows.append([int(ch) for ch in content])
        i += 1
    if r == 0:
        return BitMatrix.empty(c), i
    return BitMatrix(rows), i


def load_matrix(path) -> BitMatrix:
    with open(path, "r", encoding="utf-8") as fh:
        return BitMatrix.from_text(fh.read())


def save_matrix(mat: BitMatrix, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(mat.to_text())


# -- bit/vector conversions (qubit 1 = most significant bit) -------------------


def vector_to_int(vec) -> int:
    """Pack a binary vector into an int, first entry most significant."""
    out = 0
    for b in np.asarray(vec, dtype=np.uint8).ravel():
        out = (out << 1) | int(b)
    return out


def int_to_vector(value: int, n: int) -> np.ndarray:
    """Unpack an int into an n-entry binary vector, MSB first."""
    vec = np.zeros(n, dtype=np.uint8)
    for i in range(n - 1, -1, -1):
        vec[i] = value & 1
        value >>= 1
    if value:
        raise ValueError("value does not fit in n bits")
    return vec


# -- elimination core -----------------------------------------------------------


def rref(M: BitMatrix) -> tuple[BitMatrix, tuple[int, ...], int]:
    """Reduced row-echelon form over GF(2).

    Returns (R, pivot_cols, rank).  R has the same shape as M with zero
    rows at the bottom; pivot columns are 0-indexed.
    """
    R = M.a.copy()
    m, n = R.shape
    pivots: list[int] = []
    pr = 0
    for col in range(n):
        if pr >= m:
            break
        hit = np.nonzero(R[pr:, col])[0]
        if hit.size == 0:
            continue
        src = pr + int(hit[0])
        if src != pr:
            R[[pr, src]] = R[[src, pr]]
        # Clear the column everywhere else (reduced form).
        others = np.nonzero(R[:, col])[0]
        for r in others:
            if r != pr:
                R[r] ^= R[pr]
        pivots.append(col)
        pr += 1
    return BitMatrix(R), tuple(pivots), len(pivots)


def rank(M: BitMatrix) -> int:
    return rref(M)[2]


def row_basis(M: BitMatrix) -> BitMatrix:
    """Nonzero rows of the RREF: a canonical basis of the row space."""
    R, _, rk = rref(M)
    return BitMatrix(R.a[:rk].copy()) if rk else BitMatrix.empty(M.cols)


def dual_basis(M: BitMatrix) -> BitMatrix:
    """Basis of the null space {v : M v^T = 0}, i.e. the dual code's generator.

    Returns cols - rank(M) independent rows; applying dual_basis twice
    recovers a basis of the original row space.
    """
    R, pivots, rk = rref(M)
    n = M.cols
    free = [c for c in range(n) if c not in pivots]
    if not free:
        return BitMatrix.empty(n)
    out = np.zeros((len(free), n), dtype=np.uint8)
    for idx, f in enumerate(free):
        out[idx, f] = 1
        for prow, pcol in enumerate(pivots):
            out[idx, pcol] = R.a[prow, f]
    return BitMatrix(out)


def subspace_leq(m_sub: BitMatrix, m_sup: BitMatrix) -> bool:
    """True iff every row of m_sub lies in the row space of m_sup."""
    if m_sub.cols != m_sup.cols:
        raise DimensionMismatchError(
            f"column counts differ: {m_sub.cols} vs {m_sup.cols}"
        )
    if m_sub.rows == 0:
        return True
    return rank(BitMatrix.stack(m_sup, m_sub)) == rank(m_sup)


def spans_equal(m1: BitMatrix, m2: BitMatrix) -> bool:
    return subspace_leq(m1, m2) and subspace_leq(m2, m1)


class _Echelon:
    """Incremental echelon basis over int bitmasks (column 1 = MSB)."""

    def __init__(self, cols: int, seed_rows: Iterable = ()):
        self.cols = cols
        self.by_pivot: dict[int, int] = {}
        for row in seed_rows:
            self.add(vector_to_int(row))

    def reduce(self, word: int) -> int:
        while word:
            piv = word.bit_length() - 1
            base = self.by_pivot.get(piv)
            if base is None:
                return word
            word ^= base
        return 0

    def add(self, word: int) -> bool:
        """Insert after reduction; returns True if the span grew."""
        red = self.reduce(word)
        if red == 0:
            return False
        self.by_pivot[red.bit_length() - 1] = red
        return True

    def contains(self, word: int) -> bool:
        return self.reduce(word) == 0


def complement_basis(m_sub: BitMatrix, m_sup: BitMatrix) -> BitMatrix:
    """Coset representatives generating rowspace(m_sup) / rowspace(m_sub).

    Scans the rows of m_sup in order and greedily keeps those that are
    independent modulo the span accumulated so far, so the result is
    deterministic and, when m_sup lists representative rows explicitly,
    reproduces them verbatim.  Stacking the result under m_sub spans
    m_sup.
    """
    if not subspace_leq(m_sub, m_sup):
        raise ContainmentError("complement_basis requires rowspace(m_sub) <= rowspace(m_sup)")
    ech = _Echelon(m_sup.cols, seed_rows=m_sub)
    kept: list[np.ndarray] = []
    for row in m_sup:
        if ech.add(vector_to_int(row)):
            kept.append(np.array(row, dtype=np.uint8))
    if not kept:
        return BitMatrix.empty(m_sup.cols)
    return BitMatrix(np.vstack(kept))


def independent_rows(M: BitMatrix, modulo: BitMatrix | None = None) -> BitMatrix:
    """Greedy sweep keeping the original rows that are independent (mod an
    optional subspace).  Row vectors are preserved, not reduced."""
    ech = _Echelon(M.cols, seed_rows=(modulo if modulo is not None else ()))
    kept = [np.array(r, dtype=np.uint8) for r in M if ech.add(vector_to_int(r))]
    if not kept:
        return BitMatrix.empty(M.cols)
    return BitMatrix(np.vstack(kept))


def right_identity_transform(U: BitMatrix) -> BitMatrix:
    """W such that W @ U = I over GF(2), for square invertible U.

    Raises SingularMatrixError when rank(U) < k.  Found by Gaussian
    elimination on [U | I].
    """
    if U.rows != U.cols:
        raise DimensionMismatchError(f"need a square matrix, got {U.rows}x{U.cols}")
    k = U.rows
    aug = np.hstack([U.a.copy(), np.eye(k, dtype=np.uint8)])
    R, pivots, rk = rref(BitMatrix(aug))
    if rk < k or any(p >= k for p in pivots[:k]) or list(pivots[:k]) != list(range(k)):
        raise SingularMatrixError(f"matrix of size {k} has GF(2) rank {rank(U)} < {k}")
    return BitMatrix(R.a[:k, k:].copy())


def solve_row(M: BitMatrix, target) -> np.ndarray | None:
    """Coefficients c with c @ M = target (row-vector convention).

    Returns None when target is outside the row space.  The solution uses
    the free coordinates set to zero, so it is deterministic.
    """
    t = np.asarray(target, dtype=np.uint8).ravel()
    if t.size != M.cols:
        raise DimensionMismatchError("target length must equal the column count")
    # Solve M^T x = t^T by eliminating on the augmented system.
    aug = np.hstack([M.a.T.copy(), t.reshape(-1, 1)])
    R, pivots, _ = rref(BitMatrix(aug))
    coeffs = np.zeros(M.rows, dtype=np.uint8)
    for prow, pcol in enumerate(pivots):
        if pcol == M.rows:  # pivot in the augmented column: inconsistent
            return None
        coeffs[pcol] = R.a[prow, M.rows]
    return coeffs


def rowspace_intersection(m1: BitMatrix, m2: BitMatrix) -> BitMatrix:
    """Basis of rowspace(m1) ∩ rowspace(m2), via duals."""
    if m1.cols != m2.cols:
        raise DimensionMismatchError("column counts differ")
    return dual_basis(BitMatrix.stack(dual_basis(m1), dual_basis(m2)))
