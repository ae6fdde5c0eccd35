"""Classical [n,k,d] codes and the CSS codes built from pairs of them.

A CSS code is described here by two classical codes C1, C2 with
dual(C2) contained in C1.  Its X stabilizers are generated by a basis
of dual(C2), its Z stabilizers by a basis of dual(C1), and its logical
content by a k x n coset-representative matrix A whose rows pick one
C1-codeword per coset of dual(C2).  A is part of the code object: the
encoding bijection psi -> psi @ A decides transversality downstream,
so two CSS codes with equal spaces but different A are different codes
for our purposes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

import numpy as np

from . import gf2
from .errors import (
    CapacityError,
    ContainmentError,
    DimensionMismatchError,
    EncodingError,
    ParseError,
)
from .gf2 import BitMatrix

MAX_DISTANCE_DIMENSION = 20


@dataclass(eq=False)
class ClassicalCode:
    """Linear [n, k] code given by a full-rank generator matrix.

    ``was_reduced`` flags that the constructor received dependent rows
    and dropped some.  The distance is computed on demand and cached.
    """

    gen: BitMatrix
    was_reduced: bool = False
    _d: int | None = field(default=None, repr=False)

    @property
    def n(self) -> int:
        return self.gen.cols

    @property
    def k(self) -> int:
        return self.gen.rows

    def dual(self) -> "ClassicalCode":
        return ClassicalCode(gf2.dual_basis(self.gen))

    def contains(self, vec) -> bool:
        return gf2.solve_row(self.gen, vec) is not None

    def __repr__(self) -> str:
        d = f",{self._d}" if self._d is not None else ""
        return f"ClassicalCode[{self.n},{self.k}{d}]"


def make_classical(gen: BitMatrix) -> ClassicalCode:
    """Wrap a generator matrix as a ClassicalCode.

    Full-rank input rows are kept verbatim (the row order feeds the
    deterministic coset-representative extraction).  Rank-deficient
    input is accepted: dependent rows are dropped by a greedy sweep and
    the result carries was_reduced=True.
    """
    if gen.rows == 0:
        raise ValueError("a classical code needs at least one generator row")
    independent = gf2.independent_rows(gen)
    if independent.rows == gen.rows:
        return ClassicalCode(gen)
    return ClassicalCode(independent, was_reduced=True)


def min_distance(code: ClassicalCode) -> int:
    """Minimum Hamming weight over the 2^k - 1 nonzero codewords.

    Exhaustive: requires k <= 20.  The result is memoized on the code.
    """
    if code._d is not None:
        return code._d
    if code.k == 0:
        raise ValueError("a code without nonzero codewords has no distance")
    if code.k > MAX_DISTANCE_DIMENSION:
        raise CapacityError(
            f"min_distance enumerates 2^k codewords; k={code.k} exceeds {MAX_DISTANCE_DIMENSION}"
        )
    gen = code.gen.a.astype(np.uint8)
    best = code.n + 1
    # Gray-code walk: flip one generator per step, track the running codeword.
    word = np.zeros(code.n, dtype=np.uint8)
    prev = 0
    for i in range(1, 2**code.k):
        gray = i ^ (i >> 1)
        flipped = (gray ^ prev).bit_length() - 1
        prev = gray
        word = word ^ gen[flipped]
        w = int(word.sum())
        if w < best:
            best = w
    code._d = best
    return best


@dataclass(eq=False)
class StabilizerGenerator:
    """One CSS stabilizer: X part a, Z part b, sign fixed to +1.

    Exactly one of a, b is nonzero (pure-X or pure-Z generator).
    """

    a: np.ndarray
    b: np.ndarray
    sign: int = 1

    def __str__(self) -> str:
        terms = []
        for i, (x, z) in enumerate(zip(self.a, self.b), start=1):
            if x and z:
                terms.append(f"Y{i}")
            elif x:
                terms.append(f"X{i}")
            elif z:
                terms.append(f"Z{i}")
        return "+" + ("·".join(terms) if terms else "I")


@dataclass(eq=False)
class CssCode:
    """CSS code with a fixed encoding.

    Fields: the classical pair (c1, c2), X/Z stabilizer generator
    matrices, and the coset-representative matrix enc_a (k x n).
    """

    c1: ClassicalCode
    c2: ClassicalCode
    enc_a: BitMatrix
    x_stab: BitMatrix
    z_stab: BitMatrix
    name: str = ""

    @property
    def n(self) -> int:
        return self.c1.n

    @property
    def k(self) -> int:
        return self.enc_a.rows

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"CssCode[[{self.n},{self.k}]]{label}"


def make_css(c1: ClassicalCode, c2: ClassicalCode, enc_a: BitMatrix | None = None,
             name: str = "") -> CssCode:
    """Build CSS(c1, c2); requires dual(c2) ⊆ c1.

    The logical dimension is k = k1 + k2 - n.  When enc_a is omitted the
    coset representatives default to the greedy complement of dual(c2)
    inside c1, scanned in c1's row order.  A supplied enc_a is validated:
    k rows, each inside c1, independent modulo dual(c2).
    """
    if c1.n != c2.n:
        raise DimensionMismatchError(f"block lengths differ: {c1.n} vs {c2.n}")
    x_stab = c2.dual().gen
    z_stab = c1.dual().gen
    if not gf2.subspace_leq(x_stab, c1.gen):
        raise ContainmentError(
            f"not a CSS pair: dual(C2) (dim {x_stab.rows}) is not contained in C1"
        )
    k = c1.k + c2.k - c1.n
    if enc_a is None:
        enc_a = gf2.complement_basis(x_stab, c1.gen)
    else:
        if enc_a.cols != c1.n:
            raise EncodingError(f"encoding has {enc_a.cols} columns, code length is {c1.n}")
        if enc_a.rows != k:
            raise EncodingError(f"encoding has {enc_a.rows} rows, logical dimension is {k}")
        for i, row in enumerate(enc_a, start=1):
            if not c1.contains(row):
                raise EncodingError(f"encoding row {i} is not a C1 codeword")
        if gf2.rank(BitMatrix.stack(x_stab, enc_a)) != x_stab.rows + k:
            raise EncodingError("encoding rows are dependent modulo dual(C2)")
    assert enc_a.rows == k, "complement dimension must equal k1 + k2 - n"
    return CssCode(c1=c1, c2=c2, enc_a=enc_a, x_stab=x_stab, z_stab=z_stab, name=name)


def make_css_from_stabilizers(x_stab: BitMatrix, z_stab: BitMatrix,
                              enc_a: BitMatrix | None = None, name: str = "") -> CssCode:
    """Build a CSS code directly from X/Z stabilizer generator matrices.

    The given matrices are kept as the stabilizer bases (after dropping
    dependent rows), so constructions that are naturally phrased in
    terms of check matrices round-trip exactly.
    """
    if x_stab.cols != z_stab.cols:
        raise DimensionMismatchError("stabilizer matrices must share the block length")
    xs = gf2.independent_rows(x_stab)
    zs = gf2.independent_rows(z_stab)
    if xs.rows and zs.rows and not (xs @ zs.T).is_zero():
        raise ContainmentError("X and Z stabilizers do not commute (non-orthogonal rows)")
    c1 = ClassicalCode(gf2.dual_basis(zs))
    c2 = ClassicalCode(gf2.dual_basis(xs))
    code = make_css(c1, c2, enc_a=enc_a, name=name)
    # Replace the derived stabilizer bases with the supplied ones.
    return CssCode(c1=code.c1, c2=code.c2, enc_a=code.enc_a, x_stab=xs, z_stab=zs, name=name)


def with_encoding(q: CssCode, enc_a: BitMatrix) -> CssCode:
    """Same code spaces, different (validated) coset representatives."""
    code = make_css(q.c1, q.c2, enc_a=enc_a, name=q.name)
    return CssCode(c1=q.c1, c2=q.c2, enc_a=code.enc_a, x_stab=q.x_stab, z_stab=q.z_stab,
                   name=q.name)


def stabilizer_generators(q: CssCode) -> list[StabilizerGenerator]:
    """The n - k CSS generators: one pure-X per x_stab row, one pure-Z per z_stab row."""
    zeros = np.zeros(q.n, dtype=np.uint8)
    gens = [StabilizerGenerator(a=row.copy(), b=zeros.copy()) for row in q.x_stab]
    gens += [StabilizerGenerator(a=zeros.copy(), b=row.copy()) for row in q.z_stab]
    return gens


def logical_x_representatives(q: CssCode) -> BitMatrix:
    """Row i is the physical X support implementing logical X on qubit i."""
    return q.enc_a


def logical_z_representatives(q: CssCode) -> BitMatrix:
    """Z-side partners of enc_a: rows lie in C2 and pair to identity.

    Returns L with L @ enc_a^T = I_k and every row orthogonal to the X
    stabilizers, so residual Z operators can be classified by pairing
    against enc_a and residual X operators by pairing against L.
    """
    k = q.k
    if k == 0:
        return BitMatrix.empty(q.n)
    c2_basis = q.c2.gen
    pairing = c2_basis @ q.enc_a.T  # k2 x k
    rows = []
    for i in range(k):
        target = np.zeros(k, dtype=np.uint8)
        target[i] = 1
        coeffs = gf2.solve_row(pairing, target)
        if coeffs is None:
            raise EncodingError("logical pairing is degenerate; encoding matrix is invalid")
        rows.append((coeffs @ c2_basis.a) % 2)
    return BitMatrix(np.array(rows, dtype=np.uint8))


def css_distance(q: CssCode) -> int:
    """Construction distance min(d1, d2) of CSS(c1, c2)."""
    return min(min_distance(q.c1), min_distance(q.c2))


def logical_kets(k: int):
    """All logical basis vectors of dimension k in lexicographic order."""
    return [np.array(bits, dtype=np.uint8) for bits in product((0, 1), repeat=k)]


# -- code file format -----------------------------------------------------------


def parse_css_text(text: str, name: str = "") -> CssCode:
    """Parse a code file with sections [C1], [C2] and optional [A].

    Each section holds one matrix in the text format of gf2.  Comments
    (# ...) and blank lines are allowed anywhere.
    """
    lines = text.splitlines()
    sections: dict[str, BitMatrix] = {}
    i = 0
    while i < len(lines):
        stripped = lines[i].strip()
        if not stripped or stripped.startswith("#"):
            i += 1
            continue
        if stripped.startswith("[") and stripped.endswith("]"):
            tag = stripped[1:-1].strip().upper()
            if tag not in {"C1", "C2", "A"}:
                raise ParseError(f"unknown section [{tag}]", line=i + 1)
            if tag in sections:
                raise ParseError(f"duplicate section [{tag}]", line=i + 1)
            mat, i = gf2.parse_matrix_lines(lines, i + 1)
            sections[tag] = mat
            continue
        raise ParseError(f"unexpected content {stripped!r} (want a [SECTION] header)", line=i + 1)
    for required in ("C1", "C2"):
        if required not in sections:
            raise ParseError(f"missing required section [{required}]", line=len(lines))
    c1 = make_classical(sections["C1"])
    c2 = make_classical(sections["C2"])
    return make_css(c1, c2, enc_a=sections.get("A"), name=name)


def css_to_text(q: CssCode, header: str = "") -> str:
    """Serialize a CSS code to the sectioned file format (bit-exact)."""
    parts = [gf2.FORMAT_COMMENT]
    if header:
        parts.extend(f"# {line}" for line in header.splitlines())
    for tag, mat in (("C1", q.c1.gen), ("C2", q.c2.gen), ("A", q.enc_a)):
        parts.append(f"[{tag}]")
        parts.append(f"{mat.rows} {mat.cols}")
        parts.extend(mat.row_strings())
    return "\n".join(parts) + "\n"


def load_css(path, name: str = "") -> CssCode:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_css_text(fh.read(), name=name or str(path))


def save_css(q: CssCode, path, header: str = "") -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(css_to_text(q, header=header))
