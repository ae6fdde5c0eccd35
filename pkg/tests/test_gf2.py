"""GF(2) linear algebra: reductions, duals, cosets, inverses, text format."""

import numpy as np
import pytest

from csspair import gf2
from csspair.errors import ContainmentError, DimensionMismatchError, ParseError, SingularMatrixError
from csspair.gf2 import BitMatrix


def bitset_rank(rows, n_cols):
    """Independent rank routine over int bitsets, for cross-checking."""
    work = [int("".join(str(int(b)) for b in row), 2) for row in rows]
    rank = 0
    for col in range(n_cols):
        bit = 1 << (n_cols - 1 - col)
        pivot = next((i for i in range(rank, len(work)) if work[i] & bit), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        for i in range(len(work)):
            if i != rank and work[i] & bit:
                work[i] ^= work[rank]
        rank += 1
    return rank


def test_rref_already_independent():
    _, pivots, rk = gf2.rref(BitMatrix([[1, 1], [0, 1]]))
    assert rk == 2
    assert pivots == (0, 1)


def test_rref_zero_matrix():
    r, pivots, rk = gf2.rref(BitMatrix.zeros(3, 5))
    assert rk == 0
    assert pivots == ()
    assert r.is_zero()


def test_rref_five_row_stack_has_rank_five():
    m = BitMatrix.from_strings(
        ["1100000", "0101111", "0111010", "0011011", "1011100"])
    assert gf2.rank(m) == 5
    assert bitset_rank(m.a, 7) == 5


@pytest.mark.parametrize("seed", range(5))
def test_rref_preserves_row_space(seed):
    rng = np.random.default_rng(seed)
    m = BitMatrix(rng.integers(0, 2, size=(5, 9), dtype=np.uint8))
    r, _, _ = gf2.rref(m)
    assert gf2.subspace_leq(m, r) and gf2.subspace_leq(r, m)


def test_dual_basis_self_orthogonal_vector():
    d = gf2.dual_basis(BitMatrix([[1, 1]]))
    assert d == BitMatrix([[1, 1]])


def test_dual_basis_of_identity_is_empty():
    d = gf2.dual_basis(BitMatrix.identity(4))
    assert d.rows == 0 and d.cols == 4


def test_dual_basis_orthogonality_and_dimension():
    m = BitMatrix.from_strings(["1100000", "0101111"])
    d = gf2.dual_basis(m)
    assert d.rows == 5
    assert (m @ d.T).is_zero()
    assert gf2.rank(d) == 5


@pytest.mark.parametrize("seed", range(5))
def test_double_dual_recovers_row_space(seed):
    rng = np.random.default_rng(100 + seed)
    while True:
        m = BitMatrix(rng.integers(0, 2, size=(3, 8), dtype=np.uint8))
        if gf2.rank(m) == 3:
            break
    dd = gf2.dual_basis(gf2.dual_basis(m))
    assert gf2.spans_equal(m, dd)
    assert gf2.rank(m) + gf2.rank(gf2.dual_basis(m)) == m.cols


def test_subspace_leq_reflexive():
    m = BitMatrix.from_strings(["101", "011"])
    assert gf2.subspace_leq(m, m)


def test_subspace_leq_pair7_checks():
    small = BitMatrix.from_strings(["1100000", "0101111"])
    big = BitMatrix.from_strings(["1100000", "0101111", "0111010"])
    assert gf2.subspace_leq(small, big)
    assert not gf2.subspace_leq(big, small)


def test_subspace_leq_negative():
    assert not gf2.subspace_leq(BitMatrix([[1, 0, 0]]), BitMatrix([[0, 1, 0]]))


def test_subspace_leq_dimension_error():
    with pytest.raises(DimensionMismatchError):
        gf2.subspace_leq(BitMatrix([[1, 0]]), BitMatrix([[1, 0, 0]]))


def test_complement_basis_from_empty():
    comp = gf2.complement_basis(BitMatrix.empty(2), BitMatrix.identity(2))
    assert comp.rows == 2
    assert gf2.rank(comp) == 2


def test_complement_basis_of_self_is_empty():
    m = BitMatrix.from_strings(["110", "011"])
    assert gf2.complement_basis(m, m).rows == 0


def test_complement_basis_reproduces_listed_representatives():
    # When the superspace lists its representative rows explicitly, the
    # greedy scan returns them verbatim.
    sub = BitMatrix.from_strings(["1100000", "0101111"])
    sup = BitMatrix.from_strings(["1100000", "0101111", "0011011", "1011100"])
    comp = gf2.complement_basis(sub, sup)
    assert comp.row_strings() == ["0011011", "1011100"]


def test_complement_basis_requires_containment():
    with pytest.raises(ContainmentError):
        gf2.complement_basis(BitMatrix([[1, 0, 0]]), BitMatrix([[0, 1, 0]]))


@pytest.mark.parametrize("seed", range(5))
def test_complement_basis_stack_rank(seed):
    rng = np.random.default_rng(200 + seed)
    while True:
        sub = BitMatrix(rng.integers(0, 2, size=(2, 7), dtype=np.uint8))
        if gf2.rank(sub) == 2:
            break
    extra = BitMatrix(rng.integers(0, 2, size=(3, 7), dtype=np.uint8))
    sup = BitMatrix.stack(sub, extra)
    comp = gf2.complement_basis(sub, sup)
    stacked = BitMatrix.stack(sub, comp) if comp.rows else sub
    assert gf2.rank(stacked) == gf2.rank(sup)
    assert comp.rows == gf2.rank(sup) - gf2.rank(sub)


def test_right_identity_transform_identity():
    assert gf2.right_identity_transform(BitMatrix.identity(3)) == BitMatrix.identity(3)


def test_right_identity_transform_self_inverse():
    u = BitMatrix([[1, 1], [0, 1]])
    assert gf2.right_identity_transform(u) == u


@pytest.mark.parametrize("seed", range(5))
def test_right_identity_transform_multiplies_back(seed):
    rng = np.random.default_rng(300 + seed)
    while True:
        u = BitMatrix(rng.integers(0, 2, size=(4, 4), dtype=np.uint8))
        if gf2.rank(u) == 4:
            break
    w = gf2.right_identity_transform(u)
    assert (w @ u) == BitMatrix.identity(4)


def test_right_identity_transform_singular():
    with pytest.raises(SingularMatrixError):
        gf2.right_identity_transform(BitMatrix([[1, 1], [1, 1]]))


def test_solve_row_membership():
    m = BitMatrix.from_strings(["1100", "0110"])
    coeffs = gf2.solve_row(m, [1, 0, 1, 0])
    assert coeffs is not None
    assert np.array_equal((coeffs @ m.a) % 2, [1, 0, 1, 0])
    assert gf2.solve_row(m, [0, 0, 0, 1]) is None


def test_vector_int_round_trip():
    vec = np.array([1, 0, 1, 1, 0], dtype=np.uint8)
    assert gf2.vector_to_int(vec) == 0b10110
    assert np.array_equal(gf2.int_to_vector(0b10110, 5), vec)


def test_rowspace_intersection():
    m1 = BitMatrix.from_strings(["1100", "0011"])
    m2 = BitMatrix.from_strings(["1100", "0101"])
    inter = gf2.rowspace_intersection(m1, m2)
    assert gf2.subspace_leq(inter, m1) and gf2.subspace_leq(inter, m2)
    assert gf2.rank(inter) == 1
    assert gf2.solve_row(inter, [1, 1, 0, 0]) is not None


def test_matrix_text_round_trip():
    m = BitMatrix.from_strings(["10110", "01011"])
    assert BitMatrix.from_text(m.to_text()) == m
    assert m.to_text().startswith("# format=1\n2 5\n")


def test_matrix_text_comments_allowed():
    text = "# a note\n\n2 3\n# another\n101\n011\n"
    assert BitMatrix.from_text(text) == BitMatrix.from_strings(["101", "011"])


@pytest.mark.parametrize("text,msg", [
    ("nonsense\n", "header"),
    ("2 3\n101\n", "expected 2"),
    ("1 3\n10\n", "bad matrix row"),
    ("1 3\n1a1\n", "bad matrix row"),
])
def test_matrix_text_parse_errors(text, msg):
    with pytest.raises(ParseError, match=msg):
        BitMatrix.from_text(text)


def test_bitmatrix_rejects_non_binary():
    with pytest.raises(ValueError):
        BitMatrix([[0, 2]])


def test_bitmatrix_is_immutable():
    m = BitMatrix([[1, 0]])
    with pytest.raises(ValueError):
        m.a[0, 0] = 0
