import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from omnikit.core import (
    Alphabet,
    MosaicError,
    MosaicMatrix,
    ParseError,
    SymmetryOp,
    apply_symmetry,
    decode_target,
    encode_target,
    parse_matrix,
    serialize_matrix,
)
from conftest import WITNESS_4X4, matrices


def M(rows, a=2):
    return MosaicMatrix.from_rows(rows, a)


class TestAlphabet:
    def test_rejects_unary(self):
        with pytest.raises(MosaicError):
            Alphabet(1)

    def test_accepts_binary(self):
        assert Alphabet(2).size == 2


class TestEncodeDecode:
    def test_all_zero(self):
        assert encode_target(M([[0, 0], [0, 0]])) == 0

    def test_all_ones(self):
        assert encode_target(M([[1, 1], [1, 1]])) == 15

    def test_antidiagonal(self):
        t = M([[0, 1], [1, 0]])
        assert encode_target(t) == 6
        assert decode_target(6, 2, 2) == t

    def test_decode_examples(self):
        assert decode_target(0, 2, 2) == M([[0, 0], [0, 0]])
        assert decode_target(15, 2, 2) == M([[1, 1], [1, 1]])

    def test_decode_out_of_range(self):
        with pytest.raises(MosaicError):
            decode_target(16, 2, 2)

    def test_overflow_guard(self):
        with pytest.raises(MosaicError, match="too large"):
            encode_target(MosaicMatrix(8, 8, 36, tuple([0] * 64)))

    @pytest.mark.parametrize("k,a", [(2, 2), (2, 3), (1, 7), (2, 16)])
    def test_roundtrip_exhaustive(self, k, a):
        # every code, whenever the space fits 2^16
        assert a ** (k * k) <= 2**16
        for code in range(a ** (k * k)):
            assert encode_target(decode_target(code, k, a)) == code

    def test_roundtrip_random_large_space(self, rng):
        k, a = 3, 4  # 4^9 codes, too many to enumerate here
        size = a ** (k * k)
        for code in rng.integers(0, size, size=10_000):
            assert encode_target(decode_target(int(code), k, a)) == int(code)


class TestSymmetry:
    def test_transpose(self):
        m = MosaicMatrix.from_rows([[0, 1], [2, 3]], a=4)
        assert apply_symmetry(m, SymmetryOp("transpose")).to_rows() == [[0, 2], [1, 3]]

    def test_identity_rows(self):
        m = M([[0, 1], [1, 0]])
        assert apply_symmetry(m, SymmetryOp("rows", (0, 1))) == m

    def test_letter_swap(self):
        m = M([[0, 1], [1, 0]])
        out = apply_symmetry(m, SymmetryOp("letters", (1, 0)))
        assert out.to_rows() == [[1, 0], [0, 1]]

    def test_shape_mismatch(self):
        with pytest.raises(MosaicError):
            apply_symmetry(M([[0, 1], [1, 0]]), SymmetryOp("rows", (0, 1, 2)))

    def test_non_bijection_rejected(self):
        with pytest.raises(MosaicError):
            SymmetryOp("rows", (0, 0))

    @given(matrices(), st.data())
    @settings(max_examples=60)
    def test_inverse_restores(self, m, data):
        kind = data.draw(st.sampled_from(["rows", "cols", "letters", "transpose"]))
        if kind == "transpose":
            op = SymmetryOp("transpose")
        else:
            size = {"rows": m.rows, "cols": m.cols, "letters": m.a}[kind]
            op = SymmetryOp(kind, tuple(data.draw(st.permutations(range(size)))))
        assert apply_symmetry(apply_symmetry(m, op), op.inverse()) == m


class TestFormat:
    def test_parse_basic(self):
        m = parse_matrix("omnimosaic v1\n2 2 2\n0 1\n1 0\n")
        assert m == M([[0, 1], [1, 0]])

    def test_entry_out_of_alphabet(self):
        with pytest.raises(ParseError, match="line 3"):
            parse_matrix("omnimosaic v1\n2 2 2\n0 2\n1 0\n")

    def test_bad_header(self):
        with pytest.raises(ParseError, match="line 1"):
            parse_matrix("mosaic v2\n2 2 2\n0 1\n1 0\n")

    def test_ragged_row(self):
        with pytest.raises(ParseError, match="line 4"):
            parse_matrix("omnimosaic v1\n2 2 2\n0 1\n1\n")

    def test_missing_trailing_newline(self):
        with pytest.raises(ParseError):
            parse_matrix("omnimosaic v1\n2 2 2\n0 1\n1 0")

    def test_unary_alphabet_rejected(self):
        with pytest.raises(ParseError, match="line 2"):
            parse_matrix("omnimosaic v1\n1 1 1\n0\n")

    def test_witness_matrix_roundtrip(self):
        assert parse_matrix(serialize_matrix(WITNESS_4X4)) == WITNESS_4X4

    @given(matrices(alphabets=(2, 3, 5, 36)))
    @settings(max_examples=80)
    def test_roundtrip(self, m):
        assert parse_matrix(serialize_matrix(m)) == m


class TestMatrixBasics:
    def test_entry_validation(self):
        with pytest.raises(MosaicError):
            MosaicMatrix(1, 2, 2, (0, 2))

    def test_length_validation(self):
        with pytest.raises(MosaicError):
            MosaicMatrix(2, 2, 2, (0, 1, 0))

    def test_submatrix(self):
        m = MosaicMatrix.from_rows([[0, 1, 2], [3, 4, 5], [6, 7, 8]], a=9)
        assert m.submatrix([0, 2], [1, 2]).to_rows() == [[1, 2], [7, 8]]
