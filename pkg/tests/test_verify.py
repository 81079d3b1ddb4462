import numpy as np
import pytest

from omnikit.construct import Placement, square_omnimosaic
from omnikit.core import (
    MosaicError,
    MosaicMatrix,
    SymmetryOp,
    apply_symmetry,
    decode_target,
    encode_target,
)
from omnikit.verify import (
    contains_target,
    coverage,
    is_omnimosaic,
    verify_placement,
)
from conftest import WITNESS_4X4


def random_matrix(n, a, rng):
    return MosaicMatrix.from_numpy(rng.integers(0, a, size=(n, n)), a)


class TestCoverage:
    def test_witness_matrix_covers_everything(self):
        cov = coverage(WITNESS_4X4, 2)
        assert cov.popcount == 16

    def test_all_zero_covers_one(self):
        m = MosaicMatrix.from_rows([[0] * 3] * 3, a=2)
        cov = coverage(m, 2)
        assert cov.popcount == 1
        assert cov.covered(0)

    def test_popcount_capped_by_placements(self, rng):
        m = random_matrix(3, 2, rng)
        assert coverage(m, 2).popcount <= 9

    def test_guard(self):
        m = MosaicMatrix.from_rows([[0] * 6] * 6, a=3)
        with pytest.raises(MosaicError, match="contains_target"):
            coverage(m, 2, guard=50)


class TestIsOmnimosaic:
    def test_witness_matrix(self):
        assert is_omnimosaic(WITNESS_4X4, 2).is_omni

    def test_3x3_never_omni(self, rng):
        # 9 placements cannot cover 16 targets
        for _ in range(20):
            r = is_omnimosaic(random_matrix(3, 2, rng), 2)
            assert not r.is_omni
            assert r.missing_sample == sorted(r.missing_sample)

    def test_constructed_6x6(self):
        assert is_omnimosaic(square_omnimosaic(2, 3), 2).is_omni

    def test_report_counts(self):
        r = is_omnimosaic(WITNESS_4X4, 2)
        assert r.covered == r.total_targets == 16
        assert r.submatrices_enumerated == 36


class TestContainsTarget:
    def test_present_in_witness_matrix(self):
        t = decode_target(6, 2, 2)
        p = contains_target(WITNESS_4X4, t)
        assert p is not None
        assert verify_placement(WITNESS_4X4, p, t)

    def test_absent(self):
        m = MosaicMatrix.from_rows([[0] * 3] * 3, a=2)
        assert contains_target(m, decode_target(15, 2, 2)) is None

    def test_identity_when_equal(self):
        p = contains_target(WITNESS_4X4, WITNESS_4X4)
        assert p == Placement((0, 1, 2, 3), (0, 1, 2, 3))

    def test_lexicographically_least(self, rng):
        # brute force least placement must agree
        from itertools import combinations

        for _ in range(30):
            m = random_matrix(5, 2, rng)
            t = decode_target(int(rng.integers(16)), 2, 2)
            best = None
            for rows in combinations(range(5), 2):
                for cols in combinations(range(5), 2):
                    if m.submatrix(rows, cols) == t:
                        cand = (rows, cols)
                        if best is None or cand < best:
                            best = cand
                        break  # first cols for these rows is least
            got = contains_target(m, t)
            if best is None:
                assert got is None
            else:
                assert (got.row_idx, got.col_idx) == best

    def test_oracle_agreement_with_coverage(self, rng):
        for _ in range(200):
            n = int(rng.integers(2, 9))
            k = int(rng.integers(1, min(3, n) + 1))
            m = random_matrix(n, 2, rng)
            t = decode_target(int(rng.integers(2 ** (k * k))), k, 2)
            present = contains_target(m, t) is not None
            assert present == coverage(m, k).covered(encode_target(t))


class TestVerifyPlacement:
    def test_identity(self):
        p = Placement((0, 1, 2, 3), (0, 1, 2, 3))
        assert verify_placement(WITNESS_4X4, p, WITNESS_4X4)

    def test_out_of_bounds(self):
        with pytest.raises(MosaicError):
            verify_placement(
                WITNESS_4X4, Placement((0, 4), (0, 1)), decode_target(0, 2, 2)
            )

    def test_shifted_placement_fails_somewhere(self, rng):
        hits = 0
        for _ in range(50):
            m = random_matrix(4, 2, rng)
            p = contains_target(m, decode_target(6, 2, 2))
            if p is None or p.col_idx[-1] + 1 >= 4:
                continue
            shifted = Placement(p.row_idx, tuple(c + 1 for c in p.col_idx))
            if not verify_placement(m, shifted, decode_target(6, 2, 2)):
                hits += 1
        assert hits > 0


class TestSymmetryInvariance:
    # index-order-preserving-or-reversing transforms keep the omni property:
    # letter relabeling, transpose, and full row/column reversal (a reversed
    # selection is a selection of the reversed target)
    @pytest.mark.parametrize(
        "kind", ["letters", "transpose", "row_reversal", "col_reversal"]
    )
    def test_is_omni_invariant(self, kind, rng):
        for _ in range(50):
            n = int(rng.integers(3, 6))
            a = int(rng.integers(2, 4))
            m = random_matrix(n, a, rng)
            if kind == "transpose":
                op = SymmetryOp("transpose")
            elif kind == "letters":
                op = SymmetryOp(kind, tuple(rng.permutation(a)))
            else:
                op = SymmetryOp(kind.split("_")[0] + "s", tuple(range(n - 1, -1, -1)))
            assert (
                is_omnimosaic(m, 2).is_omni
                == is_omnimosaic(apply_symmetry(m, op), 2).is_omni
            )

    def test_column_order_matters(self):
        # submatrices keep index order, so permuting columns can create or
        # destroy targets: this 5x5 matrix misses one target until its
        # columns are reordered
        m = MosaicMatrix.from_rows(
            [
                [1, 0, 1, 1, 1],
                [0, 0, 0, 1, 0],
                [0, 0, 1, 0, 0],
                [1, 0, 0, 0, 0],
                [1, 0, 1, 1, 0],
            ],
            a=2,
        )
        swapped = apply_symmetry(m, SymmetryOp("cols", (1, 0, 4, 3, 2)))
        assert not is_omnimosaic(m, 2).is_omni
        assert is_omnimosaic(swapped, 2).is_omni


class TestMonotonicity:
    def test_extension_preserves(self, rng):
        m = square_omnimosaic(2, 2)
        arr = m.to_numpy()
        grown = np.vstack([arr, rng.integers(0, 2, size=(2, 4))])
        grown = np.hstack([grown, rng.integers(0, 2, size=(6, 1))])
        assert is_omnimosaic(MosaicMatrix.from_numpy(grown, 2), 2).is_omni
