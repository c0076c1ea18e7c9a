"""Exact sparse elimination against a dense Gauss-Jordan oracle."""

import random
from fractions import Fraction

import pytest

from oracles import dense_nullspace, dense_rank, spans_equal, sparse_to_dense
from tn2alg.linsolve import SparseLinearSystem, make_int_row, rank_of_vectors


def dense_rows_to_system(rows, num_cols):
    system = SparseLinearSystem(num_cols)
    for row in rows:
        system.add_row({c: x for c, x in enumerate(row) if x})
    return system


class TestRowNormalization:
    def test_fractions_cleared(self):
        row = make_int_row({0: Fraction(1, 2), 3: Fraction(-2, 3)})
        assert row == {0: 3, 3: -4}

    def test_content_stripped_and_sign_fixed(self):
        assert make_int_row({1: -4, 2: -6}) == {1: 2, 2: 3}

    def test_zero_row(self):
        assert make_int_row({0: 0, 5: Fraction(0)}) == {}


class TestSmallSystems:
    def test_difference_row(self):
        system = SparseLinearSystem(2)
        system.add_row({0: 1, 1: -1})
        basis = system.nullspace()
        assert basis == [{1: Fraction(1), 0: Fraction(1)}]

    def test_empty_system_full_basis(self):
        system = SparseLinearSystem(3)
        basis = system.nullspace()
        assert basis == [{0: Fraction(1)}, {1: Fraction(1)}, {2: Fraction(1)}]

    def test_identically_zero_rows_dropped(self):
        system = SparseLinearSystem(2)
        assert not system.add_row({0: 0})
        assert system.num_rows == 0

    def test_undeclared_unknown_rejected(self):
        system = SparseLinearSystem(2)
        with pytest.raises(ValueError):
            system.add_row({5: 1})

    def test_rank_and_free_columns(self):
        system = SparseLinearSystem(3)
        system.add_row({0: 1, 1: 1})
        system.add_row({1: 1, 2: 1})
        system.add_row({0: 1, 2: -1})  # dependent
        assert system.rank() == 2
        assert system.free_columns() == [2]
        assert system.nullspace() == [{2: Fraction(1), 1: Fraction(-1), 0: Fraction(1)}]


class TestAgainstDenseOracle:
    @pytest.mark.parametrize("seed", range(12))
    def test_random_systems(self, seed):
        rng = random.Random(1000 + seed)
        num_cols = rng.randint(3, 9)
        num_rows = rng.randint(1, 14)
        rows = [
            [
                Fraction(rng.randint(-4, 4)) if rng.random() < 0.5 else Fraction(0)
                for _ in range(num_cols)
            ]
            for _ in range(num_rows)
        ]
        system = dense_rows_to_system(rows, num_cols)
        oracle_basis = dense_nullspace(rows, num_cols)
        got_basis = system.nullspace()
        assert len(got_basis) == len(oracle_basis)
        got_dense = [sparse_to_dense(v, num_cols) for v in got_basis]
        # the reduced-echelon nullspace convention is unique: bases agree
        assert got_dense == oracle_basis
        assert system.rank() == dense_rank(rows, num_cols)

    @pytest.mark.parametrize("seed", range(6))
    def test_residuals_vanish_on_every_row(self, seed):
        rng = random.Random(2000 + seed)
        num_cols = rng.randint(4, 10)
        rows = [
            [Fraction(rng.randint(-3, 3)) for _ in range(num_cols)]
            for _ in range(rng.randint(2, 10))
        ]
        system = dense_rows_to_system(rows, num_cols)
        for v in system.nullspace():
            assert system.residual_rows(v) == []
            assert system.is_solution(v)

    def test_non_solution_detected(self):
        system = SparseLinearSystem(2)
        system.add_row({0: 1, 1: 1})
        assert not system.is_solution({0: Fraction(1)})
        assert system.residual_rows({0: Fraction(1)}) == [0]


class TestDeterminism:
    def test_identical_runs_bit_identical(self):
        def build():
            rng = random.Random(7)
            system = SparseLinearSystem(8)
            for _ in range(20):
                row = {c: rng.randint(-3, 3) for c in rng.sample(range(8), 3)}
                system.add_row(row)
            return system.nullspace()

        assert repr(build()) == repr(build())


class TestRankOfVectors:
    def test_plain_rank(self):
        vecs = [{0: 1, 1: 2}, {0: 2, 1: 4}, {2: Fraction(1, 3)}]
        assert rank_of_vectors(vecs) == 2

    def test_restricted_rank(self):
        vecs = [{0: 1, 1: 1}, {0: 1, 1: 2}]
        assert rank_of_vectors(vecs) == 2
        assert rank_of_vectors(vecs, restrict_to={0}) == 1
        assert rank_of_vectors(vecs, restrict_to=set()) == 0

    def test_matches_dense_rank(self):
        rng = random.Random(3000)
        for _ in range(8):
            num_cols = rng.randint(3, 8)
            vecs = [
                {c: Fraction(rng.randint(-3, 3)) for c in range(num_cols) if rng.random() < 0.6}
                for _ in range(rng.randint(1, 6))
            ]
            dense = [sparse_to_dense(v, num_cols) for v in vecs]
            assert rank_of_vectors(vecs) == dense_rank(dense, num_cols)
