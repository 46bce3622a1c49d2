from math import comb

import pytest

from knotpoly.braidword import BraidWord, conjugate, identity, random_braid
from knotpoly.lawrence import (
    NEG_PAIR,
    POS_PAIR,
    RangeError,
    apply_generator,
    apply_word,
    basis_state,
    dump_sector_matrix,
    open_partial_trace,
    sector_basis,
    sector_matrix,
    sector_trace,
)
from knotpoly.oracles import determinant
from knotpoly.polyring import OneVarPoly, QuotientPoly
from strategies import poly

ONE_MINUS_XINV = QuotientPoly(poly((0, 1), (-1, -1)))
ONE_MINUS_X = QuotientPoly(poly((0, 1), (1, -1)))


def all_vectors(n):
    for m in range(n + 1):
        yield from sector_basis(n, m)


def amplitude(state, v):
    return state.get(tuple(v), QuotientPoly.zero())


class TestBasis:
    def test_small(self):
        assert sector_basis(2, 1) == [(0, 1), (1, 0)]
        assert sector_basis(3, 0) == [(0, 0, 0)]
        assert len(sector_basis(4, 2)) == 6

    @pytest.mark.parametrize("n", range(0, 7))
    def test_counts(self, n):
        for m in range(n + 1):
            basis = sector_basis(n, m)
            assert len(basis) == comb(n, m)
            assert basis == sorted(set(basis))
            assert all(sum(v) == m for v in basis)

    def test_range(self):
        with pytest.raises(RangeError):
            sector_basis(2, 3)


class TestGenerator:
    def test_pair_eigenvalues(self):
        assert apply_generator(basis_state((1, 1)), 1, 1) == {(1, 1): POS_PAIR}
        assert apply_generator(basis_state((1, 1)), 1, -1) == {(1, 1): NEG_PAIR}
        assert POS_PAIR == QuotientPoly(poly((0, 1), (-1, -1)), 1)
        assert NEG_PAIR == QuotientPoly(0, poly((1, 1)))
        assert POS_PAIR * NEG_PAIR == QuotientPoly.one()

    def test_empty_pair_fixed(self):
        for sign in (1, -1):
            assert apply_generator(basis_state((0, 0)), 1, sign) == {(0, 0): QuotientPoly.one()}

    def test_stabilisation_diagonals(self):
        pos = {v: amplitude(apply_generator(basis_state(v), 1, 1), v) for v in [(1, 0), (0, 1)]}
        neg = {v: amplitude(apply_generator(basis_state(v), 1, -1), v) for v in [(1, 0), (0, 1)]}
        assert pos == {(1, 0): QuotientPoly.zero(), (0, 1): ONE_MINUS_XINV}
        assert neg == {(1, 0): ONE_MINUS_X, (0, 1): QuotientPoly.zero()}

    def test_local(self):
        out = apply_generator(basis_state((1, 0, 1)), 2, 1)
        assert out == {(1, 1, 0): QuotientPoly(poly((-1, 1))), (1, 0, 1): ONE_MINUS_XINV}

    def test_bad_index(self):
        with pytest.raises(RangeError):
            apply_generator(basis_state((0, 1)), 2, 1)
        with pytest.raises(RangeError):
            apply_word((0, 1, 0), BraidWord(2, (1,)))


class TestWords:
    def test_identity(self):
        for v in all_vectors(3):
            assert apply_word(v, identity(3)) == basis_state(v)

    @pytest.mark.parametrize("n", range(2, 6))
    def test_inverse_pairs(self, n):
        for i in range(1, n):
            for word in ((i, -i), (-i, i)):
                for v in all_vectors(n):
                    assert apply_word(v, BraidWord(n, word)) == basis_state(v)

    @pytest.mark.parametrize("n", range(3, 6))
    def test_braid_relations(self, n):
        for i in range(1, n):
            for j in range(1, n):
                if abs(i - j) == 1:
                    lhs, rhs = (i, j, i), (j, i, j)
                elif abs(i - j) >= 2:
                    lhs, rhs = (i, j), (j, i)
                else:
                    continue
                for si in (1, -1):
                    for sj in (1, -1):
                        if abs(i - j) == 1 and si != sj:
                            continue
                        left = BraidWord(n, tuple(g * (si if g == i else sj) for g in lhs))
                        right = BraidWord(n, tuple(g * (si if g == i else sj) for g in rhs))
                        for v in all_vectors(n):
                            assert apply_word(v, left) == apply_word(v, right), (left, right, v)

    @pytest.mark.parametrize("seed", range(20))
    def test_weight_grading(self, seed):
        b = random_braid(5, 10, seed)
        for v in all_vectors(5):
            assert all(sum(w) == sum(v) for w in apply_word(v, b))
            assert all(amp for amp in apply_word(v, b).values())


# Independent route for the m = 1 block on two strands: plain 2x2 matrices,
# rows/columns ordered ((1,0), (0,1)), column j = image of basis j.
def burau_block_power(k):
    xinv = OneVarPoly.monomial(-2)
    m = [[OneVarPoly(), xinv], [OneVarPoly.const(1), OneVarPoly.const(1) - xinv]]
    acc = [[OneVarPoly.const(1), OneVarPoly()], [OneVarPoly(), OneVarPoly.const(1)]]
    for _ in range(k):
        acc = [[sum((acc[r][t] * m[t][c] for t in range(2)), OneVarPoly()) for c in range(2)] for r in range(2)]
    return acc


class TestTraces:
    def test_burau_trace(self):
        assert sector_trace(2, 1, BraidWord(2, (1,))) == ONE_MINUS_XINV

    @pytest.mark.parametrize("n", range(1, 6))
    def test_identity_trace(self, n):
        for m in range(n + 1):
            assert sector_trace(n, m, identity(n)) == QuotientPoly(comb(n, m))

    def test_pair_trace(self):
        assert sector_trace(2, 2, BraidWord(2, (1,))) == POS_PAIR

    def test_open_trace_cubed_block(self):
        expected = burau_block_power(3)[1][1]
        assert expected == poly((0, 1), (-1, -1)) * poly((0, 1), (-2, 1))
        assert open_partial_trace(2, 1, BraidWord(2, (1, 1, 1))) == QuotientPoly(expected)

    @pytest.mark.parametrize("k", range(0, 6))
    def test_block_powers_match_engine(self, k):
        mat = sector_matrix(2, 1, BraidWord(2, (1,) * k))
        block = burau_block_power(k)
        # sector basis order is ((0,1), (1,0)); the oracle uses ((1,0), (0,1))
        flip = [1, 0]
        for r in range(2):
            for c in range(2):
                assert mat[flip[r]][flip[c]] == QuotientPoly(block[r][c])

    def test_open_trace_trivial(self):
        assert open_partial_trace(1, 0, identity(1)) == QuotientPoly.one()
        for seed in range(5):
            b = random_braid(4, 8, seed)
            assert open_partial_trace(4, 0, b) == QuotientPoly.one()

    def test_open_trace_range(self):
        with pytest.raises(RangeError):
            open_partial_trace(2, 2, identity(2))

    @pytest.mark.parametrize("seed", range(30))
    def test_trace_conjugation_invariant(self, seed):
        n = 2 + seed % 4
        b = random_braid(n, 1 + seed % 10, seed)
        g = random_braid(n, 1 + (seed * 7) % 10, seed + 100)
        c = conjugate(b, g)
        for m in range(n + 1):
            assert sector_trace(n, m, b) == sector_trace(n, m, c)

    @pytest.mark.parametrize("seed", range(10))
    def test_burau_block_determinant(self, seed):
        n = 2 + seed % 4
        b = random_braid(n, seed % 7, seed)
        mat = sector_matrix(n, 1, b)
        assert all(e.b.is_zero() for row in mat for e in row)
        det = determinant([[e.a for e in row] for row in mat])
        pos = sum(1 for g in b.word if g > 0)
        neg = len(b) - pos
        expected = OneVarPoly.monomial(2 * (neg - pos), (-1) ** (pos + neg))
        assert det == expected

    def test_trace_matches_full_matrix(self):
        b = random_braid(4, 9, 5)
        for m in range(5):
            mat = sector_matrix(4, m, b)
            diag = sum((mat[k][k] for k in range(len(mat))), QuotientPoly.zero())
            assert diag == sector_trace(4, m, b)

    def test_dump(self):
        dump = dump_sector_matrix(2, 1, BraidWord(2, (1,)))
        assert dump["basis"] == [[0, 1], [1, 0]]
        assert dump["matrix"][0][0] == {"a": [[-2, -1], [0, 1]], "b": []}
        assert dump["matrix"][1][0] == {"a": [[-2, 1]], "b": []}
