import random
from fractions import Fraction

import pytest

from queeralg.graded import (EVEN, ODD, GradedMap, GradedSpace, Span, commutant,
                             graded_tensor, kernel, mat_kernel, mat_rank,
                             solve_right, tensor_space)
from queeralg.scalars import Tower


@pytest.fixture
def K():
    return Tower()


def rand_map(K, rng, src, tgt, parity):
    rows = [[K.zero()] * src.dim for _ in range(tgt.dim)]
    for i in range(tgt.dim):
        for j in range(src.dim):
            if (tgt.parity(i) + src.parity(j)) % 2 == parity:
                rows[i][j] = K.from_fraction(Fraction(rng.randint(-3, 3), rng.randint(1, 2)))
    return GradedMap(K, src, tgt, rows, parity=parity)


def test_space_basics():
    v = GradedSpace(2, 1)
    assert v.dim == 3
    assert v.parities == (EVEN, EVEN, ODD)
    with pytest.raises(ValueError):
        GradedSpace(-1, 0)


def test_parity_inference_and_check(K):
    v = GradedSpace(1, 1)
    f = GradedMap(K, v, v, [[K.zero(), K.one()], [K.zero(), K.zero()]])
    assert f.parity == ODD
    with pytest.raises(ValueError):
        GradedMap(K, v, v, [[K.one(), K.one()], [K.zero(), K.zero()]], parity=EVEN)


def test_kernel_examples(K):
    v11 = GradedSpace(1, 1)
    ks, _ = kernel(GradedMap.identity(K, v11))
    assert ks.dim == 0
    v21 = GradedSpace(2, 1)
    ks, _ = kernel(GradedMap.zero(K, v21, v21))
    assert (ks.even_dim, ks.odd_dim) == (2, 1)
    # parity-odd map on C^{1|1} with matrix [[0,1],[0,0]]: kernel = even line
    f = GradedMap(K, v11, v11, [[K.zero(), K.one()], [K.zero(), K.zero()]])
    ks, emb = kernel(f)
    assert (ks.even_dim, ks.odd_dim) == (1, 0)
    assert emb.rows[0][0] == K.one() and emb.rows[1][0].is_zero


def test_rank_nullity_random(K):
    rng = random.Random(11)
    for _ in range(100):
        src = GradedSpace(rng.randint(0, 3), rng.randint(0, 3))
        tgt = GradedSpace(rng.randint(0, 3), rng.randint(0, 3))
        f = rand_map(K, rng, src, tgt, rng.randint(0, 1))
        ks, _ = kernel(f)
        assert ks.dim + f.rank() == src.dim


def test_graded_tensor_identity(K):
    v = GradedSpace(1, 1)
    idv = GradedMap.identity(K, v)
    t = graded_tensor(idv, idv)
    assert t == GradedMap.identity(K, t.source)


def test_graded_tensor_odd_square_sign(K):
    # f, g odd on C^{1|1}: (f (x) g)^2 = -(f^2) (x) (g^2)
    v = GradedSpace(1, 1)
    rng = random.Random(3)
    f = rand_map(K, rng, v, v, ODD)
    g = rand_map(K, rng, v, v, ODD)
    lhs = graded_tensor(f, g) * graded_tensor(f, g)
    rhs = graded_tensor(f * f, g * g) * (-1)
    assert lhs == rhs


def test_graded_tensor_composition_sign(K):
    # (f (x) g)(f' (x) g') = (-1)^{|g||f'|} (f f') (x) (g g')
    rng = random.Random(5)
    v = GradedSpace(2, 1)
    for pf, pg, pf2, pg2 in [(0, 1, 1, 0), (1, 1, 1, 1), (0, 0, 1, 1), (1, 0, 0, 1)]:
        f, g = rand_map(K, rng, v, v, pf), rand_map(K, rng, v, v, pg)
        f2, g2 = rand_map(K, rng, v, v, pf2), rand_map(K, rng, v, v, pg2)
        lhs = graded_tensor(f, g) * graded_tensor(f2, g2)
        rhs = graded_tensor(f * f2, g * g2)
        if pg and pf2:
            rhs = rhs * (-1)
        assert lhs == rhs


def test_commutant_full_matrix_algebra(K):
    # ops spanning End(C^{1|1}): even commutant = scalars, odd = 0
    v = GradedSpace(1, 1)
    ops = []
    for i in range(2):
        for j in range(2):
            rows = [[K.zero()] * 2 for _ in range(2)]
            rows[i][j] = K.one()
            ops.append(GradedMap(K, v, v, rows))
    evens = commutant(ops, v, K, parity_filter=EVEN)
    odds = commutant(ops, v, K, parity_filter=ODD)
    assert len(evens) == 1 and len(odds) == 0
    e = evens[0]
    assert e.rows[0][0] == e.rows[1][1] and e.rows[0][1].is_zero


def test_commutant_empty_ops_gives_all(K):
    v = GradedSpace(1, 1)
    maps = commutant([], v, K)
    assert len(maps) == 4


def test_commutant_supercommutes(K):
    rng = random.Random(9)
    v = GradedSpace(2, 2)
    ops = [rand_map(K, rng, v, v, p) for p in (0, 1, 0)]
    for t in commutant(ops, v, K):
        for op in ops:
            resid = t * op - op * t * (1 if not (t.parity and op.parity) else -1)
            assert resid.is_zero


def test_span_incremental(K):
    sp = Span(K)
    assert sp.add([K.one(), K.zero(), K.one()])
    assert sp.add([K.zero(), K.one(), K.one()])
    assert not sp.add([K.one(), K.one(), K.from_int(2)])
    assert sp.dim == 2
    assert sp.contains({0: K.from_int(3), 1: K.from_int(3), 2: K.from_int(6)})
    assert not sp.contains([K.one(), K.zero(), K.zero()])


def test_solve_and_kernel(K):
    rows = [[K.from_int(1), K.from_int(2)], [K.from_int(2), K.from_int(4)]]
    assert mat_rank(rows, 2, K) == 1
    ker = mat_kernel(rows, 2, K)
    assert len(ker) == 1
    x = solve_right(rows, [K.from_int(3), K.from_int(6)], 2, K)
    assert x is not None
    assert x[0] + 2 * x[1] == 3
    assert solve_right(rows, [K.one(), K.one()], 2, K) is None


def test_tensor_space_ordering():
    v = GradedSpace(1, 1, labels=("a", "b"))
    w = GradedSpace(1, 1, labels=("c", "d"))
    t, idx = tensor_space(v, w)
    assert (t.even_dim, t.odd_dim) == (2, 2)
    # even pairs (0,0),(1,1) come first
    assert idx[(0, 0)] == 0 and idx[(1, 1)] == 1
    assert idx[(0, 1)] == 2 and idx[(1, 0)] == 3
