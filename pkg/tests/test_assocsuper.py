import random
from fractions import Fraction

import pytest

from queeralg.assocsuper import (ModuleAction, QuadraticPair, assoc_tensor,
                                 classify_simple, clifford, clifford_irrep,
                                 density_type, make_M, make_Q, odd_center,
                                 straighten)
from queeralg.graded import GradedMap, GradedSpace
from queeralg.scalars import Tower


@pytest.fixture
def K():
    return Tower()


def form(K, rows):
    return QuadraticPair(K, [[K.from_fraction(Fraction(x)) for x in r] for r in rows])


def natural_module(K, alg, m, n=None):
    """Column action of M(m|n) or Q(m) on C^{m|n} / C^{m|m}."""
    if n is None:  # Q(m)
        space = GradedSpace(m, m)
        mats = []
        for k in range(alg.dim):
            rows = [[K.zero()] * 2 * m for _ in range(2 * m)]
            lbl = alg.space.labels[k]
            i, j = (int(t) - 1 for t in lbl[2:-1].split(","))
            if lbl.startswith("D"):
                rows[i][j] = K.one()
                rows[m + i][m + j] = K.one()
            else:
                rows[i][m + j] = K.one()
                rows[m + i][j] = K.one()
            mats.append(GradedMap(K, space, space, rows))
        return ModuleAction(alg, space, mats)
    space = GradedSpace(m, n)
    mats = []
    for k in range(alg.dim):
        lbl = alg.space.labels[k]
        i, j = (int(t) - 1 for t in lbl[2:-1].split(","))
        rows = [[K.zero()] * (m + n) for _ in range(m + n)]
        rows[i][j] = K.one()
        mats.append(GradedMap(K, space, space, rows))
    return ModuleAction(alg, space, mats)


def test_make_M_dims(K):
    a = make_M(K, 1, 1)
    assert a.dim == 4 and a.space.even_dim == 2
    a.check()
    b = make_M(K, 2, 1)
    assert b.dim == 9 and b.space.even_dim == 5
    b.check()


def test_make_Q_dims(K):
    q1 = make_Q(K, 1)
    assert q1.dim == 2 and q1.space.even_dim == 1
    q1.check()
    q2 = make_Q(K, 2)
    assert q2.dim == 8 and q2.space.even_dim == 4
    q2.check()


def test_clifford_dims_and_relations(K):
    assert clifford(form(K, [])).dim == 1
    c1 = clifford(form(K, [[1]]))
    assert c1.dim == 2
    c2 = clifford(form(K, [[1, 0], [0, 1]]))
    assert c2.dim == 4
    c2.check()
    # x_i x_j + x_j x_i = 2 f(x_i, x_j)
    f = form(K, [[1, 2], [2, 3]])
    c = clifford(f)
    one = K.one()
    for i in range(2):
        for j in range(2):
            gi, gj = c.generator_indices[i], c.generator_indices[j]
            anti = c.product({gi: one}, {gj: one})
            for k, s in c.product({gj: one}, {gi: one}).items():
                anti[k] = anti.get(k, K.zero()) + s
            anti = {k: v for k, v in anti.items() if not v.is_zero}
            assert anti == {0: 2 * f.rows[i][j]} or (not anti and f.rows[i][j].is_zero)


def test_straighten_involutive(K):
    f = form(K, [[1, 1, 0], [1, 2, 1], [0, 1, 1]])
    rng = random.Random(2)
    for _ in range(20):
        word = [rng.randrange(3) for _ in range(rng.randint(0, 5))]
        once = straighten(word, f.rows, K)
        for mask, coeff in once.items():
            bits = [j for j in range(3) if mask >> j & 1]
            again = straighten(bits, f.rows, K)
            assert again == {mask: K.one()}
        assert coeff is not None or not word


def test_odd_center_examples(K):
    sp, vecs = odd_center(make_M(K, 1, 1))
    assert sp.dim == 0 and not vecs
    sp, vecs = odd_center(make_Q(K, 1))
    assert sp.dim == 1
    sp, vecs = odd_center(clifford(form(K, [[1]])))
    assert sp.dim == 1


def test_classify_simple_examples(K):
    assert classify_simple(make_M(K, 2, 1)).kind == "M"
    assert classify_simple(make_M(K, 2, 1)).m == 2
    t = classify_simple(clifford(form(K, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])))
    assert (t.kind, t.m) == ("Q", 2)
    assert classify_simple(clifford(form(K, [[0]]))).kind == "not_simple"
    # degenerate but with invertible generators: rank-1 all-ones form
    assert classify_simple(clifford(form(K, [[1, 1], [1, 1]]))).kind == "not_simple"


def test_classify_simple_q_and_m(K):
    t = classify_simple(make_Q(K, 2))
    assert (t.kind, t.m) == ("Q", 2)
    # M(1|2) and M(2|1) are isomorphic superalgebras; normal form has m >= n
    t = classify_simple(make_M(K, 1, 2))
    assert (t.kind, t.m, t.n) == ("M", 2, 1)


def test_q1_tensor_q1_is_M11(K):
    t = classify_simple(assoc_tensor(make_Q(K, 1), make_Q(K, 1)))
    assert (t.kind, t.m, t.n) == ("M", 1, 1)


def test_qm_tensor_q1_is_type_M(K):
    for m in (1, 2):
        a = assoc_tensor(make_Q(K, m), make_Q(K, 1))
        a.check()
        assert classify_simple(a).kind == "M"


def test_clifford_irrep_small(K):
    act = clifford_irrep(form(K, [[1]]))
    assert act.space.dim == 2
    act.check()
    x = act.generator_maps[0]
    assert x.rows[0][1] == K.one() and x.rows[1][0] == K.one()
    act2 = clifford_irrep(form(K, [[1, 0], [0, 1]]))
    assert act2.space.dim == 2
    act2.check()
    act4 = clifford_irrep(form(K, [[1, 0, 0, 0], [0, 1, 0, 0],
                                   [0, 0, 1, 0], [0, 0, 0, 1]]))
    assert act4.space.dim == 4
    act4.check()


def test_clifford_irrep_degenerate_rejected(K):
    with pytest.raises(ValueError):
        clifford_irrep(form(K, [[1, 1], [1, 1]]))


def test_clifford_irrep_nondiagonal_form(K):
    f = form(K, [[0, 1], [1, 0]])
    act = clifford_irrep(f)
    act.check()
    assert act.space.dim == 2


def test_density_type_examples(K):
    m11 = make_M(K, 1, 1)
    d = density_type(natural_module(K, m11, 1, 1))
    assert d.kind == "full"
    q1 = make_Q(K, 1)
    d = density_type(natural_module(K, q1, 1))
    assert d.kind == "qcomm" and d.closure_dim == 2


def test_density_tensor_action_reducible(K):
    # Q(1)+Q(1) acting on C^{1|1} (x) C^{1|1} through x(x)1 and 1(x)y
    q1 = make_Q(K, 1)
    nat = natural_module(K, q1, 1)
    idm = GradedMap.identity(K, nat.space)
    from queeralg.graded import graded_tensor
    ops = [graded_tensor(m, idm) for m in nat.mats] + \
        [graded_tensor(idm, m) for m in nat.mats]
    from queeralg.assocsuper import density_type_from_maps
    d = density_type_from_maps(ops, ops[0].source, K)
    assert d.kind == "smaller" and d.closure_dim == 4


def test_density_on_clifford_irreps(K):
    for r, expect in [(1, "qcomm"), (2, "full"), (3, "qcomm"), (4, "full")]:
        kk = Tower()
        rows = [[kk.from_int(1 if i == j else 0) for j in range(r)] for i in range(r)]
        act = clifford_irrep(QuadraticPair(kk, rows))
        assert density_type(act).kind == expect


def test_classify_clifford_random_forms(K):
    rng = random.Random(13)
    for r in range(1, 5):
        for _ in range(2):
            kk = Tower()
            rows = [[kk.zero()] * r for _ in range(r)]
            while True:
                for i in range(r):
                    for j in range(i, r):
                        rows[i][j] = rows[j][i] = kk.from_int(rng.randint(-2, 2))
                q = QuadraticPair(kk, rows)
                if q.radical_dim() == 0:
                    break
            t = classify_simple(clifford(q))
            assert t.kind == ("Q" if r % 2 else "M")
