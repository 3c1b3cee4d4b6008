"""Irreducible finite-dimensional modules over the Cartan part h (x) A.

For a functional psi on the even part, the machinery computes the largest
ideal killed by psi, the induced symmetric form on the odd part modulo
that ideal, its nondegenerate reduction, and realizes the unique
irreducible module as a Clifford module of dimension 2^ceil(r/2).
"""

from __future__ import annotations

from fractions import Fraction

from .assocsuper import QuadraticPair, clifford_irrep, density_type_from_maps
from .coeffalg import CoeffAlgebra, IdealRep, quotient_algebra
from .graded import (EVEN, ODD, GradedMap, GradedSpace, Span, commutant,
                     mat_kernel, mat_rref, solve_right, zero_rows)
from .liesuper import LieModule, is_isomorphic_flat, subalgebra
from .mapsuper import tensor_lie
from .queer import QueerData
from .scalars import Scalar


class CartanAlgebra:
    """h (x) A with canonical generator order: even pairs h_i (x) a_j
    first (i major), then odd pairs h'_i (x) a_j."""

    def __init__(self, qd: QueerData, coeff: CoeffAlgebra):
        self.qd = qd
        self.coeff = coeff
        self.tower = qd.tower
        one = self.tower.one()
        h_sub, _ = subalgebra(qd.algebra,
                              [{i: one} for i in qd.cartan_indices], name="h")
        self.h = h_sub
        self.ms = tensor_lie(h_sub, coeff)
        self.n = qd.n
        self.na = coeff.dim
        self.n_even = self.n * self.na

    @property
    def dim(self) -> int:
        return self.ms.dim

    def even_pair(self, i: int, j: int) -> int:
        """Generator index of h_i (x) a_j (0-based i < n, j < dim A)."""
        return i * self.na + j

    def odd_pair(self, i: int, j: int) -> int:
        return self.n_even + i * self.na + j

    def odd_bracket_even_coords(self, i1: int, i2: int):
        """[h'_{i1}, h'_{i2}] expanded over h_1..h_n (inside h alone)."""
        one = self.tower.one()
        br = self.h.bracket({self.n + i1: one}, {self.n + i2: one})
        return br  # keys < n by construction


class PsiFunctional:
    """Functional on the even Cartan part of h (x) A, stored as its values
    on the canonical basis h_i (x) a_j."""

    def __init__(self, ctx: CartanAlgebra, values):
        self.ctx = ctx
        vals = list(values)
        if len(vals) != ctx.n_even:
            raise ValueError("wrong number of values")
        self.values = [ctx.tower._coerce(v) for v in vals]

    @classmethod
    def zero(cls, ctx: CartanAlgebra):
        return cls(ctx, [ctx.tower.zero()] * ctx.n_even)

    @classmethod
    def from_pairs(cls, ctx: CartanAlgebra, pairs):
        """pairs: iterable of (h_label, a_label, scalar), e.g.
        ("h1", "t", value); scalars may be exact strings like "3/2+i"."""
        from .scalars import parse_scalar
        vals = [ctx.tower.zero()] * ctx.n_even
        h_labels = {f"h{i + 1}": i for i in range(ctx.n)}
        a_labels = {lbl: j for j, lbl in enumerate(ctx.coeff.space.labels)}
        for h_lbl, a_lbl, v in pairs:
            if h_lbl not in h_labels:
                raise ValueError(f"unknown Cartan label {h_lbl!r}")
            if a_lbl not in a_labels:
                raise ValueError(f"unknown coefficient label {a_lbl!r}")
            idx = ctx.even_pair(h_labels[h_lbl], a_labels[a_lbl])
            val = parse_scalar(ctx.tower, v) if isinstance(v, str) \
                else ctx.tower._coerce(v)
            vals[idx] = vals[idx] + val
        return cls(ctx, vals)

    @classmethod
    def evaluation(cls, ctx: CartanAlgebra, point: int, lam):
        """psi = lambda composed with evaluation at a declared maximal
        ideal; lam is the list of values on h_1..h_n."""
        vals = []
        one = ctx.tower.one()
        for i in range(ctx.n):
            li = ctx.tower._coerce(lam[i])
            for j in range(ctx.na):
                vals.append(li * ctx.coeff.evaluate(point, {j: one}))
        return cls(ctx, vals)

    def __add__(self, other):
        return PsiFunctional(self.ctx, [a + b for a, b in
                                        zip(self.values, other.values)])

    def is_zero(self) -> bool:
        return all(v.is_zero for v in self.values)

    def __eq__(self, other):
        return isinstance(other, PsiFunctional) and self.values == other.values

    def value(self, i: int, j: int) -> Scalar:
        return self.values[self.ctx.even_pair(i, j)]

    def eval_even(self, h_coords: dict, a_coords: dict) -> Scalar:
        """psi(h (x) a) for h over h_1..h_n and a over the A basis."""
        acc = self.ctx.tower.zero()
        for i, ch in h_coords.items():
            for j, ca in a_coords.items():
                v = self.values[self.ctx.even_pair(i, j)]
                if not v.is_zero:
                    acc = acc + ch * ca * v
        return acc

    def restriction_to_q(self):
        """lambda = psi restricted to h (x) 1: weight tuple on h_1..h_n."""
        one_idx = None
        unit = self.ctx.coeff.unit
        # unit may involve several basis vectors in a quotient; evaluate
        return tuple(self.eval_even({i: self.ctx.tower.one()}, unit)
                     for i in range(self.ctx.n))

    def kills(self, ideal: IdealRep) -> bool:
        """psi(h0 (x) I) == 0."""
        for v in ideal.basis:
            a_coords = {j: s for j, s in enumerate(v) if not s.is_zero}
            for i in range(self.ctx.n):
                if not self.eval_even({i: self.ctx.tower.one()}, a_coords).is_zero:
                    return False
        return True


def i_psi(psi: PsiFunctional) -> IdealRep:
    """Largest ideal I with psi(h0 (x) I) = 0, by one annihilator solve:
    I = {a : psi(h_i (x) b a) = 0 for all i, b}."""
    ctx = psi.ctx
    tower = ctx.tower
    na = ctx.na
    one = tower.one()
    rows = []
    for i in range(ctx.n):
        for b in range(na):
            row = []
            for j in range(na):
                prod = ctx.coeff.product({b: one}, {j: one})
                row.append(psi.eval_even({i: one}, prod))
            rows.append(row)
    kern = mat_kernel(rows, na, tower)
    sp = Span(tower)
    for v in kern:
        sp.add(v)
    ideal = IdealRep(ctx.coeff, sp.basis_vectors(na))
    ideal.verify()
    return ideal


class CliffordData:
    """The quadratic data extracted from psi: the quotient A/I_psi, the
    form f_psi(x, y) = psi([x, y]) on the odd part, its radical, the
    nondegenerate reduction and the distinguished even element z."""

    def __init__(self, psi: PsiFunctional):
        if psi.is_zero():
            raise ValueError("psi = 0 carries no Clifford data; the module "
                             "is trivial")
        ctx = psi.ctx
        tower = ctx.tower
        self.psi = psi
        self.ideal = i_psi(psi)
        self.quotient = quotient_algebra(ctx.coeff, self.ideal)
        nq = self.quotient.dim
        self.odd_basis = [(i, j) for i in range(ctx.n) for j in range(nq)]
        n_odd = len(self.odd_basis)
        # Gram matrix of f_psi on h' (x) A/I
        gram = zero_rows(tower, n_odd, n_odd)
        for a, (i1, j1) in enumerate(self.odd_basis):
            for b, (i2, j2) in enumerate(self.odd_basis):
                hbr = ctx.odd_bracket_even_coords(i1, i2)
                prod_q = self.quotient.product({j1: tower.one()},
                                               {j2: tower.one()})
                prod_a = self.quotient.lift(prod_q)
                gram[a][b] = psi.eval_even(hbr, prod_a)
        self.gram = gram
        self.radical_vectors = mat_kernel(gram, n_odd, tower)
        rref, pivots = mat_rref(gram, n_odd, tower)
        self.reduced_indices = pivots
        self.rank = len(pivots)
        self.reduced_gram = [[gram[p][q] for q in pivots] for p in pivots]
        # distinguished even element z with psi(z) = 1
        self.z = None
        for i in range(ctx.n):
            for j in range(ctx.na):
                v = psi.value(i, j)
                if not v.is_zero:
                    self.z = {("h", i, j): v.inv()}
                    break
            if self.z:
                break
        # projection to the reduced odd coordinates, modulo the radical
        cols = []
        unit_cols = [[tower.one() if t == p else tower.zero()
                      for t in range(n_odd)] for p in pivots]
        cols = unit_cols + self.radical_vectors
        self._proj_rows = [[cols[c][t] for c in range(len(cols))]
                           for t in range(n_odd)]

    def reduce_odd(self, vec):
        """Coordinates of an odd vector over the reduced basis (its class
        modulo the radical)."""
        tower = self.psi.ctx.tower
        sol = solve_right(self._proj_rows, vec, len(self._proj_rows[0]), tower)
        if sol is None:
            raise AssertionError("odd vector outside span of reduction data")
        return sol[:self.rank]


class HModule:
    """The irreducible h (x) A module attached to psi.

    cartan_mats follows the canonical Cartan generator order of the
    CartanAlgebra (even pairs then odd pairs); the even part acts by the
    psi scalars and the radical of f_psi acts by zero.
    """

    def __init__(self, psi: PsiFunctional, pivot_order=None):
        ctx = psi.ctx
        tower = ctx.tower
        self.psi = psi
        self.ctx = ctx
        if psi.is_zero():
            self.data = None
            self.rank = 0
            self.carrier = GradedSpace(1, 0)
            zero_map = GradedMap.zero(tower, self.carrier, self.carrier)
            self.cartan_mats = [zero_map] * ctx.dim
            self.phi = None
            return
        data = CliffordData(psi)
        self.data = data
        self.rank = data.rank
        half = tower.from_fraction(Fraction(1, 2))
        pair = QuadraticPair(tower, [[half * x for x in row]
                                     for row in data.reduced_gram])
        if data.rank > 0:
            irrep = clifford_irrep(pair, pivot_order=pivot_order)
            self.carrier = irrep.space
            gen_maps = irrep.generator_maps
        else:
            self.carrier = GradedSpace(1, 0)
            gen_maps = []
        ident = GradedMap.identity(tower, self.carrier)
        mats = []
        for i in range(ctx.n):
            for j in range(ctx.na):
                mats.append(ident * psi.value(i, j))
        nq = data.quotient.dim
        for i in range(ctx.n):
            for j in range(ctx.na):
                abar = data.quotient.project({j: tower.one()})
                vec = [tower.zero()] * len(data.odd_basis)
                for jq, c in abar.items():
                    vec[i * nq + jq] = c
                coords = data.reduce_odd(vec)
                acc = GradedMap.zero(tower, self.carrier, self.carrier)
                for p, c in enumerate(coords):
                    if not c.is_zero:
                        acc = acc + gen_maps[p] * c
                mats.append(GradedMap(tower, self.carrier, self.carrier,
                                      acc.rows,
                                      parity=ODD if not acc.is_zero else EVEN))
        self.cartan_mats = mats
        self.phi = self._attach_phi() if self.rank % 2 == 1 else None

    @property
    def dim(self) -> int:
        return self.carrier.dim

    def as_lie_module(self) -> LieModule:
        return LieModule(self.ctx.ms.algebra, self.carrier, self.cartan_mats)

    def _attach_phi(self):
        """Odd endomorphism supercommuting with the action, normalized to
        phi^2 = -id (adjoins a square root when needed)."""
        tower = self.ctx.tower
        homog = [m for m in self.cartan_mats if not m.is_zero]
        for phi in commutant(homog, self.carrier, tower, parity_filter=ODD):
            sq = phi * phi
            c = sq.rows[0][0]
            if not c.is_zero and sq == GradedMap.identity(tower, self.carrier) * c:
                t = tower.adjoin_sqrt(-c.inv())
                return phi * t
        raise AssertionError("no odd Schur endomorphism found for odd rank")


def build_H(psi: PsiFunctional, pivot_order=None) -> HModule:
    return HModule(psi, pivot_order=pivot_order)


def classify_cartan_module(v: LieModule, ctx: CartanAlgebra):
    """Read psi off an irreducible h (x) A module and produce an explicit
    isomorphism witness onto build_H(psi)."""
    tower = ctx.tower
    d = density_type_from_maps(v.mats, v.space, tower)
    if not d.certifies_irreducible:
        raise ValueError(f"module is not irreducible (oracle: {d!r})")
    ident = GradedMap.identity(tower, v.space)
    vals = []
    for k in range(ctx.n_even):
        m = v.mats[k]
        c = m.rows[0][0]
        if not (m == ident * c):
            raise ValueError("even Cartan part does not act by scalars")
        vals.append(c)
    psi = PsiFunctional(ctx, vals)
    h = build_H(psi)
    ok, witness = is_isomorphic_flat(v, h.as_lie_module())
    if not ok:
        raise AssertionError("no isomorphism onto the model module found")
    return psi, witness
