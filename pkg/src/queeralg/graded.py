"""Z2-graded vector spaces, parity-homogeneous maps, and the exact
linear-algebra routines (elimination, kernels, spans, supercommutants)
used by every other module.

Basis order convention, used for every matrix in the package: even basis
vectors come before odd ones; within a parity, construction order.
"""

from __future__ import annotations

from .scalars import Scalar, Tower

EVEN, ODD = 0, 1


class GradedSpace:
    """Finite-dimensional Z2-graded space with a chosen homogeneous basis."""

    __slots__ = ("even_dim", "odd_dim", "labels")

    def __init__(self, even_dim: int, odd_dim: int, labels=None):
        if even_dim < 0 or odd_dim < 0:
            raise ValueError("negative dimension")
        self.even_dim = even_dim
        self.odd_dim = odd_dim
        if labels is None:
            labels = tuple(f"e{k}" for k in range(even_dim)) + \
                tuple(f"o{k}" for k in range(odd_dim))
        if len(labels) != even_dim + odd_dim:
            raise ValueError("label count does not match dimension")
        self.labels = tuple(labels)

    @property
    def dim(self) -> int:
        return self.even_dim + self.odd_dim

    def parity(self, idx: int) -> int:
        return EVEN if idx < self.even_dim else ODD

    @property
    def parities(self):
        return (EVEN,) * self.even_dim + (ODD,) * self.odd_dim

    def __eq__(self, other):
        return (isinstance(other, GradedSpace)
                and self.even_dim == other.even_dim
                and self.odd_dim == other.odd_dim)

    def __repr__(self):
        return f"GradedSpace({self.even_dim}|{self.odd_dim})"


def tensor_space(v: GradedSpace, w: GradedSpace):
    """Graded tensor product space, basis reordered even-first.

    Returns (space, index) where index[(i, j)] is the position of
    v_i (x) w_j in the product basis.
    """
    pairs_even, pairs_odd = [], []
    for i in range(v.dim):
        for j in range(w.dim):
            (pairs_even if (v.parity(i) + w.parity(j)) % 2 == EVEN
             else pairs_odd).append((i, j))
    pairs = pairs_even + pairs_odd
    labels = tuple(f"{v.labels[i]}*{w.labels[j]}" for i, j in pairs)
    space = GradedSpace(len(pairs_even), len(pairs_odd), labels)
    index = {p: k for k, p in enumerate(pairs)}
    return space, index


# ---------------------------------------------------------------------------
# Dense exact matrices (lists of rows of Scalars)
# ---------------------------------------------------------------------------


def zero_rows(tower: Tower, nrows: int, ncols: int):
    z = tower.zero()
    return [[z] * ncols for _ in range(nrows)]


def identity_rows(tower: Tower, n: int):
    rows = zero_rows(tower, n, n)
    one = tower.one()
    for k in range(n):
        rows[k][k] = one
    return rows


def mat_mul(a, b, tower: Tower):
    n, m = len(a), len(b[0]) if b else 0
    out = zero_rows(tower, n, m)
    for i, arow in enumerate(a):
        orow = out[i]
        for k, av in enumerate(arow):
            if av.is_zero:
                continue
            brow = b[k]
            for j, bv in enumerate(brow):
                if not bv.is_zero:
                    orow[j] = orow[j] + av * bv
    return out


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, s: Scalar):
    return [[x * s for x in row] for row in a]


def mat_vec(a, v, tower: Tower):
    out = []
    for row in a:
        acc = tower.zero()
        for x, c in zip(row, v):
            if not x.is_zero and not c.is_zero:
                acc = acc + x * c
        out.append(acc)
    return out


def mat_is_zero(a) -> bool:
    return all(x.is_zero for row in a for x in row)


def mat_eq(a, b) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def mat_rref(rows, ncols: int, tower: Tower):
    """Reduced row echelon form by exact Gaussian elimination with
    first-nonzero pivoting.  Returns (rref_rows, pivot_cols); zero rows
    are dropped."""
    work = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for k in range(r, len(work)):
            if not work[k][c].is_zero:
                pr = k
                break
        if pr is None:
            continue
        work[r], work[pr] = work[pr], work[r]
        inv = work[r][c].inv()
        work[r] = [x * inv for x in work[r]]
        for k in range(len(work)):
            if k != r and not work[k][c].is_zero:
                f = work[k][c]
                work[k] = [x - f * y for x, y in zip(work[k], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return work[:r], pivots


def mat_rank(rows, ncols: int, tower: Tower) -> int:
    return len(mat_rref(rows, ncols, tower)[0])


def mat_kernel(rows, ncols: int, tower: Tower):
    """Basis (list of coordinate vectors) of {x : A x = 0}."""
    rref, pivots = mat_rref(rows, ncols, tower)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    zero, one = tower.zero(), tower.one()
    for f in free:
        vec = [zero] * ncols
        vec[f] = one
        for r, p in enumerate(pivots):
            vec[p] = -rref[r][f]
        basis.append(vec)
    return basis


def solve_right(rows, rhs, ncols: int, tower: Tower):
    """One solution x of A x = b, or None (A given as rows, b a vector)."""
    aug = [list(r) + [v] for r, v in zip(rows, rhs)]
    rref, pivots = mat_rref(aug, ncols + 1, tower)
    zero = tower.zero()
    x = [zero] * ncols
    for r, p in enumerate(pivots):
        if p == ncols:
            return None  # inconsistent
        x[p] = rref[r][ncols]
    return x


class Span:
    """Incrementally maintained echelon basis of a subspace of K^n.

    Vectors may be supplied as dense lists or as {index: Scalar} dicts;
    rows are stored sparsely with pivot entry normalized to 1.
    """

    def __init__(self, tower: Tower):
        self.tower = tower
        self.rows: dict[int, dict[int, Scalar]] = {}

    @property
    def dim(self) -> int:
        return len(self.rows)

    def _as_dict(self, vec) -> dict:
        if isinstance(vec, dict):
            return {k: v for k, v in vec.items() if not v.is_zero}
        return {k: v for k, v in enumerate(vec) if not v.is_zero}

    def reduce(self, vec) -> dict:
        """Residual of vec modulo the current span (sparse dict)."""
        v = self._as_dict(vec)
        while v:
            p = min(v)
            row = self.rows.get(p)
            if row is None:
                return v
            f = v[p]
            for k, x in row.items():
                cur = v.get(k, None)
                nxt = (cur - f * x) if cur is not None else -f * x
                if nxt.is_zero:
                    v.pop(k, None)
                else:
                    v[k] = nxt
        return v

    def add(self, vec) -> bool:
        """Insert vec; True if the dimension grew."""
        v = self.reduce(vec)
        if not v:
            return False
        p = min(v)
        inv = v[p].inv()
        row = {k: x * inv for k, x in v.items()}
        # back-substitute into existing rows to keep reduced form
        for q, other in self.rows.items():
            f = other.get(p)
            if f is not None:
                for k, x in row.items():
                    cur = other.get(k)
                    nxt = (cur - f * x) if cur is not None else -f * x
                    if nxt.is_zero:
                        other.pop(k, None)
                    else:
                        other[k] = nxt
        self.rows[p] = row
        return True

    def contains(self, vec) -> bool:
        return not self.reduce(vec)

    def basis_vectors(self, n: int):
        """Dense basis rows (deterministic pivot order)."""
        zero = self.tower.zero()
        out = []
        for p in sorted(self.rows):
            row = [zero] * n
            for k, x in self.rows[p].items():
                row[k] = x
            out.append(row)
        return out


# ---------------------------------------------------------------------------
# Graded maps
# ---------------------------------------------------------------------------


class GradedMap:
    """Linear map between graded spaces; matrix columns are images of
    source basis vectors.  parity is 0, 1 or None (inhomogeneous)."""

    __slots__ = ("tower", "source", "target", "rows", "parity")

    def __init__(self, tower: Tower, source: GradedSpace, target: GradedSpace,
                 rows, parity="infer"):
        self.tower = tower
        self.source = source
        self.target = target
        self.rows = rows
        if len(rows) != target.dim or any(len(r) != source.dim for r in rows):
            raise ValueError("matrix shape does not match spaces")
        if parity == "infer":
            parity = self._infer_parity()
        else:
            self._check_parity(parity)
        self.parity = parity

    def _infer_parity(self):
        seen = set()
        for i, row in enumerate(self.rows):
            pi = self.target.parity(i)
            for j, x in enumerate(row):
                if not x.is_zero:
                    seen.add((pi + self.source.parity(j)) % 2)
        if len(seen) == 2:
            return None
        if len(seen) == 1:
            return seen.pop()
        return EVEN  # zero map counts as even

    def _check_parity(self, parity):
        if parity is None:
            return
        for i, row in enumerate(self.rows):
            for j, x in enumerate(row):
                if not x.is_zero and \
                        (self.target.parity(i) + self.source.parity(j)) % 2 != parity:
                    raise ValueError("matrix entries violate declared parity")

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, tower, source, target):
        return cls(tower, source, target, zero_rows(tower, target.dim, source.dim),
                   parity=EVEN)

    @classmethod
    def identity(cls, tower, space):
        return cls(tower, space, space, identity_rows(tower, space.dim), parity=EVEN)

    # -- algebra -----------------------------------------------------------

    def __mul__(self, other):
        if isinstance(other, GradedMap):
            if other.target != self.source:
                raise ValueError("composition shape mismatch")
            p = None
            if self.parity is not None and other.parity is not None:
                p = (self.parity + other.parity) % 2
            return GradedMap(self.tower, other.source, self.target,
                             mat_mul(self.rows, other.rows, self.tower), p)
        if isinstance(other, (Scalar, int)):
            s = self.tower._coerce(other)
            return GradedMap(self.tower, self.source, self.target,
                             mat_scale(self.rows, s), self.parity)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (Scalar, int)):
            return self * other
        return NotImplemented

    def __add__(self, other):
        if not isinstance(other, GradedMap):
            return NotImplemented
        p = self.parity if self.parity == other.parity else None
        return GradedMap(self.tower, self.source, self.target,
                         mat_add(self.rows, other.rows), p)

    def __sub__(self, other):
        return self + other * (-1)

    def __neg__(self):
        return self * (-1)

    def __eq__(self, other):
        return (isinstance(other, GradedMap) and self.source == other.source
                and self.target == other.target and mat_eq(self.rows, other.rows))

    @property
    def is_zero(self) -> bool:
        return mat_is_zero(self.rows)

    def apply(self, vec):
        return mat_vec(self.rows, vec, self.tower)

    def rank(self) -> int:
        return mat_rank(self.rows, self.source.dim, self.tower)

    def __repr__(self):
        return (f"GradedMap({self.source!r}->{self.target!r}, "
                f"parity={self.parity})")


def kernel(f: GradedMap):
    """Kernel of f with a homogeneous basis, as (space, embedding).

    For a parity-homogeneous f the kernel is computed blockwise over the
    even and odd source coordinates (it is automatically graded); an
    inhomogeneous map is rejected.
    """
    if f.parity is None:
        raise ValueError("kernel of an inhomogeneous map is not graded")
    src = f.source
    blocks = {EVEN: [j for j in range(src.dim) if src.parity(j) == EVEN],
              ODD: [j for j in range(src.dim) if src.parity(j) == ODD]}
    vecs = {EVEN: [], ODD: []}
    for par, cols in blocks.items():
        if not cols:
            continue
        sub = [[row[j] for j in cols] for row in f.rows]
        for kvec in mat_kernel(sub, len(cols), f.tower):
            full = [f.tower.zero()] * src.dim
            for c, j in enumerate(cols):
                full[j] = kvec[c]
            vecs[par].append(full)
    basis = vecs[EVEN] + vecs[ODD]
    ker_space = GradedSpace(len(vecs[EVEN]), len(vecs[ODD]))
    cols = basis  # embedding columns
    rows = [[cols[j][i] for j in range(len(cols))] for i in range(src.dim)]
    if not cols:
        rows = zero_rows(f.tower, src.dim, 0)
    emb = GradedMap(f.tower, ker_space, src, rows, parity=EVEN)
    return ker_space, emb


def graded_tensor(f: GradedMap, g: GradedMap):
    """Koszul-signed tensor of maps:
    (f (x) g)(v (x) w) = (-1)^{|g||v|} f(v) (x) g(w)."""
    if f.parity is None or g.parity is None:
        raise ValueError("graded_tensor requires parity-homogeneous maps")
    tower = f.tower
    src, src_idx = tensor_space(f.source, g.source)
    tgt, tgt_idx = tensor_space(f.target, g.target)
    rows = zero_rows(tower, tgt.dim, src.dim)
    for j in range(f.source.dim):
        sign = -1 if (g.parity and f.source.parity(j)) else 1
        for l in range(g.source.dim):
            col = src_idx[(j, l)]
            for i in range(f.target.dim):
                a = f.rows[i][j]
                if a.is_zero:
                    continue
                if sign < 0:
                    a = -a
                for k in range(g.target.dim):
                    b = g.rows[k][l]
                    if not b.is_zero:
                        rows[tgt_idx[(i, k)]][col] = rows[tgt_idx[(i, k)]][col] + a * b
    return GradedMap(tower, src, tgt, rows, parity=(f.parity + g.parity) % 2)


def commutant(ops, space: GradedSpace, tower: Tower, parity_filter=(EVEN, ODD)):
    """Basis of {T of requested parity on space :
    T r - (-1)^{|T||r|} r T = 0 for all r in ops}.

    Each op must be parity-homogeneous.  Returns a list of GradedMap.
    """
    if isinstance(parity_filter, int):
        parity_filter = (parity_filter,)
    for op in ops:
        if op.parity is None:
            raise ValueError("commutant requires parity-homogeneous operators")
    n = space.dim
    out = []
    for p in parity_filter:
        slots = [(i, j) for i in range(n) for j in range(n)
                 if (space.parity(i) + space.parity(j)) % 2 == p]
        slot_idx = {s: k for k, s in enumerate(slots)}
        rows = []
        for op in ops:
            sgn = -1 if (p and op.parity) else 1
            for i in range(n):
                for j in range(n):
                    # entry (i, j) of T*op - sign*op*T
                    row = [tower.zero()] * len(slots)
                    nz = False
                    for k in range(n):
                        a = op.rows[k][j]
                        if not a.is_zero and (i, k) in slot_idx:
                            row[slot_idx[(i, k)]] = row[slot_idx[(i, k)]] + a
                            nz = True
                        b = op.rows[i][k]
                        if not b.is_zero and (k, j) in slot_idx:
                            term = -b if sgn > 0 else b
                            row[slot_idx[(k, j)]] = row[slot_idx[(k, j)]] + term
                            nz = True
                    if nz:
                        rows.append(row)
        for kvec in mat_kernel(rows, len(slots), tower) if rows else \
                [[tower.one() if k == m else tower.zero()
                  for k in range(len(slots))] for m in range(len(slots))]:
            mat = zero_rows(tower, n, n)
            for k, (i, j) in enumerate(slots):
                if not kvec[k].is_zero:
                    mat[i][j] = kvec[k]
            out.append(GradedMap(tower, space, space, mat, parity=p))
    return out
