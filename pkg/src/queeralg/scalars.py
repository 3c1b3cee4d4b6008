"""Exact scalar arithmetic in a tower of quadratic extensions of Q(i).

Every scalar in one computation context lives in a common field
Q(i)[s1, ..., sk] / (sj^2 - dj), where each dj is an element of the
subtower generated by s1, ..., s_{j-1}.  New square roots are adjoined
on demand; a root is only adjoined when the radicand is not already a
square, so the tower never acquires zero divisors and remains a field.

Coefficients over the monomial basis {prod_{j in S} sj : S subset} are
Gaussian rationals stored as normalized integer triples (a, b, d)
meaning (a + b*i)/d with gcd(a, b, d) = 1 and d > 0.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

# ---------------------------------------------------------------------------
# Gaussian rational triples (a, b, d)  <->  (a + b i)/d
# ---------------------------------------------------------------------------

QI_ZERO = (0, 0, 1)
QI_ONE = (1, 0, 1)
QI_I = (0, 1, 1)


def qi_make(a: int, b: int, d: int):
    if d == 0:
        raise ZeroDivisionError("zero denominator")
    if a == 0 and b == 0:
        return QI_ZERO
    if d == 1:
        return (a, b, 1)
    if d < 0:
        a, b, d = -a, -b, -d
    g = gcd(gcd(a, b), d)
    if g > 1:
        a, b, d = a // g, b // g, d // g
    return (a, b, d)


def qi_add(x, y):
    a1, b1, d1 = x
    a2, b2, d2 = y
    return qi_make(a1 * d2 + a2 * d1, b1 * d2 + b2 * d1, d1 * d2)


def qi_neg(x):
    a, b, d = x
    return (-a, -b, d)


def qi_sub(x, y):
    return qi_add(x, qi_neg(y))


def qi_mul(x, y):
    a1, b1, d1 = x
    a2, b2, d2 = y
    return qi_make(a1 * a2 - b1 * b2, a1 * b2 + b1 * a2, d1 * d2)


def qi_inv(x):
    a, b, d = x
    n = a * a + b * b
    if n == 0:
        raise ZeroDivisionError("division by zero in Q(i)")
    return qi_make(a * d, -b * d, n)


def qi_from_fraction(fr: Fraction):
    return qi_make(fr.numerator, 0, fr.denominator)


def _fraction_sqrt(fr: Fraction):
    """Exact square root of a rational, or None."""
    if fr < 0:
        return None
    p, q = fr.numerator, fr.denominator
    rp, rq = isqrt(p), isqrt(q)
    if rp * rp == p and rq * rq == q:
        return Fraction(rp, rq)
    return None


def qi_sqrt(x):
    """Square root of (a + b i)/d inside Q(i), or None."""
    a, b, d = x
    if b == 0:
        r = _fraction_sqrt(Fraction(a, d))
        if r is not None:
            return qi_from_fraction(r)
        r = _fraction_sqrt(Fraction(-a, d))
        if r is not None:
            return qi_make(0, r.numerator, r.denominator)
        return None
    # c^2 - e^2 = a/d, 2 c e = b/d, c^2 + e^2 = |x|; need |x| rational.
    s = isqrt(a * a + b * b)
    if s * s != a * a + b * b:
        return None
    c2 = Fraction(a + s, 2 * d)
    c = _fraction_sqrt(c2)
    if c is None or c == 0:
        return None
    e = Fraction(b, d) / (2 * c)
    y = qi_make(c.numerator * e.denominator, e.numerator * c.denominator,
                c.denominator * e.denominator)
    if qi_mul(y, y) == qi_make(a, b, d):
        return y
    return None


def qi_str(x) -> str:
    a, b, d = x
    if b == 0:
        return f"{a}/{d}" if d != 1 else f"{a}"
    re = f"{a}/{d}" if d != 1 else f"{a}"
    im = f"{abs(b)}/{d}" if d != 1 else f"{abs(b)}"
    sign = "-" if b < 0 else "+"
    if a == 0:
        return f"{'-' if b < 0 else ''}{im}*i"
    return f"{re}{sign}{im}*i"


# ---------------------------------------------------------------------------
# Tower and Scalar
# ---------------------------------------------------------------------------


class Tower:
    """Append-only descriptor of the quadratic extension tower.

    Holds the defining radicands d1, ..., dk.  All scalars of one
    computation context must reference the same Tower instance; the
    single-writer contract applies to adjoin_sqrt.
    """

    __slots__ = ("gens", "_roots")

    def __init__(self):
        self.gens: list[Scalar] = []
        # cache of known square roots (successes only: append-only towers
        # never invalidate a found root, while a cached failure would be)
        self._roots: dict = {}

    @property
    def height(self) -> int:
        return len(self.gens)

    def gen_name(self, j: int) -> str:
        return f"s{j + 1}"

    # -- constructors -------------------------------------------------

    def scalar(self, co: dict) -> Scalar:
        return Scalar(self, co)

    def zero(self) -> Scalar:
        return Scalar(self, {})

    def one(self) -> Scalar:
        return Scalar(self, {0: QI_ONE})

    def i(self) -> Scalar:
        return Scalar(self, {0: QI_I})

    def from_int(self, n: int) -> Scalar:
        if n == 0:
            return self.zero()
        return Scalar(self, {0: qi_make(n, 0, 1)})

    def from_fraction(self, fr) -> Scalar:
        fr = Fraction(fr)
        if fr == 0:
            return self.zero()
        return Scalar(self, {0: qi_from_fraction(fr)})

    def from_qi(self, a, b=0, d=1) -> Scalar:
        q = qi_make(a, b, d)
        return Scalar(self, {0: q} if q != QI_ZERO else {})

    def gen(self, j: int) -> Scalar:
        return Scalar(self, {1 << j: QI_ONE})

    # -- roots ---------------------------------------------------------

    def sqrt(self, x) -> Scalar | None:
        """A square root of x inside the current tower, canonical sign, or None."""
        x = self._coerce(x)
        key = tuple(sorted(x.co.items()))
        cached = self._roots.get(key)
        if cached is not None:
            return cached
        co = _co_sqrt(x.co, self.gens)
        if co is None:
            return None
        r = Scalar(self, co)
        if not _co_canonical_positive(co):
            r = -r
        self._roots[key] = r
        return r

    def is_square(self, x) -> bool:
        return self.sqrt(x) is not None

    def adjoin_sqrt(self, d) -> Scalar:
        """Return r with r*r == d, extending the tower only when needed.

        If d is already a square the stored root (canonical sign) is
        returned and the tower is untouched; otherwise a fresh generator
        is appended and is itself the canonical root.
        """
        d = self._coerce(d)
        r = self.sqrt(d)
        if r is not None:
            return r
        j = len(self.gens)
        self.gens.append(d)
        r = self.gen(j)
        self._roots[tuple(sorted(d.co.items()))] = r
        return r

    def _coerce(self, x) -> Scalar:
        if isinstance(x, Scalar):
            if x.tower is not self:
                raise ValueError("scalar belongs to a different tower")
            return x
        if isinstance(x, int):
            return self.from_int(x)
        if isinstance(x, Fraction):
            return self.from_fraction(x)
        raise TypeError(f"cannot coerce {type(x).__name__} into tower scalar")

    def __repr__(self):
        return f"Tower(height={self.height})"


# -- coefficient-dict arithmetic (masks index square-free monomials) --------


def _co_add(c1: dict, c2: dict) -> dict:
    out = dict(c1)
    for m, q in c2.items():
        cur = out.get(m)
        if cur is None:
            out[m] = q
        else:
            s = qi_add(cur, q)
            if s == QI_ZERO:
                del out[m]
            else:
                out[m] = s
    return out


def _co_neg(c: dict) -> dict:
    return {m: qi_neg(q) for m, q in c.items()}


def _co_scale(c: dict, q) -> dict:
    if q == QI_ZERO:
        return {}
    return {m: qi_mul(v, q) for m, v in c.items()}


def _co_mul(c1: dict, c2: dict, gens) -> dict:
    # fast paths: purely rational-complex factors need no reduction
    if len(c1) == 1 and 0 in c1:
        return _co_scale(c2, c1[0])
    if len(c2) == 1 and 0 in c2:
        return _co_scale(c1, c2[0])
    out: dict = {}
    for m1, q1 in c1.items():
        for m2, q2 in c2.items():
            q = qi_mul(q1, q2)
            common = m1 & m2
            m = m1 ^ m2
            if common == 0:
                cur = out.get(m)
                s = qi_add(cur, q) if cur is not None else q
                if s == QI_ZERO:
                    out.pop(m, None)
                else:
                    out[m] = s
            else:
                term = {m: q}
                j = 0
                while common:
                    if common & 1:
                        term = _co_mul(term, gens[j].co, gens)
                    common >>= 1
                    j += 1
                out = _co_add(out, term)
    return out


def _co_inv(c: dict, gens) -> dict:
    if not c:
        raise ZeroDivisionError("scalar division by zero")
    top = max(c)
    if top == 0:
        return {0: qi_inv(c[0])}
    k = top.bit_length() - 1
    bit = 1 << k
    a = {m: q for m, q in c.items() if not m & bit}
    b = {m ^ bit: q for m, q in c.items() if m & bit}
    # (a + b s)^-1 = (a - b s) / (a^2 - b^2 d)
    norm = _co_add(_co_mul(a, a, gens),
                   _co_neg(_co_mul(_co_mul(b, b, gens), gens[k].co, gens)))
    ninv = _co_inv(norm, gens)
    num = _co_add(a, {m | bit: qi_neg(q) for m, q in b.items()})
    return _co_mul(num, ninv, gens)


def _co_canonical_positive(c: dict) -> bool:
    """Sign convention: first nonzero coefficient (in mask order) has
    positive real part, or zero real part and positive imaginary part."""
    if not c:
        return False
    m = min(c)
    a, b, _ = c[m]
    return a > 0 or (a == 0 and b > 0)


def _co_sqrt(c: dict, gens) -> dict | None:
    return _co_sqrt_lvl(c, gens, len(gens))


def _co_sqrt_lvl(c: dict, gens, lvl: int) -> dict | None:
    """Square root of c within the subtower generated by s1..s_lvl.

    The recursion descends over tower levels (not over the masks present
    in c): a root may involve generators the radicand does not mention.
    """
    if not c:
        return {}
    if lvl == 0:
        if set(c) != {0}:
            return None
        q = qi_sqrt(c[0])
        return None if q is None else {0: q}
    k = lvl - 1
    bit = 1 << k
    a = {m: q for m, q in c.items() if not m & bit}
    b = {m ^ bit: q for m, q in c.items() if m & bit}
    if not b:
        r = _co_sqrt_lvl(a, gens, k)
        if r is not None:
            return r
        # root of the form e * s_k with e^2 = a / d_k
        e2 = _co_mul(a, _co_inv(gens[k].co, gens), gens)
        e = _co_sqrt_lvl(e2, gens, k)
        if e is not None:
            return {m | bit: q for m, q in e.items()}
        return None
    # y = c0 + e s_k: c0^2 = (a +- n)/2 with n^2 = a^2 - b^2 d (the norm).
    n2 = _co_add(_co_mul(a, a, gens),
                 _co_neg(_co_mul(_co_mul(b, b, gens), gens[k].co, gens)))
    n = _co_sqrt_lvl(n2, gens, k)
    if n is None:
        return None
    half = {0: qi_make(1, 0, 2)}
    for nn in (n, _co_neg(n)):
        c0sq = _co_mul(_co_add(a, nn), half, gens)
        c0 = _co_sqrt_lvl(c0sq, gens, k)
        if c0 is None or not c0:
            continue
        e = _co_mul(_co_mul(b, half, gens), _co_inv(c0, gens), gens)
        root = _co_add(c0, {m | bit: q for m, q in e.items()})
        if _co_add(_co_mul(root, root, gens), _co_neg(c)) == {}:
            return root
    return None


class Scalar:
    """Immutable element of a Tower; hashable, pure-value semantics."""

    __slots__ = ("tower", "co", "_hash")

    def __init__(self, tower: Tower, co: dict):
        self.tower = tower
        self.co = co
        self._hash = None

    # -- predicates ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.co

    @property
    def is_rational(self) -> bool:
        if not self.co:
            return True
        if set(self.co) != {0}:
            return False
        return self.co[0][1] == 0

    def as_fraction(self) -> Fraction:
        if not self.co:
            return Fraction(0)
        if not self.is_rational:
            raise ValueError(f"{self} is not rational")
        a, _, d = self.co[0]
        return Fraction(a, d)

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.tower is not self.tower:
                raise ValueError("mixing scalars from different towers")
            return other
        if isinstance(other, (int, Fraction)):
            return self.tower._coerce(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(self.tower, _co_add(self.co, o.co))

    __radd__ = __add__

    def __neg__(self):
        return Scalar(self.tower, _co_neg(self.co))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(self.tower, _co_add(self.co, _co_neg(o.co)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(self.tower, _co_add(o.co, _co_neg(self.co)))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.co or not o.co:
            return Scalar(self.tower, {})
        return Scalar(self.tower, _co_mul(self.co, o.co, self.tower.gens))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * Scalar(self.tower, _co_inv(o.co, self.tower.gens))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * Scalar(self.tower, _co_inv(self.co, self.tower.gens))

    def inv(self) -> Scalar:
        return Scalar(self.tower, _co_inv(self.co, self.tower.gens))

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        out = self.tower.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- comparison / hashing -------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.tower._coerce(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.co == other.co

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(sorted(self.co.items())))
        return self._hash

    def sort_key(self):
        return tuple(sorted(self.co.items()))

    # -- display ----------------------------------------------------------

    def __str__(self):
        if not self.co:
            return "0"
        parts = []
        for m in sorted(self.co):
            q = qi_str(self.co[m])
            if m == 0:
                parts.append(q)
            else:
                mono = "*".join(self.tower.gen_name(j)
                                for j in range(m.bit_length()) if m >> j & 1)
                parts.append(f"({q})*{mono}")
        return " + ".join(parts)

    __repr__ = __str__

    def to_json(self):
        """Exact serialization: flat string for Q(i) values, else a
        mask-indexed coefficient list."""
        if not self.co or set(self.co) == {0}:
            return qi_str(self.co.get(0, QI_ZERO))
        return [[m, qi_str(q)] for m, q in sorted(self.co.items())]


# ---------------------------------------------------------------------------
# Parsing of exact scalar strings: "p/q", "a+b*i", "-3/4*i", ...
# ---------------------------------------------------------------------------


def parse_scalar(tower: Tower, text: str) -> Scalar:
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty scalar string")
    # split into signed terms
    terms = []
    cur = ""
    for idx, ch in enumerate(s):
        if ch in "+-" and idx > 0 and s[idx - 1] not in "+-/*":
            terms.append(cur)
            cur = ch
        else:
            cur += ch
    terms.append(cur)
    total = tower.zero()
    for t in terms:
        if not t or t in "+-":
            raise ValueError(f"malformed scalar string {text!r}")
        neg = t.startswith("-")
        t = t.lstrip("+-")
        imag = False
        if t.endswith("i"):
            imag = True
            t = t[:-1]
            if t.endswith("*"):
                t = t[:-1]
            if t == "":
                t = "1"
        try:
            fr = Fraction(t)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"malformed scalar string {text!r}") from exc
        if neg:
            fr = -fr
        term = tower.from_qi(0, fr.numerator, fr.denominator) if imag \
            else tower.from_fraction(fr)
        total = total + term
    return total
