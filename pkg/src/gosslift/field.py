"""Finite fields with table-driven arithmetic.

A FiniteField is F_q for q = p^m with a fixed monic irreducible modulus
over F_p.  Elements are plain ints in range(q): the base-p digits of the
int are the coordinates with respect to the power basis 1, g, .., g^(m-1),
where g is the residue class of the modulus variable.  All element
operations are precomputed lookup tables, so they never allocate; the
size bound FIELD_SIZE_BOUND keeps the tables small.

ResidueField models F_q[T]/(pi) for pi irreducible over a table field.
Its elements are fixed-width tuples of base-field ints; there is no size
bound beyond memory, so arithmetic is coordinatewise rather than tabled.

The default modulus for F_{p^m} is the lexicographically smallest monic
irreducible of degree m, comparing coefficient sequences low to high with
coefficients as integers 0..p-1.  Examples: X^2+X+1 over F_2, X^2+1 over
F_3.  This pins down a single canonical model per (p, m).
"""

from __future__ import annotations

import functools
import itertools

from . import poly
from .errors import FieldError

FIELD_SIZE_BOUND = 256


def _is_prime(n):
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


class FiniteField:
    """F_q, q = p^m <= FIELD_SIZE_BOUND, elements encoded as ints 0..q-1."""

    def __init__(self, p, m=1, modulus=None):
        if not _is_prime(p):
            raise FieldError(f"characteristic {p} is not prime")
        if m < 1:
            raise FieldError(f"extension degree {m} must be positive")
        q = p ** m
        if q > FIELD_SIZE_BOUND:
            raise FieldError(f"field size {q} exceeds bound {FIELD_SIZE_BOUND}")
        self.p = p
        self.m = m
        self.q = q
        self.order = q
        if modulus is None:
            modulus = _smallest_irreducible(p, m) if m > 1 else (0, 1)
        modulus = tuple(c % p for c in modulus)
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise FieldError("modulus must be monic of degree m")
        self.modulus = modulus
        self.zero = 0
        self.one = 1
        self.generator = p if m > 1 else None
        self._build_tables()
        self._irreducible_cache = {}

    def _build_tables(self):
        p, m, q = self.p, self.m, self.q
        coords = [self.coords(a) for a in range(q)]
        self._add = [
            [self.element_from_coords([(x + y) % p for x, y in zip(coords[a], coords[b])])
             for b in range(q)]
            for a in range(q)
        ]
        self._neg = [self.element_from_coords([(-x) % p for x in coords[a]]) for a in range(q)]
        red = self.modulus[:-1]
        mul_table = []
        for a in range(q):
            row = []
            ca = coords[a]
            for b in range(q):
                cb = coords[b]
                prod = [0] * (2 * m - 1)
                for i, x in enumerate(ca):
                    if x:
                        for j, y in enumerate(cb):
                            prod[i + j] = (prod[i + j] + x * y) % p
                for k in range(2 * m - 2, m - 1, -1):
                    c = prod[k]
                    if c:
                        prod[k] = 0
                        for i, r in enumerate(red):
                            prod[k - m + i] = (prod[k - m + i] - c * r) % p
                row.append(self.element_from_coords(prod[:m]))
            mul_table.append(row)
        self._mul = mul_table
        inv = [None] * q
        for a in range(1, q):
            if inv[a] is None:
                for b in range(1, q):
                    if mul_table[a][b] == 1:
                        inv[a] = b
                        inv[b] = a
                        break
        self._inv = inv
        pth = []
        for a in range(q):
            x = a
            for _ in range(1, self.p):
                x = mul_table[x][a]
            pth.append(x)
        self._pth = pth
        pthroot = [None] * q
        for a in range(q):
            pthroot[pth[a]] = a
        self._pthroot = pthroot

    # element encoding helpers

    def coords(self, a):
        """Base-p digits of the element, low to high, length m."""
        out = []
        for _ in range(self.m):
            out.append(a % self.p)
            a //= self.p
        return tuple(out)

    def element_from_coords(self, digits):
        a = 0
        for d in reversed(tuple(digits)):
            a = a * self.p + d % self.p
        return a

    def elements(self):
        return range(self.q)

    # arithmetic

    def add(self, a, b):
        return self._add[a][b]

    def sub(self, a, b):
        return self._add[a][self._neg[b]]

    def neg(self, a):
        return self._neg[a]

    def mul(self, a, b):
        return self._mul[a][b]

    def inv(self, a):
        if a == 0:
            raise FieldError("inverse of zero")
        return self._inv[a]

    def from_int(self, k):
        return k % self.p

    def pth_power(self, a):
        return self._pth[a]

    def pth_root(self, a):
        return self._pthroot[a]

    def pow_(self, a, e):
        if e < 0:
            a = self.inv(a)
            e = -e
        r = 1
        while e:
            if e & 1:
                r = self._mul[r][a]
            e >>= 1
            if e:
                a = self._mul[a][a]
        return r

    def __eq__(self, other):
        return (isinstance(other, FiniteField)
                and self.p == other.p and self.m == other.m
                and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        return f"GF({self.q})"


def _smallest_irreducible(p, m):
    """Lexicographically first monic irreducible of degree m over F_p."""
    base = FiniteField(p)
    for lower in itertools.product(range(p), repeat=m):
        f = poly.ptrim(base, lower + (1,))
        if _is_irreducible_trial(base, f):
            return lower + (1,)
    raise FieldError("no irreducible modulus found")  # unreachable


def _is_irreducible_trial(K, f):
    d = poly.pdeg(f)
    if d < 1:
        return False
    for e in range(1, d // 2 + 1):
        for lower in itertools.product(range(K.q), repeat=e):
            g = lower + (1,)
            if not poly.pmod(K, f, g):
                return False
    return True


@functools.lru_cache(maxsize=None)
def gf_create(p, m=1):
    """The canonical F_{p^m} with the lexicographically smallest modulus."""
    return FiniteField(p, m)


class ResidueField:
    """F_q[T]/(pi) for monic irreducible pi over a table field.

    Elements are tuples of base-field ints of fixed width deg(pi).  Used
    as the coefficient field when factoring a defining polynomial modulo
    a prime of F_q[T].
    """

    def __init__(self, base, modulus):
        modulus = poly.ptrim(base, modulus)
        d = poly.pdeg(modulus)
        if d < 1 or modulus[-1] != base.one:
            raise FieldError("residue field modulus must be monic of degree >= 1")
        self.base = base
        self.modulus = modulus
        self.deg = d
        self.p = base.p
        self.order = base.q ** d
        self.zero = (0,) * d
        self.one = (1,) + (0,) * (d - 1)
        self._rows = poly._reduction_rows(base, modulus, 2 * d - 2)

    def project(self, f):
        """Reduce a polynomial over the base field into the residue field."""
        r = poly.pmod(self.base, f, self.modulus)
        return tuple(r) + (0,) * (self.deg - len(r))

    def lift(self, a):
        return poly.ptrim(self.base, a)

    def elements(self):
        for tup in itertools.product(self.base.elements(), repeat=self.deg):
            yield tup

    def add(self, a, b):
        t = self.base._add
        return tuple(t[x][y] for x, y in zip(a, b))

    def sub(self, a, b):
        t = self.base._add
        n = self.base._neg
        return tuple(t[x][n[y]] for x, y in zip(a, b))

    def neg(self, a):
        n = self.base._neg
        return tuple(n[x] for x in a)

    def mul(self, a, b):
        base = self.base
        d = self.deg
        add_t, mul_t = base._add, base._mul
        prod = [0] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                rowx = mul_t[x]
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] = add_t[prod[i + j]][rowx[y]]
        acc = [0] * d
        rows = self._rows
        for k, c in enumerate(prod):
            if c:
                rowc = mul_t[c]
                rk = rows[k]
                for i in range(d):
                    r = rk[i]
                    if r:
                        acc[i] = add_t[acc[i]][rowc[r]]
        return tuple(acc)

    def inv(self, a):
        al = self.lift(a)
        if not al:
            raise FieldError("inverse of zero")
        # extended euclid over the base field
        base = self.base
        r0, r1 = self.modulus, al
        s0, s1 = (), (base.one,)
        while r1:
            q, r = poly.pdivmod(base, r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, poly.psub(base, s0, poly.pmul(base, q, s1))
        lead = base.inv(r0[-1])
        s0 = poly.pscale(base, lead, s0)
        return tuple(s0) + (0,) * (self.deg - len(s0))

    def from_int(self, k):
        return (k % self.p,) + (0,) * (self.deg - 1)

    def pow_(self, a, e):
        if e < 0:
            a = self.inv(a)
            e = -e
        r = self.one
        while e:
            if e & 1:
                r = self.mul(r, a)
            e >>= 1
            if e:
                a = self.mul(a, a)
        return r

    def pth_power(self, a):
        return self.pow_(a, self.p)

    def pth_root(self, a):
        return self.pow_(a, self.order // self.p)

    def trace_to_prime(self, a):
        """Trace down to F_p, returned as an int 0..p-1."""
        steps = 1
        while self.p ** steps < self.order:
            steps += 1
        acc = self.zero
        x = a
        for _ in range(steps):
            acc = self.add(acc, x)
            x = self.pth_power(x)
        lifted = self.lift(acc)
        if len(lifted) > 1:
            raise FieldError("trace did not land in the prime field")
        if not lifted:
            return 0
        c = self.base.coords(lifted[0])
        if any(c[1:]):
            raise FieldError("trace did not land in the prime field")
        return c[0]

    def __eq__(self, other):
        return (isinstance(other, ResidueField)
                and self.base == other.base and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.base, self.modulus))

    def __repr__(self):
        return f"ResidueField({self.base!r}, deg={self.deg})"
