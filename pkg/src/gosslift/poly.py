"""Dense univariate polynomial arithmetic over a field object.

Polynomials are tuples of field elements, constant term first, with no
trailing zeros; the zero polynomial is the empty tuple.  Every function
takes the coefficient field K as its first argument and only uses the
small protocol shared by field.FiniteField and field.ResidueField:

    K.zero, K.one, K.p, K.order
    K.add(a, b), K.sub(a, b), K.neg(a), K.mul(a, b), K.inv(a)
    K.from_int(k), K.pth_power(a), K.pth_root(a)

MonicPoly wraps a monic polynomial over a table field together with its
field; it is hashable and totally ordered (degree, then coefficients read
low to high), which fixes the enumeration order used everywhere else.
"""

from __future__ import annotations

import itertools
from collections import Counter

from .errors import PolyError


def ptrim(K, c):
    c = list(c)
    z = K.zero
    while c and c[-1] == z:
        c.pop()
    return tuple(c)


def pdeg(f):
    """Degree, with the zero polynomial at -1."""
    return len(f) - 1


def padd(K, f, g):
    if len(f) < len(g):
        f, g = g, f
    add = K.add
    out = list(f)
    for i, c in enumerate(g):
        out[i] = add(out[i], c)
    return ptrim(K, out)


def pneg(K, f):
    neg = K.neg
    return tuple(neg(c) for c in f)


def psub(K, f, g):
    return padd(K, f, pneg(K, g))


def pscale(K, a, f):
    if a == K.zero:
        return ()
    mul = K.mul
    return ptrim(K, [mul(a, c) for c in f])


def pmul(K, f, g):
    if not f or not g:
        return ()
    add, mul, z = K.add, K.mul, K.zero
    out = [z] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == z:
            continue
        for j, b in enumerate(g):
            out[i + j] = add(out[i + j], mul(a, b))
    return ptrim(K, out)


def pdivmod(K, f, g):
    """Quotient and remainder; g must be nonzero."""
    if not g:
        raise PolyError("division by the zero polynomial")
    if len(f) < len(g):
        return (), f
    add, mul, neg, z = K.add, K.mul, K.neg, K.zero
    ilead = K.inv(g[-1])
    rem = list(f)
    dq = len(f) - len(g)
    quo = [z] * (dq + 1)
    for k in range(dq, -1, -1):
        c = rem[k + len(g) - 1]
        if c == z:
            continue
        q = mul(c, ilead)
        quo[k] = q
        for j, b in enumerate(g):
            rem[k + j] = add(rem[k + j], neg(mul(q, b)))
    return ptrim(K, quo), ptrim(K, rem)


def pmod(K, f, g):
    return pdivmod(K, f, g)[1]


def pdivexact(K, f, g):
    q, r = pdivmod(K, f, g)
    if r:
        raise PolyError("inexact polynomial division")
    return q


def pmonic(K, f):
    if not f:
        return ()
    if f[-1] == K.one:
        return f
    return pscale(K, K.inv(f[-1]), f)


def pgcd(K, f, g):
    while g:
        f, g = g, pmod(K, f, g)
    return pmonic(K, f)


def ppow_mod(K, base, e, mod):
    result = (K.one,)
    base = pmod(K, base, mod)
    while e:
        if e & 1:
            result = pmod(K, pmul(K, result, base), mod)
        e >>= 1
        if e:
            base = pmod(K, pmul(K, base, base), mod)
    return result


def pderiv(K, f):
    out = []
    for i in range(1, len(f)):
        out.append(K.mul(K.from_int(i), f[i]))
    return ptrim(K, out)


def peval(K, f, x):
    acc = K.zero
    for c in reversed(f):
        acc = K.add(K.mul(acc, x), c)
    return acc


def ppow(K, f, e):
    result = (K.one,)
    while e:
        if e & 1:
            result = pmul(K, result, f)
        e >>= 1
        if e:
            f = pmul(K, f, f)
    return result


# --- factorization into degrees ---


def _reduction_rows(K, f, maxdeg):
    """X^k mod f for k = 0..maxdeg, as fixed-width coefficient tuples; f monic."""
    d = pdeg(f)
    if d < 1:
        raise PolyError("reduction rows need a modulus of degree at least 1")
    z, one = K.zero, K.one
    rows = []
    for k in range(min(d, maxdeg + 1)):
        rows.append(tuple(one if i == k else z for i in range(d)))
    if maxdeg < d:
        return rows
    add, mul = K.add, K.mul
    top = tuple(K.neg(c) for c in f[:-1])
    rows.append(top)
    cur = top
    for _ in range(d + 1, maxdeg + 1):
        lead = cur[-1]
        nxt = [z] + list(cur[:-1])
        if lead != z:
            for i in range(d):
                ti = top[i]
                if ti != z:
                    nxt[i] = add(nxt[i], mul(lead, ti))
        cur = tuple(nxt)
        rows.append(cur)
    return rows


def _frobenius_mod(K, h, f, rows):
    """h^p mod f via the characteristic p power map on coefficients."""
    d = pdeg(f)
    p = K.p
    add, z = K.add, K.zero
    pth = K.pth_power
    acc = [z] * d
    for i, c in enumerate(h):
        if c == z:
            continue
        cp = pth(c)
        row = rows[i * p]
        for j in range(d):
            rj = row[j]
            if rj != z:
                acc[j] = add(acc[j], K.mul(cp, rj))
    return ptrim(K, acc)


def field_power_mod(K, h, f, rows=None):
    """h^order(K) mod f, for monic f of degree >= 1."""
    d = pdeg(f)
    if rows is None:
        rows = _reduction_rows(K, f, max(d - 1, (d - 1) * K.p))
    steps = 1
    q = K.order
    p = K.p
    while p ** steps < q:
        steps += 1
    if p ** steps != q:
        raise PolyError("field order is not a prime power")
    for _ in range(steps):
        h = _frobenius_mod(K, h, f, rows)
    return h


def pth_root_poly(K, f):
    """For f with zero derivative, the g with g^p = f."""
    p = K.p
    out = []
    for i in range(0, len(f), p):
        out.append(K.pth_root(f[i]))
    for i, c in enumerate(f):
        if i % p and c != K.zero:
            raise PolyError("polynomial is not a p-th power")
    return ptrim(K, out)


def squarefree_decomposition(K, f):
    """Monic f as a product of squarefree parts: dict multiplicity -> part."""
    out = {}
    _squarefree_into(K, pmonic(K, f), 1, out)
    return out


def _squarefree_into(K, f, scale, out):
    if pdeg(f) <= 0:
        return
    fp = pderiv(K, f)
    if not fp:
        _squarefree_into(K, pth_root_poly(K, f), scale * K.p, out)
        return
    c = pgcd(K, f, fp)
    w = pdivexact(K, f, c)
    i = 1
    while pdeg(w) > 0:
        y = pgcd(K, w, c)
        z = pdivexact(K, w, y)
        if pdeg(z) > 0:
            m = i * scale
            out[m] = pmul(K, out.get(m, (K.one,)), z)
        w = y
        c = pdivexact(K, c, y)
        i += 1
    _squarefree_into(K, c, scale, out)


def distinct_degree_counts(K, f):
    """Counter degree -> number of irreducible factors, for squarefree monic f."""
    counts = Counter()
    d = pdeg(f)
    rows = _reduction_rows(K, f, max((d - 1) * K.p, d))
    x = ptrim(K, (K.zero, K.one))
    h = pmod(K, x, f)
    e = 1
    while 2 * e <= pdeg(f):
        h = field_power_mod(K, h, f, rows)
        g = pgcd(K, psub(K, h, x), f)
        if pdeg(g) > 0:
            counts[e] += pdeg(g) // e
            f = pdivexact(K, f, g)
            if pdeg(f) == 0:
                return counts
            rows = _reduction_rows(K, f, max((pdeg(f) - 1) * K.p, pdeg(f)))
            h = pmod(K, h, f)
        e += 1
    if pdeg(f) > 0:
        counts[pdeg(f)] += 1
    return counts


def poly_factor_degrees(K, f):
    """Multiset of (degree, multiplicity) over the irreducible factors of f.

    Returned as a sorted tuple with one entry per irreducible factor, so a
    split square like (X-1)^2(X+1) gives ((1, 1), (1, 2)).
    """
    f = ptrim(K, f)
    if not f:
        raise PolyError("cannot factor the zero polynomial")
    if pdeg(f) == 0:
        return ()
    pairs = []
    for mult, part in squarefree_decomposition(K, f).items():
        for degree, count in distinct_degree_counts(K, part).items():
            pairs.extend([(degree, mult)] * count)
    return tuple(sorted(pairs))


# --- monic polynomials over a table field ---


class MonicPoly:
    """Monic polynomial in T over a table field, used as a dictionary key.

    Ordering is by degree first, then coefficients compared low to high,
    which is the enumeration order of enumerate_monic.
    """

    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, field, coeffs):
        coeffs = ptrim(field, coeffs)
        if not coeffs or coeffs[-1] != field.one:
            raise PolyError("polynomial is not monic")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "_hash", hash((field.p, field.m, coeffs)))

    def __setattr__(self, *a):
        raise AttributeError("MonicPoly is immutable")

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return (isinstance(other, MonicPoly)
                and self.field == other.field
                and self.coeffs == other.coeffs)

    def sort_key(self):
        return (self.degree, self.coeffs)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __mul__(self, other):
        if self.field != other.field:
            raise PolyError("mixed fields in polynomial product")
        return MonicPoly(self.field, pmul(self.field, self.coeffs, other.coeffs))

    def __pow__(self, e):
        return MonicPoly(self.field, ppow(self.field, self.coeffs, e))

    @property
    def is_one(self):
        return len(self.coeffs) == 1

    def divides(self, other):
        return not pmod(self.field, other.coeffs, self.coeffs)

    def __str__(self):
        from .textforms import format_tpoly
        return format_tpoly(self.field, self.coeffs)

    def __repr__(self):
        return f"MonicPoly({self})"


def enumerate_monic(field, d):
    """All monic degree-d polynomials, ordered by coefficients low to high."""
    if d < 0:
        raise PolyError("negative degree")
    if d == 0:
        return [MonicPoly(field, (field.one,))]
    out = []
    one = field.one
    for lower in itertools.product(field.elements(), repeat=d):
        out.append(MonicPoly(field, lower + (one,)))
    return out


def factor_monic(field, coeffs):
    """Factor a nonzero polynomial over a table field into monic irreducibles.

    The unit leading coefficient is discarded.  Returns ((prime, mult), ...)
    with primes in enumeration order.  Trial division; fine at the degrees
    this library meets.
    """
    coeffs = pmonic(field, ptrim(field, coeffs))
    if not coeffs:
        raise PolyError("cannot factor the zero polynomial")
    out = []
    rem = coeffs
    d = 1
    while pdeg(rem) > 0:
        if 2 * d > pdeg(rem):
            out.append((MonicPoly(field, rem), 1))
            break
        for g in enumerate_monic_irreducibles(field, d):
            mult = 0
            while True:
                q, r = pdivmod(field, rem, g.coeffs)
                if r:
                    break
                rem = q
                mult += 1
            if mult:
                out.append((g, mult))
            if pdeg(rem) == 0:
                break
        d += 1
    return tuple(out)


def _encode(coeffs, q, d):
    k = 0
    for i in range(d - 1, -1, -1):
        k = k * q + coeffs[i]
    return k


def enumerate_monic_irreducibles(field, d):
    """All monic irreducible degree-d polynomials, same order as enumerate_monic.

    Computed by sieving: a composite of degree d has an irreducible factor
    of degree at most d // 2, so products of such a factor with arbitrary
    monic cofactors mark every composite.  Requires table-field elements
    (plain ints), which all base fields here provide.
    """
    if d < 1:
        raise PolyError("irreducibles have degree at least 1")
    cache = field._irreducible_cache
    if d in cache:
        return cache[d]
    q = field.q
    if d == 1:
        out = enumerate_monic(field, 1)
        cache[1] = out
        return out
    composite = set()
    for e in range(1, d // 2 + 1):
        for g in enumerate_monic_irreducibles(field, e):
            gc = g.coeffs
            for h in itertools.product(range(q), repeat=d - e):
                prod = pmul(field, gc, h + (1,))
                composite.add(_encode(prod, q, d))
    out = []
    for lower in itertools.product(range(q), repeat=d):
        if _encode(lower, q, d) not in composite:
            out.append(MonicPoly(field, lower + (1,)))
    cache[d] = out
    return out
