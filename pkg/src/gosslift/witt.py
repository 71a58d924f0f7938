"""Truncated Witt vectors and the lifted zeta evaluation.

W_N over a ring R of characteristic p is the set R^N with addition and
multiplication given by universal integer polynomials; the length-N ghost
map (w_0, ..., w_{N-1}), w_n = sum p^i X_i^{p^(n-i)}, turns both laws into
the componentwise ones over any ring where p is invertible, which pins
the polynomials uniquely.  We generate them once per (p, N) by solving
the ghost recursion exactly over the integers (sympy does the expansion,
and every division by p^n is checked to be exact), then freeze them to
plain term lists evaluated with ring callbacks.

The rings that matter here are a finite field (Witt vectors of integers,
Teichmuller representatives) and Laurent series at the infinite place
(values of the lifted zeta).  Both are handled through small adapter
objects rather than a class hierarchy.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import textforms
from .errors import WittError
from .field import _is_prime
from .laurent import LaurentSeries, laurent_inv_pow


@dataclass(frozen=True)
class WittPolys:
    """Frozen structure polynomials for W_N in characteristic p.

    add[n], mul[n], add_tail[n] are tuples of (coeff, exponents) terms in
    the 2N variables x_0..x_{N-1}, y_0..y_{N-1}; add_tail[n] is add[n]
    minus its two linear leading terms x_n + y_n, and only involves
    variables of index below n.
    """

    p: int
    N: int
    add: tuple
    mul: tuple
    add_tail: tuple


def _freeze(expr, gens):
    import sympy

    poly = sympy.Poly(expr, *gens, domain="QQ")
    out = []
    for exps, coeff in poly.terms():
        if coeff.q != 1:
            raise WittError("structure polynomial has a fractional coefficient")
        out.append((int(coeff), tuple(int(e) for e in exps)))
    return tuple(out)


@lru_cache(maxsize=None)
def witt_structure_polys(p, N):
    """Addition and multiplication polynomials for length-N Witt vectors."""
    if not _is_prime(p):
        raise WittError(f"{p} is not prime")
    if N < 1:
        raise WittError("Witt length must be at least 1")
    if N > 3 and not (p == 2 and N == 4):
        raise WittError(
            f"Witt length {N} over p={p} is out of the supported range "
            f"(lengths up to 3, or 4 when p = 2)")
    import sympy

    xs = sympy.symbols(f"x:{N}")
    ys = sympy.symbols(f"y:{N}")
    gens = xs + ys

    def ghost(vs, n):
        return sum(p**i * vs[i] ** (p ** (n - i)) for i in range(n + 1))

    def solve(targets):
        comps = []
        for n in range(N):
            lower = sum(p**i * comps[i] ** (p ** (n - i)) for i in range(n))
            num = sympy.expand(targets[n] - lower)
            # exactness of this division is rechecked when freezing
            comps.append(sympy.expand(num / sympy.Integer(p) ** n))
        return comps

    add_exprs = solve([ghost(xs, n) + ghost(ys, n) for n in range(N)])
    mul_exprs = solve([ghost(xs, n) * ghost(ys, n) for n in range(N)])
    add = tuple(_freeze(e, gens) for e in add_exprs)
    mul = tuple(_freeze(e, gens) for e in mul_exprs)
    tails = tuple(_freeze(add_exprs[n] - xs[n] - ys[n], gens)
                  for n in range(N))
    return WittPolys(p, N, add, mul, tails)


def witt_structure_exprs(p, N):
    """Sympy form of the structure data, for independent ghost checks."""
    import sympy

    polys = witt_structure_polys(p, N)
    xs = sympy.symbols(f"x:{N}")
    ys = sympy.symbols(f"y:{N}")
    gens = xs + ys

    def unfreeze(terms):
        return sympy.Add(*[
            coeff * sympy.Mul(*[g**e for g, e in zip(gens, exps) if e])
            for coeff, exps in terms])

    return {
        "xs": xs,
        "ys": ys,
        "add": [unfreeze(t) for t in polys.add],
        "mul": [unfreeze(t) for t in polys.mul],
    }


# --- ring adapters ---


class FieldOps:
    """Witt coordinate ring: a finite field."""

    def __init__(self, field):
        self.field = field
        self.p = field.p
        self.zero = field.zero
        self.one = field.one

    def from_int(self, k):
        return self.field.from_int(k)

    def add(self, a, b):
        return self.field.add(a, b)

    def mul(self, a, b):
        return self.field.mul(a, b)

    def neg(self, a):
        return self.field.neg(a)

    def pow_(self, a, e):
        return self.field.pow_(a, e)

    def render(self, a):
        return textforms.format_terms(self.field, [(a, 0)])


class LaurentOps:
    """Witt coordinate ring: Laurent series at fixed precision."""

    def __init__(self, field, precision):
        self.field = field
        self.p = field.p
        self.precision = precision
        self.zero = LaurentSeries.zero(field, precision)
        self.one = LaurentSeries.one(field, precision)

    def from_int(self, k):
        return LaurentSeries.constant(self.field, self.field.from_int(k),
                                      self.precision)

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def pow_(self, a, e):
        return a.pow_int(e)

    def render(self, a):
        return str(a)


# --- vectors and arithmetic ---


@dataclass(frozen=True)
class WittVector:
    p: int
    N: int
    coords: tuple

    def __post_init__(self):
        if len(self.coords) != self.N:
            raise WittError("coordinate count does not match the length")


def witt_zero(ops, N):
    return WittVector(ops.p, N, (ops.zero,) * N)


def teichmuller(ops, x, N):
    """The multiplicative representative (x, 0, ..., 0)."""
    return WittVector(ops.p, N, (x,) + (ops.zero,) * (N - 1))


def _eval_terms(ops, terms, vals):
    powers = {}

    def power(i, e):
        got = powers.get((i, e))
        if got is None:
            got = ops.pow_(vals[i], e)
            powers[(i, e)] = got
        return got

    acc = ops.zero
    for coeff, exps in terms:
        t = ops.from_int(coeff)
        for i, e in enumerate(exps):
            if e:
                t = ops.mul(t, power(i, e))
        acc = ops.add(acc, t)
    return acc


def _pair_check(ops, a, b):
    if a.p != b.p or a.N != b.N:
        raise WittError("mismatched Witt vectors")
    if a.p != ops.p:
        raise WittError("vector characteristic does not match the ring")
    return witt_structure_polys(a.p, a.N)


def witt_add(ops, a, b):
    polys = _pair_check(ops, a, b)
    vals = a.coords + b.coords
    return WittVector(a.p, a.N,
                      tuple(_eval_terms(ops, polys.add[n], vals)
                            for n in range(a.N)))


def witt_mul(ops, a, b):
    polys = _pair_check(ops, a, b)
    vals = a.coords + b.coords
    return WittVector(a.p, a.N,
                      tuple(_eval_terms(ops, polys.mul[n], vals)
                            for n in range(a.N)))


def witt_neg(ops, a):
    """Solve a + y = 0 coordinate by coordinate.

    The n-th addition polynomial is x_n + y_n + tail(lower coordinates),
    so each y_n is forced once y_0 .. y_{n-1} are known.  Coordinatewise
    negation would do for odd p, but this route is uniform in p.
    """
    polys = witt_structure_polys(a.p, a.N)
    ys = []
    for n in range(a.N):
        vals = a.coords + tuple(ys) + (ops.zero,) * (a.N - n)
        t = _eval_terms(ops, polys.add_tail[n], vals)
        ys.append(ops.neg(ops.add(a.coords[n], t)))
    return WittVector(a.p, a.N, tuple(ys))


def witt_sub(ops, a, b):
    return witt_add(ops, a, witt_neg(ops, b))


def int_to_witt(ops, k, N):
    """The image of the integer k, i.e. k copies of 1 summed in W_N.

    Only k mod p^N matters, so k is reduced first; the sum is then built
    by binary double-and-add on the Teichmuller unit.
    """
    k %= ops.p ** N
    acc = witt_zero(ops, N)
    one = teichmuller(ops, ops.one, N)
    for ch in bin(k)[2:]:
        acc = witt_add(ops, acc, acc)
        if ch == "1":
            acc = witt_add(ops, acc, one)
    return acc


def witt_text(ops, w):
    return "(" + "; ".join(ops.render(c) for c in w.coords) + ")"


# --- the lifted zeta ---


def lifted_goss_eval(table, s, M, N):
    """Zeta value at s with coefficients lifted to length-N Witt vectors.

    For s >= 1 each ideal count B(n), taken mod p^N rather than mod p,
    multiplies the Teichmuller lift of n^-s; the result has Laurent
    series coordinates at precision M.  At s = 0 the series collapses to
    the integer sum of all counts: the top three degree blocks must
    vanish mod p^N (so the sum has stabilized), and the value is a Witt
    vector with field coordinates.  Negative s is not defined here.
    """
    K = table.field
    witt_structure_polys(K.p, N)  # validates the (p, N) range up front
    if s < 0:
        raise WittError("the lifted zeta is defined for s >= 0 only")
    fops = FieldOps(K)
    if s == 0:
        pN = K.p ** N
        if table.bound < 3:
            raise WittError("table bound must be at least 3 for s = 0")
        blocks = table.block_sums()
        for d in range(table.bound - 2, table.bound + 1):
            if blocks[d] % pN:
                raise WittError(
                    f"degree block {d} is {blocks[d] % pN} mod p^{N}; "
                    f"the s=0 sum has not stabilized at this bound")
        return int_to_witt(fops, sum(blocks), N)
    need = -(-M // s)
    if table.bound < need:
        raise WittError(
            f"table bound {table.bound} is too small for s={s}, prec {M} "
            f"(need {need})")
    lops = LaurentOps(K, M)
    acc = witt_zero(lops, N)
    lift_cache = {}
    for n, b in table.entries.items():
        if n.degree * s > M:
            continue
        key = b % (K.p ** N)
        if key == 0:
            continue
        bw = lift_cache.get(key)
        if bw is None:
            bw = int_to_witt(fops, key, N)
            lift_cache[key] = bw
        x = laurent_inv_pow(n, s, M)
        coords = []
        for i in range(N):
            coords.append(x.scale(bw.coords[i]))
            if i + 1 < N:
                x = x.pow_int(K.p)
        acc = witt_add(lops, acc, WittVector(K.p, N, tuple(coords)))
    return acc
