"""Finite extensions of F_q(T) and splitting types of primes of F_q[T].

An ExtensionSpec is a monic defining polynomial f in X over A = F_q[T]
together with override data for the finitely many primes where reduction
mod a prime does not tell the truth.  At every prime not dividing the
discriminant, the factorization type of f over the residue field gives the
splitting type (all ramification indices 1); ramified primes, and any
prime the user cannot vouch for, must carry an explicit override or the
query fails loudly.  Nothing here computes integral closures: an override
is trusted as given.

Config files are sectioned key=value text,

    [field]      p=3  m=1
    [extension]  name=K  poly=X^2 - T
    [override]   prime=T  type=(2,1)

with as many [override] sections as needed, and builtin=NAME:k=v,... as an
alternative to poly.  Values may contain spaces (continuation tokens
without '=' are appended), and '#' starts a comment.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import poly, textforms
from .errors import ExtensionError
from .field import FiniteField, ResidueField, gf_create
from .poly import MonicPoly


@dataclass(frozen=True)
class SplittingType:
    """Multiset of (ramification index, inertia degree) pairs above a prime.

    Stored sorted ascending by (inertia degree, ramification index), so
    equal multisets compare equal.
    """

    pairs: tuple

    def __init__(self, pairs):
        pairs = tuple(sorted(((int(e), int(f)) for e, f in pairs),
                             key=lambda ef: (ef[1], ef[0])))
        object.__setattr__(self, "pairs", pairs)
        for e, f in pairs:
            if e < 1 or f < 1:
                raise ExtensionError("splitting type entries must be positive")

    @property
    def degree(self):
        return sum(e * f for e, f in self.pairs)

    def inertia_degrees(self):
        """Inertia degrees with multiplicity, sorted ascending."""
        return tuple(sorted(f for _, f in self.pairs))

    @property
    def is_unramified(self):
        return all(e == 1 for e, _ in self.pairs)

    def __str__(self):
        return ",".join(f"({e},{f})" for e, f in self.pairs)


class ExtensionSpec:
    """A degree-n extension of F_q(T) given by a monic defining polynomial."""

    def __init__(self, name, base, xt_coeffs, bad_primes=(), overrides=None):
        if not isinstance(base, FiniteField):
            raise ExtensionError("base must be a table field")
        xt_coeffs = tuple(poly.ptrim(base, c) for c in xt_coeffs)
        while xt_coeffs and not xt_coeffs[-1]:
            xt_coeffs = xt_coeffs[:-1]
        if len(xt_coeffs) < 2:
            raise ExtensionError("defining polynomial must have X-degree at least 1")
        if xt_coeffs[-1] != (base.one,):
            raise ExtensionError("defining polynomial must be monic in X")
        self.name = str(name)
        self.field = base
        self.xt_coeffs = xt_coeffs
        self.degree = len(xt_coeffs) - 1
        self.bad_primes = tuple(bad_primes)
        self.overrides = dict(overrides or {})
        for p in self.bad_primes:
            _require_prime(base, p)
        for p, st in self.overrides.items():
            _require_prime(base, p)
            if st.degree != self.degree:
                raise ExtensionError(
                    f"override at {p} has total degree {st.degree}, expected {self.degree}")
        self._splitting_cache = {}
        self._disc = None

    def __repr__(self):
        return f"ExtensionSpec({self.name}, degree {self.degree} over GF({self.field.q}))"

    def poly_text(self):
        return textforms.format_xt_poly(self.field, self.xt_coeffs)


def _require_prime(base, p):
    if not isinstance(p, MonicPoly) or p.field != base:
        raise ExtensionError("primes must be MonicPoly over the base field")
    if p.degree < 1:
        raise ExtensionError("the unit polynomial is not a prime")
    degs = poly.poly_factor_degrees(base, p.coeffs)
    if degs != ((p.degree, 1),):
        raise ExtensionError(f"{p} is not irreducible")


# --- builtins ---


def builtin_extension(base, kind, name=None, **params):
    """Named extension families.

    artin_schreier(m): X^p - X - T^m, no finite bad primes.
    kummer_sqrt(c):    X^2 - c for squarefree c, p odd; every prime factor
                       of c is overridden as ramified (2,1).
    """
    if kind == "artin_schreier":
        try:
            m = int(params.pop("m"))
        except KeyError:
            raise ExtensionError("artin_schreier needs an exponent m=") from None
        except ValueError:
            raise ExtensionError("artin_schreier exponent m must be an integer") from None
        if params:
            raise ExtensionError(f"unknown artin_schreier parameters {sorted(params)}")
        if m < 1:
            raise ExtensionError("artin_schreier needs m >= 1")
        p = base.p
        tm = (base.zero,) * m + (base.one,)
        # X^p - X - T^m
        cols = [poly.pneg(base, tm), (base.neg(base.one),)] + [()] * (p - 2) + [(base.one,)]
        return ExtensionSpec(name or f"AS_m{m}", base, cols)
    if kind == "kummer_sqrt":
        if base.p == 2:
            raise ExtensionError("kummer_sqrt needs odd characteristic")
        try:
            c = params.pop("c")
        except KeyError:
            raise ExtensionError("kummer_sqrt needs a radicand c=") from None
        if params:
            raise ExtensionError(f"unknown kummer_sqrt parameters {sorted(params)}")
        if isinstance(c, str):
            c = textforms.parse_tpoly(base, c)
        c = poly.ptrim(base, c)
        if not c:
            raise ExtensionError("kummer_sqrt needs nonzero c")
        cp = poly.pderiv(base, c)
        if poly.pdeg(c) > 0 and (not cp or poly.pdeg(poly.pgcd(base, c, cp)) > 0):
            raise ExtensionError("kummer_sqrt needs squarefree c")
        overrides = {}
        if poly.pdeg(c) > 0:
            for prime, mult in poly.factor_monic(base, c):
                overrides[prime] = SplittingType(((2, 1),))
        cols = (poly.pneg(base, c), (), (base.one,))
        return ExtensionSpec(name or "K_sqrt", base, cols,
                             bad_primes=(), overrides=overrides)
    raise ExtensionError(f"unknown builtin extension kind {kind!r}")


def trivial_extension(base, name="F"):
    """The base field itself, presented as X - T."""
    return ExtensionSpec(name, base, ((base.zero, base.neg(base.one)), (base.one,)))


# --- discriminant ---


def discriminant(ext):
    """Monic-normalized resultant of f and df/dX, as a polynomial over F_q.

    A zero resultant (inseparable polynomial) is an error.  The unit
    factor is dropped: a nonzero constant resultant comes back as the
    constant polynomial 1.
    """
    if ext._disc is not None:
        return ext._disc
    K = ext.field
    f = ext.xt_coeffs
    fp = _xderiv(K, f)
    if not fp:
        raise ExtensionError("defining polynomial is inseparable (zero X-derivative)")
    det = _resultant(K, f, fp)
    if not det:
        raise ExtensionError("defining polynomial is inseparable (zero discriminant)")
    ext._disc = MonicPoly(K, poly.pmonic(K, det))
    return ext._disc


def _xderiv(K, cols):
    out = []
    for i in range(1, len(cols)):
        out.append(poly.pscale(K, K.from_int(i), cols[i]))
    while out and not out[-1]:
        out.pop()
    return tuple(out)


def _resultant(K, f, g):
    """Res_X of two polynomials in X over A = K[T], via fraction-free elimination."""
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    if size == 0:
        return (K.one,)
    rows = []
    for i in range(n):
        row = [()] * size
        for j, c in enumerate(reversed(f)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [()] * size
        for j, c in enumerate(reversed(g)):
            row[i + j] = c
        rows.append(row)
    return _bareiss_det(K, rows)


def _bareiss_det(K, mat):
    n = len(mat)
    sign = 1
    prev = (K.one,)
    for k in range(n - 1):
        if not mat[k][k]:
            pivot = next((r for r in range(k + 1, n) if mat[r][k]), None)
            if pivot is None:
                return ()
            mat[k], mat[pivot] = mat[pivot], mat[k]
            sign = -sign
        pkk = mat[k][k]
        for i in range(k + 1, n):
            rik = mat[i][k]
            for j in range(k + 1, n):
                num = poly.psub(K, poly.pmul(K, pkk, mat[i][j]),
                                poly.pmul(K, rik, mat[k][j]))
                mat[i][j] = poly.pdivexact(K, num, prev) if num else ()
            mat[i][k] = ()
        prev = pkk
    det = mat[n - 1][n - 1]
    if sign == -1:
        det = poly.pneg(K, det)
    return det


# --- splitting types ---


def splitting_type(ext, prime):
    """Splitting type of a prime of F_q[T] in the extension.

    Overridden primes return their override; listed bad primes without an
    override fail; everywhere else the type is read off the squarefree
    factorization of the defining polynomial over the residue field.
    """
    st = ext.overrides.get(prime)
    if st is not None:
        return st
    cached = ext._splitting_cache.get(prime)
    if cached is not None:
        return cached
    _require_prime(ext.field, prime)
    if prime in ext.bad_primes:
        raise ExtensionError(
            f"prime {prime} is marked bad for {ext.name} and has no override")
    R = ResidueField(ext.field, prime.coeffs)
    fbar = poly.ptrim(R, tuple(R.project(c) for c in ext.xt_coeffs))
    if poly.pdeg(fbar) != ext.degree:
        raise ExtensionError(
            f"defining polynomial of {ext.name} degenerates mod {prime}")
    degs = poly.poly_factor_degrees(R, fbar)
    if any(mult > 1 for _, mult in degs):
        raise ExtensionError(
            f"prime {prime} ramifies in {ext.name}; supply an override")
    st = SplittingType(tuple((1, d) for d, _ in degs))
    ext._splitting_cache[prime] = st
    return st


# --- config parsing ---


_TYPE_RE = re.compile(r"\((\d+)\s*,\s*(\d+)\)")


def parse_extension(text):
    """Build an ExtensionSpec from sectioned key=value config text."""
    sections = _read_sections(text)
    fld = sections.get("field")
    if not fld:
        raise ExtensionError("config is missing the [field] section")
    try:
        p = int(fld["p"])
        m = int(fld.get("m", "1"))
    except KeyError as e:
        raise ExtensionError(f"[field] section is missing {e.args[0]}") from None
    except ValueError:
        raise ExtensionError("[field] p and m must be integers") from None
    base = gf_create(p, m)
    extsec = sections.get("extension")
    if not extsec:
        raise ExtensionError("config is missing the [extension] section")
    name = extsec.get("name")
    if not name:
        raise ExtensionError("[extension] section needs a name")
    has_poly = "poly" in extsec
    has_builtin = "builtin" in extsec
    if has_poly == has_builtin:
        raise ExtensionError("[extension] needs exactly one of poly= or builtin=")
    overrides = {}
    for osec in sections.get("override_list", []):
        try:
            prime = textforms.parse_monic(base, osec["prime"])
            st = _parse_type(osec["type"])
        except KeyError as e:
            raise ExtensionError(f"[override] section is missing {e.args[0]}") from None
        if prime in overrides:
            raise ExtensionError(f"duplicate override for prime {prime}")
        overrides[prime] = st
    if has_builtin:
        kind, params = _parse_builtin(extsec["builtin"])
        ext = builtin_extension(base, kind, name=name, **params)
        merged = dict(ext.overrides)
        merged.update(overrides)
        ext = ExtensionSpec(name, base, ext.xt_coeffs, ext.bad_primes, merged)
    else:
        cols = textforms.parse_xt_poly(base, extsec["poly"])
        ext = ExtensionSpec(name, base, cols, (), overrides)
    _validate_cover(ext)
    return ext


def parse_extension_file(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise ExtensionError(f"cannot read extension config {path}: {e}") from None
    return parse_extension(text)


def _parse_type(text):
    pairs = _TYPE_RE.findall(text.replace(" ", ""))
    if not pairs:
        raise ExtensionError(f"cannot parse splitting type {text!r}")
    return SplittingType(tuple((int(e), int(f)) for e, f in pairs))


def _parse_builtin(text):
    head, _, rest = text.partition(":")
    params = {}
    if rest:
        for piece in rest.split(","):
            k, eq, v = piece.partition("=")
            if not eq:
                raise ExtensionError(f"bad builtin parameter {piece!r}")
            params[k.strip()] = v.strip()
    return head.strip(), params


def _validate_cover(ext):
    """Every prime dividing the discriminant must be overridden or marked bad."""
    disc = discriminant(ext)
    if disc.degree == 0:
        return
    covered = set(ext.overrides) | set(ext.bad_primes)
    for prime, _ in poly.factor_monic(ext.field, disc.coeffs):
        if prime not in covered:
            raise ExtensionError(
                f"prime {prime} divides the discriminant of {ext.name} "
                f"but has no override")


def _read_sections(text):
    sections = {}
    current = None
    for raw in text.splitlines():
        line = raw.split("#", 1)[0]
        tokens = line.split()
        for tok in tokens:
            if tok.startswith("["):
                name = tok.strip("[]").strip().lower()
                if name == "override":
                    sections.setdefault("override_list", []).append({})
                    current = sections["override_list"][-1]
                else:
                    if name in sections:
                        raise ExtensionError(f"duplicate [{name}] section")
                    sections[name] = {}
                    current = sections[name]
            elif "=" in tok:
                if current is None:
                    raise ExtensionError("key=value before any [section] header")
                k, _, v = tok.partition("=")
                current[k.strip()] = v
                current["__last"] = k.strip()
            else:
                if current is None or "__last" not in current:
                    raise ExtensionError(f"stray token {tok!r} in config")
                last = current["__last"]
                current[last] = current[last] + " " + tok
    for sec in list(sections.values()):
        if isinstance(sec, dict):
            sec.pop("__last", None)
    for osec in sections.get("override_list", []):
        osec.pop("__last", None)
    return sections
