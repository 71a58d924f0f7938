"""Permutation groups and Gassmann equivalence of subgroups.

Two subgroups H1, H2 of a finite group G are Gassmann equivalent when
every conjugacy class of G meets them in the same number of elements.
For number rings this is the exact group-theoretic shadow of having the
same splitting data at every unramified prime (the Frobenius class of a
prime meets the point stabilizer in as many elements as there are
degree-1 points, and so on through the full cycle type), so a Gassmann
pair that is not conjugate is the engine behind nonisomorphic extensions
sharing a zeta function.

Permutations act on 0..n-1 and are stored as tuples; composition is
(a*b)(i) = a(b(i)), i.e. b first.  Everything here is exhaustive search
over explicitly enumerated groups, sized for degrees up to a few dozen
and orders up to a few thousand.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass

from .errors import GroupError

CLOSURE_BOUND = 25000


def identity_perm(n):
    return tuple(range(n))


def compose(a, b):
    """Apply b, then a."""
    return tuple(a[i] for i in b)


def inverse(a):
    out = [0] * len(a)
    for i, j in enumerate(a):
        out[j] = i
    return tuple(out)


def conjugate(g, x):
    """g x g^-1."""
    return compose(compose(g, x), inverse(g))


def cycle_type(a):
    """Sorted cycle lengths, fixed points included."""
    seen = [False] * len(a)
    lens = []
    for i in range(len(a)):
        if seen[i]:
            continue
        k = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = a[j]
            k += 1
        lens.append(k)
    return tuple(sorted(lens))


def perm_order(a):
    k = 1
    b = a
    e = identity_perm(len(a))
    while b != e:
        b = compose(a, b)
        k += 1
    return k


def parse_perm(text, n):
    """Cycle notation, 1-based, e.g. '(1 2 3)(4 5)'; '()' is the identity.

    Commas and spaces both separate entries.  Cycles are applied right
    to left, matching composition order.
    """
    text = text.strip()
    if text in ("()", "e", ""):
        return identity_perm(n)
    if not re.fullmatch(r"(\(\s*\d+(\s*[ ,]\s*\d+)*\s*\))+", text):
        raise GroupError(f"cannot parse permutation {text!r}")
    result = identity_perm(n)
    for body in reversed(re.findall(r"\(([^()]*)\)", text)):
        entries = [int(tok) - 1 for tok in re.split(r"[ ,]+", body.strip())]
        if len(set(entries)) != len(entries):
            raise GroupError(f"repeated point in cycle ({body})")
        if any(i < 0 or i >= n for i in entries):
            raise GroupError(f"point out of range 1..{n} in ({body})")
        cyc = list(range(n))
        for idx, i in enumerate(entries):
            cyc[i] = entries[(idx + 1) % len(entries)]
        result = compose(tuple(cyc), result)
    return result


def format_perm(a):
    seen = [False] * len(a)
    parts = []
    for i in range(len(a)):
        if seen[i] or a[i] == i:
            seen[i] = True
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j + 1)
            j = a[j]
        parts.append("(" + " ".join(str(x) for x in cyc) + ")")
    return "".join(parts) if parts else "()"


class PermGroup:
    """A permutation group on 0..n-1, fully enumerated at construction."""

    __slots__ = ("n", "name", "gens", "elements", "_set", "_classes")

    def __init__(self, n, gens, name="", bound=CLOSURE_BOUND):
        gens = tuple(tuple(g) for g in gens)
        for g in gens:
            if sorted(g) != list(range(n)):
                raise GroupError(f"{g} is not a permutation of 0..{n - 1}")
        closure = close_generators(gens, n, bound)
        self.n = n
        self.name = name
        self.gens = gens
        self.elements = tuple(sorted(closure))
        self._set = frozenset(closure)
        self._classes = None

    @property
    def order(self):
        return len(self.elements)

    def __contains__(self, perm):
        return perm in self._set

    def contains_group(self, other):
        return other.n == self.n and other._set <= self._set

    def conjugacy_classes(self):
        """Classes as sorted tuples, ordered by (size, least element)."""
        if self._classes is None:
            seen = set()
            classes = []
            for x in self.elements:
                if x in seen:
                    continue
                cls = {conjugate(g, x) for g in self.elements}
                seen |= cls
                classes.append(tuple(sorted(cls)))
            classes.sort(key=lambda c: (len(c), c[0]))
            self._classes = tuple(classes)
        return self._classes

    def class_sizes(self):
        return tuple(len(c) for c in self.conjugacy_classes())

    def is_abelian(self):
        return all(compose(a, b) == compose(b, a)
                   for a in self.gens for b in self.gens)

    def __repr__(self):
        label = self.name or "PermGroup"
        return f"<{label} on {self.n} points, order {self.order}>"


def close_generators(gens, n, bound=CLOSURE_BOUND):
    e = identity_perm(n)
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(g, x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if len(seen) > bound:
                        raise GroupError(
                            f"closure exceeded {bound} elements")
        frontier = nxt
    return seen


# --- Gassmann machinery ---


@dataclass
class GassmannReport:
    group: str
    degree: int
    order: int
    subgroup_order: int
    rows: tuple  # (class representative perm, size, count1, count2)
    gassmann: bool
    conjugate: bool

    def text(self):
        head = (f"group {self.group or '?'} on {self.degree} points, "
                f"order {self.order}; subgroups of order {self.subgroup_order}")
        body = [["class rep", "size", "in H1", "in H2"]]
        for rep, size, c1, c2 in self.rows:
            body.append([format_perm(rep), str(size), str(c1), str(c2)])
        widths = [max(len(r[i]) for r in body) for i in range(4)]
        lines = [head]
        for r in body:
            lines.append("  ".join(r[i].ljust(widths[i]) for i in range(4)))
        lines.append(f"GASSMANN: {'yes' if self.gassmann else 'no'}")
        lines.append(f"CONJUGATE: {'yes' if self.conjugate else 'no'}")
        return "\n".join(lines)


def gassmann_check(G, H1, H2):
    """Per-class intersection counts and the two verdicts."""
    for H in (H1, H2):
        if not G.contains_group(H):
            raise GroupError("subgroup is not contained in the group")
    if H1.order != H2.order:
        raise GroupError(
            f"subgroup orders differ ({H1.order} vs {H2.order}); "
            f"Gassmann equivalence needs equal order")
    rows = []
    ok = True
    for cls in G.conjugacy_classes():
        c1 = sum(1 for x in cls if x in H1)
        c2 = sum(1 for x in cls if x in H2)
        ok = ok and c1 == c2
        rows.append((cls[0], len(cls), c1, c2))
    conj = are_conjugate(G, H1, H2)
    return GassmannReport(G.name, G.n, G.order, H1.order, tuple(rows),
                          ok, conj)


def are_conjugate(G, H1, H2):
    target = H2._set
    h1 = H1.elements
    for g in G.elements:
        gi = inverse(g)
        if all(compose(compose(g, h), gi) in target for h in h1):
            return True
    return False


def coset_cycle_type(G, H, g):
    """Cycle type of g acting on the left cosets of H in G.

    For a field extension cut out by H, this is the splitting type (all
    multiplicities 1) of an unramified prime whose Frobenius class
    contains g.
    """
    if not G.contains_group(H):
        raise GroupError("subgroup is not contained in the group")
    if g not in G:
        raise GroupError("element is outside the group")
    coset_of = {}
    reps = []
    for x in G.elements:
        if x in coset_of:
            continue
        idx = len(reps)
        reps.append(x)
        for h in H.elements:
            coset_of[compose(x, h)] = idx
    action = tuple(coset_of[compose(g, x)] for x in reps)
    return cycle_type(action)


def coset_types(G, H, C):
    """Sizes of the C-orbits on the cosets of H in G, for cyclic C.

    Equivalently the double coset sizes |H t C| divided by |H|.  Their
    sum is the index of H, and when C is generated by the Frobenius at
    an unramified prime these are the inertia degrees above it.
    """
    gen = next((x for x in C.elements if perm_order(x) == C.order), None)
    if gen is None:
        raise GroupError("coset types need a cyclic subgroup")
    return coset_cycle_type(G, H, gen)


def gassmann_by_cycle_type(H1, H2):
    """Gassmann equivalence inside the full symmetric group on n points.

    Conjugacy classes of the symmetric group are exactly the cycle
    types, so two subgroups are Gassmann equivalent in it precisely when
    their elements realize each cycle type equally often.  This decides
    the verdict without enumerating the ambient group.
    """
    if H1.n != H2.n:
        raise GroupError("subgroups act on different point counts")
    stats1 = Counter(cycle_type(h) for h in H1.elements)
    stats2 = Counter(cycle_type(h) for h in H2.elements)
    return stats1 == stats2, stats1, stats2


# --- subgroup enumeration ---


def _close_bounded(gens, n, limit):
    """Closure, or None as soon as it grows past limit."""
    e = identity_perm(n)
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(g, x)
                if y not in seen:
                    if len(seen) >= limit:
                        return None
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def all_subgroups_of_order(G, k):
    """All subgroups of order k generated by at most two elements.

    Subgroups needing three or more generators are not found; for the
    groups treated here (and for any group whose order-k subgroups are
    cyclic, dihedral, or otherwise 2-generated) the enumeration is
    complete.  Returns PermGroup objects, deduplicated, in a fixed order.
    """
    if k < 1 or G.order % k:
        raise GroupError(f"{k} does not divide the group order {G.order}")
    if k == 1:
        return [PermGroup(G.n, [], name="trivial")]
    orders = {x: perm_order(x) for x in G.elements}
    cands = [x for x in G.elements if k % orders[x] == 0 and orders[x] > 1]
    found = {}
    for i, a in enumerate(cands):
        if orders[a] == k:
            cl = _close_bounded([a], G.n, k + 1)
            if cl is not None and len(cl) == k and cl not in found:
                found[cl] = (a,)
        for b in cands[i + 1:]:
            cl = _close_bounded([a, b], G.n, k + 1)
            if cl is not None and len(cl) == k and cl not in found:
                found[cl] = (a, b)
    out = []
    for cl in sorted(found, key=lambda s: tuple(sorted(s))):
        out.append(PermGroup(G.n, found[cl], name=f"order{k}"))
    return out


def subgroups_of_order(G, k):
    """One subgroup of order k per conjugacy class (2-generated search)."""
    return [bucket[0] for bucket in
            conjugacy_classes_of(G, all_subgroups_of_order(G, k))]


def conjugacy_classes_of(G, subgroups):
    """Bucket subgroups of G into conjugacy classes, preserving order."""
    buckets = []
    assigned = {}
    for H in subgroups:
        key = H._set
        if key in assigned:
            buckets[assigned[key]].append(H)
            continue
        idx = len(buckets)
        buckets.append([H])
        for g in G.elements:
            image = frozenset(conjugate(g, h) for h in H.elements)
            assigned.setdefault(image, idx)
    return buckets


def cyclic_subgroup_classes(G):
    """Conjugacy classes of cyclic subgroups (the trivial one included)."""
    found = {}
    for a in G.elements:
        cl = _close_bounded([a], G.n, G.order + 1)
        if cl not in found:
            found[cl] = a
    subs = [PermGroup(G.n, [] if len(cl) == 1 else [found[cl]])
            for cl in sorted(found, key=lambda s: (len(s), tuple(sorted(s))))]
    return conjugacy_classes_of(G, subs)


# --- builtin groups ---


def psl27():
    """PSL(2,7) acting on the 8 points of the projective line over F_7.

    Points are 0..6 and 7 for the point at infinity; generators are
    x -> x + 1 and x -> -1/x.
    """
    shift = tuple((i + 1) % 7 for i in range(7)) + (7,)
    flip = [0] * 8
    flip[0] = 7
    flip[7] = 0
    for x in range(1, 7):
        flip[x] = (-pow(x, 5, 7)) % 7
    return PermGroup(8, [shift, tuple(flip)], name="PSL(2,7)")


def klein4():
    """Z/2 x Z/2 as two independent transpositions.

    This is the Galois group of a compositum of two quadratic fields,
    acting on the four roots; the two factors are the point stabilizers
    of the quadratic subfields.
    """
    return PermGroup(4, [parse_perm("(1 2)", 4),
                         parse_perm("(3 4)", 4)], name="V4")


def symmetric_group(n):
    if n < 1:
        raise GroupError("need at least one point")
    if n == 1:
        return PermGroup(1, [], name="S1")
    cyc = tuple(range(1, n)) + (0,)
    swap = (1, 0) + tuple(range(2, n))
    return PermGroup(n, [cyc, swap], name=f"S{n}")


def _regular_group(size, mult, gen_idx, name):
    """Left regular representation from a multiplication table function."""
    gens = []
    for g in gen_idx:
        row = tuple(mult(g, x) for x in range(size))
        if sorted(row) != list(range(size)):
            raise GroupError("multiplication table row is not a permutation")
        gens.append(row)
    G = PermGroup(size, gens, name=name)
    if G.order != size:
        raise GroupError(
            f"regular representation closed to {G.order}, expected {size}")
    return G


def _triple(i):
    return (i // 9, (i // 3) % 3, i % 3)


def _index(a, b, c):
    return (a % 3) * 9 + (b % 3) * 3 + (c % 3)


def cayley_komatsu(ell=3):
    """Two order-27 exponent-3 groups as regular subgroups of Sym(27).

    The elementary abelian group and the Heisenberg group (strict upper
    triangular 3x3 matrices over F_3) both act freely on themselves, so
    every nonidentity element has cycle type 3^9 and the two images have
    identical cycle type statistics: they are Gassmann equivalent inside
    the full symmetric group.  They are not conjugate there, since one
    is abelian and the other is not.  Only ell = 3 is built; larger
    primes give groups of order ell^3 that the same construction would
    cover but the desk-scale demos never need.
    """
    if ell != 3:
        raise GroupError("only ell = 3 is supported")

    def mult_ab(i, j):
        a, b, c = _triple(i)
        d, e, f = _triple(j)
        return _index(a + d, b + e, c + f)

    def mult_heis(i, j):
        a, b, c = _triple(i)
        d, e, f = _triple(j)
        return _index(a + d, b + e, c + f + a * e)

    ab = _regular_group(27, mult_ab, [_index(1, 0, 0), _index(0, 1, 0),
                                      _index(0, 0, 1)], "elem-abelian-27")
    heis = _regular_group(27, mult_heis, [_index(1, 0, 0), _index(0, 1, 0)],
                          "heisenberg-27")
    return ab, heis


def parse_group_text(text, n=None, default_name=""):
    """Group description: 'n = <points>' once, then 'gen = <cycles>' lines.

    '#' starts a comment; 'name = ...' is optional.  When n is supplied
    by the caller the file may omit it (subgroup files reuse the parent
    degree) but must not contradict it.
    """
    name = default_name
    gens = []
    pending = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, eq, value = line.partition("=")
        if not eq:
            raise GroupError(f"expected key = value, got {line!r}")
        key = key.strip()
        value = value.strip()
        if key == "n":
            declared = int(value)
            if n is not None and declared != n:
                raise GroupError(
                    f"point count {declared} does not match expected {n}")
            n = declared
        elif key == "name":
            name = value
        elif key == "gen":
            pending.append(value)
        else:
            raise GroupError(f"unknown key {key!r} in group text")
    if n is None:
        raise GroupError("group text does not declare n")
    for value in pending:
        gens.append(parse_perm(value, n))
    return PermGroup(n, gens, name=name)


def parse_group_file(path, n=None):
    import os

    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise GroupError(f"cannot read group file {path}: {e}") from None
    stem = os.path.splitext(os.path.basename(path))[0]
    return parse_group_text(text, n=n, default_name=stem)


BUILTIN_GROUPS = {
    "psl27": psl27,
    "klein4": klein4,
    "s4": lambda: symmetric_group(4),
    "s5": lambda: symmetric_group(5),
}


def builtin_group(name):
    try:
        return BUILTIN_GROUPS[name]()
    except KeyError:
        raise GroupError(
            f"unknown builtin group {name!r}; "
            f"choices: {', '.join(sorted(BUILTIN_GROUPS))}") from None
