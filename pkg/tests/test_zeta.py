"""Dirichlet tables, Weil blocks, mod-p zeta values, and reconstruction."""

import itertools
import random

import pytest

from gosslift.errors import ZetaError
from gosslift.extension import (SplittingType, builtin_extension,
                                splitting_type, trivial_extension)
from gosslift.field import gf_create
from gosslift.laurent import LaurentSeries
from gosslift import poly
from gosslift.poly import MonicPoly, enumerate_monic_irreducibles
from gosslift.textforms import parse_monic
from gosslift.zeta import (DirichletTable, compare_zeta, dirichlet_table,
                           dump_table, goss_eval, load_table, pgalois_check,
                           prime_power_residues, reconstruct_splitting,
                           weil_series)

K3 = gf_create(3)


def test_local_counts_examples():
    from gosslift.zeta import local_counts
    split2 = SplittingType(((1, 1), (1, 1)))
    assert local_counts(split2, 4) == [1, 2, 3, 4, 5]
    inert2 = SplittingType(((1, 2),))
    assert local_counts(inert2, 4) == [1, 0, 1, 0, 1]
    ram = SplittingType(((2, 1),))
    assert local_counts(ram, 4) == [1, 1, 1, 1, 1]
    split3 = SplittingType(((1, 1),) * 3)
    assert local_counts(split3, 3) == [1, 3, 6, 10]
    mixed = SplittingType(((1, 1), (1, 2)))
    assert local_counts(mixed, 4) == [1, 1, 2, 2, 3]
    with pytest.raises(ZetaError):
        local_counts(split2, -1)


def test_local_counts_match_tuple_enumeration():
    """The coin count equals a direct enumeration of exponent tuples."""
    from gosslift.zeta import local_counts
    kmax = 4
    fee_sets = [fs for size in range(1, 4)
                for fs in itertools.combinations_with_replacement((1, 2, 3), size)]
    for fs in fee_sets:
        st = SplittingType(tuple((1, f) for f in fs))
        got = local_counts(st, kmax)
        for k in range(kmax + 1):
            direct = 0
            for tup in itertools.product(*(range(k // f + 1) for f in fs)):
                if sum(a * f for a, f in zip(tup, fs)) == k:
                    direct += 1
            assert got[k] == direct


def test_trivial_table_is_all_ones():
    table = dirichlet_table(trivial_extension(K3), 4)
    assert len(table.entries) == 121
    assert all(b == 1 for b in table.entries.values())
    assert table.block_sums() == [1, 3, 9, 27, 81]
    keys = list(table.entries)
    assert keys == sorted(keys)


def test_kummer_table_degree_one():
    table = dirichlet_table(builtin_extension(K3, "kummer_sqrt", c="T"), 1)
    expect = {"1": 1, "T": 1, "T + 1": 0, "T + 2": 2}
    assert {str(n): b for n, b in table.entries.items()} == expect


def test_artin_schreier_table_small_entries():
    table = dirichlet_table(builtin_extension(K3, "artin_schreier", m=1), 3)
    vals = {str(n): b for n, b in table.entries.items()}
    assert vals["1"] == 1
    assert vals["T"] == 3
    assert vals["T + 1"] == 0
    assert vals["T + 2"] == 0
    assert vals["T^2"] == 6
    assert vals["T^2 + 1"] == 3
    assert vals["T^2 + T + 2"] == 0
    assert vals["T^2 + 2*T + 2"] == 0
    assert vals["T^2 + T"] == 0
    assert vals["T^3"] == 10


def test_table_multiplicativity():
    rng = random.Random(0)
    for ext in (builtin_extension(K3, "kummer_sqrt", c="T"),
                builtin_extension(K3, "artin_schreier", m=5)):
        table = dirichlet_table(ext, 6)
        keys = list(table.entries)
        for _ in range(100):
            n1, n2 = rng.choice(keys), rng.choice(keys)
            if n1.degree + n2.degree > 6:
                continue
            if poly.pgcd(K3, n1.coeffs, n2.coeffs) != (1,):
                continue
            prod = n1 * n2
            assert table.entries[prod] == table.entries[n1] * table.entries[n2]


def test_table_equality_ignores_name():
    a = dirichlet_table(trivial_extension(K3, name="A"), 2)
    b = dirichlet_table(trivial_extension(K3, name="B"), 2)
    assert a == b
    assert a != dirichlet_table(trivial_extension(K3), 3)


def test_dirichlet_table_bounds():
    with pytest.raises(ZetaError):
        dirichlet_table(trivial_extension(K3), -1)
    table = dirichlet_table(trivial_extension(K3), 0)
    assert {str(n): b for n, b in table.entries.items()} == {"1": 1}


def test_weil_series():
    table = dirichlet_table(trivial_extension(K3), 2)
    w = weil_series(table)
    assert w.coeffs == (1, 3, 9)
    assert str(w) == "1 + 3*u^1 + 9*u^2 + O(u^3)"


def test_weil_blocks_can_coincide_for_different_tables():
    """Degree blocks of these quadratic covers all match 3^d at small d."""
    triv = dirichlet_table(trivial_extension(K3), 4)
    kummer = dirichlet_table(builtin_extension(K3, "kummer_sqrt", c="T"), 4)
    assert triv.block_sums() == kummer.block_sums() == [1, 3, 9, 27, 81]
    assert compare_zeta(triv, kummer, "weil").equal
    v = compare_zeta(triv, kummer, "goss")
    assert not v.equal
    assert str(v.witness) == "T + 1"
    assert (v.left, v.right) == (1, 0)
    assert v.text() == "DIFFER n=T + 1 left=1 right=0"


def test_goss_eval_positive_s():
    triv = dirichlet_table(trivial_extension(K3), 4)
    z1 = goss_eval(triv, 1, 4)
    assert str(z1) == "1 + 2*T^-3 [prec 4]"
    assert z1.coefficient(0) == 1
    assert z1.coefficient(1) == 0
    assert z1.coefficient(3) == 2
    with pytest.raises(ZetaError):
        goss_eval(triv, 1, 5)  # needs bound 5
    with pytest.raises(ZetaError):
        goss_eval(dirichlet_table(trivial_extension(K3), 2), 2, 6)


def test_goss_eval_nonpositive_s():
    triv = dirichlet_table(trivial_extension(K3), 5)
    assert str(goss_eval(triv, 0, 4)) == "1 [prec 4]"
    assert str(goss_eval(triv, -1, 6)) == "1 [prec 6]"
    z2 = goss_eval(triv, -2, 6)
    assert z2 == LaurentSeries.zero(K3, 6)
    kummer = dirichlet_table(builtin_extension(K3, "kummer_sqrt", c="T"), 6)
    assert str(goss_eval(kummer, 0, 4)) == "1 [prec 4]"
    assert str(goss_eval(kummer, -1, 4)) == "2 [prec 4]"
    assert goss_eval(kummer, -2, 4).is_zero
    assert str(goss_eval(kummer, -3, 4)) == "2 [prec 4]"
    with pytest.raises(ZetaError):
        goss_eval(dirichlet_table(trivial_extension(K3), 4), -2, 6)


def test_goss_eval_nonterminating_sum_fails():
    table = dirichlet_table(builtin_extension(K3, "artin_schreier", m=1), 6)
    with pytest.raises(ZetaError):
        goss_eval(table, -2, 6)


def expand_inverse_power(K, n_coeffs, s, M):
    """Coefficients of n^-s at 1/T as {j: element}, solved term by term."""
    g = poly.ppow(K, n_coeffs, s)
    D = poly.pdeg(g)
    x = {}
    for t in range(0, M - D + 1):
        want = K.one if t == 0 else K.zero
        acc = K.zero
        for i in range(1, t + 1):
            if D - i >= 0:
                acc = K.add(acc, K.mul(g[D - i], x.get(D + t - i, K.zero)))
        x[D + t] = K.sub(want, acc)
    return x


def test_goss_eval_matches_independent_expansion():
    for ext in (trivial_extension(K3),
                builtin_extension(K3, "kummer_sqrt", c="T")):
        table = dirichlet_table(ext, 3)
        for s in (1, 2):
            M = 3 * s
            got = goss_eval(table, s, M)
            expect = {}
            for n, b in table.entries.items():
                r = K3.from_int(b)
                if r == K3.zero:
                    continue
                for j, c in expand_inverse_power(K3, n.coeffs, s, M).items():
                    expect[j] = K3.add(expect.get(j, K3.zero), K3.mul(r, c))
            for j in range(0, M + 1):
                assert got.coefficient(j) == expect.get(j, K3.zero)


def quadratic_pair(bound):
    a = dirichlet_table(builtin_extension(K3, "kummer_sqrt", c="T"), bound)
    b = dirichlet_table(builtin_extension(K3, "kummer_sqrt", c="T + 1"), bound)
    return a, b


def test_compare_zeta_quadratic_twins():
    a, b = quadratic_pair(6)
    w = compare_zeta(a, b, "weil")
    assert w.equal
    assert w.text() == "EQUAL bound=6"
    g = compare_zeta(a, b, "goss")
    assert not g.equal
    assert str(g.witness) == "T"
    assert (g.left, g.right) == (1, 2)
    assert g.text() == "DIFFER n=T left=1 right=2"
    l = compare_zeta(a, b, "lifted")
    assert not l.equal
    assert str(l.witness) == "T"
    assert (l.left, l.right) == (1, 2)


def test_compare_zeta_cubic_pair_blocks_differ():
    a = dirichlet_table(builtin_extension(K3, "artin_schreier", m=1), 4)
    b = dirichlet_table(builtin_extension(K3, "artin_schreier", m=5), 4)
    assert compare_zeta(a, b, "goss").equal
    w = compare_zeta(a, b, "weil")
    assert not w.equal
    assert w.text() == "DIFFER d=4 left=81 right=99"


def test_compare_zeta_validation():
    a = dirichlet_table(trivial_extension(K3), 2)
    b = dirichlet_table(trivial_extension(K3), 3)
    with pytest.raises(ZetaError):
        compare_zeta(a, b, "weil")
    c = dirichlet_table(trivial_extension(gf_create(5)), 2)
    with pytest.raises(ZetaError):
        compare_zeta(a, c, "weil")
    with pytest.raises(ZetaError):
        compare_zeta(a, a, "junk")


def test_perturbed_table_comparisons():
    base = dirichlet_table(builtin_extension(K3, "kummer_sqrt", c="T"), 6)
    rng = random.Random(1)
    keys = [n for n in base.entries if n.degree >= 1]
    for _ in range(10):
        n0 = rng.choice(keys)
        bumped = dict(base.entries)
        bumped[n0] = bumped[n0] + 3
        other = DirichletTable(base.ext_name, base.field, base.bound, bumped)
        assert compare_zeta(base, other, "goss").equal
        v = compare_zeta(base, other, "lifted")
        assert not v.equal
        assert v.witness == n0
        w = compare_zeta(base, other, "weil")
        assert not w.equal
        assert w.witness == n0.degree


def test_prime_power_residues():
    split3 = SplittingType(((1, 1),) * 3)
    assert prime_power_residues(split3, 3, 5) == {1: 3, 2: 1, 3: 0}
    ram = SplittingType(((2, 1),))
    assert prime_power_residues(ram, 2, 5) == {1: 1, 2: 1}


def test_reconstruct_round_trip_over_f5():
    K5 = gf_create(5)
    quad = builtin_extension(K5, "kummer_sqrt", c="T^2 + T")
    t = MonicPoly(K5, (0, 1))
    cubic_overrides = {t: SplittingType(((3, 1),))}
    from gosslift.extension import ExtensionSpec
    from gosslift.textforms import parse_xt_poly
    cubic = ExtensionSpec("C3", K5, parse_xt_poly(K5, "X^3 - T"),
                          overrides=cubic_overrides)
    for ext in (quad, cubic):
        n_ext = ext.degree
        for d in (1, 2):
            for prime in enumerate_monic_irreducibles(K5, d):
                st = splitting_type(ext, prime)
                rec = reconstruct_splitting(
                    prime_power_residues(st, n_ext, 5), n_ext, 5)
                # ramification indices are invisible mod p, inertia
                # degrees with multiplicity come back exactly
                assert rec == st.inertia_degrees()


def test_reconstruct_errors():
    with pytest.raises(ZetaError):
        reconstruct_splitting({1: 0, 2: 0}, 2, 2)  # needs n_ext < p
    with pytest.raises(ZetaError):
        reconstruct_splitting({1: 1}, 2, 5)  # missing f=2
    with pytest.raises(ZetaError):
        reconstruct_splitting({1: 4, 2: 0}, 2, 5)  # degree sum 4 > 2


def test_reconstruct_ramified_quadratic():
    assert reconstruct_splitting({1: 1, 2: 1}, 2, 5) == (1,)
    assert reconstruct_splitting({1: 2, 2: 3}, 2, 5) == (1, 1)
    assert reconstruct_splitting({1: 0, 2: 1}, 2, 5) == (2,)


def test_pgalois_check():
    as1 = dirichlet_table(builtin_extension(K3, "artin_schreier", m=1), 4)
    assert pgalois_check(as1, 3) == (True, None)
    triv = dirichlet_table(trivial_extension(K3), 3)
    assert pgalois_check(triv, 1) == (True, None)
    ok, witness = pgalois_check(triv, 3)
    assert not ok
    assert str(witness) == "T"
    kummer = dirichlet_table(builtin_extension(K3, "kummer_sqrt", c="T"), 3)
    ok2, witness2 = pgalois_check(kummer, 2)
    assert not ok2
    assert str(witness2) == "T"  # B(T) = 1 but T is not a square
    with pytest.raises(ZetaError):
        pgalois_check(triv, 0)


def test_dump_and_load_round_trip(tmp_path):
    table = dirichlet_table(builtin_extension(K3, "kummer_sqrt", c="T"), 2)
    text = dump_table(table)
    lines = text.splitlines()
    assert lines[0] == "# ext=K_sqrt p=3 m=1 D=2"
    assert lines[1] == "1 1"
    assert len(lines) == 14
    loaded = load_table(text)
    assert loaded == table
    assert loaded.ext_name == "K_sqrt"
    path = tmp_path / "table.txt"
    dump_table(table, str(path))
    assert load_table(str(path), from_path=True) == table


def test_dump_sanitizes_name():
    one = MonicPoly(K3, (1,))
    table = DirichletTable("my ext", K3, 0, {one: 1})
    assert dump_table(table).splitlines()[0] == "# ext=my_ext p=3 m=1 D=0"


def test_load_table_errors(tmp_path):
    with pytest.raises(ZetaError):
        load_table("T 1\nT^2 1\n")  # no header
    with pytest.raises(ZetaError):
        load_table(str(tmp_path / "missing.txt"), from_path=True)
    table = dirichlet_table(trivial_extension(K3), 1)
    with pytest.raises(ZetaError):
        dump_table(table, str(tmp_path / "no" / "such" / "dir.txt"))
