"""Field axioms, canonical moduli, and residue field arithmetic."""

import random

import pytest

from gosslift.errors import FieldError
from gosslift.field import FIELD_SIZE_BOUND, FiniteField, ResidueField, gf_create
from gosslift import poly

SMALL_Q = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2),
           (2, 4), (5, 2), (3, 3)]
LARGE_Q = [(7, 2), (2, 6), (3, 4)]


def test_canonical_moduli():
    # lexicographically smallest monic irreducible, low coefficients first
    assert gf_create(2, 2).modulus == (1, 1, 1)
    assert gf_create(3, 2).modulus == (1, 0, 1)
    assert gf_create(2, 3).modulus == (1, 0, 1, 1)
    assert gf_create(5, 2).modulus == (1, 1, 1)


def test_gf_create_caches():
    assert gf_create(3, 2) is gf_create(3, 2)
    assert gf_create(3) == FiniteField(3)


def test_axioms_exhaustive_small():
    for p, m in SMALL_Q:
        K = gf_create(p, m)
        q = K.q
        for a in range(q):
            assert K.add(a, 0) == a
            assert K.mul(a, 1) == a
            assert K.add(a, K.neg(a)) == 0
            assert K.pow_(a, q) == a
            if a:
                assert K.mul(a, K.inv(a)) == 1
        for a in range(q):
            for b in range(q):
                assert K.add(a, b) == K.add(b, a)
                assert K.mul(a, b) == K.mul(b, a)
                for c in range(q):
                    assert K.mul(a, K.add(b, c)) == K.add(K.mul(a, b), K.mul(a, c))
                    assert K.mul(K.mul(a, b), c) == K.mul(a, K.mul(b, c))
                    assert K.add(K.add(a, b), c) == K.add(a, K.add(b, c))


def test_axioms_large_fields():
    """Pairs exhaustively, triples sampled, for q in {49, 64, 81}."""
    rng = random.Random(0)
    for p, m in LARGE_Q:
        K = gf_create(p, m)
        q = K.q
        assert q <= 81
        for a in range(q):
            assert K.pow_(a, q) == a
            if a:
                assert K.mul(a, K.inv(a)) == 1
        for a in range(q):
            for b in range(q):
                assert K.add(a, b) == K.add(b, a)
                assert K.mul(a, b) == K.mul(b, a)
        for _ in range(2000):
            a, b, c = rng.randrange(q), rng.randrange(q), rng.randrange(q)
            assert K.mul(a, K.add(b, c)) == K.add(K.mul(a, b), K.mul(a, c))
            assert K.mul(K.mul(a, b), c) == K.mul(a, K.mul(b, c))


def test_sub_matches_add_neg():
    K = gf_create(3, 2)
    for a in range(9):
        for b in range(9):
            assert K.sub(a, b) == K.add(a, K.neg(b))


def test_pth_power_and_root():
    for p, m in ((2, 3), (3, 2), (5, 1)):
        K = gf_create(p, m)
        for a in range(K.q):
            assert K.pth_power(a) == K.pow_(a, p)
            assert K.pth_root(K.pth_power(a)) == a
            assert K.pth_power(K.pth_root(a)) == a


def test_from_int_reduces_mod_p():
    K = gf_create(3, 2)
    assert K.from_int(0) == 0
    assert K.from_int(4) == 1
    assert K.from_int(-1) == 2


def test_coords_round_trip():
    K = gf_create(3, 4)
    for a in range(K.q):
        c = K.coords(a)
        assert len(c) == 4
        assert K.element_from_coords(c) == a


def test_pow_negative_exponent():
    K = gf_create(5)
    for a in range(1, 5):
        assert K.pow_(a, -1) == K.inv(a)
        assert K.pow_(a, -2) == K.inv(K.mul(a, a))
        assert K.pow_(a, K.q - 1) == 1


def test_bad_field_parameters():
    with pytest.raises(FieldError):
        FiniteField(4)
    with pytest.raises(FieldError):
        FiniteField(3, 0)
    with pytest.raises(FieldError):
        FiniteField(2, 9)  # 512 > FIELD_SIZE_BOUND
    with pytest.raises(FieldError):
        FiniteField(3, 2, modulus=(1, 0, 2))  # not monic
    with pytest.raises(FieldError):
        FiniteField(3, 2, modulus=(1, 1))  # wrong degree
    with pytest.raises(FieldError):
        gf_create(3).inv(0)
    assert FIELD_SIZE_BOUND == 256


def test_residue_field_matches_table_field():
    """F_9 as F_3[T]/(T^2+1) against the table-driven F_9, same modulus."""
    K = gf_create(3)
    K9 = gf_create(3, 2)
    R = ResidueField(K, (1, 0, 1))
    assert R.modulus == K9.modulus
    assert R.order == 9

    def iso(a):
        return K9.coords(a)

    for a in range(9):
        for b in range(9):
            assert iso(K9.add(a, b)) == R.add(iso(a), iso(b))
            assert iso(K9.mul(a, b)) == R.mul(iso(a), iso(b))
        assert iso(K9.neg(a)) == R.neg(iso(a))
        assert iso(K9.pth_power(a)) == R.pth_power(iso(a))
        if a:
            assert iso(K9.inv(a)) == R.inv(iso(a))


def test_residue_field_inverses():
    for p, mod in ((3, (1, 0, 1)), (5, (2, 0, 1)), (3, (1, 2, 0, 1))):
        R = ResidueField(gf_create(p), mod)
        for a in R.elements():
            if a == R.zero:
                with pytest.raises(FieldError):
                    R.inv(a)
                continue
            assert R.mul(a, R.inv(a)) == R.one
            assert R.pow_(a, R.order - 1) == R.one


def test_residue_field_project_lift():
    K = gf_create(3)
    R = ResidueField(K, (1, 0, 1))
    assert R.project((1, 0, 1)) == R.zero
    assert R.project((0, 1)) == (0, 1)
    assert R.project((0, 0, 1)) == (2, 0)  # T^2 = -1
    for a in R.elements():
        assert R.project(R.lift(a)) == a


def test_residue_field_trace_to_prime():
    K = gf_create(3)
    R = ResidueField(K, (1, 0, 1))
    tbar = (0, 1)
    assert R.trace_to_prime(tbar) == 0  # T + T^3 = T - T
    assert R.trace_to_prime((1, 1)) == 2
    assert R.trace_to_prime(R.one) == 2  # m copies of 1
    for a in R.elements():
        for b in R.elements():
            s = (R.trace_to_prime(a) + R.trace_to_prime(b)) % 3
            assert R.trace_to_prime(R.add(a, b)) == s


def test_residue_field_trace_matches_frobenius_orbit():
    K = gf_create(3)
    R = ResidueField(K, (2, 2, 0, 1))
    for a in R.elements():
        acc = R.zero
        x = a
        for _ in range(3):
            acc = R.add(acc, x)
            x = R.pth_power(x)
        lifted = R.lift(acc)
        expect = 0 if not lifted else lifted[0]
        assert R.trace_to_prime(a) == expect


def test_residue_field_over_extension_base():
    K9 = gf_create(3, 2)
    irred = None
    for f in poly.enumerate_monic(K9, 2):
        if poly.poly_factor_degrees(K9, f.coeffs) == ((2, 1),):
            irred = f
            break
    R = ResidueField(K9, irred.coeffs)
    assert R.order == 81
    rng = random.Random(1)
    elems = list(R.elements())
    for _ in range(200):
        a, b = rng.choice(elems), rng.choice(elems)
        assert R.mul(a, b) == R.mul(b, a)
        if a != R.zero:
            assert R.mul(a, R.inv(a)) == R.one
    assert R.trace_to_prime(R.one) == (4 % 3)


def test_residue_field_bad_modulus():
    K = gf_create(3)
    with pytest.raises(FieldError):
        ResidueField(K, (1,))
    with pytest.raises(FieldError):
        ResidueField(K, (0, 2))
