"""Hermitian forms, diagonalization and Witt classification."""

import random

import pytest

from maslovkit import (
    DegenerateForm,
    FormError,
    FormTriple,
    HermitianForm,
    RingDescriptor,
    RingMatrix,
    UnsupportedRing,
    WittClass,
    check_hermitian,
    diagonalize,
    hyperbolic_form,
    in_fundamental_ideal,
    is_square,
    least_non_residue,
    triple_delta,
    witt_add,
    witt_class,
    witt_neg,
)
from maslovkit.ring import FieldElement

from helpers import rand_symmetric_nondeg, rand_unit_matrix


F5 = RingDescriptor(5)
F7 = RingDescriptor(7)
L5 = RingDescriptor(5, 1)


def diag_form(ring, entries):
    n = len(entries)
    return HermitianForm(
        RingMatrix(ring, [[entries[i] if i == j else 0 for j in range(n)] for i in range(n)]),
        1,
    )


def test_check_hermitian_examples():
    assert check_hermitian(hyperbolic_form(1, 1, F5))
    assert check_hermitian(hyperbolic_form(1, -1, F5))
    assert not check_hermitian(HermitianForm(RingMatrix(L5, [[L5.x(0)]]), 1))
    herm = HermitianForm(RingMatrix(L5, [[L5.x(0) + L5.x(0, -1)]]), 1)
    assert check_hermitian(herm)


def test_hyperbolic_form_examples():
    assert hyperbolic_form(1, 1, F5).matrix == RingMatrix(F5, [[0, 1], [1, 0]])
    assert hyperbolic_form(1, -1, F5).matrix == RingMatrix(F5, [[0, 1], [-1, 0]])
    big = hyperbolic_form(2, 1, F5).matrix
    assert big.shape == (4, 4)
    assert big.submatrix(range(2), range(2, 4)) == RingMatrix.identity(F5, 2)
    assert big.submatrix(range(2, 4), range(2)) == RingMatrix.identity(F5, 2)


def test_diagonalize_examples():
    theta = least_non_residue(5)
    form = diag_form(F5, [1, theta.value])
    assert diagonalize(form) == [FieldElement(1, 5), theta]

    # hyperbolic plane: entries multiply to the square class of -1
    entries = diagonalize(hyperbolic_form(1, 1, F5))
    assert len(entries) == 2 and all(e.value != 0 for e in entries)
    disc = entries[0] * entries[1]
    assert is_square(disc * FieldElement(-1, 5).inverse())

    # scaling by a square keeps the square class
    scaled = diag_form(F5, [4 * 3 % 5])
    (entry,) = diagonalize(scaled)
    assert is_square(entry * FieldElement(3, 5).inverse())


def test_diagonalize_congruence_oracle():
    rng = random.Random(6)
    for p in (3, 5, 7):
        ring = RingDescriptor(p)
        for _ in range(25):
            n = rng.randrange(1, 4)
            form = rand_symmetric_nondeg(p, n, rng)
            entries = diagonalize(form)
            prod = FieldElement(1, p)
            for e in entries:
                prod = prod * e
            zero = (0,) * ring.nexponents
            rows = [
                [form.matrix[i, j].terms.get(zero, 0) for j in range(n)]
                for i in range(n)
            ]
            from maslovkit.forms import _det_int

            det_val = _det_int(rows, p)
            assert is_square(prod * FieldElement(det_val, p).inverse())


def test_diagonalize_errors():
    with pytest.raises(DegenerateForm):
        diagonalize(diag_form(F5, [1, 0]))
    with pytest.raises(UnsupportedRing):
        diagonalize(HermitianForm(RingMatrix.identity(L5, 1), 1))
    with pytest.raises(FormError):
        diagonalize(HermitianForm(RingMatrix(F5, [[0, 1], [4, 0]]), 1))


def test_witt_class_examples():
    for p in (3, 5, 7, 13):
        ring = RingDescriptor(p)
        assert witt_class(hyperbolic_form(1, 1, ring)).is_zero()
    two_ones_f7 = diag_form(F7, [1, 1])
    assert witt_class(two_ones_f7).class_name == "2"
    mixed_f5 = diag_form(F5, [1, 2])
    cls = witt_class(mixed_f5)
    assert in_fundamental_ideal(cls) and not cls.is_zero()
    assert cls.class_name == "<1>+<t>"


def test_witt_add_examples():
    x = WittClass.from_name(5, "<t>")
    assert witt_add(x, WittClass.zero(5)) == x
    one_f7 = WittClass.from_name(7, "1")
    theta_f7 = witt_class(diag_form(F7, [least_non_residue(7).value]))
    assert theta_f7.class_name == "3"
    assert witt_add(one_f7, theta_f7).is_zero()
    one_f5 = WittClass.from_name(5, "<1>")
    assert witt_add(one_f5, one_f5).is_zero()


def _all_classes(p):
    return [
        WittClass(p, rp, dc) for rp in (0, 1) for dc in (0, 1)
    ]


def test_group_tables_exact():
    # p = 1 mod 4: Z/2 + Z/2; p = 3 mod 4: Z/4 (via the canonical encoding)
    for p in (5, 13):
        for a in _all_classes(p):
            for b in _all_classes(p):
                summed = witt_add(a, b)
                assert summed.rank_parity == a.rank_parity ^ b.rank_parity
                assert summed.disc_class == a.disc_class ^ b.disc_class
                assert witt_add(a, witt_neg(a)).is_zero()
    for p in (3, 7, 11):
        to_z4 = {}
        for cls in _all_classes(p):
            to_z4[2 * cls.disc_class + cls.rank_parity] = cls
        assert sorted(to_z4) == [0, 1, 2, 3]
        for za in range(4):
            for zb in range(4):
                summed = witt_add(to_z4[za], to_z4[zb])
                assert summed == to_z4[(za + zb) % 4]
        gen = WittClass.from_name(p, "1")
        acc = WittClass.zero(p)
        orders = []
        for k in range(1, 5):
            acc = witt_add(acc, gen)
            orders.append(acc.is_zero())
        assert orders == [False, False, False, True], "generator has order 4"


def test_group_law_matches_direct_sums():
    rng = random.Random(31)
    for p in (5, 7):
        for _ in range(40):
            f = rand_symmetric_nondeg(p, rng.randrange(1, 4), rng)
            g = rand_symmetric_nondeg(p, rng.randrange(1, 4), rng)
            assert witt_class(f.direct_sum(g)) == witt_add(witt_class(f), witt_class(g))


def test_witt_invariances():
    rng = random.Random(13)
    for p in (5, 7):
        ring = RingDescriptor(p)
        lam = hyperbolic_form(1, 1, ring)
        for _ in range(30):
            n = rng.randrange(1, 4)
            form = rand_symmetric_nondeg(p, n, rng)
            assert witt_class(form.direct_sum(lam)) == witt_class(form)
            a = rand_unit_matrix(ring, rng, n)
            assert witt_class(form.congruent_by(a)) == witt_class(form)


def test_witt_errors():
    with pytest.raises(DegenerateForm):
        witt_class(diag_form(F5, [1, 0]))
    with pytest.raises(UnsupportedRing):
        witt_class(HermitianForm(RingMatrix.identity(L5, 1), 1))


def test_in_fundamental_ideal_examples():
    assert in_fundamental_ideal(WittClass.zero(5))
    assert not in_fundamental_ideal(WittClass.from_name(5, "<1>"))
    assert in_fundamental_ideal(witt_class(diag_form(F5, [1, 2])))


def test_triple_delta_examples():
    q = diag_form(F5, [1, 2])
    assert triple_delta(FormTriple(q, q)).is_zero()
    one = diag_form(F5, [1])
    theta = diag_form(F5, [least_non_residue(5).value])
    delta = triple_delta(FormTriple(one, theta))
    assert delta == WittClass.from_name(5, "<1>+<t>")
    assert in_fundamental_ideal(delta)
    forward = triple_delta(FormTriple(one, theta))
    backward = triple_delta(FormTriple(theta, one))
    assert witt_add(forward, backward).is_zero()


def test_witt_json_names_round_trip():
    for p in (5, 7):
        for cls in _all_classes(p):
            assert WittClass.from_name(p, cls.class_name) == cls
