"""Normalized local root numbers and their comparison."""

import pytest

from conftest import field
from nftrace.rootnum import (
    compare_root_numbers,
    det_rho_discriminant,
    stiefel_whitney_local,
)


def test_quartic_pair_values_at_7():
    # disc is a square so (2, d)_p = +1 and the value is h_p itself
    assert stiefel_whitney_local(field("K4"), 7).value == 1
    assert stiefel_whitney_local(field("L4"), 7).value == -1


def test_quartic_pair_values_at_43():
    assert stiefel_whitney_local(field("K4"), 43).value == -1
    assert stiefel_whitney_local(field("L4"), 43).value == 1


def test_unramified_odd_primes_are_trivial():
    for name in ("K4", "C3a", "c49"):
        K = field(name)
        for p in (3, 5, 11, 17, 19):
            if K.disc % p and p != 2:
                assert stiefel_whitney_local(K, p).value == 1, (name, p)


def test_square_disc_reduces_to_hasse():
    from nftrace.quadform import trace_hasse

    for name in ("K4", "L4", "c49", "c8281a"):  # all have square discriminant
        K = field(name)
        for p in (3, 7, 13, 43):
            assert stiefel_whitney_local(K, p).value == trace_hasse(K, p)


def test_rejects_non_primes():
    with pytest.raises(ValueError):
        stiefel_whitney_local(field("K4"), 6)
    with pytest.raises(ValueError):
        stiefel_whitney_local(field("K4"), -1)


def test_dyadic_value_computed_but_not_compared():
    # p = 2 values exist, but comparisons only run over odd primes
    w2 = stiefel_whitney_local(field("gauss"), 2)
    assert w2.value in (1, -1)
    cmp = compare_root_numbers(field("K4"), field("L4"))
    assert all(p % 2 == 1 for p in cmp.agree + cmp.differ)


def test_det_characters():
    assert det_rho_discriminant(field("K4")).square_class == 1
    assert det_rho_discriminant(field("K4")).is_trivial
    assert det_rho_discriminant(field("C3a")).square_class == -4027
    assert det_rho_discriminant(field("gauss")).square_class == -1
    # equal discriminants give identical characters
    assert det_rho_discriminant(field("K4")) == det_rho_discriminant(field("L4"))


def test_compare_quartic_pair():
    cmp = compare_root_numbers(field("K4"), field("L4"))
    assert cmp.applicable
    assert cmp.differ == (7, 43)
    assert cmp.agree == (13,)


def test_compare_8281_cubics_equal_everywhere():
    cmp = compare_root_numbers(field("c8281a"), field("c8281b"))
    assert cmp.applicable
    assert cmp.all_equal
    assert set(cmp.agree) == {7, 13}


def test_compare_self_equal():
    cmp = compare_root_numbers(field("K4"), field("K4"))
    assert cmp.applicable and cmp.all_equal


def test_compare_inapplicable_unequal_disc():
    cmp = compare_root_numbers(field("c49"), field("c81"))
    assert not cmp.applicable
    assert "discriminant" in cmp.reason
    assert not cmp.all_equal


def test_spinor_genus_criterion_restated():
    # tame same-disc same-signature pairs: h_p agreement at all odd p is
    # equivalent to root-number agreement at the odd p dividing disc
    from nftrace.quadform import trace_hasse
    from nftrace.splitting import ramified_primes

    for a, b in (("K4", "L4"), ("c8281a", "c8281b"), ("F7", "L7")):
        K, L = field(a), field(b)
        assert K.disc == L.disc and K.signature == L.signature
        odd_ps = sorted({p for p in ramified_primes(K) if p != 2} | {3, 5, 17})
        lhs = all(trace_hasse(K, p) == trace_hasse(L, p) for p in odd_ps)
        cmp = compare_root_numbers(K, L)
        rhs = cmp.applicable and not cmp.differ
        assert lhs == rhs, (a, b)
