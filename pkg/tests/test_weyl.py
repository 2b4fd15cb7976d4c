"""Weyl actions on weights, centralizer subsystems, minimal Levi reduction."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from takiffo.rootdata import (
    RootVector,
    build_root_system,
    pairing,
    parse_cartan_type,
    root_to_weight,
)
from takiffo.weyl import full_weyl_group, minimal_levi_reduction, phi_mu

rationals = st.fractions(min_value=-6, max_value=6, max_denominator=4)


def system(name):
    return build_root_system(parse_cartan_type(name))


def weight(rs, *coords):
    return rs.weight(tuple(Fraction(c) for c in coords))


# -- actions ----------------------------------------------------------------


def test_simple_reflection_on_weight():
    rs = system("A2")
    W = full_weyl_group(rs)
    lam = weight(rs, 3, -1)
    img = W.apply(W.generator(0), lam)
    # s1 fixes the second fundamental coordinate up to the Cartan entry
    assert img.coroot == (Fraction(-3), Fraction(2))


def test_dot2_on_simple_reflection():
    # s_a dot2 lam = s_a(lam) - 2a
    rs = system("A1")
    W = full_weyl_group(rs)
    lam = weight(rs, 5)
    alpha = root_to_weight(RootVector((1,)), rs)
    assert W.dot2(W.generator(0), lam) == W.apply(W.generator(0), lam) - alpha.scale(2)


def test_dot2_longest_element_at_zero():
    rs = system("A2")
    W = full_weyl_group(rs)
    zero = rs.zero_weight()
    img = W.dot2(W.group.longest_element, zero)
    assert img == zero - rs.rho.scale(4)  # w0(2rho) - 2rho = -4rho


@given(st.lists(st.integers(0, 1), max_size=5), st.lists(st.integers(0, 1), max_size=5),
       rationals, rationals)
def test_dot2_is_an_action(u, v, a, b):
    rs = system("A2")
    W = full_weyl_group(rs)
    lam = rs.weight((a, b))
    wu, wv = W.from_word(tuple(u)), W.from_word(tuple(v))
    assert W.dot2(wu * wv, lam) == W.dot2(wu, W.dot2(wv, lam))


def test_act_on_root_matches_weight_action():
    rs = system("B2")
    W = full_weyl_group(rs)
    for w in W.elements():
        for b in rs.positive_roots:
            img = W.act_on_root(w, b)
            assert root_to_weight(img, rs) == W.apply(w, root_to_weight(b, rs))


# -- centralizer subsystems -------------------------------------------------


def test_phi_mu_standard():
    rs = system("A2")
    levi = phi_mu(weight(rs, 0, 1), rs)
    assert levi.simple_system == (RootVector((1, 0)),)
    assert levi.is_standard


def test_phi_mu_nonstandard_highest_root():
    rs = system("A2")
    levi = phi_mu(weight(rs, 1, -1), rs)
    assert levi.simple_system == (RootVector((1, 1)),)
    assert not levi.is_standard


def test_phi_mu_generic_is_empty():
    rs = system("A2")
    levi = phi_mu(rs.weight((Fraction(1), Fraction(1, 3))), rs)
    assert levi.rank == 0


def test_phi_mu_equivariance():
    rs = system("B2")
    W = full_weyl_group(rs)
    mu = weight(rs, 1, -1)
    base = phi_mu(mu, rs)
    for w in W.elements():
        moved = phi_mu(W.apply(w, mu), rs)
        expect = {W.act_on_root(w, b) for b in base.roots}
        assert set(moved.roots) == expect


# -- minimal reduction ------------------------------------------------------


def test_reduction_trivial_when_generic():
    rs = system("A1")
    w, image, levi = minimal_levi_reduction(weight(rs, 5), rs)
    assert w.word == () and levi.rank == 0 and image.coroot == (5,)


def test_reduction_a2_highest_root_case():
    rs = system("A2")
    w, image, levi = minimal_levi_reduction(weight(rs, 1, -1), rs)
    assert w.length == 1
    assert levi.is_standard and levi.rank == 1
    # s1 sends (1,-1) to (-1,0) whose centralizer is generated by alpha2
    assert image.coroot == (Fraction(-1), Fraction(0))
    assert levi.simple_system == (RootVector((0, 1)),)


@given(st.tuples(rationals, rationals))
def test_reduction_invariants_b2(coords):
    rs = system("B2")
    W = full_weyl_group(rs)
    mu = rs.weight(coords)
    w, image, levi = minimal_levi_reduction(mu, rs)
    assert W.apply(w, mu) == image
    assert levi.is_standard
    for v in W.elements():
        if v.length < w.length:
            assert not phi_mu(W.apply(v, mu), rs).is_standard


def test_subsystem_rho_is_half_sum():
    rs = system("A2")
    levi = phi_mu(weight(rs, 0, 1), rs)
    assert levi.rho == root_to_weight(RootVector((1, 0)), rs).scale(Fraction(1, 2))


def test_in_root_lattice():
    rs = system("A2")
    levi = phi_mu(weight(rs, 1, -1), rs)  # generated by the highest root
    assert levi.in_root_lattice(RootVector((2, 2))) == (2,)
    assert levi.in_root_lattice(RootVector((1, 0))) is None
