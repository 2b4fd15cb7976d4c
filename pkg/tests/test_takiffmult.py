"""End-to-end Takiff multiplicities: blocks, reductions, closed cases."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from takiffo.klbgg import KLCache
from takiffo.kostant import PartitionCache
from takiffo.rootdata import (
    RootVector,
    build_root_system,
    pairing,
    parse_cartan_type,
    root_to_weight,
)
from takiffo.takiffmult import (
    ext_block_predicate,
    parabolic_image,
    takiff_mult,
    takiff_mult_series,
    twisting_image,
)
from takiffo.weyl import full_weyl_group, phi_mu

rationals = st.fractions(min_value=-6, max_value=6, max_denominator=3)


def system(name):
    return build_root_system(parse_cartan_type(name))


def weight(rs, *coords):
    return rs.weight(tuple(Fraction(c) for c in coords))


KL = KLCache()
PC = PartitionCache()


# -- block structure --------------------------------------------------------


def test_different_mu_gives_zero():
    rs = system("A1")
    rep = takiff_mult(weight(rs, 0), weight(rs, 0), weight(rs, 0), weight(rs, 1), rs, KL, PC)
    assert rep.value == 0 and rep.terms == []


@given(st.tuples(rationals, rationals), st.tuples(rationals, rationals))
@settings(max_examples=25, deadline=None)
def test_self_multiplicity_is_one(lc, mc):
    rs = system("A2")
    lam, mu = rs.weight(lc), rs.weight(mc)
    assert takiff_mult(lam, mu, lam, mu, rs, KL, PC).value == 1


def test_support_vanishes_above():
    rs = system("B2")
    lam = weight(rs, 1, 1)
    mu = weight(rs, 0, 0)
    higher = lam + root_to_weight(RootVector((1, 0)), rs)
    assert takiff_mult(lam, mu, higher, mu, rs, KL, PC).value == 0


def test_support_vanishes_off_lattice():
    rs = system("A2")
    lam = weight(rs, 0, 0)
    mu = weight(rs, 0, 0)
    off = rs.weight((Fraction(1, 2), Fraction(0)))
    assert takiff_mult(lam, mu, lam - off, mu, rs, KL, PC).value == 0


# -- mu = 0: the Takiff sl2 picture -----------------------------------------


def test_sl2_zero_block_series():
    rs = system("A1")
    zero = weight(rs, 0)
    series = takiff_mult_series(zero, zero, 8, rs, KL, PC)
    values = [(l.coroot[0], v) for l, v in series]
    assert values[:3] == [(0, 1), (-2, 2), (-4, 1)]
    assert all(v == 1 for _, v in values[3:])
    assert values[-1][0] == -16  # offsets n*alpha up to n = 8


def test_series_height_zero():
    rs = system("A1")
    lam = weight(rs, 3)
    assert takiff_mult_series(lam, weight(rs, 0), 0, rs, KL, PC) == [(lam, 1)]


def test_report_terms_sum():
    rs = system("A2")
    zero = weight(rs, 0, 0)
    lam2 = zero - root_to_weight(RootVector((1, 1)), rs)
    rep = takiff_mult(zero, zero, lam2, zero, rs, KL, PC)
    assert rep.value == sum(p * m for _, p, m in rep.terms)
    assert rep.value > 0


# -- nondegenerate mu: Verma modules are simple -----------------------------


def test_nondegenerate_mu_gives_delta():
    rs = system("A1")
    lam = weight(rs, 0)
    mu = rs.weight((Fraction(7, 3),))
    for n in range(5):
        lam2 = lam - root_to_weight(RootVector((n,)), rs)
        expect = 1 if n == 0 else 0
        assert takiff_mult(lam, mu, lam2, mu, rs, KL, PC).value == expect


# -- partially degenerate mu and reduction invariance -----------------------


def _minimal_reductions(rs, mu):
    W = full_weyl_group(rs)
    out = []
    for w in W.elements():
        if w.length != 1:
            continue
        image = W.apply(w, mu)
        levi = phi_mu(image, rs)
        if levi.is_standard and pairing(mu, rs.simple_roots()[w.word[0]], rs) != 0:
            out.append((w, image, levi))
    return out


def test_two_minimal_reductions_agree():
    rs = system("A2")
    mu = weight(rs, 1, -1)
    reductions = _minimal_reductions(rs, mu)
    assert len(reductions) == 2
    lam = rs.weight((Fraction(-4, 3), Fraction(-3)))
    for a in range(4):
        for b in range(4):
            lam2 = lam - root_to_weight(RootVector((a, b)), rs)
            vals = {
                takiff_mult(lam, mu, lam2, mu, rs, KL, PC, reduction=r).value
                for r in reductions
            }
            assert len(vals) == 1


def test_highest_root_mu_series():
    # the block of mu = (1,-1) in A2 behaves like Takiff sl2 along theta
    rs = system("A2")
    mu = weight(rs, 1, -1)
    lam = weight(rs, 0, 0)
    series = takiff_mult_series(lam, mu, 8, rs, KL, PC)
    got = {tuple(l.coroot): v for l, v in series}
    assert got == {
        (0, 0): 1,
        (-1, -1): 1,
        (-2, -2): 2,
        (-3, -3): 2,
        (-4, -4): 1,
    }


# -- auxiliary transports ---------------------------------------------------


def test_ext_block_predicate():
    rs = system("A2")
    mu = weight(rs, 1, -1)
    lam = weight(rs, 0, 0)
    theta = root_to_weight(RootVector((1, 1)), rs)
    alpha1 = root_to_weight(RootVector((1, 0)), rs)
    assert ext_block_predicate(lam, mu, lam - theta, mu, rs)
    assert not ext_block_predicate(lam, mu, lam - alpha1, mu, rs)
    assert not ext_block_predicate(lam, mu, lam, weight(rs, 0, 0), rs)


def test_twisting_image_sl2():
    rs = system("A1")
    lam2, mu2 = twisting_image(0, weight(rs, 0), weight(rs, 1), rs)
    assert lam2.coroot == (-4,) and mu2.coroot == (-1,)


def test_twisting_image_involutive():
    rs = system("A2")
    lam, mu = weight(rs, 2, -1), weight(rs, 1, 1)
    l1, m1 = twisting_image(0, lam, mu, rs)
    l2, m2 = twisting_image(0, l1, m1, rs)
    assert (l2, m2) == (lam, mu)


def test_twisting_image_requires_nonvanishing():
    rs = system("A1")
    with pytest.raises(ValueError, match="mu\\(h_alpha\\) != 0"):
        twisting_image(0, weight(rs, 0), weight(rs, 0), rs)


def test_parabolic_image_standard():
    rs = system("A2")
    transport = parabolic_image(weight(rs, 2, 2), weight(rs, 0, 1), rs)
    assert transport.levi.is_standard
    assert transport.ambient_pair.mu.coroot == (0, 1)


def test_parabolic_image_rejects_nonstandard():
    rs = system("A2")
    with pytest.raises(ValueError, match="minimal_levi_reduction"):
        parabolic_image(weight(rs, 0, 0), weight(rs, 1, -1), rs)
