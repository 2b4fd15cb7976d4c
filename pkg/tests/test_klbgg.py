"""Kazhdan-Lusztig polynomials, the cache, and BGG multiplicities."""

from fractions import Fraction

import pytest

from takiffo.klbgg import (
    KLCache,
    KLPolynomial,
    bgg_mult,
    decomposition_matrix,
    integral_subsystem,
    kl_polynomial,
)
from takiffo.rootdata import build_root_system, parse_cartan_type
from takiffo.weyl import full_weyl_group


def system(name):
    return build_root_system(parse_cartan_type(name))


def weight(rs, *coords):
    return rs.weight(tuple(Fraction(c) for c in coords))


# -- polynomial arithmetic --------------------------------------------------


def test_polynomial_normalization():
    assert KLPolynomial((1, 0, 0)).coeffs == (1,)
    assert KLPolynomial(()).is_zero()


def test_polynomial_ops():
    p = KLPolynomial((1, 1))
    q = KLPolynomial((0, 1))
    assert (p + q).coeffs == (1, 2)
    assert (p - p).is_zero()
    assert (p * q).coeffs == (0, 1, 1)
    assert p.shift(2, 3).coeffs == (0, 0, 3, 3)
    assert p.evaluate(1) == 2 and p.evaluate(2) == 3


# -- KL polynomials ---------------------------------------------------------


def test_a2_polynomials_are_trivial():
    W = full_weyl_group(system("A2"))
    g = W.group
    for w in g.elements():
        for x in g.elements():
            p = kl_polynomial(g, x, w)
            assert p.coeffs == ((1,) if g.bruhat_leq(x, w) else ())


def test_a3_has_exactly_six_nontrivial_pairs():
    W = full_weyl_group(system("A3"))
    g = W.group
    cache = KLCache()
    nontrivial = [
        (x.word, w.word)
        for w in g.elements()
        for x in g.elements()
        if kl_polynomial(g, x, w, cache).coeffs == (1, 1)
    ]
    assert len(nontrivial) == 6
    assert ((1,), (1, 0, 2, 1)) in nontrivial


def test_kl_zero_above():
    W = full_weyl_group(system("A2"))
    g = W.group
    assert kl_polynomial(g, g.longest_element, g.generator(0)).is_zero()


# -- cache persistence ------------------------------------------------------


def test_cache_round_trip(tmp_path):
    path = str(tmp_path / "kl.jsonl")
    W = full_weyl_group(system("A3"))
    g = W.group
    cache = KLCache(path)
    w = g.from_word((1, 0, 2, 1))
    x = g.generator(1)
    p = kl_polynomial(g, x, w, cache)
    cache.save()

    reloaded = KLCache(path)
    assert len(reloaded) == len(cache)
    assert reloaded.get(g.fingerprint(), x, w) == p


def test_cache_append_is_safe(tmp_path):
    path = str(tmp_path / "kl.jsonl")
    W = full_weyl_group(system("A2"))
    g = W.group
    first = KLCache(path)
    kl_polynomial(g, g.identity, g.longest_element, first)
    first.save()
    second = KLCache(path)
    kl_polynomial(g, g.generator(0), g.longest_element, second)
    second.save()
    merged = KLCache(path)
    assert len(merged) >= len(second)


def test_cache_rejects_foreign_file(tmp_path):
    path = tmp_path / "junk.jsonl"
    path.write_text('{"format": "something-else", "version": 1}\n')
    with pytest.raises(ValueError):
        KLCache(str(path))


def test_cache_clear(tmp_path):
    path = str(tmp_path / "kl.jsonl")
    cache = KLCache(path)
    W = full_weyl_group(system("A2"))
    kl_polynomial(W.group, W.identity, W.group.longest_element, cache)
    cache.save()
    cache.clear()
    assert len(cache) == 0
    import os

    assert not os.path.exists(path)


# -- BGG multiplicities -----------------------------------------------------


def test_sl2_regular_integral_block():
    rs = system("A1")
    # M_0 has factors L_0 and L_{-2}; M_{-2} is simple
    assert bgg_mult(weight(rs, 0), weight(rs, 0), rs) == 1
    assert bgg_mult(weight(rs, 0), weight(rs, -2), rs) == 1
    assert bgg_mult(weight(rs, -2), weight(rs, 0), rs) == 0
    assert bgg_mult(weight(rs, -2), weight(rs, -2), rs) == 1


def test_sl2_non_integral_verma_is_simple():
    rs = system("A1")
    lam = rs.weight((Fraction(1, 2),))
    assert bgg_mult(lam, lam - rs.weight((Fraction(2),)), rs) == 0


def test_integral_subsystem_detects_half_integral():
    rs = system("A1")
    lam = rs.weight((Fraction(1, 2),))
    assert integral_subsystem(lam, full_weyl_group(rs)).rank == 0
    assert integral_subsystem(weight(rs, 0), full_weyl_group(rs)).rank == 1


def test_a2_regular_block_is_bruhat_indicator():
    rs = system("A2")
    W = full_weyl_group(rs)
    orbit, matrix = decomposition_matrix(weight(rs, 0, 0), rs)
    assert len(orbit) == 6
    # all KL polynomials are 1 in A2, so the matrix is the Bruhat indicator
    total = sum(sum(row) for row in matrix)
    bruhat_pairs = sum(
        1
        for w in W.elements()
        for x in W.elements()
        if W.bruhat_leq(x, w)
    )
    assert total == bruhat_pairs


def test_a2_singular_block():
    rs = system("A2")
    lam = weight(rs, -1, 0)  # lam + rho singular along alpha1
    orbit, matrix = decomposition_matrix(lam, rs)
    assert len(orbit) == 3
    assert [row.count(1) for row in matrix] == [1, 2, 3]


def test_bgg_mult_outside_cone_vanishes():
    rs = system("A2")
    assert bgg_mult(weight(rs, 0, 0), weight(rs, 1, 1), rs) == 0
