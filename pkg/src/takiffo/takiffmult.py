"""Composition multiplicities of Takiff Verma modules, end to end.

The pipeline: block check on the nilpotent-part weight, minimal Weyl
reduction to a standard Levi, transport of highest weights through the
2rho-shifted action, then a finite sum of Kostant-partition-weighted BGG
multiplicities over the Levi.  Finiteness is structural: candidate target
weights range over the finite dot-orbit of the transported weight under the
integral Weyl group of the Levi, never over an infinite cone.

The partition weights are taken in the *Levi's own* root system.  This is
forced by consistency: the reduction first passes to the Takiff category of
the centralizer Levi and only then expands Takiff Verma characters there, so
the chi-sum ranges over the Levi's negative root cone.  Reading the weights
in the ambient system instead would make the answer depend on which minimal
Weyl element is chosen, and would assign nontrivial composition series to
Verma modules with nondegenerate nilpotent-part weights, which are simple.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .klbgg import KLCache, bgg_mult, integral_subsystem, _dot
from .kostant import PartitionCache, kostant_p, offsets_up_to_height
from .rootdata import RootSystem, RootVector, Weight, pairing, weight_sub
from .weyl import (
    LeviDatum,
    WeylElement,
    full_weyl_group,
    minimal_levi_reduction,
    phi_mu,
)

__all__ = [
    "TakiffWeightPair",
    "MultiplicityReport",
    "ParabolicTransport",
    "takiff_mult",
    "takiff_mult_series",
    "ext_block_predicate",
    "twisting_image",
    "parabolic_image",
]


@dataclass(frozen=True)
class TakiffWeightPair:
    """Highest weight of a Takiff Verma module: (h-part, nilpotent h-part)."""

    lam: Weight
    mu: Weight

    def __post_init__(self):
        if len(self.lam.coroot) != len(self.mu.coroot) or len(
            self.lam.central
        ) != len(self.mu.central):
            raise ValueError("lambda and mu must live over the same root system")


@dataclass
class MultiplicityReport:
    """A multiplicity value together with its audit trail.

    terms lists (chi, p(chi), Levi multiplicity) for every nonvanishing
    summand; the value always equals the term sum.
    """

    value: int
    w_used: WeylElement | None
    levi: LeviDatum | None
    terms: list[tuple[RootVector, int, int]] = field(default_factory=list)

    def __post_init__(self):
        assert self.value == sum(p * m for _, p, m in self.terms)
        assert all(p > 0 and m > 0 for _, p, m in self.terms)


def takiff_mult(lam: Weight, mu: Weight, lam2: Weight, mu2: Weight,
                rs: RootSystem,
                kl_cache: KLCache | None = None,
                p_cache: PartitionCache | None = None,
                reduction=None) -> MultiplicityReport:
    """[M_{lam,mu} : L_{lam2,mu2}] with the full term table.

    reduction, when given, is a precomputed (w, w(mu), levi) triple; any
    choice with a standard image yields the same value, so callers may
    pin a non-canonical minimal w (used to test tie-break invariance).
    """
    if mu != mu2:
        return MultiplicityReport(0, None, None, [])
    if reduction is None:
        reduction = minimal_levi_reduction(mu, rs)
    w, _, levi = reduction
    W = full_weyl_group(rs)
    nu = W.dot2(w, lam)
    nu2 = W.dot2(w, lam2)
    if nu.central != nu2.central:
        return MultiplicityReport(0, w, levi, [])

    # candidate Verma weights over the Levi: the finite dot-orbit of nu2
    # under its integral Weyl group, above nu2 in the Levi root order
    if levi.rank == 0:
        candidates = [nu2]
    else:
        isub = integral_subsystem(nu2, levi)
        if isub.rank == 0:
            candidates = [nu2]
        else:
            candidates = sorted(
                {_dot(isub, v, nu2, levi.rho) for v in isub.elements()},
                key=lambda e: tuple(e.coroot),
            )

    terms = []
    for eta in candidates:
        diff = weight_sub(eta, nu2, rs)
        if diff is None:
            continue
        coords = levi.in_root_lattice(diff)
        if coords is None or any(c < 0 for c in coords):
            continue  # eta not above nu2 over the Levi
        chi = weight_sub(eta, nu, rs)
        if chi is None:
            continue  # chi must lie in the ambient root lattice
        p = kostant_p(chi, levi, p_cache)  # partitions into Levi roots
        if p == 0:
            continue
        m = bgg_mult(eta, nu2, levi, kl_cache)
        if m == 0:
            continue
        terms.append((chi, p, m))
    terms.sort(key=lambda t: (-t[0].height, t[0].coeffs))
    value = sum(p * m for _, p, m in terms)
    return MultiplicityReport(value, w, levi, terms)


def takiff_mult_series(lam: Weight, mu: Weight, height: int, rs: RootSystem,
                       kl_cache: KLCache | None = None,
                       p_cache: PartitionCache | None = None):
    """All nonzero [M_{lam,mu} : L_{lam - offset, mu}] with offset height
    <= height, ordered by height then lexicographic offset."""
    reduction = minimal_levi_reduction(mu, rs)
    out = []
    from .rootdata import root_to_weight

    for m in sorted(
        offsets_up_to_height(rs.semisimple_rank, height),
        key=lambda v: (sum(v), v),
    ):
        offset = RootVector(m)
        lam2 = lam - root_to_weight(offset, rs)
        rep = takiff_mult(lam, mu, lam2, mu, rs, kl_cache, p_cache, reduction)
        if rep.value:
            out.append((lam2, rep.value))
    return out


def ext_block_predicate(lam: Weight, mu: Weight, lam2: Weight, mu2: Weight,
                        rs: RootSystem) -> bool:
    """False guarantees Ext vanishes between the highest-weight modules:
    true iff mu = mu2 and lam - lam2 lies in the lattice spanned by the
    mu-centralizer roots."""
    if mu != mu2:
        return False
    diff = weight_sub(lam, lam2, rs)
    if diff is None:
        return False
    return phi_mu(mu, rs).in_root_lattice(diff) is not None


def twisting_image(alpha_index: int, lam: Weight, mu: Weight,
                   rs: RootSystem) -> tuple[Weight, Weight]:
    """Image of the (Verma, simple) labels under the twist at a simple root:
    (s_alpha 2-dot lam, s_alpha(mu)).  Requires mu(h_alpha) != 0."""
    alpha = rs.simple_roots()[alpha_index]
    if pairing(mu, alpha, rs) == 0:
        raise ValueError("twisting equivalence requires mu(h_alpha) != 0")
    W = full_weyl_group(rs)
    s = W.generator(alpha_index)
    return W.dot2(s, lam), W.apply(s, mu)


@dataclass(frozen=True)
class ParabolicTransport:
    """Label correspondence under parabolic induction: (lam, 0) over the
    centralizer Levi corresponds to (lam, mu) over the ambient algebra."""

    levi: LeviDatum
    levi_pair: TakiffWeightPair
    ambient_pair: TakiffWeightPair


def parabolic_image(lam: Weight, mu: Weight, rs: RootSystem) -> ParabolicTransport:
    ld = phi_mu(mu, rs)
    if not ld.is_standard:
        raise ValueError(
            "centralizer of mu is not a standard Levi; "
            "apply minimal_levi_reduction first"
        )
    zero = rs.zero_weight()
    return ParabolicTransport(
        levi=ld,
        levi_pair=TakiffWeightPair(lam, zero),
        ambient_pair=TakiffWeightPair(lam, mu),
    )
