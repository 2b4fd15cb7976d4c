"""Weyl group actions, root subsystems, and the minimal Levi reduction.

A ``Subsystem`` packages a symmetric subset of the ambient roots together
with its simple system, its own Coxeter group (built abstractly from the
Cartan matrix of the simple system), and the action of that group on ambient
weights.  The full Weyl group of a root system is the special case where the
simple system is the ambient one.  ``LeviDatum`` is an alias: the subsystems
produced by ``phi_mu`` are exactly the centralizer Levis.
"""

from __future__ import annotations

from fractions import Fraction

from ._linalg import identity, mat_mul, mat_vec, solve_columns
from .coxeter import CoxeterGroup, GroupElement
from .rootdata import (
    RootSystem,
    RootVector,
    Weight,
    pairing,
    root_to_weight,
)

__all__ = [
    "Subsystem",
    "LeviDatum",
    "WeylElement",
    "full_weyl_group",
    "phi_mu",
    "is_standard_levi",
    "minimal_levi_reduction",
]

WeylElement = GroupElement


class Subsystem:
    """A root subsystem with a chosen simple system, acting on ambient data."""

    def __init__(self, rs: RootSystem, positive_roots):
        self.rs = rs
        # sorted by height, then descending lex, so that ambient simple roots
        # keep their natural index order within the simple system
        self.positive_roots = tuple(
            sorted(
                positive_roots,
                key=lambda b: (b.height, tuple(-c for c in b.coeffs)),
            )
        )
        self.simple_system = self._indecomposables()
        self.rank = len(self.simple_system)
        self.cartan_matrix = tuple(
            tuple(
                int(pairing(root_to_weight(bj, rs), bi, rs))
                for bj in self.simple_system
            )
            for bi in self.simple_system
        )
        self.rho = self._half_sum()
        self._check_spanning()
        self.group = CoxeterGroup(self.cartan_matrix)
        self._weight_matrices = self._ambient_weight_matrices()

    # -- construction ----------------------------------------------------

    def _indecomposables(self):
        pos = set(self.positive_roots)
        out = []
        for b in self.positive_roots:
            if not any((b - g) in pos for g in pos if g != b and (b - g) != b):
                out.append(b)
        return tuple(out)

    def _half_sum(self) -> Weight:
        acc = self.rs.zero_weight()
        for b in self.positive_roots:
            acc = acc + root_to_weight(b, self.rs)
        return acc.scale(Fraction(1, 2))

    def _check_spanning(self):
        cols = [b.coeffs for b in self.simple_system]
        for b in self.positive_roots:
            coeffs = solve_columns(cols, b.coeffs) if cols else None
            assert coeffs is not None and all(
                c.denominator == 1 and c >= 0 for c in coeffs
            ), f"{b} is not a nonnegative integer combination of the simple system"

    def _generator_weight_matrix(self, i):
        # s_beta on coroot coordinates: lam -> lam - <lam, beta^vee> * beta
        n = self.rs.semisimple_rank
        beta = self.simple_system[i]
        bw = root_to_weight(beta, self.rs).coroot
        cvee = self.rs.coroot(beta)
        return tuple(
            tuple(int(r == c) - bw[r] * cvee[c] for c in range(n)) for r in range(n)
        )

    def _ambient_weight_matrices(self):
        gens = [self._generator_weight_matrix(i) for i in range(self.rank)]
        n = self.rs.semisimple_rank
        mats = {self.group.identity.matrix: identity(n)}
        for el in self.group.elements():
            if el.word:
                rest = self.group.from_word(el.word[1:])
                mats[el.matrix] = mat_mul(gens[el.word[0]], mats[rest.matrix])
        return mats

    # -- group access ----------------------------------------------------

    @property
    def identity(self) -> WeylElement:
        return self.group.identity

    def generator(self, i: int) -> WeylElement:
        return self.group.generator(i)

    def from_word(self, word) -> WeylElement:
        return self.group.from_word(word)

    def elements(self):
        return self.group.elements()

    def bruhat_leq(self, x: WeylElement, w: WeylElement) -> bool:
        return self.group.bruhat_leq(x, w)

    # -- actions ---------------------------------------------------------

    def apply(self, w: WeylElement, lam: Weight) -> Weight:
        """Linear action; central coordinates are fixed."""
        m = self._weight_matrices[w.matrix]
        return Weight(mat_vec(m, lam.coroot), lam.central)

    def dot(self, w: WeylElement, lam: Weight) -> Weight:
        """rho-shifted action, with this subsystem's own rho."""
        return self.apply(w, lam + self.rho) - self.rho

    def dot2(self, w: WeylElement, lam: Weight) -> Weight:
        """2rho-shifted action w(lam + 2rho) - 2rho."""
        two_rho = self.rho.scale(2)
        return self.apply(w, lam + two_rho) - two_rho

    def act_on_root(self, w: WeylElement, beta: RootVector) -> RootVector:
        out = beta
        for i in reversed(w.word):
            b = self.simple_system[i]
            k = pairing(root_to_weight(out, self.rs), b, self.rs)
            assert k.denominator == 1
            out = out - RootVector(tuple(int(k) * c for c in b.coeffs))
        return out

    # -- predicates ------------------------------------------------------

    @property
    def is_standard(self) -> bool:
        simples = set(self.rs.simple_roots())
        return all(b in simples for b in self.simple_system)

    @property
    def roots(self):
        """All roots of the subsystem (closed under negation)."""
        return tuple(self.positive_roots) + tuple(-b for b in self.positive_roots)

    def contains_root(self, beta: RootVector) -> bool:
        return beta in self.positive_roots or (-beta) in self.positive_roots

    def in_root_lattice(self, v: RootVector):
        """Integer coordinates of v over the simple system, or None."""
        if self.rank == 0:
            return () if v.is_zero() else None
        coeffs = solve_columns([b.coeffs for b in self.simple_system], v.coeffs)
        if coeffs is None or any(c.denominator != 1 for c in coeffs):
            return None
        return tuple(int(c) for c in coeffs)

    def fingerprint(self) -> str:
        return self.group.fingerprint()


LeviDatum = Subsystem


def full_weyl_group(rs: RootSystem) -> Subsystem:
    """The whole Weyl group W of rs, as the subsystem on all positive roots."""
    if not hasattr(rs, "_full_weyl"):
        rs._full_weyl = Subsystem(rs, rs.positive_roots)
    return rs._full_weyl


def phi_mu(mu: Weight, rs: RootSystem) -> LeviDatum:
    """The centralizer subsystem: roots beta with mu(h_beta) = 0."""
    pos = tuple(b for b in rs.positive_roots if pairing(mu, b, rs) == 0)
    return Subsystem(rs, pos)


def is_standard_levi(ld: LeviDatum) -> bool:
    return ld.is_standard


def minimal_levi_reduction(mu: Weight, rs: RootSystem):
    """Minimal-length w with Phi_{w(mu)} standard, plus w(mu) and its Levi.

    Ties among minimal-length solutions are broken by lexicographically
    smallest reduced word.  The returned word satisfies the prefix
    nonvanishing condition: each successive reflection pairs nonzero with
    the image of mu so far (asserted).
    """
    W = full_weyl_group(rs)
    simples = set(rs.simple_roots())
    best = None
    for w in W.elements():  # ordered by (length, word), so the first hit wins
        image = W.apply(w, mu)
        pos = [b for b in rs.positive_roots if pairing(image, b, rs) == 0]
        posset = set(pos)
        indec = [
            b for b in pos
            if not any((b - g) in posset for g in posset if g != b)
        ]
        if all(b in simples for b in indec):
            best = (w, image)
            break
    assert best is not None
    w, image = best
    levi = phi_mu(image, rs)
    # prefix condition: applying the word right to left, each next simple
    # reflection must move the current image
    cur = mu
    for i in reversed(w.word):
        alpha = W.simple_system[i]
        assert pairing(cur, alpha, rs) != 0, (
            "minimal reduction violates the prefix nonvanishing condition"
        )
        cur = W.apply(W.generator(i), cur)
    return w, image, levi
