"""Kostant partition function, its two-colored convolution, and characters.

The partition function follows the sign convention forced by the multiplicity
formulas: p is supported on the *negative* cone, p(chi) = number of ways to
write -chi as a multiset of positive roots, p(0) = 1.  The two-colored
variant p2 = p * p counts pairs of such multisets and gives the weight
multiplicities of Takiff Verma modules.

Characters are truncated by an explicit height bound H everywhere; offsets
are recorded relative to the highest weight, in ambient simple-root
coordinates, and zero dimensions are omitted.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from itertools import product

from ._linalg import invert_unitriangular
from .rootdata import RootSystem, RootVector, Weight, root_to_weight, weight_sub
from .weyl import Subsystem, full_weyl_group
from . import klbgg

__all__ = [
    "PartitionCache",
    "Character",
    "kostant_p",
    "kostant_p2",
    "verma_character",
    "takiff_verma_character",
    "simple_character_bgg",
    "weyl_character_formula",
    "offsets_up_to_height",
]


class PartitionCache:
    """Memoized multiset-partition counts, per positive-root list.

    Concurrent reads are safe; insertion happens behind a lock.  Values are
    reproducible from scratch, so the cache is a pure accelerator.
    """

    def __init__(self):
        self._memo: dict[tuple, int] = {}
        self._lock = threading.Lock()

    def count(self, roots, target) -> int:
        """Ways to write target as a nonnegative-integer sum of roots,
        ordered recursion over the fixed root list (multisets)."""
        roots = tuple(roots)
        target = tuple(int(t) for t in target)
        if any(t < 0 for t in target):
            return 0
        return self._count(roots, target, len(roots) - 1)

    def _count(self, roots, target, k) -> int:
        if all(t == 0 for t in target):
            return 1
        if k < 0:
            return 0
        key = (roots, target, k)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        total = self._count(roots, target, k - 1)
        stripped = tuple(t - r for t, r in zip(target, roots[k]))
        if all(t >= 0 for t in stripped):
            total += self._count(roots, stripped, k)
        with self._lock:
            self._memo.setdefault(key, total)
        return total


_default_cache = PartitionCache()


def _pos_root_coeffs(sys) -> tuple:
    return tuple(b.coeffs for b in sys.positive_roots)


def kostant_p(chi: RootVector, rs, cache: PartitionCache | None = None) -> int:
    """p(chi): multiset partitions of -chi into positive roots of rs."""
    cache = cache or _default_cache
    return cache.count(_pos_root_coeffs(rs), tuple(-c for c in chi.coeffs))


def kostant_p2(chi: RootVector, rs, cache: PartitionCache | None = None) -> int:
    """p2 = p * p: finitely supported convolution over the negative cone."""
    cache = cache or _default_cache
    target = tuple(-c for c in chi.coeffs)
    if any(t < 0 for t in target):
        return 0
    total = 0
    for part in product(*(range(t + 1) for t in target)):
        a = kostant_p(RootVector(tuple(-x for x in part)), rs, cache)
        if a:
            rest = RootVector(tuple(p - t for t, p in zip(target, part)))
            total += a * kostant_p(rest, rs, cache)
    return total


def offsets_up_to_height(rank: int, height: int):
    """All nonnegative integer vectors of coordinate-sum <= height."""
    if rank == 0:
        yield ()
        return
    for head in range(height + 1):
        for tail in offsets_up_to_height(rank - 1, height - head):
            yield (head,) + tail


@dataclass
class Character:
    """A truncated formal character: highest weight plus offset dimensions.

    dims maps offsets (RootVector, nonpositive cone) to positive integers;
    every offset of height <= truncation_height is exact, zeros omitted.
    """

    base: Weight
    dims: dict[RootVector, int]
    truncation_height: int

    def dim_at(self, offset: RootVector) -> int:
        return self.dims.get(offset, 0)

    def entries(self):
        return sorted(
            self.dims.items(), key=lambda kv: (-kv[0].height, kv[0].coeffs)
        )

    def total_dimension(self) -> int:
        return sum(self.dims.values())

    def __eq__(self, other):
        return (
            isinstance(other, Character)
            and self.base == other.base
            and self.dims == other.dims
            and self.truncation_height == other.truncation_height
        )


def verma_character(lam: Weight, height: int, rs: RootSystem,
                    cache: PartitionCache | None = None) -> Character:
    """Truncated character of the ordinary Verma module of weight lam."""
    dims = {}
    for m in offsets_up_to_height(rs.semisimple_rank, height):
        chi = RootVector(tuple(-x for x in m))
        d = kostant_p(chi, rs, cache)
        if d:
            dims[chi] = d
    return Character(lam, dims, height)


def takiff_verma_character(lam: Weight, height: int, rs: RootSystem,
                           cache: PartitionCache | None = None) -> Character:
    """Truncated character of the Takiff Verma module at (lam, any mu).

    Weight multiplicities are p2; equivalently the height-truncated sum of
    ordinary Verma characters shifted into the negative root cone.
    """
    dims = {}
    for m in offsets_up_to_height(rs.semisimple_rank, height):
        chi = RootVector(tuple(-x for x in m))
        d = kostant_p2(chi, rs, cache)
        if d:
            dims[chi] = d
    return Character(lam, dims, height)


def weyl_character_formula(lam: Weight, height: int, rs: RootSystem,
                           cache: PartitionCache | None = None) -> Character:
    """Finite-dimensional weight multiplicities by the alternating sum
    over the Weyl group (independent oracle; requires dominant integral)."""
    for i in range(rs.semisimple_rank):
        c = lam.coroot[i]
        if c.denominator != 1 or c < 0:
            raise ValueError(
                f"weight is not dominant integral: coordinate {i} is {c}"
            )
    W = full_weyl_group(rs)
    images = [(w.length, W.apply(w, lam + rs.rho)) for w in W.elements()]
    dims = {}
    for m in offsets_up_to_height(rs.semisimple_rank, height):
        chi = RootVector(tuple(-x for x in m))
        nu_shifted = lam + root_to_weight(chi, rs) + rs.rho
        total = 0
        for length, img in images:
            arg = weight_sub(nu_shifted, img, rs)
            if arg is None:
                continue
            total += (-1) ** (length % 2) * kostant_p(arg, rs, cache)
        if total:
            dims[chi] = total
    return Character(lam, dims, height)


def simple_character_bgg(lam: Weight, height: int, sys,
                         kl_cache=None,
                         cache: PartitionCache | None = None) -> Character:
    """Truncated character of the simple module L_lam over sys.

    Obtained by inverting the unitriangular Verma decomposition matrix over
    the dot-orbit of lam and recombining Verma characters.
    """
    cache = cache or _default_cache
    sub = sys if isinstance(sys, Subsystem) else full_weyl_group(sys)
    rs = sub.rs
    orbit, matrix = klbgg.decomposition_matrix(lam, sub, kl_cache)
    idx = orbit.index(lam)
    binv = invert_unitriangular(matrix)
    coeffs = [(orbit[j], binv[idx][j]) for j in range(len(orbit)) if binv[idx][j]]
    roots = tuple(b.coeffs for b in sub.positive_roots)
    dims = {}
    for m in offsets_up_to_height(rs.semisimple_rank, height):
        chi = RootVector(tuple(-x for x in m))
        target_weight = lam + root_to_weight(chi, rs)
        total = 0
        for eta, b in coeffs:
            off = weight_sub(target_weight, eta, rs)
            if off is None:
                continue
            total += b * cache.count(roots, tuple(-c for c in off.coeffs))
        if total:
            dims[chi] = total
    return Character(lam, dims, height)

