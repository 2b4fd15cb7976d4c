"""Root systems of reductive Lie algebras in exact arithmetic.

Weights live in simple-coroot-pairing coordinates (entry i is the value on
the coroot of the i-th simple root) together with explicit coordinates on a
central torus.  Roots live in the simple-root basis as integer vectors.  All
scalars are Fractions, so zero tests and lattice membership are decidable.

The Cartan matrix convention is ``cartan[i][j] = <alpha_j, alpha_i^vee>``:
row i collects the pairings against the i-th simple coroot.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from ._linalg import mat_inv, mat_vec

__all__ = [
    "CartanType",
    "RootSystem",
    "Weight",
    "RootVector",
    "ParseError",
    "parse_cartan_type",
    "build_root_system",
    "pairing",
    "weight_leq",
    "weight_sub",
    "root_to_weight",
    "parse_rational",
    "format_rational",
]


class ParseError(ValueError):
    """Raised for malformed Cartan type strings, weights, or rationals."""


# Ranks admitted for each simple family.
_RANK_BOUNDS = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (3, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

# Known positive-root counts, used as construction-time sanity checks.
def _positive_root_count(family: str, rank: int) -> int:
    if family == "A":
        return rank * (rank + 1) // 2
    if family in ("B", "C"):
        return rank * rank
    if family == "D":
        return rank * (rank - 1)
    if family == "E":
        return {6: 36, 7: 63, 8: 120}[rank]
    return 24 if family == "F" else 6


@dataclass(frozen=True)
class CartanType:
    """An ordered product of simple factors plus a central torus."""

    components: tuple[tuple[str, int], ...]
    torus_rank: int = 0

    def __post_init__(self):
        for fam, rank in self.components:
            lo, hi = _RANK_BOUNDS[fam]
            if rank < lo or (hi is not None and rank > hi):
                raise ParseError(f"rank {rank} out of bounds for family {fam}")
        if self.torus_rank < 0:
            raise ParseError("torus rank must be nonnegative")

    @property
    def semisimple_rank(self) -> int:
        return sum(rank for _, rank in self.components)

    def __str__(self):
        s = "x".join(f"{fam}{rank}" for fam, rank in self.components) or "T"
        if self.torus_rank:
            s = (s + f"+T{self.torus_rank}") if self.components else f"+T{self.torus_rank}"
        return s


_COMPONENT_RE = re.compile(r"([A-Za-z])(\d+)")


def parse_cartan_type(spec: str) -> CartanType:
    """Parse strings like ``"A2"``, ``"B2xA1"``, ``"A1xA1+T1"``."""
    text = spec.strip()
    torus = 0
    if "+" in text:
        text, _, tail = text.partition("+")
        m = re.fullmatch(r"[Tt](\d+)", tail.strip())
        if not m:
            raise ParseError(f"bad torus suffix {tail!r} in {spec!r}")
        torus = int(m.group(1))
    if not text:
        raise ParseError(f"no Cartan components in {spec!r}")
    components = []
    if text:
        for tok in text.split("x"):
            tok = tok.strip()
            m = _COMPONENT_RE.fullmatch(tok)
            if not m:
                raise ParseError(f"bad component token {tok!r} in {spec!r}")
            fam = m.group(1).upper()
            if fam not in _RANK_BOUNDS:
                raise ParseError(f"unknown Cartan family {fam!r} in token {tok!r}")
            rank = int(m.group(2))
            lo, hi = _RANK_BOUNDS[fam]
            if rank < lo or (hi is not None and rank > hi):
                raise ParseError(f"rank out of bounds in token {tok!r}")
            components.append((fam, rank))
    return CartanType(tuple(components), torus)


def _simple_cartan_matrix(family: str, rank: int) -> list[list[int]]:
    """Cartan matrix of one simple factor, rows indexed by coroots."""
    a = [[2 * int(i == j) for j in range(rank)] for i in range(rank)]

    def join(i, j, aij=-1, aji=-1):
        # a[i][j] = <alpha_j, alpha_i^vee>
        a[i][j] = aij
        a[j][i] = aji

    if family in ("A", "B", "C"):
        for i in range(rank - 1):
            join(i, i + 1)
        if family == "B" and rank >= 2:
            # alpha_rank short: <alpha_{n-1}, alpha_n^vee> = -2
            a[rank - 1][rank - 2] = -2
        if family == "C" and rank >= 2:
            # alpha_rank long: <alpha_n, alpha_{n-1}^vee> = -2
            a[rank - 2][rank - 1] = -2
    elif family == "D":
        for i in range(rank - 2):
            join(i, i + 1)
        join(rank - 3, rank - 1)
    elif family == "E":
        # Bourbaki numbering: chain 1-3-4-5-...(-rank), node 2 hangs off 4.
        chain = [0] + list(range(2, rank))
        for u, v in zip(chain, chain[1:]):
            join(u, v)
        join(1, 3)
    elif family == "F":
        join(0, 1)
        join(1, 2, aij=-1, aji=-2)  # <alpha_2, alpha_3^vee> = -2 (alpha_3 short)
        join(2, 3)
    elif family == "G":
        join(0, 1, aij=-3, aji=-1)  # <alpha_2, alpha_1^vee> = -3
    return a


@dataclass(frozen=True)
class RootVector:
    """An element of the root lattice in simple-root coordinates."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    def __add__(self, other):
        return RootVector(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        return RootVector(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return RootVector(tuple(-a for a in self.coeffs))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)


@dataclass(frozen=True)
class Weight:
    """A point of h* : simple-coroot pairings plus central coordinates."""

    coroot: tuple[Fraction, ...]
    central: tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coroot", tuple(Fraction(c) for c in self.coroot))
        object.__setattr__(self, "central", tuple(Fraction(c) for c in self.central))

    def __add__(self, other):
        return Weight(
            tuple(a + b for a, b in zip(self.coroot, other.coroot)),
            tuple(a + b for a, b in zip(self.central, other.central)),
        )

    def __sub__(self, other):
        return Weight(
            tuple(a - b for a, b in zip(self.coroot, other.coroot)),
            tuple(a - b for a, b in zip(self.central, other.central)),
        )

    def scale(self, k) -> "Weight":
        k = Fraction(k)
        return Weight(tuple(k * a for a in self.coroot), tuple(k * a for a in self.central))


class RootSystem:
    """Root data of a reductive Lie algebra: roots, coroots, rho.

    Immutable after construction; all queries are pure.
    """

    def __init__(self, cartan_matrix, torus_rank=0, cartan_type=None):
        self.cartan_matrix = tuple(tuple(int(x) for x in row) for row in cartan_matrix)
        self.torus_rank = int(torus_rank)
        self.cartan_type = cartan_type
        self.semisimple_rank = len(self.cartan_matrix)
        self._cartan_inv = mat_inv(self.cartan_matrix) if self.semisimple_rank else ()
        self._symmetrizer = self._compute_symmetrizer()
        self.positive_roots = self._close_positive_roots()
        self.coroot_table = {b: self._coroot_of(b) for b in self.positive_roots}
        self.rho = Weight(
            tuple(Fraction(1) for _ in range(self.semisimple_rank)),
            tuple(Fraction(0) for _ in range(self.torus_rank)),
        )
        if cartan_type is not None:
            expected = sum(
                _positive_root_count(f, r) for f, r in cartan_type.components
            )
            assert len(self.positive_roots) == expected, (
                f"closure produced {len(self.positive_roots)} positive roots, "
                f"expected {expected} for {cartan_type}"
            )

    # -- construction ----------------------------------------------------

    def _compute_symmetrizer(self):
        """Per-root lengths d_i = (alpha_i, alpha_i)/2 with d_i a[i][j] symmetric."""
        n = self.semisimple_rank
        a = self.cartan_matrix
        d = [None] * n
        for start in range(n):
            if d[start] is not None:
                continue
            d[start] = Fraction(1)
            stack = [start]
            while stack:
                i = stack.pop()
                for j in range(n):
                    if i != j and a[i][j] != 0 and d[j] is None:
                        # d_i a[i][j] = d_j a[j][i]
                        d[j] = d[i] * Fraction(a[i][j], a[j][i])
                        stack.append(j)
        # scale each connected piece to integers (cosmetic; ratios are what matter)
        return tuple(d)

    def _pairing_with_simple_coroot(self, coeffs, i) -> int:
        """<beta, alpha_i^vee> for beta given by simple-root coeffs."""
        return sum(self.cartan_matrix[i][j] * coeffs[j] for j in range(len(coeffs)))

    def _close_positive_roots(self):
        n = self.semisimple_rank
        if n == 0:
            return ()
        unit = lambda i: tuple(int(j == i) for j in range(n))
        by_height = {1: {unit(i) for i in range(n)}}
        known = set(by_height[1])
        h = 1
        while by_height.get(h):
            nxt = set()
            for beta in by_height[h]:
                for i in range(n):
                    # root string: beta + alpha_i is a root iff p - <beta, a_i^vee> > 0
                    p = 0
                    probe = list(beta)
                    while True:
                        probe[i] -= 1
                        if min(probe) < 0 or tuple(probe) not in known:
                            break
                        p += 1
                    if p - self._pairing_with_simple_coroot(beta, i) > 0:
                        cand = list(beta)
                        cand[i] += 1
                        cand = tuple(cand)
                        if cand not in known:
                            nxt.add(cand)
            if nxt:
                by_height[h + 1] = nxt
                known |= nxt
            h += 1
        ordered = sorted(known, key=lambda c: (sum(c), c))
        return tuple(RootVector(c) for c in ordered)

    def _coroot_of(self, beta: RootVector):
        """beta^vee as integer coefficients over the simple coroots."""
        c = beta.coeffs
        d = self._symmetrizer
        # (beta, beta)/2 = (1/2) sum_j c_j d_j <beta, alpha_j^vee>
        norm_half = sum(
            Fraction(c[j]) * d[j] * self._pairing_with_simple_coroot(c, j)
            for j in range(len(c))
        ) / 2
        coeffs = tuple(Fraction(c[j]) * d[j] / norm_half for j in range(len(c)))
        assert all(x.denominator == 1 for x in coeffs), "non-integral coroot"
        return tuple(int(x) for x in coeffs)

    # -- queries ---------------------------------------------------------

    def is_root(self, beta: RootVector) -> bool:
        return beta in self.coroot_table or (-beta) in self.coroot_table

    def coroot(self, beta: RootVector):
        if beta in self.coroot_table:
            return self.coroot_table[beta]
        neg = -beta
        if neg in self.coroot_table:
            return tuple(-x for x in self.coroot_table[neg])
        raise ValueError(f"{beta} is not a root of this system")

    def simple_roots(self):
        n = self.semisimple_rank
        return tuple(
            RootVector(tuple(int(j == i) for j in range(n))) for i in range(n)
        )

    def zero_weight(self) -> Weight:
        return Weight(
            (Fraction(0),) * self.semisimple_rank, (Fraction(0),) * self.torus_rank
        )

    def weight(self, coroot_coords, central_coords=()) -> Weight:
        w = Weight(tuple(coroot_coords), tuple(central_coords))
        if len(w.coroot) != self.semisimple_rank or len(w.central) != self.torus_rank:
            raise ValueError(
                f"weight arity ({len(w.coroot)};{len(w.central)}) does not match "
                f"ranks ({self.semisimple_rank};{self.torus_rank})"
            )
        return w


def build_root_system(ct: CartanType) -> RootSystem:
    blocks = [_simple_cartan_matrix(f, r) for f, r in ct.components]
    n = sum(len(b) for b in blocks)
    cartan = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            cartan[off + i][off : off + len(b)] = row
        off += len(b)
    return RootSystem(cartan, ct.torus_rank, ct)


def root_to_weight(beta: RootVector, rs: RootSystem) -> Weight:
    """Convert a root-lattice element to weight coordinates."""
    coords = tuple(
        Fraction(rs._pairing_with_simple_coroot(beta.coeffs, i))
        for i in range(rs.semisimple_rank)
    )
    return Weight(coords, (Fraction(0),) * rs.torus_rank)


def pairing(lam: Weight, beta: RootVector, rs: RootSystem) -> Fraction:
    """lam(h_beta) = <lam, beta^vee> through the coroot table."""
    cvee = rs.coroot(beta)
    return sum(Fraction(cvee[j]) * lam.coroot[j] for j in range(rs.semisimple_rank))


def weight_sub(lam: Weight, lam2: Weight, rs: RootSystem):
    """lam - lam2 as a RootVector when it lies in the root lattice, else None."""
    if lam.central != lam2.central:
        return None
    diff = tuple(a - b for a, b in zip(lam.coroot, lam2.coroot))
    if rs.semisimple_rank == 0:
        return RootVector(()) if all(x == 0 for x in diff) else None
    coeffs = mat_vec(rs._cartan_inv, diff)
    # columns of the Cartan matrix are the simple roots in weight coordinates,
    # so cartan_inv maps weight coordinates back to root coordinates
    if any(x.denominator != 1 for x in coeffs):
        return None
    return RootVector(tuple(int(x) for x in coeffs))


def weight_leq(lam2: Weight, lam: Weight, rs: RootSystem) -> bool:
    """lam2 <= lam : the difference is a nonnegative integer sum of simple roots."""
    diff = weight_sub(lam, lam2, rs)
    return diff is not None and all(c >= 0 for c in diff.coeffs)


# -- rational / weight text formats --------------------------------------

def parse_rational(tok: str) -> Fraction:
    tok = tok.strip()
    m = re.fullmatch(r"[+-]?\d+(/\d+)?", tok)
    if not m:
        raise ParseError(f"not a rational: {tok!r}")
    return Fraction(tok)


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
