"""Kazhdan-Lusztig polynomials and BGG category-O Verma multiplicities.

The KL recursion is the classical one on the canonical basis: descend on the
length of w through a left descent s, with mu-coefficient corrections.  BGG
multiplicities for arbitrary rational weights go through the integral root
subsystem of the weight: linkage is controlled by its Weyl group, singular
weights by longest coset representatives modulo the dot-stabilizer of the
antidominant orbit representative.

Indexing convention, pinned empirically by the character-inversion tests
(the antidominant Verma must be simple, and inverting the decomposition
matrix must reproduce finite-dimensional characters): the first KL index
carries the simple module's parameter, the second the Verma's, so that
``[M(w . nu_a) : L(x . nu_a)] = P_{x,w}(1)``.
"""

from __future__ import annotations

import json
import os
import threading
from dataclasses import dataclass

from .coxeter import CoxeterGroup, GroupElement
from .rootdata import RootSystem, Weight, pairing, weight_sub
from .weyl import Subsystem, full_weyl_group

__all__ = [
    "KLPolynomial",
    "KLCache",
    "kl_polynomial",
    "integral_subsystem",
    "bgg_mult",
    "decomposition_matrix",
]


@dataclass(frozen=True)
class KLPolynomial:
    """Integer polynomial in q, coefficients dense from degree 0."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = tuple(int(x) for x in self.coeffs)
        while c and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return KLPolynomial(
            tuple(self.coefficient(i) + other.coefficient(i) for i in range(n))
        )

    def __sub__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return KLPolynomial(
            tuple(self.coefficient(i) - other.coefficient(i) for i in range(n))
        )

    def shift(self, k: int, scale: int = 1) -> "KLPolynomial":
        """scale * q^k * self"""
        return KLPolynomial((0,) * k + tuple(scale * c for c in self.coeffs))

    def __mul__(self, other):
        out = [0] * (len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return KLPolynomial(tuple(out))

    def evaluate(self, q=1) -> int:
        return sum(c * q**i for i, c in enumerate(self.coeffs))


KL_ZERO = KLPolynomial(())
KL_ONE = KLPolynomial((1,))


class KLCache:
    """Memo table for KL polynomials, optionally persisted to a JSONL file.

    The file holds one header line and one record per polynomial, keyed by
    the Coxeter fingerprint and the canonical reduced words.  Appending is
    safe: duplicate records are tolerated on load (last one wins; all
    writers compute identical values).
    """

    FORMAT = "takiffo-klcache"
    VERSION = 1

    def __init__(self, path=None):
        self.path = path
        self._data: dict[tuple, KLPolynomial] = {}
        self._lock = threading.Lock()
        self._unsaved: list[tuple] = []
        if path is not None and os.path.exists(path):
            self.load()

    @staticmethod
    def _key(fingerprint, x: GroupElement, w: GroupElement):
        return (fingerprint, x.word, w.word)

    def get(self, fingerprint, x, w):
        with self._lock:
            return self._data.get(self._key(fingerprint, x, w))

    def put(self, fingerprint, x, w, poly: KLPolynomial):
        key = self._key(fingerprint, x, w)
        with self._lock:
            if key not in self._data:
                self._data[key] = poly
                self._unsaved.append(key)
            return self._data[key]

    def __len__(self):
        return len(self._data)

    # -- persistence -----------------------------------------------------

    def load(self):
        with open(self.path) as fh:
            header = json.loads(fh.readline())
            if header.get("format") != self.FORMAT:
                raise ValueError(f"{self.path}: not a KL cache file")
            if header.get("version") != self.VERSION:
                raise ValueError(f"{self.path}: unsupported cache version")
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                rec = json.loads(line)
                key = (rec["g"], tuple(rec["x"]), tuple(rec["w"]))
                self._data[key] = KLPolynomial(tuple(rec["p"]))

    def save(self):
        if self.path is None:
            return
        with self._lock:
            fresh = not os.path.exists(self.path)
            with open(self.path, "a") as fh:
                if fresh:
                    fh.write(
                        json.dumps({"format": self.FORMAT, "version": self.VERSION})
                        + "\n"
                    )
                for key in self._unsaved:
                    g, xw, ww = key
                    rec = {
                        "g": g,
                        "x": list(xw),
                        "w": list(ww),
                        "p": list(self._data[key].coeffs),
                    }
                    fh.write(json.dumps(rec) + "\n")
            self._unsaved = []

    def clear(self):
        with self._lock:
            self._data = {}
            self._unsaved = []
            if self.path is not None and os.path.exists(self.path):
                os.remove(self.path)

    def stats(self):
        return {
            "entries": len(self._data),
            "path": self.path,
            "groups": len({k[0] for k in self._data}),
        }


def kl_polynomial(group: CoxeterGroup, x: GroupElement, w: GroupElement,
                  cache: KLCache | None = None) -> KLPolynomial:
    """P_{x,w} by the classical recursion, memoized in the cache."""
    if cache is None:
        cache = KLCache()
    return _kl(group, x, w, group.fingerprint(), cache)


def _kl(g, x, w, fp, cache):
    hit = cache.get(fp, x, w)
    if hit is not None:
        return hit
    if not g.bruhat_leq(x, w):
        return cache.put(fp, x, w, KL_ZERO)
    if x.matrix == w.matrix:
        return cache.put(fp, x, w, KL_ONE)
    s = g.generator(min(g.left_descents(w)))
    sx = s * x
    if sx.length > x.length:
        # P_{x,w} = P_{sx,w} when sw < w and sx > x
        return cache.put(fp, x, w, _kl(g, sx, w, fp, cache))
    v = s * w  # sw, shorter
    poly = _kl(g, sx, v, fp, cache) + _kl(g, x, v, fp, cache).shift(1)
    for z in g.elements():
        if z.length >= v.length or (s * z).length > z.length:
            continue
        if (v.length - z.length) % 2 == 0:
            continue
        if not (g.bruhat_leq(x, z) and g.bruhat_leq(z, v)):
            continue
        mu = _kl(g, z, v, fp, cache).coefficient((v.length - z.length - 1) // 2)
        if mu:
            poly = poly - _kl(g, x, z, fp, cache).shift((w.length - z.length) // 2, mu)
    assert poly.coefficient(0) == 1, "KL constant term must be 1 below w"
    assert 2 * poly.degree <= w.length - x.length - 1, "KL degree bound violated"
    return cache.put(fp, x, w, poly)


# -- BGG multiplicities ---------------------------------------------------


def _as_subsystem(sys) -> Subsystem:
    if isinstance(sys, Subsystem):
        return sys
    if isinstance(sys, RootSystem):
        return full_weyl_group(sys)
    raise TypeError(f"expected a RootSystem or Subsystem, got {type(sys)!r}")


def integral_subsystem(nu: Weight, sys) -> Subsystem:
    """Roots of sys pairing integrally with nu + rho_sys.

    The Weyl group of this subsystem governs linkage at nu.
    """
    sub = _as_subsystem(sys)
    shifted = nu + sub.rho
    pos = tuple(
        b
        for b in sub.positive_roots
        if pairing(shifted, b, sub.rs).denominator == 1
    )
    return Subsystem(sub.rs, pos)


def _dot(sub: Subsystem, w, lam: Weight, rho: Weight) -> Weight:
    """Shifted action with an externally supplied rho (the enclosing
    system's, not the subsystem's own)."""
    return sub.apply(w, lam + rho) - rho


def _antidominant(isub: Subsystem, nu: Weight, rho: Weight) -> Weight:
    """The antidominant element of the dot-orbit of nu under isub's group."""
    cur = nu
    while True:
        for i, b in enumerate(isub.simple_system):
            val = pairing(cur + rho, b, isub.rs)
            assert val.denominator == 1
            if val > 0:
                cur = _dot(isub, isub.generator(i), cur, rho)
                break
        else:
            return cur


def _orbit_longest_reps(isub: Subsystem, nu_a: Weight, rho: Weight):
    """Map dot-orbit element -> longest group element reaching it from nu_a."""
    reps: dict = {}
    for w in isub.elements():
        img = _dot(isub, w, nu_a, rho)
        cur = reps.get(img)
        if cur is None or w.length > cur.length:
            reps[img] = w
    return reps


def bgg_mult(nu: Weight, nu2: Weight, sys, cache: KLCache | None = None) -> int:
    """[M_nu : L_nu2] in category O of sys (a root system or a Levi)."""
    sub = _as_subsystem(sys)
    rs = sub.rs
    if nu.central != nu2.central:
        return 0
    if sub.rank == 0:
        return 1 if nu == nu2 else 0
    if nu == nu2:
        return 1
    diff = weight_sub(nu, nu2, rs)
    if diff is None:
        return 0
    coords = sub.in_root_lattice(diff)
    if coords is None or any(c < 0 for c in coords):
        return 0
    isub = integral_subsystem(nu, sub)
    if isub.rank == 0:
        return 0  # nu != nu2 but trivial linkage: Verma is simple
    nu_a = _antidominant(isub, nu, sub.rho)
    reps = _orbit_longest_reps(isub, nu_a, sub.rho)
    if nu2 not in reps:
        return 0
    x_hat = reps[nu]  # Verma label
    y_hat = reps[nu2]  # simple label
    if cache is None:
        cache = KLCache()
    return kl_polynomial(isub.group, y_hat, x_hat, cache).evaluate(1)


def decomposition_matrix(nu: Weight, sys, cache: KLCache | None = None):
    """Verma decomposition matrix over the full dot-orbit of nu.

    Returns (orbit, matrix): orbit elements sorted upward from the
    antidominant one (by height, then lexicographically), and the
    unitriangular integer matrix with entry [i][j] = [M_{orbit[i]} :
    L_{orbit[j]}].
    """
    sub = _as_subsystem(sys)
    rs = sub.rs
    if sub.rank == 0:
        return [nu], ((1,),)
    isub = integral_subsystem(nu, sub)
    if isub.rank == 0:
        return [nu], ((1,),)
    nu_a = _antidominant(isub, nu, sub.rho)
    reps = _orbit_longest_reps(isub, nu_a, sub.rho)

    def sort_key(eta):
        off = weight_sub(eta, nu_a, rs)
        return (off.height, off.coeffs)

    orbit = sorted(reps, key=sort_key)
    if cache is None:
        cache = KLCache()
    matrix = tuple(
        tuple(bgg_mult(ei, ej, sub, cache) for ej in orbit) for ei in orbit
    )
    for i in range(len(orbit)):
        assert matrix[i][i] == 1
        for j in range(i + 1, len(orbit)):
            assert matrix[i][j] == 0, "decomposition matrix must be unitriangular"
    return orbit, matrix
