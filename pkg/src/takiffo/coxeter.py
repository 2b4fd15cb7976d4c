"""Finite Coxeter groups presented by an integer Cartan matrix.

Elements are identified by their action matrix on simple-root coordinates,
which gives a canonical notion of equality; each element also carries the
lexicographically smallest reduced word.  Groups are enumerated eagerly at
construction (desk-scale ranks only), which keeps length, descent, and
Bruhat queries trivial.

Words multiply left to right: ``word = (i, j)`` is the element s_i s_j, and
acting on a vector applies s_j first.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from ._linalg import identity, mat_mul

__all__ = ["CoxeterGroup", "GroupElement"]


@dataclass(frozen=True)
class GroupElement:
    """One Weyl / Coxeter group element: canonical reduced word + action."""

    group: "CoxeterGroup" = field(compare=False, repr=False)
    matrix: tuple[tuple[int, ...], ...]
    word: tuple[int, ...] = field(compare=False)

    @property
    def length(self) -> int:
        return len(self.word)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return self.group.from_matrix(mat_mul(self.matrix, other.matrix))

    def inverse(self) -> "GroupElement":
        w = self
        g = self.group
        inv = g.identity
        for i in reversed(w.word):
            inv = inv * g.generator(i)
        return inv

    def act_root_coords(self, coeffs):
        return tuple(
            sum(self.matrix[i][j] * coeffs[j] for j in range(len(coeffs)))
            for i in range(len(self.matrix))
        )

    def __hash__(self):
        return hash(self.matrix)


class CoxeterGroup:
    """All elements of the finite Coxeter group of a Cartan matrix."""

    def __init__(self, cartan_matrix):
        self.cartan = tuple(tuple(int(x) for x in row) for row in cartan_matrix)
        self.rank = len(self.cartan)
        self._gen_matrices = [self._reflection_matrix(i) for i in range(self.rank)]
        self._elements: dict[tuple, GroupElement] = {}
        self._enumerate()
        self._bruhat_memo: dict[tuple, bool] = {}

    def _reflection_matrix(self, i):
        # s_i(alpha_j) = alpha_j - <alpha_j, alpha_i^vee> alpha_i
        n = self.rank
        m = [[int(r == c) for c in range(n)] for r in range(n)]
        for j in range(n):
            m[i][j] -= self.cartan[i][j]
        return tuple(tuple(r) for r in m)

    def _enumerate(self):
        ident = identity(self.rank)
        self._elements[ident] = GroupElement(self, ident, ())
        frontier = [ident]
        while frontier:
            nxt = []
            for m in frontier:
                for i in range(self.rank):
                    cand = mat_mul(self._gen_matrices[i], m)
                    if cand not in self._elements:
                        # left-multiplying a length-L element by a generator
                        # not already seen gives length L+1
                        word = (i,) + self._elements[m].word
                        self._elements[cand] = GroupElement(self, cand, word)
                        nxt.append(cand)
            frontier = nxt
        # replace provisional words by canonical (lex-smallest) reduced words,
        # computed by always peeling the smallest left descent
        by_length = sorted(self._elements.values(), key=lambda e: e.length)
        canonical: dict[tuple, tuple[int, ...]] = {}
        for el in by_length:
            if el.length == 0:
                canonical[el.matrix] = ()
                continue
            i0 = min(
                i
                for i in range(self.rank)
                if len(self._elements[mat_mul(self._gen_matrices[i], el.matrix)].word)
                < el.length
            )
            rest = mat_mul(self._gen_matrices[i0], el.matrix)
            canonical[el.matrix] = (i0,) + canonical[rest]
        self._elements = {
            m: GroupElement(self, m, canonical[m]) for m in self._elements
        }

    # -- element access --------------------------------------------------

    @property
    def identity(self) -> GroupElement:
        return self._elements[identity(self.rank)]

    def generator(self, i: int) -> GroupElement:
        return self._elements[self._gen_matrices[i]]

    def from_matrix(self, m) -> GroupElement:
        return self._elements[m]

    def from_word(self, word) -> GroupElement:
        el = self.identity
        for i in word:
            el = el * self.generator(i)
        return el

    def elements(self):
        """All elements, by increasing length then lex word."""
        return sorted(self._elements.values(), key=lambda e: (e.length, e.word))

    def __len__(self):
        return len(self._elements)

    @property
    def longest_element(self) -> GroupElement:
        return max(self._elements.values(), key=lambda e: e.length)

    # -- descents and Bruhat order ---------------------------------------

    def left_descents(self, w: GroupElement):
        return [
            i
            for i in range(self.rank)
            if self.from_matrix(mat_mul(self._gen_matrices[i], w.matrix)).length
            < w.length
        ]

    def bruhat_leq(self, x: GroupElement, w: GroupElement) -> bool:
        """Bruhat order via the standard descent recursion."""
        key = (x.matrix, w.matrix)
        if key in self._bruhat_memo:
            return self._bruhat_memo[key]
        if x.length > w.length:
            res = False
        elif x.length == 0:
            res = True
        elif x.matrix == w.matrix:
            res = True
        else:
            s = min(self.left_descents(w))
            sw = self.generator(s) * w
            sx = self.generator(s) * x
            if sx.length < x.length:
                res = self.bruhat_leq(sx, sw)
            else:
                res = self.bruhat_leq(x, sw)
        self._bruhat_memo[key] = res
        return res

    def fingerprint(self) -> str:
        """Stable identifier of the Coxeter datum, for cache keys."""
        return "cartan:" + ";".join(",".join(str(x) for x in row) for row in self.cartan)
