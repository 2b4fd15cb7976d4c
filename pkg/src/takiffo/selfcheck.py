"""The acceptance suite: eight oracle- and property-based criteria.

Each criterion runs an independent check of a pipeline stage and returns
a CriterionResult; the CLI ``selftest`` subcommand and the acceptance test
module both consume these.  Criteria carry the wall-clock budget they must
fit in; blowing the budget fails the criterion.

Criterion 7 is expected to fail and is reported honestly: it asserts a
closed form for the nondegenerate-mu case that reads the partition weights
of the multiplicity formula in the ambient root system.  That reading is
internally inconsistent (see the criterion's detail string and
``takiffmult``'s module docstring); the implementation uses the Levi's own
partition function, which criterion 8's invariance checks pin instead.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction

from .klbgg import KLCache, bgg_mult, kl_polynomial
from .kostant import (
    PartitionCache,
    kostant_p,
    kostant_p2,
    offsets_up_to_height,
    simple_character_bgg,
    takiff_verma_character,
    weyl_character_formula,
)
from .rootdata import (
    RootVector,
    Weight,
    build_root_system,
    pairing,
    parse_cartan_type,
    root_to_weight,
)
from .takiffmult import takiff_mult, takiff_mult_series
from .weyl import full_weyl_group, minimal_levi_reduction, phi_mu

__all__ = ["CriterionResult", "run_all", "CRITERIA"]


@dataclass
class CriterionResult:
    index: int
    name: str
    ok: bool
    elapsed: float
    budget: float
    detail: str

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return (
            f"criterion {self.index} [{status}] {self.name} "
            f"({self.elapsed:.2f}s / {self.budget:.0f}s budget): {self.detail}"
        )


def _system(name: str):
    return build_root_system(parse_cartan_type(name))


def _weight(rs, *coords) -> Weight:
    return Weight(tuple(Fraction(c) for c in coords), ())


def _random_weight(rs, rng, dens=(1, 2, 3)) -> Weight:
    return Weight(
        tuple(
            Fraction(rng.randint(-9, 9), rng.choice(dens))
            for _ in range(rs.semisimple_rank)
        ),
        (),
    )


# -- criterion 1: sl2 Takiff series against a hand-built character oracle --


def _sl2_series_oracle(levels: int):
    """Decompose sum_m ch M_{-2m}(sl2) greedily into sl2 simple characters.

    Uses only textbook sl2 facts: L_0 is trivial, and L_{-2m} = M_{-2m} for
    m >= 1 because -2m is antidominant.  Returns multiplicities at -2j.
    """
    total = [j + 1 for j in range(levels + 1)]  # dim at weight -2j
    mults = []
    for j in range(levels + 1):
        k = total[j]
        mults.append(k)
        if j == 0:
            total[0] -= k  # ch L_0 lives at weight 0 only
        else:
            for i in range(j, levels + 1):
                total[i] -= k  # ch L_{-2j} = Verma character
    assert all(t == 0 for t in total)
    return mults


def criterion_1(kl: KLCache, pc: PartitionCache) -> tuple[bool, str]:
    rs = _system("A1")
    zero = _weight(rs, 0)
    series = takiff_mult_series(zero, zero, 20, rs, kl, pc)
    got = {lam.coroot[0]: v for lam, v in series}
    expected = {
        Fraction(-2 * j): m for j, m in enumerate(_sl2_series_oracle(20)) if m
    }
    if got != expected:
        return False, f"series mismatch: {got} != {expected}"
    # the listed prefix: (1, 2, 1, ..., 1) at 0, -2, ..., -20
    prefix = [got[Fraction(-2 * j)] for j in range(11)]
    if prefix != [1, 2] + [1] * 9:
        return False, f"prefix at 0..-20 is {prefix}, not (1, 2, 1, ..., 1)"
    distinct = sum(1 for v in got.values() if v)
    if distinct < 10:
        return False, f"only {distinct} simple factors; non-Artinian witness needs >= 10"
    return True, f"values (1, 2, 1, ..., 1) at 0, -2, ..., -40 match the character oracle; {distinct} distinct factors witness non-Artinian O"


# -- criterion 2: mu = 0 character identity ---------------------------------


def _character_identity(rs, lam: Weight, height: int, kl, pc) -> bool:
    zero = Weight(tuple(Fraction(0) for _ in lam.coroot), lam.central)
    lhs: dict[RootVector, int] = {}
    for m in offsets_up_to_height(rs.semisimple_rank, height):
        off = RootVector(tuple(-x for x in m))
        lam2 = lam + root_to_weight(off, rs)
        v = takiff_mult(lam, zero, lam2, zero, rs, kl, pc).value
        if not v:
            continue
        for o2, d in simple_character_bgg(lam2, height, rs, kl, pc).dims.items():
            tot = tuple(a + b for a, b in zip(off.coeffs, o2.coeffs))
            if -sum(tot) <= height:
                key = RootVector(tot)
                lhs[key] = lhs.get(key, 0) + v * d
    lhs = {k: v for k, v in lhs.items() if v}
    return lhs == takiff_verma_character(lam, height, rs, pc).dims


def criterion_2(kl: KLCache, pc: PartitionCache) -> tuple[bool, str]:
    checked = []
    for name in ("A2", "B2"):
        rs = _system(name)
        rho = rs.rho
        cases = {
            "zero": _weight(rs, 0, 0),
            "regular non-dominant": _weight(rs, -4, 1),
            "singular": _weight(rs, -1, 0),
        }
        # sanity on the case labels before using them
        reg = cases["regular non-dominant"] + rho
        assert all(pairing(reg, b, rs) != 0 for b in rs.positive_roots)
        sing = cases["singular"] + rho
        assert any(pairing(sing, b, rs) == 0 for b in rs.positive_roots)
        for label, lam in cases.items():
            if not _character_identity(rs, lam, 10, kl, pc):
                return False, f"{name} {label}: sum of mult * ch L != Takiff Verma character"
            checked.append(f"{name}/{label}")
    return True, f"ch M_(lam,0) = sum k ch L holds to height 10 for {', '.join(checked)}"


# -- criterion 3: KL orientation against the Weyl character formula ---------


def criterion_3(kl: KLCache, pc: PartitionCache) -> tuple[bool, str]:
    count = 0
    for name in ("A2", "B2"):
        rs = _system(name)
        for a in range(4):
            for b in range(4 - a):
                lam = _weight(rs, a, b)
                got = simple_character_bgg(lam, 10, rs, kl, pc)
                want = weyl_character_formula(lam, 10, rs, pc)
                if got.dims != want.dims:
                    return False, f"{name} lambda=({a},{b}): inversion != Weyl character formula"
                count += 1
    return True, f"decomposition-matrix inversion matches the Weyl character formula for {count} dominant weights"


# -- criterion 4: KL engine on W(A3) ----------------------------------------


def criterion_4(kl: KLCache, pc: PartitionCache) -> tuple[bool, str]:
    rs = _system("A3")
    W = full_weyl_group(rs)
    g = W.group
    els = g.elements()
    w0 = g.longest_element
    polys = {}
    saw_one_plus_q = False
    for w in els:
        for x in els:
            p = kl_polynomial(g, x, w, kl)
            polys[(x.word, w.word)] = p
            if g.bruhat_leq(x, w) and p.coefficient(0) != 1:
                return False, f"constant term != 1 at x={x.word}, w={w.word}"
            if p.coeffs == (1, 1):
                saw_one_plus_q = True
    if not saw_one_plus_q:
        return False, "no pair with P = 1 + q found in W(A3)"
    # inversion identity: sum_z (-1)^(l(z)-l(x)) P_{x,z} P_{w0 y, w0 z} = delta_{x,y}
    for x in els:
        for y in els:
            acc = {}
            for z in els:
                a = polys[(x.word, z.word)]
                b = polys[((w0 * y).word, (w0 * z).word)]
                sign = -1 if (z.length - x.length) % 2 else 1
                prod = a * b
                for i, c in enumerate(prod.coeffs):
                    acc[i] = acc.get(i, 0) + sign * c
            want = {0: 1} if x.word == y.word else {}
            if {k: v for k, v in acc.items() if v} != want:
                return False, f"inversion identity fails at x={x.word}, y={y.word}"
    return True, "constant terms, degree bounds, a 1+q witness, and the inversion identity all hold on W(A3)"


# -- criterion 5: partition identities --------------------------------------


def _brute_force_p(target, roots) -> int:
    """Count multisets of roots summing to target by direct enumeration."""
    if all(t == 0 for t in target):
        return 1
    if not roots:
        return 0
    head, rest = roots[0], roots[1:]
    total = 0
    t = target
    while all(c >= 0 for c in t):
        total += _brute_force_p(t, rest)
        t = tuple(c - h for c, h in zip(t, head))
    return total


def _shifted_sum_p2(chi: RootVector, rs, pc) -> int:
    """p2 via the Verma-sum identity: p2(chi) = sum_m p(chi + sum m_k b_k)."""
    roots = [tuple(b.coeffs) for b in rs.positive_roots]
    total = 0

    # m ranges over vectors with chi + sum m_k b_k still weakly negative
    def bounded(idx, cur):
        nonlocal total
        if idx == len(roots):
            total += kostant_p(RootVector(cur), rs, pc)
            return
        t = cur
        while True:
            bounded(idx + 1, t)
            t = tuple(a + r for a, r in zip(t, roots[idx]))
            if any(c > 0 for c in t):
                break

    bounded(0, tuple(chi.coeffs))
    return total


def criterion_5(kl: KLCache, pc: PartitionCache) -> tuple[bool, str]:
    for name in ("A2", "B2"):
        rs = _system(name)
        for m in offsets_up_to_height(rs.semisimple_rank, 15):
            chi = RootVector(tuple(-x for x in m))
            if kostant_p2(chi, rs, pc) != _shifted_sum_p2(chi, rs, pc):
                return False, f"{name}: p2({chi.coeffs}) != shifted Verma sum"
    for name in ("A2", "B2", "G2"):
        rs = _system(name)
        roots = [tuple(b.coeffs) for b in rs.positive_roots]
        for m in offsets_up_to_height(rs.semisimple_rank, 8):
            chi = RootVector(tuple(-x for x in m))
            if kostant_p(chi, rs, pc) != _brute_force_p(m, roots):
                return False, f"{name}: p({chi.coeffs}) != brute force"
    return True, "p2 equals the shifted Verma sum (A2, B2, height <= 15); p equals brute force (A2, B2, G2, height <= 8)"


# -- criterion 6: minimal Levi reduction ------------------------------------


def criterion_6(kl: KLCache, pc: PartitionCache) -> tuple[bool, str]:
    rng = random.Random(20260824)
    for name in ("B2", "A3"):
        rs = _system(name)
        W = full_weyl_group(rs)
        simples = set(rs.simple_roots())
        for _ in range(50):
            mu = _random_weight(rs, rng)
            w, image, levi = minimal_levi_reduction(mu, rs)
            if not levi.is_standard:
                return False, f"{name} mu={mu.coroot}: image Levi not standard"
            cur = mu
            for i in reversed(w.word):
                if pairing(cur, rs.simple_roots()[i], rs) == 0:
                    return False, f"{name} mu={mu.coroot}: prefix condition fails"
                cur = W.apply(W.generator(i), cur)
            for v in W.elements():
                if v.length >= w.length:
                    break
                img = W.apply(v, mu)
                lev = phi_mu(img, rs)
                if lev.is_standard:
                    return False, f"{name} mu={mu.coroot}: shorter w exists ({v.word})"
    return True, "standardness, prefix nonvanishing, and minimality hold for 100 random rational mu (B2, A3)"


# -- criterion 7: nondegenerate-mu closed form (known red) ------------------


def criterion_7(kl: KLCache, pc: PartitionCache) -> tuple[bool, str]:
    rs = _system("A2")
    rng = random.Random(11)
    mismatches = []
    for _ in range(10):
        while True:
            mu = _random_weight(rs, rng)
            if all(pairing(mu, b, rs) != 0 for b in rs.positive_roots):
                break
        lam = _random_weight(rs, rng)
        for m in offsets_up_to_height(2, 8):
            nu = RootVector(m)
            lam2 = lam - root_to_weight(nu, rs)
            got = takiff_mult(lam, mu, lam2, mu, rs, kl, pc).value
            want = kostant_p(RootVector(tuple(-c for c in m)), rs, pc)
            if got != want and len(mismatches) < 3:
                mismatches.append((tuple(m), got, want))
        if mismatches:
            break
    if mismatches:
        return False, (
            "closed form value = p_g(-nu) does not hold; e.g. "
            + ", ".join(f"nu={m} got {g} want {w}" for m, g, w in mismatches)
            + ".  The implemented value is delta(nu, 0): a Verma module whose "
            "nilpotent-part weight pairs nonzero with every coroot is simple, "
            "so its only composition factor is itself.  The ambient-partition "
            "reading behind this closed form also breaks the reduction "
            "invariance that criterion 8 verifies, so it cannot be satisfied "
            "by any single consistent implementation."
        )
    return True, "nondegenerate-mu closed form holds"


# -- criterion 8: structural properties -------------------------------------


def criterion_8(kl: KLCache, pc: PartitionCache) -> tuple[bool, str]:
    rng = random.Random(3)
    for name in ("A1", "A2", "B2"):
        rs = _system(name)
        for _ in range(15):
            lam = _random_weight(rs, rng)
            mu = _random_weight(rs, rng)
            if takiff_mult(lam, mu, lam, mu, rs, kl, pc).value != 1:
                return False, f"{name}: self-multiplicity != 1 at lam={lam.coroot}"
            mu2 = _random_weight(rs, rng)
            if mu2 != mu and takiff_mult(lam, mu, lam, mu2, rs, kl, pc).value != 0:
                return False, f"{name}: delta block violated"
            up = RootVector(tuple(rng.randint(0, 2) for _ in range(rs.semisimple_rank)))
            if not up.is_zero():
                lam2 = lam + root_to_weight(up, rs)
                if takiff_mult(lam, mu, lam2, mu, rs, kl, pc).value != 0:
                    return False, f"{name}: support extends above lam"
            shifted = Weight(
                tuple(c + Fraction(1, 7) for c in lam.coroot), lam.central
            )
            if takiff_mult(lam, mu, shifted, mu, rs, kl, pc).value != 0:
                return False, f"{name}: support leaves the root lattice"

    # tie-break invariance: A2, mu = (1,-1) has two admissible minimal w
    rs = _system("A2")
    W = full_weyl_group(rs)
    mu = _weight(rs, 1, -1)
    reductions = []
    for w in W.elements():
        if w.length != 1:
            continue
        image = W.apply(w, mu)
        levi = phi_mu(image, rs)
        if levi.is_standard and pairing(mu, rs.simple_roots()[w.word[0]], rs) != 0:
            reductions.append((w, image, levi))
    if len(reductions) != 2:
        return False, f"expected two admissible minimal reductions, found {len(reductions)}"
    for _ in range(20):
        lam = _random_weight(rs, rng)
        off = RootVector((rng.randint(0, 4), rng.randint(0, 4)))
        lam2 = lam - root_to_weight(off, rs)
        vals = [
            takiff_mult(lam, mu, lam2, mu, rs, kl, pc, reduction=r).value
            for r in reductions
        ]
        if len(set(vals)) != 1:
            return False, f"tie-break mismatch at lam={lam.coroot}, offset={off.coeffs}: {vals}"
    return True, "self-multiplicity, delta block, support vanishing, and two-minimal-w invariance all hold"


CRITERIA = [
    (1, "sl2 Takiff series vs character oracle", criterion_1, 1.0),
    (2, "mu=0 character identity (A2, B2)", criterion_2, 30.0),
    (3, "KL orientation vs Weyl character formula", criterion_3, 30.0),
    (4, "KL engine exhaustive on W(A3)", criterion_4, 120.0),
    (5, "partition identities", criterion_5, 30.0),
    (6, "minimal Levi reduction", criterion_6, 60.0),
    (7, "nondegenerate-mu closed form", criterion_7, 10.0),
    (8, "structural multiplicity properties", criterion_8, 30.0),
]


def run_criterion(index: int, kl: KLCache | None = None,
                  pc: PartitionCache | None = None) -> CriterionResult:
    idx, name, fn, budget = CRITERIA[index - 1]
    kl = kl or KLCache()
    pc = pc or PartitionCache()
    start = time.monotonic()
    try:
        ok, detail = fn(kl, pc)
    except Exception as exc:  # a crash is a failure, not an error
        return CriterionResult(
            idx, name, False, time.monotonic() - start, budget, f"raised {exc!r}"
        )
    elapsed = time.monotonic() - start
    if ok and elapsed > budget:
        ok, detail = False, f"over budget ({elapsed:.1f}s > {budget:.0f}s); {detail}"
    return CriterionResult(idx, name, ok, elapsed, budget, detail)


def run_all(kl: KLCache | None = None, pc: PartitionCache | None = None):
    kl = kl or KLCache()
    pc = pc or PartitionCache()
    return [run_criterion(i, kl, pc) for i, _, _, _ in CRITERIA]
