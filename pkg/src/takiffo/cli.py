"""Command-line front end.

Subcommands: mult, series, char, kl, partition, reduce, selftest, cache.
Weights on the command line are comma-separated rationals in coroot
coordinates, with central coordinates appended after a semicolon, e.g.
``--mu 1,0;2/3``.  Reduced words are 1-based digit strings (``2132``).

Exit codes: 0 success, 1 computation error, 2 usage error.  JSON mode
(``--json``) emits exactly one canonical document (sorted keys, rationals
as strings), so re-serializing a parsed document is byte-identical.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import dataclass
from itertools import permutations

from .klbgg import KLCache, kl_polynomial
from .kostant import (
    PartitionCache,
    kostant_p,
    kostant_p2,
    simple_character_bgg,
    takiff_verma_character,
    verma_character,
    weyl_character_formula,
)
from .rootdata import (
    ParseError,
    RootVector,
    Weight,
    build_root_system,
    format_rational,
    parse_cartan_type,
    parse_rational,
)
from .selfcheck import run_all
from .takiffmult import takiff_mult, takiff_mult_series
from .weyl import Subsystem, full_weyl_group, minimal_levi_reduction
from .rootdata import _simple_cartan_matrix

__all__ = ["Config", "main"]

ENV_CACHE = "TAKIFFO_CACHE"
ENV_HEIGHT = "TAKIFFO_HEIGHT"


@dataclass
class Config:
    default_truncation_height: int = 12
    cache_path: str | None = None
    output_format: str = "human"  # human | json

    def __post_init__(self):
        if self.default_truncation_height < 0:
            raise ValueError("truncation height must be nonnegative")
        if self.output_format not in ("human", "json"):
            raise ValueError(f"unknown output format {self.output_format!r}")


class UsageError(Exception):
    """Bad input on the command line; maps to exit code 2."""


# -- parsing ----------------------------------------------------------------


def parse_weight(text: str, rs, option: str) -> Weight:
    """Parse "1,0;2/3" into a Weight over rs, reporting token positions."""
    head, _, tail = text.partition(";")
    parts = [head, tail] if ";" in text else [head]
    coords = []
    for part in parts:
        block = []
        for pos, tok in enumerate(part.split(",") if part.strip() else []):
            try:
                block.append(parse_rational(tok))
            except ParseError:
                raise UsageError(
                    f"{option}: token {pos + 1} of {part.strip()!r} "
                    f"is not a rational: {tok.strip()!r}"
                )
        coords.append(tuple(block))
    coroot = coords[0]
    central = coords[1] if len(coords) > 1 else ()
    if len(coroot) != rs.semisimple_rank:
        raise UsageError(
            f"{option}: expected {rs.semisimple_rank} coroot coordinates, "
            f"got {len(coroot)}"
        )
    if len(central) != rs.torus_rank:
        raise UsageError(
            f"{option}: expected {rs.torus_rank} central coordinates, "
            f"got {len(central)}"
        )
    return Weight(coroot, central)


def parse_root_vector(text: str, rs, option: str) -> RootVector:
    out = []
    for pos, tok in enumerate(text.split(",")):
        tok = tok.strip()
        if not (tok.lstrip("+-").isdigit()):
            raise UsageError(f"{option}: token {pos + 1} is not an integer: {tok!r}")
        out.append(int(tok))
    if len(out) != rs.semisimple_rank:
        raise UsageError(
            f"{option}: expected {rs.semisimple_rank} coordinates, got {len(out)}"
        )
    return RootVector(tuple(out))


def parse_word(text: str, rank: int, option: str):
    """1-based digit string -> 0-based word tuple; 'e' or '' is the identity."""
    text = text.strip()
    if text in ("", "e"):
        return ()
    word = []
    for pos, ch in enumerate(text):
        if not ch.isdigit() or not (1 <= int(ch) <= rank):
            raise UsageError(
                f"{option}: character {pos + 1} ({ch!r}) is not a simple-root "
                f"index in 1..{rank}"
            )
        word.append(int(ch) - 1)
    return tuple(word)


def format_word(word) -> str:
    return "".join(str(i + 1) for i in word) or "e"


# -- serialization ----------------------------------------------------------


def weight_doc(w: Weight):
    doc = {"coroot": [format_rational(c) for c in w.coroot]}
    if w.central:
        doc["central"] = [format_rational(c) for c in w.central]
    return doc


def weight_str(w: Weight) -> str:
    s = ",".join(format_rational(c) for c in w.coroot)
    if w.central:
        s += ";" + ",".join(format_rational(c) for c in w.central)
    return s


def poly_str(coeffs) -> str:
    if not coeffs:
        return "0"
    terms = []
    for i, c in enumerate(coeffs):
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            q = "q" if i == 1 else f"q^{i}"
            terms.append(q if c == 1 else f"{c}{q}")
    return " + ".join(terms)


def levi_type_name(levi: Subsystem, rs) -> str:
    """Cartan type label of a Levi, torus factor included."""
    comps = _components(levi.cartan_matrix)
    names = []
    for comp in comps:
        sub = [[levi.cartan_matrix[i][j] for j in comp] for i in comp]
        names.append(_classify_component(sub))
    torus = rs.semisimple_rank - levi.rank + rs.torus_rank
    label = "x".join(sorted(names)) if names else ""
    if torus:
        label = (label + "+" if label else "") + f"T{torus}"
    return label or "T0"


def _components(cartan):
    n = len(cartan)
    seen, comps = set(), []
    for start in range(n):
        if start in seen:
            continue
        stack, comp = [start], []
        while stack:
            i = stack.pop()
            if i in seen:
                continue
            seen.add(i)
            comp.append(i)
            stack.extend(j for j in range(n) if j != i and cartan[i][j] != 0)
        comps.append(sorted(comp))
    return comps


def _classify_component(cartan) -> str:
    rank = len(cartan)
    valid = {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 3,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }
    for fam, ok in valid.items():
        if not ok:
            continue
        ref = _simple_cartan_matrix(fam, rank)
        for perm in permutations(range(rank)):
            if all(
                cartan[perm[i]][perm[j]] == ref[i][j]
                for i in range(rank)
                for j in range(rank)
            ):
                return f"{fam}{rank}"
    return f"?{rank}"


class Output:
    def __init__(self, as_json: bool):
        self.as_json = as_json
        self._doc = None
        self._lines = []

    def line(self, text):
        self._lines.append(str(text))

    def doc(self, document):
        self._doc = document

    def flush(self):
        if self.as_json:
            print(json.dumps(self._doc, sort_keys=True, separators=(",", ":")))
        else:
            for ln in self._lines:
                print(ln)


# -- subcommands ------------------------------------------------------------


def _caches(config: Config):
    kl = KLCache(config.cache_path)
    return kl, PartitionCache()


def cmd_mult(args, config: Config, out: Output) -> int:
    rs = build_root_system(parse_cartan_type(args.type))
    lam = parse_weight(args.lam, rs, "--lambda")
    mu = parse_weight(args.mu, rs, "--mu")
    lam2 = parse_weight(args.lam2, rs, "--lambda2")
    mu2 = parse_weight(args.mu2, rs, "--mu2")
    kl, pc = _caches(config)
    rep = takiff_mult(lam, mu, lam2, mu2, rs, kl, pc)
    kl.save()
    doc = {"value": rep.value}
    if rep.w_used is not None:
        doc["w"] = format_word(rep.w_used.word)
        doc["levi"] = levi_type_name(rep.levi, rs)
        doc["terms"] = [
            {"chi": list(chi.coeffs), "p": p, "mult": m} for chi, p, m in rep.terms
        ]
    out.doc(doc)
    out.line(rep.value)
    if args.explain and rep.w_used is not None:
        out.line(f"w = {format_word(rep.w_used.word)}")
        out.line(f"levi = {levi_type_name(rep.levi, rs)}")
        for chi, p, m in rep.terms:
            out.line(f"  chi={list(chi.coeffs)}  p={p}  levi_mult={m}")
        if not rep.terms:
            out.line("  (no surviving terms)")
    return 0


def cmd_series(args, config: Config, out: Output) -> int:
    rs = build_root_system(parse_cartan_type(args.type))
    lam = parse_weight(args.lam, rs, "--lambda")
    mu = parse_weight(args.mu, rs, "--mu")
    height = args.height if args.height is not None else config.default_truncation_height
    kl, pc = _caches(config)
    series = takiff_mult_series(lam, mu, height, rs, kl, pc)
    kl.save()
    out.doc(
        {
            "height": height,
            "series": [
                {"lambda2": weight_doc(l2), "value": v} for l2, v in series
            ],
        }
    )
    for l2, v in series:
        out.line(f"{weight_str(l2)}  {v}")
    return 0


def cmd_char(args, config: Config, out: Output) -> int:
    rs = build_root_system(parse_cartan_type(args.type))
    lam = parse_weight(args.lam, rs, "--lambda")
    height = args.height if args.height is not None else config.default_truncation_height
    kl, pc = _caches(config)
    kinds = {
        "verma": lambda: verma_character(lam, height, rs, pc),
        "takiff": lambda: takiff_verma_character(lam, height, rs, pc),
        "simple": lambda: simple_character_bgg(lam, height, rs, kl, pc),
        "weyl": lambda: weyl_character_formula(lam, height, rs, pc),
    }
    ch = kinds[args.kind]()
    kl.save()
    out.doc(
        {
            "H": ch.truncation_height,
            "base": weight_doc(ch.base),
            "entries": [
                {"dim": d, "offset": list(off.coeffs)} for off, d in ch.entries()
            ],
        }
    )
    out.line(f"base {weight_str(ch.base)}  (height <= {height})")
    for off, d in ch.entries():
        out.line(f"{list(off.coeffs)}  {d}")
    return 0


def cmd_kl(args, config: Config, out: Output) -> int:
    rs = build_root_system(parse_cartan_type(args.type))
    W = full_weyl_group(rs)
    x = W.from_word(parse_word(args.x, rs.semisimple_rank, "--x"))
    w = W.from_word(parse_word(args.w, rs.semisimple_rank, "--w"))
    kl, _ = _caches(config)
    p = kl_polynomial(W.group, x, w, kl)
    kl.save()
    out.doc(
        {
            "P": list(p.coeffs),
            "x": format_word(x.word),
            "w": format_word(w.word),
        }
    )
    out.line(poly_str(p.coeffs))
    return 0


def cmd_partition(args, config: Config, out: Output) -> int:
    rs = build_root_system(parse_cartan_type(args.type))
    chi = parse_root_vector(args.chi, rs, "--chi")
    _, pc = _caches(config)
    value = (kostant_p2 if args.two else kostant_p)(chi, rs, pc)
    out.doc({"chi": list(chi.coeffs), "value": value})
    out.line(value)
    return 0


def cmd_reduce(args, config: Config, out: Output) -> int:
    rs = build_root_system(parse_cartan_type(args.type))
    mu = parse_weight(args.mu, rs, "--mu")
    w, image, levi = minimal_levi_reduction(mu, rs)
    out.doc(
        {
            "levi": levi_type_name(levi, rs),
            "levi_simples": [list(b.coeffs) for b in levi.simple_system],
            "mu_image": weight_doc(image),
            "w": format_word(w.word),
        }
    )
    out.line(f"w = {format_word(w.word)}")
    out.line(f"w(mu) = {weight_str(image)}")
    out.line(f"levi = {levi_type_name(levi, rs)}")
    out.line(f"levi simple roots = {[list(b.coeffs) for b in levi.simple_system]}")
    return 0


def cmd_selftest(args, config: Config, out: Output) -> int:
    kl, pc = _caches(config)
    results = run_all(kl, pc)
    kl.save()
    out.doc(
        {
            "criteria": [
                {
                    "detail": r.detail,
                    "elapsed": round(r.elapsed, 3),
                    "index": r.index,
                    "name": r.name,
                    "ok": r.ok,
                }
                for r in results
            ],
            "ok": all(r.ok for r in results),
        }
    )
    for r in results:
        out.line(r.line())
    return 0 if all(r.ok for r in results) else 1


def cmd_cache(args, config: Config, out: Output) -> int:
    kl = KLCache(config.cache_path)
    if args.action == "stats":
        out.doc(kl.stats())
        for k, v in sorted(kl.stats().items()):
            out.line(f"{k}: {v}")
    else:  # clear
        kl.clear()
        out.doc({"cleared": True, "path": config.cache_path})
        out.line(f"cleared {config.cache_path or '(in-memory only)'}")
    return 0


# -- entry point ------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="takiffo",
        description="Composition multiplicities for Takiff Verma modules.",
    )
    ap.add_argument("--json", action="store_true", help="emit one canonical JSON document")
    ap.add_argument("--cache", help=f"KL cache file (env {ENV_CACHE})")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--type", required=True, help="Cartan type, e.g. A2, B2xA1+T1")

    p = sub.add_parser("mult", help="composition multiplicity [M:L]")
    common(p)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--lambda2", dest="lam2", required=True)
    p.add_argument("--mu2", required=True)
    p.add_argument("--explain", action="store_true")
    p.set_defaults(fn=cmd_mult)

    p = sub.add_parser("series", help="all nonzero multiplicities up to a height")
    common(p)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--height", type=int)
    p.set_defaults(fn=cmd_series)

    p = sub.add_parser("char", help="truncated characters")
    common(p)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--height", type=int)
    p.add_argument("--kind", choices=["verma", "takiff", "simple", "weyl"], default="verma")
    p.set_defaults(fn=cmd_char)

    p = sub.add_parser("kl", help="Kazhdan-Lusztig polynomial P_{x,w}")
    common(p)
    p.add_argument("--x", required=True, help="1-based reduced word, e.g. 2 (or e)")
    p.add_argument("--w", required=True, help="1-based reduced word, e.g. 2132")
    p.set_defaults(fn=cmd_kl)

    p = sub.add_parser("partition", help="Kostant partition function")
    common(p)
    p.add_argument("--chi", required=True, help="root-lattice coordinates, e.g. -1,-1")
    p.add_argument("--two", action="store_true", help="two-colored p2 instead of p")
    p.set_defaults(fn=cmd_partition)

    p = sub.add_parser("reduce", help="minimal Weyl reduction of mu to a standard Levi")
    common(p)
    p.add_argument("--mu", required=True)
    p.set_defaults(fn=cmd_reduce)

    p = sub.add_parser("selftest", help="run the acceptance suite")
    p.set_defaults(fn=cmd_selftest)

    p = sub.add_parser("cache", help="inspect or clear the KL cache")
    p.add_argument("action", choices=["stats", "clear"])
    p.set_defaults(fn=cmd_cache)

    # let option values like "-1,-2" through: no option names start with a
    # digit, so anything shaped like a negative number is always a value
    matcher = re.compile(r"^-\d")
    ap._negative_number_matcher = matcher
    for action in ap._subparsers._group_actions:
        for child in getattr(action, "choices", {}).values():
            child._negative_number_matcher = matcher
    return ap


def make_config(args) -> Config:
    cache = args.cache or os.environ.get(ENV_CACHE) or None
    height = os.environ.get(ENV_HEIGHT)
    return Config(
        default_truncation_height=int(height) if height else 12,
        cache_path=cache,
        output_format="json" if args.json else "human",
    )


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:  # argparse uses 2 for usage errors already
        return int(exc.code or 0)
    out = Output(args.json)
    try:
        config = make_config(args)
        code = args.fn(args, config, out)
    except UsageError as exc:
        print(f"takiffo: {exc}", file=sys.stderr)
        return 2
    except ParseError as exc:
        print(f"takiffo: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"takiffo: {exc}", file=sys.stderr)
        return 1
    out.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
