"""Command-line interface.

Usage::

    csftrees [--json] [--threads K] [--cache] [--cache-dir DIR] GROUP COMMAND [options]

    trees  enumerate --order N | invariants --tree SPEC | code --tree SPEC
    poly   csf --tree SPEC | upoly --tree SPEC [--restrict Q] | lpoly --comp "A B ..."
    comp   compose --a A --b B | factor --comp C | eqclass --comp C | reverse --comp C
    verify theorem1 --q Q --max-order N | lemma3 --q Q --max-order N
           eq3 --max-order N | prop1 --q Q --max-order N

Exit status: 0 success/PASS, 1 verification FAIL, 2 usage or bound error.
Verification runs store ``manifest.json`` and the report under
``$CSF_CACHE_DIR`` (default ``./.csf-cache``), one directory per manifest
hash; with ``--cache`` a stored report is replayed instead of recomputed.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path

from . import __version__
from .compositions import (
    Composition,
    compose,
    format_factorization,
    irreducible_factorization,
    l_equivalence_class,
    l_polynomial,
    reverse,
)
from .errors import CSFError, NoTrunk
from .symfun import csf_power_sum
from .trees import (
    canonical_code,
    degree_sequence,
    diameter,
    enumerate_trees,
    format_tree,
    parse_tree,
    trunk,
    twigs,
)
from .upoly import restrict_min_part, upoly_naive, upoly_tree_dp
from .verify import verify_eq3, verify_lemma3_sweep, verify_prop1, verify_theorem1

CACHE_ENV = "CSF_CACHE_DIR"
DEFAULT_CACHE = ".csf-cache"

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


@dataclass
class RunManifest:
    command: str
    params: dict
    version: str = __version__
    outcome: dict = field(default_factory=dict)

    def key(self) -> str:
        """Content hash over everything except the outcome."""
        blob = json.dumps(
            {"command": self.command, "params": self.params, "version": self.version},
            sort_keys=True,
        )
        return hashlib.sha256(blob.encode()).hexdigest()[:16]

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "RunManifest":
        return cls(**json.loads(text))


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _emit(args, text: str, payload) -> None:
    if args.json:
        sys.stdout.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


# ---------------------------------------------------------------------------
# trees


def cmd_trees(args) -> int:
    if args.sub == "enumerate":
        trees = list(enumerate_trees(args.order))
        _emit(
            args,
            "\n".join(format_tree(t) for t in trees),
            [{"tree": format_tree(t), "code": canonical_code(t)} for t in trees],
        )
    elif args.sub == "code":
        t = parse_tree(args.tree)
        _emit(args, canonical_code(t), {"tree": format_tree(t), "code": canonical_code(t)})
    else:
        t = parse_tree(args.tree)
        info = {
            "order": t.order,
            "degree_sequence": list(degree_sequence(t)),
            "diameter": diameter(t),
        }
        try:
            info["trunk_order"] = len(trunk(t))
            info["twigs"] = {str(k): v for k, v in sorted(twigs(t).items())}
        except NoTrunk:
            info["trunk_order"] = None
            info["twigs"] = None
        lines = [
            f"order: {info['order']}",
            "degree_sequence: " + " ".join(map(str, info["degree_sequence"])),
            f"diameter: {info['diameter']}",
            f"trunk_order: {'none (path)' if info['trunk_order'] is None else info['trunk_order']}",
            "twigs: "
            + ("none" if info["twigs"] is None
               else " ".join(f"{k}x{v}" for k, v in info["twigs"].items())),
        ]
        _emit(args, "\n".join(lines), info)
    return EXIT_OK


# ---------------------------------------------------------------------------
# poly


def cmd_poly(args) -> int:
    if args.sub == "csf":
        p = csf_power_sum(parse_tree(args.tree), max_order=args.max_order)
    elif args.sub == "upoly":
        t = parse_tree(args.tree)
        p = upoly_naive(t) if args.method == "naive" else upoly_tree_dp(t)
        if args.restrict is not None:
            p = restrict_min_part(p, args.restrict)
    else:
        p = l_polynomial(Composition.parse(args.comp))
    _emit(args, p.serialize(), p.to_json())
    return EXIT_OK


# ---------------------------------------------------------------------------
# comp


def cmd_comp(args) -> int:
    if args.sub == "compose":
        c = compose(Composition.parse(args.a), Composition.parse(args.b))
        _emit(args, str(c), list(c))
    elif args.sub == "reverse":
        c = reverse(Composition.parse(args.comp))
        _emit(args, str(c), list(c))
    elif args.sub == "factor":
        f = irreducible_factorization(Composition.parse(args.comp))
        _emit(args, format_factorization(f), [list(x) for x in f])
    else:
        cls = sorted(l_equivalence_class(Composition.parse(args.comp)))
        _emit(args, "\n".join(map(str, cls)), [list(x) for x in cls])
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify


def _run_verify(args):
    if args.sub == "theorem1":
        params = {"q": args.q, "max_order": args.max_order, "csf_max_order": args.csf_max_order,
                  "samples": args.samples, "seed": args.seed}
        run = lambda: verify_theorem1(args.q, args.max_order, args.csf_max_order,
                                      args.samples, args.seed, threads=args.threads)
    elif args.sub == "lemma3":
        params = {"q": args.q, "max_order": args.max_order}
        run = lambda: verify_lemma3_sweep(args.q, args.max_order, threads=args.threads)
    elif args.sub == "eq3":
        params = {"max_order": args.max_order}
        run = lambda: verify_eq3(args.max_order, threads=args.threads)
    else:
        params = {"q": args.q, "max_order": args.max_order}
        run = lambda: verify_prop1(args.q, args.max_order, threads=args.threads)
    return RunManifest(f"verify {args.sub}", params), run


def cmd_verify(args) -> int:
    if getattr(args, "q", 2) < 2 and args.sub != "prop1":
        raise CSFError(f"q must be >= 2 for verify {args.sub}")
    manifest, run = _run_verify(args)
    root = Path(args.cache_dir or os.environ.get(CACHE_ENV, DEFAULT_CACHE))
    slot = root / manifest.key()
    fname = "report.json" if args.json else "report.txt"

    if args.cache and (slot / "manifest.json").is_file() and (slot / fname).is_file():
        stored = RunManifest.from_json((slot / "manifest.json").read_text())
        sys.stdout.write((slot / fname).read_text())
        return EXIT_OK if stored.outcome.get("passed") else EXIT_FAIL

    report = run()
    text = report.text()
    js = json.dumps(report.to_json(), sort_keys=True) + "\n"
    manifest.outcome = {"passed": report.passed, **report.summary}
    try:
        slot.mkdir(parents=True, exist_ok=True)
        (slot / "manifest.json").write_text(manifest.to_json() + "\n")
        (slot / "report.txt").write_text(text)
        (slot / "report.json").write_text(js)
    except OSError as exc:
        print(f"warning: could not write cache {slot}: {exc}", file=sys.stderr)
    sys.stdout.write(js if args.json else text)
    return EXIT_OK if report.passed else EXIT_FAIL


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit JSON instead of text")
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS,
                        help="worker threads for verification runs")
    common.add_argument("--cache", action="store_true", default=argparse.SUPPRESS,
                        help="replay a stored report for an identical run")
    common.add_argument("--cache-dir", default=argparse.SUPPRESS,
                        help=f"cache root (default ${CACHE_ENV} or {DEFAULT_CACHE})")

    parser = _Parser(prog="csftrees", description="Chromatic symmetric functions of trees "
                     "and proper q-caterpillars.", parents=[common])
    parser.add_argument("--version", action="version", version=__version__)
    groups = parser.add_subparsers(dest="group", required=True, parser_class=_Parser)

    def leaf(sub, name, help_):
        return sub.add_parser(name, help=help_, parents=[common])

    g = groups.add_parser("trees", help="tree enumeration and invariants")
    s = g.add_subparsers(dest="sub", required=True, parser_class=_Parser)
    p = leaf(s, "enumerate", "one tree per isomorphism class")
    p.add_argument("--order", type=int, required=True)
    for name in ("invariants", "code"):
        p = leaf(s, name, f"tree {name}")
        p.add_argument("--tree", required=True, help='e.g. "3; 0-1, 1-2"')
    g.set_defaults(func=cmd_trees)

    g = groups.add_parser("poly", help="CSF, U- and L-polynomials")
    s = g.add_subparsers(dest="sub", required=True, parser_class=_Parser)
    p = leaf(s, "csf", "chromatic symmetric function, power-sum basis")
    p.add_argument("--tree", required=True)
    p.add_argument("--max-order", type=int, default=14)
    p = leaf(s, "upoly", "U-polynomial")
    p.add_argument("--tree", required=True)
    p.add_argument("--restrict", type=int, default=None, help="zero x_1..x_Q")
    p.add_argument("--method", choices=("dp", "naive"), default="dp")
    p = leaf(s, "lpoly", "L-polynomial of a composition")
    p.add_argument("--comp", required=True)
    g.set_defaults(func=cmd_poly)

    g = groups.add_parser("comp", help="composition monoid")
    s = g.add_subparsers(dest="sub", required=True, parser_class=_Parser)
    p = leaf(s, "compose", "product A o B")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    for name in ("factor", "eqclass", "reverse"):
        p = leaf(s, name, name)
        p.add_argument("--comp", required=True)
    g.set_defaults(func=cmd_comp)

    g = groups.add_parser("verify", help="exhaustive verification runs")
    s = g.add_subparsers(dest="sub", required=True, parser_class=_Parser)
    p = leaf(s, "theorem1", "CSF distinguishes proper q-caterpillars")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--max-order", type=int, default=21)
    p.add_argument("--csf-max-order", type=int, default=14)
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p = leaf(s, "lemma3", "restricted U-polynomial equals L-polynomial")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--max-order", type=int, default=16)
    p = leaf(s, "eq3", "U-polynomial to CSF identity over all trees")
    p.add_argument("--max-order", type=int, default=10)
    p = leaf(s, "prop1", "recogniser equivalence over all trees")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--max-order", type=int, default=13)
    g.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name, default in (("json", False), ("threads", 1), ("cache", False), ("cache_dir", None)):
        if not hasattr(args, name):
            setattr(args, name, default)
    try:
        return args.func(args)
    except (CSFError, ValueError) as exc:
        print(f"csftrees: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
