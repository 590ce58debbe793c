"""Command-line entry point: ``weylnichols <command> [options]``.

Exit codes: 0 success, 1 bad input or domain error, 2 a verification suite
found a mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .classifier import classify_any, load_spec
from .config import FORMATS, Config
from .conjugacy import all_classes, centralizer, class_of, normalize, phi
from .groups import CutoffExceeded, CycleType, GroupSpec, Permutation, WeylElement
from .repkit import BlockRep, RepDescriptor, distinguished_element, is_minus_one_type
from .squarecomm import enumerate_pairs
from .verify import run_suite

EXIT_OK, EXIT_ERROR, EXIT_VERIFY = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--family", choices=["A", "B", "D"], default=argparse.SUPPRESS)
    p.add_argument("--rank", type=int, default=argparse.SUPPRESS)
    p.add_argument("--cutoff", type=int, default=argparse.SUPPRESS, help="largest group order to enumerate")
    p.add_argument("--workers", type=int, default=argparse.SUPPRESS)
    p.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS)
    p.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="same as --format json")
    p.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="weylnichols", description=__doc__.splitlines()[0], parents=[common])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("classes", parents=[common], help="list conjugacy classes")

    p = sub.add_parser("centralizer", parents=[common], help="centralizer of an element")
    p.add_argument("--element", required=True, help='e.g. "1000 (1 2)(3 4)" or "(1 2)"')

    p = sub.add_parser("phi", parents=[common], help="block data and phi of centralizer elements")
    p.add_argument("sigma", help='permutation, e.g. "(1 2)(3 4)"')
    p.add_argument("--tau", help="a centralizing permutation (default: sigma itself)")

    p = sub.add_parser("xi", parents=[common], help="distinguished element and -1-type verdict")
    p.add_argument("--type", required=True, dest="ctype", help='cycle type, e.g. "1^2 2^3"')
    p.add_argument("--t", action="append", default=[], help='exponents for one block, e.g. "2:[1,1,1]"')
    p.add_argument("--rho", action="append", default=[], help='label for one block, e.g. "2:sgn"')

    p = sub.add_parser("squarecomm", parents=[common], help="square-commuting class pairs")
    p.add_argument("--include-trivial", action="store_true")

    p = sub.add_parser("classify", parents=[common], help="classify a module or RSR given as JSON")
    p.add_argument("--spec", required=True, dest="spec_file", help="path to the JSON file, or - for stdin")

    p = sub.add_parser("verify", parents=[common], help="run a reproduction suite")
    p.add_argument("--lemma", default="all", help="2.4, 2.8, 2.1, phi, 3.10, 3.11 or all")
    p.add_argument("--n", type=int, default=None)
    return parser


def _config(args) -> Config:
    cfg = Config.from_env()
    fmt = "json" if getattr(args, "json", False) else getattr(args, "format", None)
    return cfg.override(
        cutoff=getattr(args, "cutoff", None),
        workers=getattr(args, "workers", None),
        format=fmt,
        seed=getattr(args, "seed", None),
    )


def _group(args, default_family: str = "A") -> GroupSpec:
    rank = getattr(args, "rank", None)
    if rank is None:
        raise ValueError("--rank is required")
    return GroupSpec(getattr(args, "family", default_family), rank)


def _emit(cfg: Config, payload: dict, text_lines: list[str]) -> None:
    if cfg.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=False))
    else:
        print("\n".join(text_lines))


def _parse_perm(text: str, rank: int | None) -> Permutation:
    if rank is None:
        points = [int(x) for x in text.replace("(", " ").replace(")", " ").split()]
        rank = max(points, default=1)
    return Permutation.parse(text, rank)


def cmd_classes(args, cfg: Config) -> int:
    spec = _group(args)
    classes = all_classes(spec, cfg.cutoff)
    payload = {
        "group": {"family": spec.family, "rank": spec.rank, "order": spec.order()},
        "classes": [
            {"descriptor": c.descriptor, "representative": str(c.representative), "size": c.size} for c in classes
        ],
    }
    lines = [f"{spec}: order {spec.order()}, {len(classes)} classes"]
    lines += [f"  {c.descriptor:<24} size {c.size:<6} rep {c.representative}" for c in classes]
    _emit(cfg, payload, lines)
    return EXIT_OK


def cmd_centralizer(args, cfg: Config) -> int:
    x = WeylElement.parse(args.element, getattr(args, "rank", None))
    spec = GroupSpec(getattr(args, "family", "B" if x.sign else "A"), x.rank)
    cent = centralizer(x, spec, cfg.cutoff)
    cls = class_of(x, spec, cfg.cutoff)
    payload = {
        "element": str(x),
        "group": {"family": spec.family, "rank": spec.rank},
        "order": cent.order,
        "classSize": cls.size,
        "generators": [str(g) for g in cent.generators],
    }
    lines = [f"centralizer of {x} in {spec}: order {cent.order} (class size {cls.size})"]
    lines.append("  generators: " + ", ".join(str(g) for g in cent.generators))
    if cent.abelian_part is not None:
        payload["abelianPartOrder"] = len(cent.abelian_part)
        payload["permutationPartOrder"] = len(cent.perm_part)
        lines.append(f"  splits as A^sigma ({len(cent.abelian_part)}) x| D^sigma ({len(cent.perm_part)})")
    _emit(cfg, payload, lines)
    return EXIT_OK


def cmd_phi(args, cfg: Config) -> int:
    sigma = _parse_perm(args.sigma, getattr(args, "rank", None))
    tau = _parse_perm(args.tau, sigma.degree) if args.tau else sigma
    gamma, normal = normalize(sigma)
    img = phi(tau, sigma)
    blocks = [{"j": j, "f": list(w.f), "theta": str(w.theta)} for j, w in img.blocks]
    payload = {"sigma": str(sigma), "tau": str(tau), "normalForm": str(normal), "conjugator": str(gamma), "phi": blocks}
    lines = [f"sigma = {sigma}, normal form {normal} via {gamma}", f"phi({tau}):"]
    lines += [f"  block {b['j']}: f = {tuple(b['f'])}, theta = {b['theta']}" for b in blocks]
    _emit(cfg, payload, lines)
    return EXIT_OK


def _parse_block_args(values: list[str], what: str) -> dict[int, str]:
    out = {}
    for v in values:
        if ":" not in v:
            raise ValueError(f"--{what} expects 'j:value', got {v!r}")
        j, rest = v.split(":", 1)
        out[int(j)] = rest.strip()
    return out


def cmd_xi(args, cfg: Config) -> int:
    ctype = CycleType.parse(args.ctype)
    ts = {j: tuple(json.loads(v)) for j, v in _parse_block_args(args.t, "t").items()}
    rhos = _parse_block_args(args.rho, "rho")
    for j in set(ts) | set(rhos):
        if ctype.count(j) == 0:
            raise ValueError(f"type {ctype} has no {j}-cycles")
    blocks = tuple(
        BlockRep(j, tuple(int(x) for x in ts.get(j, (0,) * ctype.count(j))), rhos.get(j, "epsilon"))
        for j in ctype.lengths()
    )
    desc = RepDescriptor(blocks).for_type(ctype)
    sigma = ctype.representative()
    xi: Fraction = distinguished_element(desc)
    minus = is_minus_one_type(desc, sigma)
    payload = {"type": str(ctype), "descriptor": desc.to_json(), "xi": str(xi), "minusOneType": minus}
    _emit(cfg, payload, [f"xi = {xi}", f"-1-type: {'yes' if minus else 'no'} (order of sigma {sigma.order()})"])
    return EXIT_OK


def cmd_squarecomm(args, cfg: Config) -> int:
    spec = _group(args)
    report = enumerate_pairs(spec, include_trivial=args.include_trivial, workers=cfg.workers, cutoff=cfg.cutoff)
    lines = [f"{spec}: {len(report.classes)} classes, {len(report.pairs)} square-commutative pairs"]
    lines += [f"  {a.label()}  x  {b.label()}" for a, b in report.pairs]
    _emit(cfg, report.to_json(), lines)
    return EXIT_OK


def cmd_classify(args, cfg: Config) -> int:
    if args.spec_file == "-":
        text = sys.stdin.read()
    else:
        with open(args.spec_file, encoding="utf-8") as fh:
            text = fh.read()
    verdict = classify_any(load_spec(text))
    lines = [verdict.outcome.value] + [f"  [{i}] {j}" for i, j in verdict.trace]
    _emit(cfg, verdict.to_json(), lines)
    return EXIT_OK


def cmd_verify(args, cfg: Config) -> int:
    results = run_suite(args.lemma, args.n)
    ok = all(r.passed for r in results)
    lines = []
    for r in results:
        lines.append(f"{'PASS' if r.passed else 'FAIL'} {r.name} ({r.seconds:.2f}s)")
        lines += [f"  {line}" for line in r.lines]
    _emit(cfg, {"passed": ok, "suites": [r.to_json() for r in results]}, lines)
    return EXIT_OK if ok else EXIT_VERIFY


COMMANDS = {
    "classes": cmd_classes,
    "centralizer": cmd_centralizer,
    "phi": cmd_phi,
    "xi": cmd_xi,
    "squarecomm": cmd_squarecomm,
    "classify": cmd_classify,
    "verify": cmd_verify,
}


def run(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        cfg = _config(args)
        return COMMANDS[args.command](args, cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (ValueError, KeyError, TypeError, OSError, CutoffExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
