"""Command-line interface.

Subcommands: homology (cell complexes or raw cochain complexes), classify
(surface identification), floer (morphism-complex cohomology of two
representations), verify (theorem sweeps).  Exit codes: 0 success, 1
violation or classification failure, 2 input error.  --json emits one
machine-readable line; identical inputs give byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence, Union

from .cellular import CellComplex, builtin as builtin_cell
from .cellular import chain_complex_of, classify_surface, homology_of
from .classify import SampleConfig, run_check
from .complexes import CochainComplex
from .errors import ClassificationError, ExactHomError, FormatError
from .io import load_homology_input, load_cell_complex, load_representation
from .quiver import (
    Representation,
    hom_complex,
    torus_trivial_representation,
    zero_section_representation,
)

BUILTIN_PREFIX = "builtin:"

_BUILTIN_REPRESENTATIONS = {
    "zero_section": zero_section_representation,
    "torus_trivial": torus_trivial_representation,
}


def _resolve_homology_input(source: str) -> Union[CellComplex, CochainComplex]:
    if source.startswith(BUILTIN_PREFIX):
        return builtin_cell(source[len(BUILTIN_PREFIX):])
    return load_homology_input(source)


def _resolve_cell_input(source: str) -> CellComplex:
    if source.startswith(BUILTIN_PREFIX):
        return builtin_cell(source[len(BUILTIN_PREFIX):])
    return load_cell_complex(source)


def _resolve_representation(source: str) -> Representation:
    if source.startswith(BUILTIN_PREFIX):
        name = source[len(BUILTIN_PREFIX):]
        if name not in _BUILTIN_REPRESENTATIONS:
            raise FormatError(f"unknown builtin representation {name!r}")
        return _BUILTIN_REPRESENTATIONS[name]()
    return load_representation(source)


def _emit(args, text: str, payload) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def cmd_homology(args) -> int:
    target = _resolve_homology_input(args.source)
    if isinstance(target, CellComplex):
        complex_ = chain_complex_of(target)
        h = homology_of(target)
        lo, hi = 0, target.max_dim()
    else:
        complex_ = target
        h = complex_.cohomology()
        degrees = complex_.space.degrees() or (0,)
        lo, hi = min(degrees), max(degrees)
    chi = complex_.euler_from_dims()
    if chi != complex_.euler_from_cohomology():
        raise ExactHomError("euler characteristic mismatch between definitions")
    table = {i: h.dim(i) for i in range(lo, hi + 1)}
    text = " ".join(f"H{i}={d}" for i, d in table.items()) + f" chi={chi}"
    _emit(args, text, {"homology": {str(i): d for i, d in table.items()}, "euler": chi})
    return 0


def cmd_classify(args) -> int:
    verdict = classify_surface(_resolve_cell_input(args.source))
    _emit(
        args,
        f"genus={verdict.genus} euler={verdict.euler}",
        {
            "genus": verdict.genus,
            "euler": verdict.euler,
            "connected": verdict.connected,
            "orientable_assumed": verdict.orientable_assumed,
        },
    )
    return 0


def cmd_floer(args) -> int:
    rep_a = _resolve_representation(args.rep_a)
    rep_b = _resolve_representation(args.rep_b)
    result = hom_complex(rep_a, rep_b)
    chi = result.complex.euler_from_dims()
    if not result.differential_defined:
        _emit(
            args,
            f"chi={chi} (differential not defined for this quiver presentation)",
            {"chi": chi, "differential_defined": False},
        )
        return 0
    hf = result.complex.cohomology()
    degrees = result.complex.space.degrees() or (0,)
    lo, hi = min(degrees), max(degrees)
    table = {i: hf.dim(i) for i in range(lo, hi + 1)}
    text = " ".join(f"HF{i}={d}" for i, d in table.items()) + f" chi={chi}"
    _emit(
        args,
        text,
        {
            "hf": {str(i): d for i, d in table.items()},
            "chi": chi,
            "differential_defined": True,
        },
    )
    return 0


def cmd_verify(args) -> int:
    cfg = SampleConfig(seed=args.seed, count=args.count, max_total_dim=args.max_dim)
    report = run_check(args.theorem, cfg)
    lines = [
        f"theorem={report.theorem} checked={report.samples_checked} "
        f"violations={len(report.violations)}"
    ]
    for v in report.violations:
        lines.append(f"violation sample={v['sample']} detail={v['detail']}")
    _emit(args, "\n".join(lines), report.to_payload())
    return 0 if report.passed else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="exacthom",
        description="Exact-arithmetic homology workbench: cellular homology, "
        "cochain-complex invariants, and morphism-complex cohomology of "
        "quiver representations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("homology", help="homology of a cell complex or cochain complex")
    p.add_argument("source", help="file path, or builtin:circle|sphere|torus|genus_g:<g>")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("classify", help="identify a closed orientable surface")
    p.add_argument("source", help="cell complex file path or builtin name")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("floer", help="morphism-complex cohomology of two representations")
    p.add_argument("rep_a", help="representation file, or builtin:zero_section|torus_trivial")
    p.add_argument("rep_b", help="representation file, or builtin name")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=cmd_floer)

    p = sub.add_parser("verify", help="run a classification sweep")
    p.add_argument("theorem", choices=("sphere", "torus", "concentrated"))
    p.add_argument("--seed", type=int, default=0, help="sampling seed (default 0)")
    p.add_argument("--count", type=int, default=100, help="number of samples (default 100)")
    p.add_argument("--max-dim", dest="max_dim", type=int, default=3,
                   help="maximum total dimension of sampled spaces (default 3)")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except ClassificationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ExactHomError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
