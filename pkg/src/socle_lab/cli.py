"""Command-line surface.

Exit codes: 0 success, 1 at least one failed check, 2 usage or script
syntax error, 3 computation error.  ``--json`` emits the versioned report
schema; the default output is human-readable text.  The Groebner cache
directory comes from --cache-dir, then SOCLE_LAB_CACHE_DIR, then a
per-user default; --no-cache disables the disk layer.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__, cache
from .errors import ScriptError, ToolkitError
from .families import VerifyConfig, verify_family
from .ideal import IdealHandle, colon, intersect, subalgebra_presentation
from .interpreter import run_script
from .invariants import (
    buchsbaum_defect,
    depth_probe,
    length,
    min_generators,
    multiplicity,
    socle,
    stability_index,
)
from .parse import (
    parse_generator_list,
    parse_polynomial,
    parse_ring_descriptor,
    parse_script,
)
from .polynomial import normal_form
from .report import SCHEMA, ReportRow, VerificationReport


def _ring_from_args(args):
    ring = parse_ring_descriptor(args.ring)
    if getattr(args, "mod", None):
        ring = ring.quotient(parse_generator_list(ring, args.mod))
    return ring


def _handle(ring, text):
    return IdealHandle(ring, parse_generator_list(ring, text))


def _emit(args, claim_id, computed, human_lines):
    if args.json:
        report = VerificationReport(
            version=__version__,
            instance={"family": claim_id, "params": {}},
            characteristic=0,
            seed=0,
            rows=[ReportRow(claim_id, claim_id, computed, None, "info", True)],
        )
        print(report.to_json())
    else:
        for line in human_lines:
            print(line)
    return 0


def _basis_lines(basis):
    return [str(p) for p in basis.polys] or ["0"]


# -- subcommand implementations ----------------------------------------------


def _cmd_gb(args):
    ring = _ring_from_args(args)
    handle = _handle(ring, args.ideal)
    basis = handle.basis()
    return _emit(args, "gb", _basis_lines(basis), _basis_lines(basis))


def _cmd_nf(args):
    ring = _ring_from_args(args)
    handle = _handle(ring, args.ideal)
    f = parse_polynomial(ring, args.poly)
    r = normal_form(f, list(handle.basis().polys))
    return _emit(args, "nf", str(r), [str(r)])


def _cmd_colon(args):
    ring = _ring_from_args(args)
    result = colon(_handle(ring, args.ideal), _handle(ring, args.by))
    lines = _basis_lines(result.basis())
    return _emit(args, "colon", lines, lines)


def _cmd_intersect(args):
    ring = _ring_from_args(args)
    result = intersect(_handle(ring, args.ideal), _handle(ring, args.other))
    lines = _basis_lines(result.basis())
    return _emit(args, "intersect", lines, lines)


def _cmd_length(args):
    ring = _ring_from_args(args)
    value = length(_handle(ring, args.ideal))
    return _emit(args, "length", value, [str(value)])


def _cmd_socle(args):
    ring = _ring_from_args(args)
    ideal_part, socle_len = socle(_handle(ring, args.ideal))
    lines = _basis_lines(ideal_part.basis()) + [f"socle length: {socle_len}"]
    return _emit(args, "socle", {"socle_length": socle_len,
                                 "colon": _basis_lines(ideal_part.basis())}, lines)


def _cmd_mu(args):
    ring = _ring_from_args(args)
    value = min_generators(_handle(ring, args.ideal))
    return _emit(args, "mu", value, [str(value)])


def _cmd_mult(args):
    ring = _ring_from_args(args)
    value = multiplicity(_handle(ring, args.ideal), nmax=args.nmax)
    return _emit(args, "mult", value, [str(value)])


def _cmd_defect(args):
    ring = _ring_from_args(args)
    value = buchsbaum_defect(_handle(ring, args.ideal), nmax=args.nmax)
    return _emit(args, "defect", value, [str(value)])


def _cmd_depth(args):
    ring = _ring_from_args(args)
    probe = depth_probe(ring, trials=args.trials, seed=args.seed)
    lines = [f"certified depth lower bound: {probe.bound}"]
    lines += [f"witness: {w}" for w in probe.witnesses]
    return _emit(args, "depth",
                 {"bound": probe.bound,
                  "witnesses": [str(w) for w in probe.witnesses]}, lines)


def _cmd_stability(args):
    ring = _ring_from_args(args)
    value = stability_index(_handle(ring, args.ideal), _handle(ring, args.q),
                            args.kmax)
    text = "absent" if value is None else str(value)
    return _emit(args, "stability", value, [text])


def _cmd_present(args):
    ring = _ring_from_args(args)
    images = parse_generator_list(ring.ambient(), args.images)
    names = tuple(n.strip() for n in args.vars.split(","))
    kernel = subalgebra_presentation(ring, images, names)
    lines = _basis_lines(kernel.basis())
    return _emit(args, "present", lines, lines)


def _cmd_verify_family(args):
    config = VerifyConfig(samples=args.samples, seed=args.seed, kmax=args.kmax,
                          nmax=args.nmax)
    report = verify_family(args.family, config, m=args.m, d=args.d,
                           char=args.char, minpoly=args.minpoly)
    if args.json:
        print(report.to_json())
    else:
        print(report.to_text())
    return 0 if report.ok else 1


def _cmd_run(args):
    with open(args.script, "r", encoding="utf-8") as fh:
        text = fh.read()
    result = run_script(parse_script(text))
    if args.json:
        payload = {
            "schema": SCHEMA,
            "version": __version__,
            "outputs": result.outputs,
            "checks": [{"check": text, "pass": passed}
                       for text, passed in result.checks],
        }
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    else:
        for line in result.outputs:
            print(line)
        for text, passed in result.checks:
            print(f"{'ok' if passed else 'FAILED'}: {text}")
    return 0 if result.ok else 1


# -- argument wiring -----------------------------------------------------------


def _add_common(sub, ideal=True, mod=True):
    sub.add_argument("--ring", required=True,
                     help='ring descriptor, e.g. "F101[x,y]" or "Q[x]"')
    if mod:
        sub.add_argument("--mod", default=None,
                         help='defining relations, e.g. "(x*y)"')
    if ideal:
        sub.add_argument("--ideal", required=True,
                         help='generator list, e.g. "(x^2, x*y + y^2)"')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="socle-lab",
        description="Exact local-algebra toolkit: Groebner bases, colon "
        "ideals, lengths, socles, multiplicities, and family verification.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--json", action="store_true",
                        help="emit the socle-lab/1 report schema")
    parser.add_argument("--no-cache", action="store_true",
                        help="disable the on-disk Groebner cache")
    parser.add_argument("--cache-dir", default=None,
                        help="directory for the on-disk Groebner cache")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gb", help="reduced Groebner basis")
    _add_common(p)
    p.set_defaults(func=_cmd_gb)

    p = sub.add_parser("nf", help="normal form of a polynomial")
    _add_common(p)
    p.add_argument("--poly", required=True)
    p.set_defaults(func=_cmd_nf)

    p = sub.add_parser("colon", help="colon ideal I : J")
    _add_common(p)
    p.add_argument("--by", required=True, help="generators of J")
    p.set_defaults(func=_cmd_colon)

    p = sub.add_parser("intersect", help="intersection of two ideals")
    _add_common(p)
    p.add_argument("--other", required=True)
    p.set_defaults(func=_cmd_intersect)

    p = sub.add_parser("length", help="colength of an origin-primary ideal")
    _add_common(p)
    p.set_defaults(func=_cmd_length)

    p = sub.add_parser("socle", help="socle (J:m, length (J:m)/J)")
    _add_common(p)
    p.set_defaults(func=_cmd_socle)

    p = sub.add_parser("mu", help="minimal number of generators")
    _add_common(p)
    p.set_defaults(func=_cmd_mu)

    p = sub.add_parser("mult", help="Hilbert-Samuel multiplicity")
    _add_common(p)
    p.add_argument("--nmax", type=int, default=None)
    p.set_defaults(func=_cmd_mult)

    p = sub.add_parser("defect", help="colength minus multiplicity")
    _add_common(p)
    p.add_argument("--nmax", type=int, default=None)
    p.set_defaults(func=_cmd_defect)

    p = sub.add_parser("depth", help="certified depth lower bound")
    _add_common(p, ideal=False)
    p.add_argument("--trials", type=int, default=6)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_depth)

    p = sub.add_parser("stability", help="least n with I^(n+1) = Q I^n")
    _add_common(p)
    p.add_argument("--q", required=True, help="generators of Q")
    p.add_argument("--kmax", type=int, default=4)
    p.set_defaults(func=_cmd_stability)

    p = sub.add_parser("present", help="subalgebra presentation kernel")
    _add_common(p, ideal=False)
    p.add_argument("--images", required=True,
                   help='image list, e.g. "(x^2, x^3)"')
    p.add_argument("--vars", required=True,
                   help='presentation variable names, e.g. "p,q"')
    p.set_defaults(func=_cmd_present)

    p = sub.add_parser("verify-family", help="verify a named ring family")
    p.add_argument("family", choices=["section4", "fiber", "fiber-product",
                                      "field-extension", "regular-param",
                                      "semigroup-curve"])
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--char", type=int, default=101)
    p.add_argument("--minpoly", default=None)
    p.add_argument("--samples", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--kmax", type=int, default=4)
    p.add_argument("--nmax", type=int, default=None)
    p.set_defaults(func=_cmd_verify_family)

    p = sub.add_parser("run", help="run a script file")
    p.add_argument("script")
    p.set_defaults(func=_cmd_run)

    return parser


def _configure_cache(args):
    if args.no_cache:
        cache.set_cache_dir(None)
        return
    directory = (
        args.cache_dir
        or os.environ.get("SOCLE_LAB_CACHE_DIR")
        or cache.default_cache_dir()
    )
    try:
        cache.set_cache_dir(directory)
    except OSError:
        cache.set_cache_dir(None)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    _configure_cache(args)
    try:
        return args.func(args)
    except ScriptError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ToolkitError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
