"""Command-line front end.

Every verb prints plain text by default and a single JSON document with
``--json``.  Exit status is 0 on success, 2 on malformed arguments and 1 when
a computation fails (size caps, invariant failures).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .configurations import Configuration, union_class, validate_configuration
from .errors import AdmissibilityError, MotiveForgeError
from .flags import FiberData, flag_motive, leray_hirsch, tower_motive
from .gbundle import nested_filtration_report, reductive_group_class, torus_filtration_pieces
from .rootsys import (
    CAP_ENV,
    ParabolicSubset,
    build_root_system,
    enumerate_weyl,
    longest_element,
    weyl_poincare,
)
from .serialize import emit_json, parse_document, parse_l_polynomial, parse_tate_sum
from .tate import LPolynomial, euler_class, is_pure_tate, pure_coefficients, self_duality_check
from .wonderful import (
    Interpretation,
    face,
    orbit_class,
    orbit_class_oracle,
    orbit_closure_cells,
    orbit_closure_motive,
)

TYPE_HELP = (
    "Cartan type such as A2, B3, D4, E6, F4, G2 (family letter then rank); "
    "C2 is accepted and normalized to B2"
)


def _arg(parser_fn):
    """Turn an AdmissibilityError raised by ``parser_fn`` into a usage error."""

    def wrapped(text):
        try:
            return parser_fn(text)
        except AdmissibilityError as exc:
            raise argparse.ArgumentTypeError(str(exc)) from None

    wrapped.__name__ = parser_fn.__name__
    return wrapped


def _type_with_face(text):
    # "A2" or "A2/1,2"
    type_part, sep, idx = text.partition("/")
    rs = build_root_system(type_part)
    return rs, (ParabolicSubset.parse(idx, rs) if sep else None)


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise AdmissibilityError(f"expected a positive integer, got {text}")
    return value


def _nonneg_int(text):
    try:
        value = int(text)
    except ValueError:
        raise AdmissibilityError(f"expected a nonnegative integer, got {text!r}") from None
    if value < 0:
        raise AdmissibilityError(f"expected a nonnegative integer, got {text}")
    return value


def _face_for(rs, text, parser):
    if text is None:
        return ParabolicSubset.full(rs)
    try:
        return ParabolicSubset.parse(text, rs)
    except AdmissibilityError as exc:
        parser.error(str(exc))


# commands


def cmd_weyl(args):
    rs, _ = args.type
    elements = enumerate_weyl(rs, args.cap)
    poincare = weyl_poincare(rs, args.cap)
    w0 = longest_element(rs)
    data = {
        "type": rs.name,
        "rank": rs.rank,
        "order": len(elements),
        "num_positive": rs.num_positive,
        "exponents": list(rs.exponents),
        "cartan_matrix": [list(r) for r in rs.cartan_matrix],
        "poincare": poincare,
        "longest": {"word": list(w0.word), "length": w0.length},
    }
    if args.elements:
        data["elements"] = [{"word": list(w.word), "length": w.length} for w in elements]
    lines = [
        f"type              {rs.name}",
        f"order |W|         {len(elements)}",
        f"positive roots N  {rs.num_positive}",
        f"exponents         {' '.join(map(str, rs.exponents))}",
        f"Poincaré poly     {poincare.format('t')}",
        f"longest element   {w0}  (length {w0.length})",
    ]
    if args.elements:
        lines += [f"  {w.length:3d}  {w}" for w in elements]
    return data, lines


def cmd_flag(args):
    rs, inline = args.type
    if inline is not None and args.parabolic is not None:
        args.parser.error("give the parabolic subset either inline (A2/1) or with --parabolic")
    parabolic = inline
    if parabolic is None:
        parabolic = _face_for(rs, args.parabolic or "", args.parser)
    motive = flag_motive(rs, parabolic, args.cap)
    ranks = pure_coefficients(motive)
    dim = len(ranks) - 1
    dual = self_duality_check(motive, dim)
    data = {
        "type": rs.name,
        "parabolic": list(parabolic),
        "dimension": dim,
        "motive": motive,
        "chow_ranks": ranks,
        "class": euler_class(motive),
        "self_dual": dual,
    }
    lines = [
        f"flag variety      {rs.name}/P{parabolic}",
        f"dimension         {dim}",
        f"motive            {motive}",
        f"Chow ranks        {ranks}",
        f"class             {euler_class(motive)}",
        f"Poincaré duality  {'ok' if dual else 'FAILS'}",
    ]
    return data, lines


def cmd_wonderful(args):
    rs, inline = args.type
    parabolic = inline if inline is not None else _face_for(rs, args.face, args.parser)
    interp = Interpretation(args.interpretation)
    table = orbit_closure_cells(rs, parabolic, interp, args.cap)
    motive = orbit_closure_motive(rs, parabolic, interp, args.cap)
    orbit = orbit_class(rs, parabolic, interp, args.cap)
    f = face(rs, parabolic)
    data = {
        "type": rs.name,
        "face": list(parabolic),
        "dim": f.dim,
        "codim": f.codim,
        "interpretation": interp.value,
        "cells": len(table),
        "histogram": table.histogram(),
        "motive": motive,
        "closure_class": euler_class(motive),
        "orbit_class": orbit,
    }
    lines = [
        f"orbit closure     {rs.name}, face {parabolic} (dim {f.dim}, codim {f.codim})",
        f"interpretation    {interp.value}",
        f"cells             {len(table)}",
        f"histogram         {table.histogram()}",
        f"closure class     {euler_class(motive)}",
        f"orbit class       {orbit}",
    ]
    if args.oracle:
        oracle = orbit_class_oracle(rs, parabolic)
        agree = oracle == orbit
        data["oracle"] = {"class": oracle, "verdict": "agree" if agree else "disagree"}
        lines.append(f"fibration oracle  {oracle}  [{'agree' if agree else 'DISAGREE'}]")
    if args.check_duality:
        dual = self_duality_check(motive, f.dim)
        data["self_dual"] = dual
        lines.append(f"Poincaré duality  {'ok' if dual else 'FAILS'} (n = {f.dim})")
    return data, lines


def cmd_group_class(args):
    rs, _ = args.type
    cls = reductive_group_class(rs, args.central_rank)
    data = {"type": rs.name, "central_rank": args.central_rank, "class": cls}
    lines = [
        f"group             {rs.name} with central torus of rank {args.central_rank}",
        f"class             {cls}",
        f"points at L=2     {cls(2)}",
    ]
    return data, lines


def _summand_note(motive):
    return "pure Tate" if is_pure_tate(motive) else "not pure Tate (base is mixed)"


def cmd_leray_hirsch(args):
    motive = leray_hirsch(args.fiber, args.base)
    data = {
        "fiber": list(args.fiber.chow_ranks),
        "base": args.base,
        "motive": motive,
        "pure": is_pure_tate(motive),
    }
    lines = [
        f"fiber Chow ranks  {list(args.fiber.chow_ranks)}",
        f"base              {args.base}",
        f"motive            {motive}",
        f"purity            {_summand_note(motive)}",
    ]
    return data, lines


def cmd_tower(args):
    fibers = args.fiber or []
    motive = tower_motive(fibers, args.base)
    note = (
        "ambient object: contains M(X) as a summand; "
        "in positive characteristic the summand statement is conditional"
    )
    data = {
        "fibers": [list(f.chow_ranks) for f in fibers],
        "base": args.base,
        "motive": motive,
        "note": note,
    }
    lines = [f"fiber {i + 1:<11} {list(f.chow_ranks)}" for i, f in enumerate(fibers)]
    lines += [
        f"base              {args.base}",
        f"tower motive      {motive}",
        f"note              {note}",
    ]
    return data, lines


def _render_node(node, depth, lines):
    pad = "  " * depth
    verdict = "ok" if node.ok else "FAIL"
    lines.append(f"{pad}face {node.face.parabolic} (dim {node.face.dim}) [{verdict}]")
    lines.append(f"{pad}  closure   {node.middle}")
    lines.append(f"{pad}  boundary  {node.left}")
    lines.append(f"{pad}  open      {node.right}")
    for t in node.levels:
        lines.append(
            f"{pad}  {t.label}: {t.left}  +  {t.right}  =  {t.middle} [{'ok' if t.ok else 'FAIL'}]"
        )
    for child in node.children:
        _render_node(child, depth + 1, lines)


def cmd_filtration(args):
    rs, _ = args.type
    root = nested_filtration_report(rs, args.base, args.interpretation, args.cap)
    note = (
        "class-level triangles only; bundles assumed Zariski-locally trivial. "
        "Over a curve the Gysin step reads [G][C minus m points] + m[G] = [G][C]."
    )
    data = {"type": rs.name, "base": args.base, "tree": root, "note": note}
    lines = [f"nested filtration for {rs.name} over base class {args.base}"]
    _render_node(root, 0, lines)
    lines.append(f"note: {note}")
    return data, lines


def cmd_config(args):
    text = sys.stdin.read() if args.path == "-" else Path(args.path).read_text()
    try:
        config = Configuration.from_json(parse_document(text))
    except (ValueError, KeyError, TypeError) as exc:
        raise AdmissibilityError(f"malformed configuration file: {exc}") from exc
    report = validate_configuration(config)
    data = {"configuration": config, "validation": report}
    lines = [f"components        {len(config.components)}"]
    lines.append(f"valid             {'yes' if report.valid else 'no'}")
    lines += [f"  violation: {v}" for v in report.violations]
    if report.valid:
        cls = union_class(config)
        data["union_class"] = cls
        lines.append(f"union class       {cls}")
    return data, lines


def cmd_torus_filtration(args):
    filt = torus_filtration_pieces(args.r, args.base)
    data = {"r": args.r, "base": args.base, "filtration": filt}
    lines = [f"torus rank {args.r}, base {args.base}"]
    lines += [f"  lambda_{p}: rank {tp.rank:<4} {tp.piece}" for p, tp in enumerate(filt.pieces)]
    return data, lines


# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON document")
    common.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")
    common.add_argument(
        "--cap",
        type=_arg(_positive_int),
        help=f"enumeration cap (default 10^6 Weyl elements, 10^7 cells; env {CAP_ENV})",
    )

    parser = argparse.ArgumentParser(
        prog="motive-forge",
        description="Motivic decompositions and Grothendieck-ring classes of flag "
        "varieties, wonderful compactifications and G-bundles.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="verb", required=True, metavar="VERB")

    def add(name, fn, help_):
        p = sub.add_parser(name, parents=[common], help=help_, description=help_)
        p.set_defaults(func=fn, parser=p)
        return p

    type_arg = _arg(_type_with_face)
    interp = dict(choices=[i.value for i in Interpretation], default=Interpretation.ASCENT.value)

    p = add("weyl", cmd_weyl, "Weyl group order, Poincaré polynomial and longest element")
    p.add_argument("type", type=type_arg, help=TYPE_HELP)
    p.add_argument("--elements", action="store_true", help="list every element")

    p = add("flag", cmd_flag, "motive of the flag variety G/P_I")
    p.add_argument("type", type=type_arg, help=TYPE_HELP + "; A2/1 fixes I inline")
    p.add_argument("--parabolic", metavar="I", help="comma-separated simple indices, e.g. 1,3")

    p = add("wonderful", cmd_wonderful, "cells and classes of a wonderful orbit closure")
    p.add_argument("type", type=type_arg, help=TYPE_HELP)
    p.add_argument("--face", metavar="I", help="face F_I (default: all simple roots)")
    p.add_argument("--interpretation", **interp, help="reading of I_u (default ascent)")
    p.add_argument("--oracle", action="store_true", help="compare with the fibration oracle")
    p.add_argument("--check-duality", action="store_true", help="test Poincaré duality")

    p = add("group-class", cmd_group_class, "class of a split reductive group")
    p.add_argument("type", type=type_arg, help=TYPE_HELP)
    p.add_argument("--central-rank", type=_arg(_nonneg_int), default=0, metavar="Z")

    fiber_help = "fiber as Chow ranks (1,1,1) or a flag variety such as A2/1"
    p = add("leray-hirsch", cmd_leray_hirsch, "motive of a cellular fibration")
    p.add_argument("--fiber", type=_arg(FiberData.parse), required=True, help=fiber_help)
    p.add_argument(
        "--base", type=_arg(parse_tate_sum), default=parse_tate_sum("1"),
        help="base motive: TateSum JSON or Chow ranks (default: point)",
    )

    p = add("tower", cmd_tower, "ambient motive of a tower of cellular fibrations")
    p.add_argument(
        "--fiber", type=_arg(FiberData.parse), action="append",
        help=fiber_help + "; repeat, outermost first",
    )
    p.add_argument("--base", type=_arg(parse_tate_sum), default=parse_tate_sum("1"))

    p = add("filtration", cmd_filtration, "nested face-lattice filtration of a G-bundle")
    p.add_argument("type", type=type_arg, help=TYPE_HELP)
    p.add_argument(
        "--base", type=_arg(parse_l_polynomial), default=LPolynomial.constant(1),
        help='base class as {"coeffs":[[e,c],...]} or ascending coefficients (default 1)',
    )
    p.add_argument("--interpretation", **interp)

    p = add("config", cmd_config, "validate a configuration file and compute its union class")
    p.add_argument("path", help="configuration JSON file, or - for stdin")

    p = add("torus-filtration", cmd_torus_filtration, "graded pieces of a torus-bundle motive")
    p.add_argument("r", type=_arg(_nonneg_int), help="torus rank")
    p.add_argument("--base", type=_arg(parse_tate_sum), default=parse_tate_sum("1"))
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        data, lines = args.func(args)
    except (MotiveForgeError, OverflowError, OSError) as exc:
        print(f"motive-forge {args.verb}: error: {exc}", file=sys.stderr)
        return 1
    text = emit_json(data) if args.json else "\n".join(lines)
    if args.out:
        Path(args.out).write_text(text + "\n", encoding="utf-8")
    else:
        sys.stdout.write(text + "\n")
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
