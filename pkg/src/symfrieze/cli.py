"""Command-line front end.

Every command is a thin wrapper over one library operation.  Exit codes:
0 on success, 1 when a verification fails (a broken local relation, a
failed minor condition, a non-superperiodic equation), 2 on parse or
usage errors.
"""

import argparse
import sys
from typing import Optional, Sequence

from . import cluster, diffeq, formats, frieze, legendrian, search, slfrieze
from .scalars import KindMismatch, kind_by_name

__all__ = ["main"]


class VerificationFailed(Exception):
    """Raised by command handlers to signal exit code 1 with a message."""


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise formats.FormatError(f"cannot read {path}: {e.strerror}") from None


def _write_output(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _parse_values(scalar: str, text: str) -> tuple:
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        try:
            out.append(formats._decode_value(scalar, tok))
        except (ValueError, ZeroDivisionError):
            raise formats.FormatError(
                f"cannot parse {tok!r} as a {scalar} value"
            ) from None
    return tuple(out)


def _parse_ints(text: str, what: str) -> tuple:
    try:
        return tuple(int(tok) for tok in text.split(",") if tok.strip())
    except ValueError:
        raise formats.FormatError(f"{what} must be comma-separated integers") from None


def _add_scalar(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--scalar",
        choices=["rational", "gaussian", "complex-float"],
        default="rational",
        help="scalar kind for parsing values (default rational)",
    )
    p.add_argument(
        "--tolerance",
        type=float,
        default=None,
        help="absolute tolerance for complex-float comparisons",
    )


def _add_io(p: argparse.ArgumentParser, reads: bool = True, writes: bool = True) -> None:
    if reads:
        p.add_argument(
            "input", nargs="?", default="-", help="input file, or - for stdin"
        )
        p.add_argument(
            "--tolerance",
            type=float,
            default=None,
            help="absolute tolerance for complex-float comparisons",
        )
    if writes:
        p.add_argument("--out", default=None, help="write output here instead of stdout")


def _add_frieze_output(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--json",
        action="store_true",
        help="emit canonical JSON instead of the staggered text layout",
    )


def _load_grid(args) -> frieze.FriezeGrid:
    doc = formats.loads(_read_input(args.input))
    if not isinstance(doc, formats.FriezeDocument):
        raise formats.FormatError("expected a frieze document")
    return formats.grid_of(doc, getattr(args, "tolerance", None))


def _load_sl(args) -> slfrieze.SLFrieze:
    doc = formats.loads(_read_input(args.input))
    if not isinstance(doc, formats.SLDocument):
        raise formats.FormatError("expected an sl-frieze document")
    return formats.sl_of(doc, getattr(args, "tolerance", None))


def _load_polygon(args) -> legendrian.Polygon:
    doc = formats.loads(_read_input(args.input))
    if not isinstance(doc, formats.PolygonDocument):
        raise formats.FormatError("expected a polygon document")
    return formats.polygon_of(doc, getattr(args, "tolerance", None))


def _emit_grid(g: frieze.FriezeGrid, args, provenance=None) -> None:
    doc = formats.document_of(g, provenance)
    if getattr(args, "json", False):
        _write_output(formats.dumps(doc), args.out)
    else:
        _write_output(formats.render_frieze_text(doc), args.out)


# ---------------------------------------------------------------------------
# frieze commands

def _cmd_frieze_from_coeffs(args) -> int:
    kind = kind_by_name(args.scalar, args.tolerance)
    a = _parse_values(args.scalar, args.a)
    b = _parse_values(args.scalar, args.b)
    g = frieze.propagate_from_coeffs(a, b, kind)
    prov = {"coefficients": {"a": args.a.split(","), "b": args.b.split(",")}}
    _emit_grid(g, args, prov if args.json else None)
    return 0


def _cmd_frieze_from_zigzag(args) -> int:
    kind = kind_by_name(args.scalar, args.tolerance)
    values = _parse_values(args.scalar, args.values)
    g = frieze.propagate_from_zigzag(values, args.width, kind)
    prov = {"seed": args.values.split(",")}
    _emit_grid(g, args, prov if args.json else None)
    return 0


def _cmd_frieze_verify(args) -> int:
    g = _load_grid(args)
    print("local rules: ok")
    tame = frieze.check_tame(g)
    if not tame.ok:
        raise VerificationFailed(f"tame: false at {tame.window}")
    print("tame: true")
    if not frieze.check_glide(g):
        raise VerificationFailed("glide: false")
    print("glide: true")
    print(f"minimal period: {frieze.check_periodicity(g)}")
    return 0


def _cmd_frieze_show(args) -> int:
    _emit_grid(_load_grid(args), args)
    return 0


def _cmd_frieze_twist(args) -> int:
    _emit_grid(frieze.sign_twist(_load_grid(args)), args)
    return 0


# ---------------------------------------------------------------------------
# eq commands

def _make_equation(args) -> diffeq.SymmetricDiffEq:
    kind = kind_by_name(args.scalar, args.tolerance)
    a = _parse_values(args.scalar, args.a)
    b = _parse_values(args.scalar, args.b)
    return diffeq.SymmetricDiffEq(a, b, kind)


def _cmd_eq_check(args) -> int:
    eq = _make_equation(args)
    if not diffeq.is_superperiodic(eq):
        raise VerificationFailed("superperiodic: false")
    print("superperiodic: true")
    return 0


def _cmd_eq_monodromy(args) -> int:
    eq = _make_equation(args)
    m = diffeq.monodromy(eq)
    for row in m.rows:
        print(" ".join(str(v) for v in row))
    if not diffeq.is_superperiodic(eq):
        raise VerificationFailed("superperiodic: false")
    print("superperiodic: true")
    return 0


def _cmd_eq_variety(args) -> int:
    kind = kind_by_name(args.scalar, args.tolerance)
    a = _parse_values(args.scalar, args.a)
    b = _parse_values(args.scalar, args.b)
    residuals = diffeq.variety_residuals(a, b, kind)
    for k, r in enumerate(residuals):
        print(f"residual[{k}]: {r}")
    if any(not kind.is_zero(r) for r in residuals):
        raise VerificationFailed("on variety: false")
    print("on variety: true")
    return 0


# ---------------------------------------------------------------------------
# sl commands

def _cmd_sl_black(args) -> int:
    f = slfrieze.black_of(_load_grid(args))
    _write_output(formats.dumps(formats.sl_document_of(f)), args.out)
    return 0


def _cmd_sl_to_symplectic(args) -> int:
    g = slfrieze.symplectic_of(_load_sl(args))
    _emit_grid(g, args)
    return 0


def _cmd_sl_dual(args) -> int:
    f = slfrieze.projective_dual(_load_sl(args))
    _write_output(formats.dumps(formats.sl_document_of(f)), args.out)
    return 0


def _cmd_sl_gale(args) -> int:
    f = slfrieze.gale_dual(_load_sl(args))
    _write_output(formats.dumps(formats.sl_document_of(f)), args.out)
    return 0


# ---------------------------------------------------------------------------
# cluster commands

def _cmd_cluster_belt(args) -> int:
    w = args.width
    start = cluster.initial_seed(w)
    bound = 2 * (w + 5)
    seed = start
    period = None
    for t in range(1, bound + 1):
        seed = cluster.belt_step(cluster.belt_step(seed, +1), -1)
        if seed == start and period is None:
            period = t
    if period is None:
        raise VerificationFailed(f"belt did not close within {bound} full steps")
    print(f"belt period: {period}")
    print(f"identity at {bound}: {'true' if seed == start else 'false'}")
    return 0 if seed == start else 1


def _cmd_cluster_mutate(args) -> int:
    seed = cluster.initial_seed(args.width)
    for k in _parse_ints(args.word, "--word"):
        if not 0 <= k < 2 * args.width:
            raise formats.FormatError(
                f"vertex {k} out of range for width {args.width}"
            )
        seed = cluster.mutate_seed(seed, k)
    print("exchange matrix:")
    for row in seed.matrix.rows:
        print("  " + " ".join(str(v) for v in row))
    print("cluster:")
    for k, u in enumerate(seed.cluster):
        print(f"  u[{k}] = {u}")
    return 0


def _cmd_cluster_formal(args) -> int:
    g = cluster.formal_frieze(args.width)
    lines = []
    for o in range(-1, g.width + 1):
        for x in range(2 * g.period):
            lines.append(f"{x},{o}: {g.cell(x, o)}")
    _write_output("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_cluster_evaluate(args) -> int:
    kind = kind_by_name(args.scalar, args.tolerance)
    point = _parse_values(args.scalar, args.point)
    path = _parse_ints(args.path, "--path") if args.path else ()
    g = cluster.evaluate_frieze(point, path, kind)
    _emit_grid(g, args)
    return 0


# ---------------------------------------------------------------------------
# polygon commands

def _cmd_polygon_from_frieze(args) -> int:
    p = legendrian.polygon_from_frieze(_load_grid(args), args.anchor)
    _write_output(formats.dumps(formats.polygon_document_of(p)), args.out)
    return 0


def _cmd_polygon_to_frieze(args) -> int:
    g = legendrian.frieze_from_polygon(_load_polygon(args))
    _emit_grid(g, args)
    return 0


def _cmd_polygon_normalize(args) -> int:
    doc = formats.loads(_read_input(args.input))
    if not isinstance(doc, formats.PolygonDocument):
        raise formats.FormatError("expected a polygon document")
    tolerance = args.tolerance if args.tolerance is not None else 1e-9
    kind = kind_by_name("complex-float", tolerance)
    form = legendrian.SymplecticForm(
        kind.coerce(doc.form_a), doc.form_variant, kind
    )
    raw = [tuple(kind.coerce(x) for x in v) for v in doc.vertices]
    p = legendrian.normalize_lift(raw, form, tolerance, doc.base)
    _write_output(formats.dumps(formats.polygon_document_of(p)), args.out)
    return 0


def _cmd_polygon_coeffs(args) -> int:
    a, b = legendrian.coeffs_from_polygon(_load_polygon(args))
    print("a: " + ", ".join(str(v) for v in a))
    print("b: " + ", ".join(str(v) for v in b))
    return 0


# ---------------------------------------------------------------------------
# search commands

def _cmd_search_enumerate(args) -> int:
    cfg = search.SearchConfig(args.width, args.bound, args.dedup)
    found = search.enumerate_friezes(cfg)
    orbits = search.dihedral_orbits(found) if found else []
    print(f"width: {args.width}")
    print(f"bound: {args.bound}")
    print(f"dedup: {args.dedup}")
    print(f"count: {len(found)}, orbits: {len(orbits)}")
    return 0


def _cmd_search_orbits(args) -> int:
    grids = []
    names = []
    for path in args.inputs:
        doc = formats.loads(_read_input(path))
        if not isinstance(doc, formats.FriezeDocument):
            raise formats.FormatError(f"{path}: expected a frieze document")
        grids.append(formats.grid_of(doc, args.tolerance))
        names.append(path)
    classes = search.dihedral_orbits(grids)
    by_id = {id(g): name for g, name in zip(grids, names)}
    print(f"orbits: {len(classes)}")
    for k, members in enumerate(classes):
        print(f"orbit {k}: " + " ".join(by_id[id(g)] for g in members))
    return 0


# ---------------------------------------------------------------------------
# parser assembly

def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="symfrieze",
        description="Exact arithmetic for symplectic 2-friezes and friends.",
    )
    groups = top.add_subparsers(dest="group", required=True)

    fz = groups.add_parser("frieze", help="build, verify, and render friezes")
    fzc = fz.add_subparsers(dest="command", required=True)

    p = fzc.add_parser("from-coeffs", help="propagate a frieze from coefficient cycles")
    p.add_argument("--a", required=True, help="comma-separated cycle of a-coefficients")
    p.add_argument("--b", required=True, help="comma-separated cycle of b-coefficients")
    _add_scalar(p)
    _add_io(p, reads=False)
    _add_frieze_output(p)
    p.set_defaults(func=_cmd_frieze_from_coeffs)

    p = fzc.add_parser("from-zigzag", help="propagate a frieze from two seed columns")
    p.add_argument("--values", required=True, help="2*width seed values, west to east")
    p.add_argument("--width", type=int, required=True)
    _add_scalar(p)
    _add_io(p, reads=False)
    _add_frieze_output(p)
    p.set_defaults(func=_cmd_frieze_from_zigzag)

    p = fzc.add_parser("verify", help="check local rules, tameness, glide symmetry")
    _add_io(p, writes=False)
    p.set_defaults(func=_cmd_frieze_verify)

    p = fzc.add_parser("show", help="re-render a frieze document")
    _add_io(p)
    _add_frieze_output(p)
    p.set_defaults(func=_cmd_frieze_show)

    p = fzc.add_parser("twist", help="apply the boundary sign twist")
    _add_io(p)
    _add_frieze_output(p)
    p.set_defaults(func=_cmd_frieze_twist)

    eq = groups.add_parser("eq", help="symmetric difference equations")
    eqc = eq.add_subparsers(dest="command", required=True)
    for name, func, blurb in (
        ("check", _cmd_eq_check, "test superperiodicity"),
        ("monodromy", _cmd_eq_monodromy, "print the period-length product of companion matrices"),
        ("variety", _cmd_eq_variety, "evaluate the defining residuals of the coefficient variety"),
    ):
        p = eqc.add_parser(name, help=blurb)
        p.add_argument("--a", required=True, help="comma-separated cycle of a-coefficients")
        p.add_argument("--b", required=True, help="comma-separated cycle of b-coefficients")
        _add_scalar(p)
        p.set_defaults(func=func)

    sl = groups.add_parser("sl", help="linear friezes and their dualities")
    slc = sl.add_subparsers(dest="command", required=True)
    for name, func, blurb, frieze_out in (
        ("black", _cmd_sl_black, "extract the black half of a frieze", False),
        ("to-symplectic", _cmd_sl_to_symplectic, "rebuild a frieze from an order-3 band", True),
        ("dual", _cmd_sl_dual, "projective dual band", False),
        ("gale", _cmd_sl_gale, "Gale dual band", False),
    ):
        p = slc.add_parser(name, help=blurb)
        _add_io(p)
        if frieze_out:
            _add_frieze_output(p)
        p.set_defaults(func=func)

    cl = groups.add_parser("cluster", help="seed mutation and the mutation belt")
    clc = cl.add_subparsers(dest="command", required=True)

    p = clc.add_parser("belt", help="alternate the two bipartite mutation classes")
    p.add_argument("--width", type=int, required=True)
    p.set_defaults(func=_cmd_cluster_belt)

    p = clc.add_parser("mutate", help="apply a mutation word to the initial seed")
    p.add_argument("--width", type=int, required=True)
    p.add_argument("--word", required=True, help="comma-separated vertex indices, 0-based")
    p.set_defaults(func=_cmd_cluster_mutate)

    p = clc.add_parser("formal", help="the frieze with formal seed entries")
    p.add_argument("--width", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_cluster_formal)

    p = clc.add_parser("evaluate", help="specialize seed values into a frieze")
    p.add_argument("--point", required=True, help="2*width values for the seed columns")
    p.add_argument("--path", default="", help="mutation word locating the seed, 0-based")
    _add_scalar(p)
    _add_io(p, reads=False)
    _add_frieze_output(p)
    p.set_defaults(func=_cmd_cluster_evaluate)

    pg = groups.add_parser("polygon", help="antiperiodic polygons in 4-space")
    pgc = pg.add_subparsers(dest="command", required=True)

    p = pgc.add_parser("from-frieze", help="slice a polygon out of a frieze")
    p.add_argument("--anchor", type=int, required=True, help="first row index of the slice")
    _add_io(p)
    p.set_defaults(func=_cmd_polygon_from_frieze)

    p = pgc.add_parser("to-frieze", help="pair vertices back into a frieze")
    _add_io(p)
    _add_frieze_output(p)
    p.set_defaults(func=_cmd_polygon_to_frieze)

    p = pgc.add_parser("normalize", help="rescale vertices to unit second-neighbor pairings")
    _add_io(p)
    p.set_defaults(func=_cmd_polygon_normalize)

    p = pgc.add_parser("coeffs", help="read the equation coefficients off a polygon")
    _add_io(p, writes=False)
    p.set_defaults(func=_cmd_polygon_coeffs)

    se = groups.add_parser("search", help="enumerate positive integer friezes")
    sec = se.add_subparsers(dest="command", required=True)

    p = sec.add_parser("enumerate", help="count friezes with seed entries up to a bound")
    p.add_argument("--width", type=int, required=True)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--dedup", choices=["none", "translation", "dihedral"], default="none")
    p.set_defaults(func=_cmd_search_enumerate)

    p = sec.add_parser("orbits", help="group frieze documents into dihedral orbits")
    p.add_argument("inputs", nargs="+", help="frieze document files")
    p.add_argument("--tolerance", type=float, default=None)
    p.set_defaults(func=_cmd_search_orbits)

    return top


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except VerificationFailed as e:
        print(str(e))
        return 1
    except formats.FormatError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except frieze.FriezeError as e:
        print(f"verification failed: {e}", file=sys.stderr)
        return 1
    except cluster.NonLaurentQuotient as e:
        print(f"verification failed: {e}", file=sys.stderr)
        return 1
    except (ValueError, KindMismatch, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
