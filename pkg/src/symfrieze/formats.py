"""Document types and lossless serialization for the CLI.

Two on-disk shapes are supported and auto-detected:

* canonical JSON, one object per file, sorted keys, no spaces, trailing
  newline; rationals as strings like ``-5/2``, Gaussian rationals as
  ``p/q+r/si``, complex floats as ``[re, im]`` pairs;
* a staggered text layout for friezes only: a header line, then one row
  per line from the top boundary down, each row indented one more space
  than the one above it, cells separated by spaces, black cells marked
  with a ``*`` prefix.

Loading a frieze document rebuilds the grid and replays the defining
local relations; a violated cell is reported by its grid index.
"""

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Optional, Tuple

from .diffeq import SymmetricDiffEq
from .frieze import FriezeError, FriezeGrid, check_local_rules
from .legendrian import Polygon, SymplecticForm
from .scalars import GaussianRational, ScalarKind, kind_by_name
from .slfrieze import SLFrieze

__all__ = [
    "FormatError",
    "InvalidDocument",
    "FriezeDocument",
    "SLDocument",
    "PolygonDocument",
    "EquationDocument",
    "document_of",
    "grid_of",
    "sl_document_of",
    "sl_of",
    "polygon_document_of",
    "polygon_of",
    "equation_document_of",
    "equation_of",
    "dumps",
    "loads",
    "render_frieze_text",
]


class FormatError(ValueError):
    """A document failed to parse; carries a position when known."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            message = f"{where}: {message}"
        super().__init__(message)


class InvalidDocument(FriezeError):
    """A document parsed but its entries break a defining relation."""


# ---------------------------------------------------------------------------
# scalar value encoding

def _encode_value(scalar: str, v) -> Any:
    if scalar == "complex-float":
        c = complex(v)
        return [c.real, c.imag]
    return str(v)


def _decode_value(scalar: str, raw) -> Any:
    if scalar == "rational":
        if isinstance(raw, (str, int)):
            return Fraction(raw)
    elif scalar == "gaussian":
        if isinstance(raw, int):
            return GaussianRational(Fraction(raw), Fraction(0))
        if isinstance(raw, str):
            return GaussianRational.parse(raw)
    elif scalar == "complex-float":
        if isinstance(raw, (list, tuple)) and len(raw) == 2:
            return complex(float(raw[0]), float(raw[1]))
        if isinstance(raw, (int, float, str)):
            return complex(str(raw).replace("i", "j").replace(" ", ""))
    raise ValueError(f"cannot read {raw!r} as a {scalar} value")


def _cell_token(scalar: str, v) -> str:
    if scalar == "complex-float":
        return str(complex(v))
    return str(v)


_SCALARS = ("rational", "gaussian", "complex-float")


def _check_scalar(name) -> str:
    if name not in _SCALARS:
        raise FormatError(f"unknown scalar kind {name!r}")
    return name


# ---------------------------------------------------------------------------
# document types

@dataclass(frozen=True)
class FriezeDocument:
    """A frieze over one fundamental domain, keyed by doubled indices."""

    width: int
    period: int
    scalar: str
    entries: Dict[Tuple[int, int], Any]
    provenance: Optional[Dict[str, Any]] = None


@dataclass(frozen=True)
class SLDocument:
    """A linear frieze band keyed by (first index, second index)."""

    order: int
    width: int
    period: int
    scalar: str
    entries: Dict[Tuple[int, int], Any]


@dataclass(frozen=True)
class PolygonDocument:
    """One period of an antiperiodic vertex sequence with its pairing."""

    period: int
    base: int
    scalar: str
    form_variant: str
    form_a: Any
    vertices: Tuple[Tuple[Any, Any, Any, Any], ...]


@dataclass(frozen=True)
class EquationDocument:
    """The two coefficient cycles of a self-dual difference equation."""

    a: Tuple[Any, ...]
    b: Tuple[Any, ...]
    scalar: str


# ---------------------------------------------------------------------------
# conversions to and from live objects

def document_of(grid: FriezeGrid, provenance: Optional[Dict[str, Any]] = None) -> FriezeDocument:
    """Capture display columns 0..2n-1, rows -1..w, of a grid."""
    n = grid.period
    entries = {}
    for o in range(-1, grid.width + 1):
        for x in range(2 * n):
            entries[(x - o, x + o)] = grid.cell(x, o)
    return FriezeDocument(grid.width, n, grid.kind.name, entries, provenance)


def grid_of(doc: FriezeDocument, tolerance: Optional[float] = None) -> FriezeGrid:
    """Rebuild the grid and check every defining local relation."""
    if doc.period != doc.width + 5:
        raise InvalidDocument(
            f"period {doc.period} does not match width {doc.width} + 5"
        )
    kind = kind_by_name(_check_scalar(doc.scalar), tolerance)
    cells = {}
    for (I, J), v in doc.entries.items():
        if (J - I) % 2:
            raise InvalidDocument(f"index ({I},{J}) mixes the two parities")
        o = (J - I) // 2
        if not -1 <= o <= doc.width:
            raise InvalidDocument(f"index ({I},{J}) lies outside the band")
        cells[((I + J) // 2, o)] = v
    try:
        grid = FriezeGrid.from_cells(kind, doc.width, cells)
    except ValueError as e:
        raise InvalidDocument(str(e)) from None
    bad = check_local_rules(grid)
    if bad:
        raise InvalidDocument(f"local relation fails at {bad[0]}")
    return grid


def sl_document_of(f: SLFrieze) -> SLDocument:
    entries = {(i, i + o): v for (i, o), v in f.cells()}
    return SLDocument(f.order, f.width, f.period, f.kind.name, entries)


def sl_of(doc: SLDocument, tolerance: Optional[float] = None) -> SLFrieze:
    if doc.period != doc.width + doc.order + 2:
        raise InvalidDocument(
            f"period {doc.period} does not match width {doc.width} "
            f"+ order {doc.order} + 2"
        )
    kind = kind_by_name(_check_scalar(doc.scalar), tolerance)
    cells = {(i, j - i): v for (i, j), v in doc.entries.items()}
    try:
        return SLFrieze(kind, doc.order, doc.width, cells)
    except ValueError as e:
        raise InvalidDocument(str(e)) from None


def polygon_document_of(p: Polygon) -> PolygonDocument:
    return PolygonDocument(
        p.period,
        p.base,
        p.form.kind.name,
        p.form.variant,
        p.form.a,
        p.vertices,
    )


def polygon_of(doc: PolygonDocument, tolerance: Optional[float] = None) -> Polygon:
    kind = kind_by_name(_check_scalar(doc.scalar), tolerance)
    form = SymplecticForm(doc.form_a, doc.form_variant, kind)
    try:
        return Polygon(doc.period, doc.base, tuple(doc.vertices), form)
    except ValueError as e:
        raise InvalidDocument(str(e)) from None


def equation_document_of(eq: SymmetricDiffEq) -> EquationDocument:
    return EquationDocument(tuple(eq.a), tuple(eq.b), eq.kind.name)


def equation_of(doc: EquationDocument, tolerance: Optional[float] = None) -> SymmetricDiffEq:
    kind = kind_by_name(_check_scalar(doc.scalar), tolerance)
    try:
        return SymmetricDiffEq(tuple(doc.a), tuple(doc.b), kind)
    except ValueError as e:
        raise InvalidDocument(str(e)) from None


# ---------------------------------------------------------------------------
# canonical JSON

def _payload(doc) -> Dict[str, Any]:
    if isinstance(doc, FriezeDocument):
        out = {
            "kind": "frieze",
            "width": doc.width,
            "period": doc.period,
            "scalar": doc.scalar,
            "entries": {
                f"{I},{J}": _encode_value(doc.scalar, v)
                for (I, J), v in doc.entries.items()
            },
        }
        if doc.provenance is not None:
            out["provenance"] = doc.provenance
        return out
    if isinstance(doc, SLDocument):
        return {
            "kind": "sl-frieze",
            "order": doc.order,
            "width": doc.width,
            "period": doc.period,
            "scalar": doc.scalar,
            "entries": {
                f"{i},{j}": _encode_value(doc.scalar, v)
                for (i, j), v in doc.entries.items()
            },
        }
    if isinstance(doc, PolygonDocument):
        return {
            "kind": "polygon",
            "period": doc.period,
            "base": doc.base,
            "scalar": doc.scalar,
            "form": {
                "variant": doc.form_variant,
                "a": _encode_value(doc.scalar, doc.form_a),
            },
            "vertices": [
                [_encode_value(doc.scalar, x) for x in v] for v in doc.vertices
            ],
        }
    if isinstance(doc, EquationDocument):
        return {
            "kind": "equation",
            "scalar": doc.scalar,
            "a": [_encode_value(doc.scalar, x) for x in doc.a],
            "b": [_encode_value(doc.scalar, x) for x in doc.b],
        }
    raise TypeError(f"not a document: {doc!r}")


def dumps(doc) -> str:
    """Canonical JSON: sorted keys, tight separators, one trailing newline."""
    return json.dumps(_payload(doc), sort_keys=True, separators=(",", ":")) + "\n"


def _parse_key(key: str) -> Tuple[int, int]:
    try:
        i, j = key.split(",")
        return int(i), int(j)
    except ValueError:
        raise FormatError(f"bad entry key {key!r}, expected 'i,j'") from None


def _want(obj: Dict[str, Any], key: str, types) -> Any:
    if key not in obj:
        raise FormatError(f"missing field {key!r}")
    v = obj[key]
    if not isinstance(v, types):
        raise FormatError(f"field {key!r} has the wrong type")
    return v


def _from_payload(obj: Dict[str, Any]):
    doc_kind = _want(obj, "kind", str)
    scalar = _check_scalar(_want(obj, "scalar", str))

    def val(raw, where: str):
        try:
            return _decode_value(scalar, raw)
        except (ValueError, ZeroDivisionError):
            raise FormatError(f"bad {scalar} value {raw!r} in {where}") from None

    if doc_kind == "frieze":
        entries = {
            _parse_key(k): val(raw, f"entry {k!r}")
            for k, raw in _want(obj, "entries", dict).items()
        }
        return FriezeDocument(
            _want(obj, "width", int),
            _want(obj, "period", int),
            scalar,
            entries,
            obj.get("provenance"),
        )
    if doc_kind == "sl-frieze":
        entries = {
            _parse_key(k): val(raw, f"entry {k!r}")
            for k, raw in _want(obj, "entries", dict).items()
        }
        return SLDocument(
            _want(obj, "order", int),
            _want(obj, "width", int),
            _want(obj, "period", int),
            scalar,
            entries,
        )
    if doc_kind == "polygon":
        form = _want(obj, "form", dict)
        vertices = []
        for r, row in enumerate(_want(obj, "vertices", list)):
            if not isinstance(row, list) or len(row) != 4:
                raise FormatError(f"vertex {r} is not a 4-vector")
            vertices.append(tuple(val(x, f"vertex {r}") for x in row))
        return PolygonDocument(
            _want(obj, "period", int),
            _want(obj, "base", int),
            scalar,
            _want(form, "variant", str),
            val(_want(form, "a", (str, int, list)), "form parameter"),
            tuple(vertices),
        )
    if doc_kind == "equation":
        return EquationDocument(
            tuple(val(x, "a") for x in _want(obj, "a", list)),
            tuple(val(x, "b") for x in _want(obj, "b", list)),
            scalar,
        )
    raise FormatError(f"unknown document kind {doc_kind!r}")


# ---------------------------------------------------------------------------
# staggered text format

_HEADER = re.compile(
    r"^frieze\s+width=(\d+)\s+period=(\d+)\s+scalar=([a-z-]+)\s*$"
)


def render_frieze_text(doc: FriezeDocument) -> str:
    """The staggered layout; black cells carry a ``*`` prefix."""
    n = doc.period
    lines = [f"frieze width={doc.width} period={doc.period} scalar={doc.scalar}"]
    for o in range(-1, doc.width + 1):
        cells = []
        for x in range(2 * n):
            v = doc.entries[(x - o, x + o)]
            mark = "*" if (x - o) % 2 == 0 else ""
            cells.append(mark + _cell_token(doc.scalar, v))
        lines.append(" " * (o + 1) + " ".join(cells))
    return "\n".join(lines) + "\n"


def _parse_frieze_text(text: str) -> FriezeDocument:
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise FormatError("empty input", line=1, column=1)
    m = _HEADER.match(lines[0])
    if not m:
        raise FormatError(
            "expected a header like 'frieze width=2 period=7 scalar=rational'",
            line=1,
            column=1,
        )
    width, period, scalar = int(m.group(1)), int(m.group(2)), m.group(3)
    if scalar not in _SCALARS:
        raise FormatError(f"unknown scalar kind {scalar!r}", line=1, column=1)
    rows = lines[1:]
    if len(rows) != width + 2:
        raise FormatError(
            f"expected {width + 2} rows for width {width}, got {len(rows)}",
            line=len(lines),
            column=1,
        )
    entries = {}
    for r, raw in enumerate(rows):
        o = r - 1
        lineno = r + 2
        indent = len(raw) - len(raw.lstrip(" "))
        if indent != o + 1:
            raise FormatError(
                f"row at offset {o} should be indented by {o + 1} spaces",
                line=lineno,
                column=1,
            )
        tokens = list(re.finditer(r"\S+", raw))
        if len(tokens) != 2 * period:
            raise FormatError(
                f"row at offset {o} needs {2 * period} cells, got {len(tokens)}",
                line=lineno,
                column=1,
            )
        for x, tok in enumerate(tokens):
            col = tok.start() + 1
            word = tok.group()
            black = (x - o) % 2 == 0
            if word.startswith("*") != black:
                want = "a black marker" if black else "no black marker"
                raise FormatError(
                    f"cell at column {x}, offset {o} should have {want}",
                    line=lineno,
                    column=col,
                )
            if black:
                word = word[1:]
            try:
                v = _decode_value(scalar, word)
            except (ValueError, ZeroDivisionError):
                raise FormatError(
                    f"cannot parse {word!r} as a {scalar} value",
                    line=lineno,
                    column=col,
                ) from None
            entries[(x - o, x + o)] = v
    return FriezeDocument(width, period, scalar, entries)


def loads(text: str):
    """Parse a document, auto-detecting canonical JSON vs. staggered text."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as e:
            raise FormatError(e.msg, line=e.lineno, column=e.colno) from None
        if not isinstance(obj, dict):
            raise FormatError("top-level JSON value must be an object")
        return _from_payload(obj)
    return _parse_frieze_text(text)
