from fractions import Fraction

import pytest

from symfrieze.diffeq import SymmetricDiffEq
from symfrieze.formats import (
    FormatError,
    FriezeDocument,
    InvalidDocument,
    document_of,
    dumps,
    equation_document_of,
    equation_of,
    grid_of,
    loads,
    polygon_document_of,
    polygon_of,
    render_frieze_text,
    sl_document_of,
    sl_of,
)
from symfrieze.frieze import propagate_from_coeffs
from symfrieze.legendrian import polygon_from_frieze
from symfrieze.scalars import COMPLEX
from symfrieze.slfrieze import black_of

from conftest import WIDTH2_COEFFS


@pytest.fixture(scope="module")
def frieze_doc(width2_int):
    provenance = {"coefficients": {"a": list(WIDTH2_COEFFS[0]), "b": list(WIDTH2_COEFFS[1])}}
    return document_of(width2_int, provenance=provenance)


def test_json_round_trip(frieze_doc, width2_int):
    blob = dumps(frieze_doc)
    doc = loads(blob)
    assert grid_of(doc) == width2_int
    assert dumps(doc) == blob
    assert doc.provenance == frieze_doc.provenance
    assert blob.endswith("\n") and '": ' not in blob


def test_text_round_trip(frieze_doc, width2_int):
    text = render_frieze_text(frieze_doc)
    lines = text.splitlines()
    assert lines[0] == "frieze width=2 period=7 scalar=rational"
    assert not lines[1].startswith(" ")
    assert lines[2].startswith(" ")
    assert "*6" in text and "*1" in text
    doc = loads(text)
    assert grid_of(doc) == width2_int
    assert render_frieze_text(doc) == text


def test_gaussian_round_trips(width1_gauss):
    doc = document_of(width1_gauss)
    blob = dumps(doc)
    assert grid_of(loads(blob)) == width1_gauss
    assert dumps(loads(blob)) == blob
    text = render_frieze_text(doc)
    assert grid_of(loads(text)) == width1_gauss


def test_complex_round_trips():
    g = propagate_from_coeffs((1, 3, 2) * 2, (1, 2, 5) * 2, COMPLEX)
    doc = document_of(g)
    blob = dumps(doc)
    assert grid_of(loads(blob)) == g
    assert dumps(loads(blob)) == blob
    assert grid_of(loads(render_frieze_text(doc))) == g


# ---------------------------------------------------------------------------
# rejection paths

def test_corrupt_entry_is_reported(frieze_doc):
    bad = dict(frieze_doc.entries)
    bad[(4, 4)] = Fraction(99)
    with pytest.raises(InvalidDocument, match="local relation fails"):
        grid_of(FriezeDocument(2, 7, "rational", bad))


def test_period_mismatch_rejected(frieze_doc):
    with pytest.raises(InvalidDocument):
        grid_of(FriezeDocument(2, 8, "rational", frieze_doc.entries))


def test_parity_mix_rejected():
    with pytest.raises(InvalidDocument, match="parities"):
        grid_of(FriezeDocument(2, 7, "rational", {(0, 1): Fraction(1)}))


def parse_error(text):
    with pytest.raises(FormatError) as exc:
        loads(text)
    return exc.value


def test_parse_errors_carry_positions(frieze_doc):
    assert parse_error("nonsense\n").line == 1

    lines = render_frieze_text(frieze_doc).splitlines()
    overdented = "\n".join([lines[0], " " + lines[1]] + lines[2:]) + "\n"
    assert parse_error(overdented).line == 2

    extra_cell = "\n".join(lines[:2] + [lines[2] + " 7"] + lines[3:]) + "\n"
    assert parse_error(extra_cell).line == 3

    unmarked = "\n".join(lines[:2] + [lines[2].replace("*6", "6", 1)] + lines[3:]) + "\n"
    err = parse_error(unmarked)
    assert err.line == 3 and err.column is not None

    garbled = "\n".join(lines[:2] + [lines[2].replace("*6", "*x", 1)] + lines[3:]) + "\n"
    assert parse_error(garbled).column is not None


def test_json_errors():
    assert parse_error('{"kind": "frieze",}\n').line is not None
    parse_error('{"kind":"mystery","scalar":"rational"}\n')
    parse_error(
        '{"kind":"frieze","scalar":"rational","width":2,'
        '"entries":{"0,0":"1/0"},"period":7}\n'
    )


# ---------------------------------------------------------------------------
# the other three document kinds

def test_sl_round_trip(width2_int):
    f = black_of(width2_int)
    blob = dumps(sl_document_of(f))
    assert sl_of(loads(blob)) == f
    assert dumps(loads(blob)) == blob


def test_polygon_round_trip(width2_int):
    p = polygon_from_frieze(width2_int, 4)
    blob = dumps(polygon_document_of(p))
    assert polygon_of(loads(blob)) == p
    assert dumps(loads(blob)) == blob


def test_equation_round_trip():
    eq = SymmetricDiffEq(*WIDTH2_COEFFS)
    blob = dumps(equation_document_of(eq))
    assert equation_of(loads(blob)) == eq
    assert dumps(loads(blob)) == blob
