import random
from fractions import Fraction

import pytest

from conftest import SIGNED_COEFFS, WIDTH1_COEFFS, WIDTH2_COEFFS, WIDTH3_COEFFS
from symfrieze.frieze import (
    FriezeGrid,
    GridIndex,
    NotClosed,
    NotSuperperiodic,
    Underdetermined,
    ZeroPivot,
    ZigZag,
    black_block,
    check_glide,
    check_local_rules,
    check_periodicity,
    check_tame,
    dihedral_images,
    entry_by_determinant,
    extend_through_zero,
    extract_coeffs,
    find_nonzero_double_zigzag,
    mirror_grid,
    propagate_from_coeffs,
    propagate_from_zigzag,
    sign_twist,
    translate,
)
from symfrieze.scalars import RATIONAL


def F(values):
    return tuple(Fraction(v) for v in values)


# ---------------------------------------------------------------------------
# indices and zig-zags

def test_grid_index_geometry():
    idx = GridIndex(2, 4)
    assert idx.x == 3 and idx.offset == 1
    assert idx.is_black
    assert not GridIndex(1, 3).is_black
    with pytest.raises(ValueError):
        GridIndex(0, 1)  # mixed parity


def test_straight_zigzag_shape():
    z = ZigZag.straight((1, 2), width=1, start_col=1)
    assert z.shape == (1,)
    assert z.cluster_values() == (1, 2)
    z2 = ZigZag.straight((1, 2, 3, 4), width=2)
    assert z2.shape == (1, 1)


def test_zigzag_rejects_broken_stairs():
    # rows must sit on adjacent columns
    good = ZigZag.straight((1, 1, 1, 1, 1, 1), width=3)
    assert good.width == 3
    entries = list(good.entries)
    moved = entries[:2] + [(GridIndex(e[0].I - 8, e[0].J - 8), e[1]) for e in entries[2:]]
    with pytest.raises(ValueError):
        ZigZag(3, tuple(moved))


# ---------------------------------------------------------------------------
# propagation from coefficient cycles

def test_width1_rows(width1_int):
    assert width1_int.row_cycle(0) == F((1, 2, 3, 5, 2, 1) * 2)
    assert width1_int.row_cycle(-1) == F((1,) * 12)
    assert width1_int.row_cycle(1) == F((1,) * 12)


def test_width2_rows(width2_int):
    assert width2_int.row_cycle(0) == F((6, 14, 3, 1, 1, 2, 3, 6, 4, 5, 2, 1, 1, 3))
    assert width2_int.row_cycle(1) == F((6, 4, 5, 2, 1, 1, 3, 6, 14, 3, 1, 1, 2, 3))


def test_width3_rows(width3_int):
    assert width3_int.row_cycle(0) == F(
        (2, 5, 4, 6, 4, 6, 3, 2, 1, 1, 4, 30, 10, 4, 1, 1)
    )
    assert width3_int.row_cycle(1) == F((1, 3, 14, 10, 20, 6, 3, 1) * 2)
    assert width3_int.row_cycle(2) == F(
        (1, 1, 4, 30, 10, 4, 1, 1, 2, 5, 4, 6, 4, 6, 3, 2)
    )


def test_signed_rows(width1_signed):
    assert width1_signed.row_cycle(0) == F((0, -1, 1, -2, -1, -1) * 2)


def test_signed_pairing_must_match():
    # pairing the b cycle one step off does not close
    with pytest.raises(NotSuperperiodic):
        propagate_from_coeffs(SIGNED_COEFFS[0], (-1, -2, -1, -1, -2, -1))


def test_all_ones_width1_is_not_superperiodic():
    with pytest.raises(NotSuperperiodic):
        propagate_from_coeffs((1,) * 6, (1,) * 6)


def test_width0_closes():
    g = propagate_from_coeffs((1,) * 5, (1,) * 5)
    assert g.width == 0
    a, b = extract_coeffs(g)
    assert all(v == 1 for v in a + b)


@pytest.mark.parametrize(
    "coeffs,period",
    [
        (WIDTH1_COEFFS, 6),
        (WIDTH2_COEFFS, 14),
        (WIDTH3_COEFFS, 16),
        (SIGNED_COEFFS, 6),
    ],
)
def test_fixture_validity(coeffs, period):
    g = propagate_from_coeffs(*coeffs)
    assert check_local_rules(g) == ()
    assert check_tame(g).ok
    assert check_glide(g)
    assert check_periodicity(g) == period


def test_extract_round_trip(width2_int, width1_signed):
    assert extract_coeffs(width2_int) == (F(WIDTH2_COEFFS[0]), F(WIDTH2_COEFFS[1]))
    assert extract_coeffs(width1_signed) == (F(SIGNED_COEFFS[0]), F(SIGNED_COEFFS[1]))


# ---------------------------------------------------------------------------
# grid access

def test_antiperiodic_sign(width2_int):
    v = width2_int.black(0, 1)
    assert width2_int.get(0, 2 + 2 * 7) == -v
    assert width2_int.get(0 + 2 * 7, 2 + 2 * 7) == v


def test_guard_rows_are_zero(width2_int):
    assert width2_int.get(5, 1) == 0  # offset -2
    assert width2_int.get(9, 1) == 0  # offset -4


def test_with_entry_replaces_one_cell(width2_int):
    idx = GridIndex(2, 4)
    changed = width2_int.with_entry(idx, Fraction(99))
    assert changed.get_entry(idx) == 99
    assert changed != width2_int
    assert check_local_rules(changed) != ()


def test_cells_cover_fundamental_domain(width1_int):
    seen = dict(width1_int.cells())
    assert len(seen) == 12 * 3


# ---------------------------------------------------------------------------
# zig-zag propagation

def test_zigzag_matches_coeff_route(width1_int):
    g = propagate_from_zigzag((1, 1), 1)
    assert any(g == translate(width1_int, t) for t in range(6))
    g2 = propagate_from_zigzag((1, 2), 1)
    assert any(g2 == h for h in dihedral_images(width1_int))


def test_zigzag_ones_width2():
    g = propagate_from_zigzag((1, 1, 1, 1), 2)
    assert g.row_cycle(0) == F((2, 1, 1, 2, 4, 11, 4, 2, 1, 1, 2, 6, 5, 6))
    a, b = extract_coeffs(g)
    assert propagate_from_coeffs(a, b) == g


def test_zigzag_zero_pivot():
    with pytest.raises(ZeroPivot):
        propagate_from_zigzag((0, 1), 1)


def test_zigzag_wrong_count():
    with pytest.raises(ValueError):
        propagate_from_zigzag((1, 1, 1), 2)


# ---------------------------------------------------------------------------
# determinant entry formula

def test_entry_by_determinant(width2_int):
    a, b = WIDTH2_COEFFS
    assert entry_by_determinant(a, b, 0, 1) == width2_int.black(0, 1)
    assert entry_by_determinant(a, b, 0, 0, white=True) == Fraction(14)


# ---------------------------------------------------------------------------
# sign twist

TWIN_ROWS = {
    0: (-1, 1, -2, 5, -4, 6, -4, 6, -3, 2, -1, 1, -4, 30, -10, 4),
    1: (3, 1, 1, 3, 14, 10, 20, 6, 3, 1, 1, 3, 14, 10, 20, 6),
    2: (-3, 2, -1, 1, -4, 30, -10, 4, -1, 1, -2, 5, -4, 6, -4, 6),
}


def twin_grid():
    cells = {(x, o): TWIN_ROWS[o][x] for o in TWIN_ROWS for x in range(16)}
    return FriezeGrid.from_cells(RATIONAL, 3, cells)


def test_twist_produces_signed_twin(width3_int):
    assert sign_twist(width3_int) == translate(twin_grid(), 7)


def test_twist_involution(width3_int, width2_int):
    assert sign_twist(sign_twist(width3_int)) == width3_int
    assert sign_twist(sign_twist(width2_int)) == width2_int


def test_twist_preserves_tame(width3_int):
    assert check_tame(sign_twist(width3_int)).ok


# ---------------------------------------------------------------------------
# symmetries

def test_translate_cycles(width2_int):
    assert translate(width2_int, 1) != width2_int
    assert translate(width2_int, 7) == width2_int
    assert translate(translate(width2_int, 3), 4) == width2_int


def test_mirror_involution(width2_int):
    assert mirror_grid(mirror_grid(width2_int)) == width2_int


def test_dihedral_image_count(width1_int):
    images = list(dihedral_images(width1_int))
    assert len(images) == 12
    assert all(check_tame(h).ok for h in images)


def test_black_block_is_4x4(width2_int):
    m = black_block(width2_int, 0, 3)
    assert m.nrows == 4 and m.ncols == 4
    assert m[3, 3] == width2_int.black(3, 3)


# ---------------------------------------------------------------------------
# degenerate grids

def test_constant_grid(width1_const):
    assert check_tame(width1_const).ok
    assert check_periodicity(width1_const) == 2


def test_alternating_middle_row(width7_zero):
    assert check_local_rules(width7_zero) == ()
    assert check_tame(width7_zero).ok
    assert check_periodicity(width7_zero) == 2


def test_null_interior_not_tame(width2_null):
    assert check_local_rules(width2_null) == ()
    result = check_tame(width2_null)
    assert not result.ok
    assert result.window.size == 3


def test_gauss_grid_not_tame(width1_gauss):
    assert check_local_rules(width1_gauss) == ()
    result = check_tame(width1_gauss)
    assert not result.ok
    assert result.window.size == 4
    assert result.window.value == width1_gauss.kind.from_int(-1)


def test_degenerate_grids_have_no_seed(width7_zero, width1_const):
    assert find_nonzero_double_zigzag(width7_zero) is None
    assert find_nonzero_double_zigzag(width1_const) is None


def test_generic_grid_has_seed(width2_int):
    z = find_nonzero_double_zigzag(width2_int)
    assert z is not None
    assert all(v != 0 for _, v in z.entries)


def test_extension_through_zero():
    # continuing a signed width-1 row across a zero forces a unique value
    assert extend_through_zero((-1, 1, -2, -1, -1, 0, -1), 1) == [Fraction(1)]


def test_underdetermined_extension():
    with pytest.raises(Underdetermined):
        extend_through_zero((0, 0, 0), 1)


# ---------------------------------------------------------------------------
# random consistency

def test_random_zigzag_grids_are_tame():
    rng = random.Random(23)
    for _ in range(10):
        w = rng.randint(1, 3)
        vals = [rng.randint(1, 4) for _ in range(2 * w)]
        g = propagate_from_zigzag(vals, w)
        assert check_local_rules(g) == ()
        assert check_tame(g).ok
        assert check_glide(g)
        a, b = extract_coeffs(g)
        assert propagate_from_coeffs(a, b) == g
