"""Symplectic 2-friezes on a doubled integer lattice.

A frieze of width w repeats with period n = w + 5 along its diagonals.
Entries sit at points (I, J) with I and J of equal parity.  Even pairs
are black cells d[i, j] (I = 2i, J = 2j); odd pairs are white cells
d[i+1/2, j+1/2].  Rows are indexed by the offset o = (J - I) / 2: the
interior rows are 0 <= o < w, framed by boundary rows of ones at o = -1
and o = w, with three implicit rows of zeros beyond each boundary.  The
display column of a cell is x = (I + J) / 2.

With A, B the west and east neighbours of a cell v, and C, D its
neighbours in the rows above and below (A = (I-1, J-1), B = (I+1, J+1),
C = (I+1, J-1), D = (I-1, J+1)), the local rules read

    white cells:  v   = A*B - C*D
    black cells:  v*v = A*B - C*D

Every grid here is antiperiodic, d[i, j+n] = -d[i, j], hence genuinely
periodic of length 2n in the display direction.  One fundamental domain
(0 <= I < 4n, -2 <= J - I <= 2w) is stored; `get` reduces every other
index to it with the appropriate sign.
"""

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Optional, Sequence, Tuple

from .scalars import RATIONAL, ScalarKind


class FriezeError(ValueError):
    """Base class for structural failures of frieze operations."""


class NotSuperperiodic(FriezeError):
    """Coefficient propagation failed to close on some diagonal.

    `index` is the first diagonal whose closure entries are wrong.
    """

    def __init__(self, index: int):
        self.index = index
        super().__init__(f"diagonal {index} does not close up")


class ZeroPivot(FriezeError):
    """Propagation would divide by a zero cell.  `index` locates it."""

    def __init__(self, index: "GridIndex"):
        self.index = index
        super().__init__(f"zero divisor at {index}")


class NotClosed(FriezeError):
    """Column propagation did not return to its start after 2n steps."""


class Underdetermined(FriezeError):
    """Not enough trailing entries to force the next value."""


class UnsupportedWidth(FriezeError):
    """Operation is only implemented for a restricted set of widths."""


@dataclass(frozen=True)
class GridIndex:
    """A lattice point in doubled coordinates.

    Black cells have I, J both even and stand for d[I/2, J/2]; white
    cells have both odd and stand for d[(I-1)/2 + 1/2, (J-1)/2 + 1/2].
    """

    I: int
    J: int

    def __post_init__(self):
        if (self.I - self.J) % 2 != 0:
            raise ValueError(f"mixed parity index ({self.I}, {self.J})")

    @property
    def x(self) -> int:
        return (self.I + self.J) // 2

    @property
    def offset(self) -> int:
        return (self.J - self.I) // 2

    @property
    def is_black(self) -> bool:
        return self.I % 2 == 0

    def __str__(self) -> str:
        if self.is_black:
            return f"d[{self.I // 2},{self.J // 2}]"
        return f"d[{self.I // 2}+1/2,{self.J // 2}+1/2]"


@dataclass(frozen=True)
class MinorWindow:
    """One adjacent minor of the black subgrid, with its test value."""

    size: int
    i: int
    j: int
    value: object
    expected: object


@dataclass(frozen=True)
class TameResult:
    ok: bool
    window: Optional[MinorWindow] = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class ZigZag:
    """A double zig-zag: one white and one black cell per interior row.

    `entries` lists (position, value) pairs row by row from o = 0 to
    o = w - 1, west cell before east cell.  The two cells of a row sit
    in adjacent columns and consecutive rows overlap in at least one
    column, which is exactly the six local configurations.
    """

    width: int
    entries: Tuple[Tuple[GridIndex, object], ...]

    def __post_init__(self):
        w = self.width
        if w < 1:
            raise ValueError("zig-zag needs width >= 1")
        if len(self.entries) != 2 * w:
            raise ValueError(f"expected {2 * w} cells, got {len(self.entries)}")
        for o in range(w):
            west, east = self.entries[2 * o][0], self.entries[2 * o + 1][0]
            if west.offset != o or east.offset != o:
                raise ValueError(f"row {o} cells carry wrong offsets")
            if east.x != west.x + 1:
                raise ValueError(f"row {o} cells are not adjacent")
            if o and abs(west.x - self.entries[2 * (o - 1)][0].x) > 1:
                raise ValueError(f"rows {o - 1} and {o} are not linked")

    @classmethod
    def straight(cls, values: Sequence, width: int, start_col: int = 1) -> "ZigZag":
        """Two-column shape at columns (start_col, start_col + 1).

        `values` come in cluster order: the w white values first, then
        the w black values, each list read from row 0 downwards.
        """
        vals = list(values)
        if len(vals) != 2 * width:
            raise ValueError(f"expected {2 * width} values, got {len(vals)}")
        whites, blacks = vals[:width], vals[width:]
        entries = []
        for o in range(width):
            c = start_col
            if (c - o) % 2 != 0:  # white cell west
                pair = ((c, whites[o]), (c + 1, blacks[o]))
            else:
                pair = ((c, blacks[o]), (c + 1, whites[o]))
            for x, v in pair:
                entries.append((GridIndex(x - o, x + o), v))
        return cls(width, tuple(entries))

    @property
    def shape(self) -> Tuple[int, ...]:
        """West column of each row, top to bottom."""
        return tuple(self.entries[2 * o][0].x for o in range(self.width))

    def cluster_values(self) -> Tuple:
        """Values in cluster order (whites top to bottom, then blacks)."""
        whites, blacks = [], []
        for idx, val in self.entries:
            (blacks if idx.is_black else whites).append(val)
        return tuple(whites + blacks)


class FriezeGrid:
    """One superperiodic frieze, stored over a fundamental domain.

    Cells are held in a dict keyed by (I mod 4n, J - I); each value is
    stored at both I and I + 2n so lookups never need the antiperiodic
    sign for the stored band.  Out-of-band row offsets are reduced by
    multiples of n with a sign flip per step, guard rows returning the
    scalar zero.
    """

    __slots__ = ("kind", "width", "period", "_cells")

    def __init__(self, kind: ScalarKind, width: int, cells: dict):
        self.kind = kind
        self.width = width
        self.period = width + 5
        self._cells = cells

    @classmethod
    def from_cells(cls, kind: ScalarKind, width: int, cells) -> "FriezeGrid":
        """Build a grid from display-coordinate cells {(x, o): value}.

        All interior rows 0 <= o < width must be present with 2(w + 5)
        consecutive columns each; boundary rows o = -1 and o = w may be
        given (taken verbatim) or omitted (filled with ones).
        """
        n = width + 5
        rows = {}
        for (x, o), v in dict(cells).items():
            if not -1 <= o <= width:
                raise ValueError(f"row offset {o} outside [-1, {width}]")
            rows.setdefault(o, {})[x] = kind.coerce(v)
        for o in range(width):
            if o not in rows:
                raise ValueError(f"interior row {o} missing")
        one = kind.one()
        for o in (-1, width):
            if o not in rows:
                rows[o] = {x: one for x in range(2 * n)}
        store = {}
        for o, row in rows.items():
            xs = sorted(row)
            if len(xs) != 2 * n or xs[-1] - xs[0] != 2 * n - 1:
                raise ValueError(
                    f"row {o} needs {2 * n} consecutive columns, got {len(xs)}"
                )
            for x, v in row.items():
                I = x - o
                store[(I % (4 * n), 2 * o)] = v
                store[((I + 2 * n) % (4 * n), 2 * o)] = v
        return cls(kind, width, store)

    def get(self, I: int, J: int):
        """Entry at (I, J), reduced into the stored band with its sign."""
        R = J - I
        if R % 2 != 0:
            raise ValueError(f"mixed parity index ({I}, {J})")
        n = self.period
        steps = (R + 8) // (2 * n)
        Rp = R - steps * 2 * n
        if Rp in (-8, -6, -4):
            return self.kind.zero()
        v = self._cells[(I % (4 * n), Rp)]
        return v if steps % 2 == 0 else -v

    def get_entry(self, idx: GridIndex):
        return self.get(idx.I, idx.J)

    def black(self, i: int, j: int):
        """d[i, j]."""
        return self.get(2 * i, 2 * j)

    def white(self, i: int, j: int):
        """d[i + 1/2, j + 1/2]."""
        return self.get(2 * i + 1, 2 * j + 1)

    def cell(self, x: int, o: int):
        """Entry in display coordinates (column x, row offset o)."""
        return self.get(x - o, x + o)

    def row_cycle(self, o: int, start: int = 0) -> Tuple:
        """One display period of row o, starting at column `start`."""
        return tuple(self.cell(x, o) for x in range(start, start + 2 * self.period))

    def cells(self) -> Iterator[Tuple[Tuple[int, int], object]]:
        """All cells of the display fundamental domain, row by row."""
        for o in range(-1, self.width + 1):
            for x in range(2 * self.period):
                yield (x, o), self.cell(x, o)

    def with_entry(self, idx: GridIndex, value) -> "FriezeGrid":
        """Copy of the grid with one cell replaced (guards excluded)."""
        n = self.period
        R = idx.J - idx.I
        steps = (R + 8) // (2 * n)
        Rp = R - steps * 2 * n
        if Rp in (-8, -6, -4):
            raise ValueError(f"{idx} lies in a guard row")
        v = self.kind.coerce(value)
        if steps % 2 != 0:
            v = -v
        store = dict(self._cells)
        store[(idx.I % (4 * n), Rp)] = v
        store[((idx.I + 2 * n) % (4 * n), Rp)] = v
        return FriezeGrid(self.kind, self.width, store)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FriezeGrid):
            return NotImplemented
        if self.kind.name != other.kind.name or self.width != other.width:
            return False
        return all(
            self.kind.eq(v, other.cell(x, o)) for (x, o), v in self.cells()
        )

    __hash__ = None

    def __repr__(self) -> str:
        return (
            f"FriezeGrid(width={self.width}, period={self.period}, "
            f"scalar={self.kind.name})"
        )


def get_entry(grid: FriezeGrid, idx: GridIndex):
    """Entry of `grid` at `idx`, guards and antiperiodic images included."""
    return grid.get_entry(idx)


def propagate_from_coeffs(a: Sequence, b: Sequence, kind: ScalarKind = RATIONAL) -> FriezeGrid:
    """Grow the full grid of width len(a) - 5 from one coefficient period.

    Each diagonal starts as (0, 0, 0, 1) and runs the linear recurrence
    V[j] = a[j] V[j-1] - b[j] V[j-2] + a[j-1] V[j-3] - V[j-4].  The
    diagonal must then hit (1, 0, 0, 0); the first index where it does
    not raises NotSuperperiodic.  White cells are filled in as the 2x2
    minors of the black grid.
    """
    n = len(a)
    if len(b) != n:
        raise ValueError("coefficient lists must share one period")
    if n < 5:
        raise ValueError("period must be at least 5")
    w = n - 5
    A = [kind.coerce(v) for v in a]
    B = [kind.coerce(v) for v in b]
    zero, one = kind.zero(), kind.one()

    diags = []
    for i in range(n):
        V = {i - 4: zero, i - 3: zero, i - 2: zero, i - 1: one}
        for j in range(i, i + w + 4):
            V[j] = (
                A[j % n] * V[j - 1]
                - B[j % n] * V[j - 2]
                + A[(j - 1) % n] * V[j - 3]
                - V[j - 4]
            )
        closed = kind.eq(V[i + w], one) and all(
            kind.is_zero(V[i + w + t]) for t in (1, 2, 3)
        )
        if not closed:
            raise NotSuperperiodic(i)
        diags.append(V)

    def blk(i: int, j: int):
        r = i % n
        return diags[r][j - (i - r)]

    cells = {}
    for x in range(2 * n):
        for o in range(w):
            if (x - o) % 2 == 0:
                i, j = (x - o) // 2, (x + o) // 2
                cells[(x, o)] = blk(i, j)
            else:
                i, j = (x - o - 1) // 2, (x + o - 1) // 2
                cells[(x, o)] = blk(i, j) * blk(i + 1, j + 1) - blk(i + 1, j) * blk(
                    i, j + 1
                )
    return FriezeGrid.from_cells(kind, w, cells)


def propagate_from_zigzag(values, width: Optional[int] = None, kind: ScalarKind = RATIONAL) -> FriezeGrid:
    """Grow the full grid from a double zig-zag of cell values.

    `values` is either a ZigZag or a flat cluster-ordered sequence (the
    w white values, then the w black values) placed on the standard
    two-column shape.  The shape is first straightened westwards, each
    step solving one local rule; then the straight column pair is
    propagated east for a full display period.  ZeroPivot reports the
    cell a step would divide by; NotClosed means the propagation did
    not come back to its start, i.e. the input values are inconsistent.
    """
    if isinstance(values, ZigZag):
        zz = values
    else:
        if width is None:
            raise ValueError("width is required with flat zig-zag values")
        zz = ZigZag.straight(values, width)
    w = zz.width
    n = w + 5
    one = kind.one()

    s = list(zz.shape)
    vals = [
        [kind.coerce(zz.entries[2 * o][1]), kind.coerce(zz.entries[2 * o + 1][1])]
        for o in range(w)
    ]

    def at(o: int, col: int):
        # value of row o at column col; valid only next to current cells
        if o < 0 or o >= w:
            return one
        if col == s[o]:
            return vals[o][0]
        if col == s[o] + 1:
            return vals[o][1]
        raise AssertionError("column out of reach during redress")

    target = min(s)
    while max(s) > target:
        m = max(s)
        o = s.index(m)
        pivot, east = vals[o]
        above, below = at(o - 1, m), at(o + 1, m)
        if kind.is_zero(east):
            raise ZeroPivot(GridIndex(m + 1 - o, m + 1 + o))
        lhs = pivot * pivot if (m - o) % 2 == 0 else pivot
        vals[o] = [(lhs + above * below) / east, pivot]
        s[o] = m - 1

    c = target
    cols = {c: [vals[o][0] for o in range(w)], c + 1: [vals[o][1] for o in range(w)]}
    for x in range(c + 2, c + 2 * n + 2):
        prev, cur = cols[x - 2], cols[x - 1]
        nxt = []
        for o in range(w):
            if kind.is_zero(prev[o]):
                raise ZeroPivot(GridIndex(x - 2 - o, x - 2 + o))
            above = cur[o - 1] if o > 0 else one
            below = cur[o + 1] if o < w - 1 else one
            lhs = cur[o] * cur[o] if (x - 1 - o) % 2 == 0 else cur[o]
            nxt.append((lhs + above * below) / prev[o])
        cols[x] = nxt
    for shift in (0, 1):
        back, start = cols[c + 2 * n + shift], cols[c + shift]
        if not all(kind.eq(back[o], start[o]) for o in range(w)):
            raise NotClosed("propagation does not close after one period")

    cells = {
        (x, o): cols[x][o] for x in range(c, c + 2 * n) for o in range(w)
    }
    return FriezeGrid.from_cells(kind, w, cells)


def extract_coeffs(grid: FriezeGrid) -> Tuple[Tuple, Tuple]:
    """One period of (a, b): a[i] = d[i, i], b[i] = d[i-1/2, i-1/2]."""
    n = grid.period
    a = tuple(grid.black(i, i) for i in range(n))
    b = tuple(grid.white(i - 1, i - 1) for i in range(n))
    return a, b


def check_local_rules(grid: FriezeGrid) -> Tuple[GridIndex, ...]:
    """Indices of all cells whose local rule fails.

    Windows centred on every stored row and on the first guard row each
    side are tested; further rows hold identically.
    """
    k = grid.kind
    bad = []
    for x in range(2 * grid.period):
        for o in range(-2, grid.width + 2):
            idx = GridIndex(x - o, x + o)
            v = grid.get_entry(idx)
            ab = grid.get(idx.I - 1, idx.J - 1) * grid.get(idx.I + 1, idx.J + 1)
            cd = grid.get(idx.I + 1, idx.J - 1) * grid.get(idx.I - 1, idx.J + 1)
            lhs = v * v if idx.is_black else v
            if not k.eq(lhs, ab - cd):
                bad.append(idx)
    return tuple(bad)


def check_tame(grid: FriezeGrid) -> TameResult:
    """Test the three families of adjacent minors of the black grid.

    Every 3x3 minor must equal its central entry, every 4x4 must equal
    one, every 5x5 must equal zero.  Windows overlapping the guard rows
    and the antiperiodic seam are included; one period of positions
    covers all distinct conditions.  The first failing window, if any,
    is reported.
    """
    from .linalg import Matrix

    k = grid.kind
    n = grid.period
    one, zero = k.one(), k.zero()
    for m in (3, 4, 5):
        for i in range(n):
            for j in range(i - m - 3, i + n - m - 3):
                mat = Matrix(
                    k, [[grid.black(i + r, j + c) for c in range(m)] for r in range(m)]
                )
                v = mat.det()
                if m == 3:
                    expected = grid.black(i + 1, j + 1)
                elif m == 4:
                    expected = one
                else:
                    expected = zero
                if not k.eq(v, expected):
                    return TameResult(False, MinorWindow(m, i, j, v, expected))
    return TameResult(True, None)


def check_glide(grid: FriezeGrid) -> bool:
    """Glide symmetry: the entry at (I, J) recurs at (J + 6, I + 2w + 4).

    In cell terms d[i, j] = d[j + 3, i + w + 2], half-integer indices
    included verbatim.  Applying the glide twice is the diagonal period.
    """
    s = 2 * grid.width + 4
    return all(
        grid.kind.eq(v, grid.get((x + o) + 6, (x - o) + s))
        for (x, o), v in grid.cells()
    )


def check_periodicity(grid: FriezeGrid) -> int:
    """Smallest display period: minimal even divisor p of 2n with
    d[i + p/2, j + p/2] equal to d[i, j] everywhere.  Odd shifts swap
    the two cell colours, so only even p qualify."""
    k = grid.kind
    two_n = 2 * grid.period
    for p in range(2, two_n + 1, 2):
        if two_n % p:
            continue
        if all(k.eq(v, grid.cell(x + p, o)) for (x, o), v in grid.cells()):
            return p
    raise AssertionError("grid is not periodic over its own domain")


def entry_by_determinant(a: Sequence, b: Sequence, i: int, j: int, kind: ScalarKind = RATIONAL, white: bool = False):
    """Interior entry straight from the coefficients, no propagation.

    Black (default): d[i, j] as the banded determinant of order
    j - i + 1.  White: d[i + 1/2, j + 1/2] from the symmetric banded
    determinant of the same order.  Requires 0 <= j - i < width.
    """
    from .diffeq import SymmetricDiffEq, band_determinant, white_band_determinant

    w = len(a) - 5
    if not 0 <= j - i < w:
        raise ValueError(f"offset {j - i} is not an interior row")
    eq = SymmetricDiffEq(tuple(a), tuple(b), kind)
    if white:
        return white_band_determinant(eq, i + 1, j + 1)
    return band_determinant(eq, i, j)


def sign_twist(grid: FriezeGrid) -> FriezeGrid:
    """Flip each black entry by the parity of its row: d[i, j] times
    (-1)**(j - i + 1), whites untouched.  An involution.  For odd width
    the result satisfies all local rules; for even width the flip
    fights the antiperiodic seam and only the involution survives.
    """
    cells = {}
    for (x, o), v in grid.cells():
        if (x - o) % 2 == 0 and o % 2 == 0:  # black cell, even row
            cells[(x, o)] = -v
        else:
            cells[(x, o)] = v
    return FriezeGrid.from_cells(grid.kind, grid.width, cells)


def extend_through_zero(prefix: Sequence, width: int, kind: ScalarKind = RATIONAL, starts_with_black: bool = False):
    """Forced continuation of a width-1 row past a zero divisor.

    `prefix` alternates white and black entries of the single interior
    row.  The next black entry x is pinned by the 3x3 tame minor when
    its x-coefficient is nonzero, else by the 4x4 minor equal to one;
    a preceding white entry is recovered afterwards from the white
    local rule.  Returns the forced entries up to and including the
    next black.  Underdetermined means the prefix is too short for the
    minor that is needed.
    """
    if width != 1:
        raise UnsupportedWidth("forced extension is a width-1 construction")
    vals = [kind.coerce(v) for v in prefix]
    if starts_with_black:
        blacks = vals[0::2]
        next_black = len(vals) % 2 == 0
    else:
        blacks = vals[1::2]
        next_black = len(vals) % 2 == 1
    if len(blacks) < 2:
        raise Underdetermined("need two trailing black entries")
    one = kind.one()
    a1, a2 = blacks[-2], blacks[-1]

    c1 = a1 * a2 - one
    if not kind.is_zero(c1):
        x = (a1 + a2) / c1
    else:
        if len(blacks) < 3:
            raise Underdetermined("degenerate 3x3 minor and no third black entry")
        from .linalg import Matrix

        a0 = blacks[-3]
        zero = kind.zero()

        def det4(x):
            return Matrix(
                kind,
                [
                    [a0, one, zero, zero],
                    [one, a1, one, zero],
                    [zero, one, a2, one],
                    [zero, zero, one, x],
                ],
            ).det()

        f0 = det4(zero)
        slope = det4(one) - f0
        if kind.is_zero(slope):
            raise Underdetermined("4x4 minor does not see the next entry")
        x = (one - f0) / slope

    if next_black:
        return [x]
    return [a2 * x - one, x]


def find_nonzero_double_zigzag(grid: FriezeGrid) -> Optional[ZigZag]:
    """Search all zig-zag shapes and positions for one free of zeros.

    Returns the first all-nonzero double zig-zag in scan order, or None
    if every shape meets a zero somewhere (which happens for genuinely
    singular friezes).  Width 0 has no interior rows, hence None.
    """
    w, n = grid.width, grid.period
    if w == 0:
        return None
    k = grid.kind
    for s0 in range(2 * n):
        for deltas in product((-1, 0, 1), repeat=w - 1):
            shape = [s0]
            for d in deltas:
                shape.append(shape[-1] + d)
            entries = []
            for o, c in enumerate(shape):
                pair = []
                for x in (c, c + 1):
                    v = grid.cell(x, o)
                    if k.is_zero(v):
                        break
                    pair.append((GridIndex(x - o, x + o), v))
                if len(pair) < 2:
                    break
                entries.extend(pair)
            else:
                return ZigZag(w, tuple(entries))
    return None


def translate(grid: FriezeGrid, t: int) -> FriezeGrid:
    """Shift by t diagonal steps: new d[i, j] = old d[i - t, j - t]."""
    cells = {(x, o): grid.cell(x - 2 * t, o) for (x, o), _ in grid.cells()}
    return FriezeGrid.from_cells(grid.kind, grid.width, cells)


def mirror_grid(grid: FriezeGrid, axis: int = 0) -> FriezeGrid:
    """Reflect columns through x = axis; rows stay put."""
    cells = {(x, o): grid.cell(2 * axis - x, o) for (x, o), _ in grid.cells()}
    return FriezeGrid.from_cells(grid.kind, grid.width, cells)


def dihedral_images(grid: FriezeGrid) -> Iterator[FriezeGrid]:
    """All 2n translated and reflected copies of the grid."""
    for t in range(grid.period):
        yield translate(grid, t)
    flipped = mirror_grid(grid, 0)
    for t in range(grid.period):
        yield translate(flipped, t)


def black_block(grid: FriezeGrid, i: int, j: int):
    """4x4 matrix of black entries, rows i..i+3 against columns j-3..j."""
    from .linalg import Matrix

    return Matrix(
        grid.kind,
        [[grid.black(i + r, j - 3 + c) for c in range(4)] for r in range(4)],
    )
