"""Tame SL-frieze patterns of arbitrary order.

An order-k frieze is a single-valued array whose adjacent (k+1)x(k+1)
minors are all 1 and whose adjacent (k+2)x(k+2) minors all vanish.  The
order-3 case is exactly the black subarray of a symplectic 2-frieze, and
the two duality maps below (projective and Gale) act on the general case.
"""

from typing import Iterator, Optional, Tuple

from .scalars import RATIONAL, ScalarKind
from .linalg import Matrix, det
from .frieze import (
    FriezeError,
    FriezeGrid,
    MinorWindow,
    NotSuperperiodic,
    TameResult,
)

__all__ = [
    "MinorCondition",
    "WidthParity",
    "SLFrieze",
    "from_equation",
    "coeffs_of",
    "dual_equation_coeffs",
    "entry_det_band",
    "entry_det_complement",
    "black_of",
    "symplectic_of",
    "projective_dual",
    "gale_dual",
    "sl_translate",
    "check_middle_symmetry",
    "check_unimodular",
]


class MinorCondition(FriezeError):
    """An adjacent minor failed the condition required of the array."""

    def __init__(self, window: MinorWindow):
        self.window = window
        super().__init__(
            f"{window.size}x{window.size} minor at ({window.i}, {window.j}) "
            f"is {window.value}, expected {window.expected}"
        )


class WidthParity(FriezeError):
    """The width has the wrong parity for the requested check."""


class SLFrieze:
    """One superperiodic SL-frieze over a fundamental domain.

    `order` is k for an SL_{k+1}-frieze: diagonals satisfy a linear
    recurrence of length k+2 whose solutions repeat with period n and a
    sign of (-1)^k, where n = width + order + 2.  Entries are stored for
    first index in [0, n) and offsets j - i in [-1, width]; everything
    else is a guard zero or a signed translate.
    """

    __slots__ = ("kind", "order", "width", "period", "_cells")

    def __init__(self, kind: ScalarKind, order: int, width: int, cells: dict):
        if order < 1:
            raise ValueError(f"order must be at least 1, got {order}")
        if width < 0:
            raise ValueError(f"width must be nonnegative, got {width}")
        self.kind = kind
        self.order = order
        self.width = width
        self.period = width + order + 2
        n = self.period
        store = {}
        for (i, o), v in dict(cells).items():
            if not -1 <= o <= width:
                raise ValueError(f"row offset {o} outside [-1, {width}]")
            store[(i % n, o)] = kind.coerce(v)
        for o in range(-1, width + 1):
            for i in range(n):
                if (i, o) not in store:
                    raise ValueError(f"cell ({i}, offset {o}) missing")
        self._cells = store

    def get(self, i: int, j: int):
        """Entry d_{i,j}, reduced into the stored band with its sign."""
        n = self.period
        o = j - i
        steps = (o + self.order + 1) // n
        op = o - steps * n
        if op <= -2:
            return self.kind.zero()
        v = self._cells[(i % n, op)]
        if self.order % 2 and steps % 2:
            return -v
        return v

    def row_cycle(self, o: int, start: int = 0) -> Tuple:
        """One period of the row at offset o, by first index."""
        return tuple(self.get(i, i + o) for i in range(start, start + self.period))

    def cells(self) -> Iterator[Tuple[Tuple[int, int], object]]:
        """All cells of the fundamental domain, row by row."""
        for o in range(-1, self.width + 1):
            for i in range(self.period):
                yield (i, o), self.get(i, i + o)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SLFrieze):
            return NotImplemented
        if (
            self.kind.name != other.kind.name
            or self.order != other.order
            or self.width != other.width
        ):
            return False
        return all(
            self.kind.eq(v, other.get(i, i + o)) for (i, o), v in self.cells()
        )

    __hash__ = None

    def __repr__(self) -> str:
        return (
            f"SLFrieze(order={self.order}, width={self.width}, "
            f"period={self.period}, scalar={self.kind.name})"
        )


def _coeff_table(coeffs, kind: ScalarKind) -> Tuple[Tuple, ...]:
    """Coerce a sequence of coefficient cycles into a rectangular table."""
    table = tuple(tuple(kind.coerce(v) for v in row) for row in coeffs)
    if not table:
        raise ValueError("need at least one coefficient cycle")
    n = len(table[0])
    if any(len(row) != n for row in table):
        raise ValueError("coefficient cycles must share one period")
    if n < len(table) + 2:
        raise ValueError(
            f"period {n} too short for {len(table)} coefficient cycles"
        )
    return table


def from_equation(
    coeffs,
    order: Optional[int] = None,
    width: Optional[int] = None,
    kind: ScalarKind = RATIONAL,
) -> SLFrieze:
    """Propagate an SL-frieze from the coefficient cycles of its recurrence.

    `coeffs[s-1]` holds the weight of the s-th back term; signs alternate
    starting positive, and the trailing term of the recurrence carries
    (-1)^order.  Each diagonal starts from a window of zeros capped by a
    single 1 and must close up the same way, else NotSuperperiodic.
    """
    table = _coeff_table(coeffs, kind)
    k = len(table)
    n = len(table[0])
    w = n - k - 2
    if order is not None and order != k:
        raise ValueError(f"order {order} does not match {k} coefficient cycles")
    if width is not None and width != w:
        raise ValueError(f"width {width} does not match period {n} and order {k}")
    zero, one = kind.zero(), kind.one()
    tail_sign = -1 if k % 2 else 1
    cells = {}
    for i in range(n):
        window = [zero] * k + [one]
        cells[(i, -1)] = one
        for step in range(w + k + 1):
            j = i + step
            acc = window[-1] * table[0][j % n]
            for s in range(2, k + 1):
                term = window[-s] * table[s - 1][j % n]
                acc = acc + term if s % 2 else acc - term
            acc = acc + window[0] if tail_sign > 0 else acc - window[0]
            window = window[1:] + [acc]
            if step < w:
                cells[(i, step)] = acc
            elif step == w:
                if not kind.eq(acc, one):
                    raise NotSuperperiodic(i)
                cells[(i, w)] = acc
            elif not kind.is_zero(acc):
                raise NotSuperperiodic(i)
    return SLFrieze(kind, k, w, cells)


def coeffs_of(f: SLFrieze) -> Tuple[Tuple, ...]:
    """Recover the recurrence coefficient cycles from the frieze entries.

    The s-th cycle is read off as a (k+1-s)x(k+1-s) determinant in the
    entries next to the upper boundary; the 1x1 case is the top cycle
    itself.
    """
    k, w, n = f.order, f.width, f.period
    kind = f.kind
    zero, one = kind.zero(), kind.one()
    table = [[zero] * n for _ in range(k)]
    for i in range(n):
        for size in range(1, k + 1):
            # size = j+1 recovers superscript k-j at subscript i-1
            m = [[zero] * size for _ in range(size)]
            for r in range(size):
                for c in range(size):
                    if c <= r:
                        m[r][c] = f.get(i + 1 + r, i + w + c)
                    elif c == r + 1:
                        m[r][c] = one
            value = det(Matrix(kind, m))
            table[k - size][(i - 1) % n] = value
    return tuple(tuple(row) for row in table)


def dual_equation_coeffs(coeffs, kind: ScalarKind = RATIONAL) -> Tuple[Tuple, ...]:
    """Coefficient cycles of the recurrence satisfied by the projective dual.

    The dual swaps the coefficient order end for end and shifts each
    cycle: the s-th dual cycle at index i is the (k+1-s)-th original
    cycle at index i+k-s.
    """
    table = _coeff_table(coeffs, kind)
    k = len(table)
    n = len(table[0])
    return tuple(
        tuple(table[k - s][(i + k - s) % n] for i in range(n))
        for s in range(1, k + 1)
    )


def entry_det_band(coeffs, i: int, j: int, kind: ScalarKind = RATIONAL):
    """Entry d_{i,j} as a (j-i+1)-sized determinant in the coefficients.

    Column c carries the coefficient cycles downward from a 1 on the
    superdiagonal; entries this far from the upper boundary need a
    determinant that grows with the offset.
    """
    table = _coeff_table(coeffs, kind)
    k = len(table)
    n = len(table[0])
    t = j - i
    if t < 0:
        raise ValueError(f"offset {t} below the band")
    size = t + 1
    zero, one = kind.zero(), kind.one()
    rows = [[zero] * size for _ in range(size)]
    for r in range(size):
        for c in range(size):
            if c == r + 1:
                rows[r][c] = one
            elif 0 <= r - c <= k - 1:
                rows[r][c] = table[r - c][(i + r) % n]
            elif r - c == k:
                rows[r][c] = one
    return det(Matrix(kind, rows))


def entry_det_complement(coeffs, i: int, j: int, kind: ScalarKind = RATIONAL):
    """Entry d_{i,j} as a (width - (j-i))-sized coefficient determinant.

    Complementary to entry_det_band: cheap near the lower boundary where
    the band form is large.  Row r carries one subscript with the cycle
    superscripts decreasing rightward, flanked by 1s.
    """
    table = _coeff_table(coeffs, kind)
    k = len(table)
    n = len(table[0])
    w = n - k - 2
    t = j - i
    if not -1 <= t <= w:
        raise ValueError(f"offset {t} outside [-1, {w}]")
    size = w - t
    zero, one = kind.zero(), kind.one()
    rows = [[zero] * size for _ in range(size)]
    for r in range(size):
        base = (i - w + t - 1 + r) % n
        for c in range(size):
            s = c - r
            if s == -1 or s == k:
                rows[r][c] = one
            elif 0 <= s <= k - 1:
                rows[r][c] = table[k - 1 - s][base]
    return det(Matrix(kind, rows))


def black_of(g: FriezeGrid) -> SLFrieze:
    """The order-3 frieze formed by the integer-indexed entries of g."""
    n = g.period
    cells = {
        (i, o): g.black(i, i + o)
        for i in range(n)
        for o in range(-1, g.width + 1)
    }
    return SLFrieze(g.kind, 3, g.width, cells)


def symplectic_of(f: SLFrieze) -> FriezeGrid:
    """Rebuild the symplectic 2-frieze whose black part is f.

    Requires order 3 and checks that every adjacent 3x3 minor equals its
    central entry (MinorCondition otherwise); the half-integer entries
    are then the adjacent 2x2 minors.
    """
    if f.order != 3:
        raise FriezeError(f"symplectic conversion needs order 3, got {f.order}")
    kind = f.kind
    n = f.period
    for i in range(n):
        for t in range(n):
            j = i + t - 5
            m = Matrix(kind, [[f.get(i + r, j + c) for c in range(3)] for r in range(3)])
            value = det(m)
            center = f.get(i + 1, j + 1)
            if not kind.eq(value, center):
                raise MinorCondition(MinorWindow(3, i, j, value, center))
    cells = {}
    for x in range(2 * n):
        for o in range(f.width):
            if (x - o) % 2 == 0:
                i, j = (x - o) // 2, (x + o) // 2
                cells[(x, o)] = f.get(i, j)
            else:
                i, j = (x - o - 1) // 2, (x + o - 1) // 2
                cells[(x, o)] = f.get(i, j) * f.get(i + 1, j + 1) - f.get(
                    i + 1, j
                ) * f.get(i, j + 1)
    return FriezeGrid.from_cells(kind, f.width, cells)


def projective_dual(f: SLFrieze) -> SLFrieze:
    """The frieze of adjacent order-sized minors of f.

    The dual entry at (i, j) is the k x k determinant anchored there.
    Composing the map with itself translates the array by one less than
    the order; order 1 gives it back on the nose.
    """
    k = f.order
    kind = f.kind
    cells = {}
    for i in range(f.period):
        for o in range(-1, f.width + 1):
            j = i + o
            m = Matrix(
                kind, [[f.get(i + r, j + c) for c in range(k)] for r in range(k)]
            )
            cells[(i, o)] = det(m)
    return SLFrieze(kind, k, f.width, cells)


def gale_dual(f: SLFrieze) -> SLFrieze:
    """The width/order-swapped frieze built from f's recurrence coefficients.

    Row o of the output holds the (o+1)-th coefficient cycle, staggered
    so that each diagonal reads the cycles in increasing order; the
    result is an order-width frieze of width equal to f's order, with
    the same period.
    """
    if f.width < 1:
        raise ValueError("gale dual needs width at least 1")
    table = coeffs_of(f)
    k, n = f.order, f.period
    one = f.kind.one()
    cells = {}
    for i in range(n):
        cells[(i, -1)] = one
        cells[(i, k)] = one
        for o in range(k):
            cells[(i, o)] = table[o][(i + o) % n]
    return SLFrieze(f.kind, f.width, k, cells)


def sl_translate(f: SLFrieze, t: int) -> SLFrieze:
    """Copy of f slid t steps along its rows."""
    cells = {
        (i, o): f.get(i - t, i - t + o)
        for i in range(f.period)
        for o in range(-1, f.width + 1)
    }
    return SLFrieze(f.kind, f.order, f.width, cells)


def check_middle_symmetry(f: SLFrieze) -> bool:
    """Whether f is symmetric about its middle row.

    Only friezes of odd width have one; even width raises WidthParity.
    The reflection pairs the row at offset o with the row at w-1-o,
    aligned by the transposition (i, j) -> (j-h, i+h) for h = (w-1)/2.
    """
    if f.width % 2 == 0:
        raise WidthParity(f"width {f.width} has no middle row")
    h = (f.width - 1) // 2
    kind = f.kind
    return all(
        kind.eq(v, f.get(i + o - h, i + h)) for (i, o), v in f.cells()
    )


def check_unimodular(f: SLFrieze) -> TameResult:
    """Verify the determinant conditions defining an order-k frieze.

    Every adjacent (k+1)x(k+1) minor must be 1 and every (k+2)x(k+2)
    minor must vanish, windows across the guard seams included.
    """
    k, n = f.order, f.period
    kind = f.kind
    one, zero = kind.one(), kind.zero()
    for size, expected in ((k + 1, one), (k + 2, zero)):
        for i in range(n):
            for t in range(n):
                j = i + t - size - 1
                m = Matrix(
                    kind,
                    [[f.get(i + r, j + c) for c in range(size)] for r in range(size)],
                )
                value = det(m)
                if not kind.eq(value, expected):
                    return TameResult(False, MinorWindow(size, i, j, value, expected))
    return TameResult(True, None)
