"""Polygon lifts of friezes and the symplectic pairings between them.

A width-w frieze of period n encodes an n-periodic sequence of vectors
in 4-space, antiperiodic across one period, normalized against a skew
form whose parameter is read off the frieze itself.  Entries of the
frieze are recovered as pairings (or 4x4 determinants) of vertices, and
4x4 windows of the frieze intertwine the two form variants.
"""

import cmath
from dataclasses import dataclass
from typing import Sequence, Tuple

from .scalars import COMPLEX, RATIONAL, ScalarKind
from .linalg import Matrix, SingularMatrix, det, solve_linear
from .frieze import FriezeError, FriezeGrid, black_block

__all__ = [
    "NormalizationViolated",
    "EvenPeriod",
    "DegenerateGamma",
    "SingularFrame",
    "SymplecticForm",
    "omega_form",
    "omega_dual_form",
    "omega",
    "Polygon",
    "polygon_from_frieze",
    "frieze_from_polygon",
    "frieze_entries_by_4x4",
    "block_symplectic_check",
    "normalize_lift",
    "coeffs_from_polygon",
]


class NormalizationViolated(FriezeError):
    """Consecutive vertices fail the required orthogonality."""

    def __init__(self, index: int):
        self.index = index
        super().__init__(f"vertices {index} and {index + 1} are not paired to zero")


class EvenPeriod(FriezeError):
    """Normalization is only determined for an odd number of vertices."""


class DegenerateGamma(FriezeError):
    """A second-neighbor pairing vanished, so no rescaling exists."""

    def __init__(self, index: int):
        self.index = index
        super().__init__(f"second-neighbor pairing at {index} is too close to zero")


class SingularFrame(FriezeError):
    """Four consecutive vertices are linearly dependent."""

    def __init__(self, index: int):
        self.index = index
        super().__init__(f"frame ending at vertex {index} is singular")


@dataclass(frozen=True)
class SymplecticForm:
    """A skew pairing on 4-space with one scalar parameter.

    variant "standard" and variant "dual" are negative inverses of one
    another; both have determinant 1.
    """

    a: object
    variant: str = "standard"
    kind: ScalarKind = RATIONAL

    def __post_init__(self):
        if self.variant not in ("standard", "dual"):
            raise ValueError(f"unknown form variant {self.variant!r}")
        object.__setattr__(self, "a", self.kind.coerce(self.a))

    def matrix(self) -> Matrix:
        zero, one = self.kind.zero(), self.kind.one()
        a = self.a
        if self.variant == "standard":
            rows = [
                [zero, zero, one, a],
                [zero, zero, zero, one],
                [-one, zero, zero, zero],
                [-a, -one, zero, zero],
            ]
        else:
            rows = [
                [zero, zero, one, zero],
                [zero, zero, -a, one],
                [-one, a, zero, zero],
                [zero, -one, zero, zero],
            ]
        return Matrix(self.kind, rows)


def omega_form(a, kind: ScalarKind = RATIONAL) -> SymplecticForm:
    """The standard-variant form with parameter a."""
    return SymplecticForm(a, "standard", kind)


def omega_dual_form(a, kind: ScalarKind = RATIONAL) -> SymplecticForm:
    """The dual-variant form with parameter a; equals -inverse of standard."""
    return SymplecticForm(a, "dual", kind)


def omega(form: SymplecticForm, u: Sequence, v: Sequence):
    """The pairing u^t F v."""
    if len(u) != 4 or len(v) != 4:
        raise ValueError("pairing needs 4-vectors")
    kind = form.kind
    m = form.matrix()
    uu = [kind.coerce(x) for x in u]
    vv = [kind.coerce(x) for x in v]
    acc = kind.zero()
    for r in range(4):
        for c in range(4):
            acc = acc + uu[r] * m[r, c] * vv[c]
    return acc


@dataclass(frozen=True)
class Polygon:
    """An antiperiodic vertex sequence in 4-space with its pairing form.

    `vertices` holds one period starting at absolute index `base`; the
    vertex at base + period is the negation of the one at base, and so
    on around.
    """

    period: int
    base: int
    vertices: Tuple[Tuple, ...]
    form: SymplecticForm

    def __post_init__(self):
        if self.period < 5:
            raise ValueError(f"period must be at least 5, got {self.period}")
        if len(self.vertices) != self.period:
            raise ValueError(
                f"need {self.period} vertices, got {len(self.vertices)}"
            )
        kind = self.form.kind
        coerced = tuple(
            tuple(kind.coerce(x) for x in v) for v in self.vertices
        )
        if any(len(v) != 4 for v in coerced):
            raise ValueError("vertices must be 4-vectors")
        object.__setattr__(self, "vertices", coerced)

    @property
    def width(self) -> int:
        return self.period - 5

    def vertex(self, j: int) -> Tuple:
        """Vertex at absolute index j, negated once per period step."""
        steps, r = divmod(j - self.base, self.period)
        v = self.vertices[r]
        if steps % 2:
            return tuple(-x for x in v)
        return v


def polygon_from_frieze(g: FriezeGrid, i0: int) -> Polygon:
    """Slice the 4-row window of integer entries starting at row i0.

    Vertex j is the column (d_{i0,j}, ..., d_{i0+3,j}) for j running
    from i0-1 over one period; the attached pairing is the dual-variant
    form with the frieze's own parameter at i0.
    """
    n = g.period
    vertices = tuple(
        tuple(g.black(i0 + r, j) for r in range(4))
        for j in range(i0 - 1, i0 - 1 + n)
    )
    form = omega_dual_form(g.black(i0, i0), g.kind)
    return Polygon(n, i0 - 1, vertices, form)


def frieze_from_polygon(p: Polygon) -> FriezeGrid:
    """Rebuild the frieze whose integer entries pair third neighbors.

    Black entries are d_{i,j} = omega(V_{i-3}, V_j); half-integer
    entries are the adjacent 2x2 minors of those.  The polygon must be
    normalized: consecutive pairings zero, second-neighbor pairings one.
    """
    kind = p.form.kind
    n = p.period
    for t in range(p.base, p.base + n):
        if not kind.is_zero(omega(p.form, p.vertex(t), p.vertex(t + 1))):
            raise NormalizationViolated(t)
        if not kind.eq(omega(p.form, p.vertex(t), p.vertex(t + 2)), kind.one()):
            raise NormalizationViolated(t)

    def blk(i, j):
        return omega(p.form, p.vertex(i - 3), p.vertex(j))

    w = p.width
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


def _column_matrix(kind: ScalarKind, cols: Sequence[Sequence]) -> Matrix:
    return Matrix(kind, [[col[r] for col in cols] for r in range(4)])


def frieze_entries_by_4x4(p: Polygon, i: int, j: int) -> Tuple:
    """Both entries at (i, j) as 4x4 vertex determinants.

    The integer entry uses three consecutive vertices against V_j; the
    half-integer entry replaces the third with V_{j-1}.
    """
    kind = p.form.kind
    black = det(
        _column_matrix(
            kind, [p.vertex(i - 4), p.vertex(i - 3), p.vertex(i - 2), p.vertex(j)]
        )
    )
    white = det(
        _column_matrix(
            kind, [p.vertex(i - 4), p.vertex(i - 3), p.vertex(j - 1), p.vertex(j)]
        )
    )
    return black, white


def block_symplectic_check(g: FriezeGrid) -> bool:
    """Whether every 4x4 window of g intertwines the two form variants.

    The window D anchored at (i, j) must satisfy
    D^t * dual(a_i) * D = standard(a_j), with the diagonal window at
    (i, i) equal to the standard form matrix itself.
    """
    n = g.period
    kind = g.kind
    a = [g.black(i, i) for i in range(n)]
    for i in range(n):
        if black_block(g, i, i) != omega_form(a[i], kind).matrix():
            return False
        dual_m = omega_dual_form(a[i], kind).matrix()
        for j in range(i, i + n + 1):
            d = black_block(g, i, j)
            if d.transpose() * dual_m * d != omega_form(a[j % n], kind).matrix():
                return False
    return True


def normalize_lift(
    raw: Sequence[Sequence],
    form: SymplecticForm,
    tolerance: float = 1e-9,
    base: int = 1,
) -> Polygon:
    """Rescale a vertex sequence so second-neighbor pairings are all one.

    Works over complex floats: the closing condition fixes the square of
    the leading scale, so a square root is unavoidable.  The period must
    be odd for the rescaling to be determined (up to one global sign,
    resolved by the principal square root); even periods raise
    EvenPeriod.  Vanishing second-neighbor pairings raise
    DegenerateGamma.
    """
    n = len(raw)
    if n % 2 == 0:
        raise EvenPeriod(f"period {n} is even")
    cform = SymplecticForm(complex(form.a), form.variant, COMPLEX)
    vs = [tuple(complex(x) for x in v) for v in raw]
    for t in range(n):
        u, v = vs[t], vs[(t + 1) % n]
        val = omega(cform, u, v)
        if t + 1 >= n:
            val = -val
        if abs(val) > tolerance:
            raise NormalizationViolated(t)
    gammas = []
    for t in range(n):
        val = omega(cform, vs[t], vs[(t + 2) % n])
        if t + 2 >= n:
            val = -val
        if abs(val) <= tolerance:
            raise DegenerateGamma(t)
        gammas.append(val)
    # walk t -> t+2 covers every index once; lam_t = A_t * lam_0^(e_t)
    coeff = {0: 1.0 + 0j}
    expo = {0: 1}
    t = 0
    for _ in range(n - 1):
        nxt = (t + 2) % n
        coeff[nxt] = 1.0 / (gammas[t] * coeff[t])
        expo[nxt] = -expo[t]
        t = nxt
    # closing equation: lam_t * lam_0 * gamma_t = 1 with expo[t] == 1
    closing = 1.0 / (gammas[t] * coeff[t])
    lam0 = cmath.sqrt(closing)
    lams = [coeff[s] * (lam0 if expo[s] > 0 else 1.0 / lam0) for s in range(n)]
    scaled = tuple(
        tuple(lams[s] * x for x in vs[s]) for s in range(n)
    )
    return Polygon(n, base, scaled, cform)


def coeffs_from_polygon(p: Polygon) -> Tuple[Tuple, Tuple]:
    """Read the frieze coefficient cycles off the vertex recurrence.

    Each vertex is a combination of the previous four; the first two
    combination weights are the coefficient cycles (the second one
    negated).  A dependent frame raises SingularFrame.
    """
    kind = p.form.kind
    n = p.period
    a, b = [], []
    for i in range(n):
        frame = _column_matrix(
            kind, [p.vertex(i - 1), p.vertex(i - 2), p.vertex(i - 3), p.vertex(i - 4)]
        )
        try:
            x = solve_linear(frame, list(p.vertex(i)))
        except SingularMatrix:
            raise SingularFrame(i) from None
        a.append(x[0])
        b.append(-x[1])
    return tuple(a), tuple(b)
