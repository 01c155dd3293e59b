"""Symmetric difference equations of order four.

The recurrence V[i] = a[i] V[i-1] - b[i] V[i-2] + a[i-1] V[i-3] - V[i-4]
with n-periodic coefficients.  An equation is superperiodic when every
solution is n-antiperiodic, V[i+n] = -V[i]; those are exactly the
equations whose solution diagonals weave a frieze grid of width n - 5.
"""

from dataclasses import dataclass, field
from typing import Sequence, Tuple

from .linalg import Matrix, mat_mul
from .scalars import RATIONAL, ScalarKind


class ZeroParameter(ValueError):
    """A closed-form family was evaluated at an excluded parameter."""


@dataclass(frozen=True)
class SymmetricDiffEq:
    """One period of coefficients; access is n-periodic via a_at/b_at."""

    a: Tuple
    b: Tuple
    kind: ScalarKind = field(default=RATIONAL)

    def __post_init__(self):
        if len(self.a) != len(self.b):
            raise ValueError("coefficient lists must share one period")
        if len(self.a) < 5:
            raise ValueError("period must be at least 5")
        object.__setattr__(self, "a", tuple(self.kind.coerce(v) for v in self.a))
        object.__setattr__(self, "b", tuple(self.kind.coerce(v) for v in self.b))

    @property
    def n(self) -> int:
        return len(self.a)

    def a_at(self, i: int):
        return self.a[i % self.n]

    def b_at(self, i: int):
        return self.b[i % self.n]


def solve(eq: SymmetricDiffEq, init: Sequence, first: int, count: int) -> Tuple:
    """Run the recurrence; `init` holds V[first-4] .. V[first-1].

    Returns (V[first], ..., V[first+count-1]).  Linear in `init`.
    """
    if len(init) != 4:
        raise ValueError("exactly four initial values are required")
    window = [eq.kind.coerce(v) for v in init]
    out = []
    for j in range(first, first + count):
        v = (
            eq.a_at(j) * window[3]
            - eq.b_at(j) * window[2]
            + eq.a_at(j - 1) * window[1]
            - window[0]
        )
        out.append(v)
        window = window[1:] + [v]
    return tuple(out)


def is_superperiodic(eq: SymmetricDiffEq) -> bool:
    """True iff every solution satisfies V[i+n] = -V[i].

    By linearity it is enough to run the four standard basis initial
    conditions across one period and compare the final window.
    """
    k = eq.kind
    zero, one = k.zero(), k.one()
    for pos in range(4):
        init = [one if t == pos else zero for t in range(4)]
        seq = solve(eq, init, 0, eq.n)
        tail = (list(init) + list(seq))[-4:]
        if not all(k.eq(tail[t], -init[t]) for t in range(4)):
            return False
    return True


def companion(eq: SymmetricDiffEq, j: int) -> Matrix:
    """Transfer matrix E_j pushing a solution window one step right.

    A row vector (V[j-4], V[j-3], V[j-2], V[j-1]) times E_j yields
    (V[j-3], V[j-2], V[j-1], V[j]), so the last column carries the
    recurrence coefficients (-1, a[j-1], -b[j], a[j]) and the rest is a
    shift.  Determinant one.
    """
    k = eq.kind
    z, o = k.zero(), k.one()
    return Matrix(
        k,
        [
            [z, z, z, -o],
            [o, z, z, eq.a_at(j - 1)],
            [z, o, z, -eq.b_at(j)],
            [z, z, o, eq.a_at(j)],
        ],
    )


def monodromy(eq: SymmetricDiffEq) -> Matrix:
    """Ordered product E_1 E_2 ... E_n.

    Equals minus the identity exactly when the equation is
    superperiodic.
    """
    m = companion(eq, 1)
    for j in range(2, eq.n + 1):
        m = mat_mul(m, companion(eq, j))
    return m


def band_determinant(eq: SymmetricDiffEq, i: int, j: int):
    """Pentadiagonal band determinant of order j - i + 1.

    Row r carries 1 below the diagonal, then a[i+r], b[i+r+1],
    a[i+r+1], 1.  For a superperiodic equation of width w = n - 5 this
    is the black frieze entry d[i, j] whenever 0 <= j - i < w, it is 1
    at j - i = w, and it vanishes for the next three offsets.
    """
    k = eq.kind
    m = j - i + 1
    if m < 0:
        raise ValueError("band must have nonnegative order")
    if m == 0:
        return k.one()
    zero = k.zero()
    rows = []
    for r in range(m):
        row = [zero] * m
        if r > 0:
            row[r - 1] = k.one()
        row[r] = eq.a_at(i + r)
        if r + 1 < m:
            row[r + 1] = eq.b_at(i + r + 1)
        if r + 2 < m:
            row[r + 2] = eq.a_at(i + r + 1)
        if r + 3 < m:
            row[r + 3] = k.one()
        rows.append(row)
    return Matrix(k, rows).det()


delta = band_determinant


def white_band_determinant(eq: SymmetricDiffEq, i: int, j: int):
    """Symmetric band determinant of order j - i + 1 for white entries.

    Diagonal b[i], ..., b[j]; first off-diagonals a; second constant 1.
    Evaluates to the white frieze entry d[i-1/2, j-1/2] for interior
    offsets and to 1 on the boundary row.
    """
    k = eq.kind
    m = j - i + 1
    if m < 1:
        raise ValueError("band must have positive order")
    zero, one = k.zero(), k.one()
    rows = []
    for r in range(m):
        row = [zero] * m
        row[r] = eq.b_at(i + r)
        for c in (r - 1, r + 1):
            if 0 <= c < m:
                row[c] = eq.a_at(i + min(r, c))
        for c in (r - 2, r + 2):
            if 0 <= c < m:
                row[c] = one
        rows.append(row)
    return Matrix(k, rows).det()


def variety_residuals(a: Sequence, b: Sequence, kind: ScalarKind = RATIONAL) -> Tuple:
    """The ten closure expressions that cut out superperiodicity.

    All ten vanish exactly when the coefficients are superperiodic:
    the band determinant of full interior order must equal a[n] (= a[0]
    by periodicity), the two next bands must equal one, and the
    remaining seven must vanish.
    """
    eq = SymmetricDiffEq(tuple(a), tuple(b), kind)
    n = eq.n
    if n < 6:
        raise ValueError("the system needs period at least 6")
    one = kind.one()
    out = [band_determinant(eq, 3, n - 3) - eq.a_at(n)]
    for t in range(2):
        out.append(band_determinant(eq, 2 + t, n - 3 + t) - one)
    for t in range(3):
        out.append(band_determinant(eq, 1 + t, n - 3 + t))
    for t in range(4):
        out.append(band_determinant(eq, t, n - 3 + t))
    return tuple(out)


def width1_family(a, b, kind: ScalarKind = RATIONAL) -> SymmetricDiffEq:
    """Closed-form superperiodic coefficients of width 1 (period 6).

    Two free parameters a, b, both nonzero, determine the whole
    3-periodic-doubled coefficient table; every member is
    superperiodic by construction.
    """
    av, bv = kind.coerce(a), kind.coerce(b)
    if kind.is_zero(av) or kind.is_zero(bv):
        raise ZeroParameter("the family is defined for nonzero a, b")
    one = kind.one()
    a2 = (one + bv + av * av) / (av * bv)
    a3 = (one + bv) / av
    b2 = (one + av * av) / bv
    b3 = ((one + bv) * (one + bv) + av * av) / (av * av * bv)
    return SymmetricDiffEq((av, a2, a3, av, a2, a3), (bv, b2, b3, bv, b2, b3), kind)
